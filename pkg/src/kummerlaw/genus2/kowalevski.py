"""Trajectories of the classical top's separation variables.

The separation variables (s1, s2) move along a straight line in the
abelian argument: u1 = c1 + i t with u3 constant.  Without period data the
constants are carried implicitly by a user-supplied initial divisor; the
trajectory through it is integrated with fixed-step RK4 over the direction
field d/du1 scaled by i.

Two residuals certify the trajectory against the defining quadratures,
accumulated from the *integrated* states by the trapezoid rule (the field
itself satisfies them identically, so evaluating the field would prove
nothing):

* holonomy: integral of ds1/(2 mu1) + ds2/(2 mu2) must vanish (u3 frozen),
* clock: integral of s1 ds1/(2 mu1) + s2 ds2/(2 mu2) must equal i * t.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TrajectorySingular
from .curve import CurveG2
from .divisor import MumfordDivisor, divisor_from_points, support_points


@dataclass(frozen=True)
class FlowResult:
    divisor: MumfordDivisor
    t: float
    steps: int
    holonomy_residual: float
    clock_residual: float
    curve_residual: float


def _field(state: tuple, curve: CurveG2) -> tuple:
    s1, m1, s2, m2 = state
    den = s1 - s2
    ds1 = 1j * 2 * m1 / den
    ds2 = -1j * 2 * m2 / den
    dm1 = curve.fprime(s1) / (2 * m1) * ds1
    dm2 = curve.fprime(s2) / (2 * m2) * ds2
    return (ds1, dm1, ds2, dm2)


def kowalevski_flow(
    initial: MumfordDivisor,
    curve: CurveG2,
    t_end: float,
    dt: float = 1e-3,
    min_separation: float = 1e-6,
    min_mu: float = 1e-6,
) -> FlowResult:
    """Integrate the trajectory through `initial` up to parameter t_end."""
    if initial.degree != 2:
        raise TrajectorySingular("flow needs a degree-2 divisor", 0.0)
    (s1, m1), (s2, m2) = support_points(initial, curve)
    if abs(m1) < min_mu or abs(m2) < min_mu:
        raise TrajectorySingular("initial support touches the branch locus", 0.0)
    state = (s1, m1, s2, m2)
    n_steps = max(1, round(abs(t_end) / dt))
    h = t_end / n_steps
    holo = 0j
    clock = 0j
    t = 0.0
    k1 = _field(state, curve)
    for _ in range(n_steps):
        s1, m1, s2, m2 = state
        if abs(s1 - s2) < min_separation:
            raise TrajectorySingular("support points collided", t)
        if abs(m1) < min_mu or abs(m2) < min_mu:
            raise TrajectorySingular("trajectory hit the branch locus", t)
        k2 = _field(tuple(x + h / 2 * d for x, d in zip(state, k1)), curve)
        k3 = _field(tuple(x + h / 2 * d for x, d in zip(state, k2)), curve)
        k4 = _field(tuple(x + h * d for x, d in zip(state, k3)), curve)
        new_state = tuple(
            x + h / 6 * (a + 2 * b + 2 * c + d)
            for x, a, b, c, d in zip(state, k1, k2, k3, k4)
        )
        k_next = _field(new_state, curve)
        # trapezoid accumulation of the defining one-forms over the two
        # half-steps, through the cubic-Hermite midpoint of the step
        midpoint = tuple(
            (x + y) / 2 + h * (dx - dy) / 8
            for x, y, dx, dy in zip(state, new_state, k1, k_next)
        )
        for left, right in ((state, midpoint), (midpoint, new_state)):
            a1, b1, a2, b2 = left
            c1, d1, c2, d2 = right
            holo += (c1 - a1) * (1 / (2 * b1) + 1 / (2 * d1)) / 2
            holo += (c2 - a2) * (1 / (2 * b2) + 1 / (2 * d2)) / 2
            clock += (c1 - a1) * (a1 / (2 * b1) + c1 / (2 * d1)) / 2
            clock += (c2 - a2) * (a2 / (2 * b2) + c2 / (2 * d2)) / 2
        state = new_state
        k1 = k_next
        t += h
    s1, m1, s2, m2 = state
    curve_res = max(abs(m1 * m1 - curve.f(s1)), abs(m2 * m2 - curve.f(s2)))
    return FlowResult(
        divisor=divisor_from_points((s1, m1), (s2, m2)),
        t=t,
        steps=n_steps,
        holonomy_residual=abs(holo),
        clock_residual=abs(clock - 1j * t_end),
        curve_residual=curve_res,
    )
