"""Abelian-function values attached to a divisor, and their u-derivatives.

The second- and third-order logarithmic-derivative values at the class of a
degree-2 divisor with support (s1, mu1), (s2, mu2) are rational in the
support:

    p11 = s1 + s2                 p111 = 2 (mu1 - mu2) / (s1 - s2)
    p13 = -s1 s2                  p113 = 2 (s1 mu2 - s2 mu1) / (s1 - s2)
    p33 = (F - 2 mu1 mu2)/(s1-s2)^2
    p133 = -2 (s1^2 mu2 - s2^2 mu1)/(s1 - s2)
    p333 = 2 (psi(s1,s2) mu2 - psi(s2,s1) mu1)/(s1 - s2)^3

where F is the symmetric polynomial below.  The printed source form of F
omits its top-degree term s1^2 s2^2 (s1 + s2); the term is forced by the
derivative identities (p331 = d p33/du1, p333 = d p33/du3) and by the
rational limit, and the omission is recorded in the typo ledger.

Directional derivatives along u1, u3 are exact chain-rule evaluations with
dual numbers over the direction field

    ds1/du1 =  2 mu1/(s1-s2)      ds1/du3 = -2 s2 mu1/(s1-s2)
    ds2/du1 = -2 mu2/(s1-s2)      ds2/du3 =  2 s1 mu2/(s1-s2)

(the factor-2 normalization du1 = s ds/(2 mu), du3 = ds/(2 mu) is the one
consistent with the third-order values above; the typo ledger records the
factor).  Fourth-order values needed by the addition formulas are dual
derivatives of the third-order closed forms -- no finite differences.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BranchPoint, CoincidentSupport, OffCurve, PointAtInfinity
from ..scalars import DEFAULT_TOL, Tolerance, scalar_close
from .curve import CurveG2
from .divisor import MumfordDivisor, divisor_from_points, support_points


def F_sym(s1, s2, curve: CurveG2):
    """Symmetric pairing polynomial, including the monic top term."""
    return (
        2 * curve.l10
        + curve.l8 * (s1 + s2)
        + s1 * s2 * (2 * curve.l6 + curve.l4 * (s1 + s2))
        + s1 * s1 * s2 * s2 * (s1 + s2)
    )


def F_sym_printed(s1, s2, curve: CurveG2):
    """Source text form of F (top term missing); typo-ledger diagnostic."""
    return 2 * curve.l10 + curve.l8 * (s1 + s2) + s1 * s2 * (2 * curve.l6 + curve.l4 * (s1 + s2))


def psi_asym(s1, s2, curve: CurveG2):
    """Asymmetric companion polynomial entering the third-order value p333."""
    return (
        4 * curve.l10
        + curve.l8 * (3 * s1 + s2)
        + 2 * curve.l6 * s1 * (s1 + s2)
        + curve.l4 * s1 * s1 * (s1 + 3 * s2)
        + s1 ** 3 * s2 * (3 * s1 + s2)
    )


def wp11(s1, m1, s2, m2, curve):
    return s1 + s2


def wp13(s1, m1, s2, m2, curve):
    return -(s1 * s2)


def wp33(s1, m1, s2, m2, curve):
    return (F_sym(s1, s2, curve) - 2 * m1 * m2) / ((s1 - s2) * (s1 - s2))


def wp111(s1, m1, s2, m2, curve):
    return 2 * (m1 - m2) / (s1 - s2)


def wp113(s1, m1, s2, m2, curve):
    return 2 * (s1 * m2 - s2 * m1) / (s1 - s2)


def wp133(s1, m1, s2, m2, curve):
    return -2 * (s1 * s1 * m2 - s2 * s2 * m1) / (s1 - s2)


def wp333(s1, m1, s2, m2, curve):
    d = s1 - s2
    return 2 * (psi_asym(s1, s2, curve) * m2 - psi_asym(s2, s1, curve) * m1) / (d * d * d)


#: third-order component functions of the derivative vector X_k, k in {1, 3}
THIRD_ORDER = {1: (wp133, wp113, wp111), 3: (wp333, wp133, wp113)}


@dataclass(frozen=True)
class WpJet:
    """Second- and third-order values at a divisor class."""

    p11: complex
    p13: complex
    p33: complex
    p111: complex
    p113: complex
    p133: complex
    p333: complex


def _support(D: MumfordDivisor, curve: CurveG2, tol: Tolerance) -> tuple:
    if D.degree < 2:
        raise PointAtInfinity("jet needs a degree-2 divisor")
    (s1, m1), (s2, m2) = support_points(D, curve)
    scale = max(abs(s1), abs(s2), 1.0)
    if abs(s1 - s2) <= max(tol.abs, 1e-9) * scale:
        raise CoincidentSupport("support points collide")
    return (s1, m1), (s2, m2)


def wp_from_divisor(D: MumfordDivisor, curve: CurveG2, tol: Tolerance = DEFAULT_TOL) -> WpJet:
    (s1, m1), (s2, m2) = _support(D, curve, tol)
    a = (s1, m1, s2, m2, curve)
    return WpJet(
        p11=wp11(*a),
        p13=wp13(*a),
        p33=wp33(*a),
        p111=wp111(*a),
        p113=wp113(*a),
        p133=wp133(*a),
        p333=wp333(*a),
    )


class Dual:
    """Forward-mode dual number a + eps*b over complex scalars."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0j):
        self.a = complex(a)
        self.b = complex(b)

    @staticmethod
    def lift(x) -> "Dual":
        return x if isinstance(x, Dual) else Dual(x)

    def __add__(self, o):
        o = Dual.lift(o)
        return Dual(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = Dual.lift(o)
        return Dual(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        o = Dual.lift(o)
        return Dual(o.a - self.a, o.b - self.b)

    def __mul__(self, o):
        o = Dual.lift(o)
        return Dual(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = Dual.lift(o)
        return Dual(self.a / o.a, (self.b * o.a - self.a * o.b) / (o.a * o.a))

    def __rtruediv__(self, o):
        return Dual.lift(o).__truediv__(self)

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __pow__(self, n: int):
        out = Dual(1)
        base = self
        k = n
        while k > 0:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def direction_field(D: MumfordDivisor, curve: CurveG2, k: int, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """(s1', mu1', s2', mu2') along u_k at the divisor, k in {1, 3}."""
    (s1, m1), (s2, m2) = _support(D, curve, tol)
    if abs(m1) <= tol.abs or abs(m2) <= tol.abs:
        raise BranchPoint("support touches the branch locus")
    den = s1 - s2
    if k == 1:
        ds1, ds2 = 2 * m1 / den, -2 * m2 / den
    elif k == 3:
        ds1, ds2 = -2 * s2 * m1 / den, 2 * s1 * m2 / den
    else:
        raise ValueError("direction index must be 1 or 3")
    dm1 = curve.fprime(s1) / (2 * m1) * ds1
    dm2 = curve.fprime(s2) / (2 * m2) * ds2
    return (s1, ds1, m1, dm1, s2, ds2, m2, dm2)


def du_derivative(g, D: MumfordDivisor, k: int, curve: CurveG2, tol: Tolerance = DEFAULT_TOL):
    """Exact chain-rule derivative of g(s1, m1, s2, m2, curve) along u_k."""
    s1, ds1, m1, dm1, s2, ds2, m2, dm2 = direction_field(D, curve, k, tol)
    value = g(Dual(s1, ds1), Dual(m1, dm1), Dual(s2, ds2), Dual(m2, dm2), curve)
    return value.b


def jacobi_invert(
    p11, p13, p111, p113, curve: CurveG2, tol: Tolerance = DEFAULT_TOL
) -> MumfordDivisor:
    """Divisor with support solving s^2 - p11 s - p13 = 0, 2 mu = p111 s + p113.

    The recovered points must satisfy the curve equation; inconsistent
    second/third-order inputs raise OffCurve.
    """
    import cmath

    disc = p11 * p11 + 4 * p13
    root = cmath.sqrt(complex(disc))
    s1 = (complex(p11) + root) / 2
    s2 = (complex(p11) - root) / 2
    scale = max(abs(s1), abs(s2), 1.0)
    if abs(s1 - s2) <= max(tol.abs, 1e-12) * scale:
        raise CoincidentSupport("inversion quadratic has a double root")
    m1 = (p111 * s1 + p113) / 2
    m2 = (p111 * s2 + p113) / 2
    for s, m in ((s1, m1), (s2, m2)):
        lhs, rhs = m * m, curve.f(s)
        if not scalar_close(lhs, rhs, Tolerance(max(tol.rel, 1e-7), max(tol.abs, 1e-7))):
            raise OffCurve(f"recovered point ({s!r}, {m!r}) violates the curve equation")
    return divisor_from_points((s1, m1), (s2, m2))
