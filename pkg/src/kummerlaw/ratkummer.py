"""Rational-limit Kummer surface: quadric law, embedding, and product law.

Everything here is algebraic over the rationals.  The basic objects:

* the quadric Q : x1 x3 = x2^2 in C^3 with the coordinatewise two-valued
  law ``quadric_mul`` (three quadratics plus a selection constraint),
* the embedding ``embed_classes`` of sign classes of (u1, u3), whose image
  coordinates (written in "hat" order (h2, h4, h6)) satisfy a quartic,
* the product law ``rk_mul`` on embedded points, realized through three
  quadratics whose coefficients come from lifted preimages, with root
  pairing selected by quartic membership,
* the rational-limit inversion data ``kowalevski_rational``.

Two printed formulas are corrected here against in-construction oracles and
recorded in the typo ledger: the quartic's coefficients (the derived quartic
h4^2 + 4 h2 h6 - 2 h2^2 h4 + h2^4 vanishes identically on embedded points;
the printed one does not) and the sign of the cubic term in the inverse
change of variables (+2/9 is forced by the round trip).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .axioms import NValuedLaw
from .errors import (
    LiftFailed,
    PairingSelectionFailed,
    ThetaDivisor,
)
from .scalars import (
    MultiValue,
    Scalar,
    as_complex,
    is_exact,
    magnitude,
    scalar_close,
    solve_quadratic,
    Tolerance,
    DEFAULT_TOL,
)


@dataclass(frozen=True)
class UPoint:
    """Class coordinate (u1, u3) of C^2 up to simultaneous sign flip."""

    u1: Scalar
    u3: Scalar


# --- elementary group on the quadric x1 x3 = x2^2 -------------------------

def quadric_embed(u1: Scalar, u2: Scalar) -> tuple:
    """Sign class [(u1, u2), -(u1, u2)] as the quadric point (u1^2, u1 u2, u2^2)."""
    return (u1 * u1, u1 * u2, u2 * u2)


def on_quadric(x: tuple, tol: Tolerance = DEFAULT_TOL) -> bool:
    return scalar_close(x[0] * x[2], x[1] * x[1], tol)


def quadric_mul(x: tuple, y: tuple, tol: Tolerance = DEFAULT_TOL) -> MultiValue:
    """Two-valued product on the quadric via three coordinate quadratics.

    The first and last coordinates each satisfy Z^2 - 2(a+b)Z + (a-b)^2 = 0;
    the middle one satisfies Z^2 - 2(x2+y2)Z + (x1-y1)(x3-y3) = 0.  Among
    the four ways of pairing roots into two triples, the quadric constraint
    X1 X3 = X2^2 on both triples selects the product pair.
    """
    x1, x2, x3 = x
    y1, y2, y3 = y
    r1 = solve_quadratic(1, -2 * (x1 + y1), (x1 - y1) ** 2)
    r2 = solve_quadratic(1, -2 * (x2 + y2), (x1 - y1) * (x3 - y3))
    r3 = solve_quadratic(1, -2 * (x3 + y3), (x3 - y3) ** 2)
    return _pair_roots_by_constraint(
        r1, r2, r3, residual=lambda t: t[0] * t[2] - t[1] * t[1], tol=tol, degree=2
    )


def _pair_roots_by_constraint(r1, r2, r3, residual, tol: Tolerance, degree: int) -> MultiValue:
    """Select the split of root triples on which `residual` vanishes.

    `degree` is the residual polynomial's degree, used to scale the
    acceptance threshold.
    """
    scale = max([magnitude(v) for v in (*r1, *r2, *r3)] + [1.0])
    best = None
    best_res = None
    for j in (0, 1):
        for k in (0, 1):
            first = (r1[0], r2[j], r3[k])
            second = (r1[1], r2[1 - j], r3[1 - k])
            res = max(magnitude(residual(first)), magnitude(residual(second)))
            if best_res is None or res < best_res:
                best_res = res
                best = MultiValue((first, second))
    if is_exact(r1[0]) and best_res == 0:
        return best
    if best_res > max(tol.abs, 1e-7) * scale ** degree:
        raise PairingSelectionFailed(f"constraint residual {best_res} on every pairing")
    return best


# --- embedding of sign classes and the hat coordinates ---------------------

def sigma0(u: UPoint) -> Scalar:
    """Entire function u3 - u1^3/3 whose square is the first embedding slot."""
    return u.u3 - u.u1 ** 3 / _three(u.u1)


def _three(x: Scalar):
    # keep Fractions exact: dividing an int by int would build floats
    from fractions import Fraction

    return Fraction(3) if is_exact(x) else 3


def embed_classes(u: UPoint) -> tuple:
    """Image ((u3-u1^3/3)^2, 2 u1 u3 + u1^4/3, -u1^2) of the class of u."""
    s0 = sigma0(u)
    return (s0 * s0, 2 * u.u1 * u.u3 + u.u1 ** 4 / _three(u.u1), -u.u1 ** 2)


def embed_hat(u: UPoint) -> tuple:
    """Same image in hat order (h2, h4, h6) = (-u1^2, 2u1u3 + u1^4/3, sigma0^2)."""
    x1, x2, x3 = embed_classes(u)
    return (x3, x2, x1)


def hat_forward(X2: Scalar, X4: Scalar, X6: Scalar) -> tuple:
    """Change of variables from quadric coordinates to hat coordinates."""
    th = _three(X2)
    return (-X2, 2 * X4 + X2 * X2 / th, X6 - 2 * X2 * X4 / th + X2 ** 3 / (3 * th))


def hat_inverse(h2: Scalar, h4: Scalar, h6: Scalar) -> tuple:
    """Inverse change of variables; cubic-term sign +2/9 forced by the round trip."""
    th = _three(h2)
    X2 = -h2
    X4 = (h4 - h2 * h2 / th) / 2
    X6 = h6 - h2 * h4 / th + 2 * h2 ** 3 / (3 * th)
    return (X2, X4, X6)


def quartic_derived(h: tuple) -> Scalar:
    """Derived surface equation h4^2 + 4 h2 h6 - 2 h2^2 h4 + h2^4.

    Vanishes identically on embedded class points (substitute h2 = -a^2,
    h4 = 2ab + a^4/3, h6 = (b - a^3/3)^2).
    """
    h2, h4, h6 = h
    return h4 * h4 + 4 * h2 * h6 - 2 * h2 * h2 * h4 + h2 ** 4


def quartic_printed(h: tuple) -> Scalar:
    """Printed surface equation, kept as a diagnostic for the typo ledger."""
    h2, h4, h6 = h
    return -9 * h4 * h4 - 36 * h2 * h6 + 12 * h2 * h2 * h4 + 7 * h2 ** 4


# --- the product law on embedded points ------------------------------------

def lift_hat(h: tuple, tol: Tolerance = DEFAULT_TOL) -> UPoint:
    """A preimage (u1, u3) of a hat triple; LiftFailed if none exists.

    Either sign branch of u1 is acceptable: downstream products are
    branch-independent as multisets.
    """
    h2, h4, h6 = (as_complex(c) for c in h)
    scale = max(1.0, magnitude(h2), magnitude(h4), magnitude(h6))
    u1 = cmath.sqrt(-h2)
    if abs(u1) ** 2 <= tol.abs * scale:
        u1 = 0j
        u3 = cmath.sqrt(h6)
        if not scalar_close(h4, 0j, Tolerance(tol.rel, tol.abs * scale)):
            raise LiftFailed("vanishing u1 requires vanishing middle coordinate")
    else:
        u3 = (h4 - u1 ** 4 / 3) / (2 * u1)
    cand = UPoint(u1, u3)
    img = embed_hat(cand)
    err = max(magnitude(a - b) for a, b in zip(img, h))
    if err > 1e-6 * scale ** 2 + tol.abs:
        raise LiftFailed(f"residual {err} after lifting")
    return cand


def _rk_quadratics(u: UPoint, v: UPoint) -> tuple:
    """Coefficient triples of the three product quadratics, from preimages.

    The first quadratic needs only the hat coordinates; the other two use
    the symmetric/antisymmetric preimage combinations (middle) and the sum
    and product of the last coordinates of the two image triples (last).
    """
    a2 = -u.u1 ** 2
    b2 = -v.u1 ** 2
    q1 = (1, -2 * (a2 + b2), (a2 - b2) ** 2)

    plus = 2 * (u.u1 * u.u3 + v.u1 * v.u3) + (
        u.u1 ** 4 + 6 * u.u1 ** 2 * v.u1 ** 2 + v.u1 ** 4
    ) / _three(u.u1)
    minus = 2 * (v.u1 * u.u3 + u.u1 * v.u3) + 4 * u.u1 * v.u1 * (
        u.u1 ** 2 + v.u1 ** 2
    ) / _three(u.u1)
    q2 = (1, -2 * plus, plus * plus - minus * minus)

    sum_cls = UPoint(u.u1 + v.u1, u.u3 + v.u3)
    dif_cls = UPoint(u.u1 - v.u1, u.u3 - v.u3)
    h6_sum = sigma0(sum_cls) ** 2
    h6_dif = sigma0(dif_cls) ** 2
    q3 = (1, -(h6_sum + h6_dif), h6_sum * h6_dif)
    return q1, q2, q3


def rk_mul(xhat: tuple, yhat: tuple, tol: Tolerance = DEFAULT_TOL) -> MultiValue:
    """Two-valued product of embedded class points in hat coordinates.

    Solves the three product quadratics and assembles the two output
    triples by requiring both to lie on the derived quartic.
    """
    u = lift_hat(xhat, tol)
    v = lift_hat(yhat, tol)
    q1, q2, q3 = _rk_quadratics(u, v)
    r1 = solve_quadratic(*q1)
    r2 = solve_quadratic(*q2)
    r3 = solve_quadratic(*q3)
    return _pair_roots_by_constraint(r1, r2, r3, residual=quartic_derived, tol=tol, degree=4)


def rk_law(tol: Tolerance = DEFAULT_TOL) -> NValuedLaw:
    return NValuedLaw(
        name="rational-kummer",
        arity=2,
        product=lambda x, y: rk_mul(x, y, tol),
        unit=(0, 0, 0),
        inverse=lambda x: x,
    )


# --- limit abelian data -----------------------------------------------------

def wp0(u: UPoint) -> tuple:
    """Limit values (wp11, wp13, wp33) = ((2 u1 s0 + u1^4)/s0^2, -u1^2/s0^2, 1/s0^2)."""
    s0 = sigma0(u)
    if magnitude(s0) == 0.0:
        raise ThetaDivisor("sigma0 vanishes; limit functions undefined")
    s2 = s0 * s0
    return ((2 * u.u1 * s0 + u.u1 ** 4) / s2, -u.u1 ** 2 / s2, 1 / s2)


def kowalevski_rational(u: UPoint) -> tuple:
    """Scaled inversion data ((s1^, mu1^), (s2^, mu2^)) at the degenerate curve.

    s^ = sigma0^2 s solves s^2 - 2u1(u3 + u1^3/6) s^ + u1^2 sigma0^2 = 0 and
    mu^ = sigma0^5 mu is linear in s^; the outputs satisfy mu^2 = s^5.
    """
    s0 = sigma0(u)
    if magnitude(s0) == 0.0:
        raise ThetaDivisor("sigma0 vanishes; inversion data undefined")
    u1, u3 = as_complex(u.u1), as_complex(u.u3)
    s0c = as_complex(s0)
    rad = cmath.sqrt(u1 ** 3 * (u3 - u1 ** 3 / 12))
    sh1 = u1 * ((u3 + u1 ** 3 / 6) + rad)
    sh2 = u1 * ((u3 + u1 ** 3 / 6) - rad)
    coeff = u3 ** 2 + 7 * u1 ** 3 * u3 / 3 + u1 ** 6 / 9
    shift = u1 * (u3 + 2 * u1 ** 3 / 3) * s0c ** 2
    mh1 = coeff * sh1 - shift
    mh2 = coeff * sh2 - shift
    return ((sh1, mh1), (sh2, mh2))
