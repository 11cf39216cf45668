"""Two-valued coset law on CP^1 attached to an elliptic curve.

The curve is t^2 = 4 s^3 - g2 s - g3.  The law multiplies points of CP^1 in
the chart where (x1 : x2) has affine coordinate s = x2/x1 and the unit is
(0 : 1); the product of two points is the root pair of the binary quadratic

    z1 Z^2 - z2 Z + z3 = 0

with z1, z2, z3 the explicit biquadratic polynomials below.  Two
independent formulations cross-check it: the chord formula on curve points
(``coset_mul``) and the even/odd splitting (``w12``).
"""

from __future__ import annotations

from dataclasses import dataclass

from fractions import Fraction

from .axioms import NValuedLaw
from .errors import CoincidentPoints, OffCurve
from .scalars import (
    DEFAULT_TOL,
    MultiValue,
    ProjPoint,
    Scalar,
    Tolerance,
    is_exact,
    magnitude,
    proj_equal,
    scalar_close,
    solve_quadratic,
)


def _div(a: Scalar, n: int) -> Scalar:
    """Division by a small integer that keeps exact operands exact."""
    return Fraction(a, n) if is_exact(a) else a / n


@dataclass(frozen=True)
class CurveG1:
    """Parameters (g2, g3) of t^2 = 4 s^3 - g2 s - g3."""

    g2: Scalar
    g3: Scalar

    def rhs(self, s: Scalar) -> Scalar:
        return 4 * s ** 3 - self.g2 * s - self.g3

    def discriminant(self) -> Scalar:
        return self.g2 ** 3 - 27 * self.g3 ** 2


@dataclass(frozen=True)
class PointG1:
    """Affine curve point (s, t) with t^2 = 4 s^3 - g2 s - g3."""

    s: Scalar
    t: Scalar

    def validate(self, curve: CurveG1, tol: Tolerance = DEFAULT_TOL) -> "PointG1":
        if not scalar_close(self.t ** 2, curve.rhs(self.s), tol):
            raise OffCurve(f"point ({self.s!r}, {self.t!r}) not on curve")
        return self


UNIT_CP1 = ProjPoint((0, 1))


def cp1_mul(x: ProjPoint, y: ProjPoint, curve: CurveG1) -> ProjPoint:
    """Product point (z1 : z2 : z3) of CP^2 encoding the two-valued product."""
    x1, x2 = x.coords
    y1, y2 = y.coords
    g2, g3 = curve.g2, curve.g3
    z1 = (x1 * y2 - x2 * y1) ** 2
    z2 = 2 * ((x1 * y2 + x2 * y1) * (x2 * y2 - _div(g2 * x1 * y1, 4)) - _div(g3 * x1 ** 2 * y1 ** 2, 2))
    z3 = (x2 * y2 + _div(g2 * x1 * y1, 4)) ** 2 + g3 * x1 * y1 * (x1 * y2 + x2 * y1)
    return ProjPoint((z1, z2, z3))


def quadratic_point_pair(z1: Scalar, z2: Scalar, z3: Scalar, zero_tol: float = 1e-13) -> MultiValue:
    """Roots of z1 Z^2 - z2 Z + z3 as points of CP^1, infinity included.

    The point with affine coordinate s is (1 : s); a vanishing leading
    coefficient puts a root at the unit (0 : 1).
    """
    scale = max(magnitude(z1), magnitude(z2), magnitude(z3))
    if scale == 0.0:
        raise CoincidentPoints("zero product vector")
    if magnitude(z1) <= zero_tol * scale:
        if magnitude(z2) <= zero_tol * scale:
            return MultiValue((UNIT_CP1, UNIT_CP1))
        return MultiValue((UNIT_CP1, ProjPoint((1, z3 / z2))))
    roots = solve_quadratic(z1, -z2, z3)
    return MultiValue(tuple(ProjPoint((1, r)) for r in roots))


def product_points(x: ProjPoint, y: ProjPoint, curve: CurveG1) -> MultiValue:
    """Two-valued product of CP^1 points as a pair of CP^1 points."""
    z = cp1_mul(x, y, curve)
    return MultiValue(quadratic_point_pair(*z.coords))


def coset_mul(P: PointG1, Q: PointG1, curve: CurveG1, tol: Tolerance = DEFAULT_TOL) -> MultiValue:
    """Chord-formula product: both values -s1-s2+((t1 -+ t2)/(2(s1-s2)))^2."""
    if scalar_close(P.s, Q.s, tol):
        raise CoincidentPoints("chord formula needs s1 != s2")
    d = 2 * (P.s - Q.s)
    base = -P.s - Q.s
    return MultiValue((base + ((P.t - Q.t) / d) ** 2, base + ((P.t + Q.t) / d) ** 2))


def w12(P: PointG1, Q: PointG1, curve: CurveG1, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Even/odd split (w1, w2): the product values are {w1 - w2, w1 + w2}.

    Inputs are read as first/second coordinate data of two abelian
    arguments: s1, t1 carry the first one together with its second
    derivative 6 s1^2 - g2/2.
    """
    if scalar_close(P.s, Q.s, tol):
        raise CoincidentPoints("splitting needs s1 != s2")
    s1, t1 = P.s, P.t
    s2, t2 = Q.s, Q.t
    dd = 6 * s1 ** 2 - _div(curve.g2, 2)
    den = (s2 - s1) ** 2
    w1 = s1 + _div(dd * (s2 - s1) + t1 ** 2, 2) / den
    w2 = _div(t1 * t2, 2) / den
    return (w1, w2)


def ec_add(P: PointG1, Q: PointG1, curve: CurveG1, tol: Tolerance = DEFAULT_TOL) -> PointG1:
    """Chord-law sum of distinct-abscissa points; the sum lies on the curve.

    Oracle for the coset law: its s-coordinate is the first component of
    ``coset_mul``.  Doubling is out of scope; vertical chords are rejected.
    """
    if scalar_close(P.s, Q.s, tol):
        raise CoincidentPoints("chord addition needs s1 != s2")
    m = (P.t - Q.t) / (P.s - Q.s)
    s3 = -P.s - Q.s + m * m / 4
    t3 = -(P.t + m * (s3 - P.s))  # chord value at s3, reflected
    return PointG1(s3, t3)


def cp1_law(curve: CurveG1) -> NValuedLaw:
    return NValuedLaw(
        name=f"cp1[g2={curve.g2!r},g3={curve.g3!r}]",
        arity=2,
        product=lambda x, y: product_points(x, y, curve),
        unit=UNIT_CP1,
        inverse=lambda x: x,
        within=lambda a, b, tol: proj_equal(a, b, tol),
    )


def cp1_law_corrupted(curve: CurveG1) -> NValuedLaw:
    """Negative control: sign flip inside the middle product coordinate."""

    def bad_product(x, y):
        x1, x2 = x.coords
        y1, y2 = y.coords
        g2, g3 = curve.g2, curve.g3
        z1 = (x1 * y2 - x2 * y1) ** 2
        z2 = 2 * ((x1 * y2 + x2 * y1) * (x2 * y2 + g2 * x1 * y1 / 4) - g3 * x1 ** 2 * y1 ** 2 / 2)
        z3 = (x2 * y2 + g2 * x1 * y1 / 4) ** 2 + g3 * x1 * y1 * (x1 * y2 + x2 * y1)
        return MultiValue(quadratic_point_pair(z1, z2, z3))

    return NValuedLaw(
        name="cp1-corrupted",
        arity=2,
        product=bad_product,
        unit=UNIT_CP1,
        inverse=lambda x: x,
        within=lambda a, b, tol: proj_equal(a, b, tol),
    )
