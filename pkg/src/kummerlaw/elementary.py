"""Closed-form small laws: the nonnegative-integer pair law, the basic
two-valued addition on C, and its one- and two-parameter deformations.

Every law here is the root multiset of an explicit quadratic, so each
operation exposes its coefficient triple alongside the root form: exact
suites compare coefficients (no radicals), floating suites compare roots.

The two-parameter deformation's printed coefficient polynomials disagree
with the defining construction; see ``deformation2_printed_coeffs`` and the
typo ledger.  The shipped ``deformation2_coeffs`` are derived from the
construction itself and reduce correctly to the one-parameter law.
"""

from __future__ import annotations

import cmath

from .axioms import NGroupoid, NValuedLaw
from .errors import AnchorMismatch, DomainError, SingularDenominator
from .scalars import MultiValue, Scalar, as_complex, magnitude, scalar_close, solve_quadratic


def zplus_mul(x: int, y: int) -> MultiValue:
    """Two-valued product [x+y, |x-y|] on nonnegative integers."""
    if not isinstance(x, int) or not isinstance(y, int) or x < 0 or y < 0:
        raise DomainError("operands must be nonnegative integers")
    return MultiValue((x + y, abs(x - y)))


def p2_coeffs(x: Scalar, y: Scalar) -> tuple:
    """Quadratic whose roots are the basic two-valued product of x and y."""
    return (1, -2 * (x + y), (x - y) ** 2)


def p2_mul(x: Scalar, y: Scalar) -> MultiValue:
    return solve_quadratic(*p2_coeffs(x, y))


def deformation1_coeffs(x: Scalar, y: Scalar, lam: Scalar) -> tuple:
    return (1, -(2 * (x + y) - lam * lam * x * y), (x - y) ** 2)


def deformation1_mul(x: Scalar, y: Scalar, lam: Scalar) -> MultiValue:
    return solve_quadratic(*deformation1_coeffs(x, y, lam))


def deformation2_coeffs(x: Scalar, y: Scalar, lam1: Scalar, lam2: Scalar) -> tuple:
    """Polynomials (B, C, G) of the quadratic Z^2 - (B/G) Z + C/G = 0.

    Derived by eliminating the covering coordinates u, v from the fiber
    operation (u+v-lam1*u*v)/(1-lam2*u*v) with class coordinate
    x = -u^2/(1-lam1*u):

        B = 2[(x+y)(1+lam2^2 xy) - 4 lam2 xy] - lam1^2 xy (1-lam2 x)(1-lam2 y)
        C = (x-y)^2
        G = (1-lam2^2 xy)^2 - lam1^2 lam2 xy (1-lam2 x)(1-lam2 y)

    G = 0 is the singular locus of the law.
    """
    xy = x * y
    cross = (1 - lam2 * x) * (1 - lam2 * y)
    B = 2 * ((x + y) * (1 + lam2 * lam2 * xy) - 4 * lam2 * xy) - lam1 * lam1 * xy * cross
    C = (x - y) ** 2
    G = (1 - lam2 * lam2 * xy) ** 2 - lam1 * lam1 * lam2 * xy * cross
    return (B, C, G)


def deformation2_printed_coeffs(x: Scalar, y: Scalar, lam1: Scalar, lam2: Scalar) -> tuple:
    """Verbatim printed (B, C, G); kept for the typo ledger, not for the law."""
    B = (
        x * x * y * y * lam1 * lam1 * lam2 * (-lam1 * lam1 + lam2)
        + x * y * (x + y) * lam2 * (2 * lam2 - 3 * lam1)
        + 2 * (x + y)
    )
    C = (x - y) ** 2
    G = (
        1
        + x * y * lam2 * (lam1 * lam1 - lam2)
        + x * y * (x + y) * lam1 * lam1 * lam2 * lam2
        + x * x * y * y * lam2 ** 3 * (lam2 - lam1 * lam1)
    )
    return (B, C, G)


def deformation2_mul(
    x: Scalar, y: Scalar, lam1: Scalar, lam2: Scalar, min_denominator: float = 1e-12
) -> MultiValue:
    B, C, G = deformation2_coeffs(x, y, lam1, lam2)
    if magnitude(G) <= min_denominator:
        raise SingularDenominator(f"denominator G vanished at ({x!r}, {y!r})")
    return solve_quadratic(G, -B, C)


def deformation2_oracle_mul(x: Scalar, y: Scalar, lam1: Scalar, lam2: Scalar) -> MultiValue:
    """Independent product through the covering construction (floating only).

    Recovers u from x = -u^2/(1 - lam1 u) (either branch; the output
    multiset is branch-independent), forms the two fiber products and maps
    them back to class coordinates.
    """
    x, y, lam1, lam2 = map(as_complex, (x, y, lam1, lam2))

    def lift(w: complex) -> complex:
        # u^2 - lam1 w u + w = 0
        d = cmath.sqrt((lam1 * w) ** 2 - 4 * w)
        return (lam1 * w + d) / 2

    def invol(u: complex) -> complex:
        return -u / (1 - lam1 * u)

    def fiber_op(u: complex, v: complex) -> complex:
        return (u + v - lam1 * u * v) / (1 - lam2 * u * v)

    def cls(w: complex) -> complex:
        return w * invol(w)

    u, v = lift(x), lift(y)
    return MultiValue((cls(fiber_op(u, v)), cls(fiber_op(u, invol(v)))))


# --- law and groupoid objects for the axiom suites ------------------------

def zplus_law() -> NValuedLaw:
    return NValuedLaw(name="zplus", arity=2, product=zplus_mul, unit=0)


def p2_law() -> NValuedLaw:
    return NValuedLaw(name="p2", arity=2, product=p2_mul, unit=0)


def p2_law_corrupted() -> NValuedLaw:
    """Negative control: constant term (x-y)^2 replaced by (x-y)."""
    def bad(x, y):
        return solve_quadratic(1, -2 * (x + y), x - y)

    return NValuedLaw(name="p2-corrupted", arity=2, product=bad, unit=0)


def deformation1_law(lam: Scalar) -> NValuedLaw:
    return NValuedLaw(
        name=f"deformation1[{lam!r}]",
        arity=2,
        product=lambda x, y: deformation1_mul(x, y, lam),
        unit=0,
    )


def deformation2_law(lam1: Scalar, lam2: Scalar) -> NValuedLaw:
    return NValuedLaw(
        name=f"deformation2[{lam1!r},{lam2!r}]",
        arity=2,
        product=lambda x, y: deformation2_mul(x, y, lam1, lam2),
        unit=0,
    )


def _pairwise(product_on_values, arity=2):
    # lift a value-level product to (value, anchor) pairs
    def product(a, b):
        (x, la), (y, lb) = a, b
        if la != lb:
            raise AnchorMismatch("fiber product of mismatched anchors")
        return MultiValue([(z, la) for z in product_on_values(x, y, la)])

    return product


def _fiber_within(a, b, tol) -> bool:
    return a[1] == b[1] and scalar_close(a[0], b[0], tol)


def one_param_groupoid() -> NGroupoid:
    """Deformation family over C: elements (x, lam), fiber law deformation1."""
    return NGroupoid(
        name="deformation1-groupoid",
        arity=2,
        anchor=lambda e: e[1],
        product=_pairwise(lambda x, y, lam: deformation1_mul(x, y, lam)),
        unit=lambda lam: (0, lam),
        inverse=lambda e: e,  # induced by the covering involution
        within=_fiber_within,
    )


def two_param_groupoid() -> NGroupoid:
    """Deformation family over C^2: elements (x, (lam1, lam2))."""
    return NGroupoid(
        name="deformation2-groupoid",
        arity=2,
        anchor=lambda e: e[1],
        product=_pairwise(lambda x, y, lam: deformation2_mul(x, y, lam[0], lam[1])),
        unit=lambda lam: (0, lam),
        inverse=lambda e: e,
        within=_fiber_within,
    )
