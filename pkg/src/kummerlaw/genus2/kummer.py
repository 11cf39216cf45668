"""Projective embedding of divisor classes and the two-valued multiplication.

A divisor class embeds into CP^3 as (x0 : x2 : x4 : x6) = (p33 : p13 : p11 : 1),
the scale-free form of the entire coordinate vector sigma^2 (p33, p13, p11, 1).
The class of the neutral divisor is the limit point e = (1 : 0 : 0 : 0).

The two-valued product of two embedded classes is the unordered image pair
of the sum and difference classes.  Two independent routes compute it:

* ``kummer_mul`` -- lift to divisors, add/subtract with the composition
  oracle, re-embed (plus the degree-6 coefficient vector of the product of
  the two image cubics, the CP^6 value of the algebraic product map);
* ``wp_sum_difference`` -- the explicit even/odd quotient formulas (phi,
  psi) built from the pairing form M and derivative vectors, which give
  p_kl(sum) = phi_kl - psi_kl and p_kl(difference) = phi_kl + psi_kl.

Their agreement on random inputs is the package's central equivalence suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import (
    InconsistentKummerPoint,
    SingularPairing,
    ThetaDivisor,
)
from ..scalars import (
    DEFAULT_TOL,
    MultiValue,
    ProjPoint,
    Tolerance,
    proj_equal,
    scalar_close,
)
from .curve import CurveG2
from .divisor import (
    MumfordDivisor,
    NEUTRAL,
    cantor_add,
    cantor_neg,
    cantor_sub,
    divisor_from_points,
    support_points,
)
from .wp import (
    THIRD_ORDER,
    F_sym,
    WpJet,
    du_derivative,
    wp_from_divisor,
)

#: unit class: limit of the embedding at the neutral class
UNIT_KUMMER = ProjPoint((1, 0, 0, 0))


def kummer_embed(D: MumfordDivisor, curve: CurveG2, tol: Tolerance = DEFAULT_TOL) -> ProjPoint:
    """Embedding (p33 : p13 : p11 : 1); neutral maps to the limit unit point.

    Degree-1 divisors lie on the vanishing locus of the entire scale
    function, where the affine jet does not exist: ThetaDivisor.
    """
    if D.is_neutral:
        return UNIT_KUMMER
    if D.degree == 1:
        raise ThetaDivisor("degree-1 class: embedding denormalizes")
    jet = wp_from_divisor(D, curve, tol)
    return ProjPoint((jet.p33, jet.p13, jet.p11, 1))


def kummer_lift(point: ProjPoint, curve: CurveG2, tol: Tolerance = DEFAULT_TOL) -> MumfordDivisor:
    """A divisor mapping to the point (either sign class; callers treat both).

    Reads the affine jet off the last coordinate, solves the inversion
    quadratic for the support abscissas, fixes mu1 by a square root and mu2
    by the pairing relation mu1 mu2 = (F - p33 (s1-s2)^2)/2, and verifies
    the second point lands on the curve.
    """
    import cmath

    x0, x2, x4, x6 = point.coords
    scale = max(abs(complex(c)) for c in point.coords)
    if abs(complex(x6)) <= max(tol.abs, 1e-12) * scale:
        raise ThetaDivisor("last coordinate vanishes: no affine jet")
    p33 = complex(x0) / complex(x6)
    p13 = complex(x2) / complex(x6)
    p11 = complex(x4) / complex(x6)
    disc = p11 * p11 + 4 * p13
    root = cmath.sqrt(disc)
    s1 = (p11 + root) / 2
    s2 = (p11 - root) / 2
    sep = abs(s1 - s2)
    if sep <= max(tol.abs, 1e-9) * max(abs(s1), abs(s2), 1.0):
        raise InconsistentKummerPoint("inversion quadratic has a double root")
    m1 = cmath.sqrt(curve.f(s1))
    prod = (F_sym(s1, s2, curve) - p33 * (s1 - s2) ** 2) / 2
    if abs(m1) <= 1e-13 * max(1.0, abs(prod)):
        raise InconsistentKummerPoint("branch support: mu1 = 0")
    m2 = prod / m1
    if not scalar_close(m2 * m2, curve.f(s2), Tolerance(max(tol.rel, 1e-6), max(tol.abs, 1e-6))):
        raise InconsistentKummerPoint("second mu fails the curve equation")
    return divisor_from_points((s1, m1), (s2, m2))


# --- pairing form, product cubic -------------------------------------------

def pairing_product(x: ProjPoint, y: ProjPoint, normalize: bool = True):
    """Bilinear pairing x^T J y with J = [[0,-E],[E,0]], E the 2x2 flip.

    In coordinates (a0, a1, a2, a3):  -a0 b3 - a1 b2 + a2 b1 + a3 b0.
    With `normalize`, both arguments are first scaled to last coordinate 1
    (the affine jet representative); otherwise the raw homogeneous values
    are used and the caller owns the scale.
    """
    xc = [complex(c) for c in x.coords]
    yc = [complex(c) for c in y.coords]
    if normalize:
        if xc[3] == 0 or yc[3] == 0:
            raise ThetaDivisor("cannot normalize: last coordinate vanishes")
        xc = [c / xc[3] for c in xc]
        yc = [c / yc[3] for c in yc]
    return -xc[0] * yc[3] - xc[1] * yc[2] + xc[2] * yc[1] + xc[3] * yc[0]


def pairing_matrix() -> tuple:
    """The 4x4 matrix of ``pairing_product`` (rows of J)."""
    return ((0, 0, 0, -1), (0, 0, -1, 0), (0, 1, 0, 0), (1, 0, 0, 0))


def z12(x: ProjPoint, y: ProjPoint, normalize: bool = True):
    """Last coordinate of the product map: the squared pairing."""
    m = pairing_product(x, y, normalize)
    return m * m


def gamma3(p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Coefficient vector of the product of two binary cubics (convolution)."""
    pc, qc = p.coords, q.coords
    out = [0] * 7
    for i, a in enumerate(pc):
        for j, b in enumerate(qc):
            out[i + j] = out[i + j] + a * b
    return ProjPoint(tuple(out))


# --- explicit even/odd addition formulas ------------------------------------

def _x_vector(jet: WpJet) -> tuple:
    return (jet.p33, jet.p13, jet.p11, 1)


def _xk_vector(D: MumfordDivisor, curve: CurveG2, k: int, tol: Tolerance) -> tuple:
    (s1, m1), (s2, m2) = support_points(D, curve)
    fns = THIRD_ORDER[k]
    return tuple(f(s1, m1, s2, m2, curve) for f in fns) + (0,)


def _xkl_vector(D: MumfordDivisor, curve: CurveG2, k: int, l: int, tol: Tolerance) -> tuple:
    fns = THIRD_ORDER[k]
    return tuple(du_derivative(f, D, l, curve, tol) for f in fns) + (0,)


def _pair(a: tuple, b: tuple):
    return -a[0] * b[3] - a[1] * b[2] + a[2] * b[1] + a[3] * b[0]


def phi_psi(
    Du: MumfordDivisor,
    Dv: MumfordDivisor,
    k: int,
    l: int,
    curve: CurveG2,
    tol: Tolerance = DEFAULT_TOL,
) -> tuple:
    """Even/odd parts (phi_kl, psi_kl) of the second-order values at u +- v.

    phi_kl = p_kl(u) - [ (X_kl(u)^T J X(v)) M - (X_k(u)^T J X(v)) (X_l(u)^T J X(v)) ] / (2 M^2)
    psi_kl = [ M (X_l(u)^T J X_k(v)) - (X_l(u)^T J X(v)) (X(u)^T J X_k(v)) ] / (2 M^2)

    with M the pairing of the two affine jet vectors.  The pairing must not
    vanish (that is the locus where u +- v degenerates).
    """
    jet_u = wp_from_divisor(Du, curve, tol)
    jet_v = wp_from_divisor(Dv, curve, tol)
    Xu, Xv = _x_vector(jet_u), _x_vector(jet_v)
    M = _pair(Xu, Xv)
    scale = max(abs(complex(c)) for c in (*Xu, *Xv))
    if abs(M) <= max(tol.abs, 1e-10) * scale:
        raise SingularPairing("pairing form vanished")
    p_kl = {(1, 1): jet_u.p11, (1, 3): jet_u.p13, (3, 1): jet_u.p13, (3, 3): jet_u.p33}[(k, l)]
    Xku = _xk_vector(Du, curve, k, tol)
    Xlu = _xk_vector(Du, curve, l, tol)
    Xkv = _xk_vector(Dv, curve, k, tol)
    Xklu = _xkl_vector(Du, curve, k, l, tol)
    A_kl = _pair(Xklu, Xv)
    P_k = _pair(Xku, Xv)
    P_l = _pair(Xlu, Xv)
    Q_lk = _pair(Xlu, Xkv)
    R_k = _pair(Xu, Xkv)
    phi = p_kl - (A_kl * M - P_k * P_l) / (2 * M * M)
    psi = (M * Q_lk - P_l * R_k) / (2 * M * M)
    return phi, psi


def wp_sum_difference(
    Du: MumfordDivisor, Dv: MumfordDivisor, curve: CurveG2, tol: Tolerance = DEFAULT_TOL
) -> tuple:
    """((p11, p13, p33) at u+v, (p11, p13, p33) at u-v) from phi/psi alone."""
    pairs = [phi_psi(Du, Dv, k, l, curve, tol) for (k, l) in ((1, 1), (1, 3), (3, 3))]
    at_sum = tuple(phi - psi for phi, psi in pairs)
    at_dif = tuple(phi + psi for phi, psi in pairs)
    return (at_sum, at_dif)


def phi_psi_corrupted(Du, Dv, k, l, curve, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Negative control: sign flip inside psi."""
    jet_u = wp_from_divisor(Du, curve, tol)
    jet_v = wp_from_divisor(Dv, curve, tol)
    Xu, Xv = _x_vector(jet_u), _x_vector(jet_v)
    M = _pair(Xu, Xv)
    phi, psi = phi_psi(Du, Dv, k, l, curve, tol)
    Xlu = _xk_vector(Du, curve, l, tol)
    Xkv = _xk_vector(Dv, curve, k, tol)
    bad_psi = (M * _pair(Xlu, Xkv) + _pair(Xlu, Xv) * _pair(Xu, Xkv)) / (2 * M * M)
    return phi, bad_psi


# --- the two-valued multiplication ------------------------------------------

@dataclass(frozen=True)
class KummerProduct:
    """Image pair of the sum/difference classes plus the CP^6 product value."""

    points: MultiValue
    cubic: ProjPoint


def kummer_mul(
    x: ProjPoint, y: ProjPoint, curve: CurveG2, tol: Tolerance = DEFAULT_TOL
) -> KummerProduct:
    """Two-valued product of embedded classes via the divisor oracle.

    The unit point is handled as the neutral divisor (it admits no affine
    lift).  The output multiset is independent of which sign class the lift
    picks.  Outputs exactly on the vanishing locus raise ThetaDivisor
    (degree drop in the divisor arithmetic); accuracy degrades continuously
    as an output class approaches that locus, since the affine jets there
    blow up.
    """
    Du = NEUTRAL if proj_equal(x, UNIT_KUMMER, tol) else kummer_lift(x, curve, tol)
    Dv = NEUTRAL if proj_equal(y, UNIT_KUMMER, tol) else kummer_lift(y, curve, tol)
    Dsum = cantor_add(Du, Dv, curve)
    Ddif = cantor_sub(Du, Dv, curve)
    p_sum = kummer_embed(Dsum, curve, tol)
    p_dif = kummer_embed(Ddif, curve, tol)
    pair = MultiValue((p_sum, p_dif))
    return KummerProduct(points=pair, cubic=gamma3(p_sum, p_dif))


def kummer_product_points(x, y, curve, tol: Tolerance = DEFAULT_TOL) -> MultiValue:
    return kummer_mul(x, y, curve, tol).points


# --- semi-stable class product ----------------------------------------------

@dataclass(frozen=True)
class DivisorClass:
    """Unordered pair {D, -D}: a point of the quotient by the involution."""

    rep: MumfordDivisor

    def same(self, other: "DivisorClass", tol: float = 1e-7) -> bool:
        from .divisor import divisor_distance

        return (
            divisor_distance(self.rep, other.rep) <= tol
            or divisor_distance(self.rep, cantor_neg(other.rep)) <= tol
        )


def semistable_mul(a: DivisorClass, b: DivisorClass, curve: CurveG2) -> MultiValue:
    """Class pair {[D_a + D_b], [D_a - D_b]}.

    The rank-2 split bundles attached to degree-0 classes j, l multiply to
    the pair (j l + (j l)^-1, j l^-1 + (j l^-1)^-1); at the divisor level
    that is exactly sum and difference, so this coincides with kummer_mul
    under the embedding.
    """
    return MultiValue(
        (
            DivisorClass(cantor_add(a.rep, b.rep, curve)),
            DivisorClass(cantor_sub(a.rep, b.rep, curve)),
        )
    )
