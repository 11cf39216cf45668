"""Weighted-scaling equivariance of the genus-2 machinery.

The curve family carries a grading: rescaling the support by (s, mu) ->
(a^2 s, a^5 mu) maps the curve with parameters (l4, l6, l8, l10) to the
curve with (a^4 l4, a^6 l6, a^8 l8, a^10 l10), and every derived value
scales by its weight (second-order values by a^2, a^4, a^6; third-order
by a^3, a^5, a^7, a^9).  Any wrongly-weighted term in a formula breaks
this, so it is a sharp cross-check on the whole jet pipeline and on the
two-valued multiplication.
"""

import pytest

from kummerlaw.genus2 import (
    CurveG2,
    MumfordDivisor,
    cantor_add,
    cantor_sub,
    kummer_embed,
    kummer_mul,
    random_divisor,
    support_points,
    wp_from_divisor,
)
from kummerlaw.sampling import SampleStream
from kummerlaw.scalars import MultiValue, ProjPoint, Tolerance, multiset_equal, proj_equal

CURVE = CurveG2(0.3 + 0.1j, -0.2 + 0.4j, 0.15 - 0.3j, 0.7 + 0.2j)


def scaled_curve(curve: CurveG2, a: complex) -> CurveG2:
    return CurveG2(a ** 4 * curve.l4, a ** 6 * curve.l6, a ** 8 * curve.l8, a ** 10 * curve.l10)


def scaled_divisor(D: MumfordDivisor, curve: CurveG2, a: complex) -> MumfordDivisor:
    from kummerlaw.genus2 import divisor_from_points

    (s1, m1), (s2, m2) = support_points(D, curve)
    return divisor_from_points((a ** 2 * s1, a ** 5 * m1), (a ** 2 * s2, a ** 5 * m2))


WEIGHTS = {
    "p11": 2, "p13": 4, "p33": 6,
    "p111": 3, "p113": 5, "p133": 7, "p333": 9,
}


@pytest.mark.parametrize("a", [1.3 - 0.4j, 0.6 + 0.9j])
def test_jet_values_scale_by_weight(a):
    stream = SampleStream(606)
    for _ in range(20):
        D = random_divisor(stream, CURVE)
        jet = wp_from_divisor(D, CURVE)
        jet_scaled = wp_from_divisor(scaled_divisor(D, CURVE, a), scaled_curve(CURVE, a))
        for name, weight in WEIGHTS.items():
            want = a ** weight * getattr(jet, name)
            got = getattr(jet_scaled, name)
            assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


def test_multiplication_is_scaling_equivariant():
    a = 0.8 + 0.5j
    stream = SampleStream(607)
    curve2 = scaled_curve(CURVE, a)
    tol = Tolerance(1e-6, 1e-6)

    def weighted_point(p: ProjPoint) -> ProjPoint:
        # (p33 : p13 : p11 : 1) in weights (6, 4, 2, 0)
        x0, x2, x4, x6 = p.coords
        return ProjPoint((a ** 6 * x0, a ** 4 * x2, a ** 2 * x4, x6))

    for _ in range(10):
        Du, Dv = random_divisor(stream, CURVE), random_divisor(stream, CURVE)
        direct = kummer_mul(kummer_embed(Du, CURVE), kummer_embed(Dv, CURVE), CURVE).points
        scaled = kummer_mul(
            kummer_embed(scaled_divisor(Du, CURVE, a), curve2),
            kummer_embed(scaled_divisor(Dv, CURVE, a), curve2),
            curve2,
        ).points
        expected = MultiValue(tuple(weighted_point(p) for p in direct))
        assert multiset_equal(scaled, expected, tol, within=lambda x, y, t: proj_equal(x, y, t))


def test_composition_is_scaling_equivariant():
    a = 1.1 + 0.3j
    stream = SampleStream(608)
    curve2 = scaled_curve(CURVE, a)
    from kummerlaw.genus2 import divisor_distance

    for _ in range(10):
        Du, Dv = random_divisor(stream, CURVE), random_divisor(stream, CURVE)
        for op in (cantor_add, cantor_sub):
            out = op(Du, Dv, CURVE)
            out_scaled = op(
                scaled_divisor(Du, CURVE, a), scaled_divisor(Dv, CURVE, a), curve2
            )
            assert divisor_distance(out_scaled, scaled_divisor(out, CURVE, a)) < 1e-7
