import cmath

import pytest

from kummerlaw.errors import OffCurve
from kummerlaw.genus2 import (
    CurveG2,
    MumfordDivisor,
    NEUTRAL,
    cantor_add,
    cantor_neg,
    cantor_sub,
    divisor_distance,
    divisor_from_points,
    random_curve,
    random_divisor,
    support_points,
    validate_divisor,
)
from kummerlaw.sampling import SampleStream

CURVE = CurveG2(0.3 + 0.1j, -0.2 + 0.4j, 0.15 - 0.3j, 0.7 + 0.2j)


def test_support_round_trip(stream):
    D = random_divisor(stream, CURVE)
    pts = support_points(D, CURVE)
    D2 = divisor_from_points(*pts)
    assert divisor_distance(D, D2) < 1e-12


def test_neutral_is_identity(stream):
    D = random_divisor(stream, CURVE)
    assert divisor_distance(cantor_add(D, NEUTRAL, CURVE), D) < 1e-12
    assert divisor_distance(cantor_add(NEUTRAL, D, CURVE), D) < 1e-12


def test_add_negative_gives_neutral(stream):
    D = random_divisor(stream, CURVE)
    out = cantor_add(D, cantor_neg(D), CURVE)
    assert out.is_neutral


def test_group_round_trip_many(stream):
    for _ in range(100):
        D1 = random_divisor(stream, CURVE)
        D2 = random_divisor(stream, CURVE)
        out = cantor_sub(cantor_add(D1, D2, CURVE), D2, CURVE)
        assert out.degree == 2
        assert divisor_distance(out, D1) < 1e-8


def test_doubling_and_outputs_valid(stream):
    for _ in range(20):
        D = random_divisor(stream, CURVE)
        twice = cantor_add(D, D, CURVE)
        validate_divisor(twice, CURVE)
        assert twice.degree == 2
        # doubling matches addition of a perturbed copy in the limit sense:
        # verify instead the defining membership U | V^2 - f and that
        # subtracting D recovers D
        back = cantor_sub(twice, D, CURVE)
        assert divisor_distance(back, D) < 1e-7


def test_commutativity_and_associativity(stream):
    for _ in range(15):
        D1, D2, D3 = (random_divisor(stream, CURVE) for _ in range(3))
        ab = cantor_add(D1, D2, CURVE)
        ba = cantor_add(D2, D1, CURVE)
        assert divisor_distance(ab, ba) < 1e-9
        left = cantor_add(ab, D3, CURVE)
        right = cantor_add(D1, cantor_add(D2, D3, CURVE), CURVE)
        assert divisor_distance(left, right) < 1e-7


def test_affine_point_validation():
    from kummerlaw.genus2 import AffinePointG2

    s = 0.6 + 0.2j
    mu = cmath.sqrt(CURVE.f(s))
    assert AffinePointG2(s, mu).validate(CURVE) is not None
    with pytest.raises(OffCurve):
        AffinePointG2(s, mu + 0.1).validate(CURVE)


def test_validate_divisor_rejects_corruption(stream):
    D = random_divisor(stream, CURVE)
    bad = MumfordDivisor(D.U, (D.V[0] + 0.5, D.V[1]))
    with pytest.raises(OffCurve):
        validate_divisor(bad, CURVE)


def test_outputs_on_random_curves():
    stream = SampleStream(99)
    for _ in range(5):
        curve = random_curve(stream)
        D1, D2 = random_divisor(stream, curve), random_divisor(stream, curve)
        out = cantor_add(D1, D2, curve)
        validate_divisor(out, curve)


def test_degree_one_arises_from_engineered_sum():
    # force a degree drop: D = (P, Q), E = (-P, R) with R generic;
    # D + E must drop the P component and stay a valid divisor
    s1, s2, s3 = 0.7 + 0.2j, -1.1 + 0.5j, 0.4 - 0.9j
    m = lambda s: cmath.sqrt(CURVE.f(s))
    D = divisor_from_points((s1, m(s1)), (s2, m(s2)))
    E = divisor_from_points((s1, -m(s1)), (s3, m(s3)))
    out = cantor_add(D, E, CURVE)
    validate_divisor(out, CURVE)
    assert out.degree == 2  # reduction fills back to weight two generically
