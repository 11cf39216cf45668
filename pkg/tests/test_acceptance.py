"""Acceptance suite: every shipped law against its independent oracle.

One test per criterion; each prints a single PASS/FAIL line.  Tolerances
and sample counts are pinned here, not configurable.
"""

import cmath
import time
from fractions import Fraction

from kummerlaw.axioms import (
    NValuedLaw,
    check_associativity,
    check_inverse,
    check_unit,
    run_law_suite,
)
from kummerlaw.elementary import (
    deformation1_coeffs,
    deformation1_law,
    deformation2_coeffs,
    deformation2_law,
    p2_coeffs,
    p2_law,
    p2_law_corrupted,
    zplus_law,
)
from kummerlaw.elliptic import (
    UNIT_CP1,
    CurveG1,
    PointG1,
    coset_mul,
    cp1_law,
    cp1_law_corrupted,
    cp1_mul,
    product_points,
)
from kummerlaw.errors import DEGENERATE_INPUT
from kummerlaw.genus2 import (
    CurveG2,
    DivisorClass,
    UNIT_KUMMER,
    cantor_add,
    cantor_neg,
    cantor_sub,
    du_derivative,
    kowalevski_flow,
    kummer_embed,
    kummer_mul,
    kummer_product_points,
    phi_psi,
    phi_psi_corrupted,
    random_curve,
    random_divisor,
    semistable_mul,
    support_points,
    wp_from_divisor,
)
from kummerlaw.genus2.wp import wp11, wp13, wp33, wp111, wp113, wp133, wp333
from kummerlaw.ratkummer import (
    UPoint,
    embed_hat,
    hat_forward,
    hat_inverse,
    kowalevski_rational,
    quartic_derived,
    quartic_printed,
    rk_mul,
    sigma0,
)
from kummerlaw.sampling import SampleStream
from kummerlaw.scalars import (
    MultiValue,
    ProjPoint,
    Tolerance,
    multiset_equal,
    proj_equal,
)

MODULE_T0 = time.perf_counter()

TOL8 = Tolerance(1e-8, 1e-8)
TOL7 = Tolerance(1e-7, 1e-7)
TOL6 = Tolerance(1e-6, 1e-6)


def report(n: int, ok: bool, text: str) -> None:
    print(f"ACCEPTANCE {n:02d} {'PASS' if ok else 'FAIL'} - {text}")
    assert ok, f"criterion {n}: {text}"


def rational(stream):
    return Fraction(stream.integer(-9, 9), stream.integer(1, 7))


def proj_within(a, b, tol):
    return proj_equal(a, b, tol)


def test_criterion_01_elementary_laws():
    t0 = time.perf_counter()
    ok = True
    sampler = lambda st: st.complex_disk(2.0)
    ok &= run_law_suite(p2_law(), sampler, 200, seed=101).passed
    ok &= run_law_suite(zplus_law(), lambda st: st.integer(0, 60), 200, seed=102).passed
    fiber_stream = SampleStream(103)
    for i in range(5):  # 200 triples spread over 5 fibers
        lam = fiber_stream.complex_disk(0.8)
        ok &= run_law_suite(deformation1_law(lam), sampler, 40, seed=104 + i).passed
    for i in range(5):
        l1 = fiber_stream.complex_disk(0.6)
        l2 = fiber_stream.complex_disk(0.6)
        ok &= run_law_suite(deformation2_law(l1, l2), sampler, 40, seed=109 + i).passed
    # exact reductions on rational inputs
    ex = SampleStream(115)
    for _ in range(100):
        x, y, lam = rational(ex), rational(ex), rational(ex)
        ok &= deformation1_coeffs(x, y, 0) == p2_coeffs(x, y)
        B, C, G = deformation2_coeffs(x, y, 0, 0)
        ok &= (B, C, G) == (2 * (x + y), (x - y) ** 2, 1)
        ok &= deformation1_coeffs(x, y, lam)[2] == (x - y) ** 2  # Vieta product
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    report(1, ok, f"elementary laws: 4 families x 200 triples + exact reductions ({elapsed:.2f}s)")


def test_criterion_02_cp1_law():
    ok = True
    curve_stream = SampleStream(201)
    sampler = lambda st: ProjPoint((st.complex_disk(1.5), st.complex_disk(1.5)))
    for i in range(5):
        curve = CurveG1(curve_stream.complex_disk(1.0), curve_stream.complex_disk(1.0))
        suite = run_law_suite(cp1_law(curve), sampler, 200, seed=210 + i, tol=TOL8)
        ok &= suite.passed
    # unit law, exactly, on rational points
    ex = SampleStream(220)
    curve_q = CurveG1(rational(ex), rational(ex))
    for _ in range(50):
        y1, y2 = rational(ex), rational(ex)
        if (y1, y2) == (0, 0):
            continue
        z = cp1_mul(UNIT_CP1, ProjPoint((y1, y2)), curve_q)
        ok &= z.coords == (y1 * y1, 2 * y1 * y2, y2 * y2)
    # cross-oracle with the chord formula
    pair_stream = SampleStream(230)
    curve = CurveG1(0.4 + 0.3j, -0.6 + 0.1j)
    done = 0
    while done < 200:
        s1, s2 = pair_stream.complex_disk(1.5), pair_stream.complex_disk(1.5)
        if abs(s1 - s2) < 1e-2:
            continue
        t1, t2 = cmath.sqrt(curve.rhs(s1)), cmath.sqrt(curve.rhs(s2))
        if pair_stream.integer(0, 1):
            t1 = -t1
        if pair_stream.integer(0, 1):
            t2 = -t2
        done += 1
        values = coset_mul(PointG1(s1, t1), PointG1(s2, t2), curve)
        expected = MultiValue([ProjPoint((1, v)) for v in values])
        pair = product_points(ProjPoint((1, s1)), ProjPoint((1, s2)), curve)
        ok &= multiset_equal(expected, pair, TOL8, within=proj_within)
    # rational-limit reduction, exactly (base point x2 = y2 = 0 excluded)
    for _ in range(50):
        x1, x2, y1, y2 = (rational(ex) for _ in range(4))
        if (x1, x2) == (0, 0) or (y1, y2) == (0, 0) or (x2 == 0 and y2 == 0):
            continue
        z1, z2, z3 = cp1_mul(ProjPoint((x1, x2)), ProjPoint((y1, y2)), CurveG1(0, 0)).coords
        ok &= z1 == (x1 * y2 - x2 * y1) ** 2
        ok &= z2 == 2 * (x1 * y2 + x2 * y1) * x2 * y2
        ok &= z3 == x2 ** 2 * y2 ** 2
        ok &= z1 == (x1 * y2 + x2 * y1) ** 2 - 4 * x1 * x2 * y1 * y2
        ok &= z2 ** 2 - 4 * z1 * z3 == 16 * x1 * x2 ** 3 * y1 * y2 ** 3
    report(2, ok, "projective-line law: 5 curves x 200 triples, chord oracle x200, exact unit & limit")


def test_criterion_03_rational_kummer():
    ok = True
    ex = SampleStream(301)
    for _ in range(1000):
        u = UPoint(rational(ex), rational(ex))
        ok &= quartic_derived(embed_hat(u)) == 0
    for _ in range(1000):
        t = (rational(ex), rational(ex), rational(ex))
        ok &= hat_inverse(*hat_forward(*t)) == t
    probe = embed_hat(UPoint(Fraction(1), Fraction(1)))
    ok &= probe == (Fraction(-1), Fraction(7, 3), Fraction(4, 9))
    ok &= quartic_printed(probe) == 2 and quartic_derived(probe) == 0
    # product law against the parametrization
    fl = SampleStream(302)
    done = 0
    while done < 200:
        u = UPoint(fl.complex_disk(1.2), fl.complex_disk(1.2))
        v = UPoint(fl.complex_disk(1.2), fl.complex_disk(1.2))
        try:
            out = rk_mul(embed_hat(u), embed_hat(v))
        except DEGENERATE_INPUT:
            continue
        done += 1
        want = MultiValue(
            (
                embed_hat(UPoint(u.u1 + v.u1, u.u3 + v.u3)),
                embed_hat(UPoint(u.u1 - v.u1, u.u3 - v.u3)),
            )
        )
        ok &= multiset_equal(out, want, TOL8)
    report(3, ok, "rational Kummer: exact quartic x1000, exact round trip x1000, "
                  "printed-quartic counterexample, product oracle x200")


def test_criterion_04_derivative_consistency():
    ok = True
    stream = SampleStream(401)
    identities = [
        (wp11, 1, wp111),
        (wp11, 3, wp113),
        (wp13, 1, wp113),
        (wp13, 3, wp133),
        (wp33, 1, wp133),
        (wp33, 3, wp333),
    ]
    for _ in range(3):
        curve = random_curve(stream)
        for _ in range(100):
            D = random_divisor(stream, curve)
            (s1, m1), (s2, m2) = support_points(D, curve)
            args = (s1, m1, s2, m2, curve)
            for g, k, target in identities:
                want = target(*args)
                got = du_derivative(g, D, k, curve)
                ok &= abs(got - want) <= 1e-8 * max(1.0, abs(want))
    report(4, ok, "third-order values equal u-derivatives of second-order values, 100 x 3 curves")


def test_criterion_05_addition_formula_oracle():
    ok = True
    stream = SampleStream(501)
    resamples = 0
    for c in range(3):
        curve = random_curve(stream)
        done = 0
        while done < 100:
            Du = random_divisor(stream, curve)
            Dv = random_divisor(stream, curve)
            try:
                jet_sum = wp_from_divisor(cantor_add(Du, Dv, curve), curve)
                jet_dif = wp_from_divisor(cantor_sub(Du, Dv, curve), curve)
                pairs = {
                    kl: phi_psi(Du, Dv, *kl, curve) for kl in ((1, 1), (1, 3), (3, 3))
                }
            except DEGENERATE_INPUT:
                resamples += 1
                continue
            done += 1
            for (kl, (phi, psi)), name in zip(pairs.items(), ("p11", "p13", "p33")):
                w_sum, w_dif = getattr(jet_sum, name), getattr(jet_dif, name)
                ok &= abs(phi - psi - w_sum) <= 1e-7 * max(1.0, abs(w_sum))
                ok &= abs(phi + psi - w_dif) <= 1e-7 * max(1.0, abs(w_dif))
    rate = resamples / (300 + resamples)
    report(5, ok, f"explicit even/odd formulas match composition oracle, 100 x 3 curves "
                  f"(resample rate {rate:.1%})")


def test_criterion_06_rational_limit_addition_pairing():
    ok = True
    ex = SampleStream(601)

    def xvec(u):
        s0 = sigma0(u)
        return (1, -u.u1 ** 2, 2 * u.u1 * u.u3 + u.u1 ** 4 / Fraction(3), s0 * s0)

    for _ in range(1000):
        u = UPoint(rational(ex), rational(ex))
        v = UPoint(rational(ex), rational(ex))
        a, b = xvec(u), xvec(v)
        pairing = -a[0] * b[3] - a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        target = sigma0(UPoint(u.u1 + v.u1, u.u3 + v.u3)) * sigma0(
            UPoint(u.u1 - v.u1, u.u3 - v.u3)
        )
        ok &= pairing == target
    u, v = UPoint(Fraction(1), Fraction(0)), UPoint(Fraction(0), Fraction(1))
    a, b = xvec(u), xvec(v)
    pairing = -a[0] * b[3] - a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
    ok &= pairing == Fraction(-8, 9)
    ok &= sigma0(UPoint(1, 1)) * sigma0(UPoint(1, -1)) == Fraction(-8, 9)
    report(6, ok, "degenerate-limit addition pairing: exact on 1000 rational pairs, "
                  "worked instance -8/9")


def test_criterion_07_kummer_two_valued_group():
    ok = True
    stream = SampleStream(701)
    for c in range(3):
        curve = random_curve(stream)
        law = NValuedLaw(
            name="kummer",
            arity=2,
            product=lambda a, b, _c=curve: kummer_product_points(a, b, _c),
            unit=UNIT_KUMMER,
            inverse=lambda a: a,
            within=proj_within,
        )
        done = 0
        while done < 50:
            try:
                pts = [kummer_embed(random_divisor(stream, curve), curve) for _ in range(3)]
                assoc = check_associativity(law, *pts, TOL6)
                unit = check_unit(law, pts[0], TOL6)
                inv = check_inverse(law, pts[1], TOL6)
            except DEGENERATE_INPUT:
                continue
            done += 1
            ok &= assoc.passed and unit.passed and inv.passed
    # branch independence of the product multiset
    curve = CurveG2(0.3 + 0.1j, -0.2 + 0.4j, 0.15 - 0.3j, 0.7 + 0.2j)
    bst = SampleStream(702)
    done = 0
    while done < 100:
        Du, Dv = random_divisor(bst, curve), random_divisor(bst, curve)
        try:
            direct = kummer_mul(
                kummer_embed(Du, curve), kummer_embed(Dv, curve), curve
            ).points
            alt = MultiValue(
                (
                    kummer_embed(cantor_add(cantor_neg(Du), Dv, curve), curve),
                    kummer_embed(cantor_sub(cantor_neg(Du), Dv, curve), curve),
                )
            )
        except DEGENERATE_INPUT:
            continue
        done += 1
        ok &= multiset_equal(direct, alt, TOL7, within=proj_within)
    # semi-stable class product agrees with the embedded product
    sst = SampleStream(703)
    done = 0
    while done < 100:
        Da, Db = random_divisor(sst, curve), random_divisor(sst, curve)
        try:
            classes = semistable_mul(DivisorClass(Da), DivisorClass(Db), curve)
            pts = MultiValue(tuple(kummer_embed(c.rep, curve) for c in classes))
            direct = kummer_mul(
                kummer_embed(Da, curve), kummer_embed(Db, curve), curve
            ).points
        except DEGENERATE_INPUT:
            continue
        done += 1
        ok &= multiset_equal(pts, direct, TOL7, within=proj_within)
    report(7, ok, "genus-2 two-valued group: 50 triples x 3 curves, unit/inverse, "
                  "branch independence x100, split-bundle product x100")


def test_criterion_08_kowalevski():
    ok = True
    # particular cases of the scaled inversion data
    (sh1, mh1), (sh2, mh2) = kowalevski_rational(UPoint(0, Fraction(5, 2)))
    ok &= sh1 == sh2 == 0 and mh1 == mh2 == 0
    rt3 = 3 ** 0.5
    u1 = 1.1 - 0.4j
    (sh1, mh1), (sh2, mh2) = kowalevski_rational(UPoint(u1, 0))
    want_s = [(1 + 1j * rt3) * u1 ** 4 / 6, (1 - 1j * rt3) * u1 ** 4 / 6]
    want_m = [(-1 + 1j / rt3) * u1 ** 10 / 18, (-1 - 1j / rt3) * u1 ** 10 / 18]
    for sh, mh in ((sh1, mh1), (sh2, mh2)):
        ok &= min(abs(sh - w) for w in want_s) < 1e-12 * abs(u1) ** 4
        ok &= min(abs(mh - w) for w in want_m) < 1e-12 * abs(u1) ** 10
    ok &= abs((1 / 18 ** 2) * (-1 + 1j / rt3) ** 2 - (1 / 6 ** 5) * (1 + 1j * rt3) ** 5) < 1e-12
    u1 = 0.9 + 0.6j
    (sh1, mh1), (sh2, mh2) = kowalevski_rational(UPoint(u1, -2 * u1 ** 3 / 3))
    want_s = [(-1 + 1j * rt3) * u1 ** 4 / 2, (-1 - 1j * rt3) * u1 ** 4 / 2]
    for sh, mh in ((sh1, mh1), (sh2, mh2)):
        ok &= min(abs(sh - w) for w in want_s) < 1e-12 * abs(u1) ** 4
        ok &= abs(mh + sh * u1 ** 6) < 1e-12 * abs(u1) ** 10
    ok &= abs((-1 + 1j * rt3) ** 3 - 8) < 1e-12 and abs((-1 - 1j * rt3) ** 3 - 8) < 1e-12
    u1 = 1.2 - 0.5j
    (sh1, mh1), (sh2, mh2) = kowalevski_rational(UPoint(u1, u1 ** 3 / 12))
    for sh, mh in ((sh1, mh1), (sh2, mh2)):
        ok &= abs(sh - u1 ** 4 / 4) < 1e-12 * abs(u1) ** 4
        ok &= abs(mh - u1 ** 10 / 32) < 1e-12 * abs(u1) ** 10
    # flow conserves the defining quadratures over unit time
    curve = CurveG2(0.3 + 0.1j, -0.2 + 0.4j, 0.15 - 0.3j, 0.7 + 0.2j)
    D0 = random_divisor(SampleStream(5), curve)
    flow = kowalevski_flow(D0, curve, t_end=1.0, dt=1e-3)
    ok &= flow.holonomy_residual < 1e-6
    report(8, ok, f"separation-variable cases at 1e-12 and flow holonomy residual "
                  f"{flow.holonomy_residual:.1e} < 1e-6")


def test_criterion_09_negative_controls():
    detected = 0
    # corrupted basic law
    bad = p2_law_corrupted()
    r = check_associativity(bad, 1.3 + 0.4j, -0.8 + 0.9j, 2.1 - 0.6j, Tolerance(1e-9, 1e-9))
    detected += 0 if r.passed else 1
    # corrupted projective-line law (sign flip in the middle coordinate)
    curve = CurveG1(0.5 + 0.2j, -0.3 + 0.7j)
    bad_cp1 = cp1_law_corrupted(curve)
    x = ProjPoint((0.9 + 0.1j, 0.2 - 0.7j))
    y = ProjPoint((-0.5 + 0.6j, 1.1 + 0.3j))
    z = ProjPoint((0.4 - 0.9j, -0.8 - 0.2j))
    r = check_associativity(bad_cp1, x, y, z, TOL8)
    detected += 0 if r.passed else 1
    # corrupted odd part of the addition formulas
    curve2 = CurveG2(0.3 + 0.1j, -0.2 + 0.4j, 0.15 - 0.3j, 0.7 + 0.2j)
    st = SampleStream(901)
    Du, Dv = random_divisor(st, curve2), random_divisor(st, curve2)
    jet_sum = wp_from_divisor(cantor_add(Du, Dv, curve2), curve2)
    phi, bad_psi = phi_psi_corrupted(Du, Dv, 1, 1, curve2)
    if abs(phi - bad_psi - jet_sum.p11) > 1e-4:
        detected += 1
    ok = detected == 3
    report(9, ok, f"negative controls: {detected}/3 corrupted variants detected")


def test_criterion_10_determinism_and_budget():
    law = p2_law()
    r1 = run_law_suite(law, lambda st: st.complex_disk(2.0), 50, seed=1001)
    r2 = run_law_suite(law, lambda st: st.complex_disk(2.0), 50, seed=1001)
    ok = r1.to_json() == r2.to_json()
    elapsed = time.perf_counter() - MODULE_T0
    ok &= elapsed < 60.0
    report(10, ok, f"deterministic reports; acceptance wall clock {elapsed:.1f}s < 60s")
