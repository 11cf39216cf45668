"""FastAPI service wrapping the computation kernel.

Kernel errors map to HTTP 400 with an error object; check failures are not
errors and come back as 200 with ``passed: false``.  The CLI is a thin
client of this app (in-process transport by default).
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..axioms import (
    CheckReport,
    NValuedLaw,
    check_associativity,
    check_groupoid,
    run_law_suite,
)
from ..elementary import (
    deformation1_law,
    deformation2_law,
    one_param_groupoid,
    p2_law,
    two_param_groupoid,
    zplus_law,
)
from ..elliptic import UNIT_CP1, CurveG1, cp1_law, cp1_mul, product_points
from ..errors import KummerLawError
from ..genus2 import (
    CurveG2,
    MumfordDivisor,
    UNIT_KUMMER,
    kowalevski_flow,
    kummer_embed,
    kummer_mul,
    kummer_product_points,
    random_divisor,
)
from ..ratkummer import (
    UPoint,
    embed_hat,
    kowalevski_rational,
    quadric_mul,
    quartic_derived,
    quartic_printed,
    rk_law,
    rk_mul,
    sigma0,
)
from ..sampling import SampleStream
from ..scalars import (
    ProjPoint,
    Tolerance,
    as_complex,
    magnitude,
    proj_equal,
    scalar_from_json,
    value_to_json,
)
from ..typos import ledger
from .models import (
    AxiomsCheckRequest,
    GroupoidCheckRequest,
    KowalevskiRequest,
    KummerMulRequest,
    LawEvalRequest,
    SurfaceCheckRequest,
)

app = FastAPI(title="kummerlaw", version=__version__)


@app.exception_handler(KummerLawError)
async def kernel_error_handler(request, exc: KummerLawError):
    return JSONResponse(
        status_code=400,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.exception_handler(ValueError)
async def value_error_handler(request, exc: ValueError):
    return JSONResponse(status_code=400, content={"error": "ValueError", "detail": str(exc)})


def _tol(model) -> Tolerance:
    return Tolerance(model.rel, model.abs)


def _curve_g1(req) -> CurveG1:
    if getattr(req, "curve", None) is not None:
        return CurveG1(scalar_from_json(req.curve.g2), scalar_from_json(req.curve.g3))
    return CurveG1(scalar_from_json(req.g2), scalar_from_json(req.g3))


def _curve_g2(model) -> CurveG2:
    if model is None:
        return CurveG2()
    return CurveG2(
        scalar_from_json(model.lambda4),
        scalar_from_json(model.lambda6),
        scalar_from_json(model.lambda8),
        scalar_from_json(model.lambda10),
    )


def _divisor(model) -> MumfordDivisor:
    if len(model.U) == 0:
        return MumfordDivisor((1 + 0j,), ())
    U = [as_complex(scalar_from_json(c)) for c in model.U] + [1 + 0j]
    V = [as_complex(scalar_from_json(c)) for c in model.V]
    return MumfordDivisor(tuple(U), tuple(V))


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


def _eval_law_object(req: LawEvalRequest):
    """NValuedLaw and operand decoder for the law-eval families."""
    if req.law == "zplus":
        return zplus_law(), lambda payload: int(payload)
    if req.law == "p2":
        return p2_law(), scalar_from_json
    if req.law == "groupoid1":
        return deformation1_law(scalar_from_json(req.lam)), scalar_from_json
    if req.law == "groupoid2":
        lam1, lam2 = scalar_from_json(req.lam1), scalar_from_json(req.lam2)
        return deformation2_law(lam1, lam2), scalar_from_json
    if req.law == "cp1":
        curve = _curve_g1(req)
        law = NValuedLaw(
            name="cp1",
            arity=2,
            product=lambda a, b: product_points(a, b, curve),
            unit=UNIT_CP1,
            inverse=lambda a: a,
            within=lambda a, b, tol: proj_equal(a, b, tol),
        )
        return law, lambda payload: ProjPoint(tuple(scalar_from_json(c) for c in payload))

    # quadric / rational Kummer triples
    def decode(payload):
        t = tuple(scalar_from_json(c) for c in payload)
        return t if req.exact else tuple(as_complex(c) for c in t)

    mul = quadric_mul if req.law == "eg" else rk_mul
    law = NValuedLaw(name=req.law, arity=2, product=mul, unit=(0, 0, 0))
    return law, decode


@app.post("/law-eval")
def law_eval(req: LawEvalRequest):
    """One product of the selected law; with z, also an associativity probe."""
    law, decode = _eval_law_object(req)
    x, y = decode(req.x), decode(req.y)
    body = {"law": req.law, "result": value_to_json(law.product(x, y))}
    if req.law == "cp1":
        body["product_point"] = value_to_json(cp1_mul(x, y, _curve_g1(req)))
    if req.z is not None:
        report = check_associativity(law, x, y, decode(req.z), _tol(req.tol))
        body["associativity"] = report.to_json()
        body["passed"] = report.passed
    return body


def _law_and_sampler(req: AxiomsCheckRequest):
    if req.law == "p2":
        return p2_law(), lambda st: st.complex_disk(2.0)
    if req.law == "zplus":
        return zplus_law(), lambda st: st.integer(0, 40)
    if req.law == "groupoid1":
        return deformation1_law(scalar_from_json(req.lam)), lambda st: st.complex_disk(2.0)
    if req.law == "groupoid2":
        lam1, lam2 = scalar_from_json(req.lam1), scalar_from_json(req.lam2)
        return deformation2_law(lam1, lam2), lambda st: st.complex_disk(2.0)
    if req.law == "cp1":
        curve = CurveG1(scalar_from_json(req.g2), scalar_from_json(req.g3))
        return cp1_law(curve), lambda st: ProjPoint((st.complex_disk(1.5), st.complex_disk(1.5)))
    if req.law == "rk":
        return rk_law(), lambda st: embed_hat(UPoint(st.complex_disk(1.2), st.complex_disk(1.2)))
    # kummer
    curve = _curve_g2(req.curve)
    law = NValuedLaw(
        name="kummer",
        arity=2,
        product=lambda a, b: kummer_product_points(a, b, curve),
        unit=UNIT_KUMMER,
        inverse=lambda a: a,
        within=lambda a, b, tol: proj_equal(a, b, tol),
    )
    return law, lambda st: kummer_embed(random_divisor(st, curve), curve)


@app.post("/axioms-check")
def axioms_check(req: AxiomsCheckRequest):
    law, sampler = _law_and_sampler(req)
    report = run_law_suite(law, sampler, req.samples, req.seed, _tol(req.tol))
    return report.to_json()


@app.post("/groupoid-check")
def groupoid_check(req: GroupoidCheckRequest):
    """Fiberwise axiom suite over seeded fibers of the deformation family."""
    g = one_param_groupoid() if req.family == "one_param" else two_param_groupoid()
    stream = SampleStream(req.seed)
    n_triples = req.samples or req.triples_per_fiber
    report = CheckReport(name=f"{g.name}:suite")
    for _ in range(req.fibers):
        if req.family == "one_param":
            lam = stream.complex_disk(0.8)
        else:
            lam = (stream.complex_disk(0.8), stream.complex_disk(0.8))
        triples = [
            tuple((stream.complex_disk(1.5), lam) for _ in range(3)) for _ in range(n_triples)
        ]
        report.merge(check_groupoid(g, triples, _tol(req.tol)))
    report.name = f"{g.name}:suite"
    return report.to_json()


@app.post("/kummer-mul")
def kummer_mul_endpoint(req: KummerMulRequest):
    curve = _curve_g2(req.curve)
    x = ProjPoint(tuple(scalar_from_json(c) for c in req.x))
    y = ProjPoint(tuple(scalar_from_json(c) for c in req.y))
    product = kummer_mul(x, y, curve, _tol(req.tol))
    return {
        "points": [value_to_json(p) for p in product.points],
        "cubic": value_to_json(product.cubic),
    }


@app.post("/surface-check")
def surface_check(req: SurfaceCheckRequest):
    """Quartic membership of embedded points; exact mode uses rationals."""
    stream = SampleStream(req.seed)
    worst = 0
    for _ in range(req.samples):
        if req.exact:
            u = UPoint(stream.rational(), stream.rational())
        else:
            u = UPoint(stream.complex_disk(1.5), stream.complex_disk(1.5))
        residual = quartic_derived(embed_hat(u))
        worst = max(worst, magnitude(residual))
    from fractions import Fraction

    probe = embed_hat(UPoint(Fraction(1), Fraction(1)))
    return {
        "samples": req.samples,
        "exact": req.exact,
        "derived_quartic_residual_max": worst if not req.exact else value_to_json(Fraction(worst)),
        "printed_quartic_counterexample": {
            "point": value_to_json(list(probe)),
            "value": value_to_json(quartic_printed(probe)),
        },
        "passed": worst == 0 if req.exact else worst < 1e-9,
    }


@app.post("/kowalevski")
def kowalevski(req: KowalevskiRequest):
    if req.rational:
        u = UPoint(scalar_from_json(req.u1), scalar_from_json(req.u3))
        (sh1, mh1), (sh2, mh2) = kowalevski_rational(u)
        res = max(
            magnitude(mh1 * mh1 - sh1 ** 5),
            magnitude(mh2 * mh2 - sh2 ** 5),
        )
        return {
            "sigma0": value_to_json(sigma0(u)),
            "s_hat": [value_to_json(sh1), value_to_json(sh2)],
            "mu_hat": [value_to_json(mh1), value_to_json(mh2)],
            "curve_residual": res,
            "passed": bool(res < 1e-9 * max(1.0, magnitude(sh1) ** 5)),
        }
    if req.init is None:
        return JSONResponse(
            status_code=400,
            content={"error": "ValueError", "detail": "flow mode needs an initial divisor"},
        )
    curve = _curve_g2(req.curve)
    result = kowalevski_flow(_divisor(req.init), curve, req.t1, req.dt)
    return {
        "divisor": result.divisor.to_json(),
        "t": result.t,
        "steps": result.steps,
        "holonomy_residual": result.holonomy_residual,
        "clock_residual": result.clock_residual,
        "curve_residual": result.curve_residual,
        "passed": bool(result.holonomy_residual < 1e-6 and result.clock_residual < 1e-5),
    }


@app.get("/typo-ledger")
def typo_ledger():
    return {"entries": ledger()}
