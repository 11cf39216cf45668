"""Multivalued group interface and the axiom checkers.

An n-valued law multiplies two elements into an n-element multiset.
Associativity is equality of the two n^2-multisets obtained by expanding
x*(y*z) and (x*y)*z: the inner product yields n values, and the outer
product applied to each of them is concatenated.  The same multiset notion
drives the unit, inverse, action and groupoid checks.

Checkers return a CheckReport rather than raising on failure, so batch
suites can aggregate counterexamples.  Degenerate samples (typed errors in
errors.DEGENERATE_INPUT) are resampled and counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .errors import AnchorMismatch, DEGENERATE_INPUT, KummerLawError
from .sampling import SampleStream
from .scalars import (
    DEFAULT_TOL,
    MultiValue,
    Tolerance,
    element_within,
    multiset_match,
    value_to_json,
)


@dataclass
class NValuedLaw:
    """An n-valued multiplication with unit and inverse.

    ``product`` maps (x, y) to a MultiValue of arity n; ``within`` decides
    element closeness (defaults to the generic scalar/tuple/projective
    dispatch).
    """

    name: str
    arity: int
    product: Callable[[Any, Any], MultiValue]
    unit: Any
    inverse: Callable[[Any], Any] = lambda x: x
    within: Callable[[Any, Any, Tolerance], bool] = element_within


@dataclass
class NGroupoid:
    """Fiberwise n-valued structure over a base of parameters.

    Elements are (value, anchor) pairs; ``product`` is defined only on
    pairs with equal anchors, ``unit`` sends an anchor to the fiber unit
    and ``inverse`` preserves the anchor.
    """

    name: str
    arity: int
    anchor: Callable[[Any], Any]
    product: Callable[[Any, Any], MultiValue]
    unit: Callable[[Any], Any]
    inverse: Callable[[Any], Any]
    within: Callable[[Any, Any, Tolerance], bool] = element_within


@dataclass
class CheckReport:
    """Outcome of one named check over some number of samples."""

    name: str
    samples: int = 0
    failures: list = field(default_factory=list)
    max_distance: float = 0.0
    resamples: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, matched: bool, distance: float, inputs, left, right) -> None:
        self.samples += 1
        if distance != distance or distance == float("inf"):
            distance = float("inf")
        self.max_distance = max(self.max_distance, distance if matched else 0.0)
        if not matched:
            self.failures.append(
                {
                    "inputs": [value_to_json(v) for v in inputs],
                    "left": [value_to_json(v) for v in left],
                    "right": [value_to_json(v) for v in right],
                    "distance": distance if distance == distance else None,
                }
            )

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.samples += other.samples
        self.failures.extend(other.failures)
        self.max_distance = max(self.max_distance, other.max_distance)
        self.resamples += other.resamples
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "failures": self.failures,
            "max_distance": self.max_distance,
            "resamples": self.resamples,
            "passed": self.passed,
        }


def _flatten_left(law: NValuedLaw, x, y, z) -> list:
    inner = law.product(y, z)
    out: list = []
    for w in inner:
        out.extend(law.product(x, w))
    return out


def _flatten_right(law: NValuedLaw, x, y, z) -> list:
    inner = law.product(x, y)
    out: list = []
    for w in inner:
        out.extend(law.product(w, z))
    return out


def check_associativity(law: NValuedLaw, x, y, z, tol: Tolerance = DEFAULT_TOL) -> CheckReport:
    """Compare the two n^2-multisets of x*(y*z) and (x*y)*z."""
    report = CheckReport(name=f"{law.name}:associativity")
    try:
        left = MultiValue(_flatten_left(law, x, y, z))
        right = MultiValue(_flatten_right(law, x, y, z))
    except KummerLawError as exc:
        exc.args = exc.args + (f"while expanding the triple ({x!r}, {y!r}, {z!r})",)
        raise
    ok, dist = multiset_match(left, right, tol, within=law.within)
    report.record(ok, dist, (x, y, z), left, right)
    return report


def check_unit(law: NValuedLaw, x, tol: Tolerance = DEFAULT_TOL) -> CheckReport:
    """e*x and x*e must both equal the n-fold multiset [x, ..., x]."""
    report = CheckReport(name=f"{law.name}:unit")
    target = MultiValue([x] * law.arity)
    for left in (law.product(law.unit, x), law.product(x, law.unit)):
        ok, dist = multiset_match(left, target, tol, within=law.within)
        report.record(ok, dist, (x,), left, target)
    return report


def check_inverse(law: NValuedLaw, x, tol: Tolerance = DEFAULT_TOL) -> CheckReport:
    """The unit must appear in inv(x)*x and in x*inv(x)."""
    report = CheckReport(name=f"{law.name}:inverse")
    ix = law.inverse(x)
    for prod in (law.product(ix, x), law.product(x, ix)):
        hit = any(law.within(law.unit, v, tol) for v in prod)
        report.record(hit, 0.0, (x,), prod, [law.unit])
    return report


def check_action(
    group: NValuedLaw,
    action: Callable[[Any, Any], MultiValue],
    x1,
    x2,
    y,
    tol: Tolerance = DEFAULT_TOL,
    within: Callable[[Any, Any, Tolerance], bool] = element_within,
) -> CheckReport:
    """Mixed associativity x1 o (x2 o y) = (x1 * x2) o y, plus e o y = [y,...]."""
    report = CheckReport(name=f"{group.name}:action")
    left: list = []
    for w in action(x2, y):
        left.extend(action(x1, w))
    right: list = []
    for g in group.product(x1, x2):
        right.extend(action(g, y))
    ok, dist = multiset_match(MultiValue(left), MultiValue(right), tol, within=within)
    report.record(ok, dist, (x1, x2, y), left, right)
    ey = action(group.unit, y)
    target = MultiValue([y] * group.arity)
    ok, dist = multiset_match(ey, target, tol, within=within)
    report.record(ok, dist, (y,), ey, target)
    return report


def check_groupoid(
    g: NGroupoid,
    fiber_samples: Sequence[tuple],
    tol: Tolerance = DEFAULT_TOL,
) -> CheckReport:
    """Fiberwise associativity, unit section and inverse for sample triples."""
    report = CheckReport(name=f"{g.name}:groupoid")
    for triple in fiber_samples:
        x1, x2, x3 = triple
        a = g.anchor(x1)
        if g.anchor(x2) != a or g.anchor(x3) != a:
            raise AnchorMismatch(f"triple {triple!r} spans several fibers")
        law = NValuedLaw(
            name=g.name,
            arity=g.arity,
            product=g.product,
            unit=g.unit(a),
            inverse=g.inverse,
            within=g.within,
        )
        report.merge(check_associativity(law, x1, x2, x3, tol))
        report.merge(check_unit(law, x1, tol))
        report.merge(check_inverse(law, x1, tol))
    report.name = f"{g.name}:groupoid"
    return report


def run_law_suite(
    law: NValuedLaw,
    sampler: Callable[[SampleStream], Any],
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOL,
    max_resamples: int = 1000,
) -> CheckReport:
    """Associativity on `samples` seeded triples plus unit/inverse per sample.

    Samples that raise a degenerate-input error are redrawn and counted in
    ``resamples``.
    """
    stream = SampleStream(seed)
    report = CheckReport(name=f"{law.name}:axioms")
    done = 0
    budget = samples + max_resamples
    while done < samples and budget > 0:
        budget -= 1
        x, y, z = sampler(stream), sampler(stream), sampler(stream)
        try:
            report.merge(check_associativity(law, x, y, z, tol))
            report.merge(check_unit(law, x, tol))
            report.merge(check_inverse(law, y, tol))
        except DEGENERATE_INPUT:
            report.resamples += 1
            continue
        done += 1
    if done < samples:
        # hitting the degeneracy locus this often is itself a failure
        report.failures.append(
            {
                "inputs": [],
                "left": [],
                "right": [],
                "distance": None,
                "note": f"resample budget exhausted after {done}/{samples} samples",
            }
        )
    report.name = f"{law.name}:axioms"
    return report
