"""Arithmetic substrate: scalars, multisets, projective points.

Scalars are plain Python values in one of two regimes:

* floating -- ``complex`` / ``float`` (double precision),
* exact -- ``int`` / ``fractions.Fraction``.

The regime is decided per computation by the values involved: a product is
exact iff every operand is exact.  Exact mode never takes square roots unless
the radicand is a perfect rational square; it exists for polynomial-identity
checks, not for general root extraction.

``MultiValue`` is an ordered container read as an unordered multiset: it is
the codomain of every multivalued product, and ``multiset_equal`` provides
the tolerance-aware equality that underlies every associativity check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable, Iterable, Iterator, Sequence

from .errors import (
    ArityMismatch,
    DegenerateLeadingCoefficient,
    ExactArithmeticError,
    InvalidProjectivePoint,
)

Scalar = Any  # complex | float | int | Fraction


@dataclass(frozen=True)
class Tolerance:
    """Relative/absolute tolerance pair; both zero means exact comparison."""

    rel: float = 1e-9
    abs: float = 1e-9

    def __post_init__(self):
        if not (math.isfinite(self.rel) and math.isfinite(self.abs)):
            raise ValueError("tolerance components must be finite")
        if self.rel < 0 or self.abs < 0:
            raise ValueError("tolerance components must be nonnegative")


DEFAULT_TOL = Tolerance()
EXACT = Tolerance(0.0, 0.0)


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(*xs: Scalar) -> bool:
    return all(is_exact(x) for x in xs)


def as_complex(x: Scalar) -> complex:
    if isinstance(x, Fraction):
        return complex(float(x))
    return complex(x)


def magnitude(x: Scalar) -> float:
    if isinstance(x, Fraction):
        return abs(float(x))
    return abs(complex(x))


def scalar_close(a: Scalar, b: Scalar, tol: Tolerance) -> bool:
    """Combined relative/absolute closeness; exact equality in exact mode."""
    if is_exact(a) and is_exact(b):
        return a == b
    ca, cb = as_complex(a), as_complex(b)
    return abs(ca - cb) <= tol.abs + tol.rel * max(abs(ca), abs(cb))


def scalar_distance(a: Scalar, b: Scalar) -> float:
    if is_exact(a) and is_exact(b):
        return 0.0 if a == b else math.inf
    return abs(as_complex(a) - as_complex(b))


def rational_sqrt(x: Fraction) -> Fraction:
    """Square root of a perfect-square rational; ExactArithmeticError otherwise."""
    x = Fraction(x)
    if x < 0:
        raise ExactArithmeticError("negative radicand in exact mode")
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ExactArithmeticError(f"{x} is not a perfect rational square")
    return Fraction(rn, rd)


class MultiValue:
    """An n-element unordered multiset stored as an ordered tuple."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Any]):
        self.values = tuple(values)
        if not self.values:
            raise ValueError("MultiValue needs at least one element")

    @property
    def arity(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self) -> str:
        inner = ", ".join(repr(v) for v in self.values)
        return f"[{inner}]"


@dataclass(frozen=True)
class ProjPoint:
    """Point of CP^n as an (n+1)-tuple of homogeneous coordinates."""

    coords: tuple

    def __init__(self, coords: Sequence[Scalar]):
        coords = tuple(coords)
        if not coords:
            raise InvalidProjectivePoint("empty coordinate vector")
        if all(magnitude(c) == 0.0 for c in coords):
            raise InvalidProjectivePoint("all homogeneous coordinates vanish")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def scaled(self, factor: Scalar) -> "ProjPoint":
        return ProjPoint(tuple(factor * c for c in self.coords))

    def __repr__(self) -> str:
        return "(" + " : ".join(repr(c) for c in self.coords) + ")"


def fs_distance(p: ProjPoint, q: ProjPoint) -> float:
    """Fubini-Study-type distance 1 - |<p,q>|^2 / (|p|^2 |q|^2) in [0, 1]."""
    if len(p.coords) != len(q.coords):
        raise ArityMismatch("projective points of different dimension")
    pc = [as_complex(c) for c in p.coords]
    qc = [as_complex(c) for c in q.coords]
    # scale defensively; coordinates can span many orders of magnitude
    sp = max(abs(c) for c in pc)
    sq = max(abs(c) for c in qc)
    pc = [c / sp for c in pc]
    qc = [c / sq for c in qc]
    inner = sum(a * b.conjugate() for a, b in zip(pc, qc))
    np2 = sum(abs(a) ** 2 for a in pc)
    nq2 = sum(abs(b) ** 2 for b in qc)
    return max(0.0, 1.0 - abs(inner) ** 2 / (np2 * nq2))


def proj_equal(p: ProjPoint, q: ProjPoint, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Projective equality: exact cross-multiplication or FS distance <= rel."""
    if len(p.coords) != len(q.coords):
        raise ArityMismatch("projective points of different dimension")
    if all_exact(*p.coords) and all_exact(*q.coords):
        n = len(p.coords)
        for i in range(n):
            for j in range(i + 1, n):
                if p.coords[i] * q.coords[j] != p.coords[j] * q.coords[i]:
                    return False
        return True
    return fs_distance(p, q) <= max(tol.rel, tol.abs)


def solve_quadratic(a: Scalar, b: Scalar, c: Scalar) -> MultiValue:
    """Both roots of a Z^2 + b Z + c, numerically stable in floating mode.

    Exact operands with a perfect-square discriminant yield exact rational
    roots; otherwise the roots are complex doubles (exact mode never takes
    square roots, so exact identity checks compare coefficients instead).
    a = 0 is rejected: every law in this kernel passes a genuine quadratic.
    """
    if magnitude(a) == 0.0:
        if magnitude(b) == 0.0 and magnitude(c) == 0.0:
            raise DegenerateLeadingCoefficient("all coefficients vanish")
        raise DegenerateLeadingCoefficient("leading coefficient is zero")
    if all_exact(a, b, c):
        fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
        try:
            root = rational_sqrt(fb * fb - 4 * fa * fc)
        except ExactArithmeticError:
            pass  # irrational roots: fall through to floating arithmetic
        else:
            return MultiValue(((-fb + root) / (2 * fa), (-fb - root) / (2 * fa)))
    ca, cb, cc = as_complex(a), as_complex(b), as_complex(c)
    if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in (ca, cb, cc)):
        raise ValueError("quadratic coefficients must be finite")
    disc = cb * cb - 4 * ca * cc
    root = cmath.sqrt(disc)
    # pick the sign that avoids cancellation in b + root
    if (cb.conjugate() * root).real < 0:
        root = -root
    q = -(cb + root) / 2
    if q == 0:
        # b = 0 and c = 0 up to rounding: double root at 0
        return MultiValue((0j, 0j))
    return MultiValue((q / ca, cc / q))


# ---------------------------------------------------------------------------
# element comparison dispatch
#
# Multiset elements are scalars, coordinate tuples, or projective points;
# the two hooks below give each its natural distance and closeness notion.
# ---------------------------------------------------------------------------

def element_distance(a: Any, b: Any) -> float:
    if isinstance(a, ProjPoint) and isinstance(b, ProjPoint):
        if all_exact(*a.coords) and all_exact(*b.coords):
            return 0.0 if proj_equal(a, b, EXACT) else math.inf
        return fs_distance(a, b)
    if isinstance(a, (tuple, list)) and isinstance(b, (tuple, list)):
        if len(a) != len(b):
            return math.inf
        return max(element_distance(x, y) for x, y in zip(a, b))
    return scalar_distance(a, b)


def element_within(a: Any, b: Any, tol: Tolerance) -> bool:
    if isinstance(a, ProjPoint) and isinstance(b, ProjPoint):
        return proj_equal(a, b, tol)
    if isinstance(a, (tuple, list)) and isinstance(b, (tuple, list)):
        if len(a) != len(b):
            return False
        return all(element_within(x, y, tol) for x, y in zip(a, b))
    return scalar_close(a, b, tol)


def multiset_match(
    A: MultiValue,
    B: MultiValue,
    tol: Tolerance = DEFAULT_TOL,
    within: Callable[[Any, Any, Tolerance], bool] | None = None,
    dist: Callable[[Any, Any], float] | None = None,
) -> tuple[bool, float]:
    """Best pairing of A against B: (matched, max pair distance).

    Exhaustive over all pairings for arity <= 4; greedy nearest-neighbour
    with verification beyond that.  When no pairing fits, the returned
    distance is the best attempt's worst pair (diagnostic value).
    """
    if A.arity != B.arity:
        raise ArityMismatch(f"arity {A.arity} vs {B.arity}")
    within = within or element_within
    dist = dist or element_distance
    n = A.arity
    if n <= 4:
        best_ok: float | None = None
        best_any = math.inf
        for perm in permutations(range(n)):
            ok = True
            worst = 0.0
            for i in range(n):
                a, b = A[i], B[perm[i]]
                worst = max(worst, dist(a, b))
                if not within(a, b, tol):
                    ok = False
            if ok and (best_ok is None or worst < best_ok):
                best_ok = worst
            best_any = min(best_any, worst)
        if best_ok is not None:
            return True, best_ok
        return False, best_any
    # greedy-then-verify
    used = [False] * n
    worst = 0.0
    for a in A:
        j_best, d_best = -1, math.inf
        for j, b in enumerate(B):
            if used[j]:
                continue
            d = dist(a, b)
            if d < d_best:
                j_best, d_best = j, d
        used[j_best] = True
        worst = max(worst, d_best)
        if not within(a, B[j_best], tol):
            return False, worst
    return True, worst


def multiset_equal(
    A: MultiValue,
    B: MultiValue,
    tol: Tolerance = DEFAULT_TOL,
    within: Callable[[Any, Any, Tolerance], bool] | None = None,
) -> bool:
    ok, _ = multiset_match(A, B, tol, within=within)
    return ok


# ---------------------------------------------------------------------------
# JSON codecs
#
# Wire formats: complex -> [re, im]; exact rational -> "p/q" (integers stay
# plain numbers); projective point -> array of scalars.
# ---------------------------------------------------------------------------

def scalar_to_json(x: Scalar):
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    z = complex(x)
    if z.imag == 0.0:
        r = z.real
        return int(r) if r.is_integer() and abs(r) < 2**53 else r
    return [z.real, z.imag]


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return complex(obj)
    if isinstance(obj, str):
        parts = obj.split("/")
        if len(parts) == 1:
            return Fraction(parts[0])
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
        raise ValueError(f"malformed rational literal {obj!r}")
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return complex(float(obj[0]), float(obj[1]))
    raise ValueError(f"cannot decode scalar from {obj!r}")


def value_to_json(v):
    """Encode a multiset element (scalar, tuple, ProjPoint, MultiValue)."""
    if isinstance(v, ProjPoint):
        return [scalar_to_json(c) for c in v.coords]
    if isinstance(v, MultiValue):
        return [value_to_json(x) for x in v]
    if isinstance(v, (tuple, list)):
        return [value_to_json(x) for x in v]
    return scalar_to_json(v)
