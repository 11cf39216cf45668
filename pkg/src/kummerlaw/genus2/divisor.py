"""Reduced divisors in Mumford form and the composition/reduction group law.

A divisor is a pair (U, V): U monic of degree <= 2 cutting out the support,
V of lower degree interpolating the mu-values, with U | V^2 - f.  The group
law is classical composition followed by reduction; it is the independent
oracle against which every explicit addition formula in this package is
checked, so it deliberately shares no code with the theta/wp machinery.

All arithmetic is complex floating point.  Exact mode is not offered: the
mu-values of generic rational support are irrational.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from ..errors import NumericallySingular, OffCurve
from ..sampling import SampleStream
from ..scalars import scalar_to_json
from .curve import CurveG2
from .poly import deg, monic, padd, pdivmod, peval, pgcd_ext, pmod, pmul, pneg, psub, trim


@dataclass(frozen=True)
class MumfordDivisor:
    """Mumford pair (U, V); ascending coefficients, U monic, deg V < deg U."""

    U: tuple
    V: tuple

    @property
    def degree(self) -> int:
        return deg(list(self.U))

    @property
    def is_neutral(self) -> bool:
        return self.degree == 0

    def to_json(self) -> dict:
        return {
            "U": [scalar_to_json(c) for c in self.U[:-1]],  # monic implied
            "V": [scalar_to_json(c) for c in self.V],
        }

    def __repr__(self) -> str:
        return f"MumfordDivisor(U={list(self.U)!r}, V={list(self.V)!r})"


NEUTRAL = MumfordDivisor((1 + 0j,), ())


def _as_divisor(U: list, V: list) -> MumfordDivisor:
    U = monic(U)
    if not U:
        raise NumericallySingular("support polynomial collapsed to zero")
    return MumfordDivisor(tuple(U), tuple(trim(V)))


def divisor_from_points(p1: tuple, p2: tuple) -> MumfordDivisor:
    """Divisor with support {(s1, m1), (s2, m2)}, s1 != s2."""
    (s1, m1), (s2, m2) = p1, p2
    s1, m1, s2, m2 = complex(s1), complex(m1), complex(s2), complex(m2)
    if s1 == s2:
        raise NumericallySingular("coincident support points")
    U = [s1 * s2, -(s1 + s2), 1 + 0j]
    slope = (m1 - m2) / (s1 - s2)
    V = [m1 - slope * s1, slope]
    return MumfordDivisor(tuple(U), tuple(trim(V)))


def support_points(D: MumfordDivisor, curve: CurveG2) -> tuple:
    """Support ((s1, mu1), (s2, mu2)) of a degree-2 divisor."""
    if D.degree != 2:
        raise NumericallySingular("support_points needs a degree-2 divisor")
    c0, c1, _ = D.U
    disc = c1 * c1 - 4 * c0
    root = cmath.sqrt(disc)
    s1 = (-c1 + root) / 2
    s2 = (-c1 - root) / 2
    V = list(D.V)
    return (s1, peval(V, s1)), (s2, peval(V, s2))


def validate_divisor(D: MumfordDivisor, curve: CurveG2, tol: float = 1e-8) -> MumfordDivisor:
    """Check U | V^2 - f within a scale-relative tolerance."""
    if D.is_neutral:
        return D
    rem = pmod(psub(pmul(list(D.V), list(D.V)), curve.f_coeffs()), list(D.U))
    scale = max([abs(c) for c in D.U] + [abs(c) for c in D.V] + [1.0])
    if rem and max(abs(c) for c in rem) > tol * scale ** 5:
        raise OffCurve("V^2 - f is not divisible by U")
    return D


def cantor_add(D1: MumfordDivisor, D2: MumfordDivisor, curve: CurveG2) -> MumfordDivisor:
    """Composition and reduction of two reduced divisors."""
    U1, V1 = list(D1.U), list(D1.V)
    U2, V2 = list(D2.U), list(D2.V)
    if D1.is_neutral:
        return D2
    if D2.is_neutral:
        return D1
    f = curve.f_coeffs()

    d1, e1, e2 = pgcd_ext(U1, U2)
    d, c1, c2 = pgcd_ext(d1, padd(V1, V2))
    s1 = pmul(c1, e1)
    s2 = pmul(c1, e2)
    s3 = c2
    dd = pmul(d, d)
    U, rem = pdivmod(pmul(U1, U2), dd)
    if rem and max(abs(c) for c in rem) > 1e-6 * max(abs(c) for c in pmul(U1, U2)):
        raise NumericallySingular("inexact division in composition")
    num = padd(
        padd(pmul(pmul(s1, U1), V2), pmul(pmul(s2, U2), V1)),
        pmul(s3, padd(pmul(V1, V2), f)),
    )
    num, rem = pdivmod(num, d)
    V = pmod(num, U)

    # reduction: replace (U, V) by ((f - V^2)/U, -V mod U') until deg <= 2
    while deg(U) > 2:
        U_next, rem = pdivmod(psub(f, pmul(V, V)), U)
        U_next = monic(U_next)
        V = pmod(pneg(V), U_next) if U_next else []
        U = U_next
        if not U:
            raise NumericallySingular("reduction collapsed the support")
    U = monic(U)
    if not U:
        return NEUTRAL
    return _as_divisor(U, pmod(V, U))


def cantor_neg(D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(D.U, tuple(-c for c in D.V))


def cantor_sub(D1: MumfordDivisor, D2: MumfordDivisor, curve: CurveG2) -> MumfordDivisor:
    return cantor_add(D1, cantor_neg(D2), curve)


def divisor_distance(D1: MumfordDivisor, D2: MumfordDivisor) -> float:
    """Coefficientwise distance between Mumford pairs (inf if shapes differ)."""
    if D1.degree != D2.degree:
        return float("inf")
    dist = 0.0
    for a, b in zip(D1.U, D2.U):
        dist = max(dist, abs(complex(a) - complex(b)))
    v1 = list(D1.V) + [0j] * (2 - len(D1.V))
    v2 = list(D2.V) + [0j] * (2 - len(D2.V))
    for a, b in zip(v1, v2):
        dist = max(dist, abs(complex(a) - complex(b)))
    return dist


def random_divisor(
    stream: SampleStream,
    curve: CurveG2,
    min_separation: float = 0.3,
    min_mu: float = 0.15,
) -> MumfordDivisor:
    """Random generic divisor: separated support, off the branch locus."""
    while True:
        s1 = stream.complex_disk(1.5)
        s2 = stream.complex_disk(1.5)
        if abs(s1 - s2) < min_separation:
            continue
        m1 = cmath.sqrt(curve.f(s1))
        m2 = cmath.sqrt(curve.f(s2))
        if abs(m1) < min_mu or abs(m2) < min_mu:
            continue
        if stream.integer(0, 1):
            m1 = -m1
        if stream.integer(0, 1):
            m2 = -m2
        return divisor_from_points((s1, m1), (s2, m2))
