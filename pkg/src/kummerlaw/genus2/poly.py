"""Dense univariate polynomial helpers over complex floats.

Coefficients are ascending-order lists; the zero polynomial is [].  Degrees
here never exceed six, so plain list arithmetic beats any heavier machinery.
Division and gcd steps truncate coefficients below a scale-relative
threshold: divisor reduction feeds nearly-cancelling remainders through
these routines, and the threshold is what separates "zero up to rounding"
from genuine structure.
"""

from __future__ import annotations

from ..errors import NumericallySingular

EPS = 1e-10


def trim(p: list, scale: float | None = None) -> list:
    if not p:
        return []
    sc = scale if scale is not None else max(abs(c) for c in p)
    cut = EPS * max(sc, 1.0)
    q = list(p)
    while q and abs(q[-1]) <= cut:
        q.pop()
    return q


def deg(p: list) -> int:
    return len(p) - 1


def padd(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return [
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    ]


def pneg(p: list) -> list:
    return [-c for c in p]


def psub(p: list, q: list) -> list:
    return padd(p, pneg(q))


def pmul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0j] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def peval(p: list, x):
    out = 0j if isinstance(x, complex) else 0
    for c in reversed(p):
        out = out * x + c
    return out


def pdivmod(p: list, q: list) -> tuple[list, list]:
    q = trim(q)
    if not q:
        raise NumericallySingular("division by a numerically zero polynomial")
    r = list(p)
    quo = [0j] * max(0, len(r) - len(q) + 1)
    lead = q[-1]
    while True:
        r = trim(r)
        if len(r) < len(q):
            break
        k = len(r) - len(q)
        f = r[-1] / lead
        quo[k] = f
        for i, c in enumerate(q):
            r[i + k] -= f * c
        r.pop()
    return trim(quo), trim(r)


def pmod(p: list, q: list) -> list:
    return pdivmod(p, q)[1]


def monic(p: list) -> list:
    p = trim(p)
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def pgcd_ext(a: list, b: list) -> tuple[list, list, list]:
    """Extended Euclid: (g, s, t) with s*a + t*b = g, g monic (or [])."""
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [1 + 0j], []
    t0, t1 = [], [1 + 0j]
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]
