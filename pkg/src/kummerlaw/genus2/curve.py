"""Genus-2 curve mu^2 = s^5 + l4 s^3 + l6 s^2 + l8 s + l10 and its points."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import OffCurve
from ..sampling import SampleStream
from ..scalars import DEFAULT_TOL, Scalar, Tolerance, as_complex, scalar_close


@dataclass(frozen=True)
class CurveG2:
    """Monic quintic model; the rational limit is all parameters zero."""

    l4: Scalar = 0
    l6: Scalar = 0
    l8: Scalar = 0
    l10: Scalar = 0

    def f(self, s):
        return s ** 5 + self.l4 * s ** 3 + self.l6 * s ** 2 + self.l8 * s + self.l10

    def fprime(self, s):
        return 5 * s ** 4 + 3 * self.l4 * s ** 2 + 2 * self.l6 * s + self.l8

    def f_coeffs(self) -> list:
        return [
            as_complex(self.l10),
            as_complex(self.l8),
            as_complex(self.l6),
            as_complex(self.l4),
            0j,
            1 + 0j,
        ]

    def to_json(self) -> dict:
        from ..scalars import scalar_to_json

        return {
            "lambda4": scalar_to_json(self.l4),
            "lambda6": scalar_to_json(self.l6),
            "lambda8": scalar_to_json(self.l8),
            "lambda10": scalar_to_json(self.l10),
        }


@dataclass(frozen=True)
class AffinePointG2:
    s: Scalar
    mu: Scalar

    def validate(self, curve: CurveG2, tol: Tolerance = DEFAULT_TOL) -> "AffinePointG2":
        if not scalar_close(self.mu ** 2, curve.f(self.s), tol):
            raise OffCurve(f"({self.s!r}, {self.mu!r}) not on the curve")
        return self


def random_curve(stream: SampleStream, radius: float = 1.0) -> CurveG2:
    """Random curve with parameters in the given disk.

    A random quintic has five distinct roots with probability one; suites
    that need nondegeneracy resample on downstream typed errors instead of
    testing the discriminant.
    """
    return CurveG2(
        stream.complex_disk(radius),
        stream.complex_disk(radius),
        stream.complex_disk(radius),
        stream.complex_disk(radius),
    )
