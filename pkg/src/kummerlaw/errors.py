"""Typed errors raised by the computation kernel.

Batch suites treat the errors in DEGENERATE_INPUT as resampling signals
(the sample hit a denominator locus or another measure-zero configuration);
everything else is a genuine failure and propagates.
"""


class KummerLawError(Exception):
    """Base class for all kernel errors."""


class DegenerateLeadingCoefficient(KummerLawError):
    """Quadratic solver received a = 0."""


class ExactArithmeticError(KummerLawError):
    """Exact mode required a square root of a non-square rational."""


class ArityMismatch(KummerLawError):
    """Multiset comparison between different arities."""


class InvalidProjectivePoint(KummerLawError):
    """All homogeneous coordinates vanish."""


class DomainError(KummerLawError):
    """Input outside the law's domain (e.g. negative integer)."""


class AnchorMismatch(KummerLawError):
    """Groupoid operands do not share a fiber."""


class SingularDenominator(KummerLawError):
    """A law's denominator polynomial vanished at the sample."""


class CoincidentPoints(KummerLawError):
    """Chord-type formula evaluated at s1 = s2."""


class CoincidentSupport(KummerLawError):
    """Divisor support points collide; the rational formulas degenerate."""


class PointAtInfinity(KummerLawError):
    """Divisor of degree < 2; affine formulas do not apply."""


class BranchPoint(KummerLawError):
    """Support point with mu = 0; the direction field is undefined."""


class NumericallySingular(KummerLawError):
    """Divisor reduction hit a near-singular elimination step."""


class ThetaDivisor(KummerLawError):
    """Point lies on (or maps to) the vanishing locus of the entire function."""


class OffCurve(KummerLawError):
    """Recovered support point does not satisfy the curve equation."""


class InconsistentKummerPoint(KummerLawError):
    """Projective point admits no divisor lift (not on the quartic)."""


class LiftFailed(KummerLawError):
    """No preimage within tolerance under the embedding."""


class PairingSelectionFailed(KummerLawError):
    """No root pairing satisfies the selection constraint."""


class SingularPairing(KummerLawError):
    """The addition pairing vanished; quotient formulas undefined."""


class TrajectorySingular(KummerLawError):
    """Flow integration approached a singular configuration."""

    def __init__(self, message: str, reached_t: float = 0.0):
        super().__init__(message)
        self.reached_t = reached_t


#: Errors that batch suites may treat as "degenerate sample, draw again".
DEGENERATE_INPUT = (
    SingularDenominator,
    CoincidentPoints,
    CoincidentSupport,
    PointAtInfinity,
    BranchPoint,
    NumericallySingular,
    ThetaDivisor,
    LiftFailed,
    PairingSelectionFailed,
    SingularPairing,
)
