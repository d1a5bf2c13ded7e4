"""Exception types shared across the package.

The CLI maps these onto process exit codes: usage and file-format problems
exit with 1, internal cross-check faults with 2.  A mathematical discovery
(a failed Vandiver or lambda test) is an ordinary result, not an exception;
the CLI reports it and exits with 3.
"""


class BernmodError(Exception):
    """Base class for every error raised by this package."""


class NotInvertible(BernmodError):
    """The element has no inverse for the given modulus (gcd > 1)."""


class ZeroResidue(BernmodError):
    """A nonzero residue was required."""


class SearchExhausted(BernmodError):
    """A bounded search ran out of candidates (defensive; should not happen)."""


class ModulusMismatch(BernmodError):
    """Operands live over different moduli."""


class EvenModulus(BernmodError):
    """2 is not invertible for this modulus, so the transform stack cannot run."""


class SizeMismatch(BernmodError):
    """Negacyclic operands have different ring sizes."""


class CountOutOfRange(BernmodError):
    """A truncated-transform count is negative or exceeds the transform length."""


class LengthMismatch(BernmodError):
    """Middle-product operands must have lengths exactly 2n-1 and n."""


class NonInvertibleLeadingTerm(BernmodError):
    """Series inversion needs an invertible constant coefficient."""


class BadRootOrder(BernmodError):
    """The supplied root of unity does not have the exact required order."""


class IndexOutOfRange(BernmodError):
    """A Bernoulli index is outside the testable range [2, p-3]."""


class OddIndex(BernmodError):
    """A Bernoulli index was odd where an even one is required."""


class DegenerateFactor(BernmodError):
    """A Vandiver product factor vanished mod q (impossible for valid input)."""


class CrossCheckFault(BernmodError):
    """Two redundant computations of the same quantity disagreed.

    This signals an implementation or hardware fault, never mathematics.
    """


class MethodDisagreement(CrossCheckFault):
    """The two Bernoulli table methods produced different tables."""


class ConsistencyFailure(CrossCheckFault):
    """A completed Bernoulli table failed the checksum identity."""


class SchemeDisagreement(CrossCheckFault):
    """The two Vandiver iteration schemes produced different products."""


class FormatError(BernmodError):
    """A certificate or checkpoint file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
