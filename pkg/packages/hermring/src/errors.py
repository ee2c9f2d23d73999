"""Exception hierarchy for mathematical and format failures

Every error derives from ValueError so callers that already guard with
``except ValueError`` keep working. Scripts map HermringError to exit code 1.
"""


class HermringError(ValueError):
    """Base class for all library failures"""


class UnsupportedCaseError(HermringError):
    """Requested field, index, level or divisor is outside the supported set"""


class ParityError(HermringError):
    """Weight parity is incompatible with the requested construction"""


class PrecisionError(HermringError):
    """Operands do not carry enough Fourier coefficients for the request"""


class InexactDivisionError(HermringError):
    """A division left a nonzero remainder within the working precision

    This is a meaningful outcome (the dividend is not in the ideal generated
    by the divisor), not a programming error.
    """


class RankDeficiencyError(HermringError):
    """A basis construction fell short of the expected dimension"""


class InconsistentSystemError(HermringError):
    """A linear system has no solution, or no unique one where required"""


class LedgerFormatError(HermringError):
    """A coefficient ledger could not be parsed"""
