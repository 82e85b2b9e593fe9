"""Exception hierarchy shared by every module in the package."""


class DiagcountError(Exception):
    """Base class for all errors raised by diagcount."""


class NonOddPrime(DiagcountError, ValueError):
    pass


class BadDegree(DiagcountError, ValueError):
    pass


class ZeroArgument(DiagcountError, ValueError):
    pass


class NotAUnit(DiagcountError, ValueError):
    pass


class NotPAdicInteger(DiagcountError, ValueError):
    pass


class OutOfRange(DiagcountError, ValueError):
    pass


class BadPartition(DiagcountError, ValueError):
    pass


class HypothesisViolated(DiagcountError, ValueError):
    """A theorem or lemma precondition failed.

    ``condition`` holds the violated clause verbatim, e.g. ``"gcd(d,q-1)=1"``.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = f"hypothesis violated: {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DivisibilityFault(DiagcountError, ArithmeticError):
    pass


class PrecisionFault(DiagcountError, ArithmeticError):
    pass


class ToleranceFault(DiagcountError, ArithmeticError):
    pass


class NonIntegralValue(DiagcountError, ArithmeticError):
    """A p-adic sum that was expected to be integral has negative valuation."""
