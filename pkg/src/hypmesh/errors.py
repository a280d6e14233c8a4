"""Exception hierarchy.

Every error raised by the library derives from :class:`HypmeshError`.
Violated preconditions additionally derive from :class:`PreconditionError`
(and from :class:`ValueError`), which the CLI maps to exit status 3.
"""


class HypmeshError(Exception):
    pass


class PreconditionError(HypmeshError, ValueError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class EndpointIsRoot(PreconditionError):
    pass


class NotHyperbolic(PreconditionError):
    pass


class DegreeGapTooLarge(PreconditionError):
    pass


class DegreeTooLow(PreconditionError):
    pass


class DegreeMismatch(PreconditionError):
    pass


class RootAtZero(PreconditionError):
    pass


class MixedSigns(PreconditionError):
    pass


class LambdaNotAboveOne(PreconditionError):
    pass


class FormalDegreeMismatch(PreconditionError):
    pass


class ZeroGamma(PreconditionError):
    pass


class SequenceTooShort(PreconditionError):
    pass


class PrefixTooShort(PreconditionError):
    pass


class NotMultiplierSequencePrefix(PreconditionError):
    def __init__(self, k: int, message: str = ""):
        self.k = k
        super().__init__(message or f"truncation A_{k} is not a finite multiplier sequence")


class InvalidConfig(PreconditionError):
    pass


class RefinementBudgetExceeded(HypmeshError):
    pass


class ParseError(HypmeshError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")
