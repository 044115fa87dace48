"""Exception types raised across the package."""


class PQHarmonicError(ValueError):
    """Base class for every domain error raised by pqharmonic."""


class DegenerateQuotient(PQHarmonicError):
    pass


class OutsideDisc(PQHarmonicError):
    pass


class VanishingDerivative(PQHarmonicError):
    pass


class ZeroDenominator(PQHarmonicError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownPreset(PQHarmonicError):
    pass


class InvalidWeights(PQHarmonicError):
    pass


class NotMember(PQHarmonicError):
    pass


class NonpositiveDenominator(PQHarmonicError):
    pass


class HypothesisViolated(PQHarmonicError):
    pass


class DegenerateDenominator(PQHarmonicError):
    pass


class PreconditionUnmet(PQHarmonicError):
    pass


class ParseError(PQHarmonicError):
    pass


class ValidationError(PQHarmonicError):
    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
