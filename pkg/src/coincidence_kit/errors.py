"""Exception hierarchy shared by all modules."""


class CoincidenceKitError(Exception):
    """Base class for every error raised by the library."""


class DescriptorError(CoincidenceKitError, ValueError):
    """A field, module or isometry description failed validation."""


class FieldMismatch(CoincidenceKitError, ValueError):
    pass


class DivisionByZero(CoincidenceKitError, ZeroDivisionError):
    pass


class NotRealField(CoincidenceKitError, ValueError):
    pass


class NotImaginaryField(CoincidenceKitError, ValueError):
    pass


class NotRepresentable(CoincidenceKitError, ValueError):
    """A requested quantity does not lie in the chosen ambient field."""


class NotSquare(CoincidenceKitError, ValueError):
    pass


class Singular(CoincidenceKitError, ValueError):
    pass


class NotSubmodule(CoincidenceKitError, ValueError):
    pass


class InfiniteIndex(CoincidenceKitError, ValueError):
    pass


class MixedAmbient(CoincidenceKitError, ValueError):
    pass


AmbientMismatch = MixedAmbient


class DimensionMismatch(CoincidenceKitError, ValueError):
    pass


class NotOrthogonal(CoincidenceKitError, ValueError):
    pass


class NotASimilarity(CoincidenceKitError, ValueError):
    pass


class NotAKModule(CoincidenceKitError, ValueError):
    pass


class ZeroElement(CoincidenceKitError, ValueError):
    pass


class InternalMismatch(CoincidenceKitError, AssertionError):
    """Two independent computations disagreed; indicates an arithmetic bug."""


class PerfectPower(CoincidenceKitError, ValueError):
    pass


class UnsupportedM(CoincidenceKitError, ValueError):
    pass


class InvalidDiscriminant(CoincidenceKitError, ValueError):
    pass


class UnsupportedModule(CoincidenceKitError, ValueError):
    pass
