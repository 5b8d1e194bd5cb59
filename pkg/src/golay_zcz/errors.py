"""
Error types raised by the golay-zcz modules
"""


class GolayZczError(ValueError):
    """Base class for every domain error; the CLI reports these as `error: ...`"""


class OddModulusError(GolayZczError):
    """Negation requested on an odd modulus, where -1 is not a root of unity."""


class ModulusMismatchError(GolayZczError):
    pass


class LengthMismatchError(GolayZczError):
    pass


class ShapeError(GolayZczError):
    """A code that is not square, or whose sets disagree in length/modulus."""


class SetSizeMismatchError(GolayZczError):
    pass


class SignConditionError(GolayZczError):
    pass


class MateError(GolayZczError):
    pass


class InvalidCccError(GolayZczError):
    pass


class UnknownSeedError(GolayZczError):
    pass


class FileFormatError(GolayZczError):
    pass


class SeedDataError(GolayZczError):
    """A registry code failed verification when loaded."""
