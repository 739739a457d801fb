"""Exception hierarchy shared by every module of the package."""


class SupersingularError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SupersingularError, ValueError):
    pass


class NotPrimePower(ConfigError):
    pass


class NotMonic(ConfigError):
    pass


class NotIrreducible(ConfigError):
    pass


class IdealIsT(ConfigError):
    """The ideal (T) is excluded: alpha would be zero."""


class FieldTooLarge(SupersingularError):
    """The requested level would need lookup tables beyond the configured cap."""


class LevelMismatch(SupersingularError, TypeError):
    pass


class RingMismatch(SupersingularError, TypeError):
    pass


class SearchSpaceTooLarge(SupersingularError):
    pass


class CapExceeded(SupersingularError):
    pass


class KTooLarge(SupersingularError, ValueError):
    pass


class SymbolicCoefficients(SupersingularError, TypeError):
    pass


class EvenCharacteristic(SupersingularError):
    """No delta with delta^q = -delta outside F_q exists when q is even."""


class IndexAtD(SupersingularError, ZeroDivisionError):
    """The a(n) recursion divides by [n], which vanishes when d divides n."""


class BracketVanishes(SupersingularError, ZeroDivisionError):
    pass


class NotInOmega(SupersingularError, ValueError):
    pass


class SplitDefect(SupersingularError):
    """Fewer than q distinct solutions of the tower equation were found."""


class NonIntegerGenus(SupersingularError, ArithmeticError):
    pass
