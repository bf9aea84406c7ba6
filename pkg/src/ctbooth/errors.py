"""Exception types shared across the package."""


class CtboothError(Exception):
    """Base class for all package-specific errors."""


class WidthError(CtboothError, ValueError):
    """Invalid or unsupported operand width."""


class SchemeError(CtboothError, ValueError):
    """A truncation scheme violates a structural requirement.

    The message names the violated condition.
    """


class CostGuardError(CtboothError, RuntimeError):
    """An enumeration was refused because it exceeds the default cost guard."""


class NetlistError(CtboothError, ValueError):
    """A netlist is structurally malformed (undefined operand, bad cell)."""
