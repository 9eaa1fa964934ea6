"""Exception taxonomy shared across the toolkit.

The CLI maps these onto stable exit codes: ConfigError -> 2,
I/O (OSError) -> 3, NumericError -> 4.
"""


class ShapeError(ValueError):
    """Operand shapes are incompatible with the requested operation."""


class ArgumentError(ValueError):
    """A scalar argument is out of its documented range."""


class ContractError(RuntimeError):
    """A documented precondition between components was violated."""


class ConfigError(ValueError):
    """A configuration document is inconsistent or contains unknown keys."""


class NumericError(ArithmeticError):
    """A numerical routine failed (singular system, divergence, NaN)."""


class IncompatibilityError(ValueError):
    """Two artifacts (e.g. checkpoints) do not share the same layout."""
