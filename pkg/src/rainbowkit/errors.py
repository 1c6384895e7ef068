"""Exception types shared across the package."""


class RainbowkitError(Exception):
    """Base class for all rainbowkit errors."""


class PreconditionError(RainbowkitError):
    """An operation was called outside its documented preconditions."""


class OverlapError(RainbowkitError):
    """Two edges share an endpoint where a matching was required."""

    def __init__(self, vertex) -> None:
        super().__init__(f"edges overlap at {vertex}")
        self.vertex = vertex


class NotAugmentingError(RainbowkitError):
    """A path failed the augmenting-path predicate."""


class MalformedPathError(RainbowkitError):
    """A node sequence is not a valid source-to-sink path."""


class InnerOverlapError(RainbowkitError):
    """Two paths of one group share an inner vertex."""

    def __init__(self, group, vertex) -> None:
        where = "path group" if group is None else f"group {group}"
        super().__init__(f"{where}: paths share inner vertex {vertex}")
        self.group = group
        self.vertex = vertex


class NoUnrepresentedColors(RainbowkitError):
    """Every color of the family is already represented."""


class GuaranteeViolation(RainbowkitError):
    """A guaranteed construction failed; this always indicates a bug."""


class DichotomyViolation(RainbowkitError):
    """Neither branch of the regimented/traversable dichotomy holds; a bug."""


class TheoremViolation(RainbowkitError):
    """A classification fell through every case the theory allows; a bug."""


class RowDuplicateError(RainbowkitError):
    """A matrix row repeats a symbol."""

    def __init__(self, row, symbol) -> None:
        super().__init__(f"row {row} repeats symbol {symbol!r}")
        self.row = row
        self.symbol = symbol


class BudgetExceeded(RainbowkitError):
    """An exhaustive computation hit its step budget."""


class InfeasibleSpec(RainbowkitError):
    """The requested instance shape cannot be realized."""


class InputError(RainbowkitError):
    """Malformed input data; the message pinpoints the offending field."""
