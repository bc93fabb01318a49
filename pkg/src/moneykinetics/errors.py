"""Exception types shared across the package."""


class MoneyKineticsError(Exception):
    """Base class for all package errors."""


class InvalidPopulation(MoneyKineticsError):
    """Population size below the minimum of two agents."""


class InvalidAgent(MoneyKineticsError):
    """Agent index outside the ledger."""


class InvalidRatio(MoneyKineticsError):
    """Reserve ratio outside (0, 1]."""


class OverflowAbort(MoneyKineticsError):
    """A balance left the safe int64 range; the run is aborted."""


class ScenarioError(MoneyKineticsError):
    """Bad scenario file or configuration value."""


class EnergyTableError(MoneyKineticsError):
    """Malformed energy CSV; carries the offending row and column."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        loc = ""
        if row is not None:
            loc = f" (row {row}" + (f", column {column!r}" if column else "") + ")"
        super().__init__(message + loc)
        self.row = row
        self.column = column


class EmptyDataset(EnergyTableError):
    """No usable records in the input."""

    def __init__(self, message: str = "empty dataset"):
        super().__init__(message)


class UndefinedCurve(MoneyKineticsError):
    """Lorenz curve is undefined (no positive mass)."""


class DomainError(MoneyKineticsError):
    """Argument outside the mathematical domain of the function."""
