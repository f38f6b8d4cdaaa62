"""Exception types shared across the package."""

import os

DEFAULT_BUDGET = 1000


class BudgetError(RuntimeError):
    """An exhaustive enumeration would exceed its configured size limit."""


class ComplexError(ValueError):
    """A complex (or a request on it) is malformed."""


class CubicalityError(ComplexError):
    """A face poset failed cubicality validation."""


class InputParseError(ValueError):
    """A JSON document does not follow any of the accepted input schemas."""


def enumeration_budget(budget: int | None = None) -> int:
    """Maximum number of nonempty cells a complex may have before chain enumeration.

    An explicit argument wins, then the ``CUBARIX_BUDGET`` environment
    variable, then :data:`DEFAULT_BUDGET`.
    """
    if budget is not None:
        value = int(budget)
    else:
        env = os.environ.get("CUBARIX_BUDGET")
        value = int(env) if env else DEFAULT_BUDGET
    if value <= 0:
        raise ValueError("budget must be positive")
    return value
