"""Shared exception types."""


class BreakparkError(Exception):
    pass


class GraphFormatError(BreakparkError):
    """Malformed graph file or invalid multiplicity matrix."""


class PreconditionError(BreakparkError):
    """An operation was called outside its stated domain."""


class BudgetExceededError(BreakparkError):
    """An enumeration or series computation would exceed the configured budget."""


class InternalInvariantError(BreakparkError):
    """A uniqueness or integrality assertion failed; indicates a bug."""
