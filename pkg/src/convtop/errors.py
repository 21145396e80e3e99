"""Exception types shared across modules, mapped to CLI exit codes."""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class CapExceededError(RuntimeError):
    """A configured cap makes the requested computation too large (exit 3)."""


class BudgetExceededError(RuntimeError):
    """A bounded search ran out of its node budget (exit 3)."""


class InternalCheckError(AssertionError):
    """Two independent routes to the same quantity disagreed: a bug."""
