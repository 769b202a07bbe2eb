"""Exception types shared across branchbox."""


class BranchboxError(Exception):
    pass


class UsageError(BranchboxError, ValueError):
    """Invalid arguments at an API or CLI boundary."""


class LabelError(UsageError):
    """A partition or signature is not a valid label for the requested group."""


class StableRangeError(BranchboxError, ValueError):
    """A stable-range precondition fails under the enforcing policy."""


class InternalInvariantError(BranchboxError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class BudgetError(BranchboxError, RuntimeError):
    """A requested computation exceeds the configured size budget."""


class StableRangeWarning(UserWarning):
    """Emitted when a formula is evaluated outside its guaranteed range."""
