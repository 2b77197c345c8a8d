class BudgetExceeded(RuntimeError):
    """An exponential computation hit its configured cap."""


class VerificationError(AssertionError):
    """A structural claim checked by the library failed on concrete data."""
