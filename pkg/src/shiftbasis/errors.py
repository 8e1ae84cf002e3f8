"""Exception types shared across the package."""


class DomainMismatchError(ValueError):
    """Operands live in different coefficient fields, orders or dimensions."""


class DimensionError(ValueError):
    """Matrix or vector shapes do not fit the requested operation."""


class ResourceLimitError(RuntimeError):
    """A configured size cap (minor count, determinant side) was exceeded."""


class RankDeficientError(ValueError):
    """The constant block F does not have the required full row rank."""

    def __init__(self, rank, required):
        super().__init__(f"F has rank {rank}, expected {required}: rows are linearly dependent")
        self.rank = rank
        self.required = required


class CompletionFailedError(RuntimeError):
    """No completing vector was found within the search budget."""


class InternalInvariantError(AssertionError):
    """A mathematically guaranteed property failed; indicates a bug."""
