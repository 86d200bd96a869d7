"""Exception types shared across the package."""


class CapExceededError(RuntimeError):
    """A configured desk-scale limit (enumeration, eigensolver, mask, search)
    would be exceeded by the requested computation."""


class InternalConsistencyError(RuntimeError):
    """A guaranteed structural property failed its verification scan.

    Raised only where failure would mean the implementation itself is wrong,
    never for properties that are merely conjectured or family-dependent.
    """
