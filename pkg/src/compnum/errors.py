"""Exception types shared across the package."""


class MalformedInputError(ValueError):
    """Raised for unusable graph data: loops, out-of-range vertices, bad files."""


class UnsupportedSizeError(ValueError):
    """Raised when an exact operation is asked to exceed its size cap."""
