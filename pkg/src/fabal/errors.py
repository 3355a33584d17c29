class ResourceLimitError(RuntimeError):
    """A configured size cap (oracle dimension, enumeration subsets) was hit."""
