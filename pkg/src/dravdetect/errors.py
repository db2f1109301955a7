"""Exception types shared across the package.

The CLI maps these to stable exit codes: UsageError -> 1,
DataError (and subclasses) -> 2, anything else -> 3.
"""


class UsageError(Exception):
    """Bad flags, bad config, unusable parameter combinations."""


class DataError(Exception):
    """Malformed or inconsistent input data."""


class BundleFormatError(DataError):
    """Model bundle file is corrupt or not a bundle at all."""


class BundleVersionError(DataError):
    """Model bundle was written by an incompatible format version."""
