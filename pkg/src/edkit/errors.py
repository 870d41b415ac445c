"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all errors raised by edkit."""


class InvalidPermutation(ToolkitError):
    """Image sequence is not a bijection on {0, ..., degree-1}."""


class OrderLimitExceeded(ToolkitError):
    """A group (or search space) grew past the configured order limit."""


class InvalidSpec(ToolkitError):
    """Group construction parameters failed validation."""


class NotPrime(ToolkitError):
    """An argument that must be prime is not."""


class TrivialGroup(ToolkitError):
    """Operation is undefined for the trivial group."""


class NotAbelian(ToolkitError):
    """Operation requires an abelian group."""


class InternalPrimeSearchFailure(ToolkitError):
    """No suitable finite-field prime was found below the search bound."""


class TooManyIrreducibles(ToolkitError):
    """Brute-force subset enumeration refuses tables this large."""


class InvalidFactors(ToolkitError):
    """Invariant factors must be >= 2 and form a divisibility chain."""


class InvalidInput(ToolkitError):
    """Generic argument validation failure."""


class EmptyTable(ToolkitError):
    """A Jordan-constant table with no entries cannot produce bounds."""


class SearchBoundExceeded(ToolkitError):
    """A prime search in an arithmetic progression hit its cap."""


class UnfaithfulCharacters(ToolkitError):
    """Supplied characters cannot carry a faithful induced representation."""


class SizeLimitExceeded(ToolkitError):
    """An induced representation would exceed the dimension limit."""


class ParseError(ToolkitError):
    """A catalog or config file failed to parse."""


class DuplicateName(ToolkitError):
    """Catalog entries must have unique names."""
