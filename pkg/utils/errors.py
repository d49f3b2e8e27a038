"""
Exception hierarchy for gaugelab.

Library code raises these; only main.py turns them into exit codes.
"""


class GaugeLabError(Exception):
    """Base class for every error raised by gaugelab."""


class GroupSpecError(GaugeLabError):
    """A group, generating set or element string could not be parsed or is malformed."""


class CanonicalFormError(GaugeLabError):
    """Raw element data has no canonical form (singular matrix, non-positive rational...)."""


class GeneratorIndexError(GaugeLabError):
    """A word references a generator outside the declared generating set."""


class NumericRangeError(GaugeLabError):
    """A floating point computation left the representable range."""


class UnsupportedOperationError(GaugeLabError):
    """The operation is not defined for this kind of group."""


class ScaleNotFoundError(GaugeLabError):
    """A scale was asked for a value it cannot produce (element outside the enumerated ball)."""


class GroupMismatchError(GaugeLabError):
    """Two objects that must live on the same group do not."""


class DomainError(GaugeLabError):
    """Parameters outside the domain of an operation."""


class CommandError(GaugeLabError):
    """Command-line usage error."""
