"""Exception types shared across the package.

Every failure mode raises a typed subclass of :class:`KfdError` so callers
(and the CLI exit-code mapping) can distinguish validation problems, I/O
problems, degenerate math, and training divergence.
"""


class KfdError(Exception):
    """Base class for all package errors."""


class FormatError(KfdError):
    """A binary feature file is malformed (bad magic, version, or size)."""


class DataError(KfdError):
    """Numerical input violates a precondition (non-finite, wrong shape, empty)."""


class ManifestError(KfdError):
    """A manifest entry is inconsistent (duplicate id, dangling path, bad ground truth)."""


class SpecError(KfdError):
    """A synthetic-dataset spec violates its invariants."""


class ClassError(KfdError):
    """A requested class label is not present in the manifest."""


class InsufficientDataError(KfdError):
    """Too few samples on one side of a two-class split."""


class DegenerateError(KfdError):
    """The discriminant direction is undefined (equal means, zero scatter)."""


class DivergenceError(KfdError):
    """Training produced a non-finite loss."""

    def __init__(self, message, iteration=None):
        super().__init__(message)
        self.iteration = iteration


class ConfigError(KfdError):
    """A configuration value or key is invalid."""


class RangeError(KfdError):
    """An evaluation point lies outside the curve's domain."""


class TooShortError(KfdError):
    """A series is too short for extrema detection (needs at least 5 points)."""
