"""Exception hierarchy shared across the package."""

from __future__ import annotations


class SnqamError(Exception):
    """Base class for all errors raised by this package."""


class LexiconError(SnqamError):
    """A lexicon file is missing, unreadable, or malformed."""


class CorpusError(SnqamError):
    """A corpus file or post record violates the input contract."""


class StatsError(SnqamError):
    """A statistic was requested on input it is not defined for."""


class ConstantInputError(StatsError):
    """Rank correlation is undefined when one side has no variation."""


class ForestError(SnqamError):
    """Invalid training data or configuration for the random forest."""


class ModelError(SnqamError):
    """A quality model is unusable for scoring."""


class CalibrationError(ModelError):
    """Calibration inputs cannot produce a valid model."""


class ModelVersionError(ModelError):
    """The model file was written by an incompatible format version."""


class ModelChecksumError(ModelError):
    """The model file content does not match its recorded checksum."""


class ModelSchemaError(ModelError):
    """The model file is structurally invalid."""
