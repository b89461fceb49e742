"""Exception hierarchy.

Input problems (bad codes, unknown leaves, duplicate ids) derive from
``ValidationError``; bad run parameters (thresholds, chi, sizes) derive from
``ConfigError``. The CLI maps the two families to distinct exit codes.
"""


class FuzzMineError(Exception):
    pass


class ValidationError(FuzzMineError):
    pass


class ConfigError(FuzzMineError):
    pass


class MalformedCode(ValidationError):
    pass


class LevelOutOfRange(ValidationError):
    pass


class EmptyTaxonomy(ValidationError):
    pass


class DuplicateName(ValidationError):
    pass


class DuplicateCode(ValidationError):
    pass


class InconsistentDepth(ValidationError):
    pass


class UnknownLeafCode(ValidationError):
    pass


class DuplicateTransactionId(ValidationError):
    pass


class EmptyTransaction(ValidationError):
    pass


class TransactionNotInDataset(ValidationError):
    pass


class MixedLevels(ValidationError):
    pass


class EmptyItemset(ValidationError):
    pass


class ZeroAntecedentSupport(ValidationError):
    pass


class UniverseTooLarge(ValidationError):
    pass


class InvalidChi(ConfigError):
    pass


class InvalidThreshold(ConfigError):
    pass
