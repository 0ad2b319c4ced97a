"""Error types shared across the package.

Every error carries the name of the module that raised it so the CLI can
emit single-line, machine-parsable diagnostics (``error: <module>: <message>``).
"""


class TaxauditError(Exception):
    """Base class for all user-facing errors."""

    module = "taxaudit"


class CorpusError(TaxauditError):
    module = "corpus"


class EmbeddingError(TaxauditError):
    module = "embedding"


class ReduceError(TaxauditError):
    module = "reduce"


class ClusterError(TaxauditError):
    module = "cluster"


class AlignError(TaxauditError):
    module = "align"


class ReportError(TaxauditError):
    module = "report"


class ConfigError(TaxauditError):
    module = "config"
