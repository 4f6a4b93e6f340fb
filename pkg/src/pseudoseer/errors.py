"""Exception types shared across the package."""


class PseudoseerError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(PseudoseerError):
    """Invalid configuration value."""


class UnknownFieldError(ConfigError):
    """A field name outside the five searchable fields."""

    def __init__(self, field: str):
        super().__init__(f"unknown field: {field!r}")
        self.field = field


class CorpusError(PseudoseerError):
    """Corpus file cannot be read or is structurally unusable."""


class DuplicateDocumentError(PseudoseerError):
    """An arxiv_id was added to the index twice."""

    def __init__(self, arxiv_id: str):
        super().__init__(f"duplicate arxiv_id: {arxiv_id!r}")
        self.arxiv_id = arxiv_id


class IndexFormatError(PseudoseerError):
    """Index directory is missing, incomplete, or fails validation."""


class QueryError(PseudoseerError):
    """Unusable search query."""


class EmptyQueryError(QueryError):
    """Query is empty or whitespace-only."""


class QueryTooLongError(QueryError):
    """Query exceeds the maximum accepted length."""
