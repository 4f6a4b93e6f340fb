"""Pseudocode search engine.

Ingests LaTeX sources of scholarly papers, extracts algorithm
environments and the text around their references, indexes five fields
(title, abstract, authors, references, latex) in a positional inverted
index, and ranks queries with weighted multi-field BM25.  Served over an
HTTP JSON API and a CLI.
"""

from .analysis import (
    ANALYZER_VERSION,
    FIELDS,
    Token,
    analyzer_for,
    tokenize_latex,
    tokenize_text,
)
from .corpus import (
    PaperRecord,
    PseudocodeBlock,
    ReferenceContext,
    arxiv_url,
    clean_latex,
    extract_paper,
    extract_pseudocode,
    extract_references,
    load_corpus_file,
    parse_paper_metadata,
    record_from_dict,
    record_to_dict,
    write_corpus_file,
)
from .errors import (
    ConfigError,
    CorpusError,
    DuplicateDocumentError,
    EmptyQueryError,
    IndexFormatError,
    PseudoseerError,
    QueryError,
    QueryTooLongError,
    UnknownFieldError,
)
from .index import FieldStats, IndexReader, IndexWriter, TermPosting
from .ranking import (
    Bm25Params,
    DEFAULT_WEIGHTS,
    Phrase,
    SearchHit,
    SearchQuery,
    Snippet,
    Term,
    bm25_field_score,
    build_snippet,
    clause_field_score,
    parse_query,
    phrase_match,
    search,
)
from .service import ServiceConfig, canonical_json, create_app, load_config

__version__ = "1.0.0"

__all__ = [
    "ANALYZER_VERSION",
    "FIELDS",
    "Token",
    "analyzer_for",
    "tokenize_latex",
    "tokenize_text",
    "PaperRecord",
    "PseudocodeBlock",
    "ReferenceContext",
    "arxiv_url",
    "clean_latex",
    "extract_paper",
    "extract_pseudocode",
    "extract_references",
    "load_corpus_file",
    "parse_paper_metadata",
    "record_from_dict",
    "record_to_dict",
    "write_corpus_file",
    "ConfigError",
    "CorpusError",
    "DuplicateDocumentError",
    "EmptyQueryError",
    "IndexFormatError",
    "PseudoseerError",
    "QueryError",
    "QueryTooLongError",
    "UnknownFieldError",
    "FieldStats",
    "IndexReader",
    "IndexWriter",
    "TermPosting",
    "Bm25Params",
    "DEFAULT_WEIGHTS",
    "Phrase",
    "SearchHit",
    "SearchQuery",
    "Snippet",
    "Term",
    "bm25_field_score",
    "build_snippet",
    "clause_field_score",
    "parse_query",
    "phrase_match",
    "search",
    "ServiceConfig",
    "canonical_json",
    "create_app",
    "load_config",
    "__version__",
]
