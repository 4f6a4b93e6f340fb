"""Query parsing, weighted multi-field BM25 scoring, and snippets.

Queries are OR-semantics bags of Term and Phrase clauses.  Each selected
field is scored independently (per-field df, doc count, and average
length), then the per-field scores are combined as a weighted sum with
the default weights {latex: 1, authors: 1, title: 2, abstract: 2,
references: 2}.  Phrases score as pseudo-terms whose tf is the count of
in-order adjacent occurrences.  Ties break on arxiv_id ascending.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._kernels import bm25_accumulate, shifted_intersect
from .analysis import FIELDS, analyzer_for, tokenize_text
from .errors import (
    ConfigError,
    EmptyQueryError,
    QueryError,
    QueryTooLongError,
    UnknownFieldError,
)
from .index import IndexReader

MAX_QUERY_LENGTH = 1024
DEFAULT_PAGE_SIZE = 10
MAX_PAGE_SIZE = 100
SNIPPET_MAX_CHARS = 200
MAX_SNIPPETS_PER_FIELD = 2

DEFAULT_WEIGHTS = {
    "latex": 1.0,
    "authors": 1.0,
    "title": 2.0,
    "abstract": 2.0,
    "references": 2.0,
}


@dataclass(frozen=True)
class Bm25Params:
    k1: float = 1.2
    b: float = 0.75


@dataclass(frozen=True)
class Term:
    term: str


@dataclass(frozen=True)
class Phrase:
    terms: tuple[str, ...]


@dataclass(frozen=True)
class SearchQuery:
    clauses: tuple
    fields: tuple[str, ...]
    page: int = 1
    page_size: int = DEFAULT_PAGE_SIZE


@dataclass
class Snippet:
    text: str
    highlights: list[tuple[int, int]]


@dataclass
class SearchHit:
    doc_id: int
    arxiv_id: str
    score: float
    matched_fields: tuple[str, ...]
    snippets: dict[str, list[Snippet]]
    title: str
    authors: str
    url: str


def parse_query(
    raw: str,
    selected_fields=(),
    page: int = 1,
    page_size: int = DEFAULT_PAGE_SIZE,
) -> SearchQuery:
    """Parse quoted phrases and loose terms; empty field set means all.

    A lone unmatched double quote is ignored and its tail parsed as loose
    terms.  Duplicate clauses collapse to one (set semantics); a quoted
    single word is the same clause as the bare word.
    """
    if len(raw) > MAX_QUERY_LENGTH:
        raise QueryTooLongError(
            f"query length {len(raw)} exceeds {MAX_QUERY_LENGTH}"
        )
    if not raw.strip():
        raise EmptyQueryError("query is empty")
    if page < 1:
        raise QueryError(f"page must be >= 1, got {page}")
    if not 1 <= page_size <= MAX_PAGE_SIZE:
        raise QueryError(f"size must be in [1, {MAX_PAGE_SIZE}], got {page_size}")
    for fld in selected_fields:
        if fld not in FIELDS:
            raise UnknownFieldError(fld)
    fields = tuple(f for f in FIELDS if f in set(selected_fields)) or FIELDS

    parts = raw.split('"')
    clauses: list = []
    seen = set()
    for i, part in enumerate(parts):
        quoted = i % 2 == 1 and not (i == len(parts) - 1 and len(parts) % 2 == 0)
        terms = [t.term for t in tokenize_text(part)]
        if not terms:
            continue
        if quoted and len(terms) > 1:
            new = [Phrase(tuple(terms))]
        else:
            new = [Term(t) for t in terms]
        for clause in new:
            if clause not in seen:
                seen.add(clause)
                clauses.append(clause)
    return SearchQuery(
        clauses=tuple(clauses), fields=fields, page=page, page_size=page_size
    )


def _idf(n_field_docs: int, doc_freq: int) -> float:
    return math.log(1.0 + (n_field_docs - doc_freq + 0.5) / (doc_freq + 0.5))


def _doc_positions(arrays, doc_id: int) -> np.ndarray | None:
    doc_ids, _, positions, starts = arrays
    i = int(np.searchsorted(doc_ids, doc_id))
    if i == len(doc_ids) or doc_ids[i] != doc_id:
        return None
    return positions[starts[i] : starts[i + 1]]


def _phrase_positions(per_term_arrays, doc_id: int) -> np.ndarray:
    """Positions where the full phrase starts in one document."""
    survivors = _doc_positions(per_term_arrays[0], doc_id)
    if survivors is None:
        return np.empty(0, dtype=np.uint32)
    for delta, arrays in enumerate(per_term_arrays[1:], start=1):
        nxt = _doc_positions(arrays, doc_id)
        if nxt is None or not survivors.size:
            return np.empty(0, dtype=np.uint32)
        survivors = shifted_intersect(
            np.ascontiguousarray(survivors), np.ascontiguousarray(nxt), delta
        )
    return survivors


def _phrase_postings(reader: IndexReader, fld: str, terms) -> tuple | None:
    """(doc_ids, tfs) of the phrase pseudo-term, or None if it never occurs."""
    per_term = []
    for term in terms:
        arrays = reader.term_arrays(fld, term)
        if arrays is None:
            return None
        per_term.append(arrays)
    candidates = per_term[0][0]
    for arrays in per_term[1:]:
        candidates = np.intersect1d(candidates, arrays[0])
        if not candidates.size:
            return None
    doc_ids, tfs = [], []
    for doc_id in candidates.tolist():
        count = _phrase_positions(per_term, doc_id).size
        if count:
            doc_ids.append(doc_id)
            tfs.append(count)
    if not doc_ids:
        return None
    return (
        np.array(doc_ids, dtype=np.uint32),
        np.array(tfs, dtype=np.uint32),
    )


def _clause_postings(reader: IndexReader, fld: str, clause) -> tuple | None:
    if isinstance(clause, Term):
        arrays = reader.term_arrays(fld, clause.term)
        if arrays is None:
            return None
        return arrays[0], arrays[1]
    return _phrase_postings(reader, fld, clause.terms)


def bm25_field_score(
    reader: IndexReader,
    query_terms,
    doc_id: int,
    fld: str,
    params: Bm25Params | None = None,
) -> float:
    """Sum of per-term BM25 contributions; duplicate terms count once."""
    params = params or Bm25Params()
    stats = reader.field_stats(fld)
    n = stats.doc_count_with_field
    if not n:
        return 0.0
    avglen = stats.avg_field_length
    length = float(reader.field_lengths(fld)[doc_id])
    score = 0.0
    for term in dict.fromkeys(query_terms):
        arrays = reader.term_arrays(fld, term)
        if arrays is None:
            continue
        doc_ids, tfs = arrays[0], arrays[1]
        i = int(np.searchsorted(doc_ids, doc_id))
        if i == len(doc_ids) or doc_ids[i] != doc_id:
            continue
        tf = float(tfs[i])
        idf = _idf(n, len(doc_ids))
        denom = tf + params.k1 * (
            1.0 - params.b + params.b * (length / avglen)
        )
        score += (idf * tf * (params.k1 + 1.0)) / denom
    return score


def phrase_match(reader: IndexReader, doc_id: int, fld: str, terms) -> int:
    """How many times the terms occur adjacently in order in the field."""
    if not terms:
        return 0
    per_term = []
    for term in terms:
        arrays = reader.term_arrays(fld, term)
        if arrays is None:
            return 0
        per_term.append(arrays)
    return int(_phrase_positions(per_term, doc_id).size)


def clause_field_score(
    reader: IndexReader,
    clause,
    doc_id: int,
    fld: str,
    params: Bm25Params | None = None,
) -> float:
    """One clause's BM25 contribution in one field of one document."""
    if isinstance(clause, Term):
        return bm25_field_score(reader, [clause.term], doc_id, fld, params)
    params = params or Bm25Params()
    stats = reader.field_stats(fld)
    if not stats.doc_count_with_field:
        return 0.0
    postings = _phrase_postings(reader, fld, clause.terms)
    if postings is None:
        return 0.0
    doc_ids, tfs = postings
    i = int(np.searchsorted(doc_ids, doc_id))
    if i == len(doc_ids) or doc_ids[i] != doc_id:
        return 0.0
    tf = float(tfs[i])
    idf = _idf(stats.doc_count_with_field, len(doc_ids))
    length = float(reader.field_lengths(fld)[doc_id])
    denom = tf + params.k1 * (
        1.0 - params.b + params.b * (length / stats.avg_field_length)
    )
    return (idf * tf * (params.k1 + 1.0)) / denom


def _query_term_set(query: SearchQuery) -> set[str]:
    terms = set()
    for clause in query.clauses:
        if isinstance(clause, Term):
            terms.add(clause.term)
        else:
            terms.update(clause.terms)
    return terms


def _char_for_byte(text: str) -> dict[int, int]:
    inv = {}
    byte = 0
    for i, ch in enumerate(text):
        inv[byte] = i
        cp = ord(ch)
        byte += 1 if cp < 0x80 else 2 if cp < 0x800 else 3 if cp < 0x10000 else 4
    inv[byte] = len(text)
    return inv


def build_snippet(
    reader: IndexReader, doc_id: int, fld: str, query: SearchQuery
) -> list[Snippet]:
    """Fragments around the first two match sites not already covered.

    Each fragment is at most 200 characters, clipped to the field text,
    and carries highlight ranges (char offsets within the fragment) for
    every query-term occurrence that lies fully inside it.
    """
    text = reader.stored(doc_id).fields[fld]
    wanted = _query_term_set(query)
    tokens = analyzer_for(fld)(text)
    if text.isascii():
        spans = [
            (t.start_offset, t.end_offset) for t in tokens if t.term in wanted
        ]
    else:
        inv = _char_for_byte(text)
        spans = [
            (inv[t.start_offset], inv[t.end_offset])
            for t in tokens
            if t.term in wanted
        ]
    if not spans:
        return []
    snippets: list[Snippet] = []
    site: int | None = 0
    while site is not None and len(snippets) < MAX_SNIPPETS_PER_FIELD:
        start, end = spans[site]
        lo = max(0, (start + end) // 2 - SNIPPET_MAX_CHARS // 2)
        hi = min(len(text), lo + SNIPPET_MAX_CHARS)
        lo = max(0, hi - SNIPPET_MAX_CHARS)
        snippets.append(
            Snippet(
                text=text[lo:hi],
                highlights=[
                    (a - lo, b - lo) for (a, b) in spans if a >= lo and b <= hi
                ],
            )
        )
        site = next((i for i, (a, _) in enumerate(spans) if a >= hi), None)
    return snippets


def search(
    reader: IndexReader,
    query: SearchQuery,
    weights: dict[str, float] | None = None,
    params: Bm25Params | None = None,
) -> tuple[int, list[SearchHit]]:
    """Rank matching documents; returns (total_hits, requested page)."""
    weights = DEFAULT_WEIGHTS if weights is None else weights
    for fld in query.fields:
        if weights.get(fld, 0) <= 0:
            raise ConfigError(f"field weight for {fld!r} must be positive")
    params = params or Bm25Params()
    n_docs = reader.doc_count
    total_score = np.zeros(n_docs)
    matched_by_field: dict[str, np.ndarray] = {}
    for fld in query.fields:
        fscore = np.zeros(n_docs)
        matched = np.zeros(n_docs, dtype=bool)
        stats = reader.field_stats(fld)
        if stats.doc_count_with_field:
            lens = reader.field_lengths(fld)
            avglen = stats.avg_field_length
            n = stats.doc_count_with_field
            for clause in query.clauses:
                postings = _clause_postings(reader, fld, clause)
                if postings is None:
                    continue
                doc_ids, tfs = postings
                bm25_accumulate(
                    doc_ids,
                    tfs,
                    lens,
                    _idf(n, len(doc_ids)),
                    params.k1,
                    params.b,
                    avglen,
                    fscore,
                )
                matched[doc_ids] = True
        matched_by_field[fld] = matched
        total_score += weights[fld] * fscore

    matched_any = np.zeros(n_docs, dtype=bool)
    for fld in query.fields:
        matched_any |= matched_by_field[fld]
    candidates = np.nonzero(matched_any)[0].tolist()
    order = sorted(
        candidates, key=lambda d: (-total_score[d], reader.stored(d).arxiv_id)
    )
    total = len(order)
    start = (query.page - 1) * query.page_size
    hits = []
    for doc_id in order[start : start + query.page_size]:
        doc = reader.stored(doc_id)
        matched_fields = tuple(
            f for f in query.fields if matched_by_field[f][doc_id]
        )
        hits.append(
            SearchHit(
                doc_id=doc_id,
                arxiv_id=doc.arxiv_id,
                score=float(total_score[doc_id]),
                matched_fields=matched_fields,
                snippets={
                    f: build_snippet(reader, doc_id, f, query)
                    for f in matched_fields
                },
                title=doc.fields["title"],
                authors=doc.fields["authors"],
                url=doc.url,
            )
        )
    return total, hits
