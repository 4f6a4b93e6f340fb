"""Brute-force scoring oracle, independent of the package internals.

Re-tokenizes stored field text with plain regexes (valid for the
restricted synth.py vocabulary), recounts tf/df/length/average length,
and applies the BM25 closed form directly.  Used to cross-check the
engine's scores and orderings.
"""

import math
import re

PROSE_RE = re.compile(r"[a-z0-9]+")
LATEX_RE = re.compile(r"\\[a-z]+|[a-z0-9]+")

K1 = 1.2
B = 0.75

WEIGHTS = {
    "latex": 1.0,
    "authors": 1.0,
    "title": 2.0,
    "abstract": 2.0,
    "references": 2.0,
}


def oracle_tokens(field: str, text: str) -> list[str]:
    rx = LATEX_RE if field == "latex" else PROSE_RE
    return rx.findall(text)


def sliding_phrase_count(tokens: list[str], phrase: list[str]) -> int:
    k = len(phrase)
    if k == 0 or len(tokens) < k:
        return 0
    return sum(1 for i in range(len(tokens) - k + 1) if tokens[i : i + k] == phrase)


def _field_stats(token_lists: list[list[str]]) -> tuple[int, float]:
    lens = [len(t) for t in token_lists]
    n = sum(1 for length in lens if length)
    avg = sum(lens) / n if n else 0.0
    return n, avg


def _bm25(tf: int, df: int, n: int, length: int, avglen: float) -> float:
    idf = math.log(1.0 + (n - df + 0.5) / (df + 0.5))
    denom = tf + K1 * (1.0 - B + B * length / avglen)
    return idf * tf * (K1 + 1.0) / denom


def oracle_term_scores(field: str, texts: list[str], terms: list[str]) -> list[float]:
    """Per-doc OR-query score; duplicate query terms count once."""
    token_lists = [oracle_tokens(field, t) for t in texts]
    n, avglen = _field_stats(token_lists)
    scores = [0.0] * len(texts)
    if not n:
        return scores
    for term in dict.fromkeys(terms):
        df = sum(1 for toks in token_lists if term in toks)
        if not df:
            continue
        for d, toks in enumerate(token_lists):
            tf = toks.count(term)
            if tf:
                scores[d] += _bm25(tf, df, n, len(toks), avglen)
    return scores


def oracle_phrase_scores(field: str, texts: list[str], phrase: list[str]) -> list[float]:
    """Per-doc score of the phrase as a pseudo-term (tf = adjacent count)."""
    token_lists = [oracle_tokens(field, t) for t in texts]
    n, avglen = _field_stats(token_lists)
    scores = [0.0] * len(texts)
    if not n:
        return scores
    counts = [sliding_phrase_count(toks, list(phrase)) for toks in token_lists]
    df = sum(1 for c in counts if c)
    if not df:
        return scores
    for d, toks in enumerate(token_lists):
        if counts[d]:
            scores[d] = _bm25(counts[d], df, n, len(toks), avglen)
    return scores


def oracle_clause_scores(field: str, texts: list[str], clause) -> list[float]:
    """clause: ("term", word) or ("phrase", [words])."""
    kind, value = clause
    if kind == "term":
        return oracle_term_scores(field, texts, [value])
    return oracle_phrase_scores(field, texts, list(value))


def oracle_search(
    stored_by_field: dict[str, list[str]],
    arxiv_ids: list[str],
    clauses: list,
    fields: list[str],
    weights: dict[str, float] | None = None,
) -> list[tuple[str, float]]:
    """Full ordering oracle: [(arxiv_id, score)] sorted like the engine."""
    weights = weights or WEIGHTS
    n_docs = len(arxiv_ids)
    totals = [0.0] * n_docs
    matched = [False] * n_docs
    for field in fields:
        texts = stored_by_field[field]
        fscores = [0.0] * n_docs
        for clause in clauses:
            per_clause = oracle_clause_scores(field, texts, clause)
            for d in range(n_docs):
                fscores[d] += per_clause[d]
                if per_clause[d]:
                    matched[d] = True
        for d in range(n_docs):
            totals[d] += weights[field] * fscores[d]
    hits = [(arxiv_ids[d], totals[d]) for d in range(n_docs) if matched[d]]
    hits.sort(key=lambda pair: (-pair[1], pair[0]))
    return hits
