"""Acceptance gate: one printed PASS/FAIL line per criterion.

Run with `pytest tests/test_acceptance.py -s` to see the lines inline,
or `python tests/test_acceptance.py` to run the criteria standalone.
"""

import functools
import json
import os
import random
import re
import statistics
import sys
import threading
import time

import httpx
import pytest

import oracle
import synth
from test_analysis import ALGO_GOLDEN, ALGO_SNIPPET
from test_index import build, make_paper, stored_fields
from pseudoseer import (
    FIELDS,
    IndexReader,
    Phrase,
    SearchQuery,
    ServiceConfig,
    Term,
    canonical_json,
    clause_field_score,
    create_app,
    extract_pseudocode,
    extract_references,
    parse_query,
    search,
    tokenize_latex,
    tokenize_text,
)
from pseudoseer.cli import main as cli_main
from pseudoseer.service import search_payload

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

RECORDS_50 = synth.synth_corpus(seed=1337, n_docs=50)
READER_50 = build(RECORDS_50).snapshot()
TEXTS_50 = stored_fields(RECORDS_50)
IDS_50 = [p.arxiv_id for p, _ in RECORDS_50]


def criterion(name):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL {name}", flush=True)
                raise
            print(f"PASS {name}", flush=True)
            return result

        return wrapper

    return decorate


def random_single_field_clauses(rng, fld):
    clauses = []
    for _ in range(rng.randint(1, 3)):
        roll = rng.random()
        if roll < 0.2:
            toks = oracle.oracle_tokens(fld, TEXTS_50[fld][rng.randrange(50)])
            if len(toks) >= 2:
                i = rng.randrange(len(toks) - 1)
                clauses.append(Phrase((toks[i], toks[i + 1])))
                continue
        if roll < 0.35:
            clauses.append(
                Phrase(tuple(rng.choice(synth.VOCAB) for _ in range(2)))
            )
        else:
            clauses.append(Term(rng.choice(synth.VOCAB)))
    deduped = []
    for clause in clauses:
        if clause not in deduped:
            deduped.append(clause)
    return deduped


def oracle_clauses(clauses):
    return [
        ("term", c.term) if isinstance(c, Term) else ("phrase", list(c.terms))
        for c in clauses
    ]


@criterion("bm25-oracle-equivalence")
def test_bm25_scores_match_brute_force_oracle():
    rng = random.Random(2024)
    started = time.perf_counter()
    for trial in range(200):
        fld = rng.choice(FIELDS)
        clauses = random_single_field_clauses(rng, fld)
        query = SearchQuery(clauses=tuple(clauses), fields=(fld,), page_size=100)
        total, hits = search(READER_50, query)
        want = oracle.oracle_search(TEXTS_50, IDS_50, oracle_clauses(clauses), [fld])
        assert total == len(want)
        assert [h.arxiv_id for h in hits] == [w[0] for w in want]
        for hit, (_, score) in zip(hits, want):
            assert abs(hit.score - score) <= 1e-9
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"200 queries took {elapsed:.2f}s"


@criterion("field-weights-honored")
def test_default_weights_prefer_title_and_flip_with_weights():
    records = [
        make_paper("w/1", title="zephyr", bodies=("anchor",)),
        make_paper("w/2", title="anchor", bodies=("zephyr",)),
    ]
    reader = build(records).snapshot()
    query = SearchQuery(clauses=(Term("zephyr"),), fields=FIELDS)

    _, hits = search(reader, query)
    assert [h.arxiv_id for h in hits] == ["w/1", "w/2"]
    assert hits[0].score == pytest.approx(2.0 * hits[1].score, rel=1e-12)

    flipped = {"latex": 2.0, "authors": 1.0, "title": 1.0, "abstract": 2.0,
               "references": 2.0}
    _, hits = search(reader, query, weights=flipped)
    assert [h.arxiv_id for h in hits] == ["w/2", "w/1"]


@criterion("combined-score-decomposition")
def test_search_score_is_weighted_sum_of_field_scores():
    rng = random.Random(4096)
    for trial in range(100):
        clauses = []
        for fld in rng.sample(FIELDS, rng.randint(2, 5)):
            clauses.extend(random_single_field_clauses(rng, fld))
        deduped = []
        for clause in clauses:
            if clause not in deduped:
                deduped.append(clause)
        query = SearchQuery(clauses=tuple(deduped), fields=FIELDS, page_size=100)
        _, hits = search(READER_50, query)
        for hit in hits:
            parts = sum(
                oracle.WEIGHTS[fld]
                * clause_field_score(READER_50, clause, hit.doc_id, fld)
                for fld in FIELDS
                for clause in deduped
            )
            assert abs(hit.score - parts) <= 1e-9


@criterion("exact-phrase-adjacency")
def test_quoted_phrase_returns_exactly_the_adjacent_set():
    records = [
        make_paper("p/1", abstract="bubble sort is stable"),
        make_paper("p/2", abstract="bubble methods help sort quickly"),
        make_paper("p/3", title="we apply bubble sort twice"),
        make_paper("p/4", abstract="sort bubble order reversed"),
        make_paper("p/5", abstract="nothing related"),
    ]
    reader = build(records).snapshot()
    query = parse_query('"bubble sort"')
    total, hits = search(reader, query)
    assert {h.arxiv_id for h in hits} == {"p/1", "p/3"}
    assert total == 2

    loose_total, loose_hits = search(reader, parse_query("bubble sort"))
    assert {h.arxiv_id for h in loose_hits} == {"p/1", "p/2", "p/3", "p/4"}
    assert loose_total == 4


@criterion("extraction-recall")
def test_extraction_counts_over_malformed_corpus():
    rng = random.Random(99)
    files = [[] for _ in range(20)]
    for k in range(30):
        files[rng.randrange(20)].append(
            f"\\begin{{algorithm}} \\label{{alg:{k}}} step {k} \\end{{algorithm}}"
        )
    files[4].append("\\begin{algorithm} dangling one")
    files[11].append("\\begin{algorithm} dangling two")
    files[7].append(
        "\\begin{algorithm} outer \\begin{algorithm} inner "
        "\\end{algorithm} \\end{algorithm}"
    )
    blocks = warnings = 0
    for chunks in files:
        rng.shuffle(chunks)
        source = "\n\npadding text\n\n".join(chunks)
        got_blocks, got_warnings = extract_pseudocode(source)
        blocks += len(got_blocks)
        warnings += len(got_warnings)
    assert blocks == 30, f"expected 30 blocks, got {blocks}"
    assert warnings == 3, f"expected 3 warnings, got {warnings}"


@criterion("reference-window-offsets")
def test_reference_windows_equal_direct_offset_arithmetic():
    rng = random.Random(55)
    radius = 40
    parts = []
    for k in range(10):
        parts.append(
            f"\\begin{{algorithm}} \\label{{alg:{k}}} body {k} \\end{{algorithm}}"
        )
        parts.append("x" * rng.randint(0, 120))
        parts.append(f" see \\ref{{alg:{k}}} for step {k} ")
        parts.append("y" * rng.randint(0, 120))
    source = "".join(parts)

    blocks, warnings = extract_pseudocode(source)
    assert warnings == [] and len(blocks) == 10
    for k, block in enumerate(blocks):
        contexts = extract_references(source, block, window_radius=radius)
        assert len(contexts) == 1
        site = re.search(rf"\\ref{{alg:{k}}}(?![0-9])", source)
        lo = max(0, site.start() - radius)
        hi = min(len(source), site.end() + radius)
        assert contexts[0].raw_window == source[lo:hi]
        assert not re.search(r"\\[A-Za-z]", contexts[0].cleaned_text)


@criterion("tokenizer-conformance")
def test_word_boundaries_and_latex_golden_tokens():
    path = os.path.join(DATA_DIR, "word_break_cases.jsonl")
    with open(path, encoding="utf-8") as handle:
        cases = [json.loads(line) for line in handle]
    assert len(cases) >= 500
    for case in cases:
        want = [
            seg.casefold()
            for seg in case["segments"]
            if any(ch.isalnum() for ch in seg)
        ]
        got = [t.term for t in tokenize_text(case["text"])]
        assert got == want, f"segmentation differs on {case['text']!r}"

    got = [t.term for t in tokenize_latex(ALGO_SNIPPET)]
    assert got == ALGO_GOLDEN
    assert "\\for" in got and "\\endfor" in got


@criterion("index-round-trip")
def test_reopened_index_reproduces_identical_bytes(tmp_path):
    writer = build(RECORDS_50)
    live = writer.snapshot()
    writer.commit(str(tmp_path))
    disk = IndexReader.open(str(tmp_path))

    rng = random.Random(717)
    config = ServiceConfig()
    field_choices = [None, "title", "abstract,latex", ",".join(FIELDS)]
    for trial in range(50):
        words = [rng.choice(synth.VOCAB) for _ in range(rng.randint(1, 3))]
        q = " ".join(words)
        if rng.random() < 0.3 and len(words) >= 2:
            q = f'"{words[0]} {words[1]}"'
        fields_csv = rng.choice(field_choices)
        page = rng.randint(1, 2)
        size = rng.choice([5, 10, 50])
        a = canonical_json(
            search_payload(live, q, fields_csv, page, size, config)
        ).encode("utf-8")
        b = canonical_json(
            search_payload(disk, q, fields_csv, page, size, config)
        ).encode("utf-8")
        assert a == b


def _write_e2e_corpus(latex_dir, n_docs=1000):
    rng = random.Random(8080)
    os.makedirs(latex_dir, exist_ok=True)
    for serial in range(n_docs):
        label = f"alg:{serial}"
        source = (
            f"\\title{{{synth.words(rng, 2, 6)}}}\n"
            f"\\author{{{synth.words(rng, 1, 2)} \\and {synth.words(rng, 1, 2)}}}\n"
            f"\\begin{{abstract}}{synth.words(rng, 10, 30)}\\end{{abstract}}\n"
            f"\\begin{{algorithm}}\n\\label{{{label}}}\n"
            f"\\State {synth.words(rng, 4, 10)}\n\\end{{algorithm}}\n"
            f"As \\ref{{{label}}} shows, {synth.words(rng, 3, 8)}.\n"
        )
        name = f"21{rng.randint(1, 12):02d}.{serial:05d}.tex"
        with open(os.path.join(latex_dir, name), "w", encoding="utf-8") as out:
            out.write(source)


@criterion("service-end-to-end")
def test_ingest_index_serve_on_large_corpus(tmp_path, capsysbinary):
    import uvicorn

    latex_dir = tmp_path / "latex"
    corpus = tmp_path / "corpus.jsonl"
    index_dir = tmp_path / "idx"
    _write_e2e_corpus(str(latex_dir))

    assert cli_main(["ingest", "--latex-dir", str(latex_dir), "--out", str(corpus)]) == 0
    assert cli_main(["index", "--corpus", str(corpus), "--out", str(index_dir)]) == 0
    capsysbinary.readouterr()

    reader = IndexReader.open(str(index_dir))
    assert reader.doc_count == 1000
    app = create_app(reader, ServiceConfig())
    server = uvicorn.Server(
        uvicorn.Config(app, host="127.0.0.1", port=0, log_level="warning")
    )
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 15
    while not server.started:
        assert time.time() < deadline, "server did not start"
        time.sleep(0.02)
    port = server.servers[0].sockets[0].getsockname()[1]
    base = f"http://127.0.0.1:{port}"

    try:
        with httpx.Client(base_url=base, timeout=5.0) as client:
            assert client.get("/api/health").json() == {"status": "ok"}

            queries = ['tree sort', '"merge sort"', 'graph', 'bubble heap', 'x1']
            for q in queries:  # warm-up
                assert client.get("/api/search", params={"q": q}).status_code == 200

            timings = []
            for i in range(40):
                q = queries[i % len(queries)]
                started = time.perf_counter()
                response = client.get("/api/search", params={"q": q, "size": 10})
                timings.append(time.perf_counter() - started)
                assert response.status_code == 200
            median = statistics.median(timings)
            assert median < 0.050, f"median latency {median * 1000:.1f}ms"

            bare = client.get("/api/search", params={"q": "tree sort"})
            explicit = client.get(
                "/api/search",
                params={"q": "tree sort", "fields": ",".join(FIELDS)},
            )
            assert bare.content == explicit.content
            assert bare.json()["total"] >= 1

            http_body = client.get(
                "/api/search", params={"q": 'graph "tree sort"', "size": 7}
            ).content
            rc = cli_main(
                [
                    "search",
                    "--index",
                    str(index_dir),
                    "--q",
                    'graph "tree sort"',
                    "--size",
                    "7",
                ]
            )
            cli_bytes = capsysbinary.readouterr().out
            assert rc == 0
            assert cli_bytes == http_body

            hit = client.get("/api/search", params={"q": "tree"}).json()["hits"][0]
            paper = client.get(f"/api/paper/{hit['arxiv_id']}")
            assert paper.status_code == 200
            assert paper.json()["arxiv_id"] == hit["arxiv_id"]
    finally:
        server.should_exit = True
        thread.join(timeout=10)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
