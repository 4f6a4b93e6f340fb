"""HTTP API endpoints, config loading, and CLI behavior."""

import json
import os

import pytest
from fastapi.testclient import TestClient

import oracle
import synth
from test_index import build, make_paper, stored_fields
from pseudoseer import (
    Bm25Params,
    ConfigError,
    IndexReader,
    ServiceConfig,
    canonical_json,
    create_app,
    load_config,
)
from pseudoseer.cli import main as cli_main
from pseudoseer.service import parse_fields_param

RECORDS = synth.synth_corpus(seed=301, n_docs=30) + [
    make_paper("cs/0012007", title="tree sort classic", abstract="merge tree")
]


@pytest.fixture(scope="module")
def reader():
    return build(RECORDS).snapshot()


@pytest.fixture(scope="module")
def client(reader):
    return TestClient(create_app(reader))


class TestSearchEndpoint:
    def test_health(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        assert response.content == b'{"status":"ok"}'

    def test_payload_shape(self, client):
        response = client.get("/api/search", params={"q": "tree"})
        assert response.status_code == 200
        assert response.headers["content-type"] == "application/json"
        payload = json.loads(response.content)
        assert list(payload) == ["total", "page", "size", "hits"]
        assert payload["page"] == 1 and payload["size"] == 10
        assert payload["hits"]
        hit = payload["hits"][0]
        assert list(hit) == [
            "arxiv_id",
            "url",
            "title",
            "authors",
            "score",
            "matched_fields",
            "snippets",
        ]
        assert set(hit["snippets"]) == set(hit["matched_fields"])
        for snips in hit["snippets"].values():
            for snip in snips:
                assert list(snip) == ["text", "highlights"]
                for a, b in snip["highlights"]:
                    assert 0 <= a < b <= len(snip["text"])

    def test_total_matches_oracle(self, client):
        texts = stored_fields(RECORDS)
        ids = [p.arxiv_id for p, _ in RECORDS]
        want = oracle.oracle_search(
            texts, ids, [("term", "tree"), ("term", "sort")], list(oracle.WEIGHTS)
        )
        payload = client.get(
            "/api/search", params={"q": "tree sort", "size": 100}
        ).json()
        assert payload["total"] == len(want)
        assert [h["arxiv_id"] for h in payload["hits"]] == [w[0] for w in want]

    def test_ranking_follows_scores_and_ids(self, client):
        payload = client.get("/api/search", params={"q": "tree", "size": 100}).json()
        hits = payload["hits"]
        keys = [(-h["score"], h["arxiv_id"]) for h in hits]
        assert keys == sorted(keys)

    def test_missing_q_is_400(self, client):
        assert client.get("/api/search").status_code == 400

    @pytest.mark.parametrize("q", ["", "   "])
    def test_blank_q_is_400(self, client, q):
        response = client.get("/api/search", params={"q": q})
        assert response.status_code == 400
        assert "error" in response.json()

    def test_unknown_field_is_400_and_named(self, client):
        response = client.get(
            "/api/search", params={"q": "tree", "fields": "title,body"}
        )
        assert response.status_code == 400
        assert "body" in response.json()["error"]

    @pytest.mark.parametrize(
        "params",
        [
            {"q": "tree", "page": "0"},
            {"q": "tree", "page": "-2"},
            {"q": "tree", "size": "0"},
            {"q": "tree", "size": "101"},
            {"q": "tree", "page": "abc"},
            {"q": "tree", "size": "1.5"},
        ],
    )
    def test_bad_pagination_is_400(self, client, params):
        assert client.get("/api/search", params=params).status_code == 400

    def test_overlong_query_is_400(self, client):
        response = client.get("/api/search", params={"q": "x" * 2000})
        assert response.status_code == 400

    def test_no_fields_equals_all_fields(self, client):
        bare = client.get("/api/search", params={"q": "tree sort", "size": 50})
        explicit = client.get(
            "/api/search",
            params={
                "q": "tree sort",
                "size": 50,
                "fields": "title,abstract,authors,references,latex",
            },
        )
        assert bare.content == explicit.content

    def test_fields_param_tolerates_blanks(self, client):
        messy = client.get(
            "/api/search", params={"q": "tree", "fields": " title ,,latex , "}
        )
        tidy = client.get(
            "/api/search", params={"q": "tree", "fields": "title,latex"}
        )
        assert messy.status_code == 200
        assert messy.content == tidy.content

    def test_repeat_request_is_byte_identical(self, client):
        first = client.get("/api/search", params={"q": '"tree sort" graph'})
        second = client.get("/api/search", params={"q": '"tree sort" graph'})
        assert first.content == second.content

    def test_pagination_window(self, client):
        full = client.get("/api/search", params={"q": "tree", "size": 100}).json()
        page2 = client.get(
            "/api/search", params={"q": "tree", "page": 2, "size": 5}
        ).json()
        assert page2["page"] == 2 and page2["size"] == 5
        assert [h["arxiv_id"] for h in page2["hits"]] == [
            h["arxiv_id"] for h in full["hits"][5:10]
        ]


class TestPaperEndpoint:
    def test_round_trip_from_search_hit(self, client):
        hit = client.get("/api/search", params={"q": "tree"}).json()["hits"][0]
        response = client.get(f"/api/paper/{hit['arxiv_id']}")
        assert response.status_code == 200
        payload = json.loads(response.content)
        assert list(payload) == ["arxiv_id", "url", "year", "fields", "pseudocodes"]
        assert payload["arxiv_id"] == hit["arxiv_id"]
        assert list(payload["fields"]) == [
            "title",
            "abstract",
            "authors",
            "references",
            "latex",
        ]

    def test_id_with_slash(self, client):
        response = client.get("/api/paper/cs/0012007")
        assert response.status_code == 200
        assert response.json()["arxiv_id"] == "cs/0012007"

    def test_unknown_id_is_404(self, client):
        response = client.get("/api/paper/none.00000")
        assert response.status_code == 404
        assert "none.00000" in response.json()["error"]


class TestIndexUnavailable:
    def test_endpoints_return_503(self):
        client = TestClient(create_app(None))
        assert client.get("/api/search", params={"q": "x"}).status_code == 503
        assert client.get("/api/paper/a").status_code == 503
        assert client.get("/api/health").status_code == 200


class TestStaticMount:
    def test_serves_static_when_present(self, reader, tmp_path):
        (tmp_path / "index.html").write_text("<html><body>ui</body></html>")
        client = TestClient(create_app(reader, static_dir=str(tmp_path)))
        response = client.get("/")
        assert response.status_code == 200
        assert "ui" in response.text
        assert client.get("/api/health").status_code == 200

    def test_no_static_dir(self, reader, tmp_path):
        client = TestClient(
            create_app(reader, static_dir=str(tmp_path / "missing"))
        )
        assert client.get("/").status_code == 404


class TestServiceConfig:
    def test_defaults_without_file(self):
        config = load_config(None)
        assert config == ServiceConfig()
        assert config.page_size_default == 10
        assert config.bm25 == Bm25Params(1.2, 0.75)

    def test_full_config(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(
            json.dumps(
                {
                    "index_dir": "/tmp/idx",
                    "listen_address": "0.0.0.0:9000",
                    "page_size_default": 25,
                    "field_weights": {"latex": 4.5},
                    "bm25": {"k1": 0.9, "b": 0.4},
                    "window_radius": 120,
                }
            )
        )
        config = load_config(str(path))
        assert config.index_dir == "/tmp/idx"
        assert config.listen_address == "0.0.0.0:9000"
        assert config.page_size_default == 25
        assert config.field_weights["latex"] == 4.5
        assert config.field_weights["title"] == 2.0  # merged over defaults
        assert config.bm25 == Bm25Params(k1=0.9, b=0.4)
        assert config.window_radius == 120

    @pytest.mark.parametrize(
        "obj",
        [
            {"nope": 1},
            {"page_size_default": 0},
            {"page_size_default": 101},
            {"page_size_default": "10"},
            {"field_weights": {"body": 1.0}},
            {"field_weights": {"title": 0}},
            {"field_weights": {"title": -2}},
            {"field_weights": [1, 2]},
            {"bm25": {"k1": -0.1}},
            {"bm25": {"b": 1.5}},
            {"bm25": {"k1": 1.0, "extra": 2}},
            {"window_radius": 0},
            {"window_radius": "300"},
            [1, 2, 3],
        ],
    )
    def test_invalid_config_rejected(self, tmp_path, obj):
        path = tmp_path / "config.json"
        path.write_text(json.dumps(obj))
        with pytest.raises(ConfigError):
            load_config(str(path))

    def test_unreadable_and_malformed(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(str(tmp_path / "missing.json"))
        bad = tmp_path / "bad.json"
        bad.write_text("{oops")
        with pytest.raises(ConfigError):
            load_config(str(bad))

    def test_page_size_default_applies(self, reader, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"page_size_default": 3}))
        client = TestClient(create_app(reader, load_config(str(path))))
        payload = client.get("/api/search", params={"q": "tree"}).json()
        assert payload["size"] == 3
        assert len(payload["hits"]) <= 3

    def test_field_weights_change_scores(self, reader, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"field_weights": {"abstract": 9.0}}))
        boosted = TestClient(create_app(reader, load_config(str(path))))
        plain = TestClient(create_app(reader))
        q = {"q": "tree", "size": 100}
        boosted_hits = boosted.get("/api/search", params=q).json()["hits"]
        plain_hits = plain.get("/api/search", params=q).json()["hits"]
        assert {h["arxiv_id"] for h in boosted_hits} == {
            h["arxiv_id"] for h in plain_hits
        }
        assert any(
            b["score"] != p["score"]
            for b, p in zip(
                sorted(boosted_hits, key=lambda h: h["arxiv_id"]),
                sorted(plain_hits, key=lambda h: h["arxiv_id"]),
            )
        )

    def test_parse_fields_param(self):
        assert parse_fields_param(None) == set()
        assert parse_fields_param("") == set()
        assert parse_fields_param("title, latex") == {"title", "latex"}
        assert parse_fields_param(",title,,") == {"title"}


TEX_MAIN = """\\title{Tree Search Methods}
\\author{A. One \\and B. Two}
\\begin{abstract}We study tree search.\\end{abstract}
\\begin{algorithm}
\\label{alg:walk}
\\State visit tree nodes
\\end{algorithm}
As \\ref{alg:walk} shows, the walk is linear.
"""

TEX_NESTED_DIR = """\\title{Sorting}
\\begin{algorithm}
\\label{alg:sort}
\\State compare and swap
\\end{algorithm}
"""

TEX_BROKEN = """\\title{Broken}
\\begin{algorithm}
\\State never closed
"""


@pytest.fixture()
def latex_tree(tmp_path):
    latex_dir = tmp_path / "latex"
    (latex_dir / "sub").mkdir(parents=True)
    (latex_dir / "2101.00001.tex").write_text(TEX_MAIN)
    (latex_dir / "sub" / "2102.00002.tex").write_text(TEX_NESTED_DIR)
    (latex_dir / "2103.00003.tex").write_text(TEX_BROKEN)
    (latex_dir / "notes.txt").write_text("not latex")
    return latex_dir


class TestCli:
    def test_ingest_then_index_then_search(self, latex_tree, tmp_path, capsys):
        corpus = tmp_path / "corpus.jsonl"
        rc = cli_main(
            ["ingest", "--latex-dir", str(latex_tree), "--out", str(corpus)]
        )
        out = capsys.readouterr()
        assert rc == 0
        assert "papers: 3" in out.out
        assert "blocks: 2" in out.out
        assert "warnings: 1" in out.out
        assert "WARN" in out.err and "unbalanced" in out.err

        index_dir = tmp_path / "idx"
        rc = cli_main(["index", "--corpus", str(corpus), "--out", str(index_dir)])
        out = capsys.readouterr()
        assert rc == 0
        assert "documents: 3" in out.out
        assert "title: docs=3" in out.out

        reader = IndexReader.open(str(index_dir))
        assert reader.doc_id_for("sub/2102.00002") is not None
        assert reader.postings("references", "walk").doc_freq == 1

    def test_ingest_window_radius_flag(self, latex_tree, tmp_path, capsys):
        corpus = tmp_path / "small.jsonl"
        rc = cli_main(
            [
                "ingest",
                "--latex-dir",
                str(latex_tree),
                "--out",
                str(corpus),
                "--window-radius",
                "10",
            ]
        )
        capsys.readouterr()
        assert rc == 0
        from pseudoseer import load_corpus_file

        records, _ = load_corpus_file(str(corpus))
        contexts = [
            c for _, blocks in records for b in blocks for c in b.reference_contexts
        ]
        assert contexts
        assert all(
            len(c.raw_window) <= len("\\ref{alg:walk}") + 20 for c in contexts
        )

    def test_index_warns_on_bad_lines(self, tmp_path, capsys):
        corpus = tmp_path / "corpus.jsonl"
        corpus.write_text('{"arxiv_id": "a/1"}\nnot json\n')
        rc = cli_main(["index", "--corpus", str(corpus), "--out", str(tmp_path / "i")])
        out = capsys.readouterr()
        assert rc == 0
        assert "WARN line 2" in out.err

    def test_search_requires_index_location(self, capsys, monkeypatch):
        monkeypatch.delenv("PSEUDOSEER_INDEX", raising=False)
        rc = cli_main(["search", "--q", "tree"])
        out = capsys.readouterr()
        assert rc == 1
        assert out.err.startswith("error:")
        assert "PSEUDOSEER_INDEX" in out.err

    def test_search_env_var_fallback(
        self, latex_tree, tmp_path, capsys, monkeypatch
    ):
        corpus = tmp_path / "corpus.jsonl"
        index_dir = tmp_path / "idx"
        cli_main(["ingest", "--latex-dir", str(latex_tree), "--out", str(corpus)])
        cli_main(["index", "--corpus", str(corpus), "--out", str(index_dir)])
        capsys.readouterr()
        monkeypatch.setenv("PSEUDOSEER_INDEX", str(index_dir))
        rc = cli_main(["search", "--q", "tree"])
        out = capsys.readouterr()
        assert rc == 0
        assert json.loads(out.out)["total"] >= 1

    def test_search_error_exit_code(self, tmp_path, capsys):
        rc = cli_main(["search", "--index", str(tmp_path / "none"), "--q", "x"])
        out = capsys.readouterr()
        assert rc == 1 and out.err.startswith("error:")

    @pytest.mark.parametrize(
        "cli_args,http_params",
        [
            (["--q", "tree"], {"q": "tree"}),
            (["--q", '"tree search" walk'], {"q": '"tree search" walk'}),
            (
                ["--q", "tree", "--fields", "title,latex"],
                {"q": "tree", "fields": "title,latex"},
            ),
            (
                ["--q", "tree", "--page", "2", "--size", "1"],
                {"q": "tree", "page": 2, "size": 1},
            ),
        ],
    )
    def test_cli_bytes_equal_http_body(
        self, latex_tree, tmp_path, capsysbinary, cli_args, http_params
    ):
        corpus = tmp_path / "corpus.jsonl"
        index_dir = tmp_path / "idx"
        cli_main(["ingest", "--latex-dir", str(latex_tree), "--out", str(corpus)])
        cli_main(["index", "--corpus", str(corpus), "--out", str(index_dir)])
        capsysbinary.readouterr()

        rc = cli_main(["search", "--index", str(index_dir)] + cli_args)
        cli_bytes = capsysbinary.readouterr().out
        assert rc == 0

        client = TestClient(create_app(IndexReader.open(str(index_dir))))
        response = client.get("/api/search", params=http_params)
        assert response.status_code == 200
        assert cli_bytes == response.content
        assert not cli_bytes.endswith(b"\n")

    def test_canonical_json_is_compact_utf8(self):
        text = canonical_json({"a": ["λ", 1.5], "b": None})
        assert text == '{"a":["λ",1.5],"b":null}'
