"""Positional inverted index over the five paper fields.

Single-segment, rebuild-only design.  A commit writes generation-numbered
files and swaps manifest.json into place last, so a crash mid-commit
leaves the previous index fully readable.  On-disk layout (format 1):

  manifest.json   format_version, analyzer_version, doc_count, generation,
                  per-field stats, and the data file names
  terms-N.jsonl   one record per (field, term), sorted by (field, term):
                  {"f", "t", "df", "o" word offset, "n" position count}
  postings-N.bin  per term, little-endian uint32: doc_ids[df], tfs[df],
                  then all positions (per-doc runs in doc order)
  stored-N.jsonl  per doc_id: arxiv_id, url, year, the five stored field
                  texts, per-field token counts, and the raw block bodies

Multi-snippet fields (references, latex) leave a 10-position gap between
snippets so phrases never match across snippet boundaries; stored text
joins snippets with a blank line, which tokenizes to nothing, so token
counts still equal the analyzer's count over the stored text.
"""

import json
import os
from bisect import bisect_left
from dataclasses import dataclass, field

import numpy as np

from .analysis import ANALYZER_VERSION, FIELDS, analyzer_for
from .corpus import PaperRecord, PseudocodeBlock
from .errors import DuplicateDocumentError, IndexFormatError

FORMAT_VERSION = 1
POSITION_GAP = 10
SNIPPET_SEPARATOR = "\n\n"

_MANIFEST = "manifest.json"


@dataclass
class FieldStats:
    field: str
    doc_count_with_field: int
    total_token_count: int

    @property
    def avg_field_length(self) -> float:
        if not self.doc_count_with_field:
            return 0.0
        return self.total_token_count / self.doc_count_with_field


@dataclass
class StoredDoc:
    doc_id: int
    arxiv_id: str
    url: str
    year: int | None
    fields: dict[str, str]
    lengths: dict[str, int]
    pseudocodes: list[str] = field(default_factory=list)


@dataclass
class TermPosting:
    field: str
    term: str
    doc_freq: int
    entries: list[tuple[int, int, list[int]]]


def _field_snippets(
    fld: str, paper: PaperRecord, blocks: list[PseudocodeBlock]
) -> list[str]:
    if fld == "title":
        return [paper.title]
    if fld == "abstract":
        return [paper.abstract]
    if fld == "authors":
        return ["; ".join(paper.authors)]
    if fld == "references":
        return [c.cleaned_text for b in blocks for c in b.reference_contexts]
    return [b.latex_body for b in blocks]


class IndexWriter:
    """Accumulates documents in memory; commit() persists them."""

    def __init__(self):
        self._docs: list[StoredDoc] = []
        self._ids: set[str] = set()
        # (field, term) -> {doc_id -> [positions]}
        self._postings: dict[tuple[str, str], dict[int, list[int]]] = {}

    @property
    def doc_count(self) -> int:
        return len(self._docs)

    def add_document(self, paper: PaperRecord, blocks: list[PseudocodeBlock]) -> int:
        if paper.arxiv_id in self._ids:
            raise DuplicateDocumentError(paper.arxiv_id)
        doc_id = len(self._docs)
        fields: dict[str, str] = {}
        lengths: dict[str, int] = {}
        for fld in FIELDS:
            analyzer = analyzer_for(fld)
            snippets = _field_snippets(fld, paper, blocks)
            fields[fld] = SNIPPET_SEPARATOR.join(snippets)
            base = 0
            count = 0
            for snippet in snippets:
                tokens = analyzer(snippet)
                for tok in tokens:
                    by_doc = self._postings.setdefault((fld, tok.term), {})
                    by_doc.setdefault(doc_id, []).append(base + tok.position)
                base += len(tokens) + POSITION_GAP
                count += len(tokens)
            lengths[fld] = count
        self._docs.append(
            StoredDoc(
                doc_id=doc_id,
                arxiv_id=paper.arxiv_id,
                url=paper.url,
                year=paper.year,
                fields=fields,
                lengths=lengths,
                pseudocodes=[b.latex_body for b in blocks],
            )
        )
        self._ids.add(paper.arxiv_id)
        return doc_id

    def _field_stats(self) -> dict[str, FieldStats]:
        stats = {}
        for fld in FIELDS:
            lens = [d.lengths[fld] for d in self._docs]
            stats[fld] = FieldStats(
                field=fld,
                doc_count_with_field=sum(1 for n in lens if n),
                total_token_count=sum(lens),
            )
        return stats

    def snapshot(self) -> "IndexReader":
        """Readable view of the in-memory state, no disk involved."""
        keys = sorted(self._postings)
        offsets: dict[tuple[str, str], tuple[int, int, int]] = {}
        flat: list[np.ndarray] = []
        word = 0
        for key in keys:
            by_doc = self._postings[key]
            df = len(by_doc)
            npos = sum(len(p) for p in by_doc.values())
            offsets[key] = (word, df, npos)
            flat.append(np.fromiter(by_doc.keys(), dtype=np.uint32, count=df))
            flat.append(
                np.fromiter(
                    (len(p) for p in by_doc.values()), dtype=np.uint32, count=df
                )
            )
            flat.append(
                np.fromiter(
                    (pos for p in by_doc.values() for pos in p),
                    dtype=np.uint32,
                    count=npos,
                )
            )
            word += 2 * df + npos
        data = np.concatenate(flat) if flat else np.empty(0, dtype=np.uint32)
        return IndexReader(
            keys=keys,
            offsets=offsets,
            data=data,
            docs=list(self._docs),
            stats=self._field_stats(),
        )

    def commit(self, index_dir: str) -> dict:
        """Atomically persist the index; returns the manifest."""
        os.makedirs(index_dir, exist_ok=True)
        old_files: list[str] = []
        generation = 1
        manifest_path = os.path.join(index_dir, _MANIFEST)
        if os.path.exists(manifest_path):
            try:
                with open(manifest_path, encoding="utf-8") as handle:
                    old = json.load(handle)
                generation = int(old.get("generation", 0)) + 1
                old_files = list(old.get("files", {}).values())
            except (OSError, ValueError):
                generation = 1

        names = {
            "terms": f"terms-{generation}.jsonl",
            "postings": f"postings-{generation}.bin",
            "stored": f"stored-{generation}.jsonl",
        }
        keys = sorted(self._postings)
        word = 0
        with open(
            os.path.join(index_dir, names["terms"]), "w", encoding="utf-8"
        ) as terms_out, open(
            os.path.join(index_dir, names["postings"]), "wb"
        ) as post_out:
            for fld, term in keys:
                by_doc = self._postings[(fld, term)]
                df = len(by_doc)
                positions = [pos for plist in by_doc.values() for pos in plist]
                npos = len(positions)
                record = {"f": fld, "t": term, "df": df, "o": word, "n": npos}
                terms_out.write(json.dumps(record, ensure_ascii=False))
                terms_out.write("\n")
                post_out.write(
                    np.fromiter(by_doc.keys(), dtype="<u4", count=df).tobytes()
                )
                post_out.write(
                    np.fromiter(
                        (len(p) for p in by_doc.values()), dtype="<u4", count=df
                    ).tobytes()
                )
                post_out.write(np.array(positions, dtype="<u4").tobytes())
                word += 2 * df + npos

        with open(
            os.path.join(index_dir, names["stored"]), "w", encoding="utf-8"
        ) as stored_out:
            for doc in self._docs:
                stored_out.write(
                    json.dumps(
                        {
                            "arxiv_id": doc.arxiv_id,
                            "url": doc.url,
                            "year": doc.year,
                            "fields": doc.fields,
                            "lengths": doc.lengths,
                            "pseudocodes": doc.pseudocodes,
                        },
                        ensure_ascii=False,
                    )
                )
                stored_out.write("\n")

        stats = self._field_stats()
        manifest = {
            "format_version": FORMAT_VERSION,
            "analyzer_version": ANALYZER_VERSION,
            "generation": generation,
            "doc_count": len(self._docs),
            "field_stats": {
                fld: {
                    "doc_count_with_field": s.doc_count_with_field,
                    "total_token_count": s.total_token_count,
                }
                for fld, s in stats.items()
            },
            "files": names,
        }
        tmp = manifest_path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as handle:
            json.dump(manifest, handle, ensure_ascii=False, indent=2)
            handle.write("\n")
        os.replace(tmp, manifest_path)
        for name in old_files:
            if name not in names.values():
                try:
                    os.unlink(os.path.join(index_dir, name))
                except OSError:
                    pass
        return manifest


class IndexReader:
    """Immutable read view; safe to share across threads."""

    def __init__(self, keys, offsets, data, docs, stats):
        self._keys: list[tuple[str, str]] = keys
        self._offsets = offsets  # (field, term) -> (word offset, df, npos)
        self._data: np.ndarray = data
        self._docs: list[StoredDoc] = docs
        self._stats: dict[str, FieldStats] = stats
        self._by_arxiv = {d.arxiv_id: d.doc_id for d in docs}
        self._lengths = {
            fld: np.array([d.lengths[fld] for d in docs], dtype=np.uint32)
            for fld in FIELDS
        }

    @classmethod
    def open(cls, index_dir: str) -> "IndexReader":
        manifest_path = os.path.join(index_dir, _MANIFEST)
        try:
            with open(manifest_path, encoding="utf-8") as handle:
                manifest = json.load(handle)
        except OSError as exc:
            raise IndexFormatError(f"cannot read manifest: {exc}") from exc
        except ValueError as exc:
            raise IndexFormatError(f"manifest is not valid JSON: {exc}") from exc

        if manifest.get("format_version") != FORMAT_VERSION:
            raise IndexFormatError(
                f"unsupported format_version {manifest.get('format_version')!r}"
            )
        if manifest.get("analyzer_version") != ANALYZER_VERSION:
            raise IndexFormatError(
                f"index built with analyzer_version "
                f"{manifest.get('analyzer_version')!r}, expected {ANALYZER_VERSION!r}"
            )
        names = manifest.get("files", {})
        for kind in ("terms", "postings", "stored"):
            if kind not in names:
                raise IndexFormatError(f"manifest missing files[{kind!r}]")

        try:
            with open(os.path.join(index_dir, names["postings"]), "rb") as handle:
                data = np.frombuffer(handle.read(), dtype="<u4").astype(np.uint32)
        except OSError as exc:
            raise IndexFormatError(f"cannot read postings file: {exc}") from exc

        keys: list[tuple[str, str]] = []
        offsets: dict[tuple[str, str], tuple[int, int, int]] = {}
        try:
            with open(
                os.path.join(index_dir, names["terms"]), encoding="utf-8"
            ) as handle:
                for line in handle:
                    rec = json.loads(line)
                    key = (rec["f"], rec["t"])
                    if keys and key <= keys[-1]:
                        raise IndexFormatError(
                            f"term dictionary not sorted at {key!r}"
                        )
                    keys.append(key)
                    offsets[key] = (rec["o"], rec["df"], rec["n"])
        except OSError as exc:
            raise IndexFormatError(f"cannot read term dictionary: {exc}") from exc
        except (ValueError, KeyError) as exc:
            raise IndexFormatError(f"corrupt term dictionary: {exc}") from exc

        expected = max(
            (o + 2 * df + n for o, df, n in offsets.values()), default=0
        )
        if len(data) != expected:
            raise IndexFormatError(
                f"postings file holds {len(data)} words, "
                f"term dictionary expects {expected}"
            )

        docs: list[StoredDoc] = []
        try:
            with open(
                os.path.join(index_dir, names["stored"]), encoding="utf-8"
            ) as handle:
                for doc_id, line in enumerate(handle):
                    rec = json.loads(line)
                    docs.append(
                        StoredDoc(
                            doc_id=doc_id,
                            arxiv_id=rec["arxiv_id"],
                            url=rec.get("url", ""),
                            year=rec.get("year"),
                            fields=rec["fields"],
                            lengths=rec["lengths"],
                            pseudocodes=rec.get("pseudocodes", []),
                        )
                    )
        except OSError as exc:
            raise IndexFormatError(f"cannot read stored fields: {exc}") from exc
        except (ValueError, KeyError) as exc:
            raise IndexFormatError(f"corrupt stored fields: {exc}") from exc

        if len(docs) != manifest.get("doc_count"):
            raise IndexFormatError(
                f"doc_count mismatch: manifest says {manifest.get('doc_count')}, "
                f"stored file has {len(docs)}"
            )
        stats = {
            fld: FieldStats(
                field=fld,
                doc_count_with_field=manifest["field_stats"][fld][
                    "doc_count_with_field"
                ],
                total_token_count=manifest["field_stats"][fld]["total_token_count"],
            )
            for fld in FIELDS
        }
        return cls(keys=keys, offsets=offsets, data=data, docs=docs, stats=stats)

    @property
    def doc_count(self) -> int:
        return len(self._docs)

    def field_stats(self, fld: str) -> FieldStats:
        analyzer_for(fld)  # validates the name
        return self._stats[fld]

    def field_lengths(self, fld: str) -> np.ndarray:
        analyzer_for(fld)
        return self._lengths[fld]

    def stored(self, doc_id: int) -> StoredDoc:
        return self._docs[doc_id]

    def doc_id_for(self, arxiv_id: str) -> int | None:
        return self._by_arxiv.get(arxiv_id)

    def term_arrays(
        self, fld: str, term: str
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray] | None:
        """(doc_ids, tfs, flat positions, per-doc position starts) or None."""
        key = (fld, term.casefold())
        i = bisect_left(self._keys, key)
        if i == len(self._keys) or self._keys[i] != key:
            return None
        word, df, npos = self._offsets[key]
        doc_ids = self._data[word : word + df]
        tfs = self._data[word + df : word + 2 * df]
        positions = self._data[word + 2 * df : word + 2 * df + npos]
        starts = np.zeros(df + 1, dtype=np.int64)
        np.cumsum(tfs, out=starts[1:])
        return doc_ids, tfs, positions, starts

    def postings(self, fld: str, term: str) -> TermPosting | None:
        """Exact-term lookup; the term is case-folded like the analyzers do."""
        analyzer_for(fld)
        arrays = self.term_arrays(fld, term)
        if arrays is None:
            return None
        doc_ids, tfs, positions, starts = arrays
        entries = [
            (
                int(doc_ids[i]),
                int(tfs[i]),
                [int(p) for p in positions[starts[i] : starts[i + 1]]],
            )
            for i in range(len(doc_ids))
        ]
        return TermPosting(
            field=fld, term=term.casefold(), doc_freq=len(entries), entries=entries
        )
