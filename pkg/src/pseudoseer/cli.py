"""Command-line interface: ingest, index, search, serve.

`search` writes exactly the bytes the HTTP API would return for the same
parameters (no trailing newline).  The index directory can come from
--index or the PSEUDOSEER_INDEX environment variable.
"""

import argparse
import os
import shutil
import sys

from .analysis import FIELDS
from .corpus import (
    DEFAULT_WINDOW_RADIUS,
    extract_paper,
    load_corpus_file,
    write_corpus_file,
)
from .errors import PseudoseerError
from .index import IndexReader, IndexWriter
from .service import (
    ServiceConfig,
    canonical_json,
    create_app,
    load_config,
    search_payload,
)

INDEX_ENV_VAR = "PSEUDOSEER_INDEX"


def _warn(message: str) -> None:
    print(f"WARN {message}", file=sys.stderr)


def _index_dir(args) -> str:
    index_dir = args.index or os.environ.get(INDEX_ENV_VAR)
    if not index_dir:
        raise PseudoseerError(
            f"no index directory: pass --index or set {INDEX_ENV_VAR}"
        )
    return index_dir


def _cmd_ingest(args) -> int:
    if not os.path.isdir(args.latex_dir):
        raise PseudoseerError(f"latex dir not found: {args.latex_dir}")
    paths = []
    for root, _, names in os.walk(args.latex_dir):
        for name in names:
            if name.endswith(".tex"):
                paths.append(os.path.join(root, name))
    paths.sort()
    records = []
    block_count = 0
    warning_count = 0
    for path in paths:
        rel = os.path.relpath(path, args.latex_dir)
        arxiv_id = rel[: -len(".tex")].replace(os.sep, "/")
        try:
            with open(path, encoding="utf-8", errors="replace") as handle:
                source = handle.read()
        except OSError as exc:
            _warn(f"{rel}: unreadable, skipped ({exc})")
            warning_count += 1
            continue
        paper, blocks, warnings = extract_paper(
            source, arxiv_id, args.window_radius
        )
        for message in warnings:
            _warn(f"{rel}: {message}")
        warning_count += len(warnings)
        block_count += len(blocks)
        records.append((paper, blocks))
    try:
        write_corpus_file(args.out, records)
    except OSError as exc:
        if os.path.exists(args.out):
            os.unlink(args.out)
        raise PseudoseerError(f"cannot write corpus file {args.out}: {exc}") from exc
    print(f"papers: {len(records)}")
    print(f"blocks: {block_count}")
    print(f"warnings: {warning_count}")
    return 0


def _cmd_index(args) -> int:
    records, warnings = load_corpus_file(args.corpus)
    for message in warnings:
        _warn(message)
    writer = IndexWriter()
    for paper, blocks in records:
        writer.add_document(paper, blocks)
    existed = os.path.isdir(args.out)
    try:
        manifest = writer.commit(args.out)
    except OSError as exc:
        if not existed and os.path.isdir(args.out):
            shutil.rmtree(args.out, ignore_errors=True)
        raise PseudoseerError(f"cannot write index {args.out}: {exc}") from exc
    print(f"documents: {manifest['doc_count']}")
    for fld in FIELDS:
        stats = manifest["field_stats"][fld]
        docs = stats["doc_count_with_field"]
        tokens = stats["total_token_count"]
        avg = tokens / docs if docs else 0.0
        print(f"{fld}: docs={docs} tokens={tokens} avg_length={avg:.2f}")
    return 0


def _cmd_search(args) -> int:
    reader = IndexReader.open(_index_dir(args))
    config = ServiceConfig()
    size = args.size if args.size is not None else config.page_size_default
    payload = search_payload(reader, args.q, args.fields, args.page, size, config)
    sys.stdout.buffer.write(canonical_json(payload).encode("utf-8"))
    sys.stdout.buffer.flush()
    return 0


def _cmd_serve(args) -> int:
    config = load_config(args.config)
    if args.index:
        config.index_dir = args.index
    elif not config.index_dir:
        config.index_dir = os.environ.get(INDEX_ENV_VAR, "")
    if not config.index_dir:
        raise PseudoseerError(
            f"no index directory: pass --index, set {INDEX_ENV_VAR}, "
            "or put index_dir in the config file"
        )
    if args.listen:
        config.listen_address = args.listen
    host, _, port_text = config.listen_address.rpartition(":")
    if not host or not port_text.isdigit():
        raise PseudoseerError(
            f"listen address must be host:port, got {config.listen_address!r}"
        )
    reader = IndexReader.open(config.index_dir)
    static_dir = args.static if os.path.isdir(args.static) else None
    app = create_app(reader, config, static_dir=static_dir)

    import uvicorn

    uvicorn.run(app, host=host, port=int(port_text), log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudoseer", description="Pseudocode search engine"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser(
        "ingest", help="extract a corpus file from .tex sources"
    )
    ingest.add_argument("--latex-dir", required=True, help="directory of .tex files")
    ingest.add_argument("--out", required=True, help="corpus file to write")
    ingest.add_argument(
        "--window-radius",
        type=int,
        default=DEFAULT_WINDOW_RADIUS,
        help="characters of context kept around each reference",
    )
    ingest.set_defaults(func=_cmd_ingest)

    index = sub.add_parser("index", help="build an index from a corpus file")
    index.add_argument("--corpus", required=True, help="corpus file to read")
    index.add_argument("--out", required=True, help="index directory to write")
    index.set_defaults(func=_cmd_index)

    search_cmd = sub.add_parser("search", help="query an index, print JSON")
    search_cmd.add_argument("--index", help="index directory")
    search_cmd.add_argument("--q", required=True, help="query string")
    search_cmd.add_argument("--fields", help="comma-separated field names")
    search_cmd.add_argument("--page", type=int, default=1)
    search_cmd.add_argument("--size", type=int, default=None)
    search_cmd.set_defaults(func=_cmd_search)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--index", help="index directory")
    serve.add_argument("--listen", help="host:port to bind")
    serve.add_argument("--config", help="JSON config file")
    serve.add_argument(
        "--static",
        default=os.path.join("frontend", "dist"),
        help="directory of built frontend assets",
    )
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PseudoseerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
