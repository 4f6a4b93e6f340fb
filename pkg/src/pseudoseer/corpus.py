"""LaTeX corpus extraction: algorithm blocks, reference windows, metadata.

Raw LaTeX sources are scanned for `algorithm` environments (starred form
included).  Nested or unclosed environments are skipped with a warning
rather than guessed at.  Reference contexts are windows of text around
\\ref-style commands citing a block's labels, stored both raw and with
the LaTeX syntax stripped.
"""

import json
import re
from dataclasses import dataclass, field

from .errors import ConfigError, CorpusError

DEFAULT_WINDOW_RADIUS = 300

_ALGO_TAG_RE = re.compile(r"\\(begin|end)\{algorithm\*?\}")
_LABEL_RE = re.compile(r"\\label\{([^}]*)\}")
_REF_RE = re.compile(r"\\(ref|autoref|cref|Cref|eqref)\{([^}]*)\}")
_EQ_PREFIXES = ("eq:", "eqn:", "equation:")

# clean_latex pipeline pieces, applied in the order defined below.
_COMMENT_RE = re.compile(r"((?:^|[^\\])(?:\\\\)*)%[^\n]*")
_CITEREF_RE = re.compile(
    r"\\(?:ref|autoref|cref|Cref|eqref|[cC]ite[a-zA-Z]*)\*?\s*(?:\[[^\]]*\])*\s*\{([^}]*)\}"
)
_WRAP_RE = re.compile(
    r"\\(?:emph|textbf|textit|texttt|textsc|textsf|textrm|text|mbox|underline)\s*\{([^{}]*)\}"
)
_ENV_RE = re.compile(r"\\(?:begin|end)\s*\{[^}]*\}(?:\[[^\]]*\])?")
_COMMAND_RE = re.compile(r"\\[A-Za-z]+\*?(?:\[[^\]]*\])*")
_KEPT_ESCAPE_RE = re.compile(r"\\([&_$#])")
_STRAY_BACKSLASH_RE = re.compile(r"\\[^A-Za-z]?", re.S)
_WS_RE = re.compile(r"\s+")


@dataclass
class ReferenceContext:
    label: str
    raw_window: str
    cleaned_text: str


@dataclass
class PseudocodeBlock:
    paper_id: str
    latex_body: str
    labels: list[str] = field(default_factory=list)
    reference_contexts: list[ReferenceContext] = field(default_factory=list)
    equation_refs: list[str] = field(default_factory=list)


@dataclass
class PaperRecord:
    arxiv_id: str
    title: str = ""
    abstract: str = ""
    authors: list[str] = field(default_factory=list)
    year: int | None = None
    url: str = ""


def _equation_refs_in(body: str) -> list[str]:
    refs: list[str] = []
    for m in _REF_RE.finditer(body):
        for label in (part.strip() for part in m.group(2).split(",")):
            if not label:
                continue
            if m.group(1) == "eqref" or label.startswith(_EQ_PREFIXES):
                if label not in refs:
                    refs.append(label)
    return refs


def extract_pseudocode(latex_source: str) -> tuple[list[PseudocodeBlock], list[str]]:
    """All well-formed algorithm environments, in document order.

    Returns (blocks, warnings).  An unclosed begin tag is skipped and the
    scan resumes right after it; a nested environment skips the whole
    outer region.  Never raises on malformed input.
    """
    blocks: list[PseudocodeBlock] = []
    warnings: list[str] = []
    events = list(_ALGO_TAG_RE.finditer(latex_source))
    i = 0
    while i < len(events):
        begin = events[i]
        if begin.group(1) == "end":
            i += 1
            continue
        depth, nested, j = 1, False, i + 1
        while j < len(events) and depth:
            if events[j].group(1) == "begin":
                depth += 1
                nested = True
            else:
                depth -= 1
            j += 1
        if depth:
            warnings.append(
                f"unbalanced algorithm environment at offset {begin.start()}"
            )
            i += 1
            continue
        if nested:
            warnings.append(f"nested algorithm environment at offset {begin.start()}")
            i = j
            continue
        body = latex_source[begin.start() : events[j - 1].end()]
        blocks.append(
            PseudocodeBlock(
                paper_id="",
                latex_body=body,
                labels=[m.group(1) for m in _LABEL_RE.finditer(body)],
                equation_refs=_equation_refs_in(body),
            )
        )
        i = j
    return blocks, warnings


def extract_references(
    latex_source: str,
    block: PseudocodeBlock,
    window_radius: int = DEFAULT_WINDOW_RADIUS,
) -> list[ReferenceContext]:
    """Reference contexts for every citation of the block's labels.

    Each \\ref/\\autoref/\\cref/\\Cref/\\eqref site outside the block
    yields a window of window_radius characters on each side, clipped at
    the document boundaries.
    """
    if window_radius <= 0:
        raise ConfigError(f"window_radius must be positive, got {window_radius}")
    span_start = latex_source.find(block.latex_body)
    span_end = span_start + len(block.latex_body)
    sites = [
        (m.start(), m.end(), [part.strip() for part in m.group(2).split(",")])
        for m in _REF_RE.finditer(latex_source)
    ]
    contexts: list[ReferenceContext] = []
    for label in block.labels:
        for start, end, targets in sites:
            if label not in targets:
                continue
            if span_start >= 0 and start >= span_start and end <= span_end:
                continue
            lo = max(0, start - window_radius)
            hi = min(len(latex_source), end + window_radius)
            raw = latex_source[lo:hi]
            contexts.append(ReferenceContext(label, raw, clean_latex(raw)))
    return contexts


def clean_latex(raw: str) -> str:
    """Strip LaTeX syntax down to plain text.

    Comments go first, then reference/citation commands collapse to their
    argument, formatting wrappers unwrap, begin/end tags vanish, and any
    remaining command is dropped keeping brace-delimited text.  Output has
    no backslashes, braces, or comment characters; whitespace is collapsed.
    Idempotent.
    """
    text = _COMMENT_RE.sub(r"\1", raw)
    text = text.replace("\\\\", " ")
    text = _CITEREF_RE.sub(r"\1", text)
    while True:
        text, n = _WRAP_RE.subn(r"\1", text)
        if not n:
            break
    text = _ENV_RE.sub(" ", text)
    text = _COMMAND_RE.sub(" ", text)
    text = _KEPT_ESCAPE_RE.sub(r"\1", text)
    text = _STRAY_BACKSLASH_RE.sub(" ", text)
    text = text.replace("~", " ").replace("{", " ").replace("}", " ")
    return _WS_RE.sub(" ", text).strip()


def _command_arg(source: str, command: str) -> str | None:
    """Brace-balanced argument of the first \\command{...}, or None."""
    m = re.search(r"\\" + command + r"\s*(?:\[[^\]]*\])?\s*\{", source)
    if not m:
        return None
    depth, i = 1, m.end()
    start = i
    while i < len(source) and depth:
        ch = source[i]
        if ch == "\\":
            i += 2
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        i += 1
    return source[start : i - 1] if depth == 0 else source[start:]


_ABSTRACT_ENV_RE = re.compile(r"\\begin\{abstract\}(.*?)\\end\{abstract\}", re.S)
_ID_YEAR_RE = re.compile(r"(?:^|/)(\d{2})(\d{2})")


def _year_from_id(arxiv_id: str) -> int | None:
    m = _ID_YEAR_RE.search(arxiv_id)
    if not m:
        return None
    yy, mm = int(m.group(1)), int(m.group(2))
    if not 1 <= mm <= 12:
        return None
    return 1900 + yy if yy >= 91 else 2000 + yy


def arxiv_url(arxiv_id: str) -> str:
    return f"https://arxiv.org/abs/{arxiv_id}"


def parse_paper_metadata(latex_source: str, arxiv_id: str) -> PaperRecord:
    """Title, abstract, and authors from the preamble; empty when absent."""
    if not arxiv_id:
        raise ConfigError("arxiv_id must be non-empty")
    title = _command_arg(latex_source, "title")
    m = _ABSTRACT_ENV_RE.search(latex_source)
    abstract = m.group(1) if m else _command_arg(latex_source, "abstract")
    raw_authors = _command_arg(latex_source, "author")
    authors = []
    if raw_authors is not None:
        for part in re.split(r"\\and\b|,", raw_authors):
            name = clean_latex(part)
            if name:
                authors.append(name)
    return PaperRecord(
        arxiv_id=arxiv_id,
        title=clean_latex(title) if title else "",
        abstract=clean_latex(abstract) if abstract else "",
        authors=authors,
        year=_year_from_id(arxiv_id),
        url=arxiv_url(arxiv_id),
    )


def extract_paper(
    latex_source: str,
    arxiv_id: str,
    window_radius: int = DEFAULT_WINDOW_RADIUS,
) -> tuple[PaperRecord, list[PseudocodeBlock], list[str]]:
    """Full single-document pipeline: metadata, blocks, reference contexts."""
    paper = parse_paper_metadata(latex_source, arxiv_id)
    blocks, warnings = extract_pseudocode(latex_source)
    for block in blocks:
        block.paper_id = arxiv_id
        block.reference_contexts = extract_references(
            latex_source, block, window_radius
        )
    return paper, blocks, warnings


def record_to_dict(paper: PaperRecord, blocks: list[PseudocodeBlock]) -> dict:
    return {
        "arxiv_id": paper.arxiv_id,
        "title": paper.title,
        "abstract": paper.abstract,
        "authors": list(paper.authors),
        "year": paper.year,
        "url": paper.url,
        "pseudocodes": [
            {
                "latex_body": b.latex_body,
                "labels": list(b.labels),
                "reference_contexts": [
                    {
                        "label": c.label,
                        "raw_window": c.raw_window,
                        "cleaned_text": c.cleaned_text,
                    }
                    for c in b.reference_contexts
                ],
                "equation_refs": list(b.equation_refs),
            }
            for b in blocks
        ],
    }


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _string_list(value, what: str) -> list[str]:
    _require(
        isinstance(value, list) and all(isinstance(v, str) for v in value),
        f"{what} must be a list of strings",
    )
    return list(value)


def record_from_dict(obj: dict) -> tuple[PaperRecord, list[PseudocodeBlock]]:
    _require(isinstance(obj, dict), "record must be an object")
    arxiv_id = obj.get("arxiv_id")
    _require(
        isinstance(arxiv_id, str) and arxiv_id != "",
        "arxiv_id must be a non-empty string",
    )
    for key in ("title", "abstract", "url"):
        _require(isinstance(obj.get(key, ""), str), f"{key} must be a string")
    year = obj.get("year")
    _require(year is None or isinstance(year, int), "year must be an integer or null")
    paper = PaperRecord(
        arxiv_id=arxiv_id,
        title=obj.get("title", ""),
        abstract=obj.get("abstract", ""),
        authors=_string_list(obj.get("authors", []), "authors"),
        year=year,
        url=obj.get("url", "") or arxiv_url(arxiv_id),
    )
    blocks = []
    raw_blocks = obj.get("pseudocodes", [])
    _require(isinstance(raw_blocks, list), "pseudocodes must be a list")
    for raw in raw_blocks:
        _require(isinstance(raw, dict), "pseudocode entry must be an object")
        _require(isinstance(raw.get("latex_body"), str), "latex_body must be a string")
        contexts = []
        for c in raw.get("reference_contexts", []):
            _require(
                isinstance(c, dict)
                and all(
                    isinstance(c.get(k), str)
                    for k in ("label", "raw_window", "cleaned_text")
                ),
                "reference context must have string label/raw_window/cleaned_text",
            )
            contexts.append(
                ReferenceContext(c["label"], c["raw_window"], c["cleaned_text"])
            )
        blocks.append(
            PseudocodeBlock(
                paper_id=arxiv_id,
                latex_body=raw["latex_body"],
                labels=_string_list(raw.get("labels", []), "labels"),
                reference_contexts=contexts,
                equation_refs=_string_list(
                    raw.get("equation_refs", []), "equation_refs"
                ),
            )
        )
    return paper, blocks


def write_corpus_file(
    path: str, records: list[tuple[PaperRecord, list[PseudocodeBlock]]]
) -> None:
    """One JSON object per line, UTF-8."""
    with open(path, "w", encoding="utf-8") as handle:
        for paper, blocks in records:
            handle.write(json.dumps(record_to_dict(paper, blocks), ensure_ascii=False))
            handle.write("\n")


def load_corpus_file(
    path: str,
) -> tuple[list[tuple[PaperRecord, list[PseudocodeBlock]]], list[str]]:
    """Parse a corpus file, skipping invalid lines with a warning.

    Returns (records, warnings); warnings carry 1-based line numbers.
    Raises CorpusError when the file itself cannot be read.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {path}: {exc}") from exc
    records: list[tuple[PaperRecord, list[PseudocodeBlock]]] = []
    warnings: list[str] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            paper, blocks = record_from_dict(json.loads(line))
        except (json.JSONDecodeError, ValueError) as exc:
            warnings.append(f"line {lineno}: {exc}")
            continue
        if paper.arxiv_id in seen:
            warnings.append(f"line {lineno}: duplicate arxiv_id {paper.arxiv_id!r}")
            continue
        seen.add(paper.arxiv_id)
        records.append((paper, blocks))
    return records, warnings
