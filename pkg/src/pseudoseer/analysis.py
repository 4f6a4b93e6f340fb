"""Field analyzers: a Unicode prose tokenizer and a LaTeX-aware variant.

Prose text is split at UAX #29 word boundaries; segments containing no
alphanumeric character are dropped and the survivors are case-folded.
LaTeX text gets one extra rule: a backslash followed by a letter run is
kept as a single command token ("\\For" becomes "\\for"), and a backslash
escaping a single non-letter is dropped.  Token offsets are UTF-8 byte
offsets into the source text, end exclusive, so callers can slice the
encoded text without re-tokenizing.
"""

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from ._wordbreak import word_segments
from .errors import UnknownFieldError

# Canonical field order, used everywhere a field list is serialized.
FIELDS = ("title", "abstract", "authors", "references", "latex")

# Recorded in index manifests; bump on any change to tokenizer output.
ANALYZER_VERSION = "1"

# Control words are backslash + ASCII letters; anything else after a
# backslash is a one-character escape (or a lone trailing backslash).
_CONTROL_RE = re.compile(r"\\([A-Za-z]+)|\\.?", re.S)


@dataclass(frozen=True, slots=True)
class Token:
    term: str
    position: int
    start_offset: int
    end_offset: int


def _byte_index(text: str) -> list[int] | None:
    """Cumulative UTF-8 byte offset per char index; None when ASCII."""
    if text.isascii():
        return None
    offsets = [0] * (len(text) + 1)
    total = 0
    for i, ch in enumerate(text):
        cp = ord(ch)
        total += 1 if cp < 0x80 else 2 if cp < 0x800 else 3 if cp < 0x10000 else 4
        offsets[i + 1] = total
    return offsets


def _prose_spans(text: str, base: int) -> Iterator[tuple[int, int]]:
    """Word-segment char spans of ``text`` that keep an alphanumeric char."""
    for start, end in word_segments(text):
        if any(ch.isalnum() for ch in text[start:end]):
            yield (base + start, base + end)


def _tokens_from_spans(spans: Iterable[tuple[int, int]], text: str) -> list[Token]:
    index = _byte_index(text)
    tokens = []
    for position, (start, end) in enumerate(spans):
        if index is None:
            byte_start, byte_end = start, end
        else:
            byte_start, byte_end = index[start], index[end]
        tokens.append(Token(text[start:end].casefold(), position, byte_start, byte_end))
    return tokens


def tokenize_text(text: str) -> list[Token]:
    """Tokenize prose into case-folded alphanumeric word segments."""
    return _tokens_from_spans(_prose_spans(text, 0), text)


def tokenize_latex(code: str) -> list[Token]:
    """Tokenize LaTeX, keeping "\\Name" commands as single tokens.

    Everything between commands follows the prose rules; positions number
    the merged stream in source order.
    """
    spans: list[tuple[int, int]] = []
    last = 0
    for m in _CONTROL_RE.finditer(code):
        if m.start() > last:
            spans.extend(_prose_spans(code[last : m.start()], last))
        if m.group(1):
            spans.append((m.start(), m.end()))
        last = m.end()
    if last < len(code):
        spans.extend(_prose_spans(code[last:], last))
    return _tokens_from_spans(spans, code)


def analyzer_for(field: str) -> Callable[[str], list[Token]]:
    """Tokenizer for a field: latex gets tokenize_latex, prose otherwise."""
    if field not in FIELDS:
        raise UnknownFieldError(field)
    return tokenize_latex if field == "latex" else tokenize_text
