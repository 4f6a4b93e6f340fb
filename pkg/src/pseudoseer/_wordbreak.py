"""Unicode word-boundary detection (UAX #29 word-break rules).

Pure-Python implementation of the default word-boundary rules, driven
by the property tables in :mod:`pseudoseer._wordbreak_tables`.
Conformance is checked against the official WordBreakTest cases in the
test suite.
"""

from bisect import bisect_right

from ._wordbreak_tables import EXTENDED_PICTOGRAPHIC_RANGES, WORD_BREAK_RANGES

# Word_Break categories, as small ints for fast comparison.
_OTHER = 0
_CR = 1
_LF = 2
_NEWLINE = 3
_EXTEND = 4
_FORMAT = 5
_ZWJ = 6
_RI = 7
_KATAKANA = 8
_HEBREW_LETTER = 9
_ALETTER = 10
_SINGLE_QUOTE = 11
_DOUBLE_QUOTE = 12
_MIDNUMLET = 13
_MIDLETTER = 14
_MIDNUM = 15
_NUMERIC = 16
_EXTENDNUMLET = 17
_WSEGSPACE = 18

_CAT_BY_NAME = {
    "Other": _OTHER,
    "CR": _CR,
    "LF": _LF,
    "Newline": _NEWLINE,
    "Extend": _EXTEND,
    "Format": _FORMAT,
    "ZWJ": _ZWJ,
    "Regional_Indicator": _RI,
    "Katakana": _KATAKANA,
    "Hebrew_Letter": _HEBREW_LETTER,
    "ALetter": _ALETTER,
    "Single_Quote": _SINGLE_QUOTE,
    "Double_Quote": _DOUBLE_QUOTE,
    "MidNumLet": _MIDNUMLET,
    "MidLetter": _MIDLETTER,
    "MidNum": _MIDNUM,
    "Numeric": _NUMERIC,
    "ExtendNumLet": _EXTENDNUMLET,
    "WSegSpace": _WSEGSPACE,
}

_WB_LO = tuple(lo for lo, _, _ in WORD_BREAK_RANGES)
_WB_HI = tuple(hi for _, hi, _ in WORD_BREAK_RANGES)
_WB_CAT = tuple(_CAT_BY_NAME[name] for _, _, name in WORD_BREAK_RANGES)

_PICT_LO = tuple(lo for lo, _ in EXTENDED_PICTOGRAPHIC_RANGES)
_PICT_HI = tuple(hi for _, hi in EXTENDED_PICTOGRAPHIC_RANGES)

# Rule groupings.
_IGNORE = frozenset((_EXTEND, _FORMAT, _ZWJ))
_NEWLINES = frozenset((_NEWLINE, _CR, _LF))
_AHLETTER = frozenset((_ALETTER, _HEBREW_LETTER))
_MID_LETTERISH = frozenset((_MIDLETTER, _MIDNUMLET, _SINGLE_QUOTE))
_MID_NUMISH = frozenset((_MIDNUM, _MIDNUMLET, _SINGLE_QUOTE))
_WORDISH = frozenset((_ALETTER, _HEBREW_LETTER, _NUMERIC, _KATAKANA))


def _category(cp: int) -> int:
    i = bisect_right(_WB_LO, cp) - 1
    if i >= 0 and cp <= _WB_HI[i]:
        return _WB_CAT[i]
    return _OTHER


_ASCII_CATS = tuple(_category(cp) for cp in range(128))
_cat_cache: dict = {}


def _char_category(ch: str) -> int:
    cp = ord(ch)
    if cp < 128:
        return _ASCII_CATS[cp]
    cat = _cat_cache.get(cp)
    if cat is None:
        cat = _cat_cache[cp] = _category(cp)
    return cat


def _is_pictographic(ch: str) -> bool:
    cp = ord(ch)
    i = bisect_right(_PICT_LO, cp) - 1
    return i >= 0 and cp <= _PICT_HI[i]


def word_boundaries(text: str) -> list[int]:
    """All word-boundary positions in ``text``, including 0 and len(text)."""
    n = len(text)
    if n == 0:
        return [0]
    cats = [_char_category(ch) for ch in text]

    # next_cat[i]: first non-ignorable category after index i, else None.
    next_cat: list = [None] * n
    ahead = None
    for i in range(n - 1, -1, -1):
        next_cat[i] = ahead
        if cats[i] not in _IGNORE:
            ahead = cats[i]

    boundaries = [0]
    prev = None  # effective left context (last non-ignorable before boundary)
    prev2 = None
    ri_run = 0  # consecutive Regional_Indicators ending at prev

    for i in range(1, n):
        left = cats[i - 1]
        if left not in _IGNORE:
            prev2 = prev
            prev = left
            ri_run = ri_run + 1 if left == _RI else 0

        right = cats[i]
        if left == _CR and right == _LF:  # WB3
            continue
        if left in _NEWLINES or right in _NEWLINES:  # WB3a, WB3b
            boundaries.append(i)
            continue
        if left == _ZWJ and _is_pictographic(text[i]):  # WB3c
            continue
        if left == _WSEGSPACE and right == _WSEGSPACE:  # WB3d
            continue
        if right in _IGNORE:  # WB4
            continue

        lx, lxx, rx, rxx = prev, prev2, right, next_cat[i]
        if lx in _AHLETTER:
            if rx in _AHLETTER:  # WB5
                continue
            if rx in _MID_LETTERISH and rxx in _AHLETTER:  # WB6
                continue
            if rx == _NUMERIC:  # WB9
                continue
        if lx in _MID_LETTERISH and lxx in _AHLETTER and rx in _AHLETTER:  # WB7
            continue
        if lx == _HEBREW_LETTER:
            if rx == _SINGLE_QUOTE:  # WB7a
                continue
            if rx == _DOUBLE_QUOTE and rxx == _HEBREW_LETTER:  # WB7b
                continue
        if lx == _DOUBLE_QUOTE and lxx == _HEBREW_LETTER and rx == _HEBREW_LETTER:  # WB7c
            continue
        if lx == _NUMERIC:
            if rx == _NUMERIC:  # WB8
                continue
            if rx in _AHLETTER:  # WB10
                continue
            if rx in _MID_NUMISH and rxx == _NUMERIC:  # WB12
                continue
        if lx in _MID_NUMISH and lxx == _NUMERIC and rx == _NUMERIC:  # WB11
            continue
        if lx == _KATAKANA and rx == _KATAKANA:  # WB13
            continue
        if rx == _EXTENDNUMLET and (lx in _WORDISH or lx == _EXTENDNUMLET):  # WB13a
            continue
        if lx == _EXTENDNUMLET and rx in _WORDISH:  # WB13b
            continue
        if lx == _RI and rx == _RI and ri_run % 2 == 1:  # WB15, WB16
            continue

        boundaries.append(i)  # WB999

    boundaries.append(n)
    return boundaries


def word_segments(text: str) -> list[tuple[int, int]]:
    """(start, end) character spans of the UAX #29 word segments of ``text``."""
    bounds = word_boundaries(text)
    return [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]
