"""Text cleanup, segmentation, and lexical annotation.

A raw post is first split into structural markers (title, mentions,
hashtags, URLs, emoticons) and clean running text. The clean text is then
segmented by forward maximum match over the segmentation dictionary and
scanned for every lexicon category.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from typing import Mapping

from .lexicon import ANNOTATION_CATEGORIES, LexiconSet, PosTag

_URL_RE = re.compile(r"https?://[A-Za-z0-9._~:/?#@!$&'()*+,;=%-]+")
_MENTION_RE = re.compile(r"@[A-Za-z0-9_一-鿿·-]+")
_HASHTAG_RE = re.compile(r"#[^#]+#")
_FACE_RE = re.compile(r"\[[^\[\]]{1,8}\]")
_TITLE_RE = re.compile(r"^(\s*)【([^】]*)】")

# Emoji blocks treated as emoticons; joiners and variation selectors are
# dropped without being counted.
_EMOJI_RANGES = ((0x1F000, 0x1FAFF), (0x2600, 0x27BF))
_EMOJI_GLUE = {0x200D, 0xFE0E, 0xFE0F}

_EXCLAMATION = frozenset("!！")
_QUESTION = frozenset("?？")
_PAUSES = frozenset("，、；：,;:")
_CLAUSE_SEPARATORS = frozenset("，；,;")
_QUOTES = frozenset("\"'“”‘’「」『』")
_TERMINATORS = frozenset("。．!！?？…")

_CJK_RANGES = ((0x4E00, 0x9FFF), (0x3400, 0x4DBF), (0xF900, 0xFAFF))


def _is_emoji(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES)


def _is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


@dataclass(frozen=True)
class StructuralMarkers:
    """Counts of non-linguistic structure removed from the raw text."""

    urls: int = 0
    mentions: int = 0
    hashtags: int = 0
    faces: int = 0
    title_present: bool = False
    exclamation_marks: int = 0
    question_marks: int = 0
    intra_sentence_pauses: int = 0
    clause_separators: int = 0
    sentence_terminators: int = 0
    quote_chars: int = 0


@dataclass(frozen=True)
class Token:
    surface: str
    char_offset: int
    char_len: int
    pos: PosTag


@dataclass(frozen=True)
class AnnotatedText:
    clean_text: str
    markers: StructuralMarkers
    tokens: tuple[Token, ...]
    category_counts: Mapping[str, int]
    sentiment_weight_sum: float
    sentiment_match_count: int


def _sentence_terminator_runs(text: str) -> int:
    """Count maximal runs of sentence-ending punctuation.

    An ASCII period flanked by digits on both sides is a decimal point
    and does not end a sentence.
    """
    runs = 0
    in_run = False
    for i, ch in enumerate(text):
        if ch in _TERMINATORS:
            ends = True
        elif ch == ".":
            prev_digit = i > 0 and text[i - 1].isdigit()
            next_digit = i + 1 < len(text) and text[i + 1].isdigit()
            ends = not (prev_digit and next_digit)
        else:
            ends = False
        if ends and not in_run:
            runs += 1
        in_run = ends
    return runs


def _removal_pass(text: str) -> tuple[str, tuple[int, int, int, int, bool]]:
    work, urls = _URL_RE.subn("", text)
    work, hashtags = _HASHTAG_RE.subn("", work)
    work, mentions = _MENTION_RE.subn("", work)
    work, faces = _FACE_RE.subn("", work)

    chars = []
    for ch in work:
        if _is_emoji(ch):
            faces += 1
        elif ord(ch) in _EMOJI_GLUE:
            pass
        else:
            chars.append(ch)
    work = "".join(chars)

    title = _TITLE_RE.match(work)
    if title:
        work = title.group(1) + title.group(2) + work[title.end():]
    return work, (urls, hashtags, mentions, faces, title is not None)


def strip_structure(text: str) -> tuple[str, StructuralMarkers]:
    """Split raw post text into clean running text and structural markers.

    Removal runs to a fixed point: stripping one span can expose another
    (a face between a mention sigil and its name, say), so passes repeat
    until the text stops changing. Each pass only shortens the text, which
    bounds the loop. The result is idempotent by construction.
    """
    urls = hashtags = mentions = faces = 0
    title_present = False
    work = text
    while True:
        done, (u, h, m, f, t) = _removal_pass(work)
        urls += u
        hashtags += h
        mentions += m
        faces += f
        title_present = title_present or t
        if done == work:
            break
        work = done

    markers = StructuralMarkers(
        urls=urls,
        mentions=mentions,
        hashtags=hashtags,
        faces=faces,
        title_present=title_present,
        exclamation_marks=sum(1 for c in work if c in _EXCLAMATION),
        question_marks=sum(1 for c in work if c in _QUESTION),
        intra_sentence_pauses=sum(1 for c in work if c in _PAUSES),
        clause_separators=sum(1 for c in work if c in _CLAUSE_SEPARATORS),
        sentence_terminators=_sentence_terminator_runs(work),
        quote_chars=sum(1 for c in work if c in _QUOTES),
    )
    return work, markers


def _is_run_char(ch: str) -> bool:
    # ASCII letters and digits form single tokens regardless of the dictionary
    return ch.isascii() and ch.isalnum()


def _char_pos(ch: str, lex: LexiconSet) -> PosTag:
    tag = lex.pos.get(ch)
    if tag is not None:
        return tag
    if unicodedata.category(ch)[0] in ("P", "S"):
        return PosTag.PUNCTUATION
    return PosTag.OTHER


def tokenize(clean_text: str, lex: LexiconSet) -> tuple[Token, ...]:
    """Forward-maximum-match segmentation over the segmentation dictionary.

    ASCII alphanumeric runs are emitted whole (all-digit runs tagged as
    numerals). CJK characters not covered by the dictionary become
    single-character tokens. Whitespace and stray punctuation or symbols
    outside the dictionary produce no tokens.
    """
    tokens: list[Token] = []
    n = len(clean_text)
    i = 0
    while i < n:
        ch = clean_text[i]
        if ch.isspace():
            i += 1
            continue
        if _is_run_char(ch):
            j = i + 1
            while j < n and _is_run_char(clean_text[j]):
                j += 1
            surface = clean_text[i:j]
            if surface.isdigit():
                pos = PosTag.NUMERAL
            else:
                pos = lex.pos.get(surface, PosTag.OTHER)
            tokens.append(Token(surface, i, j - i, pos))
            i = j
            continue
        matched = None
        for length in range(min(lex.max_word_len, n - i), 1, -1):
            candidate = clean_text[i : i + length]
            if candidate in lex.segmentation:
                matched = candidate
                break
        if matched is not None:
            tokens.append(
                Token(matched, i, len(matched), lex.pos.get(matched, PosTag.OTHER))
            )
            i += len(matched)
            continue
        if _is_cjk(ch) or ch in lex.segmentation:
            tokens.append(Token(ch, i, 1, _char_pos(ch, lex)))
        i += 1
    return tuple(tokens)


def count_occurrences(text: str, needle: str) -> int:
    """Number of start positions where *needle* occurs in *text*.

    Overlapping occurrences count once per start position.
    """
    if not needle:
        return 0
    count = 0
    start = text.find(needle)
    while start != -1:
        count += 1
        start = text.find(needle, start + 1)
    return count


def annotate(text: str, lex: LexiconSet) -> AnnotatedText:
    """Full annotation of one raw post text."""
    clean, markers = strip_structure(text)
    tokens = tokenize(clean, lex)

    category_counts = {
        category: sum(
            count_occurrences(clean, entry) for entry in lex.categories[category]
        )
        for category in ANNOTATION_CATEGORIES
    }

    weight_sum = 0.0
    match_count = 0
    for surface, weight in lex.sentiment.items():
        hits = count_occurrences(clean, surface)
        if hits:
            weight_sum += hits * weight
            match_count += hits
    return AnnotatedText(
        clean_text=clean,
        markers=markers,
        tokens=tokens,
        category_counts=category_counts,
        sentiment_weight_sum=weight_sum,
        sentiment_match_count=match_count,
    )
