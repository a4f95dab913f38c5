"""Lexicon loading.

All lexical resources live in one directory of UTF-8 text files. Lines
starting with ``#`` and blank lines are ignored. Most files carry one
surface form per line; ``pos.tsv`` and ``sentiment.txt`` are tab-separated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import LexiconError

logger = logging.getLogger(__name__)


class PosTag(str, Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    PREPOSITION = "preposition"
    PRONOUN = "pronoun"
    NUMERAL = "numeral"
    TIME_WORD = "time_word"
    PLACE_WORD = "place_word"
    NAMED_ENTITY = "named_entity"
    MODAL_PARTICLE = "modal_particle"
    PUNCTUATION = "punctuation"
    OTHER = "other"


SEGMENTATION = "segmentation"
POS = "pos"
SENTIMENT = "sentiment"
PROFESSIONAL_TERMS = "professional_terms"
OFFICIAL_SPEECH = "official_speech"
UNCERTAINTY = "uncertainty"
CONJUNCTIONS = "conjunctions"
ADVERSATIVES = "adversatives"
DEGREE_ADVERBS = "degree_adverbs"
MODAL_PARTICLES = "modal_particles"
IDIOMS = "idioms"
INTERROGATIVE_PRONOUNS = "interrogative_pronouns"
FIRST_PERSON_PRONOUNS = "first_person_pronouns"
SECOND_PERSON_PRONOUNS = "second_person_pronouns"
DEMONSTRATIVES = "demonstratives"
THIRD_PERSON_PRONOUNS = "third_person_pronouns"
LOTTERY_MARKERS = "lottery_markers"

# Categories whose entries are matched as plain substrings of the clean text.
SURFACE_CATEGORIES: tuple[str, ...] = (
    PROFESSIONAL_TERMS,
    OFFICIAL_SPEECH,
    UNCERTAINTY,
    CONJUNCTIONS,
    ADVERSATIVES,
    DEGREE_ADVERBS,
    MODAL_PARTICLES,
    IDIOMS,
    INTERROGATIVE_PRONOUNS,
    FIRST_PERSON_PRONOUNS,
    SECOND_PERSON_PRONOUNS,
    DEMONSTRATIVES,
    THIRD_PERSON_PRONOUNS,
    LOTTERY_MARKERS,
)

# Substring categories tallied during annotation (lottery markers are only
# consulted by the corpus filter, never counted as a feature source).
ANNOTATION_CATEGORIES: tuple[str, ...] = tuple(
    c for c in SURFACE_CATEGORIES if c != LOTTERY_MARKERS
)

CATEGORY_FILES: dict[str, str] = {
    SEGMENTATION: "segmentation.txt",
    POS: "pos.tsv",
    SENTIMENT: "sentiment.txt",
    **{c: f"{c}.txt" for c in SURFACE_CATEGORIES},
}


@dataclass(frozen=True)
class LexiconSet:
    """All loaded lexical resources. Treated as immutable after load."""

    segmentation: frozenset[str]
    max_word_len: int
    pos: Mapping[str, PosTag]
    sentiment: Mapping[str, float]
    categories: Mapping[str, tuple[str, ...]]


def default_lexicon_dir() -> Path:
    """Directory of the lexicons shipped with the package."""
    return Path(str(resources.files("snqam").joinpath("data/lexicons")))


def _read_lines(path: Path) -> list[tuple[int, str]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LexiconError(f"{path.name}: cannot read lexicon file: {exc}") from exc
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def _load_surface_file(path: Path) -> tuple[str, ...]:
    seen: dict[str, int] = {}
    entries = []
    for lineno, line in _read_lines(path):
        if line in seen:
            raise LexiconError(
                f"{path.name}:{lineno}: duplicate entry {line!r} "
                f"(first seen on line {seen[line]})"
            )
        seen[line] = lineno
        entries.append(line)
    return tuple(entries)


def _load_pos_file(path: Path) -> dict[str, PosTag]:
    mapping: dict[str, PosTag] = {}
    seen: dict[str, int] = {}
    for lineno, line in _read_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconError(
                f"{path.name}:{lineno}: expected 'surface<TAB>tag', got {line!r}"
            )
        surface, tag = fields[0].strip(), fields[1].strip()
        if not surface:
            raise LexiconError(f"{path.name}:{lineno}: empty surface form")
        try:
            pos = PosTag(tag)
        except ValueError:
            raise LexiconError(
                f"{path.name}:{lineno}: unknown part-of-speech tag {tag!r}"
            ) from None
        if surface in seen:
            raise LexiconError(
                f"{path.name}:{lineno}: duplicate entry {surface!r} "
                f"(first seen on line {seen[surface]})"
            )
        seen[surface] = lineno
        mapping[surface] = pos
    return mapping


def _load_sentiment_file(path: Path) -> dict[str, float]:
    mapping: dict[str, float] = {}
    seen: dict[str, int] = {}
    for lineno, line in _read_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconError(
                f"{path.name}:{lineno}: expected 'surface<TAB>weight', got {line!r}"
            )
        surface = fields[0].strip()
        if not surface:
            raise LexiconError(f"{path.name}:{lineno}: empty surface form")
        try:
            weight = float(fields[1])
        except ValueError:
            raise LexiconError(
                f"{path.name}:{lineno}: weight {fields[1]!r} is not a number"
            ) from None
        if not -1.0 <= weight <= 1.0:
            raise LexiconError(
                f"{path.name}:{lineno}: weight {weight} outside [-1, 1]"
            )
        if surface in seen:
            raise LexiconError(
                f"{path.name}:{lineno}: duplicate entry {surface!r} "
                f"(first seen on line {seen[surface]})"
            )
        seen[surface] = lineno
        mapping[surface] = weight
    return mapping


def load_lexicons(directory: str | Path | None = None) -> LexiconSet:
    """Load every lexicon from *directory* (default: the shipped set).

    The segmentation dictionary is mandatory and must be non-empty; any
    other missing file degrades to an empty lexicon with a warning.
    """
    base = Path(directory) if directory is not None else default_lexicon_dir()
    if not base.is_dir():
        raise LexiconError(f"lexicon directory not found: {base}")

    seg_path = base / CATEGORY_FILES[SEGMENTATION]
    if not seg_path.is_file():
        raise LexiconError(f"{seg_path.name}: segmentation dictionary is required")
    segmentation = frozenset(_load_surface_file(seg_path))
    if not segmentation:
        raise LexiconError(f"{seg_path.name}: segmentation dictionary is empty")

    pos_path = base / CATEGORY_FILES[POS]
    if pos_path.is_file():
        pos = _load_pos_file(pos_path)
    else:
        logger.warning("lexicon file %s missing, part-of-speech tags default to 'other'", pos_path.name)
        pos = {}

    sent_path = base / CATEGORY_FILES[SENTIMENT]
    if sent_path.is_file():
        sentiment = _load_sentiment_file(sent_path)
    else:
        logger.warning("lexicon file %s missing, sentiment defaults to 0", sent_path.name)
        sentiment = {}

    categories: dict[str, tuple[str, ...]] = {}
    for category in SURFACE_CATEGORIES:
        path = base / CATEGORY_FILES[category]
        if path.is_file():
            categories[category] = _load_surface_file(path)
        else:
            logger.warning("lexicon file %s missing, category %s is empty", path.name, category)
            categories[category] = ()

    return LexiconSet(
        segmentation=segmentation,
        max_word_len=max(len(w) for w in segmentation),
        pos=pos,
        sentiment=sentiment,
        categories=categories,
    )
