"""Basic feature extraction and facet formulas.

The 44 basic features live in one fixed canonical order; every matrix,
model file, and CSV column layout in the package follows it.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .annotate import AnnotatedText
from .lexicon import (
    ADVERSATIVES,
    CONJUNCTIONS,
    DEGREE_ADVERBS,
    DEMONSTRATIVES,
    FIRST_PERSON_PRONOUNS,
    IDIOMS,
    INTERROGATIVE_PRONOUNS,
    MODAL_PARTICLES,
    OFFICIAL_SPEECH,
    PROFESSIONAL_TERMS,
    SECOND_PERSON_PRONOUNS,
    THIRD_PERSON_PRONOUNS,
    UNCERTAINTY,
    PosTag,
)


@dataclass(frozen=True)
class PostMeta:
    """Non-text attributes of a post that feed the completeness flags."""

    has_image: bool = False
    has_video: bool = False
    image_count: int = 0


@dataclass(frozen=True)
class FeatureVector:
    sentence_broken: int = 0
    characters: int = 0
    words: int = 0
    sentences: int = 0
    clauses: int = 0
    average_word_length: float = 0.0
    professional_words: int = 0
    rix: float = 0.0
    lix: float = 0.0
    lw: int = 0
    forward_reference: int = 0
    conj: int = 0
    at: int = 0
    numerals: int = 0
    official_speech: int = 0
    time: int = 0
    place: int = 0
    object: int = 0
    uncertainty: int = 0
    image: int = 0
    noun: int = 0
    adj: int = 0
    prep: int = 0
    pron: int = 0
    verb: int = 0
    adv: int = 0
    question_mark: int = 0
    first_pron: int = 0
    second_pron: int = 0
    interrogative_pron: int = 0
    rhetoric: int = 0
    exclamation_mark: int = 0
    face: int = 0
    idiom: int = 0
    adversative: int = 0
    sentiment_score: float = 0.0
    adv_of_degree: int = 0
    modal_particle: int = 0
    has_head: int = 0
    has_image: int = 0
    has_video: int = 0
    has_tag: int = 0
    has_at: int = 0
    has_url: int = 0

    def as_dict(self) -> dict[str, float]:
        return {name: float(getattr(self, name)) for name in FEATURE_NAMES}

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, name) for name in FEATURE_NAMES], dtype=float)

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "FeatureVector":
        if len(values) != len(FEATURE_NAMES):
            raise ValueError(
                f"expected {len(FEATURE_NAMES)} values, got {len(values)}"
            )
        return cls(**{name: float(v) for name, v in zip(FEATURE_NAMES, values)})


FEATURE_NAMES: tuple[str, ...] = tuple(f.name for f in fields(FeatureVector))


@dataclass(frozen=True)
class FacetScores:
    readability: float
    logic: float
    credibility: float
    formality: float
    interactivity: float
    interestingness: float
    sensation: float
    integrity: float

    def as_dict(self) -> dict[str, float]:
        return {name: float(getattr(self, name)) for name in FACET_NAMES}


FACET_NAMES: tuple[str, ...] = tuple(f.name for f in fields(FacetScores))

# Which basic features belong to each facet. The facet formulas below are
# the authority on signs and coefficients; this map only records membership.
FACET_MEMBERS: dict[str, tuple[str, ...]] = {
    "readability": (
        "sentence_broken",
        "characters",
        "words",
        "sentences",
        "clauses",
        "average_word_length",
        "professional_words",
        "rix",
        "lix",
        "lw",
    ),
    "logic": ("forward_reference", "conj"),
    "credibility": (
        "at",
        "numerals",
        "official_speech",
        "time",
        "place",
        "object",
        "uncertainty",
        "image",
    ),
    "formality": ("noun", "adj", "prep", "pron", "verb", "adv", "sentence_broken"),
    "interactivity": (
        "question_mark",
        "first_pron",
        "second_pron",
        "interrogative_pron",
    ),
    "interestingness": (
        "rhetoric",
        "exclamation_mark",
        "face",
        "idiom",
        "adversative",
        "adj",
        "image",
    ),
    "sensation": (
        "sentiment_score",
        "adv_of_degree",
        "modal_particle",
        "first_pron",
        "second_pron",
        "exclamation_mark",
        "question_mark",
    ),
    "integrity": ("has_head", "has_image", "has_video", "has_tag", "has_at", "has_url"),
}


def feature_names() -> list[str]:
    """Canonical feature order; index 0 is sentence_broken."""
    return list(FEATURE_NAMES)


def facet_names() -> list[str]:
    return list(FACET_NAMES)


def compute_facets(f: FeatureVector) -> FacetScores:
    """Fixed linear facet formulas over the basic features."""
    readability = -(
        f.sentence_broken
        + f.characters
        + f.words
        + f.sentences
        + f.clauses
        + f.average_word_length
        + f.professional_words
        + f.lw
        + f.rix
        + f.lix
    )
    logic = f.forward_reference + f.conj
    credibility = (
        f.at
        + f.numerals
        + f.official_speech
        + f.time
        + f.place
        + f.object
        - f.uncertainty
        + f.image
    )
    formality = f.noun + f.adj + f.prep - f.pron - f.verb - f.adv - f.sentence_broken
    interactivity = (
        f.question_mark + f.first_pron + f.second_pron + f.interrogative_pron
    )
    interestingness = (
        f.rhetoric
        + f.exclamation_mark
        + f.face
        + f.idiom
        + f.adversative
        + f.adj
        + f.image
    )
    sensation = (
        f.sentiment_score
        + f.adv_of_degree
        + f.modal_particle
        + f.first_pron
        + f.second_pron
        + f.exclamation_mark
        + f.question_mark
    )
    integrity = (
        2 * f.has_head
        + 2 * f.has_image
        + 2 * f.has_video
        + 2 * f.has_tag
        + f.has_at
        + f.has_url
    )
    return FacetScores(
        readability=float(readability),
        logic=float(logic),
        credibility=float(credibility),
        formality=float(formality),
        interactivity=float(interactivity),
        interestingness=float(interestingness),
        sensation=float(sensation),
        integrity=float(integrity),
    )


def _clamp(value: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, value))


def extract_features(ann: AnnotatedText, meta: PostMeta | None = None) -> FeatureVector:
    """Compute the 44 basic features from an annotated post."""
    meta = meta or PostMeta()
    clean = ann.clean_text
    m = ann.markers

    characters = sum(1 for c in clean if c.isalnum())
    words = len(ann.tokens)
    if clean.strip():
        sentences = max(m.sentence_terminators, 1)
    else:
        sentences = 0
    clauses = sentences + m.clause_separators

    average_word_length = characters / words if words else 0.0
    lw = sum(1 for t in ann.tokens if t.char_len >= 3)
    rix = lw / sentences if sentences else 0.0
    lix = (words / sentences if sentences else 0.0) + (
        100.0 * lw / words if words else 0.0
    )

    pos_counts: dict[PosTag, int] = {}
    for token in ann.tokens:
        pos_counts[token.pos] = pos_counts.get(token.pos, 0) + 1

    cc = ann.category_counts
    sentiment = _clamp(
        ann.sentiment_weight_sum / max(1, ann.sentiment_match_count), -1.0, 1.0
    )
    images = meta.image_count if meta.image_count else int(meta.has_image)

    return FeatureVector(
        sentence_broken=m.intra_sentence_pauses,
        characters=characters,
        words=words,
        sentences=sentences,
        clauses=clauses,
        average_word_length=average_word_length,
        professional_words=cc[PROFESSIONAL_TERMS],
        rix=rix,
        lix=lix,
        lw=lw,
        forward_reference=cc[DEMONSTRATIVES] + cc[THIRD_PERSON_PRONOUNS],
        conj=cc[CONJUNCTIONS],
        at=m.mentions,
        numerals=pos_counts.get(PosTag.NUMERAL, 0),
        official_speech=cc[OFFICIAL_SPEECH],
        time=pos_counts.get(PosTag.TIME_WORD, 0),
        place=pos_counts.get(PosTag.PLACE_WORD, 0),
        object=pos_counts.get(PosTag.NAMED_ENTITY, 0),
        uncertainty=cc[UNCERTAINTY],
        image=images,
        noun=pos_counts.get(PosTag.NOUN, 0),
        adj=pos_counts.get(PosTag.ADJECTIVE, 0),
        prep=pos_counts.get(PosTag.PREPOSITION, 0),
        pron=pos_counts.get(PosTag.PRONOUN, 0),
        verb=pos_counts.get(PosTag.VERB, 0),
        adv=pos_counts.get(PosTag.ADVERB, 0),
        question_mark=m.question_marks,
        first_pron=cc[FIRST_PERSON_PRONOUNS],
        second_pron=cc[SECOND_PERSON_PRONOUNS],
        interrogative_pron=cc[INTERROGATIVE_PRONOUNS],
        rhetoric=m.quote_chars,
        exclamation_mark=m.exclamation_marks,
        face=m.faces,
        idiom=cc[IDIOMS],
        adversative=cc[ADVERSATIVES],
        sentiment_score=sentiment,
        adv_of_degree=cc[DEGREE_ADVERBS],
        modal_particle=cc[MODAL_PARTICLES],
        has_head=int(m.title_present),
        has_image=int(meta.has_image or meta.image_count > 0),
        has_video=int(meta.has_video),
        has_tag=int(m.hashtags > 0),
        has_at=int(m.mentions > 0),
        has_url=int(m.urls > 0),
    )


def feature_row(fv: FeatureVector, facets: FacetScores | None = None) -> dict[str, float]:
    """Flat name→value row over features and, optionally, facets."""
    row = fv.as_dict()
    if facets is not None:
        row.update(facets.as_dict())
    return row


def features_matrix(vectors: Sequence[FeatureVector]) -> np.ndarray:
    return np.array([v.as_array() for v in vectors], dtype=float)


def facet_index_sets() -> dict[str, tuple[int, ...]]:
    """Facet name → indices of member features in canonical order."""
    index = {name: i for i, name in enumerate(FEATURE_NAMES)}
    return {
        facet: tuple(index[m] for m in members)
        for facet, members in FACET_MEMBERS.items()
    }


def write_feature_csv(
    path: str | Path,
    post_ids: Iterable[str],
    vectors: Iterable[FeatureVector],
    facets: Iterable[FacetScores] | None = None,
) -> int:
    """Write one CSV row per post; returns the number of rows written.

    Column order: post_id, the 44 features, then the 8 facet columns when
    facet export is requested.
    """
    header = ["post_id", *FEATURE_NAMES]
    facet_list = list(facets) if facets is not None else None
    if facet_list is not None:
        header += list(FACET_NAMES)
    rows = 0
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for i, (post_id, fv) in enumerate(zip(post_ids, vectors)):
            row: list[object] = [post_id]
            row += [getattr(fv, name) for name in FEATURE_NAMES]
            if facet_list is not None:
                row += [getattr(facet_list[i], name) for name in FACET_NAMES]
            writer.writerow(row)
            rows += 1
    return rows
