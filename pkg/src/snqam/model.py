"""Quality-model calibration, scoring, and persistence.

A calibrated model carries one weight per basic feature, the product of
the forest's Gini importance for separating very-good accounts from
typical ones and the pooled rank correlation of the feature with raw
engagement quality. Scores are min-max normalized against the calibration
corpus so they land in [0, 1], and per-facet percentile tables let the
scorer say where a draft sits relative to the corpus.
"""

from __future__ import annotations

import hashlib
import json
import logging
from bisect import bisect_right
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    CalibrationError,
    ConstantInputError,
    ModelChecksumError,
    ModelError,
    ModelSchemaError,
    ModelVersionError,
)
from .features import FACET_MEMBERS, FACET_NAMES, FEATURE_NAMES, FeatureVector
from .forest import Dataset, ForestConfig, Label, train
from .stats import spearman

logger = logging.getLogger(__name__)

MODEL_FILE_VERSION = 1

DEFAULT_SUGGESTION_PERCENTILE = 25.0
SUGGESTION_FEATURES = 3


@dataclass(frozen=True)
class FeatureWeight:
    name: str
    importance: float
    correlation: float
    weight: float
    min_value: float
    max_value: float
    mean_scaled: float
    facets: tuple[str, ...]


@dataclass(frozen=True)
class FacetTable:
    min_value: float
    max_value: float
    values: tuple[float, ...]


@dataclass(frozen=True)
class QualityModel:
    version: int
    created_at: str
    seed: int
    features: tuple[FeatureWeight, ...]
    score_min: float
    score_max: float
    facet_tables: Mapping[str, FacetTable]


@dataclass(frozen=True)
class FacetAssessment:
    raw: float
    score: float
    percentile: float


@dataclass(frozen=True)
class Suggestion:
    facet: str
    guideline: str
    features: tuple[str, ...]


@dataclass(frozen=True)
class Assessment:
    quality_score: float
    raw_score: float
    facets: Mapping[str, FacetAssessment]
    contributions: Mapping[str, float]
    suggestions: tuple[Suggestion, ...]
    model_version: int


def load_guidelines(path: str | Path | None = None) -> dict[str, str]:
    """Facet → guideline sentence catalog (shipped file by default)."""
    if path is None:
        text = resources.files("snqam").joinpath("data/guidelines.json").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    catalog = json.loads(text)
    missing = [f for f in FACET_NAMES if f not in catalog]
    if missing:
        raise ModelError(f"guideline catalog missing facets: {', '.join(missing)}")
    return catalog


def calibrate(
    vectors: Sequence[FeatureVector],
    labels: Sequence[Label],
    quality: Sequence[float],
    forest_config: ForestConfig | None = None,
    created_at: str | None = None,
) -> QualityModel:
    """Fit the per-feature weights and normalization tables on a corpus.

    ``created_at`` may be pinned so repeated calibrations of the same
    corpus produce byte-identical model files.
    """
    forest_config = forest_config or ForestConfig()
    n = len(vectors)
    if n < 2:
        raise CalibrationError(f"need at least 2 calibration posts, got {n}")
    if len(labels) != n or len(quality) != n:
        raise CalibrationError("vectors, labels, and quality must have equal length")
    y = np.array([int(label) for label in labels], dtype=int)
    if len(np.unique(y)) < 2:
        raise CalibrationError("calibration labels contain a single class")
    q = np.asarray(quality, dtype=float)
    if np.all(q == q[0]):
        raise CalibrationError("quality is constant across the calibration corpus")

    X = np.array([v.as_array() for v in vectors], dtype=float)
    forest = train(Dataset(X, y, FEATURE_NAMES), forest_config)

    correlations = np.zeros(len(FEATURE_NAMES))
    for i, name in enumerate(FEATURE_NAMES):
        try:
            correlations[i] = spearman(X[:, i], q)
        except ConstantInputError:
            logger.warning("feature %s is constant, correlation set to 0", name)
            correlations[i] = 0.0
    weights = forest.importances * correlations

    mins = X.min(axis=0)
    maxs = X.max(axis=0)
    spans = maxs - mins
    scaled = np.zeros_like(X)
    nonzero = spans > 0
    scaled[:, nonzero] = (X[:, nonzero] - mins[nonzero]) / spans[nonzero]
    scaled = np.clip(scaled, 0.0, 1.0)

    raw_scores = scaled @ weights
    member_of = {
        name: tuple(f for f in FACET_NAMES if name in FACET_MEMBERS[f])
        for name in FEATURE_NAMES
    }
    features = tuple(
        FeatureWeight(
            name=name,
            importance=float(forest.importances[i]),
            correlation=float(correlations[i]),
            weight=float(weights[i]),
            min_value=float(mins[i]),
            max_value=float(maxs[i]),
            mean_scaled=float(scaled[:, i].mean()),
            facets=member_of[name],
        )
        for i, name in enumerate(FEATURE_NAMES)
    )

    facet_tables: dict[str, FacetTable] = {}
    for facet in FACET_NAMES:
        idx = [FEATURE_NAMES.index(m) for m in FACET_MEMBERS[facet]]
        facet_raw = scaled[:, idx] @ weights[idx]
        facet_tables[facet] = FacetTable(
            min_value=float(facet_raw.min()),
            max_value=float(facet_raw.max()),
            values=tuple(sorted(float(v) for v in facet_raw)),
        )

    return QualityModel(
        version=MODEL_FILE_VERSION,
        created_at=created_at or datetime.now(timezone.utc).isoformat(),
        seed=forest_config.seed,
        features=features,
        score_min=float(raw_scores.min()),
        score_max=float(raw_scores.max()),
        facet_tables=facet_tables,
    )


def _normalize(value: float, lo: float, hi: float) -> float:
    if hi <= lo:
        return 0.0
    return float(np.clip((value - lo) / (hi - lo), 0.0, 1.0))


def _percentile(table: FacetTable, value: float) -> float:
    return 100.0 * bisect_right(table.values, value) / len(table.values)


def score(
    model: QualityModel,
    fv: FeatureVector,
    guidelines: Mapping[str, str] | None = None,
) -> Assessment:
    """Score one draft against a calibrated model."""
    if not model.features:
        raise ModelError("model is not calibrated")
    names = tuple(fw.name for fw in model.features)
    if names != FEATURE_NAMES:
        raise ModelError("model feature order does not match this package")

    contributions: dict[str, float] = {}
    scaled: dict[str, float] = {}
    for fw in model.features:
        value = float(getattr(fv, fw.name))
        s = _normalize(value, fw.min_value, fw.max_value)
        scaled[fw.name] = s
        contributions[fw.name] = fw.weight * s

    raw = sum(contributions.values())
    quality_score = _normalize(raw, model.score_min, model.score_max)

    facets: dict[str, FacetAssessment] = {}
    for facet in FACET_NAMES:
        table = model.facet_tables[facet]
        facet_raw = sum(contributions[m] for m in FACET_MEMBERS[facet])
        facets[facet] = FacetAssessment(
            raw=float(facet_raw),
            score=_normalize(facet_raw, table.min_value, table.max_value),
            percentile=_percentile(table, facet_raw),
        )

    assessment = Assessment(
        quality_score=quality_score,
        raw_score=float(raw),
        facets=facets,
        contributions=contributions,
        suggestions=(),
        model_version=model.version,
    )
    suggestions = suggest(assessment, model, guidelines=guidelines)
    return replace(assessment, suggestions=tuple(suggestions))


def suggest(
    assessment: Assessment,
    model: QualityModel,
    threshold_percentile: float = DEFAULT_SUGGESTION_PERCENTILE,
    guidelines: Mapping[str, str] | None = None,
) -> list[Suggestion]:
    """Guidelines for the facets at or below the percentile threshold.

    Each suggestion names the member features whose contribution falls
    furthest below the calibration-corpus average; suggestions are ordered
    by how far the facet sits below the threshold, ties in canonical facet
    order.
    """
    catalog = guidelines if guidelines is not None else load_guidelines()
    mean_contribution = {fw.name: fw.weight * fw.mean_scaled for fw in model.features}
    facet_position = {name: i for i, name in enumerate(FACET_NAMES)}
    feature_position = {name: i for i, name in enumerate(FEATURE_NAMES)}

    flagged: list[tuple[float, int, Suggestion]] = []
    for facet in FACET_NAMES:
        percentile = assessment.facets[facet].percentile
        if percentile > threshold_percentile:
            continue
        deficit = threshold_percentile - percentile
        gaps = sorted(
            (
                (assessment.contributions[m] - mean_contribution[m], feature_position[m], m)
                for m in FACET_MEMBERS[facet]
            ),
        )
        features = tuple(m for _, _, m in gaps[:SUGGESTION_FEATURES])
        flagged.append(
            (deficit, facet_position[facet], Suggestion(facet, catalog[facet], features))
        )
    flagged.sort(key=lambda item: (-item[0], item[1]))
    return [suggestion for _, _, suggestion in flagged]


def _model_payload(model: QualityModel) -> dict:
    return {
        "version": model.version,
        "created_at": model.created_at,
        "seed": model.seed,
        "features": [
            {
                "name": fw.name,
                "importance": fw.importance,
                "correlation": fw.correlation,
                "weight": fw.weight,
                "min": fw.min_value,
                "max": fw.max_value,
                "mean_scaled": fw.mean_scaled,
                "facets": list(fw.facets),
            }
            for fw in model.features
        ],
        "score_min": model.score_min,
        "score_max": model.score_max,
        "facet_percentile_tables": {
            facet: {
                "min": table.min_value,
                "max": table.max_value,
                "values": list(table.values),
            }
            for facet, table in model.facet_tables.items()
        },
    }


def _checksum(payload: dict) -> str:
    canonical = json.dumps(
        payload, ensure_ascii=False, sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def save_model(model: QualityModel, path: str | Path) -> None:
    """Write the model as deterministic JSON with a content checksum."""
    payload = _model_payload(model)
    payload["checksum"] = _checksum(_model_payload(model))
    Path(path).write_text(
        json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )


def _require(payload: dict, key: str, kind: type | tuple[type, ...]) -> object:
    if key not in payload:
        raise ModelSchemaError(f"model file missing field {key!r}")
    value = payload[key]
    if not isinstance(value, kind):
        raise ModelSchemaError(f"model file field {key!r} has wrong type")
    return value


def load_model(path: str | Path) -> QualityModel:
    """Load and verify a model file written by save_model."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelSchemaError(f"cannot read model file {path}: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelSchemaError(f"model file is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ModelSchemaError("model file must hold a JSON object")

    version = _require(payload, "version", int)
    if version != MODEL_FILE_VERSION:
        raise ModelVersionError(
            f"model file version {version} is not supported (expected {MODEL_FILE_VERSION})"
        )
    stored_checksum = _require(payload, "checksum", str)
    body = {k: v for k, v in payload.items() if k != "checksum"}
    if _checksum(body) != stored_checksum:
        raise ModelChecksumError("model file checksum does not match its content")

    created_at = _require(payload, "created_at", str)
    seed = _require(payload, "seed", int)
    score_min = float(_require(payload, "score_min", (int, float)))
    score_max = float(_require(payload, "score_max", (int, float)))
    raw_features = _require(payload, "features", list)

    features = []
    for entry in raw_features:
        if not isinstance(entry, dict):
            raise ModelSchemaError("model file feature entries must be objects")
        try:
            features.append(
                FeatureWeight(
                    name=str(entry["name"]),
                    importance=float(entry["importance"]),
                    correlation=float(entry["correlation"]),
                    weight=float(entry["weight"]),
                    min_value=float(entry["min"]),
                    max_value=float(entry["max"]),
                    mean_scaled=float(entry["mean_scaled"]),
                    facets=tuple(entry["facets"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelSchemaError(f"malformed feature entry: {exc}") from None

    raw_tables = _require(payload, "facet_percentile_tables", dict)
    if set(raw_tables) != set(FACET_NAMES):
        raise ModelSchemaError("model file facet tables do not cover the 8 facets")
    tables = {}
    for facet, entry in raw_tables.items():
        if not isinstance(entry, dict):
            raise ModelSchemaError("facet table entries must be objects")
        try:
            tables[facet] = FacetTable(
                min_value=float(entry["min"]),
                max_value=float(entry["max"]),
                values=tuple(float(v) for v in entry["values"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelSchemaError(f"malformed facet table {facet!r}: {exc}") from None

    return QualityModel(
        version=version,
        created_at=created_at,
        seed=seed,
        features=tuple(features),
        score_min=score_min,
        score_max=score_max,
        facet_tables=tables,
    )
