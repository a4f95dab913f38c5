from __future__ import annotations

import json
import logging
from dataclasses import replace

import numpy as np
import pytest
import scipy.stats

from snqam import (
    CalibrationError,
    FACET_MEMBERS,
    FACET_NAMES,
    FEATURE_NAMES,
    ForestConfig,
    Label,
    ModelChecksumError,
    ModelError,
    ModelSchemaError,
    ModelVersionError,
    calibrate,
    load_guidelines,
    load_model,
    save_model,
    score,
    suggest,
)
from snqam.features import FeatureVector
from snqam.model import (
    DEFAULT_SUGGESTION_PERCENTILE,
    FacetTable,
    FeatureWeight,
    MODEL_FILE_VERSION,
    QualityModel,
    _checksum,
    _model_payload,
)

CONFIG = ForestConfig(n_trees=10, seed=42)
PINNED = "2026-01-01T00:00:00+00:00"
GUIDELINES = {facet: f"improve {facet}" for facet in FACET_NAMES}


def _corpus(n=30, seed=1):
    rng = np.random.default_rng(seed)
    X = rng.uniform(0.0, 10.0, size=(n, len(FEATURE_NAMES)))
    vectors = [FeatureVector.from_array(row) for row in X]
    labels = [Label.VERY_GOOD if i % 3 == 0 else Label.TYPICAL for i in range(n)]
    quality = rng.integers(0, 500, size=n).astype(float)
    while len(set(quality)) < 2:
        quality = rng.integers(0, 500, size=n).astype(float)
    return vectors, labels, quality, X


def _calibrated(n=30, seed=1):
    vectors, labels, quality, X = _corpus(n, seed)
    model = calibrate(vectors, labels, quality, CONFIG, created_at=PINNED)
    return model, vectors, quality, X


def test_weight_is_importance_times_correlation():
    model, _, quality, X = _calibrated()
    for i, fw in enumerate(model.features):
        assert fw.weight == pytest.approx(fw.importance * fw.correlation, abs=1e-12)
        expected = scipy.stats.spearmanr(X[:, i], quality).statistic
        assert fw.correlation == pytest.approx(expected, abs=1e-9)


def test_importances_sum_to_one():
    model, _, _, _ = _calibrated()
    assert sum(fw.importance for fw in model.features) == pytest.approx(1.0)


def test_feature_order_and_facet_membership():
    model, _, _, _ = _calibrated()
    assert tuple(fw.name for fw in model.features) == FEATURE_NAMES
    for fw in model.features:
        for facet in fw.facets:
            assert fw.name in FACET_MEMBERS[facet]


def test_calibrate_rejects_tiny_corpus():
    vectors, labels, quality, _ = _corpus(n=5)
    with pytest.raises(CalibrationError, match="at least 2"):
        calibrate(vectors[:1], labels[:1], quality[:1], CONFIG)


def test_calibrate_rejects_length_mismatch():
    vectors, labels, quality, _ = _corpus()
    with pytest.raises(CalibrationError, match="equal length"):
        calibrate(vectors, labels[:-1], quality, CONFIG)


def test_calibrate_rejects_single_class():
    vectors, _, quality, _ = _corpus()
    labels = [Label.TYPICAL] * len(vectors)
    with pytest.raises(CalibrationError, match="single class"):
        calibrate(vectors, labels, quality, CONFIG)


def test_calibrate_rejects_constant_quality():
    vectors, labels, _, _ = _corpus()
    with pytest.raises(CalibrationError, match="constant"):
        calibrate(vectors, labels, [7.0] * len(vectors), CONFIG)


def test_constant_feature_gets_zero_weight(caplog):
    vectors, labels, quality, X = _corpus()
    column = FEATURE_NAMES.index("has_video")
    X = X.copy()
    X[:, column] = 0.0
    vectors = [FeatureVector.from_array(row) for row in X]
    with caplog.at_level(logging.WARNING, logger="snqam.model"):
        model = calibrate(vectors, labels, quality, CONFIG, created_at=PINNED)
    fw = model.features[column]
    assert fw.correlation == 0.0
    assert fw.weight == 0.0
    assert any("has_video" in r.getMessage() for r in caplog.records)


def test_quality_monotone_transform_leaves_model_unchanged(tmp_path):
    vectors, labels, quality, _ = _corpus()
    a = calibrate(vectors, labels, quality, CONFIG, created_at=PINNED)
    b = calibrate(vectors, labels, 3.0 * quality + 7.0, CONFIG, created_at=PINNED)
    c = calibrate(vectors, labels, np.exp(quality / 500.0), CONFIG, created_at=PINNED)
    assert _model_payload(a) == _model_payload(b) == _model_payload(c)


def test_calibration_corpus_spans_unit_interval():
    model, vectors, _, X = _calibrated()
    scores = [score(model, v, GUIDELINES).quality_score for v in vectors]
    assert min(scores) == pytest.approx(0.0, abs=1e-12)
    assert max(scores) == pytest.approx(1.0, abs=1e-12)
    assert all(0.0 <= s <= 1.0 for s in scores)


def test_score_monotone_in_positive_weight_feature():
    model, vectors, _, _ = _calibrated()
    positive = [
        fw for fw in model.features if fw.weight > 1e-6 and fw.max_value > fw.min_value
    ]
    assert positive, "calibration produced no positive weights"
    fw = positive[0]
    base = vectors[0].as_dict()
    lo = dict(base, **{fw.name: fw.min_value})
    hi = dict(base, **{fw.name: fw.max_value})
    s_lo = score(model, FeatureVector(**lo), GUIDELINES).quality_score
    s_hi = score(model, FeatureVector(**hi), GUIDELINES).quality_score
    assert s_hi >= s_lo


def test_contributions_identity():
    model, vectors, _, _ = _calibrated()
    assessment = score(model, vectors[3], GUIDELINES)
    assert assessment.raw_score == pytest.approx(
        sum(assessment.contributions.values()), abs=1e-12
    )
    for fw in model.features:
        value = getattr(vectors[3], fw.name)
        span = fw.max_value - fw.min_value
        expected = 0.0
        if span > 0:
            expected = fw.weight * min(1.0, max(0.0, (value - fw.min_value) / span))
        assert assessment.contributions[fw.name] == pytest.approx(expected, abs=1e-12)


def test_facet_raw_matches_member_contributions():
    model, vectors, _, _ = _calibrated()
    assessment = score(model, vectors[7], GUIDELINES)
    for facet in FACET_NAMES:
        expected = sum(assessment.contributions[m] for m in FACET_MEMBERS[facet])
        assert assessment.facets[facet].raw == pytest.approx(expected, abs=1e-12)
        assert 0.0 <= assessment.facets[facet].percentile <= 100.0


def test_out_of_range_values_clip():
    model, _, _, _ = _calibrated()
    extreme_hi = FeatureVector.from_array(np.full(len(FEATURE_NAMES), 1e9))
    extreme_lo = FeatureVector.from_array(np.full(len(FEATURE_NAMES), -1e9))
    for fv in (extreme_hi, extreme_lo):
        assessment = score(model, fv, GUIDELINES)
        assert 0.0 <= assessment.quality_score <= 1.0


def test_score_rejects_uncalibrated_model():
    model, _, _, _ = _calibrated()
    empty = replace(model, features=())
    with pytest.raises(ModelError, match="not calibrated"):
        score(empty, FeatureVector.from_array(np.zeros(len(FEATURE_NAMES))), GUIDELINES)
    shuffled = replace(model, features=model.features[::-1])
    with pytest.raises(ModelError, match="feature order"):
        score(shuffled, FeatureVector.from_array(np.zeros(len(FEATURE_NAMES))), GUIDELINES)


def test_degenerate_score_range_gives_zero():
    model, vectors, _, _ = _calibrated()
    flat = replace(model, score_min=1.0, score_max=1.0)
    assessment = score(flat, vectors[0], GUIDELINES)
    assert assessment.quality_score == 0.0


def _flat_model():
    """All weights zero; every facet percentile lands exactly on 25."""
    features = tuple(
        FeatureWeight(
            name=name,
            importance=0.0,
            correlation=0.0,
            weight=0.0,
            min_value=0.0,
            max_value=1.0,
            mean_scaled=0.5,
            facets=tuple(f for f in FACET_NAMES if name in FACET_MEMBERS[f]),
        )
        for name in FEATURE_NAMES
    )
    tables = {
        facet: FacetTable(min_value=0.0, max_value=1.0, values=(0.0, 1.0, 2.0, 3.0))
        for facet in FACET_NAMES
    }
    return QualityModel(
        version=MODEL_FILE_VERSION,
        created_at=PINNED,
        seed=0,
        features=features,
        score_min=0.0,
        score_max=1.0,
        facet_tables=tables,
    )


def test_suggest_threshold_boundary_inclusive():
    model = _flat_model()
    fv = FeatureVector.from_array(np.zeros(len(FEATURE_NAMES)))
    assessment = score(model, fv, GUIDELINES)
    # facet raw 0.0 sits after exactly one of four table values: percentile 25
    assert all(f.percentile == 25.0 for f in assessment.facets.values())
    at_boundary = suggest(assessment, model, threshold_percentile=25.0, guidelines=GUIDELINES)
    assert [s.facet for s in at_boundary] == list(FACET_NAMES)
    below = suggest(assessment, model, threshold_percentile=24.9, guidelines=GUIDELINES)
    assert below == []


def test_suggest_tie_breaks_canonical():
    model = _flat_model()
    fv = FeatureVector.from_array(np.zeros(len(FEATURE_NAMES)))
    assessment = score(model, fv, GUIDELINES)
    suggestions = suggest(assessment, model, 25.0, GUIDELINES)
    assert [s.facet for s in suggestions] == list(FACET_NAMES)
    position = {name: i for i, name in enumerate(FEATURE_NAMES)}
    for s in suggestions:
        members = sorted(FACET_MEMBERS[s.facet], key=position.__getitem__)
        assert list(s.features) == members[:3]
        assert s.guideline == GUIDELINES[s.facet]


def test_suggestions_ordered_by_deficit():
    model, vectors, _, _ = _calibrated()
    worst = min(
        vectors, key=lambda v: score(model, v, GUIDELINES).quality_score
    )
    assessment = score(model, worst, GUIDELINES)
    suggestions = suggest(assessment, model, 60.0, GUIDELINES)
    deficits = [60.0 - assessment.facets[s.facet].percentile for s in suggestions]
    assert deficits == sorted(deficits, reverse=True)
    for s in suggestions:
        assert assessment.facets[s.facet].percentile <= 60.0
        assert 1 <= len(s.features) <= 3


def test_default_threshold_constant():
    assert DEFAULT_SUGGESTION_PERCENTILE == 25.0


def test_save_is_byte_deterministic(tmp_path):
    vectors, labels, quality, _ = _corpus()
    a = calibrate(vectors, labels, quality, CONFIG, created_at=PINNED)
    b = calibrate(vectors, labels, quality, CONFIG, created_at=PINNED)
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    save_model(a, path_a)
    save_model(b, path_b)
    assert path_a.read_bytes() == path_b.read_bytes()


def test_save_load_round_trip(tmp_path):
    model, vectors, _, _ = _calibrated()
    path = tmp_path / "model.json"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded == model
    for v in vectors[:3]:
        assert score(loaded, v, GUIDELINES) == score(model, v, GUIDELINES)


def test_load_rejects_tampered_payload(tmp_path):
    model, _, _, _ = _calibrated()
    path = tmp_path / "model.json"
    save_model(model, path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    payload["score_min"] = payload["score_min"] - 1.0
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(ModelChecksumError):
        load_model(path)


def test_load_rejects_wrong_version(tmp_path):
    model, _, _, _ = _calibrated()
    path = tmp_path / "model.json"
    save_model(model, path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    payload["version"] = MODEL_FILE_VERSION + 1
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(ModelVersionError):
        load_model(path)


def test_load_rejects_truncated_file(tmp_path):
    model, _, _, _ = _calibrated()
    path = tmp_path / "model.json"
    save_model(model, path)
    text = path.read_text(encoding="utf-8")
    path.write_text(text[: len(text) // 2], encoding="utf-8")
    with pytest.raises(ModelSchemaError, match="not valid JSON"):
        load_model(path)


def test_load_rejects_non_object(tmp_path):
    path = tmp_path / "model.json"
    path.write_text("[1, 2, 3]", encoding="utf-8")
    with pytest.raises(ModelSchemaError, match="JSON object"):
        load_model(path)


def test_load_rejects_missing_field(tmp_path):
    model, _, _, _ = _calibrated()
    path = tmp_path / "model.json"
    save_model(model, path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    del payload["checksum"]
    del payload["features"]
    payload["checksum"] = _checksum(payload)
    ordered = {k: v for k, v in payload.items() if k != "checksum"}
    payload = {**ordered, "checksum": _checksum(ordered)}
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(ModelSchemaError, match="features"):
        load_model(path)


def test_load_rejects_incomplete_facet_tables(tmp_path):
    model, _, _, _ = _calibrated()
    path = tmp_path / "model.json"
    save_model(model, path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    del payload["checksum"]
    del payload["facet_percentile_tables"]["readability"]
    payload["checksum"] = _checksum(payload)
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(ModelSchemaError, match="facet tables"):
        load_model(path)


def test_load_missing_file(tmp_path):
    with pytest.raises(ModelSchemaError, match="cannot read"):
        load_model(tmp_path / "missing.json")


def test_guidelines_default_catalog_complete():
    catalog = load_guidelines()
    assert set(catalog) >= set(FACET_NAMES)
    assert all(isinstance(v, str) and v for v in catalog.values())


def test_guidelines_missing_facet_rejected(tmp_path):
    path = tmp_path / "guidelines.json"
    partial = {f: "x" for f in FACET_NAMES[:-1]}
    path.write_text(json.dumps(partial), encoding="utf-8")
    with pytest.raises(ModelError, match="missing facets"):
        load_guidelines(path)
