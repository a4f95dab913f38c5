"""Wire formats shared by the CLI and the HTTP service.

Both surfaces must emit byte-identical JSON for the same draft, so the
response dictionaries and their serialization live in one place.
"""

from __future__ import annotations

import json

from .features import FACET_NAMES, FEATURE_NAMES, FacetScores, FeatureVector
from .model import Assessment

TOP_CONTRIBUTIONS = 10

MAX_TEXT_CHARS = 10_000


def canonical_json(payload: object) -> str:
    """Compact JSON with a stable key order taken from dict insertion."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


def score_response(assessment: Assessment) -> dict:
    position = {name: i for i, name in enumerate(FEATURE_NAMES)}
    ranked = sorted(
        assessment.contributions.items(),
        key=lambda item: (-abs(item[1]), position[item[0]]),
    )
    return {
        "quality_score": assessment.quality_score,
        "facets": {
            name: {
                "score": assessment.facets[name].score,
                "percentile": assessment.facets[name].percentile,
            }
            for name in FACET_NAMES
        },
        "top_contributions": [
            {"feature": name, "contribution": value}
            for name, value in ranked[:TOP_CONTRIBUTIONS]
        ],
        "suggestions": [
            {
                "facet": s.facet,
                "guideline": s.guideline,
                "features": list(s.features),
            }
            for s in assessment.suggestions
        ],
        "model_version": assessment.model_version,
    }


def extract_response(fv: FeatureVector, facets: FacetScores) -> dict:
    return {"features": fv.as_dict(), "facets": facets.as_dict()}


def error_body(code: str, message: str, detail: dict | None = None) -> dict:
    body: dict = {"code": code, "message": message}
    if detail is not None:
        body["detail"] = detail
    return body
