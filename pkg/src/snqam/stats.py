"""Rank statistics and trend analysis.

Spearman correlation is computed from scratch (midranks for ties, then a
Pearson step over the ranks) because downstream calibration depends on its
exact tie handling.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .corpus import PeriodSeries, Post, quality_of
from .errors import ConstantInputError, StatsError

logger = logging.getLogger(__name__)

ENGAGEMENT_INDICATORS: tuple[str, ...] = ("likes", "comments", "reposts")


def _midranks(values: np.ndarray) -> np.ndarray:
    """Ranks starting at 1; tied values share the mean of their ranks."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values), dtype=float)
    sorted_values = values[order]
    i = 0
    n = len(values)
    while i < n:
        j = i
        while j + 1 < n and sorted_values[j + 1] == sorted_values[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Spearman rank correlation with midrank tie handling.

    Raises StatsError on length mismatch or fewer than 2 points, and
    ConstantInputError when either side has no variation.
    """
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if xa.ndim != 1 or ya.ndim != 1 or len(xa) != len(ya):
        raise StatsError(f"length mismatch: {xa.shape} vs {ya.shape}")
    if len(xa) < 2:
        raise StatsError(f"need at least 2 points, got {len(xa)}")
    if np.all(xa == xa[0]) or np.all(ya == ya[0]):
        raise ConstantInputError("rank correlation is undefined for constant input")
    rx = _midranks(xa)
    ry = _midranks(ya)
    rx -= rx.mean()
    ry -= ry.mean()
    denom = np.sqrt((rx * rx).sum() * (ry * ry).sum())
    return float(np.clip((rx * ry).sum() / denom, -1.0, 1.0))


def engagement_cross_correlation(posts: Sequence[Post]) -> np.ndarray:
    """3x3 Spearman matrix over likes/comments/reposts.

    Row/column order follows ENGAGEMENT_INDICATORS; the diagonal is 1 by
    definition.
    """
    if len(posts) < 2:
        raise StatsError("need at least 2 posts")
    columns = [
        np.array([getattr(p.engagement, name) for p in posts], dtype=float)
        for name in ENGAGEMENT_INDICATORS
    ]
    matrix = np.eye(3)
    for i in range(3):
        for j in range(i + 1, 3):
            value = spearman(columns[i], columns[j])
            matrix[i, j] = matrix[j, i] = value
    return matrix


@dataclass(frozen=True)
class FeatureCorrelation:
    mean_src: float
    std_src: float
    per_user: Mapping[str, float]
    pooled_src: float | None


@dataclass(frozen=True)
class CorrelationReport:
    features: Mapping[str, FeatureCorrelation]
    users: tuple[str, ...]
    excluded_users: tuple[tuple[str, str], ...]
    excluded_features: tuple[str, ...]

    def ranked(self) -> list[str]:
        """Feature names by |mean per-user SRC|, largest first."""
        names = list(self.features)
        return sorted(
            names,
            key=lambda n: (-abs(self.features[n].mean_src), names.index(n)),
        )

    def to_dict(self) -> dict:
        return {
            "users": list(self.users),
            "excluded_users": [list(pair) for pair in self.excluded_users],
            "excluded_features": list(self.excluded_features),
            "features": {
                name: {
                    "mean_src": fc.mean_src,
                    "std_src": fc.std_src,
                    "pooled_src": fc.pooled_src,
                    "per_user": dict(fc.per_user),
                }
                for name, fc in self.features.items()
            },
        }


def per_user_correlations(
    posts: Sequence[Post],
    features: Mapping[str, Mapping[str, float]],
) -> CorrelationReport:
    """Per-user Spearman correlation of every feature with quality.

    Users with fewer than 2 posts or constant quality are excluded and
    listed with the reason. A feature constant within one user's posts is
    skipped for that user only; features with no valid user at all are
    listed in excluded_features. Pooled SRC is computed over all posts
    regardless of user, None when degenerate.
    """
    if not posts:
        raise StatsError("no posts")
    for post in posts:
        if post.id not in features:
            raise StatsError(f"no feature row for post id {post.id!r}")
    names = list(features[posts[0].id].keys())

    by_user: dict[str, list[Post]] = {}
    for post in posts:
        by_user.setdefault(post.account_id, []).append(post)

    excluded_users: list[tuple[str, str]] = []
    valid_users: list[str] = []
    for user, user_posts in by_user.items():
        if len(user_posts) < 2:
            excluded_users.append((user, "fewer than 2 posts"))
            logger.warning("excluding user %s: fewer than 2 posts", user)
            continue
        quality = [quality_of(p.engagement) for p in user_posts]
        if len(set(quality)) == 1:
            excluded_users.append((user, "constant quality"))
            logger.warning("excluding user %s: constant quality", user)
            continue
        valid_users.append(user)

    all_quality = np.array([quality_of(p.engagement) for p in posts], dtype=float)
    pooled_quality_constant = bool(np.all(all_quality == all_quality[0]))

    report_features: dict[str, FeatureCorrelation] = {}
    excluded_features: list[str] = []
    for name in names:
        per_user: dict[str, float] = {}
        for user in valid_users:
            user_posts = by_user[user]
            x = np.array([features[p.id][name] for p in user_posts], dtype=float)
            y = np.array([quality_of(p.engagement) for p in user_posts], dtype=float)
            try:
                per_user[user] = spearman(x, y)
            except ConstantInputError:
                continue
        pooled: float | None = None
        pooled_x = np.array([features[p.id][name] for p in posts], dtype=float)
        if not pooled_quality_constant and not np.all(pooled_x == pooled_x[0]):
            pooled = spearman(pooled_x, all_quality)
        if not per_user:
            excluded_features.append(name)
            continue
        values = np.array(list(per_user.values()), dtype=float)
        report_features[name] = FeatureCorrelation(
            mean_src=float(values.mean()),
            std_src=float(values.std()),
            per_user=per_user,
            pooled_src=pooled,
        )
    return CorrelationReport(
        features=report_features,
        users=tuple(valid_users),
        excluded_users=tuple(excluded_users),
        excluded_features=tuple(excluded_features),
    )


def common_top_features(report: CorrelationReport, k: int) -> list[str]:
    """Features in every user's top-k by |SRC|, ordered by |mean SRC|."""
    if k <= 0:
        raise StatsError("k must be positive")
    names = list(report.features)
    position = {name: i for i, name in enumerate(names)}
    common: set[str] | None = None
    for user in report.users:
        scored = [
            (name, fc.per_user[user])
            for name, fc in report.features.items()
            if user in fc.per_user
        ]
        scored.sort(key=lambda item: (-abs(item[1]), position[item[0]]))
        top = {name for name, _ in scored[:k]}
        common = top if common is None else common & top
    if not common:
        return []
    return sorted(common, key=lambda n: (-abs(report.features[n].mean_src), position[n]))


@dataclass(frozen=True)
class DriftResult:
    change_point: int
    pre_mean: float
    post_mean: float
    shift_score: float
    no_drift: bool


@dataclass(frozen=True)
class DriftReport:
    period_days: int
    period_indices: tuple[int, ...]
    results: Mapping[str, DriftResult]
    similarity: tuple[tuple[str, float], ...]

    def to_dict(self) -> dict:
        return {
            "period_days": self.period_days,
            "period_indices": list(self.period_indices),
            "results": {
                name: {
                    "change_point": r.change_point,
                    "pre_mean": r.pre_mean,
                    "post_mean": r.post_mean,
                    "shift_score": r.shift_score,
                    "no_drift": r.no_drift,
                }
                for name, r in self.results.items()
            },
            "similarity": [[name, value] for name, value in self.similarity],
        }


def _single_change_point(values: np.ndarray, indices: Sequence[int]) -> DriftResult:
    """Best single split by normalized mean difference.

    The pooled standard deviation is floored at machine-epsilon scale so a
    perfectly clean step still yields a finite score; ties go to the
    earliest split.
    """
    n = len(values)
    floor = np.finfo(float).eps * max(1.0, float(np.max(np.abs(values))))
    best_t = 1
    best_score = -1.0
    for t in range(1, n):
        pre, post = values[:t], values[t:]
        pooled_var = (pre.var() * len(pre) + post.var() * len(post)) / n
        pooled = max(float(np.sqrt(pooled_var)), floor)
        score = abs(float(post.mean()) - float(pre.mean())) / pooled
        if score > best_score:
            best_t, best_score = t, score
    pre, post = values[:best_t], values[best_t:]
    return DriftResult(
        change_point=int(indices[best_t]),
        pre_mean=float(pre.mean()),
        post_mean=float(post.mean()),
        shift_score=float(best_score),
        no_drift=best_score <= 0.0,
    )


def detect_drift(series: PeriodSeries) -> DriftReport:
    """Single-change-point scan per feature and for quality, plus a ranking
    of features by how closely their period-mean trend tracks quality."""
    populated = [b for b in series.buckets if b.post_count > 0]
    if len(populated) < 4:
        raise StatsError(
            f"drift detection needs at least 4 populated periods, got {len(populated)}"
        )
    indices = [b.index for b in populated]
    quality = np.array([b.mean_quality for b in populated], dtype=float)
    assert populated[0].mean_values is not None
    names = list(populated[0].mean_values.keys())

    results: dict[str, DriftResult] = {
        "quality": _single_change_point(quality, indices)
    }
    similarity: list[tuple[str, float]] = []
    quality_constant = bool(np.all(quality == quality[0]))
    for pos, name in enumerate(names):
        values = np.array([b.mean_values[name] for b in populated], dtype=float)
        results[name] = _single_change_point(values, indices)
        if not quality_constant and not np.all(values == values[0]):
            similarity.append((name, spearman(values, quality)))
    similarity.sort(key=lambda item: (-item[1], names.index(item[0])))
    return DriftReport(
        period_days=series.period_days,
        period_indices=tuple(indices),
        results=results,
        similarity=tuple(similarity),
    )


def format_correlation_text(report: CorrelationReport) -> str:
    """Aligned plain-text rendering of a correlation report."""
    lines = [f"{'feature':<24} {'mean_src':>9} {'std_src':>9} {'pooled':>9} {'users':>6}"]
    for name in report.ranked():
        fc = report.features[name]
        pooled = f"{fc.pooled_src:9.4f}" if fc.pooled_src is not None else f"{'-':>9}"
        lines.append(
            f"{name:<24} {fc.mean_src:9.4f} {fc.std_src:9.4f} {pooled} {len(fc.per_user):6d}"
        )
    if report.excluded_users:
        lines.append("")
        for user, reason in report.excluded_users:
            lines.append(f"excluded user {user}: {reason}")
    if report.excluded_features:
        lines.append("")
        lines.append("excluded features: " + ", ".join(report.excluded_features))
    return "\n".join(lines) + "\n"


def format_drift_text(report: DriftReport) -> str:
    """Aligned plain-text rendering of a drift report."""
    lines = [
        f"{'series':<24} {'change_point':>12} {'pre_mean':>12} {'post_mean':>12} {'shift':>10}"
    ]
    for name, r in report.results.items():
        flag = "  (no drift)" if r.no_drift else ""
        lines.append(
            f"{name:<24} {r.change_point:>12d} {r.pre_mean:12.4f} {r.post_mean:12.4f} "
            f"{r.shift_score:10.4f}{flag}"
        )
    lines.append("")
    lines.append("trend similarity to quality (descending):")
    for name, value in report.similarity:
        lines.append(f"  {name:<24} {value:8.4f}")
    return "\n".join(lines) + "\n"
