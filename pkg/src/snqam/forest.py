"""Random-forest classifier built from scratch.

Binary Gini-impurity trees over bootstrap samples, with feature
subsampling at every split and mean-decrease-in-impurity feature
importances. Everything is deterministic for a fixed seed: per-tree
generators are spawned from one SeedSequence, candidate features are
visited in sorted order, and split ties resolve to the earliest
candidate.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import ForestError

# Fixed default seed so two runs on the same corpus agree byte for byte.
DEFAULT_SEED = 1729

FOREST_FILE_VERSION = 1


class Label(IntEnum):
    TYPICAL = 0
    VERY_GOOD = 1


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 100
    max_depth: int | None = None
    min_leaf: int = 1
    features_per_split: int | None = None
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.n_trees < 1:
            raise ForestError("n_trees must be >= 1")
        if self.max_depth is not None and self.max_depth < 1:
            raise ForestError("max_depth must be >= 1 when set")
        if self.min_leaf < 1:
            raise ForestError("min_leaf must be >= 1")
        if self.features_per_split is not None and self.features_per_split < 1:
            raise ForestError("features_per_split must be >= 1 when set")

    def to_dict(self) -> dict:
        return {
            "n_trees": self.n_trees,
            "max_depth": self.max_depth,
            "min_leaf": self.min_leaf,
            "features_per_split": self.features_per_split,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class Dataset:
    """Feature matrix in canonical column order plus binary labels.

    ``mask`` restricts training to a subset of columns (used for per-facet
    runs); prediction still takes full-width rows.
    """

    X: np.ndarray
    y: np.ndarray
    feature_names: tuple[str, ...]
    mask: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        X = np.asarray(self.X, dtype=float)
        y = np.asarray(self.y, dtype=int)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)
        if X.ndim != 2:
            raise ForestError(f"X must be 2-dimensional, got shape {X.shape}")
        if len(y) != X.shape[0]:
            raise ForestError(f"{X.shape[0]} rows but {len(y)} labels")
        if len(self.feature_names) != X.shape[1]:
            raise ForestError(
                f"{X.shape[1]} columns but {len(self.feature_names)} feature names"
            )
        if not np.isin(y, (0, 1)).all():
            raise ForestError("labels must be 0 (TYPICAL) or 1 (VERY_GOOD)")
        if self.mask is not None:
            if len(self.mask) == 0:
                raise ForestError("feature mask is empty")
            bad = [i for i in self.mask if not 0 <= i < X.shape[1]]
            if bad:
                raise ForestError(f"mask indices out of range: {bad}")


@dataclass
class ForestModel:
    trees: list[dict]
    config: ForestConfig
    feature_names: tuple[str, ...]
    mask: tuple[int, ...]
    n_features_in: int
    importances: np.ndarray
    no_splits: bool = False


def _majority(ones: int, total: int) -> int:
    # Exact tie falls back to TYPICAL
    return 1 if 2 * ones > total else 0


def _gini(ones: int, total: int) -> float:
    p = ones / total
    return 1.0 - p * p - (1.0 - p) * (1.0 - p)


def _best_split(
    X: np.ndarray,
    y: np.ndarray,
    idx: np.ndarray,
    features: Sequence[int],
    min_leaf: int,
) -> tuple[int, float, float] | None:
    """Best (feature, threshold, gain) over the candidate features.

    Candidate thresholds are midpoints between consecutive distinct sorted
    values. Returns None when no split separates the node.
    """
    labels = y[idx]
    n = len(idx)
    ones = int(labels.sum())
    node_gini = _gini(ones, n)
    best: tuple[int, float, float] | None = None
    for feature in features:
        column = X[idx, feature]
        order = np.argsort(column, kind="stable")
        xs = column[order]
        ys = labels[order]
        cuts = np.nonzero(xs[:-1] < xs[1:])[0]
        if cuts.size == 0:
            continue
        n_left = cuts + 1
        n_right = n - n_left
        valid = (n_left >= min_leaf) & (n_right >= min_leaf)
        if not valid.any():
            continue
        left_ones = np.cumsum(ys)[cuts]
        right_ones = ones - left_ones
        pl = left_ones / n_left
        pr = right_ones / n_right
        gini_left = 1.0 - pl * pl - (1.0 - pl) * (1.0 - pl)
        gini_right = 1.0 - pr * pr - (1.0 - pr) * (1.0 - pr)
        weighted = (n_left * gini_left + n_right * gini_right) / n
        weighted[~valid] = np.inf
        at = int(np.argmin(weighted))
        gain = node_gini - float(weighted[at])
        if gain > 0.0 and (best is None or gain > best[2]):
            threshold = float((xs[cuts[at]] + xs[cuts[at] + 1]) / 2.0)
            best = (feature, threshold, gain)
    return best


def _grow(
    X: np.ndarray,
    y: np.ndarray,
    idx: np.ndarray,
    mask: tuple[int, ...],
    rng: np.random.Generator,
    depth: int,
    config: ForestConfig,
    m: int,
    importances: np.ndarray,
    n_root: int,
) -> dict:
    labels = y[idx]
    n = len(idx)
    ones = int(labels.sum())
    depth_hit = config.max_depth is not None and depth >= config.max_depth
    if ones == 0 or ones == n or depth_hit or n < 2 * config.min_leaf:
        return {"label": _majority(ones, n)}
    picked = rng.choice(len(mask), size=min(m, len(mask)), replace=False)
    features = sorted(mask[i] for i in picked)
    best = _best_split(X, y, idx, features, config.min_leaf)
    if best is None:
        return {"label": _majority(ones, n)}
    feature, threshold, gain = best
    importances[feature] += (n / n_root) * gain
    goes_left = X[idx, feature] <= threshold
    left = _grow(X, y, idx[goes_left], mask, rng, depth + 1, config, m, importances, n_root)
    right = _grow(X, y, idx[~goes_left], mask, rng, depth + 1, config, m, importances, n_root)
    return {"feature": feature, "threshold": threshold, "left": left, "right": right}


def train(data: Dataset, config: ForestConfig | None = None) -> ForestModel:
    """Train a forest on the (optionally masked) columns of *data*."""
    config = config or ForestConfig()
    X, y = data.X, data.y
    n, d = X.shape
    if n < 2:
        raise ForestError(f"need at least 2 rows, got {n}")
    if len(np.unique(y)) < 2:
        raise ForestError("training data contains a single class")
    mask = data.mask if data.mask is not None else tuple(range(d))
    m = config.features_per_split or max(1, math.isqrt(len(mask)))

    importances = np.zeros(d, dtype=float)
    trees: list[dict] = []
    for child_seed in np.random.SeedSequence(config.seed).spawn(config.n_trees):
        rng = np.random.default_rng(child_seed)
        sample = rng.integers(0, n, size=n)
        trees.append(_grow(X, y, sample, mask, rng, 0, config, m, importances, n))

    total = importances.sum()
    no_splits = bool(total <= 0.0)
    if not no_splits:
        importances = importances / total
    return ForestModel(
        trees=trees,
        config=config,
        feature_names=tuple(data.feature_names),
        mask=mask,
        n_features_in=d,
        importances=importances,
        no_splits=no_splits,
    )


def _walk(node: dict, row: np.ndarray) -> int:
    while "label" not in node:
        node = node["left"] if row[node["feature"]] <= node["threshold"] else node["right"]
    return node["label"]


def predict(model: ForestModel, row: Sequence[float]) -> tuple[Label, float]:
    """Majority vote over the trees; ties fall back to TYPICAL.

    Returns the label and the fraction of trees that voted for it.
    """
    values = np.asarray(row, dtype=float)
    if values.shape != (model.n_features_in,):
        raise ForestError(
            f"expected {model.n_features_in} features, got shape {values.shape}"
        )
    votes = sum(_walk(tree, values) for tree in model.trees)
    fraction_good = votes / len(model.trees)
    if fraction_good > 0.5:
        return Label.VERY_GOOD, fraction_good
    return Label.TYPICAL, 1.0 - fraction_good


def _tree_predict_batch(node: dict, X: np.ndarray, idx: np.ndarray, out: np.ndarray) -> None:
    if "label" in node:
        out[idx] = node["label"]
        return
    goes_left = X[idx, node["feature"]] <= node["threshold"]
    _tree_predict_batch(node["left"], X, idx[goes_left], out)
    _tree_predict_batch(node["right"], X, idx[~goes_left], out)


def predict_batch(model: ForestModel, X: np.ndarray) -> np.ndarray:
    """Vectorized majority-vote labels for a matrix of rows."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != model.n_features_in:
        raise ForestError(
            f"expected shape (*, {model.n_features_in}), got {X.shape}"
        )
    votes = np.zeros(X.shape[0], dtype=int)
    scratch = np.empty(X.shape[0], dtype=int)
    all_rows = np.arange(X.shape[0])
    for tree in model.trees:
        _tree_predict_batch(tree, X, all_rows, scratch)
        votes += scratch
    return (2 * votes > len(model.trees)).astype(int)


def importances(model: ForestModel) -> list[tuple[str, float]]:
    """(name, importance) pairs, largest first; ties keep canonical order."""
    pairs = list(zip(model.feature_names, model.importances.tolist()))
    return sorted(pairs, key=lambda p: -p[1])


def stratified_folds(y: np.ndarray, folds: int, seed: int) -> np.ndarray:
    """Fold id per row; each class is shuffled then dealt round-robin, so
    per-class counts across folds differ by at most 1."""
    if folds < 2:
        raise ForestError("folds must be >= 2")
    y = np.asarray(y, dtype=int)
    for cls in np.unique(y):
        if int((y == cls).sum()) < folds:
            raise ForestError(
                f"class {cls} has fewer rows than folds ({int((y == cls).sum())} < {folds})"
            )
    rng = np.random.default_rng(seed)
    fold_id = np.empty(len(y), dtype=int)
    for cls in np.unique(y):
        rows = np.nonzero(y == cls)[0]
        rows = rng.permutation(rows)
        fold_id[rows] = np.arange(len(rows)) % folds
    return fold_id


@dataclass(frozen=True)
class FeatureSetResult:
    fold_accuracies: tuple[float, ...]
    mean_accuracy: float


@dataclass(frozen=True)
class CvReport:
    folds: int
    config: ForestConfig
    results: Mapping[str, FeatureSetResult] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "folds": self.folds,
            "config": self.config.to_dict(),
            "results": {
                name: {
                    "fold_accuracies": list(r.fold_accuracies),
                    "mean_accuracy": r.mean_accuracy,
                }
                for name, r in self.results.items()
            },
        }


def format_cv_text(report: CvReport) -> str:
    lines = [f"{'feature set':<20} {'mean_acc':>9}  folds"]
    for name, r in report.results.items():
        folds = " ".join(f"{a:.3f}" for a in r.fold_accuracies)
        lines.append(f"{name:<20} {r.mean_accuracy:9.4f}  {folds}")
    return "\n".join(lines) + "\n"


def cross_validate(
    data: Dataset,
    config: ForestConfig | None = None,
    folds: int = 5,
    feature_sets: Mapping[str, Sequence[int]] | None = None,
) -> CvReport:
    """Stratified k-fold accuracy, optionally per named feature subset."""
    config = config or ForestConfig()
    sets: dict[str, tuple[int, ...]]
    if feature_sets is None:
        sets = {"all": tuple(range(data.X.shape[1]))}
    else:
        sets = {name: tuple(ix) for name, ix in feature_sets.items()}
    fold_id = stratified_folds(data.y, folds, config.seed)
    results: dict[str, FeatureSetResult] = {}
    for name, mask in sets.items():
        accuracies = []
        for k in range(folds):
            test = fold_id == k
            train_data = Dataset(
                data.X[~test], data.y[~test], data.feature_names, mask=mask
            )
            model = train(train_data, config)
            predicted = predict_batch(model, data.X[test])
            accuracies.append(float(np.mean(predicted == data.y[test])))
        results[name] = FeatureSetResult(
            fold_accuracies=tuple(accuracies),
            mean_accuracy=float(np.mean(accuracies)),
        )
    return CvReport(folds=folds, config=config, results=results)


def forest_to_dict(model: ForestModel) -> dict:
    return {
        "version": FOREST_FILE_VERSION,
        "config": model.config.to_dict(),
        "feature_names": list(model.feature_names),
        "mask": list(model.mask),
        "n_features_in": model.n_features_in,
        "importances": model.importances.tolist(),
        "no_splits": model.no_splits,
        "trees": model.trees,
    }


def forest_from_dict(payload: dict) -> ForestModel:
    if not isinstance(payload, dict) or "version" not in payload:
        raise ForestError("not a forest file")
    if payload["version"] != FOREST_FILE_VERSION:
        raise ForestError(
            f"unsupported forest file version {payload['version']!r}"
        )
    try:
        return ForestModel(
            trees=payload["trees"],
            config=ForestConfig(**payload["config"]),
            feature_names=tuple(payload["feature_names"]),
            mask=tuple(payload["mask"]),
            n_features_in=payload["n_features_in"],
            importances=np.array(payload["importances"], dtype=float),
            no_splits=payload["no_splits"],
        )
    except (KeyError, TypeError) as exc:
        raise ForestError(f"malformed forest file: {exc}") from None


def save_forest(model: ForestModel, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(forest_to_dict(model), ensure_ascii=False) + "\n", encoding="utf-8"
    )


def load_forest(path: str | Path) -> ForestModel:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ForestError(f"cannot load forest file {path}: {exc}") from None
    return forest_from_dict(payload)
