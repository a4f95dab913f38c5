"""Corpus ingestion: JSONL parsing, filtering, and period bucketing."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta, timezone
from pathlib import Path
from typing import Mapping, Sequence

from .errors import CorpusError
from .lexicon import LOTTERY_MARKERS, LexiconSet

logger = logging.getLogger(__name__)

_REQUIRED_FIELDS = (
    "id",
    "account_id",
    "published_at",
    "text",
    "has_image",
    "has_video",
    "is_original",
    "likes",
    "comments",
    "reposts",
)


@dataclass(frozen=True)
class Engagement:
    likes: int
    comments: int
    reposts: int

    def __post_init__(self) -> None:
        for name in ("likes", "comments", "reposts"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise CorpusError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class Post:
    id: str
    account_id: str
    published_at: datetime
    text: str
    has_image: bool
    has_video: bool
    is_original: bool
    engagement: Engagement


def quality_of(engagement: Engagement) -> int:
    """Engagement quality: likes + comments + reposts."""
    return engagement.likes + engagement.comments + engagement.reposts


@dataclass(frozen=True)
class FilterConfig:
    """Defaults match the intended collection protocol; the CLI only
    applies a rule when its flag is given."""

    min_age_days: int = 7
    window_start: date | None = None
    window_end: date | None = None
    originals_only: bool = True
    drop_lottery: bool = True

    def __post_init__(self) -> None:
        if self.min_age_days < 0:
            raise CorpusError("min_age_days must be >= 0")
        if (
            self.window_start is not None
            and self.window_end is not None
            and self.window_start > self.window_end
        ):
            raise CorpusError("window_start is after window_end")


def parse_timestamp(value: object, where: str = "published_at") -> datetime:
    """Parse an ISO-8601 timestamp; naive values are taken as UTC."""
    if not isinstance(value, str):
        raise CorpusError(f"{where}: expected an ISO-8601 string, got {value!r}")
    raw = value[:-1] + "+00:00" if value.endswith("Z") else value
    try:
        stamp = datetime.fromisoformat(raw)
    except ValueError:
        raise CorpusError(f"{where}: invalid timestamp {value!r}") from None
    if stamp.tzinfo is None:
        stamp = stamp.replace(tzinfo=timezone.utc)
    return stamp.astimezone(timezone.utc)


def _post_from_record(record: dict, where: str) -> Post:
    missing = [k for k in _REQUIRED_FIELDS if k not in record]
    if missing:
        raise CorpusError(f"{where}: missing fields: {', '.join(missing)}")
    for key in ("id", "account_id", "text"):
        if not isinstance(record[key], str):
            raise CorpusError(f"{where}: {key} must be a string")
    for key in ("has_image", "has_video", "is_original"):
        if not isinstance(record[key], bool):
            raise CorpusError(f"{where}: {key} must be a boolean")
    try:
        engagement = Engagement(
            likes=record["likes"],
            comments=record["comments"],
            reposts=record["reposts"],
        )
    except CorpusError as exc:
        raise CorpusError(f"{where}: {exc}") from None
    return Post(
        id=record["id"],
        account_id=record["account_id"],
        published_at=parse_timestamp(record["published_at"], f"{where}: published_at"),
        text=record["text"],
        has_image=record["has_image"],
        has_video=record["has_video"],
        is_original=record["is_original"],
        engagement=engagement,
    )


def parse_corpus(path: str | Path, strict: bool = True) -> list[Post]:
    """Read a JSONL corpus file, one post object per line.

    In strict mode any malformed line or duplicate post id raises
    CorpusError naming the line. In lenient mode bad lines are skipped
    with a warning.
    """
    posts: list[Post] = []
    seen: dict[str, int] = {}
    skipped = 0
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        where = f"line {lineno}"
        try:
            record = json.loads(line)
            if not isinstance(record, dict):
                raise CorpusError(f"{where}: expected a JSON object")
            post = _post_from_record(record, where)
            if post.id in seen:
                raise CorpusError(
                    f"{where}: duplicate post id {post.id!r} "
                    f"(first seen on line {seen[post.id]})"
                )
        except json.JSONDecodeError as exc:
            if strict:
                raise CorpusError(f"{where}: invalid JSON: {exc}") from None
            skipped += 1
            logger.warning("skipping %s: invalid JSON", where)
            continue
        except CorpusError:
            if strict:
                raise
            skipped += 1
            logger.warning("skipping %s: malformed record", where)
            continue
        seen[post.id] = lineno
        posts.append(post)
    if skipped:
        logger.warning("skipped %d malformed lines in %s", skipped, path)
    return posts


def filter_corpus(
    posts: Sequence[Post],
    config: FilterConfig,
    lex: LexiconSet | None = None,
    now: datetime | None = None,
) -> list[Post]:
    """Apply the collection-protocol filters, preserving input order."""
    now = now or datetime.now(timezone.utc)
    if now.tzinfo is None:
        now = now.replace(tzinfo=timezone.utc)
    markers: tuple[str, ...] = ()
    if config.drop_lottery:
        if lex is None:
            raise CorpusError("drop_lottery requires a lexicon set")
        markers = lex.categories.get(LOTTERY_MARKERS, ())
    min_age = timedelta(days=config.min_age_days)
    kept = []
    for post in posts:
        if now - post.published_at < min_age:
            continue
        day = post.published_at.date()
        if config.window_start is not None and day < config.window_start:
            continue
        if config.window_end is not None and day > config.window_end:
            continue
        if config.originals_only and not post.is_original:
            continue
        if config.drop_lottery and any(m in post.text for m in markers):
            continue
        kept.append(post)
    return kept


@dataclass(frozen=True)
class PeriodBucket:
    index: int
    post_count: int
    mean_quality: float | None
    mean_values: Mapping[str, float] | None


@dataclass(frozen=True)
class PeriodSeries:
    period_days: int
    buckets: tuple[PeriodBucket, ...] = field(default_factory=tuple)


def bucket_by_period(
    posts: Sequence[Post],
    features: Mapping[str, Mapping[str, float]],
    period_days: int = 30,
) -> PeriodSeries:
    """Group posts into consecutive fixed-length periods from the earliest
    post onward and average quality and every feature column per period.

    Periods with no posts appear with a zero count and no means, so the
    period index stays contiguous from 0.
    """
    if not posts:
        raise CorpusError("cannot bucket an empty corpus")
    if period_days <= 0:
        raise CorpusError("period_days must be positive")
    keys: tuple[str, ...] | None = None
    for post in posts:
        if post.id not in features:
            raise CorpusError(f"no feature row for post id {post.id!r}")
        row_keys = tuple(features[post.id].keys())
        if keys is None:
            keys = row_keys
        elif set(row_keys) != set(keys):
            raise CorpusError(f"feature row for post id {post.id!r} has mismatched keys")
    assert keys is not None

    earliest = min(p.published_at for p in posts)
    groups: dict[int, list[Post]] = {}
    for post in posts:
        index = (post.published_at - earliest).days // period_days
        groups.setdefault(index, []).append(post)

    buckets = []
    for index in range(max(groups) + 1):
        members = groups.get(index, [])
        if not members:
            buckets.append(PeriodBucket(index, 0, None, None))
            continue
        count = len(members)
        mean_quality = sum(quality_of(p.engagement) for p in members) / count
        mean_values = {
            k: sum(float(features[p.id][k]) for p in members) / count for k in keys
        }
        buckets.append(PeriodBucket(index, count, mean_quality, mean_values))
    return PeriodSeries(period_days=period_days, buckets=tuple(buckets))
