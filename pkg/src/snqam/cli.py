"""Command-line interface.

Exit codes: 0 success, 1 usage error (bad flags/arguments), 2 data error
(malformed corpus, bad model file, degenerate calibration input).
"""

from __future__ import annotations

import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import click

from .annotate import annotate
from .api import canonical_json, score_response
from .corpus import FilterConfig, Post, filter_corpus, parse_corpus, parse_timestamp, quality_of
from .errors import CorpusError, SnqamError
from .features import (
    PostMeta,
    compute_facets,
    extract_features,
    facet_index_sets,
    feature_row,
    write_feature_csv,
)
from .forest import DEFAULT_SEED, Dataset, ForestConfig, Label, cross_validate, format_cv_text
from .lexicon import load_lexicons
from .model import calibrate, load_model, save_model, score
from .stats import (
    detect_drift,
    format_correlation_text,
    format_drift_text,
    per_user_correlations,
)


def _read_config_file(path: str | None) -> dict:
    if not path:
        return {}
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise click.UsageError(f"cannot read config file: {exc}")
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"config file is not valid JSON: {exc}")
    if not isinstance(payload, dict):
        raise click.UsageError("config file must hold a JSON object")
    return payload


def _resolve(flag_value, config: dict, key: str, default=None):
    # Click already applies flag > environment; the config file sits below both.
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


def _parse_now(value: str | None) -> datetime:
    if value is None:
        return datetime.now(timezone.utc)
    try:
        return parse_timestamp(value, "--now")
    except CorpusError as exc:
        raise click.UsageError(str(exc))


def _parse_window(value: str | None):
    if value is None:
        return None, None
    parts = value.split(":")
    if len(parts) != 2:
        raise click.UsageError("--window must look like YYYY-MM-DD:YYYY-MM-DD")
    try:
        start = datetime.strptime(parts[0], "%Y-%m-%d").date() if parts[0] else None
        end = datetime.strptime(parts[1], "%Y-%m-%d").date() if parts[1] else None
    except ValueError:
        raise click.UsageError("--window dates must look like YYYY-MM-DD")
    return start, end


def _ingestion_options(command):
    for option in reversed(
        (
            click.option(
                "--strict/--lenient",
                "strict",
                default=True,
                show_default=True,
                help="Fail on malformed corpus lines, or skip them with a warning.",
            ),
            click.option(
                "--min-age-days",
                type=int,
                default=0,
                show_default=True,
                help="Drop posts younger than this many days (0 keeps everything).",
            ),
            click.option(
                "--window",
                default=None,
                metavar="START:END",
                help="Keep posts published inside this date window.",
            ),
            click.option(
                "--originals-only",
                is_flag=True,
                default=False,
                help="Drop reposts and other non-original posts.",
            ),
            click.option(
                "--drop-lottery",
                is_flag=True,
                default=False,
                help="Drop posts that contain giveaway/lottery markers.",
            ),
            click.option(
                "--now",
                "now_value",
                default=None,
                metavar="TIMESTAMP",
                help="Reference time for age filtering (ISO-8601, default: current time).",
            ),
        )
    ):
        command = option(command)
    return command


def _load_posts(
    input_path: str,
    lex,
    strict: bool,
    min_age_days: int,
    window: str | None,
    originals_only: bool,
    drop_lottery: bool,
    now_value: str | None,
) -> list[Post]:
    posts = parse_corpus(input_path, strict=strict)
    window_start, window_end = _parse_window(window)
    if min_age_days > 0 or window_start or window_end or originals_only or drop_lottery:
        config = FilterConfig(
            min_age_days=min_age_days,
            window_start=window_start,
            window_end=window_end,
            originals_only=originals_only,
            drop_lottery=drop_lottery,
        )
        posts = filter_corpus(posts, config, lex, _parse_now(now_value))
    return posts


def _post_features(posts, lex):
    vectors = []
    facets = []
    for post in posts:
        fv = extract_features(
            annotate(post.text, lex),
            PostMeta(has_image=post.has_image, has_video=post.has_video),
        )
        vectors.append(fv)
        facets.append(compute_facets(fv))
    return vectors, facets


@click.group()
def cli() -> None:
    """Score and analyze short news posts."""


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "output_path", required=True, type=click.Path(dir_okay=False))
@click.option("--lexicons", envvar="SNQAM_LEXICONS", default=None, type=click.Path(file_okay=False))
@click.option("--facets", "with_facets", is_flag=True, default=False, help="Append the 8 facet columns.")
@_ingestion_options
def extract(input_path, output_path, lexicons, with_facets, **ingest) -> None:
    """Extract feature rows from a JSONL corpus into CSV."""
    lex = load_lexicons(lexicons)
    posts = _load_posts(input_path, lex, **ingest)
    vectors, facets = _post_features(posts, lex)
    rows = write_feature_csv(
        output_path,
        (p.id for p in posts),
        vectors,
        facets if with_facets else None,
    )
    click.echo(f"wrote {rows} rows to {output_path}", err=True)


@cli.command(name="calibrate")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "output_path", required=True, type=click.Path(dir_okay=False))
@click.option("--lexicons", envvar="SNQAM_LEXICONS", default=None, type=click.Path(file_okay=False))
@click.option(
    "--very-good-accounts",
    required=True,
    help="Comma-separated account ids labeled as very good.",
)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--trees", type=int, default=100, show_default=True)
@click.option("--max-depth", type=int, default=None)
@click.option("--min-leaf", type=int, default=1, show_default=True)
@click.option("--created-at", default=None, help="Pin the model timestamp for reproducible files.")
@_ingestion_options
def calibrate_cmd(
    input_path,
    output_path,
    lexicons,
    very_good_accounts,
    seed,
    trees,
    max_depth,
    min_leaf,
    created_at,
    **ingest,
) -> None:
    """Calibrate a quality model from a labeled corpus."""
    lex = load_lexicons(lexicons)
    posts = _load_posts(input_path, lex, **ingest)
    good = {a.strip() for a in very_good_accounts.split(",") if a.strip()}
    if not good:
        raise click.UsageError("--very-good-accounts must name at least one account")
    vectors, _ = _post_features(posts, lex)
    labels = [
        Label.VERY_GOOD if p.account_id in good else Label.TYPICAL for p in posts
    ]
    quality = [quality_of(p.engagement) for p in posts]
    config = ForestConfig(n_trees=trees, max_depth=max_depth, min_leaf=min_leaf, seed=seed)
    model = calibrate(vectors, labels, quality, config, created_at=created_at)
    save_model(model, output_path)
    click.echo(f"calibrated on {len(posts)} posts -> {output_path}", err=True)


@cli.command(name="score")
@click.option("--model", "model_path", envvar="SNQAM_MODEL", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--lexicons", envvar="SNQAM_LEXICONS", default=None, type=click.Path(file_okay=False))
@click.option("--text", required=True)
@click.option("--has-image", is_flag=True, default=False)
@click.option("--has-video", is_flag=True, default=False)
def score_cmd(model_path, lexicons, text, has_image, has_video) -> None:
    """Score one draft and print the assessment as JSON."""
    model = load_model(model_path)
    lex = load_lexicons(lexicons)
    fv = extract_features(
        annotate(text, lex), PostMeta(has_image=has_image, has_video=has_video)
    )
    click.echo(canonical_json(score_response(score(model, fv))))


@cli.group()
def analyze() -> None:
    """Corpus-level analyses."""


def _analysis_inputs(input_path, lexicons, ingest):
    lex = load_lexicons(lexicons)
    posts = _load_posts(input_path, lex, **ingest)
    vectors, facets = _post_features(posts, lex)
    rows = {
        p.id: feature_row(fv, fc) for p, fv, fc in zip(posts, vectors, facets)
    }
    return lex, posts, vectors, rows


@analyze.command(name="corr")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--lexicons", envvar="SNQAM_LEXICONS", default=None, type=click.Path(file_okay=False))
@click.option("--output-dir", required=True, type=click.Path(file_okay=False))
@_ingestion_options
def corr_cmd(input_path, lexicons, output_dir, **ingest) -> None:
    """Per-user feature/quality rank correlations."""
    _, posts, _, rows = _analysis_inputs(input_path, lexicons, ingest)
    report = per_user_correlations(posts, rows)
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "correlations.json").write_text(
        json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    text = format_correlation_text(report)
    (out / "correlations.txt").write_text(text, encoding="utf-8")
    click.echo(text, nl=False)


@analyze.command(name="drift")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--lexicons", envvar="SNQAM_LEXICONS", default=None, type=click.Path(file_okay=False))
@click.option("--output-dir", required=True, type=click.Path(file_okay=False))
@click.option("--period-days", type=int, default=30, show_default=True)
@_ingestion_options
def drift_cmd(input_path, lexicons, output_dir, period_days, **ingest) -> None:
    """Change-point scan of period means against quality."""
    from .corpus import bucket_by_period

    _, posts, _, rows = _analysis_inputs(input_path, lexicons, ingest)
    series = bucket_by_period(posts, rows, period_days=period_days)
    report = detect_drift(series)
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "drift.json").write_text(
        json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    text = format_drift_text(report)
    (out / "drift.txt").write_text(text, encoding="utf-8")

    # Plot-ready period means: one row per populated period.
    names = list(next(iter(rows.values())).keys())
    lines = ["period_index,post_count,mean_quality," + ",".join(names)]
    for bucket in series.buckets:
        if bucket.post_count == 0:
            continue
        values = ",".join(repr(bucket.mean_values[n]) for n in names)
        lines.append(
            f"{bucket.index},{bucket.post_count},{bucket.mean_quality!r},{values}"
        )
    (out / "period_means.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    click.echo(text, nl=False)


@analyze.command(name="classify")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--lexicons", envvar="SNQAM_LEXICONS", default=None, type=click.Path(file_okay=False))
@click.option("--output-dir", required=True, type=click.Path(file_okay=False))
@click.option("--very-good-accounts", required=True)
@click.option("--folds", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--trees", type=int, default=100, show_default=True)
@click.option("--max-depth", type=int, default=None)
@click.option("--min-leaf", type=int, default=1, show_default=True)
@_ingestion_options
def classify_cmd(
    input_path,
    lexicons,
    output_dir,
    very_good_accounts,
    folds,
    seed,
    trees,
    max_depth,
    min_leaf,
    **ingest,
) -> None:
    """Cross-validated account-class prediction, overall and per facet."""
    _, posts, vectors, _ = _analysis_inputs(input_path, lexicons, ingest)
    good = {a.strip() for a in very_good_accounts.split(",") if a.strip()}
    if not good:
        raise click.UsageError("--very-good-accounts must name at least one account")
    y = [1 if p.account_id in good else 0 for p in posts]
    X = [fv.as_array() for fv in vectors]
    from .features import feature_names

    data = Dataset(X, y, tuple(feature_names()))
    sets = {"all": tuple(range(len(feature_names()))), **facet_index_sets()}
    config = ForestConfig(n_trees=trees, max_depth=max_depth, min_leaf=min_leaf, seed=seed)
    report = cross_validate(data, config, folds=folds, feature_sets=sets)
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "cv_report.json").write_text(
        json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    text = format_cv_text(report)
    (out / "cv_report.txt").write_text(text, encoding="utf-8")
    click.echo(text, nl=False)


@cli.command(name="serve")
@click.option("--model", "model_path", envvar="SNQAM_MODEL", default=None, type=click.Path(dir_okay=False))
@click.option("--lexicons", envvar="SNQAM_LEXICONS", default=None, type=click.Path(file_okay=False))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", envvar="SNQAM_PORT", type=int, default=None)
@click.option("--cors-origin", "cors_origins", multiple=True, help="Allowed CORS origin (repeatable, default *).")
@click.option("--config", "config_path", envvar="SNQAM_CONFIG", default=None, type=click.Path(dir_okay=False))
def serve_cmd(model_path, lexicons, host, port, cors_origins, config_path) -> None:
    """Run the HTTP scoring service."""
    from .server import serve

    config = _read_config_file(config_path)
    model_path = _resolve(model_path, config, "model")
    if not model_path:
        raise click.UsageError("a model file is required (--model, SNQAM_MODEL, or config)")
    lexicons = _resolve(lexicons, config, "lexicons")
    port = _resolve(port, config, "port", 8765)
    serve(
        model_path,
        lexicons,
        host=host,
        port=int(port),
        cors_origins=tuple(cors_origins) or ("*",),
    )


def main(argv: list[str] | None = None) -> int:
    """Run the CLI with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 130
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except SnqamError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
