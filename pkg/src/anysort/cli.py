"""Command-line front door: traces, benchmarks, self-checks, HTTP service.

Exit codes: 0 success, 1 usage error, 2 runtime failure (I/O, failed check).
Stdout carries data; diagnostics go to stderr.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .bench import (
    DEFAULT_PROFILE_ESTIMATORS,
    ExperimentConfig,
    run_profile,
    run_termination,
)
from .errors import NativeEstimateUnavailable
from .metrics import footrule
from .order import OrderMatrix, compute_scores, score_and_sort
from .sorters import ALGORITHMS, make_sorter
from .verify import CHECKS, run_checks


def _parse_values(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise click.UsageError(f"--list must be comma-separated integers, got {text!r}")
    if sorted(values) != list(range(1, len(values) + 1)):
        raise click.UsageError(f"--list must be a permutation of 1..{len(values)}")
    return values


def _parse_algos(text: str) -> list[str]:
    algos = [a.strip() for a in text.split(",") if a.strip()]
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise click.UsageError(
            f"unknown algorithms: {', '.join(unknown)}; choose from {', '.join(ALGORITHMS)}"
        )
    if not algos:
        raise click.UsageError("at least one algorithm is required")
    return algos


@click.group()
def cli() -> None:
    """Anytime sorting: interruptible algorithms, estimators, benchmarks."""


@cli.command()
@click.option("--algo", required=True, type=click.Choice(ALGORITHMS))
@click.option("--list", "values_text", required=True, help="Comma-separated permutation of 1..n.")
@click.option(
    "--estimator",
    type=click.Choice(["both", "native", "rho"]),
    default="both",
    show_default=True,
    help="Which error columns to compute.",
)
def trace(algo: str, values_text: str, estimator: str) -> None:
    """Print one line per comparison: k, compared values, the smaller value,
    and the footrule error of the native and rho estimates after it."""
    values = _parse_values(values_text)
    n = len(values)
    sorter = make_sorter(algo, n)
    matrix = OrderMatrix(n)
    k = 0
    while (pair := sorter.next_pair()) is not None:
        less = pair.i if values[pair.i] < values[pair.j] else pair.j
        sorter.record_outcome(pair, less)
        hi = pair.j if less == pair.i else pair.i
        matrix.insert(less, hi)
        k += 1
        s_native = "NA"
        if estimator in ("both", "native"):
            try:
                s_native = str(footrule(sorter.native_estimate(), values))
            except NativeEstimateUnavailable:
                pass
        s_rho = "NA"
        if estimator in ("both", "rho"):
            est = score_and_sort(compute_scores(matrix).rho)
            s_rho = str(footrule(est, values))
        click.echo(
            f"{k}\t{values[pair.i]}\t{values[pair.j]}\t{values[less]}\t{s_native}\t{s_rho}"
        )


def _load_config_overrides(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        overrides = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise click.ClickException(f"cannot read config {path}: {exc}")
    if not isinstance(overrides, dict):
        raise click.UsageError("--config must contain a JSON object")
    return overrides


@cli.command()
@click.argument("kind", type=click.Choice(["termination", "profile"]))
@click.option("--algos", required=True, help="Comma-separated algorithm ids.")
@click.option("--n", "sizes", required=True, multiple=True, type=int, help="List size (repeatable).")
@click.option("--trials", type=int, default=None, help="Trials per size (default: desk-scale).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--checkpoints", type=int, default=200, show_default=True)
@click.option("--out", "output", required=True, type=click.Path(dir_okay=False, writable=True))
@click.option("--long-format", is_flag=True, help="Tidy one-quantile-per-row CSV.")
@click.option("--plot/--no-plot", default=False, help="Also render figures next to the CSV.")
@click.option("--config", "config_path", type=click.Path(exists=False), default=None,
              help="JSON file whose keys override the flags above.")
def bench(
    kind: str,
    algos: str,
    sizes: tuple[int, ...],
    trials: int | None,
    seed: int,
    jobs: int,
    checkpoints: int,
    output: str,
    long_format: bool,
    plot: bool,
    config_path: str | None,
) -> None:
    """Run a seeded experiment and write CSV (+ JSON config sidecar)."""
    params = {
        "algorithms": _parse_algos(algos),
        "sizes": [int(x) for x in sizes],
        "trials": trials,
        "seed": seed,
        "jobs": jobs,
        "checkpoints": checkpoints,
    }
    overrides = _load_config_overrides(config_path)
    if "algorithms" in overrides:
        overrides["algorithms"] = _parse_algos(",".join(overrides["algorithms"]))
    params.update({k: v for k, v in overrides.items() if k in params})
    try:
        cfg = ExperimentConfig(output=Path(output), **params)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        result = run_termination(cfg) if kind == "termination" else run_profile(cfg)
        if long_format:
            from .bench import write_stats

            write_stats(result.rows, cfg.output, cfg, long_format=True)
        if plot:
            from . import plotting

            base = Path(output)
            if kind == "termination":
                fig = plotting.plot_termination(result.rows, base.with_suffix(".png"))
                click.echo(f"figure: {fig}", err=True)
            else:
                for fig in plotting.plot_profiles(result.rows, base.with_suffix(".png")):
                    click.echo(f"figure: {fig}", err=True)
    except OSError as exc:
        raise RuntimeError(f"benchmark failed: {exc}") from exc
    click.echo(f"wrote {output} ({len(result.rows)} rows)", err=True)
    for row in result.rows[:20]:
        click.echo(
            f"{row.algorithm}\tn={row.n}\t{row.metric}"
            + (f"\tk={row.k}" if row.k is not None else "")
            + f"\tmedian={row.median:.4g}\t[{row.q025:.4g}, {row.q975:.4g}]"
        )
    if len(result.rows) > 20:
        click.echo(f"... {len(result.rows) - 20} more rows in {output}")


@cli.command()
@click.option(
    "--only",
    type=click.Choice(sorted(CHECKS)),
    multiple=True,
    help="Run only the named checks (repeatable).",
)
def verify(only: tuple[str, ...]) -> None:
    """Replay the frozen reference executions and report pass/fail."""
    results = run_checks(only or None)
    failed = False
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status}  {res.name}"
        if res.detail:
            line += f"  ({res.detail})"
        click.echo(line)
        failed = failed or not res.passed
    if failed:
        raise RuntimeError("one or more checks failed")


@cli.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--snapshot-dir", type=click.Path(file_okay=False), default=None)
@click.option("--max-items", type=int, default=500, show_default=True)
def serve(port: int, host: str, snapshot_dir: str | None, max_items: int) -> None:
    """Start the HTTP session API."""
    import uvicorn

    from .service import create_app

    uvicorn.run(
        create_app(snapshot_dir=snapshot_dir, max_items=max_items),
        host=host,
        port=port,
    )


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 2
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except Exception as exc:  # runtime failure
        click.echo(f"error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
