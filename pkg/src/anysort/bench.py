"""Seeded benchmark harness: termination overhead and performance profiles.

Every trial input is a uniform random permutation derived from
(master seed, n, trial index), so all algorithms see the same inputs and
adding algorithms never perturbs them.  Aggregation is a deterministic fold
over trial index order, which keeps output byte-identical regardless of the
worker pool size.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .metrics import footrule, max_footrule
from .order import ComparisonRecord, OrderMatrix, compute_scores, score_and_sort
from .sorters import make_sorter, run_to_completion

CSV_HEADER = "algorithm,n,metric,k,median,q025,q975"

# Estimators evaluated per algorithm in profile runs (the benchmark's default
# panel; heapsort and shellsort are omitted because of their termination cost).
DEFAULT_PROFILE_ESTIMATORS: dict[str, tuple[str, ...]] = {
    "topdown_merge": ("native",),
    "bottomup_merge": ("rho",),
    "multizip": ("rho",),
    "quicksort": ("native",),
    "asort": ("native", "rho"),
    "binary_insertion": ("native", "rho"),
    "ford_johnson": ("rho",),
    "corsort": ("rho",),
    "heapsort": ("rho",),
    "shellsort": ("rho",),
}

TABLE2_CHECKPOINTS = (4000, 6000, 8000)


def default_trials(n: int) -> int:
    """Desk-scale trial counts: heavy sizes get fewer trials."""
    return 1000 if n <= 256 else 100


@dataclass
class ExperimentConfig:
    algorithms: Sequence[str]
    sizes: Sequence[int]
    trials: int | None = None  # None: per-size default
    seed: int = 0
    checkpoints: int = 200
    output: Path | None = None
    jobs: int = 1
    estimators: dict[str, tuple[str, ...]] | None = None

    def __post_init__(self):
        if self.trials is not None and self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.checkpoints < 2:
            raise ValueError("need at least 2 checkpoints")

    def trials_for(self, n: int) -> int:
        return self.trials if self.trials is not None else default_trials(n)


@dataclass(frozen=True)
class StatRow:
    algorithm: str
    n: int
    metric: str
    k: int | None
    median: float
    q025: float
    q975: float


@dataclass
class TerminationStats:
    rows: list[StatRow] = field(default_factory=list)


@dataclass
class ProfileSeries:
    rows: list[StatRow] = field(default_factory=list)


def random_permutation(master_seed: int, n: int, trial: int) -> list[int]:
    """Uniform random ranks 1..n, deterministic per (seed, n, trial)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence([master_seed, n, trial]))
    return (rng.permutation(n) + 1).tolist()


def lower_bound_bits(n: int) -> float:
    """log2(n!), the information-theoretic comparison lower bound."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.fsum(math.log2(k) for k in range(2, n + 1))


def quantile(samples: Sequence[float], q: float) -> float:
    """Nearest-rank empirical quantile: the ceil(q*N)-th smallest sample."""
    if len(samples) == 0:
        raise ValueError("quantile of empty sample set")
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must be in [0, 1], got {q}")
    ordered = sorted(samples)
    rank = max(1, math.ceil(q * len(ordered)))
    return ordered[rank - 1]


def _summarize(samples: Sequence[float]) -> tuple[float, float, float]:
    return quantile(samples, 0.5), quantile(samples, 0.025), quantile(samples, 0.975)


# ---------------------------------------------------------------------------
# termination overhead


def _termination_chunk(args) -> list[int]:
    algorithm, n, seed, trials = args
    counts = []
    for t in trials:
        truth = random_permutation(seed, n, t)
        count, _ = run_to_completion(make_sorter(algorithm, n), truth)
        counts.append(count)
    return counts


def _map_chunks(worker: Callable, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def _chunked(trials: int, jobs: int) -> list[range]:
    chunks = max(1, min(jobs * 4, trials))
    bounds = np.linspace(0, trials, chunks + 1, dtype=int)
    return [range(int(a), int(b)) for a, b in zip(bounds, bounds[1:]) if a < b]


def termination_counts(cfg: ExperimentConfig, algorithm: str, n: int) -> list[int]:
    trials = cfg.trials_for(n)
    tasks = [(algorithm, n, cfg.seed, chunk) for chunk in _chunked(trials, cfg.jobs)]
    out: list[int] = []
    for part in _map_chunks(_termination_chunk, tasks, cfg.jobs):
        out.extend(part)
    return out


def run_termination(cfg: ExperimentConfig) -> TerminationStats:
    stats = TerminationStats()
    for algorithm in cfg.algorithms:
        for n in cfg.sizes:
            bound = lower_bound_bits(n)
            counts = termination_counts(cfg, algorithm, n)
            overheads = [100.0 * (c - bound) / bound for c in counts]
            med, lo, hi = _summarize(overheads)
            stats.rows.append(
                StatRow(algorithm, n, "overhead_pct", None, med, lo, hi)
            )
    if cfg.output is not None:
        write_stats(stats.rows, cfg.output, cfg)
    return stats


# ---------------------------------------------------------------------------
# performance profiles


def _rho_profile_values(
    history: Sequence[ComparisonRecord],
    truth: Sequence[int],
    grid: Sequence[int],
) -> list[float]:
    """Normalized footrule of the rho estimate at each checkpoint, replaying
    the recorded history through an incrementally maintained closure."""
    n = len(truth)
    matrix = OrderMatrix(n)
    denom = max_footrule(n)
    values: list[float] = []
    pos = 0
    for k in grid:
        while pos < min(k, len(history)):
            rec = history[pos]
            matrix.insert(rec.lo, rec.hi)
            pos += 1
        if k >= len(history):
            values.append(0.0)
        else:
            est = score_and_sort(compute_scores(matrix).rho)
            values.append(footrule(est, truth) / denom)
    return values


def _native_profile_values(
    algorithm: str, truth: Sequence[int], grid: Sequence[int]
) -> list[float]:
    """Normalized footrule of the native estimate at each checkpoint."""
    n = len(truth)
    sorter = make_sorter(algorithm, n)
    denom = max_footrule(n)
    by_k: dict[int, float] = {}
    targets = sorted(set(grid))
    ti = 0

    def snap(k: int) -> None:
        nonlocal ti
        while ti < len(targets) and targets[ti] == k:
            by_k[k] = footrule(sorter.native_estimate(), truth) / denom
            ti += 1

    snap(0)
    while (pair := sorter.next_pair()) is not None:
        less = pair.i if truth[pair.i] < truth[pair.j] else pair.j
        sorter.record_outcome(pair, less)
        snap(sorter.comparisons_done)
    return [by_k.get(k, 0.0) for k in grid]


def _profile_chunk(args) -> dict[str, list[list[float]]]:
    algorithm, n, seed, trial_range, grid, estimators = args
    out: dict[str, list[list[float]]] = {est: [] for est in estimators}
    for t in trial_range:
        truth = random_permutation(seed, n, t)
        if "rho" in estimators or not _has_native(algorithm):
            _, history = run_to_completion(make_sorter(algorithm, n), truth)
        if "rho" in estimators:
            out["rho"].append(_rho_profile_values(history, truth, grid))
        if "native" in estimators:
            out["native"].append(_native_profile_values(algorithm, truth, grid))
    return out


def _has_native(algorithm: str) -> bool:
    return algorithm not in ("ford_johnson", "corsort")


def profile_grid(cfg: ExperimentConfig, max_count: int, n: int) -> list[int]:
    """Evenly spaced checkpoint comparisons, padded 10% past the slowest
    observed termination; the published n=1000 checkpoints are always kept."""
    top = math.ceil(1.1 * max_count)
    ks = set(np.linspace(0, top, cfg.checkpoints, dtype=int).tolist())
    if n == 1000:
        ks.update(TABLE2_CHECKPOINTS)
    return sorted(ks)


def profile_at_checkpoints(
    algorithm: str,
    n: int,
    trials: int,
    seed: int,
    grid: Sequence[int],
    estimator: str = "rho",
) -> list[tuple[float, float, float]]:
    """(median, q025, q975) of the normalized error at each fixed checkpoint,
    without first measuring termination times (cheaper than run_profile when
    the checkpoints are known up front)."""
    rows: list[list[float]] = []
    for t in range(trials):
        truth = random_permutation(seed, n, t)
        if estimator == "rho":
            _, history = run_to_completion(make_sorter(algorithm, n), truth)
            rows.append(_rho_profile_values(history, truth, grid))
        elif estimator == "native":
            rows.append(_native_profile_values(algorithm, truth, grid))
        else:
            raise ValueError(f"unknown estimator {estimator!r}")
    return [_summarize([r[c] for r in rows]) for c in range(len(grid))]


def run_profile(cfg: ExperimentConfig) -> ProfileSeries:
    series = ProfileSeries()
    est_map = cfg.estimators or DEFAULT_PROFILE_ESTIMATORS
    for algorithm in cfg.algorithms:
        estimators = tuple(est_map.get(algorithm, ("rho",)))
        if not _has_native(algorithm):
            estimators = tuple(e for e in estimators if e != "native") or ("rho",)
        for n in cfg.sizes:
            trials = cfg.trials_for(n)
            counts = termination_counts(cfg, algorithm, n)
            grid = profile_grid(cfg, max(counts), n)
            tasks = [
                (algorithm, n, cfg.seed, chunk, grid, estimators)
                for chunk in _chunked(trials, cfg.jobs)
            ]
            merged: dict[str, list[list[float]]] = {e: [] for e in estimators}
            for part in _map_chunks(_profile_chunk, tasks, cfg.jobs):
                for est in estimators:
                    merged[est].extend(part[est])
            for est in estimators:
                table = np.array(merged[est])  # trials x checkpoints
                for col, k in enumerate(grid):
                    med, lo, hi = _summarize(table[:, col].tolist())
                    series.rows.append(
                        StatRow(algorithm, n, f"profile_{est}", k, med, lo, hi)
                    )
    if cfg.output is not None:
        write_stats(series.rows, cfg.output, cfg)
    return series


# ---------------------------------------------------------------------------
# output


def format_rows(rows: Iterable[StatRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        k = "" if r.k is None else str(r.k)
        lines.append(
            f"{r.algorithm},{r.n},{r.metric},{k},{r.median!r},{r.q025!r},{r.q975!r}"
        )
    return "\n".join(lines) + "\n"


def format_rows_long(rows: Iterable[StatRow]) -> str:
    """Tidy long format (one quantile per row), for gnuplot/vega-lite."""
    lines = ["algorithm,n,metric,k,quantile,value"]
    for r in rows:
        k = "" if r.k is None else str(r.k)
        for q, v in (("0.5", r.median), ("0.025", r.q025), ("0.975", r.q975)):
            lines.append(f"{r.algorithm},{r.n},{r.metric},{k},{q},{v!r}")
    return "\n".join(lines) + "\n"


def write_stats(
    rows: Sequence[StatRow],
    path: Path | str,
    cfg: ExperimentConfig,
    long_format: bool = False,
) -> None:
    path = Path(path)
    text = format_rows_long(rows) if long_format else format_rows(rows)
    path.write_text(text)
    sidecar = path.with_suffix(path.suffix + ".json")
    cfg_dict = asdict(cfg)
    cfg_dict["output"] = str(cfg.output) if cfg.output else None
    if cfg_dict.get("estimators"):
        cfg_dict["estimators"] = {k: list(v) for k, v in cfg_dict["estimators"].items()}
    sidecar.write_text(json.dumps(cfg_dict, indent=2, sort_keys=True) + "\n")
