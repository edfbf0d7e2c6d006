"""Accuracy of both constructions as the dimension grows.

For every ``n`` the same random spectra are fed to each algorithm and the
worst index-matched eigenvalue error of the resulting matrix is recorded.
Means are taken over raw (not log) errors. Naive-route breakdowns are
counted separately and left out of the mean and max.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, InputError, NumericalBreakdown, ResampleLimitExceeded
from .householder import diag2trid
from .schmeisser import naive_solve
from .tridiagonal import SymmetricTridiagonal, eigenvalues

log = logging.getLogger(__name__)

ALGORITHMS: dict[str, Callable[[np.ndarray], SymmetricTridiagonal]] = {
    "naive": naive_solve,
    "diag2trid": lambda lam: diag2trid(lam)[0],
}
CSV_HEADER = (
    "n",
    "algorithm",
    "mean_worst_error",
    "max_worst_error",
    "failures",
    "realizations",
    "seed",
)
MAX_REDRAWS = 1000


@dataclass(frozen=True)
class ExperimentConfig:
    n_values: tuple[int, ...]
    realizations: int = 100
    interval: tuple[float, float] = (-10.0, 10.0)
    min_gap: float = 0.0
    seed: int = 0
    algorithms: tuple[str, ...] = ("naive", "diag2trid")

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        object.__setattr__(self, "interval", tuple(float(v) for v in self.interval))
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        lo, hi = self.interval
        if not lo < hi:
            raise InputError(f"interval ({lo}, {hi}) must satisfy lo < hi")
        if self.realizations < 1:
            raise InputError("realizations must be at least 1")
        if not self.n_values or min(self.n_values) < 1:
            raise InputError("n_values must be non-empty and all >= 1")
        if self.min_gap < 0:
            raise InputError("min_gap must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must be a 64-bit unsigned integer")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown or not self.algorithms:
            raise InputError(
                f"unknown algorithms {unknown}; choose from {sorted(ALGORITHMS)}"
            )

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"


@dataclass(frozen=True)
class ExperimentRecord:
    n: int
    algorithm: str
    mean_worst_error: float
    max_worst_error: float
    failures: int
    realizations: int
    seed: int
    spectrum_hashes: tuple[str, ...] = field(default=(), compare=False, repr=False)


def realization_rng(seed: int, n: int, index: int) -> np.random.Generator:
    """Independent stream per ``(seed, n, index)``; scheduling cannot change it."""
    return np.random.default_rng(np.random.SeedSequence([seed, n, index]))


def random_spectrum(
    n: int,
    interval: tuple[float, float] = (-10.0, 10.0),
    min_gap: float = 0.0,
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    """``n`` sorted uniform draws on ``interval`` with adjacent gaps above ``min_gap``.

    The whole sample is redrawn when any gap is too small.
    """
    if n < 1:
        raise InputError("n must be at least 1")
    if rng is None:
        rng = np.random.default_rng()
    lo, hi = interval
    for _ in range(MAX_REDRAWS):
        lam = np.sort(rng.uniform(lo, hi, n))
        if n == 1 or np.min(np.diff(lam)) > min_gap:
            return lam
    raise ResampleLimitExceeded(
        f"no sample of {n} points on {interval} with gaps > {min_gap} "
        f"after {MAX_REDRAWS} draws"
    )


def worst_error(prescribed: Sequence[float], computed: Sequence[float]) -> float:
    p = np.asarray(prescribed, dtype=float)
    c = np.asarray(computed, dtype=float)
    if p.shape != c.shape:
        raise DimensionMismatch(f"{p.size} prescribed vs {c.size} computed eigenvalues")
    return float(np.max(np.abs(p - c)))


def spectrum_hash(lam: np.ndarray) -> str:
    return hashlib.sha256(np.ascontiguousarray(lam, dtype="<f8").tobytes()).hexdigest()[:16]


def run_experiment(
    cfg: ExperimentConfig, progress: Callable[[int, str], None] | None = None
) -> list[ExperimentRecord]:
    records = []
    for n in cfg.n_values:
        errors = {a: [] for a in cfg.algorithms}
        failures = {a: 0 for a in cfg.algorithms}
        hashes = []
        for r in range(cfg.realizations):
            lam = random_spectrum(
                n, cfg.interval, cfg.min_gap, realization_rng(cfg.seed, n, r)
            )
            h = spectrum_hash(lam)
            hashes.append(h)
            log.debug("n=%d realization=%d spectrum=%s", n, r, h)
            for algo in cfg.algorithms:
                try:
                    T = ALGORITHMS[algo](lam)
                except NumericalBreakdown as exc:
                    failures[algo] += 1
                    log.debug("n=%d realization=%d %s breakdown: %s", n, r, algo, exc)
                    continue
                errors[algo].append(worst_error(lam, eigenvalues(T)))
        for algo in sorted(cfg.algorithms):
            e = errors[algo]
            if failures[algo]:
                log.info(
                    "n=%d %s: %d/%d realizations broke down and are excluded",
                    n, algo, failures[algo], cfg.realizations,
                )
            records.append(
                ExperimentRecord(
                    n=n,
                    algorithm=algo,
                    mean_worst_error=float(np.mean(e)) if e else math.nan,
                    max_worst_error=float(np.max(e)) if e else math.nan,
                    failures=failures[algo],
                    realizations=cfg.realizations,
                    seed=cfg.seed,
                    spectrum_hashes=tuple(hashes),
                )
            )
        if progress is not None:
            progress(n, "done")
    records.sort(key=lambda rec: (rec.n, rec.algorithm))
    return records


def format_csv(records: Iterable[ExperimentRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in records:
        w.writerow(
            [
                rec.n,
                rec.algorithm,
                repr(rec.mean_worst_error),
                repr(rec.max_worst_error),
                rec.failures,
                rec.realizations,
                rec.seed,
            ]
        )
    return buf.getvalue()


def write_csv(records: Iterable[ExperimentRecord], destination) -> None:
    text = format_csv(records)
    path = Path(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def read_csv(source) -> list[ExperimentRecord]:
    with open(source, encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [
        ExperimentRecord(
            n=int(row["n"]),
            algorithm=row["algorithm"],
            mean_worst_error=float(row["mean_worst_error"]),
            max_worst_error=float(row["max_worst_error"]),
            failures=int(row["failures"]),
            realizations=int(row["realizations"]),
            seed=int(row["seed"]),
        )
        for row in rows
    ]


def summary_table(records: Sequence[ExperimentRecord]) -> str:
    lines = [f"{'n':>5}  {'algorithm':<10} {'mean worst':>12} {'max worst':>12} {'failures':>9}"]
    for rec in records:
        lines.append(
            f"{rec.n:>5}  {rec.algorithm:<10} {rec.mean_worst_error:>12.3e} "
            f"{rec.max_worst_error:>12.3e} {rec.failures:>4}/{rec.realizations:<4}"
        )
    return "\n".join(lines)
