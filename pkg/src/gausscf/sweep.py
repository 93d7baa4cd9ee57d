"""Monte Carlo SNR sweep and its command-line front end.

Blocks are simulated in fixed-size chunks. Each chunk draws from its own
stream keyed by ``(seed, p, snr index, chunk index)``, so a sweep gives the
same counts whether it runs serially or across any number of processes.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .analysis import union_bound
from .cflink import block_stream, simulate_blocks
from .constellation import build_system, sigma_for_snr

CHUNK_BLOCKS = 2048


@dataclass(frozen=True)
class SweepConfig:
    fields: tuple[int, ...] = (5, 13, 41)
    users: int = 2
    snr_start: float = 0.0
    snr_stop: float = 40.0
    snr_step: float = 2.5
    blocks: int = 10_000
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if not self.snr_step > 0:
            raise ValueError("snr_step must be positive")
        if self.snr_stop < self.snr_start:
            raise ValueError("snr_stop must not be below snr_start")
        if self.blocks < 1:
            raise ValueError("blocks must be at least 1")
        if self.users < 1:
            raise ValueError("users must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        for p in self.fields:
            build_system(p)  # raises with the admissibility rule

    def snr_grid(self) -> list[float]:
        n = int(math.floor((self.snr_stop - self.snr_start) / self.snr_step + 1e-9)) + 1
        return [round(self.snr_start + k * self.snr_step, 10) for k in range(n)]


@dataclass(frozen=True)
class ErrorReport:
    p: int
    L: int
    snr_db: float
    blocks: int
    relay_uses: int
    relay_errors: int
    relay_rate: float
    dest_errors: int
    dest_rate: float
    rank_failures: int
    rank_rate: float
    analytic_p1: float
    analytic_pr_paper: float
    analytic_pr_exact: float
    union_bound: float

    @property
    def dest_se(self) -> float:
        r = self.dest_rate
        return math.sqrt(r * (1 - r) / self.blocks)

    @property
    def relay_se(self) -> float:
        r = self.relay_rate
        return math.sqrt(r * (1 - r) / self.relay_uses)


FIELDNAMES = [f.name for f in fields(ErrorReport)]
_INT_FIELDS = {f.name for f in fields(ErrorReport) if f.type in ("int", int)}


def _chunk_counts(task) -> tuple[int, int, int]:
    seed, p, snr_index, chunk, n, L, sigma = task
    out = simulate_blocks(block_stream(seed, p, snr_index, chunk), build_system(p), L, sigma, n)
    return int(out.relay_errors.sum()), int(out.dest_errors.sum()), int((~out.full_rank).sum())


def run_point(p: int, L: int, snr_db: float, blocks: int, seed: int, snr_index: int = 0,
              executor=None) -> ErrorReport:
    """Simulate ``blocks`` blocks at one SNR and attach the analytic columns."""
    system = build_system(p)
    sigma = sigma_for_snr(snr_db, system)
    tasks = [(seed, p, snr_index, c, min(CHUNK_BLOCKS, blocks - c * CHUNK_BLOCKS), L, sigma)
             for c in range(-(-blocks // CHUNK_BLOCKS))]
    counts = executor.map(_chunk_counts, tasks) if executor else map(_chunk_counts, tasks)
    relay, dest, rank = (sum(col) for col in zip(*counts))
    bound = union_bound(p, L, sigma)
    uses = blocks * L
    return ErrorReport(p, L, snr_db, blocks, uses, relay, relay / uses, dest, dest / blocks,
                       rank, rank / blocks, bound.p1, bound.pr_paper, bound.pr_exact, bound.union_bound)


def run_sweep(cfg: SweepConfig, progress=None) -> list[ErrorReport]:
    grid = cfg.snr_grid()
    executor = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    reports = []
    try:
        for p in cfg.fields:
            for k, snr in enumerate(grid):
                rep = run_point(p, cfg.users, snr, cfg.blocks, cfg.seed, k, executor)
                reports.append(rep)
                if progress:
                    progress(rep)
    finally:
        if executor:
            executor.shutdown()
    return reports


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def write_csv(reports: Iterable[ErrorReport], path) -> None:
    path = Path(path)
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(FIELDNAMES)
            for rep in reports:
                writer.writerow([_fmt(v) for v in astuple(rep)])
    except OSError as exc:
        raise OSError(f"cannot write results to {path}: {exc}") from exc


def read_csv(path) -> list[ErrorReport]:
    with Path(path).open(newline="", encoding="utf-8") as fh:
        return [ErrorReport(**{k: int(v) if k in _INT_FIELDS else float(v) for k, v in row.items()})
                for row in csv.DictReader(fh)]


PLOT_FIELDS = ["p", "snr_db", "relay_rate", "dest_rate", "union_bound", "analytic_p1"]


def emit_plotdata(reports: Iterable[ErrorReport], path) -> None:
    """One series per field order, in long format with a ``p`` column."""
    path = Path(path)
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(PLOT_FIELDS)
            for rep in reports:
                writer.writerow([_fmt(getattr(rep, k)) for k in PLOT_FIELDS])
    except OSError as exc:
        raise OSError(f"cannot write plot data to {path}: {exc}") from exc


def floor_check(reports: Sequence[ErrorReport]) -> list[tuple[int, bool, str]]:
    """Check the highest-SNR point of each field against the rank-failure floor."""
    results = []
    for p in dict.fromkeys(r.p for r in reports):
        top = max((r for r in reports if r.p == p), key=lambda r: r.snr_db)
        se = math.sqrt(top.analytic_p1 * (1 - top.analytic_p1) / top.blocks)
        ok = abs(top.dest_rate - top.analytic_p1) <= 3 * se
        results.append((p, ok, f"p={p} snr={top.snr_db:g} dB dest_rate={top.dest_rate:.6f} "
                               f"P1={top.analytic_p1:.6f} 3SE={3 * se:.6f}"))
    return results


def _field_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gausscf-sweep",
                                 description="Monte Carlo SNR sweep of compute-and-forward over residue-class constellations.")
    ap.add_argument("--fields", type=_field_list, default=(5, 13, 41), help="comma-separated field orders (default 5,13,41)")
    ap.add_argument("--users", type=int, default=2)
    ap.add_argument("--snr-start", type=float, default=0.0)
    ap.add_argument("--snr-stop", type=float, default=40.0)
    ap.add_argument("--snr-step", type=float, default=2.5)
    ap.add_argument("--blocks", type=int, default=10_000, help="decoding blocks per SNR point")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="results.csv")
    ap.add_argument("--plot-data", default=None, help="also write per-field plotting series here")
    ap.add_argument("--floor-check", action="store_true",
                    help="fail unless the highest-SNR destination error is within 3 SE of the rank-failure floor")
    ap.add_argument("--quiet", action="store_true", help="suppress the per-point progress line")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = SweepConfig(args.fields, args.users, args.snr_start, args.snr_stop, args.snr_step,
                          args.blocks, args.seed, args.workers)
    except ValueError as exc:
        print(f"gausscf-sweep: error: {exc}", file=sys.stderr)
        return 2

    def progress(rep: ErrorReport) -> None:
        print(f"p={rep.p:<3d} snr={rep.snr_db:6.2f} dB  relay={rep.relay_rate:.3e}  dest={rep.dest_rate:.3e}",
              file=sys.stderr)

    reports = run_sweep(cfg, None if args.quiet else progress)
    try:
        write_csv(reports, args.out)
        if args.plot_data:
            emit_plotdata(reports, args.plot_data)
    except OSError as exc:
        print(f"gausscf-sweep: error: {exc}", file=sys.stderr)
        return 1
    if args.floor_check:
        results = floor_check(reports)
        for _, ok, line in results:
            print(("PASS " if ok else "FAIL ") + line)
        if not all(ok for _, ok, _ in results):
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
