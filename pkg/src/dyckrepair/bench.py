"""Benchmark harness: planted instances, exact optima, approximation ratios, CSV.

Config is flat ``key = value`` lines (``#`` starts a comment); list values are
comma-separated.  Recognised keys::

    n = 100, 200, 400        # target lengths (even)
    s = 2
    k = 1, 4, 8              # planted edits
    algos = random, refined, phased
    repetitions = 5
    seed = 42
    oracle_cap = 400         # exact columns only when len <= cap
    iterations =             # empty: default restart count
    workers = 1
    timing = 0               # 1: fill wall_micros, otherwise -1

Any other key is kept as a harness constant (for example the ratio
thresholds used by the acceptance suite) and is available on
:class:`BenchConfig` via ``extra``.

Cell ``c`` (position in the ``n`` x ``k`` grid, row-major) and repetition
``rep`` build their instance from ``substream(seed, c, rep)``; every
algorithm on that instance gets the same derived seed ``algo_seed(seed, c,
rep)``, so any row can be reproduced alone.
"""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

import numpy as np

from .generate import gen_instance
from .oracle import dyck_deletion_dp, dyck_edit_dp
from .randomdel import default_iterations, repair_random
from .refined import repair_refined
from .phased import repair_phased
from .rng import MASK64, substream

ALGOS = {"random": repair_random, "refined": repair_refined, "phased": repair_phased}


@dataclass(frozen=True)
class BenchRecord:
    n: int
    s: int
    planted_edits: int
    opt_exact: int
    opt_deletion: int
    algo: str
    iterations: int
    seed: int
    cost: int
    ratio: float
    wall_micros: int
    rep: int = 0
    status: str = "ok"

    @classmethod
    def header(cls) -> list:
        return [f.name for f in fields(cls)]

    def row(self) -> list:
        out = []
        for f in fields(self):
            v = getattr(self, f.name)
            out.append(f"{v:.6f}" if isinstance(v, float) else str(v))
        return out


@dataclass(frozen=True)
class BenchConfig:
    n: tuple = (100,)
    s: int = 2
    k: tuple = (2,)
    algos: tuple = ("random",)
    repetitions: int = 1
    seed: int = 0
    oracle_cap: int = 400
    iterations: int | None = None
    workers: int = 1
    timing: bool = False
    extra: dict = field(default_factory=dict)

    def get(self, key: str, default=None, cast=float):
        return cast(self.extra[key]) if key in self.extra else default


def _ints(v: str) -> tuple:
    return tuple(int(x) for x in v.replace(",", " ").split())


def parse_config(text: str) -> BenchConfig:
    kv = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {no}: expected key = value")
        key, val = (x.strip() for x in line.split("=", 1))
        kv[key] = val
    cfg = {}
    if "n" in kv:
        cfg["n"] = _ints(kv.pop("n"))
    if "k" in kv:
        cfg["k"] = _ints(kv.pop("k"))
    if "algos" in kv:
        algos = tuple(a.strip() for a in kv.pop("algos").split(",") if a.strip())
        unknown = [a for a in algos if a not in ALGOS]
        if unknown:
            raise ValueError(f"unknown algorithms: {', '.join(unknown)}")
        cfg["algos"] = algos
    for key in ("s", "repetitions", "seed", "oracle_cap", "workers"):
        if key in kv:
            cfg[key] = int(kv.pop(key))
    if "iterations" in kv:
        v = kv.pop("iterations")
        cfg["iterations"] = int(v) if v else None
    if "timing" in kv:
        cfg["timing"] = kv.pop("timing").lower() in ("1", "true", "yes")
    return BenchConfig(**cfg, extra=kv)


def algo_seed(seed: int, cell: int, rep: int) -> int:
    ss = np.random.SeedSequence(int(seed) & MASK64, spawn_key=(cell, rep, 1))
    return int(ss.generate_state(1, np.uint64)[0])


def run_cell(cfg: BenchConfig, cell: int, n: int, k: int, rep: int) -> list:
    """All algorithm rows for one (cell, repetition)."""
    seed = algo_seed(cfg.seed, cell, rep)
    try:
        p, _ = gen_instance(n, cfg.s, k, substream(cfg.seed, cell, rep))
    except Exception as exc:          # a broken cell is recorded, not fatal
        return [BenchRecord(n, cfg.s, k, -1, -1, a, -1, seed, -1, -1.0, -1, rep,
                            type(exc).__name__) for a in cfg.algos]
    opt = opt_d = -1
    if len(p) <= cfg.oracle_cap:
        opt = dyck_edit_dp(p, cap=cfg.oracle_cap).cost
        opt_d = dyck_deletion_dp(p, cap=cfg.oracle_cap)
    iters = default_iterations(len(p), cfg.iterations)
    rows = []
    for a in cfg.algos:
        try:
            t0 = time.perf_counter()
            res = ALGOS[a](p, seed=seed, iterations=cfg.iterations)
            wall = int((time.perf_counter() - t0) * 1e6) if cfg.timing else -1
            ratio = res.cost / opt if opt > 0 else -1.0
            rows.append(BenchRecord(n, cfg.s, k, opt, opt_d, a, iters, seed,
                                    res.cost, ratio, wall, rep))
        except Exception as exc:
            rows.append(BenchRecord(n, cfg.s, k, opt, opt_d, a, iters, seed, -1, -1.0,
                                    -1, rep, type(exc).__name__))
    return rows


def _cells(cfg: BenchConfig):
    cell = 0
    for n in cfg.n:
        for k in cfg.k:
            for rep in range(cfg.repetitions):
                yield (cell, n, k, rep)
            cell += 1


def _run_star(args):
    return run_cell(*args)


def bench(cfg: BenchConfig) -> list:
    """Records in config order (n, then k, then repetition, then algo)."""
    jobs = [(cfg, *c) for c in _cells(cfg)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_run_star, jobs))
    else:
        chunks = [_run_star(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BenchRecord.header())
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()
