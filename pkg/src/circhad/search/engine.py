"""Exhaustive, symmetry-reduced enumeration of circulant Hadamard first rows.

Work is split into a fixed list of tasks that depends only on the order and
the configuration, never on the number of workers. Tasks are merged in their
original order, so the outcome is identical for any ``worker_count``.
"""
from __future__ import annotations

import enum
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from circhad.correlation import gram_orthogonality_oracle, is_circulant_hadamard
from circhad.search import kernels
from circhad.sequences import SignRow, format_row, rotate
from circhad.theorem import (
    OrderVerdict,
    allowed_positive_counts,
    identity_report,
    order_filter,
)

log = logging.getLogger(__name__)

PREFIX_DEPTH = 12
PREFIXES_PER_TASK = 64
SCAN_TASKS = 256
_UNLIMITED = np.iinfo(np.int64).max


class Symmetry(enum.Flag):
    NONE = 0
    ROTATION = enum.auto()
    NEGATION = enum.auto()

    @classmethod
    def parse(cls, text: str) -> Symmetry:
        """Parse ``"rotation,negation"``; ``""`` or ``"none"`` give NONE."""
        out = cls.NONE
        for tok in text.split(","):
            tok = tok.strip().lower()
            if tok in ("", "none"):
                continue
            try:
                out |= cls[tok.upper()]
            except KeyError:
                raise ValueError(f"unknown symmetry {tok!r}") from None
        return out

    def names(self) -> list[str]:
        return [s.name.lower() for s in (Symmetry.ROTATION, Symmetry.NEGATION) if s in self]


@dataclass(frozen=True)
class SearchConfig:
    n: int
    use_lemma2_filter: bool = True
    use_paf_pruning: bool = True
    symmetry: Symmetry = Symmetry.ROTATION | Symmetry.NEGATION
    worker_count: int = 1
    node_limit: int | None = None
    emit_all: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if self.n > kernels.MAX_ORDER:
            raise ValueError(f"orders above {kernels.MAX_ORDER} are not supported")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be non-negative")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "use_lemma2_filter": self.use_lemma2_filter,
            "use_paf_pruning": self.use_paf_pruning,
            "symmetry": self.symmetry.names(),
            "node_limit": self.node_limit,
            "emit_all": self.emit_all,
        }


@dataclass(frozen=True)
class SearchOutcome:
    config: SearchConfig
    solutions: tuple[SignRow, ...]
    raw_count: int
    canonical_count: int
    nodes_explored: int
    pruned_by: dict[str, int]
    complete: bool
    order_verdict: OrderVerdict | None = None
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        """Deterministic content; wall time is deliberately left out."""
        return {
            "config": self.config.to_dict(),
            "order_verdict": None if self.order_verdict is None else self.order_verdict.to_dict(),
            "solutions": [format_row(r) for r in self.solutions],
            "raw_count": self.raw_count,
            "canonical_count": self.canonical_count,
            "nodes_explored": self.nodes_explored,
            "pruned_by": dict(sorted(self.pruned_by.items())),
            "complete": self.complete,
        }


def orbit(row: SignRow, symmetry: Symmetry) -> set[SignRow]:
    base = [row, -row] if Symmetry.NEGATION in symmetry else [row]
    if Symmetry.ROTATION not in symmetry:
        return set(base)
    return {rotate(r, k) for r in base for k in range(len(row))}


def canonical_form(row: SignRow, symmetry: Symmetry) -> SignRow:
    """Lexicographically least orbit member, ordering +1 before -1."""
    return min(orbit(row, symmetry), key=SignRow.sort_key)


# -- task execution -------------------------------------------------------

@dataclass(frozen=True)
class _Task:
    kind: str  # "dfs" or "scan"
    n: int
    use_counts: bool
    count_lo: int
    count_hi: int
    prefixes: np.ndarray | None = None
    prefix_len: int = 0
    lo: int = 0
    hi: int = 0
    pinned: bool = False


@dataclass
class _Partial:
    words: list[int]
    nodes: int
    pruned_paf: int
    pruned_counts: int
    exhausted: bool


def _run_task(task: _Task, budget: int) -> _Partial:
    if task.kind == "dfs":
        found, _, nodes, p_paf, p_cnt, exhausted = kernels.dfs_chunk(
            task.n, task.prefixes, task.prefix_len, task.n,
            task.use_counts, task.count_lo, task.count_hi, budget,
        )
    else:
        found, _, nodes, p_paf, p_cnt, exhausted = kernels.scan_range(
            task.n, task.lo, task.hi, task.pinned,
            task.use_counts, task.count_lo, task.count_hi, budget,
        )
    return _Partial([int(w) for w in found], int(nodes), int(p_paf), int(p_cnt), bool(exhausted))


def _run_task_unbudgeted(task: _Task) -> _Partial:
    return _run_task(task, _UNLIMITED)


def _plan_dfs(cfg: SearchConfig, use_counts: bool, lo: int, hi: int, budget: int):
    """Expand the shared prefix tree and cut the frontier into tasks."""
    n = cfg.n
    start = 1 if Symmetry.NEGATION in cfg.symmetry else 0
    depth = max(start, min(n, PREFIX_DEPTH))
    root = np.zeros(1, np.uint64)
    found, _, nodes, p_paf, p_cnt, exhausted = kernels.dfs_chunk(
        n, root, start, depth, use_counts, lo, hi, budget,
    )
    head = _Partial([], int(nodes), int(p_paf), int(p_cnt), bool(exhausted))
    tasks = [
        _Task("dfs", n, use_counts, lo, hi, prefixes=found[i:i + PREFIXES_PER_TASK], prefix_len=depth)
        for i in range(0, len(found), PREFIXES_PER_TASK)
    ]
    return head, tasks


def _plan_scan(cfg: SearchConfig, use_counts: bool, lo: int, hi: int):
    pinned = Symmetry.NEGATION in cfg.symmetry and cfg.n > 1
    total = 1 << (cfg.n - 1 if pinned else cfg.n)
    step = max(1, -(-total // SCAN_TASKS))
    return [
        _Task("scan", cfg.n, use_counts, lo, hi, lo=a, hi=min(a + step, total), pinned=pinned)
        for a in range(0, total, step)
    ]


def _execute(tasks: list[_Task], workers: int, budget: int | None):
    """Run tasks, yielding results strictly in task order."""
    if workers == 1 or len(tasks) <= 1:
        for t in tasks:
            yield t, _run_task(t, _UNLIMITED if budget is None else budget)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        if budget is None:
            results = pool.map(_run_task_unbudgeted, tasks, chunksize=1)
        else:
            results = pool.map(_run_task, tasks, [budget] * len(tasks), chunksize=1)
        try:
            for t, r in zip(tasks, results):
                yield t, r
        finally:
            pool.shutdown(wait=True, cancel_futures=True)


def enumerate_rows(config: SearchConfig) -> SearchOutcome:
    """Find every circulant Hadamard first row of order ``config.n``.

    With ``use_paf_pruning`` the branch-and-prune kernel is used; without it
    every candidate word is tested outright. With ``use_lemma2_filter`` the
    order pre-filter may short-circuit the run and the positive-entry count
    must be one of 2h^2 +/- h. When negation is a configured symmetry the
    first entry is pinned to +1 and the other half is recovered by orbit
    expansion. Node-limit aborts return ``complete=False`` with the
    statistics gathered so far.
    """
    t0 = time.perf_counter()
    cfg = config
    n = cfg.n
    verdict = None
    use_counts = False
    lo = hi = -1
    if cfg.use_lemma2_filter:
        verdict = order_filter(n)
        if not verdict.admissible:
            log.info("order %d excluded before search: %s", n, verdict.reason)
            return SearchOutcome(
                cfg, (), 0, 0, 0, {"paf": 0, "lemma2": 0}, True, verdict,
                time.perf_counter() - t0,
            )
        if verdict.h is not None:
            use_counts = True
            lo, hi = allowed_positive_counts(verdict.h)

    limit = cfg.node_limit
    words: list[int] = []
    nodes = pruned_paf = pruned_counts = 0
    complete = True

    if cfg.use_paf_pruning:
        head, tasks = _plan_dfs(cfg, use_counts, lo, hi, _UNLIMITED if limit is None else limit)
        nodes, pruned_paf, pruned_counts = head.nodes, head.pruned_paf, head.pruned_counts
        if head.exhausted:
            complete = False
            tasks = []
    else:
        tasks = _plan_scan(cfg, use_counts, lo, hi)
    log.debug("order %d: %d tasks on %d workers", n, len(tasks), cfg.worker_count)

    for task, part in _execute(tasks, cfg.worker_count, None if limit is None else limit):
        if limit is not None and (part.exhausted or nodes + part.nodes > limit):
            # rerun with the exact remaining budget so the cut point is worker-independent
            part = _run_task(task, limit - nodes)
            complete = False
        words.extend(part.words)
        nodes += part.nodes
        pruned_paf += part.pruned_paf
        pruned_counts += part.pruned_counts
        if not complete:
            break

    found = [SignRow.from_bits(w, n) for w in words]
    for row in found:
        if not is_circulant_hadamard(row):
            raise AssertionError(f"search kernel emitted a non-Hadamard row {format_row(row)}")
    raw: set[SignRow] = set()
    for row in found:
        raw |= orbit(row, cfg.symmetry)
    classes = {canonical_form(r, cfg.symmetry) for r in raw}
    chosen = raw if cfg.emit_all else classes
    solutions = tuple(sorted(chosen, key=SignRow.sort_key))
    elapsed = time.perf_counter() - t0
    log.info("order %d: %d raw, %d classes, %d nodes, %.3fs", n, len(raw), len(classes), nodes, elapsed)
    return SearchOutcome(
        cfg, solutions, len(raw), len(classes), nodes,
        {"paf": pruned_paf, "lemma2": pruned_counts},
        complete, verdict, elapsed,
    )


def verify_solutions(outcome: SearchOutcome) -> bool:
    """Re-check each solution with the Gram oracle and, for even orders,
    the half-decomposition condition (which holds for every Hadamard row)."""
    for row in outcome.solutions:
        if not gram_orthogonality_oracle(row):
            return False
        if len(row) % 2 == 0 and not identity_report(row).condition1_holds:
            return False
    return True
