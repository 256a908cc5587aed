"""Exhaustive generation of 2-connected plane graphs with a fixed outer cycle,
and the search for R-critical graphs among them.

Graphs grow from the bare cycle R by ear insertion: a path is added between
two vertices of an inner face.  Every ear raises the cyclomatic number by one,
so the search runs level by level and deduplicates each level on rooted
canonical codes.  Short cycles are never destroyed by later ears, so children
that already violate the cycle constraints are dropped at once.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterator

import numpy as np

from . import _kernels
from .coloring import critical_fast
from .plane_graph import PlaneGraph, from_code

CHECKPOINT_VERSION = 1


@dataclass(frozen=True)
class GenConstraints:
    """Envelope of a search.

    ``max_triangles`` and ``min_triangles`` count triangles other than R.
    ``min_other_cycle`` is 5 (no 4-cycles besides R) or 4; 3 means the same
    as 4 since triangles are governed by ``max_triangles``.
    """

    outer_len: int
    max_vertices: int
    max_triangles: int = 1
    min_other_cycle: int = 5
    require_2connected: bool = True
    min_triangles: int = 0

    def __post_init__(self):
        if not 3 <= self.outer_len <= 6:
            raise ValueError("outer_len must lie in 3..6")
        if not self.outer_len <= self.max_vertices <= 20:
            raise ValueError("need outer_len <= max_vertices <= 20")
        if self.max_triangles not in (0, 1):
            raise ValueError("max_triangles must be 0 or 1")
        if not 0 <= self.min_triangles <= self.max_triangles:
            raise ValueError("need 0 <= min_triangles <= max_triangles")
        if self.min_other_cycle not in (3, 4, 5):
            raise ValueError("min_other_cycle must be 3, 4 or 5")
        if not self.require_2connected:
            raise NotImplementedError("only 2-connected generation is supported")

    @property
    def forbid_four(self) -> bool:
        return self.min_other_cycle >= 5

    @property
    def code_len(self) -> int:
        n = self.max_vertices
        return 1 + n + 2 * max(3 * n - 6, n)

    def with_outer(self, k: int, min_triangles: int | None = None) -> "GenConstraints":
        mt = self.min_triangles if min_triangles is None else min_triangles
        return GenConstraints(k, max(k, self.max_vertices), self.max_triangles, self.min_other_cycle,
                              self.require_2connected, mt)

    def to_dict(self) -> dict:
        return asdict(self)


def class_constraints(outer_len: int, max_vertices: int) -> GenConstraints:
    """At most one triangle, no 4-cycle besides R."""
    return GenConstraints(outer_len, max_vertices, 1, 5)


def triangle_free_constraints(outer_len: int, max_vertices: int) -> GenConstraints:
    return GenConstraints(outer_len, max_vertices, 0, 4)


def one_triangle_constraints(outer_len: int, max_vertices: int) -> GenConstraints:
    """At most one triangle besides R, 4-cycles allowed."""
    return GenConstraints(outer_len, max_vertices, 1, 4)


def max_edges(c: GenConstraints, n: int) -> int:
    """Upper bound on the edges of a graph in the family on n vertices,
    other than the bare cycle.

    Faces are cycles; all but R and at most ``max_triangles`` of them have
    length >= g, so (g-2)E <= g(n-1) + (g-3)t - |R| by Euler's formula.
    """
    g = 5 if c.forbid_four else 4
    t = c.max_triangles
    return (g * (n - 1) + (g - 3) * t - c.outer_len) // (g - 2)


# -- level driver -----------------------------------------------------------

@dataclass(frozen=True)
class _Mode:
    closed_upto: int = 0
    lookahead: bool = False


def _expand_chunk(args) -> np.ndarray:
    codes, c, mode = args
    emax = [max_edges(c, k) for k in range(c.max_vertices + 1)] if mode.lookahead else None
    return _kernels.expand(codes, c.outer_len, c.max_vertices, c.max_triangles, c.forbid_four,
                           mode.closed_upto, mode.lookahead, emax)


def _chunks(arr: np.ndarray, parts: int) -> list[np.ndarray]:
    if parts <= 1 or len(arr) < 2 * parts:
        return [arr]
    return [a for a in np.array_split(arr, parts * 4) if len(a)]


class _Pool:
    """Thin wrapper: run in-process for one worker, else a process pool."""

    def __init__(self, workers: int):
        self.workers = max(1, int(workers))
        self._ex = ProcessPoolExecutor(self.workers) if self.workers > 1 else None

    def map(self, fn, items):
        if self._ex is None:
            return [fn(x) for x in items]
        return list(self._ex.map(fn, items))

    def close(self):
        if self._ex is not None:
            self._ex.shutdown()


def _ckpt_key(c: GenConstraints, mode: _Mode, task: str) -> str:
    return json.dumps({"constraints": c.to_dict(), "mode": asdict(mode), "task": task}, sort_keys=True)


def _save_checkpoint(path: Path, key: str, level: int, frontier: np.ndarray, state: dict) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        np.savez(fh, version=np.array(CHECKPOINT_VERSION), key=np.array(key),
                 level=np.array(level), frontier=frontier, state=np.array(json.dumps(state)))
    os.replace(tmp, path)


def _load_checkpoint(path: Path, key: str):
    if not path.exists():
        return None
    with np.load(path, allow_pickle=False) as z:
        if int(z["version"]) != CHECKPOINT_VERSION:
            raise ValueError(f"checkpoint {path} has version {int(z['version'])}, expected {CHECKPOINT_VERSION}")
        if str(z["key"]) != key:
            raise ValueError(f"checkpoint {path} belongs to a different run")
        return int(z["level"]), np.array(z["frontier"]), json.loads(str(z["state"]))


def run_levels(c: GenConstraints, consume: Callable[[np.ndarray, dict, "_Pool"], None], state: dict,
               mode: _Mode = _Mode(), workers: int = 1, checkpoint: str | Path | None = None,
               task: str = "") -> dict:
    """Feed every level of the generation tree to ``consume(codes, state, pool)``.

    With ``checkpoint`` the frontier and ``state`` (JSON-serialisable) are
    written after each level; an existing matching file resumes the run.
    """
    key = _ckpt_key(c, mode, task)
    path = Path(checkpoint) if checkpoint else None
    level = 0
    frontier = _kernels.cycle_code(c.outer_len, c.code_len)[None, :]
    loaded = _load_checkpoint(path, key) if path else None
    if loaded is not None:
        level, frontier, state = loaded
    pool = _Pool(workers)
    try:
        while len(frontier):
            consume(frontier, state, pool)
            nxt = pool.map(_expand_chunk, [(part, c, mode) for part in _chunks(frontier, pool.workers)])
            frontier = _kernels.unique_rows(np.concatenate(nxt)) if nxt else frontier[:0]
            level += 1
            if path:
                _save_checkpoint(path, key, level, frontier, state)
    finally:
        pool.close()
    return state


def _triangle_ok(codes: np.ndarray, c: GenConstraints) -> np.ndarray:
    tri = _kernels.triangle_counts(codes, c.max_vertices)
    if c.outer_len == 3:
        tri = tri - 1
    return tri >= c.min_triangles


def enumerate_codes(c: GenConstraints, workers: int = 1) -> np.ndarray:
    """All canonical codes of the family, sorted by vertex count then code."""
    parts: list[np.ndarray] = []

    def take(codes, state, pool):
        parts.append(codes[_triangle_ok(codes, c)])

    run_levels(c, take, {}, workers=workers)
    codes = np.concatenate(parts) if parts else np.zeros((0, c.code_len), dtype=np.int8)
    order = np.lexsort(tuple(codes[:, i] for i in range(codes.shape[1] - 1, -1, -1)))
    return codes[order]


def enumerate(c: GenConstraints, workers: int = 1) -> Iterator[PlaneGraph]:  # noqa: A001
    """Every graph of the family once up to rooted isomorphism, outer cycle
    numbered ``0..L-1``, ordered by vertex count and then canonical code."""
    for row in enumerate_codes(c, workers):
        yield from_code(row)


# -- critical graphs --------------------------------------------------------

def _critical_rows(codes: np.ndarray, L: int) -> list[bytes]:
    found = []
    for row in codes:
        g = from_code(row)
        if critical_fast(g.n, g.edges, tuple(range(L))):
            found.append(row.tobytes())
    return found


def _critical_chunk(args):
    codes, L = args
    return _critical_rows(codes, L)


@dataclass
class CriticalSearch:
    """Outcome of :func:`critical_search`."""

    constraints: GenConstraints
    graphs: list[PlaneGraph]
    closed_upto: int
    lookahead: bool
    certified_by: dict[int, int] = field(default_factory=dict)
    scanned: int = 0
    seconds: float = 0.0


def _search(c: GenConstraints, mode: _Mode, workers: int, checkpoint, task: str) -> tuple[list[bytes], int]:
    L = c.outer_len

    def take(codes, state, pool):
        codes = codes[_triangle_ok(codes, c)]
        if mode.lookahead and len(codes):
            codes = codes[_kernels.min_internal_degree(codes, L, c.max_vertices) >= 3]
        state["scanned"] += int(len(codes))
        if len(codes):
            codes = codes[_kernels.blocked_rows(codes, L, c.max_vertices)]
        hits = pool.map(_critical_chunk, [(part, L) for part in _chunks(codes, pool.workers)])
        for h in hits:
            state["found"].extend(x.hex() for x in h)

    state = run_levels(c, take, {"found": [], "scanned": 0}, mode, workers, checkpoint, task)
    return sorted(bytes.fromhex(x) for x in state["found"]), state["scanned"]


def _default_closed(c: GenConstraints) -> int:
    return 5 if (c.forbid_four or c.max_triangles == 0) else 4


def critical_search(c: GenConstraints, prune: bool = True, workers: int = 1,
                    checkpoint: str | Path | None = None) -> CriticalSearch:
    """All R-critical graphs of the family up to rooted isomorphism.

    Without ``prune`` every graph of the family is tested.  With it, two cuts
    are applied, both resting on standard facts about critical graphs
    (internal vertices have degree >= 3; for a non-facial cycle C the part
    drawn inside C is C-critical):

    * lookahead: drop graphs whose degree-2 internal vertices cannot all be
      saturated within the vertex and edge budget;
    * closed faces: for some K, faces of length <= K take no ears and no
      non-facial cycle of length <= K may appear.

    The second cut is only used once the same pruned search finds no
    critical graph for every outer length k = kmin..K.  A minimal critical
    graph missed by that search would contain a shorter critical graph
    inside one of its short cycles, so those empty results are exact, and no
    critical graph of any outer length has a non-facial cycle of length <= K.
    If no K certifies, only the lookahead is used.
    """
    t0 = time.perf_counter()
    certified: dict[int, int] = {}
    K = 0
    if prune:
        kmin = 3 if c.max_triangles >= 1 else 4
        for cand in range(_default_closed(c), kmin - 1, -1):
            base_ok = True
            base_counts = {}
            for k in range(kmin, cand + 1):
                ck = c.with_outer(k, min_triangles=0)
                rows, _ = _search(ck, _Mode(cand, True), workers, None, "base")
                base_counts[k] = len(rows)
                if rows:
                    base_ok = False
                    break
            if base_ok:
                K = cand
                certified = base_counts
                break
    mode = _Mode(K, prune)
    if prune and c.outer_len <= K:
        rows, scanned = [], 0
        # already searched while certifying
    else:
        task = f"critical:{c.outer_len}"
        rows, scanned = _search(c, mode, workers, checkpoint, task)
    graphs = [from_code(np.frombuffer(r, dtype=np.int8)) for r in rows]
    return CriticalSearch(c, graphs, K, prune, certified, scanned, time.perf_counter() - t0)


def find_critical(c: GenConstraints, prune: bool = True, workers: int = 1,
                  checkpoint: str | Path | None = None) -> list[PlaneGraph]:
    return critical_search(c, prune, workers, checkpoint).graphs
