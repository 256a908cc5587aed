"""Backtracking 3-colouring with a precoloured outer cycle, and R-criticality."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import _kernels
from .plane_graph import PlaneGraph

COLORS = (1, 2, 3)


class DomainMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Precoloring:
    """Colours in {1, 2, 3} for some vertices (normally the outer cycle)."""

    assignment: Mapping[int, int]

    @classmethod
    def on_outer(cls, g: PlaneGraph, colors: Sequence[int]) -> "Precoloring":
        """Colour the outer walk in its listed order."""
        walk = g.outer_walk
        if len(colors) != len(walk):
            raise DomainMismatch(f"{len(colors)} colours for an outer cycle of length {len(walk)}")
        return cls(dict(zip(walk, (int(c) for c in colors))))

    def colors_on(self, vertices: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.assignment[v] for v in vertices)

    def permuted(self, perm: Mapping[int, int]) -> "Precoloring":
        return Precoloring({v: perm[c] for v, c in self.assignment.items()})

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.assignment.items())))


def _as_assignment(g: PlaneGraph, phi) -> dict[int, int]:
    if isinstance(phi, Precoloring):
        a = dict(phi.assignment)
    elif isinstance(phi, Mapping):
        a = dict(phi)
    else:
        a = dict(Precoloring.on_outer(g, phi).assignment)
    for v, c in a.items():
        if not (0 <= v < g.n):
            raise DomainMismatch(f"vertex {v} is not in the graph")
        if c not in COLORS:
            raise DomainMismatch(f"colour {c} on vertex {v} is not in 1..3")
    return a


def _search(adj: Sequence[Sequence[int]], n: int, col: list[int]):
    """Yield proper completions of ``col`` (0 = uncoloured), MRV with lowest-id ties."""
    free = [v for v in range(n) if col[v] == 0]
    if not free:
        yield list(col)
        return
    best = None
    best_opts = None
    for v in free:
        used = {col[w] for w in adj[v]}
        opts = [c for c in COLORS if c not in used]
        if best_opts is None or len(opts) < len(best_opts):
            best, best_opts = v, opts
            if not opts:
                return
    for c in best_opts:
        col[best] = c
        yield from _search(adj, n, col)
    col[best] = 0


def _start(g: PlaneGraph, phi) -> list[int] | None:
    a = _as_assignment(g, phi)
    col = [0] * g.n
    for v, c in a.items():
        col[v] = c
    for v, c in a.items():
        if any(col[w] == c for w in g.rotation[v]):
            return None
    return col


def extend(g: PlaneGraph, phi) -> dict[int, int] | None:
    """A proper 3-colouring of ``g`` agreeing with ``phi``, or None.

    ``phi`` may be a :class:`Precoloring`, a ``{vertex: colour}`` map, or a
    colour sequence for the outer walk.
    """
    col = _start(g, phi)
    if col is None:
        return None
    for full in _search(g.rotation, g.n, col):
        return dict(enumerate(full))
    return None


def count_extensions(g: PlaneGraph, phi=None) -> int:
    col = _start(g, phi or {})
    if col is None:
        return 0
    return sum(1 for _ in _search(g.rotation, g.n, col))


def proper_precolorings(g: PlaneGraph) -> Iterator[Precoloring]:
    """Proper colourings of the outer cycle (as a cycle; chords ignored), lexicographic."""
    r = g.outer_cycle().vertices
    k = len(r)
    for cols in product(COLORS, repeat=k):
        if all(cols[i] != cols[(i + 1) % k] for i in range(k)):
            yield Precoloring(dict(zip(r, cols)))


def assignment_index(colors: Sequence[int]) -> int:
    """Position of a colour tuple in the base-3 order used by masks."""
    idx = 0
    for c in colors:
        idx = idx * 3 + (c - 1)
    return idx


def assignment_from_index(idx: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(idx % 3 + 1)
        idx //= 3
    return tuple(reversed(out))


def cycle_proper_mask(k: int) -> np.ndarray:
    """Boolean mask of assignments proper on the k-cycle."""
    digits = np.array([assignment_from_index(i, k) for i in range(3 ** k)])
    return np.all(digits != np.roll(digits, -1, axis=1), axis=1)


def _adjacency_matrix(n: int, edges) -> np.ndarray:
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in edges:
        adj[u, v] = adj[v, u] = 1
    return adj


def _bfs_order(n: int, adj: np.ndarray, roots: Sequence[int]) -> list[int]:
    seen = set(roots)
    order = []
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for w in np.flatnonzero(adj[v]):
                w = int(w)
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    order.extend(v for v in range(n) if v not in seen)
    return order


def mask_for_edges(n: int, edges, rverts: Sequence[int], backend: str | None = None) -> np.ndarray:
    adj = _adjacency_matrix(n, edges)
    return _kernels.extension_mask(adj, rverts, _bfs_order(n, adj, rverts), backend)


def extendable_mask(g: PlaneGraph, backend: str | None = None) -> np.ndarray:
    """uint8 array over all 3^|R| colourings of the outer walk (base-3 index,
    first outer vertex most significant): 1 iff it extends to ``g``."""
    return mask_for_edges(g.n, g.edges, g.outer_cycle().vertices, backend)


# -- criticality -------------------------------------------------------------

@dataclass
class CriticalityReport:
    """``witnesses`` maps each maximal proper subgraph, named ``("edge", u, v)``
    or ``("vertex", v)``, to an outer colouring that extends to it but not to G
    (None when there is no such colouring)."""

    is_critical: bool
    witnesses: dict[tuple, tuple[int, ...] | None] = field(default_factory=dict)
    reason: str = ""


def _maximal_subgraphs(g: PlaneGraph):
    r_edges = g.outer_cycle().edge_set()
    for u, v in g.edges:
        if frozenset((u, v)) not in r_edges:
            yield ("edge", u, v), [e for e in g.edges if e != (u, v)], g.n
    # an isolated vertex off R can only occur in a graph that is not connected
    for v in g.internal_vertices():
        if g.degree(v) == 0:  # pragma: no cover - built graphs are connected
            yield ("vertex", v), g.edges, g.n


def is_R_critical(g: PlaneGraph, verify: bool = True, stop_early: bool = False) -> CriticalityReport:
    """Test R-criticality of ``g`` for its outer cycle R.

    Only maximal proper subgraphs containing R need a witness: a colouring
    that extends to a subgraph also extends to every smaller one.
    """
    r = g.outer_cycle().vertices
    k = len(r)
    if g.n == k and g.num_edges == k:
        return CriticalityReport(False, {}, "G equals R")
    proper = cycle_proper_mask_cached(k)
    full = extendable_mask(g).astype(bool)
    witnesses: dict[tuple, tuple[int, ...] | None] = {}
    ok = True
    for name, edges, n in _maximal_subgraphs(g):
        sub = mask_for_edges(n, edges, r).astype(bool)
        hits = np.flatnonzero(sub & ~full & proper)
        if hits.size:
            witnesses[name] = assignment_from_index(int(hits[0]), k)
        else:
            witnesses[name] = None
            ok = False
            if stop_early:
                break
    report = CriticalityReport(ok, witnesses, "" if ok else "some subgraph has no witness")
    if verify:
        for name, phi in witnesses.items():
            if phi is None:
                continue
            sub = _subgraph(g, name)
            pre = dict(zip(r, phi))
            if extend(g, pre) is not None or _extend_abstract(sub, g.n, pre) is None:
                raise AssertionError(f"witness {phi} for {name} failed re-verification")
    return report


def _subgraph(g: PlaneGraph, name) -> list[list[int]]:
    adj = [list(x) for x in g.rotation]
    if name[0] == "edge":
        _, u, v = name
        adj[u].remove(v)
        adj[v].remove(u)
    return adj


def _extend_abstract(adj, n: int, pre: Mapping[int, int]) -> dict[int, int] | None:
    col = [0] * n
    for v, c in pre.items():
        col[v] = c
    for v, c in pre.items():
        if any(col[w] == c for w in adj[v]):
            return None
    for full in _search(adj, n, col):
        return dict(enumerate(full))
    return None


def critical_fast(n: int, edges, rverts: Sequence[int]) -> bool:
    """Mask-only criticality test used by the searches (no witnesses)."""
    k = len(rverts)
    if n == k and len(edges) == k:
        return False
    proper = cycle_proper_mask_cached(k)
    full = mask_for_edges(n, edges, rverts).astype(bool)
    bad = proper & ~full
    if not bad.any():
        return False
    r_edges = {frozenset((rverts[i], rverts[(i + 1) % k])) for i in range(k)}
    for e in edges:
        if frozenset(e) in r_edges:
            continue
        sub = mask_for_edges(n, [f for f in edges if f != e], rverts).astype(bool)
        if not (sub & bad).any():
            return False
    return True


_PROPER_CACHE: dict[int, np.ndarray] = {}


def cycle_proper_mask_cached(k: int) -> np.ndarray:
    if k not in _PROPER_CACHE:
        _PROPER_CACHE[k] = cycle_proper_mask(k)
    return _PROPER_CACHE[k]
