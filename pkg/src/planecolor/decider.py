"""Fast extension decision for plane graphs with one triangle.

A graph is *in class* when its outer face is a cycle R of length at most 6,
it has at most one triangle T besides R, and every other cycle besides T and
R has length at least 5.  For such graphs a 3-colouring phi of R fails to
extend exactly when |R| = 6 and

(a) two adjacent vertices of R get the same colour, or
(b) T is disjoint from R and three vertices of R of one colour x are joined
    to the three vertices of T by three disjoint edges.

An improper phi is always reported through (a), whatever |R| is.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Mapping, Sequence

from .coloring import COLORS, DomainMismatch, Precoloring
from .plane_graph import CycleRef, PlaneGraph, cycles_up_to, disk_faces, rooted_code


class NotInClass(ValueError):
    pass


class IncompletePrecoloring(ValueError):
    pass


@dataclass(frozen=True)
class ClassReport:
    outer_len: int
    triangles: tuple[CycleRef, ...]
    short_cycles: tuple[CycleRef, ...]
    in_class: bool
    T: CycleRef | None

    @property
    def in_class_1_6(self) -> bool:
        return self.in_class


@lru_cache(maxsize=8192)
def validate_class(g: PlaneGraph) -> ClassReport:
    """Class membership.  ``triangles`` and ``short_cycles`` (the 4-cycles)
    never include R itself."""
    r = g.outer_cycle()
    rset = frozenset(r.vertices)
    others = [c for c in cycles_up_to(g, 4) if not (c.length == r.length and frozenset(c.vertices) == rset)]
    tris = tuple(c for c in others if c.length == 3)
    fours = tuple(c for c in others if c.length == 4)
    ok = r.length <= 6 and len(tris) <= 1 and not fours
    return ClassReport(r.length, tris, fours, ok, tris[0] if len(tris) == 1 else None)


def condition_star(g: PlaneGraph) -> int | None:
    """A face lying in the closed disk of every cycle of length <= 4 (R
    included when short), lowest id first; None if there is none."""
    common = set(range(len(g.faces)))
    for c in cycles_up_to(g, 4):
        common &= disk_faces(g, c.vertices)
        if not common:
            return None
    return min(common)


@dataclass(frozen=True)
class ExtensionDecision:
    """``variant`` is ``"Extends"``, ``"FailsA"`` or ``"FailsB"``.

    FailsA carries ``edge``; FailsB carries ``color``, ``us`` (in R order) and
    ``ts`` with ``us[i]`` adjacent to ``ts[i]``.  ``body_b`` records whether
    the weaker reading of (b), which does not ask T to avoid R, holds; it is
    only evaluated when (a) does not.
    """

    variant: str
    edge: tuple[int, int] | None = None
    color: int | None = None
    us: tuple[int, ...] = ()
    ts: tuple[int, ...] = ()
    body_b: bool = False

    @property
    def extends(self) -> bool:
        return self.variant == "Extends"

    def witness_line(self, names: Sequence[str] | None = None) -> str:
        def nm(v: int) -> str:
            return names[v] if names is not None else str(v + 1)

        if self.variant == "FailsA":
            u, v = self.edge
            return f"FailsA edge={nm(u)},{nm(v)}"
        if self.variant == "FailsB":
            return (f"FailsB color={self.color} u={','.join(map(nm, self.us))} "
                    f"t={','.join(map(nm, self.ts))}")
        return "Extends"


@dataclass(frozen=True)
class _Prep:
    rverts: tuple[int, ...]
    r_pairs: tuple[tuple[int, int], ...]
    tverts: tuple[int, ...]
    t_disjoint: bool
    t_nbrs: tuple[frozenset[int], ...]


@lru_cache(maxsize=8192)
def _prepare(g: PlaneGraph) -> _Prep:
    rv = g.outer_walk
    k = len(rv)
    pairs = tuple((rv[i], rv[j]) for i in range(k) for j in range(i + 1, k) if g.has_edge(rv[i], rv[j]))
    rep = validate_class(g)
    tv: tuple[int, ...] = tuple(sorted(rep.T.vertices)) if rep.T else ()
    rset = set(rv)
    return _Prep(rv, pairs, tv, not (set(tv) & rset),
                 tuple(frozenset(w for w in g.rotation[t] if w in rset) for t in tv))


def _colors(g: PlaneGraph, rverts: Sequence[int], phi) -> tuple[int, ...]:
    if isinstance(phi, Precoloring):
        phi = phi.assignment
    if isinstance(phi, Mapping):
        missing = [v for v in rverts if v not in phi]
        if missing:
            raise IncompletePrecoloring(f"outer vertices {missing} are uncoloured")
        cols = tuple(int(phi[v]) for v in rverts)
    else:
        cols = tuple(int(c) for c in phi)
        if len(cols) != len(rverts):
            raise IncompletePrecoloring(f"{len(cols)} colours for {len(rverts)} outer vertices")
    if any(c not in COLORS for c in cols):
        raise DomainMismatch(f"colours must lie in 1..3, got {cols}")
    return cols


def _match_b(prep: _Prep, col: Mapping[int, int]):
    """First (x, us, ts) with us monochromatic and matched to T, or None."""
    for x in COLORS:
        xs = [v for v in prep.rverts if col[v] == x]
        for us in combinations(xs, 3):
            for perm in permutations(range(3)):
                if all(us[i] in prep.t_nbrs[perm[i]] for i in range(3)):
                    return x, us, tuple(prep.tverts[p] for p in perm)
    return None


def decide_extension(g: PlaneGraph, phi) -> ExtensionDecision:
    """Decide whether ``phi`` (colours of the outer walk, in order, or a map
    over its vertices) extends to a 3-colouring of ``g``."""
    if not validate_class(g).in_class:
        raise NotInClass("graph is outside the one-triangle class")
    prep = _prepare(g)
    cols = _colors(g, prep.rverts, phi)
    col = dict(zip(prep.rverts, cols))
    for u, v in prep.r_pairs:
        if col[u] == col[v]:
            return ExtensionDecision("FailsA", edge=(u, v))
    if len(prep.rverts) < 6 or len(prep.tverts) != 3:
        return ExtensionDecision("Extends")
    hit = _match_b(prep, col)
    if hit is None or not prep.t_disjoint:
        return ExtensionDecision("Extends", body_b=hit is not None)
    x, us, ts = hit
    return ExtensionDecision("FailsB", color=x, us=us, ts=ts, body_b=True)


def check_witness(g: PlaneGraph, phi, d: ExtensionDecision) -> bool:
    """Re-verify the certificate carried by a failing decision."""
    prep = _prepare(g)
    col = dict(zip(prep.rverts, _colors(g, prep.rverts, phi)))
    if d.variant == "FailsA":
        u, v = d.edge
        return u != v and u in col and v in col and g.has_edge(u, v) and col[u] == col[v]
    if d.variant == "FailsB":
        return (len(set(d.us)) == 3 and len(set(d.ts)) == 3 and set(d.ts) == set(prep.tverts)
                and all(col[u] == d.color for u in d.us)
                and all(g.has_edge(u, t) for u, t in zip(d.us, d.ts)))
    return True


# -- classification of critical graphs ----------------------------------------

@lru_cache(maxsize=1)
def _catalog_codes() -> dict[tuple[int, ...], str]:
    from .catalog import fig1a, fig1b

    return {rooted_code(fig1a()): "Fig1a", rooted_code(fig1b()): "Fig1b"}


def classify_critical(g: PlaneGraph) -> str:
    """``"Fig1a"``, ``"Fig1b"`` or ``"Other"``, up to isomorphisms fixing the outer face."""
    if not g.outer_face.is_cycle():
        return "Other"
    return _catalog_codes().get(rooted_code(g), "Other")
