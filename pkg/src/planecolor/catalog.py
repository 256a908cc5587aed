"""The two extremal graphs with a precoloured hexagon and one triangle,
plus shape checks for the known critical-graph characterisations.

Vertex numbering in both catalog graphs: ``r1..r6`` are ``0..5`` (clockwise,
so the outer walk is ``0, 1, ..., 5``) and ``t1, t2, t3`` are ``6, 7, 8``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .plane_graph import PlaneGraph, cycles_up_to, from_drawing


class PreconditionError(ValueError):
    pass


class GirthTooSmall(PreconditionError):
    pass


class OuterTooLong(PreconditionError):
    pass


NAMES_FIG1 = ("r1", "r2", "r3", "r4", "r5", "r6", "t1", "t2", "t3")


def _hexagon() -> list[tuple[float, float]]:
    # r1 at the top, then clockwise
    return [(math.sin(i * math.pi / 3), math.cos(i * math.pi / 3)) for i in range(6)]


def _hexagon_edges() -> list[tuple[int, int]]:
    return [(i, (i + 1) % 6) for i in range(6)]


def fig1a() -> PlaneGraph:
    """Hexagon r1..r6 with the chord r1r3."""
    return from_drawing(_hexagon(), _hexagon_edges() + [(0, 2)], range(6))


def fig1b() -> PlaneGraph:
    """Hexagon with a triangle t1t2t3 inside; spokes t1r1, t2r5, t3r3."""
    pts = _hexagon()
    for i in (0, 4, 2):
        x, y = pts[i]
        pts.append((0.45 * x, 0.45 * y))
    edges = _hexagon_edges() + [(6, 7), (7, 8), (8, 6), (6, 0), (7, 4), (8, 2)]
    return from_drawing(pts, edges, range(6))


def triangles(g: PlaneGraph):
    return [c for c in cycles_up_to(g, 3)]


def _non_outer_triangles(g: PlaneGraph):
    r = set(g.outer_cycle().edge_set())
    return [c for c in triangles(g) if not (g.outer_vertices() == set(c.vertices) and c.edge_set() <= r)]


# -- characterisation of critical graphs of girth five ------------------------

@dataclass(frozen=True)
class PlanecharCase:
    """Shape found by :func:`match_planechar`.

    ``case`` is ``"A"``, ``"B"``, ``"C"`` or None.  For A ``chord`` is the
    chord of C; for B ``inner`` holds the tree vertices; for C ``inner`` holds
    H - V(C) and ``cycle`` its unique (5-)cycle.
    """

    case: str | None
    chord: tuple[int, int] | None = None
    inner: tuple[int, ...] = ()
    cycle: tuple[int, ...] = ()
    bound: int | None = None
    notes: tuple[str, ...] = field(default=())


def girth(g: PlaneGraph, cap: int = 64) -> float:
    """Length of a shortest cycle (``inf`` for forests), by BFS from every vertex."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            for w in g.rotation[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best if best <= cap else math.inf


def _induced_components(g: PlaneGraph, verts: set[int]) -> list[set[int]]:
    comps = []
    seen: set[int] = set()
    for s in sorted(verts):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for w in g.rotation[v]:
                if w in verts and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def match_planechar(h: PlaneGraph) -> PlanecharCase:
    """Match ``h`` (girth >= 5, outer cycle C of length <= 11) against the
    three critical shapes A, B, C.  Degrees are taken in ``h``."""
    c = h.outer_cycle().vertices
    k = len(c)
    if k > 11:
        raise OuterTooLong(f"outer cycle has length {k} > 11")
    if girth(h) < 5:
        raise GirthTooSmall("graph has a cycle of length below five")
    on_c = set(c)
    inner = set(range(h.n)) - on_c
    cedges = h.outer_cycle().edge_set()
    if not inner:
        chords = sorted((u, v) for u, v in h.edges if frozenset((u, v)) not in cedges)
        if k >= 8 and chords:
            return PlanecharCase("A", chord=chords[0])
        return PlanecharCase(None)
    if any(h.degree(v) != 3 for v in inner):
        return PlanecharCase(None)
    comps = _induced_components(h, inner)
    if len(comps) != 1:
        return PlanecharCase(None)
    ni = len(inner)
    ei = sum(1 for u, v in h.edges if u in inner and v in inner)
    members = tuple(sorted(inner))
    if ei == ni - 1:
        if k >= 9 and ni <= k - 8:
            return PlanecharCase("B", inner=members, bound=k - 8)
        return PlanecharCase(None)
    if ei == ni and k >= 10 and ni <= k - 5:
        sub_cycles = [cy for cy in cycles_up_to(h, ni) if set(cy.vertices) <= inner]
        if len(sub_cycles) == 1 and sub_cycles[0].length == 5:
            return PlanecharCase("C", inner=members, cycle=sub_cycles[0].vertices, bound=k - 5)
    return PlanecharCase(None)


# -- face-length shapes ------------------------------------------------------

def check_planetr(g: PlaneGraph) -> bool:
    """Outer cycle of length 5, the triangle shares an edge with it, all other faces are 4-faces."""
    r = g.outer_cycle()
    if r.length > 5:
        raise PreconditionError(f"outer cycle has length {r.length} > 5")
    tris = _non_outer_triangles(g)
    if len(tris) > 1:
        raise PreconditionError("more than one triangle besides the outer cycle")
    if r.length != 5 or not tris:
        return False
    t = tris[0]
    if not (t.edge_set() & r.edge_set()):
        return False
    tface = g.face_containing_cycle(t.vertices)
    for i, f in enumerate(g.faces):
        if i == g.outer_face_id or i == tface:
            continue
        if f.length != 4:
            return False
    return tface is not None


def check_gimbel(g: PlaneGraph) -> bool:
    """All faces except the outer hexagon have length four."""
    r = g.outer_cycle()
    if r.length != 6:
        raise PreconditionError(f"outer cycle has length {r.length}, expected 6")
    if triangles(g):
        raise PreconditionError("graph has a triangle")
    return all(f.length == 4 for i, f in enumerate(g.faces) if i != g.outer_face_id)
