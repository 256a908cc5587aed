"""Combinatorial plane graphs given by rotation systems.

Vertices are ``0..n-1``.  ``rotation[v]`` lists the neighbours of ``v`` in
clockwise order.  A face is traced by the rule: after the directed edge
``u -> v`` comes ``v -> w`` where ``w`` follows ``u`` in ``rotation[v]``.
With clockwise rotations this traces bounded faces counter-clockwise, so the
outer face of a drawing with a clockwise-numbered outer cycle ``r1..rk`` is
the walk ``r1, r2, ..., rk``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class PlaneGraphError(ValueError):
    """Base class for invalid plane-graph input."""


class NonSimple(PlaneGraphError):
    pass


class Disconnected(PlaneGraphError):
    pass


class NonPlanarRotation(PlaneGraphError):
    pass


class OuterFaceNotFound(PlaneGraphError):
    pass


class OuterNotCycle(PlaneGraphError):
    pass


class CycleNotFound(PlaneGraphError):
    pass


@dataclass(frozen=True)
class FacialWalk:
    """Closed walk bounding a face; ``vertices[i] -> vertices[i+1]`` are its directed edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def directed_edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_cycle(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices) and len(self.vertices) >= 3


@dataclass(frozen=True)
class CycleRef:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges())


class PlaneGraph:
    """Immutable connected plane graph with a distinguished outer face.

    ``labels`` carries the names of the vertices in a parent graph (identity
    unless the graph was cut out of a bigger one).
    """

    __slots__ = ("rotation", "outer_face_id", "labels", "__dict__")

    def __init__(self, rotation: Sequence[Sequence[int]], outer_face_id: int = 0,
                 labels: Sequence[int] | None = None):
        self.rotation: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rotation)
        self.outer_face_id = outer_face_id
        self.labels: tuple[int, ...] = tuple(labels) if labels is not None else tuple(range(len(self.rotation)))

    # -- basic structure -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rotation)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.rotation[u]) if u < v)

    @cached_property
    def _position(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(r)} for r in self.rotation)

    def next_edge(self, u: int, v: int) -> tuple[int, int]:
        rv = self.rotation[v]
        return v, rv[(self._position[v][u] + 1) % len(rv)]

    # -- faces -----------------------------------------------------------
    @cached_property
    def faces(self) -> tuple[FacialWalk, ...]:
        seen: set[tuple[int, int]] = set()
        out = []
        for u in range(self.n):
            for v in sorted(self.rotation[u]):
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = self.next_edge(a, b)
                out.append(FacialWalk(tuple(walk)))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> dict[tuple[int, int], int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.directed_edges()}

    @property
    def outer_face(self) -> FacialWalk:
        return self.faces[self.outer_face_id]

    @property
    def outer_walk(self) -> tuple[int, ...]:
        return self.outer_face.vertices

    def outer_cycle(self) -> CycleRef:
        walk = self.outer_walk
        if not self.outer_face.is_cycle():
            raise OuterNotCycle(f"outer face walk {walk} is not a simple cycle")
        return CycleRef(walk)

    def outer_vertices(self) -> frozenset[int]:
        return frozenset(self.outer_walk)

    def internal_vertices(self) -> list[int]:
        r = self.outer_vertices()
        return [v for v in range(self.n) if v not in r]

    def face_containing_cycle(self, cycle: Sequence[int]) -> int | None:
        """Id of a face whose boundary walk is exactly ``cycle`` (either direction), if any."""
        key = _cyclic_key(cycle)
        for i, f in enumerate(self.faces):
            if f.length == len(cycle) and _cyclic_key(f.vertices) == key:
                return i
        return None

    def is_facial(self, cycle: Sequence[int]) -> bool:
        return self.face_containing_cycle(cycle) is not None

    def is_simple_cycle(self, cycle: Sequence[int]) -> bool:
        k = len(cycle)
        if k < 3 or len(set(cycle)) != k:
            return False
        if any(not (0 <= v < self.n) for v in cycle):
            return False
        return all(self.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))

    # -- derived graphs ---------------------------------------------------
    def mirror(self) -> "PlaneGraph":
        """Reflection: every rotation reversed, outer face kept."""
        rot = [tuple(reversed(r)) for r in self.rotation]
        outer = tuple(reversed(self.outer_walk))
        return _with_outer(rot, outer, self.labels)

    def relabel(self, perm: Sequence[int]) -> "PlaneGraph":
        """New graph where old vertex ``v`` becomes ``perm[v]``."""
        n = self.n
        rot: list[tuple[int, ...]] = [()] * n
        labels = [0] * n
        for v in range(n):
            rot[perm[v]] = tuple(perm[w] for w in self.rotation[v])
            labels[perm[v]] = self.labels[v]
        outer = tuple(perm[v] for v in self.outer_walk)
        return _with_outer(rot, outer, labels)

    def with_outer_face(self, face_id: int) -> "PlaneGraph":
        return PlaneGraph(self.rotation, face_id, self.labels)

    def delete_edge(self, u: int, v: int) -> "PlaneGraph":
        """Drop edge ``uv`` keeping vertex ids; outer face must survive as a walk."""
        rot = [tuple(w for w in r if not ((x == u and w == v) or (x == v and w == u)))
               for x, r in enumerate(self.rotation)]
        return _with_outer(rot, self.outer_walk, self.labels)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PlaneGraph) and self.rotation == other.rotation
                and self.outer_face_id == other.outer_face_id)

    def __hash__(self) -> int:
        return hash((self.rotation, self.outer_face_id))

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.num_edges}, outer={self.outer_walk})"


def _cyclic_key(seq: Sequence[int]) -> tuple[int, ...]:
    """Smallest rotation of ``seq`` or its reverse."""
    seq = tuple(seq)
    best = None
    for s in (seq, tuple(reversed(seq))):
        for i in range(len(s)):
            cand = s[i:] + s[:i]
            if best is None or cand < best:
                best = cand
    return best


def _match_walk(faces: Sequence[FacialWalk], walk: Sequence[int]) -> int | None:
    walk = tuple(walk)
    k = len(walk)
    for want in (walk, tuple(reversed(walk))):
        for i, f in enumerate(faces):
            if f.length != k:
                continue
            vs = f.vertices
            for s in range(k):
                if vs[s:] + vs[:s] == want:
                    return i
    return None


def _with_outer(rotation, outer_walk, labels=None) -> PlaneGraph:
    g = PlaneGraph(rotation, 0, labels)
    fid = _match_walk(g.faces, outer_walk)
    if fid is None:
        raise OuterFaceNotFound(f"no face with boundary {tuple(outer_walk)}")
    return PlaneGraph(rotation, fid, labels)


# -- construction and validation ---------------------------------------------

def build(rotation: Sequence[Sequence[int]], outer: Sequence[int],
          labels: Sequence[int] | None = None) -> PlaneGraph:
    """Validate a rotation system and designate its outer face.

    ``outer`` is matched against the facial walks cyclically, in the given
    direction first and reversed otherwise.
    """
    n = len(rotation)
    if n == 0:
        raise NonSimple("empty graph")
    rot = [tuple(int(w) for w in r) for r in rotation]
    for v, r in enumerate(rot):
        if len(set(r)) != len(r):
            raise NonSimple(f"vertex {v} lists a neighbour twice")
        for w in r:
            if w == v:
                raise NonSimple(f"loop at vertex {v}")
            if not (0 <= w < n):
                raise NonSimple(f"vertex {v} has unknown neighbour {w}")
            if v not in rot[w]:
                raise NonSimple(f"edge {v}-{w} is not symmetric")
    if _components(rot) != 1:
        raise Disconnected("graph is not connected")
    g = PlaneGraph(rot, 0, labels)
    m = g.num_edges
    f = len(g.faces)
    if n - m + f != 2:
        raise NonPlanarRotation(f"V - E + F = {n} - {m} + {f} != 2")
    fid = _match_walk(g.faces, outer)
    if fid is None:
        raise OuterFaceNotFound(f"no face with boundary {tuple(outer)}")
    return PlaneGraph(rot, fid, labels)


def _components(rot: Sequence[Sequence[int]]) -> int:
    seen = [False] * len(rot)
    count = 0
    for s in range(len(rot)):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in rot[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def cycle_graph(k: int) -> PlaneGraph:
    """The k-cycle 0..k-1 with outer walk 0, 1, ..., k-1."""
    rot = [((i + 1) % k, (i - 1) % k) for i in range(k)]
    return build(rot, list(range(k)))


# -- cycles, distances, disks -------------------------------------------------

def cycles_up_to(g: PlaneGraph, max_len: int) -> list[CycleRef]:
    """All simple cycles of length at most ``max_len``, each once.

    A cycle is reported starting at its smallest vertex, in the direction
    whose second vertex is smaller than its last.
    """
    out: list[CycleRef] = []
    adj = g.rotation
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def dfs(v: int) -> None:
            for w in sorted(adj[v]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(CycleRef(tuple(path)))
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    out.sort(key=lambda c: (c.length, c.vertices))
    return out


def subgraph_distance(g: PlaneGraph, xs: Iterable[int], ys: Iterable[int]) -> float:
    """Length of a shortest path from ``xs`` to ``ys`` (``inf`` if none)."""
    targets = set(ys)
    dist = {x: 0 for x in xs}
    queue = deque(dist)
    while queue:
        v = queue.popleft()
        if v in targets:
            return dist[v]
        for w in g.rotation[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return float("inf")


def disk_faces(g: PlaneGraph, cycle: Sequence[int]) -> frozenset[int]:
    """Ids of the faces inside the closed disk bounded by ``cycle``.

    The disk is the side of the cycle not containing the outer face.
    """
    if not g.is_simple_cycle(cycle):
        raise CycleNotFound(f"{tuple(cycle)} is not a cycle of the graph")
    k = len(cycle)
    fwd = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    cyc_edges = {frozenset(e) for e in fwd}
    dof = g.face_of_dart
    sides = []
    for darts in (fwd, [(b, a) for a, b in fwd]):
        side = {dof[d] for d in darts}
        stack = list(side)
        while stack:
            fid = stack.pop()
            for a, b in g.faces[fid].directed_edges():
                if frozenset((a, b)) in cyc_edges:
                    continue
                other = dof[(b, a)]
                if other not in side:
                    side.add(other)
                    stack.append(other)
        sides.append(side)
    inside = sides[1] if g.outer_face_id in sides[0] else sides[0]
    return frozenset(inside)


def interior_subgraph(g: PlaneGraph, cycle: Sequence[int]) -> PlaneGraph:
    """ins(C): everything drawn in the closed disk bounded by ``cycle``.

    The result has ``cycle`` as its outer face and ``labels`` mapping its
    vertices back to names in ``g``.
    """
    inside = disk_faces(g, cycle)
    keep_edges: set[frozenset[int]] = set()
    for fid in inside:
        for a, b in g.faces[fid].directed_edges():
            keep_edges.add(frozenset((a, b)))
    verts = sorted({v for e in keep_edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    rot = [tuple(index[w] for w in g.rotation[v] if frozenset((v, w)) in keep_edges) for v in verts]
    labels = [g.labels[v] for v in verts]
    sub = PlaneGraph(rot, 0, labels)
    # exterior darts of the cycle all lie on one face of the subgraph
    k = len(cycle)
    fwd = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    inside_darts = {d for fid in inside for d in g.faces[fid].directed_edges()}
    ext = [(b, a) for a, b in fwd] if fwd[0] in inside_darts else fwd
    a, b = ext[0]
    return PlaneGraph(rot, sub.face_of_dart[(index[a], index[b])], labels)


# -- rooted canonical code ----------------------------------------------------

def _bfs_code(g: PlaneGraph, s: int, t: int, mirror: bool) -> list[int]:
    lab = {s: 0}
    order = [s]
    first = {s: t}
    code = []
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        r = g.rotation[v]
        d = len(r)
        p = g._position[v][first[v]]
        for j in range(d):
            w = r[(p - j) % d] if mirror else r[(p + j) % d]
            if w not in lab:
                lab[w] = len(order)
                order.append(w)
                first[w] = v
            code.append(lab[w])
        code.append(-1)
    return code


def rooted_code(g: PlaneGraph) -> tuple[int, ...]:
    """Canonical code of ``g`` up to isomorphisms mapping the outer face to itself.

    Minimum over the outer darts, read clockwise and mirrored, of a
    breadth-first encoding of the rotation system.  Requires a simple outer
    cycle.
    """
    r = g.outer_cycle().vertices
    k = len(r)
    best = None
    for i in range(k):
        a, b = r[i], r[(i + 1) % k]
        for s, t, mirror in ((a, b, False), (b, a, True)):
            code = _bfs_code(g, s, t, mirror)
            if best is None or code < best:
                best = code
    return (g.n, *best)


def from_code(code: Sequence[int]) -> PlaneGraph:
    """Inverse of :func:`rooted_code`, renumbered so the outer cycle is ``0..L-1``.

    Trailing padding (values below -1) is ignored.
    """
    n = int(code[0])
    rot: list[list[int]] = [[] for _ in range(n)]
    v = 0
    for x in code[1:]:
        x = int(x)
        if v >= n or x < -1:
            break
        if x == -1:
            v += 1
        else:
            rot[v].append(x)
    g = PlaneGraph(rot, 0)
    fid = g.face_of_dart[(0, 1)]
    outer = g.faces[fid].vertices
    # dart (0,1) starts the outer walk at vertex 0
    s = outer.index(0)
    outer = outer[s:] + outer[:s]
    perm = [-1] * n
    for i, v in enumerate(outer):
        perm[v] = i
    nxt = len(outer)
    for v in range(n):
        if perm[v] < 0:
            perm[v] = nxt
            nxt += 1
    h = PlaneGraph(rot, fid).relabel(perm)
    return PlaneGraph(h.rotation, h.outer_face_id)


def rooted_isomorphic(g: PlaneGraph, h: PlaneGraph) -> bool:
    return rooted_code(g) == rooted_code(h)


def canonical_form(g: PlaneGraph) -> PlaneGraph:
    return from_code(rooted_code(g))


def from_drawing(points: Sequence[tuple[float, float]], edges: Iterable[tuple[int, int]],
                 outer: Sequence[int]) -> PlaneGraph:
    """Build from a straight-line drawing (y axis pointing up).

    Rotations are read off the drawing clockwise; handy for writing small
    examples by hand.
    """
    import math

    n = len(points)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = []
    for v in range(n):
        x0, y0 = points[v]
        rot.append(sorted(nbrs[v], key=lambda w: -math.atan2(points[w][1] - y0, points[w][0] - x0)))
    return build(rot, outer)
