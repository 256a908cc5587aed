"""Charge bookkeeping on a plane graph with an outer hexagon R and a facial triangle T.

Initial charges: a face f gets |f| - 4, except T (2) and R (0).  A vertex of
R gets -1/3 if it has degree 2 and 0 if degree 3; every other vertex gets
deg - 4.  Euler's formula makes the total n3 + 5*n2/3 - 7, where n2 and n3
count the vertices of R of degree 2 and 3.

Redistribution: every face other than R sends 1/3 to each incident vertex of
degree 2 and each incident internal vertex of degree 3; T also sends 1/3 to
each face sharing an edge with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .plane_graph import PlaneGraph

THIRD = Fraction(1, 3)


class NoDesignatedTriangleFace(ValueError):
    pass


class OuterLenNot6(ValueError):
    pass


@dataclass(frozen=True)
class ChargeLedger:
    initial_faces: dict[int, Fraction]
    initial_vertices: dict[int, Fraction]
    final_faces: dict[int, Fraction]
    final_vertices: dict[int, Fraction]
    t_face: int
    n2: int
    n3: int

    @property
    def total_initial(self) -> Fraction:
        return sum(self.initial_faces.values(), Fraction(0)) + sum(self.initial_vertices.values(), Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.final_faces.values(), Fraction(0)) + sum(self.final_vertices.values(), Fraction(0))

    @property
    def identity_value(self) -> Fraction:
        return self.n3 + Fraction(5 * self.n2, 3) - 7

    def denominators_ok(self) -> bool:
        vals = [*self.initial_faces.values(), *self.initial_vertices.values(),
                *self.final_faces.values(), *self.final_vertices.values()]
        return all(3 % q.denominator == 0 for q in vals)

    @property
    def ok(self) -> bool:
        return (self.total_initial == self.identity_value and self.total_final == self.total_initial
                and self.denominators_ok())


def euler_excess(g: PlaneGraph) -> int:
    """sum over faces of (|f| - 4) plus sum over vertices of (deg - 4); -8 on the sphere."""
    return sum(f.length - 4 for f in g.faces) + sum(g.degree(v) - 4 for v in range(g.n))


def _triangle_face(g: PlaneGraph, t: Sequence[int] | None) -> int:
    if t is not None:
        fid = g.face_containing_cycle(tuple(t))
        if fid is None or fid == g.outer_face_id or len(t) != 3:
            raise NoDesignatedTriangleFace(f"{tuple(t)} does not bound an inner triangular face")
        return fid
    for i, f in enumerate(g.faces):
        if i != g.outer_face_id and f.length == 3 and f.is_cycle():
            return i
    raise NoDesignatedTriangleFace("no inner face is a triangle")


def discharge(g: PlaneGraph, t: Sequence[int] | None = None) -> ChargeLedger:
    """Charges before and after redistribution, in exact arithmetic.

    ``t`` names the triangle; by default the first triangular inner face.
    """
    r = g.outer_cycle()
    if r.length != 6:
        raise OuterLenNot6(f"outer cycle has length {r.length}")
    tf = _triangle_face(g, t)
    rset = g.outer_vertices()
    of = g.outer_face_id

    faces0: dict[int, Fraction] = {}
    for i, f in enumerate(g.faces):
        if i == of:
            faces0[i] = Fraction(0)
        elif i == tf:
            faces0[i] = Fraction(2)
        else:
            faces0[i] = Fraction(f.length - 4)
    verts0: dict[int, Fraction] = {}
    n2 = n3 = 0
    for v in range(g.n):
        d = g.degree(v)
        if v in rset and d == 2:
            verts0[v] = -THIRD
            n2 += 1
        elif v in rset and d == 3:
            verts0[v] = Fraction(0)
            n3 += 1
        else:
            verts0[v] = Fraction(d - 4)

    faces1 = dict(faces0)
    verts1 = dict(verts0)
    for i, f in enumerate(g.faces):
        if i == of:
            continue
        for v in set(f.vertices):
            d = g.degree(v)
            if d == 2 or (d == 3 and v not in rset):
                faces1[i] -= THIRD
                verts1[v] += THIRD
    dof = g.face_of_dart
    neighbours = {dof[(b, a)] for a, b in g.faces[tf].directed_edges()} - {tf}
    for j in sorted(neighbours):
        faces1[tf] -= THIRD
        faces1[j] += THIRD
    return ChargeLedger(faces0, verts0, faces1, verts1, tf, n2, n3)
