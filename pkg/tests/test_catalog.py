import math

import pytest

from planecolor.catalog import (
    NAMES_FIG1,
    GirthTooSmall,
    OuterTooLong,
    PreconditionError,
    check_gimbel,
    check_planetr,
    fig1a,
    fig1b,
    girth,
    match_planechar,
)
from planecolor.coloring import is_R_critical
from planecolor.plane_graph import cycle_graph, from_drawing


def polygon(k, r=1.0, phase=0.0):
    return [(r * math.sin(2 * math.pi * i / k + phase), r * math.cos(2 * math.pi * i / k + phase)) for i in range(k)]


def ring(k, start=0):
    return [(start + i, start + (i + 1) % k) for i in range(k)]


def with_hub(k, spokes):
    """k-gon plus one central vertex joined to ``spokes``."""
    pts = polygon(k) + [(0.0, 0.0)]
    return from_drawing(pts, ring(k) + [(k, s) for s in spokes], range(k))


def test_fig1_shapes(g1a, g1b):
    assert g1a.n == 6 and g1a.num_edges == 7 and g1a.outer_walk == tuple(range(6))
    assert g1b.n == 9 and g1b.num_edges == 12 and g1b.outer_walk == tuple(range(6))
    assert sorted(f.length for f in g1b.faces) == [3, 5, 5, 5, 6]
    assert sorted(f.length for f in g1a.faces) == [3, 5, 6]
    assert len(NAMES_FIG1) == 9
    assert is_R_critical(g1a).is_critical and is_R_critical(g1b).is_critical


def test_girth():
    assert girth(cycle_graph(7)) == 7
    assert girth(fig1b()) == 3
    assert girth(with_hub(6, (0, 2, 4))) == 4


def test_planechar_chord():
    h = from_drawing(polygon(9), ring(9) + [(0, 4)], range(9))
    m = match_planechar(h)
    assert m.case == "A" and m.chord == (0, 4)


def test_planechar_tree():
    m = match_planechar(with_hub(9, (0, 3, 6)))
    assert m.case == "B" and m.inner == (9,) and m.bound == 1


def test_planechar_five_cycle():
    pts = polygon(10) + polygon(5, 0.4, 0.0)
    edges = ring(10) + ring(5, 10) + [(10 + i, 2 * i) for i in range(5)]
    m = match_planechar(from_drawing(pts, edges, range(10)))
    assert m.case == "C" and set(m.cycle) == set(range(10, 15)) and m.bound == 5


def test_planechar_tree_on_decagon():
    assert match_planechar(with_hub(10, (0, 3, 6))).case == "B"


def test_planechar_no_match():
    assert match_planechar(cycle_graph(8)).case is None
    assert match_planechar(with_hub(10, (0, 5))).case is None  # degree 2 inside


def test_planechar_preconditions():
    with pytest.raises(OuterTooLong):
        match_planechar(cycle_graph(12))
    with pytest.raises(GirthTooSmall):
        match_planechar(with_hub(6, (0, 2, 4)))


def test_one_triangle_pentagon_shape():
    assert check_planetr(from_drawing(polygon(5), ring(5) + [(0, 2)], range(5)))
    assert not check_planetr(cycle_graph(5))
    assert not check_planetr(cycle_graph(4))
    # triangle r0 r1 hub, other faces of length 5
    assert not check_planetr(with_hub(5, (0, 1)))
    with pytest.raises(PreconditionError):
        check_planetr(fig1a())


def test_quadrangulated_hexagon_shape():
    assert check_gimbel(with_hub(6, (0, 2, 4)))
    assert not check_gimbel(cycle_graph(6))
    assert not check_gimbel(with_hub(6, (0, 3)))  # two pentagons
    with pytest.raises(PreconditionError):
        check_gimbel(fig1b())
    with pytest.raises(PreconditionError):
        check_gimbel(cycle_graph(5))
