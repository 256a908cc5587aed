from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _corpus import small_graphs
from _oracles import brute_colorings, brute_extends, proper
from conftest import c6_long_chord
from planecolor.coloring import (
    DomainMismatch,
    Precoloring,
    assignment_from_index,
    assignment_index,
    count_extensions,
    cycle_proper_mask,
    extend,
    extendable_mask,
    is_R_critical,
    proper_precolorings,
)
from planecolor.plane_graph import OuterNotCycle, build, cycle_graph

graphs = st.sampled_from(small_graphs())
colourings = lambda k: st.lists(st.integers(1, 3), min_size=k, max_size=k)  # noqa: E731


def test_cycle_alone_extends():
    assert extend(cycle_graph(6), (1, 2, 1, 2, 1, 2)) is not None


def test_fig1b_extends(g1b):
    col = extend(g1b, (1, 2, 3, 1, 2, 3))
    assert col is not None and proper(g1b.edges, [col[v] for v in range(9)])
    assert [col[v] for v in range(6)] == [1, 2, 3, 1, 2, 3]


def test_fig1b_blocked(g1b):
    assert extend(g1b, (1, 2, 1, 2, 1, 2)) is None
    assert count_extensions(g1b, (1, 2, 1, 2, 1, 2)) == 0


def test_counts():
    assert count_extensions(cycle_graph(3)) == 6
    assert count_extensions(cycle_graph(6)) == 66 == len(brute_colorings(6, cycle_graph(6).edges))


@pytest.mark.parametrize("k,expected", [(6, 66), (5, 30), (3, 6)])
def test_proper_precoloring_counts(k, expected):
    pcs = list(proper_precolorings(cycle_graph(k)))
    assert len(pcs) == expected
    keys = [pc.colors_on(range(k)) for pc in pcs]
    assert keys == sorted(keys)


def test_precoloring_domain_checks(g1b):
    with pytest.raises(DomainMismatch):
        extend(g1b, (1, 2, 3))
    with pytest.raises(DomainMismatch):
        extend(g1b, {0: 4})
    with pytest.raises(DomainMismatch):
        extend(g1b, {42: 1})


def test_improper_precoloring_returns_none(g1b):
    assert extend(g1b, (1, 1, 2, 3, 1, 2)) is None


def test_assignment_index_round_trip():
    for idx in range(3 ** 4):
        assert assignment_index(assignment_from_index(idx, 4)) == idx
    assert cycle_proper_mask(5).sum() == 30


def test_criticality_examples(g1a):
    assert not is_R_critical(cycle_graph(6)).is_critical
    rep = is_R_critical(g1a)
    assert rep.is_critical and rep.witnesses == {("edge", 0, 2): (1, 2, 1, 2, 1, 2)}
    rep = is_R_critical(c6_long_chord())
    assert rep.is_critical and rep.witnesses == {("edge", 0, 3): (1, 2, 3, 1, 2, 3)}


def test_criticality_needs_outer_cycle():
    with pytest.raises(OuterNotCycle):
        is_R_critical(build([(1,), (0,)], [0, 1]))


def test_non_critical_graph_has_missing_witness():
    # pentagon with a pendant-free inner vertex of degree 2: removable without effect
    g = build([(1, 5, 4), (2, 0), (3, 1), (4, 2), (0, 5, 3), (0, 4)], range(5))
    rep = is_R_critical(g)
    assert not rep.is_critical and None in rep.witnesses.values()


@settings(max_examples=40, deadline=None)
@given(graphs, st.data())
def test_count_matches_exhaustive(g, data):
    if g.n > 9:
        return
    k = len(g.outer_walk)
    phi = data.draw(colourings(k))
    pre = dict(zip(g.outer_walk, phi))
    brute = [c for c in brute_colorings(g.n, g.edges) if all(c[v] == pre[v] for v in pre)]
    assert count_extensions(g, phi) == len(brute)
    assert (extend(g, phi) is not None) == bool(brute)
    assert count_extensions(g) == len(brute_colorings(g.n, g.edges))


@settings(max_examples=40, deadline=None)
@given(graphs, st.data())
def test_colour_permutation_equivariance(g, data):
    k = len(g.outer_walk)
    phi = data.draw(colourings(k))
    perm = dict(zip((1, 2, 3), data.draw(st.permutations((1, 2, 3)))))
    pc = Precoloring.on_outer(g, phi)
    assert (extend(g, pc) is None) == (extend(g, pc.permuted(perm)) is None)
    assert count_extensions(g, pc) == count_extensions(g, pc.permuted(perm))


@settings(max_examples=40, deadline=None)
@given(graphs, st.data())
def test_monotone_under_edge_deletion(g, data):
    k = len(g.outer_walk)
    phi = data.draw(colourings(k))
    chords = [e for e in g.edges if frozenset(e) not in g.outer_cycle().edge_set()]
    if not chords or extend(g, phi) is None:
        return
    u, v = data.draw(st.sampled_from(chords))
    edges = [e for e in g.edges if e != (u, v)]
    assert brute_extends(g.n, edges, dict(zip(g.outer_walk, phi)))


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_mask_backends_agree_with_search(g):
    m1 = extendable_mask(g, "numba")
    m2 = extendable_mask(g, "numpy")
    assert np.array_equal(m1, m2)
    k = len(g.outer_walk)
    for idx in range(0, 3 ** k, max(1, 3 ** k // 40)):
        phi = assignment_from_index(idx, k)
        assert bool(m1[idx]) == (extend(g, phi) is not None)


@settings(max_examples=25, deadline=None)
@given(graphs)
def test_witnesses_reverify(g):
    rep = is_R_critical(g)
    walk = g.outer_walk
    for name, phi in rep.witnesses.items():
        if phi is None:
            continue
        pre = dict(zip(walk, phi))
        _, u, v = name
        assert brute_extends(g.n, [e for e in g.edges if e != (u, v)], pre)
        assert not brute_extends(g.n, g.edges, pre)
    if rep.is_critical:
        assert all(w is not None for w in rep.witnesses.values())


def test_brute_force_critical_agrees_on_catalog(g1a, g1b):
    """Criticality by the definition, with exhaustive colouring on both sides."""
    for g in (g1a, g1b):
        walk = g.outer_walk
        for u, v in g.edges:
            if frozenset((u, v)) in g.outer_cycle().edge_set():
                continue
            sub = [e for e in g.edges if e != (u, v)]
            assert any(brute_extends(g.n, sub, dict(zip(walk, c))) and not brute_extends(g.n, g.edges, dict(zip(walk, c)))
                       for c in product((1, 2, 3), repeat=6)
                       if all(c[i] != c[(i + 1) % 6] for i in range(6)))
