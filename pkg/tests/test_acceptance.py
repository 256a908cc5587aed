"""Acceptance criteria, one test each.  Every test records a single
``C<k> PASS|FAIL: detail`` line, printed at the end of the run."""

import time
from itertools import product

import pytest

from _oracles import brute_extends, brute_plane_family, rooted_key_of
from conftest import ACCEPTANCE_LINES
from planecolor.catalog import check_gimbel, check_planetr, fig1a, fig1b
from planecolor.decider import validate_class
from planecolor.discharging import discharge
from planecolor.enumerator import enumerate as family
from planecolor.enumerator import (
    GenConstraints,
    class_constraints,
    critical_search,
    triangle_free_constraints,
)
from planecolor.plane_graph import rooted_code
from planecolor.verification import verify_criticality_properties, verify_theorem

pytestmark = pytest.mark.slow

MAX_N = 12
_found: dict[str, list] = {}


def record(num, ok, detail):
    line = f"C{num} {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def critical(key, c, prune):
    if key not in _found:
        _found[key] = critical_search(c, prune=prune)
    return _found[key]


def test_c1_decider_matches_oracle():
    t0 = time.perf_counter()
    parts = []
    graphs = assignments = bad = 0
    for L in (3, 4, 5, 6):
        rep = verify_theorem(class_constraints(L, MAX_N), fail_fast=False)
        graphs += rep.graphs
        assignments += rep.assignments
        bad += len(rep.disagreements) + rep.bad_witnesses
        parts.append(f"|R|={L}: {rep.graphs}")
    record(1, bad == 0 and graphs > 0,
           f"{graphs} graphs ({', '.join(parts)}), {assignments} precolorings, "
           f"{bad} disagreements, {time.perf_counter() - t0:.0f}s on 1 worker")


def test_c2_critical_catalog():
    res = critical("class6", class_constraints(6, 11), prune=False)
    codes = sorted(rooted_code(g) for g in res.graphs)
    want = sorted([rooted_code(fig1a()), rooted_code(fig1b())])
    short = {L: len(critical(f"class{L}", class_constraints(L, 11), prune=False).graphs) for L in (3, 4, 5)}
    record(2, codes == want and not any(short.values()),
           f"|R|=6, n<=11: {len(codes)} critical graphs, equal to {{Fig1a, Fig1b}}: {codes == want}; "
           f"|R|<=5: {short}")


def test_c3_five_cycle_triangle_free():
    res = critical("tf5", triangle_free_constraints(5, MAX_N), prune=False)
    record(3, not res.graphs, f"triangle-free |R|=5, n<={MAX_N}: {len(res.graphs)} critical graphs "
                              f"({res.scanned} graphs scanned, exhaustive)")


def test_c4_hexagon_triangle_free_shape():
    res = critical("tf6", triangle_free_constraints(6, MAX_N), prune=False)
    bad = [g for g in res.graphs if not check_gimbel(g)]
    record(4, not bad and bool(res.graphs),
           f"triangle-free |R|=6, n<={MAX_N}: {len(res.graphs)} critical graphs, {len(bad)} violations")


def test_c5_one_triangle_shape():
    counts = {}
    bad = 0
    cert = None
    for L in (3, 4, 5):
        c = GenConstraints(L, MAX_N, 1, 4, min_triangles=1)
        res = critical(f"ot{L}", c, prune=True)
        cert = res.certified_by
        counts[L] = len(res.graphs)
        for g in res.graphs:
            assert len(validate_class(g).triangles) == 1
            try:
                ok = check_planetr(g)
            except ValueError:
                ok = False
            bad += not ok
    record(5, bad == 0, f"exactly one triangle, n<={MAX_N}: critical graphs per |R| {counts}, {bad} violations "
                        f"(pruned search, closed-face cut certified by {cert})")


def test_c6_catalog_counts_by_enumeration():
    out = {}
    for name, g in (("Fig1a", fig1a()), ("Fig1b", fig1b())):
        ext = non = 0
        for phi in product((1, 2, 3), repeat=6):
            if any(phi[i] == phi[(i + 1) % 6] for i in range(6)):
                continue
            if brute_extends(g.n, g.edges, dict(zip(range(6), phi))):
                ext += 1
            else:
                non += 1
        out[name] = (non, ext)
    record(6, out == {"Fig1a": (36, 30), "Fig1b": (24, 42)},
           f"(non-extendable, extendable) proper precolorings: {out}")


def test_c7_discharging_identities():
    checked = bad = 0
    for g in family(class_constraints(6, MAX_N)):
        if not any(i != g.outer_face_id and f.length == 3 for i, f in enumerate(g.faces)):
            continue
        led = discharge(g)
        checked += 1
        bad += not led.ok
    total = discharge(fig1b()).total_final
    record(7, bad == 0 and total == 1 and checked > 0,
           f"{checked} hexagon-bounded class graphs with a triangular face, {bad} violations; Fig1b total {total}")


def test_c8_critical_graph_properties():
    # minimum degree and interiors: general facts, checked on every critical
    # graph found; one R-neighbour: a class fact, checked on class graphs
    sources = {
        "class6": (class_constraints(6, 11), False, True),
        "tf6": (triangle_free_constraints(6, MAX_N), False, False),
        "ot5": (GenConstraints(5, MAX_N, 1, 4, min_triangles=1), True, False),
    }
    total = cycles = z_bad = y_bad = e_bad = e_other = 0
    for key, (c, prune, in_class) in sources.items():
        for g in critical(key, c, prune=prune).graphs:
            props = verify_criticality_properties(g, raise_on_violation=False)
            total += 1
            cycles += props.nonfacial_cycles
            z_bad += not props.min_internal_degree_ok
            y_bad += not props.interiors_critical_ok
            if in_class:
                e_bad += not props.one_r_neighbour_ok
            else:
                e_other += not props.one_r_neighbour_ok
    record(8, total > 0 and z_bad == y_bad == e_bad == 0,
           f"{total} critical graphs, {cycles} non-facial cycles; violations Z={z_bad} Y={y_bad} "
           f"E(class)={e_bad}; outside the class {e_other} graphs have a vertex with two R-neighbours")


@pytest.mark.parametrize("tri,four", [(1, True), (0, False)])
def test_c9_generator_matches_brute_force(tri, four):
    c = GenConstraints(5, 8, tri, 5 if four else 4)
    got = [rooted_key_of(g, 5) for g in family(c)]
    want = brute_plane_family(5, 8, tri, four)
    label = "class" if four else "triangle-free"
    record(9, len(got) == len(set(got)) and set(got) == want,
           f"{label} family |R|=5, n<=8: generator {len(got)} graphs, brute force {len(want)}, equal: {set(got) == want}")
