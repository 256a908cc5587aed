"""Cross-checks: decision procedure against the colouring oracle, and the
structural facts every critical graph must satisfy."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable

import numpy as np

from .coloring import assignment_from_index, cycle_proper_mask_cached, extendable_mask, is_R_critical
from .decider import check_witness, decide_extension, validate_class
from .enumerator import GenConstraints, run_levels, _chunks
from .plane_graph import PlaneGraph, cycles_up_to, from_code, interior_subgraph, rooted_code
from .rotg import format_rotg


class Disagreement(AssertionError):
    """Decision and oracle differ; carries the graph (as .rotg text) and phi."""

    def __init__(self, rotg: str, phi: tuple[int, ...], decided: str, oracle_extends: bool):
        self.rotg = rotg
        self.phi = phi
        self.decided = decided
        self.oracle_extends = oracle_extends
        super().__init__(f"decision {decided} but oracle says extends={oracle_extends} for phi={phi}\n{rotg}")


class PropertyViolation(AssertionError):
    pass


@dataclass
class VerificationReport:
    graphs: int = 0
    assignments: int = 0
    extendable: int = 0
    fails_a: int = 0
    fails_b: int = 0
    proper: int = 0
    proper_extendable: int = 0
    proper_fails_a: int = 0
    proper_fails_b: int = 0
    body_b_mismatches: int = 0
    bad_witnesses: int = 0
    by_outer: dict = field(default_factory=dict)
    disagreements: list = field(default_factory=list)

    def merge(self, other: "VerificationReport") -> None:
        for k, v in asdict(other).items():
            if k == "by_outer":
                for L, n in v.items():
                    self.by_outer[L] = self.by_outer.get(L, 0) + n
            elif k == "disagreements":
                self.disagreements.extend(v)
            else:
                setattr(self, k, getattr(self, k) + v)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.bad_witnesses

    def to_dict(self) -> dict:
        d = asdict(self)
        d["by_outer"] = {str(k): v for k, v in sorted(self.by_outer.items())}
        return d


def verify_graph(g: PlaneGraph, report: VerificationReport, fail_fast: bool = True) -> None:
    """Compare ``decide_extension`` with the oracle on all 3^|R| outer colourings."""
    if not validate_class(g).in_class:
        raise ValueError("graph is outside the one-triangle class")
    k = len(g.outer_walk)
    mask = extendable_mask(g)
    proper = cycle_proper_mask_cached(k)
    report.graphs += 1
    report.by_outer[k] = report.by_outer.get(k, 0) + 1
    for idx in range(3 ** k):
        phi = assignment_from_index(idx, k)
        d = decide_extension(g, phi)
        ext = bool(mask[idx])
        report.assignments += 1
        p = bool(proper[idx])
        report.proper += p
        if d.variant == "Extends":
            report.extendable += 1
            report.proper_extendable += p
        elif d.variant == "FailsA":
            report.fails_a += 1
            report.proper_fails_a += p
        else:
            report.fails_b += 1
            report.proper_fails_b += p
        if not d.extends and not check_witness(g, phi, d):
            report.bad_witnesses += 1
        body_extends = not (d.variant == "FailsA" or d.body_b)
        report.body_b_mismatches += body_extends != ext
        if d.extends != ext:
            err = Disagreement(format_rotg(g), phi, d.variant, ext)
            if fail_fast:
                raise err
            report.disagreements.append({"rotg": err.rotg, "phi": list(phi), "decided": d.variant,
                                         "oracle_extends": ext})


def _verify_chunk(codes: np.ndarray) -> VerificationReport:
    rep = VerificationReport()
    for row in codes:
        verify_graph(from_code(row), rep, fail_fast=False)
    return rep


def verify_theorem(target: GenConstraints | Iterable[PlaneGraph], workers: int = 1,
                   checkpoint: str | Path | None = None, fail_fast: bool = True) -> VerificationReport:
    """Decision vs oracle over every graph of ``target`` (a family or a list of graphs).

    Raises :class:`Disagreement` on the first mismatch unless ``fail_fast`` is
    off, in which case mismatches are collected in the report.
    """
    report = VerificationReport()
    if not isinstance(target, GenConstraints):
        for g in target:
            verify_graph(g, report, fail_fast)
        return report

    def take(codes, state, pool):
        acc = _from_state(state)
        for part in pool.map(_verify_chunk, _chunks(codes, pool.workers)):
            acc.merge(part)
        state.clear()
        state.update(acc.to_dict())

    state = run_levels(target, take, VerificationReport().to_dict(), workers=workers,
                       checkpoint=checkpoint, task="verify")
    report = _from_state(state)
    if fail_fast and report.disagreements:
        d = report.disagreements[0]
        raise Disagreement(d["rotg"], tuple(d["phi"]), d["decided"], d["oracle_extends"])
    return report


def _from_state(state: dict) -> VerificationReport:
    d = dict(state)
    by_outer = {int(k): v for k, v in d.pop("by_outer", {}).items()}
    rep = VerificationReport(**d)
    rep.by_outer = by_outer
    return rep


# -- properties of critical graphs --------------------------------------------

@dataclass
class CriticalityProperties:
    min_internal_degree_ok: bool
    one_r_neighbour_ok: bool
    interiors_critical_ok: bool
    nonfacial_cycles: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@lru_cache(maxsize=65536)
def _critical_code(code: tuple[int, ...]) -> bool:
    # criticality only depends on the rooted isomorphism class
    return is_R_critical(from_code(code)).is_critical


def verify_criticality_properties(g: PlaneGraph, raise_on_violation: bool = True) -> CriticalityProperties:
    """Internal degree >= 3, at most one R-neighbour per internal vertex, and
    ins(C) is C-critical for every non-facial cycle C other than R."""
    r = g.outer_vertices()
    internal = g.internal_vertices()
    bad: list[str] = []
    deg_ok = all(g.degree(v) >= 3 for v in internal)
    if not deg_ok:
        bad.append("internal vertex of degree < 3")
    nb_ok = all(sum(w in r for w in g.rotation[v]) <= 1 for v in internal)
    if not nb_ok:
        bad.append("internal vertex with two neighbours on R")
    outer_key = frozenset(g.outer_cycle().edge_set())
    count = 0
    ins_ok = True
    for c in cycles_up_to(g, g.n):
        if c.edge_set() == outer_key or g.is_facial(c.vertices):
            continue
        count += 1
        sub = interior_subgraph(g, c.vertices)
        if not _critical_code(rooted_code(sub)):
            ins_ok = False
            bad.append(f"ins of cycle {c.vertices} is not critical")
    props = CriticalityProperties(deg_ok, nb_ok, ins_ok, count, bad)
    if bad and raise_on_violation:
        raise PropertyViolation("; ".join(bad))
    return props
