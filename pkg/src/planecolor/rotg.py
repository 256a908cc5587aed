"""Reading and writing the ``.rotg`` text format.

::

    # comment
    vertices 3
    rot 1: 2 3
    rot 2: 3 1
    rot 3: 1 2
    outer: 1 2 3

Vertex ids are 1-based in the file and 0-based in memory.  Rotations list
neighbours clockwise.
"""

from __future__ import annotations

from pathlib import Path

from .plane_graph import PlaneGraph, build


class RotgParseError(ValueError):
    pass


def parse_rotg(text: str) -> PlaneGraph:
    return parse_rotg_listed(text)[0]


def parse_rotg_listed(text: str) -> tuple[PlaneGraph, list[int]]:
    """Graph plus the outer walk exactly as listed in the file (0-based)."""
    n = None
    rot: dict[int, list[int]] = {}
    outer: list[int] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("vertices"):
                n = int(line.split()[1])
            elif line.startswith("rot"):
                head, _, tail = line[3:].partition(":")
                v = int(head)
                if v in rot:
                    raise RotgParseError(f"line {lineno}: vertex {v} listed twice")
                rot[v] = [int(x) for x in tail.split()]
            elif line.startswith("outer"):
                outer = [int(x) for x in line.partition(":")[2].split()]
            else:
                raise RotgParseError(f"line {lineno}: unrecognised directive {line!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, RotgParseError):
                raise
            raise RotgParseError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise RotgParseError("missing 'vertices N' line")
    if outer is None:
        raise RotgParseError("missing 'outer:' line")
    if sorted(rot) != list(range(1, n + 1)):
        raise RotgParseError(f"expected rotations for vertices 1..{n}")
    for v, nbrs in rot.items():
        if any(not (1 <= w <= n) for w in nbrs):
            raise RotgParseError(f"vertex {v} has a neighbour outside 1..{n}")
    if any(not (1 <= v <= n) for v in outer):
        raise RotgParseError("outer walk names an unknown vertex")
    rotation = [[w - 1 for w in rot[v]] for v in range(1, n + 1)]
    listed = [v - 1 for v in outer]
    return build(rotation, listed), listed


def read_rotg(path: str | Path) -> PlaneGraph:
    return parse_rotg(Path(path).read_text())


def format_rotg(g: PlaneGraph, comment: str | None = None) -> str:
    """Canonical text: each rotation starts at its smallest neighbour, the
    outer walk at its smallest vertex."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"vertices {g.n}")
    for v, r in enumerate(g.rotation):
        if r:
            i = r.index(min(r))
            r = r[i:] + r[:i]
        lines.append(f"rot {v + 1}: " + " ".join(str(w + 1) for w in r))
    walk = g.outer_walk
    i = walk.index(min(walk))
    walk = walk[i:] + walk[:i]
    lines.append("outer: " + " ".join(str(v + 1) for v in walk))
    return "\n".join(lines) + "\n"


def write_rotg(g: PlaneGraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_rotg(g, comment))
