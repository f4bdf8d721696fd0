"""The adic (successor) transformation on root paths of the Euler graph.

The edges entering each vertex carry a fixed total order: the bundle from
the horizontal parent (x-1, y) in ascending edge index, then the bundle
from the vertical parent (x, y-1) in ascending edge index.  Paths from
the root to a common vertex are compared at the last level where their
edges differ; the successor map sends a non-maximal path to the next one
in this order by advancing the lowest advanceable edge and resetting
everything below it to the minimal configuration.  The symmetric measure
assigns exactly 1/(n+1)! to every cylinder of length n.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator, NamedTuple

from .errors import BudgetError, MaximalPathError
from .eulerian import ORIGIN, Vertex, _as_vertex, dim_between
from .paths import (DEFAULT_ENUM_BUDGET, EulerPath, HORIZONTAL, Step,
                    VERTICAL, validate)


class IncomingEdge(NamedTuple):
    """An edge entering some vertex, named by its parent and its 1-based
    index within the parent-to-child bundle."""

    parent: Vertex
    edge_index: int


def incoming_order(v) -> list[IncomingEdge]:
    """All edges entering v in their fixed total order."""
    x, y = _as_vertex(v)
    if (x, y) == (0, 0):
        raise ValueError("the root has no incoming edges")
    edges: list[IncomingEdge] = []
    if x >= 1:
        parent = Vertex(x - 1, y)
        for idx in range(1, parent.y + 2):
            edges.append(IncomingEdge(parent, idx))
    if y >= 1:
        parent = Vertex(x, y - 1)
        for idx in range(1, parent.x + 2):
            edges.append(IncomingEdge(parent, idx))
    return edges


def _incoming_rank(child: Vertex, step: Step) -> int:
    # Rank of the edge (described by the step entering `child`) within
    # incoming_order(child), without materializing the list.
    if step.direction == HORIZONTAL:
        return step.edge_index - 1
    h_bundle = child.y + 1 if child.x >= 1 else 0
    return h_bundle + step.edge_index - 1


def _require_root(path: EulerPath) -> None:
    if Vertex(*path.start) != ORIGIN:
        raise ValueError(f"expected a root path, got start {tuple(path.start)}")


def _vertex_trail(path: EulerPath) -> list[Vertex]:
    verts = [Vertex(*path.start)]
    for step in path.steps:
        v = verts[-1]
        verts.append(Vertex(v.x + 1, v.y) if step.direction == HORIZONTAL
                     else Vertex(v.x, v.y + 1))
    return verts


def compare(a: EulerPath, b: EulerPath) -> int:
    """-1, 0 or 1 ordering two root paths with the same end vertex, by the
    rank of their edges at the last level where they differ."""
    _require_root(a)
    _require_root(b)
    end_a, end_b = validate(a), validate(b)
    if end_a != end_b:
        raise ValueError(f"paths end at different vertices "
                         f"{tuple(end_a)} and {tuple(end_b)}")
    if a.steps == b.steps:
        return 0
    m = max(k for k in range(len(a.steps)) if a.steps[k] != b.steps[k])
    # The suffixes above m coincide, so both paths pass through the same
    # vertex after step m; ranks there decide.
    child = _vertex_trail(a)[m + 1]
    ra = _incoming_rank(child, a.steps[m])
    rb = _incoming_rank(child, b.steps[m])
    return -1 if ra < rb else 1


def _extreme_path(v, take_last: bool) -> EulerPath:
    v = _as_vertex(v)
    steps: list[Step] = []
    cur = v
    while cur != ORIGIN:
        edges = incoming_order(cur)
        edge = edges[-1] if take_last else edges[0]
        direction = HORIZONTAL if edge.parent.x < cur.x else VERTICAL
        steps.append(Step(direction, edge.edge_index))
        cur = edge.parent
    return EulerPath(ORIGIN, tuple(reversed(steps)))


def minimal_path(v) -> EulerPath:
    """The least root path to v: first incoming edge at every level."""
    return _extreme_path(v, take_last=False)


def maximal_path(v) -> EulerPath:
    """The greatest root path to v: last incoming edge at every level."""
    return _extreme_path(v, take_last=True)


def successor(x: EulerPath) -> EulerPath:
    """The smallest root path to the same end vertex that is strictly
    greater than x; raises MaximalPathError when x is maximal."""
    _require_root(x)
    validate(x)
    verts = _vertex_trail(x)
    for m in range(len(x.steps)):
        child = verts[m + 1]
        edges = incoming_order(child)
        rank = _incoming_rank(child, x.steps[m])
        if rank + 1 < len(edges):
            edge = edges[rank + 1]
            direction = HORIZONTAL if edge.parent.x < child.x else VERTICAL
            head = minimal_path(edge.parent)
            steps = head.steps + (Step(direction, edge.edge_index),) + x.steps[m + 1:]
            return EulerPath(ORIGIN, steps)
    raise MaximalPathError(f"path to {tuple(verts[-1])} is maximal")


def orbit(v, *, max_enum: int = DEFAULT_ENUM_BUDGET) -> Iterator[EulerPath]:
    """All root paths to v in successor order, from minimal to maximal.
    The exact path count is checked against the budget first."""
    v = _as_vertex(v)
    total = dim_between(ORIGIN, v)
    if total > max_enum:
        raise BudgetError(f"orbit of {total} paths to {tuple(v)} exceeds "
                          f"the enumeration budget {max_enum}")

    def run() -> Iterator[EulerPath]:
        cur = minimal_path(v)
        while True:
            yield cur
            try:
                cur = successor(cur)
            except MaximalPathError:
                return

    return run()


def cylinder_measure(n: int) -> Fraction:
    """Symmetric-measure weight of any length-n cylinder: 1/(n+1)!."""
    if n < 0:
        raise ValueError(f"cylinder length must be nonnegative, got {n}")
    return Fraction(1, factorial(n + 1))


def cylinder_frequency(prefix: EulerPath, v) -> Fraction:
    """Exact fraction of root-to-v paths that extend the given root
    prefix: dim(end(prefix), v) / dim(R, v).  Depends on the prefix only
    through its end vertex; zero when v is unreachable from it."""
    _require_root(prefix)
    end = validate(prefix)
    v = _as_vertex(v)
    return Fraction(dim_between(end, v), dim_between(ORIGIN, v))
