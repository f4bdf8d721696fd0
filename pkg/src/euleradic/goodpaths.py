"""Edge labeling relative to a base vertex, and good-path counting.

Relative to a base (p, q), the first q+1 horizontal edges out of every
vertex above the base carry labels s_1..s_{q+1} and the first p+1
vertical edges carry labels s_{q+2}..s_{p+q+2}.  A label is consumed the
first time the path traverses its edge while still marked; afterwards
that edge behaves like an unlabeled one.  A path is good when it consumes
all p+q+2 labels.  Good paths exist exactly when i >= q+1 and j >= p+1.

Counting is done two ways: honest exhaustive traversal (every parallel
edge walked separately) and a level-synchronous dynamic program over
(position, consumed-label-set) states.  Consumed sets are bitmasks with
bit a-1 standing for label s_a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetError
from .eulerian import Vertex, _as_offset, _as_vertex, closed_form
from .paths import (DEFAULT_ENUM_BUDGET, EulerPath, HORIZONTAL, multiplicity,
                    validate)

#: Widest consumed-label bitmask the DP accepts (p+q+2 bits).
DEFAULT_MASK_WIDTH = 24

#: Default cap on total DP states (cells x label subsets).
DEFAULT_STATE_BUDGET = 10**7


@dataclass(frozen=True)
class LabelScheme:
    """The labeling of edge bundles relative to a base vertex."""

    base: Vertex

    def __post_init__(self):
        object.__setattr__(self, "base", _as_vertex(self.base))

    @property
    def label_count(self) -> int:
        return self.base.x + self.base.y + 2

    @property
    def full_mask(self) -> int:
        return (1 << self.label_count) - 1


def edge_label(scheme: LabelScheme, at, direction: str, idx: int) -> int | None:
    """Label index a (1-based, in [1, p+q+2]) carried by the given edge, or
    None for an unlabeled edge.  `at` must be componentwise >= the base."""
    p, q = scheme.base
    x, y = _as_vertex(at)
    if x < p or y < q:
        raise ValueError(f"vertex {(x, y)} is not reachable from base {(p, q)}")
    size = multiplicity((x, y), direction)
    if not 1 <= idx <= size:
        raise ValueError(f"edge index {idx} outside bundle of size {size} "
                         f"at {(x, y)}")
    if direction == HORIZONTAL:
        return idx if idx <= q + 1 else None
    return q + 1 + idx if idx <= p + 1 else None


def is_good(scheme: LabelScheme, path: EulerPath) -> tuple[bool, int]:
    """Walk the path, consuming labels on first marked traversal.  Returns
    (goodness, consumed bitmask)."""
    if Vertex(*path.start) != scheme.base:
        raise ValueError(f"path starts at {tuple(path.start)}, "
                         f"scheme base is {tuple(scheme.base)}")
    validate(path)
    p, q = scheme.base
    mask = 0
    for step in path.steps:
        # Which label an edge carries depends only on its index within the
        # bundle, so consumption reduces to setting that label's bit.
        if step.direction == HORIZONTAL:
            if step.edge_index <= q + 1:
                mask |= 1 << (step.edge_index - 1)
        elif step.edge_index <= p + 1:
            mask |= 1 << (q + step.edge_index)
    return mask == scheme.full_mask, mask


def count_good_enumeration(base, off, *,
                           max_enum: int = DEFAULT_ENUM_BUDGET) -> int:
    """Count good paths by walking every path (each parallel edge taken
    separately) and testing the consumed set at the end."""
    p, q = _as_vertex(base)
    i, j = _as_offset(off)
    expected = closed_form((p, q), (i, j))
    if expected > max_enum:
        raise BudgetError(f"{expected} paths from {(p, q)} at offset {(i, j)} "
                          f"exceed the enumeration budget {max_enum}")
    full = (1 << (p + q + 2)) - 1

    def walk(k: int, l: int, mask: int) -> int:
        if k == i and l == j:
            return 1 if mask == full else 0
        n = 0
        if k < i:
            for idx in range(1, q + l + 2):
                if idx <= q + 1:
                    n += walk(k + 1, l, mask | (1 << (idx - 1)))
                else:
                    n += walk(k + 1, l, mask)
        if l < j:
            for idx in range(1, p + k + 2):
                if idx <= p + 1:
                    n += walk(k, l + 1, mask | (1 << (q + idx)))
                else:
                    n += walk(k, l + 1, mask)
        return n

    return walk(0, 0, 0)


def good_count_table(base, imax: int, jmax: int, *,
                     max_width: int = DEFAULT_MASK_WIDTH,
                     max_states: int = DEFAULT_STATE_BUDGET) -> list[list[int]]:
    """Table of good-path counts G(i, j) for 0 <= i <= imax, 0 <= j <= jmax,
    by one level-synchronous DP pass over (position, consumed-set) states.

    Transitions from a state: each still-unconsumed label of the step
    direction is one specific edge (consuming it), and the remaining
    bundle-size minus unconsumed-count edges are unmarked (consumed-label
    edges included); unmarked edges share one transition with that
    multiplicity.
    """
    p, q = _as_vertex(base)
    if imax < 0 or jmax < 0:
        raise ValueError("table bounds must be nonnegative")
    width = p + q + 2
    if width > max_width:
        raise BudgetError(f"label mask of {width} bits exceeds the width "
                          f"limit {max_width}")
    states = (imax + 1) * (jmax + 1) * (1 << width)
    if states > max_states:
        raise BudgetError(f"DP state space of {states} exceeds the budget "
                          f"{max_states}")
    full = (1 << width) - 1
    h_labels = range(q + 1)            # mask bits of s_1 .. s_{q+1}
    v_labels = range(q + 1, width)     # mask bits of s_{q+2} .. s_{p+q+2}

    g = [[0] * (jmax + 1) for _ in range(imax + 1)]
    # The empty path consumes nothing; full-mask states can only appear later.
    cur: dict[tuple[int, int], int] = {(0, 0): 1}  # (k, mask) -> path count
    for lvl in range(imax + jmax):
        nxt: dict[tuple[int, int], int] = {}
        for (k, mask), ways in cur.items():
            l = lvl - k
            if k < imax:
                unconsumed = [a for a in h_labels if not mask >> a & 1]
                for a in unconsumed:
                    key = (k + 1, mask | (1 << a))
                    nxt[key] = nxt.get(key, 0) + ways
                unmarked = (q + l + 1) - len(unconsumed)
                if unmarked:
                    key = (k + 1, mask)
                    nxt[key] = nxt.get(key, 0) + ways * unmarked
            if l < jmax:
                unconsumed = [a for a in v_labels if not mask >> a & 1]
                for a in unconsumed:
                    key = (k, mask | (1 << a))
                    nxt[key] = nxt.get(key, 0) + ways
                unmarked = (p + k + 1) - len(unconsumed)
                if unmarked:
                    key = (k, mask)
                    nxt[key] = nxt.get(key, 0) + ways * unmarked
        cur = nxt
        for (k, mask), ways in cur.items():
            if mask == full:
                g[k][lvl + 1 - k] = ways
    return g


def count_good_dp(base, off, *,
                  max_width: int = DEFAULT_MASK_WIDTH,
                  max_states: int = DEFAULT_STATE_BUDGET) -> int:
    """Good-path count by the consumed-label-subset DP; must equal
    count_good_enumeration wherever both run."""
    i, j = _as_offset(off)
    return good_count_table(base, i, j, max_width=max_width,
                            max_states=max_states)[i][j]


def good_fraction(base, off, *,
                  max_width: int = DEFAULT_MASK_WIDTH,
                  max_states: int = DEFAULT_STATE_BUDGET) -> Fraction:
    """Exact G/A at the given offset (0 below the nonemptiness threshold)."""
    base = _as_vertex(base)
    off = _as_offset(off)
    good = count_good_dp(base, off, max_width=max_width, max_states=max_states)
    return Fraction(good, closed_form(base, off))


def bad_path_bound(base, off) -> int:
    """Union-style upper bound on the number of non-good paths:
    (q+1) A_{p,q-1}(i,j) + (p+1) A_{p-1,q}(i,j).

    Terms with a negative parameter are dropped (their count family is
    undefined there); with both terms present (p, q >= 1) the bound
    dominates A - G exactly.  With a term dropped the returned partial sum
    is still defined but is not an upper bound.
    """
    p, q = _as_vertex(base)
    off = _as_offset(off)
    bound = 0
    if q >= 1:
        bound += (q + 1) * closed_form((p, q - 1), off)
    if p >= 1:
        bound += (p + 1) * closed_form((p - 1, q), off)
    return bound
