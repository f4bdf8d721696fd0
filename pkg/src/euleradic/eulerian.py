"""Exact counts of paths in the Euler graph.

The Euler graph is the infinite graded multigraph on vertices (x, y) with
x, y >= 0, having y+1 parallel edges from (x, y) to (x+1, y) and x+1
parallel edges from (x, y) to (x, y+1).  The number A_{p,q}(i, j) of paths
from (p, q) to (p+i, q+j) generalizes the classical Eulerian numbers:
from the origin, A_{0,0}(i, j) is the Eulerian number counting
permutations of i+j+1 letters with exactly i descents.

Everything here is exact integer arithmetic; there is no floating point
anywhere in this module.  A_{p,q}(0, 0) = 1 by the empty-path convention
(and every formula below already evaluates to 1 there, so no special
casing is needed).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import NamedTuple

from .errors import BudgetError

#: Default cap on the number of cells a single table may hold.
DEFAULT_CELL_BUDGET = 10**7

#: Largest n for which the permutation oracle will run (n! permutations).
DEFAULT_ORACLE_LIMIT = 10


class Vertex(NamedTuple):
    """A vertex (x, y) of the Euler graph; its level is x + y."""

    x: int
    y: int

    @property
    def level(self) -> int:
        return self.x + self.y


class Offset(NamedTuple):
    """A nonnegative displacement (i, j) between vertices."""

    i: int
    j: int


ORIGIN = Vertex(0, 0)


def _as_vertex(v) -> Vertex:
    x, y = v
    if x < 0 or y < 0:
        raise ValueError(f"vertex coordinates must be nonnegative, got {tuple(v)!r}")
    return Vertex(x, y)


def _as_offset(off) -> Offset:
    i, j = off
    if i < 0 or j < 0:
        raise ValueError(f"offset components must be nonnegative, got {tuple(off)!r}")
    return Offset(i, j)


class CountTable:
    """Dense grid of exact path counts A_{base}(i, j), 0 <= i <= imax, 0 <= j <= jmax.

    Cells are plain Python ints and are treated as immutable after
    construction; tables are safe to share between readers.
    """

    def __init__(self, base: Vertex, imax: int, jmax: int, cells: list[list[int]]):
        self.base = _as_vertex(base)
        self.imax = imax
        self.jmax = jmax
        self.cells = cells

    def __getitem__(self, off) -> int:
        i, j = off
        if not (0 <= i <= self.imax and 0 <= j <= self.jmax):
            raise IndexError(f"offset {(i, j)} outside table bounds "
                             f"({self.imax}, {self.jmax})")
        return self.cells[i][j]

    def __repr__(self) -> str:
        return (f"CountTable(base={tuple(self.base)}, "
                f"imax={self.imax}, jmax={self.jmax})")


def recurrence_table(base, imax: int, jmax: int, *,
                     max_cells: int = DEFAULT_CELL_BUDGET) -> CountTable:
    """Fill a table of A_{p,q}(i, j) via the two-term recurrence.

    A(i, j) = (j+q+1) A(i-1, j) + (i+p+1) A(i, j-1), with boundary
    A(i, 0) = (q+1)^i, A(0, j) = (p+1)^j and A(0, 0) = 1.

    >>> recurrence_table((0, 0), 2, 2)[1, 1]
    4
    >>> recurrence_table((1, 0), 1, 1)[1, 1]
    7
    """
    p, q = _as_vertex(base)
    if imax < 0 or jmax < 0:
        raise ValueError("table bounds must be nonnegative")
    cells_needed = (imax + 1) * (jmax + 1)
    if cells_needed > max_cells:
        raise BudgetError(f"table of {cells_needed} cells exceeds the "
                          f"budget of {max_cells}")
    rows: list[list[int]] = []
    for i in range(imax + 1):
        row: list[int] = []
        for j in range(jmax + 1):
            if i == 0 and j == 0:
                v = 1
            elif i == 0:
                v = row[j - 1] * (p + 1)
            elif j == 0:
                v = rows[i - 1][0] * (q + 1)
            else:
                v = (j + q + 1) * rows[i - 1][j] + (i + p + 1) * row[j - 1]
            row.append(v)
        rows.append(row)
    return CountTable(Vertex(p, q), imax, jmax, rows)


def closed_form(base, off) -> int:
    """A_{p,q}(i, j) by the alternating-sum closed form (exact).

    Sum over t = 0..i of
    (-1)^(i-t) C(p+q+t+1, t) C(p+q+i+j+2, i-t) (p+1+t)^(i+j).

    >>> closed_form((1, 0), (1, 1))
    7
    >>> closed_form((0, 0), (2, 1))
    11
    """
    p, q = _as_vertex(base)
    i, j = _as_offset(off)
    n = p + q
    total = 0
    for t in range(i + 1):
        term = comb(n + t + 1, t) * comb(n + i + j + 2, i - t) * (p + 1 + t) ** (i + j)
        total += -term if (i - t) % 2 else term
    if total < 0:
        raise ArithmeticError(
            f"alternating sum went negative at base {(p, q)}, offset {(i, j)}")
    return total


def closed_form_sym(base, off) -> int:
    """A_{p,q}(i, j) by the j-indexed symmetric variant of the closed form.

    Equals closed_form everywhere (the count is invariant under the
    reflection (p, q, i, j) -> (q, p, j, i)).
    """
    p, q = _as_vertex(base)
    i, j = _as_offset(off)
    n = p + q
    total = 0
    for t in range(j + 1):
        term = comb(n + t + 1, t) * comb(n + i + j + 2, j - t) * (q + 1 + t) ** (i + j)
        total += -term if (j - t) % 2 else term
    if total < 0:
        raise ArithmeticError(
            f"alternating sum went negative at base {(p, q)}, offset {(i, j)}")
    return total


def comtet_a00(off) -> int:
    """A_{0,0}(i, j) by the classical Eulerian-number sum.

    Sum over t = 0..i of (-1)^(i-t) C(i+j+2, i-t) (1+t)^(i+j+1); the
    textbook closed form for the Eulerian number with i descents on
    i+j+1 letters.

    >>> comtet_a00((1, 1))
    4
    >>> comtet_a00((2, 2))
    66
    """
    i, j = _as_offset(off)
    total = 0
    for t in range(i + 1):
        term = comb(i + j + 2, i - t) * (1 + t) ** (i + j + 1)
        total += -term if (i - t) % 2 else term
    if total < 0:
        raise ArithmeticError(f"alternating sum went negative at offset {(i, j)}")
    return total


def dim_between(src, dst) -> int:
    """Number of paths from vertex src to vertex dst; 0 when dst is not
    componentwise >= src (no paths exist)."""
    sx, sy = _as_vertex(src)
    dx, dy = _as_vertex(dst)
    if dx < sx or dy < sy:
        return 0
    return closed_form((sx, sy), (dx - sx, dy - sy))


@lru_cache(maxsize=None)
def _descent_histogram(n: int) -> tuple[int, ...]:
    # One exhaustive sweep of all n! permutations per n, cached.
    counts = [0] * n
    for perm in permutations(range(n)):
        d = sum(1 for a, b in zip(perm, perm[1:]) if a > b)
        counts[d] += 1
    return tuple(counts)


def classical_eulerian_oracle(n: int, k: int, *,
                              max_n: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Count permutations of {1..n} with exactly k descents, by exhaustive
    generation.  Independent cross-check oracle; deliberately knows nothing
    about the path-counting formulas.

    >>> classical_eulerian_oracle(4, 2)
    11
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k < n:
        raise ValueError(f"descent count k must satisfy 0 <= k < n, got k={k}")
    if n > max_n:
        raise BudgetError(f"exhaustive generation of {n}! permutations exceeds "
                          f"the limit n <= {max_n}")
    return _descent_histogram(n)[k]


def generalized_binomial(m: int, k: int) -> int:
    """Binomial coefficient C(m, k) for an arbitrary integer upper argument,
    via the falling factorial m(m-1)...(m-k+1) / k!.

    Exact for every integer m (the product of k consecutive integers is
    divisible by k!); this is the polynomial-in-m reading, so negative m
    is legal.
    """
    if k < 0:
        raise ValueError(f"lower argument must be nonnegative, got {k}")
    num = 1
    for s in range(k):
        num *= m - s
    return num // factorial(k)


def coefficient_identity_check(p: int, q: int, i: int) -> tuple[int, int]:
    """Evaluate both sides of the coefficient identity

        sum_t (-1)^(i-t) C(p+q+t+1, t) C(p+q+i+2, i-t) (p+1+t)^i = (q+1)^i

    exactly, with the binomials read as polynomials in q so that any
    integer q (negative included) is a legal test point.  Returns
    (lhs, rhs); callers assert equality.
    """
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")
    lhs = 0
    for t in range(i + 1):
        term = (generalized_binomial(p + q + t + 1, t)
                * generalized_binomial(p + q + i + 2, i - t)
                * (p + 1 + t) ** i)
        lhs += -term if (i - t) % 2 else term
    rhs = (q + 1) ** i
    return lhs, rhs
