"""Per-step path encoding and the good-path transport bijection.

Each step of a path is encoded by one symbol: s_a when the step traverses
a still-marked edge labeled s_a, otherwise h_a (resp. v_a) where a is the
edge's 1-based position among the unmarked horizontal (resp. vertical)
edges of its bundle, in ascending edge-index order.  Decoding replays a
symbol sequence greedily from any base of the same level; on good paths
with a deep enough endpoint (i, j >= p+q+2) this transports the good-path
set of one base bijectively onto that of another.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import DecodeError
from .eulerian import Vertex
from .goodpaths import LabelScheme
from .paths import EulerPath, HORIZONTAL, Step, VERTICAL, validate

KIND_MARKED = "s"
KIND_H_UNMARKED = "h"
KIND_V_UNMARKED = "v"


class EncodingSymbol(NamedTuple):
    """One symbol: kind 's' (marked label index), 'h' or 'v' (1-based
    position among the unmarked edges of that direction)."""

    kind: str
    index: int


class EncodingSequence(NamedTuple):
    """A symbol sequence together with the base level n = p+q it was
    produced from.  s-symbols are pairwise distinct, with indices in
    [1, n+2] for decodable sequences."""

    base_level: int
    symbols: tuple[EncodingSymbol, ...]


def _h_label(q: int, idx: int) -> int | None:
    return idx if idx <= q + 1 else None


def _v_label(p: int, q: int, idx: int) -> int | None:
    return q + 1 + idx if idx <= p + 1 else None


def _unmarked_position(idx: int, labeled: int, consumed: int, first_bit: int) -> int:
    """Position of edge `idx` among the unmarked edges of its bundle:
    idx minus the number of marked (labeled, unconsumed) edges below it.
    `labeled` is the bundle's labeled-edge count, `first_bit` the mask bit
    of its first label."""
    marked_below = 0
    for a in range(min(labeled, idx - 1)):
        if not consumed >> (first_bit + a) & 1:
            marked_below += 1
    return idx - marked_below


def encode(scheme: LabelScheme, path: EulerPath) -> EncodingSequence:
    """Encode a path (any path, good or not) relative to the scheme whose
    base it starts at."""
    if Vertex(*path.start) != scheme.base:
        raise ValueError(f"path starts at {tuple(path.start)}, "
                         f"scheme base is {tuple(scheme.base)}")
    validate(path)
    p, q = scheme.base
    consumed = 0
    symbols: list[EncodingSymbol] = []
    for step in path.steps:
        if step.direction == HORIZONTAL:
            label = _h_label(q, step.edge_index)
            if label is not None and not consumed >> (label - 1) & 1:
                consumed |= 1 << (label - 1)
                symbols.append(EncodingSymbol(KIND_MARKED, label))
            else:
                pos = _unmarked_position(step.edge_index, q + 1, consumed, 0)
                symbols.append(EncodingSymbol(KIND_H_UNMARKED, pos))
        else:
            label = _v_label(p, q, step.edge_index)
            if label is not None and not consumed >> (label - 1) & 1:
                consumed |= 1 << (label - 1)
                symbols.append(EncodingSymbol(KIND_MARKED, label))
            else:
                pos = _unmarked_position(step.edge_index, p + 1, consumed, q + 1)
                symbols.append(EncodingSymbol(KIND_V_UNMARKED, pos))
    return EncodingSequence(p + q, tuple(symbols))


def unmarked_counts(scheme: LabelScheme, path: EulerPath, m: int) -> tuple[int, int]:
    """Counts of unmarked horizontal and vertical edges exiting the vertex
    reached after the first m steps.

    Along any path the pair obeys a fixed recursion: a marked step raises
    both counts by one; an unmarked horizontal step raises only the
    vertical count; an unmarked vertical step raises only the horizontal
    count.
    """
    if not 0 <= m <= len(path.steps):
        raise ValueError(f"step index {m} outside [0, {len(path.steps)}]")
    if Vertex(*path.start) != scheme.base:
        raise ValueError(f"path starts at {tuple(path.start)}, "
                         f"scheme base is {tuple(scheme.base)}")
    p, q = scheme.base
    x, y = scheme.base
    consumed = 0
    for step in path.steps[:m]:
        if step.direction == HORIZONTAL:
            label = _h_label(q, step.edge_index)
            x += 1
        else:
            label = _v_label(p, q, step.edge_index)
            y += 1
        if label is not None:
            consumed |= 1 << (label - 1)
    marked_h = sum(1 for a in range(q + 1) if not consumed >> a & 1)
    marked_v = sum(1 for a in range(q + 1, p + q + 2) if not consumed >> a & 1)
    return (y + 1) - marked_h, (x + 1) - marked_v


def decode(scheme: LabelScheme, code: EncodingSequence) -> EulerPath:
    """Reconstruct the unique path from scheme.base whose encoding is
    `code`.  Requires code.base_level = the base's level; raises
    DecodeError when some symbol matches no edge (the code is not in the
    image of any path from this base)."""
    p, q = scheme.base
    if code.base_level != p + q:
        raise ValueError(f"code was taken at level {code.base_level}, "
                         f"base {tuple(scheme.base)} has level {p + q}")
    x, y = scheme.base
    consumed = 0
    steps: list[Step] = []
    for pos, sym in enumerate(code.symbols, start=1):
        if sym.kind == KIND_MARKED:
            a = sym.index
            if not 1 <= a <= p + q + 2:
                raise DecodeError(f"symbol {pos}: no label s_{a} at a level-"
                                  f"{p + q} base")
            if consumed >> (a - 1) & 1:
                raise DecodeError(f"symbol {pos}: label s_{a} already consumed")
            consumed |= 1 << (a - 1)
            if a <= q + 1:
                steps.append(Step(HORIZONTAL, a))
                x += 1
            else:
                steps.append(Step(VERTICAL, a - (q + 1)))
                y += 1
        elif sym.kind in (KIND_H_UNMARKED, KIND_V_UNMARKED):
            horizontal = sym.kind == KIND_H_UNMARKED
            size = y + 1 if horizontal else x + 1
            labeled = q + 1 if horizontal else p + 1
            first_bit = 0 if horizontal else q + 1
            seen = 0
            idx = None
            for e in range(1, size + 1):
                unmarked = (e > labeled) or bool(consumed >> (first_bit + e - 1) & 1)
                if unmarked:
                    seen += 1
                    if seen == sym.index:
                        idx = e
                        break
            if idx is None:
                raise DecodeError(
                    f"symbol {pos}: only {seen} unmarked "
                    f"{'horizontal' if horizontal else 'vertical'} edges at "
                    f"{(x, y)}, need position {sym.index}")
            if horizontal:
                steps.append(Step(HORIZONTAL, idx))
                x += 1
            else:
                steps.append(Step(VERTICAL, idx))
                y += 1
        else:
            raise DecodeError(f"symbol {pos}: unknown kind {sym.kind!r}")
    return EulerPath(scheme.base, tuple(steps))


def transport(scheme_from: LabelScheme, scheme_to: LabelScheme,
              path: EulerPath) -> EulerPath:
    """decode(scheme_to, encode(scheme_from, path)): carry a path across
    two bases of equal level by matching encoding sequences.

    On good paths this preserves the endpoint and is a bijection between
    the two good-path sets whenever the endpoint satisfies
    i, j >= p+q+2 (same-base transport is the identity at any size).
    Decoding may fail (DecodeError) outside those conditions.
    """
    n_from = scheme_from.base.x + scheme_from.base.y
    n_to = scheme_to.base.x + scheme_to.base.y
    if n_from != n_to:
        raise ValueError(f"bases {tuple(scheme_from.base)} and "
                         f"{tuple(scheme_to.base)} have different levels")
    return decode(scheme_to, encode(scheme_from, path))


def format_code(code: EncodingSequence) -> str:
    """Serialize as 'n=<level>;s1,v1,h2,...' (nothing after the semicolon
    for an empty sequence)."""
    body = ",".join(f"{s.kind}{s.index}" for s in code.symbols)
    return f"n={code.base_level};{body}"


_CODE_RE = re.compile(r"n=(\d+);(.*)", re.DOTALL)
_SYMBOL_RE = re.compile(r"([shv])([1-9]\d*)")


def parse_code(text: str) -> EncodingSequence:
    """Inverse of format_code; raises ValueError on malformed input or on
    repeated s-symbols."""
    m = _CODE_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"malformed code text {text!r}; expected "
                         f"'n=<level>;s1,v1,...'")
    level = int(m.group(1))
    body = m.group(2)
    symbols: list[EncodingSymbol] = []
    seen_s: set[int] = set()
    if body:
        for token in body.split(","):
            sm = _SYMBOL_RE.fullmatch(token.strip())
            if not sm:
                raise ValueError(f"malformed symbol token {token!r} in {text!r}")
            kind, index = sm.group(1), int(sm.group(2))
            if kind == KIND_MARKED:
                if index in seen_s:
                    raise ValueError(f"repeated marked symbol s{index} in {text!r}")
                seen_s.add(index)
            symbols.append(EncodingSymbol(kind, index))
    return EncodingSequence(level, tuple(symbols))
