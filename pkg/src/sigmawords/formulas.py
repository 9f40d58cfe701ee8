"""Closed forms and recurrences for occurrence counts in C_n and D_n.

Every count here is an exact integer.  Small n (below each recurrence's
threshold) is seeded from the oracle on explicit words; above it nothing is
materialized except the short boundary, head and tail words.

Internally patterns are literal: a tuple of block strings.  The public entry
points apply pattern semantics by summing over ``expansions``.

``printed=True`` switches to the simplified forms: the collision term of the
two-block recurrence multiplied by the neighbouring count, no correction for
a block nested inside a block that covers the middle letter, and anchor tests
against C_l / D_l at the anchored block's own level.  These disagree with
brute force on some patterns and are kept so the disagreement can be
reported.  The default computes the same decompositions with every boundary
correction counted exactly; it needs no disjointness assumption on the blocks.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import DomainError, OverlapAtAnchor, OverlappingBlocks
from .kernel import boundary_word, clog2, kernel_stats, prefix_overlap, suffix_overlap
from .oracle import count_blocks, occurrences
from .patterns import (
    LITERAL,
    PATTERN,
    GeneralizedPattern,
    adjacent_nonoverlap,
    as_pattern,
    expansions,
    overlaps,
)
from .words import C, D, as_kind, build_word


@dataclass(frozen=True)
class CountPair:
    n: int
    c: int
    d: int

    def __getitem__(self, kind):
        return self.c if as_kind(kind) == C else self.d

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError("cannot add counts for different n")
        return CountPair(self.n, self.c + other.c, self.d + other.d)


@dataclass(frozen=True)
class RecurrenceState:
    """(c_n, d_n) = (c+d+alpha_n, c+d+beta_n), started from ``base`` at ``base_n``."""

    base_n: int
    base: CountPair
    inhomogeneous: Callable[[int], tuple[int, int]]


def evaluate_recurrence(state: RecurrenceState, n: int) -> CountPair:
    if n < state.base_n:
        raise DomainError(f"n={n} is below the base case n={state.base_n}")
    c, d = state.base.c, state.base.d
    for m in range(state.base_n + 1, n + 1):
        alpha, beta = state.inhomogeneous(m)
        s = c + d
        c, d = s + alpha, s + beta
    return CountPair(n, c, d)


LetterCounts = namedtuple("LetterCounts", "c_ones c_twos d_ones d_twos")
ConstantCounts = namedtuple("ConstantCounts", "ones_subseq twos_subseq pattern_total")


def letter_counts(n: int) -> LetterCounts:
    if n < 1:
        raise DomainError("n must be >= 1")
    h = 2 ** (n - 1)
    return LetterCounts(h, h - 1, h - 1, h)


def constant_pattern_count(n: int, k: int) -> ConstantCounts:
    """Occurrences of 1-1-...-1 (k letters) in C_n: C(2^{n-1}, k) + C(2^{n-1}-1, k)."""
    if n < 1 or k < 1:
        raise DomainError("n and k must be >= 1")
    h = 2 ** (n - 1)
    ones, twos = comb(h, k), comb(h - 1, k)
    return ConstantCounts(ones, twos, ones + twos)


def order2_count(n: int, which: str) -> CountPair:
    """Closed forms for the subsequences 1-2 and 2-1; c_n = d_n for both."""
    if n < 2:
        raise DomainError("order2_count needs n >= 2")
    which = which.replace("-", "")
    q = 2 ** (n - 2)
    if which == "12":
        v = 2 * q * q + (n - 2) * q
    elif which == "21":
        v = 2 * q * q - n * q
    else:
        raise ValueError(f"which must be 12 or 21, got {which!r}")
    return CountPair(n, v, v)


def _oracle_pair(blocks, n, left=False, right=False) -> CountPair:
    return CountPair(
        n,
        count_blocks(build_word(C, n), blocks, left, right),
        count_blocks(build_word(D, n), blocks, left, right),
    )


# --- unanchored literal counts ------------------------------------------------


@lru_cache(maxsize=None)
def _single(block: str, n: int) -> CountPair:
    k = clog2(len(block))
    if n <= k + 1:
        return _oracle_pair((block,), n)
    st = kernel_stats((block,))
    a, b = st.a_values[0], st.b_values[0]
    base = _oracle_pair((block,), k + 1)
    total = (a + b + base.c + base.d) * 2 ** (n - k - 2)
    return CountPair(n, total - b, total - a)


def _two_seed(t1: str, t2: str) -> int:
    k = clog2(len(t1) + len(t2) - 1)
    n1, n2 = clog2(len(t1)) + 1, clog2(len(t2)) + 1
    return max(k + 1, n1 + 1, n2 + 1)


@lru_cache(maxsize=None)
def _two_state(t1: str, t2: str, printed: bool) -> RecurrenceState:
    st = kernel_stats((t1, t2))
    a1, a2 = st.a_values
    b1, b2 = st.b_values
    r = st.r_values

    def step(m):
        c1 = _single(t1, m - 1).c
        d2 = _single(t2, m - 1).d
        if printed:
            alpha = (c1 + a1 - r["r1a"]) * d2 + (a2 - r["r2a"]) * c1
            beta = (c1 + b1 - r["r1b"]) * d2 + (b2 - r["r2b"]) * c1
        else:
            alpha = c1 * d2 + a1 * d2 + a2 * c1 - r["r1a"] - r["r2a"]
            beta = c1 * d2 + b1 * d2 + b2 * c1 - r["r1b"] - r["r2b"]
        return alpha, beta

    seed = _two_seed(t1, t2)
    return RecurrenceState(seed, _oracle_pair((t1, t2), seed), step)


@lru_cache(maxsize=None)
def _two(t1: str, t2: str, n: int, printed: bool) -> CountPair:
    state = _two_state(t1, t2, printed)
    if n <= state.base_n:
        return _oracle_pair((t1, t2), n)
    return evaluate_recurrence(state, n)


def _multi_seed(blocks, printed: bool) -> int:
    if printed:
        return max(clog2(len(t)) for t in blocks) + 1
    return clog2(sum(map(len, blocks)) + 1) + 1


@lru_cache(maxsize=None)
def _multi_state(blocks: tuple, printed: bool) -> RecurrenceState:
    k = len(blocks)
    st = kernel_stats(blocks)
    m = _multi_seed(blocks, printed) - 1

    def cnt(part, n, kind):
        return _literal(part, n, printed)[kind] if part else 1

    def crossing_exact(n, sep):
        w = boundary_word(sep, m)
        centre = 2**m
        total = 0
        for i, t in enumerate(blocks):
            for s0 in occurrences(w, t):
                s, e = s0 + 1, s0 + len(t)
                if s <= centre <= e:
                    total += _left(blocks[:i], C, n - 1, centre - s) * _right(
                        blocks[i + 1 :], D, n - 1, e - centre
                    )
        return total

    def step(n):
        split = sum(cnt(blocks[:i], n - 1, C) * cnt(blocks[i:], n - 1, D) for i in range(1, k))
        if printed:
            side = [cnt(blocks[:i], n - 1, C) * cnt(blocks[i + 1 :], n - 1, D) for i in range(k)]
            alpha = split + sum(a * x for a, x in zip(st.a_values, side))
            beta = split + sum(b * x for b, x in zip(st.b_values, side))
        else:
            alpha = split + crossing_exact(n, 1)
            beta = split + crossing_exact(n, 2)
        return alpha, beta

    seed = m + 1
    return RecurrenceState(seed, _oracle_pair(blocks, seed), step)


@lru_cache(maxsize=None)
def _multi(blocks: tuple, n: int, printed: bool) -> CountPair:
    state = _multi_state(blocks, printed)
    if n <= state.base_n:
        return _oracle_pair(blocks, n)
    return evaluate_recurrence(state, n)


def _literal(blocks: tuple, n: int, printed: bool = False) -> CountPair:
    """Unanchored literal counts in C_n and D_n."""
    if len(blocks) == 1:
        return _single(blocks[0], n)
    if len(blocks) == 2:
        return _two(blocks[0], blocks[1], n, printed)
    if printed and not adjacent_nonoverlap(GeneralizedPattern(blocks)):
        raise OverlappingBlocks(
            f"adjacent blocks of {'-'.join(blocks)} overlap; the printed recurrence needs them disjoint"
        )
    return _multi(blocks, n, printed)


# --- counts with forbidden head/tail regions ---------------------------------
#
# Valid once the word is long enough that C_n and D_n both start with the head
# window C_j and end with the tail window D_j used below (n > j).


def _left(blocks: tuple, kind: str, n: int, t: int) -> int:
    """Occurrences whose last block ends before the final ``t`` letters."""
    if not blocks:
        return 1
    total = _literal(blocks, n)[kind]
    if t == 0:
        return total
    tail = build_word(D, clog2(t + sum(map(len, blocks)) + 1) or 1)
    last = blocks[-1]
    cut = len(tail) - t
    for s0 in occurrences(tail, last):
        if s0 + len(last) > cut:
            total -= _left(blocks[:-1], kind, n, len(tail) - s0)
    return total


def _window(blocks: tuple, kind: str, n: int, p: int, q: int) -> int:
    """Occurrences starting after the first ``p`` letters and ending before the last ``q``."""
    if not blocks:
        return 1
    total = _left(blocks, kind, n, q)
    if p == 0:
        return total
    head = build_word(C, clog2(p + q + sum(map(len, blocks)) + 1) or 1)
    first = blocks[0]
    for s0 in occurrences(head, first):
        if s0 < p:
            total -= _window(blocks[1:], kind, n, s0 + len(first), q)
    return total


def _right(blocks: tuple, kind: str, n: int, t: int) -> int:
    """Occurrences whose first block starts after the first ``t`` letters."""
    return _window(blocks, kind, n, t, 0)


# --- anchored ------------------------------------------------------------------


def _anchored_exact(p: GeneralizedPattern, n: int) -> CountPair:
    blocks = p.blocks
    m = clog2(p.length + 1)
    if n <= m:
        return _oracle_pair(blocks, n, p.anchored_left, p.anchored_right)
    if len(blocks) == 1 and p.anchored_left and p.anchored_right:
        return CountPair(n, 0, 0)  # the word is longer than the block
    head, tail = build_word(C, m), build_word(D, m)
    inner, lo, hi = blocks, 0, 0
    if p.anchored_left:
        if not head.startswith(inner[0]):
            return CountPair(n, 0, 0)
        lo, inner = len(inner[0]), inner[1:]
    if p.anchored_right:
        if not tail.endswith(inner[-1]):
            return CountPair(n, 0, 0)
        hi, inner = len(inner[-1]), inner[:-1]
    if len(blocks) == 2 and not (p.anchored_left and p.anchored_right):
        # two blocks reduce to a single count minus a fixed head/tail correction
        t1, t2 = blocks
        if p.anchored_left:
            fix = prefix_overlap(t1, t2)
            return CountPair(n, _single(t2, n).c - fix, _single(t2, n).d - fix)
        fix = suffix_overlap(t1, t2, D)
        return CountPair(n, _single(t1, n).c - fix, _single(t1, n).d - fix)
    return CountPair(n, _window(inner, C, n, lo, hi), _window(inner, D, n, lo, hi))


def _anchored_printed(p: GeneralizedPattern, n: int) -> CountPair:
    blocks = p.blocks
    if len(blocks) == 1:
        return _anchored_exact(p, n)
    first, last = blocks[0], blocks[-1]
    l1 = clog2(len(first) + 1)
    lk = clog2(len(last) + 1)
    both = p.anchored_left and p.anchored_right
    if len(blocks) == 2:
        ell = clog2(len(first) + len(last) + 1)
    else:
        ell = max(l1, lk)
        if p.anchored_left and overlaps(first, blocks[1]):
            raise OverlapAtAnchor(f"{first} overlaps {blocks[1]} at the left anchor")
        if p.anchored_right and overlaps(blocks[-2], last):
            raise OverlapAtAnchor(f"{blocks[-2]} overlaps {last} at the right anchor")
    if n <= max(l1, lk, ell):
        return _oracle_pair(blocks, n, p.anchored_left, p.anchored_right)

    def value(kind):
        if both:
            w = build_word(kind, ell)
            ok = w.startswith(first) and w.endswith(last)
            if not ok:
                return 0
            return 1 if len(blocks) == 2 else _literal(blocks[1:-1], n, True)[kind]
        if p.anchored_left:
            if not build_word(kind, l1).startswith(first):
                return 0
            if len(blocks) == 2:
                return _single(last, n)[kind] - prefix_overlap(first, last)
            return _literal(blocks[1:], n, True)[kind]
        if not build_word(kind, lk).endswith(last):
            return 0
        if len(blocks) == 2:
            return _single(first, n)[kind] - suffix_overlap(first, last, C)
        return _literal(blocks[:-1], n, True)[kind]

    return CountPair(n, value(C), value(D))


# --- public entry points ---------------------------------------------------------


def _literals(p, semantics: str):
    p = as_pattern(p)
    if semantics == PATTERN:
        return expansions(p)
    if semantics == LITERAL:
        return [p]
    raise ValueError(f"semantics must be 'pattern' or 'literal', got {semantics!r}")


def _summed(p, n, semantics, fn) -> CountPair:
    if n < 1:
        raise DomainError("n must be >= 1")
    out = CountPair(n, 0, 0)
    for q in _literals(p, semantics):
        out = out + fn(q)
    return out


def dashless_count(p, n: int, semantics: str = PATTERN) -> CountPair:
    p = as_pattern(p)
    if len(p.blocks) != 1 or p.anchored:
        raise DomainError(f"{p} is not a single unanchored block")
    return _summed(p, n, semantics, lambda q: _single(q.blocks[0], n))


def two_block_count(p, n: int, semantics: str = PATTERN, printed: bool = False) -> CountPair:
    p = as_pattern(p)
    if len(p.blocks) != 2 or p.anchored:
        raise DomainError(f"{p} is not an unanchored two-block pattern")
    return _summed(p, n, semantics, lambda q: _two(*q.blocks, n, printed))


def multi_block_count(p, n: int, semantics: str = PATTERN, printed: bool = False) -> CountPair:
    p = as_pattern(p)
    if len(p.blocks) < 3 or p.anchored:
        raise DomainError(f"{p} is not an unanchored pattern with three or more blocks")
    if printed and not adjacent_nonoverlap(p):
        raise OverlappingBlocks(f"adjacent blocks of {p} overlap; the printed recurrence needs them disjoint")
    return _summed(p, n, semantics, lambda q: _multi(q.blocks, n, printed))


def anchored_count(p, n: int, semantics: str = PATTERN, printed: bool = False) -> CountPair:
    p = as_pattern(p)
    if not p.anchored:
        raise DomainError(f"{p} has no anchor")
    fn = _anchored_printed if printed else _anchored_exact
    return _summed(p, n, semantics, lambda q: fn(q, n))


def formula_count(p, n: int, semantics: str = PATTERN, printed: bool = False) -> CountPair:
    """Dispatch to the recurrence matching the pattern's shape.

    Raises an ``Unsupported`` subclass when no recurrence applies.
    """
    p = as_pattern(p)
    if p.anchored:
        return anchored_count(p, n, semantics, printed)
    if len(p.blocks) == 1:
        return dashless_count(p, n, semantics)
    if len(p.blocks) == 2:
        return two_block_count(p, n, semantics, printed)
    return multi_block_count(p, n, semantics, printed)
