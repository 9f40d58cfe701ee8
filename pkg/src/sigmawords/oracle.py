"""Brute-force occurrence counting on explicit words.

This is the ground truth the recurrences are checked against, so it stays
deliberately simple: find every block occurrence, then count increasing,
non-overlapping selections with a prefix-sum DP.
"""

from __future__ import annotations

from itertools import accumulate

from .patterns import GeneralizedPattern, as_pattern, expansions


def occurrences(w: str, block: str) -> list[int]:
    """0-based start offsets of every (possibly overlapping) occurrence."""
    out = []
    s = w.find(block)
    while s != -1:
        out.append(s)
        s = w.find(block, s + 1)
    return out


def count_subword(w: str, block: str) -> int:
    if not block:
        raise ValueError("block must be nonempty")
    return len(occurrences(w, block))


def count_blocks(w: str, blocks, anchored_left=False, anchored_right=False) -> int:
    """Literal count of ``blocks`` placed left to right in ``w`` without sharing letters."""
    n = len(w)
    # ways[j]: placements of the blocks seen so far using only w[:j]
    ways = [1] * (n + 1)
    last = len(blocks) - 1
    for i, block in enumerate(blocks):
        size = len(block)
        ending = [0] * (n + 1)
        for s in occurrences(w, block):
            if i == 0 and anchored_left and s != 0:
                continue
            if i == last and anchored_right and s + size != n:
                continue
            ending[s + size] += ways[s]
        ways = list(accumulate(ending))
    return ways[n]


def count_generalized(w: str, p: GeneralizedPattern) -> int:
    p = as_pattern(p)
    return count_blocks(w, p.blocks, p.anchored_left, p.anchored_right)


def count_pattern(w: str, p: GeneralizedPattern) -> int:
    p = as_pattern(p)
    return sum(count_generalized(w, q) for q in expansions(p))
