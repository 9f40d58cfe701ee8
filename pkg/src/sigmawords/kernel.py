"""Kernels of odd-length words and the boundary statistics built on them.

For W = A a B with |A| = |B|, the kernel of order k is the last k-1 letters of
A, the middle letter a and the first k-1 letters of B.  Around the middle of
C_n (resp. D_n) the word looks exactly like D_k 1 C_k (resp. D_k 2 C_k), which
is what lets occurrence counts split into left, right and crossing parts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OddLengthRequired
from .oracle import count_subword, occurrences
from .words import C, D, build_word, as_kind


def clog2(x: int) -> int:
    """Ceiling of log2(x) for x >= 1."""
    if x < 1:
        raise ValueError(f"clog2 needs x >= 1, got {x}")
    return (x - 1).bit_length()


def _check_odd(w: str):
    if len(w) % 2 == 0:
        raise OddLengthRequired(f"kernel needs an odd-length word, got length {len(w)}")


def kernel(w: str, k: int) -> str:
    _check_odd(w)
    if k < 1:
        raise ValueError("kernel order must be >= 1")
    mid = len(w) // 2
    if mid < k - 1:
        return ""
    return w[mid - k + 1 : mid + k]


def boundary_word(sep, k: int) -> str:
    """D_k sep C_k; for k = 0 just the separator."""
    sep = str(sep)
    if sep not in ("1", "2"):
        raise ValueError(f"separator must be 1 or 2, got {sep!r}")
    if k == 0:
        return sep
    return build_word(D, k) + sep + build_word(C, k)


def m_count(k: int, block: str, w: str) -> int:
    """Occurrences of ``block`` inside the order-k kernel of ``w``."""
    core = kernel(w, k)
    return count_subword(core, block) if core else 0


def _spans(w: str, block: str):
    size = len(block)
    return [(s + 1, s + size) for s in occurrences(w, block)]


def overlap_pair_count(w: str, t1: str, t2: str, which: str, k: int) -> int:
    """Pairs of occurrences of t1 and t2 near the middle of ``w`` that collide.

    ``which="r1"``: t1 lies in the order-k kernel, t2 lies right of the middle.
    ``which="r2"``: t1 lies left of the middle, t2 lies in the order-k kernel.
    A pair collides when t2 starts no later than t1 ends.
    """
    _check_odd(w)
    centre = (len(w) + 1) // 2
    lo, hi = centre - k + 1, centre + k - 1
    if lo < 1:
        return 0
    in_kernel = lambda s, e: lo <= s and e <= hi
    first = _spans(w, t1)
    second = _spans(w, t2)
    if which == "r1":
        first = [x for x in first if in_kernel(*x)]
        second = [x for x in second if x[0] > centre]
    elif which == "r2":
        first = [x for x in first if x[1] < centre]
        second = [x for x in second if in_kernel(*x)]
    else:
        raise ValueError(f"which must be 'r1' or 'r2', got {which!r}")
    return sum(1 for _, e1 in first for s2, _ in second if s2 <= e1)


def prefix_overlap(t1: str, t2: str) -> int:
    """Occurrences of t2 in C_l that start within the first |t1| letters.

    l = ceil(log2(|t1|+|t2|+1)), so C_l is long enough to hold both.
    """
    ell = clog2(len(t1) + len(t2) + 1)
    return sum(1 for s in occurrences(build_word(C, ell), t2) if s < len(t1))


def suffix_overlap(t1: str, t2: str, kind: str = C) -> int:
    """Occurrences of t1 in the level-l word that end within its last |t2| letters.

    Every C_n and D_n with n > l ends with D_l, so ``kind="D"`` gives the
    correction that holds for long words; ``kind="C"`` is the literal reading.
    """
    ell = clog2(len(t1) + len(t2) + 1)
    w = build_word(as_kind(kind), ell)
    cut = len(w) - len(t2)
    return sum(1 for s in occurrences(w, t1) if s + len(t1) > cut)


@dataclass(frozen=True)
class KernelStats:
    a_values: tuple[int, ...]
    b_values: tuple[int, ...]
    r_values: dict = field(default_factory=dict)
    ell_values: tuple[int, ...] = ()
    ell: int = 0


def kernel_stats(blocks) -> KernelStats:
    """Boundary counts consumed by the recurrences for a literal block list.

    One block: order |t| kernel of D_k s C_k with k = ceil(log2 |t|).
    Two blocks: order k_i kernels of D_k s C_k with k = ceil(log2(k1+k2-1)),
    plus the four collision counts.  More blocks: block i uses D_l s C_l with
    l = ceil(log2 k_i).
    """
    blocks = tuple(blocks)
    if len(blocks) == 1:
        (t,) = blocks
        k = clog2(len(t))
        a = m_count(len(t), t, boundary_word(1, k))
        b = m_count(len(t), t, boundary_word(2, k))
        return KernelStats((a,), (b,), {}, (k,), k)
    if len(blocks) == 2:
        t1, t2 = blocks
        k = clog2(len(t1) + len(t2) - 1)
        wa, wb = boundary_word(1, k), boundary_word(2, k)
        a = (m_count(len(t1), t1, wa), m_count(len(t2), t2, wa))
        b = (m_count(len(t1), t1, wb), m_count(len(t2), t2, wb))
        r = {
            "r1a": overlap_pair_count(wa, t1, t2, "r1", len(t1)),
            "r2a": overlap_pair_count(wa, t1, t2, "r2", len(t2)),
            "r1b": overlap_pair_count(wb, t1, t2, "r1", len(t1)),
            "r2b": overlap_pair_count(wb, t1, t2, "r2", len(t2)),
        }
        return KernelStats(a, b, r, (k, k), k)
    ells = tuple(clog2(len(t)) for t in blocks)
    a = tuple(m_count(len(t), t, boundary_word(1, l)) for t, l in zip(blocks, ells))
    b = tuple(m_count(len(t), t, boundary_word(2, l)) for t, l in zip(blocks, ells))
    return KernelStats(a, b, {}, ells, max(ells))
