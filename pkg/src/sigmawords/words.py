"""Sigma-words C_n, D_n and the infinite sigma-sequence.

Words are plain ``str`` objects over the characters ``'1'`` and ``'2'``.
Positions are 1-based at every public interface.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapExceeded

DEFAULT_CAP = 2**26 - 1

ALPHABET = frozenset("12")

C = "C"
D = "D"


def as_kind(kind: str) -> str:
    k = str(kind).upper()
    if k not in (C, D):
        raise ValueError(f"word kind must be C or D, got {kind!r}")
    return k


def as_word(text: str) -> str:
    """Validate a binary word given as text."""
    if not set(text) <= ALPHABET:
        bad = sorted(set(text) - ALPHABET)
        raise ValueError(f"word contains symbols outside {{1,2}}: {bad}")
    return text


@lru_cache(maxsize=32)
def _pair(n: int) -> tuple[str, str]:
    if n == 1:
        return "1", "2"
    c, d = _pair(n - 1)
    return c + "1" + d, c + "2" + d


def build_word(kind: str, n: int, cap: int = DEFAULT_CAP) -> str:
    """Return C_n or D_n, built by C_{k+1} = C_k 1 D_k, D_{k+1} = C_k 2 D_k."""
    kind = as_kind(kind)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if 2**n - 1 > cap:
        raise CapExceeded(f"|{kind}_{n}| = 2^{n}-1 exceeds cap {cap}")
    c, d = _pair(n)
    return c if kind == C else d


def word_length(n: int) -> int:
    return 2**n - 1 if n >= 1 else 0


def sigma_letter(i: int) -> int:
    """Letter i (1-based) of the sigma-sequence.

    Write i = 2^t (4s + r) with r odd; the letter is 1 when r = 1 and 2 when r = 3.
    """
    if i < 1:
        raise ValueError(f"position must be >= 1, got {i}")
    odd = i // (i & -i)
    return 1 if odd & 3 == 1 else 2


def build_prefix(length: int, cap: int = DEFAULT_CAP) -> str:
    """First ``length`` letters of the sigma-sequence."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length > cap:
        raise CapExceeded(f"prefix length {length} exceeds cap {cap}")
    if length == 0:
        return ""
    n = length.bit_length()  # 2^n - 1 >= length
    if 2**n - 1 <= cap:
        return build_word(C, n, cap)[:length]
    return "".join("1" if sigma_letter(i) == 1 else "2" for i in range(1, length + 1))

