"""Generalized patterns over {1,2} in dash/bracket notation.

``1-221`` has two blocks; letters inside a block must be adjacent in an
occurrence, a dash allows any gap.  ``[`` pins the first letter of the
occurrence to the first letter of the word, ``]`` pins the last letter to the
last letter of the word; ``(`` and ``)`` mark an unanchored side.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

PATTERN = "pattern"
LITERAL = "literal"

_BODY = re.compile(r"[12]+(?:-[12]+)*\Z")


@dataclass(frozen=True)
class GeneralizedPattern:
    blocks: tuple[str, ...]
    anchored_left: bool = False
    anchored_right: bool = False

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("pattern needs at least one block")
        for b in self.blocks:
            if not b or set(b) - {"1", "2"}:
                raise ValueError(f"invalid block {b!r}")

    @property
    def length(self) -> int:
        return sum(map(len, self.blocks))

    @property
    def anchored(self) -> bool:
        return self.anchored_left or self.anchored_right

    def __str__(self):
        return render_pattern(self)


def parse_pattern(text: str) -> GeneralizedPattern:
    if not text:
        raise ParseError("empty pattern")
    body = text
    left = right = False
    opening = body[0] in "[("
    closing = body[-1] in "])"
    if opening != closing:
        raise ParseError(f"one-sided bracketing in {text!r}")
    if opening:
        if len(body) < 3:
            raise ParseError(f"no blocks inside brackets in {text!r}")
        left = body[0] == "["
        right = body[-1] == "]"
        body = body[1:-1]
    if not _BODY.match(body):
        raise ParseError(f"malformed pattern {text!r}")
    return GeneralizedPattern(tuple(body.split("-")), left, right)


def render_pattern(p: GeneralizedPattern) -> str:
    body = "-".join(p.blocks)
    if not p.anchored:
        return body
    return ("[" if p.anchored_left else "(") + body + ("]" if p.anchored_right else ")")


def as_pattern(p) -> GeneralizedPattern:
    return p if isinstance(p, GeneralizedPattern) else parse_pattern(p)


def expansions(p: GeneralizedPattern) -> list[GeneralizedPattern]:
    """Literal shapes matched by ``p`` under order-isomorphism.

    Over a two-letter alphabet only all-1 patterns are ambiguous: they also
    match the same shape written in 2s.
    """
    if any("2" in b for b in p.blocks):
        return [p]
    twos = tuple(b.replace("1", "2") for b in p.blocks)
    return [p, GeneralizedPattern(twos, p.anchored_left, p.anchored_right)]


def overlaps(u: str, v: str) -> bool:
    """True if some nonempty suffix of ``u`` is a prefix of ``v``."""
    return any(u.endswith(v[:j]) for j in range(1, min(len(u), len(v)) + 1))


def adjacent_nonoverlap(p: GeneralizedPattern) -> bool:
    return not any(overlaps(u, v) for u, v in zip(p.blocks, p.blocks[1:]))
