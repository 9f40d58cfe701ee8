"""Cross-check the recurrences against brute force over ranges of n."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from itertools import product

from .errors import Unsupported
from .formulas import formula_count
from .oracle import count_generalized, count_pattern
from .patterns import PATTERN, GeneralizedPattern, as_pattern, render_pattern
from .words import C, D, DEFAULT_CAP, build_word

UNSUPPORTED = "unsupported"
FIELDS = ("pattern", "n", "kind", "method", "count", "agree")


@dataclass(frozen=True)
class CheckRow:
    pattern: str
    n: int
    kind: str
    oracle_count: int
    formula_count: int | None  # None: the engine declined the pattern
    agree: bool
    reason: str = ""

    @property
    def supported(self) -> bool:
        return self.formula_count is not None

    @property
    def status(self) -> str:
        if not self.supported:
            return UNSUPPORTED
        return "agree" if self.agree else "mismatch"


def _oracle(w: str, p: GeneralizedPattern, semantics: str) -> int:
    return count_pattern(w, p) if semantics == PATTERN else count_generalized(w, p)


def cross_check(p, n_min: int, n_max: int, semantics: str = PATTERN,
                printed: bool = False, cap: int = DEFAULT_CAP) -> list[CheckRow]:
    p = as_pattern(p)
    if n_min > n_max:
        raise ValueError(f"n_min={n_min} > n_max={n_max}")
    if n_min < 1:
        raise ValueError("n_min must be >= 1")
    text = render_pattern(p)
    rows = []
    for n in range(n_min, n_max + 1):
        words = {C: build_word(C, n, cap), D: build_word(D, n, cap)}
        try:
            f = formula_count(p, n, semantics, printed)
            reason = ""
        except Unsupported as exc:
            f, reason = None, f"{type(exc).__name__}: {exc}"
        for kind in (C, D):
            o = _oracle(words[kind], p, semantics)
            fv = None if f is None else f[kind]
            rows.append(CheckRow(text, n, kind, o, fv, fv == o, reason))
    return rows


def check_patterns(patterns, n_min: int, n_max: int, semantics: str = PATTERN,
                   printed: bool = False, cap: int = DEFAULT_CAP) -> list[CheckRow]:
    """Rows for several patterns, ordered by (n, kind, input order)."""
    keyed = []
    for i, p in enumerate(patterns):
        for row in cross_check(p, n_min, n_max, semantics, printed, cap):
            keyed.append(((row.n, row.kind, i), row))
    keyed.sort(key=lambda x: x[0])
    return [row for _, row in keyed]


def dashless_patterns(max_len: int) -> list[str]:
    return ["".join(t) for size in range(1, max_len + 1) for t in product("12", repeat=size)]


def sweep_dashless(max_len: int, n_max: int, printed: bool = False,
                   cap: int = DEFAULT_CAP) -> list[CheckRow]:
    return check_patterns(dashless_patterns(max_len), 1, n_max, PATTERN, printed, cap)


def all_agree(rows) -> bool:
    return all(r.agree for r in rows)


def write_csv(rows, fh):
    """Two lines per row: the oracle count and the formula count."""
    out = csv.writer(fh, lineterminator="\n")
    out.writerow(FIELDS)
    for r in rows:
        flag = "true" if r.agree else "false"
        out.writerow([r.pattern, r.n, r.kind, "oracle", r.oracle_count, flag])
        fc = UNSUPPORTED if r.formula_count is None else r.formula_count
        out.writerow([r.pattern, r.n, r.kind, "formula", fc, flag])


def row_object(r: CheckRow) -> dict:
    return {
        "pattern": r.pattern,
        "n": r.n,
        "kind": r.kind,
        "oracle": str(r.oracle_count),
        "formula": UNSUPPORTED if r.formula_count is None else str(r.formula_count),
        "agree": r.agree,
        "status": r.status,
    }


def write_jsonl(rows, fh):
    for r in rows:
        fh.write(json.dumps(row_object(r), sort_keys=True) + "\n")
