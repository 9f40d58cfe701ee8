"""Exact pattern counting in Evdokimov's sigma-words (dragon-curve words)."""

from .errors import (
    CapExceeded,
    DomainError,
    OddLengthRequired,
    OverlapAtAnchor,
    OverlappingBlocks,
    ParseError,
    Unsupported,
)
from .formulas import (
    CountPair,
    RecurrenceState,
    anchored_count,
    constant_pattern_count,
    dashless_count,
    evaluate_recurrence,
    formula_count,
    letter_counts,
    multi_block_count,
    order2_count,
    two_block_count,
)
from .kernel import (
    KernelStats,
    boundary_word,
    kernel,
    kernel_stats,
    m_count,
    overlap_pair_count,
    prefix_overlap,
    suffix_overlap,
)
from .oracle import count_generalized, count_pattern, count_subword
from .patterns import (
    GeneralizedPattern,
    adjacent_nonoverlap,
    expansions,
    parse_pattern,
    render_pattern,
)
from .verify import CheckRow, cross_check, sweep_dashless
from .words import build_prefix, build_word, sigma_letter

__version__ = "0.1.0"
