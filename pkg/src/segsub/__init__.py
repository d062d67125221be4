"""Segment-budgeted subsequence matching and segmental LCS solvers."""

from .core import (
    Embedding,
    Segmentation,
    as_text,
    check_budget,
    is_segmental_subsequence,
    verify_embedding,
)
from .indseglcs import indseglcs, segmentation_score, side_config
from .lce import LcsufIndex, build as build_lcsuf_index
from .oracle import (
    OracleLimitError,
    episode_bruteforce,
    indseglcs_bruteforce,
    min_segments_bruteforce,
    slcs_bruteforce,
)
from .reduction import build_episode_reduction, check_reduction_equivalence
from .segmatch import (
    compute_lpf,
    compute_lsf,
    min_segments,
    seg2_linear,
    sege,
)
from .seglcs import (
    SolveStats,
    slcs_baseline,
    slcs_diagonal,
    slcs_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Embedding",
    "LcsufIndex",
    "OracleLimitError",
    "Segmentation",
    "SolveStats",
    "as_text",
    "build_episode_reduction",
    "build_lcsuf_index",
    "check_budget",
    "check_reduction_equivalence",
    "compute_lpf",
    "compute_lsf",
    "episode_bruteforce",
    "indseglcs",
    "indseglcs_bruteforce",
    "is_segmental_subsequence",
    "min_segments",
    "min_segments_bruteforce",
    "seg2_linear",
    "sege",
    "segmentation_score",
    "side_config",
    "slcs_baseline",
    "slcs_bruteforce",
    "slcs_diagonal",
    "slcs_witness",
    "verify_embedding",
]
