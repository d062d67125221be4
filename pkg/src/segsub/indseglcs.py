"""Longest common subsequence under independent per-text segment budgets.

The solver keeps four tables indexed by a per-side state symbol: B (any
embedding) or F (last segment pinned to the prefix end) when the budget is
small, and their score-threshold analogues SB / SF when the budget is close
to half the text length. A side's fourth table axis is then either the
remaining segment allowance or the factorization score still owed, whichever
is smaller, which keeps the table narrow at both budget extremes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import as_text, check_budget

NEG_INF = float("-inf")

_COUNT_SYMBOLS = ("B", "F")
_SCORE_SYMBOLS = ("SB", "SF")

FAMILIES = ("count", "score")


def segmentation_score(parts: list[bytes | str]) -> int:
    """Score of a text factorization: |w0| + sum(|wi| - 1) over the rest."""
    coerced = [as_text(w) for w in parts]
    if not coerced:
        raise ValueError("a factorization has at least its leading piece")
    return len(coerced[0]) + sum(len(w) - 1 for w in coerced[1:])


@dataclass(frozen=True)
class SideConfig:
    """Per-text solve parameters after budget clamping and family selection."""

    n: int
    f: int
    family: str
    g: int


def side_config(n: int, f: int, force_family: str | None = None) -> SideConfig:
    """Clamp the budget to ceil(n/2) and pick the narrower table family.

    The count family is chosen when f <= max(0, n - 2f) (ties to count),
    i.e. roughly f <= n/3; otherwise the score family, whose axis spans the
    still-needed score 0..n-2f.
    """
    check_budget(f)
    f = max(1, min(f, (n + 1) // 2)) if n else 1
    score_span = max(0, n - 2 * f)
    if force_family is not None:
        if force_family not in FAMILIES:
            raise ValueError(f"unknown table family {force_family!r}")
        family = force_family
    else:
        family = "count" if f <= score_span else "score"
    return SideConfig(n, f, family, f if family == "count" else score_span)


def _phi(x: str, p: int) -> tuple[tuple[str, int], ...]:
    # predecessor states when the new text symbol is left unused
    if x == "B":
        return (("B", p), ("F", p))
    if x == "F":
        return (("B", p - 1), ("F", p - 1)) if p > 0 else ()
    if x == "SB":
        if p > 0:
            return (("SB", p - 1), ("SF", p))
        return (("SB", 0), ("SF", 0))
    return ()  # SF requires the last symbol


def _psi(x: str, p: int) -> tuple[tuple[str, int], ...]:
    # predecessor states when the new text symbol extends the subsequence
    if x == "B":
        return (("B", p - 1), ("F", p - 1)) if p > 0 else ()
    if x == "F":
        return (("B", p - 1), ("F", p)) if p > 0 else ()
    if x == "SB":
        return ()
    if p > 0:
        return (("SB", p), ("SF", p - 1))
    return (("SB", 0), ("SF", 0))


def _init_q(x: str, p: int, i: int) -> float:
    # does the empty string belong to the side's set at prefix length i?
    if x == "B":
        return 0
    if x == "F":
        return 0 if p > 0 else NEG_INF
    if x == "SB":
        return 0 if p <= i else NEG_INF
    return NEG_INF


def indseglcs(
    t1: bytes | str,
    t2: bytes | str,
    f1: int,
    f2: int,
    force_family: str | None = None,
) -> int:
    """Length of the longest string within both per-text segment budgets."""
    t1, t2 = as_text(t1), as_text(t2)
    cfg1 = side_config(len(t1), f1, force_family)
    cfg2 = side_config(len(t2), f2, force_family)
    return solve(t1, t2, cfg1, cfg2)


def solve(t1: bytes, t2: bytes, cfg1: SideConfig, cfg2: SideConfig) -> int:
    """Fill the four tables for the given side configurations."""
    n1, n2 = len(t1), len(t2)
    g1, g2 = cfg1.g, cfg2.g
    sym1 = _COUNT_SYMBOLS if cfg1.family == "count" else _SCORE_SYMBOLS
    sym2 = _COUNT_SYMBOLS if cfg2.family == "count" else _SCORE_SYMBOLS
    keys = [(x1, x2) for x1 in sym1 for x2 in sym2]

    def boundary(key, i1, i2):
        x1, x2 = key
        return [
            [
                min(_init_q(x1, p1, i1), _init_q(x2, p2, i2))
                for p2 in range(g2 + 1)
            ]
            for p1 in range(g1 + 1)
        ]

    # transition fan-ins are the same at every (i1, i2); tabulate them once
    plans = {}
    for key in keys:
        x1, x2 = key
        cells = []
        for p1 in range(g1 + 1):
            phi1 = tuple(((y1, x2), q1) for y1, q1 in _phi(x1, p1))
            psi1 = _psi(x1, p1)
            for p2 in range(g2 + 1):
                phi2 = tuple(((x1, y2), q2) for y2, q2 in _phi(x2, p2))
                diag = tuple(
                    ((y1, y2), q1, q2)
                    for y1, q1 in psi1
                    for y2, q2 in _psi(x2, p2)
                )
                cells.append((p1, p2, phi2, phi1, diag))
        plans[key] = cells

    prev = {key: [boundary(key, 0, i2) for i2 in range(n2 + 1)] for key in keys}
    cur = prev
    for i1 in range(1, n1 + 1):
        c1 = t1[i1 - 1]
        cur = {key: [boundary(key, i1, 0)] for key in keys}
        for i2 in range(1, n2 + 1):
            match = c1 == t2[i2 - 1]
            for key in keys:
                plane = [[NEG_INF] * (g2 + 1) for _ in range(g1 + 1)]
                for p1, p2, phi2, phi1, diag in plans[key]:
                    best = NEG_INF
                    for src, q2 in phi2:
                        v = cur[src][i2 - 1][p1][q2]
                        if v > best:
                            best = v
                    for src, q1 in phi1:
                        v = prev[src][i2][q1][p2]
                        if v > best:
                            best = v
                    if match:
                        for src, q1, q2 in diag:
                            v = prev[src][i2 - 1][q1][q2]
                            if v != NEG_INF and v + 1 > best:
                                best = v + 1
                    plane[p1][p2] = best
                cur[key].append(plane)
        prev = cur
    best = max(cur[key][n2][g1][g2] for key in keys)
    return int(best) if best != NEG_INF else 0
