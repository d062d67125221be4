"""Polynomial-time solvers for segment-budgeted subsequence matching.

``min_segments`` runs a block-deletion dynamic program over two cost tables
D and E, where D tracks states that just deleted a text symbol. The f <= 2
decision runs in linear time from two automaton passes, keeping only the
breakpoints of the running-maximum prefix array between them.
"""

from __future__ import annotations

from .core import as_text, check_budget

ALGORITHMS = ("auto", "dp", "kmp2")


def min_segments(t: bytes | str, p: bytes | str) -> int | None:
    """Smallest f making ``p`` an f-segmental subsequence of ``t``.

    Computes d+1 where d is the cheapest way to delete blocks from ``t`` to
    leave ``p``, with free prefix/suffix deletion and unit cost for opening
    each interior block. None when ``p`` is not a subsequence of ``t``.
    """
    t, p = as_text(t), as_text(p)
    n, m = len(t), len(p)
    if m == 0:
        return 1
    inf = n + m + 1
    d_prev = [0] + [inf] * m
    e_prev = [0] + [inf] * m
    best = inf
    for i in range(1, n + 1):
        ti = t[i - 1]
        d_cur = [0] * (m + 1)
        e_cur = [0] * (m + 1)
        for j in range(1, m + 1):
            opened = e_prev[j] + 1 if e_prev[j] < inf else inf
            d = d_prev[j] if d_prev[j] < opened else opened
            d_cur[j] = d
            if ti == p[j - 1] and e_prev[j - 1] < d:
                e_cur[j] = e_prev[j - 1]
            else:
                e_cur[j] = d
        if e_cur[m] < best:
            best = e_cur[m]
        d_prev, e_prev = d_cur, e_cur
    return best + 1 if best < inf else None


def min_segments_tables(
    t: bytes | str, p: bytes | str
) -> tuple[list[list[int]], list[list[int]]]:
    """Full D and E cost tables (debug mode; the solver keeps two rows)."""
    t, p = as_text(t), as_text(p)
    n, m = len(t), len(p)
    inf = n + m + 1
    D = [[0] * (m + 1) for _ in range(n + 1)]
    E = [[0] * (m + 1) for _ in range(n + 1)]
    for j in range(1, m + 1):
        D[0][j] = E[0][j] = inf
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            opened = E[i - 1][j] + 1 if E[i - 1][j] < inf else inf
            D[i][j] = min(D[i - 1][j], opened)
            if t[i - 1] == p[j - 1]:
                E[i][j] = min(E[i - 1][j - 1], D[i][j])
            else:
                E[i][j] = D[i][j]
    return D, E


def format_cost_tables(D: list[list[int]], E: list[list[int]]) -> str:
    """Tab-separated dump of the D and E tables with ``inf`` sentinels."""
    n, m = len(D) - 1, len(D[0]) - 1
    inf = n + m + 1

    def rows(table: list[list[int]]) -> str:
        return "\n".join(
            "\t".join("inf" if v >= inf else str(v) for v in row) for row in table
        )

    return f"D\n{rows(D)}\nE\n{rows(E)}\n"


class KmpAutomaton:
    """Failure-function automaton reporting, per fed symbol, the length of the
    longest pattern prefix ending there (restart-on-full-match semantics)."""

    def __init__(self, pattern: bytes | str):
        self.pattern = as_text(pattern)
        m = len(self.pattern)
        fail = [0] * (m + 1)
        k = 0
        for q in range(1, m):
            c = self.pattern[q]
            while k and self.pattern[k] != c:
                k = fail[k]
            if self.pattern[k] == c:
                k += 1
            fail[q + 1] = k
        self.fail = fail

    def step(self, state: int, symbol: int) -> int:
        pattern = self.pattern
        m = len(pattern)
        if m == 0:
            return 0
        if state == m:
            state = self.fail[m]
        while state and pattern[state] != symbol:
            state = self.fail[state]
        return state + 1 if pattern[state] == symbol else 0


def compute_lpf(t: bytes | str, p: bytes | str) -> list[int]:
    """lpf[i]: length of the longest prefix of ``p`` ending at text position i
    (returned 0-based, value for position i at index i-1)."""
    t, p = as_text(t), as_text(p)
    auto = KmpAutomaton(p)
    out = []
    state = 0
    for c in t:
        state = auto.step(state, c)
        out.append(state)
    return out


def compute_lsf(t: bytes | str, p: bytes | str) -> list[int]:
    """lsf[i]: length of the longest suffix of ``p`` starting at position i,
    streamed right to left through the automaton of the reversed pattern."""
    t, p = as_text(t), as_text(p)
    auto = KmpAutomaton(p[::-1])
    out = [0] * len(t)
    state = 0
    for i in range(len(t) - 1, -1, -1):
        state = auto.step(state, t[i])
        out[i] = state
    return out


def llpf_breakpoints(lpf: list[int]) -> list[tuple[int, int]]:
    """(position, value) pairs where the running maximum of lpf strictly
    increases; at most |p|+1 entries since values range over 0..|p|."""
    breakpoints = []
    top = 0
    for idx, value in enumerate(lpf, start=1):
        if value > top:
            top = value
            breakpoints.append((idx, value))
    return breakpoints


def llpf_from_breakpoints(breakpoints: list[tuple[int, int]], n: int) -> list[int]:
    """Reconstruct the full llpf array from its breakpoints."""
    out = [0] * n
    value = 0
    k = 0
    for i in range(1, n + 1):
        if k < len(breakpoints) and breakpoints[k][0] == i:
            value = breakpoints[k][1]
            k += 1
        out[i - 1] = value
    return out


def seg2_linear(t: bytes | str, p: bytes | str) -> bool:
    """Decide membership with at most two segments in O(n+m) time, O(m) space.

    Pass 1 streams the prefix automaton and stores only llpf breakpoints;
    pass 2 streams suffix lengths right to left and stops at the first
    position where llpf[i-1] + lsf[i] covers the whole pattern.
    """
    t, p = as_text(t), as_text(p)
    n, m = len(t), len(p)
    if m == 0:
        return True
    if n == 0:
        return False
    auto = KmpAutomaton(p)
    breakpoints: list[tuple[int, int]] = []
    top = 0
    state = 0
    for idx in range(1, n + 1):
        state = auto.step(state, t[idx - 1])
        if state > top:
            top = state
            breakpoints.append((idx, state))
    if top >= m:  # the pattern occurs as a factor
        return True
    reverse_auto = KmpAutomaton(p[::-1])
    state = 0
    k = len(breakpoints) - 1
    for i in range(n, 1, -1):
        state = reverse_auto.step(state, t[i - 1])
        while k >= 0 and breakpoints[k][0] > i - 1:
            k -= 1
        left = breakpoints[k][1] if k >= 0 else 0
        if left + state >= m:
            return True
    return False


def sege(t: bytes | str, p: bytes | str, f: int, algo: str = "auto") -> bool:
    """Decide whether ``p`` embeds into ``t`` with at most ``f`` segments."""
    check_budget(f)
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    t, p = as_text(t), as_text(p)
    if algo == "kmp2" and f > 2:
        raise ValueError("the linear-time path only decides budgets f <= 2")
    if algo == "kmp2" or (algo == "auto" and f <= 2):
        if f == 1:
            return p in t
        return seg2_linear(t, p)
    needed = min_segments(t, p)
    return needed is not None and needed <= f
