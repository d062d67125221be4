"""Shared test oracles kept independent of the solvers they check."""

from __future__ import annotations

import random

from segsub.seglcs import chain_table


def random_text(rng: random.Random, max_len: int, alphabet: int = 3) -> bytes:
    return bytes(97 + rng.randrange(alphabet) for _ in range(rng.randint(0, max_len)))


def classic_lcs_len(a: bytes, b: bytes) -> int:
    """Textbook LCS dynamic program, two rolling rows."""
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b, start=1):
            if ca == cb:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[len(b)]


def longest_common_substring_len(a: bytes, b: bytes) -> int:
    """Direct scan over all alignments; quadratic, small inputs only."""
    best = 0
    for i in range(len(a)):
        for j in range(len(b)):
            k = 0
            while i + k < len(a) and j + k < len(b) and a[i + k] == b[j + k]:
                k += 1
            if k > best:
                best = k
    return best


def greedy_subsequence(t: bytes, p: bytes) -> bool:
    it = iter(t)
    return all(c in it for c in p)


def shortest_prefix_tables(t1: bytes, t2: bytes, f: int) -> list[list[list[int]]]:
    """L[h][i][s] = min j with slcs(t1[:i], t2[:j], h) = s, from the chain
    table (the definition, not the diagonal recurrence); infinity = n2 + 1."""
    layers = chain_table(t1, t2, f)
    n1, n2 = len(t1), len(t2)
    inf = n2 + 1
    tables = [
        [[0 if s == 0 else inf for s in range(n1 + 1)] for _ in range(n1 + 1)]
        for _ in range(f + 1)
    ]
    for h in range(1, f + 1):
        layer = layers[h]
        for i in range(n1 + 1):
            for s in range(1, n1 + 1):
                for j in range(n2 + 1):
                    if layer[i][j] == s:
                        tables[h][i][s] = j
                        break
    return tables


def enumerate_embeddings(t: bytes, p: bytes):
    """Yield every increasing position tuple embedding p into t (0-based)."""
    n, m = len(t), len(p)

    def walk(start: int, k: int, acc: tuple[int, ...]):
        if k == m:
            yield acc
            return
        for pos in range(start, n - (m - k) + 1):
            if t[pos] == p[k]:
                yield from walk(pos + 1, k + 1, acc + (pos,))

    yield from walk(0, 0, ())


def embedding_pieces(t: bytes, positions: tuple[int, ...]) -> list[bytes]:
    """Factorization pieces (v0, u1, v1, ..., [vh]) induced by an embedding;
    interior gaps are nonempty by the maximal-run decomposition and a trailing
    empty piece is dropped."""
    if not positions:
        return [t]
    runs: list[list[int]] = [[positions[0]]]
    for pos in positions[1:]:
        if pos == runs[-1][-1] + 1:
            runs[-1].append(pos)
        else:
            runs.append([pos])
    pieces = [t[: runs[0][0]]]
    for idx, run in enumerate(runs):
        pieces.append(t[run[0] : run[-1] + 1])
        nxt = runs[idx + 1][0] if idx + 1 < len(runs) else len(t)
        gap = t[run[-1] + 1 : nxt]
        if gap:
            pieces.append(gap)
    return pieces
