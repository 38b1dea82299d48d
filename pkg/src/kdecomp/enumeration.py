"""Exhaustive enumeration of finite commutative semirings with identity.

Addition tables (commutative monoids with identity 0) are built first by
backtracking over the upper triangle; for each, multiplication tables with
identity 1, absorbing 0 and commutativity are filled cell by cell while
associativity and distributivity are checked on every triple whose entries
are already known.  Cells are filled in row-major order with values tried in
increasing order, so the stream is lexicographic in the flattened
``(add, mul)`` pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .errors import InputError, OrderTooLarge
from .semiring import FiniteSemiring, validate

SOFT_MAX_ORDER = 4
HARD_MAX_ORDER = 6

U = -1  # unknown cell


def _assoc_ok(T, n) -> bool:
    for a in range(n):
        for b in range(n):
            ab = T[a][b]
            if ab == U:
                continue
            for c in range(n):
                bc = T[b][c]
                if bc == U:
                    continue
                l, r = T[ab][c], T[a][bc]
                if l != U and r != U and l != r:
                    return False
    return True


def _distrib_ok(A, M, n) -> bool:
    for a in range(n):
        Ma = M[a]
        for b in range(n):
            ab = Ma[b]
            if ab == U:
                continue
            for c in range(b, n):
                ac = Ma[c]
                if ac == U:
                    continue
                lhs = Ma[A[b][c]]
                if lhs != U and lhs != A[ab][ac]:
                    return False
    return True


def additive_monoids(n: int):
    """Commutative monoid tables on ``range(n)`` with identity 0, as tuples of tuples."""
    T = [[U] * n for _ in range(n)]
    for a in range(n):
        T[0][a] = T[a][0] = a
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]

    def go(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in T)
            return
        i, j = cells[k]
        for v in range(n):
            T[i][j] = T[j][i] = v
            if _assoc_ok(T, n):
                yield from go(k + 1)
        T[i][j] = T[j][i] = U

    yield from go(0)


def multiplications(A, n: int):
    """Commutative multiplication tables compatible with the addition table ``A``."""
    M = [[U] * n for _ in range(n)]
    for a in range(n):
        M[0][a] = M[a][0] = 0
        M[1][a] = M[a][1] = a
    M[0][1] = M[1][0] = 0
    cells = [(i, j) for i in range(2, n) for j in range(i, n)]

    def go(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in M)
            return
        i, j = cells[k]
        for v in range(n):
            M[i][j] = M[j][i] = v
            if _assoc_ok(M, n) and _distrib_ok(A, M, n):
                yield from go(k + 1)
        M[i][j] = M[j][i] = U

    yield from go(0)


def _check_order(n, override):
    if n < 2:
        raise InputError("order must be at least 2")
    if n > HARD_MAX_ORDER or (n > SOFT_MAX_ORDER and not override):
        raise OrderTooLarge(
            f"order {n} exceeds the exhaustive cap {SOFT_MAX_ORDER}"
            + ("" if n > HARD_MAX_ORDER else " without an explicit override (--force)")
        )


def enumerate_semirings(n: int, up_to_iso: bool = False, override: bool = False):
    """Yield every commutative semiring of order n, named ``<n>_<seq>``.

    With ``up_to_iso`` only the canonical representative of each
    isomorphism class is yielded.
    """
    _check_order(n, override)
    seq = 0
    for A in additive_monoids(n):
        for M in multiplications(A, n):
            if up_to_iso and canonical_tables(A, M) != (A, M):
                continue
            seq += 1
            yield validate(A, M, f"{n}_{seq:04d}")


def _permute(T, pi):
    n = len(T)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[pi[i]][pi[j]] = pi[T[i][j]]
    return tuple(tuple(r) for r in out)


def canonical_tables(A, M):
    n = len(A)
    best = None
    for rest in permutations(range(2, n)):
        pi = (0, 1) + rest
        cand = (_permute(A, pi), _permute(M, pi))
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class IsoClass:
    canonical_form: tuple
    representative: FiniteSemiring


def canonicalize(S: FiniteSemiring) -> IsoClass:
    """Lexicographically least relabelling of S over permutations fixing 0 and 1."""
    A, M = canonical_tables(S.add, S.mul)
    return IsoClass((A, M), validate(A, M, S.name))


def permuted(S: FiniteSemiring, pi) -> FiniteSemiring:
    """Relabel S by the permutation ``pi`` (a sequence with ``pi[0] == 0``, ``pi[1] == 1``)."""
    pi = tuple(pi)
    if sorted(pi) != list(range(S.order)) or pi[:2] != (0, 1):
        raise InputError("permutation must fix 0 and 1")
    return validate(_permute(S.add, pi), _permute(S.mul, pi), S.name)


def oracle_table_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Generate-and-filter oracle over all ``n**(n*n)`` tables for each operation.

    Every axiom except distributivity involves a single table, so those are
    filtered per table with numpy; distributivity is then tested on every
    surviving pair.  Returns the sorted flattened ``(add, mul)`` pairs.
    """
    if n > 3:
        raise OrderTooLarge("the unpruned oracle is limited to order 3")
    cells = n * n
    idx = np.arange(n ** cells)
    tabs = np.stack([(idx // n ** (cells - 1 - k)) % n for k in range(cells)], axis=1).reshape(-1, n, n)
    rng = np.arange(n)
    N = len(tabs)
    rows = np.arange(N)[:, None, None, None]

    def associative(T):
        a, b, c = np.meshgrid(rng, rng, rng, indexing="ij")
        ab = T[:, a, b]
        bc = T[:, b, c]
        lhs = T[rows, ab, c[None]]
        rhs = T[rows, a[None], bc]
        return (lhs == rhs).all(axis=(1, 2, 3))

    commutative = (tabs == tabs.transpose(0, 2, 1)).all(axis=(1, 2))
    assoc = associative(tabs)
    zero_id = (tabs[:, 0, :] == rng).all(axis=1) & (tabs[:, :, 0] == rng).all(axis=1)
    one_id = (tabs[:, 1, :] == rng).all(axis=1) & (tabs[:, :, 1] == rng).all(axis=1)
    absorbing = (tabs[:, 0, :] == 0).all(axis=1) & (tabs[:, :, 0] == 0).all(axis=1)

    adds = tabs[commutative & assoc & zero_id]
    muls = tabs[commutative & assoc & one_id & absorbing]
    out = []
    for A in adds:
        for M in muls:
            ok = True
            for a, b, c in product(range(n), repeat=3):
                if M[a, A[b, c]] != A[M[a, b], M[a, c]]:
                    ok = False
                    break
            if ok:
                out.append((tuple(int(v) for v in A.ravel()), tuple(int(v) for v in M.ravel())))
    out.sort()
    return out
