"""Dense GF(2) linear algebra plus the two combinatorial subroutines
(minimum-weight syndrome decoding, matchings) used by the synthesis
algorithms.

Matrices are numpy ``uint8`` arrays with entries in {0, 1}; all row/column
operations are XORs.  Vectors are 1-D uint8 arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSymmetricError, SingularMatrixError, UnsolvableError

BitMatrix = np.ndarray


def asbits(data) -> BitMatrix:
    """Coerce to a uint8 0/1 array."""
    return (np.asarray(data, dtype=np.uint8) & 1).astype(np.uint8)


def zeros(rows: int, cols: int) -> BitMatrix:
    return np.zeros((rows, cols), dtype=np.uint8)


def identity(n: int) -> BitMatrix:
    return np.eye(n, dtype=np.uint8)


def mmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    return ((a.astype(np.int64) @ b.astype(np.int64)) & 1).astype(np.uint8)


def row_echelon(m: BitMatrix, ncols: int | None = None):
    """Row-reduce over GF(2).

    Returns (R, pivot_cols, pivot_rows_of_original) where ``R`` is the
    echelon form and ``pivot_rows_of_original`` lists, for each pivot, the
    original row index that supplied it (rows are swapped during
    elimination, so this is tracked explicitly).
    """
    r = m.copy()
    nr, nc = r.shape
    if ncols is None:
        ncols = nc
    where = list(range(nr))
    pivot_cols: list[int] = []
    pivot_rows: list[int] = []
    prow = 0
    for col in range(ncols):
        sub = np.nonzero(r[prow:, col])[0]
        if sub.size == 0:
            continue
        sel = prow + int(sub[0])
        if sel != prow:
            r[[prow, sel]] = r[[sel, prow]]
            where[prow], where[sel] = where[sel], where[prow]
        ones = np.nonzero(r[prow + 1:, col])[0]
        for off in ones:
            r[prow + 1 + off] ^= r[prow]
        pivot_cols.append(col)
        pivot_rows.append(where[prow])
        prow += 1
        if prow == nr:
            break
    return r, pivot_cols, pivot_rows


def rank(m: BitMatrix) -> int:
    """GF(2) rank; the input is not modified."""
    _, pivots, _ = row_echelon(m)
    return len(pivots)


def invert(m: BitMatrix) -> BitMatrix:
    """Inverse over GF(2); raises SingularMatrixError if rank deficient."""
    n, nc = m.shape
    if n != nc:
        raise SingularMatrixError(f"matrix is {n}x{nc}, not square")
    aug = np.concatenate([m.copy(), identity(n)], axis=1)
    prow = 0
    for col in range(n):
        sub = np.nonzero(aug[prow:, col])[0]
        if sub.size == 0:
            raise SingularMatrixError(f"rank < {n}")
        sel = prow + int(sub[0])
        if sel != prow:
            aug[[prow, sel]] = aug[[sel, prow]]
        ones = np.nonzero(aug[:, col])[0]
        for r in ones:
            if r != prow:
                aug[r] ^= aug[prow]
        prow += 1
    return aug[:, n:].copy()


def solve_right(m: BitMatrix, b: np.ndarray) -> np.ndarray | None:
    """Any solution x of M x = b over GF(2), or None."""
    nr, nc = m.shape
    aug = np.concatenate([m.copy(), asbits(b).reshape(nr, 1)], axis=1)
    red, pivots, _ = row_echelon(aug, ncols=nc)
    x = np.zeros(nc, dtype=np.uint8)
    # Back substitution over the echelon form.
    for i in reversed(range(len(pivots))):
        col = pivots[i]
        acc = red[i, nc]
        row = red[i, :nc]
        acc ^= int(row @ x.astype(np.int64)) & 1
        x[col] ^= acc
    if np.any(mmul(m, x.reshape(nc, 1)).ravel() != asbits(b)):
        return None
    return x


def solve_left(h: BitMatrix, s: np.ndarray) -> np.ndarray | None:
    """Any solution x of x H = s (row-vector convention), or None."""
    sol = solve_right(h.T.copy(), s)
    return sol


def ldlt_sym(m: BitMatrix):
    """Decompose a symmetric M as M = L D L^T xor D' over GF(2).

    L is unit lower triangular; D and D' are returned as diagonal 0/1
    vectors.  Whenever a pivot diagonal is zero but the column still has
    entries below, the diagonal is borrowed through D' (M xor D' then
    factors with ordinary pivoting).
    """
    m = asbits(m)
    n, nc = m.shape
    if n != nc or np.any(m != m.T):
        raise NotSymmetricError("ldlt_sym requires a symmetric square matrix")
    work = m.copy()
    lmat = identity(n)
    d = np.zeros(n, dtype=np.uint8)
    dp = np.zeros(n, dtype=np.uint8)
    for i in range(n):
        if work[i, i] == 0:
            if not np.any(work[i + 1:, i]):
                continue
            dp[i] = 1
            work[i, i] ^= 1
        d[i] = 1
        col = work[:, i].copy()
        col[:i] = 0
        lmat[:, i] = col
        work ^= np.outer(col, col)
    return lmat, d, dp


@dataclass(frozen=True)
class SyndromeSolution:
    """Row selector x with x H = s and its Hamming weight."""

    x: np.ndarray
    weight: int


def _greedy_decode(rows: BitMatrix, s: np.ndarray) -> np.ndarray | None:
    """Greedy cover: repeatedly add the row minimizing |row xor s|.

    Ties break to the lowest row index.  Terminates whenever the canonical
    vectors are among the rows (each step then strictly reduces |s|);
    returns None if it stalls without them.
    """
    m = rows.shape[0]
    cur = s.copy()
    x = np.zeros(m, dtype=np.uint8)
    guard = 2 * m + 2 * int(np.count_nonzero(s)) + 8
    while np.any(cur):
        w = np.count_nonzero(rows ^ cur, axis=1)
        best = int(np.argmin(w))
        if int(w[best]) >= int(np.count_nonzero(cur)):
            return None
        cur ^= rows[best]
        x[best] ^= 1
        guard -= 1
        if guard <= 0:
            return None
    return x


def syndrome_decode(h: BitMatrix, s: np.ndarray, isd_iters: int = 100,
                    seed: int = 0) -> SyndromeSolution:
    """Minimum-weight-ish solution of x H = s.

    Greedy decoding plus information-set restarts: each restart rebases the
    columns so that a random maximal independent subset of rows becomes
    canonical, then decodes greedily in that basis.  The plain
    Gaussian-elimination solution is always included as a candidate, so the
    result is never worse than row reduction.  Deterministic for fixed seed.
    """
    h = asbits(h)
    s = asbits(s).ravel()
    m, n = h.shape
    if s.shape[0] != n:
        raise UnsolvableError("syndrome length mismatch")
    if not np.any(s):
        return SyndromeSolution(np.zeros(m, dtype=np.uint8), 0)
    base = solve_left(h, s)
    if base is None:
        raise UnsolvableError("target outside the row span of H")
    best = base
    bestw = int(np.count_nonzero(base))

    def consider(x: np.ndarray | None):
        nonlocal best, bestw
        if x is None:
            return
        w = int(np.count_nonzero(x))
        if w < bestw and np.array_equal(mmul(x.reshape(1, m), h).ravel(), s):
            best, bestw = x, w

    consider(_greedy_decode(h, s))
    rng = np.random.default_rng(seed)
    for _ in range(isd_iters):
        order = rng.permutation(m)
        _, _, pivot_rows = row_echelon(h[order])
        info = [int(order[r]) for r in pivot_rows]
        basis = h[info]
        # Rebase: express everything over the information-set rows.  P maps
        # the information rows to canonical vectors, so HP keeps them
        # available to the greedy pass (the paper's constraint on P).
        p = _square_basis(basis)
        if p is None:
            continue
        hp = mmul(h, p)
        sp = mmul(s.reshape(1, n), p).ravel()
        consider(_greedy_decode(hp, sp))
    return SyndromeSolution(best, bestw)


def _square_basis(basis: BitMatrix) -> BitMatrix | None:
    """Right transform P with basis @ P = [I | *] padded square, if any.

    ``basis`` is r x n with independent rows; returns an invertible n x n P
    such that each basis row maps to a canonical vector.
    """
    r, n = basis.shape
    # Complete basis to an invertible n x n matrix by appending unit rows.
    rowsets = basis.copy()
    extra = []
    cur_rank = rank(rowsets)
    for j in range(n):
        if cur_rank == n:
            break
        cand = np.zeros((1, n), dtype=np.uint8)
        cand[0, j] = 1
        test = np.concatenate([rowsets, cand], axis=0)
        tr = rank(test)
        if tr > cur_rank:
            rowsets = test
            cur_rank = tr
            extra.append(j)
    if cur_rank < n:
        return None
    try:
        return invert(rowsets)
    except SingularMatrixError:
        return None


def maximal_matching(adjacency: BitMatrix, allowed=None) -> list[tuple[int, int]]:
    """Greedy maximal matching on an undirected graph.

    Scans vertex pairs in fixed lexicographic order; the diagonal is
    ignored.  Deterministic; may be one edge short of maximum.
    """
    adjacency = asbits(adjacency)
    n = adjacency.shape[0]
    if allowed is None:
        allowed = range(n)
    allow = sorted(set(int(a) for a in allowed))
    used: set[int] = set()
    edges = []
    for ai, i in enumerate(allow):
        if i in used:
            continue
        for j in allow[ai + 1:]:
            if adjacency[i, j] and j not in used:
                edges.append((i, j))
                used.add(i)
                used.add(j)
                break
    return edges


def bipartite_matching(b: BitMatrix, allowed_rows=None,
                       allowed_cols=None) -> list[tuple[int, int]]:
    """Maximum bipartite matching (Kuhn's augmenting paths).

    Rows and columns are the two vertex classes; entry 1 is an edge.
    Deterministic under the fixed row/column ordering.
    """
    b = asbits(b)
    nr, nc = b.shape
    rows = sorted(set(range(nr)) if allowed_rows is None else set(allowed_rows))
    cols = sorted(set(range(nc)) if allowed_cols is None else set(allowed_cols))
    colset = [c for c in cols if c < nc]
    match_col: dict[int, int] = {}

    def try_augment(r: int, seen: set[int]) -> bool:
        for c in colset:
            if b[r, c] and c not in seen:
                seen.add(c)
                if c not in match_col or try_augment(match_col[c], seen):
                    match_col[c] = r
                    return True
        return False

    for r in rows:
        if r < nr:
            try_augment(r, set())
    return sorted((r, c) for c, r in match_col.items())
