"""Row reduction over F_p.

Matrices here are tiny (at most ~16 columns) but the game solver reduces
millions of them, so there are two paths: a plain-Python RREF for one-off
calls and a numpy kernel that reduces a whole stack of matrices at once.
"""

from __future__ import annotations

import numpy as np

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def rref(rows, p: int) -> Mat:
    """Canonical reduced row echelon form; zero rows dropped.

    `rows` is any iterable of equal-length int sequences.  The result is a
    tuple of tuples with leading ones, pivots in increasing column order and
    zeros above and below each pivot, which makes it usable as a dict key
    for the row space.
    """
    work = [list(r) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    out: list[list[int]] = []
    pivots: list[int] = []
    for row in work:
        row = [v % p for v in row]
        for prow, pcol in zip(out, pivots):
            f = row[pcol]
            if f:
                row = [(a - f * b) % p for a, b in zip(row, prow)]
        try:
            col = next(i for i, v in enumerate(row) if v)
        except StopIteration:
            continue
        inv = pow(row[col], p - 2, p)
        row = [(v * inv) % p for v in row]
        # eliminate above
        for prow, pcol in zip(out, pivots):
            f = prow[col]
            if f:
                prow[:] = [(a - f * b) % p for a, b in zip(prow, row)]
        # insert keeping pivot columns sorted
        at = next((k for k, c in enumerate(pivots) if c > col), len(pivots))
        out.insert(at, row)
        pivots.insert(at, col)
        if len(out) == ncols:
            break
    return tuple(tuple(r) for r in out)


def rank(rows, p: int) -> int:
    return len(rref(rows, p))


def in_rowspace(vec, basis: Mat, p: int) -> bool:
    return reduce_mod(vec, basis, p) is None


def reduce_mod(vec, basis: Mat, p: int):
    """Reduce `vec` against an RREF basis; None if it lies in the row space,
    else the (nonzero) canonical residual."""
    row = [v % p for v in vec]
    for brow in basis:
        col = next(i for i, v in enumerate(brow) if v)
        f = row[col]
        if f:
            row = [(a - f * b) % p for a, b in zip(row, brow)]
    if any(row):
        return tuple(row)
    return None


def nullspace(rows, p: int, ncols: int) -> Mat:
    """RREF basis of {x : x @ rows^T = 0}, i.e. left-kernel of the column
    collection; `rows` are the linear functionals as length-`ncols` vectors
    stacked so that x satisfies sum_i x_i rows[j][i] = 0 for every j."""
    # Solve x @ M = 0 where M has the functionals as columns.
    m = rref(rows, p)  # functionals as rows; x orthogonal to all
    pivots = [next(i for i, v in enumerate(r) if v) for r in m]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in zip(m, pivots):
            v[pc] = (-r[fc]) % p
        basis.append(v)
    return rref(basis, p)


def mat_mul(a, b, p: int) -> Mat:
    """(len(a) x k) @ (k x cols) product mod p, rows-of-tuples form."""
    cols = len(b[0]) if b else 0
    out = []
    for arow in a:
        acc = [0] * cols
        for coef, brow in zip(arow, b):
            if coef:
                for j in range(cols):
                    acc[j] += coef * brow[j]
        out.append(tuple(v % p for v in acc))
    return tuple(out)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def invert(rows: Mat, p: int):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    red = rref(aug, p)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        return None
    if any(red[i][j] != 0 for i in range(n) for j in range(n) if i != j):
        return None
    return tuple(tuple(r[n:]) for r in red)


def rref_batch(stacks: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """RREF of a (K, r, c) stack of matrices mod p, all at once.

    Returns (reduced, dims): `reduced[k]` holds the RREF of `stacks[k]` in
    its first `dims[k]` rows (remaining rows zero).  Pivot search is
    first-nonzero per column, so the output is canonical per matrix.
    """
    S = (stacks % p).astype(np.int64)
    K, r, c = S.shape
    inv_table = np.array([0] + [pow(v, p - 2, p) for v in range(1, p)], dtype=np.int64)
    npivots = np.zeros(K, dtype=np.int64)
    kidx = np.arange(K)
    ridx = np.arange(r)
    for col in range(c):
        colvals = S[:, :, col]
        eligible = (colvals != 0) & (ridx[None, :] >= npivots[:, None])
        has = eligible.any(axis=1)
        if not has.any():
            continue
        src = np.where(has, eligible.argmax(axis=1), 0)
        # clamp: matrices already at full row rank have has=False, but the
        # gather below still evaluates for them
        dst = np.minimum(npivots, r - 1)
        # swap src row up to the next pivot slot (no-op rows where !has)
        srow = S[kidx, src, :].copy()
        drow = S[kidx, dst, :].copy()
        sel = kidx[has]
        S[sel, src[has], :] = drow[has]
        S[sel, dst[has], :] = srow[has]
        # scale pivot row to leading 1
        pv = S[kidx, dst, col]
        scale = inv_table[pv]
        S[sel, dst[has], :] = (S[sel, dst[has], :] * scale[has, None]) % p
        # eliminate the column everywhere else
        prow = S[kidx, dst, :]
        factors = S[:, :, col].copy()
        factors[kidx, dst] = 0
        factors[~has, :] = 0
        S = (S - factors[:, :, None] * prow[:, None, :]) % p
        npivots = npivots + has
    return S, npivots
