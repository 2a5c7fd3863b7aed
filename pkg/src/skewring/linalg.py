"""Dense exact linear algebra over GF(q), vectorized with lookup tables.

Matrices are numpy int32 arrays of element codes (see gf).  All routines are
pure: inputs are never mutated.  RREF is fully canonical (pivots equal 1,
zeros above and below, strictly increasing pivot columns), so two row spaces
are equal iff their RREFs are identical arrays.
"""

from __future__ import annotations

import numpy as np

from .gf import FieldTables, FiniteField


def as_matrix(rows) -> np.ndarray:
    M = np.asarray(rows, dtype=np.int32)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    return M


def rref(field: FiniteField, M) -> tuple[np.ndarray, list[int]]:
    """Canonical reduced row echelon form and pivot columns."""
    T = field.tables()
    R = as_matrix(rows=M).copy()
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, col])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = T.mul[T.inv[R[r, col]], R[r]]
        others = np.nonzero(R[:, col])[0]
        others = others[others != r]
        if len(others):
            factors = T.neg[R[others, col]]
            R[others] = T.add[R[others], T.mul[factors[:, None], R[r][None, :]]]
        pivots.append(col)
        r += 1
    return R[:len(pivots)], pivots


def rref_prefer(field: FiniteField, M, preferred) -> tuple[np.ndarray, list[int]]:
    """RREF scanning the preferred columns first, then the rest.

    Returns the reduced matrix and its pivot columns (in scan order).  Used to
    build systematic generator matrices over chosen information sets.
    """
    T = field.tables()
    R = as_matrix(M).copy()
    nrows, ncols = R.shape
    rest = [c for c in range(ncols) if c not in set(preferred)]
    pivots: list[int] = []
    r = 0
    for col in list(preferred) + rest:
        if r == nrows:
            break
        nz = np.nonzero(R[r:, col])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = T.mul[T.inv[R[r, col]], R[r]]
        others = np.nonzero(R[:, col])[0]
        others = others[others != r]
        if len(others):
            factors = T.neg[R[others, col]]
            R[others] = T.add[R[others], T.mul[factors[:, None], R[r][None, :]]]
        pivots.append(col)
        r += 1
    return R[:len(pivots)], pivots


def rank(field: FiniteField, M) -> int:
    return len(rref(field, M)[1])


def nullspace(field: FiniteField, M) -> np.ndarray:
    """Canonical RREF basis of {v : M v^T = 0}."""
    R, piv = rref(field, M)
    ncols = as_matrix(M).shape[1]
    T = field.tables()
    free = [c for c in range(ncols) if c not in piv]
    basis = np.zeros((len(free), ncols), dtype=np.int32)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(piv):
            basis[bi, pc] = T.neg[R[ri, fc]]
    if len(basis):
        basis, _ = rref(field, basis)
    return basis


def matmul(field: FiniteField, A, B) -> np.ndarray:
    T = field.tables()
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int32)
    for i in range(A.shape[1]):
        col = A[:, i]
        if not col.any():
            continue
        out = T.add[out, T.mul[col[:, None], B[i][None, :]]]
    return out


def reduce_against(field: FiniteField, R, pivots, V) -> np.ndarray:
    """Residues of the rows of V after elimination against an RREF basis R.

    A zero residue row means the corresponding row of V lies in the row space.
    """
    T = field.tables()
    U = as_matrix(V).copy()
    for ri, pc in enumerate(pivots):
        col = U[:, pc]
        hit = np.nonzero(col)[0]
        if len(hit):
            factors = T.neg[col[hit]]
            U[hit] = T.add[U[hit], T.mul[factors[:, None], R[ri][None, :]]]
    return U


def in_rowspace(field: FiniteField, R, pivots, V) -> bool:
    return not reduce_against(field, R, pivots, V).any()


def frob_entrywise(field: FiniteField, M, k: int) -> np.ndarray:
    """Apply x -> x^(p^k) to every entry."""
    T = field.tables()
    return T.frob[k % field.m][as_matrix(M)]


def intersection_dim(field: FiniteField, A, B) -> int:
    """dim(rowspace A intersect rowspace B)."""
    ra = rank(field, A)
    rb = rank(field, B)
    stacked = np.vstack([as_matrix(A), as_matrix(B)])
    return ra + rb - rank(field, stacked)
