"""Exact matrix arithmetic over the prime field F_p on numpy int64 arrays."""

from collections.abc import Sequence

import numpy as np


def mod_p(a: np.ndarray | Sequence, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def inv_scalar(a: int | np.integer, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Pivots are chosen as the first nonzero entry in the current column, so the
    result is a pure function of the input matrix.

    Returns:
        (R, pivot_cols) with R reduced mod p.
    """
    r_mat = mod_p(a, p).copy()
    m, n = r_mat.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nonzero = np.nonzero(r_mat[row:, col])[0]
        if nonzero.size == 0:
            continue
        piv = row + int(nonzero[0])
        if piv != row:
            r_mat[[row, piv]] = r_mat[[piv, row]]
        r_mat[row] = (r_mat[row] * inv_scalar(r_mat[row, col], p)) % p
        factors = r_mat[:, col].copy()
        factors[row] = 0
        r_mat = (r_mat - np.outer(factors, r_mat[row])) % p
        pivots.append(col)
        row += 1
    return r_mat, pivots


def rank(a: np.ndarray, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace basis of `a`; columns form the basis (one per free column, ascending)."""
    a = mod_p(a, p)
    n = a.shape[1]
    r_mat, pivots = rref(a, p)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = zeros(n, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-r_mat[row, f]) % p
    return basis


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {y : y a = 0}."""
    return nullspace(np.asarray(a).T, p).T


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Solve a @ x = b for a matrix right-hand side.

    Returns the particular solution with all free variables set to zero, or
    None when the system is inconsistent.
    """
    a = mod_p(a, p)
    b = mod_p(b, p)
    m, n = a.shape
    if b.shape[0] != m:
        raise ValueError(f"solve: {a.shape} against right-hand side {b.shape}")
    r_mat, pivots = rref(np.hstack([a, b]), p)
    x = zeros(n, b.shape[1])
    for row, pc in enumerate(pivots):
        if pc >= n:
            return None
        x[pc] = r_mat[row, n:]
    return x


def solve_left(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Solve x @ a = b."""
    x = solve(np.asarray(a).T, np.asarray(b).T, p)
    return None if x is None else x.T


def inverse(a: np.ndarray, p: int) -> np.ndarray | None:
    a = mod_p(a, p)
    n = a.shape[0]
    if a.shape != (n, n) or rank(a, p) != n:
        return None
    return solve(a, identity(n), p)


def is_injective(a: np.ndarray, p: int) -> bool:
    return rank(a, p) == np.asarray(a).shape[1]


def is_surjective(a: np.ndarray, p: int) -> bool:
    return rank(a, p) == np.asarray(a).shape[0]


def is_zero(a: np.ndarray, p: int) -> bool:
    return not np.any(mod_p(a, p))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product that keeps the (rows, cols) bookkeeping for empty factors."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.einsum("ij,kl->ikjl", a, b)
    return out.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


def vec(a: np.ndarray) -> np.ndarray:
    """Column-major vectorization, so vec(A X B) = kron(B.T, A) vec(X)."""
    return np.asarray(a, dtype=np.int64).flatten(order="F")


def unvec(v: np.ndarray, rows: int, cols: int) -> np.ndarray:
    return np.asarray(v, dtype=np.int64).reshape((rows, cols), order="F")


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def hstack(blocks: Sequence[np.ndarray], rows: int) -> np.ndarray:
    """Horizontal concatenation; `rows` fixes the shape when `blocks` is empty."""
    if not blocks:
        return zeros(rows, 0)
    return np.hstack([np.asarray(b, dtype=np.int64) for b in blocks])


def vstack(blocks: Sequence[np.ndarray], cols: int) -> np.ndarray:
    if not blocks:
        return zeros(0, cols)
    return np.vstack([np.asarray(b, dtype=np.int64) for b in blocks])

