"""Exact integer lattice algebra for full-rank sublattices of Z^d.

Matrices are numpy ``object`` arrays holding Python ints, so nothing ever
overflows; the kernels below work on plain lists for speed.  A sublattice
is given by a square matrix whose *columns* generate it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Optional, Sequence

import numpy as np

if TYPE_CHECKING:
    from .cyclo import ModulusContext

__all__ = [
    "DEFAULT_COSET_CAP",
    "SingularMatrixError",
    "CosetCapError",
    "as_matrix",
    "identity",
    "determinant",
    "scaled_inverse",
    "hnf",
    "snf",
    "SublatticeBasis",
    "CosetSystem",
    "divides",
    "coset_reps",
    "same_coset",
    "lattice_equal",
]

DEFAULT_COSET_CAP = 10**6


class SingularMatrixError(ValueError):
    pass


class CosetCapError(RuntimeError):
    """The number of cosets exceeds the enumeration cap."""


def as_matrix(M) -> np.ndarray:
    """Exact integer matrix (object dtype, Python ints)."""
    A = np.array(M, dtype=object)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    return np.vectorize(int, otypes=[object])(A) if A.size else A


def identity(d: int) -> np.ndarray:
    return np.array([[int(i == j) for j in range(d)] for i in range(d)], dtype=object)


def _rows(M) -> list[list[int]]:
    return [[int(v) for v in row] for row in np.asarray(M, dtype=object)]


def _check_square(A: list[list[int]]):
    if any(len(r) != len(A) for r in A):
        raise ValueError("matrix must be square")


def determinant(M) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    A = _rows(M)
    _check_square(A)
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for p in range(k + 1, n):
                if A[p][k] != 0:
                    A[k], A[p] = A[p], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rk = A[k]
        for i in range(k + 1, n):
            ri = A[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def scaled_inverse(M) -> tuple[np.ndarray, int]:
    """Return ``(X, D)`` with ``M @ X == D * I`` and ``D = +-det M``.

    Fraction-free Gauss-Jordan on ``[M | I]``; X is the adjugate up to sign.
    """
    A = _rows(M)
    _check_square(A)
    n = len(A)
    for i in range(n):
        A[i] = A[i] + [int(i == j) for j in range(n)]
    width = 2 * n
    prev = 1
    for k in range(n):
        if A[k][k] == 0:
            for p in range(k + 1, n):
                if A[p][k] != 0:
                    A[k], A[p] = A[p], A[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        rk = A[k]
        akk = rk[k]
        for i in range(n):
            if i == k:
                continue
            ri = A[i]
            aik = ri[k]
            for j in range(width):
                if j != k:
                    ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    D = A[0][0]
    X = np.array([row[n:] for row in A], dtype=object)
    return X, D


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(M) -> tuple[np.ndarray, np.ndarray]:
    """Column-style Hermite normal form.

    Returns ``(H, U)`` with ``H == M @ U``, U unimodular, H lower triangular
    with positive diagonal and ``0 <= H[i, j] < H[i, i]`` for ``j < i``.
    """
    A = _rows(M)
    _check_square(A)
    n = len(A)
    cols = [[A[i][j] for i in range(n)] for j in range(n)]
    ucols = [[int(i == j) for i in range(n)] for j in range(n)]
    _hnf_inplace(cols, ucols)
    H = np.array(cols, dtype=object).T.copy()
    U = np.array(ucols, dtype=object).T.copy()
    return H, U


def _hnf_inplace(cols: list[list[int]], ucols: Optional[list[list[int]]] = None) -> None:
    n = len(cols)
    for i in range(n):
        for j in range(i + 1, n):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[i][i]
            g, x, y = _xgcd(a, b)
            p, q = -b // g, a // g
            ci, cj = cols[i], cols[j]
            cols[i] = [x * u + y * v for u, v in zip(ci, cj)]
            cols[j] = [p * u + q * v for u, v in zip(ci, cj)]
            if ucols is not None:
                ui, uj = ucols[i], ucols[j]
                ucols[i] = [x * u + y * v for u, v in zip(ui, uj)]
                ucols[j] = [p * u + q * v for u, v in zip(ui, uj)]
        d = cols[i][i]
        if d == 0:
            raise SingularMatrixError("matrix is singular")
        if d < 0:
            cols[i] = [-v for v in cols[i]]
            if ucols is not None:
                ucols[i] = [-v for v in ucols[i]]
            d = -d
        ci = cols[i]
        for j in range(i):
            f = cols[j][i] // d
            if f:
                cols[j] = [u - f * v for u, v in zip(cols[j], ci)]
                if ucols is not None:
                    ucols[j] = [u - f * v for u, v in zip(ucols[j], ucols[i])]


def hnf_key(M) -> tuple[tuple[int, ...], ...]:
    """Hashable HNF of the column span of M (no transform tracking)."""
    A = _rows(M)
    _check_square(A)
    n = len(A)
    cols = [[A[i][j] for i in range(n)] for j in range(n)]
    _hnf_inplace(cols)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def snf(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith normal form ``D = U @ M @ V`` with ``d_1 | d_2 | ...``, all positive."""
    A = _rows(M)
    _check_square(A)
    n = len(A)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    v = A[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                raise SingularMatrixError("matrix is singular")
            _, p, q = best
            if p != t:
                swap_rows(t, p)
            if q != t:
                swap_cols(t, q)
            piv = A[t][t]
            clean = True
            for i in range(t + 1, n):
                f = A[i][t] // piv
                if f:
                    A[i] = [u - f * v for u, v in zip(A[i], A[t])]
                    U[i] = [u - f * v for u, v in zip(U[i], U[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                f = A[t][j] // piv
                if f:
                    for R in (A, V):
                        for row in R:
                            row[j] -= f * row[t]
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            A[t] = [u + v for u, v in zip(A[t], A[bad])]
            U[t] = [u + v for u, v in zip(U[t], U[bad])]
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]
    return (np.array(A, dtype=object), np.array(U, dtype=object), np.array(V, dtype=object))


# ---------------------------------------------------------------- sublattices

@dataclass(eq=False)
class SublatticeBasis:
    """Full-rank sublattice L of Z^d spanned by the columns of ``S``."""

    S: np.ndarray
    ctx: Optional["ModulusContext"] = None

    def __post_init__(self):
        self.S = as_matrix(self.S)
        if self.S.shape[0] != self.S.shape[1]:
            raise ValueError(f"basis matrix must be square, got shape {self.S.shape}")
        if self.ctx is not None and self.S.shape[0] != self.ctx.degree:
            raise ValueError("basis dimension does not match phi(n)")
        if self.det == 0:
            raise SingularMatrixError("sublattice basis must have full rank")

    @property
    def dim(self) -> int:
        return self.S.shape[0]

    @cached_property
    def det(self) -> int:
        return determinant(self.S)

    @property
    def index(self) -> int:
        return abs(self.det)

    @cached_property
    def _hnf(self):
        return hnf(self.S)

    @property
    def hnf_canonical(self) -> np.ndarray:
        return self._hnf[0]

    @cached_property
    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in self.hnf_canonical)

    @cached_property
    def _scaled_inverse(self):
        return scaled_inverse(self.S)

    def contains(self, M) -> bool:
        """True iff every column of M lies in L."""
        return divides(self, M)

    def reduce(self, X) -> np.ndarray:
        """Canonical coset representatives of the columns of X (box of the HNF diagonal)."""
        X = as_matrix(X).copy()
        H = self.hnf_canonical
        for i in range(self.dim):
            q = X[i] // H[i, i]
            if np.any(q != 0):
                X -= np.outer(H[:, i], q)
        return X

    @cached_property
    def _radices(self) -> tuple[int, ...]:
        return tuple(int(self.hnf_canonical[i, i]) for i in range(self.dim))

    def coset_index(self, X) -> np.ndarray:
        """Index (0..index-1) of the coset of each column of X, in lexicographic rep order."""
        R = self.reduce(X)
        idx = np.zeros(R.shape[1], dtype=object)
        for i, r in enumerate(self._radices):
            idx = idx * r + R[i]
        return idx

    def __repr__(self) -> str:
        n = self.ctx.n if self.ctx is not None else None
        return f"SublatticeBasis(dim={self.dim}, index={self.index}, n={n})"


def _basis(S) -> SublatticeBasis:
    return S if isinstance(S, SublatticeBasis) else SublatticeBasis(S)


def divides(S, M) -> bool:
    """True iff ``S^-1 @ M`` is integral, i.e. the columns of M lie in span_Z(S).

    Tested as ``X @ M == 0 (mod D)`` where ``S @ X = D * I``; no rationals.
    """
    S = _basis(S)
    M = as_matrix(M)
    if M.shape[0] != S.dim:
        raise ValueError(f"dimension mismatch: lattice {S.dim}, vectors {M.shape[0]}")
    X, D = S._scaled_inverse
    P = X.dot(M)
    return not any(int(v) % D for v in P.flat)


@dataclass(eq=False)
class CosetSystem:
    """One representative per coset of L in Z^d, sorted lexicographically."""

    basis: SublatticeBasis
    reps: list[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.reps)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Representatives as the columns of a d x ell matrix."""
        return np.array(self.reps, dtype=object).T.reshape(self.basis.dim, len(self.reps))

    def index_of(self, v) -> int:
        return int(self.basis.coset_index(as_matrix(v))[0])


def coset_reps(S, cap: int = DEFAULT_COSET_CAP) -> CosetSystem:
    """All vectors in the box ``0 <= v_j < H_jj`` of the HNF diagonal."""
    S = _basis(S)
    if S.index > cap:
        raise CosetCapError(
            f"sublattice has {S.index} cosets, above the enumeration cap {cap}; "
            "use the whole-lattice test instead or raise the cap"
        )
    ranges = [range(r) for r in S._radices]
    reps = [tuple(v) for v in itertools.product(*ranges)]
    return CosetSystem(S, reps)


def same_coset(S, u: Sequence[int], v: Sequence[int]) -> bool:
    S = _basis(S)
    if len(u) != S.dim or len(v) != S.dim:
        raise ValueError(f"vectors must have dimension {S.dim}")
    diff = [int(a) - int(b) for a, b in zip(u, v)]
    return divides(S, as_matrix(diff))


def lattice_equal(S1, S2) -> bool:
    S1, S2 = _basis(S1), _basis(S2)
    if S1.ctx is not None and S2.ctx is not None and S1.ctx.n != S2.ctx.n:
        from .cyclo import ModulusError

        raise ModulusError(f"modulus mismatch: {S1.ctx.n} vs {S2.ctx.n}")
    if S1.dim != S2.dim:
        return False
    return S1.key == S2.key
