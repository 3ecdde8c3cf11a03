"""Integer matrices for the point group D_N of the module Z[xi_n].

``A`` is the N-fold rotation (multiplication by a primitive N-th root of
unity), ``B`` the reflection (complex conjugation).  Group elements are
``A^k`` and ``A^k B`` for ``0 <= k < N``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclo import ModulusContext, reduce
from .intlat import determinant, identity

__all__ = [
    "PointGroupElement",
    "companion_matrix",
    "rotation_matrix",
    "reflection_matrix",
    "enumerate_dihedral",
    "matrix_power",
]


def matrix_power(M: np.ndarray, k: int) -> np.ndarray:
    result = identity(M.shape[0])
    base = M
    while k:
        if k & 1:
            result = result.dot(base)
        base = base.dot(base)
        k >>= 1
    return result


def companion_matrix(ctx: ModulusContext) -> np.ndarray:
    """Multiplication by xi_n on the power basis."""
    d = ctx.degree
    C = np.zeros((d, d), dtype=object)
    C[:] = 0
    for j in range(d - 1):
        C[j + 1, j] = 1
    for i in range(d):
        C[i, d - 1] = -ctx.cyclotomic_poly[i]
    return C


@lru_cache(maxsize=None)
def _rotation(n: int, ctx: ModulusContext) -> np.ndarray:
    C = companion_matrix(ctx)
    if n % 2 == 0:
        A = C
    else:
        # xi_{2n} = -xi_n^((n+1)/2)
        A = -matrix_power(C, (n + 1) // 2)
    I = identity(ctx.degree)
    N = ctx.N
    for k in range(1, N):
        if (matrix_power(A, k) == I).all():
            raise AssertionError(f"rotation for n={n} has order {k}, expected {N}")
    if not (matrix_power(A, N) == I).all():
        raise AssertionError(f"rotation for n={n} does not have order {N}")
    A.setflags(write=False)
    return A


def rotation_matrix(ctx: ModulusContext) -> np.ndarray:
    """Matrix of the N-fold rotation; its order is verified on first use."""
    return _rotation(ctx.n, ctx).copy()


@lru_cache(maxsize=None)
def _reflection(n: int, ctx: ModulusContext) -> np.ndarray:
    cols = []
    for j in range(ctx.degree):
        raw = [0] * n
        raw[(n - j) % n] = 1
        cols.append(reduce(raw, ctx).coeffs)
    B = np.array(cols, dtype=object).T.copy()
    B.setflags(write=False)
    return B


def reflection_matrix(ctx: ModulusContext) -> np.ndarray:
    """Matrix of complex conjugation; column j is xi^(n-j) reduced."""
    return _reflection(ctx.n, ctx).copy()


@dataclass(frozen=True, eq=False)
class PointGroupElement:
    ctx: ModulusContext
    k: int
    reflection: bool
    matrix: np.ndarray

    @property
    def kind(self) -> tuple[str, int]:
        return ("reflection" if self.reflection else "rotation", self.k)

    @property
    def label(self) -> str:
        rot = "I" if self.k == 0 else ("A" if self.k == 1 else f"A^{self.k}")
        if not self.reflection:
            return rot
        return "B" if self.k == 0 else rot + "B"

    def __repr__(self) -> str:
        return f"PointGroupElement(n={self.ctx.n}, {self.label})"


@lru_cache(maxsize=None)
def _dihedral(n: int, ctx: ModulusContext) -> tuple[PointGroupElement, ...]:
    A = _rotation(n, ctx)
    B = _reflection(n, ctx)
    N = ctx.N
    elements = []
    P = identity(ctx.degree)
    powers = []
    for k in range(N):
        powers.append(P)
        P = P.dot(A)
    for k in range(N):
        elements.append(PointGroupElement(ctx, k, False, powers[k]))
    for k in range(N):
        elements.append(PointGroupElement(ctx, k, True, powers[k].dot(B)))
    keys = {tuple(e.matrix.flat) for e in elements}
    assert len(keys) == 2 * N, "dihedral elements are not distinct"
    for e in elements:
        assert abs(determinant(e.matrix)) == 1
        e.matrix.setflags(write=False)
    return tuple(elements)


def enumerate_dihedral(ctx: ModulusContext) -> list[PointGroupElement]:
    """All 2N elements: rotations A^k by increasing k, then reflections A^k B."""
    return list(_dihedral(ctx.n, ctx))
