import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from cyclocolor.cyclo import CLASS_NUMBER_ONE, CycInt, context

SMALL_MODULI = [n for n in CLASS_NUMBER_ONE if context(n).degree <= 8]


def rational_inverse(M):
    """Exact inverse with Fractions (Gauss-Jordan); oracle for integrality tests."""
    A = [[Fraction(int(v)) for v in row] for row in np.asarray(M)]
    n = len(A)
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        p = next(i for i in range(k, n) if A[i][k] != 0)
        A[k], A[p] = A[p], A[k]
        inv[k], inv[p] = inv[p], inv[k]
        piv = A[k][k]
        A[k] = [v / piv for v in A[k]]
        inv[k] = [v / piv for v in inv[k]]
        for i in range(n):
            if i != k and A[i][k] != 0:
                f = A[i][k]
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
                inv[i] = [a - f * b for a, b in zip(inv[i], inv[k])]
    return inv


def rational_divides(S, M):
    inv = rational_inverse(S)
    M = np.asarray(M)
    if M.ndim == 1:
        M = M.reshape(-1, 1)
    for row in inv:
        for j in range(M.shape[1]):
            if sum(r * int(M[i, j]) for i, r in enumerate(row)).denominator != 1:
                return False
    return True


def float_norm(alpha: CycInt) -> float:
    """Product of |sigma_k(alpha)|^2 over one embedding per conjugate pair."""
    n = alpha.ctx.n
    out = 1.0
    for k in range(1, n):
        if math.gcd(k, n) == 1 and k < n - k:
            z = sum(c * complex(math.cos(2 * math.pi * k * j / n), math.sin(2 * math.pi * k * j / n))
                    for j, c in enumerate(alpha.coeffs))
            out *= abs(z) ** 2
    return out


def random_element(rng: random.Random, ctx, bound=2, density=0.6):
    while True:
        c = tuple(rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(ctx.degree))
        if any(c):
            return CycInt(ctx, c)


@st.composite
def elements(draw, moduli=tuple(SMALL_MODULI), bound=3, nonzero=False):
    n = draw(st.sampled_from(moduli))
    ctx = context(n)
    c = draw(st.lists(st.integers(-bound, bound), min_size=ctx.degree, max_size=ctx.degree))
    if nonzero and not any(c):
        c[0] = 1
    return CycInt(ctx, tuple(c))


@st.composite
def element_pairs(draw, moduli=tuple(SMALL_MODULI), bound=3):
    n = draw(st.sampled_from(moduli))
    ctx = context(n)
    vec = st.lists(st.integers(-bound, bound), min_size=ctx.degree, max_size=ctx.degree)
    return CycInt(ctx, tuple(draw(vec))), CycInt(ctx, tuple(draw(vec)))


@pytest.fixture
def rng():
    return random.Random(20261016)
