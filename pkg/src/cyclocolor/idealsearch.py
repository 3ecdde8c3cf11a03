"""Box search for principal ideals of Z[xi_n] of bounded norm.

Every nonzero ``alpha`` with coefficients in ``[-b, b]`` is screened by a
floating-point norm (product of ``|sigma_k(alpha)|^2`` over conjugate
pairs); survivors get an exact HNF, whose diagonal product is the exact
norm and whose entries identify the ideal.  The search is complete only
inside the box.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .cyclo import CycInt, ModulusContext, context, norm
from .intlat import hnf_key
from .symgroups import companion_matrix, matrix_power

__all__ = [
    "IdealCatalogEntry",
    "enumerate_ideals",
    "verify_generator",
    "generator_order_key",
    "ideal_key",
]


@dataclass(frozen=True)
class IdealCatalogEntry:
    norm: int
    hnf_key: tuple[tuple[int, ...], ...]
    sample_generator: CycInt

    def __repr__(self) -> str:
        return f"IdealCatalogEntry(norm={self.norm}, <{self.sample_generator}>)"


def generator_order_key(coeffs) -> tuple:
    """Term order for picking a sample generator: (sum |c_j|, coefficient vector)."""
    coeffs = tuple(int(c) for c in coeffs)
    return (sum(abs(c) for c in coeffs), coeffs)


def ideal_key(alpha: CycInt) -> tuple[tuple[int, ...], ...]:
    """Canonical HNF of the ideal lattice <alpha>."""
    return hnf_key(alpha.mult_matrix())


def verify_generator(ctx: ModulusContext, alpha: CycInt, expected_norm: int) -> bool:
    return abs(norm(alpha)) == expected_norm


def _embedding_columns(n: int, degree: int) -> np.ndarray:
    ks = [k for k in range(1, n) if math.gcd(k, n) == 1 and k < n - k]
    return np.exp(2j * np.pi * np.outer(np.arange(degree), ks) / n)


def _scan_chunk(args) -> list[tuple[int, tuple, tuple]]:
    """Scan the sub-box with a fixed leading coefficient; returns (norm, key, coeffs)."""
    n, lead, bound, max_norm = args
    ctx = context(n)
    d = ctx.degree
    W = _embedding_columns(n, d)
    C = companion_matrix(ctx).astype(np.int64)
    powers = np.stack([matrix_power(C, j).astype(np.int64) for j in range(d)])
    found: dict[tuple, tuple[int, tuple]] = {}
    rest_range = range(-bound, bound + 1)
    # fix the top coefficient, batch over the remaining d-1 coordinates
    tail = np.array(list(itertools.product(rest_range, repeat=d - 1)), dtype=np.int64).reshape(-1, d - 1)
    box = np.empty((tail.shape[0], d), dtype=np.int64)
    box[:, : d - 1] = tail
    box[:, d - 1] = lead
    box = box[np.any(box != 0, axis=1)]
    approx = np.prod(np.abs(box @ W) ** 2, axis=1)
    keep = (approx > 1.5) & (approx < max_norm + 0.5)
    cand = box[keep]
    if cand.size == 0:
        return []
    mats = np.einsum("bj,jrc->brc", cand, powers)
    for coeffs, M, approx_norm in zip(cand, mats, approx[keep]):
        key = hnf_key(M.tolist())
        exact = math.prod(key[i][i] for i in range(d))
        if exact != round(float(approx_norm)):
            raise AssertionError(f"float norm screen disagrees with exact norm {exact} for {coeffs}")
        c = tuple(int(v) for v in coeffs)
        prev = found.get(key)
        if prev is None or generator_order_key(c) < generator_order_key(prev[1]):
            found[key] = (exact, c)
    return [(nrm, key, c) for key, (nrm, c) in found.items()]


def enumerate_ideals(
    ctx: ModulusContext,
    max_norm: int,
    coeff_bound: int = 2,
    threads: int = 1,
) -> list[IdealCatalogEntry]:
    """Principal ideals with ``2 <= norm <= max_norm`` found in the coefficient box.

    Args:
        ctx: the modulus.
        max_norm: largest norm kept.
        coeff_bound: box half-width; coefficients range over ``[-b, b]``.
        threads: worker processes; the box is split by its top coefficient.

    Returns:
        Entries sorted by (norm, HNF key), one per distinct ideal.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    if max_norm < 2:
        return []
    jobs = [(ctx.n, lead, coeff_bound, max_norm) for lead in range(-coeff_bound, coeff_bound + 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_scan_chunk, jobs))
    else:
        chunks = [_scan_chunk(job) for job in jobs]
    merged: dict[tuple, tuple[int, tuple]] = {}
    for chunk in chunks:
        for nrm, key, c in chunk:
            prev = merged.get(key)
            if prev is None or generator_order_key(c) < generator_order_key(prev[1]):
                merged[key] = (nrm, c)
    entries = [
        IdealCatalogEntry(nrm, key, CycInt(ctx, c)) for key, (nrm, c) in merged.items()
    ]
    entries.sort(key=lambda e: (e.norm, e.hnf_key))
    return entries


def iter_box(ctx: ModulusContext, coeff_bound: int) -> Iterator[CycInt]:
    """Every nonzero element with coefficients in ``[-b, b]`` (small boxes only)."""
    for c in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=ctx.degree):
        if any(c):
            yield CycInt(ctx, c)
