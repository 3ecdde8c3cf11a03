"""Color symmetry group H and color fixing group K of Bravais colorings.

A Bravais coloring of Z[xi_n] by the principal ideal <alpha> assigns one
color per coset of the ideal lattice L = S Z^phi(n), with S the
multiplication matrix of alpha.  H always contains every translation and
the rotation; it contains the reflection iff ``S^-1 B S`` is integral.
The fixing group is ``T(I) x| P`` where P collects the point operations
that send every coset to itself.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from .cyclo import CycInt, ModulusContext, format_polynomial, mult_matrix
from .intlat import DEFAULT_COSET_CAP, CosetSystem, SublatticeBasis, coset_reps, divides, identity
from .symgroups import PointGroupElement, enumerate_dihedral, reflection_matrix

__all__ = [
    "CROSS_CHECK_LIMIT",
    "NotInColorGroupError",
    "ColoringModel",
    "SymmetryReport",
    "build_model",
    "is_perfect",
    "fixing_group_by_cosets",
    "fixing_group_fast",
    "fixing_elements_fast",
    "fixing_elements_by_cosets",
    "color_permutation",
    "analyze",
    "format_H",
    "format_K",
]

CROSS_CHECK_LIMIT = 512
SEMIDIRECT = "⋊"  # ⋊


class NotInColorGroupError(ValueError):
    """A reflection was applied to a coloring whose color group lacks it."""


@dataclass(eq=False)
class ColoringModel:
    """Bravais coloring by the cosets of the principal ideal ``<generator>``."""

    ctx: ModulusContext
    generator: CycInt
    sublattice: SublatticeBasis
    coset_cap: int = DEFAULT_COSET_CAP

    @property
    def ell(self) -> int:
        return self.sublattice.index

    @cached_property
    def cosets(self) -> CosetSystem:
        return coset_reps(self.sublattice, cap=self.coset_cap)

    def color_of(self, v) -> int:
        """Color (coset index) of a lattice vector."""
        return int(self.sublattice.coset_index(np.array(v, dtype=object).reshape(-1, 1))[0])

    def __repr__(self) -> str:
        return f"ColoringModel(n={self.ctx.n}, <{self.generator}>, ell={self.ell})"


def build_model(ctx: ModulusContext, alpha: CycInt, coset_cap: int = DEFAULT_COSET_CAP) -> ColoringModel:
    if alpha.ctx.n != ctx.n:
        raise ValueError(f"generator lives in M_{alpha.ctx.n}, not M_{ctx.n}")
    if not alpha:
        raise ValueError("the zero ideal does not define a coloring")
    S = SublatticeBasis(mult_matrix(alpha), ctx)
    return ColoringModel(ctx, alpha, S, coset_cap)


def is_perfect(model: ColoringModel) -> bool:
    """Reflection preserves L, i.e. ``S^-1 B S`` is integral."""
    B = reflection_matrix(model.ctx)
    return divides(model.sublattice, B.dot(model.sublattice.S))


def format_H(ctx: ModulusContext, perfect: bool) -> str:
    return f"T(G) {SEMIDIRECT} {'D' if perfect else 'C'}_{ctx.N}"


def format_K(rotation_order: int, has_reflection: bool) -> str:
    if rotation_order == 1 and not has_reflection:
        return "T(I)"
    return f"T(I) {SEMIDIRECT} {'D' if has_reflection else 'C'}_{rotation_order}"


@dataclass(eq=False)
class SymmetryReport:
    model: ColoringModel
    perfect: bool
    K_rotation_order: int
    K_has_reflection: bool
    K_reflection_axis: Optional[int] = None
    method: str = "fast"
    runtime_ms: float = 0.0
    fixing: tuple[str, ...] = field(default=(), repr=False)

    @property
    def ell(self) -> int:
        return self.model.ell

    @property
    def H_descriptor(self) -> str:
        return format_H(self.model.ctx, self.perfect)

    @property
    def K_descriptor(self) -> str:
        return format_K(self.K_rotation_order, self.K_has_reflection)

    def same_groups(self, other: "SymmetryReport") -> bool:
        return (
            self.perfect == other.perfect
            and self.K_rotation_order == other.K_rotation_order
            and self.K_has_reflection == other.K_has_reflection
            and self.K_reflection_axis == other.K_reflection_axis
            and self.fixing == other.fixing
        )

    def to_dict(self) -> dict:
        ctx = self.model.ctx
        return {
            "n": ctx.n,
            "N": ctx.N,
            "generator": format_polynomial(self.model.generator.coeffs),
            "ell": self.ell,
            "perfect": self.perfect,
            "H": self.H_descriptor,
            "K_rotation_order": self.K_rotation_order,
            "K_has_reflection": self.K_has_reflection,
            "K": self.K_descriptor,
            "runtime_ms": round(self.runtime_ms, 3),
        }

    def __str__(self) -> str:
        ctx = self.model.ctx
        lines = [
            f"n = {ctx.n} (N = {ctx.N}, phi(n) = {ctx.degree})",
            f"ideal: <{self.model.generator}>",
            f"ell = {self.ell}",
            f"perfect: {'yes' if self.perfect else 'no'}",
            f"H = {self.H_descriptor}",
            f"K = {self.K_descriptor}",
        ]
        if self.K_has_reflection:
            lines.append(f"K reflection axis: A^{self.K_reflection_axis}B")
        return "\n".join(lines)


def _candidates(model: ColoringModel, perfect: bool) -> list[PointGroupElement]:
    return [g for g in enumerate_dihedral(model.ctx) if perfect or not g.reflection]


def fixing_elements_fast(model: ColoringModel, perfect: Optional[bool] = None) -> list[PointGroupElement]:
    """Elements g of the point group with ``(M_g - I) Z^d`` inside L.

    Checking all of Z^d is the same as checking every coset representative,
    since the representatives together with L generate Z^d.
    """
    if perfect is None:
        perfect = is_perfect(model)
    I = identity(model.ctx.degree)
    S = model.sublattice
    out = []
    for g in enumerate_dihedral(model.ctx):
        if divides(S, g.matrix - I):
            if g.reflection and not perfect:
                raise AssertionError(f"{g.label} fixes every color but is not in H")
            out.append(g)
    return out


def fixing_elements_by_cosets(model: ColoringModel, perfect: Optional[bool] = None) -> list[PointGroupElement]:
    """Elements with ``S^-1 (M_g x_i - x_i)`` integral for every coset rep x_i."""
    if perfect is None:
        perfect = is_perfect(model)
    X = model.cosets.matrix
    S = model.sublattice
    return [g for g in _candidates(model, perfect) if divides(S, g.matrix.dot(X) - X)]


def _assemble(model: ColoringModel, perfect: bool, elements, method: str, t0: float) -> SymmetryReport:
    N = model.ctx.N
    ks = sorted(g.k for g in elements if not g.reflection)
    step = ks[1] if len(ks) > 1 else N
    if N % step or ks != list(range(0, N, step)):
        raise AssertionError(f"fixing rotations {ks} do not form a subgroup of C_{N}")
    refl = sorted(g.k for g in elements if g.reflection)
    return SymmetryReport(
        model=model,
        perfect=perfect,
        K_rotation_order=N // step,
        K_has_reflection=bool(refl),
        K_reflection_axis=refl[0] if refl else None,
        method=method,
        runtime_ms=(time.perf_counter() - t0) * 1e3,
        fixing=tuple(g.label for g in elements),
    )


def fixing_group_fast(model: ColoringModel) -> SymmetryReport:
    t0 = time.perf_counter()
    perfect = is_perfect(model)
    return _assemble(model, perfect, fixing_elements_fast(model, perfect), "fast", t0)


def fixing_group_by_cosets(model: ColoringModel) -> SymmetryReport:
    t0 = time.perf_counter()
    perfect = is_perfect(model)
    return _assemble(model, perfect, fixing_elements_by_cosets(model, perfect), "cosets", t0)


def color_permutation(model: ColoringModel, g: PointGroupElement) -> list[int]:
    """Permutation of coset indices induced by g; ``perm[i]`` is the image of color i."""
    if g.reflection and not is_perfect(model):
        raise NotInColorGroupError(
            f"{g.label} does not preserve the ideal <{model.generator}>, so it is not in H"
        )
    X = model.cosets.matrix
    images = model.sublattice.coset_index(g.matrix.dot(X))
    perm = [int(v) for v in images]
    if sorted(perm) != list(range(model.ell)):
        raise AssertionError(f"{g.label} does not permute the colors")
    return perm


def analyze(ctx: ModulusContext, alpha: CycInt, cross_check_limit: int = CROSS_CHECK_LIMIT) -> SymmetryReport:
    """H and K for the coloring by ``<alpha>``; per-coset cross-check for small ell."""
    t0 = time.perf_counter()
    model = build_model(ctx, alpha)
    report = fixing_group_fast(model)
    if model.ell <= cross_check_limit:
        slow = fixing_group_by_cosets(model)
        if not report.same_groups(slow):
            raise AssertionError(
                f"whole-lattice and per-coset fixing groups disagree for <{alpha}> in M_{ctx.n}: "
                f"{report.fixing} vs {slow.fixing}"
            )
    report.runtime_ms = (time.perf_counter() - t0) * 1e3
    return report
