"""Magnetic (black-and-white) point groups of the modules M_n.

A module gives a grey magnetic point group exactly when it has a Bravais
two-coloring, i.e. an ideal of index two.  Writing ``n = 2^a m`` with m
odd, the primes above 2 have norm ``2^f`` where f is the multiplicative
order of 2 modulo m, so index two occurs iff n is a power of two.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .colorsym import ColoringModel, build_model
from .cyclo import CycInt, ModulusContext
from .idealsearch import enumerate_ideals

__all__ = [
    "GREY",
    "BLACK_AND_WHITE",
    "WHITE",
    "UNPRIMED_CHOICES",
    "MagneticClassification",
    "MagneticSymbol",
    "odd_part",
    "order_of_two",
    "classify",
    "classify_by_search",
    "format_symbol",
    "two_coloring",
]

GREY = "grey"
BLACK_AND_WHITE = "black-and-white"
WHITE = "white"

# Unprimed subgroup of the dihedral point group Nmm:
#   full       -- every operation unprimed (white group)
#   rotations  -- C_N unprimed, every mirror primed
#   mirror-1   -- D_{N/2} containing the reflection B (mirror line along the real axis)
#   mirror-2   -- D_{N/2} containing A B
# Aliases name the mirror line in the rendered patch.
UNPRIMED_CHOICES = ("full", "rotations", "mirror-1", "mirror-2", "horizontal", "vertical")


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def order_of_two(m: int) -> int:
    """Multiplicative order of 2 modulo odd m (1 for m = 1)."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    if m == 1:
        return 1
    f, p = 1, 2 % m
    while p != 1:
        p = (p * 2) % m
        f += 1
    return f


@dataclass(frozen=True)
class MagneticClassification:
    n: int
    verdict: str
    witness: Optional[CycInt]
    min_norm_above_2: int

    def __post_init__(self):
        grey = self.verdict == GREY
        if grey != (self.witness is not None) or grey != (self.min_norm_above_2 == 2):
            raise ValueError("inconsistent magnetic classification")

    @property
    def symbol(self) -> Optional[str]:
        """Grey symbol ``Nmm1'``; black-and-white symbols need a subgroup choice."""
        if self.verdict != GREY:
            return None
        N = self.n if self.n % 2 == 0 else 2 * self.n
        return format_symbol(N, GREY)


def classify(ctx: ModulusContext) -> MagneticClassification:
    f = order_of_two(odd_part(ctx.n))
    min_norm = 2**f
    if min_norm == 2:
        witness = ctx.one + ctx.xi
        # the analytic shortcut must agree with the actual norm
        assert abs(witness.norm()) == 2, f"1+x has norm {witness.norm()} in M_{ctx.n}"
        return MagneticClassification(ctx.n, GREY, witness, 2)
    return MagneticClassification(ctx.n, BLACK_AND_WHITE, None, min_norm)


def classify_by_search(ctx: ModulusContext, coeff_bound: int = 2) -> str:
    """Grey iff the coefficient box contains an element of norm 2."""
    found = enumerate_ideals(ctx, 2, coeff_bound)
    return GREY if any(e.norm == 2 for e in found) else BLACK_AND_WHITE


@dataclass(frozen=True)
class MagneticSymbol:
    N: int
    group_type: str
    unprimed_subgroup: str = "full"

    @property
    def text(self) -> str:
        return format_symbol(self.N, self.group_type, self.unprimed_subgroup)


def _mirror_slot(N: int, choice: str) -> int:
    """0 if the unprimed mirror class is written first in ``Nmm``, else 1.

    The first ``m`` is the class holding the vertical mirror line, which is
    A^(N/2) B; it shares a class with B exactly when N/2 is even.
    """
    if choice == "vertical":
        return 0
    if choice == "horizontal":
        choice = "mirror-1"
    vertical_class = "mirror-1" if (N // 2) % 2 == 0 else "mirror-2"
    return 0 if choice == vertical_class else 1


def format_symbol(N: int, group_type: str, unprimed_subgroup: Optional[str] = None) -> str:
    """Hermann-Mauguin symbol of a magnetic dihedral point group, e.g. ``"10'm'm"``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if group_type == GREY:
        if unprimed_subgroup not in (None, "full"):
            raise ValueError("a grey group has no unprimed subgroup choice")
        return f"{N}mm1'"
    if group_type == WHITE:
        if unprimed_subgroup not in (None, "full"):
            raise ValueError("a white group leaves every operation unprimed")
        return f"{N}mm"
    if group_type != BLACK_AND_WHITE:
        raise ValueError(f"unknown magnetic group type {group_type!r}")
    if unprimed_subgroup not in UNPRIMED_CHOICES or unprimed_subgroup == "full":
        raise ValueError(
            "black-and-white symbols need an index-2 unprimed subgroup: "
            "rotations, mirror-1, mirror-2, horizontal or vertical"
        )
    if unprimed_subgroup == "rotations":
        return f"{N}m'm'"
    if N % 2:
        raise ValueError(f"D_{N} with N odd has no index-2 dihedral subgroup")
    if _mirror_slot(N, unprimed_subgroup) == 0:
        return f"{N}'mm'"
    return f"{N}'m'm"


def two_coloring(ctx: ModulusContext) -> Optional[ColoringModel]:
    """The index-2 Bravais coloring when the module is grey, else None."""
    c = classify(ctx)
    if c.witness is None:
        return None
    return build_model(ctx, c.witness)
