"""Reference values of H and K for the moduli n = 15 and n = 16.

Each row is ``(ell, H, K, generator)`` with the generator written in the
CLI syntax (``x`` stands for xi_n).  Rows are kept in published order.
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = ["TableRow", "REFERENCE_TABLES", "reference_rows"]


@dataclass(frozen=True)
class TableRow:
    n: int
    ell: int
    H_text: str
    K_text: str
    generator_text: str

    def cells(self) -> tuple[str, ...]:
        return (str(self.n), str(self.ell), self.H_text, self.K_text, self.generator_text)


_S = "⋊"

_TABLE_15 = [
    # ell = 16, non-perfect, a prime above 2
    (16, f"T(G) {_S} C_30", f"T(I) {_S} C_2", "1+x+x^4"),
    # ell = 25, perfect
    (25, f"T(G) {_S} D_30", f"T(I) {_S} C_5", "1-x^3"),
    (31, f"T(G) {_S} C_30", "T(I)", "1+x+x^3"),
    (61, f"T(G) {_S} C_30", "T(I)", "1+x^3+x^5+x^7"),
    # ell = 81, perfect
    (81, f"T(G) {_S} D_30", f"T(I) {_S} C_3", "1-x^5"),
    (121, f"T(G) {_S} C_30", "T(I)", "2+x^3+x^6"),
    (151, f"T(G) {_S} C_30", "T(I)", "1-2x"),
    (181, f"T(G) {_S} C_30", "T(I)", "1+x+x^3+x^5+x^7"),
    (211, f"T(G) {_S} C_30", "T(I)", "1+x^2+2x^3"),
    (241, f"T(G) {_S} C_30", "T(I)", "1-x^6+2x^7-x^9"),
    # the two 256-color rows: <2> perfect, <(1+x+x^4)^2> not
    (256, f"T(G) {_S} D_30", f"T(I) {_S} C_2", "2"),
    (256, f"T(G) {_S} C_30", "T(I)", "(1+x+x^4)^2"),
]

_TABLE_16 = [
    (2, f"T(G) {_S} D_16", f"T(I) {_S} D_16", "1-x"),
    (4, f"T(G) {_S} D_16", f"T(I) {_S} D_8", "1-x^2"),
    (8, f"T(G) {_S} D_16", f"T(I) {_S} C_4", "(1-x)^3"),
    (16, f"T(G) {_S} D_16", f"T(I) {_S} C_4", "1-x^4"),
    (17, f"T(G) {_S} C_16", "T(I)", "1-x+x^3"),
    (32, f"T(G) {_S} D_16", f"T(I) {_S} C_2", "(1-x)^5"),
    (34, f"T(G) {_S} C_16", "T(I)", "(1-x)(1-x+x^3)"),
    (49, f"T(G) {_S} C_16", "T(I)", "1-x-x^2"),
    (64, f"T(G) {_S} D_16", f"T(I) {_S} C_2", "(1-x^2)^3"),
    (68, f"T(G) {_S} C_16", "T(I)", "(1-x^2)(1-x+x^3)"),
    (81, f"T(G) {_S} C_16", "T(I)", "1+x^4+x^6"),
    (97, f"T(G) {_S} C_16", "T(I)", "1+2x^3+x^5+x^7"),
    (98, f"T(G) {_S} C_16", "T(I)", "(1-x)(1-x-x^2)"),
    (113, f"T(G) {_S} C_16", "T(I)", "2-2x+x^5"),
    (128, f"T(G) {_S} D_16", f"T(I) {_S} C_2", "(1-x)^7"),
    (136, f"T(G) {_S} C_16", "T(I)", "(1-x)^3(1-x+x^3)"),
    (162, f"T(G) {_S} C_16", "T(I)", "(1-x)(1+x^4+x^6)"),
    (193, f"T(G) {_S} C_16", "T(I)", "1-x^2-x^3+x^4+x^7"),
    (194, f"T(G) {_S} C_16", "T(I)", "(1-x)(1+2x^3+x^5+x^7)"),
    (196, f"T(G) {_S} C_16", "T(I)", "(1-x^2)(1-x-x^2)"),
    (226, f"T(G) {_S} C_16", "T(I)", "(1-x)(2-2x+x^5)"),
    (241, f"T(G) {_S} C_16", "T(I)", "1-x-x^2+x^3+x^5"),
    (256, f"T(G) {_S} D_16", f"T(I) {_S} C_2", "2"),
]

REFERENCE_TABLES: dict[int, tuple[TableRow, ...]] = {
    15: tuple(TableRow(15, *row) for row in _TABLE_15),
    16: tuple(TableRow(16, *row) for row in _TABLE_16),
}


def reference_rows(n: int) -> tuple[TableRow, ...]:
    try:
        return REFERENCE_TABLES[n]
    except KeyError:
        raise KeyError(f"no built-in table for n={n}; built-in tables exist for n in (15, 16)") from None
