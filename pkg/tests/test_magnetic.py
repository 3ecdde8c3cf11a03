import re

import pytest

from cyclocolor.colorsym import is_perfect
from cyclocolor.cyclo import CLASS_NUMBER_ONE, context, mult_matrix, parse_generator
from cyclocolor.idealsearch import enumerate_ideals
from cyclocolor.intlat import SublatticeBasis, lattice_equal
from cyclocolor.magnetic import (
    BLACK_AND_WHITE,
    GREY,
    WHITE,
    MagneticSymbol,
    classify,
    classify_by_search,
    format_symbol,
    order_of_two,
    two_coloring,
)


@pytest.mark.parametrize("n", [4, 8])
def test_grey_witness_one_plus_xi(n):
    c = classify(context(n))
    assert c.verdict == GREY
    assert str(c.witness) == "1+x"
    assert abs(c.witness.norm()) == 2
    assert c.min_norm_above_2 == 2


def test_m5_black_and_white():
    c = classify(context(5))
    assert c.verdict == BLACK_AND_WHITE and c.witness is None
    assert c.min_norm_above_2 == 16


def test_min_norm_m15():
    # 2 has order 4 mod 15: primes above 2 in M_15 have norm 16
    assert classify(context(15)).min_norm_above_2 == 16
    assert order_of_two(15) == 4


@pytest.mark.parametrize("n", [n for n in CLASS_NUMBER_ONE if context(n).degree <= 8])
def test_analytic_rule_matches_search(n):
    assert classify(context(n)).verdict == classify_by_search(context(n))


class TestSymbols:
    @pytest.mark.parametrize(
        "N, kind, sub, text",
        [
            (4, GREY, None, "4mm1'"),
            (8, GREY, None, "8mm1'"),
            (6, BLACK_AND_WHITE, "vertical", "6'mm'"),
            (10, BLACK_AND_WHITE, "horizontal", "10'm'm"),
            (10, BLACK_AND_WHITE, "mirror-1", "10'm'm"),
            (6, BLACK_AND_WHITE, "mirror-2", "6'mm'"),
            (8, BLACK_AND_WHITE, "mirror-1", "8'mm'"),
            (8, BLACK_AND_WHITE, "mirror-2", "8'm'm"),
            (10, BLACK_AND_WHITE, "rotations", "10m'm'"),
            (4, WHITE, None, "4mm"),
        ],
    )
    def test_format(self, N, kind, sub, text):
        assert format_symbol(N, kind, sub) == text

    def test_dataclass(self):
        assert MagneticSymbol(10, BLACK_AND_WHITE, "horizontal").text == "10'm'm"

    def test_grey_with_subgroup_rejected(self):
        with pytest.raises(ValueError):
            format_symbol(4, GREY, "rotations")

    def test_black_and_white_needs_choice(self):
        with pytest.raises(ValueError):
            format_symbol(10, BLACK_AND_WHITE)

    @pytest.mark.parametrize("N", [4, 6, 8, 10, 12, 16, 30])
    def test_token_structure(self, N):
        outs = [format_symbol(N, GREY)] + [
            format_symbol(N, BLACK_AND_WHITE, s) for s in ("rotations", "mirror-1", "mirror-2")
        ]
        for s in outs:
            assert len(re.findall(r"\d+", s.replace("1'", ""))) == 1
            assert s.count("m") == 2
        assert outs[0].endswith("1'")


def test_two_coloring_m8():
    m = two_coloring(context(8))
    assert m is not None and m.ell == 2 and is_perfect(m)


def test_two_coloring_m16_is_one_minus_xi():
    ctx = context(16)
    m = two_coloring(ctx)
    assert m.ell == 2 and is_perfect(m)
    other = SublatticeBasis(mult_matrix(parse_generator("1-x", ctx)), ctx)
    assert lattice_equal(m.sublattice, other)


def test_two_coloring_m15_absent():
    assert two_coloring(context(15)) is None
    assert not any(e.norm == 2 for e in enumerate_ideals(context(15), 2, 3))


@pytest.mark.parametrize("n", [4, 8, 16, 32])
def test_grey_two_colorings_perfect(n):
    m = two_coloring(context(n))
    assert m.ell == 2 and is_perfect(m)
