import random

import pytest

from cyclocolor.cyclo import CycInt, context, mult_matrix, parse_generator
from cyclocolor.idealsearch import (
    enumerate_ideals,
    generator_order_key,
    ideal_key,
    iter_box,
    verify_generator,
)
from cyclocolor.intlat import hnf_key

from conftest import random_element


@pytest.fixture(scope="module")
def catalog15():
    return enumerate_ideals(context(15), 256, 2)


def test_m15_catalog_norms(catalog15):
    norms = {e.norm for e in catalog15}
    assert {16, 25, 31, 61, 81, 121, 151, 181, 211, 241, 256} <= norms
    assert len({e.hnf_key for e in catalog15 if e.norm == 256}) >= 2


def test_m15_catalog_contains_both_256_ideals(catalog15):
    ctx = context(15)
    keys = {e.hnf_key for e in catalog15}
    assert ideal_key(parse_generator("2", ctx)) in keys
    assert ideal_key(parse_generator("(1+x+x^4)^2", ctx)) in keys


def test_m15_catalog_entries_consistent(catalog15):
    seen = set()
    for e in catalog15:
        assert e.hnf_key not in seen
        seen.add(e.hnf_key)
        assert hnf_key(mult_matrix(e.sample_generator)) == e.hnf_key
        assert abs(e.sample_generator.norm()) == e.norm
    assert catalog15 == sorted(catalog15, key=lambda e: (e.norm, e.hnf_key))


def test_m16_small_norms():
    entries = enumerate_ideals(context(16), 4, 1)
    assert [e.norm for e in entries] == [2, 4]


@pytest.mark.parametrize("n", [3, 5, 8, 12])
def test_units_excluded(n):
    assert enumerate_ideals(context(n), 1, 2) == []


def test_matches_brute_force_m5():
    # oracle: per-element exact norms over the whole box
    ctx = context(5)
    brute = {}
    for a in iter_box(ctx, 2):
        nrm = abs(a.norm())
        if 2 <= nrm <= 60:
            key = ideal_key(a)
            if key not in brute or generator_order_key(a.coeffs) < generator_order_key(brute[key].coeffs):
                brute[key] = a
    found = enumerate_ideals(ctx, 60, 2)
    assert {e.hnf_key: e.sample_generator for e in found} == brute


def test_associates_collapse():
    rng = random.Random(3)
    for n in (5, 8, 12, 15, 16):
        ctx = context(n)
        for _ in range(20):
            alpha = random_element(rng, ctx, bound=2)
            k = rng.randrange(ctx.n)
            unit = parse_generator(f"x^{k}", ctx) * rng.choice([-1, 1])
            assert ideal_key(alpha) == ideal_key(unit * alpha)


def test_norm_multiplicative_across_catalog():
    ctx = context(8)
    entries = enumerate_ideals(ctx, 64, 2)
    by_key = {e.hnf_key: e for e in entries}
    for a in entries[:6]:
        for b in entries[:6]:
            prod = a.sample_generator * b.sample_generator
            if max(abs(c) for c in prod.coeffs) <= 2 and a.norm * b.norm <= 64:
                assert by_key[ideal_key(prod)].norm == a.norm * b.norm


@pytest.mark.parametrize(
    "n, gen, nrm",
    [(15, "1+x^3+x^5+x^7", 61), (16, "(1-x)^7", 128), (12, "1", 1)],
)
def test_verify_generator(n, gen, nrm):
    assert verify_generator(context(n), parse_generator(gen, context(n)), nrm)


def test_threads_same_result():
    ctx = context(12)
    assert enumerate_ideals(ctx, 50, 2, threads=2) == enumerate_ideals(ctx, 50, 2)


def test_bad_bound():
    with pytest.raises(ValueError):
        enumerate_ideals(context(5), 10, 0)
