from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallreps.reps import (
    DominantWeight,
    IrrepLabel,
    binomial_superdim,
    character,
    dimension,
    dominant_multiplicities,
    enumerate_dominant_up_to_dim,
    kacweyl_superdim,
    superdim,
    weyl_dim,
)
from smallreps.rootsys import build
from smallreps.weylsum import graded_multiplicities


def unit(m, i, k=1):
    return DominantWeight(tuple(k * int(j == i - 1) for j in range(m)))


def hook_content_dim(labels):
    """dim of the sl_(m+1) irreducible with these Dynkin labels, via semistandard tableaux count."""
    n = len(labels) + 1
    shape = [sum(labels[i:]) for i in range(len(labels))] + [0]
    num = den = 1
    for r, row in enumerate(shape):
        for c in range(row):
            num *= n + c - r
            arm = row - c - 1
            leg = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
            den *= arm + leg + 1
    return Fraction(num, den)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_type_a_against_hook_content(m, raw):
    rs = build(("A", m))
    a = tuple(raw[:m])
    if not any(a):
        return
    assert weyl_dim(rs, a) == hook_content_dim(a)


@pytest.mark.parametrize("m", range(2, 8))
def test_classical_fundamentals(m):
    b, c = build(("B", m)), build(("C", m))
    for k in range(1, m + 1):
        # sp(2m): primitive part of the k-th exterior power; so(2m+1): exterior powers and the spin module
        assert weyl_dim(c, unit(m, k)) == comb(2 * m, k) - (comb(2 * m, k - 2) if k >= 2 else 0)
        assert weyl_dim(b, unit(m, k)) == (comb(2 * m + 1, k) if k < m else 2**m)
    if m >= 4:
        d = build(("D", m))
        for k in range(1, m - 1):
            assert weyl_dim(d, unit(m, k)) == comb(2 * m, k)
        assert weyl_dim(d, unit(m, m - 1)) == weyl_dim(d, unit(m, m)) == 2 ** (m - 1)


@pytest.mark.parametrize(
    "dtype,i,want",
    [(("E", 6), 1, 27), (("E", 6), 6, 27), (("E", 6), 2, 78), (("E", 7), 7, 56), (("E", 7), 1, 133),
     (("E", 8), 8, 248), (("E", 8), 1, 3875), (("E", 8), 7, 30380), (("F", 4), 4, 26), (("F", 4), 1, 52),
     (("G", 2), 1, 7), (("G", 2), 2, 14)],
)
def test_exceptional_dims(dtype, i, want):
    rs = build(dtype)
    assert weyl_dim(rs, unit(rs.rank, i)) == want


def test_product_formulas_refuse_wrong_kind():
    with pytest.raises(ValueError):
        weyl_dim(build(("BC", 2)), (1, 0))
    with pytest.raises(ValueError):
        kacweyl_superdim(build(("C", 2)), (1, 0))


@pytest.mark.parametrize("m", range(1, 9))
def test_binomial_superdim(m):
    rs = build(("BC", m))
    for r in range(1, m + 1):
        assert kacweyl_superdim(rs, unit(m, r)) == binomial_superdim(m, r)


def test_osp12_standard_module():
    rs = build(("BC", 1))
    ch = character(rs, (1,))
    # weights +-eps even, 0 odd: superdim 1, total 3
    assert ch.dominant == {(2,): (1, 0), (0,): (0, 1)}
    assert ch.superdim() == 1 and ch.dim_total() == 3


def test_osp_standard_module():
    for m in range(2, 6):
        rs = build(("BC", m))
        ch = character(rs, unit(m, 1))
        assert ch.dim_total() == 2 * m + 1
        assert ch.superdim() == 2 * m - 1


def test_parity_flip():
    rs = build(("BC", 2))
    v = character(rs, IrrepLabel(DominantWeight((0, 1)), "V"))
    w = character(rs, IrrepLabel(DominantWeight((0, 1)), "W"))
    assert w == v.flip()
    assert superdim(rs, IrrepLabel(DominantWeight((0, 1)), "W")) == -2


def test_bc2_beta2_total_dimension():
    rs = build(("BC", 2))
    ch = character(rs, (0, 1))
    assert ch.superdim() == 2
    assert ch.dim_total() == 10


def test_character_arithmetic():
    rs = build(("A", 2))
    a, b = character(rs, (1, 0)), character(rs, (0, 1))
    assert (a + b - b) == a
    assert (2 * a).dim_total() == 6
    with pytest.raises(ValueError):
        a + character(build(("A", 3)), (1, 0, 0))


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        DominantWeight((1, -1))
    with pytest.raises(ValueError):
        dominant_multiplicities(build(("A", 2)), (-1, 0))


def test_weight_formatting():
    lam = DominantWeight.parse("2, 0,1")
    assert str(lam) == "2b1+b3"
    assert lam.csv() == "2,0,1"
    assert str(DominantWeight((0, 0))) == "0"


SAMPLE_TYPES = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4), ("BC", 2), ("BC", 3)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SAMPLE_TYPES), st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_multiplicities_sum_to_dimension(dt, raw):
    rs = build(dt)
    a = tuple(raw[: rs.rank])
    if not any(a) or dimension(rs, a) > 3000:
        return
    ch = character(rs, a)
    got = ch.superdim() if rs.is_super else ch.dim_total()
    assert got == dimension(rs, a)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SAMPLE_TYPES), st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_freudenthal_matches_weyl_sum(dt, raw):
    rs = build(dt)
    a = tuple(raw[: rs.rank])
    if not any(a) or dimension(rs, a) > 2000:
        return
    assert graded_multiplicities(rs, rs.beta_to_labels(a)) == character(rs, a).dominant


@pytest.mark.parametrize("dt,bound", [(("A", 3), 60), (("B", 3), 120), (("C", 4), 200), (("G", 2), 300), (("BC", 2), 6), (("BC", 3), 40)])
def test_enumeration_against_box_scan(dt, bound):
    rs = build(dt)
    got = enumerate_dominant_up_to_dim(rs, bound)
    box = [
        DominantWeight(a)
        for a in product(range(8), repeat=rs.rank)
        if any(a) and dimension(rs, a) <= bound
    ]
    assert sorted(got) == sorted(box)
    assert len(set(got)) == len(got)


def test_bc2_up_to_six():
    rs = build(("BC", 2))
    got = set(enumerate_dominant_up_to_dim(rs, 6))
    assert DominantWeight((2, 0)) in got and DominantWeight((1, 1)) in got
    assert all(dimension(rs, lam) <= 6 for lam in got)


def test_enumeration_errors():
    with pytest.raises(ValueError):
        enumerate_dominant_up_to_dim(build(("BC", 1)), 5)
    with pytest.raises(ValueError):
        enumerate_dominant_up_to_dim(build(("A", 2)), 0)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("BC", 3)]), st.lists(st.integers(0, 2), min_size=3, max_size=3), st.integers(0, 2))
def test_dimension_is_monotone(dt, raw, i):
    rs = build(dt)
    a = tuple(raw)
    if not any(a):
        return
    b = tuple(x + (j == i) for j, x in enumerate(a))
    assert dimension(rs, b) > dimension(rs, a)


def test_listed_dimensions():
    assert weyl_dim(build(("A", 1)), (1,)) == 2
    assert weyl_dim(build(("E", 8)), (0,) * 7 + (1,)) == 248
    assert weyl_dim(build(("A", 3)), (0, 1, 0)) == 6
    assert kacweyl_superdim(build(("BC", 2)), (0, 1)) == 2
    assert kacweyl_superdim(build(("BC", 3)), (0, 1, 0)) == 9
    for n in range(1, 10):
        assert kacweyl_superdim(build(("BC", 1)), (n,)) == 1


def test_rank_one_characters():
    a1 = build(("A", 1))
    assert dict(character(a1, (2,)).items()) == {(2,): (1, 0), (0,): (1, 0), (-2,): (1, 0)}
    bc1 = build(("BC", 1))
    full = dict(character(bc1, (2,)).items())
    even = {mu for mu, (e, o) in full.items() if e}
    odd = {mu for mu, (e, o) in full.items() if o}
    # even part: weights of S^2 of the standard sl_2 module; odd part: weights of the standard module
    assert len(even) == 3 and len(odd) == 2
    assert superdim(bc1, IrrepLabel(DominantWeight((1,)), "W")) == -1


def test_g2_seven():
    assert character(build(("G", 2)), (1, 0)).dim_total() == 7


def test_enumeration_examples():
    assert enumerate_dominant_up_to_dim(build(("E", 8)), 248) == [DominantWeight((0,) * 7 + (1,))]
    assert enumerate_dominant_up_to_dim(build(("A", 1)), 3) == [DominantWeight((1,)), DominantWeight((2,))]
