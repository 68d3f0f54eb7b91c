from fractions import Fraction

import pytest

from smallreps.classify import (
    CIRCLE,
    NOT_SMALL,
    STAR,
    ANY,
    IndexIdentityError,
    casimir_c,
    check_index_identity,
    classify_all,
    identify_tannaka_candidates,
    index_of,
    kappa,
    parse_label,
    rank_one_square,
    small_table,
    smallness,
    verdict_of,
)
from smallreps.reps import DominantWeight, IrrepLabel, dimension
from smallreps.rootsys import DynkinType, build
from smallreps.squares import Decomposition, square_decompose


def w(*a):
    return DominantWeight(a)


def test_casimir_of_trivial_and_adjoint():
    rs = build(("A", 2))
    assert casimir_c(rs, (0, 0)) == 0
    # c(theta) = (theta, theta + 2 rho) = 2 + 2 * 2 for sl_3 with long roots of length^2 2
    assert casimir_c(rs, (1, 1)) == 6
    assert kappa(rs) == 8 * 6


@pytest.mark.parametrize("dt", [("A", 1), ("A", 4), ("B", 3), ("C", 3), ("D", 5), ("G", 2), ("F", 4), ("E", 6), ("BC", 2)])
def test_index_normalised_on_adjoint(dt):
    rs = build(dt)
    ad = DominantWeight(rs.adjoint_weight())
    assert index_of(rs, ad) == 1
    assert index_of(rs, IrrepLabel(ad, "W")) == -1
    assert index_of(rs, DominantWeight((0,) * rs.rank)) == 0


def test_sl_n_standard_index():
    # the standard module of sl_n has index 1/(2n) relative to the adjoint
    for m in range(1, 7):
        rs = build(("A", m))
        assert index_of(rs, (1,) + (0,) * (m - 1)) == Fraction(1, 2 * (m + 1))


@pytest.mark.parametrize("dt,lam", [(("A", 3), (0, 1, 0)), (("B", 3), (0, 0, 1)), (("C", 3), (0, 0, 1)), (("BC", 2), (0, 1)), (("BC", 3), (1, 0, 0)), (("G", 2), (1, 0))])
@pytest.mark.parametrize("eps", [1, -1])
def test_index_identity(dt, lam, eps):
    rep = check_index_identity(build(dt), lam, eps)
    assert rep.holds
    assert rep.lhs == (rep.n + 2 * eps) * rep.n * rep.c_lambda


def test_index_identity_detects_wrong_decomposition():
    rs = build(("A", 3))
    wrong = Decomposition(((IrrepLabel(w(2, 0, 0)), 1),), 0, rs)
    with pytest.raises(IndexIdentityError):
        check_index_identity(rs, (0, 1, 0), 1, wrong)


def test_single_orbit_form_used_when_small():
    rs = build(("C", 3))
    rep = check_index_identity(rs, (0, 0, 1), -1)
    assert rep.delta == 1
    assert rep.star_rhs == rep.lhs


@pytest.mark.parametrize(
    "dt,lam,plus,minus",
    [
        (("A", 4), (1, 0, 0, 0), STAR, STAR),
        (("A", 4), (0, 1, 0, 0), NOT_SMALL, STAR),
        (("A", 1), (1,), STAR, STAR),
        (("D", 6), (1, 0, 0, 0, 0, 0), CIRCLE, STAR),
        (("D", 4), (0, 0, 0, 1), CIRCLE, STAR),
        (("C", 3), (0, 0, 1), NOT_SMALL, CIRCLE),
        (("B", 2), (0, 1), STAR, CIRCLE),
        (("G", 2), (1, 0), CIRCLE, NOT_SMALL),
        (("E", 7), (0, 0, 0, 0, 0, 0, 1), NOT_SMALL, CIRCLE),
        (("BC", 3), (1, 0, 0), STAR, CIRCLE),
        (("B", 3), (0, 1, 0), NOT_SMALL, NOT_SMALL),
    ],
)
def test_smallness_examples(dt, lam, plus, minus):
    rs = build(dt)
    assert smallness(rs, lam, 1).label == plus
    assert smallness(rs, lam, -1).label == minus


def test_sl2_standard_alternating_square_is_trivial():
    # L^2 of the 2-dimensional module is the trivial module, counted as irreducible
    v = smallness(build(("A", 1)), (1,), -1)
    assert v.label == STAR
    assert v.witness.delta == 1 and not v.witness.constituents


def test_relaxed_accepts_one_orbit_strict_does_not():
    dt = DynkinType("D", 4)
    rs = build(dt)
    lam = w(0, 1, 0, 0)  # fixed by the whole S_3 of diagram automorphisms
    orbit = tuple((IrrepLabel(x), 1) for x in (w(2, 0, 0, 0), w(0, 0, 2, 0), w(0, 0, 0, 2)))
    dec = Decomposition(orbit, 0, rs)
    assert verdict_of(dt, lam, dec, "relaxed").label == STAR
    assert verdict_of(dt, lam, dec, "strict").label == NOT_SMALL
    # not an orbit of the stabilizer of beta_1
    assert verdict_of(dt, w(1, 0, 0, 0), dec, "relaxed").label == NOT_SMALL
    with pytest.raises(ValueError):
        verdict_of(dt, lam, dec, "loose")


def test_mixed_parity_is_not_one_orbit():
    dt = DynkinType("BC", 2)
    dec = Decomposition(((IrrepLabel(w(2, 0)), 1), (IrrepLabel(w(1, 0), "W"), 1)), 0, build(dt))
    assert verdict_of(dt, w(0, 1), dec).label == NOT_SMALL


def test_two_trivial_summands_not_small():
    dt = DynkinType("A", 2)
    dec = Decomposition(((IrrepLabel(w(1, 1)), 1),), 2, build(dt))
    assert verdict_of(dt, w(1, 1), dec).label == NOT_SMALL


@pytest.mark.parametrize("family", ["A", "BC"])
@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("eps", [1, -1])
def test_rank_one_closed_form_matches_pipeline(family, n, eps):
    rs = build((family, 1))
    closed = rank_one_square(family, n, eps)
    generic = square_decompose(rs, (n,), eps)
    assert closed == generic


def test_rank_one_errors():
    with pytest.raises(ValueError):
        rank_one_square("A", 0, 1)
    with pytest.raises(ValueError):
        rank_one_square("G", 1, 1)


@pytest.mark.parametrize("dt", [("A", 3), ("B", 3), ("C", 4), ("D", 5), ("G", 2), ("BC", 3)])
def test_small_entries_pass_necessary_conditions(dt):
    rs = build(dt)
    entries = classify_all(rs)
    keys = [(e.weight.a, -e.epsilon) for e in entries]
    assert keys == sorted(keys)
    for e in entries:
        if e.verdict.is_small and dimension(rs, e.weight) > 2:
            assert e.pruned_by == [], (e.weight, e.epsilon)


def test_strict_and_relaxed_agree_on_classical_types():
    for dt in [("A", 3), ("B", 3), ("D", 4), ("E", 6), ("BC", 2)]:
        rs = build(dt)
        assert small_table(classify_all(rs, "strict")) == small_table(classify_all(rs, "relaxed"))


def test_f4_has_no_small_representations():
    assert small_table(classify_all(build(("F", 4)))) == {}


def test_identify_examples():
    assert identify_tannaka_candidates(6, "star", "circle") == [(DynkinType("C", 3), w(1, 0, 0))]
    hits = identify_tannaka_candidates(8, ANY, STAR)
    assert (DynkinType("A", 7), w(1, 0, 0, 0, 0, 0, 0)) in hits
    assert (DynkinType("D", 4), w(1, 0, 0, 0)) in hits
    with pytest.raises(ValueError):
        identify_tannaka_candidates(0, "star", "star")


def test_identify_rank_one():
    assert (DynkinType("A", 1), w(1)) in identify_tannaka_candidates(2, "star", "star")
    assert (DynkinType("BC", 1), w(1)) in identify_tannaka_candidates(1, "star", "circle")


def test_parse_label():
    assert parse_label("Star") == STAR
    assert parse_label("not_small") == NOT_SMALL
    assert parse_label("-") == NOT_SMALL
    with pytest.raises(ValueError):
        parse_label("square")


def test_casimir_values():
    assert casimir_c(build(("A", 1)), (1,)) == Fraction(3, 2)
    assert casimir_c(build(("E", 7)), (0,) * 7) == 0


def test_listed_verdicts():
    c3 = build(("C", 3))
    assert smallness(c3, (1, 0, 0), 1).label == STAR
    assert smallness(c3, (1, 0, 0), -1).label == CIRCLE
    v = smallness(build(("B", 3)), (0, 0, 1), -1)
    assert v.label == NOT_SMALL
    assert [str(lab) for lab in v.witness.labels] == ["V[b2]", "V[b1]"]


def test_classify_rank_one_sl2():
    got = {(e.weight.a, e.epsilon): e.verdict.label for e in classify_all(build(("A", 1)))}
    assert got[(1,), 1] == STAR and got[(1,), -1] == STAR
    assert got[(2,), 1] == CIRCLE and got[(2,), -1] == STAR
    assert got[(3,), 1] == NOT_SMALL and got[(3,), -1] == CIRCLE
    assert all(v == NOT_SMALL for (a, e), v in got.items() if a[0] > 3)


def test_classify_d4():
    table = small_table(classify_all(build(("D", 4))))
    assert table == {w(*x): {1: CIRCLE, -1: STAR} for x in ((1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))}


def test_identify_symplectic_and_special_linear():
    assert identify_tannaka_candidates(8, STAR, CIRCLE) == [(DynkinType("C", 4), w(1, 0, 0, 0))]
    assert (DynkinType("B", 2), w(0, 1)) in identify_tannaka_candidates(4, STAR, CIRCLE)
    for m in range(2, 8):
        got = identify_tannaka_candidates(m + 1, STAR, STAR)
        unit = lambda i: w(*(int(j == i) for j in range(m)))
        assert got == [(DynkinType("A", m), unit(m - 1)), (DynkinType("A", m), unit(0))]
