import itertools
import random
from fractions import Fraction

import pytest

from oracles import all_swap_paths, path_phase

from chernsplit.abelianoracle import Phase
from chernsplit.errors import DomainError, ParseError
from chernsplit.linkmodel import corpus
from chernsplit.skein import cs_expectation
from chernsplit.splitting import (
    EVEN_LEVEL_MESSAGE,
    ZERO_INTERSECTION_MESSAGE,
    LoopOperatorWord,
    TheoryLevel,
    WordEntry,
    correction_bound,
    gauge_phase_check,
    normal_order,
    reorder,
    split_inner_product,
    tmym_expectation,
    word_from_json,
)


def tw(l, k_charges=(1, 1)):
    return LoopOperatorWord(
        (WordEntry("T", "c1", k_charges[0]), WordEntry("W", "c2", k_charges[1])),
        ((0, l), (-l, 0)),
    )


class TestInnerProduct:
    def test_tmym_even(self):
        f = split_inner_product(TheoryLevel("TMYM", 4, 1.0))
        assert [x.level for x in f.factors] == [2, 2]
        assert f.observable_mapping

    def test_ym(self):
        f = split_inner_product(TheoryLevel("YM", 4, 1.0))
        assert [x.level for x in f.factors] == [2, -2]
        assert str(f.factors[1].wzw_coefficient) == "2c_A - 2"

    def test_tmym_odd_flags_parity(self):
        f = split_inner_product(TheoryLevel("TMYM", 3, 1.0))
        assert [x.level for x in f.factors] == [Fraction(3, 2)] * 2
        assert not f.observable_mapping
        assert f.to_json()["note"] == "observable mapping unavailable for odd level"

    def test_cs_rejected(self):
        with pytest.raises(DomainError):
            split_inner_product(TheoryLevel("CS", 4))

    def test_mass_required(self):
        with pytest.raises(DomainError):
            TheoryLevel("TMYM", 2)
        with pytest.raises(DomainError):
            TheoryLevel("CS", 2, 1.0)


class TestNormalOrder:
    def test_thooft_level_two(self):
        word, phase = normal_order(tw(1), 2)
        assert [e.kind for e in word.entries] == ["W", "T"]
        assert [e.curve for e in word.entries] == ["c2", "c1"]
        assert phase == Phase.of(1, 2) and phase.to_complex() == -1

    def test_commuting(self):
        assert normal_order(tw(0), 7)[1] == Phase()

    def test_already_ordered(self):
        w = LoopOperatorWord((WordEntry("W", "a"), WordEntry("T", "b")), ((0, 1), (-1, 0)))
        out, phase = normal_order(w, 3)
        assert out == w and phase == Phase()

    def test_matrix_follows_entries(self):
        word, _ = normal_order(tw(1), 2)
        assert word.l(0, 1) == -1  # l(c2, c1)

    def test_validation(self):
        with pytest.raises(DomainError, match="antisymmetric"):
            LoopOperatorWord((WordEntry("T", "a"), WordEntry("W", "b")), ((0, 1), (1, 0)))
        with pytest.raises(DomainError, match="distinct"):
            LoopOperatorWord((WordEntry("T", "a"), WordEntry("W", "a")))
        with pytest.raises(DomainError):
            normal_order(tw(1), 0)


def random_word(rng, n):
    entries = tuple(
        WordEntry(rng.choice("WT"), f"c{i}", rng.choice([-2, -1, 1, 2, 3])) for i in range(n)
    )
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.choice([-1, 0, 1])
            mat[i][j], mat[j][i] = v, -v
    return LoopOperatorWord(entries, tuple(map(tuple, mat)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_swap_order_independence_exhaustive(n):
    rng = random.Random(n)
    for kinds in itertools.product("WT", repeat=n):
        entries = tuple(WordEntry(kd, f"c{i}", rng.choice([-1, 1, 2])) for i, kd in enumerate(kinds))
        mat = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.choice([-1, 0, 1])
                mat[i][j], mat[j][i] = v, -v
        word = LoopOperatorWord(entries, tuple(map(tuple, mat)))
        for k in (1, 2, 3, 5):
            _, lib = normal_order(word, k)
            phases = {path_phase(word, p, k) for p in all_swap_paths(kinds)}
            assert phases == {lib.turns}


def test_idempotent_and_reversible():
    rng = random.Random(7)
    for _ in range(50):
        w = random_word(rng, 6)
        once, p1 = normal_order(w, 5)
        twice, p2 = normal_order(once, 5)
        assert twice == once and p2 == Phase()
        order = list(range(6))
        rng.shuffle(order)
        moved, p = reorder(w, order, 5)
        inverse = [order.index(i) for i in range(6)]
        back, q = reorder(moved, inverse, 5)
        assert back == w
        assert p * q == Phase()


@pytest.mark.parametrize("k", range(1, 9))
@pytest.mark.parametrize("l", [-1, 0, 1])
def test_exchange_phase_table(k, l):
    assert normal_order(tw(l), k)[1] == Phase(Fraction(l, k))


class TestTMYM:
    def unknot_word(self, kind="W"):
        return LoopOperatorWord((WordEntry(kind, "unknot"),))

    @pytest.mark.parametrize("kappa", [1, 2, 3])
    def test_single_loop_equals_half_level(self, kappa):
        t = TheoryLevel("TMYM", 2 * kappa, 10.0)
        for name in ("unknot", "trefoil", "figure8"):
            w = LoopOperatorWord((WordEntry("W", name),))
            got = tmym_expectation(w, t)
            assert got.value == cs_expectation(corpus.diagram(name), kappa).value
            assert got.split_level == kappa
            assert got.correction.order == 2

    def test_split_union_is_product(self):
        curves = {"c1": corpus.diagram("unknot"), "c2": corpus.diagram("unknot")}
        w = LoopOperatorWord((WordEntry("W", "c1"), WordEntry("T", "c2")))
        got = tmym_expectation(w, TheoryLevel("TMYM", 4, 10.0), curves)
        u = cs_expectation(corpus.diagram("unknot"), 2).value
        assert got.value == u * u
        assert got.value == got.product_of_provenance()
        assert [p.kind for p in got.provenance] == ["W", "T"]

    @pytest.mark.parametrize("k", [1, 3, 5, 99])
    def test_odd_level_rejected(self, k):
        with pytest.raises(DomainError, match=EVEN_LEVEL_MESSAGE):
            tmym_expectation(self.unknot_word(), TheoryLevel("TMYM", k, 1.0))

    def test_nonzero_intersection_rejected(self):
        w = LoopOperatorWord((WordEntry("W", "unknot"), WordEntry("T", "trefoil")), ((0, 1), (-1, 0)))
        with pytest.raises(DomainError, match=ZERO_INTERSECTION_MESSAGE):
            tmym_expectation(w, TheoryLevel("TMYM", 4, 1.0))

    def test_unknown_curve(self):
        w = LoopOperatorWord((WordEntry("W", "nowhere"),))
        with pytest.raises(DomainError, match="nowhere"):
            tmym_expectation(w, TheoryLevel("TMYM", 4, 1.0))

    def test_only_fundamental(self):
        w = LoopOperatorWord((WordEntry("W", "unknot", 2),))
        with pytest.raises(DomainError):
            tmym_expectation(w, TheoryLevel("TMYM", 4, 1.0))

    def test_correction_metadata_only(self):
        t = TheoryLevel("TMYM", 4, 10.0)
        got = tmym_expectation(self.unknot_word(), t, length_scale=1.0)
        assert got.correction.bound_coefficient == pytest.approx(0.01)
        assert got.value == tmym_expectation(self.unknot_word(), t).value


class TestGaugePhase:
    def test_examples(self):
        g = gauge_phase_check(TheoryLevel("TMYM", 3, 1.0), 1)
        assert (g.multiple_of_pi, g.invariant) == (6, True)
        g = gauge_phase_check(TheoryLevel("YM", 3, 1.0), 1)
        assert (g.multiple_of_pi, g.invariant) == (0, True)
        g = gauge_phase_check(TheoryLevel("TMYM", 3, 1.0), 1, part="half")
        assert (g.multiple_of_pi, g.invariant) == (3, False)


class TestCorrection:
    def test_values(self):
        t = TheoryLevel("TMYM", 2, 10.0)
        assert correction_bound(t, 1.0).bound_coefficient == pytest.approx(0.01)
        assert correction_bound(t, 10.0).bound_coefficient == pytest.approx(1e-4)
        bounds = [correction_bound(t, 10.0**e).bound_coefficient for e in range(6)]
        assert all(a > b for a, b in zip(bounds, bounds[1:])) and bounds[-1] < 1e-11

    def test_bad_scale(self):
        with pytest.raises(DomainError):
            correction_bound(TheoryLevel("TMYM", 2, 1.0), 0.0)


class TestWordJSON:
    def test_round_trip(self):
        w = tw(1)
        assert word_from_json(w.to_json()) == w

    def test_field_errors(self):
        with pytest.raises(ParseError, match="entries"):
            word_from_json({})
        with pytest.raises(ParseError, match=r"entries\[0\]\.kind"):
            word_from_json({"entries": [{"kind": "X", "curve": "a"}]})
        with pytest.raises(ParseError, match="intersections"):
            word_from_json({"entries": [], "intersections": "x"})
