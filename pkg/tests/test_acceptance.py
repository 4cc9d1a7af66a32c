"""The ten acceptance criteria, one test each, with their runtime limits.

Each test also asserts its own wall-clock limit. The conftest prints a
PASS/FAIL line per criterion at the end of the run; run this file alone
with ``pytest tests/test_acceptance.py``.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from chernsplit.abelianoracle import ChargedLoop, mixed_phase_turns
from chernsplit.errors import DomainError
from chernsplit.linkmodel import corpus, disjoint_union
from chernsplit.skein import a_value, bracket_by_enumeration, cs_expectation, kauffman_bracket
from chernsplit.splitting import (
    TheoryLevel,
    gauge_phase_check,
    normal_order,
    split_inner_product,
    tmym_expectation,
)
from chernsplit.splitting.tmym import EVEN_LEVEL_MESSAGE
from chernsplit.splitting.words import LoopOperatorWord, WordEntry
from chernsplit.wzwlab import (
    LatticeGrid,
    flatness_residual,
    gauss_variation_check,
    kn_fields,
    pw_report,
    random_algebra_field,
    random_field,
    run_suite,
)

from oracles import all_swap_paths, naive_bracket, path_phase

SEEDS = (1, 2, 3)


@contextmanager
def limit(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, limit {seconds} s"


def word(*specs, mat=None):
    entries = tuple(WordEntry(kind, curve, charge) for kind, curve, charge in specs)
    return LoopOperatorWord(entries, mat)


@pytest.mark.acceptance(1, "skein recursion equals state enumeration on the corpus", 10)
def test_skein_equals_enumeration():
    with limit(10):
        assert len(corpus.ACCEPTANCE_CORPUS) == 10
        for name in corpus.ACCEPTANCE_CORPUS:
            pd = corpus.diagram(name)
            assert pd.n_crossings <= 8
            for k in (1, 2, 3, 5):
                assert kauffman_bracket(pd, k) == bracket_by_enumeration(pd, k), (name, k)


@pytest.mark.acceptance(1, "skein recursion equals state enumeration on the corpus", 10)
def test_skein_matches_independent_state_sum():
    # floating cross-check against a set-based state sum written from scratch
    with limit(10):
        for name in corpus.ACCEPTANCE_CORPUS:
            pd = corpus.diagram(name)
            for k in (1, 2, 3, 5):
                exact = kauffman_bracket(pd, k).to_complex()
                ref = naive_bracket(pd.crossings, pd.free_loops(), a_value(k))
                assert abs(exact - ref) < 1e-9 * max(1.0, abs(ref)), (name, k)


@pytest.mark.acceptance(2, "TMYM at level 2k equals CS at level k; split unions factorize", 5)
def test_splitting_identity():
    with limit(5):
        for kappa in (1, 2, 3):
            t = TheoryLevel("TMYM", 2 * kappa, 7.0)
            for name in corpus.ACCEPTANCE_CORPUS:
                for kind in ("W", "T"):
                    got = tmym_expectation(word((kind, name, 1)), t)
                    assert got.value == cs_expectation(corpus.diagram(name), kappa).value, (name, kappa)
            names = ("trefoil", "hopf", "figure8")
            union = tmym_expectation(word(("W", names[0], 1), ("T", names[1], -1), ("W", names[2], 1)), t)
            product = cs_expectation(corpus.diagram(names[0]), kappa).value
            for n in names[1:]:
                product = product * cs_expectation(corpus.diagram(n), kappa).value
            assert union.value == product
            # the same number from the disjoint-union diagram evaluated as one link
            joint = disjoint_union(disjoint_union(*(corpus.diagram(n) for n in names[:2])), corpus.diagram(names[2]))
            assert union.value == cs_expectation(joint, kappa).value


@pytest.mark.acceptance(3, "even-level rule and inner-product level sums", 1)
def test_even_level_rule():
    with limit(1):
        w = word(("W", "unknot", 1))
        for k in range(1, 100, 2):
            with pytest.raises(DomainError, match=EVEN_LEVEL_MESSAGE):
                tmym_expectation(w, TheoryLevel("TMYM", k, 1.0))
        for k in range(1, 101):
            tm = split_inner_product(TheoryLevel("TMYM", k, 1.0))
            ym = split_inner_product(TheoryLevel("YM", k, 1.0))
            assert tm.level_sum == k and ym.level_sum == 0
            assert [f.level for f in tm.factors] == [Fraction(k, 2)] * 2
            assert [f.level for f in ym.factors] == [Fraction(k, 2), -Fraction(k, 2)]


@pytest.mark.acceptance(4, "'t Hooft exchange phase table and swap-order independence", 5)
def test_thooft_algebra():
    with limit(5):
        for k in range(1, 9):
            for l in (-1, 0, 1):
                tw = word(("T", "a", 1), ("W", "b", 1), mat=((0, l), (-l, 0)))
                ordered, phase = normal_order(tw, k)
                assert [e.kind for e in ordered.entries] == ["W", "T"]
                assert phase.turns == Fraction(l, k) % 1
        rng = random.Random(2024)
        for n in range(1, 6):
            for kinds in itertools.product("WT", repeat=n):
                upper = [[rng.choice((-1, 0, 1)) if j > i else 0 for j in range(n)] for i in range(n)]
                mat = tuple(tuple(upper[i][j] - upper[j][i] for j in range(n)) for i in range(n))
                w = word(*((kd, f"c{i}", rng.choice((-2, -1, 1, 3))) for i, kd in enumerate(kinds)), mat=mat)
                paths = list(all_swap_paths(kinds))
                for k in (1, 2, 3, 5, 8):
                    lib = normal_order(w, k)[1].turns
                    assert {path_phase(w, p, k) for p in paths} == {lib}


@pytest.mark.acceptance(5, "large gauge phase cancels for TMYM and YM", 1)
def test_gauge_phase():
    with limit(1):
        for k in range(1, 11):
            for omega in range(-10, 11):
                half = gauge_phase_check(TheoryLevel("TMYM", k, 1.0), omega, "half").multiple_of_pi
                assert half == k * omega
                tm = gauge_phase_check(TheoryLevel("TMYM", k, 1.0), omega)
                ym = gauge_phase_check(TheoryLevel("YM", k, 1.0), omega)
                assert tm.multiple_of_pi == half + half and tm.multiple_of_pi % 2 == 0 and tm.invariant
                assert ym.multiple_of_pi == half - half == 0 and ym.invariant


@pytest.mark.acceptance(6, "Polyakov-Wiegmann identity at O(h^2)", 60)
def test_pw_identity():
    with limit(60):
        for seed in SEEDS:
            rel = []
            for n in (32, 64):
                g = LatticeGrid.square(n)
                a = random_field(g, "SL2C", 0.3, seed)
                b = random_field(g, "SL2C", 0.3, seed + 1000)
                rel.append(pw_report(a, b).relative)
            assert rel[0] <= 1e-3, (seed, rel)
            assert 2.8 <= rel[0] / rel[1] <= 5.6, (seed, rel)


@pytest.mark.acceptance(7, "Gauss-law variation residual scales as eta^2", 30)
def test_gauss_eta_scaling():
    with limit(30):
        g = LatticeGrid.square(32)
        for seed in SEEDS:
            u = random_field(g, "SL2C", 0.3, seed)
            eps = random_algebra_field(g, 1.0, seed + 1000)
            r = [gauss_variation_check(u, eta * eps, 2) for eta in (1e-3, 5e-4)]
            # exact quadratic scaling gives 4; within 25%
            assert abs(r[0] / r[1] - 4.0) <= 1.0, (seed, r)


@pytest.mark.acceptance(8, "flatness residual is O(h^2) and exactly zero for constant U", 30)
def test_flatness():
    with limit(30):
        for seed in SEEDS:
            r = [flatness_residual(kn_fields(random_field(LatticeGrid.square(n), "SL2C", 0.3, seed))) for n in (32, 64)]
            assert 2.8 <= r[0] / r[1] <= 5.6, (seed, r)
        (report,) = run_suite("flatness", 8, fixture="constant")
        assert report.residuals[0].coarse == 0.0 and report.residuals[0].fine == 0.0


@pytest.mark.acceptance(9, "symplectic renderings agree on 100 random pairs", 10)
def test_symplectic_renderings():
    with limit(10):
        (report,) = run_suite("symplectic", 32, seed=11, tol=1e-10)
        assert [r.quantity for r in report.residuals] == [
            "tmym_a_tilde_vs_b_c",
            "ym_direct_vs_tilde_hat",
            "antisymmetry",
        ]
        assert report.converged, report.to_json()


@pytest.mark.acceptance(10, "abelian mixed phase reproduces the exchange factor", 1)
def test_abelian_consistency():
    with limit(1):
        charges = [n for n in range(-5, 6) if n != 0]
        for k in range(1, 9):
            for l in (-1, 0, 1):
                for n1 in charges:
                    for n2 in charges:
                        mixed = mixed_phase_turns(ChargedLoop(None, "W", n1), ChargedLoop(None, "T", n2), k, l)
                        tw = word(("T", "a", n2), ("W", "b", n1), mat=((0, l), (-l, 0)))
                        assert mixed == normal_order(tw, k)[1]
                        assert mixed.turns == Fraction(l * n1 * n2, k) % 1


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
