from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chernsplit.abelianoracle import (
    ChargedLoop,
    Phase,
    configuration_phase,
    configuration_phase_turns,
    mixed_phase,
    mixed_phase_turns,
)
from chernsplit.errors import DomainError
from chernsplit.linkmodel import LinkingMatrix, corpus, linking_matrix

W = lambda n=1: ChargedLoop("c1", "W", n)
T = lambda n=1: ChargedLoop("c2", "T", n)


def test_unlinked_is_trivial():
    for n in range(-3, 4):
        if n:
            assert mixed_phase(W(n), T(2), 5, 0) == 1


def test_unit_charges_level_four():
    assert mixed_phase(W(), T(), 4, 1) == 1j


def test_charge_two_reversed_linking():
    assert mixed_phase(W(2), T(1), 4, -1) == -1


def test_kind_pair_checked():
    with pytest.raises(DomainError):
        mixed_phase(T(), W(), 4, 1)
    with pytest.raises(DomainError):
        ChargedLoop("c", "X")
    with pytest.raises(DomainError):
        ChargedLoop("c", "W", 0)


charges = st.integers(-5, 5).filter(bool)


@given(charges, charges, st.integers(1, 12), st.integers(-4, 4))
def test_bilinear_in_charges(na, nb, k, lk):
    assert mixed_phase_turns(W(na), T(nb), k, lk) == mixed_phase_turns(W(), T(), k, lk) ** (na * nb)


@given(charges, charges, st.integers(1, 12), st.integers(-20, 20))
def test_depends_on_product_mod_k(na, nb, k, lk):
    p = mixed_phase_turns(W(na), T(nb), k, lk)
    assert p.turns == Fraction((na * nb * lk) % k, k)


def test_configuration_examples():
    single = configuration_phase([W()], 3, LinkingMatrix(((0,),)))
    assert single == 1
    hopf = linking_matrix(corpus.diagram("hopf"))
    assert configuration_phase([W(), T()], 2, hopf) == -1
    ww = [ChargedLoop("a", "W"), ChargedLoop("b", "W")]
    assert configuration_phase(ww, 2, hopf) == 1


def test_framing_is_opt_in():
    m = LinkingMatrix(((3, 0), (0, 0)), "explicit")
    plain = [ChargedLoop("a", "W", 1), ChargedLoop("b", "T")]
    framed = [ChargedLoop("a", "W", 1, framed=True), ChargedLoop("b", "T")]
    assert configuration_phase_turns(plain, 4, m) == Phase()
    assert configuration_phase_turns(framed, 4, m) == Phase.of(3, 8)


def test_missing_linking_entry():
    m = LinkingMatrix(((0, None), (None, 0)))
    with pytest.raises(DomainError, match="missing"):
        configuration_phase([W(), T()], 3, m)


def test_phase_arithmetic():
    p = Phase.of(3, 4)
    assert p * Phase.of(1, 4) == Phase()
    assert p.inverse() == Phase.of(1, 4)
    assert p.numerator == 3 and p.denominator == 4
    assert Phase.of(1, 2).to_complex() == -1
