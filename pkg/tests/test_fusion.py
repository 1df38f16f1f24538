from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from liefusion.fusion import (
    LAMBDA4, admissible_set, casimir, central_charge, conformal, coset_defect, delta_defect,
    fusion, fusion_closure, fusion_general, fusion_unit_charge, kac_walton, lambda4_rule, virasoro_c,
)
from liefusion.rootsystem import Weight, build
from liefusion.tensor import hom_dim
from liefusion.weights import weight_system

from oracles import sl2_fusion

F4 = build("F4")
W = Weight


@pytest.mark.parametrize("k", range(0, 7))
def test_kac_walton_matches_sl2_closed_form(k):
    R = build("A1")
    for a, b, c in product(range(k + 1), repeat=3):
        got = fusion_general(R, k, W(a), W(b), W(c)).value
        assert got == sl2_fusion(k, a, b, c), (k, a, b, c)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_truncated_rule_matches_kac_walton_for_lambda4(l):
    P = admissible_set(F4, l)
    for mu in P:
        table = kac_walton(F4, l, LAMBDA4, mu)
        for nu in P:
            assert fusion_unit_charge(F4, l, LAMBDA4, mu, nu).value == table.get(nu, 0), (l, mu, nu)


def test_admissible_sets():
    assert admissible_set(F4, 1) == [W(0, 0, 0, 0), W(0, 0, 0, 1)]
    assert set(admissible_set(F4, 2)) == {W(0, 0, 0, 0), W(0, 0, 0, 1), W(0, 0, 0, 2), W(1, 0, 0, 0), W(0, 0, 1, 0)}
    assert [len(admissible_set(F4, l)) for l in range(5)] == [1, 2, 5, 9, 16]


@pytest.mark.parametrize("l", [1, 2, 3])
def test_closure_of_lambda4_is_everything(l):
    assert fusion_closure(F4, l, [LAMBDA4]) == admissible_set(F4, l)


def test_closure_of_trivial_weight():
    assert fusion_closure(F4, 2, [W(0, 0, 0, 0)]) == [W(0, 0, 0, 0)]


def test_lambda4_rule_against_tensor_products():
    """The simple-root criterion agrees with Klimyk wherever it applies."""
    ws = [w for w in weight_system(F4, LAMBDA4).weights if any(w)]
    box = [W(c) for c in product(range(3), repeat=4)]
    inbox = set(box)
    checked = 0
    for mu in box:
        for d in ws:
            nu = mu + d
            if nu in inbox:
                assert lambda4_rule(mu, nu) == hom_dim(F4, LAMBDA4, mu, nu), (mu, nu)
                checked += 1
    assert checked > 300


def test_lambda4_rule_examples_and_errors():
    assert lambda4_rule(W(0, 0, 1, 0), W(0, 0, 0, 2)) == 1
    assert lambda4_rule(W(1, 0, 0, 0), W(0, 0, 1, 0)) == 1
    with pytest.raises(ValueError):
        lambda4_rule(W(0, 0, 1, 0), W(0, 0, 1, 0))  # difference zero
    with pytest.raises(ValueError):
        lambda4_rule(W(0, 0, 0, 0), W(0, 0, 0, 3))


def test_unit_charge_errors_and_truncation():
    with pytest.raises(ValueError):
        fusion_unit_charge(F4, 2, W(0, 0, 1, 0), W(0, 0, 0, 1), W(0, 0, 0, 1))
    with pytest.raises(ValueError):
        fusion_unit_charge(F4, 1, LAMBDA4, W(0, 0, 0, 2), W(0, 0, 0, 1))
    # (0,0,0,2) occurs in lambda4 x lambda4 but is not admissible at level 1
    assert hom_dim(F4, LAMBDA4, LAMBDA4, W(0, 0, 0, 2)) == 1
    assert fusion_unit_charge(F4, 1, LAMBDA4, LAMBDA4, W(0, 0, 0, 2)).value == 0
    with pytest.raises(ValueError):
        fusion_general(F4, 1, LAMBDA4, LAMBDA4, W(0, 0, 0, 2))


def test_dispatch_methods():
    assert fusion(F4, 2, LAMBDA4, LAMBDA4, W(0, 0, 0, 2)).method == "truncated"
    r = fusion(F4, 2, W(0, 0, 0, 2), W(0, 0, 0, 2), W(0, 0, 0, 0))
    assert r.method == "kac-walton" and r.value == 1


def test_casimir_and_conformal_weight():
    assert casimir(F4, LAMBDA4) == 12
    assert casimir(F4, W(1, 0, 0, 0)) == 18
    assert conformal(F4, 1, LAMBDA4).delta == Fraction(3, 5)
    # level 1: lambda4 x lambda4 -> lambda4 has integer-shifted weights
    assert delta_defect(F4, 1, LAMBDA4, LAMBDA4, LAMBDA4) == Fraction(3, 5)
    assert casimir(build("A1"), W(1)) == Fraction(3, 2)


def test_central_charges():
    A1, C3, G2 = build("A1"), build("C3"), build("G2")
    assert central_charge(F4, 1) == Fraction(26, 5)
    assert coset_defect((F4, 1), [(A1, 1), (C3, 1)]) == 0
    assert coset_defect((G2, 1), [(A1, 3), (A1, 1)]) == 0
    assert virasoro_c(3) == Fraction(1, 2)
    with pytest.raises(ValueError):
        virasoro_c(1)


def test_coset_defect_is_exact_difference():
    A1, C3 = build("A1"), build("C3")
    d = coset_defect((F4, 2), [(A1, 2), (C3, 2)])
    assert d == Fraction(2 * 52, 2 + 9) - Fraction(2 * 3, 2 + 2) - Fraction(2 * 21, 2 + 4)


types = st.sampled_from(["A2", "B2", "G2"])


@given(types, st.integers(1, 3), st.data())
def test_kac_walton_properties(name, l, data):
    R = build(name)
    P = admissible_set(R, l)
    lam, mu = data.draw(st.sampled_from(P)), data.draw(st.sampled_from(P))
    table = kac_walton(R, l, lam, mu)
    assert table == kac_walton(R, l, mu, lam)
    zero = Weight.zero(R.rank)
    assert kac_walton(R, l, zero, mu) == {mu: 1}
    for nu, n in table.items():
        assert nu in P and 0 < n <= hom_dim(R, lam, mu, nu)
