from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from liefusion import reduction
from liefusion.fusion import LAMBDA4
from liefusion.reduction import (
    COMPRESSION_CASES, ReductionError, check_compression, classify_difference, fundamental_table,
    group_a_roots, reduce_to_fundamental, verify_compression_cases,
)
from liefusion.rootsystem import OrthoVec, Weight, build
from liefusion.tensor import hom_dim

F4 = build("F4")
W = Weight
H = Fraction(1, 2)
L1, L2, L3, L4 = W(1, 0, 0, 0), W(0, 1, 0, 0), W(0, 0, 1, 0), W(0, 0, 0, 1)
ZERO = W(0, 0, 0, 0)


def test_classify_examples():
    rho3 = F4.from_orthogonal(OrthoVec(0, 0, 0, 1))
    assert classify_difference(ZERO, ZERO).kind == "zero"
    c = classify_difference(L4, L4 + rho3)
    assert c.kind == "shortA" and c.root == OrthoVec(0, 0, 0, 1)
    assert classify_difference(ZERO, F4.from_orthogonal(OrthoVec(0, 1, 0, 0))).kind == "shortB"
    assert classify_difference(ZERO, L1).kind == "long-root"
    assert classify_difference(ZERO, W(0, 0, 0, 2)).kind == "other"


@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4).map(Weight))
def test_classification_invariants(d):
    c = classify_difference(ZERO, d)
    v = F4.to_orthogonal(d)
    if c.kind == "shortA":
        assert F4.inner(v, F4.highest_root) == 0 and F4.inner(v, v) == 1
    if c.kind == "shortB":
        assert F4.inner(v, F4.highest_root) != 0 and F4.inner(v, v) == 1
    if c.kind == "long-root":
        assert F4.inner(v, v) == 2
    if c.kind == "other":
        assert any(d) and not F4.is_root(v)


def test_group_a():
    a = group_a_roots()
    assert len(a) == 6 and len(reduction.group_b_roots()) == 6
    assert OrthoVec(0, 0, 0, 1) in a and OrthoVec(H, -H, -H, -H) in a


def test_fundamental_table():
    t = fundamental_table()
    assert [x.rule for x in t] == [1, 1, 1, 1, 1, 1, 2, 1, 1]
    assert [x.level for x in t] == [4, 3, 2, 3, 4, 2, 3, 2, 1]
    assert (t[2].nu0, t[2].mu0) == (L4 * 2, L3)
    assert (t[6].nu0, t[6].mu0) == (L3 + L4, L3 + L4)
    diffs = [F4.to_orthogonal(x.nu0 - x.mu0) for x in t[:6]]
    assert sorted(diffs) == sorted(group_a_roots()) and len(set(diffs)) == 6
    for x in t:
        assert x.rule == hom_dim(F4, LAMBDA4, x.mu0, x.nu0)


def test_reduce_examples():
    c = reduce_to_fundamental(3, L3 + L4, L3 + L4)
    assert (c.target, c.shift, c.rule) == ("7", ZERO, 2)
    assert reduce_to_fundamental(2, L1, L1).target == "zero-rule"
    c = reduce_to_fundamental(4, L3 + 2 * L4, L3 + 2 * L4)
    assert (c.target, c.shift) == ("7", L4) and c.flag_a and c.flag_b
    c = reduce_to_fundamental(4, L3 * 2, L3 * 2)
    assert (c.target, c.shift) == ("8", L3)
    c = reduce_to_fundamental(3, L1 + L4, L2)
    assert (c.target, c.shift, c.type_id) == ("2", ZERO, 2)
    c = reduce_to_fundamental(3, L2, L1 + L4)
    assert c.target == "adjoint-of 2"


def test_reduce_errors():
    with pytest.raises(ValueError):
        reduce_to_fundamental(2, L4, L4)  # level mismatch
    with pytest.raises(ReductionError, match="out of scope"):
        reduce_to_fundamental(2, L1, L4 * 2)  # difference is not a root of group A


def _level_box(l, top=2):
    return [W(c) for c in product(range(top + 1), repeat=4) if F4.level(W(c)) == l]


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_reduction_is_exhaustive_and_preserves_rules(l):
    box = _level_box(l)
    for mu in box:
        for nu in box:
            n = hom_dim(F4, LAMBDA4, mu, nu)
            if n == 0:
                continue
            c = reduce_to_fundamental(l, mu, nu)
            assert c.target != "zero-rule" and c.flag_a and c.flag_b
            assert F4.level(c.shift) == l - c.k
            assert n == hom_dim(F4, LAMBDA4, c.mu0, c.nu0)


def test_compression_cases():
    s = verify_compression_cases()
    assert s.passed and s.annihilators_distinct
    assert {c: r.via for c, r in s.reports.items()} == {1: "iii", 2: "iii'", 4: "iii", 5: "iii'"}
    assert all(s.data_match.values())
    for c, r in s.reports.items():
        assert r.alpha + F4.to_orthogonal(r.nu) == F4.to_orthogonal(r.nu0 + r.shift)
        assert r.eta + F4.to_orthogonal(r.mu) == F4.to_orthogonal(r.nu)
    assert s.reports[2].details["eta_dot_alpha"] < 0 and s.reports[5].details["eta_dot_alpha"] < 0
    assert s.reports[4].k == 1


def test_mutated_case_fails_level_condition():
    case2 = next(c for c in COMPRESSION_CASES if c.case == 2)
    r = check_compression(2, case2.mu, case2.nu, case2.shift, case2.mu0, case2.nu0)
    assert not r.c and not r.passed


def test_multiplicity_one_weights():
    from liefusion.weights import multiplicity

    assert multiplicity(F4, L3, W(0, 1, -1, 1)) == 1
    assert multiplicity(F4, L3, W(0, 1, 0, -1)) == 1
    assert multiplicity(F4, L4, W(0, 1, -1, 0)) == 1
