from itertools import product

import pytest
from hypothesis import given, strategies as st

from liefusion.rootsystem import RootSystem, Weight, build
from liefusion.weights import dim, dominant_weights, multiplicity, weight_system, weyl_orbit

from oracles import kostant_multiplicity


def _box(rank, top):
    return [Weight(c) for c in product(range(top + 1), repeat=rank)]


@pytest.mark.parametrize("name,top", [("A1", 6), ("A2", 3)])
def test_freudenthal_matches_kostant(name, top):
    R = build(name)
    for lam in _box(R.rank, top):
        ws = weight_system(R, lam)
        for mu in dominant_weights(R, lam):
            assert ws.mult(mu) == kostant_multiplicity(R, lam, mu), (lam, mu)


def test_kostant_outside_support_is_zero():
    R = build("A2")
    assert kostant_multiplicity(R, Weight(1, 1), Weight(3, 0)) == 0
    assert multiplicity(R, Weight(1, 1), Weight(3, 0)) == 0


# frozen values computed by the Weyl formula and Freudenthal
F4_SYSTEMS = {
    (0, 0, 0, 1): (26, 25, {(0, 0, 0, 1): 1, (0, 0, 0, 0): 2}),
    (1, 0, 0, 0): (52, 49, {(1, 0, 0, 0): 1, (0, 0, 0, 1): 1, (0, 0, 0, 0): 4}),
    (0, 0, 1, 0): (273, 145, None),
    (0, 0, 0, 2): (324, 169, None),
    (0, 1, 0, 0): (1274, 409, None),
    (2, 0, 0, 0): (1053, 433, None),
}


@pytest.mark.parametrize("lam", list(F4_SYSTEMS))
def test_f4_weight_systems(lam):
    R = build("F4")
    total, distinct, mults = F4_SYSTEMS[lam]
    ws = weight_system(R, Weight(lam))
    assert ws.total_dim == total == dim(R, Weight(lam))
    assert len(ws) == distinct
    if mults:
        assert {tuple(k): v for k, v in ws.mults.items()} == mults


def test_lambda4_nonzero_weights_are_short_roots():
    R = build("F4")
    ws = weight_system(R, Weight(0, 0, 0, 1))
    short = {a for a in R.roots if not R.is_long(a)}
    got = {R.to_orthogonal(w) for w in ws.weights if any(w)}
    assert got == short and len(short) == 24


def test_errors_and_containment():
    R = build("F4")
    with pytest.raises(ValueError):
        weight_system(R, Weight(0, 0, -1, 1))
    with pytest.raises(ValueError):
        dim(R, Weight(-1, 0, 0, 0))
    ws = weight_system(R, Weight(0, 0, 0, 1))
    assert Weight(0, 0, 0, 0) in ws and Weight(0, 0, 0, 2) not in ws
    assert ws[Weight(0, 0, 1, -1)] == ws.mult(Weight(0, 0, 0, 1))


small = st.sampled_from(["A2", "B2", "G2", "C3", "A3"])


@given(small, st.data())
def test_multiplicities_sum_to_weyl_dimension(name, data):
    R = build(name)
    lam = data.draw(st.lists(st.integers(0, 2), min_size=R.rank, max_size=R.rank).map(Weight))
    ws = weight_system(R, lam)
    assert sum(ws.weights.values()) == ws.total_dim == dim(R, lam)


@given(small, st.data())
def test_multiplicity_is_weyl_invariant(name, data):
    R = build(name)
    lam = data.draw(st.lists(st.integers(0, 2), min_size=R.rank, max_size=R.rank).map(Weight))
    ws = weight_system(R, lam)
    mu = data.draw(st.sampled_from(sorted(ws.mults)))
    for w in weyl_orbit(R, mu):
        assert ws.weights[w] == ws.mults[mu]


@given(small, st.data())
def test_orbit_stable_under_reflection(name, data):
    R = build(name)
    mu = data.draw(st.lists(st.integers(0, 3), min_size=R.rank, max_size=R.rank).map(Weight))
    orb = weyl_orbit(R, mu)
    assert all(R.simple_reflection(i, w) in orb for w in orb for i in range(R.rank))
    assert sum(RootSystem.is_dominant(w) for w in orb) == 1

