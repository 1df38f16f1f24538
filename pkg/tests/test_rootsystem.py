from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liefusion.rootsystem import LieType, OrthoVec, RootSystem, Weight, build, fundamental_weight, weyl_group_order

# (type, positive roots, dimension, dual Coxeter, |W|)
CLASSICAL = [
    ("A1", 1, 3, 2, 2), ("A3", 6, 15, 4, 24), ("B2", 4, 10, 3, 8), ("B3", 9, 21, 5, 48),
    ("C3", 9, 21, 4, 48), ("D4", 12, 28, 6, 192), ("G2", 6, 14, 4, 12), ("F4", 24, 52, 9, 1152),
    ("E6", 36, 78, 12, 51840), ("E7", 63, 133, 18, 2903040), ("E8", 120, 248, 30, 696729600),
]


@pytest.mark.parametrize("name,npos,dim,hv,order", CLASSICAL)
def test_standard_data(name, npos, dim, hv, order):
    R = build(name)
    assert len(R.positive_roots) == npos
    assert R.dimension == dim
    assert R.dual_coxeter == hv
    assert R.inner(R.highest_root, R.highest_root) == 2
    if order < 5000:
        assert weyl_group_order(R) == order


@pytest.mark.parametrize("name", [c[0] for c in CLASSICAL])
def test_cartan_matrix_from_roots(name):
    R = build(name)
    for i, a in enumerate(R.simple_roots):
        for j, b in enumerate(R.simple_roots):
            # C[i][j] = n_{alpha_j, alpha_i}
            assert R.cartan_matrix[i][j] == 2 * R.inner(b, a) / R.inner(a, a)


def test_f4_realization():
    R = build("F4")
    H = Fraction(1, 2)
    assert R.simple_roots == (OrthoVec(0, 1, -1, 0), OrthoVec(0, 0, 1, -1),
                              OrthoVec(0, 0, 0, 1), OrthoVec(H, -H, -H, -H))
    assert R.highest_root == OrthoVec(1, 1, 0, 0)
    assert R.to_orthogonal(fundamental_weight(R, 1)) == R.highest_root
    assert R.to_orthogonal(fundamental_weight(R, 4)) == OrthoVec(1, 0, 0, 0)
    assert R.highest_root_weight == fundamental_weight(R, 1)
    assert R.weyl_vector == OrthoVec(Fraction(11, 2), Fraction(5, 2), Fraction(3, 2), H)
    assert R.weyl_vector_weight == Weight(1, 1, 1, 1)
    assert R.comarks == (2, 3, 2, 1)
    long_ = [a for a in R.positive_roots if R.is_long(a)]
    assert len(long_) == 12
    # long positive roots: exactly two nonzero entries, first one +1
    for a in long_:
        nz = [x for x in a if x]
        assert len(nz) == 2 and nz[0] == 1 and abs(nz[1]) == 1


def test_simple_roots_come_first():
    for name in ("F4", "E6", "B3", "G2"):
        R = build(name)
        assert R.positive_roots[:R.rank] == R.simple_roots
        assert [R.height(R.from_orthogonal(a)) for a in R.positive_roots] == \
            sorted(R.height(R.from_orthogonal(a)) for a in R.positive_roots)


def test_parse_and_errors():
    assert LieType.parse("f4") == LieType("F", 4)
    assert Weight.parse("(0,0,1,0)") == Weight(0, 0, 1, 0)
    assert OrthoVec.parse("1/2[1,-1,-1,-1]") == build("F4").simple_roots[3]
    for bad in ("E9", "G3", "B1", "Q2", "F"):
        with pytest.raises(ValueError):
            LieType.parse(bad)
    R = build("F4")
    with pytest.raises(ValueError):
        R.from_orthogonal(OrthoVec(Fraction(1, 3), 0, 0, 0))
    with pytest.raises(ValueError):
        R.root_index(OrthoVec(2, 0, 0, 0))


def test_build_is_cached():
    assert build("F4") is build(LieType("F", 4))


types = st.sampled_from(["A2", "B3", "C3", "G2", "F4", "D4"])


@given(types, st.data())
def test_coordinate_roundtrip(name, data):
    R = build(name)
    w = data.draw(st.lists(st.integers(-3, 3), min_size=R.rank, max_size=R.rank).map(Weight))
    assert R.from_orthogonal(R.to_orthogonal(w)) == w
    for i in range(R.rank):
        assert R.pairing(w, R.simple_roots[i]) == w[i]


@given(types, st.data())
def test_reflections_are_isometries_of_the_root_set(name, data):
    R = build(name)
    i = data.draw(st.integers(0, R.rank - 1))
    w = data.draw(st.lists(st.integers(-3, 3), min_size=R.rank, max_size=R.rank).map(Weight))
    v = R.simple_reflection(i, w)
    assert R.inner(v, v) == R.inner(w, w)
    assert R.simple_reflection(i, v) == w
    roots = set(R.roots)
    assert {R.reflect(R.simple_roots[i], a) for a in R.roots} == roots


@given(types, st.data())
def test_to_dominant(name, data):
    R = build(name)
    w = data.draw(st.lists(st.integers(-4, 4), min_size=R.rank, max_size=R.rank).map(Weight))
    d, sign = R.to_dominant(w)
    assert RootSystem.is_dominant(d)
    assert sign in (1, -1)
    assert R.inner(d, d) == R.inner(w, w)
