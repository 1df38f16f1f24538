"""Tensor product decomposition by Klimyk's formula."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .rootsystem import RootSystem, Weight
from .weights import dim, weight_system

_memo: dict = {}


@dataclass(frozen=True)
class Decomposition:
    factors: tuple
    components: dict  # dominant Weight -> multiplicity, sorted

    def __getitem__(self, nu) -> int:
        return self.components.get(Weight(nu), 0)

    def total_dim(self, R: RootSystem) -> int:
        return sum(m * dim(R, nu) for nu, m in self.components.items())


def decompose(R: RootSystem, lam: Weight, mu: Weight) -> Decomposition:
    lam, mu = Weight(lam), Weight(mu)
    for w in (lam, mu):
        if not RootSystem.is_dominant(w):
            raise ValueError(f"{w!r} is not dominant")
    key = (R.lie_type, lam, mu)
    if key in _memo:
        return _memo[key]
    # iterate over the smaller factor's weights
    small, big = (lam, mu) if dim(R, lam) <= dim(R, mu) else (mu, lam)
    shift = big + R.weyl_vector_weight
    acc: dict = defaultdict(int)
    for nu, m in weight_system(R, small).weights.items():
        dom, sign = R.to_dominant(shift + nu)
        if 0 in dom:
            continue
        acc[dom - R.weyl_vector_weight] += sign * m
    if any(v < 0 for v in acc.values()):
        raise ArithmeticError("negative multiplicity in Klimyk sum")
    comps = {w: acc[w] for w in sorted(acc, key=lambda w: (dim(R, w), tuple(w))) if acc[w]}
    out = Decomposition((lam, mu), comps)
    _memo[key] = out
    return out


def hom_dim(R: RootSystem, lam: Weight, mu: Weight, nu: Weight) -> int:
    """dim Hom(L(lam) (x) L(mu), L(nu))."""
    return decompose(R, lam, mu)[nu]
