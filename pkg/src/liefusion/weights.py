"""Weight systems of irreducible modules: Freudenthal multiplicities,
Weyl orbits and the Weyl dimension formula."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .rootsystem import RootSystem, Weight

# optional persistent store with get(key)/put(key, payload); installed by the CLI
_store = None
_memo: dict = {}


def set_store(store) -> None:
    global _store
    _store = store


def clear_memo() -> None:
    _memo.clear()


@dataclass(frozen=True)
class WeightSystem:
    root_system: RootSystem = field(repr=False)
    highest_weight: Weight
    mults: dict  # dominant Weight -> multiplicity
    total_dim: int

    def mult(self, mu: Weight) -> int:
        dom, _ = self.root_system.to_dominant(Weight(mu))
        return self.mults.get(dom, 0)

    __getitem__ = mult

    @cached_property
    def weights(self) -> dict:
        """Every weight (orbit-expanded) with its multiplicity."""
        out = {}
        for dom, m in self.mults.items():
            for w in weyl_orbit(self.root_system, dom):
                out[w] = m
        return out

    def __len__(self) -> int:
        return len(self.weights)

    def __contains__(self, mu) -> bool:
        return self.mult(mu) > 0


def weyl_orbit(R: RootSystem, mu: Weight) -> set:
    mu = Weight(mu)
    seen = {mu}
    todo = deque([mu])
    while todo:
        w = todo.popleft()
        for i in range(R.rank):
            if w[i]:
                v = R.simple_reflection(i, w)
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def _require_dominant(lam: Weight) -> Weight:
    lam = Weight(lam)
    if not RootSystem.is_dominant(lam):
        raise ValueError(f"{lam!r} is not dominant")
    return lam


def _coroot_table(R: RootSystem) -> tuple:
    """Coroot coordinates of every positive root, so (w, a^vee) is an integer dot product."""
    key = ("coroots", R.lie_type)
    if key not in _memo:
        omegas = R.fundamental_weights
        _memo[key] = tuple(
            tuple(int(2 * R.inner(a, w) / R.inner(a, a)) for w in omegas) for a in R.positive_roots)
    return _memo[key]


def dim(R: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula."""
    lam = _require_dominant(lam)
    key = ("dim", R.lie_type, lam)
    if key in _memo:
        return _memo[key]
    num = den = 1
    for c in _coroot_table(R):
        num *= sum((x + 1) * ci for x, ci in zip(lam, c))
        den *= sum(c)
    assert num % den == 0
    _memo[key] = num // den
    return _memo[key]


def dominant_weights(R: RootSystem, lam: Weight) -> list:
    """Dominant weights below ``lam``, in order of increasing depth."""
    lam = _require_dominant(lam)
    pos = R.positive_root_weights
    seen = {lam}
    todo = deque([lam])
    while todo:
        w = todo.popleft()
        for a in pos:
            v = w - a
            if RootSystem.is_dominant(v) and v not in seen:
                seen.add(v)
                todo.append(v)
    return sorted(seen, key=lambda w: (R.height(lam - w), tuple(-c for c in w)))


def weight_system(R: RootSystem, lam: Weight) -> WeightSystem:
    lam = _require_dominant(lam)
    key = (str(R.lie_type), tuple(lam))
    if key in _memo:
        return _memo[key]
    mults = None
    if _store is not None:
        payload = _store.get("weight-system", *key)
        if payload is not None:
            mults = {Weight(w): m for w, m in payload}
    if mults is None:
        mults = _freudenthal(R, lam)
        if _store is not None:
            _store.put("weight-system", *key, [[list(w), m] for w, m in mults.items()])
    total = sum(m * len(weyl_orbit(R, w)) for w, m in mults.items())
    ws = WeightSystem(R, lam, mults, total)
    _memo[key] = ws
    return ws


def _freudenthal(R: RootSystem, lam: Weight) -> dict:
    rho = R.weyl_vector_weight
    top = R.inner(lam + rho, lam + rho)
    pos = [(a, R.inner(a, a)) for a in R.positive_root_weights]
    mults = {}
    for mu in dominant_weights(R, lam):
        if mu == lam:
            mults[mu] = 1
            continue
        acc = Fraction(0)
        for a, _ in pos:
            k = 1
            while True:
                w = mu + a * k
                dom, _ = R.to_dominant(w)
                m = mults.get(dom, 0)
                if not m:
                    break
                acc += m * R.inner(w, a)
                k += 1
        denom = top - R.inner(mu + rho, mu + rho)
        m = 2 * acc / denom
        if m.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity at {mu!r}")
        if m:
            mults[mu] = int(m)
    return mults


def multiplicity(R: RootSystem, lam: Weight, mu: Weight) -> int:
    """dim L(lam)[mu]; 0 outside the support."""
    return weight_system(R, lam).mult(mu)
