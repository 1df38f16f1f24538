"""Affine fusion rules, conformal weights and central charges."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .rootsystem import RootSystem, Weight, build
from .tensor import decompose, hom_dim
from .weights import multiplicity

LAMBDA4 = Weight(0, 0, 0, 1)


@dataclass(frozen=True)
class FusionRule:
    level: int
    triple: tuple
    value: int
    method: str  # truncated | kac-walton | simple-root | kspace

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class ConformalData:
    level: int
    casimir: Fraction
    delta: Fraction


def admissible_set(R: RootSystem, l: int) -> list:
    """Dominant weights with (lam|theta) <= l, ordered by level then labels."""
    if l < 0:
        return []
    bounds = [int(l // m) for m in R.comarks]
    out = [Weight(c) for c in product(*(range(b + 1) for b in bounds))
           if R.level(Weight(c)) <= l]
    return sorted(out, key=lambda w: (R.level(w), tuple(w)))


def is_admissible(R: RootSystem, l: int, lam: Weight) -> bool:
    return RootSystem.is_dominant(lam) and R.level(lam) <= l


def casimir(R: RootSystem, lam: Weight) -> Fraction:
    """C_lam = (lam | lam + 2 rho)."""
    lam = Weight(lam)
    return R.inner(lam, lam + R.weyl_vector_weight * 2)


def conformal(R: RootSystem, l: int, lam: Weight) -> ConformalData:
    c = casimir(R, lam)
    return ConformalData(l, c, c / (2 * (l + R.dual_coxeter)))


def delta_defect(R: RootSystem, l: int, lam: Weight, mu: Weight, nu: Weight) -> Fraction:
    d = lambda w: conformal(R, l, w).delta  # noqa: E731
    return d(lam) + d(mu) - d(nu)


def _check_admissible(R, l, *ws):
    for w in ws:
        if not is_admissible(R, l, Weight(w)):
            raise ValueError(f"{Weight(w)!r} is not admissible at level {l}")


def fusion_unit_charge(R: RootSystem, l: int, lam: Weight, mu: Weight, nu: Weight) -> FusionRule:
    """Truncated tensor rule, valid when the charge has level 1."""
    lam, mu, nu = Weight(lam), Weight(mu), Weight(nu)
    if R.level(lam) != 1:
        raise ValueError("charge weight must have (lam|theta) = 1; use fusion_general")
    _check_admissible(R, l, lam, mu)
    value = hom_dim(R, lam, mu, nu) if is_admissible(R, l, nu) else 0
    return FusionRule(l, (lam, mu, nu), value, "truncated")


def _fold_affine(R: RootSystem, x: Weight, K: int):
    """Bring a rho-shifted weight into the open alcove of size K.

    Returns (weight, sign), or None when ``x`` lies on an affine wall.
    """
    theta = R.highest_root_weight
    sign = 1
    while True:
        x, s = R.to_dominant(x)
        sign *= s
        if 0 in x:
            return None
        lev = R.level(x)
        if lev == K:
            return None
        if lev < K:
            return x, sign
        x = x - theta * int(lev - K)
        sign = -sign


def kac_walton(R: RootSystem, l: int, lam: Weight, mu: Weight) -> dict:
    """All level-l fusion coefficients N^nu_{lam mu}, keyed by nu."""
    rho = R.weyl_vector_weight
    K = l + R.dual_coxeter
    acc: dict = {}
    for comp, m in decompose(R, lam, mu).components.items():
        folded = _fold_affine(R, comp + rho, K)
        if folded is None:
            continue
        x, sign = folded
        nu = x - rho
        acc[nu] = acc.get(nu, 0) + sign * m
    if any(v < 0 for v in acc.values()):
        raise ArithmeticError("negative fusion coefficient")
    return {nu: v for nu, v in acc.items() if v}


def fusion_general(R: RootSystem, l: int, lam: Weight, mu: Weight, nu: Weight) -> FusionRule:
    lam, mu, nu = Weight(lam), Weight(mu), Weight(nu)
    _check_admissible(R, l, lam, mu, nu)
    return FusionRule(l, (lam, mu, nu), kac_walton(R, l, lam, mu).get(nu, 0), "kac-walton")


def fusion(R: RootSystem, l: int, lam: Weight, mu: Weight, nu: Weight) -> FusionRule:
    """Dispatch to the truncated rule when possible, Kac-Walton otherwise."""
    if R.level(Weight(lam)) == 1:
        return fusion_unit_charge(R, l, lam, mu, nu)
    return fusion_general(R, l, lam, mu, nu)


def lambda4_rule(mu: Weight, nu: Weight) -> int:
    """Fusion rule N^nu_mu for the F4 charge lambda_4, when nu - mu is a nonzero weight.

    The rule is 1 exactly when no shifted weight nu - mu + (n_{mu,alpha}+1) alpha,
    alpha simple, is a weight of L(lambda_4).
    """
    R = build("F4")
    mu, nu = Weight(mu), Weight(nu)
    d = nu - mu
    if not any(d) or multiplicity(R, LAMBDA4, d) == 0:
        raise ValueError(f"nu - mu = {d!r} is not a nonzero weight of L(lambda_4)")
    for i, a in enumerate(R.simple_root_weights):
        if multiplicity(R, LAMBDA4, d + a * (mu[i] + 1)):
            return 0
    return 1


def fusion_closure(R: RootSystem, l: int, generators) -> list:
    """Smallest set containing the generators and closed under fusion with them."""
    gens = [Weight(g) for g in generators]
    _check_admissible(R, l, *gens)
    unit = all(R.level(g) == 1 for g in gens)
    targets = admissible_set(R, l)
    S = set(gens)
    changed = True
    while changed:
        changed = False
        for g in gens:
            for mu in sorted(S):
                if unit:
                    new = [nu for nu in targets if fusion_unit_charge(R, l, g, mu, nu).value]
                else:
                    new = list(kac_walton(R, l, g, mu))
                for nu in new:
                    if nu not in S:
                        S.add(nu)
                        changed = True
    return [w for w in targets if w in S]


def central_charge(R: RootSystem, l: int) -> Fraction:
    """Sugawara central charge l dim g / (l + h^vee)."""
    return Fraction(l * R.dimension, l + R.dual_coxeter)


def virasoro_c(m: int) -> Fraction:
    """Unitary minimal-model central charge 1 - 6/(m(m+1))."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return 1 - Fraction(6, m * (m + 1))


def coset_defect(big, parts) -> Fraction:
    """c(big) minus the sum of c over the embedded parts; each entry is (R, level)."""
    R, l = big
    return central_charge(R, l) - sum((central_charge(S, k) for S, k in parts), Fraction(0))

