"""Reduction of F4 intertwiner types with charge lambda_4 to the nine
fundamental types, and the compression criterion used for the types of
level 3 and 4.

A "type nu over mu at level l" refers to intertwining operators with charge
L(lambda_4, l), source L(mu, l) and target L(nu, l).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import repbuilder
from .linalg import rank
from .fusion import LAMBDA4, fusion_unit_charge, is_admissible, lambda4_rule
from .rootsystem import OrthoVec, RootSystem, Weight, build
from .tensor import hom_dim
from .weights import multiplicity, weight_system

L1, L2, L3, L4 = (Weight(int(i == k) for i in range(4)) for k in range(4))
ZERO = Weight(0, 0, 0, 0)


def f4() -> RootSystem:
    return build("F4")


# ---------------------------------------------------------------------------
# classification of nu - mu


@dataclass(frozen=True)
class DifferenceClass:
    kind: str  # zero | shortA | shortB | long-root | other
    root: OrthoVec | None = None


def group_a_roots() -> list:
    """Positive short roots orthogonal to the highest root."""
    R = f4()
    return [a for a in R.positive_roots if not R.is_long(a) and R.inner(a, R.highest_root) == 0]


def group_b_roots() -> list:
    R = f4()
    return [a for a in R.positive_roots if not R.is_long(a) and R.inner(a, R.highest_root) != 0]


def classify_difference(mu: Weight, nu: Weight) -> DifferenceClass:
    R = f4()
    d = Weight(nu) - Weight(mu)
    if not any(d):
        return DifferenceClass("zero")
    v = R.to_orthogonal(d)
    if not R.is_root(v):
        return DifferenceClass("other")
    if R.is_long(v):
        return DifferenceClass("long-root", v)
    kind = "shortA" if R.inner(v, R.highest_root) == 0 else "shortB"
    return DifferenceClass(kind, v)


# ---------------------------------------------------------------------------
# fundamental types


@dataclass(frozen=True)
class FundamentalType:
    id: int
    mu0: Weight
    nu0: Weight
    level: int
    rule: int


# (id, nu0, mu0, level) as "type nu0 over mu0"
_FUNDAMENTAL = [
    (1, L3 * 2, L2 + L4, 4),
    (2, L2, L1 + L4, 3),
    (3, L4 * 2, L3, 2),
    (4, L3 + L4, L2, 3),
    (5, L2 + L4, L1 + L3, 4),
    (6, L3, L1, 2),
    (7, L3 + L4, L3 + L4, 3),
    (8, L3, L3, 2),
    (9, L4, L4, 1),
]
EXPECTED_RULES = (1, 1, 1, 1, 1, 1, 2, 1, 1)


class ReductionError(RuntimeError):
    pass


def fundamental_table() -> list:
    """The nine fundamental types with fusion rules computed independently of the tensor module.

    Types (1)-(6) go through the simple-root criterion, (7)-(9) through the
    K-space corank in the explicit 26-dimensional module.
    """
    R = f4()
    M = repbuilder.lambda4_module()
    out = []
    for (tid, nu0, mu0, k), expected in zip(_FUNDAMENTAL, EXPECTED_RULES):
        if R.level(mu0) != k or R.level(nu0) != k:
            raise ReductionError(f"type {tid}: level mismatch")
        rule = lambda4_rule(mu0, nu0) if tid <= 6 else repbuilder.fusion_via_kspace(M, mu0, nu0)
        if rule != expected:
            raise ReductionError(f"type {tid}: computed rule {rule}, expected {expected}")
        out.append(FundamentalType(tid, mu0, nu0, k, rule))
    diffs = sorted((R.to_orthogonal(t.nu0 - t.mu0) for t in out[:6]))
    if diffs != sorted(group_a_roots()):
        raise ReductionError("differences of types (1)-(6) are not the group-A roots")
    return out


def _type(tid: int) -> FundamentalType:
    tid_, nu0, mu0, k = _FUNDAMENTAL[tid - 1]
    return FundamentalType(tid_, mu0, nu0, k, EXPECTED_RULES[tid - 1])


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class ReductionCertificate:
    level: int
    mu: Weight
    nu: Weight
    target: str  # "1".."9", "adjoint-of k", or "zero-rule"
    shift: Weight | None = None
    mu0: Weight | None = None
    nu0: Weight | None = None
    k: int | None = None
    rule: int = 0
    flag_a: bool = False
    flag_b: bool = False

    @property
    def type_id(self) -> int | None:
        if self.target == "zero-rule":
            return None
        return int(self.target.split()[-1])


def _certify(l: int, mu: Weight, nu: Weight, tid: int, adjoint: bool) -> ReductionCertificate:
    R = f4()
    t = _type(tid)
    # when adjoint, the pair (nu, mu) is the one reducing to the type
    src, tgt = (nu, mu) if adjoint else (mu, nu)
    shift = src - t.mu0
    k = t.level
    n_here = hom_dim(R, LAMBDA4, src, tgt)
    n_type = hom_dim(R, LAMBDA4, t.mu0, t.nu0)
    flag_a = n_here <= n_type
    flag_b = (RootSystem.is_dominant(shift) and R.level(shift) == l - k
              and tgt == t.nu0 + shift and src == t.mu0 + shift)
    if not (flag_a and flag_b):
        raise ReductionError(f"reduction failed for level {l}, {mu!r} -> {nu!r} (type {tid})")
    return ReductionCertificate(
        l, mu, nu, f"adjoint-of {tid}" if adjoint else str(tid),
        shift, t.mu0, t.nu0, k, n_here, flag_a, flag_b)


def reduce_to_fundamental(l: int, mu: Weight, nu: Weight) -> ReductionCertificate:
    """Reduce a type nu over mu at level l with (mu|theta) = (nu|theta) = l."""
    R = f4()
    mu, nu = Weight(mu), Weight(nu)
    for w in (mu, nu):
        if not RootSystem.is_dominant(w) or R.level(w) != l:
            raise ValueError(f"{w!r} must be dominant of level exactly {l}")
    if mu == nu:
        n3, n4 = mu[2], mu[3]
        if n3 == 0 and n4 == 0:
            return ReductionCertificate(l, mu, nu, "zero-rule")
        tid = 7 if (n3 and n4) else (8 if n3 else 9)
        return _certify(l, mu, nu, tid, adjoint=False)
    d = R.to_orthogonal(nu - mu)
    group_a = group_a_roots()
    if d not in group_a and -d not in group_a:
        raise ReductionError(f"nu - mu = {d!r} is out of scope: neither 0 nor a group-A root")
    if hom_dim(R, LAMBDA4, mu, nu) == 0:
        return ReductionCertificate(l, mu, nu, "zero-rule")
    adjoint = d not in group_a
    key = -d if adjoint else d
    tid = next(t for t, nu0, mu0, _ in _FUNDAMENTAL[:6] if R.to_orthogonal(nu0 - mu0) == key)
    return _certify(l, mu, nu, tid, adjoint)


# ---------------------------------------------------------------------------
# compression criterion


@dataclass
class CompressionReport:
    level: int
    mu: Weight
    nu: Weight
    shift: Weight
    mu0: Weight
    nu0: Weight
    k: int
    alpha: OrthoVec
    eta: OrthoVec
    nu_minus_shift: Weight
    a: bool
    b: bool
    c: bool
    d_i: bool
    d_ii: bool
    d_iii_prime: bool
    d_iii: bool | None  # None when (iii') already settled (d)
    via: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def d(self) -> bool:
        return self.d_i and self.d_ii and (self.d_iii_prime or bool(self.d_iii))

    @property
    def passed(self) -> bool:
        return self.a and self.b and self.c and self.d


def check_compression(l: int, mu: Weight, nu: Weight, shift: Weight, mu0: Weight, nu0: Weight,
                   module: repbuilder.ExplicitModule | None = None) -> CompressionReport:
    """Check the four compression conditions for charge lambda_4 (shift is the weight rho)."""
    R = f4()
    mu, nu, shift, mu0, nu0 = map(Weight, (mu, nu, shift, mu0, nu0))
    k = int(max(R.level(LAMBDA4), R.level(mu0), R.level(nu0)))
    alpha_w = nu0 - nu + shift
    eta_w = nu - mu
    alpha, eta = R.to_orthogonal(alpha_w), R.to_orthogonal(eta_w)
    details = {}

    inputs_ok = all(is_admissible(R, l, w) for w in (mu, nu, shift, mu0, nu0))
    n_big = fusion_unit_charge(R, l, LAMBDA4, mu, nu).value if inputs_ok else 0
    n_small = fusion_unit_charge(R, k, LAMBDA4, mu0, nu0).value if all(
        is_admissible(R, k, w) for w in (mu0, nu0)) else 0
    details["N"] = n_big
    details["N0"] = n_small
    a = inputs_ok and n_big > 0 and n_big <= n_small

    m = multiplicity(R, nu0, nu - shift)
    h = hom_dim(R, nu0, shift, nu)
    details["mult_nu0_at_nu_minus_rho"] = m
    details["hom_nu0_rho_nu"] = h
    b = mu == mu0 + shift and m == 1 and h == 1

    c = R.level(shift) + k <= l

    d_i = hom_dim(R, LAMBDA4, mu0, nu0) == 1
    d_ii = R.is_root(alpha) and R.root_index(alpha) < len(R.positive_roots)
    lam4 = weight_system(R, LAMBDA4)
    d_iii_prime = d_ii and lam4.mult(nu0 - mu0) == 1 and R.inner(eta, alpha) < 0
    details["eta_dot_alpha"] = R.inner(eta, alpha)
    d_iii = None
    via = None
    if d_i and d_ii:
        if d_iii_prime:
            via = "iii'"
        else:
            M = module or repbuilder.lambda4_module()
            d_iii = repbuilder.check_condition_iii(M, mu0, nu0, alpha, eta_w)
            via = "iii" if d_iii else None
    return CompressionReport(l, mu, nu, shift, mu0, nu0, k, alpha, eta, nu - shift,
                     a, b, c, d_i, d_ii, d_iii_prime, d_iii, via, details)


@dataclass(frozen=True)
class CompressionCase:
    case: int
    level: int
    mu: Weight
    nu: Weight
    shift: Weight
    mu0: Weight
    nu0: Weight
    k: int
    nu_minus_shift: Weight
    alpha: OrthoVec
    eta: OrthoVec
    via: str


H = Fraction(1, 2)
COMPRESSION_CASES = (
    CompressionCase(1, 4, L3 * 2, L2 + L4, L3, L3, L3, 2, Weight(0, 1, -1, 1),
                 OrthoVec(0, 0, 0, 1), OrthoVec(0, 0, 0, -1), "iii"),
    CompressionCase(2, 3, L1 + L4, L2, L4, L1, L3, 2, Weight(0, 1, 0, -1),
                 OrthoVec(H, -H, -H, H), OrthoVec(0, 0, 1, 0), "iii'"),
    CompressionCase(4, 3, L3 + L4, L2, L3, L4, L4, 1, Weight(0, 1, -1, 0),
                 OrthoVec(H, -H, -H, H), OrthoVec(-H, H, H, -H), "iii"),
    CompressionCase(5, 4, L1 + L3, L2 + L4, L3, L1, L3, 2, Weight(0, 1, -1, 1),
                 OrthoVec(0, 0, 0, 1), OrthoVec(H, -H, H, -H), "iii'"),
)


@dataclass
class CompressionSummary:
    reports: dict  # case -> CompressionReport
    data_match: dict  # case -> bool (k, alpha, eta, nu - rho agree with the tabulated data)
    annihilators_distinct: bool
    passed: bool


def annihilators_independent(M: repbuilder.ExplicitModule | None = None) -> bool:
    """The annihilators of F_{rho4} v_{rho4} and F_{rho3} v_{rho3} in V[0] are distinct lines."""
    M = M or repbuilder.lambda4_module()
    z = repbuilder.zero_weight_report(M)
    a4 = repbuilder.annihilator(M, ZERO, z.f4v4)
    a3 = repbuilder.annihilator(M, ZERO, z.f3v3)
    return len(a4) == 1 and len(a3) == 1 and rank(a4 + a3) == 2


def verify_compression_cases() -> CompressionSummary:
    M = repbuilder.lambda4_module()
    reports, match = {}, {}
    for c in COMPRESSION_CASES:
        rep = check_compression(c.level, c.mu, c.nu, c.shift, c.mu0, c.nu0, module=M)
        reports[c.case] = rep
        match[c.case] = (rep.k == c.k and rep.alpha == c.alpha and rep.eta == c.eta
                         and rep.nu_minus_shift == c.nu_minus_shift and rep.via == c.via)
    distinct = annihilators_independent(M)
    ok = all(r.passed for r in reports.values()) and all(match.values()) and distinct
    return CompressionSummary(reports, match, distinct, ok)
