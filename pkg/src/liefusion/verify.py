"""The reproduction suite: every finite computation behind the F4 results,
each compared against its tabulated value."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import reduction, repbuilder
from .fusion import LAMBDA4, coset_defect, fusion_closure, admissible_set, virasoro_c
from .rootsystem import OrthoVec, Weight, build
from .tensor import decompose, hom_dim
from .weights import multiplicity, weight_system

REPORT_VERSION = "1"
PASS, FAIL, DISCREPANCY = "pass", "fail", "paper-discrepancy"

H = Fraction(1, 2)
W = Weight


def jsonable(x):
    """Exact values rendered as strings; containers recursively."""
    if isinstance(x, (OrthoVec, Weight)):
        return repr(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(jsonable(k)): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    expected: object
    computed: object
    ms: float = 0.0

    def as_dict(self, timing: bool = True) -> dict:
        d = {"id": self.id, "anchor": self.anchor, "status": self.status,
             "expected": jsonable(self.expected), "computed": jsonable(self.computed)}
        d["ms"] = round(self.ms, 3) if timing else 0
        return d


@dataclass
class CheckReport:
    checks: list = field(default_factory=list)
    version: str = REPORT_VERSION

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def as_dict(self, timing: bool = True) -> dict:
        return {"version": self.version, "checks": [c.as_dict(timing) for c in self.checks]}

    def __getitem__(self, cid: str) -> Check:
        return next(c for c in self.checks if c.id == cid)


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# ---------------------------------------------------------------------------
# individual checks; each returns (status, expected, computed)

GROUP_A = {
    W(0, -1, 2, -1): OrthoVec(0, 0, 0, 1),
    W(-1, 1, 0, -1): OrthoVec(0, 0, 1, 0),
    W(0, 0, -1, 2): OrthoVec(H, -H, -H, -H),
    W(0, -1, 1, 1): OrthoVec(H, -H, -H, H),
    W(-1, 1, -1, 1): OrthoVec(H, -H, H, -H),
    W(-1, 0, 1, 0): OrthoVec(H, -H, H, H),
}
GROUP_B = [OrthoVec(0, 1, 0, 0), OrthoVec(1, 0, 0, 0)] + [
    OrthoVec(H, H, s * H, t * H) for s in (1, -1) for t in (1, -1)]


def check_roots(_opts):
    R = build("F4")
    a = reduction.group_a_roots()
    b = reduction.group_b_roots()
    dyn_ok = all(R.from_orthogonal(v) == w for w, v in GROUP_A.items())
    expected = {"positive": 24, "h_dual": 9, "dim": 52, "theta": "[1,1,0,0]",
                "weyl_vector": "(1,1,1,1)", "group_A": sorted(GROUP_A.values()),
                "group_B": sorted(GROUP_B)}
    computed = {"positive": len(R.positive_roots), "h_dual": R.dual_coxeter, "dim": R.dimension,
                "theta": repr(R.highest_root), "weyl_vector": repr(R.weyl_vector_weight),
                "group_A": sorted(a), "group_B": sorted(b)}
    return _status(expected == computed and dyn_ok), expected, computed


def check_lambda4_weights(_opts):
    R = build("F4")
    ws = weight_system(R, LAMBDA4)
    short = {v for v in R.roots if not R.is_long(v)}
    nonzero = {R.to_orthogonal(w): m for w, m in ws.weights.items() if any(w)}
    computed = {"dim": ws.total_dim, "weights": len(ws), "zero_mult": ws.mult(W.zero(4)),
                "nonzero_are_short_roots_mult_1": set(nonzero) == short and set(nonzero.values()) == {1}}
    expected = {"dim": 26, "weights": 25, "zero_mult": 2, "nonzero_are_short_roots_mult_1": True}
    return _status(computed == expected), expected, computed


TENSOR_0010_0010 = [
    ("0000", 1), ("0001", 1), ("1000", 1), ("0010", 2), ("0002", 2), ("1001", 2),
    ("2000", 1), ("0100", 1), ("0003", 1), ("0011", 2), ("1010", 1), ("1002", 1),
    ("0101", 1), ("0020", 1),
]
TENSOR_0010_0001 = [
    ("0001", 1), ("1000", 1), ("0010", 1), ("0002", 1), ("1001", 1), ("0100", 1), ("0011", 1),
]


def _compact(w) -> str:
    return "".join(str(int(x)) for x in w)


def _tensor_check(lam, mu, table):
    R = build("F4")
    d = decompose(R, lam, mu)
    computed = [(_compact(w), m) for w, m in d.components.items()]
    dim_ok = d.total_dim(R) == weight_system(R, lam).total_dim * weight_system(R, mu).total_dim
    return _status(computed == table and dim_ok), table, computed


def check_tensor_33(_opts):
    return _tensor_check(W(0, 0, 1, 0), W(0, 0, 1, 0), TENSOR_0010_0010)


def check_tensor_34(_opts):
    return _tensor_check(W(0, 0, 1, 0), W(0, 0, 0, 1), TENSOR_0010_0001)


MULT_QUERIES = [(W(0, 1, -1, 1), W(0, 0, 1, 0)), (W(0, 1, 0, -1), W(0, 0, 1, 0)),
                (W(0, 1, -1, 0), W(0, 0, 0, 1)), (W(0, 1, -1, 1), W(0, 0, 1, 0))]


def check_mult_queries(_opts):
    R = build("F4")
    computed = [multiplicity(R, hw, mu) for mu, hw in MULT_QUERIES]
    return _status(computed == [1, 1, 1, 1]), [1, 1, 1, 1], computed


def check_basis_34(_opts):
    z = repbuilder.zero_weight_report()
    ok = z.det_34 != 0 and repbuilder.lambda4_module().weight_space_dim(W.zero(4)) == 2
    return _status(ok), "nonzero Gram determinant", {"det": z.det_34, "cos2": z.cos2_34}


def check_basis_35(_opts):
    z = repbuilder.zero_weight_report()
    return _status(z.det_35 != 0), "nonzero Gram determinant", {"det": z.det_35, "cos2": z.cos2_35}


KSPACE_RANKS = [(W(1, 0, 0, 0), 2), (W(0, 0, 1, 0), 1), (W(0, 0, 0, 1), 1), (W(0, 0, 1, 1), 0)]


def check_kspace_ranks(_opts):
    M = repbuilder.lambda4_module()
    computed = [repbuilder.kspace(M, mu, mu).rank for mu, _ in KSPACE_RANKS]
    expected = [r for _, r in KSPACE_RANKS]
    return _status(computed == expected), expected, computed


def kspace_scan(scan_max: int = 2) -> dict:
    """Compare the K-space corank with Klimyk over every dominant pair in the label box."""
    R = build("F4")
    M = repbuilder.lambda4_module()
    ws = weight_system(R, LAMBDA4).weights
    box = [W(c) for c in product(range(scan_max + 1), repeat=4)]
    inbox = set(box)
    pairs = mismatches = 0
    for mu in box:
        for d in ws:
            nu = mu + d
            if nu not in inbox:
                continue
            pairs += 1
            if repbuilder.fusion_via_kspace(M, mu, nu) != hom_dim(R, LAMBDA4, mu, nu):
                mismatches += 1
    return {"pairs": pairs, "mismatches": mismatches}


def check_kspace_scan(opts):
    out = kspace_scan(opts.get("scan_max", 2))
    return _status(out["mismatches"] == 0 and out["pairs"] > 0), {"mismatches": 0}, out


def check_fundamental_types(_opts):
    try:
        table = reduction.fundamental_table()
    except reduction.ReductionError as exc:
        return FAIL, list(reduction.EXPECTED_RULES), str(exc)
    return PASS, list(reduction.EXPECTED_RULES), [t.rule for t in table]


CLOSURE_LISTS = {
    1: [W(0, 0, 0, 0), W(0, 0, 0, 1)],
    2: [W(0, 0, 0, 0), W(0, 0, 0, 1), W(0, 0, 0, 2), W(1, 0, 0, 0), W(0, 0, 1, 0)],
}


def check_closure(_opts):
    R = build("F4")
    computed, ok = {}, True
    for l in (1, 2, 3):
        got = fusion_closure(R, l, [LAMBDA4])
        computed[l] = got
        ok &= got == admissible_set(R, l)
        if l in CLOSURE_LISTS:
            ok &= set(got) == set(CLOSURE_LISTS[l])
    return _status(ok), {l: "all admissible weights" for l in (1, 2, 3)}, computed


def check_compression(_opts):
    s = reduction.verify_compression_cases()
    computed = {c: {"passed": r.passed, "via": r.via, "k": r.k, "alpha": r.alpha, "eta": r.eta,
                    "data_match": s.data_match[c]} for c, r in s.reports.items()}
    ok = all(r.passed for r in s.reports.values()) and all(s.data_match.values())
    return _status(ok), {c.case: {"via": c.via, "k": c.k, "alpha": c.alpha, "eta": c.eta}
                         for c in reduction.COMPRESSION_CASES}, computed


def check_annihilators(_opts):
    ok = reduction.annihilators_independent()
    return _status(ok), "distinct lines", "distinct lines" if ok else "same line"


def check_pairings(_opts):
    computed = list(repbuilder.norm_pairings())
    return _status(computed == [2, 2, 1]), [2, 2, 1], computed


def _embeddings():
    F4, G2, A1, C3 = (build(t) for t in ("F4", "G2", "A1", "C3"))
    return {
        "F4@1 vs A1@1+C3@1": coset_defect((F4, 1), [(A1, 1), (C3, 1)]),
        "G2@1 vs A1@3+A1@1": coset_defect((G2, 1), [(A1, 3), (A1, 1)]),
    }


def check_central_charges(_opts):
    computed = _embeddings()
    return _status(all(v == 0 for v in computed.values())), {k: 0 for k in computed}, computed


def check_level2_defect(_opts):
    F4, A1, C3 = (build(t) for t in ("F4", "A1", "C3"))
    defect = coset_defect((F4, 2), [(A1, 2), (C3, 2)])
    tabulated = virasoro_c(9)
    computed = {"defect": defect, "minimal_model_m": next(
        (m for m in range(2, 200) if virasoro_c(m) == defect), None)}
    status = PASS if defect == tabulated else DISCREPANCY
    return status, {"tabulated": tabulated}, computed


CHECKS = [
    ("roots", "F4 root data and the two groups of short roots", check_roots),
    ("lambda4-weights", "weight system of the 26-dimensional module", check_lambda4_weights),
    ("tensor-0010x0010", "decomposition of (0010)x(0010)", check_tensor_33),
    ("tensor-0010x0001", "decomposition of (0010)x(0001)", check_tensor_34),
    ("mult-queries", "the four weight multiplicity queries", check_mult_queries),
    ("zero-basis-rho3-rho4", "F v at rho3 and rho4 span the zero weight space", check_basis_34),
    ("zero-basis-rho3-rho5", "F v at rho3 and rho5 span the zero weight space", check_basis_35),
    ("kspace-ranks", "K-space ranks at nu = mu", check_kspace_ranks),
    ("kspace-scan", "K-space corank against Klimyk on the label box", check_kspace_scan),
    ("fundamental-types", "the nine fundamental types and their fusion rules", check_fundamental_types),
    ("closure", "fusion closure of lambda_4 for l = 1, 2, 3", check_closure),
    ("compression", "compression conditions for the four level 3 and 4 cases", check_compression),
    ("annihilators", "annihilators of the two zero-weight vectors", check_annihilators),
    ("pairings", "squared norms and cross pairing of the two zero-weight vectors", check_pairings),
    ("central-charges", "level-1 conformal embeddings have zero defect", check_central_charges),
    ("level2-defect", "level-2 coset central charge", check_level2_defect),
]
CHECK_IDS = [cid for cid, _, _ in CHECKS]
# older spellings accepted by --only
ONLY_ALIASES = {"appendixB": "pairings"}


def verify_paper(only=None, scan_max: int = 2) -> CheckReport:
    """Run the suite (or the subset ``only``) in a fixed order."""
    if only:
        only = [ONLY_ALIASES.get(x, x) for x in only]
        unknown = set(only) - set(CHECK_IDS)
        if unknown:
            raise KeyError(f"unknown check id(s): {', '.join(sorted(unknown))}")
    opts = {"scan_max": scan_max}
    report = CheckReport()
    for cid, anchor, fn in CHECKS:
        if only and cid not in only:
            continue
        t0 = time.perf_counter()
        try:
            status, expected, computed = fn(opts)
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            status, expected, computed = FAIL, None, f"{type(exc).__name__}: {exc}"
        report.checks.append(Check(cid, anchor, status, expected, computed,
                                   (time.perf_counter() - t0) * 1000))
    return report
