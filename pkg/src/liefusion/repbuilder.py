"""Chevalley bases and explicit irreducible modules over the rationals.

Modules are built weight space by weight space, going down from the highest
weight.  At a weight mu the space is spanned by the vectors F_j b with b in
the space at mu + alpha_j; a combination of such vectors vanishes exactly
when every simple E_i kills it, so the E-images decide the linear relations.
The contravariant (Shapovalov) form is computed alongside from
<F_j b | y> = <b | E_j y>.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from . import linalg
from .rootsystem import OrthoVec, RootSystem, Weight, build
from .weights import dim as weyl_dim, multiplicity

DEFAULT_DIM_CAP = 400

_store = None
_memo: dict = {}


def set_store(store) -> None:
    global _store
    _store = store


def clear_memo() -> None:
    _memo.clear()


# ---------------------------------------------------------------------------
# Chevalley basis


@dataclass(frozen=True, eq=False)
class ChevalleyBasis:
    """Structure constants [E_r, E_s] = N(r, s) E_{r+s} with extraspecial signs +1."""

    R: RootSystem

    @cached_property
    def extraspecial(self) -> dict:
        R = self.R
        out = {}
        npos = len(R.positive_roots)
        for k in range(R.rank, npos):
            xi = R.positive_roots[k]
            for i in range(R.rank):
                rest = xi - R.simple_roots[i]
                if R.is_root(rest) and R.root_index(rest) < npos:
                    out[k] = (i, R.root_index(rest))
                    break
        return out

    def string_down(self, r: int, s: int) -> int:
        """max{k : root_s - k root_r is a root}."""
        R = self.R
        a, b = R.roots[r], R.roots[s]
        k = 0
        while R.is_root(b - a * (k + 1)):
            k += 1
        return k

    def _norm(self, x: OrthoVec) -> Fraction:
        return self.R.inner(x, x)

    def N(self, r: int, s: int) -> int:
        """Structure constant for root indices r, s (0 if r+s is not a root)."""
        return self._N(r, s)

    @lru_cache(maxsize=None)
    def _N(self, r: int, s: int) -> int:
        R = self.R
        npos = len(R.positive_roots)
        a, b = R.roots[r], R.roots[s]
        xi = a + b
        if not R.is_root(xi):
            return 0
        rpos, spos = r < npos, s < npos
        if rpos and spos:
            if r > s:
                return -self._N(s, r)
            k = R.root_index(xi)
            e1, e2 = self.extraspecial[k]
            if (r, s) == (e1, e2):
                return self.string_down(r, s) + 1
            A, B = R.roots[e1], R.roots[e2]
            ia, ib = R.root_index(-A), R.root_index(-B)
            acc = Fraction(0)
            if R.is_root(b - A):
                acc += Fraction(self._N(s, ia) * self._N(r, ib)) / self._norm(b - A)
            if R.is_root(a - A):
                acc += Fraction(self._N(ia, r) * self._N(s, ib)) / self._norm(a - A)
            val = self._norm(xi) * acc / (self.string_down(e1, e2) + 1)
        elif not rpos and not spos:
            return -self._N(R.root_index(-a), R.root_index(-b))
        else:
            t = R.root_index(-xi)
            tpos = t < npos
            # cyclic relation N_{r1,r2}/(r3,r3) = N_{r2,r3}/(r1,r1) = N_{r3,r1}/(r2,r2)
            if spos == tpos:
                val = self._norm(xi) / self._norm(a) * self._N(s, t)
            else:
                val = self._norm(xi) / self._norm(b) * self._N(t, r)
        if Fraction(val).denominator != 1:
            raise ArithmeticError(f"non-integral structure constant for roots {r}, {s}")
        return int(val)

    def coroot_coords(self, r: int) -> tuple[int, ...]:
        """H_r in the basis of simple coroots H_1..H_rank."""
        R = self.R
        a = R.roots[r]
        out = []
        for fw in R.fundamental_weights:
            c = 2 * R.inner(a, fw) / R.inner(a, a)
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    @cached_property
    def adjoint(self) -> list:
        """ad matrices (numpy int) of every basis element, basis order E_roots then H_simple."""
        R = self.R
        nr = len(R.roots)
        n = nr + R.rank
        mats = []
        labels = [R.from_orthogonal(x) for x in R.roots]
        for r in range(nr):
            m = np.zeros((n, n), dtype=np.int64)
            a = R.roots[r]
            neg = R.root_index(-a)
            for s in range(nr):
                if s == neg:
                    m[nr:, s] = self.coroot_coords(r)
                    continue
                c = self.N(r, s)
                if c:
                    m[R.root_index(a + R.roots[s]), s] = c
            for i in range(R.rank):
                m[r, nr + i] = -labels[r][i]
            mats.append(m)
        for i in range(R.rank):
            m = np.zeros((n, n), dtype=np.int64)
            for s in range(nr):
                m[s, s] = labels[s][i]
            mats.append(m)
        return mats

    def bracket_coords(self, x: int, y: int) -> np.ndarray:
        """Coordinates of [b_x, b_y] in the adjoint basis."""
        return self.adjoint[x][:, y]


@lru_cache(maxsize=None)
def chevalley_basis(R: RootSystem) -> ChevalleyBasis:
    return ChevalleyBasis(R)


# ---------------------------------------------------------------------------
# block operators


class BlockOp:
    """A weight-homogeneous operator: blocks[mu] maps V[mu] -> V[mu + shift]."""

    def __init__(self, shift: Weight, blocks: dict | None = None):
        self.shift = Weight(shift)
        self.blocks = blocks or {}

    def block(self, mu: Weight, dims: dict):
        b = self.blocks.get(mu)
        if b is not None:
            return b
        return linalg.zeros(dims.get(mu + self.shift, 0), dims.get(mu, 0))

    def compose(self, other: "BlockOp", dims: dict) -> "BlockOp":
        """self o other."""
        out = {}
        for mu, b in other.blocks.items():
            mid = mu + other.shift
            a = self.blocks.get(mid)
            if a is None or (mu + other.shift + self.shift) not in dims:
                continue
            out[mu] = linalg.matmul(a, b)
        return BlockOp(self.shift + other.shift, out)

    def combine(self, other: "BlockOp", scale=1) -> "BlockOp":
        out = dict(self.blocks)
        for mu, b in other.blocks.items():
            if mu in out:
                out[mu] = linalg.madd(out[mu], b, scale)
            else:
                out[mu] = [[scale * x for x in row] for row in b]
        return BlockOp(self.shift, out)

    def scaled(self, c) -> "BlockOp":
        return BlockOp(self.shift, {mu: [[c * x for x in row] for row in b] for mu, b in self.blocks.items()})

    def apply(self, mu: Weight, v):
        b = self.blocks.get(mu)
        if b is None:
            return None
        return linalg.matvec(b, v)


def commutator(a: BlockOp, b: BlockOp, dims: dict) -> BlockOp:
    return a.compose(b, dims).combine(b.compose(a, dims), -1)


# ---------------------------------------------------------------------------
# explicit modules


@dataclass
class ExplicitModule:
    R: RootSystem
    highest_weight: Weight
    weights: list  # depth order
    dims: dict
    gram: dict  # weight -> Gram matrix of that weight space (diagonal)
    simple_E: list  # BlockOp per simple root
    simple_F: list
    _ops: dict = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    @cached_property
    def basis(self) -> list:
        return [(mu, k) for mu in self.weights for k in range(self.dims[mu])]

    @cached_property
    def offsets(self) -> dict:
        out, pos = {}, 0
        for mu in self.weights:
            out[mu] = pos
            pos += self.dims[mu]
        return out

    def weight_space_dim(self, mu) -> int:
        return self.dims.get(Weight(mu), 0)

    def _root_key(self, alpha) -> int:
        if isinstance(alpha, int):
            return alpha
        return self.R.root_index(alpha)

    def op(self, alpha) -> BlockOp:
        """Root vector E_alpha for any root (E_{-alpha} = F_alpha)."""
        r = self._root_key(alpha)
        if r in self._ops:
            return self._ops[r]
        R = self.R
        npos = len(R.positive_roots)
        pos = r if r < npos else r - npos
        if pos < R.rank:
            res = self.simple_E[pos] if r < npos else self.simple_F[pos]
        else:
            cb = chevalley_basis(R)
            i, j = cb.extraspecial[pos]
            n = cb.N(i, j)
            if r < npos:
                res = commutator(self.op(i), self.op(j), self.dims).scaled(Fraction(1, n))
            else:
                # [E_{-b}, E_{-a_i}] = N_{-b,-a_i} E_{-g} and N_{-b,-a_i} = N_{a_i,b}
                res = commutator(self.op(j + npos), self.op(i + npos), self.dims).scaled(Fraction(1, n))
        self._ops[r] = res
        return res

    def E(self, alpha) -> BlockOp:
        return self.op(alpha)

    def F(self, alpha) -> BlockOp:
        return self.op(-self.R.roots[self._root_key(alpha)])

    def apply(self, alpha, mu: Weight, v):
        """E_alpha applied to the vector v of weight mu; returns (weight, vector)."""
        op = self.op(alpha)
        target = Weight(mu) + op.shift
        if target not in self.dims:
            return target, []
        out = op.apply(Weight(mu), v)
        if out is None:
            out = [Fraction(0)] * self.dims[target]
        return target, out

    def inner(self, mu: Weight, u, v) -> Fraction:
        return linalg.dot(u, linalg.matvec(self.gram[Weight(mu)], v))

    def highest_vector(self):
        return self.highest_weight, [Fraction(1)]

    def dense(self, alpha) -> list:
        """Full matrix of E_alpha in the module basis."""
        n = self.dimension
        m = linalg.zeros(n, n)
        op = self.op(alpha)
        for mu, b in op.blocks.items():
            r0, c0 = self.offsets[mu + op.shift], self.offsets[mu]
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    m[r0 + i][c0 + j] = x
        return m

    def dense_gram(self) -> list:
        n = self.dimension
        m = linalg.zeros(n, n)
        for mu, g in self.gram.items():
            o = self.offsets[mu]
            for i, row in enumerate(g):
                for j, x in enumerate(row):
                    m[o + i][o + j] = x
        return m

    # -- payload for the on-disk cache ----------------------------------------

    def to_payload(self) -> dict:
        def enc(m):
            return [[str(x) for x in row] for row in m]

        def enc_op(op):
            return [[list(mu), enc(b)] for mu, b in op.blocks.items()]

        return {
            "weights": [list(w) for w in self.weights],
            "dims": [self.dims[w] for w in self.weights],
            "gram": [enc(self.gram[w]) for w in self.weights],
            "E": [enc_op(op) for op in self.simple_E],
            "F": [enc_op(op) for op in self.simple_F],
        }

    @classmethod
    def from_payload(cls, R: RootSystem, lam: Weight, p: dict) -> "ExplicitModule":
        def dec(m):
            return [[Fraction(x) for x in row] for row in m]

        weights = [Weight(w) for w in p["weights"]]
        simple = R.simple_root_weights
        E = [BlockOp(simple[i], {Weight(mu): dec(b) for mu, b in blocks}) for i, blocks in enumerate(p["E"])]
        F = [BlockOp(-simple[i], {Weight(mu): dec(b) for mu, b in blocks}) for i, blocks in enumerate(p["F"])]
        return cls(R, Weight(lam), weights, dict(zip(weights, p["dims"])),
                   {w: dec(g) for w, g in zip(weights, p["gram"])}, E, F)


def build_module(R: RootSystem, lam: Weight, dim_cap: int = DEFAULT_DIM_CAP) -> ExplicitModule:
    """The irreducible module L(lam) with an orthogonal weight basis and its unitary form."""
    lam = Weight(lam)
    if not RootSystem.is_dominant(lam):
        raise ValueError(f"{lam!r} is not dominant")
    d = weyl_dim(R, lam)
    if d > dim_cap:
        raise ValueError(f"dim L({lam!r}) = {d} exceeds the cap {dim_cap}")
    key = (str(R.lie_type), tuple(lam))
    if key in _memo:
        return _memo[key]
    mod = None
    if _store is not None:
        payload = _store.get("module-skeleton", *key)
        if payload is not None:
            mod = ExplicitModule.from_payload(R, lam, payload)
    if mod is None:
        mod = _construct(R, lam)
        if _store is not None:
            _store.put("module-skeleton", *key, mod.to_payload())
    _memo[key] = mod
    return mod


def _construct(R: RootSystem, lam: Weight) -> ExplicitModule:
    r = R.rank
    simple = R.simple_root_weights
    dims = {lam: 1}
    gram = {lam: [[Fraction(1)]]}
    E = [dict() for _ in range(r)]  # E[i][mu]: V[mu] -> V[mu + a_i]
    F = [dict() for _ in range(r)]  # F[j][mu]: V[mu] -> V[mu - a_j]
    order = [lam]
    layer = [lam]
    while layer:
        cand_weights = sorted({w - simple[j] for w in layer for j in range(r)},
                              key=lambda w: tuple(-c for c in w))
        next_layer = []
        for mu in cand_weights:
            cands = [(j, b) for j in range(r) if mu + simple[j] in dims
                     for b in range(dims[mu + simple[j]])]
            ups = [i for i in range(r) if mu + simple[i] in dims]
            images = []
            for j, b in cands:
                src = mu + simple[j]
                img = []
                for i in ups:
                    tgt = mu + simple[i]
                    vec = [Fraction(0)] * dims[tgt]
                    top = src + simple[i]
                    if top in dims:
                        eb = [row[b] for row in E[i][src]]
                        vec = linalg.matvec(F[j][top], eb)
                    if i == j:
                        vec[b] += src[i]
                    img.extend(vec)
                images.append(img)
            chosen = linalg.independent_rows(images)
            if not chosen:
                continue
            n = len(chosen)
            dims[mu] = n
            order.append(mu)
            next_layer.append(mu)
            # E_i blocks: columns are the chosen images
            off = 0
            for i in ups:
                t = dims[mu + simple[i]]
                E[i][mu] = [[images[k][off + row] for k in chosen] for row in range(t)]
                off += t
            # F_j blocks: express every candidate through the chosen ones
            basis_t = linalg.transpose([images[k] for k in chosen])
            coeffs = {}
            for c, img in enumerate(images):
                coeffs[c] = linalg.solve(basis_t, img)
            for c, (j, b) in enumerate(cands):
                src = mu + simple[j]
                blk = F[j].setdefault(src, linalg.zeros(n, dims[src]))
                for row in range(n):
                    blk[row][b] = coeffs[c][row]
            # Gram: <F_j b | y> = <b | E_j y>
            g = linalg.zeros(n, n)
            for a, k in enumerate(chosen):
                j, b = cands[k]
                src = mu + simple[j]
                row_b = gram[src][b]
                ej = E[j][mu]
                for c in range(n):
                    g[a][c] = sum((row_b[t] * ej[t][c] for t in range(dims[src])), Fraction(0))
            gram[mu] = g
        layer = next_layer

    _orthogonalize(order, dims, gram, E, F, simple)
    Eops = [BlockOp(simple[i], E[i]) for i in range(r)]
    Fops = [BlockOp(-simple[i], F[i]) for i in range(r)]
    return ExplicitModule(R, lam, order, dims, gram, Eops, Fops)


def _orthogonalize(order, dims, gram, E, F, simple) -> None:
    """Gram-Schmidt each weight space in place; the highest vector keeps norm 1."""
    P, Pinv = {}, {}
    for mu in order:
        g = gram[mu]
        n = dims[mu]
        vecs = []
        norms = []
        for k in range(n):
            v = [Fraction(int(i == k)) for i in range(n)]
            for w, nw in zip(vecs, norms):
                c = linalg.dot(v, linalg.matvec(g, w)) / nw
                if c:
                    v = [x - c * y for x, y in zip(v, w)]
            vecs.append(v)
            norms.append(linalg.dot(v, linalg.matvec(g, v)))
        if any(x <= 0 for x in norms):
            raise ArithmeticError(f"form not positive definite at {mu!r}")
        P[mu] = linalg.transpose(vecs)
        Pinv[mu] = linalg.inverse(P[mu])
        gram[mu] = [[norms[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for i, ops in enumerate(E):
        for mu in list(ops):
            ops[mu] = linalg.matmul(Pinv[mu + simple[i]], linalg.matmul(ops[mu], P[mu]))
    for j, ops in enumerate(F):
        for mu in list(ops):
            ops[mu] = linalg.matmul(Pinv[mu - simple[j]], linalg.matmul(ops[mu], P[mu]))


# ---------------------------------------------------------------------------
# module invariants


def commutation_defects(M: ExplicitModule) -> list:
    """Pairs (r, s) of root indices where [E_r, E_s] disagrees with the Chevalley relations."""
    R = M.R
    cb = chevalley_basis(R)
    bad = []
    nr = len(R.roots)
    for r in range(nr):
        for s in range(r + 1, nr):
            a, b = R.roots[r], R.roots[s]
            lhs = commutator(M.op(r), M.op(s), M.dims)
            if a + b == OrthoVec([0] * len(a)):
                # [E_r, E_{-r}] = H_r acts by n_{mu, r}
                ok = all(
                    lhs.block(mu, M.dims) == [[R.pairing(mu, a) if i == j else 0 for j in range(M.dims[mu])]
                                              for i in range(M.dims[mu])]
                    for mu in M.weights)
            elif R.is_root(a + b):
                rhs = M.op(a + b).scaled(cb.N(r, s))
                ok = all(lhs.block(mu, M.dims) == rhs.block(mu, M.dims) for mu in M.weights
                         if mu + lhs.shift in M.dims)
            else:
                ok = all(linalg.is_zero(b_) for b_ in lhs.blocks.values())
            if not ok:
                bad.append((r, s))
    return bad


def adjointness_defects(M: ExplicitModule) -> list:
    """Roots alpha where transpose(E_alpha) G != G F_alpha."""
    R = M.R
    bad = []
    for r in range(len(R.roots)):
        E = M.op(r)
        F = M.op(R.root_index(-R.roots[r]))
        for mu in M.weights:
            tgt = mu + E.shift
            if tgt not in M.dims:
                continue
            lhs = linalg.matmul(linalg.transpose(E.block(mu, M.dims)), M.gram[tgt])
            rhs = linalg.matmul(M.gram[mu], F.block(tgt, M.dims))
            if lhs != rhs:
                bad.append(r)
                break
    return bad


def casimir_blocks(M: ExplicitModule) -> dict:
    """The quadratic Casimir restricted to each weight space.

    Sum over a dual pair of bases: root part (alpha|alpha)/2 (E F + F E) over
    positive roots, Cartan part sum_{ij} (Ginv)_{ij} H_i H_j with
    G_{ij} = (H_i | H_j) for the simple coroots.
    """
    R = M.R
    coroots = [a * (2 / R.inner(a, a)) for a in R.simple_roots]
    G = [[R.inner(x, y) for y in coroots] for x in coroots]
    Ginv = linalg.inverse(G)
    out = {}
    npos = len(R.positive_roots)
    for mu in M.weights:
        n = M.dims[mu]
        h = [R.pairing(mu, a) for a in R.simple_roots]
        cartan = sum((Ginv[i][j] * h[i] * h[j] for i in range(R.rank) for j in range(R.rank)), Fraction(0))
        acc = [[cartan if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        for r in range(npos):
            a = R.roots[r]
            c = R.inner(a, a) / 2
            E, F = M.op(r), M.op(r + npos)
            ef = linalg.matmul(E.block(mu - E.shift, M.dims), F.block(mu, M.dims)) if (mu - E.shift) in M.dims else None
            fe = linalg.matmul(F.block(mu + E.shift, M.dims), E.block(mu, M.dims)) if (mu + E.shift) in M.dims else None
            for term in (ef, fe):
                if term:
                    acc = linalg.madd(acc, term, c)
        out[mu] = acc
    return out


# ---------------------------------------------------------------------------
# K-spaces and the corank formula for fusion rules


@dataclass
class Subspace:
    module: ExplicitModule = field(repr=False)
    weight: Weight
    vectors: list

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.vectors) if self.vectors else 0

    def contains(self, v) -> bool:
        if not any(v):
            return True
        return linalg.rank(self.vectors + [list(v)]) == self.rank


def kspace(M: ExplicitModule, mu: Weight, nu: Weight) -> Subspace:
    """Span of F_alpha^{n_{mu,alpha}+1} u over simple alpha, inside V[nu - mu]."""
    R = M.R
    mu, nu = Weight(mu), Weight(nu)
    target = nu - mu
    vecs = []
    if target in M.dims:
        for i, a in enumerate(R.simple_root_weights):
            n = mu[i] + 1
            src = target + a * n
            for k in range(M.dims.get(src, 0)):
                w, v = src, [Fraction(int(t == k)) for t in range(M.dims[src])]
                for _ in range(n):
                    w, v = M.apply(R.root_index(-R.simple_roots[i]), w, v)
                    if not v:
                        break
                if v and any(v):
                    vecs.append(v)
    return Subspace(M, target, vecs)


def fusion_via_kspace(M: ExplicitModule, mu: Weight, nu: Weight) -> int:
    """dim V[nu - mu] minus the rank of the K-space."""
    target = Weight(nu) - Weight(mu)
    val = M.weight_space_dim(target) - kspace(M, mu, nu).rank
    if val < 0:
        raise ArithmeticError("negative corank")
    return val


# ---------------------------------------------------------------------------
# the 26-dimensional F4 module

RHO3 = OrthoVec(0, 0, 0, 1)
RHO4 = OrthoVec(Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2))
RHO5 = OrthoVec(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2))
ALPHA_B = OrthoVec(1, 0, 0, -1)
BETA_B = OrthoVec(*(Fraction(1, 2),) * 4)


def lambda4_module() -> ExplicitModule:
    R = build("F4")
    return build_module(R, Weight(0, 0, 0, 1))


def _lower(M: ExplicitModule, root: OrthoVec, vec):
    """F_root applied to a (weight, vector) pair."""
    R = M.R
    mu, v = vec
    return M.apply(R.root_index(-root), mu, v)


def _gram2(M, mu, x, y) -> list:
    return [[M.inner(mu, x, x), M.inner(mu, x, y)], [M.inner(mu, y, x), M.inner(mu, y, y)]]


@dataclass
class ZeroWeightReport:
    f3v3: list
    f4v4: list
    f5v5: list
    gram_34: list
    gram_35: list
    det_34: Fraction
    det_35: Fraction
    span_rank: int
    # squared cosine of the angle; the cosine itself is irrational in general
    cos2_34: Fraction
    cos2_35: Fraction


def zero_weight_report(M: ExplicitModule | None = None) -> ZeroWeightReport:
    M = M or lambda4_module()
    R = M.R
    if M.highest_weight != Weight(0, 0, 0, 1) or str(R.lie_type) != "F4":
        raise ValueError("expected the F4 module L(lambda_4)")
    v = M.highest_vector()
    v3 = _lower(M, ALPHA_B, v)
    v4 = _lower(M, BETA_B, v)
    mu5 = R.from_orthogonal(RHO5)
    v5 = (mu5, [Fraction(int(k == 0)) for k in range(M.dims[mu5])])
    assert v3[0] == R.from_orthogonal(RHO3) and v4[0] == R.from_orthogonal(RHO4)
    zero = Weight.zero(4)
    out = []
    for root, vec in ((RHO3, v3), (RHO4, v4), (RHO5, v5)):
        w, x = _lower(M, root, vec)
        if w != zero or not any(x):
            raise ArithmeticError(f"F_root v_root vanishes for root {root!r}")
        out.append(x)
    x3, x4, x5 = out
    g34, g35 = _gram2(M, zero, x3, x4), _gram2(M, zero, x3, x5)
    d34, d35 = linalg.det(g34), linalg.det(g35)
    if not d34 or not d35:
        raise ArithmeticError("zero-weight vectors are dependent")
    return ZeroWeightReport(
        x3, x4, x5, g34, g35, d34, d35,
        linalg.rank([x3, x4, x5]),
        g34[0][1] ** 2 / (g34[0][0] * g34[1][1]),
        g35[0][1] ** 2 / (g35[0][0] * g35[1][1]),
    )


def norm_pairings(M: ExplicitModule | None = None) -> tuple:
    """(|F3 Fa v|^2, |F4 Fb v|^2, |<F3 Fa v | F4 Fb v>|) for the unit highest vector v."""
    M = M or lambda4_module()
    v = M.highest_vector()
    w1, x = _lower(M, RHO3, _lower(M, ALPHA_B, v))
    w2, y = _lower(M, RHO4, _lower(M, BETA_B, v))
    assert w1 == w2
    return M.inner(w1, x, x), M.inner(w2, y, y), abs(M.inner(w1, x, y))


def check_condition_iii(M: ExplicitModule, mu0: Weight, nu0: Weight, alpha, eta: Weight) -> bool:
    """Is there a basis vector u of V[eta] with E_alpha u outside the K-space at nu0 - mu0?"""
    R = M.R
    if not isinstance(alpha, OrthoVec):
        alpha = R.to_orthogonal(Weight(alpha))
    if R.root_index(alpha) >= len(R.positive_roots):
        raise ValueError(f"{alpha!r} is not a positive root")
    eta = Weight(eta)
    K = kspace(M, mu0, nu0)
    if eta + R.from_orthogonal(alpha) != K.weight:
        raise ValueError("eta + alpha must equal nu0 - mu0")
    for k in range(M.dims.get(eta, 0)):
        u = [Fraction(int(t == k)) for t in range(M.dims[eta])]
        _, eu = M.apply(alpha, eta, u)
        if eu and not K.contains(eu):
            return True
    return False


def annihilator(M: ExplicitModule, mu: Weight, x) -> list:
    """Basis of the orthogonal complement of x inside V[mu]."""
    g = M.gram[Weight(mu)]
    return linalg.nullspace([linalg.matvec(g, x)], M.dims[Weight(mu)])


def kspace_matches_klimyk(M: ExplicitModule, mu: Weight, nu: Weight) -> bool:
    from .tensor import hom_dim

    return fusion_via_kspace(M, mu, nu) == hom_dim(M.R, M.highest_weight, mu, nu)


def weight_dims_match(M: ExplicitModule) -> bool:
    return all(multiplicity(M.R, M.highest_weight, mu) == d for mu, d in M.dims.items()) and \
        M.dimension == weyl_dim(M.R, M.highest_weight)
