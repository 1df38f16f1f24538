"""Root systems of the simple Lie algebras in exact arithmetic.

The invariant form is normalized so that long roots have squared length 2.
Weights are carried in two coordinate systems:

* :class:`Weight` -- integer Dynkin labels, ``w[i] = n_{w, alpha_i}``;
* :class:`OrthoVec` -- rational coordinates in a fixed Euclidean realization.

For F4 the Euclidean realization is::

    rho1 = [0,1,-1,0]  rho2 = [0,0,1,-1]  rho3 = [0,0,0,1]  rho4 = 1/2[1,-1,-1,-1]
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import NamedTuple, Union

from . import linalg


class LieType(NamedTuple):
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse Lie type {text!r}")
        t = cls(text[0], int(text[1:]))
        t.validate()
        return t

    def validate(self) -> None:
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(f)
        if not ok:
            raise ValueError(f"unsupported Lie type {f}{n}")


class Weight(tuple):
    """Dynkin-label coordinates; arithmetic is componentwise."""

    def __new__(cls, *coords):
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return super().__new__(cls, (int(c) for c in coords))

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k: int):
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "(" + ",".join(str(a) for a in self) + ")"

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls([0] * n)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls(int(t) for t in text.replace(" ", "").strip("()").split(","))


class OrthoVec(tuple):
    """Rational coordinates in the orthogonal basis."""

    def __new__(cls, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        return super().__new__(cls, (Fraction(c) for c in coords))

    def __add__(self, other):
        return OrthoVec(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return OrthoVec(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return OrthoVec(-a for a in self)

    def __mul__(self, k):
        return OrthoVec(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        d = lcm(*(c.denominator for c in self)) if self else 1
        body = "[" + ",".join(str(int(c * d)) for c in self) + "]"
        return body if d == 1 else f"1/{d}{body}"

    @classmethod
    def parse(cls, text: str) -> "OrthoVec":
        text = text.replace(" ", "")
        scale = Fraction(1)
        if not text.startswith("["):
            head, text = text.split("[", 1)
            scale = Fraction(head)
            text = "[" + text
        return cls(scale * Fraction(t) for t in text.strip("[]").split(","))


Vec = Union[Weight, OrthoVec]


def _basis(n: int, i: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _simple_roots(t: LieType) -> list[list[Fraction]]:
    f, n = t.family, t.rank
    H = Fraction(1, 2)
    if f == "A":
        return [[Fraction(int(j == i) - int(j == i + 1)) for j in range(n + 1)] for i in range(n)]
    chain = [[Fraction(int(j == i) - int(j == i + 1)) for j in range(n)] for i in range(n - 1)]
    if f == "B":
        return chain + [_basis(n, n - 1)]
    if f == "C":
        return chain + [_basis(n, n - 1, 2)]
    if f == "D":
        last = [Fraction(0)] * n
        last[n - 2] = last[n - 1] = Fraction(1)
        return chain + [last]
    if f == "E":
        e8 = [[H, -H, -H, -H, -H, -H, -H, H]]
        e8.append([Fraction(1), Fraction(1)] + [Fraction(0)] * 6)
        for i in range(6):
            v = [Fraction(0)] * 8
            v[i], v[i + 1] = Fraction(-1), Fraction(1)
            e8.append(v)
        return e8[:n]
    if f == "F":
        return [
            [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)],
            [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
            [H, -H, -H, -H],
        ]
    if f == "G":
        return [
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(-2), Fraction(1), Fraction(1)],
        ]
    raise ValueError(f"unsupported family {f}")


def _root_order_key(c: tuple[int, ...]):
    # height first, then simple roots come out in index order
    return (sum(c), tuple(-x for x in c))


@dataclass(frozen=True, eq=False)
class RootSystem:
    lie_type: LieType
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[OrthoVec, ...]
    positive_roots_simple: tuple[tuple[int, ...], ...]
    positive_roots: tuple[OrthoVec, ...]
    form_matrix: tuple[tuple[Fraction, ...], ...]
    fundamental_weights: tuple[OrthoVec, ...]
    weyl_vector: OrthoVec
    highest_root: OrthoVec
    dual_coxeter: int
    dimension: int
    scale: Fraction
    _root_index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def __hash__(self):
        return hash(self.lie_type)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.lie_type == self.lie_type

    # -- coordinates -------------------------------------------------

    def to_orthogonal(self, w: Weight) -> OrthoVec:
        if len(w) != self.rank:
            raise ValueError("weight length does not match rank")
        dim = len(self.simple_roots[0])
        out = [Fraction(0)] * dim
        for c, fw in zip(w, self.fundamental_weights):
            if c:
                out = [a + c * b for a, b in zip(out, fw)]
        return OrthoVec(out)

    def from_orthogonal(self, v: OrthoVec) -> Weight:
        labels = []
        for a in self.simple_roots:
            n = 2 * self._dot(v, a) / self._dot(a, a)
            if n.denominator != 1:
                raise ValueError(f"{v!r} is not in the weight lattice")
            labels.append(int(n))
        w = Weight(labels)
        if self.to_orthogonal(w) != OrthoVec(v):
            raise ValueError(f"{v!r} is not in the span of the roots")
        return w

    def _dot(self, x, y) -> Fraction:
        if len(x) != len(y):
            raise ValueError("dimension mismatch")
        return self.scale * sum((a * b for a, b in zip(x, y)), Fraction(0))

    def _as_ortho(self, x: Vec) -> OrthoVec:
        return x if isinstance(x, OrthoVec) else self.to_orthogonal(Weight(x))

    def inner(self, x: Vec, y: Vec) -> Fraction:
        """The normalized invariant form, for weights in either coordinate system."""
        if isinstance(x, OrthoVec) and isinstance(y, OrthoVec):
            return self._dot(x, y)
        if not isinstance(x, OrthoVec) and not isinstance(y, OrthoVec):
            if len(x) != self.rank or len(y) != self.rank:
                raise ValueError("dimension mismatch")
            F = self.form_matrix
            return sum((x[i] * F[i][j] * y[j] for i in range(self.rank) if x[i]
                        for j in range(self.rank) if y[j]), Fraction(0))
        return self._dot(self._as_ortho(x), self._as_ortho(y))

    # -- roots --------------------------------------------------------

    @cached_property
    def roots(self) -> tuple[OrthoVec, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    @cached_property
    def positive_root_weights(self) -> tuple[Weight, ...]:
        return tuple(self.from_orthogonal(r) for r in self.positive_roots)

    @cached_property
    def simple_root_weights(self) -> tuple[Weight, ...]:
        A = self.cartan_matrix
        return tuple(Weight(A[i][j] for i in range(self.rank)) for j in range(self.rank))

    @cached_property
    def highest_root_weight(self) -> Weight:
        return self.from_orthogonal(self.highest_root)

    @cached_property
    def weyl_vector_weight(self) -> Weight:
        return Weight([1] * self.rank)

    @cached_property
    def comarks(self) -> tuple[Fraction, ...]:
        # level(w) = sum_i w_i * (lambda_i | theta)
        return tuple(self._dot(fw, self.highest_root) for fw in self.fundamental_weights)

    @cached_property
    def inverse_cartan(self) -> linalg.Matrix:
        return linalg.inverse([list(map(Fraction, row)) for row in self.cartan_matrix])

    def root_index(self, alpha: Vec) -> int:
        """Index into :attr:`roots`; ValueError if ``alpha`` is not a root."""
        try:
            return self._root_index[self._as_ortho(alpha)]
        except (KeyError, ValueError):
            raise ValueError(f"{alpha!r} is not a root of {self.lie_type}") from None

    def is_root(self, alpha: Vec) -> bool:
        try:
            self.root_index(alpha)
        except ValueError:
            return False
        return True

    def is_long(self, alpha: Vec) -> bool:
        return self.inner(alpha, alpha) == 2

    def pairing(self, x: Vec, alpha: Vec) -> Fraction:
        """n_{x,alpha} = 2(x|alpha)/(alpha|alpha)."""
        self.root_index(alpha)
        return 2 * self.inner(x, alpha) / self.inner(alpha, alpha)

    def reflect(self, alpha: Vec, x: Vec) -> Vec:
        """The Weyl reflection x - n_{x,alpha} alpha, returned in the coordinates of ``x``."""
        n = self.pairing(x, alpha)
        if isinstance(x, OrthoVec):
            return x - self._as_ortho(alpha) * n
        a = alpha if not isinstance(alpha, OrthoVec) else self.from_orthogonal(alpha)
        return Weight(x) - Weight(a) * int(n)

    def simple_reflection(self, i: int, w: Weight) -> Weight:
        return w - self.simple_root_weights[i] * w[i]

    def to_dominant(self, w: Weight) -> tuple[Weight, int]:
        """Dominant representative of the Weyl orbit of ``w`` and det of the element used."""
        w = Weight(w)
        sign = 1
        while True:
            i = next((k for k, c in enumerate(w) if c < 0), None)
            if i is None:
                return w, sign
            w = self.simple_reflection(i, w)
            sign = -sign

    def root_coordinates(self, w: Weight) -> tuple[Fraction, ...]:
        """Coefficients of ``w`` in the basis of simple roots."""
        inv = self.inverse_cartan
        return tuple(sum((inv[i][j] * w[j] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def height(self, w: Weight) -> Fraction:
        return sum(self.root_coordinates(w), Fraction(0))

    # -- levels -------------------------------------------------------

    def level(self, w: Vec) -> Fraction:
        """(w | theta)."""
        if isinstance(w, OrthoVec):
            return self._dot(w, self.highest_root)
        return sum((c * m for c, m in zip(w, self.comarks)), Fraction(0))

    @staticmethod
    def is_dominant(w: Weight) -> bool:
        return all(c >= 0 for c in w)


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                # alpha_i-string through beta: p - q = <beta, alpha_i^vee>
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                while True:
                    down = list(beta)
                    down[i] -= p + 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=_root_order_key)


def build(t: LieType | str) -> RootSystem:
    """The root system of the given type; one shared instance per type."""
    if isinstance(t, str):
        t = LieType.parse(t)
    t = LieType(*t)
    t.validate()
    return _build(t)


@lru_cache(maxsize=None)
def _build(t: LieType) -> RootSystem:
    raw = _simple_roots(t)
    n = t.rank

    def edot(x, y):
        return sum((a * b for a, b in zip(x, y)), Fraction(0))

    # C[i][j] = n_{alpha_j, alpha_i}
    cartan = [[int(2 * edot(raw[j], raw[i]) / edot(raw[i], raw[i])) for j in range(n)] for i in range(n)]
    pos_simple = _positive_roots(cartan)
    pos_raw = [[sum((c * r[k] for c, r in zip(coeffs, raw)), Fraction(0)) for k in range(len(raw[0]))]
               for coeffs in pos_simple]
    theta = pos_raw[-1]
    scale = 2 / edot(theta, theta)

    # fundamental weights lambda_i = sum_k M[i][k] alpha_k with (lambda_i | alpha_j^vee) = delta_ij
    B = [[Fraction(2) * edot(raw[k], raw[j]) / edot(raw[j], raw[j]) for j in range(n)] for k in range(n)]
    M = linalg.inverse(B)
    fund = [[sum((M[i][k] * raw[k][c] for k in range(n)), Fraction(0)) for c in range(len(raw[0]))]
            for i in range(n)]
    form = tuple(tuple(scale * edot(fund[i], fund[j]) for j in range(n)) for i in range(n))
    rho = [sum((fw[c] for fw in fund), Fraction(0)) for c in range(len(raw[0]))]
    hv = 1 + scale * edot(rho, theta)
    if hv.denominator != 1:
        raise AssertionError("dual Coxeter number not integral")

    positive = tuple(OrthoVec(r) for r in pos_raw)
    index = {r: i for i, r in enumerate(positive)}
    index.update({-r: i + len(positive) for i, r in enumerate(positive)})
    return RootSystem(
        lie_type=t,
        cartan_matrix=tuple(tuple(row) for row in cartan),
        simple_roots=tuple(OrthoVec(r) for r in raw),
        positive_roots_simple=tuple(pos_simple),
        positive_roots=positive,
        form_matrix=form,
        fundamental_weights=tuple(OrthoVec(f) for f in fund),
        weyl_vector=OrthoVec(rho),
        highest_root=OrthoVec(theta),
        dual_coxeter=int(hv),
        dimension=n + 2 * len(pos_simple),
        scale=scale,
        _root_index=index,
    )


def fundamental_weight(R: RootSystem, i: int) -> Weight:
    """The i-th fundamental weight (1-based, matching lambda_1 ... lambda_r)."""
    return Weight(int(k == i - 1) for k in range(R.rank))


def weyl_group_order(R: RootSystem) -> int:
    """|W|, as the size of the orbit of rho (whose stabilizer is trivial). Fine up to rank 6 or so."""
    from .weights import weyl_orbit

    return len(weyl_orbit(R, R.weyl_vector_weight))
