"""Brute-force references, deliberately sharing no code paths with the library
beyond the root data itself."""
from collections import Counter
from functools import lru_cache
from itertools import product

from liefusion.rootsystem import Weight


def weyl_group(R):
    """All Weyl group elements as integer matrices acting on Dynkin labels (rows = images of omega_i)."""
    n = R.rank
    C = R.cartan_matrix

    def refl(i):
        # s_i(omega_j) = omega_j - delta_ij alpha_i; alpha_i in Dynkin coords is column i of C
        return tuple(tuple(int(j == k) - (int(i == j) * C[k][i]) for k in range(n)) for j in range(n))

    def mul(a, b):  # apply b then a
        return tuple(tuple(sum(b[j][m] * a[m][k] for m in range(n)) for k in range(n)) for j in range(n))

    ident = tuple(tuple(int(j == k) for k in range(n)) for j in range(n))
    gens = [refl(i) for i in range(n)]
    seen = {ident: 1}
    todo = [ident]
    while todo:
        g = todo.pop()
        for s in gens:
            h = mul(s, g)
            if h not in seen:
                seen[h] = -seen[g]
                todo.append(h)
    return seen  # element -> sign


def act(g, w):
    n = len(w)
    return Weight(sum(w[j] * g[j][k] for j in range(n)) for k in range(n))


def simple_root_coords(R, w):
    """Coordinates of a root-lattice element in the simple root basis (None if not integral)."""
    from fractions import Fraction
    from liefusion import linalg

    C = [[Fraction(x) for x in row] for row in R.cartan_matrix]
    sol = linalg.solve(C, [Fraction(x) for x in w])
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def kostant_multiplicity(R, lam, mu):
    """Kostant's formula: sum over W of sgn(w) P(w(lam+rho) - (mu+rho))."""
    pos = [simple_root_coords(R, R.from_orthogonal(a)) for a in R.positive_roots]

    @lru_cache(maxsize=None)
    def P(gamma, k):
        if all(x == 0 for x in gamma):
            return 1
        if k == len(pos) or any(x < 0 for x in gamma):
            return 0
        total, g = 0, gamma
        while all(x >= 0 for x in g):
            total += P(g, k + 1)
            g = tuple(x - y for x, y in zip(g, pos[k]))
        return total

    rho = Weight([1] * R.rank)
    out = 0
    for g, sign in weyl_group(R).items():
        diff = act(g, Weight(lam) + rho) - (Weight(mu) + rho)
        c = simple_root_coords(R, diff)
        if c is not None:
            out += sign * P(c, 0)
    return out


@lru_cache(maxsize=None)
def character(R, lam):
    """Full weight multiset of L(lam) via Kostant."""
    from liefusion.weights import weyl_orbit

    out = Counter()
    # candidate dominant weights: lam minus nonnegative root combinations, small boxes only
    bound = max(1, sum(lam)) + 1
    for c in product(range(bound + 1), repeat=R.rank):
        if R.is_dominant(Weight(c)):
            m = kostant_multiplicity(R, lam, Weight(c))
            if m:
                for w in weyl_orbit(R, Weight(c)):
                    out[w] = m
    return out


def greedy_decompose(R, lam, mu, char=None):
    """Decompose ch(lam) ch(mu) by repeatedly stripping the character of its highest term."""
    from liefusion.weights import weight_system

    char = char or (lambda w: Counter(weight_system(R, w).weights))
    a, b = char(lam), char(mu)
    prod = Counter()
    for x, m in a.items():
        for y, n in b.items():
            prod[x + y] += m * n
    # (w|rho) up to a positive factor, as an integer linear form
    from math import lcm
    f = [R.inner(Weight(int(i == j) for j in range(R.rank)), Weight([1] * R.rank)) for i in range(R.rank)]
    d = lcm(*(x.denominator for x in f))
    f = [int(x * d) for x in f]
    out = {}
    while prod:
        top = max(prod, key=lambda w: (sum(a * b for a, b in zip(f, w)), tuple(w)))
        m = prod[top]
        assert m > 0 and R.is_dominant(top)
        out[top] = m
        for w, k in char(top).items():
            prod[w] -= m * k
            if prod[w] == 0:
                del prod[w]
    return out


def sl2_fusion(k, a, b, c):
    """Closed form for A1 at level k, labels are Dynkin labels."""
    return int(abs(a - b) <= c <= min(a + b, 2 * k - a - b) and (a + b + c) % 2 == 0)
