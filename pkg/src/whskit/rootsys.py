"""Finite root systems from tabulated Cartan matrices.

Roots are stored as coefficient tuples over the simple roots.  The pairing and
reflection conventions live in :mod:`whskit.conventions`: row j of the Cartan
matrix dotted with the coefficient vector gives <alpha, alphacheck_j>.

Positive roots are listed in graded order: by height, and within a height so
that alpha_1 comes before alpha_2 (descending coefficient tuples).  Negative
roots follow in the mirrored order, so index(-alpha) = index(alpha) + n_pos.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidCartanType, InvalidWeights

_POS_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": {6: 36, 7: 63, 8: 120},
    "F": {4: 24},
    "G": {2: 6},
}

_WEYL_ORDERS = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2 ** n * math.factorial(n),
    "C": lambda n: 2 ** n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "E": {6: 51840, 7: 2903040, 8: 696729600},
    "F": {4: 1152},
    "G": {2: 12},
}


def cartan_matrix(family, n):
    """Tabulated Cartan matrix, rows indexed by coroots (see conventions)."""
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(pairs):
        for i, j in pairs:
            A[i][j] = -1
            A[j][i] = -1

    if family == "A":
        if n < 1:
            raise InvalidCartanType("A_n needs n >= 1")
        chain((i, i + 1) for i in range(n - 1))
    elif family in ("B", "C"):
        if n < 2:
            raise InvalidCartanType("%s_n needs n >= 2" % family)
        chain((i, i + 1) for i in range(n - 2))
        if family == "B":
            # alpha_n short: <alpha_{n-1}, alphacheck_n> = -2
            A[n - 1][n - 2] = -2
            A[n - 2][n - 1] = -1
        else:
            # alpha_n long: <alpha_n, alphacheck_{n-1}> = -2
            A[n - 2][n - 1] = -2
            A[n - 1][n - 2] = -1
    elif family == "D":
        if n < 3:
            raise InvalidCartanType("D_n needs n >= 3")
        chain((i, i + 1) for i in range(n - 2))
        chain([(n - 3, n - 1)])
    elif family == "E":
        if n not in (6, 7, 8):
            raise InvalidCartanType("E_n has n in {6,7,8}")
        # Bourbaki: node 2 hangs off node 4; the rest chain 1-3-4-5-...-n
        edges = [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        chain(edges)
    elif family == "F":
        if n != 4:
            raise InvalidCartanType("F_n has n = 4")
        chain([(0, 1), (2, 3)])
        # alpha_3 short relative to alpha_2
        A[2][1] = -2
        A[1][2] = -1
    elif family == "G":
        if n != 2:
            raise InvalidCartanType("G_n has n = 2")
        # alpha_1 short: <alpha_2, alphacheck_1> = -3
        A[0][1] = -3
        A[1][0] = -1
    else:
        raise InvalidCartanType("unknown family %r" % family)
    return tuple(tuple(row) for row in A)


def parse_type(name):
    m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", name.strip())
    if not m:
        raise InvalidCartanType("cannot parse Cartan type %r" % name)
    return m.group(1).upper(), int(m.group(2))


def symmetrizer(cartan):
    """Positive integers d_i with d_i a_ij = d_j a_ji, minimal (gcd 1).

    Found by propagating ratios along the (connected) Cartan graph.
    """
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i == j or cartan[i][j] == 0:
                continue
            val = d[i] * Fraction(cartan[i][j], cartan[j][i])
            if d[j] is None:
                d[j] = val
                todo.append(j)
            elif d[j] != val:
                raise InvalidCartanType("Cartan matrix is not symmetrizable")
    if any(v is None for v in d):
        raise InvalidCartanType("Cartan graph is not connected")
    denom = math.lcm(*(v.denominator for v in d))
    ints = [int(v * denom) for v in d]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)


class RootSystem:
    """All roots of a finite type, with exact pairing and reflection."""

    def __init__(self, type_name):
        family, n = parse_type(type_name)
        self.type_name = "%s%d" % (family, n)
        self.family = family
        self.n = n
        self.cartan = cartan_matrix(family, n)
        self.d = symmetrizer(self.cartan)

        pos = self._close_positive()
        counts = _POS_COUNTS[family]
        expected = counts(n) if callable(counts) else counts[n]
        assert len(pos) == expected, (self.type_name, len(pos), expected)
        # graded order: height, then alpha_1 before alpha_2 within a height
        pos.sort(key=lambda c: (sum(c), tuple(-e for e in c)))
        self.pos_roots = tuple(pos)
        self.n_pos = len(pos)
        self.roots = self.pos_roots + tuple(
            tuple(-e for e in c) for c in self.pos_roots
        )
        self.root_index = {c: i for i, c in enumerate(self.roots)}

    def _close_positive(self):
        n = self.n
        simple = [
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        ]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c in frontier:
                for j in range(n):
                    r = self.reflect(j, c)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return [c for c in seen if all(e >= 0 for e in c)]

    # -- exact linear algebra on root coordinates ---------------------------

    def pairing(self, coeffs, j):
        """<alpha, alphacheck_j> for alpha = sum coeffs_i alpha_i."""
        return sum(self.cartan[j][i] * c for i, c in enumerate(coeffs))

    def reflect(self, j, coeffs):
        """Simple reflection s_j applied to a root coefficient vector."""
        p = self.pairing(coeffs, j)
        return tuple(
            c - p if i == j else c for i, c in enumerate(coeffs)
        )

    def simple_reflection_perm(self, j):
        """s_j as a permutation of all root indices."""
        return tuple(
            self.root_index[self.reflect(j, c)] for c in self.roots
        )

    def height(self, coeffs):
        return sum(coeffs)

    def highest_root(self):
        return self.pos_roots[-1]

    def index(self, coeffs):
        return self.root_index[tuple(coeffs)]

    def weyl_order(self):
        w = _WEYL_ORDERS[self.family]
        return w(self.n) if callable(w) else w[self.n]

    def coroot_pairing(self, coeffs, lam):
        """<lam, alphacheck> for a root alpha = sum c_i alpha_i and a weight
        lam given by its values on the simple coroots.

        alphacheck = sum_i c_i d_i / d_alpha * alphacheck_i with
        d_alpha = (alpha,alpha)/2 expressed through the symmetrizer.
        """
        num = sum(c * d * v for c, d, v in zip(coeffs, self.d, lam))
        # (alpha, alpha)/2 = (1/2) sum_i c_i d_i <alpha, alphacheck_i>
        half_norm = Fraction(
            sum(c * d * self.pairing(coeffs, i) for i, (c, d) in
                enumerate(zip(coeffs, self.d))), 2
        )
        return Fraction(num) / half_norm

    def __repr__(self):
        return "RootSystem(%s)" % self.type_name


@lru_cache(maxsize=None)
def build_root_system(type_name):
    return RootSystem(type_name)


def weyl_dim(rs, lam):
    """Dimension of the irreducible representation with highest weight lam,
    lam given by its (nonnegative integer) values on the simple coroots.

    Product over positive roots of <lam+rho, alphacheck> / <rho, alphacheck>
    with rho = (1,...,1) in the same coordinates; exact, and asserted integral.
    """
    if len(lam) != rs.n:
        raise InvalidWeights("expected %d coordinates" % rs.n)
    if any(int(v) != v or v < 0 for v in lam):
        raise InvalidWeights("highest weight must be nonnegative integers")
    rho = (1,) * rs.n
    shifted = tuple(v + 1 for v in lam)
    dim = Fraction(1)
    for alpha in rs.pos_roots:
        dim *= rs.coroot_pairing(alpha, shifted) / rs.coroot_pairing(alpha, rho)
    assert dim.denominator == 1, "Weyl dimension came out non-integral"
    return int(dim)
