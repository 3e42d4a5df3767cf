"""Exchange matrices, seeds, mutation, finite type, denominator vectors.

Matrices are rectangular: N rows (one per variable, frozen rows last), n
columns (one per mutable vertex).  b[i][k] > 0 means arrows i -> k, and the
exchange at k swaps the two monomials

    M+ = prod_{b[i][k] > 0} x_i^{b[i][k]},   M- = prod_{b[i][k] < 0} x_i^{-b[i][k]}

via x_k' = (M+ + M-) / x_k.  All variables live in the exact rational function
field from symlaurent, so the Laurent phenomenon is checked, not assumed.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

from .conventions import (
    FINITE_TYPE_DEPTH_CAP,
    FINITE_TYPE_NODE_CAP,
    SEED_ENUM_CAP,
)
from .errors import (
    CapExceeded,
    DimensionMismatch,
    InvalidCartanMatrix,
    InvalidExchangeMatrix,
    NotBipartite,
)
from .symlaurent import MultiPoly, MultiRational
from .zlattice import RationalMatrix


def _as_rows(b):
    rows = tuple(tuple(int(v) for v in row) for row in b)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InvalidExchangeMatrix("ragged exchange matrix")
    return rows


def mutate_matrix(b, k):
    """Matrix mutation at column/vertex k on plain row tuples.

    b may be rectangular (N x n with n <= N); k indexes a mutable vertex.
    """
    rows = _as_rows(b)
    N = len(rows)
    n = len(rows[0]) if rows else 0
    if not 0 <= k < n:
        raise InvalidExchangeMatrix("mutation vertex %d out of range" % k)
    out = []
    for i in range(N):
        new_row = []
        for j in range(n):
            if i == k or j == k:
                new_row.append(-rows[i][j])
            else:
                bik, bkj = rows[i][k], rows[k][j]
                new_row.append(
                    rows[i][j]
                    + (bik * bkj if bik > 0 and bkj > 0 else 0)
                    - (bik * bkj if bik < 0 and bkj < 0 else 0)
                )
        out.append(tuple(new_row))
    return tuple(out)


def principal_part(b):
    rows = _as_rows(b)
    n = len(rows[0]) if rows else 0
    if len(rows) < n:
        raise InvalidExchangeMatrix("fewer rows than mutable columns")
    return tuple(r[:n] for r in rows[:n])


def skew_symmetrizer(b):
    """Positive integers d with d_i b_ij = -d_j b_ji on the principal part,
    or None if no such exist.  Propagated along the nonzero pattern; vertices
    not connected to anything get d = 1.
    """
    p = principal_part(b)
    n = len(p)
    for i in range(n):
        if p[i][i] != 0:
            return None
        for j in range(n):
            if (p[i][j] == 0) != (p[j][i] == 0):
                return None
            if p[i][j] * p[j][i] > 0:
                return None
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if p[i][j] == 0 or i == j:
                    continue
                val = d[i] * Fraction(abs(p[i][j]), abs(p[j][i]))
                if d[j] is None:
                    d[j] = val
                    queue.append(j)
                elif d[j] != val:
                    return None
    from math import gcd, lcm

    denom = lcm(*(v.denominator for v in d))
    ints = [int(v * denom) for v in d]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def is_skew_symmetrizable(b):
    return skew_symmetrizer(b) is not None


def cartan_companion(b):
    """2 on the diagonal, -|b_ij| off it, over the principal part."""
    p = principal_part(b)
    n = len(p)
    return tuple(
        tuple(2 if i == j else -abs(p[i][j]) for j in range(n))
        for i in range(n)
    )


def bipartite_exchange(cartan):
    """Bipartite orientation of a (generalized) Cartan matrix.

    Vertices at even distance from the lowest index in the Cartan graph form
    the source class I+: b_ij = a_ij for i in I+, else -a_ij (off-diagonal).
    Odd cycles have no 2-coloring and raise NotBipartite.
    """
    A = _as_rows(cartan)
    n = len(A)
    if any(len(r) != n for r in A):
        raise InvalidCartanMatrix("Cartan matrix must be square")
    for i in range(n):
        if A[i][i] != 2:
            raise InvalidCartanMatrix("Cartan diagonal must be 2")
        for j in range(n):
            if i != j and A[i][j] > 0:
                raise InvalidCartanMatrix("off-diagonal entries must be <= 0")
            if i != j and (A[i][j] == 0) != (A[j][i] == 0):
                raise InvalidCartanMatrix("zero pattern must be symmetric")
    color = [None] * n
    for start in range(n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i == j or A[i][j] == 0:
                    continue
                if color[j] is None:
                    color[j] = 1 - color[i]
                    queue.append(j)
                elif color[j] == color[i]:
                    raise NotBipartite("Cartan graph has an odd cycle")
    return tuple(
        tuple(
            0 if i == j else (A[i][j] if color[i] == 0 else -A[i][j])
            for j in range(n)
        )
        for i in range(n)
    )


def _two_finite_violation(p):
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(p[i][j] * p[j][i]) >= 4:
                return True
    return False


def _canon_matrix(p):
    n = len(p)
    if n > 6:
        # relabeling orbit too costly; raw matrices still give a sound search
        return p
    best = None
    for sigma in itertools.permutations(range(n)):
        cand = tuple(
            tuple(p[sigma[i]][sigma[j]] for j in range(n)) for i in range(n)
        )
        if best is None or cand < best:
            best = cand
    return best


def is_finite_type(b, depth_cap=FINITE_TYPE_DEPTH_CAP,
                   node_cap=FINITE_TYPE_NODE_CAP):
    """Mutation-finiteness verdict: 'finite', 'infinite', or 'inconclusive'.

    Searches the mutation class modulo simultaneous relabeling; any matrix
    with |b_ij * b_ji| >= 4 certifies infinite type.  A closed class within
    the caps certifies finite type; running into either cap is inconclusive.
    """
    p = principal_part(b)
    if not is_skew_symmetrizable(p):
        raise InvalidExchangeMatrix("principal part is not skew-symmetrizable")
    if _two_finite_violation(p):
        return "infinite"
    n = len(p)
    seen = {_canon_matrix(p)}
    frontier = [p]
    depth = 0
    while frontier:
        if depth >= depth_cap:
            return "inconclusive"
        nxt = []
        for m in frontier:
            for k in range(n):
                m2 = mutate_matrix(m, k)
                if _two_finite_violation(m2):
                    return "infinite"
                c = _canon_matrix(m2)
                if c not in seen:
                    seen.add(c)
                    if len(seen) > node_cap:
                        return "inconclusive"
                    nxt.append(m2)
        frontier = nxt
        depth += 1
    return "finite"


class Seed:
    """Exchange matrix plus the current cluster variables (frozen ones last)."""

    __slots__ = ("b", "variables", "n")

    def __init__(self, b, variables):
        self.b = _as_rows(b)
        N = len(self.b)
        self.n = len(self.b[0]) if self.b else 0
        if self.n > N:
            raise InvalidExchangeMatrix("more mutable columns than rows")
        if skew_symmetrizer(self.b) is None:
            raise InvalidExchangeMatrix(
                "principal part is not skew-symmetrizable"
            )
        variables = tuple(variables)
        if len(variables) != N:
            raise DimensionMismatch("need one variable per matrix row")
        if any(v.arity != N for v in variables):
            raise DimensionMismatch("variable arity must equal row count")
        self.variables = variables

    @classmethod
    def initial(cls, b):
        rows = _as_rows(b)
        N = len(rows)
        return cls(rows, tuple(MultiRational.gen(N, i) for i in range(N)))

    def mutate(self, k):
        if not 0 <= k < self.n:
            raise InvalidExchangeMatrix("mutation vertex %d out of range" % k)
        N = len(self.b)
        plus = MultiRational.one(N)
        minus = MultiRational.one(N)
        for i in range(N):
            e = self.b[i][k]
            if e > 0:
                plus = plus * self.variables[i] ** e
            elif e < 0:
                minus = minus * self.variables[i] ** (-e)
        new_var = (plus + minus) / self.variables[k]
        variables = tuple(
            new_var if i == k else v for i, v in enumerate(self.variables)
        )
        return Seed(mutate_matrix(self.b, k), variables)

    def mutate_seq(self, seq):
        s = self
        for k in seq:
            s = s.mutate(k)
        return s

    def cluster_key(self):
        """Unordered cluster fingerprint: sorted rendered mutable variables."""
        return tuple(sorted(v.render() for v in self.variables[: self.n]))

    def render_variables(self, names=None):
        return [v.render(names) for v in self.variables]

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        return self.b == other.b and self.variables == other.variables

    def __hash__(self):
        return hash((self.b, self.variables))


def standard_seed(type_name):
    """Initial seed of the bipartite exchange matrix of a Cartan type."""
    from .rootsys import build_root_system

    rs = build_root_system(type_name)
    return Seed.initial(bipartite_exchange(rs.cartan))


class MutationGraph:
    """Exchange graph computed by breadth-first seed mutation.

    Nodes are unordered clusters (keys from Seed.cluster_key); one witness
    seed is kept per node.  Edges carry no vertex labels: the same unordered
    edge can be reached by different mutation directions.
    """

    def __init__(self, nodes, edges, initial_key, variables):
        self.nodes = nodes
        self.edges = edges
        self.initial_key = initial_key
        self.variables = variables

    @property
    def seed_count(self):
        return len(self.nodes)

    @property
    def variable_count(self):
        return len(self.variables)


def enumerate_seeds(seed, cap=SEED_ENUM_CAP):
    """All clusters reachable from a seed, or CapExceeded past the node cap."""
    start = seed.cluster_key()
    nodes = {start: seed}
    edges = set()
    variables = set(v.render() for v in seed.variables[: seed.n])
    frontier = [seed]
    while frontier:
        nxt = []
        for s in frontier:
            key = s.cluster_key()
            for k in range(s.n):
                t = s.mutate(k)
                tkey = t.cluster_key()
                edges.add(frozenset((key, tkey)))
                if tkey not in nodes:
                    if len(nodes) >= cap:
                        raise CapExceeded(
                            "more than %d clusters; giving up" % cap
                        )
                    nodes[tkey] = t
                    variables.update(
                        v.render() for v in t.variables[: t.n]
                    )
                    nxt.append(t)
        frontier = nxt
    return MutationGraph(nodes, edges, start, sorted(variables))


def denominator_vector(var, n):
    """Negated minimal exponents of a cluster variable in the first n
    (initial, mutable) variables: d(x_i) = -e_i, and P(x)/x^d gives d >= 0
    componentwise for non-initial variables."""
    lau = var.as_laurent()
    if lau is None:
        raise InvalidExchangeMatrix("variable is not Laurent in the cluster")
    mins = lau.min_exponents()[:n]
    return tuple(-e for e in mins)


def root_label(dvec):
    """Interpret a denominator vector as an almost-positive root label.

    Initial variables carry -e_i (a single -1); non-initial ones carry a
    nonnegative, nonzero vector.  Mixed signs are rejected.
    """
    neg = [i for i, v in enumerate(dvec) if v < 0]
    if neg:
        if len(neg) == 1 and dvec[neg[0]] == -1 and all(
            v == 0 for i, v in enumerate(dvec) if i != neg[0]
        ):
            return ("negative_simple", neg[0])
        raise InvalidExchangeMatrix("mixed-sign denominator vector %r" % (dvec,))
    if all(v == 0 for v in dvec):
        raise InvalidExchangeMatrix("zero denominator vector")
    return ("positive", tuple(dvec))


def cluster_basis_check(graph, n):
    """Each non-initial cluster's denominator vectors form a Z-basis:
    the n x n matrix of d-vectors must have determinant +-1."""
    initial = graph.initial_key
    for key, seed in graph.nodes.items():
        if key == initial:
            continue
        rows = [
            denominator_vector(v, n) for v in seed.variables[: seed.n]
        ]
        m = RationalMatrix(rows)
        if abs(m.det()) != 1:
            return False
    return True


def plucker_gr2(n, weights=None):
    """Exchange-style three-term relations among 2x2 minors z_ij of a 2 x n
    matrix of symbols, checked exactly, plus weight homogeneity.

    Returns a dict with the relation count, whether every relation vanished
    after substitution, and (when weights are given, one per column) whether
    both sides of every relation are homogeneous of the same weight under
    wt(z_ij) = w_i + w_j.
    """
    if n < 4:
        raise DimensionMismatch("need at least 4 columns")
    arity = 2 * n  # x_1..x_n, y_1..y_n
    xs = [MultiPoly.gen(arity, i) for i in range(n)]
    ys = [MultiPoly.gen(arity, n + i) for i in range(n)]

    def minor(i, j):
        return xs[i] * ys[j] - xs[j] * ys[i]

    pairs = list(itertools.combinations(range(n), 2))
    relations = []
    for i, j, k, l in itertools.combinations(range(n), 4):
        lhs = minor(i, k) * minor(j, l)
        rhs = minor(i, j) * minor(k, l) + minor(i, l) * minor(j, k)
        relations.append(((i, j, k, l), lhs - rhs))
    all_vanish = all(r.is_zero() for _, r in relations)

    homogeneous = None
    if weights is not None:
        weights = [int(w) for w in weights]
        if len(weights) != n:
            raise DimensionMismatch("need one weight per column")
        # formal z-variables: one per pair, weight w_i + w_j
        zar = len(pairs)
        zw = [weights[i] + weights[j] for i, j in pairs]
        zvar = {p: MultiPoly.gen(zar, t) for t, p in enumerate(pairs)}
        from .symlaurent import weight_of

        homogeneous = True
        for (i, j, k, l), _ in relations:
            lhs = zvar[(i, k)] * zvar[(j, l)]
            rhs = zvar[(i, j)] * zvar[(k, l)] + zvar[(i, l)] * zvar[(j, k)]
            wl = weight_of(lhs, zw)
            wr = weight_of(rhs, zw)
            if wl is None or wr is None or wl != wr:
                homogeneous = False
                break

    return {
        "relations": len(relations),
        "all_vanish": all_vanish,
        "homogeneous": homogeneous,
    }


def generalized_minor(matrix_rows, u_perm, v_perm, i):
    """det of the submatrix with rows u({1..i}) and columns v({1..i}).

    ``matrix_rows`` is a square matrix of MultiPoly/MultiRational/ints;
    u_perm and v_perm are 0-based permutation tuples.  The determinant is
    expanded by Leibniz over the i x i submatrix (i stays small here).
    """
    m = len(matrix_rows)
    if not 1 <= i <= m:
        raise DimensionMismatch("window size out of range")
    rows = sorted(u_perm[t] for t in range(i))
    cols = sorted(v_perm[t] for t in range(i))
    total = None
    for sigma in itertools.permutations(range(i)):
        sign = _perm_sign(sigma)
        term = None
        for r in range(i):
            entry = matrix_rows[rows[r]][cols[sigma[r]]]
            term = entry if term is None else term * entry
        term = term * sign if sign < 0 else term
        total = term if total is None else total + term
    return total


def _perm_sign(sigma):
    sign = 1
    seen = [False] * len(sigma)
    for s in range(len(sigma)):
        if seen[s]:
            continue
        length = 0
        t = s
        while not seen[t]:
            seen[t] = True
            t = sigma[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
