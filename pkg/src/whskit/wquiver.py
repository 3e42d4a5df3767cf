"""Weighted quivers: mutation of (matrix, vertex weights), mutation-periodic
weight search, super seeds over dual numbers, and weighted Dynkin clusters.

The weight rule rides along matrix mutation but is not an involution:

    mu_k:  w_i += [b_ik]_+ * w_k  (i != k, using the matrix before mutation),
           w_k  = -w_k.

Each step is linear in w, so a mutation sequence has an integer transfer
matrix; periodic-weight search uses it and then enumerates a box exhaustively.

Periodicity convention: a sequence mu_p ... mu_1 with relabeling permutation t
is periodic when mutated[t(i)][t(j)] == b[i][j], and a weight vector is
periodic when mutated_w[t(i)] == w[i].
"""

from __future__ import annotations

import itertools

from .cluster import (
    bipartite_exchange,
    mutate_matrix,
    skew_symmetrizer,
)
from .conventions import PERIODIC_WEIGHT_BOX
from .errors import (
    DimensionMismatch,
    FrozenVertex,
    InvalidExchangeMatrix,
    InvalidWeights,
    QuiverNotPeriodic,
    TooManyColumns,
)
from .symlaurent import DualRational, weight_of, MultiPoly


class WeightedQuiver:
    """Square skew-symmetrizable matrix + integer vertex weights + frozen set.

    Arrows between two frozen vertices are meaningless and kept at zero
    (mutation can recreate them through paths; they are re-zeroed).
    """

    __slots__ = ("b", "w", "frozen", "n")

    def __init__(self, b, w, frozen=()):
        b = tuple(tuple(int(v) for v in row) for row in b)
        n = len(b)
        if any(len(r) != n for r in b):
            raise InvalidExchangeMatrix("quiver matrix must be square")
        frozen = frozenset(int(f) for f in frozen)
        if any(f < 0 or f >= n for f in frozen):
            raise InvalidExchangeMatrix("frozen vertex out of range")
        b = tuple(
            tuple(
                0 if i in frozen and j in frozen else b[i][j]
                for j in range(n)
            )
            for i in range(n)
        )
        if skew_symmetrizer(b) is None:
            raise InvalidExchangeMatrix("matrix is not skew-symmetrizable")
        w = tuple(int(v) for v in w)
        if len(w) != n:
            raise DimensionMismatch("need one weight per vertex")
        self.b = b
        self.w = w
        self.frozen = frozen
        self.n = n

    @property
    def is_skew_symmetric(self):
        return all(
            self.b[i][j] == -self.b[j][i]
            for i in range(self.n)
            for j in range(self.n)
        )

    def mutable(self):
        return [k for k in range(self.n) if k not in self.frozen]

    def mutate(self, k):
        if k in self.frozen:
            raise FrozenVertex("vertex %d is frozen" % k)
        if not 0 <= k < self.n:
            raise InvalidExchangeMatrix("vertex %d out of range" % k)
        w = list(self.w)
        for i in range(self.n):
            if i != k and self.b[i][k] > 0:
                w[i] += self.b[i][k] * self.w[k]
        w[k] = -self.w[k]
        b = mutate_matrix(self.b, k)
        return WeightedQuiver(b, w, self.frozen)

    def mutate_seq(self, seq):
        q = self
        for k in seq:
            q = q.mutate(k)
        return q

    def to_json(self):
        return {
            "b": [list(r) for r in self.b],
            "w": list(self.w),
            "frozen": sorted(self.frozen),
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["b"], data["w"], data.get("frozen", ()))

    def __eq__(self, other):
        if not isinstance(other, WeightedQuiver):
            return NotImplemented
        return (
            self.b == other.b
            and self.w == other.w
            and self.frozen == other.frozen
        )

    def __hash__(self):
        return hash((self.b, self.w, self.frozen))

    def __repr__(self):
        return "WeightedQuiver(b=%r, w=%r, frozen=%r)" % (
            self.b,
            self.w,
            sorted(self.frozen),
        )


def weight_step_matrix(b, k):
    """The linear map one weight mutation applies, as integer rows."""
    n = len(b)
    rows = []
    for i in range(n):
        row = [0] * n
        if i == k:
            row[k] = -1
        else:
            row[i] = 1
            if b[i][k] > 0:
                row[k] = b[i][k]
        rows.append(tuple(row))
    return tuple(rows)


def weight_transfer(b, seq):
    """(final matrix, transfer L) for a mutation sequence: w_out = L @ w_in."""
    n = len(b)
    L = tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )
    m = tuple(tuple(row) for row in b)
    for k in seq:
        S = weight_step_matrix(m, k)
        L = tuple(
            tuple(
                sum(S[i][t] * L[t][j] for t in range(n)) for j in range(n)
            )
            for i in range(n)
        )
        m = mutate_matrix(m, k)
    return m, L


def is_matrix_periodic(b, t, p):
    """mu_p ... mu_1 followed by relabeling t returns the matrix."""
    n = len(b)
    t = tuple(int(v) for v in t)
    if sorted(t) != list(range(n)):
        raise InvalidWeights("t must be a permutation of 0..n-1")
    if not 1 <= p <= n:
        raise InvalidWeights("period must be between 1 and n")
    m = b
    for k in range(p):
        m = mutate_matrix(m, k)
    return all(
        m[t[i]][t[j]] == b[i][j] for i in range(n) for j in range(n)
    )


def find_periodic_weights(quiver, t, p, box=PERIODIC_WEIGHT_BOX):
    """All weight vectors in [-box, box]^n compatible with a periodic quiver.

    The quiver must satisfy the matrix periodicity for (t, p), else
    QuiverNotPeriodic.  Returns the sorted list of vectors w with
    (L w)[t(i)] == w[i] for the sequence mu_p ... mu_1.
    """
    b = quiver.b if isinstance(quiver, WeightedQuiver) else tuple(
        tuple(int(v) for v in row) for row in quiver
    )
    n = len(b)
    t = tuple(int(v) for v in t)
    if not is_matrix_periodic(b, t, p):
        raise QuiverNotPeriodic(
            "mu_%d...mu_1 with the given relabeling does not fix the matrix" % p
        )
    if n > 7:
        raise TooManyColumns("box search over %d vertices is too large" % n)
    _, L = weight_transfer(b, range(p))
    out = []
    for w in itertools.product(range(-box, box + 1), repeat=n):
        lw = tuple(
            sum(L[i][j] * w[j] for j in range(n)) for i in range(n)
        )
        if all(lw[t[i]] == w[i] for i in range(n)):
            out.append(w)
    out.sort()
    return out


def candidate_relabelings(b, p):
    """All permutations t making (t, p) a matrix periodicity (n <= 8)."""
    n = len(b)
    if n > 8:
        raise TooManyColumns("too many vertices to enumerate relabelings")
    m = b
    for k in range(p):
        m = mutate_matrix(m, k)
    found = []
    for t in itertools.permutations(range(n)):
        if all(
            m[t[i]][t[j]] == b[i][j] for i in range(n) for j in range(n)
        ):
            found.append(t)
    return found


def primitive_quiver(N, t, weights=None):
    """The primitive N-vertex quiver joining i to i+t cyclically.

    b_ij = +1 when (i - j) == t mod N, -1 when (j - i) == t mod N (both at
    once, as for t = N/2, cancels to 0, the only skew-symmetric choice).
    """
    N = int(N)
    t = int(t)
    if N < 2 or not 1 <= t <= N // 2:
        raise InvalidWeights("need N >= 2 and 1 <= t <= N/2")
    b = []
    for i in range(N):
        row = []
        for j in range(N):
            v = 0
            if (i - j) % N == t:
                v += 1
            if (j - i) % N == t:
                v -= 1
            row.append(v)
        b.append(tuple(row))
    w = weights if weights is not None else [0] * N
    return WeightedQuiver(b, w)


class SuperSeed:
    """Weighted quiver + dual-number variables z_i = even + odd*eps.

    Variables have arity 2n: the x-block (indices 0..n-1) and the y-block
    (indices n..2n-1); the initial seed has z_i = x_i + y_i*eps.
    Mutation follows the quiver exchange in dual arithmetic and requires a
    strictly skew-symmetric matrix.
    """

    __slots__ = ("quiver", "z")

    def __init__(self, quiver, z):
        self.quiver = quiver
        z = tuple(z)
        if len(z) != quiver.n:
            raise DimensionMismatch("need one z per vertex")
        if any(v.arity != 2 * quiver.n for v in z):
            raise DimensionMismatch("z variables need arity 2n")
        self.z = z

    @classmethod
    def initial(cls, quiver):
        n = quiver.n
        z = tuple(DualRational.pair_gen(2 * n, i, n + i) for i in range(n))
        return cls(quiver, z)

    def mutate(self, k):
        q = self.quiver
        if not q.is_skew_symmetric:
            raise InvalidExchangeMatrix(
                "super-seed mutation needs a strictly skew-symmetric matrix"
            )
        if k in q.frozen:
            raise FrozenVertex("vertex %d is frozen" % k)
        n = q.n
        one = DualRational.from_int(2 * n, 1)
        into = one
        out = one
        for i in range(n):
            e = q.b[i][k]
            if e > 0:
                into = into * self.z[i] ** e
            elif e < 0:
                out = out * self.z[i] ** (-e)
        new_z = (into + out) / self.z[k]
        z = tuple(new_z if i == k else v for i, v in enumerate(self.z))
        return SuperSeed(q.mutate(k), z)

    def mutate_seq(self, seq):
        s = self
        for k in seq:
            s = s.mutate(k)
        return s

    def names(self):
        n = self.quiver.n
        return tuple(
            ["x%d" % (i + 1) for i in range(n)]
            + ["y%d" % (i + 1) for i in range(n)]
        )

    def render(self):
        names = self.names()
        return [
            {"even": v.even.render(names), "odd": v.odd.render(names)}
            for v in self.z
        ]


def weighted_dynkin_cluster(type_name, psi, J=None):
    """Bipartite quiver of a Cartan type with psi as vertex weights.

    Vertices outside J are frozen.  The report lists, per mutable vertex, the
    weights of the two exchange monomials (sum of b_ik * w_i over incoming
    arrows vs outgoing) and whether they balance, which is exactly when the
    exchange relation at that vertex is weight-homogeneous.
    """
    from .rootsys import build_root_system

    rs = build_root_system(type_name)
    psi = tuple(int(v) for v in psi)
    if len(psi) != rs.n:
        raise InvalidWeights("psi needs one value per simple root")
    if J is None:
        J = range(rs.n)
    J = sorted(set(int(j) for j in J))
    frozen = [i for i in range(rs.n) if i not in J]
    b = bipartite_exchange(rs.cartan)
    q = WeightedQuiver(b, psi, frozen)
    report = []
    for k in q.mutable():
        w_in = sum(q.b[i][k] * q.w[i] for i in range(q.n) if q.b[i][k] > 0)
        w_out = sum(-q.b[i][k] * q.w[i] for i in range(q.n) if q.b[i][k] < 0)
        report.append(
            {
                "vertex": k + 1,
                "incoming_weight": w_in,
                "outgoing_weight": w_out,
                "homogeneous": w_in == w_out,
            }
        )
    return q, report


def sl3_unipotent_report(w1, w2, w3):
    """The three-term exchange identity among column entries and 2x2 minors
    of a 3x2 matrix of symbols: x2*x13 = x1*x23 + x3*x12.

    Checked exactly by substitution, then re-checked as formal weight
    homogeneity with wt(x_i) = w_i and wt(x_ij) = w_i + w_j.
    """
    arity = 6  # a1 a2 a3 b1 b2 b3
    a = [MultiPoly.gen(arity, i) for i in range(3)]
    bb = [MultiPoly.gen(arity, 3 + i) for i in range(3)]

    def minor(i, j):
        return a[i] * bb[j] - a[j] * bb[i]

    lhs = a[1] * minor(0, 2)
    rhs = a[0] * minor(1, 2) + a[2] * minor(0, 1)
    vanish = (lhs - rhs).is_zero()

    # formal variables x1,x2,x3,x12,x13,x23 with the induced weights
    weights = [w1, w2, w3, w1 + w2, w1 + w3, w2 + w3]
    x = [MultiPoly.gen(6, i) for i in range(6)]
    f_lhs = x[1] * x[4]
    f_rhs = x[0] * x[5] + x[2] * x[3]
    wl = weight_of(f_lhs, weights)
    wr = weight_of(f_rhs, weights)
    return {
        "identity_holds": vanish,
        "lhs_weight": wl,
        "rhs_weight": wr,
        "homogeneous": wl is not None and wl == wr,
        "total_weight": wl,
    }
