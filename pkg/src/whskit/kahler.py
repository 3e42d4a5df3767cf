"""Numeric positivity of invariant potentials on big cells.

This is the only module that touches floating point.  Potentials have the
shape

    phi(z) = sum_j c_j * (1/2) * log || Lambda^j g(z) (e_1 ^ ... ^ e_j) ||^2

with g(z) the big-cell unipotent matrix; the rendered description carries the
conventional 1/(2*pi) normalization, the numeric check drops it (a positive
scalar does not move positivity verdicts).

The complex Hessian (d^2 phi / dz_i dzbar_j) is estimated by Wirtinger finite
differences with a Hermitian-residual sanity check, then symmetrized and fed
to an exact eigensolver.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .conventions import HESSIAN_HERMITIAN_TOL, HESSIAN_STEP
from .errors import DimensionMismatch, InvalidWeights, StepTooLarge

# -- big-cell matrices -------------------------------------------------------


def sl_coords(n):
    """Coordinate slots of the lower unitriangular big cell of SL_n:
    (row, col) pairs with row > col, ordered by column then row."""
    return [(i, j) for j in range(n - 1) for i in range(j + 1, n)]


def sl_cell_matrix(n, z):
    """Lower unitriangular n x n matrix with the m = n(n-1)/2 coordinates."""
    coords = sl_coords(n)
    if len(z) != len(coords):
        raise DimensionMismatch(
            "SL_%d big cell needs %d coordinates" % (n, len(coords))
        )
    g = np.eye(n, dtype=complex)
    for v, (i, j) in zip(z, coords):
        g[i, j] = v
    return g


def nilpotent_exp(entries, size=4):
    """exp of a nilpotent matrix by its terminating series, generic in the
    entry ring: works for Fractions exactly and for complex numbers.

    ``entries`` maps (row, col) 0-based positions to values.  The series
    I + M + M^2/2 + ... runs until the power vanishes; if it fails to vanish
    by degree ``size`` the matrix was not nilpotent and InvalidWeights is
    raised.
    """
    exact = all(
        isinstance(v, (int, Fraction)) for v in entries.values()
    )
    zero = Fraction(0) if exact else 0j
    one = Fraction(1) if exact else 1.0 + 0j

    M = [[zero for _ in range(size)] for _ in range(size)]
    for (i, j), v in entries.items():
        M[i][j] = Fraction(v) if exact and isinstance(v, int) else v

    def matmul(a, b):
        return [
            [
                sum(a[i][t] * b[t][j] for t in range(size))
                for j in range(size)
            ]
            for i in range(size)
        ]

    out = [[one if i == j else zero for j in range(size)] for i in range(size)]
    power = [row[:] for row in out]
    fact = 1
    for k in range(1, size + 1):
        power = matmul(power, M)
        fact *= k
        if all(v == zero for row in power for v in row):
            break
        scale = Fraction(1, fact) if exact else 1.0 / fact
        out = [
            [o + p * scale for o, p in zip(orow, prow)]
            for orow, prow in zip(out, power)
        ]
    else:
        if not all(v == zero for row in matmul(power, M) for v in row):
            raise InvalidWeights("matrix is not nilpotent of order <= size")
    return out


SP4_POSITIONS = {
    (1, 0): "x1",
    (2, 0): "x2",
    (2, 1): "x3",
    (2, 3): "-x1",
    (3, 0): "x3",
    (3, 1): "x4",
}


def sp4_cell_matrix(z):
    """Big-cell matrix of the rank-2 symplectic group via the nilpotent
    series; z = (x1, x2, x3, x4)."""
    if len(z) != 4:
        raise DimensionMismatch("need 4 coordinates")
    x1, x2, x3, x4 = [complex(v) for v in z]
    vals = {"x1": x1, "x2": x2, "x3": x3, "x4": x4, "-x1": -x1}
    entries = {pos: vals[name] for pos, name in SP4_POSITIONS.items()}
    rows = nilpotent_exp(entries, size=4)
    return np.array(rows, dtype=complex)


# -- norms and potentials -----------------------------------------------------


def fundamental_norm_sq(g, j):
    """|| Lambda^j g (e_1 ^ ... ^ e_j) ||^2: sum of |det|^2 over all j x j
    minors taken from the first j columns."""
    n = g.shape[0]
    if not 1 <= j < n:
        raise DimensionMismatch("fundamental index out of range")
    block = g[:, :j]
    total = 0.0
    for rows in itertools.combinations(range(n), j):
        sub = block[list(rows), :]
        d = np.linalg.det(sub) if j > 1 else sub[0, 0]
        total += abs(d) ** 2
    return float(total)


class PotentialSpec:
    """Which group, which big cell, which coefficients c_j."""

    def __init__(self, group, coeffs, n=None):
        group = group.upper()
        if group.startswith("SL"):
            if n is None:
                n = int(group[2:])
            group = "SL"
            if n < 2:
                raise InvalidWeights("SL_n needs n >= 2")
            if len(coeffs) != n - 1:
                raise InvalidWeights("SL_%d needs %d coefficients" % (n, n - 1))
        elif group == "SP4":
            n = 4
            if len(coeffs) != 2:
                raise InvalidWeights("Sp_4 needs 2 coefficients")
        else:
            raise InvalidWeights("unknown group %r" % group)
        self.group = group
        self.n = n
        self.coeffs = [float(c) for c in coeffs]

    @property
    def dim(self):
        if self.group == "SL":
            return self.n * (self.n - 1) // 2
        return 4

    def evaluate(self, z):
        if self.group == "SL":
            g = sl_cell_matrix(self.n, z)
            js = range(1, self.n)
        else:
            g = sp4_cell_matrix(z)
            js = (1, 2)
        total = 0.0
        for c, j in zip(self.coeffs, js):
            total += c * 0.5 * np.log(fundamental_norm_sq(g, j))
        return float(total)

    def describe(self):
        if self.group == "SL":
            js = list(range(1, self.n))
            cell = "lower unitriangular g(z) in SL_%d" % self.n
        else:
            js = [1, 2]
            cell = "exp of the nilpotent big-cell matrix of Sp_4"
        terms = [
            "(c%d/(4*pi)) * log ||Lambda^%d g(z) (e_1^...^e_%d)||^2"
            % (j, j, j)
            for j in js
        ]
        return "phi(z) = %s   with %s, c = %s" % (
            " + ".join(terms),
            cell,
            self.coeffs,
        )


def sp4_potential_direct(coeffs, z):
    """Independent evaluation path for the Sp_4 potential: the big-cell
    entries are frozen as explicit polynomials and the six 2x2 minors are
    expanded by hand.  Kept deliberately separate from the series path."""
    if len(coeffs) != 2 or len(z) != 4:
        raise DimensionMismatch("need 2 coefficients and 4 coordinates")
    x1, x2, x3, x4 = [complex(v) for v in z]
    p1 = x2 - x1 * x1 * x4 / 6
    p3 = x3 - x1 * x4 / 2
    p2 = x3 + x1 * x4 / 2
    t1 = 1 + abs(x1) ** 2 + abs(p1) ** 2 + abs(p2) ** 2
    minors = [
        1,
        p3,
        x4,
        x1 * p3 - p1,
        x1 * x4 - p2,
        p1 * x4 - p2 * p3,
    ]
    t2 = sum(abs(m) ** 2 for m in minors)
    import math

    return coeffs[0] * 0.5 * math.log(t1) + coeffs[1] * 0.5 * math.log(t2)


# -- Wirtinger finite differences ---------------------------------------------


def complex_hessian(f, z0, h=HESSIAN_STEP, tol=HESSIAN_HERMITIAN_TOL):
    """Finite-difference d^2 f / dz_i dzbar_j at z0, symmetrized.

    The raw estimate must already be Hermitian up to ``tol`` or StepTooLarge
    is raised: a large residual means the step is unsuitable for f at z0.
    """
    z0 = np.asarray(z0, dtype=complex)
    m = z0.shape[0]
    H = np.zeros((m, m), dtype=complex)

    def shift(i, dv):
        z = z0.copy()
        z[i] += dv
        return z

    f0 = f(z0)
    for i in range(m):
        plus_x = f(shift(i, h)) + f(shift(i, -h))
        plus_y = f(shift(i, 1j * h)) + f(shift(i, -1j * h))
        H[i, i] = (plus_x + plus_y - 4 * f0) / (4 * h * h)

    def mixed(di, dj):
        z = z0.copy()
        z[di[0]] += di[1]
        z[dj[0]] += dj[1]
        return f(z)

    for i in range(m):
        for j in range(m):
            if i == j:
                continue

            def d2(a, b):
                return (
                    mixed((i, a), (j, b))
                    - mixed((i, a), (j, -b))
                    - mixed((i, -a), (j, b))
                    + mixed((i, -a), (j, -b))
                ) / (4 * h * h)

            dxx = d2(h, h)
            dyy = d2(1j * h, 1j * h)
            dxy = d2(h, 1j * h)
            dyx = d2(1j * h, h)
            H[i, j] = 0.25 * (dxx + dyy) + 0.25j * (dxy - dyx)

    residual = float(np.max(np.abs(H - H.conj().T)))
    if residual > tol:
        raise StepTooLarge(
            "Hermitian residual %.3e exceeds %.3e" % (residual, tol)
        )
    return (H + H.conj().T) / 2


def positivity_check(spec, z0, h=HESSIAN_STEP):
    """(is positive definite, min eigenvalue) of the potential's complex
    Hessian at z0.  Strictness uses a small guard band above zero so that
    discretization noise near a genuinely semidefinite point does not flip
    the verdict."""
    H = complex_hessian(spec.evaluate, np.asarray(z0, dtype=complex), h=h)
    eigs = np.linalg.eigvalsh(H)
    min_eig = float(eigs[0])
    return min_eig > 1e-7, min_eig


def seeded_points(dim, count, seed, radius=0.4):
    """Deterministic sample of complex points in a polydisc."""
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-radius, radius, size=(count, dim)) + 1j * rng.uniform(
        -radius, radius, size=(count, dim)
    )
    return [pts[i] for i in range(count)]
