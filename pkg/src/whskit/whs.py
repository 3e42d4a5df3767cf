"""Weighted flag-type spaces: a parabolic subset J of the simple roots plus a
positive integer weight psi_i on every simple root.

The key invariants all flow from the torus weights <alpha, H> = sum c_i psi_i
of the roots alpha outside the Levi (the nilradical roots): orbifold chart
weights per Bruhat cell, chart group orders, the extension degree (the order
of the top chart), and first Chern coefficients.

Isomorphism testing reduces to lattice equivalence of the simple coroot ray
configuration e_i / psi_i; an extended-ray diagnostic over the nilradical
roots is cross-checked when small enough, with a warning on disagreement.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .bruhat import inversion_set, is_min_coset_rep, min_coset_reps
from .conventions import EXTENDED_FAN_MAX_RAYS
from .errors import InvalidWeights, NotMinimalRepresentative
from .rootsys import build_root_system
from .zlattice import config_equivalent


class WHS:
    """G/P with a weight system: root system, marked subset J, weights psi."""

    def __init__(self, rs, J, psi):
        self.rs = rs
        J = sorted(set(int(j) for j in J))
        if not J:
            raise InvalidWeights("J must be a nonempty set of simple indices")
        if any(j < 0 or j >= rs.n for j in J):
            raise InvalidWeights("J out of range for rank %d" % rs.n)
        psi = tuple(int(v) for v in psi)
        if len(psi) != rs.n:
            raise InvalidWeights("psi needs one value per simple root")
        if any(v < 1 for v in psi):
            raise InvalidWeights("psi values must be >= 1")
        self.J = tuple(J)
        self.I = tuple(i for i in range(rs.n) if i not in J)
        self.psi = psi

    @property
    def nilradical_roots(self):
        """Positive roots with support meeting J, in graded order."""
        out = []
        for c in self.rs.pos_roots:
            if any(c[j] != 0 for j in self.J):
                out.append(c)
        return out

    def torus_weight(self, coeffs):
        return sum(c * p for c, p in zip(coeffs, self.psi))

    def __repr__(self):
        return "WHS(%s, J=%r, psi=%r)" % (
            self.rs.type_name,
            [j + 1 for j in self.J],
            list(self.psi),
        )


def make_whs(type_name, psi, J=None):
    rs = build_root_system(type_name)
    if J is None:
        J = range(rs.n)
    return WHS(rs, J, psi)


def simple_rays(space):
    """Rays e_i / psi_i of the weight fan, in coroot coordinates."""
    n = space.rs.n
    return [
        tuple(
            Fraction(1, space.psi[i]) if j == i else Fraction(0)
            for j in range(n)
        )
        for i in range(n)
    ]


def extended_rays(space):
    """One ray e_alpha / <alpha,H> per nilradical root, in R^{|R(P)_+|}."""
    roots = space.nilradical_roots
    m = len(roots)
    rays = []
    for k, alpha in enumerate(roots):
        w = space.torus_weight(alpha)
        rays.append(
            tuple(Fraction(1, w) if j == k else Fraction(0) for j in range(m))
        )
    return rays


def cell_torus_weights(space, w):
    """Torus weights of the chart at the cell of a minimal representative w."""
    if not is_min_coset_rep(space.rs, space.I, w):
        raise NotMinimalRepresentative(
            "cell charts are indexed by minimal coset representatives"
        )
    return sorted(space.torus_weight(a) for a in inversion_set(w))


def orbifold_charts(space):
    """One chart per Bruhat cell: reduced word, dimension, weights, order.

    Cells are listed by (length, word); the last entry is the top cell and
    its order equals the extension degree.
    """
    charts = []
    for w in min_coset_reps(space.rs, space.I):
        weights = sorted(space.torus_weight(a) for a in inversion_set(w))
        order = 1
        for v in weights:
            order *= v
        charts.append(
            {
                "word": [i + 1 for i in w.word],
                "dim": w.length,
                "weights": weights,
                "order": order,
            }
        )
    return charts


def extension_degree(space):
    """Product of <alpha, H> over the nilradical roots."""
    deg = 1
    for alpha in space.nilradical_roots:
        deg *= space.torus_weight(alpha)
    return deg


def whs_isomorphic(space1, space2):
    """Equivalence of the simple-ray weight fans under GL_n(Z).

    The returned verdict is the simple-ray test.  When both nilradical-root
    families are small enough, the extended-ray configurations are compared
    as an independent diagnostic; a disagreement is reported in the result
    and warned about, since the extended data can genuinely separate spaces
    whose simple-ray fans agree.
    """
    if space1.rs.n != space2.rs.n:
        raise InvalidWeights("ranks differ")
    simple = config_equivalent(simple_rays(space1), simple_rays(space2))

    extended_agrees = None
    r1, r2 = space1.nilradical_roots, space2.nilradical_roots
    if (
        len(r1) == len(r2)
        and len(r1) <= EXTENDED_FAN_MAX_RAYS
    ):
        ext = config_equivalent(extended_rays(space1), extended_rays(space2))
        extended_agrees = (ext is None) == (simple is None)
        if not extended_agrees:
            warnings.warn(
                "extended-ray test disagrees with the simple-ray test for "
                "%r vs %r; returning the simple-ray verdict"
                % (space1, space2),
                stacklevel=2,
            )

    return {
        "isomorphic": simple is not None,
        "witness": simple,
        "extended_agrees": extended_agrees,
    }


def whs_morphism_exists(space1, space2):
    """Weight-divisibility criterion for a natural map from space1 to space2:
    psi_1(i) must divide psi_2(i) for every simple root."""
    if space1.rs.type_name != space2.rs.type_name:
        raise InvalidWeights("spaces live over different types")
    return all(b % a == 0 for a, b in zip(space1.psi, space2.psi))


def canonical_chi(space, halfsum=False):
    """Pairings <chi, coroot_j> for j in J, chi the sum over nilradical roots
    (or half of it with halfsum=True, exact Fractions when odd)."""
    rho = [0] * space.rs.n
    for alpha in space.nilradical_roots:
        for i, c in enumerate(alpha):
            rho[i] += c
    vals = []
    for j in space.J:
        p = space.rs.pairing(tuple(rho), j)
        if halfsum:
            p = Fraction(p, 2)
            if p.denominator == 1:
                p = int(p)
        vals.append(p)
    return vals


def chern_coeffs(space, chi=None, halfsum=False):
    """First Chern coefficients on the cells of dimension one.

    chi is given by its pairings against the coroots of J; when omitted the
    canonical choice (sum of nilradical roots) is used.  The coefficient on
    the j-th curve class is -<chi, coroot_j> * psi_j.
    """
    if chi is None:
        chi = canonical_chi(space, halfsum=halfsum)
    chi = list(chi)
    if len(chi) != len(space.J):
        raise InvalidWeights("need one chi pairing per element of J")
    return {
        j + 1: -c * space.psi[j] for j, c in zip(space.J, chi)
    }


def kahler_cone_check(coeffs):
    """Strict positivity of a proposed Kahler class; boundary rejected."""
    vals = list(coeffs.values()) if isinstance(coeffs, dict) else list(coeffs)
    if not vals:
        raise InvalidWeights("empty coefficient vector")
    return all(v > 0 for v in vals)


def flag_bundle_check(exponents):
    """Strictly decreasing positive integer exponents twist a flag of
    subbundles into a positive line bundle; ties, increases, or a zero
    anywhere fail (boundary excluded, same as kahler_cone_check)."""
    a = [int(v) for v in exponents]
    if len(a) < 2:
        raise InvalidWeights("need at least two exponents")
    return a[-1] > 0 and all(x > y for x, y in zip(a, a[1:]))


def poincare_series(space):
    """Cell counts by dimension (coefficients of the Poincare polynomial)."""
    reps = min_coset_reps(space.rs, space.I)
    top = max(w.length for w in reps)
    out = [0] * (top + 1)
    for w in reps:
        out[w.length] += 1
    return out
