"""Weighted projective spaces: weight reduction, well-formedness, fan rays,
and exact isomorphism testing through lattice equivalence of the fan.

P(lambda_0..lambda_n) is encoded by its fan rays

    v_i = e_i / lambda_i   (i = 1..n),    v_0 = -(e_1 + ... + e_n) / lambda_0

in Q^n.  Two spaces are isomorphic iff some unimodular map carries one ray
configuration onto the other (as unordered sets), which config_equivalent
decides exactly.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction

from .errors import InvalidWeights, ReductionError
from .zlattice import config_equivalent

__all__ = [
    "check_weights",
    "reduce_weights",
    "is_well_formed",
    "fan_rays",
    "wps_isomorphic",
]


def check_weights(lams):
    lams = [int(v) for v in lams]
    if len(lams) < 2:
        raise InvalidWeights("need at least two weights")
    if any(v < 1 for v in lams):
        raise InvalidWeights("weights must be positive integers")
    return lams


def reduce_weights(lams):
    """Well-formed model of a weight vector, computed in closed form.

    The overall gcd is divided out first; then with d_j = gcd of the weights
    other than lambda_j and a_j = lcm of the d's other than d_j, the reduced
    weight is lambda_j / a_j.  The divisions are asserted exact.
    """
    lams = check_weights(lams)
    g = math.gcd(*lams)
    lams = [v // g for v in lams]
    m = len(lams)
    d = []
    for j in range(m):
        others = lams[:j] + lams[j + 1:]
        d.append(math.gcd(*others) if len(others) > 1 else others[0])
    out = []
    for j in range(m):
        a_j = math.lcm(*(d[:j] + d[j + 1:])) if m > 1 else 1
        if lams[j] % a_j != 0:
            raise ReductionError(
                "normalization factor %d does not divide weight %d"
                % (a_j, lams[j])
            )
        out.append(lams[j] // a_j)
    return out


def is_well_formed(lams):
    """True when every n of the n+1 weights are coprime."""
    lams = check_weights(lams)
    for j in range(len(lams)):
        others = lams[:j] + lams[j + 1:]
        if math.gcd(*others) != 1:
            return False
    return True


def fan_rays(lams):
    """The rays of the fan of P(lams) in Q^n, v_0 listed first."""
    lams = check_weights(lams)
    n = len(lams) - 1
    if n < 1:
        raise InvalidWeights("need dimension at least 1")
    rays = [tuple(Fraction(-1, lams[0]) for _ in range(n))]
    for i in range(1, n + 1):
        rays.append(
            tuple(
                Fraction(1, lams[i]) if j == i - 1 else Fraction(0)
                for j in range(n)
            )
        )
    return rays


def wps_isomorphic(lams1, lams2):
    """Exact isomorphism test for two weighted projective spaces.

    Reduces both weight vectors to their well-formed models, then searches for
    a unimodular map matching the full ray configurations (all n+1 rays).  A
    restricted test that only matches the coordinate rays v_1..v_n is also
    run as a diagnostic; when the two disagree, a warning is emitted and the
    full-configuration verdict is returned.

    Returns a dict: ``isomorphic`` (bool), ``witness`` ((phi, sigma) or None),
    ``reduced`` (the two reduced weight vectors), ``restricted_agrees``.
    """
    r1 = reduce_weights(lams1)
    r2 = reduce_weights(lams2)
    if len(r1) != len(r2):
        raise InvalidWeights("different dimensions")

    full = config_equivalent(fan_rays(r1), fan_rays(r2))

    restricted = config_equivalent(fan_rays(r1)[1:], fan_rays(r2)[1:])
    agrees = (full is None) == (restricted is None)
    if not agrees:
        warnings.warn(
            "restricted coordinate-ray test disagrees with the full fan test "
            "on %r vs %r; trusting the full test" % (tuple(r1), tuple(r2)),
            stacklevel=2,
        )

    return {
        "isomorphic": full is not None,
        "witness": full,
        "reduced": (r1, r2),
        "restricted_agrees": agrees,
    }
