"""Conventions shared by every module.  Import constants from here, never inline.

Cartan pairing
--------------
A Cartan matrix A = (a_ij) is stored with

    a_ij = <alpha_j, alphacheck_i> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).

Row i therefore lists the pairings of all simple roots against the i-th simple
coroot.  For a root alpha = sum_i c_i alpha_i in simple-root coordinates,

    <alpha, alphacheck_j> = sum_i a_ji c_i        (row j of A, dotted with c)

and the simple reflection acts by s_j(c) = c - <alpha, alphacheck_j> e_j.

Exchange matrices and quivers
-----------------------------
b_ik > 0 encodes b_ik arrows from vertex i to vertex k.  The exchange relation
multiplies x_i^{b_ik} over incoming b_ik > 0 against x_i^{-b_ik} over b_ik < 0.

Hermite normal form
-------------------
``hnf(M)`` returns (H, U) with H = U @ M, U unimodular, H upper triangular with
positive pivots, and every entry above a pivot reduced to [0, pivot).
"""

# Weyl groups larger than this are refused before any element is generated.
WEYL_ORDER_CAP = 60_000

# config_equivalent enumerates column permutations; 8! = 40320 is the ceiling.
CONFIG_SEARCH_MAX_COLUMNS = 8

# Extended-fan cross-check in whs_isomorphic is skipped above this many rays.
EXTENDED_FAN_MAX_RAYS = 8

# Finite-type mutation search bounds.
FINITE_TYPE_DEPTH_CAP = 12
FINITE_TYPE_NODE_CAP = 20_000

# Seed enumeration node cap (distinct clusters).
SEED_ENUM_CAP = 2_500

# Exhaustive box for mutation-periodic weight search: entries in [-BOX, BOX].
PERIODIC_WEIGHT_BOX = 3

# Numeric module: finite-difference step and sanity tolerances.
HESSIAN_STEP = 1e-4
HESSIAN_HERMITIAN_TOL = 1e-6
DUAL_PATH_REL_TOL = 1e-9

# JSON integers at or beyond 2^53 in absolute value are serialized as strings.
JSON_INT_STRING_THRESHOLD = 2 ** 53
