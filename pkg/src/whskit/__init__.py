"""whskit: exact combinatorics and invariants of weighted homogeneous spaces.

Subpackage layout mirrors the mathematical layers:

- ``symlaurent``: exact multivariate polynomial / rational / dual-number arithmetic
- ``zlattice``: integer lattices, Hermite normal form, GL_n(Z)-equivalence of
  vector configurations
- ``rootsys``: finite root systems from Cartan matrices, Weyl dimension formula
- ``bruhat``: Weyl group elements, reduced words, minimal coset representatives
- ``wps``: weighted projective spaces (reduction, well-formedness, fans,
  isomorphism testing)
- ``whs``: weighted flag-type spaces built from a parabolic plus a weight system
  (torus weights, orbifold charts, degrees, Chern coefficients, cone checks)
- ``cluster``: exchange matrices, seed mutation, finite-type detection,
  denominator vectors
- ``wquiver``: weighted quivers, mutation-periodic weight search, super seeds
- ``kahler``: the single floating-point module; numeric positivity of invariant
  potentials on big cells
- ``cli`` / ``service``: command line front end and the local JSON HTTP service
"""

__version__ = "0.1.0"

__all__ = [
    "symlaurent",
    "zlattice",
    "rootsys",
    "bruhat",
    "wps",
    "whs",
    "cluster",
    "wquiver",
    "kahler",
]
