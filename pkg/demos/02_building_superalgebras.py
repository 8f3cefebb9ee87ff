"""Defining restricted Lie superalgebras and validating the axioms.

A restricted Lie superalgebra is given by structure constants on a graded
basis plus a p-th power map on the even part.  The validators check super
skew-symmetry, the super Jacobi identity, parity additivity, and the
p-map axioms ad(x^[p]) = ad(x)^p and additivity with Jacobson's
correction terms.
"""

import numpy as np

from supercoh import (
    LieSuperAlgebra, SuperSpace, adjoint_module, invariants, jacobson_terms,
    pmap_apply, validate_lie_super, validate_module, validate_pmap,
)

p = 3

# the 2-dimensional non-abelian algebra [h, x] = x with h^[3] = h, x^[3] = 0
space = SuperSpace(("h", "x"), ())
brackets = np.zeros((2, 2, 2), dtype=np.int64)
brackets[0, 1] = [0, 1]   # [h, x] = x
brackets[1, 0] = [0, -1]
borel = LieSuperAlgebra(space, p, brackets, {0: [1, 0], 1: [0, 0]})
print("borel line:", validate_lie_super(borel).summary())
print("p-map axioms:", validate_pmap(borel).summary())

s = jacobson_terms(borel, borel.basis_vector(0), borel.basis_vector(1))
print("Jacobson terms s_i(h, x):", [[int(c) for c in v] for v in s])
print("(h + x)^[3] =", [int(c) for c in pmap_apply(borel, [1, 1])], "(= h + x)")

# a genuinely super example: odd y with [y, y] = z, z central
sspace = SuperSpace(("z",), ("y",))
sbr = np.zeros((2, 2, 2), dtype=np.int64)
sbr[1, 1] = [1, 0]
super_line = LieSuperAlgebra(sspace, p, sbr, {0: [0, 0]})
print("\nsuper line:", validate_lie_super(super_line).summary())

adj = adjoint_module(super_line)
print("adjoint module restricted?",
      validate_module(super_line, adj, restricted=True).ok)
full, even = invariants(super_line, adj)
print(f"invariants: dim M^g = {full.dim} (spanned by the central z), "
      f"dim M_0^g = {even.dim}")

# a deliberately broken p-map is caught with the offending index
bad = LieSuperAlgebra(space, p, brackets, {0: [1, 0], 1: [1, 0]})
print("\nbroken p-map report:")
print(validate_pmap(bad).summary())
