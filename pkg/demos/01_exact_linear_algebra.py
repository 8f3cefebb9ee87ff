"""Exact linear algebra over GF(p): the substrate everything else sits on.

Every cohomology dimension and every exactness verdict in this package
reduces to ranks, kernels and images of matrices over a prime field.
"""

from supercoh import MatGF, Subspace, image, nullspace, rref, solve
from supercoh.gflin import subspace_intersect, subspace_sum

p = 5

m = MatGF.from_dense([[1, 2, 3],
                      [0, 1, 4],
                      [3, 6, 4]], p)
R, rank, pivots = rref(m)
print(f"matrix over GF({p}):")
print(m.to_dense())
print(f"rank = {rank}, pivot columns = {pivots}")
print("reduced row echelon form:")
print(R.to_dense())

ker = nullspace(m)
print(f"\nkernel has dimension {ker.dim}; basis rows: {ker.basis_rows}")
for row in ker.basis_rows:
    assert not any(m.matvec(row))

im = image(m)
print(f"column space has dimension {im.dim}")

rhs = m.matvec((1, 1, 1))
x = solve(m, rhs)
print(f"\nsolve(m, m*(1,1,1)) = {x}; residual check:", m.matvec(x) == rhs)

A = Subspace.from_vectors([(1, 0, 0), (0, 1, 0)], 3, p)
B = Subspace.from_vectors([(0, 1, 1)], 3, p)
S = subspace_sum(A, B)
I = subspace_intersect(A, B)
print(f"\ndim(A + B) = {S.dim}, dim(A ^ B) = {I.dim} "
      f"(modular law: {S.dim + I.dim} = {A.dim + B.dim})")
