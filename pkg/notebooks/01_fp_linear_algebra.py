"""
Exact linear algebra over F_p
=============================

Subspaces are stored in reduced row echelon form, so two spanning sets of
the same space give equal objects and lattice questions become equality
checks.
"""

# %%
import numpy as np

from zsocle.fplinalg import Subspace, kernel, rref

r, k = rref([[1, 1], [1, 2]], 3)
print(r, "rank", k)

# %%
# The kernel of the all-ones row over F_3 is a plane containing (1, 2, 0).
plane = kernel([[1, 1, 1]], 3)
print(plane, plane.basis)
print("(1,2,0) inside:", plane.contains([1, 2, 0]))

# %%
# Sum and intersection (the latter by Zassenhaus' trick) satisfy the
# dimension formula.
u = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
v = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
print((u + v).dim, (u & v).basis, u.dim + v.dim == (u + v).dim + (u & v).dim)

# %%
# Different spanning sets, same canonical basis.
g = np.array([[2, 1, 0, 1], [1, 1, 1, 0]])
print(Subspace.span(g, 3) == Subspace.span(np.vstack([(g[0] + g[1]) % 3, g[1]]), 3))
