"""
Where Jennings monomials stop spanning ZS^n
===========================================

For the three maximal-class 2-groups of order 16 some ``ZS^n`` has no
basis of Jennings monomials.  The last cell checks that ``dim ZS^n`` is
unchanged when passing to the 2x2 matrix algebra.
"""

# %%
from zsocle import morita_invariance_check
from zsocle.jennings import jennings_spanning_scan
from zsocle.report import build_context

for spec in ["dihedral:16", "semidihedral:16", "quaternion:16", "prod:cyclic:2*dihedral:8"]:
    c = build_context(spec)
    rep = jennings_spanning_scan(c.js, c.algebra)
    print(spec, rep.data["failing_n"] or "spans everywhere")

# %%
c = build_context("xs+:3")
r = morita_invariance_check(c.algebra, 2)
print("FG      ", r.dims_a)
print("M_2(FG) ", r.dims_b)
print("equal:", r.equal)
