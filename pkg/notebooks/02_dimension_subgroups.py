"""
Dimension subgroups and the Jennings basis
==========================================

``D_i = {g : g - 1 in J^i}`` is computed from the group alone by the
recursion ``D_i = (D_ceil(i/p))^p [D_(i-1), G]`` and checked against the
ring-theoretic definition.
"""

# %%
from zsocle import group_algebra, parse_group_spec
from zsocle.jennings import (
    dimension_subgroups_group_theoretic,
    dimension_subgroups_ring_theoretic,
    jennings_basis,
)

for spec in ["cyclic:9", "dihedral:16", "xs+:3", "xs-:3"]:
    g = parse_group_spec(spec)
    p = g.p_hint
    js = dimension_subgroups_group_theoretic(g, p)
    a = group_algebra(g, p)
    same = dimension_subgroups_ring_theoretic(a) == list(js.chain)
    gens = [g.labels[x] for _, _, x in js.gens]
    print(f"{spec:12s} chain {js.chain_orders()} gens {gens} LL {js.loewy_length} ring check {same}")

# %%
# The first few Jennings monomials of F_3[p_+^(1+2)], with weights.
g = parse_group_spec("xs+:3")
js = dimension_subgroups_group_theoretic(g, 3)
a = group_algebra(g, 3)
for m, elt in jennings_basis(js, a)[:6]:
    print(m.exponents, "weight", m.weight, "coweight", m.coweight, elt)
