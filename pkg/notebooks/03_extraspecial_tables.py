"""
ZS^n for the extraspecial groups of order 27
============================================

Dimensions of ``J^n``, ``Soc^n`` and ``ZS^n = Z ∩ Soc^n`` for both
extraspecial groups of order 27 over F_3, plus the element
``x^2 y^2 z`` that lies in ``Soc^4`` but not in the center.
"""

# %%
from zsocle.report import build_context, table_report, table_text

for spec in ["xs+:3", "xs-:3"]:
    print(table_text(table_report(build_context(spec))))

# %%
from zsocle.jennings import monomial_element, verify_powerful_theorem

c = build_context("xs-:3")
w = monomial_element(c.js, c.algebra, c.js.monomial([2, 2, 1]))
print("in Soc^4:", c.algebra.socle(4).contains(w.coeffs), " central:", c.algebra.center().contains(w.coeffs))
print(verify_powerful_theorem(c.js, c.algebra).summary())
