"""
Random submatroids and random contractions
==========================================

Exact expectations, their closed forms, and a seeded simulation.
"""

from fractions import Fraction

from tutteconv import catalog, render
from tutteconv.poly import P, VL
from tutteconv.random_models import closed_form_expectation, exact_expectation, monte_carlo

m = catalog.get("C4")
third = Fraction(1, 3)

# expected normalized characteristic polynomial, two ways
print(render(exact_expectation(m, third, "char_normalized")))
print(render(closed_form_expectation(m, third, "char_normalized")))

# symbolic in p
print(render(exact_expectation(catalog.get("U_1_1"), P, "contraction_char")))

# simulate: GF(2)^1, keep each vector with probability 1/2, evaluate at l = 2
g = catalog.get("GF2_1")
res = monte_carlo(g, Fraction(1, 2), "char_normalized", {VL: 2}, trials=10_000, seed=42)
print(f"estimate {float(res.estimate):.4f} +- {res.stderr:.4f}, exact 0.75")
