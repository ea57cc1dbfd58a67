"""
Random sets of vectors in GF(q)^d
=================================

Closed forms against brute force for the whole space, expected numbers
of distinguishing tuples and of spanning subsets.
"""

from fractions import Fraction

from tutteconv import make_vector_space, render
from tutteconv.invariants import size_corank
from tutteconv.poly import P
from tutteconv.qspace import (
    distinguishers_as_printed,
    euler_expand,
    expected_distinguishers,
    expected_spanning,
    genfun_factorization_check,
    sc_closed_form,
)
from tutteconv.random_models import exact_distinguisher_expectation

# the sum over flat ranks agrees with the 2^(q^d) term brute force
print(sc_closed_form(2, 3) == size_corank(make_vector_space(2, 3)))

# symbolic p: each vector, the zero vector included, is kept with probability p
print("D(2,p,2,1) =", render(expected_distinguishers(2, P, 2, 1)))
print("sp(2,p,2)  =", render(expected_spanning(2, P, 2)))

# direct enumeration of subsets and functionals
half = Fraction(1, 2)
print(expected_distinguishers(2, half, 2, 2), exact_distinguisher_expectation(2, 2, 2, half))

# the k <= s sum with q^C(k,2) weights gives a different number here
print("alternative sum:", distinguishers_as_printed(2, 0, 2, 2), "vs", expected_distinguishers(2, 0, 2, 2))

print(euler_expand(3, 2)["equal"])
rep = genfun_factorization_check(4, 2, 2, Fraction(1, 3), "D")
print("minus-sign product:", rep["equal"], " plus-sign product:", rep["plus_sign_product_matches"])
