import math
from fractions import Fraction

import pytest

from tutteconv import catalog
from tutteconv.invariants import characteristic, size_corank
from tutteconv.matroid import make_uniform, make_vector_space
from tutteconv.poly import L, P, VL, VP, X, XI
from tutteconv.random_models import (
    closed_form_expectation,
    element_probabilities,
    exact_expectation,
    monte_carlo,
    sample_subset,
    statistic,
)

CATALOG = catalog.all_matroids(max_size=8)
PROBS = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1)]


def test_contraction_example_u11():
    u = make_uniform(1, 1)
    expected = (1 - P) * XI + 2 * P - 1
    assert exact_expectation(u, P, "contraction_char") == expected
    assert closed_form_expectation(u, Fraction(1, 3), "contraction_char") == expected.substitute(
        {VP: Fraction(1, 3)}
    )


def test_all_kept_gives_characteristic():
    m = catalog.get("K4")
    assert exact_expectation(m, 1, "char_normalized") == characteristic(m)


def test_none_kept_gives_power_of_lambda():
    m = catalog.get("Fano")
    assert closed_form_expectation(m, 0, "char_normalized") == L**3
    assert exact_expectation(m, 0, "char_normalized") == L**3


def test_gf2_line_at_lambda_two():
    g = make_vector_space(1, 2)
    assert exact_expectation(g, P, "char_normalized").substitute({VL: 2}) == (1 - P) * (2 - P)


def test_u23_half():
    u = make_uniform(2, 3)
    half = Fraction(1, 2)
    assert exact_expectation(u, half, "char_normalized") == closed_form_expectation(
        u, half, "char_normalized"
    )


@pytest.mark.parametrize("m", CATALOG, ids=lambda m: m.name)
def test_exact_equals_closed_form(m):
    for p in PROBS:
        for stat in ("char_normalized", "sc_normalized"):
            assert exact_expectation(m, p, stat) == closed_form_expectation(m, p, stat)
        if p < 1:
            assert exact_expectation(m, p, "contraction_char") == closed_form_expectation(
                m, p, "contraction_char"
            )


def test_symbolic_p_matches_substitution():
    m = catalog.get("C4")
    sym = closed_form_expectation(m, P, "sc_normalized")
    assert sym.substitute({VP: Fraction(1, 3)}) == exact_expectation(m, Fraction(1, 3), "sc_normalized")
    assert exact_expectation(m, P, "char_normalized") == closed_form_expectation(m, P, "char_normalized")


def test_per_element_probabilities():
    m = catalog.get("U_2_4")
    probs = {0: Fraction(1, 5), 1: Fraction(1, 2), 2: Fraction(0), 3: Fraction(1)}
    for stat in ("char_normalized", "sc_normalized"):
        assert exact_expectation(m, probs, stat) == closed_form_expectation(m, probs, stat)
    probs[3] = Fraction(2, 3)
    assert exact_expectation(m, probs, "contraction_char") == closed_form_expectation(
        m, probs, "contraction_char"
    )


def test_probability_validation():
    u = make_uniform(1, 2)
    with pytest.raises(ValueError):
        element_probabilities(u, Fraction(3, 2))
    with pytest.raises(ValueError):
        element_probabilities(u, {0: Fraction(1, 2)})
    with pytest.raises(ValueError, match="exact_expectation"):
        closed_form_expectation(u, 1, "contraction_char")
    with pytest.raises(ValueError):
        statistic(u, "nope", 0)


def test_sc_statistic_is_normalized():
    m = catalog.get("U_2_3")
    # a single point inside a rank-2 ambient
    assert statistic(m, "sc_normalized", 0b001) == L * (L + X)
    assert statistic(m, "sc_normalized", 0b111) == size_corank(m)


# -- Monte Carlo -------------------------------------------------------------------------

def test_monte_carlo_single_trial_is_the_sampled_statistic():
    g = make_vector_space(1, 2)
    probs = element_probabilities(g, Fraction(1, 2))
    res = monte_carlo(g, Fraction(1, 2), "char_normalized", {VL: 2}, trials=1, seed=7)
    t = sample_subset(g, probs, 7, 0)
    assert res.estimate == statistic(g, "char_normalized", t).evaluate({VL: 2})
    assert math.isnan(res.stderr)


def test_monte_carlo_all_kept():
    m = catalog.get("C3")
    res = monte_carlo(m, 1, "char_normalized", {VL: 3}, trials=50, seed=1)
    assert res.stderr == 0
    assert res.estimate == characteristic(m).evaluate({VL: 3})


def test_monte_carlo_is_deterministic_and_close():
    g = make_vector_space(1, 2)
    a = monte_carlo(g, Fraction(1, 2), "char_normalized", {VL: 2}, trials=2000, seed=3)
    b = monte_carlo(g, Fraction(1, 2), "char_normalized", {VL: 2}, trials=2000, seed=3)
    assert a == b
    assert abs(float(a.estimate) - 0.75) <= 4 * a.stderr


def test_monte_carlo_trial_streams_are_independent_of_count():
    g = catalog.get("U_2_4")
    probs = element_probabilities(g, Fraction(1, 3))
    first = [sample_subset(g, probs, 11, k) for k in range(20)]
    assert first == [sample_subset(g, probs, 11, k) for k in range(20)]
    assert len(set(first)) > 1


def test_monte_carlo_rejects_symbolic_and_empty():
    g = make_vector_space(1, 2)
    with pytest.raises(ValueError):
        monte_carlo(g, P, "char_normalized", {VL: 2}, trials=5)
    with pytest.raises(ValueError):
        monte_carlo(g, Fraction(1, 2), "char_normalized", {VL: 2}, trials=0)
