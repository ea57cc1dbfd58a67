"""Random submatroids and random contractions.

Each element ``e`` is kept independently with probability ``p_e``.  The
exact expectations sum over all 2^n subsets with rational weights; the
closed forms evaluate a single subset-corank polynomial.  Monte Carlo is
provided to illustrate the probabilistic reading, not to compute.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping

import numpy as np

from .invariants import _check_cap, characteristic, normalized, size_corank, subset_corank
from .matroid import Matroid, MatroidError, members, submasks
from .poly import L, X, XI, MultiPoly, poly_sum

STATISTICS = ("char_normalized", "sc_normalized", "contraction_char")


def element_probabilities(m: Matroid, p) -> Dict[int, object]:
    """Normalize ``p`` (one value, or a mapping keyed by element label) to a dict.

    Numeric probabilities must lie in [0, 1]; polynomial ones (e.g. the
    variable ``p``) are passed through.
    """
    if isinstance(p, Mapping):
        missing = [lab for lab in m.labels if lab not in p]
        if missing:
            raise ValueError(f"no probability given for elements {missing}")
        probs = {lab: p[lab] for lab in m.labels}
    else:
        probs = {lab: p for lab in m.labels}
    for lab, v in probs.items():
        if isinstance(v, MultiPoly):
            continue
        v = Fraction(v)
        if not 0 <= v <= 1:
            raise ValueError(f"probability {v} for element {lab} is outside [0, 1]")
        probs[lab] = v
    return probs


def subset_probability(m: Matroid, probs: Mapping[int, object], t: int):
    out = 1
    for i, lab in enumerate(m.labels):
        out = out * (probs[lab] if t >> i & 1 else 1 - probs[lab])
    return out


def statistic(m: Matroid, stat: str, t: int) -> MultiPoly:
    """Value of the statistic on the sampled subset ``t``."""
    if stat == "char_normalized":
        sub = m.restrict(t)
        return normalized(characteristic(sub, L), m.r, sub.r)
    if stat == "sc_normalized":
        sub = m.restrict(t)
        return normalized(size_corank(sub, X, L), m.r, sub.r)
    if stat == "contraction_char":
        return characteristic(m.contract(t), XI)
    raise ValueError(f"unknown statistic {stat!r}; choose from {', '.join(STATISTICS)}")


def exact_expectation(m: Matroid, p, stat: str) -> MultiPoly:
    """sum_T P(T) * stat(T) over all subsets, with exact rational weights."""
    _check_cap(m)
    probs = element_probabilities(m, p)
    return poly_sum(
        MultiPoly._lift(subset_probability(m, probs, t)) * statistic(m, stat, t)
        for t in range(1 << m.n)
    )


def closed_form_expectation(m: Matroid, p, stat: str) -> MultiPoly:
    """The same expectation from one subset-corank polynomial.

    char_normalized -> SC(M; -p_e, l);  sc_normalized -> SC(M; p_e x, l);
    contraction_char -> prod(1 - p_e) * SC(M; p_e/(1-p_e) - 1, xi), which
    needs every p_e < 1.
    """
    probs = element_probabilities(m, p)
    if stat == "char_normalized":
        return subset_corank(m, lambda e: -MultiPoly._lift(probs[e]), L)
    if stat == "sc_normalized":
        return subset_corank(m, lambda e: MultiPoly._lift(probs[e]) * X, L)
    if stat == "contraction_char":
        for lab, v in probs.items():
            if isinstance(v, MultiPoly):
                raise ValueError("the contraction closed form needs numeric probabilities")
            if v == 1:
                raise ValueError(
                    f"p = 1 for element {lab}: the contraction closed form divides by 1 - p; "
                    "use exact_expectation instead"
                )
        scale = math.prod((1 - v for v in probs.values()), start=Fraction(1))
        return subset_corank(m, lambda e: probs[e] / (1 - probs[e]) - 1, XI) * scale
    raise ValueError(f"unknown statistic {stat!r}; choose from {', '.join(STATISTICS)}")


# -- direct counting oracles for random vector sets ------------------------------------

def count_spanning_subsets(m: Matroid, t: int) -> int:
    """Number of A inside T with rank(A) = rank(M)."""
    return sum(1 for a in submasks(t) if m.rank(a) == m.r)


def exact_spanning_expectation(m: Matroid, p) -> Fraction:
    probs = element_probabilities(m, p)
    return sum(
        (subset_probability(m, probs, t) * count_spanning_subsets(m, t) for t in range(1 << m.n)),
        Fraction(0),
    )


def count_distinguishing_tuples(vectors, q: int, d: int, s: int) -> int:
    """Number of s-tuples of functionals on GF(q)^d such that no vector in
    ``vectors`` is killed by all of them (brute force over q^(sd) tuples)."""
    functionals = list(itertools.product(range(q), repeat=d))
    count = 0
    for tup in itertools.product(functionals, repeat=s):
        if all(
            any(sum(a * b for a, b in zip(f, v)) % q for f in tup) for v in vectors
        ):
            count += 1
    return count


def exact_distinguisher_expectation(d: int, q: int, s: int, p) -> Fraction:
    """Expected number of distinguishing s-tuples for a random subset of
    GF(q)^d, by enumerating subsets and tuples directly."""
    vecs = list(itertools.product(range(q), repeat=d))
    n = len(vecs)
    if n > 16:
        raise MatroidError(f"q**d = {n} is too large for the direct oracle (max 16)")
    p = Fraction(p)
    total = Fraction(0)
    for t in range(1 << n):
        chosen = [vecs[i] for i in members(t)]
        k = len(chosen)
        total += p**k * (1 - p) ** (n - k) * count_distinguishing_tuples(chosen, q, d, s)
    return total


# -- Monte Carlo ---------------------------------------------------------------------

@dataclass
class MonteCarloResult:
    estimate: Fraction
    stderr: float
    trials: int
    seed: int

    def __float__(self):
        return float(self.estimate)


def sample_subset(m: Matroid, probs: Mapping[int, object], seed: int, trial: int) -> int:
    """Subset drawn for ``trial``; depends only on (seed, trial)."""
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))
    u = rng.random(m.n)
    return sum(1 << i for i, lab in enumerate(m.labels) if u[i] < probs[lab])


def monte_carlo(
    m: Matroid,
    p,
    stat: str,
    at: Mapping,
    trials: int,
    seed: int = 0,
) -> MonteCarloResult:
    """Sample mean and standard error of ``stat`` evaluated at the point ``at``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    probs = element_probabilities(m, p)
    if any(isinstance(v, MultiPoly) for v in probs.values()):
        raise ValueError("Monte Carlo needs numeric probabilities")
    cache: Dict[int, Fraction] = {}
    values = []
    for trial in range(trials):
        t = sample_subset(m, probs, seed, trial)
        if t not in cache:
            cache[t] = Fraction(statistic(m, stat, t).evaluate(at))
        values.append(cache[t])
    mean = sum(values, Fraction(0)) / trials
    if trials > 1:
        stderr = float(np.std(np.array(values, dtype=float), ddof=1)) / math.sqrt(trials)
    else:
        stderr = float("nan")
    return MonteCarloResult(mean, stderr, trials, seed)
