"""Polynomial invariants computed by brute force over all subsets.

The bivariate invariants take the values to substitute for their two
slots as arguments (defaulting to the variables ``x`` and ``l``), so
specializations such as ``SC(M|T; -x, l)`` are computed directly instead
of by substituting into a symbolic result.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Dict, Mapping, Union

from .matroid import Matroid, MatroidError, TABLE_CAP, popcount
from .poly import L, X, Y, MultiPoly, poly_sum, xe

SUBSET_CAP = TABLE_CAP

INVARIANT_KINDS = (
    "subset_corank",
    "size_corank",
    "rank_generating",
    "tutte_paper",
    "tutte_standard",
    "characteristic",
    "char_normalized",
    "sc_normalized",
)

Value = Union[MultiPoly, int]


def _check_cap(m: Matroid, cap: int = SUBSET_CAP):
    if m.n > cap:
        raise MatroidError(f"{m.n} elements exceeds the subset-enumeration cap of {cap}")


def corank_profile(m: Matroid) -> Counter:
    """Counter of ``(|A|, rank(A))`` over all subsets ``A``."""
    _check_cap(m)
    tab = m.rank_table()
    return Counter((popcount(a), tab[a]) for a in range(1 << m.n))


class _Powers:
    def __init__(self, base):
        self.base = MultiPoly._lift(base)
        self.cache = [MultiPoly.const(1)]

    def __getitem__(self, k):
        while len(self.cache) <= k:
            self.cache.append(self.cache[-1] * self.base)
        return self.cache[k]


def size_corank(m: Matroid, x: Value = X, lam: Value = L) -> MultiPoly:
    """SC(M; x, lam) = sum over A of x^|A| lam^(r - rank A)."""
    xp, lp = _Powers(x), _Powers(lam)
    return poly_sum(
        (xp[k] * lp[m.r - rk]).scale(c) for (k, rk), c in sorted(corank_profile(m).items())
    )


def rank_generating(m: Matroid, x: Value = X, lam: Value = L) -> MultiPoly:
    """R(M; x, lam) = sum over A of x^(|A| - rank A) lam^(r - rank A)."""
    xp, lp = _Powers(x), _Powers(lam)
    return poly_sum(
        (xp[k - rk] * lp[m.r - rk]).scale(c)
        for (k, rk), c in sorted(corank_profile(m).items())
    )


def _weights(m: Matroid, x) -> list:
    if x is None:
        return [xe(lab) for lab in m.labels]
    if callable(x):
        return [MultiPoly._lift(x(lab)) for lab in m.labels]
    if isinstance(x, Mapping):
        return [MultiPoly._lift(x[lab]) for lab in m.labels]
    return [MultiPoly._lift(x)] * m.n


def subset_corank(
    m: Matroid,
    x: Union[None, Mapping[int, Value], Callable[[int], Value], Value] = None,
    lam: Value = L,
) -> MultiPoly:
    """Multivariate SC(M; x_e, lam) = sum over A of prod_{e in A} x_e * lam^(r - rank A).

    ``x`` gives the value of ``x_e`` keyed by element label: ``None`` for
    the variables ``x<label>``, a mapping, a callable, or one value for all.
    """
    _check_cap(m)
    w = _weights(m, x)
    tab = m.rank_table()
    size = 1 << m.n
    prods = [MultiPoly.const(1)] * size
    by_corank: Dict[int, list] = {}
    for a in range(size):
        if a:
            low = a & -a
            prods[a] = prods[a ^ low] * w[low.bit_length() - 1]
        by_corank.setdefault(m.r - tab[a], []).append(prods[a])
    lp = _Powers(lam)
    return poly_sum(poly_sum(ps) * lp[c] for c, ps in sorted(by_corank.items()))


def tutte(m: Matroid, convention: str = "paper") -> MultiPoly:
    """Tutte polynomial.

    ``paper``: R(M; x-1, l-1), nullity variable ``x`` first, corank variable ``l``.
    ``standard``: the classical T(x, y) with ``x`` marking corank and ``y`` nullity.
    """
    if convention == "paper":
        return rank_generating(m, X - 1, L - 1)
    if convention == "standard":
        return rank_generating(m, Y - 1, X - 1)
    raise ValueError(f"unknown Tutte convention {convention!r}")


def characteristic(m: Matroid, lam: Value = L, route: str = "mobius") -> MultiPoly:
    """chi(M; lam); the zero polynomial when M has a loop."""
    if route == "sc_specialization":
        return size_corank(m, -1, lam)
    if route != "mobius":
        raise ValueError(f"unknown route {route!r}")
    if m.loops():
        return MultiPoly()
    lat = m.flat_lattice()
    lp = _Powers(lam)
    return poly_sum(lp[m.r - lat.ranks[f]].scale(lat.mobius[f]) for f in lat.flats)


def normalized(p: MultiPoly, ambient_rank: int, sub_rank: int, lam: Value = L) -> MultiPoly:
    """lam^(ambient_rank - sub_rank) * p, as used for chi-dagger and SC-dagger."""
    if ambient_rank < sub_rank:
        raise ValueError(f"ambient rank {ambient_rank} is below the submatroid rank {sub_rank}")
    return p * _Powers(lam)[ambient_rank - sub_rank]


def compute(m: Matroid, kind: str) -> MultiPoly:
    """Dispatch by name (``subset_corank``, ``size_corank``, ...)."""
    if kind == "subset_corank":
        return subset_corank(m)
    if kind == "size_corank":
        return size_corank(m)
    if kind == "rank_generating":
        return rank_generating(m)
    if kind == "tutte_paper":
        return tutte(m, "paper")
    if kind == "tutte_standard":
        return tutte(m, "standard")
    if kind == "characteristic":
        return characteristic(m)
    raise ValueError(f"unknown invariant {kind!r}")
