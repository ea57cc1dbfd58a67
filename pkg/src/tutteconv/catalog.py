"""Named test matroids.

Every base entry also has a ``<name>_dual`` companion.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, List

import numpy as np

from .matroid import (
    Matroid,
    MatroidError,
    make_explicit,
    make_graphic,
    make_linear,
    make_projective,
    make_uniform,
    make_vector_space,
    mask,
    popcount,
)


def cycle_graph(k: int) -> Matroid:
    return make_graphic(k, [(i, (i + 1) % k) for i in range(k)], name=f"C{k}")


def complete_graph(k: int) -> Matroid:
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    return make_graphic(k, edges, name=f"K{k}")


def fano() -> Matroid:
    cols = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1) if a or b or c]
    return make_linear(2, cols, name="Fano")


def _base_entries() -> Dict[str, Callable[[], Matroid]]:
    out: Dict[str, Callable[[], Matroid]] = {}
    for n in range(7):
        for r in range(n + 1):
            out[f"U_{r}_{n}"] = lambda r=r, n=n: make_uniform(r, n)
    for k in (3, 4, 5):
        out[f"C{k}"] = lambda k=k: cycle_graph(k)
    out["K4"] = lambda: complete_graph(4)
    out["Fano"] = fano
    for d in (1, 2, 3):
        out[f"GF2_{d}"] = lambda d=d: make_vector_space(d, 2)
    out["GF3_2"] = lambda: make_vector_space(2, 3)
    out["PG1_2"] = lambda: make_projective(2, 2)
    out["PG2_2"] = lambda: make_projective(3, 2)
    return out


_BASE = _base_entries()


def names(include_duals: bool = True) -> List[str]:
    base = list(_BASE)
    return base + [f"{n}_dual" for n in base] if include_duals else base


def get(name: str) -> Matroid:
    if name in _BASE:
        m = _BASE[name]()
        m.name = name
        return m
    if name.endswith("_dual") and name[: -len("_dual")] in _BASE:
        m = get(name[: -len("_dual")]).dual()
        m.name = name
        return m
    raise MatroidError(f"no catalog matroid named {name!r}")


def all_matroids(max_size: int | None = None, include_duals: bool = True) -> List[Matroid]:
    out = []
    for n in names(include_duals):
        m = get(n)
        if max_size is None or m.n <= max_size:
            out.append(m)
    return out


def random_explicit(seed: int, max_n: int = 7) -> Matroid:
    """A seeded random matroid, converted to an explicit (axiom-checked) rank table.

    Cycles through three families so the sample is not all representable
    over one field: random matrices over GF(2), GF(3) or GF(5), random
    multigraphs, and sparse paving matroids with random circuit-hyperplanes.
    """
    rng = np.random.default_rng(seed)
    n = int(rng.integers(min(2, max_n), max_n + 1))
    family = seed % 3
    if family == 0:
        p = int(rng.choice([2, 3, 5]))
        rows = int(rng.integers(0, 5))
        cols = rng.integers(0, p, size=(n, rows)).tolist()
        base = make_linear(p, cols)
    elif family == 1:
        v = int(rng.integers(1, 6))
        edges = rng.integers(0, v, size=(n, 2)).tolist()
        base = make_graphic(v, edges)
    else:
        r = int(rng.integers(min(2, n), n + 1))
        chosen: List[int] = []
        if 0 < r < n:
            cands = [mask(c) for c in itertools.combinations(range(n), r)]
            rng.shuffle(cands)
            for c in cands:
                if all(popcount(c & o) <= r - 2 for o in chosen):
                    chosen.append(c)
                if len(chosen) >= 4:
                    break
        hyper = set(chosen)
        table = [r - 1 if a in hyper else min(popcount(a), r) for a in range(1 << n)]
        return make_explicit(table, name=f"random{seed}")
    return make_explicit(base.rank_table(), name=f"random{seed}")
