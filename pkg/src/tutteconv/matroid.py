"""Matroids given by an exact rank oracle.

Subsets of the ground set are plain ints used as bitmasks: bit ``i`` set
means the ``i``-th element (local index) is in the subset.  Every matroid
also carries ``labels``, the original element ids, which survive taking
minors so that per-element variables line up across ``M``, ``M|T`` and
``M/T``.

Matroids with at most ``TABLE_CAP`` elements tabulate their rank function
eagerly at construction; larger ones answer rank queries on demand.
Either way a :class:`Matroid` is never mutated after ``__init__``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

TABLE_CAP = 20  # ground sets up to 2**20 subsets get a rank table
VECTOR_CAP = 2**13  # largest q**d accepted by make_vector_space / make_projective


class MatroidError(ValueError):
    pass


# -- bitmask helpers -----------------------------------------------------------

def mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def members(m: int) -> List[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def submasks(m: int):
    """All submasks of ``m``, including 0 and ``m``."""
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def popcount(m: int) -> int:
    return m.bit_count()


def _mask_map(positions: Sequence[int]) -> List[int]:
    """``out[A]`` is the parent mask of the local mask ``A`` over ``positions``."""
    k = len(positions)
    out = [0] * (1 << k)
    for a in range(1, 1 << k):
        low = a & -a
        out[a] = out[a ^ low] | (1 << positions[low.bit_length() - 1])
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- GF(p) linear algebra --------------------------------------------------------

def _reduce(vec: List[int], basis: Sequence[Tuple[int, Tuple[int, ...]]], p: int) -> List[int]:
    v = list(vec)
    for piv, row in basis:
        c = v[piv]
        if c:
            v = [(a - c * b) % p for a, b in zip(v, row)]
    return v


def _add_to_basis(basis, vec, p):
    """Return the extended basis, or ``None`` if ``vec`` is in the span."""
    v = _reduce(vec, basis, p)
    for piv, c in enumerate(v):
        if c:
            inv = pow(c, p - 2, p)
            return basis + ((piv, tuple((a * inv) % p for a in v)),)
    return None


def rank_mod_p(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of a list of equal-length vectors."""
    basis: tuple = ()
    for v in vectors:
        nb = _add_to_basis(basis, v, p)
        if nb is not None:
            basis = nb
    return len(basis)


def row_reduce(rows: Sequence[Sequence[int]], p: int) -> List[List[int]]:
    """Reduced row echelon form over GF(p), zero rows dropped."""
    m = [[a % p for a in r] for r in rows]
    ncols = len(m[0]) if m else 0
    out = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(a * inv) % p for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    out = m[:r]
    return out


def row_space(rows: Sequence[Sequence[int]], p: int, ncols: int) -> List[Tuple[int, ...]]:
    """Every vector of the row space (as tuples), ``p**rank`` of them."""
    basis = row_reduce(rows, p) if rows else []
    out = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        v = [0] * ncols
        for c, row in zip(coeffs, basis):
            if c:
                v = [(a + c * b) % p for a, b in zip(v, row)]
        out.append(tuple(v))
    return out


# -- the matroid -----------------------------------------------------------------

@dataclass(frozen=True)
class FlatLattice:
    """Flats ordered by (rank, mask), with ``mobius[X] = mu(closure(0), X)``."""

    flats: Tuple[int, ...]
    ranks: Dict[int, int]
    mobius: Dict[int, int]
    bottom: int
    top: int = field(default=0)

    def __contains__(self, x: int) -> bool:
        return x in self.ranks

    def __len__(self):
        return len(self.flats)

    def below(self, x: int) -> List[int]:
        return [y for y in self.flats if y & x == y]


class Matroid:
    """Rank-oracle matroid on local elements ``0..n-1``.

    Build instances with the ``make_*`` constructors below rather than
    calling this directly.
    """

    def __init__(
        self,
        n: int,
        rank_fn: Callable[[int], int],
        labels: Optional[Sequence[int]] = None,
        name: str = "",
        backend: Optional[dict] = None,
        table: Optional[Sequence[int]] = None,
    ):
        self.n = n
        self.labels: Tuple[int, ...] = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise MatroidError("labels must have one entry per element")
        self.name = name
        self.backend = backend or {"type": "explicit"}
        if table is None and n <= TABLE_CAP:
            table = [rank_fn(a) for a in range(1 << n)]
        self._table: Optional[Tuple[int, ...]] = None if table is None else tuple(table)
        self._rank_fn = rank_fn
        self.r = self.rank((1 << n) - 1)

    # basic oracle ------------------------------------------------------------
    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def tabulated(self) -> bool:
        return self._table is not None

    def rank_table(self) -> Tuple[int, ...]:
        if self._table is None:
            raise MatroidError(f"{self.n} elements exceeds the rank-table cap of {TABLE_CAP}")
        return self._table

    def rank(self, a: int) -> int:
        if a & ~self.ground:
            raise MatroidError("subset is not contained in the ground set")
        if self._table is not None:
            return self._table[a]
        return self._rank_fn(a)

    def __len__(self):
        return self.n

    def __repr__(self):
        label = self.name or self.backend.get("type", "matroid")
        return f"<Matroid {label}: n={self.n}, r={self.r}>"

    def same_rank_function(self, other: "Matroid") -> bool:
        return self.n == other.n and all(
            self.rank(a) == other.rank(a) for a in range(1 << self.n)
        )

    # closure and special elements -----------------------------------------------
    def closure(self, a: int) -> int:
        ra = self.rank(a)
        out = a
        for e in range(self.n):
            b = 1 << e
            if not a & b and self.rank(a | b) == ra:
                out |= b
        return out

    def is_flat(self, a: int) -> bool:
        return self.closure(a) == a

    def loops(self) -> int:
        return self.closure(0)

    def isthmuses(self) -> int:
        g = self.ground
        return mask(e for e in range(self.n) if self.rank(g ^ (1 << e)) == self.r - 1)

    # minors -----------------------------------------------------------------
    def _derived(self, positions, rank_fn, name, backend):
        labels = [self.labels[i] for i in positions]
        table = None
        if len(positions) <= TABLE_CAP and self._table is not None:
            table = [rank_fn(a) for a in range(1 << len(positions))]
        return Matroid(len(positions), rank_fn, labels, name, backend, table)

    def restrict(self, t: int) -> "Matroid":
        """``M|T`` on the elements of ``T`` (in increasing local order)."""
        if t & ~self.ground:
            raise MatroidError("restriction set is not contained in the ground set")
        positions = members(t)
        if self._table is not None:
            mp = _mask_map(positions)
            tab = self._table
            fn = lambda a: tab[mp[a]]
        else:
            fn = lambda a: self.rank(_lift_mask(a, positions))
        return self._derived(positions, fn, f"{self.name}|T" if self.name else "", {"type": "restriction"})

    def delete(self, t: int) -> "Matroid":
        return self.restrict(self.ground & ~t)

    def contract(self, t: int) -> "Matroid":
        """``M/T`` on ``E \\ T``: rank(A) = rank(A | T) - rank(T)."""
        if t & ~self.ground:
            raise MatroidError("contraction set is not contained in the ground set")
        positions = members(self.ground & ~t)
        rt = self.rank(t)
        if self._table is not None:
            mp = _mask_map(positions)
            tab = self._table
            fn = lambda a: tab[mp[a] | t] - rt
        else:
            fn = lambda a: self.rank(_lift_mask(a, positions) | t) - rt
        return self._derived(positions, fn, f"{self.name}/T" if self.name else "", {"type": "contraction"})

    def dual(self) -> "Matroid":
        g, r = self.ground, self.r
        if self._table is not None:
            tab = self._table
            fn = lambda a: popcount(a) + tab[g ^ a] - r
        else:
            fn = lambda a: popcount(a) + self.rank(g ^ a) - r
        name = f"{self.name}*" if self.name else ""
        return self._derived(list(range(self.n)), fn, name, {"type": "dual", "of": self.backend})

    # flats ---------------------------------------------------------------------
    def flats(self) -> List[int]:
        """All flats, sorted by (rank, mask)."""
        self._require_table("flat enumeration")
        found = {self.closure(a) for a in range(1 << self.n)}
        return sorted(found, key=lambda x: (self.rank(x), x))

    def flat_lattice(self) -> FlatLattice:
        fl = self.flats()
        mu: Dict[int, int] = {}
        for x in fl:
            below = [y for y in mu if y & x == y]
            mu[x] = 1 if not below else -sum(mu[y] for y in below)
        return FlatLattice(
            flats=tuple(fl),
            ranks={x: self.rank(x) for x in fl},
            mobius=mu,
            bottom=fl[0],
            top=self.ground,
        )

    def mobius(self, x: int) -> int:
        if not self.is_flat(x):
            raise MatroidError("mobius is only defined on flats")
        return self.flat_lattice().mobius[x]

    def cyclic_flats(self) -> List[int]:
        """Flats ``X`` such that ``M|X`` has no isthmus."""
        out = []
        for x in self.flats():
            rx = self.rank(x)
            if all(self.rank(x ^ (1 << e)) == rx for e in members(x)):
                out.append(x)
        return out

    def _require_table(self, what):
        if self._table is None:
            raise MatroidError(
                f"{what} needs at most {TABLE_CAP} elements; this matroid has {self.n}"
            )


def _lift_mask(a: int, positions: Sequence[int]) -> int:
    out = 0
    for i, pos in enumerate(positions):
        if a >> i & 1:
            out |= 1 << pos
    return out


# -- constructors ----------------------------------------------------------------

def make_uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(
        n,
        lambda a: min(popcount(a), r),
        name=f"U_{r}_{n}",
        backend={"type": "uniform", "r": r, "n": n},
    )


def make_graphic(vertex_count: int, edges: Sequence[Sequence[int]], name: str = "") -> Matroid:
    """Cycle matroid of a multigraph; self-loops and parallel edges allowed."""
    edges = [tuple(e) for e in edges]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise MatroidError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")

    def rank_fn(a):
        parent = list(range(vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in members(a):
            u, v = find(edges[i][0]), find(edges[i][1])
            if u != v:
                parent[u] = v
                r += 1
        return r

    return Matroid(
        len(edges),
        rank_fn,
        name=name,
        backend={"type": "graphic", "vertices": vertex_count, "edges": [list(e) for e in edges]},
    )


def make_linear(
    p: int, columns: Sequence[Sequence[int]], name: str = "", backend: Optional[dict] = None
) -> Matroid:
    """Column matroid of a matrix over GF(p), given as a list of columns."""
    if not is_prime(p):
        raise MatroidError(f"only prime fields are supported, got p={p}")
    cols = [tuple(int(a) % p for a in c) for c in columns]
    if len({len(c) for c in cols}) > 1:
        raise MatroidError("all columns must have the same length")
    n = len(cols)

    def rank_fn(a):
        return rank_mod_p([cols[i] for i in members(a)], p)

    table = None
    if n <= TABLE_CAP:
        # incremental elimination: basis[A] extends basis[A minus its top element]
        bases: List[tuple] = [()] * (1 << n)
        table = [0] * (1 << n)
        for a in range(1, 1 << n):
            top = a.bit_length() - 1
            rest = a ^ (1 << top)
            nb = _add_to_basis(bases[rest], cols[top], p)
            bases[a] = bases[rest] if nb is None else nb
            table[a] = len(bases[a])
        del bases
    return Matroid(
        n,
        rank_fn,
        name=name,
        backend=backend or {"type": "linear", "p": p, "columns": [list(c) for c in cols]},
        table=table,
    )


def _check_space(d: int, q: int):
    if not is_prime(q):
        raise MatroidError(f"only prime q is supported, got q={q}")
    if d < 0:
        raise MatroidError("dimension must be nonnegative")
    if q**d > VECTOR_CAP:
        raise MatroidError(f"q**d = {q**d} exceeds the vector cap of {VECTOR_CAP}")


def space_vectors(d: int, q: int) -> List[Tuple[int, ...]]:
    """All of GF(q)^d, zero vector first."""
    return list(itertools.product(range(q), repeat=d))


def projective_points(d: int, q: int) -> List[Tuple[int, ...]]:
    """One representative (first nonzero coordinate 1) per 1-dim subspace."""
    return [v for v in space_vectors(d, q) if any(v) and next(a for a in v if a) == 1]


def make_vector_space(d: int, q: int) -> Matroid:
    _check_space(d, q)
    return make_linear(
        q, space_vectors(d, q), f"GF{q}_{d}", {"type": "vector_space", "d": d, "q": q}
    )


def make_projective(d: int, q: int) -> Matroid:
    """PG(d-1, q)."""
    _check_space(d, q)
    return make_linear(
        q, projective_points(d, q), f"PG{d - 1}_{q}", {"type": "projective", "d": d, "q": q}
    )


def make_explicit(ranks: Sequence[int], labels=None, name: str = "", check: bool = True) -> Matroid:
    """Matroid from a full rank table (``len(ranks) == 2**n``)."""
    size = len(ranks)
    n = size.bit_length() - 1
    if size != 1 << n:
        raise MatroidError("rank table length must be a power of two")
    if n > TABLE_CAP:
        raise MatroidError(f"{n} elements exceeds the rank-table cap of {TABLE_CAP}")
    ranks = [int(v) for v in ranks]
    m = Matroid(n, ranks.__getitem__, labels, name, {"type": "explicit"}, ranks)
    if check:
        bad = rank_axiom_violations(m, limit=1)
        if bad:
            raise MatroidError(f"not a matroid rank function: {bad[0]}")
    return m


def rank_axiom_violations(m: Matroid, limit: int = 10) -> List[str]:
    """Exhaustive check of the rank axioms; returns up to ``limit`` messages.

    Submodularity is checked over all pairs when ``n <= 10``; above that
    the equivalent local form r(A+e) + r(A+f) >= r(A+e+f) + r(A) is used.
    """
    tab = np.asarray(m.rank_table(), dtype=np.int64)
    n = m.n
    out: List[str] = []
    if tab[0] != 0:
        out.append("rank(empty) != 0")
    idx = np.arange(1 << n)
    for e in range(n):
        b = 1 << e
        without = idx[(idx & b) == 0]
        diff = tab[without | b] - tab[without]
        for a in without[(diff < 0) | (diff > 1)][:limit]:
            out.append(f"adding element {e} to {members(int(a))} changes rank by {int(tab[a | b] - tab[a])}")
    if n <= 10:
        for a in range(1 << n):
            lhs = tab[a | idx] + tab[a & idx]
            rhs = tab[a] + tab
            for b in idx[lhs > rhs][:limit]:
                out.append(f"submodularity fails for {members(a)}, {members(int(b))}")
            if len(out) >= limit:
                break
    else:
        for e, f in itertools.combinations(range(n), 2):
            be, bf = 1 << e, 1 << f
            a = idx[(idx & (be | bf)) == 0]
            bad = tab[a | be] + tab[a | bf] < tab[a | be | bf] + tab[a]
            for x in a[bad][:limit]:
                out.append(f"local submodularity fails at {members(int(x))} with {e}, {f}")
    return out[:limit]


def from_json(obj: dict) -> Matroid:
    """Build a matroid from its JSON description (see the README)."""
    kind = obj.get("type")
    try:
        if kind == "uniform":
            return make_uniform(int(obj["r"]), int(obj["n"]))
        if kind == "graphic":
            return make_graphic(int(obj["vertices"]), obj["edges"], name=obj.get("name", ""))
        if kind == "linear":
            return make_linear(int(obj["p"]), obj["columns"], name=obj.get("name", ""))
        if kind == "vector_space":
            return make_vector_space(int(obj["d"]), int(obj["q"]))
        if kind == "projective":
            return make_projective(int(obj["d"]), int(obj["q"]))
        if kind == "explicit":
            return make_explicit(obj["ranks"], name=obj.get("name", ""))
        if kind == "dual":
            return from_json(obj["of"]).dual()
        if kind == "catalog":
            from .catalog import get

            return get(obj["name"])
    except KeyError as exc:
        raise MatroidError(f"matroid JSON of type {kind!r} is missing field {exc}") from None
    raise MatroidError(f"unknown matroid type {kind!r}")
