"""Exact verification of the convolution-multiplication identities.

Each identity is checked by building both sides as explicit polynomials
and comparing canonical forms.  Sums run over all subsets ``T``, over the
flats, or over the cyclic flats, exactly as the identity is stated; the
``verify_restriction_argument`` helper recomputes the flat-indexed sums
over the wider ranges to confirm that the extra terms vanish.

The per-element identities (1, 4, 5m, 6, 7) are limited to
``MULTI_CAP`` elements and the bivariate ones to ``BI_CAP``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .invariants import characteristic, rank_generating, size_corank, subset_corank
from .matroid import (
    Matroid,
    MatroidError,
    is_prime,
    make_linear,
    members,
    popcount,
    projective_points,
    row_reduce,
    row_space,
    space_vectors,
    submasks,
)
from .poly import L, X, XI, Y, MultiPoly, poly_prod, poly_sum, render, xe, ye

MULTI_CAP = 8
BI_CAP = 12

MULTIVARIATE = ("1", "4", "5m", "6", "7")
BIVARIATE = ("2", "3", "5", "8", "9", "eq4", "eq4_cyclic")
IDENTITY_IDS = ("1", "2", "3", "4", "5", "5m", "6", "7", "8", "9", "eq4", "eq4_cyclic")


@dataclass
class IdentityReport:
    identity: str
    matroid: str
    lhs: MultiPoly
    rhs: MultiPoly
    equal: bool
    terms: Optional[List[Tuple[List[int], MultiPoly]]] = None
    ranges: Optional[Dict[str, MultiPoly]] = None

    def to_dict(self, with_terms: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "matroid": self.matroid,
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "equal": self.equal,
        }
        if self.ranges is not None:
            out["ranges"] = {k: render(v) for k, v in self.ranges.items()}
        if with_terms and self.terms is not None:
            out["terms"] = [{"T": t, "term": render(p)} for t, p in self.terms]
        return out


def _labels(m: Matroid, t: int) -> List[int]:
    return [m.labels[i] for i in members(t)]


def _prod_over(m: Matroid, t: int, f: Callable[[int], MultiPoly]) -> MultiPoly:
    return poly_prod(f(lab) for lab in _labels(m, t))


def _all_subsets(m: Matroid) -> Iterable[int]:
    return range(1 << m.n)


def _sum_terms(m: Matroid, ts: Iterable[int], term: Callable[[int], MultiPoly]):
    terms = []
    for t in ts:
        v = term(t)
        if v:
            terms.append((_labels(m, t), v))
    return poly_sum(v for _, v in terms), terms


def _check_size(m: Matroid, identity: str):
    cap = MULTI_CAP if identity in MULTIVARIATE else BI_CAP
    if m.n > cap:
        raise MatroidError(
            f"identity {identity} is limited to {cap} elements; {m.name or 'matroid'} has {m.n}"
        )


# -- the two sides of each identity ---------------------------------------------------

def _identity1(m):
    lhs = subset_corank(m, lambda e: xe(e) * ye(e), L * XI)

    def term(t):
        return (
            L ** (m.r - m.rank(t))
            * _prod_over(m, t, lambda e: -ye(e))
            * subset_corank(m.restrict(t), lambda e: -xe(e), L)
            * subset_corank(m.contract(t), ye, XI)
        )

    return lhs, _all_subsets(m), term


def _identity2(m):
    lhs = size_corank(m, X * Y, L * XI)

    def term(t):
        return (
            L ** (m.r - m.rank(t))
            * (-Y) ** popcount(t)
            * size_corank(m.restrict(t), -X, L)
            * size_corank(m.contract(t), Y, XI)
        )

    return lhs, _all_subsets(m), term


def _identity3(m):
    lhs = rank_generating(m, X * Y, L * XI)

    def term(t):
        rt = m.rank(t)
        return (
            L ** (m.r - rt)
            * (-Y) ** (popcount(t) - rt)
            * rank_generating(m.restrict(t), -X, -L)
            * rank_generating(m.contract(t), Y, XI)
        )

    return lhs, _all_subsets(m), term


def _identity4(m):
    lhs = subset_corank(m, lambda e: xe(e) * ye(e), XI)

    def term(t):
        return _prod_over(m, t, lambda e: (xe(e) + 1) * ye(e)) * subset_corank(
            m.contract(t), lambda e: -ye(e), XI
        )

    return lhs, _all_subsets(m), term


def _identity5(m):
    lhs = size_corank(m, X, XI)
    return lhs, m.flats(), lambda f: (X + 1) ** popcount(f) * characteristic(m.contract(f), XI)


def _identity5m(m):
    lhs = subset_corank(m, None, XI)

    def term(f):
        return _prod_over(m, f, lambda e: xe(e) + 1) * characteristic(m.contract(f), XI)

    return lhs, m.flats(), term


def _identity6(m):
    lhs = subset_corank(m, lambda e: -ye(e), L)

    def term(t):
        return (
            L ** (m.r - m.rank(t))
            * characteristic(m.restrict(t), L)
            * _prod_over(m, t, ye)
            * _prod_over(m, m.ground ^ t, lambda e: 1 - ye(e))
        )

    return lhs, _all_subsets(m), term


def _identity7(m):
    lhs = subset_corank(m, lambda e: xe(e) * ye(e), L)

    def term(t):
        return (
            L ** (m.r - m.rank(t))
            * subset_corank(m.restrict(t), None, L)
            * _prod_over(m, t, ye)
            * _prod_over(m, m.ground ^ t, lambda e: 1 - ye(e))
        )

    return lhs, _all_subsets(m), term


def _eq4_term(m):
    return lambda t: rank_generating(m.restrict(t), X, -1) * rank_generating(m.contract(t), -1, XI)


def _eq4(m):
    return rank_generating(m, X, XI), _all_subsets(m), _eq4_term(m)


def _eq4_cyclic(m):
    return rank_generating(m, X, XI), m.cyclic_flats(), _eq4_term(m)


def _identity8_term(m):
    return lambda f: (
        (-1) ** popcount(f)
        * characteristic(m.restrict(f).dual(), X)
        * characteristic(m.contract(f), XI)
    )


def _identity8(m):
    lhs = rank_generating(m, -X, -XI) * (-1) ** m.r
    return lhs, m.cyclic_flats(), _identity8_term(m)


def _identity9(m):
    lhs = characteristic(m, L * XI)

    def term(f):
        return (
            L ** (m.r - m.rank(f))
            * characteristic(m.restrict(f), L)
            * characteristic(m.contract(f), XI)
        )

    return lhs, m.flats(), term


_BUILDERS = {
    "1": _identity1,
    "2": _identity2,
    "3": _identity3,
    "4": _identity4,
    "5": _identity5,
    "5m": _identity5m,
    "6": _identity6,
    "7": _identity7,
    "8": _identity8,
    "9": _identity9,
    "eq4": _eq4,
    "eq4_cyclic": _eq4_cyclic,
}


def _normalize_id(identity) -> str:
    key = str(identity).replace("-", "_")
    if key not in _BUILDERS:
        raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITY_IDS)}")
    return key


def identity_sides(m: Matroid, identity) -> Tuple[MultiPoly, MultiPoly]:
    rep = verify(m, identity)
    return rep.lhs, rep.rhs


def verify(m: Matroid, identity) -> IdentityReport:
    """Build both sides of an identity on ``m`` and compare them exactly."""
    key = _normalize_id(identity)
    _check_size(m, key)
    lhs, index_sets, term = _BUILDERS[key](m)
    rhs, terms = _sum_terms(m, index_sets, term)
    return IdentityReport(key, m.name, lhs, rhs, lhs == rhs, terms)


def verify_all(m: Matroid, identities: Iterable[str] = IDENTITY_IDS) -> List[IdentityReport]:
    """Every identity that fits within the size caps for ``m``."""
    out = []
    for key in identities:
        cap = MULTI_CAP if key in MULTIVARIATE else BI_CAP
        if m.n <= cap:
            out.append(verify(m, key))
    return out


def verify_restriction_argument(m: Matroid, identity) -> IdentityReport:
    """Recompute a flat-indexed sum over all subsets, flats, and (for 8 and
    eq4) cyclic flats, and check that every range gives the left side."""
    key = _normalize_id(identity)
    _check_size(m, key)
    if key == "5":
        lhs = size_corank(m, X, XI)
        ranges = {
            "all": poly_sum(
                (X + 1) ** popcount(t) * size_corank(m.contract(t), -1, XI)
                for t in _all_subsets(m)
            ),
            "flats": _sum_terms(m, m.flats(), _identity5(m)[2])[0],
        }
    elif key in ("8", "eq4_cyclic", "eq4"):
        if key == "8":
            lhs, _, term = _identity8(m)
        else:
            lhs, _, term = _eq4(m)
        ranges = {
            "all": _sum_terms(m, _all_subsets(m), term)[0],
            "flats": _sum_terms(m, m.flats(), term)[0],
            "cyclic_flats": _sum_terms(m, m.cyclic_flats(), term)[0],
        }
    else:
        raise ValueError("restriction argument applies to identities 5, 8 and eq4_cyclic")
    equal = all(v == lhs for v in ranges.values())
    return IdentityReport(key, m.name, lhs, ranges["flats"], equal, None, ranges)


def identity3_footnote(m: Matroid) -> Tuple[MultiPoly, MultiPoly]:
    """The two intermediate expressions of the direct proof of Identity 3.

    First: the sum over pairs B, A of the weighted bracket
    sum_{B <= T <= A} (-1)^(|T|-|B|), with the bracket expanded term by
    term.  Second: the regrouped sum over T with both inner sums written out.
    """
    r, n = m.r, m.n
    rk = m.rank
    first = []
    for a in range(1 << n):
        ya = Y ** (popcount(a) - rk(a)) * XI ** (r - rk(a))
        for t in submasks(a):
            for b in submasks(t):
                sign = (-1) ** (popcount(t) - popcount(b))
                first.append(
                    (X ** (popcount(b) - rk(b)) * L ** (r - rk(b)) * ya).scale(sign)
                )
    second = []
    for t in range(1 << n):
        rt = rk(t)
        inner_b = poly_sum(
            (-X) ** (popcount(b) - rk(b)) * (-L) ** (rt - rk(b)) for b in submasks(t)
        )
        outside = m.ground ^ t
        inner_a = poly_sum(
            Y ** ((popcount(a | t) - popcount(t)) - (rk(a | t) - rt))
            * XI ** ((r - rt) - (rk(a | t) - rt))
            for a in submasks(outside)
        )
        second.append(L ** (r - rt) * (-Y) ** (popcount(t) - rt) * inner_b * inner_a)
    return poly_sum(first), poly_sum(second)


# -- (s, t)-duets ---------------------------------------------------------------------

DUET_CAP = 2**13


def representation(m: Matroid, p: int) -> List[List[int]]:
    """A full-row-rank matrix over GF(p) whose columns represent ``m``.

    Supported: linear backends over the same prime, graphic matroids (via a
    signed incidence matrix), uniform matroids that fit in GF(p), and duals
    of any of these.  The result is checked against the rank oracle.
    """
    if not is_prime(p):
        raise MatroidError(f"only prime fields are supported, got {p}")
    rows = _raw_representation(m.backend, m.n, p)
    rows = row_reduce(rows, p) if rows else []
    cols = [[row[j] for row in rows] for j in range(m.n)]
    if not make_linear(p, cols).same_rank_function(m):
        raise MatroidError(f"failed to represent {m.name or 'matroid'} over GF({p})")
    return rows


def _raw_representation(backend: dict, n: int, p: int) -> List[List[int]]:
    kind = backend.get("type")
    if kind in ("linear", "vector_space", "projective"):
        q = backend["p"] if kind == "linear" else backend["q"]
        if q != p:
            raise MatroidError(f"matrix is over GF({q}), not GF({p})")
        cols = _columns_of(backend)
        return [[c[i] for c in cols] for i in range(len(cols[0]) if cols else 0)]
    if kind == "graphic":
        verts, edges = backend["vertices"], backend["edges"]
        rows = [[0] * n for _ in range(verts)]
        for j, (u, v) in enumerate(edges):
            if u != v:
                rows[u][j] = (rows[u][j] + 1) % p
                rows[v][j] = (rows[v][j] - 1) % p
        return rows
    if kind == "uniform":
        r = backend["r"]
        if r == 0:
            return []
        if r == 1:
            return [[1] * n]
        if r == n:
            return [[int(i == j) for j in range(n)] for i in range(r)]
        if n > p + 1:
            raise MatroidError(f"U_{r},{n} is not representable over GF({p})")
        cols = [[pow(a, i, p) for i in range(r)] for a in range(min(n, p))]
        if n == p + 1:
            cols.append([0] * (r - 1) + [1])
        return [[c[i] for c in cols] for i in range(r)]
    if kind == "dual" and "of" in backend:
        inner = row_reduce(_raw_representation(backend["of"], n, p), p)
        return dual_representation(inner, p, n)
    raise MatroidError(f"no representation strategy for backend {kind!r}")


def _columns_of(backend: dict) -> List[List[int]]:
    kind = backend["type"]
    if kind == "linear":
        return backend["columns"]
    if kind == "vector_space":
        return [list(v) for v in space_vectors(backend["d"], backend["q"])]
    return [list(v) for v in projective_points(backend["d"], backend["q"])]


def dual_representation(rows: List[List[int]], p: int, n: int) -> List[List[int]]:
    """Rows spanning the orthogonal complement of the row space of ``rows``."""
    red = row_reduce(rows, p) if rows else []
    pivots = [next(j for j, a in enumerate(row) if a) for row in red]
    out = []
    for j in range(n):
        if j in pivots:
            continue
        w = [0] * n
        w[j] = 1
        for i, piv in enumerate(pivots):
            w[piv] = (-red[i][j]) % p
        out.append(w)
    return out


@dataclass
class DuetConfig:
    """Representations of M over GF(s) (rows ``Q``) and of its dual over GF(t) (rows ``R``)."""

    Q: List[List[int]]
    s: int
    R: List[List[int]]
    t: int
    n: int
    r: int
    sign_convention: str = "size_of_T"

    @classmethod
    def for_matroid(cls, m: Matroid, s: int, t: int, sign_convention: str = "size_of_T"):
        if s ** m.r > DUET_CAP or t ** (m.n - m.r) > DUET_CAP:
            raise MatroidError(f"row-space enumeration exceeds the duet cap of {DUET_CAP}")
        q = representation(m, s)
        r = dual_representation(representation(m, t), t, m.n)
        cols = [[row[j] for row in r] for j in range(m.n)]
        if not make_linear(t, cols).same_rank_function(m.dual()):
            raise MatroidError("R does not represent the dual matroid")
        return cls(q, s, r, t, m.n, m.r, sign_convention)


def duet_counts(cfg: DuetConfig) -> List[dict]:
    """Per-subset counts behind the duet sum.

    For each T: ``u`` counts row-space vectors of Q vanishing exactly on T;
    ``v_columns`` counts nowhere-zero vectors in the row space of the
    column submatrix R|T; ``v_supported`` counts row-space vectors of R
    whose support is exactly T (the other reading of the definition).
    """
    n = cfg.n
    if cfg.s ** len(cfg.Q) > DUET_CAP or cfg.t ** len(cfg.R) > DUET_CAP:
        raise MatroidError(f"row-space enumeration exceeds the duet cap of {DUET_CAP}")
    u_count = [0] * (1 << n)
    for u in row_space(cfg.Q, cfg.s, n):
        u_count[sum(1 << e for e in range(n) if u[e] == 0)] += 1
    rs = row_space(cfg.R, cfg.t, n)
    v_supp = [0] * (1 << n)
    for w in rs:
        v_supp[sum(1 << e for e in range(n) if w[e])] += 1
    rows = []
    for t in range(1 << n):
        idx = members(t)
        restricted = {tuple(w[e] for e in idx) for w in rs}
        v_cols = sum(1 for v in restricted if all(v))
        rows.append(
            {"T": idx, "u": u_count[t], "v_columns": v_cols, "v_supported": v_supp[t]}
        )
    return rows


def _sign(t_size: int, n: int, convention: str) -> int:
    if convention == "size_of_T":
        return (-1) ** t_size
    if convention == "size_of_complement":
        return (-1) ** (n - t_size)
    raise ValueError(f"unknown sign convention {convention!r}")


def duet_signed_sum(cfg: DuetConfig, reading: str = "v_columns", counts=None) -> int:
    """Sum over T of sign(T) * #u(T) * #v(T) for the configured sign convention."""
    counts = counts or duet_counts(cfg)
    return sum(
        _sign(len(row["T"]), cfg.n, cfg.sign_convention) * row["u"] * row[reading]
        for row in counts
    )


def duet_compare(m: Matroid, s: int, t: int) -> dict:
    """Evidence table comparing the duet sums with R(M; t, s).

    Reports every combination of sign convention and reading of ``v``;
    also reports the comparison against R(M; -t, -s).  Nothing is asserted.
    """
    cfg = DuetConfig.for_matroid(m, s, t)
    counts = duet_counts(cfg)
    target = rank_generating(m, t, s).constant()
    target_neg = rank_generating(m, -t, -s).constant()
    sign_r = (-1) ** m.r
    combos = []
    for conv in ("size_of_T", "size_of_complement"):
        cfg.sign_convention = conv
        for reading in ("v_columns", "v_supported"):
            total = duet_signed_sum(cfg, reading, counts)
            combos.append(
                {
                    "sign_convention": conv,
                    "reading": reading,
                    "signed_sum": total,
                    "value": sign_r * total,
                    "matches_R(t,s)": sign_r * total == target,
                    "matches_R(-t,-s)": sign_r * total == target_neg,
                }
            )
    return {
        "matroid": m.name,
        "s": s,
        "t": t,
        "r": m.r,
        "Q": cfg.Q,
        "R": cfg.R,
        "counts": counts,
        "R(t,s)": target,
        "R(-t,-s)": target_neg,
        "conventions": combos,
        "any_match_R(t,s)": any(c["matches_R(t,s)"] for c in combos),
    }
