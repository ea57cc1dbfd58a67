"""q-analogs and closed forms for random sets of vectors in GF(q)^d.

Conventions: ``[d!]_q = (1-q)(1-q^2)...(1-q^d)`` (alternating in sign for
q >= 2) and ``C(d,k)_q = [d!]_q / ([k!]_q [(d-k)!]_q)``, which is the usual
positive Gaussian binomial.  Only prime ``q`` is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Union

from .matroid import VECTOR_CAP, MatroidError, is_prime
from .poly import L, X, Z, MultiPoly, VZ, poly_sum

Number = Union[int, Fraction]


def _check_q(q: int):
    if not is_prime(q):
        raise MatroidError(f"only prime q is supported, got q={q}")


@dataclass(frozen=True)
class QParams:
    d: int
    q: int
    s: int = 0
    p: Fraction = Fraction(0)

    def __post_init__(self):
        _check_q(self.q)
        if self.d < 0 or self.s < 0:
            raise ValueError("d and s must be nonnegative")
        p = Fraction(self.p)
        if not 0 <= p <= 1:
            raise ValueError(f"probability {p} is outside [0, 1]")
        object.__setattr__(self, "p", p)


def q_factorial(d: int, q: int) -> int:
    out = 1
    for i in range(1, d + 1):
        out *= 1 - q**i
    return out


def gaussian_binomial(d: int, k: int, q: int) -> int:
    """C(d,k)_q; zero when k < 0 or k > d."""
    if k < 0 or k > d:
        return 0
    num = q_factorial(d, q)
    den = q_factorial(k, q) * q_factorial(d - k, q)
    quot, rem = divmod(num, den)
    assert rem == 0
    return quot


def falling(lam, q: int, m: int):
    """(lam - 1)(lam - q)...(lam - q^(m-1)); the empty product for m = 0."""
    out = 1
    for i in range(m):
        out = out * (lam - q**i)
    return out


def sc_closed_form(d: int, q: int, space: str = "affine") -> MultiPoly:
    """SC(GF(q)^d; x, l) or SC(PG(d-1,q); x, l) as a sum over flat ranks j.

    The j-th term is C(d,j)_q * chi(GF(q)^(d-j); l) * (x+1)^(points in a rank-j flat).
    """
    _check_q(q)
    if q**d > VECTOR_CAP:
        raise MatroidError(f"q**d = {q**d} exceeds the vector cap of {VECTOR_CAP}")
    if space not in ("affine", "projective"):
        raise ValueError(f"space must be 'affine' or 'projective', not {space!r}")
    terms = []
    for j in range(d + 1):
        size = q**j if space == "affine" else (q**j - 1) // (q - 1)
        terms.append(
            (falling(L, q, d - j) * (X + 1) ** size).scale(gaussian_binomial(d, j, q))
        )
    return poly_sum(terms)


def expected_distinguishers(d: int, p, q: int, s: int):
    """Expected number of distinguishing s-tuples of functionals for V(d, q, p).

    Equals SC(GF(q)^d; -p, q^s).  Written as a sum over k = d - (flat rank):
    sum_k C(d,k)_q (q^s - 1)(q^s - q)...(q^s - q^(k-1)) (1-p)^(q^(d-k)).
    ``p`` may be a number or a polynomial.
    """
    _check_q(q)
    qs = q**s
    total = 0
    for k in range(min(d, s) + 1):
        total = total + (1 - p) ** (q ** (d - k)) * (
            gaussian_binomial(d, k, q) * falling(qs, q, k)
        )
    return total


def distinguishers_as_printed(d: int, p, q: int, s: int):
    """sum_{k<=s} C(d,k)_q q^C(k,2) (1-p)^(q^(s-k)), kept for comparison only.

    It agrees with :func:`expected_distinguishers` for d = s = 1 but not in
    general (e.g. d = 2, q = 2, s = 2, p = 0 gives 6 instead of 16).
    """
    _check_q(q)
    total = 0
    for k in range(s + 1):
        total = total + (1 - p) ** (q ** (s - k)) * (
            gaussian_binomial(d, k, q) * q ** comb(k, 2)
        )
    return total


def expected_spanning(d: int, p, q: int):
    """Expected number of spanning subsets of V(d, q, p); equals SC(GF(q)^d; p, 0)."""
    _check_q(q)
    total = 0
    for k in range(d + 1):
        total = total + (1 + p) ** (q ** (d - k)) * (
            gaussian_binomial(d, k, q) * (-1) ** k * q ** comb(k, 2)
        )
    return total


def euler_expand(s: int, q: int) -> Dict[str, object]:
    """Both sides of prod_{i<s} (1 - z q^i) = sum_k (-1)^k C(s,k)_q q^C(k,2) z^k."""
    _check_q(q)
    product = MultiPoly.const(1)
    for i in range(s):
        product = product * (1 - Z * q**i)
    expansion = poly_sum(
        (Z**k).scale((-1) ** k * gaussian_binomial(s, k, q) * q ** comb(k, 2))
        for k in range(s + 1)
    )
    return {"product": product, "sum": expansion, "equal": product == expansion}


def _egf(coeffs, q: int, d_max: int) -> MultiPoly:
    """sum_{d <= d_max} coeffs(d) z^d / [d!]_q."""
    return poly_sum(
        MultiPoly._lift(coeffs(d)) * Z**d * Fraction(1, q_factorial(d, q))
        for d in range(d_max + 1)
    )


def genfun_factorization_check(d_max: int, q: int, s: int = 1, p=Fraction(1, 3), which: str = "D"):
    """Compare sum_d f(d) z^d/[d!]_q with the truncated two-factor product.

    ``which``: ``D`` (expected distinguishers), ``sp`` (expected spanning
    sets) or ``sc`` (SC of GF(q)^d with symbolic x, l).  For ``D`` the
    finite factor is prod_{i<s} (1 - z q^i); the report also records
    whether prod_{i<s} (1 + z q^i) would have matched.
    """
    _check_q(q)
    if not 0 <= d_max <= 6:
        raise MatroidError(f"d_max must be between 0 and 6, got {d_max}")
    p = Fraction(p)
    report: Dict[str, object] = {"which": which, "d_max": d_max, "q": q}
    if which == "D":
        lhs = _egf(lambda d: expected_distinguishers(d, p, q, s), q, d_max)
        series = _egf(lambda m: (1 - p) ** (q**m), q, d_max)
        finite = MultiPoly.const(1)
        plus = MultiPoly.const(1)
        for i in range(s):
            finite = finite * (1 - Z * q**i)
            plus = plus * (1 + Z * q**i)
        rhs = (finite * series).truncate(VZ, d_max)
        report["plus_sign_product_matches"] = (plus * series).truncate(VZ, d_max) == lhs
        report.update(s=s, p=p)
    elif which == "sp":
        lhs = _egf(lambda d: expected_spanning(d, p, q), q, d_max)
        left = _egf(lambda m: (-1) ** m * q ** comb(m, 2), q, d_max)
        right = _egf(lambda m: (1 + p) ** (q**m), q, d_max)
        rhs = (left * right).truncate(VZ, d_max)
        report["p"] = p
    elif which == "sc":
        lhs = _egf(lambda d: sc_closed_form(d, q), q, d_max)
        left = _egf(lambda m: falling(L, q, m), q, d_max)
        right = _egf(lambda m: (X + 1) ** (q**m), q, d_max)
        rhs = (left * right).truncate(VZ, d_max)
    else:
        raise ValueError(f"which must be 'D', 'sp' or 'sc', not {which!r}")
    lc, rc = lhs.coefficients_in(VZ), rhs.coefficients_in(VZ)
    report["coefficients"] = [
        {"k": k, "lhs": lc.get(k, MultiPoly()), "rhs": rc.get(k, MultiPoly())}
        for k in range(d_max + 1)
    ]
    report["equal"] = lhs == rhs
    return report
