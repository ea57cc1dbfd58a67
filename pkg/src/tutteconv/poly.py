"""Sparse multivariate polynomials with exact integer or rational coefficients.

Variables come from a small set of families: per-element ``x<e>`` and
``y<e>`` (or their bivariate versions ``x`` and ``y``), a symbolic
probability ``p`` / ``p<e>``, and the scalars ``l`` (lambda), ``xi`` and
``z`` (series variable).

A polynomial is stored as a dict mapping monomials to nonzero
coefficients.  A monomial is a sorted tuple of ``(key, exponent)`` pairs,
where ``key`` is the integer sort key of a variable.  Because zero
coefficients are never stored, structural equality is mathematical
equality.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

FAMILIES = ("x", "y", "p", "l", "xi", "z")
_FAMILY_RANK = {f: i for i, f in enumerate(FAMILIES)}
_SLOT = 1 << 24

Monomial = Tuple[Tuple[int, int], ...]
Coeff = Union[int, Fraction]


class Variable:
    """A polynomial variable ``family`` with an optional element index."""

    __slots__ = ("family", "index", "key")

    def __init__(self, family: str, index: int | None = None):
        if family not in _FAMILY_RANK:
            raise ValueError(f"unknown variable family {family!r}")
        if index is not None and not 0 <= index < _SLOT - 1:
            raise ValueError(f"variable index out of range: {index}")
        self.family = family
        self.index = index
        self.key = _FAMILY_RANK[family] * _SLOT + (0 if index is None else index + 1)

    @classmethod
    def from_key(cls, key: int) -> "Variable":
        fam, idx = divmod(key, _SLOT)
        return cls(FAMILIES[fam], None if idx == 0 else idx - 1)

    @property
    def name(self) -> str:
        return self.family if self.index is None else f"{self.family}{self.index}"

    def __eq__(self, other):
        return isinstance(other, Variable) and other.key == self.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(("Variable", self.key))

    def __repr__(self):
        return f"Variable({self.name})"


_NAME_RE = re.compile(r"^(xi|x|y|p|l|z)(\d*)$")


def variable_from_name(name: str) -> Variable:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"not a variable name: {name!r}")
    fam, idx = m.groups()
    return Variable(fam, int(idx) if idx else None)


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        d[k] = d.get(k, 0) + e
    return tuple(sorted(d.items()))


class MultiPoly:
    """Immutable sparse polynomial.  Supports ``+ - * **`` with ints and
    Fractions on either side."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _norm(c)
                if c:
                    clean[tuple(sorted(m))] = c
        self._terms: Dict[Monomial, Coeff] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "MultiPoly":
        # terms must already be canonical: sorted monomials, no zeros
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _norm(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: Variable | str, index: int | None = None) -> "MultiPoly":
        if isinstance(v, str):
            v = Variable(v, index)
        return cls._raw({((v.key, 1),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[Variable, int], coeff=1) -> "MultiPoly":
        m = tuple(sorted((v.key, e) for v, e in exps.items() if e))
        if any(e < 0 for _, e in m):
            raise ValueError("negative exponent")
        return cls({m: coeff})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set:
        return {Variable.from_key(k) for m in self._terms for k, _ in m}

    def degree(self, v: Variable | None = None) -> int:
        """Total degree, or the degree in ``v``.  The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if v is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(v.key, 0) for m in self._terms)

    def coeff(self, exps: Mapping[Variable, int] | None = None) -> Coeff:
        m = tuple(sorted((v.key, e) for v, e in (exps or {}).items() if e))
        return self._terms.get(m, 0)

    def constant(self) -> Coeff:
        return self._terms.get((), 0)

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "MultiPoly":
        c = _norm(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({m: _norm(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly()
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Monomial, Coeff] = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return MultiPoly._raw({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"MultiPoly({render(self)!r})"

    def __str__(self):
        return render(self)

    # -- transformations --------------------------------------------------
    def substitute(self, bindings: Mapping[Variable, object]) -> "MultiPoly":
        """Simultaneous substitution; unbound variables are kept."""
        if not bindings:
            return self
        bound = {}
        for v, val in bindings.items():
            val = self._lift(val)
            if val is None:
                raise TypeError(f"cannot bind {v} to {type(val).__name__}")
            bound[v.key] = val
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(k, e):
            if (k, e) not in powers:
                powers[(k, e)] = bound[k] ** e
            return powers[(k, e)]

        acc: Dict[Monomial, Coeff] = {}
        for m, c in self._terms.items():
            keep = tuple((k, e) for k, e in m if k not in bound)
            term = MultiPoly._raw({keep: c})
            for k, e in m:
                if k in bound:
                    term = term * power(k, e)
                    if not term._terms:
                        break
            _accumulate(acc, term)
        return MultiPoly._raw({m: _norm(c) for m, c in acc.items() if c})

    def evaluate(self, bindings: Mapping[Variable, object]) -> Coeff:
        """Substitute numbers for every variable and return the exact value."""
        out = self.substitute(bindings)
        if not out.is_constant():
            missing = ", ".join(sorted(v.name for v in out.variables()))
            raise ValueError(f"unbound variables remain: {missing}")
        return out.constant()

    def truncate(self, v: Variable, max_deg: int) -> "MultiPoly":
        if max_deg < 0:
            raise ValueError("max_deg must be >= 0")
        return MultiPoly._raw(
            {m: c for m, c in self._terms.items() if dict(m).get(v.key, 0) <= max_deg}
        )

    def coefficients_in(self, v: Variable) -> Dict[int, "MultiPoly"]:
        """Split into ``{k: coefficient of v^k}``."""
        out: Dict[int, Dict[Monomial, Coeff]] = {}
        for m, c in self._terms.items():
            k = dict(m).get(v.key, 0)
            rest = tuple((a, e) for a, e in m if a != v.key)
            out.setdefault(k, {})[rest] = c
        return {k: MultiPoly._raw(t) for k, t in out.items()}


def _accumulate(acc: Dict[Monomial, Coeff], p: MultiPoly, scale: Coeff = 1) -> None:
    for m, c in p._terms.items():
        acc[m] = acc.get(m, 0) + c * scale


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    acc: Dict[Monomial, Coeff] = {}
    for p in polys:
        _accumulate(acc, p)
    return MultiPoly._raw({m: _norm(c) for m, c in acc.items() if c})


def poly_prod(polys: Iterable[MultiPoly]) -> MultiPoly:
    out = MultiPoly.const(1)
    for p in polys:
        out = out * p
    return out


def substitute(p: MultiPoly, bindings: Mapping[Variable, object]) -> MultiPoly:
    return p.substitute(bindings)


def truncate_series(p: MultiPoly, v: Variable, max_deg: int) -> MultiPoly:
    return p.truncate(v, max_deg)


# Common variables.
X = MultiPoly.var("x")
Y = MultiPoly.var("y")
P = MultiPoly.var("p")
L = MultiPoly.var("l")
XI = MultiPoly.var("xi")
Z = MultiPoly.var("z")
VX, VY, VP, VL, VXI, VZ = (Variable(f) for f in FAMILIES)


def xe(e: int) -> MultiPoly:
    return MultiPoly.var("x", e)


def ye(e: int) -> MultiPoly:
    return MultiPoly.var("y", e)


# -- text format --------------------------------------------------------------

def _sort_monomials(monos: Iterable[Monomial]) -> list:
    monos = list(monos)
    keys = sorted({k for m in monos for k, _ in m})
    pos = {k: i for i, k in enumerate(keys)}

    def dense(m):
        vec = [0] * len(keys)
        for k, e in m:
            vec[pos[k]] = e
        return tuple(vec)

    return sorted(monos, key=dense, reverse=True)


def format_rational(c: Coeff) -> str:
    c = _norm(c)
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def render(p: MultiPoly) -> str:
    """Canonical text, e.g. ``l^2*xi^2 - 3*l*xi + 2``."""
    if not p._terms:
        return "0"
    parts = []
    for m in _sort_monomials(p._terms):
        c = p._terms[m]
        neg = c < 0
        a = -c if neg else c
        factors = [
            Variable.from_key(k).name + (f"^{e}" if e > 1 else "") for k, e in m
        ]
        if not factors:
            body = format_rational(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = format_rational(a) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+\-\s][^+\-]*)")


def parse(text: str) -> MultiPoly:
    """Inverse of :func:`render` (also accepts loosely spaced input)."""
    s = text.strip()
    if s == "0":
        return MultiPoly()
    pos = 0
    acc: Dict[Monomial, Coeff] = {}
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, body = m.groups()
        pos = m.end()
        coeff: Coeff = 1
        exps: Dict[int, int] = {}
        for factor in body.strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coeff = coeff * Fraction(factor)
                continue
            name, _, e = factor.partition("^")
            v = variable_from_name(name)
            exps[v.key] = exps.get(v.key, 0) + (int(e) if e else 1)
        if sign == "-":
            coeff = -coeff
        mono = tuple(sorted(exps.items()))
        acc[mono] = acc.get(mono, 0) + coeff
    return MultiPoly(acc)


def to_json(p: MultiPoly) -> list:
    """List of ``{"coeff": "num/den", "exponents": {name: e}}`` records."""
    out = []
    for m in _sort_monomials(p._terms):
        out.append(
            {
                "coeff": format_rational(p._terms[m]),
                "exponents": {Variable.from_key(k).name: e for k, e in m},
            }
        )
    return out


def from_json(records) -> MultiPoly:
    if isinstance(records, str):
        records = json.loads(records)
    acc = {}
    for r in records:
        mono = tuple(
            sorted((variable_from_name(n).key, int(e)) for n, e in r["exponents"].items())
        )
        acc[mono] = acc.get(mono, 0) + Fraction(r["coeff"])
    return MultiPoly(acc)
