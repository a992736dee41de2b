"""Exact symmetric-function expressions in three bases (complete
homogeneous h, power sum p, monomial m) with conversion to the monomial
expansion at bounded degree.

The monomial expansion in v variables is faithful for degree <= v, so
all equality checks normalize through it; the default of 8 variables
covers degree 6.  Multiplication is supported in the h and p bases
(where products just merge index partitions).
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import EngineError

DEFAULT_NVARS = 8


def _as_partition(lam) -> tuple:
    lam = tuple(sorted((int(v) for v in lam), reverse=True))
    if any(v <= 0 for v in lam):
        raise EngineError(f"partition parts must be positive, got {lam}")
    return lam


def partition_key(lam: tuple) -> str:
    return "+".join(map(str, lam))


def parse_partition_key(text: str) -> tuple:
    if text == "":
        return ()
    return _as_partition(text.split("+"))


class SymFunc:
    """Exact-rational combination of basis elements indexed by integer
    partitions; basis is one of "h", "p", "m"."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=()):
        if basis not in ("h", "p", "m"):
            raise EngineError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, c in items:
            lam = _as_partition(lam)
            c = Fraction(c)
            if not c:
                continue
            new = self.terms.get(lam, Fraction(0)) + c
            if new:
                self.terms[lam] = new
            else:
                self.terms.pop(lam, None)

    @property
    def degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.basis != other.basis:
            raise EngineError("cannot add across bases; expand to monomials first")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            new = out.get(lam, Fraction(0)) + c
            if new:
                out[lam] = new
            else:
                out.pop(lam, None)
        return SymFunc(self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            if self.basis != other.basis or self.basis == "m":
                raise EngineError("products are supported in the h and p bases")
            out: dict = {}
            for lam, c in self.terms.items():
                for mu, d in other.terms.items():
                    nu = _as_partition(lam + mu)
                    out[nu] = out.get(nu, Fraction(0)) + c * d
            return SymFunc(self.basis, out)
        scalar = Fraction(other)
        return SymFunc(self.basis, {lam: scalar * c for lam, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_monomial().terms == other.to_monomial().terms

    def __repr__(self):
        if self.is_zero:
            return f"SymFunc({self.basis}, 0)"
        bits = [f"{c}*{self.basis}[{partition_key(lam)}]" for lam, c in self.items()]
        return " + ".join(bits)

    def to_monomial(self, nvars: int = DEFAULT_NVARS) -> "SymFunc":
        if self.basis == "m":
            return self
        if self.degree > nvars:
            raise EngineError(
                f"monomial expansion in {nvars} variables is only faithful "
                f"up to degree {nvars}")
        poly: dict = {}
        for lam, c in self.terms.items():
            for alpha, k in _basis_product_poly(self.basis, lam, nvars).items():
                poly[alpha] = poly.get(alpha, Fraction(0)) + c * k
        out: dict = {}
        for alpha, c in poly.items():
            # the leading (sorted-descending) exponent vector represents
            # the whole monomial orbit of a symmetric polynomial
            if _is_sorted_desc(alpha):
                lam = tuple(v for v in alpha if v)
                out[lam] = c
        return SymFunc("m", out)

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": {partition_key(lam): str(c) for lam, c in self.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["basis"],
                   [(parse_partition_key(k), Fraction(v))
                    for k, v in data["terms"].items()])


def _is_sorted_desc(alpha: tuple) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


@lru_cache(maxsize=None)
def _generator_poly(basis: str, k: int, nvars: int) -> dict:
    """Full expansion of h_k or p_k as exponent-vector -> coefficient."""
    if k == 0:
        return {(0,) * nvars: Fraction(1)}
    out: dict = {}
    if basis == "h":
        for combo in combinations_with_replacement(range(nvars), k):
            alpha = [0] * nvars
            for i in combo:
                alpha[i] += 1
            out[tuple(alpha)] = Fraction(1)
    elif basis == "p":
        for i in range(nvars):
            alpha = [0] * nvars
            alpha[i] = k
            out[tuple(alpha)] = Fraction(1)
    else:
        raise EngineError(f"no generator expansion for basis {basis!r}")
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for alpha, ca in a.items():
        for beta, cb in b.items():
            gamma = tuple(x + y for x, y in zip(alpha, beta))
            out[gamma] = out.get(gamma, Fraction(0)) + ca * cb
    return out


@lru_cache(maxsize=None)
def _basis_product_poly(basis: str, lam: tuple, nvars: int) -> dict:
    if not lam:
        return {(0,) * nvars: Fraction(1)}
    head = _generator_poly(basis, lam[0], nvars)
    if len(lam) == 1:
        return head
    return _poly_mul(head, _basis_product_poly(basis, lam[1:], nvars))


def h(k: int) -> SymFunc:
    return SymFunc("h", {(k,): 1}) if k else SymFunc("h", {(): 1})


def p(k: int) -> SymFunc:
    return SymFunc("p", {(k,): 1}) if k else SymFunc("p", {(): 1})


def power_sum_monomial(n: int) -> SymFunc:
    """p_n expanded in the monomial basis: exactly m_(n)."""
    return SymFunc("m", {(n,): 1})


@lru_cache(maxsize=None)
def newton_p_in_h(n: int) -> SymFunc:
    """p_n written in the h basis through the Newton recurrence
    n*h_n = sum over i of p_i * h_{n-i}."""
    if n < 1:
        raise EngineError("power sums are indexed by positive integers")
    total = SymFunc("h", {(n,): n})
    for i in range(1, n):
        total = total - newton_p_in_h(i) * h(n - i)
    return total


def h_coproduct(sf: SymFunc) -> dict:
    """Coproduct of an h-basis element, extended multiplicatively:
    each h_k splits as the sum of h_i (x) h_{k-i}.

    Returns {(left_partition, right_partition): coefficient}."""
    if sf.basis != "h":
        raise EngineError("coproduct implemented on the h basis")
    out: dict = {}
    for lam, c in sf.terms.items():
        pieces = [((), ())]
        for part in lam:
            grown = []
            for left, right in pieces:
                for i in range(part + 1):
                    new_left = left + (i,) if i else left
                    new_right = right + (part - i,) if part - i else right
                    grown.append((new_left, new_right))
            pieces = grown
        for left, right in pieces:
            key = (_as_partition(left), _as_partition(right))
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}
