"""Finite-poset kernel: order views, Möbius functions, intervals,
Galois-connection checks, and graded characteristic evaluations.

All elements are compared through canonical string keys, never through
incidental object ordering.  Möbius values are memoized per view; the
cache is write-once per key, so concurrent readers always observe values
identical to a fresh recomputation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .errors import DEFAULT_BUDGET, CarrierOverflow, NotComparable


def _structure_key(x):
    enc = getattr(x, "encode", None)
    if enc is not None:
        return enc()
    if isinstance(x, tuple):
        return tuple(_structure_key(part) for part in x)
    return str(x)


class PosetView:
    """A partial order over an enumerable carrier.

    Subclasses supply ``leq``, a carrier, and optionally a direct up-set
    oracle; everything else (intervals, Möbius values) derives from those.
    """

    family_tag: str | None = None
    labels: frozenset | None = None

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget
        self._mobius_cache: dict = {}
        self._upset_cache: dict = {}

    def leq(self, x, y) -> bool:
        raise NotImplementedError

    def key(self, x):
        return _structure_key(x)

    def carrier(self) -> tuple:
        raise NotImplementedError

    def upset(self, x) -> tuple:
        kx = self.key(x)
        cached = self._upset_cache.get(kx)
        if cached is None:
            cached = self._compute_upset(x)
            if len(cached) > self.budget:
                raise CarrierOverflow(
                    f"up-set of {kx} has {len(cached)} elements (budget {self.budget})")
            self._upset_cache[kx] = cached
        return cached

    def _compute_upset(self, x) -> tuple:
        return tuple(z for z in self.carrier() if self.leq(x, z))

    def reverse(self) -> "PosetView":
        return _ReversedView(self)

    def _check_budget(self, count: int, what: str):
        if count > self.budget:
            raise CarrierOverflow(f"{what} has {count} elements (budget {self.budget})")


class CarrierPoset(PosetView):
    """Poset over an explicitly enumerable carrier with an order oracle."""

    def __init__(self, carrier_fn: Callable[[], Iterable], leq_fn, *,
                 upset_fn=None, key_fn=None, budget: int = DEFAULT_BUDGET,
                 family_tag: str | None = None, labels: frozenset | None = None):
        super().__init__(budget)
        self._carrier_fn = carrier_fn
        self._leq_fn = leq_fn
        self._upset_fn = upset_fn
        self._key_fn = key_fn
        self._carrier = None
        self.family_tag = family_tag
        self.labels = labels

    def leq(self, x, y) -> bool:
        return self._leq_fn(x, y)

    def key(self, x):
        if self._key_fn is not None:
            return self._key_fn(x)
        return _structure_key(x)

    def carrier(self) -> tuple:
        if self._carrier is None:
            elems = tuple(self._carrier_fn())
            self._check_budget(len(elems), "carrier")
            self._carrier = tuple(sorted(elems, key=self.key))
        return self._carrier

    def _compute_upset(self, x) -> tuple:
        if self._upset_fn is not None:
            elems = tuple(self._upset_fn(x))
            return tuple(sorted(elems, key=self.key))
        return super()._compute_upset(x)


class _ReversedView(PosetView):
    """The opposite order of an existing view."""

    def __init__(self, base: PosetView):
        super().__init__(base.budget)
        self._base = base
        self.family_tag = base.family_tag
        self.labels = base.labels

    def leq(self, x, y) -> bool:
        return self._base.leq(y, x)

    def key(self, x):
        return self._base.key(x)

    def carrier(self) -> tuple:
        return self._base.carrier()

    def reverse(self) -> PosetView:
        return self._base


class ProductPoset(PosetView):
    """Componentwise order on pairs drawn from two views."""

    def __init__(self, left: PosetView, right: PosetView):
        super().__init__(min(left.budget, right.budget))
        self.left = left
        self.right = right
        self._carrier = None

    def leq(self, x, y) -> bool:
        return self.left.leq(x[0], y[0]) and self.right.leq(x[1], y[1])

    def key(self, x):
        return (self.left.key(x[0]), self.right.key(x[1]))

    def carrier(self) -> tuple:
        if self._carrier is None:
            a = self.left.carrier()
            b = self.right.carrier()
            self._check_budget(len(a) * len(b), "product carrier")
            self._carrier = tuple(sorted(((u, v) for u in a for v in b), key=self.key))
        return self._carrier

    def _compute_upset(self, x) -> tuple:
        pairs = [(u, v) for u in self.left.upset(x[0]) for v in self.right.upset(x[1])]
        return tuple(sorted(pairs, key=self.key))


def interval(p: PosetView, x, y) -> tuple:
    """All z with x <= z <= y, deduplicated by canonical key."""
    if not p.leq(x, y):
        raise NotComparable(f"{p.key(x)} and {p.key(y)} are not comparable")
    seen = {}
    for z in p.upset(x):
        if p.leq(z, y):
            seen.setdefault(p.key(z), z)
    return tuple(seen[k] for k in sorted(seen))


def mobius(p: PosetView, x, y) -> int:
    """Möbius value mu(x, y): 1 on the diagonal, else the negated sum of
    mu(x, z) over x <= z < y."""
    if not p.leq(x, y):
        raise NotComparable(f"{p.key(x)} and {p.key(y)} are not comparable")
    return _mobius(p, x, y)


def _mobius(p: PosetView, x, y) -> int:
    kx, ky = p.key(x), p.key(y)
    cached = p._mobius_cache.get((kx, ky))
    if cached is not None:
        return cached
    if kx == ky:
        value = 1
    else:
        value = -sum(_mobius(p, x, z) for z in interval(p, x, y) if p.key(z) != ky)
    p._mobius_cache[(kx, ky)] = value
    return value


@dataclass
class GaloisReport:
    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def check_galois(p: PosetView, q: PosetView, f, g) -> GaloisReport:
    """Check that f: P -> Q and g: Q -> P are order-preserving and satisfy
    f(x) <= y iff x <= g(y) for every pair; on failure report a witness."""
    pc = p.carrier()
    qc = q.carrier()
    for x1 in pc:
        for x2 in p.upset(x1):
            if not q.leq(f(x1), f(x2)):
                return GaloisReport(False, "left map not order-preserving", (x1, x2))
    for y1 in qc:
        for y2 in q.upset(y1):
            if not p.leq(g(y1), g(y2)):
                return GaloisReport(False, "right map not order-preserving", (y1, y2))
    for x in pc:
        for y in qc:
            if q.leq(f(x), y) != p.leq(x, g(y)):
                return GaloisReport(False, "adjunction biconditional fails", (x, y))
    return GaloisReport(True)


def rota_transfer_check(p: PosetView, q: PosetView, f, g, x, b):
    """Compare the two Möbius sums transported along a Galois connection:
    sum of mu_P(x, y) over y >= x with f(y) = b, against
    sum of mu_Q(a, b) over a <= b with g(a) = x.

    Returns (equal, left_sum, right_sum)."""
    kb = q.key(b)
    kx = p.key(x)
    left = sum(mobius(p, x, y) for y in p.upset(x) if q.key(f(y)) == kb)
    right = sum(mobius(q, a, b) for a in q.carrier()
                if q.leq(a, b) and p.key(g(a)) == kx)
    return left == right, left, right


class IntPolynomial:
    """Integer polynomial stored sparsely as exponent -> coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if c:
                    self.coeffs[int(e)] = int(c)

    @classmethod
    def term(cls, coefficient: int, exponent: int) -> "IntPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def falling_factorial(cls, n: int) -> "IntPolynomial":
        """t (t-1) (t-2) ... (t-n+1)."""
        out = cls({0: 1})
        for k in range(n):
            out = out * cls({1: 1, 0: -k})
        return out

    def evaluate(self, t):
        return sum(c * t ** e for e, c in self.coeffs.items())

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(out)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial(out)

    def scale(self, k: int):
        return IntPolynomial({e: k * c for e, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "IntPolynomial(0)"
        parts = [f"{c}*t^{e}" for e, c in sorted(self.coeffs.items(), reverse=True)]
        return "IntPolynomial(" + " + ".join(parts) + ")"

    def to_json(self) -> str:
        return json.dumps({str(e): c for e, c in self.coeffs.items()}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls({int(e): c for e, c in json.loads(text).items()})


def graded_char_poly(p: PosetView, x, y, grading, side: str) -> IntPolynomial:
    """Möbius-weighted rank generating polynomial of the interval [x, y].

    side="lower" weights z by mu(x, z); side="upper" weights z by mu(z, y).
    The exponent of each term is the grading of z."""
    if side not in ("lower", "upper"):
        raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")
    out = IntPolynomial()
    for z in interval(p, x, y):
        mu = mobius(p, x, z) if side == "lower" else mobius(p, z, y)
        out = out + IntPolynomial.term(mu, grading(z))
    return out


def graded_char_eval(p: PosetView, x, y, grading, side: str, t: int) -> int:
    return graded_char_poly(p, x, y, grading, side).evaluate(t)


def mobius_matrix_oracle(p: PosetView):
    """Invert the zeta matrix of the carrier by back substitution.

    Independent of the recursive Möbius computation; intended for
    cross-checking in tests.  Returns {(key_x, key_y): value}."""
    elems = list(p.carrier())
    n = len(elems)
    order = sorted(range(n), key=lambda i: sum(1 for j in range(n) if p.leq(elems[j], elems[i])))
    mu = {}
    for ii, i in enumerate(order):
        for j in order[:ii + 1][::-1]:
            if not p.leq(elems[j], elems[i]):
                continue
            if i == j:
                mu[(p.key(elems[j]), p.key(elems[i]))] = Fraction(1)
                continue
            total = Fraction(0)
            for k in range(n):
                if k != j and p.leq(elems[j], elems[k]) and p.leq(elems[k], elems[i]):
                    total += mu.get((p.key(elems[k]), p.key(elems[i])), Fraction(0))
            mu[(p.key(elems[j]), p.key(elems[i]))] = -total
    return {pair: int(v) for pair, v in mu.items()}
