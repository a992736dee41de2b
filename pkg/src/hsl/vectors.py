"""Free vector spaces over structure carriers with exact rational
coefficients: the zeta bilinear form, the Möbius-inverted basis, and the
coproduct/duality/product identities as executable checks.

No floating point anywhere; every check is an exact identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import AdjunctionUnverified, AmbientMismatch
from .posets import PosetView, mobius


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value)}")


class FreeVector:
    """Sparse exact-rational combination of structures on one label set."""

    __slots__ = ("family_tag", "labels", "terms")

    def __init__(self, family_tag: str, labels, terms=()):
        self.family_tag = family_tag
        self.labels = frozenset(labels)
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for x, c in items:
            c = _as_fraction(c)
            if not c:
                continue
            if x.labels != self.labels:
                raise AmbientMismatch(
                    f"term {x.encode()} not on labels {sorted(self.labels)}")
            new = self.terms.get(x, Fraction(0)) + c
            if new:
                self.terms[x] = new
            else:
                self.terms.pop(x, None)

    @classmethod
    def basis(cls, family_tag: str, x) -> "FreeVector":
        return cls(family_tag, x.labels, [(x, 1)])

    @classmethod
    def zero(cls, family_tag: str, labels) -> "FreeVector":
        return cls(family_tag, labels)

    def _check_ambient(self, other: "FreeVector"):
        if (self.family_tag, self.labels) != (other.family_tag, other.labels):
            raise AmbientMismatch("vectors live in different ambient spaces")

    def coefficient(self, x) -> Fraction:
        return self.terms.get(x, Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].encode())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FreeVector") -> "FreeVector":
        self._check_ambient(other)
        out = dict(self.terms)
        for x, c in other.terms.items():
            new = out.get(x, Fraction(0)) + c
            if new:
                out[x] = new
            else:
                out.pop(x, None)
        return FreeVector(self.family_tag, self.labels, out)

    def __sub__(self, other: "FreeVector") -> "FreeVector":
        return self + (-1) * other

    def __neg__(self) -> "FreeVector":
        return (-1) * self

    def __mul__(self, scalar) -> "FreeVector":
        scalar = _as_fraction(scalar)
        return FreeVector(self.family_tag, self.labels,
                          {x: scalar * c for x, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, FreeVector)
                and self.family_tag == other.family_tag
                and self.labels == other.labels
                and self.terms == other.terms)

    def __repr__(self):
        if self.is_zero:
            return "FreeVector(0)"
        bits = [f"{c}*{x.encode()}" for x, c in self.items()]
        return "FreeVector(" + " + ".join(bits) + ")"

    def map_structures(self, fn, labels=None) -> "FreeVector":
        """Linear extension of a structure-to-structure map."""
        out: dict = {}
        target = None
        for x, c in self.terms.items():
            y = fn(x)
            target = y.labels if target is None else target
            out[y] = out.get(y, Fraction(0)) + c
        if labels is None:
            labels = self.labels if target is None else target
        return FreeVector(self.family_tag, labels, out)

    def bind(self, fn) -> "FreeVector":
        """Linear extension of a structure-to-vector map."""
        out = None
        for x, c in self.terms.items():
            piece = fn(x) * c
            out = piece if out is None else out + piece
        if out is None:
            return FreeVector(self.family_tag, self.labels)
        return out

    def ambient_string(self) -> str:
        return f"{self.family_tag}:" + ",".join(map(str, sorted(self.labels)))

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient_string(),
            "terms": {x.encode(): str(c) for x, c in self.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


class TensorVector:
    """Exact-rational combination of structure pairs on a fixed split."""

    __slots__ = ("family_tag", "left_labels", "right_labels", "terms")

    def __init__(self, family_tag: str, left_labels, right_labels, terms=()):
        self.family_tag = family_tag
        self.left_labels = frozenset(left_labels)
        self.right_labels = frozenset(right_labels)
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (a, b), c in items:
            c = _as_fraction(c)
            if not c:
                continue
            if a.labels != self.left_labels or b.labels != self.right_labels:
                raise AmbientMismatch("tensor factor on the wrong label set")
            key = (a, b)
            new = self.terms.get(key, Fraction(0)) + c
            if new:
                self.terms[key] = new
            else:
                self.terms.pop(key, None)

    def _check_ambient(self, other: "TensorVector"):
        if ((self.family_tag, self.left_labels, self.right_labels)
                != (other.family_tag, other.left_labels, other.right_labels)):
            raise AmbientMismatch("tensors live on different splits")

    def coefficient(self, a, b) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def items(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0].encode(), kv[0][1].encode()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorVector") -> "TensorVector":
        self._check_ambient(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            new = out.get(key, Fraction(0)) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return TensorVector(self.family_tag, self.left_labels, self.right_labels, out)

    def __mul__(self, scalar) -> "TensorVector":
        scalar = _as_fraction(scalar)
        return TensorVector(self.family_tag, self.left_labels, self.right_labels,
                            {k: scalar * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-1) * other

    def __eq__(self, other):
        return (isinstance(other, TensorVector)
                and self.family_tag == other.family_tag
                and self.left_labels == other.left_labels
                and self.right_labels == other.right_labels
                and self.terms == other.terms)

    def __repr__(self):
        if self.is_zero:
            return "TensorVector(0)"
        bits = [f"{c}*{a.encode()}(x){b.encode()}" for (a, b), c in self.items()]
        return "TensorVector(" + " + ".join(bits) + ")"


def tensor(v: FreeVector, w: FreeVector) -> TensorVector:
    if v.family_tag != w.family_tag:
        raise AmbientMismatch("tensor factors from different families")
    terms = {}
    for a, ca in v.terms.items():
        for b, cb in w.terms.items():
            terms[(a, b)] = ca * cb
    return TensorVector(v.family_tag, v.labels, w.labels, terms)


def comult_vector(fam, v: FreeVector, S, T) -> TensorVector:
    """Linear extension of the split map to a vector."""
    S, T = frozenset(S), frozenset(T)
    out: dict = {}
    for x, c in v.terms.items():
        pair = fam.comult(x, S, T)
        out[pair] = out.get(pair, Fraction(0)) + c
    return TensorVector(fam.tag, S, T, out)


def mult_tensor(fam, tv: TensorVector, mult=None) -> FreeVector:
    """Linear extension of a merge map to a tensor."""
    mult = mult or fam.mult
    out: dict = {}
    for (a, b), c in tv.terms.items():
        y = mult(a, b)
        out[y] = out.get(y, Fraction(0)) + c
    return FreeVector(fam.tag, tv.left_labels | tv.right_labels, out)


def inverted_basis(p: PosetView, x) -> FreeVector:
    """omega_x = sum over y >= x of mu(x, y) * y.

    The coefficient of x itself is always 1."""
    if p.family_tag is None:
        raise AmbientMismatch("poset view does not carry a family tag")
    terms = [(y, mobius(p, x, y)) for y in p.upset(x)]
    return FreeVector(p.family_tag, x.labels, terms)


def corank_inverted_basis(p: PosetView, x) -> FreeVector:
    """The down-set twin: sum over y <= x of mu(y, x) * y."""
    return inverted_basis(p.reverse(), x)


def zeta_pairing(v: FreeVector, w: FreeVector, p: PosetView) -> Fraction:
    """Bilinear extension of zeta(a, b) = 1 if a <= b else 0."""
    v._check_ambient(w)
    total = Fraction(0)
    for a, ca in v.terms.items():
        for b, cb in w.terms.items():
            if p.leq(a, b):
                total += ca * cb
    return total


def tensor_zeta_pairing(tv: TensorVector, tw: TensorVector,
                        p_left: PosetView, p_right: PosetView) -> Fraction:
    """Product-of-zetas pairing on a tensor split."""
    tv._check_ambient(tw)
    total = Fraction(0)
    for (a1, a2), ca in tv.terms.items():
        for (b1, b2), cb in tw.terms.items():
            if p_left.leq(a1, b1) and p_right.leq(a2, b2):
                total += ca * cb
    return total


def delta_on_inverted_check(adj, x, S, T):
    """Check Delta_{S,T}(omega_x) against the sum of omega_{x1} (x) omega_{x2}
    over all pairs with x1 box x2 = x.

    Requires the adjunction to have been verified for this split; returns
    (equal, lhs, rhs)."""
    S, T = frozenset(S), frozenset(T)
    if not adj.is_verified(S, T):
        raise AdjunctionUnverified(
            f"run adjunction verification for split {sorted(S)}|{sorted(T)} first")
    fam = adj.family
    p = adj.poset(x.labels)
    lhs = comult_vector(fam, inverted_basis(p, x), S, T)

    ps = adj.poset(S)
    pt = adj.poset(T)
    kx = p.key(x)
    rhs = TensorVector(fam.tag, S, T)
    for x1 in fam.enumerate(S, p.budget):
        for x2 in fam.enumerate(T, p.budget):
            if p.key(adj.box(x1, x2)) == kx:
                rhs = rhs + tensor(inverted_basis(ps, x1), inverted_basis(pt, x2))
    return lhs == rhs, lhs, rhs


@dataclass
class DualityReport:
    family: str
    n: int
    ok: bool
    witness: tuple | None = None


def duality_pairing_check(fam, poset_for, box, n: int) -> DualityReport:
    """Check <Delta_{S,T}(x), y (x) z> == <x, y box z> for all structures
    and splits on label sets of size up to n.

    `poset_for(labels)` supplies the order; the tensor pairing is the
    product of zeta pairings."""
    from .species import subsets
    for k in range(n + 1):
        labels = frozenset(range(k))
        p = poset_for(labels)
        for S in subsets(labels):
            T = labels - S
            ps = poset_for(S)
            pt = poset_for(T)
            for x in p.carrier():
                x1, x2 = fam.comult(x, S, T)
                for y in ps.carrier():
                    for z in pt.carrier():
                        lhs = int(ps.leq(x1, y)) * int(pt.leq(x2, z))
                        rhs = int(p.leq(x, box(y, z)))
                        if lhs != rhs:
                            return DualityReport(fam.tag, n, False, (x, y, z, S, T))
    return DualityReport(fam.tag, n, True)


def product_of_inverted_check(fam, poset_for, x, y):
    """Check omega_x * omega_y == omega_{x * y} by expanding both sides.

    Returns (equal, lhs, rhs)."""
    ps = poset_for(x.labels)
    pt = poset_for(y.labels)
    lhs = mult_tensor(fam, tensor(inverted_basis(ps, x), inverted_basis(pt, y)))
    p = poset_for(x.labels | y.labels)
    rhs = inverted_basis(p, fam.mult(x, y))
    return lhs == rhs, lhs, rhs
