"""Orbit quotients of labeled structures (the passage to unlabeled
generating objects) and the symmetric-function bridge: power sums from
Möbius inversion over the partition order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import CarrierOverflow, DEFAULT_BUDGET, EngineError
from .posets import IntPolynomial, mobius
from .species import Family, subsets
from .symfunc import SymFunc, power_sum_monomial

_MAX_ORBIT_DEGREE = 7


@dataclass(frozen=True)
class OrbitClass:
    """Relabeling orbit of a structure, stored as its encoding-minimal
    representative on labels 0..n-1."""

    family_tag: str
    degree: int
    rep: object

    def encode(self) -> str:
        return self.rep.encode()

    def __repr__(self):
        return f"[{self.encode()}]"


def orbit_canonicalize(fam: Family, x) -> OrbitClass:
    """Minimize the encoding over all relabelings onto 0..n-1."""
    n = len(x.labels)
    if n > _MAX_ORBIT_DEGREE:
        raise CarrierOverflow(
            f"orbit minimization over {n}! relabelings is out of budget")
    elems = sorted(x.labels)
    best = None
    for image in permutations(range(n)):
        candidate = fam.relabel(dict(zip(elems, image)), x)
        if best is None or candidate.encode() < best.encode():
            best = candidate
    return OrbitClass(fam.tag, n, best)


def fock_coproduct(fam: Family, oc: OrbitClass) -> dict:
    """Coproduct in the orbit quotient: sum over all ordered two-block
    splits (trivial ones included) of the canonicalized split images.

    Returns {(OrbitClass, OrbitClass): Fraction}."""
    x = oc.rep
    out: dict = {}
    for S in subsets(x.labels):
        T = x.labels - S
        a, b = fam.comult(x, S, T)
        key = (orbit_canonicalize(fam, a), orbit_canonicalize(fam, b))
        out[key] = out.get(key, Fraction(0)) + 1
    return out


def fock_mult(fam: Family, left: OrbitClass, right: OrbitClass) -> OrbitClass:
    shift = {i: i + left.degree for i in range(right.degree)}
    moved = fam.relabel(shift, right.rep)
    return orbit_canonicalize(fam, fam.mult(left.rep, moved))


def fock_primitive_check(fam: Family, vector: dict) -> bool:
    """True when the reduced coproduct (both trivial splits dropped) of a
    homogeneous orbit combination vanishes."""
    degrees = {oc.degree for oc in vector}
    if len(degrees) > 1:
        raise EngineError("primitive check needs a homogeneous combination")
    total: dict = {}
    for oc, c in vector.items():
        c = Fraction(c)
        for (a, b), k in fock_coproduct(fam, oc).items():
            if a.degree == 0 or b.degree == 0:
                continue
            total[(a, b)] = total.get((a, b), Fraction(0)) + c * k
    return all(v == 0 for v in total.values())


def integer_partition_of(partition_structure) -> tuple:
    """Block-size shape of a set partition, sorted descending."""
    return tuple(sorted((len(b) for b in partition_structure.blocks), reverse=True))


def symfunc_bridge(lam) -> SymFunc:
    """Image of the orbit basis element indexed by an integer partition:
    the product of (part! * h_part) over the parts.

    The part! scaling is the unique one under which the map also respects
    coproducts; the inverse scaling h_part / part! fails that check in
    degree 2 (see the bridge tests)."""
    lam = tuple(sorted((int(v) for v in lam), reverse=True))
    coeff = 1
    for part in lam:
        coeff *= factorial(part)
    return SymFunc("h", {lam: coeff})


@dataclass
class PowerSumReport:
    n: int
    image_h: SymFunc
    image_monomial: SymFunc
    proportional: bool
    scalar: Fraction | None
    printed_expression_status: str  # "exact" | "proportional" | "neither"
    printed_expression: SymFunc

    def lines(self) -> list[str]:
        out = [f"power-sum recovery at degree {self.n}:"]
        if self.proportional:
            out.append(f"  image is {self.scalar} * p_{self.n}")
        else:
            out.append("  image is NOT proportional to the power sum")
        out.append(f"  unscaled printed expression: {self.printed_expression_status}")
        return out


def power_sum_identity_check(n: int, budget: int = DEFAULT_BUDGET) -> PowerSumReport:
    """Push the inverted basis element of the full-block partition through
    the orbit quotient and the h-basis bridge, then compare its monomial
    expansion with the power sum p_n.

    Also evaluates the same Möbius sum without the factorial scaling,
    divided by the Möbius value of the full interval, and classifies it
    against p_n (exact / proportional / neither)."""
    from .families import PARTITIONS
    if n < 1:
        raise EngineError("degree must be positive")
    labels = frozenset(range(n))
    view = PARTITIONS.poset(labels, budget)
    carrier = view.carrier()
    bottom = next(q for q in carrier if len(q.blocks) == 1)
    top = next(q for q in carrier if len(q.blocks) == n)

    image = SymFunc("h")
    printed = SymFunc("h")
    for tau in carrier:
        mu = mobius(view, bottom, tau)
        lam = integer_partition_of(tau)
        image = image + mu * symfunc_bridge(lam)
        printed = printed + SymFunc("h", {lam: mu})
    printed = printed * Fraction(1, mobius(view, bottom, top))

    image_m = image.to_monomial()
    target = power_sum_monomial(n)
    proportional = set(image_m.terms) == {(n,)}
    scalar = image_m.terms.get((n,)) if proportional else None

    printed_m = printed.to_monomial()
    if printed_m == target:
        status = "exact"
    elif set(printed_m.terms) == {(n,)}:
        status = "proportional"
    else:
        status = "neither"
    return PowerSumReport(n, image, image_m, proportional, scalar, status, printed)


_EXPONENTS = {
    "blocks": lambda ell, n: ell,
    "blocks-1": lambda ell, n: ell - 1,
    "n-blocks": lambda ell, n: n - ell,
}


@dataclass
class CharPolyReport:
    n: int
    polynomials: dict  # (side, exponent_name) -> IntPolynomial
    falling: IntPolynomial
    matches: list  # conventions whose polynomial equals the falling factorial
    value_at_minus_one_ok: bool

    @property
    def ok(self) -> bool:
        return bool(self.matches) and self.value_at_minus_one_ok

    def lines(self) -> list[str]:
        out = [f"partition characteristic polynomial at n={self.n}:"]
        out.append(f"  target t(t-1)...(t-{self.n - 1}): {self.falling.to_json()}")
        for conv, poly in sorted(self.polynomials.items()):
            mark = "match" if conv in self.matches else "differs"
            out.append(f"  {conv[0]:<5} mu, exponent {conv[1]:<8}: {mark}")
        val = "ok" if self.value_at_minus_one_ok else "WRONG"
        out.append(f"  value (-1)^n n! at t=-1 under matching convention: {val}")
        return out


def partition_char_poly_check(n: int, budget: int = DEFAULT_BUDGET) -> CharPolyReport:
    """Compare the Möbius-weighted block-count generating polynomials of
    the full partition interval, for lower and upper Möbius weights and
    three exponent conventions, against t(t-1)...(t-n+1); the value at
    t=-1 must be (-1)^n n! under any matching convention."""
    from .families import PARTITIONS
    labels = frozenset(range(n))
    view = PARTITIONS.poset(labels, budget)
    carrier = view.carrier()
    bottom = next(q for q in carrier if len(q.blocks) == 1)
    top = next(q for q in carrier if len(q.blocks) == n)

    polys: dict = {}
    for side in ("lower", "upper"):
        for name, expo in _EXPONENTS.items():
            poly = IntPolynomial()
            for tau in carrier:
                mu = mobius(view, bottom, tau) if side == "lower" else mobius(view, tau, top)
                poly = poly + IntPolynomial.term(mu, expo(len(tau.blocks), n))
            polys[(side, name)] = poly

    falling = IntPolynomial.falling_factorial(n)
    matches = [conv for conv, poly in polys.items() if poly == falling]
    expected = (-1) ** n * factorial(n)
    value_ok = bool(matches) and all(
        polys[conv].evaluate(-1) == expected for conv in matches)
    return CharPolyReport(n, polys, falling, matches, value_ok)
