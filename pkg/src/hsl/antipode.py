"""Reassembly order, unique factorization and its grading, the defining
alternating-sum antipode, the characteristic-polynomial closed form, and
primitive bases for verified adjunctions.

The closed form's normative coefficient of y in S(x) is

    sum over x <=r z <=r y of (-1)^ell(z) * mu(z, y)

(the upper-side evaluation).  The lower-side evaluation
sum of mu(x, z) * (-1)^ell(z) is computed alongside and reported, because
the two disagree already on two-element chains; see the discrepancy tests.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (DEFAULT_BUDGET, CarrierOverflow, EngineError,
                     NonUniqueFactorization, NotSelfAdjoint)
from .posets import (CarrierPoset, PosetView, ProductPoset, GaloisReport,
                     check_galois, graded_char_eval)
from .species import (Family, UnorderedSetPartition, compositions,
                      compose_mult, fubini, reassemble, set_partitions,
                      subsets)
from .vectors import FreeVector, inverted_basis


# ---------------------------------------------------------------------------
# reassembly order


def reassembly_upset(fam: Family, x, budget: int = DEFAULT_BUDGET) -> tuple:
    """All images of x under split-then-merge along a set partition,
    deduplicated; always contains x via the trivial partition."""
    from .species import bell
    if bell(len(x.labels)) > budget:
        raise CarrierOverflow(
            f"{bell(len(x.labels))} set partitions exceed budget {budget}")
    seen = {}
    for part in set_partitions(x.labels):
        y = reassemble(fam, part.blocks, x)
        seen.setdefault(y.encode(), y)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def _reassembly_view(tag: str, labels: frozenset, budget: int) -> CarrierPoset:
    from .families import FAMILIES
    fam = FAMILIES[tag]
    upsets: dict = {}

    def upset_of(x):
        cached = upsets.get(x)
        if cached is None:
            cached = reassembly_upset(fam, x, budget)
            upsets[x] = cached
        return cached

    def leq(x, y):
        return any(y == z for z in upset_of(x))

    return CarrierPoset(lambda: fam.enumerate(labels, budget), leq,
                        upset_fn=upset_of, budget=budget,
                        family_tag=tag, labels=labels)


def reassembly_poset(fam: Family, labels, budget: int = DEFAULT_BUDGET) -> CarrierPoset:
    return _reassembly_view(fam.tag, frozenset(labels), budget)


# ---------------------------------------------------------------------------
# self-adjointness (commutativity + cocommutativity) gate


@lru_cache(maxsize=None)
def _self_adjoint_at(tag: str, n: int, budget: int) -> bool:
    from .families import FAMILIES
    fam = FAMILIES[tag]
    labels = frozenset(range(n))
    for S in subsets(labels):
        T = labels - S
        xs = fam.enumerate(S, budget)
        ys = fam.enumerate(T, budget)
        for x in xs:
            for y in ys:
                if fam.mult(x, y) != fam.mult(y, x):
                    return False
        for z in fam.enumerate(labels, budget):
            a, b = fam.comult(z, S, T)
            b2, a2 = fam.comult(z, T, S)
            if (a, b) != (a2, b2):
                return False
    return True


def require_self_adjoint(fam: Family, n: int, budget: int = DEFAULT_BUDGET):
    if not _self_adjoint_at(fam.tag, n, budget):
        raise NotSelfAdjoint(
            f"family {fam.tag} is not commutative and cocommutative at n={n}")


# ---------------------------------------------------------------------------
# adjunctions


@dataclass(eq=False)
class Adjunction:
    """A declared Galois connection between the split map and a merge map.

    kind "delta_box":  split left-adjoint to the free product, native order.
    kind "delta_m":    split left-adjoint to the merge, reassembly order.
    kind "m_delta":    merge left-adjoint to the split, native order; the
                       inverted-basis machinery runs on the reversed order.
    """

    family: Family
    kind: str
    budget: int = DEFAULT_BUDGET
    _verified: set = field(default_factory=set)

    def __post_init__(self):
        if self.kind not in ("delta_box", "delta_m", "m_delta"):
            raise EngineError(f"unknown adjunction kind {self.kind!r}")
        if self.kind not in self.family.adjunction_kinds:
            raise EngineError(
                f"family {self.family.tag} does not declare {self.kind}")

    @property
    def display(self) -> str:
        return {"delta_box": "split -| free-product",
                "delta_m": "split -| merge (reassembly order)",
                "m_delta": "merge -| split"}[self.kind]

    def box(self, x, y):
        if self.kind == "delta_box":
            return self.family.box(x, y)
        return self.family.mult(x, y)

    def poset(self, labels) -> PosetView:
        if self.kind == "delta_m":
            return reassembly_poset(self.family, labels, self.budget)
        reverse = self.kind == "m_delta"
        return self.family.poset(labels, self.budget, reverse=reverse)

    def galois_setup(self, S, T):
        """(p, q, f, g) for the order-theoretic check on the split (S, T).

        For the split-side adjunctions, f is the split map from the carrier
        on S | T into the product order; for merge -| split the roles
        swap and the native (unreversed) order is used directly."""
        fam = self.family
        S, T = frozenset(S), frozenset(T)
        if self.kind == "m_delta":
            whole = fam.poset(S | T, self.budget)
            parts = ProductPoset(fam.poset(S, self.budget), fam.poset(T, self.budget))
            f = lambda pair: fam.mult(pair[0], pair[1])
            g = lambda z: fam.comult(z, S, T)
            return parts, whole, f, g
        whole = self.poset(S | T)
        parts = ProductPoset(self.poset(S), self.poset(T))
        f = lambda z: fam.comult(z, S, T)
        g = lambda pair: self.box(pair[0], pair[1])
        return whole, parts, f, g

    def verify(self, S, T) -> GaloisReport:
        """Run the full Galois check on one split and record success."""
        S, T = frozenset(S), frozenset(T)
        p, q, f, g = self.galois_setup(S, T)
        report = check_galois(p, q, f, g)
        if report.ok:
            self._verified.add((S, T))
        return report

    def verify_all_splits(self, labels) -> GaloisReport:
        labels = frozenset(labels)
        for S in subsets(labels):
            report = self.verify(S, labels - S)
            if not report.ok:
                return report
        return GaloisReport(True)

    def is_verified(self, S, T) -> bool:
        return (frozenset(S), frozenset(T)) in self._verified


def declared_adjunctions(fam: Family, budget: int = DEFAULT_BUDGET) -> list[Adjunction]:
    return [Adjunction(fam, kind, budget) for kind in fam.adjunction_kinds]


# ---------------------------------------------------------------------------
# unique factorization and the grading


@dataclass(frozen=True)
class Factorization:
    partition: UnorderedSetPartition
    factors: tuple  # aligned with partition.blocks

    def __len__(self):
        return len(self.factors)

    @property
    def length(self) -> int:
        return len(self.factors)


def _split_once(fam: Family, x):
    """First proper bipartition along which x merges back to itself, in a
    deterministic sweep order; None when x is indecomposable."""
    labels = sorted(x.labels)
    if len(labels) < 2:
        return None
    anchor = labels[0]
    rest = labels[1:]
    for mask in range(2 ** len(rest) - 1):
        S = frozenset([anchor] + [rest[i] for i in range(len(rest)) if mask >> i & 1])
        T = x.labels - S
        a, b = fam.comult(x, S, T)
        if fam.mult(a, b) == x:
            return a, b
    return None


def _factor_sweep(fam: Family, x, reverse: bool) -> list:
    if not x.labels:
        return []
    labels = sorted(x.labels)
    if len(labels) < 2:
        return [x]
    anchor = labels[0]
    rest = labels[1:]
    masks = range(2 ** len(rest) - 1)
    for mask in (reversed(masks) if reverse else masks):
        S = frozenset([anchor] + [rest[i] for i in range(len(rest)) if mask >> i & 1])
        T = x.labels - S
        a, b = fam.comult(x, S, T)
        if fam.mult(a, b) == x:
            return _factor_sweep(fam, a, reverse) + _factor_sweep(fam, b, reverse)
    return [x]


def factorize(fam: Family, x) -> Factorization:
    """Unique unordered factorization of x into merge-indecomposables,
    found by recursive bipartition search.  Two independent sweeps must
    agree; a disagreement raises NonUniqueFactorization."""
    forward = _factor_sweep(fam, x, reverse=False)
    backward = _factor_sweep(fam, x, reverse=True)
    key = lambda s: s.encode()
    if sorted(map(key, forward)) != sorted(map(key, backward)):
        raise NonUniqueFactorization(
            f"sweeps disagree on {x.encode()}: "
            f"{sorted(map(key, forward))} vs {sorted(map(key, backward))}")
    ordered = sorted(forward, key=lambda s: min(s.labels))
    partition = UnorderedSetPartition([s.labels for s in ordered])
    recomposed = compose_mult(fam, partition.blocks, tuple(ordered))
    if recomposed != x:
        raise NonUniqueFactorization(f"factors of {x.encode()} do not recompose")
    return Factorization(partition, tuple(ordered))


_GRADING_CACHE: dict = {}


def grading(fam: Family, x) -> int:
    """Number of indecomposable factors of x."""
    key = (fam.tag, x)
    cached = _GRADING_CACHE.get(key)
    if cached is None:
        cached = factorize(fam, x).length
        _GRADING_CACHE[key] = cached
    return cached


def is_indecomposable(fam: Family, x) -> bool:
    return bool(x.labels) and _split_once(fam, x) is None


# ---------------------------------------------------------------------------
# the defining antipode sum


def _takeuchi_terms(fam: Family, x, comps) -> dict:
    acc: dict = {}
    for comp in comps:
        y = reassemble(fam, comp.blocks, x)
        acc[y] = acc.get(y, 0) + (-1) ** len(comp)
    return acc


def _takeuchi_worker(args):
    from .families import FAMILIES, parse_structure
    tag, encoding, blocks_chunk = args
    fam = FAMILIES[tag]
    x = parse_structure(encoding)
    acc: dict = {}
    for blocks in blocks_chunk:
        y = reassemble(fam, [frozenset(b) for b in blocks], x)
        acc[y.encode()] = acc.get(y.encode(), 0) + (-1) ** len(blocks)
    return acc


_PARALLEL_THRESHOLD = 64


def takeuchi_antipode(fam: Family, x, budget: int = DEFAULT_BUDGET,
                      jobs: int = 1) -> FreeVector:
    """The alternating sum over all ordered set partitions of the label
    set of sign (-1)^k times split-then-merge.  Exact integer
    accumulation; the empty label set maps to the unit."""
    n = len(x.labels)
    if fubini(n) > budget:
        raise CarrierOverflow(
            f"{fubini(n)} ordered set partitions exceed budget {budget}")
    comps = compositions(x.labels)
    if jobs > 1 and len(comps) >= _PARALLEL_THRESHOLD:
        return _takeuchi_parallel(fam, x, comps, jobs)
    return FreeVector(fam.tag, x.labels, _takeuchi_terms(fam, x, comps))


def _takeuchi_parallel(fam: Family, x, comps, jobs: int) -> FreeVector:
    from .families import parse_structure
    chunks = [[] for _ in range(jobs)]
    for i, comp in enumerate(comps):
        chunks[i % jobs].append(tuple(tuple(sorted(b)) for b in comp.blocks))
    payload = [(fam.tag, x.encode(), chunk) for chunk in chunks if chunk]
    with multiprocessing.Pool(processes=jobs) as pool:
        partials = pool.map(_takeuchi_worker, payload)
    merged: dict = {}
    for part in partials:
        for enc, c in part.items():
            merged[enc] = merged.get(enc, 0) + c
    return FreeVector(fam.tag, x.labels,
                      [(parse_structure(enc), c) for enc, c in merged.items()])


def takeuchi_on_vector(fam: Family, v: FreeVector,
                       budget: int = DEFAULT_BUDGET) -> FreeVector:
    return v.bind(lambda x: takeuchi_antipode(fam, x, budget))


# ---------------------------------------------------------------------------
# closed form


@dataclass
class ClosedFormAntipode:
    """Closed-form antipode with both characteristic evaluations.

    `vector` carries the upper-side coefficients (the form that matches
    the defining sum); `literal_lower_vector` carries the lower-side
    evaluation of the characteristic polynomial at -1."""

    family: str
    labels: frozenset
    upper: dict
    lower: dict

    @property
    def vector(self) -> FreeVector:
        return FreeVector(self.family, self.labels, self.upper)

    @property
    def literal_lower_vector(self) -> FreeVector:
        return FreeVector(self.family, self.labels, self.lower)


def closed_form_antipode(fam: Family, x,
                         budget: int = DEFAULT_BUDGET) -> ClosedFormAntipode:
    """Antipode from the reassembly order: the coefficient of y is the
    upper characteristic evaluation at -1 over the interval [x, y] graded
    by factorization length.  The lower evaluation is reported alongside."""
    require_self_adjoint(fam, len(x.labels), budget)
    p = reassembly_poset(fam, x.labels, budget)
    ell = lambda z: grading(fam, z)
    upper: dict = {}
    lower: dict = {}
    for y in p.upset(x):
        upper[y] = graded_char_eval(p, x, y, ell, "upper", -1)
        lower[y] = graded_char_eval(p, x, y, ell, "lower", -1)
    return ClosedFormAntipode(fam.tag, x.labels, upper, lower)


# ---------------------------------------------------------------------------
# identities on the inverted basis


def antipode_on_inverted_check(fam: Family, x, budget: int = DEFAULT_BUDGET):
    """Check S(omega_x) == (-1)^ell(x) * omega_x on the reassembly order.

    Returns (equal, lhs, rhs)."""
    p = reassembly_poset(fam, x.labels, budget)
    omega = inverted_basis(p, x)
    lhs = takeuchi_on_vector(fam, omega, budget)
    rhs = omega * ((-1) ** grading(fam, x))
    return lhs == rhs, lhs, rhs


def antipode_axiom_check(fam: Family, n: int, antipode=None,
                         budget: int = DEFAULT_BUDGET):
    """Certify the convolution identity: summing merge(S(x1) (x) x2) over
    all ordered splits gives zero for nonempty label sets and the unit
    for the empty one.

    Returns (ok, witness)."""
    if antipode is None:
        antipode = lambda y: takeuchi_antipode(fam, y, budget)
    for k in range(n + 1):
        labels = frozenset(range(k))
        unit_vec = FreeVector.basis(fam.tag, fam.unit) if k == 0 else None
        for x in fam.enumerate(labels, budget):
            total = FreeVector.zero(fam.tag, labels)
            for S in subsets(labels):
                T = labels - S
                x1, x2 = fam.comult(x, S, T)
                total = total + antipode(x1).map_structures(
                    lambda a: fam.mult(a, x2), labels)
            expected = unit_vec if k == 0 else FreeVector.zero(fam.tag, labels)
            if total != expected:
                return False, (x, total)
    return True, None


# ---------------------------------------------------------------------------
# primitives


def box_indecomposables(adj: Adjunction, labels) -> list:
    """Structures not expressible as a proper box-product."""
    labels = frozenset(labels)
    fam = adj.family
    carrier = fam.enumerate(labels, adj.budget)
    decomposable = set()
    for S in subsets(labels):
        T = labels - S
        if not S or not T:
            continue
        for x1 in fam.enumerate(S, adj.budget):
            for x2 in fam.enumerate(T, adj.budget):
                decomposable.add(adj.box(x1, x2))
    return [x for x in sorted(carrier, key=lambda s: s.encode())
            if labels and x not in decomposable]


def primitives_basis(adj: Adjunction, labels) -> list[FreeVector]:
    """Inverted-basis vectors of the structures that are indecomposable
    for the adjunction's merge; each returned vector is killed by every
    proper split.  Verifies the Galois connection first."""
    labels = frozenset(labels)
    report = adj.verify_all_splits(labels)
    if not report.ok:
        raise EngineError(f"adjunction fails on {sorted(labels)}: {report.reason}")
    p = adj.poset(labels)
    return [inverted_basis(p, x) for x in box_indecomposables(adj, labels)]
