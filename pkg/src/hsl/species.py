"""Structure families with relabeling, set-partition machinery, and
exhaustive monoid/comonoid/Hopf axiom checkers.

Label sets are finite sets of small nonnegative integers.  Ordered set
partitions enumerate deterministically (first block sweeps nonempty
subsets in bitmask order over the sorted labels), so reports and sums
are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable

from .errors import (DEFAULT_BUDGET, CarrierOverflow, EngineError,
                     LabelMismatch, LabelOverlap)
from .posets import CarrierPoset


def check_label_set(labels) -> frozenset[int]:
    labels = frozenset(labels)
    for v in labels:
        if not isinstance(v, int) or v < 0:
            raise LabelMismatch(f"labels must be nonnegative integers, got {v!r}")
    return labels


def subsets(labels) -> tuple[frozenset[int], ...]:
    """All subsets (including empty) in bitmask order over sorted labels."""
    elems = sorted(labels)
    n = len(elems)
    out = []
    for mask in range(2 ** n):
        out.append(frozenset(elems[i] for i in range(n) if mask >> i & 1))
    return tuple(out)


class OrderedSetPartition:
    """Sequence of pairwise-disjoint nonempty blocks covering a label set."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = tuple(frozenset(b) for b in blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise LabelMismatch("empty block in ordered set partition")
            if b & seen:
                raise LabelMismatch("overlapping blocks in ordered set partition")
            seen |= b
        self.blocks = blocks

    @property
    def ambient(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for b in self.blocks:
            out |= b
        return out

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    def __eq__(self, other):
        return isinstance(other, OrderedSetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "OSP(" + "|".join("".join(map(str, sorted(b))) for b in self.blocks) + ")"


class UnorderedSetPartition:
    """Blocks in canonical order (sorted by minimum element)."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = [frozenset(b) for b in blocks]
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise LabelMismatch("empty block in set partition")
            if b & seen:
                raise LabelMismatch("overlapping blocks in set partition")
            seen |= b
        self.blocks = tuple(sorted(blocks, key=min))

    @property
    def ambient(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for b in self.blocks:
            out |= b
        return out

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, UnorderedSetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "USP(" + "|".join("".join(map(str, sorted(b))) for b in self.blocks) + ")"


@lru_cache(maxsize=None)
def compositions(labels: frozenset) -> tuple[OrderedSetPartition, ...]:
    """All ordered set partitions of `labels` into nonempty blocks."""
    labels = frozenset(labels)
    if not labels:
        return (OrderedSetPartition(()),)
    out = []
    for first in subsets(labels):
        if not first:
            continue
        for tail in compositions(labels - first):
            out.append(OrderedSetPartition((first,) + tail.blocks))
    return tuple(out)


@lru_cache(maxsize=None)
def set_partitions(labels: frozenset) -> tuple[UnorderedSetPartition, ...]:
    """All unordered set partitions of `labels`."""
    labels = frozenset(labels)
    if not labels:
        return (UnorderedSetPartition(()),)
    pivot = min(labels)
    rest = labels - {pivot}
    out = []
    for extra in subsets(rest):
        block = frozenset({pivot}) | extra
        for tail in set_partitions(rest - extra):
            out.append(UnorderedSetPartition((block,) + tail.blocks))
    return tuple(out)


@lru_cache(maxsize=None)
def fubini(n: int) -> int:
    """Count of ordered set partitions of an n-set, by recurrence."""
    from math import comb
    if n == 0:
        return 1
    return sum(comb(n, k) * fubini(n - k) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Count of unordered set partitions of an n-set, by recurrence."""
    from math import comb
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell(k) for k in range(n))


@dataclass(frozen=True, eq=False)
class Family:
    """A structure family: enumeration, relabeling, merge and split maps,
    an optional free product, and an optional native order."""

    tag: str
    count_fn: Callable[[frozenset], int] | None
    enumerate_fn: Callable[[frozenset, int], tuple]
    unit: object
    relabel_fn: Callable[[dict, object], object]
    mult_fn: Callable[[object, object], object]
    comult_fn: Callable[[object, frozenset, frozenset], tuple]
    box_fn: Callable[[object, object], object] | None = None
    leq_fn: Callable[[object, object], bool] | None = None
    adjunction_kinds: tuple[str, ...] = ()

    def enumerate(self, labels, budget: int = DEFAULT_BUDGET) -> tuple:
        labels = check_label_set(labels)
        if self.count_fn is not None:
            count = self.count_fn(labels)
            if count > budget:
                raise CarrierOverflow(
                    f"{self.tag} carrier on {len(labels)} labels has {count} "
                    f"elements (budget {budget})")
        return self.enumerate_fn(labels, budget)

    def mult(self, x, y):
        if x.labels & y.labels:
            raise LabelOverlap(f"label sets overlap: {sorted(x.labels & y.labels)}")
        return self.mult_fn(x, y)

    def comult(self, x, S, T):
        S, T = frozenset(S), frozenset(T)
        if S & T or (S | T) != x.labels:
            raise LabelMismatch("split does not partition the structure's labels")
        return self.comult_fn(x, S, T)

    def box(self, x, y):
        if self.box_fn is None:
            raise EngineError(f"family {self.tag} has no free product")
        if x.labels & y.labels:
            raise LabelOverlap(f"label sets overlap: {sorted(x.labels & y.labels)}")
        return self.box_fn(x, y)

    def relabel(self, mapping: dict, x):
        if set(mapping) != set(x.labels):
            raise LabelMismatch("relabeling domain must equal the label set")
        if len(set(mapping.values())) != len(mapping):
            raise LabelMismatch("relabeling must be a bijection")
        return self.relabel_fn(mapping, x)

    @property
    def has_native_order(self) -> bool:
        return self.leq_fn is not None

    def poset(self, labels, budget: int = DEFAULT_BUDGET,
              reverse: bool = False) -> CarrierPoset:
        """The native order on the carrier over `labels`."""
        if self.leq_fn is None:
            raise EngineError(f"family {self.tag} has no native order")
        labels = check_label_set(labels)
        view = CarrierPoset(
            lambda: self.enumerate(labels, budget), self.leq_fn,
            budget=budget, family_tag=self.tag, labels=labels)
        return view.reverse() if reverse else view


def compose_mult(fam: Family, parts_partition, parts) -> object:
    """Left fold of the binary merge over an ordered set partition."""
    blocks = tuple(parts_partition)
    parts = tuple(parts)
    if len(blocks) != len(parts):
        raise LabelMismatch("need one part per block")
    for block, part in zip(blocks, parts):
        if part.labels != frozenset(block):
            raise LabelMismatch(
                f"part on {sorted(part.labels)} does not match block {sorted(block)}")
    out = fam.unit
    for part in parts:
        out = fam.mult(out, part)
    return out


def compose_comult(fam: Family, parts_partition, x) -> tuple:
    """Iterated binary split of x along an ordered set partition."""
    blocks = tuple(frozenset(b) for b in parts_partition)
    ambient: frozenset[int] = frozenset()
    for b in blocks:
        ambient |= b
    if ambient != x.labels:
        raise LabelMismatch("partition does not cover the structure's labels")
    out = []
    rest = x
    remaining = x.labels
    for block in blocks[:-1]:
        head, rest = fam.comult(rest, block, remaining - block)
        remaining = remaining - block
        out.append(head)
    if blocks:
        out.append(rest)
    return tuple(out)


def reassemble(fam: Family, partition, x):
    """Split x along the blocks and merge the pieces back."""
    blocks = tuple(partition)
    return compose_mult(fam, blocks, compose_comult(fam, blocks, x))


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class AxiomReport:
    family: str
    n: int
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = [f"axioms for {self.family} up to n={self.n}:"]
        for r in self.results:
            mark = "pass" if r.passed else "FAIL"
            line = f"  {r.name:<24} {mark}"
            if r.witness:
                line += f"  [{r.witness}]"
            out.append(line)
        return out


def _splits(labels):
    """Ordered pairs (S, T) with S ∪ T = labels, disjoint (empty allowed)."""
    for S in subsets(labels):
        yield S, labels - S


class _Carriers:
    """Budget-aware carrier lookup shared by one axiom sweep."""

    def __init__(self, fam: Family, n: int, budget: int):
        self.fam = fam
        self.budget = budget
        self.by_size = {k: fam.enumerate(frozenset(range(k)), budget)
                        for k in range(n + 1)}
        self._subs: dict = {}

    def items(self):
        return self.by_size.items()

    def __iter__(self):
        return iter(self.by_size)

    def values(self):
        return self.by_size.values()

    def sub(self, labels) -> tuple:
        labels = frozenset(labels)
        cached = self._subs.get(labels)
        if cached is None:
            cached = self.fam.enumerate(labels, self.budget)
            self._subs[labels] = cached
        return cached


def verify_axioms(fam: Family, n: int, budget: int = DEFAULT_BUDGET) -> AxiomReport:
    """Exhaustively check the monoid/comonoid/Hopf axioms on carriers of
    size up to n, plus (co)commutativity and, when the family carries a
    native order, order-preservation of the structure maps."""
    report = AxiomReport(fam.tag, n)
    carriers = _Carriers(fam, n, budget)

    def record(name, witness):
        report.results.append(AxiomResult(name, witness is None, witness))

    record("relabel_functorial", _check_relabel_functorial(fam, carriers))
    record("naturality_mult", _check_naturality_mult(fam, carriers))
    record("naturality_comult", _check_naturality_comult(fam, carriers))
    record("unitality", _check_unitality(fam, carriers))
    record("counitality", _check_counitality(fam, carriers))
    record("associativity", _check_associativity(fam, carriers))
    record("coassociativity", _check_coassociativity(fam, carriers))
    record("compatibility", _check_compatibility(fam, carriers))
    record("commutativity", _check_commutativity(fam, carriers))
    record("cocommutativity", _check_cocommutativity(fam, carriers))
    if fam.has_native_order:
        record("order_preservation_mult", _check_order_mult(fam, carriers))
        record("order_preservation_comult", _check_order_comult(fam, carriers))
    return report


def _check_relabel_functorial(fam, carriers):
    for k, carrier in carriers.items():
        labels = sorted(range(k))
        for f_img in permutations(labels):
            f = dict(zip(labels, f_img))
            for g_img in permutations(labels):
                g = dict(zip(labels, g_img))
                gf = {i: g[f[i]] for i in labels}
                for x in carrier:
                    if fam.relabel(gf, x) != fam.relabel(g, fam.relabel(f, x)):
                        return f"composition fails on {x.encode()}"
            ident = {i: i for i in labels}
            for x in carrier:
                if fam.relabel(ident, x) != x:
                    return f"identity fails on {x.encode()}"
        if k >= 3:
            break
    return None


def _bijections(labels):
    """Permutations of the label set plus one shifted target set."""
    elems = sorted(labels)
    for img in permutations(elems):
        yield dict(zip(elems, img))
    if elems:
        shift = max(elems) + 1
        yield {i: i + shift for i in elems}


def _check_naturality_mult(fam, carriers):
    for k, carrier in carriers.items():
        labels = frozenset(range(k))
        for S, T in _splits(labels):
            xs = carriers.sub(S)
            ys = carriers.sub(T)
            for f in _bijections(labels):
                fS = {i: f[i] for i in S}
                fT = {i: f[i] for i in T}
                for x in xs:
                    for y in ys:
                        lhs = fam.relabel(f, fam.mult(x, y))
                        rhs = fam.mult(fam.relabel(fS, x), fam.relabel(fT, y))
                        if lhs != rhs:
                            return (f"m not natural: x={x.encode()} y={y.encode()} "
                                    f"f={f}")
    return None


def _check_naturality_comult(fam, carriers):
    # factor order follows the merge diagram: sigma(S) with x|S
    for k, carrier in carriers.items():
        labels = frozenset(range(k))
        for S, T in _splits(labels):
            for f in _bijections(labels):
                fS = {i: f[i] for i in S}
                fT = {i: f[i] for i in T}
                fSimg = frozenset(fS.values())
                fTimg = frozenset(fT.values())
                for x in carrier:
                    x1, x2 = fam.comult(x, S, T)
                    lhs = fam.comult(fam.relabel(f, x), fSimg, fTimg)
                    rhs = (fam.relabel(fS, x1), fam.relabel(fT, x2))
                    if lhs != rhs:
                        return f"delta not natural: x={x.encode()} f={f}"
    return None


def _check_unitality(fam, carriers):
    for carrier in carriers.values():
        for x in carrier:
            if fam.mult(fam.unit, x) != x or fam.mult(x, fam.unit) != x:
                return f"unit fails on {x.encode()}"
    return None


def _check_counitality(fam, carriers):
    for carrier in carriers.values():
        for x in carrier:
            if fam.comult(x, x.labels, frozenset()) != (x, fam.unit):
                return f"counit (I, empty) fails on {x.encode()}"
            if fam.comult(x, frozenset(), x.labels) != (fam.unit, x):
                return f"counit (empty, I) fails on {x.encode()}"
    return None


def _check_associativity(fam, carriers):
    for k in carriers:
        labels = frozenset(range(k))
        for S, rest in _splits(labels):
            for T, R in _splits(rest):
                for x in carriers.sub(S):
                    for y in carriers.sub(T):
                        for z in carriers.sub(R):
                            if fam.mult(fam.mult(x, y), z) != fam.mult(x, fam.mult(y, z)):
                                return (f"assoc fails: {x.encode()},{y.encode()},"
                                        f"{z.encode()}")
    return None


def _check_coassociativity(fam, carriers):
    for k, carrier in carriers.items():
        labels = frozenset(range(k))
        for S, rest in _splits(labels):
            for T, R in _splits(rest):
                for x in carrier:
                    xs, xr1 = fam.comult(x, S, rest)
                    xt, xr = fam.comult(xr1, T, R)
                    x_st, xr2 = fam.comult(x, S | T, R)
                    xs2, xt2 = fam.comult(x_st, S, T)
                    if (xs, xt, xr) != (xs2, xt2, xr2):
                        return f"coassoc fails on {x.encode()} split {sorted(S)}|{sorted(T)}|{sorted(R)}"
    return None


def _check_compatibility(fam, carriers):
    for k in carriers:
        labels = frozenset(range(k))
        for S1, S2 in _splits(labels):
            xs = carriers.sub(S1)
            ys = carriers.sub(S2)
            for T1, T2 in _splits(labels):
                A, B = S1 & T1, S1 & T2
                C, D = S2 & T1, S2 & T2
                for x in xs:
                    for y in ys:
                        lhs = fam.comult(fam.mult(x, y), T1, T2)
                        xa, xb = fam.comult(x, A, B)
                        yc, yd = fam.comult(y, C, D)
                        rhs = (fam.mult(xa, yc), fam.mult(xb, yd))
                        if lhs != rhs:
                            return (f"compatibility fails: x={x.encode()} "
                                    f"y={y.encode()} T1={sorted(T1)}")
    return None


def _check_commutativity(fam, carriers):
    for k in carriers:
        labels = frozenset(range(k))
        for S, T in _splits(labels):
            for x in carriers.sub(S):
                for y in carriers.sub(T):
                    if fam.mult(x, y) != fam.mult(y, x):
                        return f"m not commutative on {x.encode()}, {y.encode()}"
    return None


def _check_cocommutativity(fam, carriers):
    for k, carrier in carriers.items():
        labels = frozenset(range(k))
        for S, T in _splits(labels):
            for x in carrier:
                a, b = fam.comult(x, S, T)
                b2, a2 = fam.comult(x, T, S)
                if (a, b) != (a2, b2):
                    return f"delta not cocommutative on {x.encode()}"
    return None


def _check_order_mult(fam, carriers):
    for k in carriers:
        labels = frozenset(range(k))
        for S, T in _splits(labels):
            xs = carriers.sub(S)
            ys = carriers.sub(T)
            for x1 in xs:
                for x2 in xs:
                    if not fam.leq_fn(x1, x2):
                        continue
                    for y1 in ys:
                        for y2 in ys:
                            if fam.leq_fn(y1, y2) and not fam.leq_fn(
                                    fam.mult(x1, y1), fam.mult(x2, y2)):
                                return f"m not order-preserving at {x1.encode()}"
    return None


def _check_order_comult(fam, carriers):
    for k, carrier in carriers.items():
        labels = frozenset(range(k))
        for S, T in _splits(labels):
            for x in carrier:
                for y in carrier:
                    if not fam.leq_fn(x, y):
                        continue
                    xa, xb = fam.comult(x, S, T)
                    ya, yb = fam.comult(y, S, T)
                    if not (fam.leq_fn(xa, ya) and fam.leq_fn(xb, yb)):
                        return f"delta not order-preserving at {x.encode()}"
    return None


def verify_delta_after_mult_identity(fam: Family, n: int,
                                     budget: int = DEFAULT_BUDGET):
    """Check that splitting a product along its own decomposition recovers
    the factors: Delta_{S,T}(m_{S,T}(x, y)) == (x, y).

    Returns (ok, witness)."""
    for k in range(n + 1):
        labels = frozenset(range(k))
        for S, T in _splits(labels):
            for x in fam.enumerate(S, budget):
                for y in fam.enumerate(T, budget):
                    if fam.comult(fam.mult(x, y), S, T) != (x, y):
                        return False, (x, y, S, T)
    return True, None
