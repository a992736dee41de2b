import random

import pytest

from hsl.errors import CarrierOverflow, NotComparable
from hsl.families import GRAPHS, PARTITIONS, parse_structure
from hsl.posets import (CarrierPoset, IntPolynomial, ProductPoset,
                        check_galois, graded_char_eval, graded_char_poly,
                        interval, mobius, mobius_matrix_oracle,
                        rota_transfer_check)


def chain_poset(n):
    return CarrierPoset(lambda: range(n), lambda a, b: a <= b,
                        key_fn=str, family_tag="chain", labels=frozenset())


def diamond_poset():
    # 0 < 1, 2 < 3 with 1, 2 incomparable
    order = {(0, 0), (1, 1), (2, 2), (3, 3),
             (0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}
    return CarrierPoset(lambda: range(4), lambda a, b: (a, b) in order, key_fn=str)


def test_mobius_base_cases():
    p = chain_poset(3)
    assert mobius(p, 1, 1) == 1
    assert mobius(p, 0, 1) == -1
    assert mobius(p, 0, 2) == 0


def test_mobius_not_comparable():
    p = diamond_poset()
    with pytest.raises(NotComparable):
        mobius(p, 1, 2)


def test_mobius_against_zeta_inversion_oracle():
    for p in (chain_poset(4), diamond_poset(),
              GRAPHS.poset(frozenset(range(3))),
              PARTITIONS.poset(frozenset(range(4)))):
        oracle = mobius_matrix_oracle(p)
        for x in p.carrier():
            for y in p.upset(x):
                assert mobius(p, x, y) == oracle[(p.key(x), p.key(y))]


def test_mobius_partition_lattice_n3():
    p = PARTITIONS.poset(frozenset(range(3)))
    one_block = parse_structure("P:n=3;B=012")
    singletons = parse_structure("P:n=3;B=0|1|2")
    assert mobius(p, one_block, singletons) == 2


def test_interval_examples():
    p = GRAPHS.poset(frozenset({0, 1}))
    empty = parse_structure("G:n=2;E=")
    k2 = parse_structure("G:n=2;E=0-1")
    assert interval(p, empty, empty) == (empty,)
    assert set(interval(p, empty, k2)) == {empty, k2}

    p3 = GRAPHS.poset(frozenset(range(3)))
    k3 = parse_structure("G:n=3;E=0-1,0-2,1-2")
    assert len(interval(p3, parse_structure("G:n=3;E="), k3)) == 8


def test_interval_requires_comparability():
    p = GRAPHS.poset(frozenset(range(3)))
    a = parse_structure("G:n=3;E=0-1")
    b = parse_structure("G:n=3;E=0-2")
    with pytest.raises(NotComparable):
        interval(p, a, b)


def test_mobius_inversion_round_trip():
    rng = random.Random(7)
    for p in (chain_poset(5), diamond_poset(),
              GRAPHS.poset(frozenset(range(3))),
              PARTITIONS.poset(frozenset(range(4)))):
        carrier = p.carrier()
        f = {p.key(x): rng.randint(-9, 9) for x in carrier}
        g = {p.key(x): sum(mobius(p, x, y) * f[p.key(y)] for y in p.upset(x))
             for x in carrier}
        for x in carrier:
            assert sum(g[p.key(y)] for y in p.upset(x)) == f[p.key(x)]


def test_product_poset_multiplicativity():
    left = GRAPHS.poset(frozenset({0, 1}))
    right = chain_poset(3)
    prod = ProductPoset(left, right)
    for a in left.carrier():
        for c in left.upset(a):
            for b in right.carrier():
                for d in right.upset(b):
                    assert (mobius(prod, (a, b), (c, d))
                            == mobius(left, a, c) * mobius(right, b, d))


def test_boolean_lattice_closed_form():
    for n in range(5):
        p = GRAPHS.poset(frozenset(range(n)))
        for g in p.carrier():
            for h in p.upset(g):
                assert mobius(p, g, h) == (-1) ** len(h.edges - g.edges)


def test_budget_overflow():
    p = CarrierPoset(lambda: range(100), lambda a, b: a <= b, budget=10)
    with pytest.raises(CarrierOverflow):
        p.carrier()


def test_reverse_view():
    p = chain_poset(4)
    r = p.reverse()
    assert r.leq(3, 0) and not r.leq(0, 3)
    assert set(r.upset(3)) == {0, 1, 2, 3}
    assert r.reverse() is p


def test_check_galois_identity():
    p = GRAPHS.poset(frozenset(range(2)))
    ident = lambda x: x
    assert check_galois(p, p, ident, ident).ok


def test_check_galois_graphs_free_product():
    S, T = frozenset({0}), frozenset({1, 2})
    whole = GRAPHS.poset(S | T)
    parts = ProductPoset(GRAPHS.poset(S), GRAPHS.poset(T))
    f = lambda g: GRAPHS.comult(g, S, T)
    g = lambda pair: GRAPHS.box(pair[0], pair[1])
    assert check_galois(whole, parts, f, g).ok


def test_check_galois_fails_for_disjoint_union():
    # the split map is not adjoint to plain merge in the containment order
    S, T = frozenset({0}), frozenset({1})
    whole = GRAPHS.poset(S | T)
    parts = ProductPoset(GRAPHS.poset(S), GRAPHS.poset(T))
    f = lambda g: GRAPHS.comult(g, S, T)
    g = lambda pair: GRAPHS.mult(pair[0], pair[1])
    report = check_galois(whole, parts, f, g)
    assert not report.ok
    assert report.witness is not None
    x, y = report.witness
    k2 = parse_structure("G:n=2;E=0-1")
    assert x == k2  # split(K2) <= (pt, pt) but K2 is not below their merge


def test_rota_transfer_trivial_and_graphs():
    S, T = frozenset({0}), frozenset({1})
    whole = GRAPHS.poset(S | T)
    parts = ProductPoset(GRAPHS.poset(S), GRAPHS.poset(T))
    f = lambda g: GRAPHS.comult(g, S, T)
    g = lambda pair: GRAPHS.box(pair[0], pair[1])
    k2 = parse_structure("G:n=2;E=0-1")
    pt_pair = f(k2)
    equal, left, right = rota_transfer_check(whole, parts, f, g, k2, pt_pair)
    assert equal and left == 1 == right
    empty = parse_structure("G:n=2;E=")
    equal, left, right = rota_transfer_check(whole, parts, f, g, empty, pt_pair)
    assert equal and left == 0 == right


def test_rota_transfer_partitions():
    S, T = frozenset({0}), frozenset({1, 2})
    whole = PARTITIONS.poset(S | T)
    parts = ProductPoset(PARTITIONS.poset(S), PARTITIONS.poset(T))
    f = lambda q: PARTITIONS.comult(q, S, T)
    g = lambda pair: PARTITIONS.mult(pair[0], pair[1])
    x = parse_structure("P:n=3;B=012")
    b = f(x)  # (one block on S, one block on T)
    equal, left, right = rota_transfer_check(whole, parts, f, g, x, b)
    assert equal, (left, right)


def test_rota_transfer_everywhere_on_small_galois_pairs():
    S, T = frozenset({0}), frozenset({1})
    whole = GRAPHS.poset(S | T)
    parts = ProductPoset(GRAPHS.poset(S), GRAPHS.poset(T))
    f = lambda g: GRAPHS.comult(g, S, T)
    g = lambda pair: GRAPHS.box(pair[0], pair[1])
    assert check_galois(whole, parts, f, g).ok
    for x in whole.carrier():
        for b in parts.carrier():
            equal, _, _ = rota_transfer_check(whole, parts, f, g, x, b)
            assert equal


def test_graded_char_eval_singleton():
    p = chain_poset(1)
    assert graded_char_eval(p, 0, 0, lambda z: 5, "lower", -1) == -1
    assert graded_char_eval(p, 0, 0, lambda z: 4, "upper", -1) == 1


def test_graded_char_eval_two_chain_partition():
    p = PARTITIONS.poset(frozenset({0, 1}))
    bottom = parse_structure("P:n=2;B=01")
    top = parse_structure("P:n=2;B=0|1")
    ell = lambda q: len(q.blocks)
    assert graded_char_eval(p, bottom, top, ell, "upper", -1) == 2
    assert graded_char_eval(p, bottom, top, ell, "lower", -1) == -2


def test_graded_char_poly_shapes():
    p = PARTITIONS.poset(frozenset({0, 1}))
    bottom = parse_structure("P:n=2;B=01")
    top = parse_structure("P:n=2;B=0|1")
    ell = lambda q: len(q.blocks)
    upper = graded_char_poly(p, bottom, top, ell, "upper")
    assert upper == IntPolynomial({2: 1, 1: -1})
    with pytest.raises(ValueError):
        graded_char_poly(p, bottom, top, ell, "sideways")


def test_int_polynomial():
    f = IntPolynomial.falling_factorial(3)
    assert f == IntPolynomial({3: 1, 2: -3, 1: 2})
    assert f.evaluate(-1) == -6
    assert f.evaluate(5) == 5 * 4 * 3
    assert IntPolynomial.from_json(f.to_json()) == f
    assert (IntPolynomial({1: 1}) + IntPolynomial({1: -1})) == IntPolynomial()
