import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mucat import FinitePoset, InvalidPoset, NotComparable, chain

from helpers import (
    B2,
    CHAIN3,
    antichain,
    are_isomorphic,
    bf_covers,
    bf_interval_elements,
    bf_is_lattice,
    boolean_lattice,
    classical_moebius,
    divisor_poset,
)


@st.composite
def random_posets(draw, max_size=12):
    """Transitive closures of random DAGs (edges only point up a fixed order)."""
    n = draw(st.integers(min_value=1, max_value=max_size))
    elements = [f"e{k}" for k in range(n)]
    upward = [(i, j) for i in range(n) for j in range(i + 1, n)]
    arcs = draw(st.lists(st.sampled_from(upward), max_size=2 * n, unique=True)) if upward else []
    return FinitePoset(elements, covers=[(elements[i], elements[j]) for i, j in arcs])


# -- construction and validation ---------------------------------------------

def test_rejects_duplicate_elements():
    with pytest.raises(InvalidPoset):
        FinitePoset(["a", "a"], covers=[])


def test_rejects_unknown_elements_in_relation():
    with pytest.raises(InvalidPoset):
        FinitePoset(["a"], covers=[("a", "b")])


def test_requires_exactly_one_relation_argument():
    with pytest.raises(InvalidPoset):
        FinitePoset(["a"])
    with pytest.raises(InvalidPoset):
        FinitePoset(["a"], leq=[("a", "a")], covers=[])


def test_rejects_cyclic_covers():
    with pytest.raises(InvalidPoset):
        FinitePoset(["a", "b"], covers=[("a", "b"), ("b", "a")])


def test_rejects_missing_reflexivity():
    with pytest.raises(InvalidPoset):
        FinitePoset(["a", "b"], leq=[("a", "a"), ("a", "b")])


def test_rejects_antisymmetry_violation():
    pairs = [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]
    with pytest.raises(InvalidPoset):
        FinitePoset(["a", "b"], leq=pairs)


def test_rejects_transitivity_violation():
    pairs = [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]
    with pytest.raises(InvalidPoset):
        FinitePoset(["a", "b", "c"], leq=pairs)


def test_covers_input_is_transitively_closed():
    p = FinitePoset([0, 1, 2], covers=[(0, 1), (1, 2)])
    assert p.leq(0, 2)
    assert p.leq(0, 0)


# -- covers --------------------------------------------------------------------

def test_covers_of_chain():
    assert CHAIN3.covers() == [(0, 1), (1, 2)]


def test_covers_of_antichain():
    assert antichain(["a", "b"]).covers() == []


def test_covers_of_boolean_lattice():
    # frozen from the brute-force strict-betweenness scan
    empty, one, two, both = (frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2}))
    expected = {(empty, one), (empty, two), (one, both), (two, both)}
    assert set(B2.covers()) == expected
    assert bf_covers(B2) == expected


def test_twenty_element_divisor_lattice():
    p = divisor_poset(240)  # 20 divisors
    assert len(p) == 20
    assert set(p.covers()) == bf_covers(p)
    assert p.is_lattice() and bf_is_lattice(p)
    for y in p.elements:
        total = sum(p.moebius(1, z) for z in p.elements if y % z == 0)
        assert total == (1 if y == 1 else 0)


# -- intervals -----------------------------------------------------------------

def test_interval_of_chain_is_subchain():
    p = chain([0, 1, 2, 3])
    sub = p.interval(1, 3)
    assert sub.elements == (1, 2, 3)
    assert sub.covers() == [(1, 2), (2, 3)]


def test_full_interval_is_whole_poset():
    sub = B2.interval(frozenset(), frozenset({1, 2}))
    assert set(sub.elements) == set(B2.elements)


def test_interval_of_divisor_poset():
    p = divisor_poset(12)
    assert set(p.interval(2, 12).elements) == {2, 4, 6, 12}
    assert bf_interval_elements(p, 2, 12) == {2, 4, 6, 12}


def test_interval_requires_comparability():
    with pytest.raises(NotComparable):
        B2.interval(frozenset({1}), frozenset({2}))


# -- lattice test ----------------------------------------------------------------

def test_chains_are_lattices():
    for n in range(1, 6):
        assert chain(range(n)).is_lattice()


def test_antichain_is_not_a_lattice():
    assert not antichain(["a", "b"]).is_lattice()


def test_product_of_chains_is_a_lattice():
    p = chain([0, 1, 2]).product(chain([0, 1]))
    assert p.is_lattice()
    assert bf_is_lattice(p)


def test_join_and_meet_values():
    a, b = frozenset({1}), frozenset({2})
    assert B2.join(a, b) == frozenset({1, 2})
    assert B2.meet(a, b) == frozenset()


# -- Möbius ----------------------------------------------------------------------

def test_moebius_is_one_on_the_diagonal():
    for p in (CHAIN3, B2, divisor_poset(12)):
        for x in p.elements:
            assert p.moebius(x, x) == 1


def test_moebius_of_chain():
    assert CHAIN3.moebius(0, 1) == -1
    assert CHAIN3.moebius(0, 2) == 0


def test_moebius_of_boolean_lattice():
    assert B2.moebius(frozenset(), frozenset({1, 2})) == 1


def test_moebius_of_divisor_poset_matches_classical():
    p = divisor_poset(30)
    assert p.moebius(1, 30) == -1
    assert p.moebius(1, 30) == classical_moebius(30)


def test_moebius_requires_comparability():
    with pytest.raises(NotComparable):
        CHAIN3.moebius(2, 0)


def test_chain_moebius_depends_only_on_length():
    for n in range(1, 7):
        p = chain(range(n))
        expected = {1: 1, 2: -1}.get(n, 0)
        assert p.moebius(0, n - 1) == expected


def test_zeta_sum_identity_on_fixtures():
    for p in (CHAIN3, B2, divisor_poset(60), boolean_lattice(3)):
        for x in p.elements:
            for y in p.elements:
                if p.leq(x, y):
                    total = sum(p.moebius(x, z) for z in p.elements if p.leq(x, z) and p.leq(z, y))
                    assert total == (1 if x == y else 0)


# -- products ---------------------------------------------------------------------

def test_square_of_two_chain_is_boolean_lattice():
    p = chain([0, 1]).product(chain([0, 1]))
    assert are_isomorphic(p, B2)


def test_product_with_singleton_is_identity():
    p = chain([0]).product(B2)
    assert are_isomorphic(p, B2)


def test_product_of_chains_moebius():
    p = chain([0, 1]).product(chain([0, 1, 2]))
    assert p.moebius((0, 0), (1, 2)) == 0  # (-1) * 0


def test_product_law_exhaustive():
    # <= 30 elements, every comparable pair
    q = chain(range(5))
    p = B2.product(q)
    for (a, b) in p.elements:
        for (c, d) in p.elements:
            if p.leq((a, b), (c, d)):
                assert p.moebius((a, b), (c, d)) == B2.moebius(a, c) * q.moebius(b, d)


# -- randomized properties ----------------------------------------------------------

@given(random_posets())
@settings(max_examples=60, deadline=None)
def test_covers_match_brute_force(p):
    assert set(p.covers()) == bf_covers(p)


@given(random_posets())
@settings(max_examples=60, deadline=None)
def test_is_lattice_matches_brute_force(p):
    assert p.is_lattice() == bf_is_lattice(p)


@given(random_posets(), st.data())
@settings(max_examples=60, deadline=None)
def test_interval_matches_brute_force(p, data):
    x = data.draw(st.sampled_from(p.elements))
    ups = sorted(p.up_set(x), key=p.elements.index)
    y = data.draw(st.sampled_from(ups))
    assert set(p.interval(x, y).elements) == bf_interval_elements(p, x, y)


@given(random_posets())
@settings(max_examples=60, deadline=None)
def test_zeta_sum_identity_random(p):
    for x in p.elements:
        for y in p.elements:
            if p.leq(x, y):
                total = sum(p.moebius(x, z) for z in p.elements if p.leq(x, z) and p.leq(z, y))
                assert total == (1 if x == y else 0)


@given(random_posets(max_size=4), random_posets(max_size=4))
@settings(max_examples=40, deadline=None)
def test_product_law_random(p, q):
    prod = p.product(q)
    for (a, b) in prod.elements:
        for (c, d) in prod.elements:
            if prod.leq((a, b), (c, d)):
                assert prod.moebius((a, b), (c, d)) == p.moebius(a, c) * q.moebius(b, d)


# -- serialization -------------------------------------------------------------------

def test_json_round_trip():
    p = divisor_poset(12)
    q = FinitePoset.from_json(p.to_json())
    assert q.elements == tuple(str(d) for d in p.elements)
    assert set(q.covers()) == {(str(a), str(b)) for a, b in p.covers()}
    assert q.moebius("1", "12") == p.moebius(1, 12)


def test_json_accepts_full_relation():
    data = {"elements": ["a", "b"], "leq": [["a", "a"], ["b", "b"], ["a", "b"]]}
    p = FinitePoset.from_json(json.dumps(data))
    assert p.leq("a", "b")


def test_json_rejects_unknown_keys():
    data = {"elements": ["a"], "covers": [], "extra": 1}
    with pytest.raises(InvalidPoset):
        FinitePoset.from_json(data)


def test_json_rejects_both_relations():
    data = {"elements": ["a"], "covers": [], "leq": [["a", "a"]]}
    with pytest.raises(InvalidPoset):
        FinitePoset.from_json(data)


def test_json_rejects_bad_pair_shape():
    data = {"elements": ["a"], "covers": [["a"]]}
    with pytest.raises(InvalidPoset):
        FinitePoset.from_json(data)


def test_dot_output_is_deterministic():
    expected = (
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        '  "0";\n'
        '  "1";\n'
        '  "2";\n'
        '  "0" -> "1";\n'
        '  "1" -> "2";\n'
        "}\n"
    )
    assert CHAIN3.to_dot() == expected
    assert CHAIN3.to_dot() == CHAIN3.to_dot()


def test_dot_has_one_edge_per_cover():
    dot = B2.to_dot(label=lambda s: "".join(map(str, sorted(s))) or "0")
    assert dot.count("->") == len(B2.covers())
