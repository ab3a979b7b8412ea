import itertools

import pytest

from cylpuzzle.graphs import trace
from cylpuzzle.group_core import IDENTITY, LETTERS, GroupElem, Perm, generator, parse_cycles
from cylpuzzle.quotient import (
    build_quotient,
    identity_coset,
    k0,
    k1,
    make_subgroup,
    project,
    trivial_subgroup,
)


def closure_oracle(gens):
    """All products of generators, grown until nothing new appears."""
    elems = {GroupElem(Perm.identity())}
    while True:
        new = {a * b for a in elems | set(gens) for b in elems | set(gens)} | elems
        if new == elems:
            return elems
        elems = new


def test_subgroup_sizes():
    c5 = GroupElem(parse_cycles("(1,2,3,4,5)"))
    z2 = GroupElem(Perm.identity(), 1, 0)
    z3 = GroupElem(Perm.identity(), 0, 1)
    assert k0().elements == closure_oracle([c5, z2, z3])
    assert len(k0()) == 30
    assert k1().elements == closure_oracle([c5, z3])
    assert len(k1()) == 15
    assert len(trivial_subgroup()) == 1
    assert IDENTITY in k0() and IDENTITY in k1()


def test_subgroup_closed():
    for sub in (k0(), k1(), make_subgroup(["(1,2)", "(1,2,3)"], True, False)):
        for a, b in itertools.product(sub.elements, repeat=2):
            assert a * b in sub
        assert all(a.inverse() in sub for a in sub.elements)
    assert len(make_subgroup(["(1,2)", "(1,2,3)"], True, False)) == 12


def test_descriptions():
    assert k0().description == "<(1,2,3,4,5)> x Z/2 x Z/3"
    assert k1().description == "<(1,2,3,4,5)> x 0 x Z/3"


def test_quotient_sizes(q0, q1):
    assert len(q0) == 24
    assert len(q1) == 48
    assert {len(m) for m in q0.members} == {30}
    assert {len(m) for m in q1.members} == {15}
    assert sorted(v for m in q0.members for v in m) == list(range(720))


def test_trivial_quotient_is_base(X):
    q = build_quotient(X, trivial_subgroup())
    assert len(q) == 720
    assert q.graph.succ == X.succ
    assert q.coset_of == tuple(range(720))


def test_projection_of_subgroup(X, q0, q1):
    for q, sub in ((q0, k0()), (q1, k1())):
        target = project(q, X.index(IDENTITY))
        assert target == identity_coset(q) == 0
        assert all(project(q, X.index(k)) == target for k in sub.elements)


def test_projection_commutes_with_letters(X, q0, q1):
    for q in (q0, q1):
        for v in range(len(X)):
            for letter in LETTERS:
                assert project(q, X.successor(v, letter)) == q.graph.successor(project(q, v), letter)


def test_cosets_are_left_cosets(X, q1):
    sub = k1()
    for coset in q1.members:
        g = X.vertices[coset[0]]
        assert {X.vertices[v] for v in coset} == {k * g for k in sub.elements}


def test_representatives_are_minimal(q0):
    for c, members in enumerate(q0.members):
        assert q0.representative(c) == min(members)
    assert list(q0.graph.vertices) == sorted(q0.graph.vertices)


def test_loops_are_kept(X):
    # <V> x Z/2 contains V^, so the identity coset is fixed by V
    sub = make_subgroup(["(1,4)(2,5)"], True, False)
    assert generator("V") in sub
    q = build_quotient(X, sub)
    ident = identity_coset(q)
    assert q.graph.successor(ident, "V") == ident
    assert len(q) == 720 // len(sub)


def test_quotient_walk_is_projected_walk(X, q0):
    word = "VRVLVRVLVLVR" * 3
    for start in (0, 100, 555):
        base = trace(X, start, word).visited
        quot = trace(q0.graph, project(q0, start), word).visited
        assert [project(q0, v) for v in base] == list(quot)


def test_quotient_json(q0):
    data = q0.to_json()
    assert len(data["vertices"]) == 24
    assert len(data["arcs"]) == 72
    assert data["fiber_size"] == 30


@pytest.mark.parametrize("gens", [[], ["(1,2,3,4,5)"], ["(1,2)(3,4)"]])
def test_fibers_equal_subgroup_size(X, gens):
    sub = make_subgroup(gens, False, True)
    q = build_quotient(X, sub)
    assert {len(m) for m in q.members} == {len(sub)}
