"""Quotients K\\X of a Cayley graph by a subgroup acting on the left."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable

from .graphs import LabeledDigraph, cayley_g
from .group_core import IDENTITY, GroupElem, Perm, parse_cycles


@dataclass(frozen=True)
class Subgroup:
    elements: frozenset[GroupElem]
    description: str = ""

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))


def _perm_closure(gens: list[Perm]) -> set[Perm]:
    ident = Perm.identity()
    out = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in out:
                    out.add(q)
                    nxt.append(q)
        frontier = nxt
    return out


def make_subgroup(
    perm_generators: Iterable[Perm | str],
    include_z2: bool = False,
    include_z3: bool = False,
    description: str | None = None,
) -> Subgroup:
    """Build (closure of perm part) x (Z/2 or 0) x (Z/3 or 0).

    String generators are read as cycle notation, e.g. ``"(1,2,3,4,5)"``.
    """
    gens = [parse_cycles(g) if isinstance(g, str) else g for g in perm_generators]
    perms = _perm_closure(gens)
    xs = (0, 1) if include_z2 else (0,)
    ys = (0, 1, 2) if include_z3 else (0,)
    elements = frozenset(GroupElem(p, x, y) for p in perms for x in xs for y in ys)
    if description is None:
        perm_part = "<" + ", ".join(g.cycle_string() or "()" for g in gens) + ">" if gens else "1"
        description = " x ".join(
            [perm_part, "Z/2" if include_z2 else "0", "Z/3" if include_z3 else "0"]
        )
    return Subgroup(elements, description)


def k0() -> Subgroup:
    return make_subgroup(["(1,2,3,4,5)"], True, True)


def k1() -> Subgroup:
    return make_subgroup(["(1,2,3,4,5)"], False, True)


def trivial_subgroup() -> Subgroup:
    return make_subgroup([], False, False, description="1")


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    """Cosets ``K g`` of the base vertices with the induced letter action.

    ``graph`` is the quotient as a :class:`LabeledDigraph` whose vertex
    payloads are the coset representatives (the least member of each coset).
    Loops and parallel arcs are kept.
    """

    base: LabeledDigraph
    subgroup: Subgroup
    coset_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    graph: LabeledDigraph

    def __len__(self) -> int:
        return len(self.members)

    def representative(self, coset: int) -> int:
        return self.members[coset][0]

    def to_json(self) -> dict:
        data = self.graph.to_json()
        data["subgroup"] = self.subgroup.description
        data["fiber_size"] = len(self.subgroup)
        return data


def build_quotient(base: LabeledDigraph, subgroup: Subgroup, name: str | None = None) -> QuotientGraph:
    coset_of = [-1] * len(base)
    members = []
    for v, g in enumerate(base.vertices):
        if coset_of[v] >= 0:
            continue
        coset = sorted({base.index(k * g) for k in subgroup.elements})
        for w in coset:
            coset_of[w] = len(members)
        members.append(tuple(coset))
    sizes = {len(m) for m in members}
    assert sizes == {len(subgroup)}, f"unequal fibers {sizes}"

    succ = []
    for coset in members:
        row = tuple(coset_of[w] for w in base.succ[coset[0]])
        for v in coset[1:]:
            if tuple(coset_of[w] for w in base.succ[v]) != row:
                raise ValueError("letter action is not well defined on cosets")
        succ.append(row)
    reps = tuple(base.vertices[m[0]] for m in members)
    graph = LabeledDigraph(name or f"{base.name}/{subgroup.description}", reps, tuple(succ), base.letters)
    return QuotientGraph(base, subgroup, tuple(coset_of), tuple(members), graph)


def project(q: QuotientGraph, v: int) -> int:
    """Coset index of base vertex ``v``."""
    return q.coset_of[v]


@cache
def quotient_k0() -> QuotientGraph:
    return build_quotient(cayley_g(), k0(), name="quotient-k0")


@cache
def quotient_k1() -> QuotientGraph:
    return build_quotient(cayley_g(), k1(), name="quotient-k1")


def identity_coset(q: QuotientGraph) -> int:
    return q.coset_of[q.base.index(IDENTITY)]
