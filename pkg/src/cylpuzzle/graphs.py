"""Letter-labelled digraphs: Cayley graphs, the puzzle state graph, walks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cache
from typing import Any, Callable, Iterator, Mapping, Sequence

from .group_core import IDENTITY, IDENTITY_PERM, LETTERS, GroupElem, generator
from .puzzle_model import HOME, Position, apply_move, encode


@dataclass(frozen=True, eq=False)
class LabeledDigraph:
    """Vertices with exactly one outgoing arc per letter.

    ``succ[v][k]`` is the target of the arc leaving ``v`` labelled
    ``letters[k]``.
    """

    name: str
    vertices: tuple[Any, ...]
    succ: tuple[tuple[int, ...], ...]
    letters: str = LETTERS
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertex payloads")
        for row in self.succ:
            if len(row) != len(self.letters):
                raise ValueError("every vertex needs one arc per letter")

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, payload) -> int:
        return self._index[payload]

    def successor(self, v: int, letter: str) -> int:
        return self.succ[v][self.letters.index(letter)]

    def arcs(self) -> Iterator[tuple[int, str, int]]:
        for v, row in enumerate(self.succ):
            for letter, w in zip(self.letters, row):
                yield v, letter, w

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self)
        for _, _, w in self.arcs():
            deg[w] += 1
        return deg

    def undirected_edges(self) -> set[frozenset[int]]:
        """Simple undirected view; loops are dropped."""
        return {frozenset((v, w)) for v, _, w in self.arcs() if v != w}

    def undirected_degrees(self) -> list[int]:
        deg = [0] * len(self)
        for e in self.undirected_edges():
            for v in e:
                deg[v] += 1
        return deg

    def to_json(self) -> dict:
        data = {
            "name": self.name,
            "vertices": [payload_json(v) for v in self.vertices],
            "arcs": [[v, letter, w] for v, letter, w in self.arcs()],
        }
        if self.vertices and isinstance(self.vertices[0], Position):
            data["positions"] = [str(v) for v in self.vertices]
        return data

    def to_dot(self, labels: bool = True) -> str:
        """Undirected DOT view.

        R arcs stand for their reverse L arcs; V arcs come in pairs, so each
        undirected edge is emitted once, labelled as seen from its R/V tail.
        """
        lines = [f'graph "{self.name}" {{']
        for v, payload in enumerate(self.vertices):
            lines.append(f'  {v} [label="{payload_label(payload)}"];')
        for v, letter, w in self.arcs():
            if letter == "L" or (letter == "V" and w < v):
                continue
            attr = f' [label="{letter}"]' if labels else ""
            lines.append(f"  {v} -- {w}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def payload_json(payload):
    """Vertex payload as JSON; positions are written as their group encoding."""
    if isinstance(payload, Position):
        payload = encode(payload)
    if isinstance(payload, GroupElem):
        return payload.to_json()
    return str(payload)


def payload_label(payload) -> str:
    return str(payload)


@dataclass(frozen=True)
class WalkTrace:
    start: int
    word: str
    visited: tuple[int, ...]

    @property
    def end(self) -> int:
        return self.visited[-1]

    @property
    def distinct(self) -> int:
        return len(set(self.visited))

    @property
    def closed(self) -> bool:
        return self.visited[0] == self.visited[-1]

    @property
    def simple(self) -> bool:
        """No vertex repeats, except the start recurring at the very end."""
        body = self.visited[:-1] if self.closed and len(self.visited) > 1 else self.visited
        return len(set(body)) == len(body)

    def first_repeat(self) -> int | None:
        """Index of the first visit to an already seen vertex (closing excluded)."""
        seen = set()
        last = len(self.visited) - 1
        for i, v in enumerate(self.visited):
            if v in seen and not (i == last and v == self.start):
                return i
            seen.add(v)
        return None

    def is_hamiltonian_cycle(self, n: int) -> bool:
        return len(self.word) == n and self.closed and self.simple and self.distinct == n

    def is_hamiltonian_path(self, n: int) -> bool:
        return len(self.word) == n - 1 and self.simple and self.distinct == n

    def summary(self, n: int) -> str:
        if not self.word:
            return "1 vertex"
        if self.is_hamiltonian_cycle(n):
            kind = "Hamiltonian cycle"
        elif self.is_hamiltonian_path(n):
            kind = "Hamiltonian path"
        elif self.simple:
            kind = "simple cycle" if self.closed else "simple path"
        else:
            kind = "walk with repeated vertices"
        closed = "closed" if self.closed else "open"
        return f"{self.distinct} distinct, {closed}, {kind}"


def trace(graph: LabeledDigraph, start: int, word: str) -> WalkTrace:
    visited = [start]
    v = start
    for letter in word:
        v = graph.successor(v, letter)
        visited.append(v)
    return WalkTrace(start, word, tuple(visited))


def build_cayley(
    generators: Mapping[str, Any],
    seed,
    name: str = "cayley",
    key: Callable | None = None,
) -> LabeledDigraph:
    """Closure of ``seed`` under right multiplication by the generators.

    Vertices are sorted (by ``key`` if given) so indexing is reproducible.
    """
    letters = "".join(generators)
    seen = {seed}
    queue = deque([seed])
    while queue:
        g = queue.popleft()
        for letter in letters:
            h = g * generators[letter]
            if h not in seen:
                seen.add(h)
                queue.append(h)
    vertices = tuple(sorted(seen, key=key))
    index = {v: i for i, v in enumerate(vertices)}
    succ = tuple(tuple(index[v * generators[l]] for l in letters) for v in vertices)
    return LabeledDigraph(name, vertices, succ, letters)


def build_state_graph() -> LabeledDigraph:
    """Breadth-first enumeration of puzzle positions from the home position.

    Vertices are ordered by their group encoding, so indices agree with
    ``cayley_g()``.
    """
    seen = {HOME}
    queue = deque([HOME])
    while queue:
        f = queue.popleft()
        for letter in LETTERS:
            g = apply_move(f, letter)
            if g not in seen:
                seen.add(g)
                queue.append(g)
    vertices = tuple(sorted(seen, key=encode))
    index = {v: i for i, v in enumerate(vertices)}
    succ = tuple(tuple(index[apply_move(f, l)] for l in LETTERS) for f in vertices)
    return LabeledDigraph("state", vertices, succ, LETTERS)


@cache
def cayley_g() -> LabeledDigraph:
    """Cay(S5 x Z/2 x Z/3, {L^, R^, V^}) with 720 vertices."""
    return build_cayley({l: generator(l) for l in LETTERS}, IDENTITY, name="cayley-g")


@cache
def cayley_s5() -> LabeledDigraph:
    return build_cayley({l: generator(l).sigma for l in LETTERS}, IDENTITY_PERM, name="cayley-s5")


@cache
def state_graph() -> LabeledDigraph:
    return build_state_graph()


def reachable(succ: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(graph: LabeledDigraph) -> bool:
    n = len(graph)
    if n == 0:
        return True
    reverse: list[list[int]] = [[] for _ in range(n)]
    for v, _, w in graph.arcs():
        reverse[w].append(v)
    return len(reachable(graph.succ, 0)) == n and len(reachable(reverse, 0)) == n
