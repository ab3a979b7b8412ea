"""Hamiltonian cycles on small labelled digraphs, lifting and splicing.

The pipeline is: search a quotient graph exhaustively, identify the cycle
words up to rotation/reversal/L-R reflection, lift a quotient cycle to a
cycle cover of the base graph, then splice a 2-cycle cover into a path by
changing one letter.
"""

from __future__ import annotations

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graphs import LabeledDigraph, WalkTrace, payload_json, trace
from .group_core import IDENTITY
from .quotient import QuotientGraph

log = logging.getLogger(__name__)

_REFLECT = str.maketrans("LR", "RL")

S_WORD = "VLVRVLVRVRVL"
# s' repeats s_1..s_11 and ends in R
S_PRIME_WORD = S_WORD[:11] + "R"
T_WORD = S_WORD[1:] + S_WORD[0]
T_PRIME_WORD = S_PRIME_WORD[1:] + S_PRIME_WORD[0]

THEOREM2_WORD = "RVLVRVLVRRRVLVRVRVLVLVRVLVLLVRVRVLLLVLVRRRVRVRVR"

# (word, number of cycles in its lift) as printed
TABLE2_ROWS = (
    ("VRVLVRVLVLVRVRVLVRVLVLVL", 2),
    ("VLVLVLVRVLVLVRVRVRVLVRVR", 2),
    ("LLLLLVLVRRRVLLLVRVRRRRRV", 6),
    ("LLLLLVRRRRRVLVRRRVLLLVRV", 6),
)


class InvalidCertificateError(ValueError):
    pass


class SpliceNotFoundError(RuntimeError):
    pass


def build_theorem1_word() -> str:
    """(s s')^14 s s (t t')^15 with the final letter removed: 719 moves."""
    ss = S_WORD + S_PRIME_WORD
    tt = T_WORD + T_PRIME_WORD
    return (ss * 14 + S_WORD + S_WORD + tt * 15)[:-1]


def build_theorem2_word() -> str:
    return THEOREM2_WORD


# -- word symmetries -------------------------------------------------------


def reflect(word: str) -> str:
    return word.translate(_REFLECT)


@dataclass(frozen=True)
class WordSymmetry:
    rotation: int = 0
    reversed: bool = False
    reflected: bool = False

    def apply(self, word: str) -> str:
        if self.reflected:
            word = reflect(word)
        if self.reversed:
            word = word[::-1]
        if word:
            k = self.rotation % len(word)
            word = word[k:] + word[:k]
        return word


def symmetries(n: int) -> list[WordSymmetry]:
    return [
        WordSymmetry(k, rev, ref)
        for rev in (False, True)
        for ref in (False, True)
        for k in range(max(n, 1))
    ]


def orbit(word: str) -> set[str]:
    return {s.apply(word) for s in symmetries(len(word))}


def canonicalize(word: str) -> str:
    """Least word (L < R < V) in the orbit under rotation, reversal and L<->R."""
    if not word:
        raise ValueError("cannot canonicalize the empty word")
    return min(orbit(word))


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class HamCycleWord:
    word: str
    start: int
    graph_id: str

    def to_json(self, graph: LabeledDigraph) -> dict:
        return {
            "graph": self.graph_id,
            "start": payload_json(graph.vertices[self.start]),
            "word": self.word,
            "kind": "cycle",
            "cycle_lengths": [len(self.word)],
        }


@dataclass(frozen=True)
class CycleCover:
    """Vertex-disjoint cycles, each given by a start vertex and its word."""

    graph_id: str
    cycles: tuple[tuple[int, str], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def cycle_lengths(self) -> list[int]:
        return [len(w) for _, w in self.cycles]

    def describe(self) -> str:
        return f"{len(self)}-cycle cover, lengths {self.cycle_lengths}"

    def to_json(self, graph: LabeledDigraph) -> dict:
        start, word = self.cycles[0]
        return {
            "graph": self.graph_id,
            "start": payload_json(graph.vertices[start]),
            "starts": [payload_json(graph.vertices[s]) for s, _ in self.cycles],
            "word": word,
            "kind": "cover",
            "cycle_lengths": self.cycle_lengths,
        }


def path_certificate(graph: LabeledDigraph, walk: WalkTrace) -> dict:
    return {
        "graph": graph.name,
        "start": payload_json(graph.vertices[walk.start]),
        "word": walk.word,
        "kind": "path",
        "cycle_lengths": [],
    }


def ham_cycle_failure(graph: LabeledDigraph, start: int, word: str) -> str | None:
    """Why ``word`` from ``start`` is not a Hamiltonian cycle, or None if it is."""
    n = len(graph)
    if len(word) != n:
        return f"word has {len(word)} letters, graph has {n} vertices"
    walk = trace(graph, start, word)
    rep = walk.first_repeat()
    if rep is not None:
        return f"vertex {walk.visited[rep]} revisited at step {rep}"
    if not walk.closed:
        return f"walk ends at vertex {walk.end}, not at start {start}"
    return None


def verify_ham_cycle(graph: LabeledDigraph, start: int, word: str) -> bool:
    return ham_cycle_failure(graph, start, word) is None


def find_start(graph: LabeledDigraph, word: str) -> int | None:
    """First vertex (in index order) from which ``word`` is a Hamiltonian cycle."""
    for v in range(len(graph)):
        if verify_ham_cycle(graph, v, word):
            return v
    return None


# -- backtracking search ---------------------------------------------------


def _neighbour_tables(graph: LabeledDigraph):
    n = len(graph)
    outs = [sorted({w for w in graph.succ[v] if w != v}) for v in range(n)]
    ins: list[set[int]] = [set() for _ in range(n)]
    for v in range(n):
        for w in outs[v]:
            ins[w].add(v)
    return outs, [sorted(s) for s in ins]


def _search(graph: LabeledDigraph, anchor: int, limit, prune: bool, first: int | None):
    """Depth-first enumeration; ``first`` restricts the first letter index."""
    n = len(graph)
    succ = graph.succ
    letters = graph.letters
    outs, ins = _neighbour_tables(graph)
    visited = [False] * n
    visited[anchor] = True
    word: list[str] = []
    found: list[str] = []

    def alive(w: int, head: int) -> bool:
        # an unvisited vertex still needs an entry and an exit that differ
        preds = [p for p in ins[w] if not visited[p] or p == head]
        if not preds:
            return False
        succs = [q for q in outs[w] if not visited[q] or q == anchor]
        if not succs:
            return False
        return not (len(preds) == 1 and len(succs) == 1 and preds[0] == succs[0])

    def dfs(v: int, depth: int) -> bool:
        for k, u in enumerate(succ[v]):
            if depth == 0 and first is not None and k != first:
                continue
            if u == v:
                continue
            if depth == n - 1:
                if u == anchor:
                    found.append("".join(word) + letters[k])
                    if limit is not None and len(found) >= limit:
                        return True
                continue
            if visited[u]:
                continue
            visited[u] = True
            word.append(letters[k])
            ok = True
            if prune:
                for w in outs[v]:
                    if not visited[w] and not alive(w, u):
                        ok = False
                        break
                if ok:
                    for w in ins[u]:
                        if not visited[w] and not alive(w, u):
                            ok = False
                            break
            if ok and dfs(u, depth + 1):
                return True
            word.pop()
            visited[u] = False
        return False

    if n < 2:
        raise ValueError("Hamiltonian search needs at least 2 vertices")
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, n + 100))
    try:
        dfs(anchor, 0)
    finally:
        sys.setrecursionlimit(old)
    return found


def _branch(args):
    graph, anchor, limit, prune, first = args
    return _search(graph, anchor, limit, prune, first)


def find_ham_cycles(
    graph: LabeledDigraph,
    limit: int | None = None,
    anchor: int = 0,
    prune: bool = True,
    threads: int = 1,
) -> list[HamCycleWord]:
    """All directed Hamiltonian cycles through ``anchor``, as words.

    Letters are tried in the graph's letter order, so the result order is
    fixed.  With ``threads > 1`` the first-move branches run in separate
    processes and are concatenated in branch order, giving the same list.
    """
    if threads > 1 and len(graph) > 1:
        jobs = [(graph, anchor, limit, prune, k) for k in range(len(graph.letters))]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            words = [w for part in pool.map(_branch, jobs) for w in part]
    else:
        words = _search(graph, anchor, limit, prune, None)
    if limit is not None:
        words = words[:limit]
    log.debug("%s: %d Hamiltonian cycle words", graph.name, len(words))
    return [HamCycleWord(w, anchor, graph.name) for w in words]


def canonical_classes(cycles) -> list[str]:
    return sorted({canonicalize(c.word if isinstance(c, HamCycleWord) else c) for c in cycles})


# -- lifting and splicing --------------------------------------------------


def lift_cycle(q: QuotientGraph, cycle: HamCycleWord) -> CycleCover:
    """Partition the base graph into the cycles traced by repeating the word.

    Cycles start at the identity when it lies over ``cycle.start``, then at
    the least uncovered vertex of that fiber.
    """
    reason = ham_cycle_failure(q.graph, cycle.start, cycle.word)
    if reason is not None:
        raise InvalidCertificateError(f"not a Hamiltonian cycle of {q.graph.name}: {reason}")
    base = q.base
    word = cycle.word
    # every lifted cycle crosses the fiber over the start coset once per pass
    fiber = list(q.members[cycle.start])
    try:
        ident = base.index(IDENTITY)
    except KeyError:
        ident = None
    if ident in fiber:
        fiber.remove(ident)
        fiber.insert(0, ident)
    covered = [False] * len(base)
    cycles = []
    for start in fiber:
        if covered[start]:
            continue
        v, reps = start, 0
        covered[start] = True
        while True:
            for letter in word:
                v = base.successor(v, letter)
                if v == start:
                    break
                if covered[v]:
                    raise InvalidCertificateError(f"lifted walk from {start} revisits {v}")
                covered[v] = True
            reps += 1
            if v == start:
                break
        cycles.append((start, word * reps))
    return CycleCover(base.name, tuple(cycles))


def _cycle_vertices(graph: LabeledDigraph, start: int, word: str) -> list[int]:
    return list(trace(graph, start, word).visited[:-1])


def splice_to_path(cover: CycleCover, graph: LabeledDigraph) -> WalkTrace:
    """Merge a 2-cycle cover into a Hamiltonian path by changing one letter.

    Positions are scanned from the last letter backward, trying the L<->R
    swap first; the path runs once around the first cycle, takes the changed
    letter into the second cycle and then follows it to just before its
    landing vertex.
    """
    if len(cover) == 1:
        start, word = cover.cycles[0]
        return trace(graph, start, word[:-1])
    if len(cover) != 2:
        raise SpliceNotFoundError(f"single-letter splice needs 2 cycles, got {len(cover)}")
    for a, b in ((0, 1), (1, 0)):
        a_start, a_word = cover.cycles[a]
        b_start, b_word = cover.cycles[b]
        a_verts = _cycle_vertices(graph, a_start, a_word)
        b_verts = _cycle_vertices(graph, b_start, b_word)
        b_pos = {v: i for i, v in enumerate(b_verts)}
        m = len(a_word)
        for i in range(m - 1, -1, -1):
            old = a_word[i]
            swapped = reflect(old)
            alternatives = [swapped] if swapped != old else []
            alternatives += [l for l in graph.letters if l != old and l not in alternatives]
            for alt in alternatives:
                landing = graph.successor(a_verts[i], alt)
                j = b_pos.get(landing)
                if j is None:
                    continue
                head = a_word[i + 1:] + a_word[:i]
                tail = (b_word[j:] + b_word[:j])[:-1]
                walk = trace(graph, a_verts[(i + 1) % m], head + alt + tail)
                log.debug("splice at letter %d (%s -> %s), landing %d", i + 1, old, alt, landing)
                return walk
    raise SpliceNotFoundError("no single-letter substitution joins the two cycles")
