"""Exit criteria. Each test prints one PASS/FAIL line; all checks are exact."""

import random
from collections import Counter

import pytest

from cylpuzzle import certify
from cylpuzzle.graphs import cayley_g, cayley_s5, is_strongly_connected, state_graph, trace
from cylpuzzle.group_core import IDENTITY, IDENTITY_PERM, GroupElem, Perm, generator, word_product
from cylpuzzle.hamilton import (
    S_PRIME_WORD,
    S_WORD,
    TABLE2_ROWS,
    CycleCover,
    HamCycleWord,
    WordSymmetry,
    build_theorem1_word,
    build_theorem2_word,
    canonical_classes,
    canonicalize,
    find_ham_cycles,
    find_start,
    lift_cycle,
    splice_to_path,
    symmetries,
)
from cylpuzzle.puzzle_model import apply_move, decode, encode
from cylpuzzle.quotient import identity_coset, quotient_k0, quotient_k1

SS = S_WORD + S_PRIME_WORD

TABLE1_PRINTED = [
    ("45312", "12453"), ("54231", "13524"), ("31254", "12435"), ("13542", "13542"),
    ("42513", "13254"), ("24351", "12543"), ("51324", "14253"), ("15243", "15243"),
    ("43215", "14352"), ("34152", "15234"), ("52134", "15423"), ("25413", "14235"),
    ("13425", "13425"), ("31542", "12354"), ("42531", "13245"), ("24315", "12534"),
    ("15324", "15324"), ("51432", "14325"), ("32451", "14532"), ("23514", "15432"),
    ("14523", "14523"), ("41235", "15342"), ("35241", "13452"), ("53412", "12345"),
]


@pytest.fixture
def verdict(capsys):
    def record(number, title, checks):
        failed = [name for name, ok in checks.items() if not ok]
        line = f"AC{number:02d} {'PASS' if not failed else 'FAIL'} {title}"
        if failed:
            line += " -- failed: " + "; ".join(failed)
        with capsys.disabled():
            print("\n" + line)
        assert not failed, line

    return record


def test_ac01_table1(verdict):
    g = IDENTITY_PERM
    rows = []
    for letter in SS:
        g = g * generator(letter).sigma
        rows.append(g)
    g24 = rows[-1]
    cyc = [IDENTITY_PERM]
    while len(cyc) < 5:
        cyc.append(cyc[-1] * g24)
    rhos = [next(str(c * gi) for c in cyc if (c * gi)(1) == 1) for gi in rows]
    verdict(1, "Table 1 running products and orbit representatives", {
        "g_i match": [str(r) for r in rows] == [g for g, _ in TABLE1_PRINTED],
        "rho_i match": rhos == [r for _, r in TABLE1_PRINTED],
        "g_24 = 53412": str(g24) == "53412",
        "ord(g_24) = 5": g24.order() == 5,
    })


def test_ac02_lemma1(verdict):
    s5 = cayley_s5()
    walk = trace(s5, s5.index(IDENTITY_PERM), SS * 5)
    verdict(2, "(ss')^5 is a Hamiltonian cycle of Cay(S5)", {
        "120 distinct": walk.distinct == 120,
        "closes at identity": walk.end == s5.index(IDENTITY_PERM),
        "no repeats": walk.simple and len(walk.word) == 120,
    })


def test_ac03_theorem1_path(verdict):
    x = state_graph()
    v = build_theorem1_word()
    home = x.index(decode(IDENTITY))
    walk = trace(x, home, v)
    verdict(3, "719-letter word traces a Hamiltonian path of the state graph", {
        "719 letters": len(v) == 719,
        "720 distinct": walk.distinct == 720,
        "no repeats": walk.first_repeat() is None,
    })


def test_ac04_theorem1_intermediates(verdict):
    x = cayley_g()
    counts = Counter(SS)
    d = SS * 15
    a0, a1 = x.index(IDENTITY), x.index(GroupElem(IDENTITY_PERM, 1, 0))
    c0, c1 = trace(x, a0, d), trace(x, a1, d)
    cover_ok = (
        c0.closed and c1.closed and c0.simple and c1.simple
        and not set(c0.visited) & set(c1.visited)
    )
    lengths = [len(set(c.visited[:-1])) for c in (c0, c1)]
    path = splice_to_path(CycleCover(x.name, ((a0, d), (a1, d))), x)
    landing = x.vertices[path.visited[360]]
    verdict(4, "Theorem 1 intermediate claims", {
        f"ss' has 5 R and 7 L (counted R={counts['R']}, L={counts['L']})":
            (counts["R"], counts["L"]) == (5, 7),
        f"Z/3 part of phi_G(ss') = 1 (computed {word_product(SS).y})": word_product(SS).y == 1,
        "2-cycle cover": cover_ok,
        "cycle lengths [360, 360]": lengths == [360, 360],
        "splice lands at (12453,0,1)": landing == GroupElem(Perm.from_string("12453"), 0, 1),
    })


def test_ac05_theorem2(verdict):
    x = state_graph()
    s5 = cayley_s5()
    c = build_theorem2_word()
    home = x.index(decode(IDENTITY))
    walk = trace(x, home, c * 15)
    order = word_product(c, lift=False).order()
    no_s5 = all(not trace(s5, 0, c * k).is_hamiltonian_cycle(120) for k in range(1, order + 1))
    verdict(5, "c^15 is a Hamiltonian cycle; no c^k is one in Cay(S5)", {
        "48 letters": len(c) == 48,
        "720 distinct, closed": walk.distinct == 720 and walk.closed and walk.simple,
        "no c^k Hamiltonian in Cay(S5)": no_s5,
    })


def test_ac06_quotient_sizes(verdict):
    q0, q1 = quotient_k0(), quotient_k1()
    verdict(6, "quotient sizes and fibers", {
        "|K0\\X| = 24": len(q0) == 24,
        "|K1\\X| = 48": len(q1) == 48,
        "K0 fibers 30": {len(m) for m in q0.members} == {30},
        "K1 fibers 15": {len(m) for m in q1.members} == {15},
    })


def test_ac07_table2(verdict):
    q = quotient_k0()
    classes = canonical_classes(find_ham_cycles(q.graph, anchor=identity_coset(q)))
    printed = sorted(canonicalize(w) for w, _ in TABLE2_ROWS)
    covers = []
    for word, _ in TABLE2_ROWS:
        start = find_start(q.graph, word)
        covers.append(len(lift_cycle(q, HamCycleWord(word, start, q.graph.name))))
    verdict(7, "Table 2 classes and lift classification", {
        "4 classes": len(classes) == 4,
        "classes equal printed words": classes == printed,
        f"covers 2,2,6,6 (computed {','.join(map(str, covers))})":
            covers == [n for _, n in TABLE2_ROWS],
    })


def test_ac08_structure(verdict):
    x = state_graph()
    g = cayley_g()
    iso = all(encode(f) == g.vertices[i] for i, f in enumerate(x.vertices)) and x.succ == g.succ
    verdict(8, "state graph structure and Cayley isomorphism", {
        "720 vertices": len(x) == 720,
        "3-regular": x.undirected_degrees() == [3] * 720 and len(x.undirected_edges()) == 1080,
        "strongly connected": is_strongly_connected(x),
        "arc-isomorphic to Cay(G)": iso,
        "encode . decode = id": all(encode(decode(e)) == e for e in g.vertices),
    })


def _fold(word):
    """Product by explicit tuple arithmetic, independent of group_mul."""
    sigma, x, y = (1, 2, 3, 4, 5), 0, 0
    for letter in word:
        gen = generator(letter)
        sigma = tuple(sigma[j - 1] for j in gen.sigma.images)
        x, y = (x + gen.x) % 2, (y + gen.y) % 3
    return GroupElem(Perm(sigma), x, y)


def test_ac09_properties(verdict):
    rng = random.Random(20261016)
    x = cayley_g()
    product_ok = trace_ok = puzzle_ok = True
    for _ in range(1000):
        word = "".join(rng.choice("LRV") for _ in range(rng.randint(0, 50)))
        p = word_product(word)
        product_ok &= p == _fold(word)
        start = rng.randrange(720)
        trace_ok &= x.vertices[trace(x, start, word).end] == x.vertices[start] * p
        f = decode(x.vertices[start])
        for letter in word:
            f = apply_move(f, letter)
        puzzle_ok &= encode(f) == x.vertices[start] * p
    canon_ok = True
    for _ in range(200):
        word = "".join(rng.choice("LRV") for _ in range(rng.randint(1, 30)))
        c = canonicalize(word)
        canon_ok &= canonicalize(c) == c
        canon_ok &= all(canonicalize(s.apply(word)) == c for s in symmetries(len(word)))
        canon_ok &= canonicalize(WordSymmetry(rng.randrange(99), True, True).apply(word)) == c
    verdict(9, "property suites on random words", {
        "word_product = fold": product_ok,
        "trace end = start * product": trace_ok,
        "puzzle simulation agrees": puzzle_ok,
        "canonicalize idempotent and orbit-constant": canon_ok,
    })


def test_ac10_determinism(verdict):
    claims = list(certify.CLAIMS)

    def suite(threads):
        return certify.to_json_text([r for c in claims for r in certify.run(c, threads=threads)])

    first, second, parallel = suite(1), suite(1), suite(3)
    verdict(10, "certification JSON byte-identical across runs and threads", {
        "repeat run identical": first == second,
        "parallel search identical": first == parallel,
    })
