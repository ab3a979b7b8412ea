"""Permutations of {1..5} and the direct product S5 x Z/2 x Z/3.

Composition convention: ``(a * b)(i) == a(b(i))``, so the right factor acts
first.  A running product over a move word is therefore built by
right-multiplying by each letter's generator in turn.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

LETTERS = "LRV"


class ParseError(ValueError):
    """Raised for malformed permutation, cycle or word text."""


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation in one-line notation: ``images[i]`` is the image of ``i + 1``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int = 5) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_string(cls, text: str) -> Perm:
        """Parse one-line notation such as ``"21453"``."""
        text = text.strip()
        if not text.isdigit():
            raise ParseError(f"bad one-line permutation {text!r}")
        try:
            return cls(tuple(int(ch) for ch in text))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: Perm) -> Perm:
        return perm_compose(self, other)

    def __str__(self) -> str:
        return "".join(str(v) for v in self.images)

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"

    def inverse(self) -> Perm:
        return perm_inverse(self)

    def order(self) -> int:
        return perm_order(self)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self.images) + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())


def perm_compose(a: Perm, b: Perm) -> Perm:
    """Return the permutation ``i -> a(b(i))``."""
    if len(a) != len(b):
        raise ValueError("permutations of different degree")
    ai = a.images
    return Perm(tuple(ai[j - 1] for j in b.images))


def perm_inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a.images, start=1):
        out[v - 1] = i
    return Perm(tuple(out))


def perm_order(a: Perm) -> int:
    k, p = 1, a
    while not p.is_identity():
        p = p * a
        k += 1
    return k


_CYCLE_TOKENS = re.compile(r"\s*(\(|\)|,|\d+|\S)")


def parse_cycles(text: str, n: int = 5) -> Perm:
    """Parse disjoint-cycle notation such as ``"(1,2)(3,4,5)"``.

    Points not mentioned are fixed; the empty string is the identity.
    """
    images = list(range(1, n + 1))
    seen: set[int] = set()
    tokens = _CYCLE_TOKENS.findall(text.strip())
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of cycle text {text!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    while pos < len(tokens):
        tok = take()
        if tok != "(":
            raise ParseError(f"expected '(' but found {tok!r} in {text!r}")
        cycle: list[int] = []
        while True:
            tok = take()
            if not tok.isdigit():
                raise ParseError(f"expected a point but found {tok!r} in {text!r}")
            point = int(tok)
            if not 1 <= point <= n:
                raise ParseError(f"point {tok!r} out of range 1..{n}")
            if point in seen:
                raise ParseError(f"repeated point {tok!r} in {text!r}")
            seen.add(point)
            cycle.append(point)
            tok = take()
            if tok == ")":
                break
            if tok != ",":
                raise ParseError(f"expected ',' or ')' but found {tok!r} in {text!r}")
        for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
            images[src - 1] = dst
    return Perm(tuple(images))


@dataclass(frozen=True, order=True)
class GroupElem:
    """An element (sigma, x, y) of S5 x Z/2 x Z/3."""

    sigma: Perm
    x: int = 0
    y: int = 0

    def __post_init__(self):
        object.__setattr__(self, "x", int(self.x) % 2)
        object.__setattr__(self, "y", int(self.y) % 3)

    def __mul__(self, other: GroupElem) -> GroupElem:
        return group_mul(self, other)

    def inverse(self) -> GroupElem:
        return GroupElem(self.sigma.inverse(), -self.x, -self.y)

    def order(self) -> int:
        k, g = 1, self
        while g != IDENTITY:
            g = g * self
            k += 1
        return k

    def __str__(self) -> str:
        return f"({self.sigma},{self.x},{self.y})"

    def to_json(self) -> list:
        return [str(self.sigma), self.x, self.y]

    @classmethod
    def from_json(cls, data) -> GroupElem:
        sigma, x, y = data
        return cls(Perm.from_string(sigma), x, y)


def group_mul(a: GroupElem, b: GroupElem) -> GroupElem:
    return GroupElem(perm_compose(a.sigma, b.sigma), a.x + b.x, a.y + b.y)


IDENTITY_PERM = Perm.identity()
IDENTITY = GroupElem(IDENTITY_PERM, 0, 0)

_GENERATORS = {
    "R": GroupElem(parse_cycles("(1,2)(3,4,5)"), 0, 1),
    "L": GroupElem(parse_cycles("(1,2)(3,5,4)"), 0, 2),
    "V": GroupElem(parse_cycles("(1,4)(2,5)"), 1, 0),
}


def generator(letter: str) -> GroupElem:
    """The hatted generator of G for a move letter."""
    try:
        return _GENERATORS[letter]
    except KeyError:
        raise ParseError(f"unknown move letter {letter!r}") from None


def generator_perm(letter: str) -> Perm:
    return generator(letter).sigma


def parse_word(text: str) -> str:
    """Normalize a move word: case-insensitive input, uppercase output."""
    word = "".join(text.split()).upper()
    for ch in word:
        if ch not in LETTERS:
            raise ParseError(f"invalid move letter {ch!r} in word {text!r}")
    return word


def word_product(word: Iterable[str], lift: bool = True) -> Union[GroupElem, Perm]:
    """Left-to-right product of the letters' generators.

    With ``lift`` the product is taken in G, otherwise in S5 only.
    """
    if lift:
        return reduce(group_mul, (generator(ch) for ch in word), IDENTITY)
    return reduce(perm_compose, (generator_perm(ch) for ch in word), IDENTITY_PERM)


def running_products(word: str, start=None, lift: bool = False) -> list:
    """Partial products ``start * w_1 ... w_i`` for i = 1..len(word)."""
    if start is None:
        start = IDENTITY if lift else IDENTITY_PERM
    out = []
    g = start
    for ch in word:
        g = g * (generator(ch) if lift else generator_perm(ch))
        out.append(g)
    return out
