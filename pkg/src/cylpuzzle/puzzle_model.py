"""Positions and moves of the sliding puzzle on the 2x3 cylinder.

Board cells are ``(row, col)`` pairs in Z/2 x Z/3, indexed row-major.  A
position stores the tile on each cell, with 0 for the blank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .group_core import GroupElem, ParseError, Perm

ROWS, COLS = 2, 3

# blank displacement per move letter
MOVE_OFFSETS = {"R": (0, 1), "L": (0, 2), "V": (1, 0)}
# cells read, relative to the blank, to form the S5 part
SIGMA_OFFSETS = ((0, 1), (0, 2), (1, 0), (1, 1), (1, 2))


class UnsupportedBoardError(ValueError):
    pass


class CylCoord(NamedTuple):
    row: int
    col: int

    def __add__(self, other) -> CylCoord:  # type: ignore[override]
        return CylCoord((self.row + other[0]) % ROWS, (self.col + other[1]) % COLS)

    def __sub__(self, other) -> CylCoord:
        return CylCoord((self.row - other[0]) % ROWS, (self.col - other[1]) % COLS)

    @property
    def index(self) -> int:
        return self.row * COLS + self.col


@dataclass(frozen=True)
class BoardGraph:
    vertices: tuple[CylCoord, ...]
    edges: frozenset[frozenset[CylCoord]]

    def neighbors(self, v: CylCoord) -> list[CylCoord]:
        return sorted(w for e in self.edges if v in e for w in e if w != v)

    def degree(self, v: CylCoord) -> int:
        return len(self.neighbors(v))

    def has_edge(self, v, w) -> bool:
        return frozenset((CylCoord(*v), CylCoord(*w))) in self.edges


def build_cylinder(rows: int = 2, cols: int = 3) -> BoardGraph:
    """The cylindrical grid: cells adjacent iff they differ by (1,0) or +-(0,1)."""
    if (rows, cols) != (ROWS, COLS):
        raise UnsupportedBoardError(f"only the 2x3 cylinder is supported, got {rows}x{cols}")
    vertices = tuple(CylCoord(r, c) for r in range(rows) for c in range(cols))
    diffs = {(1, 0), (0, 1), (0, cols - 1)}
    edges = set()
    for v in vertices:
        for w in vertices:
            if v != w and tuple(w - v) in diffs:
                edges.add(frozenset((v, w)))
    return BoardGraph(vertices, frozenset(edges))


BOARD = build_cylinder()


@dataclass(frozen=True, order=True)
class Position:
    """Tiles per cell in row-major order; exactly one cell holds 0 (the blank)."""

    cells: tuple[int, ...]

    def __post_init__(self):
        cells = tuple(int(v) for v in self.cells)
        if sorted(cells) != list(range(ROWS * COLS)):
            raise ValueError(f"position must use each of 0..{ROWS * COLS - 1} once: {cells}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def parse(cls, text: str) -> Position:
        """Parse ``"abc/def"``: two slash-separated rows of digits 0-5."""
        rows = text.strip().split("/")
        if len(rows) != ROWS or any(len(r) != COLS or not r.isdigit() for r in rows):
            raise ParseError(f"position must look like '012/345', got {text!r}")
        try:
            return cls(tuple(int(ch) for ch in "".join(rows)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def __str__(self) -> str:
        s = "".join(map(str, self.cells))
        return "/".join(s[i:i + COLS] for i in range(0, len(s), COLS))

    def at(self, cell: CylCoord) -> int:
        return self.cells[cell.index]

    @property
    def blank(self) -> CylCoord:
        i = self.cells.index(0)
        return CylCoord(*divmod(i, COLS))


HOME = Position.parse("012/345")


def apply_move(f: Position, letter: str) -> Position:
    """Swap the blank with its neighbour in the direction of ``letter``."""
    b = f.blank
    target = b + MOVE_OFFSETS[letter]
    cells = list(f.cells)
    cells[b.index], cells[target.index] = cells[target.index], 0
    return Position(tuple(cells))


def encode(f: Position) -> GroupElem:
    b = f.blank
    sigma = Perm(tuple(f.at(b + off) for off in SIGMA_OFFSETS))
    return GroupElem(sigma, b.row, b.col)


def decode(g: GroupElem) -> Position:
    b = CylCoord(g.x, g.y)
    cells = [0] * (ROWS * COLS)
    for off, tile in zip(SIGMA_OFFSETS, g.sigma.images):
        cells[(b + off).index] = tile
    return Position(tuple(cells))
