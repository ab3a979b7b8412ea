"""Hamiltonian cycles and paths of the cylindrical 5-puzzle state graph.

The state graph is the Cayley graph of S5 x Z/2 x Z/3 on the move
generators L, R, V.  Cycles are found on small quotient graphs, lifted back
to cycle covers and spliced into paths.
"""

from .group_core import (
    IDENTITY,
    GroupElem,
    ParseError,
    Perm,
    generator,
    parse_cycles,
    parse_word,
    perm_compose,
    perm_inverse,
    perm_order,
    word_product,
)
from .graphs import LabeledDigraph, WalkTrace, build_cayley, build_state_graph, trace
from .hamilton import (
    CycleCover,
    HamCycleWord,
    build_theorem1_word,
    build_theorem2_word,
    canonicalize,
    find_ham_cycles,
    lift_cycle,
    splice_to_path,
)
from .puzzle_model import HOME, Position, apply_move, decode, encode
from .quotient import Subgroup, build_quotient, make_subgroup, project

__version__ = "0.1.0"
