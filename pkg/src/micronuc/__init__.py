"""Assembly graphs, Hamiltonian polygonal paths and micronuclear sequences."""
from .errors import MicronucError
from .graph import AssemblyGraph, HalfEdge, build_graph, to_dot
from .hpp import Hpp, enumerate_hpps, enumerate_middle_paths, find_hpp, hpp_name
from .label import layout_segments, micronuclear_sequence
from .seq import (MicronuclearSequence, distinct_count, orientation_closure,
                  parse_sequence, render, reverse_complement, reverse_hpp)
from .word import Word, canonicalize, parse_word

__version__ = "0.1.0"


def graph_of(text: str) -> AssemblyGraph:
    """Parse, canonicalize and build in one go."""
    return build_graph(canonicalize(parse_word(text)))
