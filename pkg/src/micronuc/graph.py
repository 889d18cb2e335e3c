"""Rigid-vertex assembly graphs built from double-occurrence words.

Edges ``e0 .. e2n`` are numbered and oriented by the transversal. Each
4-valent vertex is visited twice by the transversal; visit ``k`` occupies
``pass k`` = (arriving half-edge, departing half-edge). The rigid cyclic
order around a vertex is ``(pass1.in, pass2.in, pass1.out, pass2.out)``, so
the two slots of one pass sit opposite each other (straight through) and a
slot's neighbours are the two slots of the other pass.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

from .errors import NotFourValent
from .word import Word

TAIL: Literal["tail"] = "tail"
HEAD: Literal["head"] = "head"


class HalfEdge(NamedTuple):
    edge: int
    end: str  # "tail" | "head"

    def __str__(self):
        return f"e{self.edge}.{self.end}"

    @property
    def incoming(self) -> bool:
        """A head slot is where its edge arrives at the vertex."""
        return self.end == HEAD

    def opposite(self) -> "HalfEdge":
        return HalfEdge(self.edge, TAIL if self.end == HEAD else HEAD)


class Pass(NamedTuple):
    in_: HalfEdge
    out: HalfEdge

    def __contains__(self, h):
        return h == self.in_ or h == self.out


@dataclass(frozen=True)
class Edge:
    index: int
    tail: int  # vertex id; 0 is the source terminus, n+1 the sink
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def __str__(self):
        return f"e{self.index}"


@dataclass(frozen=True)
class FourValentVertex:
    id: int
    pass1: Pass
    pass2: Pass

    @property
    def passes(self) -> tuple[Pass, Pass]:
        return (self.pass1, self.pass2)

    @property
    def cyclic_order(self) -> tuple[HalfEdge, HalfEdge, HalfEdge, HalfEdge]:
        return (self.pass1.in_, self.pass2.in_, self.pass1.out, self.pass2.out)

    @property
    def slots(self) -> tuple[HalfEdge, ...]:
        return self.cyclic_order

    def pass_index(self, h: HalfEdge) -> int:
        if h in self.pass1:
            return 1
        if h in self.pass2:
            return 2
        raise NotFourValent(f"{h} is not a slot of v{self.id}")

    def __str__(self):
        return f"v{self.id}"


class AssemblyGraph:
    """Immutable half-edge incidence structure of an assembly graph."""

    def __init__(self, word: Word, edges, vertices):
        self.word = word
        self.n = word.n
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.vertices: dict[int, FourValentVertex] = dict(vertices)
        self._owner: dict[HalfEdge, int] = {}
        for v in self.vertices.values():
            for h in v.slots:
                self._owner[h] = v.id

    def __repr__(self):
        return f"AssemblyGraph({self.word})"

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return self.n + 1

    @property
    def terminal_slots(self) -> tuple[HalfEdge, HalfEdge]:
        return (HalfEdge(0, TAIL), HalfEdge(2 * self.n, HEAD))

    def half_edges(self):
        for e in self.edges:
            yield HalfEdge(e.index, TAIL)
            yield HalfEdge(e.index, HEAD)

    def full_edges(self):
        """Edges whose two ends are both 4-valent vertices."""
        return [e for e in self.edges if 0 < e.index < 2 * self.n]

    def vertex_at(self, h: HalfEdge) -> int:
        """Vertex id at which half-edge ``h`` sits (terminals included)."""
        e = self.edges[h.edge]
        return e.tail if h.end == TAIL else e.head

    def vertex(self, h: HalfEdge) -> FourValentVertex:
        try:
            return self.vertices[self._owner[h]]
        except KeyError:
            raise NotFourValent(f"{h} does not sit at a 4-valent vertex") from None

    def is_four_valent_slot(self, h: HalfEdge) -> bool:
        return h in self._owner

    def neighbors(self, h: HalfEdge) -> frozenset[HalfEdge]:
        v = self.vertex(h)
        other = v.pass2 if h in v.pass1 else v.pass1
        return frozenset(other)

    def straight_partner(self, h: HalfEdge) -> HalfEdge:
        v = self.vertex(h)
        p = v.pass1 if h in v.pass1 else v.pass2
        return p.out if h == p.in_ else p.in_

    def first_visit(self, vertex_id: int) -> int:
        """Position (1-based) of the first occurrence of a vertex in the word."""
        return self.word.symbols.index(vertex_id) + 1


def build_graph(word: Word) -> AssemblyGraph:
    n = word.n
    stations = [0, *word.symbols, n + 1]
    edges = [Edge(i, stations[i], stations[i + 1]) for i in range(2 * n + 1)]
    seen: dict[int, list[Pass]] = {}
    for j, v in enumerate(word.symbols, start=1):
        seen.setdefault(v, []).append(Pass(HalfEdge(j - 1, HEAD), HalfEdge(j, TAIL)))
    vertices = {v: FourValentVertex(v, p[0], p[1]) for v, p in seen.items()}
    return AssemblyGraph(word, edges, vertices)


def to_dot(graph: AssemblyGraph, hpp=None) -> str:
    """Render the graph in DOT syntax.

    Transversal edges are solid; when ``hpp`` is given, its middle edges and
    the edges carrying its end segments get ``style=dashed``.
    """
    dashed = set()
    if hpp is not None:
        dashed.update(step.edge for step in hpp.middle)
        dashed.add(hpp.start.slot.edge)
        dashed.add(hpp.finish.slot.edge)
    lines = [f'digraph "{graph.word}" {{', "  rankdir=LR;"]
    for v in range(graph.n + 2):
        shape = "circle" if 1 <= v <= graph.n else "point"
        lines.append(f'  v{v} [label="v{v}", shape={shape}];')
    for e in graph.edges:
        attrs = [f'label="e{e.index}"']
        if e.index in dashed:
            attrs.append("style=dashed")
        lines.append(f"  v{e.tail} -> v{e.head} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
