"""Hamiltonian polygonal paths (HPPs) of an assembly graph.

An HPP is made of ``n - 1`` full middle edges that visit every 4-valent
vertex once, turning onto a neighbouring slot at each interior vertex, plus
two partial end segments.  The start segment sits on a neighbour slot of
the first middle edge at the first vertex and is labelled ``1A`` when that
slot is incoming with respect to the transversal, ``1B`` when outgoing; the
finish segment is labelled ``2A`` / ``2B`` in the same way.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import UnknownHpp
from .graph import HEAD, TAIL, AssemblyGraph, HalfEdge


class Step(NamedTuple):
    """A middle edge traversed by the path; ``forward`` follows the transversal."""

    edge: int
    forward: bool

    @property
    def from_slot(self) -> HalfEdge:
        return HalfEdge(self.edge, TAIL if self.forward else HEAD)

    @property
    def to_slot(self) -> HalfEdge:
        return HalfEdge(self.edge, HEAD if self.forward else TAIL)


class EndChoice(NamedTuple):
    slot: HalfEdge
    label: str  # "1A", "1B", "2A" or "2B"


@dataclass(frozen=True)
class Hpp:
    middle: tuple[Step, ...]
    vertex_order: tuple[int, ...]
    start: EndChoice
    finish: EndChoice

    @property
    def name(self) -> str:
        return hpp_name(self)

    @property
    def sort_key(self):
        return (tuple(s.edge for s in self.middle), self.vertex_order,
                self.start.label, self.finish.label)

    def __str__(self):
        return self.name


def hpp_name(hpp: Hpp) -> str:
    if hpp.middle:
        head = ".".join(f"e{s.edge}" for s in hpp.middle)
    else:
        head = f"v{hpp.vertex_order[0]}"
    return f"{head}({hpp.start.label}, {hpp.finish.label})"


def _paths_from(graph: AssemblyGraph, start: int):
    """DFS over full edges from ``start``; yields (steps, vertex order)."""
    n = graph.n
    full = graph.full_edges()

    def walk(vertex, arrived_by, steps, order, used):
        if len(order) == n:
            yield tuple(steps), tuple(order)
            return
        for e in full:
            if e.index in used or e.is_loop:
                continue
            for forward in (True, False):
                step = Step(e.index, forward)
                if graph.vertex_at(step.from_slot) != vertex:
                    continue
                if arrived_by is not None:
                    here = graph.vertex(arrived_by)
                    # polygonal turn: leave through the other pass
                    if here.pass_index(step.from_slot) == here.pass_index(arrived_by):
                        continue
                nxt = graph.vertex_at(step.to_slot)
                if nxt in order:
                    continue
                yield from walk(nxt, step.to_slot, steps + [step], order + [nxt],
                                used | {e.index})

    yield from walk(start, None, [], [start], frozenset())


def enumerate_middle_paths(graph: AssemblyGraph) -> list[tuple[tuple[Step, ...], tuple[int, ...]]]:
    """All middle paths, one per undirected path, earliest-visited vertex first."""
    if graph.n == 0:
        return []
    if graph.n == 1:
        return [((), (1,))]
    found = []
    for v in sorted(graph.vertices):
        for steps, order in _paths_from(graph, v):
            if graph.first_visit(order[0]) < graph.first_visit(order[-1]):
                found.append((steps, order))
    found.sort(key=lambda p: (tuple(s.edge for s in p[0]), p[1]))
    return found


def _end_choices(graph, vertex_id, busy_pass, digit):
    """Slots of the pass not used by the middle path at an end vertex."""
    v = graph.vertices[vertex_id]
    free = v.pass2 if busy_pass == 1 else v.pass1
    return [EndChoice(free.in_, f"{digit}A"), EndChoice(free.out, f"{digit}B")]


def enumerate_hpps(graph: AssemblyGraph) -> list[Hpp]:
    out = []
    for steps, order in enumerate_middle_paths(graph):
        if steps:
            first, last = graph.vertices[order[0]], graph.vertices[order[-1]]
            start_busy = first.pass_index(steps[0].from_slot)
            finish_busy = last.pass_index(steps[-1].to_slot)
        else:
            # single vertex: the "1" end takes pass1, the "2" end pass2
            start_busy, finish_busy = 2, 1
        for s in _end_choices(graph, order[0], start_busy, 1):
            for f in _end_choices(graph, order[-1], finish_busy, 2):
                out.append(Hpp(steps, order, s, f))
    out.sort(key=lambda h: h.sort_key)
    return out


_NAME_RE = re.compile(r"^\s*([ev][\d.e]*)\s*\(\s*(1[AB])\s*,?\s*(2[AB])\s*\)\s*$")


def _normalize_name(name: str) -> str:
    m = _NAME_RE.match(name)
    if not m:
        return name.strip()
    return f"{m.group(1)}({m.group(2)}, {m.group(3)})"


def find_hpp(graph: AssemblyGraph, name: str) -> Hpp:
    """Look an HPP up by its name; spacing inside the parentheses is free."""
    wanted = _normalize_name(name)
    for h in enumerate_hpps(graph):
        if h.name == wanted:
            return h
    raise UnknownHpp(f"no HPP named {name!r} in graph {graph.word}")
