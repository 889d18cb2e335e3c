"""Single-vertex P/N smoothings that keep the HPP connected.

Smoothing a 4-valent vertex removes it and fuses its four slots in two
pairs ("joints").  With passes ``(i1, o1)`` and ``(i2, o2)``:

* N (non-parallel): ``i1-i2`` and ``o1-o2``; the strand between the two
  visits is reversed, the transversal stays one open strand.
* P (parallel): ``i1-o2`` and ``i2-o1``; the stretch between the visits
  closes up into a cycle.

The kind is not a free choice: it is whichever one joins the two slots the
HPP uses at that vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotFourValent, VertexNotOnPath
from .graph import HEAD, TAIL, AssemblyGraph, HalfEdge
from .hpp import Hpp
from .label import SegmentLayout, layout_segments, segment_token
from .seq import Component, MicronuclearSequence, merge_cyclic, merge_linear

P = "P"
N = "N"


class TraceStep(NamedTuple):
    edge: int
    forward: bool


@dataclass(frozen=True)
class Strand:
    steps: tuple[TraceStep, ...]
    cyclic: bool

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(s.edge for s in self.steps)


@dataclass(frozen=True)
class SmoothingOutcome:
    vertex: int
    kind: str
    joints: frozenset
    components: tuple[Strand, ...]
    sequence: MicronuclearSequence

    def joint_of(self, h: HalfEdge) -> HalfEdge:
        for pair in self.joints:
            if h in pair:
                (other,) = pair - {h}
                return other
        raise KeyError(h)


def hpp_half_edges_at(graph: AssemblyGraph, hpp: Hpp, vertex: int) -> tuple[HalfEdge, HalfEdge]:
    """The slot the HPP arrives by and the slot it leaves by at ``vertex``."""
    if vertex not in hpp.vertex_order:
        raise VertexNotOnPath(f"v{vertex} is not on {hpp.name}")
    k = hpp.vertex_order.index(vertex)
    arrive = hpp.start.slot if k == 0 else hpp.middle[k - 1].to_slot
    leave = hpp.finish.slot if k == len(hpp.vertex_order) - 1 else hpp.middle[k].from_slot
    return arrive, leave


def classify_smoothing(graph: AssemblyGraph, hpp: Hpp, vertex: int) -> str:
    a, b = hpp_half_edges_at(graph, hpp, vertex)
    return N if a.incoming == b.incoming else P


def joints_for(graph: AssemblyGraph, vertex: int, kind: str) -> frozenset:
    v = graph.vertices[vertex]
    (i1, o1), (i2, o2) = v.pass1, v.pass2
    if kind == N:
        pairs = ((i1, i2), (o1, o2))
    else:
        pairs = ((i1, o2), (i2, o1))
    return frozenset(frozenset(p) for p in pairs)


def trace_components(graph: AssemblyGraph, vertex: int, joints) -> tuple[Strand, ...]:
    """Follow strands through the rewired graph.

    The open strand starts at the source terminus.  Whatever is left is
    traced as cycles, each opened at its lowest-numbered edge and run in
    the transversal direction.
    """
    mate = {}
    for pair in joints:
        a, b = tuple(pair)
        mate[a], mate[b] = b, a

    def after(arrived: HalfEdge):
        if arrived in graph.terminal_slots:
            return None
        if graph.vertex_at(arrived) == vertex:
            nxt = mate[arrived]
        else:
            nxt = graph.straight_partner(arrived)
        return TraceStep(nxt.edge, nxt.end == TAIL)

    def run(first: TraceStep, stop_at_start: bool):
        steps = [first]
        while True:
            cur = steps[-1]
            nxt = after(HalfEdge(cur.edge, HEAD if cur.forward else TAIL))
            if nxt is None or (stop_at_start and nxt == first):
                return steps
            steps.append(nxt)

    strands = [Strand(tuple(run(TraceStep(0, True), False)), cyclic=False)]
    seen = set(strands[0].edges)
    for e in graph.edges:
        if e.index not in seen:
            s = Strand(tuple(run(TraceStep(e.index, True), True)), cyclic=True)
            seen |= s.edges
            strands.append(s)
    return tuple(strands)


def strand_tokens(layout: SegmentLayout, strand: Strand) -> list:
    out = []
    for step in strand.steps:
        segs = layout[step.edge]
        if not step.forward:
            segs = reversed(segs)
        out.extend(segment_token(s, backward=not step.forward) for s in segs)
    return out


def apply_smoothing(graph: AssemblyGraph, hpp: Hpp, vertex: int) -> SmoothingOutcome:
    if vertex not in graph.vertices:
        raise NotFourValent(f"v{vertex} is not a 4-valent vertex of {graph.word}")
    kind = classify_smoothing(graph, hpp, vertex)
    joints = joints_for(graph, vertex, kind)
    assert frozenset(hpp_half_edges_at(graph, hpp, vertex)) in joints
    strands = trace_components(graph, vertex, joints)
    layout = layout_segments(graph, hpp)
    comps = []
    for s in strands:
        toks = strand_tokens(layout, s)
        comps.append(Component(tuple(merge_cyclic(toks) if s.cyclic else merge_linear(toks)),
                               cyclic=s.cyclic))
    open_, cycles = comps[:1], comps[1:]
    order = sorted(range(len(cycles)), key=lambda i: min(strands[i + 1].edges))
    seq = MicronuclearSequence(tuple(open_ + [cycles[i] for i in order]), graph.n)
    return SmoothingOutcome(vertex, kind, joints, strands, seq)


def smoothed_sequence(graph: AssemblyGraph, hpp: Hpp, vertex: int,
                      drop_ies_circles: bool = False) -> MicronuclearSequence:
    seq = apply_smoothing(graph, hpp, vertex).sequence
    return seq.without_ies_circles() if drop_ies_circles else seq
