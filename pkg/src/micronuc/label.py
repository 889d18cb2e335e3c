"""MDS/IES segment layout of an HPP and the resulting micronuclear sequence."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .graph import HEAD, TAIL, AssemblyGraph
from .hpp import Hpp
from .seq import Ies, Mds, MicronuclearSequence


class MdsPart(NamedTuple):
    gene: int
    inverted: bool

    def token(self, backward: bool = False) -> Mds:
        """Token as read along the transversal, or against it if ``backward``."""
        neg = self.inverted != backward
        return Mds((-self.gene if neg else self.gene,))


class IesPart(NamedTuple):
    pass


IES = IesPart()
Segment = Union[MdsPart, IesPart]


@dataclass(frozen=True)
class SegmentLayout:
    edges: tuple[tuple[Segment, ...], ...]

    def __getitem__(self, edge: int) -> tuple[Segment, ...]:
        return self.edges[edge]

    def __len__(self):
        return len(self.edges)


def layout_segments(graph: AssemblyGraph, hpp: Hpp) -> SegmentLayout:
    n = graph.n
    full = {}
    for k, step in enumerate(hpp.middle, start=2):
        full[step.edge] = MdsPart(k, not step.forward)
    ends: dict[int, dict[str, MdsPart]] = {}
    # the start segment runs into the path, the finish segment out of it
    s = hpp.start.slot
    ends.setdefault(s.edge, {})[s.end] = MdsPart(1, s.end == TAIL)
    f = hpp.finish.slot
    ends.setdefault(f.edge, {})[f.end] = MdsPart(n + 1, f.end == HEAD)

    edges = []
    for e in graph.edges:
        if e.index in full:
            edges.append((full[e.index],))
            continue
        marks = ends.get(e.index, {})
        segs: list[Segment] = []
        if TAIL in marks:
            segs.append(marks[TAIL])
        segs.append(IES)
        if HEAD in marks:
            segs.append(marks[HEAD])
        edges.append(tuple(segs))
    return SegmentLayout(tuple(edges))


def segment_token(seg: Segment, backward: bool = False):
    return Ies() if isinstance(seg, IesPart) else seg.token(backward)


def micronuclear_sequence(graph: AssemblyGraph, hpp: Hpp) -> MicronuclearSequence:
    """Read the layout along the transversal ``e0 .. e2n``.

    Every pass of a vertex carries exactly one HPP slot, so neighbouring
    segments never share a kind and no merging is needed here.
    """
    layout = layout_segments(graph, hpp)
    tokens = [segment_token(seg) for segs in layout.edges for seg in segs]
    return MicronuclearSequence.linear(tokens, graph.n)
