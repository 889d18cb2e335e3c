"""Brute-force cross-checks that share no search code with the main modules.

``oracle_enumerate_hpps`` walks raw half-edge steps using only the rigid
cyclic order of each vertex.  ``oracle_trace`` builds a port graph with one
node per segment and pulls strands out of it; its joints are read off the
segment layout rather than computed by the smoothing classifier.
"""
from __future__ import annotations

from ..errors import BudgetExceeded
from ..graph import HEAD, TAIL, AssemblyGraph, HalfEdge
from ..hpp import EndChoice, Hpp, Step
from ..label import IesPart, SegmentLayout

MAX_N = 6


def _rotation_neighbors(graph: AssemblyGraph):
    """Slot -> its two cyclic neighbours, from the rotation order alone."""
    nbr = {}
    for v in graph.vertices.values():
        ring = v.cyclic_order
        for k, h in enumerate(ring):
            nbr[h] = {ring[(k - 1) % 4], ring[(k + 1) % 4]}
    return nbr


def oracle_enumerate_hpps(graph: AssemblyGraph) -> list[Hpp]:
    """Every HPP found by exhaustive walks, in the library's orientation.

    A walk enters its first vertex through any slot (the start segment),
    repeatedly turns onto a neighbouring slot, and either crosses a full
    edge to an unvisited vertex or, once all vertices are visited, leaves
    through that slot as the finish segment.  Each HPP is found once in
    each direction; the copy that starts at the earlier-visited vertex (or,
    for one vertex, enters through its first pass) is kept.
    """
    n = graph.n
    if n > MAX_N:
        raise BudgetExceeded(f"oracle limited to n <= {MAX_N}, got {n}")
    if n == 0:
        return []
    nbr = _rotation_neighbors(graph)
    where = {}
    for v in graph.vertices.values():
        for h in v.slots:
            where[h] = v.id

    walks = []

    def extend(entry, arrived, steps, visited):
        for out in sorted(nbr[arrived]):
            if len(visited) == n:
                walks.append((entry, tuple(steps), out, tuple(visited)))
                continue
            e = graph.edges[out.edge]
            other = out.opposite()
            if e.is_loop or other not in where:
                continue
            if any(s.edge == out.edge for s in steps):
                continue
            w = where[other]
            if w in visited:
                continue
            step = Step(out.edge, out.end == TAIL)
            extend(entry, other, steps + [step], visited + [w])

    for h in sorted(where):
        extend(h, h, [], [where[h]])

    first_seen = {v: graph.word.symbols.index(v) for v in graph.vertices}
    found = []
    for entry, steps, leave, order in walks:
        middle = {s.edge for s in steps}
        if entry.edge in middle or leave.edge in middle:
            continue
        if n == 1:
            if graph.vertices[1].pass_index(entry) != 1:
                continue
        elif first_seen[order[0]] > first_seen[order[-1]]:
            continue
        start = EndChoice(entry, "1A" if entry.end == HEAD else "1B")
        finish = EndChoice(leave, "2A" if leave.end == HEAD else "2B")
        found.append(Hpp(steps, order, start, finish))
    return found


def _mds_slots(graph: AssemblyGraph, layout: SegmentLayout, vertex: int):
    slots = []
    for j, sym in enumerate(graph.word.symbols, start=1):
        if sym != vertex:
            continue
        for h, seg in ((HalfEdge(j - 1, HEAD), layout[j - 1][-1]),
                       (HalfEdge(j, TAIL), layout[j][0])):
            if not isinstance(seg, IesPart):
                slots.append(h)
    return slots


def oracle_trace(graph: AssemblyGraph, layout: SegmentLayout, vertex: int):
    """Components after smoothing ``vertex`` so that the path stays joined.

    Returns ``(kind, components)`` where each component is
    ``(cyclic, [(edge, position, backward), ...])``.
    """
    visits = [j for j, s in enumerate(graph.word.symbols, start=1) if s == vertex]
    a, b = visits
    i1, o1 = HalfEdge(a - 1, HEAD), HalfEdge(a, TAIL)
    i2, o2 = HalfEdge(b - 1, HEAD), HalfEdge(b, TAIL)
    path_slots = set(_mds_slots(graph, layout, vertex))
    if path_slots in ({i1, i2}, {o1, o2}):
        kind, pairs = "N", [(i1, i2), (o1, o2)]
    elif path_slots in ({i1, o2}, {i2, o1}):
        kind, pairs = "P", [(i1, o2), (i2, o1)]
    else:
        raise AssertionError(f"path slots {path_slots} do not span both passes")

    # port = (edge, position, side); side 0 = transversal-start end of segment
    def port_of(h: HalfEdge):
        return (h.edge, 0, 0) if h.end == TAIL else (h.edge, len(layout[h.edge]) - 1, 1)

    link = {}

    def join(p, q):
        link[p], link[q] = q, p

    for e in range(len(layout)):
        for k in range(len(layout[e]) - 1):
            join((e, k, 1), (e, k + 1, 0))
    for j, sym in enumerate(graph.word.symbols, start=1):
        if sym != vertex:
            join(port_of(HalfEdge(j - 1, HEAD)), port_of(HalfEdge(j, TAIL)))
    for p, q in pairs:
        join(port_of(p), port_of(q))

    unseen = {(e, k) for e in range(len(layout)) for k in range(len(layout[e]))}

    def walk(seg, side_in, cyclic):
        out = []
        first = (seg, side_in)
        while True:
            unseen.discard(seg)
            out.append((seg[0], seg[1], side_in == 1))
            nxt = link.get((seg[0], seg[1], 1 - side_in))
            if nxt is None:
                return out
            seg, side_in = (nxt[0], nxt[1]), nxt[2]
            if cyclic and (seg, side_in) == first:
                return out

    comps = [(False, walk((0, 0), 0, False))]
    while unseen:
        comps.append((True, walk(min(unseen), 0, True)))
    return kind, comps


def _rotations(seq):
    return {tuple(seq[k:] + seq[:k]) for k in range(len(seq))}


def tracer_segments(layout: SegmentLayout, strand) -> list:
    out = []
    for step in strand.steps:
        idx = range(len(layout[step.edge]))
        if not step.forward:
            idx = reversed(idx)
        out.extend((step.edge, k, not step.forward) for k in idx)
    return out


def trace_agrees(graph: AssemblyGraph, hpp: Hpp, vertex: int) -> bool:
    """Does the strand tracer match the port-graph oracle on this smoothing?"""
    from ..label import layout_segments
    from ..smooth import apply_smoothing

    layout = layout_segments(graph, hpp)
    outcome = apply_smoothing(graph, hpp, vertex)
    kind, comps = oracle_trace(graph, layout, vertex)
    if kind != outcome.kind or len(comps) != len(outcome.components):
        return False
    ours = [(s.cyclic, tracer_segments(layout, s)) for s in outcome.components]
    if ours[0] != comps[0]:
        return False
    theirs = [frozenset(_rotations(c)) for _, c in comps[1:]]
    mine = [frozenset(_rotations(c)) for _, c in ours[1:]]
    return sorted(map(sorted, theirs)) == sorted(map(sorted, mine))
