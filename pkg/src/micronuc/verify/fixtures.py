"""Golden rows transcribed from the published tables, and their evaluation.

Each fixture line is ``word, row-label, kind, expected, status``.  The
``expected`` column always holds what this library produces.  ``status``
says how that relates to the printed row:

``exact``
    printed text and expected value are the same string;
``cyclic-equivalent(<printed>)``
    the printed row is a looser rendering of the same components (bracket
    placement, an IES cut in two, an omitted IES circle);
``erratum(<printed>)``
    the printed row disagrees with the derived value and is kept only for
    the record.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from ..graph import AssemblyGraph, build_graph
from ..hpp import find_hpp
from ..label import micronuclear_sequence
from ..seq import (Component, Ies, Mds, MicronuclearSequence, distinct_count,
                   merge_cyclic, merge_linear, orientation_closure, parse_sequence,
                   render)
from ..smooth import apply_smoothing
from ..word import canonicalize, parse_word

# group labels used by the printed tables that differ from ours
EDGE_ALIASES = {"1221": {"e2": "e3"}}

EXPECTED_COUNTS = {"1212": 24, "1221": 16}

_STATUS_RE = re.compile(r"^(exact|cyclic-equivalent|erratum)(?:\((.*)\))?$")
_SMOOTH_RE = re.compile(r"^smoothing\(v(\d+),([PN])\)$")


@dataclass(frozen=True)
class Fixture:
    word: str
    row_label: str
    kind: str
    expected: str
    status: str
    printed: str

    @property
    def row(self) -> int:
        return int(self.row_label.split()[0])

    @property
    def printed_name(self) -> str:
        return self.row_label.split(None, 1)[1]

    @property
    def hpp_name(self) -> str:
        name = self.printed_name
        for theirs, ours in EDGE_ALIASES.get(self.word, {}).items():
            name = re.sub(rf"\b{theirs}\b", ours, name)
        return name


def parse_fixture_line(line: str) -> Fixture:
    word, label, kind, expected, status = line.rstrip("\n").split("\t")
    m = _STATUS_RE.match(status)
    if not m:
        raise ValueError(f"bad status {status!r}")
    printed = m.group(2) if m.group(2) is not None else expected
    return Fixture(word, label, kind, expected, m.group(1), printed)


def load_fixtures(path=None) -> list[Fixture]:
    if path is None:
        text = resources.files("micronuc.verify").joinpath(
            "data/golden.tsv").read_text()
    else:
        with open(path) as f:
            text = f.read()
    return [parse_fixture_line(ln) for ln in text.splitlines()
            if ln.strip() and not ln.startswith("#")]


# -- presentation normalizer -----------------------------------------------

def _split_leading(comp: Component):
    """Ways a printed cycle may have fused its cut-open MDS block.

    The tables sometimes open a cycle inside an MDS block and print the
    piece after the cut ahead of the piece before it, as a single token.
    """
    yield comp
    toks = comp.tokens
    if toks and isinstance(toks[0], Mds) and len(toks[0].parts) > 1:
        parts = toks[0].parts
        for k in range(1, len(parts)):
            yield Component((Mds(parts[:k]),) + toks[1:] + (Mds(parts[k:]),), True)


def _presentations(seq: MicronuclearSequence):
    comps = list(seq.components)
    variants = [comps]
    # an unbracketed row whose leading IES is really the whole open strand
    if len(comps) == 1 and not comps[0].cyclic and len(comps[0].tokens) > 2:
        toks = comps[0].tokens
        if isinstance(toks[0], Ies):
            variants.append([Component(toks[:1]), Component(toks[1:], True)])
    for var in variants:
        var = list(var)
        # an IES printed at the head of a cycle that closes the open strand
        for i in range(len(var) - 1):
            lin, cyc = var[i], var[i + 1]
            if (not lin.cyclic and cyc.cyclic and lin.tokens
                    and isinstance(lin.tokens[-1], Mds) and isinstance(cyc.tokens[0], Ies)):
                var[i] = Component(lin.tokens + cyc.tokens[:1])
                var[i + 1] = Component(cyc.tokens[1:], True)
        yield from _expand_cycles(var, 0)


def _expand_cycles(comps, i):
    if i == len(comps):
        yield comps
        return
    options = _split_leading(comps[i]) if comps[i].cyclic else [comps[i]]
    for c in options:
        yield from _expand_cycles(comps[:i] + [c] + comps[i + 1:], i + 1)


def normalize(comps, n: int = 0) -> MicronuclearSequence:
    out = []
    for c in comps:
        toks = merge_cyclic(c.tokens) if c.cyclic else merge_linear(c.tokens)
        out.append(Component(tuple(toks), c.cyclic))
    return MicronuclearSequence(tuple(out), n)


def printed_equivalent(ours: MicronuclearSequence, printed: str) -> bool:
    """True if the printed row is a presentation variant of ``ours``."""
    target = render(ours.without_ies_circles())
    seq = parse_sequence(printed, ours.n, brackets="[]")
    return any(render(normalize(v, ours.n)) == target for v in _presentations(seq))


# -- evaluation ---------------------------------------------------------------

@dataclass
class Outcome:
    fixture: Fixture
    actual: str
    verdict: str  # exact | cyclic-equivalent | erratum | unexpected
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict != "unexpected"


@dataclass
class Report:
    outcomes: list[Outcome] = field(default_factory=list)
    counts: dict[str, tuple[int, int]] = field(default_factory=dict)

    def tally(self) -> dict[str, int]:
        t = {"exact": 0, "cyclic-equivalent": 0, "erratum": 0, "unexpected": 0}
        for o in self.outcomes:
            t[o.verdict] += 1
        t["unexpected"] += sum(1 for got, want in self.counts.values() if got != want)
        return t

    @property
    def ok(self) -> bool:
        return self.tally()["unexpected"] == 0

    def to_text(self) -> str:
        lines = []
        for o in self.outcomes:
            f = o.fixture
            lines.append(f"{o.verdict:<18} {f.word} row {f.row_label:<16} {f.kind:<18} {o.actual}"
                         + (f"   [{o.note}]" if o.note else ""))
        for w, (got, want) in self.counts.items():
            mark = "count" if got == want else "unexpected"
            lines.append(f"{mark:<18} {w} distinct sequences {got} (expected {want})")
        t = self.tally()
        lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in t.items()))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "summary": self.tally(),
            "distinct_counts": {w: {"got": g, "expected": e} for w, (g, e) in self.counts.items()},
            "fixtures": [
                {"word": o.fixture.word, "row": o.fixture.row_label, "kind": o.fixture.kind,
                 "expected": o.fixture.expected, "actual": o.actual,
                 "printed": o.fixture.printed, "status": o.fixture.status,
                 "verdict": o.verdict, "note": o.note}
                for o in self.outcomes
            ],
        }


def _graph(word: str, cache: dict) -> AssemblyGraph:
    if word not in cache:
        cache[word] = build_graph(canonicalize(parse_word(word)))
    return cache[word]


_ORIENT_INDEX = {"gamma": 0, "gamma_r": 1, "gamma_minus": 2, "gamma_minus_r": 3}


def compute(fx: Fixture, graph: AssemblyGraph) -> tuple[MicronuclearSequence, str | None]:
    """Our value for a fixture, plus the smoothing kind where relevant."""
    hpp = find_hpp(graph, fx.hpp_name)
    if fx.kind in _ORIENT_INDEX:
        gamma = micronuclear_sequence(graph, hpp)
        return orientation_closure(gamma, graph.n)[_ORIENT_INDEX[fx.kind]], None
    m = _SMOOTH_RE.match(fx.kind)
    if not m:
        raise ValueError(f"unknown fixture kind {fx.kind!r}")
    outcome = apply_smoothing(graph, hpp, int(m.group(1)))
    return outcome.sequence, outcome.kind


def evaluate(fx: Fixture, graph: AssemblyGraph) -> Outcome:
    seq, kind = compute(fx, graph)
    actual = render(seq)
    m = _SMOOTH_RE.match(fx.kind)
    if m and kind != m.group(2):
        return Outcome(fx, actual, "unexpected", f"classified {kind}, table says {m.group(2)}")
    if actual != fx.expected:
        return Outcome(fx, actual, "unexpected", f"expected {fx.expected}")
    if fx.status == "exact":
        return Outcome(fx, actual, "exact")
    equivalent = printed_equivalent(seq, fx.printed)
    if fx.status == "cyclic-equivalent":
        if equivalent:
            return Outcome(fx, actual, "cyclic-equivalent", f"printed {fx.printed}")
        return Outcome(fx, actual, "unexpected", f"not equivalent to printed {fx.printed}")
    if equivalent:
        return Outcome(fx, actual, "unexpected", f"catalogued erratum now matches {fx.printed}")
    return Outcome(fx, actual, "erratum", f"printed {fx.printed}")


def run_fixture_suite(fixtures=None) -> Report:
    fixtures = load_fixtures() if fixtures is None else fixtures
    cache: dict = {}
    report = Report()
    for fx in fixtures:
        report.outcomes.append(evaluate(fx, _graph(fx.word, cache)))
    for word, want in EXPECTED_COUNTS.items():
        report.counts[word] = (distinct_count(_graph(word, cache)), want)
    return report
