import pytest

from micronuc import graph_of
from micronuc.errors import BudgetExceeded
from micronuc.graph import build_graph
from micronuc.hpp import enumerate_hpps
from micronuc.label import layout_segments
from micronuc.hpp import find_hpp
from micronuc.seq import parse_sequence
from micronuc.verify import (load_fixtures, oracle_enumerate_hpps, oracle_trace,
                             printed_equivalent, run_fixture_suite, trace_agrees)
from micronuc.verify.fixtures import parse_fixture_line
from micronuc.word import canonical_words

from conftest import words_up_to


def key(h):
    return (h.start.slot, tuple(h.middle), h.finish.slot, h.start.label, h.finish.label)


@pytest.mark.parametrize("word,count", [("1212", 12), ("1221", 8), ("1122", 4), ("11", 4)])
def test_oracle_counts(word, count):
    assert len(oracle_enumerate_hpps(graph_of(word))) == count


def test_oracle_1122_uses_only_e2():
    assert {tuple(s.edge for s in h.middle) for h in oracle_enumerate_hpps(graph_of("1122"))} == {(2,)}


@pytest.mark.parametrize("w", words_up_to(4), ids=str)
def test_enumerator_matches_oracle(w):
    g = build_graph(w)
    assert {key(h) for h in enumerate_hpps(g)} == {key(h) for h in oracle_enumerate_hpps(g)}


def test_oracle_budget():
    w = next(canonical_words(7))
    with pytest.raises(BudgetExceeded):
        oracle_enumerate_hpps(build_graph(w))


def test_oracle_trace_examples(g1212, g1221):
    lay = layout_segments(g1212, find_hpp(g1212, "e2(1A, 2B)"))
    kind, comps = oracle_trace(g1212, lay, 1)
    assert kind == "N" and [c for c, _ in comps] == [False]
    lay = layout_segments(g1212, find_hpp(g1212, "e2(1A, 2A)"))
    kind, comps = oracle_trace(g1212, lay, 2)
    assert kind == "P" and [c for c, _ in comps] == [False, True]
    lay = layout_segments(g1221, find_hpp(g1221, "e3(1A, 2A)"))
    kind, comps = oracle_trace(g1221, lay, 2)
    assert kind == "P" and comps[1] == (True, [(2, 0, False)])
    assert lay[2] == lay[2][:1]  # the loop carries only an IES


@pytest.mark.parametrize("w", [w for w in words_up_to(3) if w.n], ids=str)
def test_tracer_matches_oracle(w):
    g = build_graph(w)
    for h in enumerate_hpps(g):
        for v in h.vertex_order:
            assert trace_agrees(g, h, v), (h.name, v)


def test_fixture_file_inventory():
    fx = load_fixtures()
    assert len(fx) == 24 + 16 + 8 + 40
    keys = [(f.word, f.row, f.kind) for f in fx]
    assert len(set(keys)) == len(keys)
    for word, rows in (("1212", 12), ("1221", 8)):
        for kind in ("gamma", "gamma_r"):
            assert sorted(f.row for f in fx if f.word == word and f.kind == kind) == list(range(1, rows + 1))
        smooth = [f for f in fx if f.word == word and f.kind.startswith("smoothing")]
        for v in (1, 2):
            assert sorted(f.row for f in smooth if f.kind.startswith(f"smoothing(v{v}")) == list(range(1, rows + 1))


def test_fixture_line_parsing():
    fx = parse_fixture_line("1221\t5 e2(1A, 2B)\tgamma\tI0 M1 I1 M3 I2 -M2 I3\texact\n")
    assert fx.hpp_name == "e3(1A, 2B)" and fx.printed == fx.expected
    fx = parse_fixture_line("1212\t7 e3(1B, 2A)\tsmoothing(v1,N)\tI0 M3 I1 M1,2 I2\terratum(I0 M3,1,2 I1)")
    assert fx.status == "erratum" and fx.printed == "I0 M3,1,2 I1"


@pytest.mark.parametrize("ours,printed,ok", [
    ("I0 M3 I1 <-M2,1 I2>", "I0 M3 [I1 -M2,1 I2]", True),
    ("I0 M1 I1 <-M3,2 I2>", "I0 M1 I1 [-M2,3 I2]", True),
    ("I0 <M1,2 I1 -M3 I2>", "I0 M1,2 I1 -M3 I2", True),
    ("I0 M2,3 I1 M1 I2 <I3>", "I0 M2,3 I1 M1 I2", True),
    ("I0 M3 I1 M1,2 I2", "I0 M3,1,2 I1", False),
    ("I0 M1 I1 <-M3,2 I2>", "I0 M1 I1 [M3,2 I2]", False),
])
def test_printed_equivalence(ours, printed, ok):
    assert printed_equivalent(parse_sequence(ours, 2), printed) is ok


def test_fixture_suite_clean():
    report = run_fixture_suite()
    t = report.tally()
    assert t["unexpected"] == 0, report.to_text()
    assert t["erratum"] == 7
    assert report.counts == {"1212": (24, 24), "1221": (16, 16)}


def test_fixture_suite_flags_a_wrong_row():
    fx = load_fixtures()
    bad = fx[0].__class__(**{**fx[0].__dict__, "expected": "I0 M1 I1 M2 I2 M3 I3",
                             "printed": "I0 M1 I1 M2 I2 M3 I3"})
    report = run_fixture_suite([bad])
    assert not report.ok
