import warnings

import pytest
from hypothesis import given, strategies as st

from micronuc.errors import CompositeToken, MixedSignWarning, MultiComponent, ParseError
from micronuc.seq import (Component, Ies, Mds, MicronuclearSequence, canonical_rotation,
                          distinct_count, merge_cyclic, merge_linear, orientation_closure,
                          parse_sequence, render, reverse_complement, reverse_hpp)
from micronuc import graph_of
from micronuc.hpp import find_hpp
from micronuc.label import micronuclear_sequence


def S(text, n=2):
    return parse_sequence(text, n)


def test_reverse_complement():
    assert render(reverse_complement(S("I0 M1 I1 -M2 I2 -M3 I3"))) == "I0 M3 I1 M2 I2 -M1 I3"


def test_reverse_complement_pairs_1221_rows():
    assert render(reverse_complement(S("I0 -M1 I1 M3 I2 -M2 I3"))) == "I0 M2 I1 -M3 I2 M1 I3"


def test_reverse_complement_inverts_composites():
    seq = MicronuclearSequence.linear([Ies(), Mds((1, 2)), Ies()])
    assert render(reverse_complement(seq)) == "I0 -M2,1 I1"


def test_reverse_hpp():
    assert render(reverse_hpp(S("I0 M2 I1 -M3 I2 M1 I3"), 2)) == "I0 -M2 I1 M1 I2 -M3 I3"
    assert render(reverse_hpp(S("I0 M1 I1 M2 I2", 1), 1)) == "I0 -M2 I1 -M1 I2"


def test_transforms_reject_multi_component():
    seq = S("I0 M1 I1 <-M3,2 I2>")
    with pytest.raises(MultiComponent):
        reverse_complement(seq)
    with pytest.raises(CompositeToken):
        reverse_hpp(S("I0 M1,2 I1 M3 I2"), 2)


def test_closure_1212_row1():
    c = orientation_closure(S("I0 M1 I1 -M2 I2 -M3 I3"), 2)
    assert render(c[3]) == "I0 -M1 I1 -M2 I2 M3 I3"
    # the G^- of row 1 is the G^R of row 3
    assert render(c[2]) == render(reverse_complement(S("I0 -M1 I1 -M2 I2 M3 I3")))


@pytest.mark.parametrize("word,count", [("1212", 24), ("1221", 16), ("11", 8), ("1122", 8)])
def test_distinct_count(word, count):
    assert distinct_count(graph_of(word)) == count


def test_distinct_count_single_vertex_by_hand():
    # G of the four HPPs of 11, as (first MDS, second MDS) along e1
    gammas = [(1, 2), (1, -2), (-1, -2), (-1, 2)]
    flip = lambda s: -(3 - abs(s)) * (1 if s > 0 else -1)
    rc = lambda p: (-p[1], -p[0])
    minus = lambda p: (flip(p[0]), flip(p[1]))
    seen = {x for p in gammas for x in (p, rc(p), minus(p), rc(minus(p)))}
    assert len(seen) == 8 == distinct_count(graph_of("11"))


@pytest.mark.parametrize("text", [
    "I0 -M1 I1 -M2 I2 M3 I3",
    "I0 M1 I1 <-M3,2 I2>",
    "I0 <M1,2 I1 -M3 I2>",
    "I0 M2,3 I1 M1 I2 <I3>",
    "I0 -M2,1 I1 M3 I2",
])
def test_round_trip_text(text):
    assert render(parse_sequence(text, 2)) == text


def test_parse_composite_inverted_reads_in_order():
    (tok,) = [t for t in S("I0 -M2,1 I1").tokens if isinstance(t, Mds)]
    assert tok.parts == (-2, -1)


def test_mixed_sign_token_renders_explicitly():
    seq = MicronuclearSequence.linear([Ies(), Mds((1, -2)), Ies()])
    with pytest.warns(UserWarning):
        text = render(seq)
    assert text == "I0 M(+1,-2) I1"
    assert parse_sequence(text).components == seq.components


@pytest.mark.parametrize("text,pos", [("I0 X1", 3), ("I0 <M1 I1", 9), ("I0 M1 I1>", 8)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_sequence(text)
    assert exc.value.position == pos


def test_ies_renumbered_across_components():
    seq = MicronuclearSequence((Component((Ies(7), Mds((1,)), Ies(7))),
                                Component((Mds((2,)), Ies(9)), cyclic=True)))
    assert render(seq) == "I0 M1 I1 <M2 I2>"


def test_merge_linear():
    out = merge_linear([Ies(), Mds((1,)), Mds((2,)), Ies(), Ies(), Mds((-3,))])
    assert out == [Ies(), Mds((1, 2)), Ies(), Mds((-3,))]


def test_merge_cyclic_reads_across_the_cut():
    # ... -M3 is followed by -M2 when the cycle closes
    assert merge_cyclic([Mds((-2,)), Ies(), Mds((-3,))]) == [Mds((-3, -2)), Ies()]
    assert merge_cyclic([Ies(), Mds((1,)), Ies()]) == [Mds((1,)), Ies()]
    assert merge_cyclic([Ies(), Ies()]) == [Ies()]


def test_mixed_merge_warns():
    with pytest.warns(MixedSignWarning):
        merge_linear([Mds((1,)), Mds((-2,))])


def test_canonical_rotation_picks_smallest_gene():
    toks = [Mds((3,)), Ies(), Mds((2, 1)), Ies()]
    assert canonical_rotation(toks)[0] == Mds((2, 1))


# -- properties ------------------------------------------------------------

@st.composite
def gamma_like(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    genes = draw(st.permutations(range(1, n + 2)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n + 1, max_size=n + 1))
    toks = [Ies()]
    for g, s in zip(genes, signs):
        toks += [Mds((g * s,)), Ies()]
    return MicronuclearSequence.linear(toks, n), n


@given(gamma_like())
def test_involutions_commute(case):
    seq, n = case
    R = reverse_complement
    Minus = lambda s: reverse_hpp(s, n)
    assert R(R(seq)) == seq
    assert Minus(Minus(seq)) == seq
    assert R(Minus(seq)) == Minus(R(seq))
    assert orientation_closure(seq, n)[3] == R(Minus(seq))


@given(gamma_like())
def test_gene_conservation(case):
    seq, n = case
    for s in orientation_closure(seq, n):
        assert sorted(abs(p) for t in s.mds_tokens for p in t.parts) == list(range(1, n + 2))
        assert s.ies_count == n + 2


@given(gamma_like())
def test_text_round_trip_property(case):
    seq, n = case
    assert parse_sequence(render(seq), n) == seq


def test_symmetric_hpps_have_coinciding_variants(g1212):
    # G^- equals G^R exactly when the signed gene word is fixed by
    # s -> -sign(s)(n+2-|s|) followed by reversal; two HPPs of 1212 are.
    for name in ("e2(1A, 2B)", "e2(1B, 2A)"):
        g, gr, gm, gmr = orientation_closure(micronuclear_sequence(g1212, find_hpp(g1212, name)), 2)
        assert gm == gr and gmr == g and g != gr
