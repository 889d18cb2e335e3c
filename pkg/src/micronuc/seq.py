"""Micronuclear sequences as token lists, and their orientation transforms.

Text form (one line)::

    I0 M1 I1 -M2 I2 -M3 I3          a single linear component
    I0 M1 I1 <-M3,2 I2>             linear component followed by a cycle
    M1,2  -M2,1  M(+1,-2)           composite MDS tokens

``M1,2`` reads M1 then M2; ``-M2,1`` reads inverted M2 then inverted M1.
IES indices are presentation only: they are renumbered 0, 1, ... in read
order every time a sequence is built.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import CompositeToken, MixedSignWarning, MultiComponent, ParseError


@dataclass(frozen=True)
class Mds:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts or 0 in self.parts:
            raise ValueError(f"bad MDS parts {self.parts}")
        if len({abs(p) for p in self.parts}) != len(self.parts):
            raise ValueError(f"repeated gene index in {self.parts}")

    def invert(self) -> "Mds":
        return Mds(tuple(-p for p in reversed(self.parts)))

    @property
    def uniform(self) -> bool:
        return all(p > 0 for p in self.parts) or all(p < 0 for p in self.parts)

    @property
    def genes(self) -> tuple[int, ...]:
        return tuple(abs(p) for p in self.parts)

    def __str__(self):
        return render_token(self)


@dataclass(frozen=True)
class Ies:
    index: int = 0

    def __str__(self):
        return f"I{self.index}"


Token = Union[Mds, Ies]


def render_token(tok: Token) -> str:
    if isinstance(tok, Ies):
        return f"I{tok.index}"
    if all(p > 0 for p in tok.parts):
        return "M" + ",".join(str(p) for p in tok.parts)
    if all(p < 0 for p in tok.parts):
        return "-M" + ",".join(str(-p) for p in tok.parts)
    warnings.warn(f"mixed-sign MDS token {tok.parts}", stacklevel=2)
    return "M(" + ",".join(f"{p:+d}" for p in tok.parts) + ")"


@dataclass(frozen=True)
class Component:
    tokens: tuple[Token, ...]
    cyclic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))

    @property
    def mds(self) -> list[Mds]:
        return [t for t in self.tokens if isinstance(t, Mds)]

    @property
    def pure_ies(self) -> bool:
        return not self.mds


@dataclass(frozen=True)
class MicronuclearSequence:
    components: tuple[Component, ...]
    n: int = field(default=0, compare=False)

    def __post_init__(self):
        comps, k = [], 0
        for c in self.components:
            toks = []
            for t in c.tokens:
                if isinstance(t, Ies):
                    t = Ies(k)
                    k += 1
                toks.append(t)
            comps.append(Component(tuple(toks), c.cyclic))
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def linear(cls, tokens: Iterable[Token], n: int = 0) -> "MicronuclearSequence":
        return cls((Component(tuple(tokens)),), n)

    @property
    def tokens(self) -> tuple[Token, ...]:
        """Tokens of the only component; raises when there are several."""
        if len(self.components) != 1:
            raise MultiComponent("sequence has more than one component")
        return self.components[0].tokens

    @property
    def mds_tokens(self) -> list[Mds]:
        return [t for c in self.components for t in c.mds]

    @property
    def ies_count(self) -> int:
        return sum(isinstance(t, Ies) for c in self.components for t in c.tokens)

    def without_ies_circles(self) -> "MicronuclearSequence":
        kept = tuple(c for c in self.components if not (c.cyclic and c.pure_ies))
        return MicronuclearSequence(kept, self.n)

    def __str__(self):
        return render(self)


# -- merging and canonical forms -------------------------------------------

def merge_linear(tokens: Iterable[Token]) -> list[Token]:
    """Fuse runs of adjacent IES tokens and adjacent MDS tokens."""
    out: list[Token] = []
    for t in tokens:
        if out and isinstance(t, Ies) and isinstance(out[-1], Ies):
            continue
        if out and isinstance(t, Mds) and isinstance(out[-1], Mds):
            out[-1] = _fuse(out[-1], t)
            continue
        out.append(t)
    return out


def merge_cyclic(tokens: Iterable[Token]) -> list[Token]:
    """Merge a cyclic token list, then rotate it into canonical position.

    The last token is followed by the first, so a fusion across the cut
    reads last-then-first; the result does not depend on the cut point.
    """
    out = merge_linear(tokens)
    if len(out) > 1 and type(out[0]) is type(out[-1]):
        last = out.pop()
        if isinstance(last, Mds):
            out[0] = _fuse(last, out[0])
    return canonical_rotation(out)


def _fuse(a: Mds, b: Mds) -> Mds:
    fused = Mds(a.parts + b.parts)
    if not fused.uniform:
        warnings.warn(MixedSignWarning(f"mixed-sign merge {a.parts} + {b.parts}"),
                      stacklevel=3)
    return fused


def canonical_rotation(tokens: list[Token]) -> list[Token]:
    mds = [i for i, t in enumerate(tokens) if isinstance(t, Mds)]
    if not mds:
        return [Ies()] if tokens else []
    first = min(mds, key=lambda i: min(tokens[i].genes))
    return tokens[first:] + tokens[:first]


# -- orientation transforms ----------------------------------------------

def _single_linear(seq: MicronuclearSequence) -> tuple[Token, ...]:
    if len(seq.components) != 1 or seq.components[0].cyclic:
        raise MultiComponent("transform is defined on single linear sequences only")
    return seq.components[0].tokens


def reverse_complement(seq: MicronuclearSequence) -> MicronuclearSequence:
    """Read the sequence from the other end of the graph (Gamma^R)."""
    toks = _single_linear(seq)
    return MicronuclearSequence.linear(
        (t.invert() if isinstance(t, Mds) else t for t in reversed(toks)), seq.n)


def reverse_hpp(seq: MicronuclearSequence, n: int) -> MicronuclearSequence:
    """Traverse the HPP the other way round (Gamma^-).

    The k-th MDS of the path becomes the (n+2-k)-th and every segment is
    met in the opposite direction, so ``s -> -sign(s) * (n + 2 - |s|)``.
    """
    out = []
    for t in _single_linear(seq):
        if isinstance(t, Mds):
            if len(t.parts) != 1:
                raise CompositeToken("reverse_hpp needs singleton MDS tokens")
            s = t.parts[0]
            out.append(Mds((-(n + 2 - abs(s)) if s > 0 else (n + 2 - abs(s)),)))
        else:
            out.append(t)
    return MicronuclearSequence.linear(out, n)


ORIENTATIONS = ("g", "gr", "gm", "gmr")


def orientation_closure(seq: MicronuclearSequence, n: int) -> list[MicronuclearSequence]:
    """``[G, G^R, G^-, G^-R]`` for a Gamma sequence."""
    minus = reverse_hpp(seq, n)
    return [seq, reverse_complement(seq), minus, reverse_complement(minus)]


def distinct_sequences(graph) -> set[str]:
    from .hpp import enumerate_hpps
    from .label import micronuclear_sequence

    seen = set()
    for h in enumerate_hpps(graph):
        for s in orientation_closure(micronuclear_sequence(graph, h), graph.n):
            seen.add(render(s))
    return seen


def distinct_count(graph) -> int:
    return len(distinct_sequences(graph))


# -- text form --------------------------------------------------------------

def render(seq: MicronuclearSequence) -> str:
    parts = []
    for c in seq.components:
        body = " ".join(render_token(t) for t in c.tokens)
        parts.append(f"<{body}>" if c.cyclic else body)
    return " ".join(parts)


_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<open>[<\[])|(?P<close>[>\]])|(?P<comma>,(?=\s|$|[<\[]))"
    r"|(?P<ies>I\d+)"
    r"|(?P<mixed>M\((?:[+-]\d+)(?:,[+-]\d+)*\))"
    r"|(?P<mds>-?M\d+(?:,\d+)*)"
    r")")


def parse_sequence(text: str, n: int = 0, brackets: str = "<>") -> MicronuclearSequence:
    """Inverse of :func:`render`.

    ``brackets`` names the delimiters of cyclic components; pass ``"[]"`` to
    read transcriptions that use square brackets.  A lone comma followed by
    whitespace is ignored as a separator.
    """
    opening, closing = brackets
    comps: list[Component] = []
    current: list[Token] = []
    in_cycle = False
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            while text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected input {text[pos:pos + 8]!r}", pos)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "open":
            if val != opening or in_cycle:
                raise ParseError(f"unexpected {val!r}", m.start(kind))
            if current:
                comps.append(Component(tuple(current)))
            current, in_cycle = [], True
        elif kind == "close":
            if val != closing or not in_cycle:
                raise ParseError(f"unexpected {val!r}", m.start(kind))
            comps.append(Component(tuple(current), cyclic=True))
            current, in_cycle = [], False
        elif kind == "ies":
            current.append(Ies(int(val[1:])))
        elif kind == "mds":
            sign = -1 if val.startswith("-") else 1
            nums = val.lstrip("-")[1:].split(",")
            current.append(Mds(tuple(sign * int(x) for x in nums)))
        elif kind == "mixed":
            current.append(Mds(tuple(int(x) for x in val[2:-1].split(","))))
        pos = m.end()
    if in_cycle:
        raise ParseError("unterminated cyclic component", len(text))
    if current:
        comps.append(Component(tuple(current)))
    return MicronuclearSequence(tuple(comps), n)


def token_json(tok: Token) -> dict:
    if isinstance(tok, Ies):
        return {"ies": tok.index, "text": render_token(tok)}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return {"mds": list(tok.parts), "text": render_token(tok)}


def sequence_json(seq: MicronuclearSequence) -> dict:
    return {
        "text": render(seq),
        "components": [
            {"cyclic": c.cyclic, "tokens": [token_json(t) for t in c.tokens]}
            for c in seq.components
        ],
    }
