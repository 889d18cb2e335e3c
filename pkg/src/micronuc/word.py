"""Double-occurrence words: the genotype of an assembly graph.

A word over ``{1..n}`` in which every symbol appears exactly twice. Symbol
``k`` names the k-th rigid 4-valent vertex; the order of the letters is the
order in which the transversal walks through the vertices.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import chain

from .errors import MalformedToken, NotDoubleOccurrence

_SEP = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class Word:
    symbols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        counts = Counter(self.symbols)
        bad = sorted(s for s, c in counts.items() if c != 2)
        if bad:
            raise NotDoubleOccurrence(
                f"symbols must occur exactly twice; offending: {bad}")
        if any(s <= 0 for s in counts):
            raise MalformedToken("symbols must be positive integers")

    @property
    def n(self) -> int:
        return len(self.symbols) // 2

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return render_word(self)

    def is_canonical(self) -> bool:
        return canonicalize(self) == self


def parse_word(text: str) -> Word:
    """Parse ``"1212"`` or ``"10 3 10 3"`` / ``"10,3,10,3"`` into a Word.

    The compact digit form is only produced for single-digit symbols, so a
    bare run of digits is always read one symbol per character.  Empty input
    is the empty word (n = 0).
    """
    text = text.strip()
    if not text:
        return Word(())
    if text.isdigit():
        symbols = [int(ch) for ch in text]
    else:
        symbols = []
        for tok in _SEP.split(text):
            if not tok:
                continue
            if not tok.isdigit():
                raise MalformedToken(f"not a positive integer: {tok!r}")
            symbols.append(int(tok))
    if 0 in symbols:
        raise MalformedToken("symbol 0 is not allowed; labels start at 1")
    return Word(tuple(symbols))


def render_word(word: Word) -> str:
    if all(s <= 9 for s in word.symbols):
        return "".join(map(str, word.symbols))
    return " ".join(map(str, word.symbols))


def canonicalize(word: Word) -> Word:
    """Relabel symbols 1..n in order of first occurrence."""
    relabel: dict[int, int] = {}
    for s in word.symbols:
        relabel.setdefault(s, len(relabel) + 1)
    return Word(tuple(relabel[s] for s in word.symbols))


def canonical_words(n: int):
    """Yield every canonical double-occurrence word with ``n`` symbols.

    There are (2n-1)!! of them; output is in lexicographic order.
    """
    def grow(prefix, counts, opened):
        if len(prefix) == 2 * n:
            yield Word(tuple(prefix))
            return
        # reuse an open symbol, or open the next fresh one
        for s in range(1, opened + 1):
            if counts[s] == 1:
                counts[s] += 1
                yield from grow(prefix + [s], counts, opened)
                counts[s] -= 1
        if opened < n:
            counts[opened + 1] = 1
            yield from grow(prefix + [opened + 1], counts, opened + 1)
            del counts[opened + 1]

    yield from grow([], Counter(), 0)


def census(max_n: int):
    return chain.from_iterable(canonical_words(k) for k in range(max_n + 1))
