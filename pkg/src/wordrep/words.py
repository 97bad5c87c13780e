"""Words over vertex labels and the alternation semantics that turns a
word into a graph: x and y are adjacent iff deleting every other letter
from the word leaves xyxy... or yxyx...
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    AlphabetMismatchError,
    NonContiguousAlphabetError,
    NotInAlphabetError,
    OutOfRangeError,
    ParseError,
    SameLetterError,
)
from .graphs import Graph, graph_from_edge_list


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]

    @cached_property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def word_from_letters(letters) -> Word:
    letters = tuple(letters)
    if not letters:
        raise OutOfRangeError("a word must be nonempty")
    for x in letters:
        if x < 1:
            raise OutOfRangeError(f"letters are positive integers, got {x}")
    return Word(letters)


def alternates(w: Word, x: int, y: int) -> bool:
    """True iff the subsequence of w restricted to {x, y} strictly alternates."""
    if x == y:
        raise SameLetterError(f"alternation needs two distinct letters, got {x} twice")
    if x not in w.alphabet:
        raise NotInAlphabetError(f"letter {x} does not occur in the word")
    if y not in w.alphabet:
        raise NotInAlphabetError(f"letter {y} does not occur in the word")
    last = 0
    for a in w.letters:
        if a == x or a == y:
            if a == last:
                return False
            last = a
    return True


def graph_of_word(w: Word) -> Graph:
    """The graph on {1..n} whose edges are exactly the alternating pairs."""
    n = max(w.alphabet)
    if w.alphabet != frozenset(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - w.alphabet)
        raise NonContiguousAlphabetError(
            f"alphabet must be 1..{n}; missing {missing}")
    edges = [
        (x, y)
        for x, y in itertools.combinations(range(1, n + 1), 2)
        if alternates(w, x, y)
    ]
    return graph_from_edge_list(n, edges)


def represents(w: Word, g: Graph) -> bool:
    """True iff graph_of_word(w) is exactly g (labelled equality).

    A word over the wrong alphabet raises AlphabetMismatch rather than
    returning False: that situation says nothing about g.
    """
    expected = frozenset(range(1, g.n + 1))
    if w.alphabet != expected:
        raise AlphabetMismatchError(
            f"word alphabet {sorted(w.alphabet)} != graph vertex set 1..{g.n}")
    return graph_of_word(w).edges == g.edges


def uniformity(w: Word) -> int | None:
    """The common multiplicity k if w is k-uniform, else None."""
    counts = set(Counter(w.letters).values())
    if len(counts) == 1:
        return counts.pop()
    return None


def reverse_word(w: Word) -> Word:
    return Word(tuple(reversed(w.letters)))


def delete_letter(w: Word, x: int) -> Word:
    """Remove every occurrence of x.  The result keeps the other labels as
    they are, so its alphabet is usually non-contiguous; relabel_contiguous
    restores 1..m."""
    if x not in w.alphabet:
        raise NotInAlphabetError(f"letter {x} does not occur in the word")
    kept = tuple(a for a in w.letters if a != x)
    if not kept:
        raise OutOfRangeError("deleting the only letter would leave an empty word")
    return Word(kept)


def relabel_contiguous(w: Word) -> Word:
    mapping = {a: i for i, a in enumerate(sorted(w.alphabet), start=1)}
    return Word(tuple(mapping[a] for a in w.letters))


# ---------------------------------------------------------------------------
# parsing and formatting
#
# Three accepted input forms:
#   "1 2 13 4" / "1,2,13,4"   decimal tokens (the canonical output form)
#   "1213423"                 compact digits, one letter per digit, labels <= 9
#   "1387296(10)74..."        compact digits with parenthesized multi-digit
#                             letters, as printed in running text
# Output is always whitespace-separated decimal tokens.

_COMPACT_RE = re.compile(r"[1-9]|\((\d+)\)")


def parse_word(text: str) -> Word:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty word")
    if re.search(r"[\s,]", stripped):
        letters = []
        for tok in re.split(r"[\s,]+", stripped):
            if not tok:
                continue
            if not tok.isdigit():
                raise ParseError(f"not a decimal letter: {tok!r}")
            val = int(tok)
            if val < 1:
                raise ParseError(f"letters are positive integers, got {tok}")
            letters.append(val)
        return word_from_letters(letters)
    if len(stripped) == 1:
        if not stripped.isdigit() or stripped == "0":
            raise ParseError(f"not a letter: {stripped!r}")
        return Word((int(stripped),))
    # compact form; "0" is never a label, so a bare 0 digit is an error and
    # multi-digit letters must be written "(10)" or space-separated
    letters = []
    pos = 0
    while pos < len(stripped):
        m = _COMPACT_RE.match(stripped, pos)
        if m is None:
            raise ParseError(
                f"bad character in compact word: {stripped[pos]!r}"
                " (write multi-digit letters as '(10)' or space-separated)",
                column=pos + 1)
        if m.group(1) is not None:
            val = int(m.group(1))
            if val < 1:
                raise ParseError("letters are positive integers, got (0)",
                                 column=pos + 1)
            letters.append(val)
        else:
            letters.append(int(m.group(0)))
        pos = m.end()
    return word_from_letters(letters)


def format_word(w: Word) -> str:
    return " ".join(str(a) for a in w.letters)
