"""Alternation semantics, word parsing, and the word-to-graph map."""

import random

import pytest

from wordrep.bundled import bundled_word
from wordrep.errors import (
    AlphabetMismatchError,
    NonContiguousAlphabetError,
    NotInAlphabetError,
    OutOfRangeError,
    ParseError,
    SameLetterError,
)
from wordrep.graphs import delete_vertex, graph_from_edge_list
from wordrep.words import (
    Word,
    alternates,
    delete_letter,
    format_word,
    graph_of_word,
    parse_word,
    relabel_contiguous,
    represents,
    reverse_word,
    uniformity,
    word_from_letters,
)

from helpers import random_word, ref_alternates

M = graph_from_edge_list(4, [(1, 2), (2, 3), (2, 4), (3, 4)])
K4 = graph_from_edge_list(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
M_WORD = parse_word("1213423")


def test_alternates_known_pairs():
    assert alternates(M_WORD, 1, 2)
    assert not alternates(M_WORD, 1, 3)
    assert not alternates(M_WORD, 1, 4)
    assert alternates(M_WORD, 2, 3)
    assert alternates(M_WORD, 3, 4)
    assert alternates(word_from_letters((5, 9)), 5, 9)


def test_alternates_errors():
    with pytest.raises(SameLetterError):
        alternates(M_WORD, 2, 2)
    with pytest.raises(NotInAlphabetError):
        alternates(M_WORD, 1, 9)
    with pytest.raises(NotInAlphabetError):
        alternates(M_WORD, 9, 1)


def test_alternates_against_reference():
    rng = random.Random(31415)
    for _ in range(300):
        letters = random_word(rng, rng.randint(2, 6), rng.randint(2, 14))
        w = word_from_letters(letters)
        present = sorted(w.alphabet)
        for i, x in enumerate(present):
            for y in present[i + 1:]:
                assert alternates(w, x, y) == ref_alternates(letters, x, y)


def test_graph_of_word_examples():
    assert graph_of_word(parse_word("1234")) == K4
    assert graph_of_word(M_WORD) == M
    assert graph_of_word(parse_word("11")) == graph_from_edge_list(1, [])


def test_graph_of_word_contiguity():
    with pytest.raises(NonContiguousAlphabetError):
        graph_of_word(word_from_letters((1, 3)))
    with pytest.raises(NonContiguousAlphabetError):
        graph_of_word(word_from_letters((2, 2)))


def test_represents():
    assert represents(parse_word("123412"), K4)
    assert not represents(M_WORD, K4)
    assert represents(M_WORD, M)


def test_represents_alphabet_mismatch_is_an_error():
    with pytest.raises(AlphabetMismatchError):
        represents(parse_word("123"), K4)
    with pytest.raises(AlphabetMismatchError):
        represents(parse_word("12345"), K4)


def test_uniformity():
    assert uniformity(parse_word("1234")) == 1
    assert uniformity(bundled_word("petersen")) == 3
    assert uniformity(M_WORD) is None
    assert uniformity(parse_word("1 1 1")) == 3


def test_word_construction_errors():
    with pytest.raises(OutOfRangeError):
        word_from_letters(())
    with pytest.raises(OutOfRangeError):
        word_from_letters((1, 0))


def test_reversal_preserves_graph():
    rng = random.Random(777)
    for _ in range(120):
        n = rng.randint(1, 5)
        letters = list(range(1, n + 1)) + list(
            random_word(rng, n, rng.randint(0, 8)))
        rng.shuffle(letters)
        w = word_from_letters(letters)
        assert graph_of_word(reverse_word(w)) == graph_of_word(w)


def test_deletion_matches_vertex_deletion():
    rng = random.Random(424242)
    for _ in range(120):
        n = rng.randint(2, 5)
        letters = list(range(1, n + 1)) + list(
            random_word(rng, n, rng.randint(0, 8)))
        rng.shuffle(letters)
        w = word_from_letters(letters)
        g = graph_of_word(w)
        for x in range(1, n + 1):
            reduced = relabel_contiguous(delete_letter(w, x))
            assert graph_of_word(reduced) == delete_vertex(g, x)


def test_delete_letter_guards():
    with pytest.raises(NotInAlphabetError):
        delete_letter(M_WORD, 9)
    with pytest.raises(OutOfRangeError):
        delete_letter(word_from_letters((3, 3)), 3)


def test_parse_decimal_tokens():
    assert parse_word("1 2 13 4").letters == (1, 2, 13, 4)
    assert parse_word("1,2,13,4").letters == (1, 2, 13, 4)
    assert parse_word("  7 ").letters == (7,)
    assert parse_word("10 10").letters == (10, 10)


def test_parse_compact_digits():
    assert parse_word("1213423").letters == (1, 2, 1, 3, 4, 2, 3)
    assert parse_word("9").letters == (9,)


def test_parse_parenthesized_letters():
    w = parse_word("12(10)3(11)")
    assert w.letters == (1, 2, 10, 3, 11)
    assert bundled_word("petersen").letters == (
        1, 3, 8, 7, 2, 9, 6, 10, 7, 4, 9, 3, 5, 4, 1, 2, 8, 3, 10, 7,
        6, 8, 5, 10, 1, 9, 4, 5, 6, 2)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_word("")
    with pytest.raises(ParseError):
        parse_word("10")        # ambiguous: compact form has no digit 0
    with pytest.raises(ParseError):
        parse_word("120")
    with pytest.raises(ParseError):
        parse_word("1 0 2")
    with pytest.raises(ParseError):
        parse_word("1 x 2")
    with pytest.raises(ParseError):
        parse_word("12(10")     # unclosed group
    with pytest.raises(ParseError):
        parse_word("1(0)2")


def test_format_round_trip():
    # any word of length >= 2 round-trips (the output has separators);
    # single letters round-trip up to 9, and "1" is the only single-letter
    # word over a contiguous alphabet anyway
    rng = random.Random(5)
    for _ in range(50):
        letters = random_word(rng, 12, rng.randint(2, 10))
        w = word_from_letters(letters)
        assert parse_word(format_word(w)) == w
    for x in range(1, 10):
        assert parse_word(format_word(Word((x,)))) == Word((x,))
    assert format_word(Word((1, 10, 2))) == "1 10 2"


def test_bare_digit_run_is_compact():
    # a separator-free digit string is always read as compact digits
    assert parse_word("11").letters == (1, 1)
    assert parse_word("112233").letters == (1, 1, 2, 2, 3, 3)
