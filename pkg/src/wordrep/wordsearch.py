"""Bounded search for k-uniform representing words.

The word is built left to right; at each position the candidate letters
are tried in increasing label order, which fixes the output completely.
The only structure available for pruning is alternation itself, tracked
per unordered pair of letters:

  * an edge pair dies the moment its restricted subsequence repeats a
    letter (it could never alternate again);
  * a non-edge pair dies when it can no longer acquire a repeat, i.e. the
    restriction so far still alternates and the remaining multiplicities
    cannot place two consecutive equal letters.

A finished word therefore has every edge pair alternating by
construction, and the leaf check only needs the non-edge pairs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import TooLargeError
from .graphs import Graph
from .words import Word

SEARCH_MAX_LETTERS = 30
DEFAULT_K_MAX = 3


@dataclass(frozen=True)
class WordSearchResult:
    word: Word | None
    k_tried: int   # multiplicity reached (the successful k, or the cap)
    nodes: int
    wall_time_s: float


def find_k_uniform_word(g: Graph, k: int, _node_counter: list[int] | None = None) -> Word | None:
    """First k-uniform representing word in the deterministic order, or
    None when no k-uniform word represents g."""
    if k < 1:
        raise TooLargeError(f"multiplicity must be >= 1, got {k}")
    if g.n * k > SEARCH_MAX_LETTERS:
        raise TooLargeError(
            f"word search capped at {SEARCH_MAX_LETTERS} letters, "
            f"asked for {g.n}*{k}")
    n = g.n
    length = n * k
    nodes = _node_counter if _node_counter is not None else [0]

    # per-pair state, indexed p = pair_id(x, y), x < y:
    #   last[p]   last letter of the restricted subsequence (0 = none)
    #   broken[p] the restriction has repeated a letter at least once
    npairs = n * (n - 1) // 2

    def pid(x: int, y: int) -> int:
        # x < y
        return (x - 1) * n - (x * (x + 1)) // 2 + (y - 1)

    is_edge = [False] * npairs
    for u, v in g.edges:
        is_edge[pid(u, v)] = True

    remaining = [k] * (n + 1)
    last = [0] * npairs
    broken = [False] * npairs
    word: list[int] = []

    def nonedge_alive(x: int, y: int, p: int) -> bool:
        # still possible for the pair to stop alternating later?
        if broken[p]:
            return True
        if last[p] == x and remaining[x] >= 1:
            return True
        if last[p] == y and remaining[y] >= 1:
            return True
        return remaining[x] >= 2 or remaining[y] >= 2

    def viable() -> bool:
        # dead non-edge pairs can be detected before placing anything
        for x in range(1, n + 1):
            for y in range(x + 1, n + 1):
                p = pid(x, y)
                if not is_edge[p] and not nonedge_alive(x, y, p):
                    return False
        return True

    def place(x: int) -> list[tuple[int, int, bool]] | None:
        """Try appending letter x; None on a dead pair, else an undo log
        of (pair, old_last, old_broken) entries."""
        log = []
        for y in range(1, n + 1):
            if y == x:
                continue
            p = pid(x, y) if x < y else pid(y, x)
            if last[p] == x:
                if is_edge[p]:
                    for q, ol, ob in reversed(log):
                        last[q], broken[q] = ol, ob
                    return None
                if not broken[p]:
                    log.append((p, last[p], broken[p]))
                    broken[p] = True
            else:
                log.append((p, last[p], broken[p]))
                last[p] = x
        return log

    def undo(log: list[tuple[int, int, bool]]) -> None:
        for p, ol, ob in reversed(log):
            last[p], broken[p] = ol, ob

    def search() -> bool:
        nodes[0] += 1
        if len(word) == length:
            # edge pairs alternate by construction; non-edges must not
            return all(
                broken[pid(x, y)]
                for x in range(1, n + 1)
                for y in range(x + 1, n + 1)
                if not is_edge[pid(x, y)])
        for x in range(1, n + 1):
            if remaining[x] == 0:
                continue
            log = place(x)
            if log is None:
                continue
            remaining[x] -= 1
            word.append(x)
            ok = True
            # placing x changes the outlook of every non-edge pair at x
            for y in range(1, n + 1):
                if y == x:
                    continue
                a, b = (x, y) if x < y else (y, x)
                p = pid(a, b)
                if not is_edge[p] and not nonedge_alive(a, b, p):
                    ok = False
                    break
            if ok and search():
                return True
            word.pop()
            remaining[x] += 1
            undo(log)
        return False

    if not viable():
        return None
    if search():
        return Word(tuple(word))
    return None


def find_word(g: Graph, k_max: int = DEFAULT_K_MAX) -> WordSearchResult:
    """Iterate k = 1..k_max, returning the first success."""
    if k_max < 1:
        raise TooLargeError(f"k_max must be >= 1, got {k_max}")
    counter = [0]
    start = time.perf_counter()
    for k in range(1, k_max + 1):
        w = find_k_uniform_word(g, k, counter)
        if w is not None:
            return WordSearchResult(w, k, counter[0], time.perf_counter() - start)
    return WordSearchResult(None, k_max, counter[0], time.perf_counter() - start)
