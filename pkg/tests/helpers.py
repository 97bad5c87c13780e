"""Reference implementations and generators shared by the test modules.

Everything here re-derives the definitions from scratch with different
data structures than the package (lists/sets/dicts instead of bitmasks,
literal pattern matching instead of incremental scans), so agreement is
meaningful.
"""

from __future__ import annotations

import itertools
import random

from wordrep.graphs import Graph, graph_from_edge_list


# ---------------------------------------------------------------------------
# words

def ref_alternates(letters, x: int, y: int) -> bool:
    """Literal reading of the definition: the restriction must be one of
    the two alternating patterns of its length."""
    r = [a for a in letters if a == x or a == y]
    pat_x = [x if i % 2 == 0 else y for i in range(len(r))]
    pat_y = [y if i % 2 == 0 else x for i in range(len(r))]
    return r == pat_x or r == pat_y


def ref_represents(letters, g: Graph) -> bool:
    for x in range(1, g.n + 1):
        for y in range(x + 1, g.n + 1):
            if ref_alternates(letters, x, y) != g.has_edge(x, y):
                return False
    return True


def k_uniform_words(n: int, k: int):
    """All words with each of 1..n exactly k times, lexicographic order."""
    remaining = [k] * (n + 1)
    word: list[int] = []
    length = n * k

    def rec():
        if len(word) == length:
            yield tuple(word)
            return
        for x in range(1, n + 1):
            if remaining[x]:
                remaining[x] -= 1
                word.append(x)
                yield from rec()
                word.pop()
                remaining[x] += 1

    yield from rec()


def naive_lex_min_word(g: Graph, k: int):
    """Generate-and-test oracle: first k-uniform word representing g in
    lexicographic order, or None."""
    for letters in k_uniform_words(g.n, k):
        if ref_represents(letters, g):
            return letters
    return None


# ---------------------------------------------------------------------------
# orientations

def ref_is_acyclic(n: int, arcs) -> bool:
    arcs = set(arcs)
    verts = set(range(1, n + 1))
    while verts:
        sources = {v for v in verts
                   if not any((u, v) in arcs for u in verts)}
        if not sources:
            return False
        verts -= sources
        arcs = {(u, v) for (u, v) in arcs if u in verts and v in verts}
    return True


def ref_is_semi_transitive(g: Graph, arcs) -> bool:
    arcs = set(arcs)
    if not ref_is_acyclic(g.n, arcs):
        return False
    succ = {v: sorted(w for (u, w) in arcs if u == v) for v in g.vertices()}

    def paths(frm, to):
        # all simple directed paths frm -> to
        stack = [(frm, (frm,))]
        while stack:
            v, path = stack.pop()
            for w in succ[v]:
                if w == to:
                    yield path + (to,)
                elif w not in path:
                    stack.append((w, path + (w,)))

    for (t, h) in arcs:
        for path in paths(t, h):
            if len(path) < 4:
                continue
            for i, j in itertools.combinations(range(len(path)), 2):
                if (path[i], path[j]) not in arcs:
                    return False
    return True


def ref_four_cycles(g: Graph):
    found = set()
    for quad in itertools.combinations(g.vertices(), 4):
        for a, b, c, d in itertools.permutations(quad):
            if a != min(quad) or b > d:
                continue
            if g.has_edge(a, b) and g.has_edge(b, c) and \
                    g.has_edge(c, d) and g.has_edge(d, a):
                found.add((a, b, c, d))
    return sorted(found)


def total_orientations_as_arcs(g: Graph):
    for choices in itertools.product((0, 1), repeat=len(g.edges)):
        yield [
            (u, v) if pick == 0 else (v, u)
            for (u, v), pick in zip(g.edges, choices)]


# ---------------------------------------------------------------------------
# isomorphism

def brute_canonical(g: Graph):
    """Minimum relabeled edge tuple over all n! permutations."""
    best = None
    for perm in itertools.permutations(range(1, g.n + 1)):
        relabeled = tuple(sorted(
            tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in g.edges))
        if best is None or relabeled < best:
            best = relabeled
    return (g.n, best)


# ---------------------------------------------------------------------------
# generators

def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    pairs = [e for e in itertools.combinations(range(1, n + 1), 2)
             if rng.random() < p]
    return graph_from_edge_list(n, pairs)


def random_k4_free_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    from wordrep.graphs import is_k4_free
    while True:
        g = random_graph(rng, n, p)
        if is_k4_free(g):
            return g


def random_word(rng: random.Random, alphabet: int, length: int):
    return tuple(rng.randint(1, alphabet) for _ in range(length))


def random_3partite(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    parts = [rng.randrange(3) for _ in range(n + 1)]
    pairs = [
        (u, v) for u, v in itertools.combinations(range(1, n + 1), 2)
        if parts[u] != parts[v] and rng.random() < p]
    return graph_from_edge_list(n, pairs)


def all_graphs(n: int):
    """Every labelled graph on n vertices."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_edge_list(
            n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
