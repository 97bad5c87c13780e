"""Undirected simple graphs on vertices 1..n, plus the small-n machinery
that everything else leans on: triangle/4-cycle iteration, K4 detection,
proper colorings, canonical forms, isomorphism, and exhaustive enumeration
of isomorphism classes.

Vertices are always the contiguous labels 1..n.  Adjacency is kept as one
bitmask per vertex (bit v set in adj[u] means u ~ v), which is the cheapest
representation at this scale and makes the search kernels branch-free.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .errors import (
    OutOfRangeError,
    ParseError,
    SelfLoopError,
    TooLargeError,
)

CANONICAL_MAX_N = 8
ENUMERATE_MAX_N = 7


@dataclass(frozen=True)
class Graph:
    """Immutable labelled graph.  Build through graph_from_edge_list."""

    n: int
    edges: tuple[tuple[int, int], ...]  # (u, v) with u < v, lexicographic

    @cached_property
    def adj(self) -> tuple[int, ...]:
        # adj[v] has bit w set iff v ~ w; index 0 unused
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in self.vertices())

    def max_degree(self) -> int:
        return max(self.degree_sequence())

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = 1 << 1
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen.bit_count() == self.n


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edge_list(n: int, pairs) -> Graph:
    """Validate, normalize (u < v), dedupe and sort the edge list."""
    if n < 1:
        raise OutOfRangeError(f"vertex count must be >= 1, got {n}")
    seen = set()
    for u, v in pairs:
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise OutOfRangeError(f"edge endpoint out of range 1..{n}: ({u}, {v})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and relabel v+1..n down by one to keep labels contiguous."""
    if not (1 <= v <= g.n):
        raise OutOfRangeError(f"vertex {v} not in 1..{g.n}")
    if g.n == 1:
        raise OutOfRangeError("cannot delete the only vertex")

    def shift(x: int) -> int:
        return x - 1 if x > v else x

    kept = [(shift(a), shift(b)) for a, b in g.edges if v not in (a, b)]
    return graph_from_edge_list(g.n - 1, kept)


def complement(g: Graph) -> Graph:
    pairs = [
        (u, v)
        for u in g.vertices()
        for v in range(u + 1, g.n + 1)
        if not g.has_edge(u, v)
    ]
    return graph_from_edge_list(g.n, pairs)


# ---------------------------------------------------------------------------
# edge-list text format: first significant line "n m", then m lines "u v";
# full-line "#" comments and blank lines allowed anywhere

def parse_edge_list(text: str) -> Graph:
    header = None
    pairs: list[tuple[int, int]] = []
    m_expected = 0
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if any(not t.isdigit() for t in tokens):
            bad = next(t for t in tokens if not t.isdigit())
            raise ParseError(f"expected decimal integers, got {bad!r}", line=lineno,
                             column=raw.index(bad) + 1)
        if len(tokens) != 2:
            raise ParseError(f"expected two integers per line, got {len(tokens)}",
                             line=lineno)
        a, b = int(tokens[0]), int(tokens[1])
        if header is None:
            header = (a, b)
            m_expected = b
            continue
        if len(pairs) == m_expected:
            raise ParseError(f"more edge lines than the declared m={m_expected}",
                             line=lineno)
        pairs.append((a, b))
    if header is None:
        raise ParseError("empty edge list: missing 'n m' header", line=last_line or 1)
    if len(pairs) != m_expected:
        raise ParseError(
            f"declared m={m_expected} edges but found {len(pairs)}", line=last_line)
    try:
        return graph_from_edge_list(header[0], pairs)
    except (OutOfRangeError, SelfLoopError) as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


# ---------------------------------------------------------------------------
# triangles, 4-cycles, K4

def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles (u, v, w) with u < v < w, lexicographic order."""
    out = []
    for u, v in g.edges:
        common = g.adj[u] & g.adj[v]
        for w in _bits(common):
            if w > v:
                out.append((u, v, w))
    out.sort()
    return out


def four_cycles(g: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-cycles, one tuple (a, b, c, d) per cycle.

    The cycle is a-b-c-d-a with all four cycle edges present (diagonals may
    or may not exist).  Canonical representative: a is the smallest vertex
    of the cycle, b the smaller of a's two cycle-neighbors, c the vertex
    opposite a.
    """
    out = []
    for a in g.vertices():
        higher = ~((1 << (a + 1)) - 1)
        for c in range(a + 1, g.n + 1):
            common = g.adj[a] & g.adj[c] & higher
            for b, d in itertools.combinations(list(_bits(common)), 2):
                out.append((a, b, c, d))
    out.sort()
    return out


def is_k4_free(g: Graph) -> bool:
    for u, v, w in triangles(g):
        if g.adj[u] & g.adj[v] & g.adj[w]:
            return False
    return True


# ---------------------------------------------------------------------------
# proper colorings

@dataclass(frozen=True)
class VertexColoring:
    """Total assignment vertex -> color index in 1..c."""

    color: tuple[int, ...]  # color[v - 1] for vertex v

    def of(self, v: int) -> int:
        return self.color[v - 1]

    def num_colors(self) -> int:
        return len(set(self.color))

    def is_proper(self, g: Graph) -> bool:
        return all(self.of(u) != self.of(v) for u, v in g.edges)


def find_proper_coloring(g: Graph, max_colors: int) -> VertexColoring | None:
    """Exact backtracking search for a proper coloring with <= max_colors."""
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    color = [0] * (g.n + 1)

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        # trying at most one previously-unused color kills color symmetry
        for c in range(1, min(used + 1, max_colors) + 1):
            if any(color[w] == c for w in _bits(g.adj[v])):
                continue
            color[v] = c
            if assign(i + 1, max(used, c)):
                return True
            color[v] = 0
        return False

    if not assign(0, 0):
        return None
    return VertexColoring(tuple(color[1:]))


# ---------------------------------------------------------------------------
# canonical forms by exhaustive permutation minimization
#
# The upper triangle is packed into an integer with pair (1,2) at the most
# significant bit, so integer order on codes equals lexicographic order on
# the bit-strings and the orbit minimum is well defined.

def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]


def _edge_mask(g: Graph) -> int:
    s = g.n * (g.n - 1) // 2
    idx = {p: i for i, p in enumerate(_pairs(g.n))}
    mask = 0
    for e in g.edges:
        mask |= 1 << (s - 1 - idx[e])
    return mask


def _graph_from_mask(n: int, mask: int) -> Graph:
    s = n * (n - 1) // 2
    pairs = _pairs(n)
    edges = [pairs[i] for i in range(s) if mask >> (s - 1 - i) & 1]
    return Graph(n, tuple(edges))


_perm_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(slot_maps, weights): slot_maps[p, s] is the slot that pair s lands on
    under the p-th permutation; weights are the MSB-first bit values."""
    if n in _perm_cache:
        return _perm_cache[n]
    pairs = _pairs(n)
    s = len(pairs)
    idx = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i, (u, v) in enumerate(pairs):
        idx[u, v] = idx[v, u] = i
    perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    slot_maps = np.empty((len(perms), s), dtype=np.int64)
    for i, (u, v) in enumerate(pairs):
        a = perms[:, u - 1]
        b = perms[:, v - 1]
        slot_maps[:, i] = idx[a, b]
    weights = (np.int64(1) << (s - 1 - np.arange(s, dtype=np.int64)))
    _perm_cache[n] = (slot_maps, weights)
    return slot_maps, weights


def _orbit_codes(n: int, mask: int) -> np.ndarray:
    """Codes of all n! relabelings of the graph encoded by mask."""
    slot_maps, weights = _perm_tables(n)
    s = len(weights)
    bits = np.fromiter(
        ((mask >> (s - 1 - i)) & 1 for i in range(s)), dtype=np.int64, count=s)
    # image under a permutation moves the bit of pair s to slot_maps[p, s]
    images = np.zeros(slot_maps.shape, dtype=np.int64)
    np.put_along_axis(images, slot_maps, bits[np.newaxis, :], axis=1)
    return images @ weights


@dataclass(frozen=True)
class CanonicalForm:
    """Minimum, over all relabelings, of the packed upper-triangle code."""

    n: int
    code: int

    @property
    def bit_string(self) -> str:
        s = self.n * (self.n - 1) // 2
        return format(self.code, f"0{s}b") if s else ""

    @property
    def key(self) -> str:
        s = self.n * (self.n - 1) // 2
        width = max(1, (s + 3) // 4)
        return f"{self.n}:{self.code:0{width}x}"


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > CANONICAL_MAX_N:
        raise TooLargeError(
            f"canonical form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    if g.n == 1:
        return CanonicalForm(1, 0)
    codes = _orbit_codes(g.n, _edge_mask(g))
    return CanonicalForm(g.n, int(codes.min()))


def canonical_key(g: Graph) -> str:
    return canonical_form(g).key


# ---------------------------------------------------------------------------
# isomorphism-class enumeration (orbit sweep over all 2^C(n,2) masks)

@dataclass(frozen=True)
class GraphClass:
    graph: Graph              # representative, already canonically labelled
    form: CanonicalForm
    aut_size: int
    labelled_size: int        # n! / |Aut|, orbit-stabilizer


def enumerate_graphs(n: int) -> Iterator[GraphClass]:
    """One representative per isomorphism class, ascending canonical code.

    The sweep visits masks in increasing order and skips anything already
    marked as an orbit member, so each representative is its own canonical
    form by construction.
    """
    if n > ENUMERATE_MAX_N:
        raise TooLargeError(
            f"class enumeration supports n <= {ENUMERATE_MAX_N}, got {n}")
    if n < 1:
        raise OutOfRangeError(f"vertex count must be >= 1, got {n}")
    if n == 1:
        yield GraphClass(Graph(1, ()), CanonicalForm(1, 0), 1, 1)
        return
    total = 1 << (n * (n - 1) // 2)
    fact = math.factorial(n)
    seen = bytearray(total)
    mask = 0
    while mask < total:
        codes = _orbit_codes(n, mask)
        orbit = np.unique(codes)
        for c in orbit.tolist():
            seen[c] = 1
        aut = int((codes == mask).sum())
        yield GraphClass(
            _graph_from_mask(n, mask),
            CanonicalForm(n, mask),
            aut,
            fact // aut,
        )
        nxt = seen.find(0, mask + 1)
        if nxt == -1:
            break
        mask = nxt


# ---------------------------------------------------------------------------
# explicit isomorphism search (any n, used where canonical_form is capped)

def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    n = g.n
    # order g's vertices so each (after the first) touches an earlier one
    # when possible; keeps the partial maps constrained
    order: list[int] = []
    placed = 0
    rest = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    while rest:
        pick = next((v for v in rest if g.adj[v] & placed), rest[0])
        rest.remove(pick)
        order.append(pick)
        placed |= 1 << pick

    image = [0] * (n + 1)
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in h.vertices():
            if used >> w & 1 or h.degree(w) != g.degree(v):
                continue
            ok = True
            for prev in order[:i]:
                if g.has_edge(v, prev) != h.has_edge(w, image[prev]):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            image[v] = 0
        return False

    return extend(0)
