"""Directed side of the toolkit: orientations of a graph's edges,
acyclicity, shortcut detection, semi-transitivity, the four-cycle forcing
rule for K4-free graphs, and the backtracking search for a semi-transitive
orientation.

An orientation assigns each stored edge (u, v), u < v, one of FORWARD
(u -> v), BACKWARD (v -> u) or None (unassigned).  A total acyclic
orientation is semi-transitive when no directed path v1...vk (k >= 4)
between the endpoints of an edge v1->vk misses an inner pair edge; such a
path makes v1->vk a shortcut.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    CyclicInputError,
    ImproperColoringError,
    NotK4FreeError,
    OutOfRangeError,
    ParseError,
    PartialOrientationError,
    TooManyColorsError,
    TooManyEdgesError,
    WordrepError,
)
from .graphs import Graph, VertexColoring, four_cycles, is_k4_free

FORWARD = 1
BACKWARD = -1

COUNT_MAX_EDGES = 24


@dataclass(frozen=True)
class Orientation:
    base: Graph
    dirs: tuple[int | None, ...]  # aligned with base.edges

    def __post_init__(self):
        if len(self.dirs) != len(self.base.edges):
            raise OutOfRangeError(
                f"{len(self.dirs)} directions for {len(self.base.edges)} edges")

    @property
    def is_total(self) -> bool:
        return None not in self.dirs

    def arc(self, i: int) -> tuple[int, int]:
        """(tail, head) of the i-th stored edge; edge must be assigned."""
        u, v = self.base.edges[i]
        d = self.dirs[i]
        if d is None:
            raise PartialOrientationError(f"edge {u}-{v} is unassigned")
        return (u, v) if d == FORWARD else (v, u)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for i, d in enumerate(self.dirs):
            if d is not None:
                yield self.arc(i)


@dataclass(frozen=True)
class Conflict:
    kind: str  # DirectedCycle | Shortcut | Lemma1Cycle
    witness: tuple[int, ...]


@dataclass
class SearchStats:
    nodes: int = 0
    propagations: int = 0
    shortcut_checks: int = 0
    shortcut_conflicts: int = 0
    wall_time_s: float = 0.0


def empty_orientation(g: Graph) -> Orientation:
    return Orientation(g, (None,) * len(g.edges))


def orientation_from_arcs(g: Graph, arcs, total: bool = False) -> Orientation:
    """Build an orientation from (tail, head) pairs."""
    dirs: list[int | None] = [None] * len(g.edges)
    for t, h in arcs:
        key = (t, h) if t < h else (h, t)
        idx = g.edge_index.get(key)
        if idx is None:
            raise OutOfRangeError(f"{t}-{h} is not an edge of the graph")
        d = FORWARD if (t, h) == key else BACKWARD
        if dirs[idx] is not None and dirs[idx] != d:
            raise WordrepError(f"edge {key[0]}-{key[1]} given both directions")
        dirs[idx] = d
    o = Orientation(g, tuple(dirs))
    if total and not o.is_total:
        raise PartialOrientationError("arcs do not cover every edge")
    return o


def reverse(o: Orientation) -> Orientation:
    _require_total(o)
    return Orientation(o.base, tuple(-d for d in o.dirs))


def _require_total(o: Orientation) -> None:
    if not o.is_total:
        unassigned = sum(1 for d in o.dirs if d is None)
        raise PartialOrientationError(
            f"operation needs a total orientation ({unassigned} edges unassigned)")


def _out_masks(o: Orientation) -> list[int]:
    out = [0] * (o.base.n + 1)
    for t, h in o.arcs():
        out[t] |= 1 << h
    return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_acyclic(o: Orientation) -> bool:
    _require_total(o)
    return _acyclic(o.base.n, _out_masks(o))


def _acyclic(n: int, out: list[int]) -> bool:
    indeg = [0] * (n + 1)
    for v in range(1, n + 1):
        for w in _bits(out[v]):
            indeg[w] += 1
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for w in _bits(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return removed == n


def find_shortcut(o: Orientation) -> Conflict | None:
    """First shortcut in deterministic order, or None.

    Scans stored edges in order; for each arc t->h enumerates every simple
    directed path t ~> h with at least 3 edges (neighbors in ascending
    order) and checks that all inner pairs are edges oriented forward along
    the path.
    """
    _require_total(o)
    out = _out_masks(o)
    if not _acyclic(o.base.n, out):
        raise CyclicInputError("shortcut detection needs an acyclic orientation")
    return _shortcut_scan(out, [o.arc(i) for i in range(len(o.dirs))])


def _shortcut_scan(out: list[int], arcs) -> Conflict | None:
    arc_set = set(arcs)
    for t, h in arcs:
        hit = _shortcut_dfs(out, arc_set, h, [t], 1 << t)
        if hit is not None:
            return Conflict("Shortcut", hit)
    return None


def _shortcut_dfs(out, arc_set, h, path, on_path) -> tuple[int, ...] | None:
    for w in _bits(out[path[-1]]):
        if w == h:
            if len(path) >= 3:
                full = tuple(path) + (h,)
                for i, j in itertools.combinations(range(len(full)), 2):
                    if (full[i], full[j]) not in arc_set:
                        return full
            continue
        if on_path >> w & 1:
            continue
        path.append(w)
        hit = _shortcut_dfs(out, arc_set, h, path, on_path | (1 << w))
        path.pop()
        if hit is not None:
            return hit
    return None


def is_semi_transitive(o: Orientation) -> bool:
    _require_total(o)
    out = _out_masks(o)
    if not _acyclic(o.base.n, out):
        return False
    arcs = [o.arc(i) for i in range(len(o.dirs))]
    return _shortcut_scan(out, arcs) is None


# ---------------------------------------------------------------------------
# four-cycle rule (K4-free graphs only): no 4-cycle may carry three
# consecutively oriented edges.  Traversal frame per cycle (a,b,c,d): the
# four legs in cyclic order, each as (edge index, sign), sign +1 when the
# stored (u<v) direction agrees with the traversal a->b->c->d->a.  A leg's
# traversal value is dirs[edge]*sign; a triple of consecutive legs is
# violated exactly when all three values are equal.

def _cycle_triples(g: Graph):
    """(triples, by_edge): each triple is (legs3, cycle) where legs3 are
    three consecutive (edge, sign) legs of a 4-cycle."""
    triples = []
    by_edge: list[list[int]] = [[] for _ in g.edges]
    for a, b, c, d in four_cycles(g):
        legs = []
        for x, y in ((a, b), (b, c), (c, d), (d, a)):
            if x < y:
                legs.append((g.edge_index[(x, y)], 1))
            else:
                legs.append((g.edge_index[(y, x)], -1))
        for i in range(4):
            tri = (legs[i], legs[(i + 1) % 4], legs[(i + 2) % 4])
            triples.append((tri, (a, b, c, d)))
    for t_idx, (tri, _) in enumerate(triples):
        for e, _sign in tri:
            by_edge[e].append(t_idx)
    return triples, by_edge


def lemma1_propagate(g: Graph, o: Orientation) -> Orientation | Conflict:
    """Fixpoint of the four-cycle forcing rule over a partial orientation.

    Whenever two legs of a consecutive triple share a traversal value and
    the third is unassigned, the third is forced opposite.  Returns a
    Lemma1Cycle conflict if some triple is already fully equal.
    """
    if o.base != g:
        raise OutOfRangeError("orientation does not belong to this graph")
    if not is_k4_free(g):
        raise NotK4FreeError("the four-cycle rule is only sound for K4-free graphs")
    triples, _ = _cycle_triples(g)
    dirs = list(o.dirs)
    changed = True
    while changed:
        changed = False
        for tri, cycle in triples:
            vals = [dirs[e] * s if dirs[e] is not None else None for e, s in tri]
            assigned = [v for v in vals if v is not None]
            if len(assigned) == 3 and assigned[0] == assigned[1] == assigned[2]:
                return Conflict("Lemma1Cycle", cycle)
            if len(assigned) == 2 and assigned[0] == assigned[1]:
                i = vals.index(None)
                e, s = tri[i]
                dirs[e] = -assigned[0] * s
                changed = True
    return Orientation(g, tuple(dirs))


# ---------------------------------------------------------------------------
# backtracking search

def _reachable(out: list[int], src: int, dst: int) -> bool:
    seen = 1 << src
    frontier = seen
    target = 1 << dst
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= out[v]
        if nxt & target:
            return True
        frontier = nxt & ~seen
        seen |= nxt
    return False


class _Searcher:
    """Depth-first search over edge directions, lexicographic edge order,
    FORWARD first.  Acyclicity is enforced incrementally on every
    assignment; on K4-free graphs each assignment also runs the four-cycle
    forcing rule to fixpoint.  Shortcut checks run at the leaves only."""

    def __init__(self, g: Graph, stats: SearchStats):
        self.g = g
        self.m = len(g.edges)
        self.stats = stats
        self.dirs: list[int | None] = [None] * self.m
        self.out = [0] * (g.n + 1)
        if is_k4_free(g):
            self.triples, self.by_edge = _cycle_triples(g)
        else:
            self.triples, self.by_edge = [], [[] for _ in range(self.m)]

    def assign(self, e: int, d: int, trail: list[int]) -> bool:
        """Assign edge e and propagate; False on conflict.  Everything
        actually assigned lands on the trail for undo."""
        queue = [(e, d)]
        while queue:
            e2, d2 = queue.pop()
            cur = self.dirs[e2]
            if cur is not None:
                if cur != d2:
                    return False
                continue
            u, v = self.g.edges[e2]
            t, h = (u, v) if d2 == FORWARD else (v, u)
            if _reachable(self.out, h, t):
                return False
            self.dirs[e2] = d2
            self.out[t] |= 1 << h
            trail.append(e2)
            if e2 != e:
                self.stats.propagations += 1
            for t_idx in self.by_edge[e2]:
                tri, _cycle = self.triples[t_idx]
                vals = [self.dirs[ee] * ss if self.dirs[ee] is not None else None
                        for ee, ss in tri]
                assigned = [x for x in vals if x is not None]
                if len(assigned) == 3 and assigned[0] == assigned[1] == assigned[2]:
                    return False
                if len(assigned) == 2 and assigned[0] == assigned[1]:
                    i = vals.index(None)
                    ee, ss = tri[i]
                    queue.append((ee, -assigned[0] * ss))
        return True

    def undo(self, trail: list[int]) -> None:
        for e in reversed(trail):
            u, v = self.g.edges[e]
            t, h = (u, v) if self.dirs[e] == FORWARD else (v, u)
            self.out[t] &= ~(1 << h)
            self.dirs[e] = None

    def leaf_ok(self) -> bool:
        self.stats.shortcut_checks += 1
        arcs = []
        for i, d in enumerate(self.dirs):
            u, v = self.g.edges[i]
            arcs.append((u, v) if d == FORWARD else (v, u))
        if _shortcut_scan(self.out, arcs) is not None:
            self.stats.shortcut_conflicts += 1
            return False
        return True

    def find(self, use_symmetry: bool = True) -> Orientation | None:
        witness: Orientation | None = None

        def branch(depth: int) -> bool:
            nonlocal witness
            self.stats.nodes += 1
            e = next((i for i in range(self.m) if self.dirs[i] is None), None)
            if e is None:
                if self.leaf_ok():
                    witness = Orientation(self.g, tuple(self.dirs))
                    return True
                return False
            # the very first branch never has prior assignments, so its
            # BACKWARD subtree holds exactly the reversals of the FORWARD one
            dirs_to_try = (FORWARD,) if (use_symmetry and depth == 0) \
                else (FORWARD, BACKWARD)
            for d in dirs_to_try:
                trail: list[int] = []
                if self.assign(e, d, trail) and branch(depth + 1):
                    return True
                self.undo(trail)
            return False

        branch(0)
        return witness

    def count(self) -> int:
        total = 0

        def branch() -> None:
            nonlocal total
            self.stats.nodes += 1
            e = next((i for i in range(self.m) if self.dirs[i] is None), None)
            if e is None:
                if self.leaf_ok():
                    total += 1
                return
            for d in (FORWARD, BACKWARD):
                trail: list[int] = []
                if self.assign(e, d, trail):
                    branch()
                self.undo(trail)

        branch()
        return total


def find_semi_transitive(g: Graph, stats: SearchStats | None = None) -> Orientation | None:
    """A semi-transitive orientation if one exists, else None.

    Deterministic: the witness is the one the sequential FORWARD-first
    lexicographic search reaches first (its reversal is equally valid)."""
    stats = stats if stats is not None else SearchStats()
    start = time.perf_counter()
    result = _Searcher(g, stats).find()
    stats.wall_time_s += time.perf_counter() - start
    return result


def count_semi_transitive(g: Graph, stats: SearchStats | None = None) -> int:
    """Exact number of total semi-transitive orientations (no symmetry)."""
    if len(g.edges) > COUNT_MAX_EDGES:
        raise TooManyEdgesError(
            f"exact counting capped at {COUNT_MAX_EDGES} edges, got {len(g.edges)}")
    stats = stats if stats is not None else SearchStats()
    start = time.perf_counter()
    result = _Searcher(g, stats).count()
    stats.wall_time_s += time.perf_counter() - start
    return result


def enumerate_total_orientations(g: Graph) -> Iterator[Orientation]:
    """All 2^m total orientations, lexicographic with FORWARD < BACKWARD."""
    for dirs in itertools.product((FORWARD, BACKWARD), repeat=len(g.edges)):
        yield Orientation(g, dirs)


def count_semi_transitive_naive(g: Graph) -> int:
    """Plain full enumeration with no propagation and no pruning; the
    regression anchor the fast counter must match bit-for-bit."""
    if len(g.edges) > COUNT_MAX_EDGES:
        raise TooManyEdgesError(
            f"exact counting capped at {COUNT_MAX_EDGES} edges, got {len(g.edges)}")
    return sum(1 for o in enumerate_total_orientations(g) if is_semi_transitive(o))


# ---------------------------------------------------------------------------
# construction from a proper coloring with at most three classes: every
# edge points from the lower color class to the higher.  Any directed path
# then ascends through at most three classes, so it has at most two edges
# and no shortcut can exist.

def orient_by_coloring(g: Graph, coloring: VertexColoring) -> Orientation:
    if len(coloring.color) != g.n:
        raise ImproperColoringError("coloring does not cover the vertex set")
    for u, v in g.edges:
        if coloring.of(u) == coloring.of(v):
            raise ImproperColoringError(f"edge {u}-{v} is monochromatic")
    if coloring.num_colors() > 3:
        raise TooManyColorsError(
            f"construction needs at most 3 colors, got {coloring.num_colors()}")
    dirs = tuple(
        FORWARD if coloring.of(u) < coloring.of(v) else BACKWARD
        for u, v in g.edges)
    return Orientation(g, dirs)


# ---------------------------------------------------------------------------
# text format: edge-list header, then one "t h >" line per stored edge

def format_orientation(o: Orientation) -> str:
    _require_total(o)
    lines = [f"{o.base.n} {len(o.base.edges)}"]
    for i in range(len(o.dirs)):
        t, h = o.arc(i)
        lines.append(f"{t} {h} >")
    return "\n".join(lines) + "\n"


def parse_orientation(text: str, g: Graph) -> Orientation:
    arcs = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not header_seen:
            if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
                raise ParseError("expected 'n m' header", line=lineno)
            if int(tokens[0]) != g.n or int(tokens[1]) != len(g.edges):
                raise ParseError(
                    f"header {line!r} does not match the graph "
                    f"({g.n} {len(g.edges)})", line=lineno)
            header_seen = True
            continue
        if len(tokens) != 3 or tokens[2] != ">" or \
                not tokens[0].isdigit() or not tokens[1].isdigit():
            raise ParseError(f"expected 'u v >', got {line!r}", line=lineno)
        arcs.append((int(tokens[0]), int(tokens[1])))
    if not header_seen:
        raise ParseError("empty orientation: missing header")
    if len(arcs) != len(g.edges):
        raise ParseError(f"expected {len(g.edges)} arc lines, got {len(arcs)}")
    for i, (t, h) in enumerate(arcs):
        key = (t, h) if t < h else (h, t)
        if key != g.edges[i]:
            raise ParseError(
                f"arc {t}->{h} out of stored edge order (expected edge "
                f"{g.edges[i][0]}-{g.edges[i][1]})", line=i + 2)
    return orientation_from_arcs(g, arcs, total=True)
