"""Top-level representability decision: a graph is word-representable
exactly when it admits a semi-transitive orientation, so decide() runs the
orientation search and packages the outcome with its search statistics.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import TooLargeToVerifyError
from .graphs import Graph
from .orientations import (
    FORWARD,
    Orientation,
    SearchStats,
    enumerate_total_orientations,
    find_semi_transitive,
    format_orientation,
    is_semi_transitive,
)

REPRESENTABLE = "Representable"
NON_REPRESENTABLE = "NonRepresentable"

VERIFY_MAX_EDGES = 14


@dataclass(frozen=True)
class Decision:
    verdict: str
    witness: Orientation | None
    stats: SearchStats


def decide(g: Graph) -> Decision:
    """Decide word-representability via the orientation search.

    Complete graphs short-circuit: orienting every edge by increasing
    label is a transitive tournament, which is always semi-transitive.
    """
    if g.is_complete():
        witness = Orientation(g, (FORWARD,) * len(g.edges))
        return Decision(REPRESENTABLE, witness, SearchStats())
    stats = SearchStats()
    witness = find_semi_transitive(g, stats)
    if witness is None:
        return Decision(NON_REPRESENTABLE, None, stats)
    return Decision(REPRESENTABLE, witness, stats)


def verify_certificate(g: Graph, d: Decision) -> bool:
    """Independent re-check of a decision.

    Representable: the witness must be a total semi-transitive orientation
    of g.  NonRepresentable: re-confirmed by plain enumeration of all 2^m
    orientations, with no propagation and no symmetry; refuses graphs past
    the enumeration cap rather than pretending to check.
    """
    if d.verdict == REPRESENTABLE:
        w = d.witness
        return w is not None and w.base == g and w.is_total and is_semi_transitive(w)
    if len(g.edges) > VERIFY_MAX_EDGES:
        raise TooLargeToVerifyError(
            f"naive re-check capped at {VERIFY_MAX_EDGES} edges, "
            f"got {len(g.edges)}")
    return all(not is_semi_transitive(o) for o in enumerate_total_orientations(g))


def decision_to_json(d: Decision) -> dict:
    """Stable JSON shape: {verdict, witness, stats}; witness is a list of
    [tail, head] arcs in stored edge order, or null."""
    witness = None
    if d.witness is not None:
        witness = [list(d.witness.arc(i)) for i in range(len(d.witness.dirs))]
    return {"verdict": d.verdict, "witness": witness, "stats": asdict(d.stats)}


def decision_to_text(d: Decision, show_stats: bool = False) -> str:
    lines = [d.verdict]
    if d.witness is not None:
        lines.append(format_orientation(d.witness).rstrip("\n"))
    if show_stats:
        s = d.stats
        lines.append(
            f"nodes={s.nodes} propagations={s.propagations} "
            f"shortcut_checks={s.shortcut_checks} "
            f"shortcut_conflicts={s.shortcut_conflicts} "
            f"wall_time_s={s.wall_time_s:.3f}")
    return "\n".join(lines) + "\n"
