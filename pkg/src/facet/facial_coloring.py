"""Facial edge-colorings: conflict graphs, verification, exact solving.

An ell-facial edge-coloring assigns colors to edges so that any two
distinct edges at facial distance at most ell receive different colors.
The conflict graph has one node per edge and one conflict per such pair,
so verification and chromatic questions reduce to ordinary vertex
problems on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from facet.embedding import EmbeddedGraph, facial_neighborhood


class ColoringError(ValueError):
    """Malformed or improper coloring input."""


class SolverBudgetError(RuntimeError):
    """Instance exceeds the exact solver's size budget."""


def default_palette(ell: int) -> tuple[int, ...]:
    """Colors 1..3*ell+1, the conjectured-sufficient palette size."""
    return tuple(range(1, 3 * ell + 2))


@dataclass(frozen=True)
class ConflictGraph:
    """Conflict structure of an ell-facial coloring instance.

    ``adjacency[e]`` lists the edges conflicting with ``e``; ``witness``
    maps each conflicting pair (lo, hi) to ``(gap, face, pos_lo, pos_hi)``
    naming a face walk realising the minimal gap.
    """

    ell: int
    n_edges: int
    adjacency: tuple[frozenset[int], ...]
    witness: dict[tuple[int, int], tuple[int, int, int, int]] = field(compare=False)

    def degree(self, e: int) -> int:
        return len(self.adjacency[e])

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.witness)


@dataclass(frozen=True)
class Violation:
    """One conflicting pair sharing a color, with its witness walk."""

    e: int
    f: int
    color: int
    face: int
    gap: int
    pos_e: int
    pos_f: int


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple[Violation, ...] = ()
    # ids left uncolored when a total coloring was required
    missing: tuple[int, ...] = ()


def conflict_graph(g: EmbeddedGraph, ell: int) -> ConflictGraph:
    """Build the ell-facial conflict graph of a plane pseudograph."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    adj: list[set[int]] = [set() for _ in range(g.m)]
    witness: dict[tuple[int, int], tuple[int, int, int, int]] = {}
    for (a, b), (gap, face, pi, pj) in g.edge_gap_table().items():
        if gap <= ell:
            adj[a].add(b)
            adj[b].add(a)
            witness[(a, b)] = (gap, face, pi, pj)
    return ConflictGraph(
        ell=ell,
        n_edges=g.m,
        adjacency=tuple(frozenset(s) for s in adj),
        witness=witness,
    )


def _check_ids(coloring: dict[int, int], count: int, kind: str) -> None:
    for key, color in coloring.items():
        if not isinstance(key, int) or not 0 <= key < count:
            raise ColoringError(f"{kind} id {key!r} out of range")
        if not isinstance(color, int) or color < 1:
            raise ColoringError(f"color {color!r} on {kind} {key} not a positive integer")


def verify(
    g: EmbeddedGraph,
    ell: int,
    coloring: dict[int, int],
    require_total: bool = True,
) -> Verdict:
    """Check a coloring; report every conflict with a witness face.

    With ``require_total`` any uncolored edge is reported in ``missing``
    and fails the verdict; without it the coloring is judged on its
    colored support alone.
    """
    _check_ids(coloring, g.m, "edge")
    cg = conflict_graph(g, ell)
    bad = []
    for (a, b), (gap, face, pi, pj) in sorted(cg.witness.items()):
        if a in coloring and b in coloring and coloring[a] == coloring[b]:
            bad.append(
                Violation(
                    e=a, f=b, color=coloring[a], face=face, gap=gap,
                    pos_e=pi, pos_f=pj,
                )
            )
    missing: tuple[int, ...] = ()
    if require_total:
        missing = tuple(e for e in range(g.m) if e not in coloring)
    return Verdict(ok=not bad and not missing, violations=tuple(bad), missing=missing)


def verify_vertex(
    g: EmbeddedGraph,
    ell: int,
    coloring: dict[int, int],
    require_total: bool = True,
) -> Verdict:
    """Vertex analogue: vertices at facial distance <= ell along a face
    walk must differ.  Violation fields name vertices instead of edges."""
    _check_ids(coloring, g.n, "vertex")
    bad = []
    for (a, b), (gap, face, pi, pj) in sorted(g.vertex_gap_table().items()):
        if gap <= ell and a in coloring and b in coloring and coloring[a] == coloring[b]:
            bad.append(
                Violation(
                    e=a, f=b, color=coloring[a], face=face, gap=gap,
                    pos_e=pi, pos_f=pj,
                )
            )
    missing: tuple[int, ...] = ()
    if require_total:
        missing = tuple(v for v in range(g.n) if v not in coloring)
    return Verdict(ok=not bad and not missing, violations=tuple(bad), missing=missing)


def available_colors(
    g: EmbeddedGraph,
    ell: int,
    partial: dict[int, int],
    palette: Optional[tuple[int, ...]] = None,
) -> dict[int, frozenset[int]]:
    """Per-edge available sets under a proper partial coloring.

    ``A(e)`` is the palette minus the colors of colored edges at facial
    distance at most ell from ``e``.  For a colored edge the set answers
    the hypothetical recoloring question, so its own current color is
    not excluded.  Improper input is rejected.
    """
    _check_ids(partial, g.m, "edge")
    if palette is None:
        palette = default_palette(ell)
    pool = frozenset(palette)
    cg = conflict_graph(g, ell)
    for a, b in cg.pairs():
        if a in partial and b in partial and partial[a] == partial[b]:
            raise ColoringError(
                f"partial coloring improper: edges {a} and {b} share color {partial[a]}"
            )
    out = {}
    for e in range(g.m):
        banned = {partial[f] for f in cg.adjacency[e] if f in partial}
        out[e] = pool - banned
    return out


def recolor_candidates(
    g: EmbeddedGraph,
    partial: dict[int, int],
    uv: int,
    ell: int = 3,
    palette: Optional[tuple[int, ...]] = None,
) -> frozenset[int]:
    """Colors that can safely replace the color of ``uv``.

    ``uv`` must be colored and have an endpoint ``u`` of degree 3 whose
    other two edges ``uu1``, ``uu2`` are uncolored; the result is the
    subset of ``A(uu1) & A(uu2)`` that avoids every colored edge facially
    close to ``uv`` but to neither ``uu1`` nor ``uu2``.  Any returned
    color keeps the partial coloring proper when written onto ``uv``.
    """
    if not 0 <= uv < g.m:
        raise ColoringError(f"edge id {uv} out of range")
    if uv not in partial:
        raise ColoringError(f"edge {uv} must be colored")
    if palette is None:
        palette = default_palette(ell)

    candidates = []
    for w in dict.fromkeys(g.edge_vertices(uv)):
        if g.degree(w) != 3:
            continue
        incident = [d >> 1 for d in g.rotation[w]]
        incident.remove(uv)
        if len(incident) != 2 or incident[0] == incident[1]:
            continue
        e1, e2 = sorted(incident)
        if e1 not in partial and e2 not in partial:
            candidates.append((e1, e2))
    if not candidates:
        raise ColoringError(
            f"edge {uv} has no 3-valent endpoint with two uncolored companion edges"
        )
    if len(candidates) > 1:
        raise ColoringError(f"both endpoints of edge {uv} qualify; ambiguous")
    uu1, uu2 = candidates[0]

    n1 = facial_neighborhood(g, ell, uu1)
    n2 = facial_neighborhood(g, ell, uu2)
    nuv = facial_neighborhood(g, ell, uv)

    def avail(nbrs: frozenset[int]) -> set[int]:
        return set(palette) - {partial[f] for f in nbrs if f in partial}

    inter = avail(n1) & avail(n2)
    outside = {partial[f] for f in nuv - n1 - n2 if f in partial}
    return frozenset(inter - outside)


def _first_fit(
    cg: ConflictGraph,
    policy: str = "degree",
    max_colors: Optional[int] = None,
) -> dict[int, int]:
    """First-fit over 0-based colors under a node order."""
    if policy == "degree":
        order = sorted(range(cg.n_edges), key=lambda e: (-cg.degree(e), e))
    elif policy == "id":
        order = list(range(cg.n_edges))
    else:
        raise ValueError(f"unknown policy {policy!r}")
    coloring: dict[int, int] = {}
    for e in order:
        used = {coloring[f] for f in cg.adjacency[e] if f in coloring}
        c = 0
        while c in used:
            c += 1
        if max_colors is not None and c >= max_colors:
            raise ColoringError(
                f"greedy needs more than {max_colors} colors at edge {e}"
            )
        coloring[e] = c
    return coloring


def greedy_color(
    g: EmbeddedGraph,
    ell: int,
    policy: str = "degree",
    max_colors: Optional[int] = None,
) -> dict[int, int]:
    """First-fit ell-facial coloring; colors start at 1.

    ``policy``: "degree" orders by conflict degree descending (id as the
    tiebreak), "id" by edge id.  Raises :class:`ColoringError` when
    ``max_colors`` is given and first-fit needs more.
    """
    raw = _first_fit(conflict_graph(g, ell), policy, max_colors)
    return {e: c + 1 for e, c in raw.items()}


def _greedy_clique(cg: ConflictGraph) -> list[int]:
    """Greedy clique in the conflict graph, a chromatic lower bound."""
    order = sorted(range(cg.n_edges), key=lambda e: (-cg.degree(e), e))
    clique: list[int] = []
    for e in order:
        if all(f in cg.adjacency[e] for f in clique):
            clique.append(e)
    return clique


def chromatic_index(
    g: EmbeddedGraph,
    ell: int,
    upper_bound: Optional[int] = None,
    max_nodes: int = 40,
) -> tuple[int, dict[int, int]]:
    """Exact ell-facial chromatic index with a witness coloring.

    Branch and bound over a static node order (conflict degree
    descending, id as tiebreak).  A node may reuse any color seen so far
    or open exactly one fresh color, so color classes are canonical and
    no permutation is explored twice.  The greedy clique seeds the lower
    bound and the greedy coloring the incumbent.  ``upper_bound`` is an
    advisory hint that only seeds the incumbent; the result is exact
    regardless of its value.

    Raises :class:`SolverBudgetError` for instances above ``max_nodes``
    conflict nodes; the search is exact but exponential, and the budget
    keeps misuse loud instead of slow.
    """
    cg = conflict_graph(g, ell)
    n = cg.n_edges
    if n > max_nodes:
        raise SolverBudgetError(
            f"conflict graph has {n} nodes, budget is {max_nodes}; "
            "instance too large for the exact solver"
        )
    if n == 0:
        return 0, {}

    order = sorted(range(n), key=lambda e: (-cg.degree(e), e))
    clique = _greedy_clique(cg)
    lower = max(1, len(clique))

    best_col = _first_fit(cg, policy="degree")
    if upper_bound is not None:
        try:
            hinted = _first_fit(cg, policy="degree", max_colors=upper_bound)
            if max(hinted.values()) < max(best_col.values()):
                best_col = hinted
        except ColoringError:
            pass
    best = 1 + max(best_col.values())
    if best == lower:
        return best, {e: c + 1 for e, c in best_col.items()}

    pos = {e: i for i, e in enumerate(order)}
    # Conflict neighbors that precede each node in the order.
    prior = [
        [f for f in cg.adjacency[e] if pos[f] < pos[e]] for e in order
    ]

    assign: dict[int, int] = {}
    state = {"best": best, "best_col": dict(best_col)}

    def descend(idx: int, used: int) -> None:
        if used >= state["best"]:
            return
        if idx == n:
            state["best"] = used
            state["best_col"] = dict(assign)
            return
        e = order[idx]
        banned = {assign[f] for f in prior[idx]}
        limit = min(used + 1, state["best"] - 1)
        for c in range(limit):
            if c in banned:
                continue
            assign[e] = c
            descend(idx + 1, max(used, c + 1))
            del assign[e]
            if state["best"] <= lower:
                return

    descend(0, 0)
    return state["best"], {e: c + 1 for e, c in state["best_col"].items()}


# -- coloring text format --------------------------------------------------

_COLOR_LINE = re.compile(r"^c\s+(\d+)\s+(\d+)$")


def parse_coloring(text: str) -> dict[int, int]:
    """Parse ``c <edge> <color>`` lines; ``#`` comments allowed."""
    out: dict[int, int] = {}
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        m = _COLOR_LINE.match(stripped)
        if not m:
            raise ColoringError(f"malformed coloring line {stripped!r}")
        e, c = int(m.group(1)), int(m.group(2))
        if e in out:
            raise ColoringError(f"edge {e} colored twice")
        out[e] = c
    return out


def serialize_coloring(coloring: dict[int, int]) -> str:
    return "".join(f"c {e} {coloring[e]}\n" for e in sorted(coloring))
