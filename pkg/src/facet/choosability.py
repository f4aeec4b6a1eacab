"""List-coloring tools: Gallai trees, degree-feasible choosability, SDRs.

The degree-feasibility guarantee: a connected graph with lists of size
at least the degree at every vertex is list-colorable unless every list
is exactly degree-sized and every block of the graph is a complete graph
or an odd cycle (a Gallai tree).  ``degree_feasible_colorable`` exposes
both the guarantee test and an exact search so callers can confirm the
two agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence


class ListColoringError(ValueError):
    pass


class SearchBudgetError(RuntimeError):
    """Instance exceeds the exact search's size budget."""


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    adjacency: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ListColoringError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ListColoringError(f"loop at {u} not allowed")
            adj[u].add(v)
            adj[v].add(u)
        return SimpleGraph(n, tuple(frozenset(s) for s in adj))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        ]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as vertex sets) plus the cut vertices joining them."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def blocks(g: SimpleGraph) -> BlockDecomposition:
    """Block decomposition: biconnected components, bridges as 2-sets,
    isolated vertices as singletons; cut vertices are those on two or
    more blocks.  Iterative lowpoint computation with an explicit edge
    stack.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[frozenset[int]] = []
    counter = 0

    for root in range(g.n):
        if root in disc:
            continue
        if not g.adjacency[root]:
            out.append(frozenset((root,)))
            continue
        disc[root] = low[root] = counter
        counter += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, None, iter(sorted(g.adjacency[root])))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] >= disc[pv]:
                        comp: set[int] = set()
                        while estack:
                            a, b = estack.pop()
                            comp.update((a, b))
                            if (a, b) == (pv, v):
                                break
                        out.append(frozenset(comp))
                continue
            if w == parent:
                continue
            if w not in disc:
                estack.append((v, w))
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(sorted(g.adjacency[w]))))
            elif disc[w] < disc[v]:
                estack.append((v, w))
                low[v] = min(low[v], disc[w])
    seen: set[int] = set()
    cuts: set[int] = set()
    for blk in out:
        cuts.update(blk & seen)
        seen.update(blk)
    return BlockDecomposition(blocks=tuple(out), cut_vertices=frozenset(cuts))


def _is_complete(g: SimpleGraph, verts: frozenset[int]) -> bool:
    k = len(verts)
    return all(len(g.adjacency[v] & verts) == k - 1 for v in verts)


def _is_odd_cycle(g: SimpleGraph, verts: frozenset[int]) -> bool:
    if len(verts) < 3 or len(verts) % 2 == 0:
        return False
    return all(len(g.adjacency[v] & verts) == 2 for v in verts)


def is_gallai_tree(g: SimpleGraph) -> bool:
    """True when every block induces a complete graph or an odd cycle.

    Defined for connected graphs only; disconnected input is rejected.
    """
    if not g.is_connected():
        raise ListColoringError("Gallai-tree test needs a connected graph")
    return all(
        _is_complete(g, blk) or _is_odd_cycle(g, blk)
        for blk in blocks(g).blocks
    )


def list_color(
    g: SimpleGraph,
    lists: Sequence[Iterable[Hashable]],
    max_nodes: int = 25,
) -> Optional[dict[int, Hashable]]:
    """Exact list-coloring search; a proper assignment or ``None``.

    Backtracking with forward checking.  Vertices are attacked smallest
    remaining list first (degree descending, id as the tiebreaks).
    """
    if len(lists) != g.n:
        raise ListColoringError("one list per vertex required")
    if g.n > max_nodes:
        raise SearchBudgetError(
            f"graph has {g.n} vertices, search budget is {max_nodes}"
        )
    domains: list[set[Hashable]] = [set(l) for l in lists]
    assign: dict[int, Hashable] = {}

    def pick() -> Optional[int]:
        best = None
        for v in range(g.n):
            if v in assign:
                continue
            key = (len(domains[v]), -g.degree(v), v)
            if best is None or key < best[0]:
                best = (key, v)
        return None if best is None else best[1]

    def go() -> bool:
        v = pick()
        if v is None:
            return True
        for c in sorted(domains[v], key=repr):
            pruned: list[int] = []
            ok = True
            for u in g.adjacency[v]:
                if u in assign:
                    continue
                if c in domains[u]:
                    domains[u].discard(c)
                    pruned.append(u)
                    if not domains[u]:
                        ok = False
            if ok:
                assign[v] = c
                if go():
                    return True
                del assign[v]
            for u in pruned:
                domains[u].add(c)
        return False

    if any(not d for d in domains) and g.n:
        # An empty list is an immediate refusal unless that vertex count is 0.
        return None
    return dict(assign) if go() else None


def degree_feasible_colorable(
    g: SimpleGraph, lists: Sequence[Iterable[Hashable]]
) -> tuple[bool, bool, Optional[dict[int, Hashable]]]:
    """Degree-feasibility guarantee plus exact confirmation.

    Requires a connected graph and ``|L(v)| >= d(v)`` everywhere.
    Returns ``(guaranteed, colorable, coloring)`` where ``guaranteed``
    is True when some list exceeds its degree or the graph is not a
    Gallai tree; in that case the search must succeed.
    """
    if not g.is_connected():
        raise ListColoringError("guarantee needs a connected graph")
    sizes = [len(set(l)) for l in lists]
    if len(sizes) != g.n:
        raise ListColoringError("one list per vertex required")
    for v in range(g.n):
        if sizes[v] < g.degree(v):
            raise ListColoringError(
                f"list at vertex {v} smaller than its degree"
            )
    slack = any(sizes[v] > g.degree(v) for v in range(g.n))
    guaranteed = slack or not is_gallai_tree(g)
    coloring = list_color(g, lists)
    return guaranteed, coloring is not None, coloring


# -- systems of distinct representatives ----------------------------------


def sdr(
    sets: Sequence[Iterable[Hashable]],
    clique: bool = True,
) -> tuple[Optional[dict[int, Hashable]], Optional[frozenset[int]]]:
    """System of distinct representatives via augmenting paths.

    Returns ``(picks, None)`` on success.  On failure returns
    ``(None, S)`` where ``S`` is a Hall violator: indices whose combined
    elements number fewer than ``|S|``.

    ``clique`` records the caller's claim that the indexed items
    conflict pairwise, which is what makes an SDR the same thing as a
    proper coloring.  When the conflicts are not a clique an SDR is the
    wrong question, so ``clique=False`` is refused; run ``list_color``
    on the actual conflict graph instead.
    """
    if not clique:
        raise ListColoringError(
            "sdr assumes pairwise-conflicting items; use list_color for "
            "general conflict graphs"
        )
    pools = [frozenset(s) for s in sets]
    match: dict[Hashable, int] = {}

    def augment(i: int, seen: set[Hashable]) -> bool:
        for x in sorted(pools[i], key=repr):
            if x in seen:
                continue
            seen.add(x)
            if x not in match or augment(match[x], seen):
                match[x] = i
                return True
        return False

    for i in range(len(pools)):
        if not augment(i, set()):
            # Alternating-path reachability from the failed index gives
            # the violator: every reachable element is matched, and the
            # reachable index set outnumbers its neighborhood.
            reach_idx = {i}
            reach_elt: set[Hashable] = set()
            frontier = [i]
            while frontier:
                j = frontier.pop()
                for x in pools[j]:
                    if x in reach_elt:
                        continue
                    reach_elt.add(x)
                    owner = match.get(x)
                    if owner is not None and owner not in reach_idx:
                        reach_idx.add(owner)
                        frontier.append(owner)
            return None, frozenset(reach_idx)
    picks = {i: x for x, i in match.items()}
    return picks, None


def subset_hall_lower_bounds(
    bounds: Sequence[int],
    disjoint_pairs: Iterable[tuple[int, int]] = (),
) -> tuple[bool, Optional[frozenset[int]]]:
    """Hall's condition from size information alone.

    ``bounds[i]`` is a lower bound on ``|L_i|``; a pair in
    ``disjoint_pairs`` marks two lists known to share no element.  For
    every index subset S the union is at least the largest single bound
    in S, and at least ``bounds[i] + bounds[j]`` for a marked pair inside
    S.  Returns ``(True, None)`` when every subset passes, otherwise
    ``(False, S)`` for the smallest failing subset.

    Exponential in the number of lists; meant for the handful-sized
    systems that appear in recoloring arguments.
    """
    idx = range(len(bounds))
    pairs = [frozenset(p) for p in disjoint_pairs]
    for p in pairs:
        if len(p) != 2 or not all(0 <= i < len(bounds) for i in p):
            raise ValueError(f"bad disjoint pair {sorted(p)}")
    from itertools import combinations

    for size in range(1, len(bounds) + 1):
        for combo in combinations(idx, size):
            s = frozenset(combo)
            lb = max(bounds[i] for i in combo)
            for p in pairs:
                if p <= s:
                    a, b = sorted(p)
                    lb = max(lb, bounds[a] + bounds[b])
            if lb < size:
                return False, s
    return True, None
