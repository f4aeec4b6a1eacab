"""Plane pseudograph embeddings encoded as rotation systems over darts.

An edge ``e`` owns two darts ``2e`` and ``2e + 1``; dart ``2e + end`` is
incident with ``endpoints[e][end]``.  The clockwise successor function
``sigma`` is given per vertex by the rotation lists, and faces are the
orbits of the face permutation ``phi(d) = sigma(twin(d))``.  Under this
convention a face walk traverses its boundary with the face interior on
the left, which is the orientation all surgery helpers below rely on.

Loops, parallel edges, and bridges are all legal.  Every constructor
funnels through :meth:`EmbeddedGraph.build`, which checks dart coverage
and the per-component Euler characteristic, so an ``EmbeddedGraph`` in
hand is always a genus-zero embedding.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional


class EmbeddingError(ValueError):
    """Rotation system is structurally broken or not a plane embedding."""


class PegParseError(EmbeddingError):
    """Malformed PEG text."""


class SurgeryError(EmbeddingError):
    """Surgery preconditions violated."""


def twin(dart: int) -> int:
    return dart ^ 1


def edge_of(dart: int) -> int:
    return dart >> 1


def dart_of(edge: int, end: int) -> int:
    return 2 * edge + end


@dataclass(frozen=True)
class FaceWalk:
    """One orbit of the face permutation.

    ``darts[i]`` is based at ``vertices[i]`` and runs along
    ``edges[i]`` toward ``vertices[(i + 1) % len]``.
    """

    index: int
    darts: tuple[int, ...]
    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def length(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class FaceProfile:
    """Per-face counts used by the charge rules.

    ``n2`` counts distinct 2-vertices on the walk, ``n2t`` those of them
    that lie in a 2-thread (have a 2-valent neighbor).  ``s1`` and ``s2``
    count maximal cyclic runs of 2-vertices of length exactly 1 and 2;
    longer runs are counted by neither, so ``n2 == s1 + 2 * s2`` holds
    exactly when every maximal run has length at most 2.
    """

    face: int
    length: int
    n2: int
    n2t: int
    s1: int
    s2: int


@dataclass(frozen=True)
class EmbeddedGraph:
    """Immutable plane pseudograph with an explicit rotation system.

    Fields: ``n`` vertices, ``endpoints[e] = (u, v)`` per edge (order
    fixes the dart labelling), ``rotation[v]`` the clockwise dart list
    at ``v``.  ``warnings`` carries non-fatal diagnostics such as
    disconnectedness and never participates in equality.
    """

    n: int
    endpoints: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    # -- construction -------------------------------------------------

    @staticmethod
    def build(
        n: int,
        endpoints: Iterable[tuple[int, int]],
        rotation: Iterable[Iterable[int]],
        warnings: Iterable[str] = (),
    ) -> "EmbeddedGraph":
        """Validate and freeze a rotation system.

        Raises :class:`EmbeddingError` unless every dart appears exactly
        once, at the vertex its endpoint dictates, and every connected
        component satisfies V - E + F = 2 with F counted as face-walk
        orbits (an isolated vertex counts one empty face).
        """
        eps = tuple((int(u), int(v)) for u, v in endpoints)
        rot = tuple(tuple(int(d) for d in r) for r in rotation)
        g = EmbeddedGraph(int(n), eps, rot, tuple(warnings))
        g._validate()
        return g

    def _validate(self) -> None:
        if self.n < 0:
            raise EmbeddingError("negative vertex count")
        if len(self.rotation) != self.n:
            raise EmbeddingError(
                f"expected {self.n} rotation lists, got {len(self.rotation)}"
            )
        m = len(self.endpoints)
        for e, (u, v) in enumerate(self.endpoints):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise EmbeddingError(f"edge {e} endpoint out of range")
        seen: dict[int, int] = {}
        for vtx, rot in enumerate(self.rotation):
            for d in rot:
                if not (0 <= d < 2 * m):
                    raise EmbeddingError(f"dart {d} out of range at vertex {vtx}")
                if d in seen:
                    raise EmbeddingError(f"dart {d} listed twice")
                seen[d] = vtx
                want = self.endpoints[edge_of(d)][d & 1]
                if want != vtx:
                    raise EmbeddingError(
                        f"dart {d} listed at vertex {vtx}, belongs to {want}"
                    )
        if len(seen) != 2 * m:
            missing = sorted(set(range(2 * m)) - set(seen))
            raise EmbeddingError(f"missing darts {missing[:4]}")
        # Per-component sphere check: V - E + F = 2, one empty face for a
        # dartless component.  Equivalent to the plane-drawing formula
        # V - E + F = 1 + #components once outer faces are merged.
        comp = self._component_labels()
        ncomp = 1 + max(comp, default=0) if self.n else 0
        verts = [0] * ncomp
        edgec = [0] * ncomp
        facec = [0] * ncomp
        for v in range(self.n):
            verts[comp[v]] += 1
        for u, _ in self.endpoints:
            edgec[comp[u]] += 1
        for walk in self.faces():
            facec[comp[walk.vertices[0]]] += 1
        for c in range(ncomp):
            f = facec[c] if facec[c] else 1
            if verts[c] - edgec[c] + f != 2:
                raise EmbeddingError(
                    "rotation system is not a plane embedding: component "
                    f"{c} has V-E+F = {verts[c]}-{edgec[c]}+{f}"
                )

    # -- basic accessors ----------------------------------------------

    @property
    def m(self) -> int:
        return len(self.endpoints)

    def dart_vertex(self, dart: int) -> int:
        return self.endpoints[edge_of(dart)][dart & 1]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edge_vertices(self, e: int) -> tuple[int, int]:
        return self.endpoints[e]

    def neighbors(self, v: int) -> list[int]:
        """Neighbors in rotation order (repeats for parallel edges; a loop
        contributes the vertex itself twice)."""
        return [self.dart_vertex(twin(d)) for d in self.rotation[v]]

    def _component_labels(self) -> list[int]:
        comp = self._cache.get("components")
        if comp is None:
            comp = [-1] * self.n
            nxt = 0
            for s in range(self.n):
                if comp[s] != -1:
                    continue
                comp[s] = nxt
                stack = [s]
                while stack:
                    x = stack.pop()
                    for d in self.rotation[x]:
                        y = self.dart_vertex(twin(d))
                        if comp[y] == -1:
                            comp[y] = nxt
                            stack.append(y)
                nxt += 1
            self._cache["components"] = comp
        return comp

    @property
    def component_count(self) -> int:
        return 1 + max(self._component_labels(), default=-1)

    @property
    def is_connected(self) -> bool:
        return self.component_count <= 1

    # -- faces ----------------------------------------------------------

    def sigma(self) -> tuple[int, ...]:
        """Clockwise-successor permutation on darts."""
        sig = self._cache.get("sigma")
        if sig is None:
            out = [0] * (2 * self.m)
            for rot in self.rotation:
                k = len(rot)
                for i, d in enumerate(rot):
                    out[d] = rot[(i + 1) % k]
            sig = tuple(out)
            self._cache["sigma"] = sig
        return sig

    def phi(self) -> tuple[int, ...]:
        """Face permutation phi(d) = sigma(twin(d))."""
        ph = self._cache.get("phi")
        if ph is None:
            sig = self.sigma()
            ph = tuple(sig[twin(d)] for d in range(2 * self.m))
            self._cache["phi"] = ph
        return ph

    def faces(self) -> tuple[FaceWalk, ...]:
        """Face walks as phi-orbits, indexed by discovery order over darts."""
        fw = self._cache.get("faces")
        if fw is None:
            ph = self.phi()
            seen = [False] * (2 * self.m)
            walks = []
            for start in range(2 * self.m):
                if seen[start]:
                    continue
                orbit = []
                d = start
                while not seen[d]:
                    seen[d] = True
                    orbit.append(d)
                    d = ph[d]
                walks.append(
                    FaceWalk(
                        index=len(walks),
                        darts=tuple(orbit),
                        edges=tuple(edge_of(d) for d in orbit),
                        vertices=tuple(self.dart_vertex(d) for d in orbit),
                    )
                )
            fw = tuple(walks)
            self._cache["faces"] = fw
        return fw

    def face_of_dart(self, dart: int) -> int:
        lookup = self._cache.get("face_of_dart")
        if lookup is None:
            lookup = [0] * (2 * self.m)
            for walk in self.faces():
                for d in walk.darts:
                    lookup[d] = walk.index
            self._cache["face_of_dart"] = lookup
        return lookup[dart]

    def faces_at_vertex(self, v: int) -> frozenset[int]:
        table = self._cache.get("faces_at_vertex")
        if table is None:
            table = [set() for _ in range(self.n)]
            for walk in self.faces():
                for x in walk.vertices:
                    table[x].add(walk.index)
            table = [frozenset(s) for s in table]
            self._cache["faces_at_vertex"] = table
        return table[v]

    # -- facial distance -------------------------------------------------

    def edge_gap_table(self) -> dict[tuple[int, int], tuple[int, int, int, int]]:
        """Minimal cyclic gaps between edge occurrences on shared face walks.

        Maps ``(e, f)`` with ``e < f`` to ``(gap, face, pos_e, pos_f)``
        for the face realising the minimum.  Pairs never sharing a face
        are absent.
        """
        table = self._cache.get("edge_gaps")
        if table is None:
            table = self._gap_table(key="edges")
            self._cache["edge_gaps"] = table
        return table

    def vertex_gap_table(self) -> dict[tuple[int, int], tuple[int, int, int, int]]:
        """Same as :meth:`edge_gap_table` but between vertex occurrences."""
        table = self._cache.get("vertex_gaps")
        if table is None:
            table = self._gap_table(key="vertices")
            self._cache["vertex_gaps"] = table
        return table

    def _gap_table(self, key: str) -> dict:
        best: dict[tuple[int, int], tuple[int, int, int, int]] = {}
        for walk in self.faces():
            seq = walk.edges if key == "edges" else walk.vertices
            k = len(seq)
            for i in range(k):
                for j in range(i + 1, k):
                    a, b = seq[i], seq[j]
                    if a == b:
                        continue
                    if a > b:
                        a, b = b, a
                        pi, pj = j, i
                    else:
                        pi, pj = i, j
                    gap = min(j - i, k - (j - i))
                    cur = best.get((a, b))
                    if cur is None or gap < cur[0]:
                        best[(a, b)] = (gap, walk.index, pi, pj)
        return best


def faces(g: EmbeddedGraph) -> tuple[FaceWalk, ...]:
    return g.faces()


def facial_distance(g: EmbeddedGraph, e: int, f: int) -> float:
    """Minimum cyclic gap between occurrences of ``e`` and ``f`` over all
    face walks; 0 iff ``e == f``; ``math.inf`` when no walk carries both."""
    _check_edge(g, e)
    _check_edge(g, f)
    if e == f:
        return 0
    key = (e, f) if e < f else (f, e)
    hit = g.edge_gap_table().get(key)
    return math.inf if hit is None else hit[0]


def facial_neighborhood(g: EmbeddedGraph, ell: int, e: int) -> frozenset[int]:
    """Edges distinct from ``e`` at facial distance at most ``ell``."""
    _check_edge(g, e)
    if ell < 1:
        return frozenset()
    out = set()
    for (a, b), (gap, _, _, _) in g.edge_gap_table().items():
        if gap <= ell:
            if a == e:
                out.add(b)
            elif b == e:
                out.add(a)
    return frozenset(out)


def _check_edge(g: EmbeddedGraph, e: int) -> None:
    if not (0 <= e < g.m):
        raise EmbeddingError(f"edge id {e} out of range")


# -- PEG text format ----------------------------------------------------


def parse_peg(text: str) -> EmbeddedGraph:
    """Parse the plane-embedded-graph text format.

    Line 1 is ``peg 1``; then ``vertices <n>``, ``edges <m>``, one
    ``e <id> <u> <v>`` line per edge and one ``rot <v> <darts...>`` line
    per vertex.  ``#`` starts a comment.  A disconnected graph parses
    with a warning; a non-planar rotation system is an error.
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise PegParseError("empty input")
    if lines[0].split() != ["peg", "1"]:
        raise PegParseError(f"expected header 'peg 1', got {lines[0]!r}")

    n = m = None
    edges: dict[int, tuple[int, int]] = {}
    rots: dict[int, tuple[int, ...]] = {}
    for ln in lines[1:]:
        parts = ln.split()
        kind = parts[0]
        try:
            if kind == "vertices":
                n = int(parts[1])
            elif kind == "edges":
                m = int(parts[1])
            elif kind == "e":
                eid, u, v = int(parts[1]), int(parts[2]), int(parts[3])
                if eid in edges:
                    raise PegParseError(f"edge {eid} declared twice")
                edges[eid] = (u, v)
            elif kind == "rot":
                v = int(parts[1])
                if v in rots:
                    raise PegParseError(f"rotation of vertex {v} declared twice")
                rots[v] = tuple(int(x) for x in parts[2:])
            else:
                raise PegParseError(f"unknown directive {kind!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, PegParseError):
                raise
            raise PegParseError(f"malformed line {ln!r}") from exc
    if n is None or m is None:
        raise PegParseError("missing 'vertices' or 'edges' declaration")
    if sorted(edges) != list(range(m)):
        raise PegParseError("edge ids must cover 0..m-1 exactly")
    if sorted(rots) != list(range(n)):
        raise PegParseError("rotation lines must cover every vertex exactly once")

    warns = []
    try:
        g = EmbeddedGraph.build(
            n, [edges[e] for e in range(m)], [rots[v] for v in range(n)]
        )
    except EmbeddingError as exc:
        raise PegParseError(str(exc)) from exc
    if not g.is_connected:
        warns.append(f"disconnected: {g.component_count} components")
    if warns:
        g = EmbeddedGraph.build(
            n, [edges[e] for e in range(m)], [rots[v] for v in range(n)], warns
        )
    return g


def serialize_peg(g: EmbeddedGraph) -> str:
    """Emit PEG text, edges then rotations in ascending id order."""
    out = ["peg 1", f"vertices {g.n}", f"edges {g.m}"]
    for e, (u, v) in enumerate(g.endpoints):
        out.append(f"e {e} {u} {v}")
    for v in range(g.n):
        darts = " ".join(str(d) for d in g.rotation[v])
        out.append(f"rot {v} {darts}".rstrip())
    return "\n".join(out) + "\n"


# -- surgeries -----------------------------------------------------------


@dataclass(frozen=True)
class SurgeryResult:
    """Surgery output: the new graph plus id re-mappings.

    ``edge_map[e]`` / ``vertex_map[v]`` give the new id, or ``None`` for
    removed elements; both identified edges map to the merged id.
    """

    graph: EmbeddedGraph
    edge_map: tuple[Optional[int], ...]
    vertex_map: tuple[Optional[int], ...]


def _compact(
    g: EmbeddedGraph,
    keep_vertex: list[bool],
    keep_edge: list[bool],
    new_endpoints: list[tuple[int, int]],
    rotations: dict[int, list[int]],
    extra_warn: tuple[str, ...] = (),
) -> SurgeryResult:
    """Renumber surviving vertices/edges contiguously and rebuild."""
    vmap: list[Optional[int]] = [None] * g.n
    nxt = 0
    for v in range(g.n):
        if keep_vertex[v]:
            vmap[v] = nxt
            nxt += 1
    emap: list[Optional[int]] = [None] * g.m
    enxt = 0
    for e in range(g.m):
        if keep_edge[e]:
            emap[e] = enxt
            enxt += 1

    def map_dart(d: int) -> int:
        return 2 * emap[edge_of(d)] + (d & 1)

    endpoints = []
    for e in range(g.m):
        if keep_edge[e]:
            u, v = new_endpoints[e]
            endpoints.append((vmap[u], vmap[v]))
    rot_out: list[list[int]] = [[] for _ in range(nxt)]
    for old_v, rot in rotations.items():
        rot_out[vmap[old_v]] = [map_dart(d) for d in rot]
    built = EmbeddedGraph.build(nxt, endpoints, rot_out)
    warns = list(extra_warn)
    if not built.is_connected:
        warns.append(f"disconnected: {built.component_count} components")
    if warns:
        built = EmbeddedGraph.build(nxt, endpoints, rot_out, tuple(warns))
    return SurgeryResult(built, tuple(emap), tuple(vmap))


def delete_edge(g: EmbeddedGraph, e: int) -> SurgeryResult:
    """Remove one edge; the two flanking faces merge."""
    _check_edge(g, e)
    dead = {2 * e, 2 * e + 1}
    rotations = {
        v: [d for d in g.rotation[v] if d not in dead] for v in range(g.n)
    }
    keep_edge = [i != e for i in range(g.m)]
    return _compact(
        g, [True] * g.n, keep_edge, list(g.endpoints), rotations
    )


def subdivide_edge(g: EmbeddedGraph, e: int) -> SurgeryResult:
    """Replace edge ``e = (u, v)`` by a path u-w-v through a new vertex.

    ``e`` keeps its id as the (u, w) half; the (w, v) half gets id m.
    """
    _check_edge(g, e)
    u, v = g.endpoints[e]
    w = g.n
    new_e = g.m
    endpoints = list(g.endpoints)
    endpoints[e] = (u, w)
    endpoints.append((w, v))
    rotations = [list(r) for r in g.rotation]
    # Old dart 2e+1 sat at v; the (w, v) half takes its slot there.
    rotations[v] = [
        (2 * new_e + 1 if d == 2 * e + 1 else d) for d in rotations[v]
    ]
    rotations.append([2 * e + 1, 2 * new_e])
    built = EmbeddedGraph.build(g.n + 1, endpoints, rotations, g.warnings)
    return SurgeryResult(
        built,
        tuple(range(g.m)),
        tuple(range(g.n)),
    )


def contract_edge(g: EmbeddedGraph, e: int) -> SurgeryResult:
    """Contract a non-loop edge, merging its endpoints.

    The merged rotation splices the two rotations at the contracted
    darts: u's darts after ``2e`` in clockwise order, then v's darts
    after ``2e + 1``.
    """
    _check_edge(g, e)
    u, v = g.endpoints[e]
    if u == v:
        raise SurgeryError(f"cannot contract loop {e}")
    du, dv = 2 * e, 2 * e + 1

    def split_after(vtx: int, d: int) -> list[int]:
        rot = g.rotation[vtx]
        i = rot.index(d)
        return [rot[(i + k) % len(rot)] for k in range(1, len(rot))]

    merged = split_after(u, du) + split_after(v, dv)
    endpoints = [
        (u if a == v else a, u if b == v else b) for (a, b) in g.endpoints
    ]
    rotations = {x: list(g.rotation[x]) for x in range(g.n) if x != v}
    rotations[u] = merged
    keep_vertex = [x != v for x in range(g.n)]
    keep_edge = [i != e for i in range(g.m)]
    res = _compact(g, keep_vertex, keep_edge, endpoints, rotations)
    # The removed endpoint maps onto the merged vertex.
    vmap = list(res.vertex_map)
    vmap[v] = vmap[u]
    return SurgeryResult(res.graph, res.edge_map, tuple(vmap))


def contract_face(g: EmbeddedGraph, face: int) -> SurgeryResult:
    """Collapse a face: delete its boundary edges, merge its vertices.

    Requires the walk to visit no vertex twice.  The merged vertex keeps
    the surviving dart arcs of the boundary vertices; because walks run
    counterclockwise around the collapsing disk, the arcs are stitched in
    reverse walk order to stay clockwise around the new vertex.
    """
    walks = g.faces()
    if not (0 <= face < len(walks)):
        raise SurgeryError(f"face id {face} out of range")
    walk = walks[face]
    if len(set(walk.vertices)) != len(walk.vertices):
        raise SurgeryError("non-simple face: walk repeats a vertex")
    k = len(walk)
    boundary_edges = set(walk.edges)
    if len(boundary_edges) != k:
        raise SurgeryError("non-simple face: walk repeats an edge")
    boundary_darts = set()
    for e in boundary_edges:
        boundary_darts.update((2 * e, 2 * e + 1))

    sig = g.sigma()
    arcs: list[list[int]] = []
    for i in range(k):
        d_out = walk.darts[i]
        d_stop = twin(walk.darts[(i - 1) % k])
        arc = []
        d = sig[d_out]
        while d != d_stop:
            arc.append(d)
            d = sig[d]
        arcs.append(arc)
    merged: list[int] = list(arcs[0])
    for i in range(k - 1, 0, -1):
        merged.extend(arcs[i])

    w = walk.vertices[0]  # survivor id before compaction
    on_face = set(walk.vertices)
    endpoints = [
        (w if a in on_face else a, w if b in on_face else b)
        for (a, b) in g.endpoints
    ]
    rotations = {
        x: list(g.rotation[x]) for x in range(g.n) if x not in on_face
    }
    rotations[w] = merged
    keep_vertex = [x == w or x not in on_face for x in range(g.n)]
    keep_edge = [e not in boundary_edges for e in range(g.m)]
    res = _compact(g, keep_vertex, keep_edge, endpoints, rotations)
    vmap = list(res.vertex_map)
    for x in on_face:
        vmap[x] = vmap[w]
    return SurgeryResult(res.graph, res.edge_map, tuple(vmap))


def identify_edges(g: EmbeddedGraph, e: int, f: int, face: int) -> SurgeryResult:
    """Identify two vertex-disjoint edges of one face into a single edge.

    The face walk must traverse each of ``e`` and ``f`` exactly once.
    Writing the walk as  e, P1, f, P2  the quotient glues e onto f
    antiparallel (head-to-tail), so P1 and P2 close into the two cycles
    of a dumbbell and the old face splits into two faces bounded by P1
    and P2.  The merged edge inherits e's darts: its walk slot inside
    f's opposite face is taken over by e's free dart.  Rotations are
    recovered from the rewritten face permutation via
    sigma(d) = phi(twin(d)).
    """
    _check_edge(g, e)
    _check_edge(g, f)
    if e == f:
        raise SurgeryError("cannot identify an edge with itself")
    walks = g.faces()
    if not (0 <= face < len(walks)):
        raise SurgeryError(f"face id {face} out of range")
    walk = walks[face]
    pos_e = [i for i, x in enumerate(walk.edges) if x == e]
    pos_f = [i for i, x in enumerate(walk.edges) if x == f]
    if len(pos_e) != 1 or len(pos_f) != 1:
        raise SurgeryError(
            f"edges {e} and {f} must each occur exactly once on face {face}"
        )
    k = len(walk)
    i_e, i_f = pos_e[0], pos_f[0]
    a_e = walk.darts[i_e]  # traverses e inside this face, u1 -> u2
    a_f = walk.darts[i_f]  # traverses f inside this face, w1 -> w2
    u1, u2 = g.dart_vertex(a_e), g.dart_vertex(twin(a_e))
    w1, w2 = g.dart_vertex(a_f), g.dart_vertex(twin(a_f))
    if len({u1, u2, w1, w2}) != 4:
        raise SurgeryError(f"edges {e} and {f} share a vertex")

    p1 = [walk.darts[(i_e + t) % k] for t in range(1, (i_f - i_e) % k)]
    p2 = [walk.darts[(i_f + t) % k] for t in range(1, (i_e - i_f) % k)]
    # Disjoint endpoints force both connecting paths to be nonempty.
    assert p1 and p2

    t_f = twin(a_f)
    dead = {a_f, t_f}
    phi = list(g.phi())

    def orbit_from(d0: int) -> list[int]:
        orb = [d0]
        d = phi[d0]
        while d != d0:
            orb.append(d)
            d = phi[d]
        return orb

    new_walks: list[list[int]] = []
    for other in walks:
        if other.index == face:
            continue
        darts = [a_e if d == t_f else d for d in other.darts]
        new_walks.append(darts)
    new_walks.append(p1)
    new_walks.append(p2)

    phi_new: dict[int, int] = {}
    for darts in new_walks:
        for i, d in enumerate(darts):
            phi_new[d] = darts[(i + 1) % len(darts)]

    # Vertex classes after identification: u1~w2, u2~w1.
    cls = list(range(g.n))
    cls[w2] = u1
    cls[w1] = u2

    endpoints = []
    for eid, (a, b) in enumerate(g.endpoints):
        endpoints.append((cls[a], cls[b]))

    # Rebuild rotations from sigma(d) = phi_new(twin(d)).
    surviving = sorted(phi_new)
    sigma_new = {d: phi_new[twin(d)] for d in surviving}
    rotations: dict[int, list[int]] = {}
    placed: set[int] = set()
    for d0 in surviving:
        if d0 in placed:
            continue
        cycle = [d0]
        placed.add(d0)
        d = sigma_new[d0]
        while d != d0:
            cycle.append(d)
            placed.add(d)
            d = sigma_new[d]
        base = cls[g.dart_vertex(d0)]
        if base in rotations:
            raise SurgeryError("identification does not yield a plane embedding")
        rotations[base] = cycle

    keep_vertex = [cls[x] == x for x in range(g.n)]
    for x in range(g.n):
        if keep_vertex[x] and x not in rotations:
            rotations[x] = []  # isolated vertex keeps empty rotation
    keep_edge = [eid != f for eid in range(g.m)]
    res = _compact(g, keep_vertex, keep_edge, endpoints, rotations)
    emap = list(res.edge_map)
    emap[f] = emap[e]
    vmap = list(res.vertex_map)
    vmap[w2] = vmap[u1]
    vmap[w1] = vmap[u2]
    return SurgeryResult(res.graph, tuple(emap), tuple(vmap))


def delete_vertex(g: EmbeddedGraph, v: int) -> SurgeryResult:
    """Remove a vertex with all incident edges; faces around it merge.

    Deleting a cut vertex leaves a disconnected graph, reported through
    the result's warning list rather than an error.
    """
    if not (0 <= v < g.n):
        raise EmbeddingError(f"vertex id {v} out of range")
    dead_edges = {edge_of(d) for d in g.rotation[v]}
    dead_darts = set()
    for e in dead_edges:
        dead_darts.update((2 * e, 2 * e + 1))
    rotations = {
        x: [d for d in g.rotation[x] if d not in dead_darts]
        for x in range(g.n)
        if x != v
    }
    keep_vertex = [x != v for x in range(g.n)]
    keep_edge = [e not in dead_edges for e in range(g.m)]
    return _compact(g, keep_vertex, keep_edge, list(g.endpoints), rotations)


# -- medial graph --------------------------------------------------------


def medial(g: EmbeddedGraph) -> tuple[EmbeddedGraph, tuple[int, ...]]:
    """Medial graph plus the edge-to-vertex correspondence.

    Medial vertex ``i`` sits on edge ``i`` of ``g``; every consecutive
    dart pair (d, phi(d)) on a face walk becomes one medial edge, so the
    medial has 2m edges and is 4-regular.  The rotation at a medial
    vertex lists its four corner edges clockwise:
    corner(d), corner(phi^-1(twin d)), corner(twin d), corner(phi^-1(d)).
    """
    if g.m == 0:
        raise EmbeddingError("medial of an edgeless graph is undefined")
    phi = g.phi()
    phi_inv = [0] * len(phi)
    for d, t in enumerate(phi):
        phi_inv[t] = d
    # Medial edge id c corresponds to the corner (c, phi(c)); its dart 2c
    # sits at medial vertex edge_of(c), dart 2c+1 at edge_of(phi(c)).
    endpoints = [(edge_of(d), edge_of(phi[d])) for d in range(2 * g.m)]
    rotations = []
    for e in range(g.m):
        d, t = 2 * e, 2 * e + 1
        rotations.append(
            [
                2 * d,
                2 * phi_inv[t] + 1,
                2 * t,
                2 * phi_inv[d] + 1,
            ]
        )
    med = EmbeddedGraph.build(g.m, endpoints, rotations)
    return med, tuple(range(g.m))


# -- generators ----------------------------------------------------------


def _cycle(n: int) -> EmbeddedGraph:
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    if n == 1:
        return EmbeddedGraph.build(1, [(0, 0)], [[0, 1]])
    endpoints = [(i, (i + 1) % n) for i in range(n)]
    rotations = []
    for i in range(n):
        prev = (i - 1) % n
        rotations.append([2 * i, 2 * prev + 1])
    return EmbeddedGraph.build(n, endpoints, rotations)


def _k4() -> EmbeddedGraph:
    endpoints = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    rotations = [
        [2, 4, 0],
        [1, 8, 6],
        [7, 10, 3],
        [5, 11, 9],
    ]
    return EmbeddedGraph.build(4, endpoints, rotations)


def _prism(n: int) -> EmbeddedGraph:
    """Two concentric n-cycles joined by spokes; outer cycle edges are
    ids 0..n-1, inner n..2n-1, spokes 2n..3n-1."""
    if n < 3:
        raise ValueError("prism needs n >= 3")
    endpoints = []
    for i in range(n):
        endpoints.append((i, (i + 1) % n))  # outer
    for i in range(n):
        endpoints.append((n + i, n + (i + 1) % n))  # inner
    for i in range(n):
        endpoints.append((i, n + i))  # spoke
    rotations = []
    for i in range(n):
        prev = (i - 1) % n
        rotations.append([2 * i, 2 * (2 * n + i), 2 * prev + 1])
    for i in range(n):
        prev = (i - 1) % n
        rotations.append(
            [2 * (2 * n + i) + 1, 2 * (n + i), 2 * (n + prev) + 1]
        )
    return EmbeddedGraph.build(2 * n, endpoints, rotations)


def _theta(a: int, b: int, c: int) -> EmbeddedGraph:
    """Two branch vertices joined by three internally disjoint paths of
    a, b, c edges; length-1 paths give parallel edges."""
    if min(a, b, c) < 1:
        raise ValueError("theta path lengths must be >= 1")
    n = 2
    endpoints: list[tuple[int, int]] = []
    first_dart: list[int] = []
    last_dart: list[int] = []
    for length in (a, b, c):
        inner = list(range(n, n + length - 1))
        n += length - 1
        chain = [0] + inner + [1]
        ids = []
        for t in range(length):
            ids.append(len(endpoints))
            endpoints.append((chain[t], chain[t + 1]))
        first_dart.append(2 * ids[0])
        last_dart.append(2 * ids[-1] + 1)
    rotations: list[list[int]] = [[] for _ in range(n)]
    rotations[0] = [first_dart[0], first_dart[1], first_dart[2]]
    rotations[1] = [last_dart[0], last_dart[2], last_dart[1]]
    eid = 0
    for length in (a, b, c):
        for t in range(length - 1):
            w = endpoints[eid + t][1]
            rotations[w] = [2 * (eid + t) + 1, 2 * (eid + t + 1)]
        eid += length
    return EmbeddedGraph.build(n, endpoints, rotations)


def _subdivided_k4(ell: int) -> EmbeddedGraph:
    """K4 with the three edges at one vertex each subdivided ell-1 times."""
    if ell < 1:
        raise ValueError("subdivided_k4 needs ell >= 1")
    g = _k4()
    for e in (2, 4, 5):  # the edges incident with vertex 3
        cur = e
        for _ in range(ell - 1):
            g = subdivide_edge(g, cur).graph
    return g


def generate(family: str, *params: int) -> EmbeddedGraph:
    """Build a named plane graph family member.

    Families: ``cycle(n)``, ``k4``, ``prism(n)``, ``theta(a, b, c)``,
    ``subdivided_k4(ell)``.
    """
    try:
        if family == "cycle":
            (n,) = params
            return _cycle(n)
        if family == "k4":
            if params:
                raise ValueError("k4 takes no parameters")
            return _k4()
        if family == "prism":
            (n,) = params
            return _prism(n)
        if family == "theta":
            a, b, c = params
            return _theta(a, b, c)
        if family == "subdivided_k4":
            (ell,) = params
            return _subdivided_k4(ell)
    except ValueError as exc:
        raise ValueError(f"bad parameters for family {family!r}: {exc}") from exc
    raise ValueError(f"unknown family {family!r}")


def standard_catalog() -> list[tuple[str, EmbeddedGraph]]:
    """The fixed test-graph catalog: cycles 3..14, K4, prisms 3..5,
    thetas with path lengths up to 4, subdivided K4 depths 1..3."""
    out: list[tuple[str, EmbeddedGraph]] = []
    for n in range(3, 15):
        out.append((f"cycle-{n}", _cycle(n)))
    out.append(("k4", _k4()))
    for n in range(3, 6):
        out.append((f"prism-{n}", _prism(n)))
    for a in range(1, 5):
        for b in range(a, 5):
            for c in range(b, 5):
                out.append((f"theta-{a}-{b}-{c}", _theta(a, b, c)))
    for ell in range(1, 4):
        out.append((f"subdivided-k4-{ell}", _subdivided_k4(ell)))
    return out


def random_plane_graph(seed: int, max_ops: int = 9) -> EmbeddedGraph:
    """Seeded random 2-connected plane pseudograph.

    Grows a cycle by repeatedly splitting a face with a path between two
    distinct boundary vertices, or subdividing an edge.  Split paths of
    length >= 2 dominate, so the result is never a triangulation.
    """
    rng = random.Random(seed)
    g = _cycle(rng.randint(4, 8))
    for _ in range(rng.randint(3, max_ops)):
        if rng.random() < 0.35 and g.m < 40:
            g = subdivide_edge(g, rng.randrange(g.m)).graph
            continue
        walk = rng.choice(g.faces())
        spots = list(range(len(walk)))
        rng.shuffle(spots)
        picked = None
        for i in spots:
            for j in spots:
                if walk.vertices[i] != walk.vertices[j]:
                    picked = (i, j)
                    break
            if picked:
                break
        if picked is None:
            continue
        length = rng.choice((1, 2, 2, 3, 3, 4))
        g = _split_face(g, walk, picked[0], picked[1], length)
    return g


def _split_face(
    g: EmbeddedGraph, walk: FaceWalk, i: int, j: int, length: int
) -> EmbeddedGraph:
    """Add a path of ``length`` edges across a face, between the corners
    at walk positions ``i`` and ``j``."""
    u, v = walk.vertices[i], walk.vertices[j]
    inner = list(range(g.n, g.n + length - 1))
    chain = [u] + inner + [v]
    endpoints = list(g.endpoints)
    ids = []
    for t in range(length):
        ids.append(len(endpoints))
        endpoints.append((chain[t], chain[t + 1]))
    rotations = [list(r) for r in g.rotation] + [[] for _ in inner]

    def insert_before(vtx: int, before_dart: int, new_dart: int) -> None:
        rot = rotations[vtx]
        rot.insert(rot.index(before_dart), new_dart)

    # The new path lies inside the face: at each anchor its dart slots in
    # at the corner, i.e. immediately before the outgoing walk dart.
    insert_before(u, walk.darts[i], 2 * ids[0])
    insert_before(v, walk.darts[j], 2 * ids[-1] + 1)
    for t, w in enumerate(inner):
        rotations[w] = [2 * ids[t] + 1, 2 * ids[t + 1]]
    return EmbeddedGraph.build(g.n + len(inner), endpoints, rotations)


# -- profiles ------------------------------------------------------------


def in_two_thread(g: EmbeddedGraph, v: int) -> bool:
    """A 2-vertex belongs to a 2-thread iff some neighbor is 2-valent."""
    if g.degree(v) != 2:
        return False
    return any(g.degree(u) == 2 and u != v for u in g.neighbors(v))


def face_profiles(g: EmbeddedGraph) -> tuple[FaceProfile, ...]:
    """Length, 2-vertex, and section counts per face."""
    profiles = []
    for walk in g.faces():
        verts = walk.vertices
        two = [g.degree(x) == 2 for x in verts]
        n2 = len({x for x, t in zip(verts, two) if t})
        n2t = len({x for x, t in zip(verts, two) if t and in_two_thread(g, x)})
        s1 = s2 = 0
        k = len(verts)
        if all(two) and k:
            if k == 1:
                s1 = 1
            elif k == 2:
                s2 = 1
        else:
            i = 0
            while i < k:
                if two[i] and not two[(i - 1) % k]:
                    run = 0
                    while run < k and two[(i + run) % k]:
                        run += 1
                    if run == 1:
                        s1 += 1
                    elif run == 2:
                        s2 += 1
                    i += run
                else:
                    i += 1
        profiles.append(
            FaceProfile(
                face=walk.index, length=len(walk), n2=n2, n2t=n2t, s1=s1, s2=s2
            )
        )
    return tuple(profiles)


def euler_characteristic(g: EmbeddedGraph) -> int:
    """V - E + F with F counted as face-walk orbits plus one empty face
    per dartless component (2 for any connected plane graph, 2c for c
    components since each sits on its own sphere)."""
    comp = g._component_labels()
    facec = [0] * g.component_count
    for walk in g.faces():
        facec[comp[walk.vertices[0]]] += 1
    f = sum(fc if fc else 1 for fc in facec)
    return g.n - g.m + f
