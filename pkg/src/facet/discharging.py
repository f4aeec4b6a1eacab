"""Exact-rational discharging over plane embeddings.

Initial charges put 2d(v) - 6 on every vertex and len(face) - 6 on every
face, which sums to -12 on a connected plane graph by Euler's formula.
Five local rules then move charge between elements; the module logs
every transfer, every input pattern the rules do not cover, and a
23-predicate structural report, so a single audit call shows whether a
concrete graph could survive as a minimal counterexample.

All arithmetic uses :class:`fractions.Fraction`; nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Optional

from facet.embedding import (
    EmbeddedGraph,
    FaceProfile,
    face_profiles,
    in_two_thread,
    twin,
)


class DischargingError(ValueError):
    """Input outside the procedure's domain."""


# ("v", id) for vertices, ("f", face index) for faces.
Element = tuple[str, int]


@dataclass(frozen=True)
class Transfer:
    rule: str
    src: Element
    dst: Element
    amount: Fraction


@dataclass(frozen=True)
class ChargeLedger:
    """Initial and final charges plus the transfer log between them."""

    vertex_initial: tuple[Fraction, ...]
    face_initial: tuple[Fraction, ...]
    vertex_final: tuple[Fraction, ...]
    face_final: tuple[Fraction, ...]
    transfers: tuple[Transfer, ...] = ()
    gaps: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def total_initial(self) -> Fraction:
        return sum(self.vertex_initial, Fraction(0)) + sum(
            self.face_initial, Fraction(0)
        )

    @property
    def total_final(self) -> Fraction:
        return sum(self.vertex_final, Fraction(0)) + sum(
            self.face_final, Fraction(0)
        )

    def negatives(self) -> tuple[tuple[Element, Fraction], ...]:
        """Elements whose final charge is below zero."""
        out: list[tuple[Element, Fraction]] = []
        for v, ch in enumerate(self.vertex_final):
            if ch < 0:
                out.append((("v", v), ch))
        for f, ch in enumerate(self.face_final):
            if ch < 0:
                out.append((("f", f), ch))
        return tuple(out)


def initial_charges(g: EmbeddedGraph) -> ChargeLedger:
    """Assign 2d(v) - 6 and len(face) - 6; total is exactly -12.

    Refuses disconnected input: Euler's formula would shift the total by
    6 per extra component and every downstream claim is stated for
    connected graphs.
    """
    if not g.is_connected:
        raise DischargingError(
            "discharging needs a connected graph; this one has "
            f"{g.component_count} components"
        )
    vch = tuple(Fraction(2 * g.degree(v) - 6) for v in range(g.n))
    fch = tuple(Fraction(len(w.darts) - 6) for w in g.faces())
    return ChargeLedger(
        vertex_initial=vch,
        face_initial=fch,
        vertex_final=vch,
        face_final=fch,
    )


def _faces_at_two_vertex(g: EmbeddedGraph, u: int) -> tuple[int, int]:
    """Face indices on the two sides of a 2-vertex, in dart order."""
    d1, d2 = g.rotation[u]
    return g.face_of_dart(d1), g.face_of_dart(d2)


def apply_rules(g: EmbeddedGraph, ledger: ChargeLedger) -> ChargeLedger:
    """Run rules R1 to R5 and return the extended ledger.

    R1  every 4+ vertex sends 1/5 to every incident 5-face.
    R2  for each 4+ vertex v adjacent to a 2-vertex u with side faces
        a1, a2 ordered by (length asc, 2-vertex count desc, face id):
        (a) len(a1) = 6: v sends 2/3 to a1;
        (b) both length 7 with two 2-vertices each: v sends 1/3 to both;
        (c) both length 7, a1 has 2+ and a2 exactly one: 2/3 to a1;
        (d) len(a1) = 7 and len(a2) >= 8: 2/3 to a1.
        Patterns outside (a)-(d), including a1 = a2, transfer nothing
        and are logged as gaps.
    R3  every face sends 1 to each incident 2-vertex not in a 2-thread.
    R4  every 7-face sends 5/6 to each incident thread 2-vertex.
    R5  every 8+ face sends 7/6 to each incident thread 2-vertex.

    Thread membership is the local test: a 2-vertex with a 2-valent
    neighbor.  A 3-thread makes that test coarser than the notion the
    rules were designed for, so its presence is noted.
    """
    if len(ledger.vertex_initial) != g.n or len(ledger.face_initial) != len(
        g.faces()
    ):
        raise DischargingError("ledger does not match the graph")

    prof = {p.face: p for p in face_profiles(g)}
    vch = list(ledger.vertex_final)
    fch = list(ledger.face_final)
    transfers: list[Transfer] = list(ledger.transfers)
    gaps: list[str] = list(ledger.gaps)
    notes: list[str] = list(ledger.notes)

    def send(rule: str, src: Element, dst: Element, amount: Fraction) -> None:
        kind, i = src
        (vch if kind == "v" else fch)[i] -= amount
        kind, i = dst
        (vch if kind == "v" else fch)[i] += amount
        transfers.append(Transfer(rule, src, dst, amount))

    for v in range(g.n):
        if g.degree(v) == 2:
            heads = [g.dart_vertex(twin(d)) for d in g.rotation[v]]
            if all(h != v and g.degree(h) == 2 for h in heads):
                notes.append(
                    f"3-thread present: vertex {v} has two 2-valent neighbors; "
                    "thread classification is local"
                )

    # R1
    for v in range(g.n):
        if g.degree(v) < 4:
            continue
        for f in sorted(g.faces_at_vertex(v)):
            if prof[f].length == 5:
                send("R1", ("v", v), ("f", f), Fraction(1, 5))

    # R2
    for v in range(g.n):
        if g.degree(v) < 4:
            continue
        for u in sorted(set(g.neighbors(v))):
            if u == v or g.degree(u) != 2:
                continue
            f1, f2 = _faces_at_two_vertex(g, u)
            if f1 == f2:
                gaps.append(
                    f"R2 gap: 2-vertex {u} (next to {v}) is incident with "
                    f"face {f1} on both sides"
                )
                continue
            a1, a2 = sorted(
                (f1, f2), key=lambda f: (prof[f].length, -prof[f].n2, f)
            )
            l1, l2 = prof[a1].length, prof[a2].length
            n1, n2 = prof[a1].n2, prof[a2].n2
            if l1 == 6:
                send("R2", ("v", v), ("f", a1), Fraction(2, 3))
            elif l1 == l2 == 7 and n1 == n2 == 2:
                send("R2", ("v", v), ("f", a1), Fraction(1, 3))
                send("R2", ("v", v), ("f", a2), Fraction(1, 3))
            elif l1 == l2 == 7 and n1 >= 2 and n2 == 1:
                send("R2", ("v", v), ("f", a1), Fraction(2, 3))
            elif l1 == 7 and l2 >= 8:
                send("R2", ("v", v), ("f", a1), Fraction(2, 3))
            else:
                gaps.append(
                    f"R2 gap: vertex {v}, 2-vertex {u}, faces ({a1}, {a2}) "
                    f"with lengths ({l1}, {l2}) and 2-vertex counts "
                    f"({n1}, {n2}): no case applies"
                )

    # R3, R4, R5
    for walk in g.faces():
        f = walk.index
        length = prof[f].length
        for u in sorted(set(walk.vertices)):
            if g.degree(u) != 2:
                continue
            if not in_two_thread(g, u):
                send("R3", ("f", f), ("v", u), Fraction(1))
            elif length == 7:
                send("R4", ("f", f), ("v", u), Fraction(5, 6))
            elif length >= 8:
                send("R5", ("f", f), ("v", u), Fraction(7, 6))

    return ChargeLedger(
        vertex_initial=ledger.vertex_initial,
        face_initial=ledger.face_initial,
        vertex_final=tuple(vch),
        face_final=tuple(fch),
        transfers=tuple(transfers),
        gaps=tuple(gaps),
        notes=tuple(notes),
    )


# -- structure predicates ---------------------------------------------------


def _has_bridge(g: EmbeddedGraph) -> bool:
    for e in range(g.m):
        u, v = g.endpoints[e]
        if u == v:
            continue
        # BFS from u avoiding edge e
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for d in g.rotation[x]:
                if (d >> 1) == e:
                    continue
                y = g.dart_vertex(twin(d))
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if v not in seen:
            return True
    return False


def _has_cut_vertex(g: EmbeddedGraph) -> bool:
    if g.n <= 2:
        return False
    for v in range(g.n):
        rest = [x for x in range(g.n) if x != v]
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y != v and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != g.n - 1:
            return True
    return False


def _two_connected(g: EmbeddedGraph) -> bool:
    # A 2-cycle counts (cycle of two parallel edges); a single edge with
    # its bridge does not.
    return (
        g.n >= 2
        and g.is_connected
        and not _has_cut_vertex(g)
        and not _has_bridge(g)
    )


def _short_cycles(g: EmbeddedGraph, max_len: int = 7) -> list[list[int]]:
    """Simple cycles with at most ``max_len`` edges, as dart sequences.

    Loops are 1-cycles and parallel pairs 2-cycles.  Each cycle appears
    once (deduplicated by edge set); the start vertex is its minimum.
    """
    out: list[list[int]] = []
    seen: set[frozenset[int]] = set()

    def dfs(s: int, v: int, path: list[int], visited: set[int], used: set[int]) -> None:
        for d in g.rotation[v]:
            e = d >> 1
            if e in used:
                continue
            w = g.dart_vertex(twin(d))
            if w == s:
                key = frozenset(used | {e})
                if key not in seen:
                    seen.add(key)
                    out.append(path + [d])
                continue
            if w < s or w in visited or len(path) + 1 >= max_len:
                continue
            visited.add(w)
            used.add(e)
            dfs(s, w, path + [d], visited, used)
            visited.discard(w)
            used.discard(e)

    for s in range(g.n):
        dfs(s, s, [], {s}, set())
    return out


def _cycle_separating(g: EmbeddedGraph, cyc: list[int]) -> bool:
    """Vertices strictly on both sides of the closed curve ``cyc``?

    At every cycle vertex the non-cycle darts split into the two arcs of
    the rotation between the outgoing and incoming cycle darts; arcs are
    globally consistent in an oriented embedding, so any dart whose head
    avoids the cycle pins its component to one side.  Components never
    touching the cycle are not anchored by the rotation system and are
    ignored.
    """
    vset = {g.dart_vertex(d) for d in cyc}
    sides_hit: set[int] = set()
    for i, d_out in enumerate(cyc):
        v = g.dart_vertex(d_out)
        d_in = twin(cyc[i - 1])
        rot = g.rotation[v]
        a = rot.index(d_out)
        side = 0
        j = (a + 1) % len(rot)
        while j != a:
            d = rot[j]
            if d == d_in:
                side = 1
            else:
                head = g.dart_vertex(twin(d))
                if head not in vset:
                    sides_hit.add(side)
                    if len(sides_hit) == 2:
                        return True
            j = (j + 1) % len(rot)
    return False


def _no_short_separating_cycle(g: EmbeddedGraph) -> bool:
    return not any(_cycle_separating(g, c) for c in _short_cycles(g, 7))


def _slots(g: EmbeddedGraph, u: int) -> list[int]:
    """Neighbor on each edge end at ``u`` (repeats where parallel)."""
    return [g.dart_vertex(twin(d)) for d in g.rotation[u]]


def _thread_pairs_on_walk(g: EmbeddedGraph, verts: tuple[int, ...]) -> list[tuple[int, int]]:
    """Positions i with consecutive distinct 2-vertices at i, i+1."""
    k = len(verts)
    out = []
    for i in range(k):
        a, b = verts[i], verts[(i + 1) % k]
        if a != b and g.degree(a) == 2 and g.degree(b) == 2:
            out.append((i, (i + 1) % k))
    return out


def _thread_edges(g: EmbeddedGraph) -> list[int]:
    out = []
    for e in range(g.m):
        u, v = g.endpoints[e]
        if u != v and g.degree(u) == 2 and g.degree(v) == 2:
            out.append(e)
    return out


@dataclass(frozen=True)
class StructureReport:
    """One boolean per structural conclusion, in a fixed field order.

    Every entry states a property that must hold in a minimal
    counterexample; a True value means this graph satisfies it.
    """

    two_connected: bool
    loopless: bool
    min_degree_two: bool
    four_vertex_two_neighbors: bool
    no_short_separating_cycle: bool
    faces_at_least_five: bool
    no_eight_face: bool
    no_three_thread: bool
    thread_far_from_2vertices_on_big_faces: bool
    five_faces_all_four_plus: bool
    six_face_2vertex_4plus_neighbors: bool
    no_thread_on_small_face: bool
    two_vertex_on_seven_plus_face: bool
    seven_face_thread_4plus_neighbor: bool
    thread_at_most_one_seven_face: bool
    seven_face_thread_extra_2vertex_pattern: bool
    seven_face_multi_2vertices_4plus: bool
    six_seven_shared_2vertex: bool
    seven_seven_shared_2vertex_4plus: bool
    seven_face_three_2verts_isolation: bool
    nine_face_no_2vertex: bool
    ten_face_two_2vertices: bool
    section_count_bounds: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @property
    def all_pass(self) -> bool:
        return all(self.as_dict().values())

    def failing(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.as_dict().items() if not ok)


def structure_report(g: EmbeddedGraph) -> StructureReport:
    """Evaluate every structural predicate on the embedding."""
    walks = list(g.faces())
    prof = {p.face: p for p in face_profiles(g)}
    deg = g.degree
    two_vertices = [v for v in range(g.n) if deg(v) == 2]

    def cyc_dist(i: int, j: int, k: int) -> int:
        d = abs(i - j) % k
        return min(d, k - d)

    # 1
    p_two_connected = _two_connected(g)
    # 2
    p_loopless = all(u != v for u, v in g.endpoints)
    # 3
    p_min_degree = all(deg(v) >= 2 for v in range(g.n))
    # 4: a 4-vertex has at most three 2-valent neighbors
    p_four_vertex = True
    for v in range(g.n):
        if deg(v) != 4:
            continue
        two_nbrs = {u for u in g.neighbors(v) if u != v and deg(u) == 2}
        if len(two_nbrs) > 3:
            p_four_vertex = False
            break
    # 5
    p_no_sep = _no_short_separating_cycle(g)
    # 6, 7
    p_faces_five = all(p.length >= 5 for p in prof.values())
    p_no_eight = all(p.length != 8 for p in prof.values())
    # 8: every 2-vertex has a 3+ neighbor
    p_no_three_thread = all(
        any(u != v and deg(u) >= 3 for u in g.neighbors(v))
        for v in two_vertices
    )
    # 9: on an 8+ face, within facial distance 3 of a thread vertex only
    # the thread itself may be 2-valent
    p_thread_far = True
    for walk in walks:
        k = len(walk.vertices)
        if k < 8:
            continue
        for i, j in _thread_pairs_on_walk(g, walk.vertices):
            u, v = walk.vertices[i], walk.vertices[j]
            for t, w in enumerate(walk.vertices):
                if w in (u, v) or deg(w) != 2:
                    continue
                if min(cyc_dist(t, i, k), cyc_dist(t, j, k)) <= 3:
                    p_thread_far = False
    # 10
    p_five_faces = all(
        all(deg(w) >= 4 for w in walk.vertices)
        for walk in walks
        if len(walk.vertices) == 5
    )
    # 11: both neighbors of a 2-vertex on a 6-face are 4+
    p_six_face = True
    for walk in walks:
        if len(walk.vertices) != 6:
            continue
        for u in set(walk.vertices):
            if deg(u) == 2 and not all(deg(w) >= 4 for w in _slots(g, u)):
                p_six_face = False
    # 12: no 2-thread on a face of length at most 6
    p_no_small_thread = all(
        not _thread_pairs_on_walk(g, walk.vertices)
        for walk in walks
        if len(walk.vertices) <= 6
    )
    # 13: every 2-vertex touches a 7+ face
    p_seven_plus = all(
        any(prof[f].length >= 7 for f in g.faces_at_vertex(v))
        for v in two_vertices
    )
    # 14: a thread on a 7-face has a 4+ neighbor
    p_thread_nbr = True
    for e in _thread_edges(g):
        u, v = g.endpoints[e]
        faces = {g.face_of_dart(2 * e), g.face_of_dart(2 * e + 1)}
        if not any(prof[f].length == 7 for f in faces):
            continue
        outer = {w for w in _slots(g, u) + _slots(g, v) if w not in (u, v)}
        if not any(deg(w) >= 4 for w in outer):
            p_thread_nbr = False
    # 15: a thread touches at most one 7-face
    p_thread_one_seven = True
    for e in _thread_edges(g):
        faces = {g.face_of_dart(2 * e), g.face_of_dart(2 * e + 1)}
        if sum(1 for f in faces if prof[f].length == 7) > 1:
            p_thread_one_seven = False
    # 16: 7-face with a thread and a third 2-vertex constrains every
    # 2-vertex's pair of neighbors
    p_seven_pattern = True
    for walk in walks:
        if len(walk.vertices) != 7:
            continue
        if not _thread_pairs_on_walk(g, walk.vertices):
            continue
        if prof[walk.index].n2 < 3:
            continue
        for u in set(walk.vertices):
            if deg(u) != 2:
                continue
            a, b = _slots(g, u)
            da, db = deg(a), deg(b)
            ok = (da >= 4 and db >= 4) or (da == 2 and db >= 4) or (
                db == 2 and da >= 4
            )
            if not ok:
                p_seven_pattern = False
    # 17: 7-face with 2+ 2-vertices and no thread: each has a 4+ neighbor
    p_seven_multi = True
    for walk in walks:
        if len(walk.vertices) != 7:
            continue
        if _thread_pairs_on_walk(g, walk.vertices):
            continue
        if prof[walk.index].n2 < 2:
            continue
        for u in set(walk.vertices):
            if deg(u) == 2 and not any(deg(w) >= 4 for w in _slots(g, u)):
                p_seven_multi = False
    # 18: a 2-vertex shared by a 6-face and a 7-face forces the rest of
    # the 7-face to be 3+
    p_six_seven = True
    for v in two_vertices:
        f1, f2 = _faces_at_two_vertex(g, v)
        if f1 == f2:
            continue
        for a, b in ((f1, f2), (f2, f1)):
            if prof[a].length == 6 and prof[b].length == 7:
                walk = walks[b]
                if any(w != v and deg(w) < 3 for w in walk.vertices):
                    p_six_seven = False
    # 19: two 7-faces with 2+ 2-vertices each sharing a 2-vertex force
    # two distinct 4+ neighbors on it
    p_seven_seven = True
    for v in two_vertices:
        f1, f2 = _faces_at_two_vertex(g, v)
        if f1 == f2:
            continue
        if (
            prof[f1].length == 7
            and prof[f2].length == 7
            and prof[f1].n2 >= 2
            and prof[f2].n2 >= 2
        ):
            strong = {w for w in _slots(g, v) if deg(w) >= 4}
            if len(strong) < 2:
                p_seven_seven = False
    # 20: two 7-faces sharing a 2-vertex, one with 3+ 2-vertices: the
    # shared vertex is the other's only 2-vertex
    p_isolation = True
    for v in two_vertices:
        f1, f2 = _faces_at_two_vertex(g, v)
        if f1 == f2:
            continue
        if prof[f1].length != 7 or prof[f2].length != 7:
            continue
        for a, b in ((f1, f2), (f2, f1)):
            if prof[a].n2 >= 3 and prof[b].n2 != 1:
                p_isolation = False
    # 21, 22
    p_nine = all(
        prof[walk.index].n2 == 0
        for walk in walks
        if len(walk.vertices) == 9
    )
    p_ten = all(
        prof[walk.index].n2 <= 2
        for walk in walks
        if len(walk.vertices) == 10
    )
    # 23: section bounds on 8+ faces holding 2-vertices
    p_sections = True
    for p in prof.values():
        k = p.length
        if k < 8 or p.n2 == 0:
            continue
        if p.n2 > k // 2:
            p_sections = False
        if p.s2 > (k - 2 * p.s1) // 5:
            p_sections = False
        if k == 11 and p.s2 > 0 and p.n2 > 4:
            p_sections = False

    return StructureReport(
        two_connected=p_two_connected,
        loopless=p_loopless,
        min_degree_two=p_min_degree,
        four_vertex_two_neighbors=p_four_vertex,
        no_short_separating_cycle=p_no_sep,
        faces_at_least_five=p_faces_five,
        no_eight_face=p_no_eight,
        no_three_thread=p_no_three_thread,
        thread_far_from_2vertices_on_big_faces=p_thread_far,
        five_faces_all_four_plus=p_five_faces,
        six_face_2vertex_4plus_neighbors=p_six_face,
        no_thread_on_small_face=p_no_small_thread,
        two_vertex_on_seven_plus_face=p_seven_plus,
        seven_face_thread_4plus_neighbor=p_thread_nbr,
        thread_at_most_one_seven_face=p_thread_one_seven,
        seven_face_thread_extra_2vertex_pattern=p_seven_pattern,
        seven_face_multi_2vertices_4plus=p_seven_multi,
        six_seven_shared_2vertex=p_six_seven,
        seven_seven_shared_2vertex_4plus=p_seven_seven,
        seven_face_three_2verts_isolation=p_isolation,
        nine_face_no_2vertex=p_nine,
        ten_face_two_2vertices=p_ten,
        section_count_bounds=p_sections,
    )


# -- audit ------------------------------------------------------------------

VERDICT_VIOLATES = "violates-structure"
VERDICT_IMPOSSIBLE = "counterexample-impossible"
VERDICT_ANOMALY = "discharging-anomaly"


@dataclass(frozen=True)
class AuditReport:
    """Discharging outcome for one connected plane graph.

    ``verdict`` is one of three strings: "violates-structure" when at
    least one structural predicate fails (the graph cannot be a minimal
    counterexample for structural reasons); "counterexample-impossible"
    when every predicate holds and every final charge is nonnegative,
    contradicting the fixed total of -12; "discharging-anomaly" when
    every predicate holds yet some final charge is negative, which would
    mean the rule set fails on a structurally admissible graph and
    should never occur.
    """

    ledger: ChargeLedger
    structure: StructureReport
    verdict: str

    @property
    def total(self) -> Fraction:
        return self.ledger.total_final


def audit(g: EmbeddedGraph) -> AuditReport:
    """Initial charges, rules, conservation check, structure scan."""
    ledger = apply_rules(g, initial_charges(g))
    if ledger.total_initial != -12 or ledger.total_final != -12:
        raise DischargingError(
            f"charge conservation broken: initial {ledger.total_initial}, "
            f"final {ledger.total_final}"
        )
    structure = structure_report(g)
    if not structure.all_pass:
        verdict = VERDICT_VIOLATES
    elif ledger.negatives():
        verdict = VERDICT_ANOMALY
    else:
        verdict = VERDICT_IMPOSSIBLE
    return AuditReport(ledger=ledger, structure=structure, verdict=verdict)
