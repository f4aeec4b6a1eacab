"""Reducible-configuration catalog with mechanized checking.

Each :class:`Configuration` packages a concrete host graph exhibiting a
local structure, a surgery producing a strictly smaller graph, the set
of edges whose colors are forgotten, and the bookkeeping needed to
re-extend a coloring of the smaller graph: transcribed conflicts among
the forgotten edges, guaranteed list sizes, and either a polynomial
certificate or a set of mechanized extension arguments.

:func:`check` replays the whole argument on the host: the surgery runs
and shrinks, the actual facial conflicts are covered by the transcribed
ones, the geometric availability counts meet the promised list sizes,
and the certificate or extension obligations hold.  A catalog entry
passing ``check`` is a machine-verified reduction step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from facet.choosability import (
    SimpleGraph,
    is_gallai_tree,
    subset_hall_lower_bounds,
)
from facet.embedding import (
    EmbeddedGraph,
    SurgeryError,
    contract_edge,
    contract_face,
    delete_edge,
    delete_vertex,
    facial_distance,
    facial_neighborhood,
    generate,
    identify_edges,
    parse_peg,
    serialize_peg,
)
from facet.nullstellensatz import (
    CERTIFICATES,
    EXPECTED_COEFFICIENTS,
    cn_witness,
    graph_polynomial_coefficient,
)


class ConfigurationError(ValueError):
    """Catalog entry is internally inconsistent."""


@dataclass(frozen=True)
class Configuration:
    """One reducible configuration.

    ``variables[i]`` is the host edge id playing certificate variable
    i+1; ``dummies`` lists 1-based variable indices whose edges are
    identified by the surgery and therefore keep a color (they carry
    cap 1 and never appear in ``conflicts``).  ``conflicts`` are 1-based
    variable pairs; ``caps[i]`` is the guaranteed number of admissible
    colors for variable i+1 once the smaller graph is colored.
    ``surgery`` is a sequence of steps, each a tuple starting with one
    of "delete_vertex", "delete_edge", "contract_edge", "contract_face",
    "identify_edges"; ids refer to the graph state at that step.
    """

    name: str
    description: str
    host: EmbeddedGraph
    ell: int
    colors: int
    surgery: tuple[tuple, ...]
    variables: tuple[int, ...]
    dummies: tuple[int, ...]
    conflicts: tuple[tuple[int, int], ...]
    caps: tuple[int, ...]
    certificate: Optional[str]
    obligations: tuple[str, ...]

    @property
    def uncolored(self) -> tuple[int, ...]:
        """Host edges whose colors are forgotten before re-extension."""
        dead = set(self.dummies)
        return tuple(
            e for i, e in enumerate(self.variables) if i + 1 not in dead
        )


@dataclass(frozen=True)
class CheckStep:
    label: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class CheckReport:
    name: str
    ok: bool
    steps: tuple[CheckStep, ...]

    def failures(self) -> list[CheckStep]:
        return [s for s in self.steps if not s.ok]


def neighborhood_audit(
    g: EmbeddedGraph, ell: int, colors: int, uncolored: tuple[int, ...]
) -> dict[int, tuple[int, int]]:
    """Per uncolored edge: (colored facial neighbors, available colors).

    Colored edges are everything outside ``uncolored``; availability is
    ``colors`` minus the count, the worst case over adversarial
    colorings of the rest of the graph.
    """
    dead = set(uncolored)
    out = {}
    for e in uncolored:
        nbrs = facial_neighborhood(g, ell, e)
        count = len(nbrs - dead)
        out[e] = (count, colors - count)
    return out


def _run_surgery(g: EmbeddedGraph, steps: tuple[tuple, ...]) -> EmbeddedGraph:
    for step in steps:
        kind, args = step[0], step[1:]
        if kind == "delete_vertex":
            g = delete_vertex(g, *args).graph
        elif kind == "delete_edge":
            g = delete_edge(g, *args).graph
        elif kind == "contract_edge":
            g = contract_edge(g, *args).graph
        elif kind == "contract_face":
            g = contract_face(g, *args).graph
        elif kind == "identify_edges":
            g = identify_edges(g, *args).graph
        else:
            raise ConfigurationError(f"unknown surgery step {kind!r}")
    return g


def check(config: Configuration) -> CheckReport:
    """Replay and verify every claim a configuration makes."""
    steps: list[CheckStep] = []

    def log(label: str, ok: bool, detail: str) -> None:
        steps.append(CheckStep(label, bool(ok), detail))

    g = config.host
    nvars = len(config.variables)

    # Internal consistency of the transcription.
    ok = len(config.caps) == nvars
    log("shape", ok, f"{nvars} variables, {len(config.caps)} caps")
    bad_edges = [e for e in config.variables if not 0 <= e < g.m]
    if bad_edges or not ok:
        # later steps index caps by variable and walk the host by edge
        # id, so neither survives a malformed transcription
        if bad_edges:
            log("variable-edges", False, f"edge ids {bad_edges} not in host")
        return CheckReport(name=config.name, ok=False, steps=tuple(steps))
    dead = set(config.dummies)
    bad_pairs = [
        p for p in config.conflicts
        if not (1 <= p[0] <= nvars and 1 <= p[1] <= nvars)
        or p[0] == p[1] or p[0] in dead or p[1] in dead
    ]
    log(
        "conflict-indices",
        not bad_pairs,
        "conflicts stay on free variables" if not bad_pairs
        else f"bad pairs {bad_pairs}",
    )
    dup = len(set(config.variables)) != nvars
    log("variable-edges", not dup, "variable edges distinct")

    # Surgery runs and shrinks.
    try:
        reduced = _run_surgery(g, config.surgery)
        shrunk = (reduced.n, reduced.m) < (g.n, g.m)
        log(
            "surgery",
            shrunk,
            f"host ({g.n}v,{g.m}e) -> reduced ({reduced.n}v,{reduced.m}e)",
        )
    except (SurgeryError, ConfigurationError) as exc:
        log("surgery", False, str(exc))

    # Identified edges must not already be facially close.
    for step in config.surgery:
        if step[0] != "identify_edges":
            continue
        e, f = step[1], step[2]
        d = facial_distance(g, e, f)
        ok = d > config.ell
        log(
            "identify-distance",
            ok,
            f"edges {e},{f} at facial distance {d}",
        )

    # Actual conflicts among uncolored edges are covered.
    uncolored = config.uncolored
    var_of = {e: i + 1 for i, e in enumerate(config.variables)}
    transcribed = {tuple(sorted(p)) for p in config.conflicts}
    missing = []
    for a_i, a in enumerate(uncolored):
        for b in uncolored[a_i + 1:]:
            d = facial_distance(g, a, b)
            if d <= config.ell:
                pair = tuple(sorted((var_of[a], var_of[b])))
                if pair not in transcribed:
                    missing.append((a, b, pair))
    log(
        "conflicts-covered",
        not missing,
        "derived conflicts covered by transcription" if not missing
        else f"uncovered pairs {missing}",
    )

    # Geometric availability meets the promised caps.
    audit = neighborhood_audit(g, config.ell, config.colors, uncolored)
    short = []
    for i, e in enumerate(config.variables):
        cap = config.caps[i]
        if i + 1 in dead:
            if cap != 1:
                short.append((i + 1, "dummy cap must be 1"))
            continue
        count, avail = audit[e]
        if avail < cap:
            short.append((i + 1, f"edge {e}: {avail} available < cap {cap}"))
    log(
        "availability",
        not short,
        "all caps met" if not short else f"shortfalls {short}",
    )

    # Certificate, when present.
    if config.certificate is not None:
        cert = CERTIFICATES.get(config.certificate)
        if cert is None:
            log("certificate", False, f"unknown certificate {config.certificate!r}")
        else:
            agree = (
                cert.nvars == nvars
                and set(cert.pairs) == set(config.conflicts)
                and cert.caps == config.caps
            )
            log("certificate-transcription", agree, "pairs and caps agree")
            coef = graph_polynomial_coefficient(
                cert.nvars, cert.pairs, cert.target
            )
            want = EXPECTED_COEFFICIENTS[cert.name]
            log(
                "certificate-coefficient",
                coef == want and coef != 0,
                f"coefficient {coef}, pinned {want}",
            )
            room = all(
                cert.target[i] + 1 <= cert.caps[i] for i in range(cert.nvars)
            )
            log("certificate-room", room, "target exponents fit below caps")
            wit = cn_witness(cert.nvars, cert.pairs, cert.caps)
            log(
                "certificate-witness",
                wit is not None,
                f"witness monomial {wit}",
            )

    for ob in config.obligations:
        steps.extend(_check_obligation(config, ob))

    return CheckReport(
        name=config.name, ok=all(s.ok for s in steps), steps=tuple(steps)
    )


def _conflict_simple_graph(config: Configuration) -> tuple[SimpleGraph, list[int]]:
    """Conflict graph over free variables as a SimpleGraph, with the
    list of 1-based free variable indices in node order."""
    free = [i + 1 for i in range(len(config.variables)) if i + 1 not in set(config.dummies)]
    node_of = {v: k for k, v in enumerate(free)}
    edges = [
        (node_of[a], node_of[b]) for a, b in config.conflicts
    ]
    return SimpleGraph.from_edges(len(free), edges), free


def _check_obligation(config: Configuration, ob: str) -> list[CheckStep]:
    steps: list[CheckStep] = []

    def log(label: str, ok: bool, detail: str) -> None:
        steps.append(CheckStep(label, bool(ok), detail))

    sg, free = _conflict_simple_graph(config)
    caps = {v: config.caps[v - 1] for v in free}

    if ob == "forced-extension":
        ok = len(free) == 1 and not config.conflicts and caps[free[0]] >= 1
        log(
            "forced-extension",
            ok,
            "single conflict-free edge with a spare color",
        )

    elif ob == "slack-list-extension":
        # Degree-feasible guarantee on the conflict graph: every list
        # exceeds or meets its degree, with slack somewhere or a block
        # that is neither complete nor an odd cycle.
        sizes = [caps[v] for v in free]
        fit = all(sizes[k] >= sg.degree(k) for k in range(sg.n))
        slack = any(sizes[k] > sg.degree(k) for k in range(sg.n))
        guaranteed = fit and sg.is_connected() and (slack or not is_gallai_tree(sg))
        log(
            "slack-list-extension",
            guaranteed,
            f"sizes {sizes} vs degrees {[sg.degree(k) for k in range(sg.n)]}",
        )

    elif ob == "pair-merge-or-disjoint":
        # The non-conflicting variable pairs must form a perfect
        # matching; an adversary either leaves some pair a common color
        # (case A) or separates all pairs (case B).
        all_pairs = {
            (a, b)
            for ai, a in enumerate(free)
            for b in free[ai + 1:]
        }
        non_edges = sorted(
            all_pairs - {tuple(sorted(p)) for p in config.conflicts}
        )
        seen: set[int] = set()
        matching = True
        for a, b in non_edges:
            if a in seen or b in seen:
                matching = False
            seen.update((a, b))
        matching = matching and seen == set(free)
        log(
            "non-conflict-matching",
            matching,
            f"non-conflicting pairs {non_edges}",
        )

        node_of = {v: k for k, v in enumerate(free)}
        for a, b in non_edges:
            # Case A: the pair reuses one common color; the residual
            # graph keeps at least cap-1 colors per edge.
            rest = [v for v in free if v not in (a, b)]
            ridx = {v: k for k, v in enumerate(rest)}
            redges = [
                (ridx[p], ridx[q])
                for p, q in config.conflicts
                if p in ridx and q in ridx
            ]
            rg = SimpleGraph.from_edges(len(rest), redges)
            sizes = [caps[v] - 1 for v in rest]
            fit = all(sizes[k] >= rg.degree(k) for k in range(rg.n))
            slack = any(sizes[k] > rg.degree(k) for k in range(rg.n))
            guaranteed = (
                fit and rg.is_connected() and (slack or not is_gallai_tree(rg))
            )
            log(
                f"common-color-{a}-{b}",
                guaranteed,
                f"residual sizes {sizes}, degrees "
                f"{[rg.degree(k) for k in range(rg.n)]}",
            )
        # Case B: all pairs separated; size-level Hall gives distinct
        # representatives, and all-distinct colors satisfy any conflict.
        bounds = [caps[v] for v in free]
        dpairs = [(node_of[a], node_of[b]) for a, b in non_edges]
        ok, violator = subset_hall_lower_bounds(bounds, dpairs)
        log(
            "disjoint-representatives",
            ok,
            "size-level Hall condition holds" if ok
            else f"violating subset {sorted(violator)}",
        )

    else:
        log("obligation", False, f"unknown obligation {ob!r}")

    return steps


# -- catalog ---------------------------------------------------------------


def _four_vertex_host() -> EmbeddedGraph:
    """A 4-vertex whose neighbors are all 2-vertices, pinned by a ring.

    Center 0, 2-vertices 1..4, ring 5..8.  Spokes get ids 0..3, the
    pendant edges 4..7, the ring 8..11, so variable i+1 is edge i.
    """
    endpoints = [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 5), (2, 6), (3, 7), (4, 8),
        (5, 6), (6, 7), (7, 8), (8, 5),
    ]
    rotations = [
        [0, 2, 4, 6],
        [1, 8], [3, 10], [5, 12], [7, 14],
        [16, 9, 23],
        [18, 11, 17],
        [20, 13, 19],
        [22, 15, 21],
    ]
    return EmbeddedGraph.build(9, endpoints, rotations)


def _despoked_prism(n: int, bare: tuple[int, ...]) -> tuple[EmbeddedGraph, list[int]]:
    """Prism with the spokes at inner positions ``bare`` removed and the
    orphaned outer vertices smoothed away.  Returns the graph plus the
    surviving ids of the inner ring edges, index i for the edge between
    inner positions i and i+1."""
    g = generate("prism", n)
    inner = list(range(n, 2 * n))
    outer = list(range(n))
    spokes = list(range(2 * n, 3 * n))

    def apply(res) -> None:
        nonlocal g
        g = res.graph
        for lst in (inner, outer, spokes):
            for k, eid in enumerate(lst):
                if eid is not None:
                    lst[k] = res.edge_map[eid]

    for p in sorted(bare):
        apply(delete_edge(g, spokes[p]))
    for p in sorted(bare):
        # The outer vertex at position p is now 2-valent; contracting
        # its outgoing ring edge suppresses it.
        apply(contract_edge(g, outer[p]))
    return g, inner


def _ring_assignment(
    g: EmbeddedGraph, inner_ids: list[int], two_positions: frozenset[int]
) -> list[int]:
    """Locate the inner ring face and orient it so the vertex positions
    of 2-vertices match ``two_positions``; returns the edge id at each
    template position (edge p joins template vertices p and p+1)."""
    k = len(inner_ids)
    ring = None
    for walk in g.faces():
        if len(walk) == k and set(walk.edges) == set(inner_ids):
            ring = walk
            break
    if ring is None:
        raise ConfigurationError("inner ring face not found")
    forward = (list(ring.vertices), list(ring.edges))
    rev_v = [ring.vertices[0]] + [ring.vertices[k - t] for t in range(1, k)]
    rev_e = [ring.edges[k - 1 - t] for t in range(k)]
    for verts, edges in (forward, (rev_v, rev_e)):
        twos = [g.degree(v) == 2 for v in verts]
        for r in range(k):
            if frozenset(
                p for p in range(k) if twos[(r + p) % k]
            ) == two_positions:
                return [edges[(r + p) % k] for p in range(k)]
    raise ConfigurationError(
        f"no orientation puts 2-vertices at {sorted(two_positions)}"
    )


def _ring_face_index(g: EmbeddedGraph, inner_ids: list[int]) -> int:
    for walk in g.faces():
        if len(walk) == len(inner_ids) and set(walk.edges) == set(inner_ids):
            return walk.index
    raise ConfigurationError("inner ring face not found")


def _identified_ring_config(
    name: str,
    description: str,
    n: int,
    bare: tuple[int, ...],
    two_positions: frozenset[int],
    e_pos: int,
    f_pos: int,
    var_positions: dict[int, int],
    dummies: tuple[int, ...],
    conflicts: tuple[tuple[int, int], ...],
    caps: tuple[int, ...],
    certificate: Optional[str],
    obligations: tuple[str, ...] = (),
) -> Configuration:
    host, inner = _despoked_prism(n, bare)
    by_pos = _ring_assignment(host, inner, two_positions)
    face = _ring_face_index(host, inner)
    nvars = len(caps)
    variables = [0] * nvars
    for var, pos in var_positions.items():
        variables[var - 1] = by_pos[pos]
    return Configuration(
        name=name,
        description=description,
        host=host,
        ell=3,
        colors=10,
        surgery=(("identify_edges", by_pos[e_pos], by_pos[f_pos], face),),
        variables=tuple(variables),
        dummies=dummies,
        conflicts=conflicts,
        caps=caps,
        certificate=certificate,
        obligations=obligations,
    )


def catalog() -> list[Configuration]:
    """The eight reducible configurations, checked by the test suite."""
    out: list[Configuration] = []

    host = _four_vertex_host()
    out.append(
        Configuration(
            name="four-vertex",
            description="4-vertex whose four neighbors are 2-vertices",
            host=host,
            ell=3,
            colors=10,
            # Deleting the center renumbers each former 2-vertex down to
            # id 0 in turn, so five identical steps clear the star.
            surgery=(("delete_vertex", 0),) * 5,
            variables=tuple(range(8)),
            dummies=(),
            conflicts=CERTIFICATES["four-vertex"].pairs,
            caps=CERTIFICATES["four-vertex"].caps,
            certificate="four-vertex",
            obligations=(),
        )
    )

    p4 = generate("prism", 4)
    inner4 = list(range(4, 8))
    face4 = _ring_face_index(p4, inner4)
    ring4 = _ring_assignment(p4, inner4, frozenset())
    out.append(
        Configuration(
            name="face-length-4",
            description="face of length 4, collapsed to a single vertex",
            host=p4,
            ell=3,
            colors=10,
            surgery=(("contract_face", face4),),
            variables=tuple(ring4),
            dummies=(),
            conflicts=((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),
            caps=(4, 4, 4, 4),
            certificate=None,
            obligations=("slack-list-extension",),
        )
    )

    theta = generate("theta", 4, 4, 4)
    out.append(
        Configuration(
            name="three-thread",
            description="path of three consecutive 2-vertices",
            host=theta,
            ell=3,
            colors=10,
            surgery=(("contract_edge", 1),),
            variables=(1,),
            dummies=(),
            conflicts=(),
            caps=(1,),
            certificate=None,
            obligations=("forced-extension",),
        )
    )

    out.append(
        _identified_ring_config(
            name="eight-face",
            description="face of length 8, opposite edges identified",
            n=8,
            bare=(),
            two_positions=frozenset(),
            e_pos=0,
            f_pos=4,
            var_positions={1: 1, 2: 2, 3: 3, 4: 5, 5: 6, 6: 7},
            dummies=(),
            conflicts=(
                (1, 2), (1, 3), (1, 5), (1, 6),
                (2, 3), (2, 4), (2, 6),
                (3, 4), (3, 5),
                (4, 5), (4, 6),
                (5, 6),
            ),
            caps=(3, 3, 3, 3, 3, 3),
            certificate=None,
            obligations=("pair-merge-or-disjoint",),
        )
    )

    out.append(
        _identified_ring_config(
            name="nine-face",
            description="face of length 9 with one 2-vertex",
            n=9,
            bare=(0,),
            two_positions=frozenset({7}),
            e_pos=0,
            f_pos=4,
            var_positions={1: 1, 2: 2, 3: 3, 4: 5, 5: 6, 6: 7, 7: 8},
            dummies=(),
            conflicts=CERTIFICATES["nine-face"].pairs,
            caps=CERTIFICATES["nine-face"].caps,
            certificate="nine-face",
        )
    )

    ten_vars = {i: i - 1 for i in range(1, 11)}
    out.append(
        _identified_ring_config(
            name="ten-face-adjacent",
            description="face of length 10, three 2-vertices, two adjacent",
            n=10,
            bare=(0, 1, 5),
            two_positions=frozenset({0, 1, 5}),
            e_pos=3,
            f_pos=7,
            var_positions=ten_vars,
            dummies=(4, 8),
            conflicts=CERTIFICATES["ten-face-adjacent"].pairs,
            caps=CERTIFICATES["ten-face-adjacent"].caps,
            certificate="ten-face-adjacent",
        )
    )

    out.append(
        _identified_ring_config(
            name="ten-face-dist3",
            description="face of length 10, 2-vertices at mutual distance 3",
            n=10,
            bare=(0, 3, 5),
            two_positions=frozenset({0, 3, 5}),
            e_pos=4,
            f_pos=8,
            var_positions=ten_vars,
            dummies=(5, 9),
            conflicts=CERTIFICATES["ten-face-dist3"].pairs,
            caps=CERTIFICATES["ten-face-dist3"].caps,
            certificate="ten-face-dist3",
        )
    )

    out.append(
        _identified_ring_config(
            name="ten-face-dist4",
            description="face of length 10, 2-vertices at mutual distance 4",
            n=10,
            bare=(0, 2, 4),
            two_positions=frozenset({0, 2, 4}),
            e_pos=4,
            f_pos=8,
            var_positions=ten_vars,
            dummies=(5, 9),
            conflicts=CERTIFICATES["ten-face-dist4"].pairs,
            caps=CERTIFICATES["ten-face-dist4"].caps,
            certificate="ten-face-dist4",
        )
    )

    return out


def check_all() -> list[CheckReport]:
    return [check(c) for c in catalog()]


# -- JSON interchange -------------------------------------------------------


def configuration_to_json(config: Configuration) -> str:
    doc = {
        "name": config.name,
        "description": config.description,
        "host": serialize_peg(config.host),
        "ell": config.ell,
        "colors": config.colors,
        "surgery": [list(step) for step in config.surgery],
        "variables": list(config.variables),
        "dummies": list(config.dummies),
        "conflicts": [list(p) for p in config.conflicts],
        "caps": list(config.caps),
        "certificate": config.certificate,
        "obligations": list(config.obligations),
    }
    return json.dumps(doc, indent=2)


def configuration_from_json(text: str) -> Configuration:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"bad JSON: {exc}") from exc
    try:
        return Configuration(
            name=str(doc["name"]),
            description=str(doc.get("description", "")),
            host=parse_peg(doc["host"]),
            ell=int(doc["ell"]),
            colors=int(doc["colors"]),
            surgery=tuple(
                (str(s[0]), *map(int, s[1:])) for s in doc["surgery"]
            ),
            variables=tuple(int(x) for x in doc["variables"]),
            dummies=tuple(int(x) for x in doc.get("dummies", [])),
            conflicts=tuple(
                (int(a), int(b)) for a, b in doc["conflicts"]
            ),
            caps=tuple(int(x) for x in doc["caps"]),
            certificate=doc.get("certificate"),
            obligations=tuple(str(x) for x in doc.get("obligations", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigurationError):
            raise
        raise ConfigurationError(f"bad configuration document: {exc}") from exc
