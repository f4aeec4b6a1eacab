import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facet.embedding import (
    EmbeddedGraph,
    EmbeddingError,
    PegParseError,
    SurgeryError,
    contract_edge,
    contract_face,
    euler_characteristic,
    face_profiles,
    facial_distance,
    facial_neighborhood,
    generate,
    identify_edges,
    medial,
    parse_peg,
    random_plane_graph,
    serialize_peg,
    standard_catalog,
    subdivide_edge,
)


def face_lengths(g):
    return sorted(len(w.darts) for w in g.faces())


class TestFaces:
    def test_triangle_two_faces(self):
        g = generate("cycle", 3)
        assert face_lengths(g) == [3, 3]
        assert euler_characteristic(g) == 2

    def test_c8_two_faces(self):
        g = generate("cycle", 8)
        assert face_lengths(g) == [8, 8]

    def test_k4_four_triangles(self):
        g = generate("k4")
        triples = {frozenset(w.edges) for w in g.faces()}
        assert triples == {
            frozenset({0, 1, 3}),
            frozenset({0, 2, 4}),
            frozenset({1, 2, 5}),
            frozenset({3, 4, 5}),
        }

    def test_single_edge_one_face(self):
        g = EmbeddedGraph.build(2, [(0, 1)], [[0], [1]])
        walks = g.faces()
        assert len(walks) == 1
        assert len(walks[0].darts) == 2

    def test_loop_two_unit_faces(self):
        g = generate("cycle", 1)
        assert face_lengths(g) == [1, 1]
        assert g.degree(0) == 2  # loop counts twice

    def test_face_walk_base_vertices(self):
        g = generate("cycle", 5)
        for walk in g.faces():
            for i, d in enumerate(walk.darts):
                assert g.dart_vertex(d) == walk.vertices[i]


class TestDistance:
    def test_c10_antipodal(self):
        g = generate("cycle", 10)
        assert facial_distance(g, 0, 5) == 5

    def test_adjacent_edges(self):
        g = generate("cycle", 10)
        assert facial_distance(g, 0, 1) == 1

    def test_diagonal_zero(self):
        g = generate("k4")
        assert all(facial_distance(g, e, e) == 0 for e in range(g.m))

    def test_disconnected_pair_infinite(self):
        text = (
            "peg 1\nvertices 6\nedges 6\n"
            "e 0 0 1\ne 1 1 2\ne 2 2 0\n"
            "e 3 3 4\ne 4 4 5\ne 5 5 3\n"
            "rot 0 0 5\nrot 1 1 2\nrot 2 3 4\n"
            "rot 3 6 11\nrot 4 7 8\nrot 5 9 10\n"
        )
        g = parse_peg(text)
        assert g.warnings  # disconnectedness is surfaced, not fatal
        assert not g.is_connected
        assert g.component_count == 2
        assert facial_distance(g, 0, 3) == math.inf

    def test_neighborhood_excludes_self(self):
        g = generate("cycle", 7)
        nbhd = facial_neighborhood(g, 3, 0)
        assert 0 not in nbhd
        assert nbhd == {1, 2, 3, 4, 5, 6}  # every pair within 3 on C7


class TestPeg:
    def test_roundtrip_catalog(self):
        for name, g in standard_catalog():
            assert parse_peg(serialize_peg(g)) == g, name

    def test_comments_and_blank_lines(self):
        g = generate("cycle", 3)
        text = "# header\n" + serialize_peg(g).replace(
            "peg 1\n", "peg 1\n\n# mid\n"
        )
        assert parse_peg(text) == g

    def test_bad_header(self):
        with pytest.raises(PegParseError):
            parse_peg("peg 2\nvertices 0\nedges 0\n")

    def test_missing_rotation(self):
        with pytest.raises(PegParseError):
            parse_peg("peg 1\nvertices 1\nedges 0\n")

    def test_dart_out_of_range(self):
        with pytest.raises(PegParseError):
            parse_peg(
                "peg 1\nvertices 2\nedges 1\ne 0 0 1\nrot 0 0\nrot 1 3\n"
            )

    def test_nonplanar_rotation_rejected(self):
        # K4 with two darts swapped at vertex 0 embeds on the torus only
        endpoints = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        rotations = [[4, 2, 0], [1, 8, 6], [7, 10, 3], [5, 11, 9]]
        with pytest.raises(EmbeddingError):
            EmbeddedGraph.build(4, endpoints, rotations)


class TestSurgery:
    def test_subdivide_triangle(self):
        res = subdivide_edge(generate("cycle", 3), 0)
        assert (res.graph.n, res.graph.m) == (4, 4)
        assert face_lengths(res.graph) == [4, 4]
        assert res.edge_map == (0, 1, 2)

    def test_contract_k4_edge(self):
        res = contract_edge(generate("k4"), 0)
        assert (res.graph.n, res.graph.m) == (3, 5)
        assert face_lengths(res.graph) == [2, 2, 3, 3]
        assert res.vertex_map == (0, 0, 1, 2)

    def test_contract_loop_refused(self):
        g = generate("cycle", 1)
        with pytest.raises(SurgeryError):
            contract_edge(g, 0)

    def test_contract_inner_face_prism5(self):
        g = generate("prism", 5)
        inner = next(
            w.index for w in g.faces() if set(w.edges) == set(range(5, 10))
        )
        res = contract_face(g, inner)
        assert (res.graph.n, res.graph.m) == (6, 10)
        assert face_lengths(res.graph) == [3, 3, 3, 3, 3, 5]

    def test_identify_c6_dumbbell(self):
        # gluing opposite edges of a hexagon leaves two digons and a
        # length-6 outer walk through the merged bridge
        g = generate("cycle", 6)
        res = identify_edges(g, 0, 3, 0)
        assert (res.graph.n, res.graph.m) == (4, 5)
        assert face_lengths(res.graph) == [2, 2, 6]
        assert res.edge_map[3] == res.edge_map[0]

    def test_identify_prism8_ring(self):
        g = generate("prism", 8)
        ring = next(
            w.index for w in g.faces() if set(w.edges) == set(range(8, 16))
        )
        res = identify_edges(g, 8, 12, ring)
        assert (res.graph.n, res.graph.m) == (14, 23)
        assert face_lengths(res.graph) == [3, 3] + [4] * 8 + [8]
        assert euler_characteristic(res.graph) == 2

    def test_identify_needs_disjoint_edges(self):
        g = generate("cycle", 6)
        with pytest.raises(SurgeryError):
            identify_edges(g, 0, 1, 0)  # adjacent edges share a vertex


def test_medial_of_k4_is_octahedron():
    m, corr = medial(generate("k4"))
    assert (m.n, m.m) == (6, 12)
    assert corr == (0, 1, 2, 3, 4, 5)
    assert all(m.degree(v) == 4 for v in range(m.n))
    assert face_lengths(m) == [3] * 8


def test_medial_is_four_regular_on_catalog(catalog):
    for name, g in catalog.items():
        if g.m == 0:
            continue
        m, corr = medial(g)
        assert m.m == 2 * g.m, name
        assert all(m.degree(v) == 4 for v in range(m.n)), name
        assert euler_characteristic(m) == 2, name


def test_catalog_shape(catalog):
    assert len(catalog) == 39
    for name, g in catalog.items():
        assert euler_characteristic(g) == 2, name
        assert g.is_connected, name


def test_face_profile_run_counts():
    g = generate("theta", 2, 3, 4)
    for p in face_profiles(g):
        assert p.n2 >= p.n2t
        # s1/s2 only count runs of length exactly 1 and 2
        assert p.s1 + 2 * p.s2 <= max(p.n2, 0) + 2


@settings(max_examples=60)
@given(seed=st.integers(0, 10_000))
def test_random_plane_graph_invariants(seed):
    g = random_plane_graph(seed)
    assert g.is_connected
    assert euler_characteristic(g) == 2
    assert all(g.degree(v) >= 2 for v in range(g.n))
    assert parse_peg(serialize_peg(g)) == g


@settings(max_examples=80)
@given(seed=st.integers(0, 10_000), data=st.data())
def test_facial_distance_symmetric(seed, data):
    g = random_plane_graph(seed)
    e = data.draw(st.integers(0, g.m - 1))
    f = data.draw(st.integers(0, g.m - 1))
    assert facial_distance(g, e, f) == facial_distance(g, f, e)
    if e == f:
        assert facial_distance(g, e, f) == 0
    else:
        assert facial_distance(g, e, f) >= 1


@settings(max_examples=40)
@given(seed=st.integers(0, 5_000), ell=st.integers(1, 4), data=st.data())
def test_neighborhood_matches_distance(seed, ell, data):
    g = random_plane_graph(seed)
    e = data.draw(st.integers(0, g.m - 1))
    nbhd = facial_neighborhood(g, ell, e)
    for f in range(g.m):
        d = facial_distance(g, e, f)
        assert (f in nbhd) == (f != e and d <= ell)
