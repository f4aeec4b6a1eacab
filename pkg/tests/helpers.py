"""Shared graph builders for the test suite."""

from facet.embedding import EmbeddedGraph


def antiprism5() -> EmbeddedGraph:
    """Two concentric pentagons joined by a band of 10 triangles.

    Outer vertices 0..4, inner 5..9; every vertex is 4-valent and lies
    on exactly one pentagonal face, which makes the 1/5-per-5-face rule
    arithmetic easy to pin down.
    """
    endpoints = []
    for i in range(5):
        endpoints.append((i, (i + 1) % 5))  # outer, ids 0..4
    for i in range(5):
        endpoints.append((5 + i, 5 + (i + 1) % 5))  # inner, ids 5..9
    for i in range(5):
        endpoints.append((i, 5 + i))  # spokes A, ids 10..14
    for i in range(5):
        endpoints.append((i, 5 + ((i - 1) % 5)))  # spokes B, ids 15..19
    rot = []
    for i in range(5):
        rot.append([2 * i, 20 + 2 * i, 30 + 2 * i, 2 * ((i - 1) % 5) + 1])
    for i in range(5):
        rot.append(
            [
                31 + 2 * ((i + 1) % 5),
                10 + 2 * i,
                11 + 2 * ((i - 1) % 5),
                21 + 2 * i,
            ]
        )
    return EmbeddedGraph.build(10, endpoints, rot)


def bipyramid5() -> EmbeddedGraph:
    """Pentagonal rim 0..4 with an inner hub 5 and an outer hub 6.

    The rim is a 5-cycle separating the hubs, the canonical positive
    case for the short-separating-cycle scan.
    """
    endpoints = []
    for i in range(5):
        endpoints.append((i, (i + 1) % 5))  # rim, ids 0..4
    for i in range(5):
        endpoints.append((5, i))  # inner spokes, ids 5..9
    for i in range(5):
        endpoints.append((6, i))  # outer spokes, ids 10..14
    rot = []
    for i in range(5):
        rot.append([2 * i, 11 + 2 * i, 2 * ((i - 1) % 5) + 1, 21 + 2 * i])
    rot.append([10, 12, 14, 16, 18])
    rot.append([20, 28, 26, 24, 22])
    return EmbeddedGraph.build(7, endpoints, rot)


def two_ring_host(
    p: int, q: int, a_deg2: set[int], b_deg2: set[int]
) -> EmbeddedGraph:
    """Two ring faces of lengths p+2 and q+2 sharing the path v1-u-v2.

    v1 = 0 and v2 = 1 are 4-valent, u = 2 is the shared 2-vertex.  Ring
    vertices a_1..a_p (ids 3..) and b_1..b_q sit on the two faces; an
    outer apex X joins v1, v2 and every ring vertex whose 1-based index
    is not in ``a_deg2`` / ``b_deg2``, so those indices stay 2-valent.
    First and last ring indices must keep their apex edge, otherwise
    they would be extra 2-vertices adjacent to v1 or v2 and the charge
    transfers under test would stop being the only ones.
    """
    assert 1 not in a_deg2 and p not in a_deg2
    assert 1 not in b_deg2 and q not in b_deg2
    v1, v2, u = 0, 1, 2
    a = [3 + i for i in range(p)]
    b = [3 + p + i for i in range(q)]
    X = 3 + p + q
    endpoints = [(v1, u), (u, v2)]
    endpoints += [(v2, a[0])]
    endpoints += [(a[i], a[i + 1]) for i in range(p - 1)]
    endpoints += [(a[-1], v1)]
    endpoints += [(v2, b[0])]
    endpoints += [(b[i], b[i + 1]) for i in range(q - 1)]
    endpoints += [(b[-1], v1)]
    a_x = [i for i in range(1, p + 1) if i not in a_deg2]
    b_x = [i for i in range(1, q + 1) if i not in b_deg2]
    x_edges = [(X, v2)]
    x_edges += [(X, b[i - 1]) for i in b_x]
    x_edges.append((X, v1))
    x_edges += [(X, a[i - 1]) for i in reversed(a_x)]
    endpoints += x_edges

    def dart(e: int, end: int) -> int:
        return 2 * e + end

    ea = list(range(2, 2 + p + 1))
    eb = list(range(3 + p, 3 + p + q + 1))
    ex0 = 4 + p + q
    x_of = {w: ex0 + k for k, (_, w) in enumerate(x_edges)}
    rot: list[list[int]] = [[] for _ in range(X + 1)]
    rot[v1] = [dart(ea[-1], 1), dart(0, 0), dart(eb[-1], 1), dart(x_of[v1], 1)]
    rot[v2] = [dart(x_of[v2], 1), dart(eb[0], 0), dart(1, 1), dart(ea[0], 0)]
    rot[u] = [dart(1, 0), dart(0, 1)]
    for i in range(1, p + 1):
        r = [dart(ea[i - 1], 1), dart(ea[i], 0)]
        if i in a_x:
            r.append(dart(x_of[a[i - 1]], 1))
        rot[a[i - 1]] = r
    for i in range(1, q + 1):
        r = [dart(eb[i - 1], 1)]
        if i in b_x:
            r.append(dart(x_of[b[i - 1]], 1))
        r.append(dart(eb[i], 0))
        rot[b[i - 1]] = r
    rot[X] = [dart(ex0 + k, 0) for k in reversed(range(len(x_edges)))]
    return EmbeddedGraph.build(X + 1, endpoints, rot)


def pendant_path_host() -> EmbeddedGraph:
    """Triangle 0-1-2 with pendants hanging off vertex 2.

    Vertex 3 is a 2-vertex on the pendant path 2-3-4 whose both sides
    see the same face; vertex 2 is 4-valent thanks to the extra pendant
    edge to 5.
    """
    endpoints = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (2, 5)]
    rot = [
        [0, 5],
        [1, 2],
        [3, 4, 6, 10],
        [7, 8],
        [9],
        [11],
    ]
    return EmbeddedGraph.build(6, endpoints, rot)


def brute_chromatic(adjacency) -> int:
    """Exhaustive chromatic number of a small graph given as adjacency sets.

    Canonical enumeration: node i may reuse any color seen so far or open
    exactly one fresh color, so each partition is visited once.
    """
    n = len(adjacency)
    if n == 0:
        return 0
    colors = [-1] * n

    def feasible(k: int) -> bool:
        def descend(i: int, used: int) -> bool:
            if i == n:
                return True
            banned = {colors[j] for j in adjacency[i] if j < i}
            for c in range(min(used + 1, k)):
                if c in banned:
                    continue
                colors[i] = c
                if descend(i + 1, max(used, c + 1)):
                    return True
            colors[i] = -1
            return False

        return descend(0, 0)

    k = 1
    while not feasible(k):
        k += 1
    return k
