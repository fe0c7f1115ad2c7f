"""Named graphs and generator lists used by the acceptance battery and the tests."""
from __future__ import annotations

from .graph import Graph, graph_from_edges
from .ideal import Binomial


def cycle(n: int) -> Graph:
    return graph_from_edges([(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    return graph_from_edges([(i, i + 1) for i in range(1, n)])


def star(leaves: int) -> Graph:
    return graph_from_edges([(1, i) for i in range(2, leaves + 2)])


def complete(n: int) -> Graph:
    return graph_from_edges([(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges([(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def disjoint_union(*parts) -> Graph:
    """Union of graphs or raw edge lists (a lone edge is not a valid Graph on its own)."""
    edges, offset = [], 0
    for part in parts:
        part_edges = part.edges if isinstance(part, Graph) else part
        edges += [(u + offset, v + offset) for u, v in part_edges]
        offset += max(max(e) for e in part_edges)
    return graph_from_edges(edges)


EDGE = [(1, 2)]


def triangle_plus_square() -> Graph:
    return disjoint_union(cycle(3), cycle(4))


def two_triangles() -> Graph:
    """Two vertex-disjoint triangles, edges e1..e6 = 12, 23, 31, 45, 56, 64."""
    return graph_from_edges([(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])


def two_triangles_bridged() -> Graph:
    """Triangles 123 and 567 joined by the path 2-4-5; e4, e5 lie on no cycle."""
    return graph_from_edges([(1, 2), (2, 3), (1, 3), (2, 4), (4, 5), (5, 6), (6, 7), (5, 7)])


def two_squares_sharing_diagonal() -> Graph:
    """K_{2,4}: squares 1-2-3-4 (e1..e4) and 3-5-1-6 (e5..e8) meet in vertices 1 and 3."""
    return graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (5, 1), (1, 6), (6, 3)])


TWO_SQUARES_CYCLES = [(1, 2, 3, 4), (3, 5, 1, 6)]
TWO_SQUARES_ALL_CYCLES = [(1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6), (1, 4, 3, 5), (1, 4, 3, 6), (1, 5, 3, 6)]


def k23() -> Graph:
    """K_{2,3} with e1..e6 = 12, 23, 34, 41, 45, 52."""
    return graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 2)])


K23_CYCLE = [(1, 2, 3, 4)]


def _b(s, a, b) -> Binomial:
    return Binomial.from_dicts(s, a, b)


def two_triangles_generators() -> list[Binomial]:
    """The fifteen binomials listed for two disjoint triangles over GF(3)."""
    gens = [_b(6, {i: 2}, {6: 2}) for i in (5, 4, 3, 2, 1)]
    cubic = [((3, 4, 5), (1, 2, 6)), ((2, 4, 5), (1, 3, 6)), ((1, 4, 5), (2, 3, 6)),
             ((2, 3, 5), (1, 4, 6)), ((1, 3, 5), (2, 4, 6)), ((1, 2, 5), (3, 4, 6)),
             ((2, 3, 4), (1, 5, 6)), ((1, 3, 4), (2, 5, 6)), ((1, 2, 4), (3, 5, 6)),
             ((1, 2, 3), (4, 5, 6))]
    gens += [_b(6, dict.fromkeys(a, 1), dict.fromkeys(b, 1)) for a, b in cubic]
    return gens


def bridged_triangles_binomial() -> Binomial:
    """t1 t2 t4^2 t7 - t3 t5^2 t6 t8 (over GF(5))."""
    return _b(8, {1: 1, 2: 1, 4: 2, 7: 1}, {3: 1, 5: 2, 6: 1, 8: 1})


def two_squares_binomial() -> Binomial:
    """t1 t4 t6 t7 - t2 t3 t5 t8 (over GF(5))."""
    return _b(8, {1: 1, 4: 1, 6: 1, 7: 1}, {2: 1, 3: 1, 5: 1, 8: 1})


def k23_binomial_as_printed() -> Binomial:
    """t1 t2 t5^2 - t3 t4 t5^2, exactly as listed for K_{2,3}."""
    return _b(6, {1: 1, 2: 1, 5: 2}, {3: 1, 4: 1, 5: 2})


def k23_binomial_weighted() -> Binomial:
    """t1 t2 t5^2 - t3 t4 t6^2: the exponents carried by the edge weights of the drawing."""
    return _b(6, {1: 1, 2: 1, 5: 2}, {3: 1, 4: 1, 6: 2})


def decorated_cycles() -> dict[str, Graph]:
    """C_4 and C_6 with one or two pendant edges or paths."""
    return {
        "C4+pendant": graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (4, 5)]),
        "C4+2pendants": graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (2, 6)]),
        "C4+path2": graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6)]),
        "C6+pendant": graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7)]),
        "C6+2pendants": graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (4, 8)]),
        "C6+path2": graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (7, 8)]),
    }


def length_corpus() -> dict[str, Graph]:
    """Connected and two-component graphs, n <= 6, plus the triangle+square anchor (n = 7)."""
    e = graph_from_edges
    connected = {
        "P3": path(3), "P4": path(4), "P5": path(5), "P6": path(6),
        "K1,3": star(3), "K1,4": star(4), "K1,5": star(5),
        "spider": e([(1, 2), (2, 3), (1, 4), (4, 5), (1, 6)]),
        "triangle": cycle(3), "C4": cycle(4), "C5": cycle(5), "C6": cycle(6),
        "paw": e([(1, 2), (2, 3), (3, 1), (3, 4)]),
        "diamond": e([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]),
        "K4": complete(4), "K5": complete(5),
        "bull": e([(1, 2), (2, 3), (3, 1), (1, 4), (2, 5)]),
        "bowtie": e([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]),
        "K2,3": complete_bipartite(2, 3), "K3,3": complete_bipartite(3, 3),
        "C4+pendant": e([(1, 2), (2, 3), (3, 4), (4, 1), (4, 5)]),
        "C6+chord": e([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)]),
        "prism": e([(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)]),
        "C5+pendant": e([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6)]),
    }
    two = {
        "2K2": disjoint_union(EDGE, EDGE),
        "P3+K2": disjoint_union(path(3), EDGE),
        "P3+P3": disjoint_union(path(3), path(3)),
        "triangle+K2": disjoint_union(cycle(3), EDGE),
        "triangle+P3": disjoint_union(cycle(3), path(3)),
        "two-triangles": two_triangles(),
        "C4+K2": disjoint_union(cycle(4), EDGE),
        "triangle+square": triangle_plus_square(),
    }
    return {**connected, **two}
