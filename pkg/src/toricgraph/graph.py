"""Simple graphs whose edge order fixes the variable order t_1, ..., t_s."""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field as dc_field

import networkx as nx

from .errors import (DuplicateEdge, EdgesOverlap, IsolatedVertex, LoopEdge, NotACycle,
                     OddCycle, ParseError, TooFewEdges)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise LoopEdge(f"edge {i + 1} is a loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ParseError(f"edge {i + 1} = {{{u}, {v}}} outside vertex range 1..{self.n}")
            key = frozenset((u, v))
            if key in seen:
                raise DuplicateEdge(f"edge {i + 1} = {{{u}, {v}}} repeats an earlier edge")
            seen.add(key)
        used = {x for e in self.edges for x in e}
        missing = sorted(set(range(1, self.n + 1)) - used)
        if missing:
            raise IsolatedVertex(f"isolated vertices: {missing}")
        if len(self.edges) < 2:
            raise TooFewEdges(f"need at least 2 edges, got {len(self.edges)}")

    @property
    def s(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """vertex -> [(neighbour, 0-based edge index)], in edge order."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, self.n + 1)}
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return adj

    def edge_index(self) -> dict[frozenset, int]:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def to_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def graph_from_edges(edges, normalize: bool = False) -> Graph:
    """Build a Graph, relabeling vertices 1..n by order of first appearance."""
    edges = [(int(u), int(v)) for u, v in edges]
    if normalize:
        cleaned, seen = [], set()
        for u, v in edges:
            key = frozenset((u, v))
            if u == v:
                log.warning("dropping loop at vertex %d", u)
            elif key in seen:
                log.warning("dropping repeated edge {%d, %d}", u, v)
            else:
                seen.add(key)
                cleaned.append((u, v))
        edges = cleaned
    label: dict[int, int] = {}
    for u, v in edges:
        for x in (u, v):
            if x not in label:
                label[x] = len(label) + 1
    return Graph(len(label), tuple((label[u], label[v]) for u, v in edges))


def parse_graph(text: str, normalize: bool = False) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: vertices must be positive integers")
        edges.append((u, v))
    return graph_from_edges(edges, normalize=normalize)


def read_graph(path, normalize: bool = False) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), normalize=normalize)


# -- components and bipartiteness -------------------------------------------

@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]  # 0-based
    bipartite: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    odd_cycle: tuple[int, ...] | None = None  # vertex sequence witnessing non-bipartiteness

    @property
    def n_j(self) -> int:
        return len(self.vertices)

    @property
    def s_j(self) -> int:
        return len(self.edge_indices)


def _odd_cycle_witness(parent, depth, u, v):
    """Close the BFS-tree paths from u and v (same colour, adjacent) into a cycle."""
    pu, pv = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pv.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        pu.append(a)
        pv.append(b)
    return tuple(pu + pv[-2::-1])


def components(g: Graph) -> list[ComponentInfo]:
    adj = g.adjacency()
    colour: dict[int, int] = {}
    out = []
    for root in range(1, g.n + 1):
        if root in colour:
            continue
        colour[root] = 0
        parent = {root: root}
        depth = {root: 0}
        order, eidx = [root], set()
        witness = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, ei in adj[x]:
                eidx.add(ei)
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    order.append(y)
                    queue.append(y)
                elif colour[y] == colour[x] and witness is None:
                    witness = _odd_cycle_witness(parent, depth, x, y)
        verts = tuple(sorted(order))
        if witness is None:
            part = (tuple(v for v in verts if colour[v] == 0), tuple(v for v in verts if colour[v] == 1))
            out.append(ComponentInfo(verts, tuple(sorted(eidx)), True, part))
        else:
            out.append(ComponentInfo(verts, tuple(sorted(eidx)), False, None, witness))
    return out


def count_non_bipartite(comps) -> int:
    return sum(1 for c in comps if not c.bipartite)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    return all(c.bipartite for c in components(g))


def incidence_vectors(g: Graph) -> list[tuple[int, ...]]:
    vecs = []
    for u, v in g.edges:
        nu = [0] * g.n
        nu[u - 1] = 1
        nu[v - 1] = 1
        vecs.append(tuple(nu))
    return vecs


# -- cycles ----------------------------------------------------------------

@dataclass(frozen=True)
class CycleFamily:
    cycles: tuple[tuple[int, ...], ...]  # each an ordered 0-based edge-index sequence
    vertex_disjoint: bool
    edge_disjoint: bool
    vertex_cycles: tuple[tuple[int, ...], ...] = dc_field(default=())

    @property
    def half_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) // 2 for c in self.cycles)


class NotDisjoint:
    """Returned by ``cycle_blocks`` when some block is neither an edge nor a cycle."""

    def __init__(self, offending_blocks):
        self.offending_blocks = offending_blocks

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NotDisjoint({self.offending_blocks})"


def _traverse_cycle(g: Graph, edge_ids) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Order a cycle's edges starting at its lowest edge, heading toward the lower neighbour edge."""
    edge_ids = sorted(edge_ids)
    incident: dict[int, list[int]] = {}
    for ei in edge_ids:
        for x in g.edges[ei]:
            incident.setdefault(x, []).append(ei)
    start = edge_ids[0]
    u, v = g.edges[start]
    nxt_u = next(e for e in incident[u] if e != start)
    nxt_v = next(e for e in incident[v] if e != start)
    # walk so that the second edge is the smaller neighbour
    cur_vertex = v if nxt_v < nxt_u else u
    first_vertex = u if cur_vertex == v else v
    order, verts = [start], [first_vertex, cur_vertex]
    prev = start
    while len(order) < len(edge_ids):
        e = next(x for x in incident[cur_vertex] if x != prev)
        order.append(e)
        a, b = g.edges[e]
        cur_vertex = b if a == cur_vertex else a
        verts.append(cur_vertex)
        prev = e
    return tuple(order), tuple(verts[:-1])


def cycle_blocks(g: Graph):
    """Cycle blocks of ``g`` as a vertex-disjoint CycleFamily, or ``NotDisjoint``."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(1, g.n + 1))
    nxg.add_edges_from(g.edges)
    index = g.edge_index()
    cycles, vcycles, bad = [], [], []
    for block in nx.biconnected_component_edges(nxg):
        ids = sorted(index[frozenset(e)] for e in block)
        if len(ids) == 1:
            continue
        verts = {x for i in ids for x in g.edges[i]}
        if len(ids) == len(verts):
            eorder, vorder = _traverse_cycle(g, ids)
            cycles.append(eorder)
            vcycles.append(vorder)
        else:
            bad.append(tuple(ids))
    if bad:
        return NotDisjoint(sorted(bad))
    pairs = sorted(zip(cycles, vcycles))
    return CycleFamily(tuple(c for c, _ in pairs), True, True, tuple(v for _, v in pairs))


def validate_cycle_family(g: Graph, user_cycles, require_edge_disjoint: bool = True) -> CycleFamily:
    """Check vertex-sequence cycles and convert them to edge-index sequences."""
    index = g.edge_index()
    cycles, vcycles = [], []
    for cyc in user_cycles:
        cyc = tuple(int(v) for v in cyc)
        if len(cyc) > 1 and cyc[0] == cyc[-1]:
            cyc = cyc[:-1]
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise NotACycle(f"{cyc} is not a simple closed vertex sequence")
        eids = []
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            key = frozenset((a, b))
            if key not in index:
                raise NotACycle(f"{cyc}: {{{a}, {b}}} is not an edge")
            eids.append(index[key])
        if len(eids) % 2:
            raise OddCycle(f"{cyc} has odd length {len(eids)}")
        cycles.append(tuple(eids))
        vcycles.append(cyc)
    edge_disjoint = all(not set(a) & set(b) for i, a in enumerate(cycles) for b in cycles[i + 1:])
    vertex_disjoint = all(not set(a) & set(b) for i, a in enumerate(vcycles) for b in vcycles[i + 1:])
    if require_edge_disjoint and not edge_disjoint:
        raise EdgesOverlap("supplied cycles share edges")
    return CycleFamily(tuple(cycles), vertex_disjoint, edge_disjoint, tuple(vcycles))


def bridges(g: Graph) -> list[int]:
    """0-based indices of edges lying on no cycle."""
    nxg = nx.Graph()
    nxg.add_edges_from(g.edges)
    index = g.edge_index()
    return sorted(index[frozenset(e)] for e in nx.bridges(nxg))
