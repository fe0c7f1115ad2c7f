"""Combinatorial binomial generators for even cycles and bipartite graphs.

Variables of a cycle C_2k are numbered along the cycle, so edge i meets
edge i+1 (and edge 2k meets edge 1).  A partition sigma = A | B of
{1..2k} with 1 in A and a residue r in {1..q-2} determine exponents through
the labelling rho: start at r, copy the label when consecutive indices lie
on opposite sides, switch to q-1-label when they lie on the same side.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .errors import (BadPartition, BadR, BadTransfer, CyclesNotVertexDisjoint, EdgesOverlap,
                     IndexOutOfRange, InputError, NotBipartite, NotConnected)
from .graph import CycleFamily, Graph, NotDisjoint, components, cycle_blocks
from .ideal import Binomial, toric_relations


@dataclass(frozen=True)
class Partition:
    s: int
    A: frozenset  # 1-based indices

    def __post_init__(self):
        if self.s < 2 or self.s % 2:
            raise BadPartition(f"ground set size must be even and >= 2, got {self.s}")
        if not all(1 <= i <= self.s for i in self.A):
            raise BadPartition(f"A={sorted(self.A)} not inside 1..{self.s}")
        if 1 not in self.A:
            raise BadPartition("1 must lie in A")

    @classmethod
    def of(cls, s: int, A) -> "Partition":
        return cls(s, frozenset(A))

    @property
    def B(self) -> frozenset:
        return frozenset(range(1, self.s + 1)) - self.A

    @property
    def balanced(self) -> bool:
        return 2 * len(self.A) == self.s

    def side(self, i: int) -> bool:
        return i in self.A

    def to_json(self) -> dict:
        return {"A": sorted(self.A), "B": sorted(self.B)}

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.A))) + "}|{" + ",".join(map(str, sorted(self.B))) + "}"


def alternating_partition(k: int) -> Partition:
    """{1,3,...,2k-1} | {2,4,...,2k}."""
    return Partition.of(2 * k, range(1, 2 * k, 2))


def balanced_partitions(s: int) -> list[Partition]:
    """All |A| = |B| partitions with 1 in A, in lexicographic order of A."""
    return [Partition.of(s, (1,) + rest) for rest in combinations(range(2, s + 1), s // 2 - 1)]


def all_partitions(s: int) -> list[Partition]:
    """Every partition with 1 in A (balanced or not)."""
    out = []
    for size in range(0, s):
        out += [Partition.of(s, (1,) + rest) for rest in combinations(range(2, s + 1), size)]
    return out


def _check_r(r: int, q: int):
    if not 1 <= r <= q - 2:
        raise BadR(f"r={r} outside 1..{q - 2}")


def rho(sigma: Partition, r: int, q: int) -> tuple[int, ...]:
    _check_r(r, q)
    vals = [r]
    for i in range(1, sigma.s):
        prev = vals[-1]
        vals.append(q - 1 - prev if sigma.side(i) == sigma.side(i + 1) else prev)
    return tuple(vals)


def f_sigma_r(sigma: Partition, r: int, q: int) -> Binomial:
    vals = rho(sigma, r, q)
    a = tuple(v if sigma.side(i + 1) else 0 for i, v in enumerate(vals))
    b = tuple(0 if sigma.side(i + 1) else v for i, v in enumerate(vals))
    return Binomial(a, b)


def transfer(sigma: Partition, i: int) -> Partition:
    """Move i-1 into A and i into B (requires i in A, i > 2, i-1 in B)."""
    if not (i in sigma.A and i > 2 and (i - 1) not in sigma.A):
        raise BadTransfer(f"cannot transfer i={i} in {sigma}")
    return Partition(sigma.s, (sigma.A - {i}) | {i - 1})


def sigma_swap(f: Binomial, i: int) -> Binomial:
    """Exchange variables t_i and t_{i+2} (1-based)."""
    if not 1 <= i <= f.s - 2:
        raise IndexOutOfRange(f"i={i} outside 1..{f.s - 2}")
    a, b = list(f.a), list(f.b)
    a[i - 1], a[i + 1] = a[i + 1], a[i - 1]
    b[i - 1], b[i + 1] = b[i + 1], b[i - 1]
    return Binomial(tuple(a), tuple(b))


@dataclass
class CycleGenSet:
    k: int
    q: int
    toric_relations: list[Binomial]
    combinatorial: list[tuple[Partition, int, Binomial]] = dc_field(default_factory=list)

    @property
    def binomials(self) -> list[Binomial]:
        return list(self.toric_relations) + [f for _, _, f in self.combinatorial]

    def provenance(self) -> list[dict]:
        out = [{"kind": "toric", "index": i} for i in range(len(self.toric_relations))]
        out += [{"kind": "f_sigma_r", "sigma": sig.to_json(), "r": r} for sig, r, _ in self.combinatorial]
        return out


def _check_kq(k: int, q: int):
    if k < 2:
        raise InputError(f"need k >= 2, got {k}")
    if q < 3:
        raise InputError(f"need q >= 3, got {q}")


def even_cycle_generators(k: int, q: int) -> CycleGenSet:
    _check_kq(k, q)
    s = 2 * k
    comb_part = [(sig, r, f_sigma_r(sig, r, q)) for sig in balanced_partitions(s) for r in range(1, q - 1)]
    return CycleGenSet(k, q, toric_relations(s, q), comb_part)


def conjectured_basis(k: int, q: int) -> CycleGenSet:
    """The even-cycle set without f_lambda^r for r >= 2 (lambda = alternating partition)."""
    full = even_cycle_generators(k, q)
    lam = alternating_partition(k)
    kept = [(sig, r, f) for sig, r, f in full.combinatorial if not (sig == lam and r >= 2)]
    return CycleGenSet(k, q, full.toric_relations, kept)


def max_degree_witness(k: int, q: int) -> Binomial:
    """f_sigma^(q-2) for sigma = {1,3,...,2k-3,2k} | {2,4,...,2k-2,2k-1}; degree (q-2)(k-1)+1."""
    sigma = Partition.of(2 * k, list(range(1, 2 * k - 2, 2)) + [2 * k])
    return f_sigma_r(sigma, q - 2, q)


# -- bipartite graphs with vertex-disjoint cycles ---------------------------------

@dataclass
class GraphGenSet:
    s: int
    q: int
    binomials: list[Binomial]
    provenance: list[dict]


def cycle_union_candidates(g: Graph, q: int, family: CycleFamily) -> GraphGenSet:
    """Toric relations on all s variables plus f_sigma^r of every cycle in ``family``.

    Cycle-local variable i is mapped to the i-th edge of the cycle's edge sequence.
    """
    s = g.s
    gens = toric_relations(s, q)
    prov = [{"kind": "toric", "index": i} for i in range(len(gens))]
    seen = {f.key() for f in gens}
    for ci, cyc in enumerate(family.cycles):
        k = len(cyc) // 2
        local = even_cycle_generators(k, q)
        for sig, r, f in local.combinatorial:
            emb = f.embed(cyc, s)
            if emb.key() in seen:
                continue
            seen.add(emb.key())
            gens.append(emb)
            prov.append({"kind": "f_sigma_r", "cycle": ci, "edges": [e + 1 for e in cyc],
                         "sigma": sig.to_json(), "r": r})
    return GraphGenSet(s, q, gens, prov)


def _disjoint_family(g: Graph) -> CycleFamily:
    comps = components(g)
    if len(comps) != 1:
        raise NotConnected(f"graph has {len(comps)} components")
    if not comps[0].bipartite:
        raise NotBipartite(f"odd cycle through vertices {comps[0].odd_cycle}")
    fam = cycle_blocks(g)
    if isinstance(fam, NotDisjoint):
        raise CyclesNotVertexDisjoint(f"blocks {fam.offending_blocks} are not single cycles")
    return fam


def bipartite_disjoint_generators(g: Graph, q: int) -> GraphGenSet:
    return cycle_union_candidates(g, q, _disjoint_family(g))


def regularity_formula_disjoint(g: Graph, q: int) -> int:
    fam = _disjoint_family(g)
    return (q - 2) * (g.s - sum(fam.half_lengths) - 1)


def regularity_upper_bound(g: Graph, q: int, family: CycleFamily) -> int:
    if not all(c.bipartite for c in components(g)):
        raise NotBipartite("graph is not bipartite")
    if not family.edge_disjoint:
        raise EdgesOverlap("cycle family is not edge-disjoint")
    return (q - 2) * (g.s - sum(family.half_lengths) - 1)
