from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from oracles import PolyField, toric_points, vanishes
from toricgraph import catalog
from toricgraph.errors import (BadPartition, BadR, BadTransfer, CyclesNotVertexDisjoint, EdgesOverlap,
                               IndexOutOfRange, NotBipartite, NotConnected)
from toricgraph.field import FieldSpec
from toricgraph.graph import validate_cycle_family
from toricgraph.ideal import Binomial, vanishes_on
from toricgraph.generators import (Partition, all_partitions, alternating_partition, balanced_partitions,
                                   bipartite_disjoint_generators, conjectured_basis, even_cycle_generators,
                                   f_sigma_r, max_degree_witness, regularity_formula_disjoint,
                                   regularity_upper_bound, rho, sigma_swap, transfer)
from toricgraph.toric import enumerate_toric_set

FIELDS = {3: FieldSpec(3), 4: FieldSpec(2, 2), 5: FieldSpec(5), 7: FieldSpec(7), 8: FieldSpec(2, 3)}


def _cycle_set(k, q):
    return enumerate_toric_set(catalog.cycle(2 * k), FIELDS[q])


def test_rho_labelled_octagon():
    assert rho(Partition.of(8, {1, 3, 5, 6}), 6, 8) == (6, 6, 6, 6, 6, 1, 1, 6)


def test_octagon_binomial():
    f = f_sigma_r(Partition.of(8, {1, 3, 5, 6}), 6, 8)
    assert str(f) == "t1^6*t3^6*t5^6*t6 - t2^6*t4^6*t7*t8^6"


def test_alternating_binomials():
    lam = alternating_partition(2)
    assert f_sigma_r(lam, 1, 4) == Binomial((1, 0, 1, 0), (0, 1, 0, 1))
    assert f_sigma_r(lam, 2, 4) == Binomial((2, 0, 2, 0), (0, 2, 0, 2))
    assert rho(alternating_partition(3), 1, 5) == (1,) * 6


def test_partition_errors():
    with pytest.raises(BadPartition):
        Partition.of(4, {2, 3})
    with pytest.raises(BadPartition):
        Partition.of(5, {1})
    with pytest.raises(BadPartition):
        Partition.of(4, {1, 5})
    with pytest.raises(BadR):
        rho(alternating_partition(2), 0, 5)
    with pytest.raises(BadR):
        rho(alternating_partition(2), 4, 5)


def test_transfer_examples():
    assert transfer(Partition.of(4, {1, 3}), 3) == Partition.of(4, {1, 2})
    for i in (1, 2, 4):
        with pytest.raises(BadTransfer):
            transfer(Partition.of(4, {1, 3}), i)


def test_sigma_swap_examples():
    f = f_sigma_r(Partition.of(6, {1, 2, 4}), 1, 4)
    assert str(f) == "t1*t2^2*t4^2 - t3^2*t5^2*t6"
    assert str(sigma_swap(f, 1)) == "t2^2*t3*t4^2 - t1^2*t5^2*t6"
    assert sigma_swap(sigma_swap(f, 3), 3) == f
    with pytest.raises(IndexOutOfRange):
        sigma_swap(f, 5)


@pytest.mark.parametrize("k,q", [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5), (4, 3)])
def test_counts(k, q):
    assert len(balanced_partitions(2 * k)) == comb(2 * k - 1, k - 1)
    full = even_cycle_generators(k, q)
    assert len(full.combinatorial) == comb(2 * k - 1, k - 1) * (q - 2)
    assert len(full.toric_relations) == 2 * k - 1
    assert len(conjectured_basis(k, q).combinatorial) == len(full.combinatorial) - (q - 3)
    assert len(full.provenance()) == len(full.binomials)


def test_conjectured_basis_drops_one_at_q4():
    full, basis = even_cycle_generators(2, 4), conjectured_basis(2, 4)
    dropped = {f.key() for f in full.binomials} - {f.key() for f in basis.binomials}
    assert dropped == {Binomial((2, 0, 2, 0), (0, 2, 0, 2)).key()}


@pytest.mark.parametrize("k,q", [(2, 3), (2, 4), (2, 5), (2, 7), (3, 3), (3, 4), (3, 5), (4, 3)])
def test_every_emitted_binomial_vanishes(k, q):
    x = _cycle_set(k, q)
    gens = even_cycle_generators(k, q)
    assert all(vanishes_on(f, x) for f in gens.toric_relations)
    for *_, f in gens.combinatorial:
        assert f.homogeneous and f.is_normalized(q) and vanishes_on(f, x)


@pytest.mark.parametrize("k,q", [(2, 4), (3, 3)])
def test_emitted_binomials_vanish_pointwise(k, q):
    f = FIELDS[q]
    g = catalog.cycle(2 * k)
    ref = PolyField(f.p, f.m, f.modulus)
    pts = toric_points(g.edges, g.n, ref)
    for b in even_cycle_generators(k, q).binomials:
        assert vanishes(b.a, b.b, pts, ref)


@pytest.mark.parametrize("k,q", [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5), (4, 4)])
def test_degree_extremes(k, q):
    basis = [f for *_, f in conjectured_basis(k, q).combinatorial]
    assert min(f.degree for f in basis) == k
    assert max(f.degree for f in basis) == (q - 2) * (k - 1) + 1
    assert max_degree_witness(k, q).degree == (q - 2) * (k - 1) + 1


@pytest.mark.parametrize("k,q", [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 4)])
def test_full_set_degree_maximum(k, q):
    # f_lambda^r has degree k*r, so the full set reaches k(q-2) once q > 3
    full = even_cycle_generators(k, q).binomials
    assert max(f.degree for f in full) == max(k * (q - 2), q - 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3), st.sampled_from([4, 5]), st.data())
def test_transfer_preserves_vanishing(k, q, data):
    s = 2 * k
    movable = [(sig, i) for sig in balanced_partitions(s) for i in sig.A if i > 2 and (i - 1) not in sig.A]
    sig, i = data.draw(st.sampled_from(movable))
    r = data.draw(st.integers(1, q - 2))
    x = _cycle_set(k, q)
    assert vanishes_on(f_sigma_r(sig, r, q), x) == vanishes_on(f_sigma_r(transfer(sig, i), r, q), x)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3), st.sampled_from([3, 4, 5]), st.data())
def test_sigma_swap_closure(k, q, data):
    s = 2 * k
    sig = data.draw(st.sampled_from(balanced_partitions(s)))
    r = data.draw(st.integers(1, q - 2))
    i = data.draw(st.integers(1, s - 2))
    x = _cycle_set(k, q)
    assert vanishes_on(sigma_swap(f_sigma_r(sig, r, q), i), x)


def test_only_balanced_partitions_give_homogeneous_binomials():
    for s in (4, 6):
        for sig in all_partitions(s):
            for r in (1, 2):
                assert f_sigma_r(sig, r, 5).homogeneous == sig.balanced


@pytest.mark.parametrize("name", sorted(catalog.decorated_cycles()))
@pytest.mark.parametrize("q", [3, 4])
def test_bipartite_disjoint_generators_vanish(name, q):
    g = catalog.decorated_cycles()[name]
    x = enumerate_toric_set(g, FIELDS[q])
    gens = bipartite_disjoint_generators(g, q)
    assert len(gens.binomials) == len(gens.provenance)
    assert all(vanishes_on(f, x) for f in gens.binomials)


def test_bipartite_disjoint_generators_count():
    gens = bipartite_disjoint_generators(catalog.decorated_cycles()["C4+pendant"], 3)
    assert len(gens.binomials) == 4 + 3  # toric relations on 5 variables, three balanced partitions


def test_bipartite_disjoint_generators_errors():
    with pytest.raises(NotBipartite):
        bipartite_disjoint_generators(catalog.cycle(5), 3)
    with pytest.raises(NotConnected):
        bipartite_disjoint_generators(catalog.disjoint_union(catalog.cycle(4), catalog.cycle(4)), 3)
    with pytest.raises(CyclesNotVertexDisjoint):
        bipartite_disjoint_generators(catalog.two_squares_sharing_diagonal(), 3)


def test_regularity_formula_examples():
    assert regularity_formula_disjoint(catalog.cycle(4), 3) == 1
    assert regularity_formula_disjoint(catalog.decorated_cycles()["C4+pendant"], 5) == 6
    assert regularity_formula_disjoint(catalog.cycle(6), 3) == 2


def test_regularity_upper_bound_examples():
    g1 = catalog.two_squares_sharing_diagonal()
    assert regularity_upper_bound(g1, 5, validate_cycle_family(g1, catalog.TWO_SQUARES_CYCLES)) == 9
    g2 = catalog.k23()
    assert regularity_upper_bound(g2, 5, validate_cycle_family(g2, catalog.K23_CYCLE)) == 9
    with pytest.raises(NotBipartite):
        c5 = catalog.cycle(5)
        regularity_upper_bound(c5, 5, validate_cycle_family(c5, []))


@pytest.mark.parametrize("cycles,first", [(catalog.TWO_SQUARES_CYCLES, 2), (catalog.TWO_SQUARES_ALL_CYCLES, 4)])
def test_cycle_union_candidates_fail_on_shared_vertices(cycles, first):
    from toricgraph.graph import CycleFamily
    from toricgraph.generators import cycle_union_candidates
    from toricgraph.ideal import verify_generating_set
    g = catalog.two_squares_sharing_diagonal()
    idx = g.edge_index()
    seqs = tuple(tuple(idx[frozenset((c[i], c[(i + 1) % len(c)]))] for i in range(len(c))) for c in cycles)
    fam = CycleFamily(seqs, False, len(cycles) == 2)
    x = enumerate_toric_set(g, FIELDS[5])
    gens = cycle_union_candidates(g, 5, fam).binomials
    assert all(vanishes_on(f, x) for f in gens)
    rep = verify_generating_set(gens, x)
    assert not rep.generates and rep.first_failure == first
