"""Residue classes, dominating sets, Hamiltonian cycles, cliques, colorings."""

import math

import pytest

from rooklab.constructions import (
    anchor_edge,
    conjectured_dominating_set_sr3,
    dominating_set_sr,
    hamiltonian_cycle_sr,
    max_clique_csr,
    proper_coloring,
    residue_independent_family,
    residue_key,
    smallest_prime_at_least,
)
from rooklab.core import adjacent, csr_spec, enumerate_vertices, neighbors, sr_spec
from rooklab.oracles import oracle_alpha, oracle_omega, verify_cycle


def test_smallest_prime_at_least():
    assert smallest_prime_at_least(1) == 2
    assert smallest_prime_at_least(3) == 3
    assert smallest_prime_at_least(6) == 7
    assert smallest_prime_at_least(90) == 97


# -- residue classes -------------------------------------------------------------


def test_residue_classes_sr32():
    fam = residue_independent_family(sr_spec(3, 2), p=3)
    assert fam.classes == [
        [(0, 0, 2), (1, 1, 0)],
        [(0, 2, 0), (1, 0, 1)],
        [(0, 1, 1), (2, 0, 0)],
    ]
    assert fam.independent == [True, True, True]
    assert fam.best_index == 0 and fam.best_size == 2


def test_residue_classes_partition_and_scan_sr():
    for m in range(2, 5):
        for n in range(0, 5):
            spec = sr_spec(m, n)
            fam = residue_independent_family(spec)
            assert sum(len(c) for c in fam.classes) == spec.vertex_count
            assert all(fam.independent)
            # pigeonhole: largest class carries at least the average
            assert fam.best_size >= -(-spec.vertex_count // fam.p)


def test_residue_classes_sr36_vs_oracle():
    spec = sr_spec(3, 6)
    fam = residue_independent_family(spec)
    assert fam.p == 7
    assert fam.best_size >= math.comb(8, 2) // 7  # 28/7 = 4
    assert oracle_alpha(spec)[0] == 5


def test_residue_classes_csr32_fail_recorded():
    # the 4-vertex complete graph cannot split into 3 independent classes
    fam = residue_independent_family(csr_spec(3, 2), p=3)
    assert not all(fam.independent)
    best = fam.best_verified()
    assert best is not None and len(best[1]) == 1


def test_residue_key_weights():
    assert residue_key((0, 0, 2), 3) == (1 * 0 + 2 * 0 + 3 * 2) % 3
    assert residue_key((1, 1, 0), 3) == 0


def test_residue_family_rejects_bad_prime():
    with pytest.raises(ValueError, match="not prime"):
        residue_independent_family(sr_spec(3, 2), p=4)
    with pytest.raises(ValueError, match="below"):
        residue_independent_family(sr_spec(3, 7), p=5)


def test_residue_family_needs_prime_above_n():
    # with p = n = 3 the corner vertices 3*e_i share key 0 and are adjacent,
    # so p = 3 is rejected for SR(3,3); the safe default is 5
    with pytest.raises(ValueError, match="below"):
        residue_independent_family(sr_spec(3, 3), p=3)
    fam = residue_independent_family(sr_spec(3, 3))
    assert fam.p == 5
    assert all(fam.independent)


# -- dominating sets -------------------------------------------------------------


def test_dominating_set_sr32():
    dom = dominating_set_sr(3, 2)
    assert dom.vertices == [(0, 0, 2), (1, 1, 0)]
    assert dom.size == 2 == dom.predicted_size()
    assert dom.witness((2, 0, 0)) == (0, 0, 2)


def test_dominating_set_rejects_small_m():
    with pytest.raises(ValueError, match="m >= 3"):
        dominating_set_sr(2, 4)


@pytest.mark.parametrize("m,n", [(3, n) for n in range(0, 8)] + [(4, n) for n in range(0, 6)])
def test_dominating_set_witnesses(m, n):
    spec = sr_spec(m, n)
    dom = dominating_set_sr(m, n)
    members = set(dom.vertices)
    assert dom.size == dom.predicted_size()
    assert dom.size <= dom.size_upper_bound()
    for v in enumerate_vertices(spec):
        w = dom.witness(v)
        assert w in members
        assert w == v or adjacent(spec, v, w)


def test_conjectured_sr3_small():
    result = conjectured_dominating_set_sr3(2, compare_oracle=True)
    assert result.vertices == [(0, 0, 2), (1, 1, 0)]
    assert result.dominates and result.size == 2 and result.matches_oracle

    result = conjectured_dominating_set_sr3(4, compare_oracle=True)
    assert result.size == 3 and result.dominates and result.matches_oracle

    result = conjectured_dominating_set_sr3(0)
    assert result.vertices == [(0, 0, 0)] and result.dominates


def test_conjectured_sr3_not_always_minimum():
    # the diagonal set dominates but is beaten by gamma = 3 at n = 6; the
    # result records the gap instead of asserting minimality
    result = conjectured_dominating_set_sr3(6, compare_oracle=True)
    assert result.dominates
    assert result.size == 4
    assert result.oracle_gamma == 3
    assert result.matches_oracle is False


# -- Hamiltonian cycles ----------------------------------------------------------


def test_hamiltonian_k3():
    cycle = hamiltonian_cycle_sr(2, 2)
    assert len(cycle.vertices) == 3
    assert cycle.vertices[0] == (2, 0) and cycle.vertices[1] == (1, 1)
    assert verify_cycle(cycle.spec, list(cycle.vertices), cycle.anchor_edge).valid


def test_hamiltonian_sr32():
    cycle = hamiltonian_cycle_sr(3, 2)
    assert len(cycle.vertices) == 6
    verdict = verify_cycle(cycle.spec, list(cycle.vertices), anchor_edge(3, 2))
    assert verdict.valid, verdict.reason


@pytest.mark.parametrize(
    "m,n",
    [(m, n) for m in range(2, 6) for n in range(1, 6) if (m, n) != (2, 1)],
)
def test_hamiltonian_sweep(m, n):
    cycle = hamiltonian_cycle_sr(m, n)
    verdict = verify_cycle(cycle.spec, list(cycle.vertices), cycle.anchor_edge)
    assert verdict.valid, (m, n, verdict.reason)


@pytest.mark.parametrize("m,n,msg", [(2, 1, "single edge"), (1, 5, "single vertex"), (3, 0, "single vertex")])
def test_hamiltonian_excluded(m, n, msg):
    with pytest.raises(ValueError, match=msg):
        hamiltonian_cycle_sr(m, n)


# -- cliques ---------------------------------------------------------------------


def test_clique_csr42_core():
    clique = max_clique_csr(4, 2)
    assert clique.kind == "core"
    assert set(clique.vertices) == {(0, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)}
    assert clique.size == 4 == oracle_omega(csr_spec(4, 2))[0]


def test_clique_csr35_coset():
    clique = max_clique_csr(3, 5)
    assert clique.kind == "coset" and clique.size == 5
    assert set(clique.vertices) == {(c, (5 - c) % 5, 0) for c in range(5)}


def test_clique_csr32_below_oracle():
    # the n=2 gap: construction gives max(n, m) = 3 but the graph is K_4
    clique = max_clique_csr(3, 2)
    assert clique.size == 3
    assert oracle_omega(csr_spec(3, 2))[0] == 4


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 6) for n in range(2, 6)])
def test_clique_pairwise_adjacent(m, n):
    clique = max_clique_csr(m, n)
    assert clique.size == max(m, n)
    spec = csr_spec(m, n)
    for i, u in enumerate(clique.vertices):
        for v in clique.vertices[i + 1 :]:
            assert adjacent(spec, u, v)


def test_clique_rejects_degenerate():
    with pytest.raises(ValueError):
        max_clique_csr(1, 5)
    with pytest.raises(ValueError):
        max_clique_csr(4, 1)


# -- colorings -------------------------------------------------------------------


def test_coloring_csr32_not_proper():
    result = proper_coloring(csr_spec(3, 2), p=3)
    assert not result.proper and result.violations >= 1


def test_coloring_sr32_proper():
    result = proper_coloring(sr_spec(3, 2), p=3)
    assert result.proper and result.colors_used == 3


def test_coloring_csr45_scan():
    result = proper_coloring(csr_spec(4, 5), p=5)
    # independent edge scan of the returned color map
    spec = csr_spec(4, 5)
    clashes = sum(
        1
        for v in result.colors
        for w in neighbors(spec, v)
        if v < w and result.colors[v] == result.colors[w]
    )
    assert result.proper == (clashes == 0)
    assert result.violations == clashes
    assert result.proper  # p = n prime: the residue key separates neighbors
