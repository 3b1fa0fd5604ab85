"""Bipartite graph, spanning forest, canonicalization and orientability."""

import itertools

import numpy as np
import pytest

from phasedmatroids import (
    ComplexMatrix,
    DisconnectedGraphError,
    Phase,
    Rephasing,
    UnderlyingMatroid,
    associated_bipartite_graph,
    canonical_spanning_forest,
    canonicalize,
    entry_phase,
    from_matrix,
    is_canonical,
    is_essentially_oriented,
    minor_phase,
    phase_of,
    rephase,
    scale,
    scale_global,
    shuffle_sign,
    to_standard_form,
    underlying_matroid,
)
from phasedmatroids.canonical import canonical_targets

from oracles import minor_det


def random_standard(rng, r, n):
    arr = rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n))
    return to_standard_form(ComplexMatrix.from_complex(arr))


def test_shuffle_sign_examples():
    assert shuffle_sign((2, 3, 5), 7) == 1
    assert shuffle_sign((7,), 7) == 1
    assert shuffle_sign((1, 2), 3) == 1
    with pytest.raises(ValueError):
        shuffle_sign((0, 2), 3)


def test_entry_phase_nonreal2ex(nonreal2ex_phi):
    assert entry_phase(nonreal2ex_phi, 1, 4).isclose(Phase.from_angle_over_pi(0.5))
    assert entry_phase(nonreal2ex_phi, 2, 5).isclose(Phase(0.0))


def test_entry_phase_matches_matrix_entries():
    rng = np.random.default_rng(31)
    for r, n in ((2, 5), (3, 6), (4, 8)):
        m = random_standard(rng, r, n)
        phi = from_matrix(m)
        for i in range(1, r + 1):
            for j in range(r + 1, n + 1):
                assert entry_phase(phi, i, j).isclose(m.entry_phase(i, j))


def test_minor_phase_singletons_reduce_to_entry_phase(nonreal2ex_phi):
    for i in (1, 2):
        for j in (3, 4, 5):
            assert minor_phase(nonreal2ex_phi, (i,), (j,)).isclose(
                entry_phase(nonreal2ex_phi, i, j))


def test_minor_phase_runex(runex_phi):
    assert minor_phase(runex_phi, (2,), (5,)).isclose(Phase.from_angle_over_pi(0.25))


def test_minor_phase_matches_determinants():
    from phasedmatroids import Tolerance
    rng = np.random.default_rng(32)
    tol = Tolerance(1e-7)
    for _ in range(10):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r + 2, 10))
        m = random_standard(rng, r, n)
        phi = from_matrix(m)
        for h in itertools.combinations(range(1, r + 1), 2):
            for j in itertools.combinations(range(r + 1, n + 1), 2):
                expected = phase_of(minor_det(m, h, j))
                assert minor_phase(phi, h, j).isclose(expected, tol)


def test_associated_graph_uniform_complete():
    matroid = UnderlyingMatroid.from_bases(4, 2, [(1, 2), (1, 3), (1, 4),
                                                  (2, 3), (2, 4), (3, 4)])
    g = associated_bipartite_graph(matroid)
    assert g.edges == frozenset({(1, 3), (1, 4), (2, 3), (2, 4)})


def test_associated_graph_runex(runex_phi):
    g = associated_bipartite_graph(underlying_matroid(runex_phi))
    assert g.edges == frozenset({(1, 4), (2, 4), (1, 5), (2, 5), (3, 5)})


def test_associated_graph_isolated_row():
    # column 3 parallel to column 2: row 1 cannot be exchanged out
    m = UnderlyingMatroid.from_bases(3, 2, [(1, 2), (1, 3)])
    g = associated_bipartite_graph(m)
    assert g.neighbors_of_row(1) == []
    assert g.edges == frozenset({(2, 3)})


def test_canonical_forest_uniform_star():
    matroid = UnderlyingMatroid.from_bases(
        6, 3, list(itertools.combinations(range(1, 7), 3)))
    forest = canonical_spanning_forest(associated_bipartite_graph(matroid))
    assert forest.component_count == 1
    assert set(forest.edges) == {(1, 4), (2, 4), (3, 4), (3, 5), (3, 6)}


def test_canonical_forest_runex(runex_phi):
    g = associated_bipartite_graph(underlying_matroid(runex_phi))
    forest = canonical_spanning_forest(g)
    assert set(forest.edges) == {(1, 4), (2, 4), (2, 5), (3, 5)}
    assert forest.component_count == 1


def test_canonical_forest_rank2():
    matroid = UnderlyingMatroid.from_bases(
        5, 2, list(itertools.combinations(range(1, 6), 2)))
    forest = canonical_spanning_forest(associated_bipartite_graph(matroid))
    assert set(forest.edges) == {(1, 3), (2, 3), (2, 4), (2, 5)}


def test_forest_edge_count_property():
    rng = np.random.default_rng(33)
    for _ in range(20):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r + 1, 10))
        m = random_standard(rng, r, n)
        forest = canonical_spanning_forest(
            associated_bipartite_graph(underlying_matroid(from_matrix(m))))
        assert len(forest.edges) == n - forest.component_count


def test_canonicalize_idempotent(nonreal2ex_phi):
    result = canonicalize(nonreal2ex_phi)
    assert all(p.isclose(Phase(0.0)) for p in result.rho.rho)
    assert result.global_phase.isclose(Phase(0.0))
    assert result.canonical.max_angular_distance(nonreal2ex_phi) < 1e-12


def test_canonicalize_invariants_random():
    rng = np.random.default_rng(34)
    for _ in range(15):
        r = int(rng.integers(2, 5))
        n = int(rng.integers(r + 2, 10))
        arr = rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n))
        phi = from_matrix(ComplexMatrix.from_complex(arr))
        result = canonicalize(phi)
        # defining identity: canonical = global_phase * (phi rephased)
        recomposed = scale_global(rephase(phi, result.rho), result.global_phase)
        assert recomposed.max_angular_distance(result.canonical) < 1e-9
        # pinned values are exact, not merely within tolerance
        for basis, target in canonical_targets(result.canonical).items():
            got = result.canonical.values[basis]
            assert got.angle == target.angle
        assert is_canonical(result.canonical)


def test_canonicalize_rejects_direct_sum():
    m = ComplexMatrix.from_complex(np.array([[1, 0, 2, 0], [0, 1, 0, 3]], dtype=complex))
    with pytest.raises(DisconnectedGraphError):
        canonicalize(from_matrix(m))


def test_essential_orientability(runex_phi, nonreal2ex_phi):
    assert is_essentially_oriented(runex_phi)
    assert not is_essentially_oriented(nonreal2ex_phi)


def test_essential_orientability_constructed_instance():
    rng = np.random.default_rng(35)
    real = rng.normal(size=(3, 6))
    m = ComplexMatrix.from_complex(real.astype(complex))
    rho = [np.exp(1j * a) for a in rng.uniform(0, 2 * np.pi, 6)]
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    disguised = ComplexMatrix.from_complex(a @ scale(m, np.ones(3), rho).to_complex())
    assert is_essentially_oriented(from_matrix(disguised))


def test_essential_orientability_rephasing_invariant():
    rng = np.random.default_rng(36)
    arr = rng.normal(size=(2, 5)) + 1j * rng.normal(size=(2, 5))
    phi = from_matrix(ComplexMatrix.from_complex(arr))
    rho = Rephasing(tuple(Phase.from_angle(x) for x in rng.uniform(0, 2 * np.pi, 5)))
    assert is_essentially_oriented(rephase(phi, rho)) == is_essentially_oriented(phi)
