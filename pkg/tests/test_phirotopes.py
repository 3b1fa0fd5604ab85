"""Phirotope storage, alternation, validation and group actions."""

import cmath
import math

import numpy as np
import pytest

from phasedmatroids import (
    ComplexMatrix,
    IndexOutOfRangeError,
    InvalidPhirotopeError,
    NotAMatroidError,
    Phase,
    Phirotope,
    RankDeficientError,
    Rephasing,
    UnderlyingMatroid,
    from_matrix,
    is_uniform,
    phase_of,
    rephase,
    scale,
    scale_global,
    sort_with_sign,
    underlying_matroid,
)


def test_sort_with_sign():
    assert sort_with_sign((1, 2, 3)) == ((1, 2, 3), 1)
    assert sort_with_sign((2, 1, 3)) == ((1, 2, 3), -1)
    assert sort_with_sign((3, 1, 2)) == ((1, 2, 3), 1)
    assert sort_with_sign((1, 1, 3)) == ((1, 1, 3), 0)


def test_eval_alternation(nonreal2ex_phi):
    phi = nonreal2ex_phi
    assert phi.evaluate((2, 1)).isclose(-phi.evaluate((1, 2)))
    assert phi.evaluate((1, 1)).is_zero
    # phi(2,4) = -e^{i pi/2}, so the swapped evaluation is e^{i pi/2}
    assert phi.evaluate((4, 2)).isclose(Phase.from_angle_over_pi(0.5))
    with pytest.raises(IndexOutOfRangeError):
        phi.evaluate((0, 3))


def test_not_identically_zero():
    with pytest.raises(ValueError):
        Phirotope(3, 2, {b: Phase(None) for b in ((1, 2), (1, 3), (2, 3))})


def test_missing_basis_rejected():
    with pytest.raises(ValueError):
        Phirotope(3, 2, {(1, 2): Phase(0.0)})


def test_gp_violation_detected():
    values = {(1, 2): Phase(0.0), (1, 3): Phase(0.0), (1, 4): Phase(0.0),
              (2, 3): Phase(0.0), (2, 4): Phase(0.0),
              (3, 4): Phase.from_angle_over_pi(0.5)}
    with pytest.raises(InvalidPhirotopeError):
        Phirotope(4, 2, values)
    phi = Phirotope(4, 2, values, validate=False)
    violations = phi.check_gp()
    assert ((2, 3, 4), (1,)) in violations
    assert violations == sorted(violations)


def test_from_matrix_runex(runex_phi):
    assert runex_phi.value((1, 2, 4)).is_zero
    assert runex_phi.value((1, 3, 5)).isclose(Phase.from_angle_over_pi(1.25))
    assert runex_phi.check_gp() == []


def test_from_matrix_real_is_sign_valued():
    rng = np.random.default_rng(21)
    m = ComplexMatrix.from_complex(
        np.hstack([np.eye(3), rng.normal(size=(3, 3))]).astype(complex))
    phi = from_matrix(m)
    for p in phi.values.values():
        assert p.is_real()


def test_from_matrix_nonreal2ex_canonical_matrix():
    m = ComplexMatrix.from_complex(np.array([
        [1, 0, 1, cmath.exp(1j * math.pi / 2), cmath.exp(1j * math.pi / 3)],
        [0, 1, 1, 1, 1],
    ], dtype=complex))
    phi = from_matrix(m)
    assert phi.value((3, 4)).isclose(Phase.from_angle_over_pi(1.75))
    assert phi.value((4, 5)).isclose(Phase.from_angle_over_pi(11 / 12))


def test_from_matrix_rank_deficient():
    m = ComplexMatrix.from_complex(np.zeros((2, 4), dtype=complex) + 0j)
    with pytest.raises(RankDeficientError):
        from_matrix(m)


def test_rephase_identity(nonreal2ex_phi):
    assert rephase(nonreal2ex_phi, Rephasing.identity(5)) == nonreal2ex_phi


def test_rephase_matches_column_scaling():
    rng = np.random.default_rng(22)
    m = ComplexMatrix.from_complex(rng.normal(size=(3, 6)) + 1j * rng.normal(size=(3, 6)))
    rho = Rephasing(tuple(Phase.from_angle(a) for a in rng.uniform(0, 2 * np.pi, 6)))
    scaled = scale(m, np.ones(3), np.array([p.unit() for p in rho.rho]))
    assert from_matrix(scaled).isclose(rephase(from_matrix(m), rho), tol=None)


def test_rephase_roundtrip_closes():
    rng = np.random.default_rng(23)
    m = ComplexMatrix.from_complex(rng.normal(size=(2, 5)) + 1j * rng.normal(size=(2, 5)))
    phi = from_matrix(m)
    rho = Rephasing(tuple(Phase.from_angle(a) for a in rng.uniform(0, 2 * np.pi, 5)))
    back = rephase(rephase(phi, rho), rho.inverse())
    assert back.max_angular_distance(phi) < 1e-12


def test_scale_global(nonreal2ex_phi):
    assert scale_global(nonreal2ex_phi, Phase(0.0)) == nonreal2ex_phi
    flipped_twice = scale_global(scale_global(nonreal2ex_phi, Phase(math.pi)), Phase(math.pi))
    assert flipped_twice.max_angular_distance(nonreal2ex_phi) < 1e-12


def test_scale_global_matches_left_multiplication():
    rng = np.random.default_rng(24)
    m = ComplexMatrix.from_complex(rng.normal(size=(3, 5)) + 1j * rng.normal(size=(3, 5)))
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    left = ComplexMatrix.from_complex(a @ m.to_complex())
    expected = scale_global(from_matrix(m), phase_of(np.linalg.det(a)))
    assert from_matrix(left).isclose(expected, tol=None)


def test_underlying_matroid(runex_phi, nonreal2ex_phi):
    m = underlying_matroid(runex_phi)
    assert not m.is_uniform
    assert not m.is_basis((1, 2, 4))
    assert m.is_basis((2, 3, 4))
    assert is_uniform(nonreal2ex_phi)
    assert not is_uniform(runex_phi)


def test_exchange_axiom_violation():
    # {1,2} and {3,4} with no exchange partner
    with pytest.raises(NotAMatroidError):
        UnderlyingMatroid.from_bases(4, 2, [(1, 2), (3, 4)])


def test_random_matrix_is_uniform():
    rng = np.random.default_rng(25)
    m = ComplexMatrix.from_complex(rng.normal(size=(3, 7)) + 1j * rng.normal(size=(3, 7)))
    assert is_uniform(from_matrix(m))


def test_check_gp_random_matrices():
    rng = np.random.default_rng(26)
    for r in (2, 3, 4):
        for n in range(4, 10):
            if n < r:
                continue
            for _ in range(5):
                arr = rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n))
                phi = from_matrix(ComplexMatrix.from_complex(arr))
                assert phi.check_gp() == []
