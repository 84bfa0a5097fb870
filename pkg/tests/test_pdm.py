"""1-pdm extraction, natural spectra, particle numbers, kernel predicates."""

import numpy as np
import pytest

from fermifree import (
    DensityOperator,
    OnePdm,
    OrbitalSpace,
    ValidationError,
    basis_change_unitary,
    expected_particle_number,
    gibbs_free_density,
    kernel_inclusion_1pdm,
    mixture,
    natural_spectrum,
    number_operator,
    one_pdm,
    remark_state,
    restrict,
    slater_density,
)
from fermifree.verify import sample_density, sample_unitary


def test_one_pdm_of_slater_is_projector():
    rng = np.random.default_rng(0)
    space = OrbitalSpace(4)
    rows = sample_unitary(4, rng)[:2, :]
    gamma = one_pdm(slater_density(rows, space)).gamma
    np.testing.assert_allclose(gamma, rows.T @ rows.conj(), atol=1e-10)
    np.testing.assert_allclose(gamma @ gamma, gamma, atol=1e-10)


def test_one_pdm_of_vacuum_is_zero():
    space = OrbitalSpace(3)
    rho = slater_density(np.zeros((0, 3)), space)
    np.testing.assert_allclose(one_pdm(rho).gamma, 0.0, atol=1e-14)


def test_one_pdm_of_remark_state():
    np.testing.assert_allclose(
        one_pdm(remark_state()).gamma, np.diag([2 / 3, 1 / 3]), atol=1e-12
    )


def test_one_pdm_diagonal_matches_occupation_sums():
    # diagonal entries are sums of diagonal density weights over occupied configs
    rng = np.random.default_rng(1)
    space = OrbitalSpace(3)
    rho = sample_density(space, rng)
    gamma = one_pdm(rho).gamma
    for i in range(3):
        expected = sum(
            rho.matrix[n, n].real for n in range(8) if (n >> i) & 1
        )
        assert abs(gamma[i, i].real - expected) < 1e-12


def test_one_pdm_linearity():
    rng = np.random.default_rng(2)
    space = OrbitalSpace(3)
    a, b = sample_density(space, rng), sample_density(space, rng)
    mixed = mixture([(0.3, a), (0.7, b)])
    np.testing.assert_allclose(
        one_pdm(mixed).gamma,
        0.3 * one_pdm(a).gamma + 0.7 * one_pdm(b).gamma,
        atol=1e-12,
    )


def test_one_pdm_compression_under_restriction():
    rng = np.random.default_rng(3)
    space = OrbitalSpace(4)
    rho = sample_density(space, rng)
    keep = [1, 3]
    sub_gamma = one_pdm(restrict(rho, keep)).gamma
    np.testing.assert_allclose(
        sub_gamma, one_pdm(rho).gamma[np.ix_([0, 2], [0, 2])], atol=1e-10
    )


def test_one_pdm_basis_covariance():
    rng = np.random.default_rng(4)
    space = OrbitalSpace(3)
    rho = sample_density(space, rng)
    u = sample_unitary(3, rng)
    fock_u = basis_change_unitary(u, space)
    rotated = DensityOperator(space, fock_u @ rho.matrix @ fock_u.conj().T)
    np.testing.assert_allclose(
        one_pdm(rotated).gamma, u @ one_pdm(rho).gamma @ u.conj().T, atol=1e-10
    )


def test_natural_spectrum_descending_and_consistent():
    rng = np.random.default_rng(5)
    space = OrbitalSpace(3)
    pdm = one_pdm(sample_density(space, rng))
    spectrum = natural_spectrum(pdm)
    assert np.all(np.diff(spectrum.occupations) <= 1e-12)
    for k in range(3):
        np.testing.assert_allclose(
            pdm.gamma @ spectrum.orbitals[:, k],
            spectrum.occupations[k] * spectrum.orbitals[:, k],
            atol=1e-9,
        )


def test_natural_spectrum_trivial_cases():
    space = OrbitalSpace(2)
    spectrum = natural_spectrum(OnePdm(space, np.diag([1.0, 0.0]).astype(complex)))
    np.testing.assert_allclose(spectrum.occupations, [1.0, 0.0])
    np.testing.assert_allclose(np.abs(spectrum.orbitals), np.eye(2), atol=1e-12)


def test_natural_spectrum_phase_fix_deterministic():
    rng = np.random.default_rng(6)
    space = OrbitalSpace(3)
    pdm = one_pdm(sample_density(space, rng))
    a = natural_spectrum(pdm)
    b = natural_spectrum(pdm)
    np.testing.assert_array_equal(a.orbitals, b.orbitals)
    for k in range(3):
        col = a.orbitals[:, k]
        pivot = col[np.flatnonzero(np.abs(col) > 1e-10)[0]]
        assert abs(pivot.imag) < 1e-12 and pivot.real > 0


def test_expected_particle_number():
    rng = np.random.default_rng(7)
    space = OrbitalSpace(4)
    rows = sample_unitary(4, rng)[:3, :]
    assert abs(expected_particle_number(slater_density(rows, space)) - 3.0) < 1e-10
    p = np.array([0.2, 0.5, 0.9])
    gibbs = gibbs_free_density(p, OrbitalSpace(3))
    assert abs(expected_particle_number(gibbs) - p.sum()) < 1e-10
    assert abs(expected_particle_number(remark_state()) - 1.0) < 1e-12


def test_expected_particle_number_matches_number_operators():
    rng = np.random.default_rng(8)
    space = OrbitalSpace(3)
    rho = sample_density(space, rng)
    direct = sum(
        (rho.matrix @ number_operator(i, space).toarray()).trace().real
        for i in range(1, 4)
    )
    assert abs(expected_particle_number(rho) - direct) < 1e-10


def test_kernel_inclusion_cases():
    space = OrbitalSpace(2)
    full = OnePdm(space, np.diag([0.5, 0.5]).astype(complex))
    anything = OnePdm(space, np.diag([0.9, 0.1]).astype(complex))
    assert kernel_inclusion_1pdm(full, anything) == (True, True)

    projector = OnePdm(space, np.diag([1.0, 0.0]).astype(complex))
    assert kernel_inclusion_1pdm(projector, projector) == (True, True)

    half_kernel = OnePdm(space, np.diag([0.0, 0.5]).astype(complex))
    assert kernel_inclusion_1pdm(half_kernel, full) == (False, True)


def test_one_pdm_validation():
    space = OrbitalSpace(2)
    with pytest.raises(ValidationError, match="Hermitian"):
        OnePdm(space, np.array([[0.5, 1.0], [0.0, 0.5]]))
    with pytest.raises(ValidationError, match="outside"):
        OnePdm(space, np.diag([1.5, 0.0]).astype(complex))
