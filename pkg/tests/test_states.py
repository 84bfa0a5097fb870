"""State constructors: pure, Slater, Gibbs, mixtures, products, Hubbard."""

import numpy as np
import pytest

from fermifree import (
    DensityOperator,
    OrbitalSpace,
    PureState,
    ValidationError,
    gibbs_free_density,
    hubbard_ground_state,
    mixture,
    nonfreeness,
    one_pdm,
    pure_density,
    restrict,
    slater_density,
    tensor_product,
)
from fermifree.states import bernoulli_weights
from fermifree.verify import sample_density, sample_unitary


def vacuum(space):
    amplitudes = np.zeros(space.dim, dtype=complex)
    amplitudes[0] = 1.0
    return pure_density(PureState(space, amplitudes))


def test_pure_density_vacuum():
    rho = vacuum(OrbitalSpace(2))
    expected = np.zeros((4, 4))
    expected[0, 0] = 1.0
    np.testing.assert_allclose(rho.matrix, expected)


def test_pure_density_has_unit_purity():
    rng = np.random.default_rng(0)
    space = OrbitalSpace(3)
    v = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    rho = pure_density(PureState(space, v / np.linalg.norm(v)))
    assert abs((rho.matrix @ rho.matrix).trace() - 1.0) < 1e-12


def test_pure_state_rejects_unnormalized():
    with pytest.raises(ValidationError, match="norm deviates"):
        PureState(OrbitalSpace(1), np.array([1.0, 1.0]))


def test_density_validation_messages():
    space = OrbitalSpace(1)
    with pytest.raises(ValidationError, match="trace deviates"):
        DensityOperator(space, np.diag([0.6, 0.6]))
    with pytest.raises(ValidationError, match="Hermitian"):
        DensityOperator(space, np.array([[0.5, 1.0], [0.0, 0.5]]))
    with pytest.raises(ValidationError, match="positive-semidefinite"):
        DensityOperator(space, np.diag([1.5, -0.5]))


def test_slater_standard_basis_rows():
    space = OrbitalSpace(3)
    rho = slater_density(np.eye(3)[:2], space)
    expected = np.zeros((8, 8))
    expected[0b011, 0b011] = 1.0
    np.testing.assert_allclose(rho.matrix, expected, atol=1e-12)


def test_slater_vacuum_case():
    space = OrbitalSpace(2)
    rho = slater_density(np.zeros((0, 2)), space)
    np.testing.assert_allclose(rho.matrix, vacuum(space).matrix)


def test_slater_pdm_is_projector_onto_row_span():
    rng = np.random.default_rng(3)
    space = OrbitalSpace(4)
    rows = sample_unitary(4, rng)[:2, :]
    rho = slater_density(rows, space)
    projector = rows.T @ rows.conj()
    np.testing.assert_allclose(one_pdm(rho).gamma, projector, atol=1e-10)


def test_slater_nonfreeness_zero():
    rng = np.random.default_rng(4)
    space = OrbitalSpace(4)
    rows = sample_unitary(4, rng)[:3, :]
    assert nonfreeness(slater_density(rows, space)).nonfreeness < 1e-8


def test_slater_invariant_under_row_mixing():
    rng = np.random.default_rng(5)
    space = OrbitalSpace(4)
    rows = sample_unitary(4, rng)[:2, :]
    mixer = sample_unitary(2, rng)
    a = slater_density(rows, space)
    b = slater_density(mixer @ rows, space)
    np.testing.assert_allclose(a.matrix, b.matrix, atol=1e-10)


def test_slater_rejects_nonorthonormal_rows():
    with pytest.raises(ValidationError, match="orthonormal"):
        slater_density(np.array([[1.0, 0.0], [1.0, 0.0]]), OrbitalSpace(2))


def test_gibbs_single_orbital():
    rho = gibbs_free_density([0.5], OrbitalSpace(1))
    np.testing.assert_allclose(rho.matrix, np.diag([0.5, 0.5]))


def test_gibbs_two_orbital_weights():
    rho = gibbs_free_density([2 / 3, 1 / 3], OrbitalSpace(2))
    np.testing.assert_allclose(
        np.diag(rho.matrix).real, [2 / 9, 4 / 9, 1 / 9, 2 / 9], atol=1e-14
    )


def test_gibbs_weights_sum_to_one():
    rng = np.random.default_rng(6)
    p = rng.uniform(0.01, 0.99, 6)
    assert abs(bernoulli_weights(p).sum() - 1.0) < 1e-12


def test_gibbs_lambda_parametrization_roundtrip():
    # occupations p = exp(-lam) / (1 + exp(-lam)) reproduce the Gibbs weights
    lam = np.array([0.7, -0.3, 1.9])
    space = OrbitalSpace(3)
    p = np.exp(-lam) / (1.0 + np.exp(-lam))
    rho = gibbs_free_density(p, space)
    weights = np.array(
        [
            np.exp(-sum(lam[i] for i in range(3) if (n >> i) & 1))
            for n in range(8)
        ]
    )
    weights /= np.prod(1.0 + np.exp(-lam))
    np.testing.assert_allclose(np.diag(rho.matrix).real, weights, atol=1e-12)


def test_gibbs_rejects_boundary_occupations():
    with pytest.raises(ValidationError, match="strictly inside"):
        gibbs_free_density([0.0, 0.5], OrbitalSpace(2))
    with pytest.raises(ValidationError, match="strictly inside"):
        gibbs_free_density([1.0, 0.5], OrbitalSpace(2))


def test_mixture_identity_and_idempotence():
    rng = np.random.default_rng(7)
    rho = sample_density(OrbitalSpace(2), rng)
    np.testing.assert_allclose(mixture([(1.0, rho)]).matrix, rho.matrix)
    np.testing.assert_allclose(
        mixture([(0.5, rho), (0.5, rho)]).matrix, rho.matrix, atol=1e-15
    )


def test_mixture_remark_state():
    space = OrbitalSpace(2)
    up = np.zeros(4, dtype=complex)
    up[0b01] = 1.0
    down = np.zeros(4, dtype=complex)
    down[0b10] = 1.0
    rho = mixture(
        [
            (2 / 3, pure_density(PureState(space, up))),
            (1 / 3, pure_density(PureState(space, down))),
        ]
    )
    np.testing.assert_allclose(rho.matrix, np.diag([0.0, 2 / 3, 1 / 3, 0.0]))


def test_mixture_weight_validation():
    rng = np.random.default_rng(8)
    rho = sample_density(OrbitalSpace(1), rng)
    with pytest.raises(ValidationError, match="sum deviates"):
        mixture([(0.7, rho), (0.7, rho)])
    with pytest.raises(ValidationError, match="different spaces"):
        mixture([(0.5, rho), (0.5, sample_density(OrbitalSpace(2), rng))])


def test_tensor_product_of_vacua():
    prod = tensor_product(vacuum(OrbitalSpace(2)), vacuum(OrbitalSpace(1)))
    np.testing.assert_allclose(prod.matrix, vacuum(OrbitalSpace(3)).matrix)


def test_tensor_product_marginal():
    rng = np.random.default_rng(9)
    a = sample_density(OrbitalSpace(2), rng)
    b = sample_density(OrbitalSpace(2), rng)
    prod = tensor_product(a, b)
    np.testing.assert_allclose(restrict(prod, [1, 2]).matrix, a.matrix, atol=1e-12)
    # the compression of the 1-pdm identifies the second marginal as well
    np.testing.assert_allclose(
        one_pdm(restrict(prod, [3, 4])).gamma, one_pdm(b).gamma, atol=1e-12
    )


def test_tensor_product_second_marginal_for_even_parity_factor():
    # tracing out a factor of definite particle-number parity leaves the
    # other factor intact, coherences included
    rng = np.random.default_rng(10)
    space = OrbitalSpace(2)
    even = np.zeros(4, dtype=complex)
    even[0b00], even[0b11] = 0.6, 0.8
    a = pure_density(PureState(space, even))
    b = sample_density(space, rng)
    prod = tensor_product(a, b)
    np.testing.assert_allclose(restrict(prod, [3, 4]).matrix, b.matrix, atol=1e-12)


def test_tensor_product_label_collision():
    a = sample_density(OrbitalSpace(1, labels=("x",)), np.random.default_rng(1))
    b = sample_density(OrbitalSpace(1, labels=("x",)), np.random.default_rng(2))
    with pytest.raises(ValidationError, match="labels"):
        tensor_product(a, b)


def test_hubbard_noninteracting_is_free():
    for sites, n_up, n_down in [(2, 1, 1), (3, 2, 1)]:
        rho = hubbard_ground_state(sites, 1.0, 0.0, n_up, n_down)
        assert nonfreeness(rho, cross_check=False).nonfreeness < 1e-8


def test_hubbard_nonfreeness_grows_with_interaction():
    values = [
        nonfreeness(
            hubbard_ground_state(2, 1.0, u, 1, 1), cross_check=False
        ).nonfreeness
        for u in (0.0, 1.0, 2.0, 4.0, 8.0)
    ]
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_hubbard_degenerate_sector_still_valid():
    rho = hubbard_ground_state(2, 0.0, 3.0, 1, 1)
    assert abs(rho.matrix.trace() - 1.0) < 1e-12


def test_hubbard_rejects_infeasible_fillings():
    with pytest.raises(ValidationError, match="infeasible"):
        hubbard_ground_state(2, 1.0, 1.0, 3, 0)
