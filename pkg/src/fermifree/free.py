"""Free (gauge-invariant quasi-free) states with a prescribed 1-pdm.

A free state is a product of independent Bernoulli occupations of its
natural orbitals; it is the unique state whose correlations satisfy Wick's
determinant formula with that 1-pdm.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import ValidationError
from .fock import OrbitalSpace, basis_change_unitary, ladder_matrices
from .pdm import OnePdm, natural_spectrum, one_pdm
from .states import DensityOperator, bernoulli_weights


@dataclass(frozen=True)
class FreeStateSpec:
    """Natural orbitals (columns of a unitary) plus occupation probabilities.

    The represented density operator is U-hat @ diag(Bernoulli weights) @
    U-hat-dagger where U-hat is the Fock unitary induced by `orbitals`.
    """

    space: OrbitalSpace
    occupations: np.ndarray
    orbitals: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.occupations, dtype=float)
        object.__setattr__(self, "occupations", p)
        object.__setattr__(self, "orbitals", np.asarray(self.orbitals, dtype=complex))
        if p.shape != (self.space.d,):
            raise ValidationError(f"expected {self.space.d} occupation probabilities")
        if np.any(p < 0.0) or np.any(p > 1.0):
            raise ValidationError("occupation probabilities must lie in [0, 1]")

    def to_density(self) -> DensityOperator:
        fock_u = basis_change_unitary(self.orbitals, self.space)
        diag = bernoulli_weights(self.occupations)
        return DensityOperator(
            self.space, (fock_u * diag[None, :]) @ fock_u.conj().T
        )


def free_from_pdm(q: OnePdm) -> tuple[DensityOperator, FreeStateSpec]:
    """The unique free density operator whose 1-pdm is q, with its spec.

    Boundary occupations (0 or 1) are represented exactly by zero Bernoulli
    weights; no regularization is applied.
    """
    spectrum = natural_spectrum(q)
    spec = FreeStateSpec(q.space, spectrum.occupations, spectrum.orbitals)
    return spec.to_density(), spec


def gamma_of(rho: DensityOperator) -> DensityOperator:
    """The free reference state with the same 1-pdm as `rho`."""
    density, _ = free_from_pdm(one_pdm(rho))
    return density


def wick_check(
    rho: DensityOperator, max_order: int = 2, tol: float = 1e-10
) -> tuple[bool, float]:
    """Test the determinant form of correlations over the reference orbitals.

    Order 1 covers all monomials with at most two ladder operators, including
    the anomalous pairs <a a> and <a* a*> that must vanish for a
    gauge-invariant state; order 2 adds the three- and four-operator
    monomials, whose nonvanishing cases must equal 2x2 minors of the 1-pdm.
    Returns (passed, worst violation).
    """
    if max_order not in (1, 2):
        raise ValidationError(f"max_order must be 1 or 2, got {max_order}")
    d = rho.space.d
    m = rho.matrix
    creators, annihilators = ladder_matrices(rho.space)
    gamma = one_pdm(rho).gamma
    worst = 0.0

    def expect(op):
        return complex((op.multiply(m.T)).sum())

    for i in range(d):
        worst = max(worst, abs(expect(creators[i])), abs(expect(annihilators[i])))
    for i, j in product(range(d), repeat=2):
        worst = max(
            worst,
            abs(expect(annihilators[i] @ annihilators[j])),
            abs(expect(creators[i] @ creators[j])),
            abs(expect(creators[i] @ annihilators[j]) - gamma[j, i]),
        )
    if max_order == 2:
        for i, j in product(range(d), repeat=2):
            cc = creators[i] @ creators[j]
            ca = creators[i] @ annihilators[j]
            for k in range(d):
                worst = max(
                    worst,
                    abs(expect(cc @ annihilators[k])),
                    abs(expect(ca @ annihilators[k])),
                )
        # Tr(rho C_f1 C_f2 A_g2 A_g1) = Tr((A_g1 rho C_f1) (C_f2 A_g2))
        left = {
            (g1, f1): annihilators[g1] @ m @ creators[f1]
            for g1 in range(d)
            for f1 in range(d)
        }
        right = {
            (f2, g2): creators[f2] @ annihilators[g2]
            for f2 in range(d)
            for g2 in range(d)
        }
        for f1, f2 in product(range(d), repeat=2):
            for g1, g2 in product(range(d), repeat=2):
                lhs = complex(
                    (right[f2, g2].multiply(left[g1, f1].T)).sum()
                )
                det = (
                    gamma[g1, f1] * gamma[g2, f2] - gamma[g1, f2] * gamma[g2, f1]
                )
                worst = max(worst, abs(lhs - det))
    return bool(worst <= tol), float(worst)


def purify_free(spec: FreeStateSpec) -> np.ndarray:
    """Slater rows on a doubled orbital set whose substate on the first half is `spec`.

    Row i is sqrt(p_i) times natural orbital i on the first d coordinates plus
    sqrt(1 - p_i) times an extraneous orbital on coordinate d + i; restricting
    the resulting Slater determinant state to the first d orbitals recovers the
    free state.
    """
    d = spec.space.d
    rows = np.zeros((d, 2 * d), dtype=complex)
    p = spec.occupations
    for i in range(d):
        rows[i, :d] = np.sqrt(p[i]) * spec.orbitals[:, i]
        rows[i, d + i] = np.sqrt(1.0 - p[i])
    return rows
