"""One-particle density matrices: extraction, natural orbitals, kernel predicates."""

from dataclasses import dataclass, field

import numpy as np

from .config import KERNEL_TOL, TOL_HERM
from .errors import ValidationError
from .fock import OrbitalSpace, ladder_matrices
from .states import DensityOperator


@dataclass(frozen=True)
class OnePdm:
    """The d x d matrix gamma with gamma[i, j] = Tr(rho a*_j+1 a_i+1).

    A Hermitian positive-semidefinite contraction; its trace is the expected
    particle number.
    """

    space: OrbitalSpace
    gamma: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.gamma, dtype=complex)
        object.__setattr__(self, "gamma", g)
        d = self.space.d
        if g.shape != (d, d):
            raise ValidationError(f"1-pdm shape {g.shape} does not match d={d}")
        herm = np.abs(g - g.conj().T).max()
        if herm > TOL_HERM:
            raise ValidationError(f"1-pdm is not Hermitian: deviation {herm:.3e}")
        w = np.linalg.eigvalsh((g + g.conj().T) / 2)
        if w.min() < -1e-10 or w.max() > 1 + 1e-10:
            raise ValidationError(
                f"1-pdm eigenvalues outside [0, 1]: range [{w.min():.3e}, {w.max():.3e}]"
            )

    @property
    def trace(self) -> float:
        return float(self.gamma.trace().real)


@dataclass(frozen=True)
class NaturalSpectrum:
    """Eigendecomposition of a 1-pdm: occupations descending, orbitals as columns.

    `clamped` records the largest adjustment applied to push eigenvalues into
    [0, 1], so downstream x log x evaluations never see -1e-16.
    """

    occupations: np.ndarray
    orbitals: np.ndarray
    clamped: float = field(default=0.0)


def one_pdm(rho: DensityOperator) -> OnePdm:
    """Extract the 1-particle density matrix of a density operator."""
    d = rho.space.d
    creators, annihilators = ladder_matrices(rho.space)
    g = np.empty((d, d), dtype=complex)
    for i in range(d):
        left = annihilators[i] @ rho.matrix  # a_i rho
        for j in range(d):
            # Tr(rho a*_j a_i) = Tr(a_i rho a*_j)
            g[i, j] = (creators[j].multiply(left.T)).sum()
    return OnePdm(rho.space, (g + g.conj().T) / 2)


def natural_spectrum(pdm: OnePdm) -> NaturalSpectrum:
    """Deterministic natural orbitals and occupations, descending.

    The phase of each orbital is fixed by making its first component of
    nonnegligible magnitude real and positive.
    """
    herm = (pdm.gamma + pdm.gamma.conj().T) / 2
    w, v = np.linalg.eigh(herm)
    w, v = w[::-1], v[:, ::-1]
    clamp = max(0.0, float(-w.min()), float(w.max() - 1.0))
    w = np.clip(w, 0.0, 1.0)
    for k in range(v.shape[1]):
        col = v[:, k]
        nz = np.flatnonzero(np.abs(col) > 1e-10)
        pivot = col[nz[0]] if nz.size else 1.0
        phase = pivot / abs(pivot)
        v[:, k] = col / phase
    return NaturalSpectrum(occupations=w, orbitals=v, clamped=clamp)


def expected_particle_number(rho: DensityOperator) -> float:
    """Average total particle number: the trace of the 1-pdm."""
    return one_pdm(rho).trace


def kernel_inclusion_1pdm(
    gamma_free: OnePdm, gamma_state: OnePdm, tol: float = KERNEL_TOL
) -> tuple[bool, bool]:
    """Subspace predicates (ker g_F subset of ker g_S, ker(I-g_F) subset of ker(I-g_S)).

    Tested eigenvector-wise: every eigenvector of the first 1-pdm with
    eigenvalue below `tol` (resp. above 1 - tol) must be annihilated by the
    second 1-pdm (resp. by I minus it) within `tol`.
    """
    if gamma_free.space.d != gamma_state.space.d:
        raise ValidationError("kernel predicates require a shared space")
    w, v = np.linalg.eigh((gamma_free.gamma + gamma_free.gamma.conj().T) / 2)
    g2 = gamma_state.gamma
    eye = np.eye(gamma_state.space.d)
    ker_ok = True
    coker_ok = True
    for k in range(w.size):
        if w[k] < tol:
            ker_ok = ker_ok and np.linalg.norm(g2 @ v[:, k]) < tol
        if w[k] > 1.0 - tol:
            coker_ok = coker_ok and np.linalg.norm((eye - g2) @ v[:, k]) < tol
    return bool(ker_ok), bool(coker_ok)
