"""Constructors for density operators on finite fermion Fock spaces."""

from dataclasses import dataclass
from functools import reduce

import numpy as np
from scipy.linalg import null_space

from .config import TOL_HERM, TOL_NORM, TOL_PSD, TOL_TRACE, TOL_UNITARY
from .errors import ValidationError
from .fock import OrbitalSpace, basis_change_unitary, ladder_matrices


@dataclass(frozen=True)
class DensityOperator:
    """A Hermitian, positive-semidefinite, unit-trace matrix on a 2^d Fock space.

    Validation is strict: inputs outside the tolerances are rejected rather
    than renormalized, because the entropy functionals downstream amplify
    normalization errors.
    """

    space: OrbitalSpace
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        dim = self.space.dim
        if m.shape != (dim, dim):
            raise ValidationError(
                f"density matrix shape {m.shape} does not match Fock dimension {dim}"
            )
        herm = np.abs(m - m.conj().T).max()
        if herm > TOL_HERM:
            raise ValidationError(f"matrix is not Hermitian: deviation {herm:.3e}")
        tr = m.trace()
        if abs(tr - 1.0) > TOL_TRACE:
            raise ValidationError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
        lo = np.linalg.eigvalsh((m + m.conj().T) / 2).min()
        if lo < -TOL_PSD:
            raise ValidationError(
                f"matrix is not positive-semidefinite: eigenvalue {lo:.3e}"
            )

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class PureState:
    """A unit vector on the Fock space, indexed by occupation lists."""

    space: OrbitalSpace
    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", a)
        if a.shape != (self.space.dim,):
            raise ValidationError(
                f"amplitude vector length {a.shape} does not match Fock dimension"
                f" {self.space.dim}"
            )
        err = abs(np.linalg.norm(a) - 1.0)
        if err > TOL_NORM:
            raise ValidationError(f"amplitude norm deviates from 1 by {err:.3e}")


def pure_density(psi: PureState) -> DensityOperator:
    """Rank-1 projector |psi><psi|."""
    return DensityOperator(psi.space, np.outer(psi.amplitudes, psi.amplitudes.conj()))


def slater_density(orbitals: np.ndarray, space: OrbitalSpace) -> DensityOperator:
    """Pure density of the Slater determinant built from n orthonormal orbitals.

    `orbitals` is an n x d matrix whose rows are the occupied 1-particle
    vectors; n = 0 yields the vacuum state.  Implemented by completing the
    rows to a d x d unitary and applying the induced Fock unitary to the
    occupation pattern 1..10..0, so all determinant signs flow through a
    single code path.
    """
    d = space.d
    rows = np.asarray(orbitals, dtype=complex).reshape(-1, d)
    n = rows.shape[0]
    if n > d:
        raise ValidationError(f"cannot occupy {n} orbitals in a {d}-orbital space")
    if n == 0:
        psi = np.zeros(space.dim, dtype=complex)
        psi[0] = 1.0
        return DensityOperator(space, np.outer(psi, psi.conj()))
    gram_err = np.abs(rows.conj() @ rows.T - np.eye(n)).max()
    if gram_err > TOL_UNITARY:
        raise ValidationError(f"rows are not orthonormal: deviation {gram_err:.3e}")
    u = np.empty((d, d), dtype=complex)
    u[:, :n] = rows.T
    if n < d:
        u[:, n:] = null_space(rows.conj())
    psi = basis_change_unitary(u, space)[:, (1 << n) - 1]
    return DensityOperator(space, np.outer(psi, psi.conj()))


def bernoulli_weights(p: np.ndarray) -> np.ndarray:
    """Diagonal Fock weights prod_i p_i^n(i) (1-p_i)^(1-n(i)), bitmask order."""
    p = np.asarray(p, dtype=float)
    factors = [np.array([1.0 - q, q]) for q in reversed(p)]
    return reduce(np.kron, factors, np.array([1.0]))


def gibbs_free_density(p, space: OrbitalSpace) -> DensityOperator:
    """Diagonal free state with occupation probabilities strictly inside (0, 1).

    Boundary occupations belong to ``free.free_from_pdm``, which handles them
    structurally instead of as Gibbs limits.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (space.d,):
        raise ValidationError(f"expected {space.d} occupation probabilities")
    if np.any(p <= 0.0) or np.any(p >= 1.0):
        raise ValidationError(
            "occupation probabilities must lie strictly inside (0, 1);"
            " use free_from_pdm for boundary values"
        )
    return DensityOperator(space, np.diag(bernoulli_weights(p)).astype(complex))


def mixture(components) -> DensityOperator:
    """Convex combination of density operators on a shared space."""
    components = list(components)
    if not components:
        raise ValidationError("mixture needs at least one component")
    weights = np.array([w for w, _ in components], dtype=float)
    if np.any(weights < 0):
        raise ValidationError("mixture weights must be nonnegative")
    if abs(weights.sum() - 1.0) > TOL_TRACE:
        raise ValidationError(
            f"mixture weights sum deviates from 1 by {abs(weights.sum() - 1.0):.3e}"
        )
    space = components[0][1].space
    for _, rho in components[1:]:
        if rho.space.d != space.d:
            raise ValidationError("mixture components live on different spaces")
    acc = sum(w * rho.matrix for w, rho in components)
    return DensityOperator(space, acc)


def tensor_product(rho1: DensityOperator, rho2: DensityOperator) -> DensityOperator:
    """Product state on the concatenated orbital set.

    The first factor's orbitals come first, so the occupation-list
    correspondence |n> <-> |n1> x |n2> carries no fermionic sign.  The
    factors are statistically independent subsystems of the result when they
    commute with particle-number parity; factors with even-odd coherences
    couple through the fermionic reordering signs.
    """
    d1, d2 = rho1.space.d, rho2.space.d
    l1, l2 = rho1.space.labels, rho2.space.labels
    labels = None
    if l1 is not None and l2 is not None:
        if set(l1) & set(l2):
            raise ValidationError("tensor factors share orbital labels")
        labels = l1 + l2
    space = OrbitalSpace(d1 + d2, labels)
    # bit i-1 of the joint index holds orbital i, so the first factor varies fastest
    return DensityOperator(space, np.kron(rho2.matrix, rho1.matrix))


def _hubbard_hamiltonian(sites: int, t: float, u_int: float, space: OrbitalSpace):
    """Open-boundary Hubbard chain on spin-orbitals (1up, 1dn, 2up, 2dn, ...)."""
    creators, annihilators = ladder_matrices(space)

    def up(s):  # 0-based site -> 0-based spin-orbital
        return 2 * s

    def dn(s):
        return 2 * s + 1

    dim = space.dim
    h = np.zeros((dim, dim), dtype=complex)
    for s in range(sites - 1):
        for orb in (up, dn):
            hop = (creators[orb(s)] @ annihilators[orb(s + 1)]).toarray()
            h += -t * (hop + hop.conj().T)
    for s in range(sites):
        h += u_int * (
            creators[up(s)] @ annihilators[up(s)] @ creators[dn(s)] @ annihilators[dn(s)]
        ).toarray()
    return h


def hubbard_ground_state(
    sites: int, t: float, u_int: float, n_up: int, n_down: int
) -> DensityOperator:
    """Pure ground state of a small open Hubbard chain in a fixed-(N_up, N_down) sector.

    Degeneracies are resolved deterministically by taking the first column of
    the Hermitian eigensolve of the sector block.
    """
    if sites < 1 or sites > 5:
        raise ValidationError(f"site count must be within 1..5, got {sites}")
    if not (0 <= n_up <= sites and 0 <= n_down <= sites):
        raise ValidationError(
            f"infeasible particle numbers N_up={n_up}, N_down={n_down} for {sites} sites"
        )
    space = OrbitalSpace(2 * sites)
    h = _hubbard_hamiltonian(sites, t, u_int, space)
    up_mask = sum(1 << (2 * s) for s in range(sites))
    dn_mask = up_mask << 1
    idx = np.arange(space.dim)
    sector = idx[
        (np.bitwise_count(idx & up_mask) == n_up)
        & (np.bitwise_count(idx & dn_mask) == n_down)
    ]
    block = h[np.ix_(sector, sector)]
    _, vecs = np.linalg.eigh(block)
    psi = np.zeros(space.dim, dtype=complex)
    psi[sector] = vecs[:, 0]
    return pure_density(PureState(space, psi))


def trace_distance(a: DensityOperator, b: DensityOperator) -> float:
    """Half the trace norm of the difference of two density operators."""
    if a.space.d != b.space.d:
        raise ValidationError("trace distance requires a shared space")
    diff = (a.matrix - b.matrix + (a.matrix - b.matrix).conj().T) / 2
    return 0.5 * float(np.abs(np.linalg.eigvalsh(diff)).sum())
