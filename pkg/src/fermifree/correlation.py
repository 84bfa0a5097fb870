"""Correlation functionals: nonfreeness, its Renyi relatives, and restriction.

Nonfreeness is the entropy of a state relative to the unique free state with
the same 1-pdm.  At finite dimension the state entropy is always finite, so
the primary computation is the entropy difference over natural occupations,
with the direct relative-entropy evaluation kept as a cross-check.
"""

from dataclasses import dataclass

import numpy as np

from .entropy import relative_entropy, renyi_divergence, sandwiched_renyi, von_neumann
from .errors import ValidationError
from .fock import OrbitalSpace, join_index
from .free import gamma_of, wick_check
from .pdm import natural_spectrum, one_pdm
from .states import DensityOperator


def binary_entropy(p: np.ndarray) -> float:
    """Sum of -p log p - (1-p) log(1-p) over the entries of p, in nats."""
    p = np.asarray(p, dtype=float)
    out = 0.0
    for q in (p, 1.0 - p):
        live = q > 0
        out -= float((q[live] * np.log(q[live])).sum())
    return out


@dataclass(frozen=True)
class CorrelationReport:
    """Nonfreeness together with the quantities entering its evaluation.

    `cross_check` is the absolute difference between the entropy-difference
    value and the directly evaluated relative entropy (None when skipped).
    """

    nonfreeness: float
    occupations: np.ndarray
    entropy_state: float
    entropy_free: float
    cross_check: float | None


def nonfreeness(rho: DensityOperator, cross_check: bool = True) -> CorrelationReport:
    """Entropy of `rho` relative to its free reference state.

    Computed as S(free reference) - S(rho), where the free entropy is the
    binary-entropy sum over the natural occupation numbers.  Values in
    [-1e-7, 0) are treated as float noise and clamped to 0; anything lower is
    a hard error, since the free entropy can never fall below the state
    entropy.
    """
    spectrum = natural_spectrum(one_pdm(rho))
    entropy_free = binary_entropy(spectrum.occupations)
    entropy_state = von_neumann(rho)
    value = entropy_free - entropy_state
    if value < -1e-7:
        raise ValidationError(
            f"nonfreeness evaluated to {value:.3e}; the entropy difference"
            " can only be negative through a computational bug"
        )
    value = max(value, 0.0)
    deviation = None
    if cross_check:
        direct = relative_entropy(rho, gamma_of(rho))
        deviation = abs(direct - value)
    return CorrelationReport(
        nonfreeness=value,
        occupations=spectrum.occupations,
        entropy_state=entropy_state,
        entropy_free=entropy_free,
        cross_check=deviation,
    )


def correlation_renyi(rho: DensityOperator, alpha: float) -> float:
    """D_alpha of `rho` from its free reference state, alpha in (0, 2]."""
    return renyi_divergence(alpha, rho, gamma_of(rho))


def correlation_sandwiched(rho: DensityOperator, alpha: float) -> float:
    """Sandwiched D_alpha of `rho` from its free reference state, alpha >= 1/2."""
    return sandwiched_renyi(alpha, rho, gamma_of(rho))


def restrict(rho: DensityOperator, keep) -> DensityOperator:
    """Substate delimited by the orbitals in `keep` (fermionic partial trace).

    Matrix elements are summed over the complement's occupation lists with
    the reordering signs of the tensor factorization; the result's 1-pdm is
    the keep x keep compression of the input's.
    """
    keep = sorted(keep)
    space = rho.space
    if not keep:
        raise ValidationError("kept orbital subset must be nonempty")
    k = len(keep)
    comp = space.d - k
    sub_dim = 1 << k
    env_dim = 1 << comp
    full = np.empty((sub_dim, env_dim), dtype=np.int64)
    sign = np.empty((sub_dim, env_dim))
    for n1 in range(sub_dim):
        for n2 in range(env_dim):
            full[n1, n2], sign[n1, n2] = join_index(n1, n2, keep, space)
    out = np.zeros((sub_dim, sub_dim), dtype=complex)
    for n2 in range(env_dim):
        idx = full[:, n2]
        out += np.outer(sign[:, n2], sign[:, n2]) * rho.matrix[np.ix_(idx, idx)]
    labels = space.labels
    sub_labels = tuple(labels[i - 1] for i in keep) if labels is not None else None
    return DensityOperator(OrbitalSpace(k, sub_labels), out)


def chain_rule_terms(
    rho: DensityOperator, gamma_free: DensityOperator, wick_tol: float = 1e-8
) -> tuple[float, float, float]:
    """The three relative entropies whose chain identity pins the minimum property.

    Returns (S(rho || free reference), S(free reference || gamma_free),
    S(rho || gamma_free)); the first two sum to the third, trivially so when
    any of them is infinite.  `gamma_free` must pass the order-2 determinant
    check.
    """
    ok, worst = wick_check(gamma_free, max_order=2, tol=wick_tol)
    if not ok:
        raise ValidationError(
            f"reference state fails the determinant-correlation check ({worst:.3e})"
        )
    reference = gamma_of(rho)
    return (
        relative_entropy(rho, reference),
        relative_entropy(reference, gamma_free),
        relative_entropy(rho, gamma_free),
    )
