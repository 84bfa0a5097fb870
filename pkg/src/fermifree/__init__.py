"""Nonfreeness and Renyi correlation functionals of many-fermion states.

Density operators live on the 2^d-dimensional Fock space of d reference
orbitals.  The package builds states, extracts 1-particle density matrices,
constructs the unique free (gauge-invariant quasi-free) state with a given
1-pdm, and evaluates entropy-based correlation functionals against it, with
a brute-force oracle that double-checks the structural theorems.
"""

from ._version import __version__
from .correlation import (
    CorrelationReport,
    binary_entropy,
    chain_rule_terms,
    correlation_renyi,
    correlation_sandwiched,
    nonfreeness,
    restrict,
)
from .entropy import (
    cross_entropy,
    relative_entropy,
    renyi_divergence,
    sandwiched_renyi,
    von_neumann,
)
from .errors import CapacityError, ValidationError
from .fock import (
    OrbitalSpace,
    annihilator,
    basis_change_unitary,
    creator,
    enumerate_basis,
    join_index,
    number_operator,
    split_index,
)
from .free import FreeStateSpec, free_from_pdm, gamma_of, purify_free, wick_check
from .pdm import (
    NaturalSpectrum,
    OnePdm,
    expected_particle_number,
    kernel_inclusion_1pdm,
    natural_spectrum,
    one_pdm,
)
from .states import (
    DensityOperator,
    PureState,
    gibbs_free_density,
    hubbard_ground_state,
    mixture,
    pure_density,
    slater_density,
    tensor_product,
    trace_distance,
)
from .verify import (
    SearchConfig,
    VerificationReport,
    min_relent_search,
    pair_state,
    property_suite,
    remark_state,
    renyi_min_search,
)

__all__ = [
    "__version__",
    "CapacityError",
    "CorrelationReport",
    "DensityOperator",
    "FreeStateSpec",
    "NaturalSpectrum",
    "OnePdm",
    "OrbitalSpace",
    "PureState",
    "SearchConfig",
    "ValidationError",
    "VerificationReport",
    "annihilator",
    "basis_change_unitary",
    "binary_entropy",
    "chain_rule_terms",
    "correlation_renyi",
    "correlation_sandwiched",
    "creator",
    "cross_entropy",
    "enumerate_basis",
    "expected_particle_number",
    "free_from_pdm",
    "gamma_of",
    "gibbs_free_density",
    "hubbard_ground_state",
    "join_index",
    "kernel_inclusion_1pdm",
    "min_relent_search",
    "mixture",
    "natural_spectrum",
    "nonfreeness",
    "number_operator",
    "one_pdm",
    "pair_state",
    "property_suite",
    "pure_density",
    "purify_free",
    "relative_entropy",
    "remark_state",
    "renyi_divergence",
    "renyi_min_search",
    "restrict",
    "sandwiched_renyi",
    "slater_density",
    "split_index",
    "tensor_product",
    "trace_distance",
    "von_neumann",
    "wick_check",
]
