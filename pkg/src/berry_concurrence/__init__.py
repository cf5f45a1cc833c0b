"""Berry phases of spin-1/2 systems in a rotating field and the concurrence
of the entangled pair states built from them."""
from .entanglement import (
    ConcurrenceReport, EntangledPair, MonogamyReport, coefficients_from_phi,
    complex_concurrence, concurrence_from_phi, general_concurrence, monogamy_report,
    spin_model_catalog, standard_basis_state, wootters_concurrence,
)
from .errors import (
    BadDimension, BadSteps, BerryConcurrenceError, DegeneratePath, DomainError,
    NotHermitian, NotNormalized, NotPSD, ZeroState, ZeroVisibility,
)
from .evolution import (
    EvolutionResult, cyclic_evolve_pair, cyclic_phase_record, exact_propagator,
    pair_state, propagate,
)
from .geometric import (
    PhaseRecord, bell_evolve, bell_state, closed_form_gamma, composition_raw,
    eigenstate_loop, entangled_loop, pancharatnam_overlap, sigma_matrix,
    three_spin_phase, wilson_loop_phase,
)
from .linalg import (
    density_matrix, hermitian_eig, is_hermitian, is_unitary, kron, partial_trace,
    psd_sqrt, state_vector,
)
from .spin import (
    BerryFactor, FieldConfig, berry_factor, field_direction, flux_phase, hamiltonian,
    instantaneous_eigenstates, monopole_field,
)

__version__ = "0.1.0"
