"""XY spin ring with one field defect: bound state, dynamics and transport."""

from ._core import (
    ChainSpec,
    DefectLattice,
    LocalizedState,
    TransportResult,
    analytic_transmission_reference,
    asymptotic_concurrence,
    bessel_j,
    diagonalize,
    hamiltonian,
    inverse_localization_length,
    localized_concurrence,
    localized_state,
    transition_amplitude_integral,
    transition_amplitude_numeric,
    transport_coefficients,
    transport_sweep,
)

__all__ = [
    "ChainSpec",
    "DefectLattice",
    "LocalizedState",
    "TransportResult",
    "analytic_transmission_reference",
    "asymptotic_concurrence",
    "bessel_j",
    "diagonalize",
    "hamiltonian",
    "inverse_localization_length",
    "localized_concurrence",
    "localized_state",
    "transition_amplitude_integral",
    "transition_amplitude_numeric",
    "transport_coefficients",
    "transport_sweep",
]
