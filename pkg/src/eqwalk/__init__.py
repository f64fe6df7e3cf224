"""Electric discrete-time quantum walks on 1D/2D lattices.

Simulation of coined walks under a position-linear phase (the lattice analog
of a constant electric field), plus the spectral toolkit: dispersion relations,
stroboscopic band structures for rational fields, and width/period observables.
"""

from .coin import (CoinOperator, Ordering, coin_from_name, dft_coin,
                   grover_coin, hadamard2_coin, make_rotation_coin,
                   reorder_coin)
from .evolve import (Family, FieldPhase, RunResult, WalkSpec, run, step_1d,
                     step_alternate_2d, step_grover_like_2d)
from .observe import (Widths, WidthSeries, detect_periods, position_marginal,
                      rotate_frame_45, widths, write_width_csv)
from .rational import CFExpansion, convergent, expand, phase_to_rational
from .spectrum import (BandGrid, LemmaInput, band_grid_1d, band_grid_2d,
                       band_grid_alternate, circular_distance, phase_set_distance,
                       dft_dispersion_residual, dispersion_1d,
                       dispersion_alternate, dispersion_dft,
                       dispersion_hadamard2, effective_dispersion_1d,
                       eigenphases, lemma_trace_closed, lemma_trace_direct,
                       max_group_velocity_1d, momentum_unitary,
                       momentum_unitary_1d, momentum_unitary_2d,
                       momentum_unitary_alternate,
                       stroboscopic_dispersion_alternate, write_band_csv)
from .state import (WalkState1D, WalkState2D, new_localized_1d,
                    new_localized_2d, write_snapshot_csv)

__version__ = "0.1.0"

__all__ = [
    "CoinOperator", "Ordering", "coin_from_name", "dft_coin", "grover_coin",
    "hadamard2_coin", "make_rotation_coin", "reorder_coin",
    "Family", "FieldPhase", "RunResult", "WalkSpec", "run", "step_1d",
    "step_alternate_2d", "step_grover_like_2d",
    "Widths", "WidthSeries", "detect_periods", "position_marginal",
    "rotate_frame_45", "widths", "write_width_csv",
    "CFExpansion", "convergent", "expand", "phase_to_rational",
    "BandGrid", "LemmaInput", "band_grid_1d", "band_grid_2d",
    "band_grid_alternate", "circular_distance", "phase_set_distance",
    "dft_dispersion_residual",
    "dispersion_1d", "dispersion_alternate", "dispersion_dft",
    "dispersion_hadamard2", "effective_dispersion_1d", "eigenphases",
    "lemma_trace_closed", "lemma_trace_direct", "max_group_velocity_1d",
    "momentum_unitary", "momentum_unitary_1d", "momentum_unitary_2d",
    "momentum_unitary_alternate", "stroboscopic_dispersion_alternate",
    "write_band_csv",
    "WalkState1D", "WalkState2D", "new_localized_1d", "new_localized_2d",
    "write_snapshot_csv",
]
