"""Collective-spin entanglement in a lossy resonator.

Dicke-basis simulation of N spin-1/2 qubits whose Hilbert-space ladder is
split by frequency-selective light shifts, plus the optimization machinery
that turns global rotations against those barriers into squeezed, GHZ, W,
Dicke, and arbitrary symmetric target states.
"""

from .cavity import (
    AcStarkHamiltonian,
    CavityParams,
    DriveTone,
    arbitrary_diagonal,
    multi_tone_hamiltonian,
    rb_hamiltonian,
    single_tone_hamiltonian,
    tone_at_index,
    transmission,
)
from .evolve import Propagator, apply_nontrivial, apply_rotation, expm
from .measures import (
    SpinMoments,
    SqueezingResult,
    fidelity,
    husimi_grid,
    husimi_integral,
    spin_moments,
    wineland_xi2,
    write_husimi_csv,
)
from .optimize import (
    BaselineResult,
    OptimizationError,
    OptimizationResult,
    OptimizationSpec,
    ParamSpec,
    ScalingFit,
    baseline_oat_tat,
    extrapolate_and_refine,
    fit_parameter_trends,
    fit_scaling,
    optimize,
)
from .lie import commutator_span_rank, gell_mann_basis, span_report
from .protocols import (
    NoiseSpec,
    NoiseStats,
    Protocol,
    ProtocolStep,
    TimeScan,
    ghz_fidelity_free_phase,
    nontrivial_step,
    run,
    run_noisy,
    target_state,
    trivial_step,
    xi2_time_scan,
)
from .spin import all_down, css, make_spin_ops, spin_phi

__version__ = "0.1.0"
