"""Protocol sequences: alternating trivial and non-trivial rotations.

A protocol is an ordered list of constant-generator steps acting on an
initial Dicke vector.  Trivial steps are bare global rotations; non-trivial
steps add a barrier Hamiltonian built from drive tones (or, in the idealized
unlimited-frequency case, from directly chosen diagonal shifts).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from . import cavity as cav
from .cavity import AcStarkHamiltonian, CavityParams, DriveTone
from .evolve import apply_nontrivial, apply_rotation
from .measures import wineland_xi2
from .spin import all_down, css

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"
HAMILTONIAN_MODES = ("ideal_diagonal", "single_tone", "multi_tone", "rb_two_channel")


@dataclass(frozen=True, eq=False)
class ProtocolStep:
    """One rotation (omega, phi, t) with optional barrier drive.

    kind 'trivial' has no drive at all; 'nontrivial' carries either tones
    (cavity modes) or an explicit diagonal (ideal_diagonal mode).
    """

    kind: str
    omega: float
    phi: float
    t: float
    tones: tuple[DriveTone, ...] = ()
    mode: str = "multi_tone"
    diagonal: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in (TRIVIAL, NONTRIVIAL):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.mode not in HAMILTONIAN_MODES:
            raise ValueError(f"unknown hamiltonian mode {self.mode!r}")
        if self.t < 0:
            raise ValueError(f"step duration must be >= 0, got {self.t}")
        if self.kind == TRIVIAL:
            if self.tones or self.diagonal is not None:
                raise ValueError("trivial steps carry no drive")
        elif self.mode == "ideal_diagonal":
            if self.diagonal is None:
                raise ValueError("ideal_diagonal steps need an explicit diagonal")
            if self.tones:
                raise ValueError("ideal_diagonal steps carry no tones")
        elif not self.tones:
            raise ValueError("non-trivial cavity steps need at least one tone")


def trivial_step(omega: float, phi: float, t: float) -> ProtocolStep:
    return ProtocolStep(kind=TRIVIAL, omega=omega, phi=phi, t=t)


def nontrivial_step(omega, phi, t, tones=(), mode="multi_tone", diagonal=None) -> ProtocolStep:
    return ProtocolStep(kind=NONTRIVIAL, omega=omega, phi=phi, t=t,
                        tones=tuple(tones), mode=mode, diagonal=diagonal)


@dataclass(frozen=True, eq=False)
class Protocol:
    """A pulse sequence on N qubits, with the cavity it runs in.

    lossless drops the scattering part of every barrier (idealized no-decay
    cavity with the same lineshapes); down_sign picks the sign of the
    hyperfine offset in the two-channel mode.
    """

    n_qubits: int
    steps: tuple[ProtocolStep, ...]
    cavity: CavityParams | None = None
    lossless: bool = False
    down_sign: int = 1

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        if not self.steps:
            raise ValueError("protocol needs at least one step")
        for step in self.steps:
            if step.kind == NONTRIVIAL and step.mode != "ideal_diagonal" and self.cavity is None:
                raise ValueError(f"step mode {step.mode!r} requires cavity parameters")
            if step.mode == "rb_two_channel" and step.kind == NONTRIVIAL \
                    and (self.cavity is None or self.cavity.omega_hf <= 0):
                raise ValueError("rb_two_channel mode requires omega_hf > 0")
            if step.diagonal is not None and step.diagonal.size != self.n_qubits + 1:
                raise ValueError("diagonal length must be n_qubits + 1")


def step_hamiltonian(step: ProtocolStep, protocol: Protocol) -> AcStarkHamiltonian | None:
    """Barrier Hamiltonian of one step (None for trivial steps)."""
    if step.kind == TRIVIAL:
        return None
    if step.mode == "ideal_diagonal":
        return cav.arbitrary_diagonal(step.diagonal)
    if step.mode == "single_tone":
        return cav.single_tone_hamiltonian(protocol.cavity, step.tones[0],
                                           protocol.n_qubits, protocol.lossless)
    if step.mode == "multi_tone":
        return cav.multi_tone_hamiltonian(protocol.cavity, step.tones,
                                          protocol.n_qubits, protocol.lossless)
    return cav.rb_hamiltonian(protocol.cavity, step.tones, protocol.n_qubits,
                              protocol.lossless, protocol.down_sign)


def run(protocol: Protocol, initial: np.ndarray | None = None) -> np.ndarray:
    """Fold the steps left-to-right; returns the final (possibly
    sub-normalized) state.  Default initial state is all-down."""
    state = all_down(protocol.n_qubits) if initial is None else np.asarray(initial, dtype=complex)
    if state.size != protocol.n_qubits + 1:
        raise ValueError("initial state dimension does not match n_qubits")
    for step in protocol.steps:
        if step.kind == TRIVIAL:
            state = apply_rotation(state, step.omega, step.phi, step.t)
        else:
            state = apply_nontrivial(state, step_hamiltonian(step, protocol),
                                     step.omega, step.phi, step.t)
    return state


# ----------------------------------------------------------------------------
# target states

def target_state(name: str, n_qubits: int, **params) -> np.ndarray:
    """Named target vectors in the Dicke basis.

    ghz:      (|n=0> + e^{i chi} |n=N>)/sqrt(2), chi optional (default 0)
    w:        |n=1> (single excitation)
    dicke_m:  |S_z = m> with m integer-offset from -N/2 (default m=0)
    lantern:  equal superposition of the four indices k N/5, k = 1..4
    css_spec: coherent state at (theta, phi)
    """
    vec = np.zeros(n_qubits + 1, dtype=complex)
    if name == "ghz":
        chi = params.pop("chi", 0.0)
        vec[0] = 1.0 / np.sqrt(2.0)
        vec[-1] = np.exp(1j * chi) / np.sqrt(2.0)
    elif name == "w":
        if n_qubits < 1:
            raise ValueError("w state needs n_qubits >= 1")
        vec[1] = 1.0
    elif name == "dicke_m":
        m = params.pop("m", 0)
        idx = m + n_qubits / 2.0
        if idx != int(idx) or not 0 <= int(idx) <= n_qubits:
            raise ValueError(f"S_z = {m} is not a Dicke level of N = {n_qubits}")
        vec[int(idx)] = 1.0
    elif name == "lantern":
        if n_qubits % 5 != 0:
            raise ValueError("lantern state needs n_qubits divisible by 5")
        for k in range(1, 5):
            vec[k * n_qubits // 5] = 0.5
    elif name == "css_spec":
        vec = css(n_qubits, params.pop("theta"), params.pop("phi", 0.0))
    else:
        raise ValueError(f"unknown target state {name!r}")
    if params:
        raise ValueError(f"unused target parameters: {sorted(params)}")
    return vec


def ghz_fidelity_free_phase(state: np.ndarray) -> tuple[float, float]:
    """Best fidelity to (|0> + e^{i chi} |N>)/sqrt(2) over the relative phase
    chi, and the optimizing chi.  The optimum aligns chi with the state's own
    edge-amplitude phases."""
    a0, aN = state[0], state[-1]
    chi = float(np.angle(aN) - np.angle(a0))
    fid = 0.5 * (np.abs(a0) + np.abs(aN)) ** 2
    return float(fid), chi


# ----------------------------------------------------------------------------
# intensity-noise Monte Carlo

@dataclass(frozen=True)
class NoiseSpec:
    """Relative intensity noise: every tone's delta_ac (and every explicit
    diagonal) is scaled by 1 + eps per trial, eps Gaussian truncated at
    +-4 sigma, independent across tones and steps."""

    relative_intensity_sigma: float
    n_trials: int
    seed: int = 0

    def __post_init__(self):
        if self.relative_intensity_sigma < 0:
            raise ValueError("sigma must be >= 0")
        if self.n_trials < 1:
            raise ValueError("n_trials must be >= 1")


@dataclass(frozen=True)
class NoiseStats:
    mean: float
    std: float
    values: np.ndarray
    noiseless: float


def _truncated_normal(rng: np.random.Generator, sigma: float) -> float:
    while True:
        eps = rng.normal(0.0, sigma)
        if abs(eps) <= 4.0 * sigma:
            return eps


def _perturb_protocol(protocol: Protocol, rng: np.random.Generator, sigma: float) -> Protocol:
    steps = []
    for step in protocol.steps:
        if step.kind == TRIVIAL:
            steps.append(step)
            continue
        if step.mode == "ideal_diagonal":
            scale = 1.0 + _truncated_normal(rng, sigma)
            steps.append(replace(step, diagonal=step.diagonal * scale))
        else:
            tones = tuple(
                DriveTone(t.delta, t.delta_ac * (1.0 + _truncated_normal(rng, sigma)))
                for t in step.tones
            )
            steps.append(replace(step, tones=tones))
    return replace(protocol, steps=tuple(steps))


def run_noisy(protocol: Protocol, noise: NoiseSpec,
              initial: np.ndarray | None = None) -> NoiseStats:
    """Monte-Carlo distribution of the loss-corrected squeezing parameter
    under drive-intensity fluctuations.  Trial k is seeded by (seed, k), so
    results are reproducible regardless of execution order."""
    if not any(s.kind == NONTRIVIAL for s in protocol.steps):
        raise ValueError("run_noisy needs at least one non-trivial step")
    values = np.empty(noise.n_trials)
    for k in range(noise.n_trials):
        rng = np.random.default_rng([noise.seed, k])
        trial = _perturb_protocol(protocol, rng, noise.relative_intensity_sigma)
        values[k] = wineland_xi2(run(trial, initial)).xi2_loss
    noiseless = wineland_xi2(run(protocol, initial)).xi2_loss
    return NoiseStats(mean=float(values.mean()), std=float(values.std()),
                      values=values, noiseless=noiseless)


# ----------------------------------------------------------------------------
# squeezing-vs-time scan

@dataclass(frozen=True)
class TimeScan:
    times: np.ndarray
    xi2: np.ndarray
    t_best: float
    xi2_best: float
    width: float          # extent of the contiguous xi2 < 1 window around t_best


def xi2_time_scan(protocol: Protocol, t_grid, step_index: int | None = None) -> TimeScan:
    """Evaluate xi2_loss while sweeping one step's duration over t_grid.

    Defaults to the last non-trivial step.  The steps before the swept one are
    evolved once and reused.  The squeezing window width is the contiguous
    region around the minimum where xi2 < 1, with linearly interpolated edges.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.size == 0:
        raise ValueError("t_grid must be nonempty")
    if step_index is None:
        nontriv = [i for i, s in enumerate(protocol.steps) if s.kind == NONTRIVIAL]
        if not nontriv:
            raise ValueError("no non-trivial step to scan")
        step_index = nontriv[-1]
    prefix = Protocol(protocol.n_qubits, protocol.steps[:step_index] or
                      (trivial_step(0.0, 0.0, 0.0),), protocol.cavity,
                      protocol.lossless, protocol.down_sign)
    state0 = run(prefix)
    swept = protocol.steps[step_index]
    suffix = protocol.steps[step_index + 1:]
    xi2 = np.empty_like(t_grid)
    for i, t in enumerate(t_grid):
        tail = Protocol(protocol.n_qubits, (replace(swept, t=float(t)),) + suffix,
                        protocol.cavity, protocol.lossless, protocol.down_sign)
        xi2[i] = wineland_xi2(run(tail, state0)).xi2_loss
    i_best = int(np.argmin(xi2))
    width = _window_width(t_grid, xi2, i_best, level=1.0)
    return TimeScan(times=t_grid, xi2=xi2, t_best=float(t_grid[i_best]),
                    xi2_best=float(xi2[i_best]), width=width)


def _window_width(times, values, i_best, level):
    if values[i_best] >= level:
        return 0.0
    lo = i_best
    while lo > 0 and values[lo - 1] < level:
        lo -= 1
    hi = i_best
    while hi < values.size - 1 and values[hi + 1] < level:
        hi += 1
    t_lo = times[lo]
    if lo > 0:
        frac = (level - values[lo - 1]) / (values[lo] - values[lo - 1])
        t_lo = times[lo - 1] + frac * (times[lo] - times[lo - 1])
    t_hi = times[hi]
    if hi < values.size - 1:
        frac = (level - values[hi + 1]) / (values[hi] - values[hi + 1])
        t_hi = times[hi + 1] - frac * (times[hi + 1] - times[hi])
    return float(t_hi - t_lo)
