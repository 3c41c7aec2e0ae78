"""Cavity transmission and frequency-selective AC-Stark barrier Hamiltonians.

A drive tone detuned by delta from the bare cavity resonance builds up
intracavity intensity only when the collective spin state shifts the
resonance onto the tone: each upper-level qubit pulls the cavity by
omega_s = g^2 / delta_e.  The resulting per-Dicke-state energy shift is
diagonal in the Dicke basis, with a negative imaginary part encoding photon
scattering through the atomic linewidth.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class CavityParams:
    """Physical constants of the resonator-qubit system (rad/us units).

    g:        vacuum Rabi half-frequency
    kappa:    cavity linewidth
    gamma:    atomic excited-state decay rate
    delta_e:  detuning of the upper ground state from the excited state
    omega_hf: splitting of the two ground states (0 disables the lower-state
              light-shift channel)
    eta, omega_s are derived (4 g^2 / (gamma kappa) and g^2 / delta_e) and
    kept as fields so configs echo the values actually used.
    """

    g: float
    kappa: float
    gamma: float
    delta_e: float
    omega_hf: float
    eta: float
    omega_s: float

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError(f"kappa must be > 0, got {self.kappa}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if self.delta_e == 0:
            raise ValueError("delta_e must be nonzero")
        if self.gamma > 0:
            eta_ref = 4.0 * self.g**2 / (self.gamma * self.kappa)
            if abs(self.eta - eta_ref) > 1e-9 * max(abs(eta_ref), 1.0):
                raise ValueError(
                    f"inconsistent eta: stored {self.eta}, derived {eta_ref}"
                )
        elif not np.isinf(self.eta):
            raise ValueError("gamma = 0 requires eta = inf")
        ws_ref = self.g**2 / self.delta_e
        if abs(self.omega_s - ws_ref) > 1e-9 * max(abs(ws_ref), 1e-30):
            raise ValueError(
                f"inconsistent omega_s: stored {self.omega_s}, derived {ws_ref}"
            )

    @classmethod
    def from_g(cls, g, kappa, gamma, delta_e, omega_hf=0.0) -> "CavityParams":
        eta = 4.0 * g**2 / (gamma * kappa) if gamma > 0 else np.inf
        return cls(g, kappa, gamma, delta_e, omega_hf, eta, g**2 / delta_e)

    @classmethod
    def from_cooperativity(cls, eta, gamma, delta_e, kappa, omega_hf=0.0) -> "CavityParams":
        if gamma <= 0 or eta <= 0:
            raise ValueError("from_cooperativity needs gamma > 0 and eta > 0")
        g = np.sqrt(eta * gamma * kappa / 4.0)
        return cls(g, kappa, gamma, delta_e, omega_hf, eta, g**2 / delta_e)

    def with_detuning(self, delta_e: float) -> "CavityParams":
        """Same cavity and atom, different drive detuning (eta unchanged)."""
        return replace(self, delta_e=delta_e, omega_s=self.g**2 / delta_e)


@dataclass(frozen=True)
class DriveTone:
    """One drive frequency: detuning delta from the bare cavity resonance and
    the per-qubit shift magnitude delta_ac it targets at its resonant Dicke
    state.  delta is typically n0 * omega_s; delta_ac may take either sign."""

    delta: float
    delta_ac: float


def tone_at_index(params: CavityParams, n0: float, delta_ac: float) -> DriveTone:
    """Tone resonant with the Dicke state holding n0 upper-level qubits
    (n0 need not be an integer; the profile is smooth in it)."""
    return DriveTone(delta=n0 * params.omega_s, delta_ac=delta_ac)


@dataclass(frozen=True, eq=False)
class AcStarkHamiltonian:
    """Diagonal (in the Dicke basis) light-shift Hamiltonian.

    diag[n] is the complex shift of the state with n upper-level qubits;
    Im(diag) <= 0 always (scattering decays, never amplifies)."""

    diag: np.ndarray
    tones: tuple[DriveTone, ...]

    def __post_init__(self):
        self.diag.setflags(write=False)

    @property
    def n_qubits(self) -> int:
        return self.diag.size - 1

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.diag)


def transmission(params: CavityParams, delta: float, n_up) -> complex:
    """Cavity amplitude transmission with n_up qubits in the upper level.

    Equals 1 / (1 + n eta L - 2i [delta/kappa - n eta L (delta_e+delta)/gamma])
    with L the atomic Lorentzian 1 / (1 + 4 (delta_e+delta)^2 / gamma^2),
    rewritten in terms of g so the gamma -> 0 limit stays finite.  n_up may be
    a float or an array and need not be an integer.
    """
    d = params.delta_e + delta
    denom_at = params.gamma**2 + 4.0 * d**2
    absorb = 4.0 * params.g**2 * params.gamma / (params.kappa * denom_at)
    disperse = 4.0 * params.g**2 * d / (params.kappa * denom_at)
    n_up = np.asarray(n_up, dtype=float)
    out = 1.0 / (
        1.0 + n_up * absorb - 2.0j * (delta / params.kappa - n_up * disperse)
    )
    return complex(out) if out.ndim == 0 else out


def _tone_scale(params: CavityParams, tone: DriveTone, delta_eff: float,
                shift_ratio: float, lossless: bool) -> complex:
    """Complex prefactor C for one tone and one ground-state channel.

    Normalized so the per-qubit shift at the tone's resonant index equals
    delta_ac * shift_ratio; scattering enters as -i |shift| gamma / (2 |Delta|)
    regardless of the barrier's sign.
    """
    n_res = tone.delta / params.omega_s
    t0 = abs(transmission(params, tone.delta, n_res)) ** 2
    if not np.isfinite(t0) or t0 <= 0.0:
        raise ValueError(
            f"degenerate tone normalization |T|^2 = {t0} at delta = {tone.delta}"
        )
    shift = tone.delta_ac * shift_ratio
    c = complex(shift)
    if not lossless and params.gamma > 0:
        c -= 1j * abs(shift) * params.gamma / (2.0 * abs(delta_eff))
    return c / t0


def single_tone_hamiltonian(params: CavityParams, tone: DriveTone,
                            n_qubits: int, lossless: bool = False) -> AcStarkHamiltonian:
    """Barrier from one drive tone: diag[n] = C n |T(delta, n)|^2.

    lossless drops the scattering part of C (the profile shape is unchanged);
    used for idealized no-decay studies.
    """
    n = np.arange(n_qubits + 1)
    profile = n * np.abs(transmission(params, tone.delta, n)) ** 2
    c = _tone_scale(params, tone, params.delta_e, 1.0, lossless)
    return AcStarkHamiltonian(diag=c * profile, tones=(tone,))


def multi_tone_hamiltonian(params: CavityParams, tones, n_qubits: int,
                           lossless: bool = False) -> AcStarkHamiltonian:
    """Sum of single-tone barriers, one per drive frequency."""
    tones = tuple(tones)
    if not tones:
        raise ValueError("multi_tone_hamiltonian needs at least one tone")
    diag = np.zeros(n_qubits + 1, dtype=complex)
    for tone in tones:
        diag = diag + single_tone_hamiltonian(params, tone, n_qubits, lossless).diag
    return AcStarkHamiltonian(diag=diag, tones=tones)


def arbitrary_diagonal(shifts) -> AcStarkHamiltonian:
    """Idealized barrier with directly chosen diagonal entries (no loss
    attached); models the unlimited-frequency limit of the drive."""
    shifts = np.asarray(shifts, dtype=float)
    if shifts.ndim != 1 or shifts.size < 2:
        raise ValueError(f"shifts must be a real vector of length N+1, got shape {shifts.shape}")
    return AcStarkHamiltonian(diag=shifts.astype(complex), tones=())


def rb_hamiltonian(params: CavityParams, tones, n_qubits: int,
                   lossless: bool = False, down_sign: int = 1) -> AcStarkHamiltonian:
    """Two-ground-state barrier: upper channel plus the far-detuned lower
    channel with effective detuning delta_e + omega_hf and weight (N - n).

    The lower-channel per-qubit shift scales by delta_e / (delta_e + omega_hf)
    relative to delta_ac (same intracavity intensity, larger detuning).
    down_sign = -1 flips the hyperfine offset for the opposite level ordering.
    """
    if params.omega_hf <= 0:
        raise ValueError(
            "rb_hamiltonian requires omega_hf > 0; use multi_tone_hamiltonian "
            "for a single ground-state channel"
        )
    tones = tuple(tones)
    up = multi_tone_hamiltonian(params, tones, n_qubits, lossless)
    delta_down = params.delta_e + down_sign * params.omega_hf
    if delta_down == 0:
        raise ValueError("lower-channel detuning vanished (delta_e == -omega_hf)")
    n = np.arange(n_qubits + 1)
    diag = up.diag.copy()
    for tone in tones:
        profile = (n_qubits - n) * np.abs(transmission(params, tone.delta, n)) ** 2
        c = _tone_scale(params, tone, delta_down,
                        params.delta_e / delta_down, lossless)
        diag += c * profile
    return AcStarkHamiltonian(diag=diag, tones=tones)
