"""Collective spin operators and coherent spin states in the Dicke basis.

N spin-1/2 qubits restricted to the symmetric subspace carry total spin
S = N/2, so states live in N+1 dimensions.  Basis index n counts qubits in
the upper level: n = 0 is all-down (S_z = -S), n = N is all-up (S_z = +S).

Unit conventions used throughout the package: angular frequencies in rad/us,
times in us, hbar = 1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import gammaln


def make_spin_ops(n_qubits: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return dense complex (N+1)x(N+1) matrices (S_x, S_y, S_z) for S = N/2.

    Ladder elements are the standard sqrt(S(S+1) - m(m +- 1)); S_z is diagonal
    with entries -S..+S ascending in the Dicke index n.
    """
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits}")
    s = n_qubits / 2.0
    m = np.arange(n_qubits + 1) - s
    # S_+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>: entry (n+1, n)
    ladder = np.sqrt(s * (s + 1) - m[:-1] * (m[:-1] + 1))
    sp = np.zeros((n_qubits + 1, n_qubits + 1), dtype=complex)
    sp[np.arange(1, n_qubits + 1), np.arange(n_qubits)] = ladder
    sx = (sp + sp.conj().T) / 2.0
    sy = (sp - sp.conj().T) / 2.0j
    sz = np.diag(m).astype(complex)
    return sx, sy, sz


@lru_cache(maxsize=64)
def spin_ops_cached(n_qubits: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Read-only cached spin operators, shared by the dynamics/metrics code."""
    ops = make_spin_ops(n_qubits)
    for op in ops:
        op.setflags(write=False)
    return ops


def spin_phi(sx: np.ndarray, sy: np.ndarray, phi: float) -> np.ndarray:
    """In-plane collective spin component S_x cos(phi) + S_y sin(phi)."""
    if sx.shape != sy.shape:
        raise ValueError(f"operator shapes differ: {sx.shape} vs {sy.shape}")
    return np.cos(phi) * sx + np.sin(phi) * sy


@lru_cache(maxsize=64)
def _sqrt_binomials(n_qubits: int) -> np.ndarray:
    """sqrt(C(N, n)) for n = 0..N, via log-gamma (stable up to N ~ 10^3)."""
    n = np.arange(n_qubits + 1)
    logc = gammaln(n_qubits + 1) - gammaln(n + 1) - gammaln(n_qubits - n + 1)
    out = np.exp(0.5 * logc)
    out.setflags(write=False)
    return out


def css(n_qubits: int, theta: float, phi: float) -> np.ndarray:
    """Coherent spin state pointing along (theta, phi) on the Bloch sphere.

    Amplitudes a_n = sqrt(C(N,n)) cos(theta/2)^(N-n) (sin(theta/2) e^{i phi})^n,
    so css(N, 0, .) is all-down and the mean spin is (N/2) * unit(theta, phi).
    Computed in log space to stay finite for large N.
    """
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits}")
    n = np.arange(n_qubits + 1)
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    amp = np.zeros(n_qubits + 1)
    if abs(s) < 1e-300:
        amp[0] = 1.0
    elif abs(c) < 1e-300:
        amp[-1] = 1.0
    else:
        logmag = (n_qubits - n) * np.log(abs(c)) + n * np.log(abs(s))
        amp = _sqrt_binomials(n_qubits) * np.exp(logmag)
        amp *= np.sign(c) ** (n_qubits - n) * np.sign(s) ** n
    state = amp * np.exp(1j * phi * n)
    return state / np.linalg.norm(state)


def all_down(n_qubits: int) -> np.ndarray:
    """Product state with every qubit in the lower level (Dicke index 0)."""
    state = np.zeros(n_qubits + 1, dtype=complex)
    state[0] = 1.0
    return state


def expect(op: np.ndarray, state: np.ndarray) -> complex:
    """<state| op |state> without normalizing."""
    return np.vdot(state, op @ state)


def n_qubits_of(state: np.ndarray) -> int:
    """Qubit number implied by a Dicke vector's length."""
    if state.ndim != 1 or state.size < 2:
        raise ValueError(f"not a Dicke vector: shape {state.shape}")
    return state.size - 1
