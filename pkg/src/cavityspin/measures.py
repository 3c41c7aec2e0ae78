"""Figures of merit: spin moments, Wineland squeezing, fidelity, Husimi grids.

Lossy states arrive sub-normalized; expectation values are taken on the
normalized state while the lost fraction enters the squeezing parameter as an
extra N/4 variance per scattered qubit (the scattered atoms are maximally
mixed and never re-cohere).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .spin import css, n_qubits_of, spin_ops_cached

_MIN_SPIN_LENGTH = 1e-12


@dataclass(frozen=True)
class SpinMoments:
    mean_spin: tuple[float, float, float]
    spin_length: float
    theta: float
    phi: float
    min_perp_variance: float


@dataclass(frozen=True)
class SqueezingResult:
    xi2: float
    xi2_loss: float
    survival: float


def spin_moments(state: np.ndarray) -> SpinMoments:
    """Mean spin direction and the minimal transverse variance v_m.

    v_m = (C - sqrt(A^2 + B^2)) / 2 from the second moments along two
    orthonormal directions perpendicular to the mean spin; the result is
    independent of which transverse pair is chosen.  Expectations use the
    normalized state (loss is accounted separately).
    """
    n = n_qubits_of(state)
    norm = np.linalg.norm(state)
    if norm < 1e-12:
        raise ValueError("state has (near-)zero norm")
    psi = state / norm
    sx, sy, sz = spin_ops_cached(n)
    mean = np.array([np.vdot(psi, op @ psi).real for op in (sx, sy, sz)])
    slen = float(np.linalg.norm(mean))
    if slen < _MIN_SPIN_LENGTH:
        raise ValueError("mean spin length ~ 0: transverse directions undefined")
    theta = float(np.arccos(np.clip(mean[2] / slen, -1.0, 1.0)))
    phi = float(np.arctan2(mean[1], mean[0]))
    # orthonormal frame perpendicular to the mean spin
    e1 = np.array([np.cos(theta) * np.cos(phi), np.cos(theta) * np.sin(phi), -np.sin(theta)])
    e2 = np.array([-np.sin(phi), np.cos(phi), 0.0])
    s1 = e1[0] * sx + e1[1] * sy + e1[2] * sz
    s2 = e2[0] * sx + e2[1] * sy + e2[2] * sz
    v1 = s1 @ psi
    v2 = s2 @ psi
    c = float(np.vdot(v1, v1).real + np.vdot(v2, v2).real)
    a = float(np.vdot(v1, v1).real - np.vdot(v2, v2).real)
    b = float(2.0 * np.vdot(v1, v2).real)
    vm = 0.5 * (c - np.hypot(a, b))
    if vm < -1e-10:
        raise ValueError(f"negative transverse variance {vm}")
    vm = max(vm, 0.0)
    return SpinMoments(tuple(mean), slen, theta, phi, vm)


def wineland_xi2(state: np.ndarray) -> SqueezingResult:
    """Wineland squeezing parameter, with and without the loss correction.

    xi2 = N v_m / |<S>|^2 (unity for any coherent spin state); the
    loss-corrected variant adds (1 - survival) N / 4 to the variance, where
    survival = ||state||^2 is the unscattered fraction under non-Hermitian
    evolution.
    """
    n = n_qubits_of(state)
    survival = float(np.vdot(state, state).real)
    if survival > 1.0 + 1e-9:
        raise ValueError(f"state norm^2 = {survival} > 1: not a decaying evolution")
    if survival <= 0.0:
        raise ValueError("state has zero survival probability")
    mom = spin_moments(state)
    denom = mom.spin_length**2
    xi2 = n * mom.min_perp_variance / denom
    xi2_loss = n * (mom.min_perp_variance + (1.0 - min(survival, 1.0)) * n / 4.0) / denom
    return SqueezingResult(xi2=float(xi2), xi2_loss=float(xi2_loss), survival=survival)


def fidelity(state: np.ndarray, target: np.ndarray) -> float:
    """|<target|state>|^2 with the state taken as-is (loss lowers fidelity)."""
    if state.shape != target.shape:
        raise ValueError(f"dimension mismatch: {state.shape} vs {target.shape}")
    tnorm = np.linalg.norm(target)
    if abs(tnorm - 1.0) > 1e-6:
        raise ValueError(f"target must be normalized, got norm {tnorm}")
    return float(np.abs(np.vdot(target, state)) ** 2)


def husimi_grid(state: np.ndarray, n_theta: int, n_phi: int):
    """Husimi-Q function Q = (N+1)/(4 pi) |<css(theta, phi)|state>|^2 on a
    regular grid: theta at midpoints of [0, pi], phi uniform on [0, 2 pi).

    Returns (Q, thetas, phis) with Q shaped (n_theta, n_phi); the grid
    quadrature of Q over the sphere converges to ||state||^2.
    """
    if n_theta < 2 or n_phi < 2:
        raise ValueError(f"grid sizes must be >= 2, got {n_theta} x {n_phi}")
    n = n_qubits_of(state)
    thetas = (np.arange(n_theta) + 0.5) * np.pi / n_theta
    phis = np.arange(n_phi) * 2.0 * np.pi / n_phi
    # <css(theta,phi)|psi> = sum_n a_n(theta) e^{-i n phi} psi_n
    b = np.empty((n_theta, n + 1), dtype=complex)
    for i, th in enumerate(thetas):
        b[i] = css(n, th, 0.0) * state
    phases = np.exp(-1j * np.outer(phis, np.arange(n + 1)))
    overlaps = b @ phases.T
    q = (n + 1) / (4.0 * np.pi) * np.abs(overlaps) ** 2
    return q, thetas, phis


def husimi_integral(q: np.ndarray, thetas: np.ndarray, phis: np.ndarray) -> float:
    """Midpoint-rule quadrature of a Husimi grid over the sphere."""
    dtheta = np.pi / thetas.size
    dphi = 2.0 * np.pi / phis.size
    return float(np.sum(q * np.sin(thetas)[:, None]) * dtheta * dphi)


def write_husimi_csv(path, q, thetas, phis, n_qubits, metadata=None):
    """Write a Husimi grid as CSV: theta rows, phi columns, a comment header
    carrying the qubit number, grid spec, and any run metadata."""
    with open(path, "w", newline="") as fh:
        fh.write(f"# n_qubits={n_qubits}\n")
        fh.write(f"# n_theta={thetas.size} theta_grid=midpoint[0,pi]\n")
        fh.write(f"# n_phi={phis.size} phi_grid=uniform[0,2pi)\n")
        for key, value in (metadata or {}).items():
            fh.write(f"# {key}={value}\n")
        writer = csv.writer(fh)
        writer.writerow(["theta"] + [f"{p:.10g}" for p in phis])
        for th, row in zip(thetas, q):
            writer.writerow([f"{th:.10g}"] + [f"{v:.10g}" for v in row])


def read_husimi_csv(path):
    """Inverse of write_husimi_csv; returns (Q, thetas, phis, header_dict)."""
    header = {}
    rows = []
    with open(path, newline="") as fh:
        for line in fh:
            if line.startswith("#"):
                for token in line[1:].split():
                    if "=" in token:
                        key, val = token.split("=", 1)
                        header[key] = val
                continue
            rows.append(line)
    reader = csv.reader(rows)
    head = next(reader)
    phis = np.array([float(x) for x in head[1:]])
    thetas, q = [], []
    for row in reader:
        thetas.append(float(row[0]))
        q.append([float(x) for x in row[1:]])
    return np.array(q), np.array(thetas), phis, header
