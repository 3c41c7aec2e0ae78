"""Reachability certificate: nested commutators of collective rotations with
diagonal barriers span the full traceless-Hermitian algebra on N+1 levels.

The executable check vectorizes the single-level projectors Z_m (traceless
part) together with the commutators [S_x^k, Z_m], [S_y^k, Z_m] up to a given
order and counts the numerical rank; full rank (N+1)^2 - 1 certifies that
barrier-plus-rotation sequences generate every symmetric unitary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spin import spin_ops_cached


@dataclass(frozen=True)
class GellMannBasis:
    """Generalized Gell-Mann generators of su(d): the symmetric and
    antisymmetric off-diagonal pairs plus the d-1 traceless diagonals."""

    n_dim: int
    symmetric: tuple
    antisymmetric: tuple
    diagonal: tuple

    def all(self) -> tuple:
        return self.symmetric + self.antisymmetric + self.diagonal


def gell_mann_basis(n_dim: int) -> GellMannBasis:
    """Construct all (n_dim^2 - 1) generators; the diagonal class is
    sqrt(2/(m(m-1))) (sum_{j<m} E_jj - (m-1) E_mm) for m = 2..n_dim."""
    if n_dim < 2:
        raise ValueError(f"n_dim must be >= 2, got {n_dim}")
    sym, asym, diag = [], [], []
    for j in range(n_dim):
        for k in range(j + 1, n_dim):
            m_s = np.zeros((n_dim, n_dim), dtype=complex)
            m_s[j, k] = m_s[k, j] = 1.0
            sym.append(m_s)
            m_a = np.zeros((n_dim, n_dim), dtype=complex)
            m_a[j, k] = -1.0j
            m_a[k, j] = 1.0j
            asym.append(m_a)
    for m in range(2, n_dim + 1):
        d = np.zeros(n_dim)
        d[: m - 1] = 1.0
        d[m - 1] = -(m - 1)
        diag.append(np.diag(d * np.sqrt(2.0 / (m * (m - 1)))).astype(complex))
    return GellMannBasis(n_dim=n_dim, symmetric=tuple(sym),
                         antisymmetric=tuple(asym), diagonal=tuple(diag))


def _vectorize(mats) -> np.ndarray:
    """Stack Hermitian matrices as real vectors (Re and Im parts)."""
    rows = [np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in mats]
    return np.asarray(rows)


def _level_projectors(n_dim: int):
    """Z_m with a single 1 on the diagonal, traceless-projected."""
    eye = np.eye(n_dim) / n_dim
    out = []
    for m in range(n_dim):
        z = np.zeros((n_dim, n_dim))
        z[m, m] = 1.0
        out.append((z - eye).astype(complex))
    return out


def commutator_span_rank(n_qubits: int, max_order: int) -> tuple[int, bool]:
    """Rank of span{Z_m, [S_x^k, Z_m], [S_y^k, Z_m] : k <= max_order} inside
    su(N+1); spanned is True when the rank reaches (N+1)^2 - 1.

    Commutators of Hermitian matrices are anti-Hermitian, so they enter
    multiplied by i; singular values below 1e-9 of the largest are treated
    as zero.
    """
    if n_qubits < 1 or max_order < 1:
        raise ValueError("need n_qubits >= 1 and max_order >= 1")
    d = n_qubits + 1
    sx, sy, _ = spin_ops_cached(n_qubits)
    zs = _level_projectors(d)
    mats = list(zs)
    for s in (sx, sy):
        power = np.eye(d, dtype=complex)
        for _ in range(max_order):
            power = power @ s
            for z in zs:
                mats.append(1j * (power @ z - z @ power))
    stacked = _vectorize(mats)
    svals = np.linalg.svd(stacked, compute_uv=False)
    rank = int(np.sum(svals > 1e-9 * svals[0]))
    return rank, rank == d * d - 1


def first_order_commutators(n_qubits: int):
    """The [S_x, Z_m] and [S_y, Z_m] set (times i), for band-structure checks."""
    d = n_qubits + 1
    sx, sy, _ = spin_ops_cached(n_qubits)
    out = []
    for s in (sx, sy):
        for z in _level_projectors(d):
            out.append(1j * (s @ z - z @ s))
    return out


@dataclass(frozen=True)
class SpanReportRow:
    n_qubits: int
    max_order: int
    rank: int
    target: int
    spanned: bool


def span_report(n_max: int, max_order: int | None = None) -> list[SpanReportRow]:
    """Rank table for N = 1..n_max; max_order defaults to N per row."""
    rows = []
    for n in range(1, n_max + 1):
        k = max_order if max_order is not None else n
        rank, spanned = commutator_span_rank(n, k)
        rows.append(SpanReportRow(n, k, rank, (n + 1) ** 2 - 1, spanned))
    return rows
