"""Periodic grids, central differences, and per-site 2x2 matrix algebra.

Fields are numpy arrays of shape ``(nx, ny, 2, 2)`` (matrix fields) or
``(nx, ny)`` (scalars) on the unit torus. ``z = x1 + i x2`` with
``d_z = (d_1 - i d_2) / 2`` and ``d_zbar = (d_1 + i d_2) / 2``; the area
element is ``dx1 dx2``. All derivatives are second-order central
differences and all integrals trapezoidal (a plain sum on a periodic grid).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
# anti-Hermitian su(2) generators, Tr(t_a t_b) = -delta_ab / 2
GENERATORS = -0.5j * SIGMA
IDENTITY = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class LatticeGrid:
    nx: int
    ny: int

    def __post_init__(self) -> None:
        for name, n in (("nx", self.nx), ("ny", self.ny)):
            if isinstance(n, bool) or int(n) != n:
                raise DomainError(f"{name} must be an integer")
            if n < 8 or n % 2:
                raise DomainError(f"{name} must be even and >= 8, got {n}")

    @classmethod
    def square(cls, n: int) -> "LatticeGrid":
        return cls(n, n)

    @property
    def hx(self) -> float:
        return 1.0 / self.nx

    @property
    def hy(self) -> float:
        return 1.0 / self.ny

    @property
    def cell_area(self) -> float:
        return self.hx * self.hy

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        x = np.arange(self.nx) * self.hx
        y = np.arange(self.ny) * self.hy
        return np.meshgrid(x, y, indexing="ij")

    def refined(self) -> "LatticeGrid":
        return LatticeGrid(2 * self.nx, 2 * self.ny)


def d1(f: np.ndarray, grid: LatticeGrid) -> np.ndarray:
    return (np.roll(f, -1, axis=0) - np.roll(f, 1, axis=0)) / (2.0 * grid.hx)


def d2(f: np.ndarray, grid: LatticeGrid) -> np.ndarray:
    return (np.roll(f, -1, axis=1) - np.roll(f, 1, axis=1)) / (2.0 * grid.hy)


def dz(f: np.ndarray, grid: LatticeGrid) -> np.ndarray:
    return 0.5 * (d1(f, grid) - 1j * d2(f, grid))


def dzbar(f: np.ndarray, grid: LatticeGrid) -> np.ndarray:
    return 0.5 * (d1(f, grid) + 1j * d2(f, grid))


def integrate(f: np.ndarray, grid: LatticeGrid):
    """Sum over sites times the cell area (exact order: row sums, then total)."""
    return np.sum(np.sum(f, axis=1), axis=0) * grid.cell_area


def trace(m: np.ndarray) -> np.ndarray:
    return m[..., 0, 0] + m[..., 1, 1]


def det(m: np.ndarray) -> np.ndarray:
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def inv(m: np.ndarray) -> np.ndarray:
    dt = det(m)
    if np.any(np.abs(dt) < 1e-14):
        raise DomainError("singular site: matrix not invertible")
    out = np.empty_like(m)
    out[..., 0, 0] = m[..., 1, 1]
    out[..., 1, 1] = m[..., 0, 0]
    out[..., 0, 1] = -m[..., 0, 1]
    out[..., 1, 0] = -m[..., 1, 0]
    return out / dt[..., None, None]


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def algebra_field(coeffs: np.ndarray) -> np.ndarray:
    """``sum_a c_a sigma_a`` for ``coeffs`` of shape ``(..., 3)``."""
    return np.einsum("...a,aij->...ij", coeffs, SIGMA)


def components(m: np.ndarray) -> np.ndarray:
    """Coordinates ``M^a`` with ``M = M^a t_a`` (``t_a = -i sigma_a / 2``)."""
    return 1j * np.einsum("aij,...ji->...a", SIGMA, m)


def _sinhc(s: np.ndarray) -> np.ndarray:
    small = np.abs(s) < 1e-4
    safe = np.where(small, 1.0, s)
    s2 = s * s
    return np.where(small, 1.0 + s2 / 6.0 + s2 * s2 / 120.0, np.sinh(safe) / safe)


def expm_traceless(x: np.ndarray) -> np.ndarray:
    """Exponential of traceless 2x2 matrices: ``cosh(s) + sinh(s)/s X`` with ``s^2 = -det X``."""
    s = np.sqrt(-det(x) + 0j)
    return np.cosh(s)[..., None, None] * IDENTITY + _sinhc(s)[..., None, None] * x


def logm_unimodular(h: np.ndarray) -> np.ndarray:
    """Principal logarithm of unimodular 2x2 matrices (traceless result).

    Fails when an eigenvalue lies on the closed negative real axis, where
    the principal logarithm is not defined.
    """
    half_tr = 0.5 * trace(h)
    if np.any((np.abs(half_tr.imag) < 1e-12) & (half_tr.real <= -1.0 + 1e-12)):
        raise DomainError("field outside principal-log domain")
    s = np.arccosh(half_tr + 0j)
    # principal branch: eigenvalue exp(s) with |Im s| < pi; arccosh gives Im s in [0, pi]
    if np.any(np.abs(np.abs(s.imag) - np.pi) < 1e-12):
        raise DomainError("field outside principal-log domain")
    x = (h - half_tr[..., None, None] * IDENTITY) / _sinhc(s)[..., None, None]
    return x
