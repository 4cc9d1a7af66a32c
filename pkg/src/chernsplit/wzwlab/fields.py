"""Group-valued and gauge fields on the lattice, and the Karabali-Nair map."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from .lattice import (
    GENERATORS,
    IDENTITY,
    LatticeGrid,
    algebra_field,
    commutator,
    dagger,
    det,
    dz,
    dzbar,
    expm_traceless,
    inv,
)

FIELD_CLASSES = ("SL2C", "PositiveHermitian", "SU2")

# low Fourier modes used for random smooth fields
_MODES = ((0, 0), (1, 0), (0, 1), (1, 1), (1, -1))


@dataclass(frozen=True, eq=False)
class LatticeGroupField:
    grid: LatticeGrid
    values: np.ndarray
    field_class: str = "SL2C"

    def __post_init__(self) -> None:
        if self.field_class not in FIELD_CLASSES:
            raise DomainError(f"field class must be one of {FIELD_CLASSES}")
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.nx, self.grid.ny, 2, 2):
            raise DomainError(f"values must have shape {(self.grid.nx, self.grid.ny, 2, 2)}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def det_residual(self) -> float:
        return float(np.max(np.abs(det(self.values) - 1.0)))

    def unitarity_residual(self) -> float:
        return float(np.max(np.abs(dagger(self.values) @ self.values - IDENTITY)))

    def __matmul__(self, other: "LatticeGroupField") -> "LatticeGroupField":
        if other.grid != self.grid:
            raise DomainError("mismatched grids")
        cls = self.field_class if self.field_class == other.field_class == "SU2" else "SL2C"
        return LatticeGroupField(self.grid, self.values @ other.values, cls)

    def dagger(self) -> "LatticeGroupField":
        return LatticeGroupField(self.grid, dagger(self.values), self.field_class)

    def inverse(self) -> "LatticeGroupField":
        return LatticeGroupField(self.grid, inv(self.values), self.field_class)


def identity_field(grid: LatticeGrid) -> LatticeGroupField:
    return LatticeGroupField(grid, np.broadcast_to(IDENTITY, (grid.nx, grid.ny, 2, 2)).copy(), "SU2")


def constant_field(grid: LatticeGrid, matrix: np.ndarray, field_class: str = "SL2C") -> LatticeGroupField:
    return LatticeGroupField(grid, np.broadcast_to(np.asarray(matrix, complex), (grid.nx, grid.ny, 2, 2)).copy(), field_class)


def random_algebra_coefficients(
    grid: LatticeGrid, amplitude: float, seed: int, complex_valued: bool = False
) -> np.ndarray:
    """Smooth random coefficient field ``c_a(x)`` of shape ``(nx, ny, 3)``.

    A fixed set of low Fourier modes with seeded Gaussian amplitudes. The
    draw does not depend on the grid, so the same seed describes the same
    continuum field at every resolution. Scaled so that the triangle bound
    ``sum |mode amplitude|`` equals ``amplitude``.
    """
    rng = np.random.default_rng(seed)
    shape = (len(_MODES), 2, 3)
    amps = rng.standard_normal(shape)
    if complex_valued:
        amps = amps + 1j * rng.standard_normal(shape)
    bound = np.sum(np.linalg.norm(amps, axis=-1))
    amps = amps * (amplitude / bound)
    x, y = grid.coordinates()
    out = np.zeros((grid.nx, grid.ny, 3), dtype=complex if complex_valued else float)
    for (m, n), (ac, as_) in zip(_MODES, amps):
        phase = 2.0 * np.pi * (m * x + n * y)
        out += np.cos(phase)[..., None] * ac + np.sin(phase)[..., None] * as_
    return out


def random_field(
    grid: LatticeGrid, field_class: str, amplitude: float, seed: int
) -> LatticeGroupField:
    """``exp(X)`` for a random smooth traceless ``X`` with spectral norm <= amplitude.

    ``X`` is Hermitian for ``PositiveHermitian``, anti-Hermitian for ``SU2``
    and a general complex combination of Pauli matrices for ``SL2C``.
    Deterministic in ``seed``.
    """
    if field_class not in FIELD_CLASSES:
        raise DomainError(f"field class must be one of {FIELD_CLASSES}")
    if not 0 < amplitude <= 1:
        raise DomainError(f"amplitude must lie in (0, 1], got {amplitude}")
    if field_class == "SL2C":
        # |c|-weighted bound on sum c_a sigma_a: spectral norm <= sum_a |c_a| <= sqrt(3) * |c|
        c = random_algebra_coefficients(grid, amplitude / np.sqrt(3.0), seed, complex_valued=True)
        x = algebra_field(c)
    else:
        c = random_algebra_coefficients(grid, amplitude, seed)
        x = algebra_field(c)
        if field_class == "SU2":
            x = 1j * x
    return LatticeGroupField(grid, expm_traceless(x), field_class)


def random_algebra_field(grid: LatticeGrid, amplitude: float, seed: int) -> np.ndarray:
    """Real-coefficient su(2) field ``eps^a t_a`` (anti-Hermitian)."""
    c = random_algebra_coefficients(grid, amplitude, seed)
    return np.einsum("...a,aij->...ij", c, GENERATORS)


@dataclass(frozen=True, eq=False)
class LatticeGaugeField:
    """``a_zbar`` and ``a_z`` components; ``script_a_z`` when built from ``U``.

    For a field ``U``: ``a_zbar = -d_zbar U U^-1``,
    ``a_z = (U^dagger)^-1 d_z U^dagger`` and ``script_a_z = -d_z U U^-1``.
    """

    grid: LatticeGrid
    a_zbar: np.ndarray
    a_z: np.ndarray
    script_a_z: np.ndarray | None = None


def kn_fields(u: LatticeGroupField) -> LatticeGaugeField:
    """Karabali-Nair gauge fields of ``U`` by central differences."""
    g = u.grid
    uv = u.values
    u_inv = inv(uv)
    ud = dagger(uv)
    a_zbar = -dzbar(uv, g) @ u_inv
    script = -dz(uv, g) @ u_inv
    a_z = inv(ud) @ dz(ud, g)
    return LatticeGaugeField(g, a_zbar, a_z, script)


def flatness_combination(a: LatticeGaugeField) -> np.ndarray:
    """``d_z A_zbar - d_zbar script_A_z + [script_A_z, A_zbar]`` at every site."""
    if a.script_a_z is None:
        raise DomainError("flatness needs the script_a_z component (use kn_fields)")
    g = a.grid
    return dz(a.a_zbar, g) - dzbar(a.script_a_z, g) + commutator(a.script_a_z, a.a_zbar)


def flatness_residual(a: LatticeGaugeField) -> float:
    """Max-norm over sites and entries of the flatness combination."""
    return float(np.max(np.abs(flatness_combination(a))))


def gauge_field_from_components(grid: LatticeGrid, a1: np.ndarray, a2: np.ndarray) -> LatticeGaugeField:
    """Gauge field from Cartesian coordinates ``A_i^a`` (arrays ``(nx, ny, 3)``).

    ``A_z = (A_1 - i A_2) / 2`` and ``A_zbar = (A_1 + i A_2) / 2``, matching
    ``d_z``. Real coordinates give an anti-Hermitian su(2) field.
    """
    m1 = np.einsum("...a,aij->...ij", a1, GENERATORS)
    m2 = np.einsum("...a,aij->...ij", a2, GENERATORS)
    return LatticeGaugeField(grid, 0.5 * (m1 + 1j * m2), 0.5 * (m1 - 1j * m2))
