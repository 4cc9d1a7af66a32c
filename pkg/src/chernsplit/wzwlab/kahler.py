"""Kähler potentials and symplectic pairings of CS, TMYM and YM.

Complex components follow the lattice convention ``A_z = (A_1 - i A_2) / 2``.
Every identity checked here is invariant under ``z <-> zbar``, so the
choice of convention does not affect any result.
Algebra coordinates obey ``X^a Y^a = -2 Tr(X Y)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..splitting.levels import TheoryLevel
from .fields import LatticeGaugeField
from .lattice import LatticeGrid, integrate, trace


def _theory_tag(theory) -> str:
    tag = theory.theory if isinstance(theory, TheoryLevel) else theory
    if tag not in ("CS", "TMYM", "YM"):
        raise DomainError(f"theory must be CS, TMYM or YM, got {tag!r}")
    return tag


def kahler_potential(
    a: LatticeGaugeField, a_tilde: LatticeGaugeField | None, k: int, theory
) -> complex:
    """``K`` by lattice quadrature.

    CS: ``(k/2pi) int A^a_zbar A^a_z``.
    TMYM: ``(k/4pi) int (At^a_zbar A^a_z + A^a_zbar At^a_z)``.
    Returned as a complex number; it is real for conjugate-consistent fields.
    """
    tag = _theory_tag(theory)
    if isinstance(theory, TheoryLevel) and theory.k != k:
        raise DomainError(f"level {k} disagrees with theory level {theory.k}")
    g = a.grid
    if tag == "CS":
        return -k * complex(integrate(trace(a.a_zbar @ a.a_z), g)) / np.pi
    if tag == "YM":
        raise DomainError("no Kähler potential is defined for YM")
    if a_tilde is None:
        raise DomainError("TMYM Kähler potential needs a_tilde")
    if a_tilde.grid != g:
        raise DomainError("mismatched grids")
    density = trace(a_tilde.a_zbar @ a.a_z + a.a_zbar @ a_tilde.a_z)
    return -k * complex(integrate(density, g)) / (2.0 * np.pi)


@dataclass(frozen=True, eq=False)
class FieldVariation:
    """Tangent vector ``(delta A_i^a, delta E_i^a)``, arrays ``(nx, ny, 2, 3)``.

    For TMYM ``E`` is the combination with ``At = A + E``; for CS it is
    ignored.
    """

    grid: LatticeGrid
    d_a: np.ndarray
    d_e: np.ndarray

    def __post_init__(self) -> None:
        shape = (self.grid.nx, self.grid.ny, 2, 3)
        for name in ("d_a", "d_e"):
            v = np.asarray(getattr(self, name))
            if v.shape != shape:
                raise DomainError(f"{name} must have shape {shape}")
            object.__setattr__(self, name, v)

    @property
    def d_tilde(self) -> np.ndarray:
        return self.d_a + self.d_e

    @property
    def d_hat(self) -> np.ndarray:
        return self.d_a - self.d_e

    def __add__(self, other: "FieldVariation") -> "FieldVariation":
        return FieldVariation(self.grid, self.d_a + other.d_a, self.d_e + other.d_e)

    def scaled(self, c: float) -> "FieldVariation":
        return FieldVariation(self.grid, c * self.d_a, c * self.d_e)


def random_variation(grid: LatticeGrid, rng: np.random.Generator) -> FieldVariation:
    shape = (grid.nx, grid.ny, 2, 3)
    return FieldVariation(grid, rng.standard_normal(shape), rng.standard_normal(shape))


def _z(v: np.ndarray) -> np.ndarray:
    return 0.5 * (v[..., 0, :] - 1j * v[..., 1, :])


def _zbar(v: np.ndarray) -> np.ndarray:
    return 0.5 * (v[..., 0, :] + 1j * v[..., 1, :])


def _wedge(x1, y1, x2, y2, grid: LatticeGrid) -> complex:
    """``int dX ^ dY`` on ``(v1, v2)``; the inputs are ``X(v1), Y(v1), X(v2), Y(v2)``."""
    density = np.sum(x1 * y2 - x2 * y1, axis=-1)
    return complex(integrate(density, grid))


def _mixed(x, y, grid):
    """``(X, Y) -> int dX ^ dY`` as a bilinear form on variations."""
    return lambda v1, v2: _wedge(x(v1), y(v1), x(v2), y(v2), grid)


def _renderings(tag: str, grid: LatticeGrid, k: int):
    c = 1j * k / (4.0 * np.pi)
    a_z = lambda v: _z(v.d_a)
    a_zb = lambda v: _zbar(v.d_a)
    if tag == "CS":
        return {"cs": lambda v1, v2: 2.0 * c * _mixed(a_zb, a_z, grid)(v1, v2)}
    if tag == "TMYM":
        t_z = lambda v: _z(v.d_tilde)
        t_zb = lambda v: _zbar(v.d_tilde)

        def a_tilde(v1, v2):
            return c * (_mixed(t_zb, a_z, grid)(v1, v2) + _mixed(a_zb, t_z, grid)(v1, v2))

        # B = (A_1, At_2) and C = (At_1, A_2) as 2-vectors
        def b_field(v):
            return np.stack([v.d_a[..., 0, :], v.d_tilde[..., 1, :]], axis=-2)

        def c_field(v):
            return np.stack([v.d_tilde[..., 0, :], v.d_a[..., 1, :]], axis=-2)

        def b_c(v1, v2):
            b = _mixed(lambda v: _zbar(b_field(v)), lambda v: _z(b_field(v)), grid)
            cc = _mixed(lambda v: _zbar(c_field(v)), lambda v: _z(c_field(v)), grid)
            return c * (b(v1, v2) + cc(v1, v2))

        return {"a_tilde": a_tilde, "b_c": b_c}
    e_z = lambda v: _z(v.d_e)
    e_zb = lambda v: _zbar(v.d_e)
    t_zb = lambda v: _zbar(v.d_tilde)
    h_z = lambda v: _z(v.d_hat)

    def direct(v1, v2):
        return c * (_mixed(e_zb, a_z, grid)(v1, v2) + _mixed(a_zb, e_z, grid)(v1, v2))

    def difference(v1, v2):
        return c * (_mixed(t_zb, a_z, grid)(v1, v2) - _mixed(a_zb, h_z, grid)(v1, v2))

    return {"direct": direct, "tilde_hat": difference}


@dataclass(frozen=True)
class SymplecticValue:
    value: complex
    renderings: dict

    def max_disagreement(self) -> float:
        vals = list(self.renderings.values())
        return max(abs(v - self.value) for v in vals)


def symplectic_pairing(theory, var1: FieldVariation, var2: FieldVariation, k: int | None = None) -> SymplecticValue:
    """``Omega(var1, var2)`` in every rendering of the theory's two-form.

    CS: ``(ik/2pi) int dA_zbar ^ dA_z``.
    TMYM: ``(ik/4pi) int (dAt_zbar ^ dA_z + dA_zbar ^ dAt_z)`` and the
    ``B``/``C`` form ``(ik/4pi) int (dB_zbar ^ dB_z + dC_zbar ^ dC_z)``.
    YM: ``(ik/4pi) int (dE_zbar ^ dA_z + dA_zbar ^ dE_z)`` and the difference
    form ``(ik/4pi) int (dAt_zbar ^ dA_z - dA_zbar ^ dAh_z)``.
    ``value`` is the first rendering.
    """
    tag = _theory_tag(theory)
    if k is None:
        if not isinstance(theory, TheoryLevel):
            raise DomainError("level required when theory is given as a tag")
        k = theory.k
    if var1.grid != var2.grid:
        raise DomainError("mismatched grids")
    forms = _renderings(tag, var1.grid, k)
    values = {name: f(var1, var2) for name, f in forms.items()}
    return SymplecticValue(next(iter(values.values())), values)
