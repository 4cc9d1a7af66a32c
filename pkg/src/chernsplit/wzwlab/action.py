"""Lattice WZW action, the Polyakov-Wiegmann defect and the Gauss-law check.

Conventions (asserted here and nowhere else)::

    S(H) = (1/2pi) int Tr(d_z H d_zbar H^-1) + (i/12pi) int_cone Tr(L^3)

The WZ term uses the cone ``E(s) = exp(s log H)``. On the cone
``Tr(L^3) = 3 Tr(X [L_1, L_2]) ds dx1 dx2`` with ``X = log H`` and
``L_i = E^-1 d_i E``. With these signs the product rule reads::

    S(ab) = S(a) + S(b) - (1/pi) int Tr(a^-1 d_z a  d_zbar b b^-1)

and ``delta S(U) = -(1/pi) int Tr(eps d_z A_zbar)`` under ``U -> (1 + eps) U``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from .fields import LatticeGroupField
from .lattice import (
    commutator,
    d1,
    d2,
    dz,
    dzbar,
    expm_traceless,
    integrate,
    inv,
    logm_unimodular,
    trace,
)

DEFAULT_S_POINTS = 16


@dataclass(frozen=True)
class ActionValue:
    """``value = kinetic + wz``.

    ``wz_branch`` counts the integer ambiguity of the WZ term relative to the
    principal-log cone. The cone is canonical on the supported domain, so it
    is always 0 here; it is kept so callers can tell the branch was fixed.
    """

    value: complex
    kinetic: complex
    wz: complex
    wz_branch: int = 0

    def to_json(self) -> dict:
        return {
            "value_re": float(self.value.real),
            "value_im": float(self.value.imag),
            "kinetic_re": float(self.kinetic.real),
            "kinetic_im": float(self.kinetic.imag),
            "wz_re": float(self.wz.real),
            "wz_im": float(self.wz.imag),
            "wz_branch": self.wz_branch,
        }


def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def kinetic_term(h: np.ndarray, grid) -> complex:
    density = trace(dz(h, grid) @ dzbar(inv(h), grid))
    return complex(integrate(density, grid)) / (2.0 * np.pi)


def wz_term(h: np.ndarray, grid, s_points: int = DEFAULT_S_POINTS) -> complex:
    x = logm_unimodular(h)
    nodes, weights = _gauss_legendre(s_points)
    total = 0.0 + 0.0j
    for s, w in zip(nodes, weights):
        e = expm_traceless(s * x)
        e_inv = inv(e)
        l1 = e_inv @ d1(e, grid)
        l2 = e_inv @ d2(e, grid)
        total += w * complex(integrate(3.0 * trace(x @ commutator(l1, l2)), grid))
    return 1j / (12.0 * np.pi) * total


def wzw_action(h: LatticeGroupField, s_points: int = DEFAULT_S_POINTS) -> ActionValue:
    """``S_WZW(H)`` by lattice quadrature; the WZ term by cone extension.

    Raises ``DomainError("field outside principal-log domain")`` when some
    site has an eigenvalue on the closed negative real axis.
    """
    if s_points < 16:
        raise DomainError(f"at least 16 cone quadrature points required, got {s_points}")
    values = h.values
    kin = kinetic_term(values, h.grid)
    wz = wz_term(values, h.grid, s_points)
    return ActionValue(kin + wz, kin, wz, 0)


def pw_cross_term(a: LatticeGroupField, b: LatticeGroupField) -> complex:
    """``-(1/pi) int Tr(a^-1 d_z a  d_zbar b b^-1)``."""
    if a.grid != b.grid:
        raise DomainError("mismatched grids")
    g = a.grid
    av, bv = a.values, b.values
    density = trace(inv(av) @ dz(av, g) @ dzbar(bv, g) @ inv(bv))
    return -complex(integrate(density, g)) / np.pi


@dataclass(frozen=True)
class PWReport:
    defect: float
    relative: float
    s_a: complex
    s_b: complex
    s_ab: complex
    cross: complex


def pw_report(a: LatticeGroupField, b: LatticeGroupField, s_points: int = DEFAULT_S_POINTS) -> PWReport:
    cross = pw_cross_term(a, b)
    s_a = wzw_action(a, s_points).value
    s_b = wzw_action(b, s_points).value
    s_ab = wzw_action(a @ b, s_points).value
    defect = abs(s_ab - s_a - s_b - cross)
    return PWReport(defect, defect / max(1.0, abs(s_a), abs(s_b)), s_a, s_b, s_ab, cross)


def pw_defect(a: LatticeGroupField, b: LatticeGroupField, s_points: int = DEFAULT_S_POINTS) -> float:
    """``|S(ab) - S(a) - S(b) - cross(a, b)|``."""
    return pw_report(a, b, s_points).defect


def gauss_linear_term(u: LatticeGroupField, eps: np.ndarray, k: int) -> complex:
    """``(k/2pi) int eps^a d_z A^a_zbar = -(k/pi) int Tr(eps d_z A_zbar)``."""
    g = u.grid
    a_zbar = -dzbar(u.values, g) @ inv(u.values)
    return -k * complex(integrate(trace(eps @ dz(a_zbar, g)), g)) / np.pi


def _check_eps(u: LatticeGroupField, eps: np.ndarray) -> np.ndarray:
    eps = np.asarray(eps, dtype=complex)
    if eps.shape != u.values.shape:
        raise DomainError(f"eps must have shape {u.values.shape}")
    if np.max(np.abs(trace(eps))) > 1e-12:
        raise DomainError("eps must be traceless")
    return eps


def gauss_variation_check(
    u: LatticeGroupField,
    eps: np.ndarray,
    k: int,
    symmetric: bool = False,
    s_points: int = DEFAULT_S_POINTS,
) -> float:
    """``|k S(U_eps) - k S(U) - (k/2pi) int eps^a d_z A^a_zbar|``.

    ``U_eps = exp(eps) U``, which agrees with ``(1 + eps) U`` to first order
    and keeps ``det = 1``. The residual is ``O(eta^2) + O(h^2 eta)``.
    With ``symmetric=True`` the variation is the central difference
    ``k (S(U_eps) - S(U_-eps)) / 2``, which cancels the ``eta^2`` term and
    leaves the ``O(h^2 eta)`` discretization part (plus ``O(eta^3)``).
    """
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise DomainError(f"level must be an integer >= 1, got {k!r}")
    eps = _check_eps(u, eps)
    lin = gauss_linear_term(u, eps, k)
    plus = LatticeGroupField(u.grid, expm_traceless(eps) @ u.values, "SL2C")
    s_plus = wzw_action(plus, s_points).value
    if symmetric:
        minus = LatticeGroupField(u.grid, expm_traceless(-eps) @ u.values, "SL2C")
        variation = k * (s_plus - wzw_action(minus, s_points).value) / 2.0
    else:
        variation = k * (s_plus - wzw_action(u, s_points).value)
    return float(abs(variation - lin))
