"""Grid-refinement verification suites behind ``chernsplit verify``.

Each suite evaluates a residual on the requested grid and on the refined
grid (``2N``), and reports the coarse/fine ratio. A residual passes when it
is under tolerance at the requested grid; a random fixture also needs the
ratio inside ``RATIO_WINDOW`` (second-order convergence).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError
from ..splitting.levels import TheoryLevel
from .action import gauss_linear_term, gauss_variation_check, pw_report
from .fields import (
    LatticeGroupField,
    constant_field,
    flatness_combination,
    kn_fields,
    random_algebra_field,
    random_field,
)
from .kahler import random_variation, symplectic_pairing
from .lattice import SIGMA, LatticeGrid, dz, expm_traceless

SUITES = ("flatness", "pw", "gauss", "symplectic")
FIXTURES = ("random", "constant")
RATIO_WINDOW = (2.8, 5.6)
# eta-squared scaling window: exact ratio 4 within 25%
ETA_WINDOW = (3.0, 5.0)
ETAS = (1e-3, 5e-4)
DEFAULT_TOL = {"flatness": 1e-2, "pw": 1e-3, "gauss": 1e-3, "symplectic": 1e-10}
SYMPLECTIC_PAIRS = 100
# second seed offset so a PW pair uses two independent fields
PAIR_OFFSET = 1000


@dataclass
class Residual:
    quantity: str
    coarse: float
    fine: float | None = None
    tol: float | None = None
    window: tuple[float, float] | None = None
    ratio: float | None = None
    passed: bool = False

    def to_json(self) -> dict:
        return {
            "quantity": self.quantity,
            "coarse": self.coarse,
            "fine": self.fine,
            "ratio": self.ratio,
            "tol": self.tol,
            "window": list(self.window) if self.window else None,
            "passed": self.passed,
        }


@dataclass
class SuiteReport:
    suite: str
    grid: int
    fixture: str
    seed: int | None
    amplitude: float
    level: int
    residuals: list[Residual] = field(default_factory=list)

    @property
    def converged(self) -> bool:
        return all(r.passed for r in self.residuals)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "fixture": self.fixture,
            "seed": self.seed,
            "amplitude": self.amplitude,
            "level": self.level,
            "residuals": [r.to_json() for r in self.residuals],
            "converged": self.converged,
        }


def _refinement(quantity, coarse, fine, tol, need_ratio) -> Residual:
    r = Residual(quantity, float(coarse), float(fine), tol)
    under = coarse <= tol
    if not need_ratio:
        r.passed = bool(under)
        return r
    r.window = RATIO_WINDOW
    r.ratio = float(coarse / fine) if fine > 0 else float("inf")
    r.passed = bool(under and RATIO_WINDOW[0] <= r.ratio <= RATIO_WINDOW[1])
    return r


def constant_fixture(grid: LatticeGrid) -> LatticeGroupField:
    """A fixed non-trivial constant SL(2, C) matrix."""
    m = expm_traceless(0.3 * SIGMA[0] + 0.2j * SIGMA[2] + 0.1 * SIGMA[1])
    return constant_field(grid, m)


def _group_field(grid, fixture, amplitude, seed) -> LatticeGroupField:
    if fixture == "constant":
        return constant_fixture(grid)
    return random_field(grid, "SL2C", amplitude, seed)


def flatness_relative(u: LatticeGroupField) -> float:
    """Flatness residual relative to ``max |d_z A_zbar|`` (absolute if that vanishes)."""
    a = kn_fields(u)
    res = float(np.max(np.abs(flatness_combination(a))))
    scale = float(np.max(np.abs(dz(a.a_zbar, u.grid))))
    return res / scale if scale > 0 else res


def flatness_suite(n, fixture, amplitude, seed, tol) -> list[Residual]:
    vals = [flatness_relative(_group_field(LatticeGrid.square(m), fixture, amplitude, seed)) for m in (n, 2 * n)]
    return [_refinement("flatness_relative", vals[0], vals[1], tol, fixture == "random")]


def pw_suite(n, fixture, amplitude, seed, tol) -> list[Residual]:
    vals = []
    for m in (n, 2 * n):
        g = LatticeGrid.square(m)
        a = _group_field(g, fixture, amplitude, seed)
        b = _group_field(g, fixture, amplitude, seed + PAIR_OFFSET)
        vals.append(pw_report(a, b).relative)
    return [_refinement("pw_defect_relative", vals[0], vals[1], tol, fixture == "random")]


def gauss_suite(n, fixture, amplitude, seed, tol, level) -> list[Residual]:
    """Two checks: eta-squared scaling on the requested grid, and O(h^2)
    convergence of the first-order mismatch (the symmetric residual, in
    which the eta-squared term cancels), relative to the linear term."""
    g = LatticeGrid.square(n)
    u = _group_field(g, fixture, amplitude, seed)
    eps = random_algebra_field(g, 1.0, seed + PAIR_OFFSET)
    one_sided = [gauss_variation_check(u, eta * eps, level) for eta in ETAS]
    ratio = one_sided[0] / one_sided[1] if one_sided[1] > 0 else float("inf")
    scaling = Residual("gauss_eta_scaling", one_sided[0], one_sided[1], None, ETA_WINDOW, ratio)
    scaling.passed = bool(ETA_WINDOW[0] <= ratio <= ETA_WINDOW[1])

    rel = []
    for m in (n, 2 * n):
        gm = LatticeGrid.square(m)
        um = _group_field(gm, fixture, amplitude, seed)
        em = ETAS[0] * random_algebra_field(gm, 1.0, seed + PAIR_OFFSET)
        lin = abs(gauss_linear_term(um, em, level))
        res = gauss_variation_check(um, em, level, symmetric=True)
        rel.append(res / lin if lin > 0 else res)
    conv = _refinement("gauss_first_order_relative", rel[0], rel[1], tol, fixture == "random")
    return [scaling, conv]


def symplectic_suite(n, seed, tol, level, pairs=SYMPLECTIC_PAIRS) -> list[Residual]:
    """Rendering agreement and antisymmetry on random variation pairs.

    Differences are measured relative to ``max(1, |Omega|)``.
    """
    g = LatticeGrid.square(n)
    rng = np.random.default_rng(seed)
    worst = {"tmym_a_tilde_vs_b_c": 0.0, "ym_direct_vs_tilde_hat": 0.0, "antisymmetry": 0.0}
    tmym = TheoryLevel("TMYM", level, 1.0)
    ym = TheoryLevel("YM", level, 1.0)
    cs = TheoryLevel("CS", level)
    for _ in range(pairs):
        v1, v2 = random_variation(g, rng), random_variation(g, rng)
        t = symplectic_pairing(tmym, v1, v2)
        y = symplectic_pairing(ym, v1, v2)
        worst["tmym_a_tilde_vs_b_c"] = max(worst["tmym_a_tilde_vs_b_c"], t.max_disagreement() / max(1.0, abs(t.value)))
        worst["ym_direct_vs_tilde_hat"] = max(worst["ym_direct_vs_tilde_hat"], y.max_disagreement() / max(1.0, abs(y.value)))
        for theory, fwd in ((tmym, t), (ym, y), (cs, None)):
            fwd = fwd or symplectic_pairing(theory, v1, v2)
            back = symplectic_pairing(theory, v2, v1)
            asym = abs(fwd.value + back.value) / max(1.0, abs(fwd.value))
            worst["antisymmetry"] = max(worst["antisymmetry"], asym)
    return [Residual(q, float(v), None, tol, None, None, bool(v <= tol)) for q, v in worst.items()]


def run_suite(
    suite: str,
    grid: int,
    seed: int | None = None,
    amplitude: float = 0.3,
    level: int = 2,
    tol: float | None = None,
    fixture: str = "random",
) -> list[SuiteReport]:
    """Run one suite (or ``all``) and return one report per suite."""
    names = SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}")
    if fixture not in FIXTURES:
        raise DomainError(f"fixture must be one of {FIXTURES}")
    LatticeGrid.square(grid)
    if isinstance(level, bool) or int(level) != level or level < 1:
        raise DomainError(f"level must be an integer >= 1, got {level!r}")
    needs_seed = fixture == "random" or "symplectic" in names
    if needs_seed and seed is None:
        raise DomainError("--seed is required for randomized suites")
    if fixture == "random" and not 0 < amplitude <= 1:
        raise DomainError(f"amplitude must lie in (0, 1], got {amplitude}")
    reports = []
    for name in names:
        t = DEFAULT_TOL[name] if tol is None else tol
        if name == "flatness":
            res = flatness_suite(grid, fixture, amplitude, seed, t)
        elif name == "pw":
            res = pw_suite(grid, fixture, amplitude, seed if seed is not None else 0, t)
        elif name == "gauss":
            res = gauss_suite(grid, fixture, amplitude, seed if seed is not None else 0, t, level)
        else:
            res = symplectic_suite(grid, seed, t, level)
        reports.append(SuiteReport(name, grid, fixture, seed, amplitude, level, res))
    return reports
