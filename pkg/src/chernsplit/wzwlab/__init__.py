"""Lattice verification of the WZW and symplectic identities on a periodic torus."""

from .action import (
    ActionValue,
    PWReport,
    gauss_linear_term,
    gauss_variation_check,
    pw_cross_term,
    pw_defect,
    pw_report,
    wzw_action,
)
from .fields import (
    FIELD_CLASSES,
    LatticeGaugeField,
    LatticeGroupField,
    constant_field,
    flatness_combination,
    flatness_residual,
    gauge_field_from_components,
    identity_field,
    kn_fields,
    random_algebra_field,
    random_field,
)
from .kahler import FieldVariation, SymplecticValue, kahler_potential, random_variation, symplectic_pairing
from .lattice import GENERATORS, SIGMA, LatticeGrid
from .suites import SUITES, SuiteReport, run_suite

__all__ = [
    "ActionValue",
    "FIELD_CLASSES",
    "FieldVariation",
    "GENERATORS",
    "LatticeGaugeField",
    "LatticeGrid",
    "LatticeGroupField",
    "PWReport",
    "SIGMA",
    "SUITES",
    "SuiteReport",
    "SymplecticValue",
    "constant_field",
    "flatness_combination",
    "flatness_residual",
    "gauge_field_from_components",
    "gauss_linear_term",
    "gauss_variation_check",
    "identity_field",
    "kahler_potential",
    "kn_fields",
    "pw_cross_term",
    "pw_defect",
    "pw_report",
    "random_algebra_field",
    "random_field",
    "random_variation",
    "run_suite",
    "symplectic_pairing",
]
