"""Chern-Simons Wilson-loop expectation values for the SU(2) fundamental."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError
from ..linkmodel.pd import PDCode, writhe
from .bracket import check_level, kauffman_bracket, root_order
from .cyclotomic import CyclotomicInteger

NORMALIZATIONS = ("bracket", "writhe_corrected")


@dataclass(frozen=True)
class CSExpectation:
    """Exact value of a Wilson-loop observable at level ``k``.

    ``value`` lives in ``Z[A]`` with ``A = exp(i pi / (2 (k + 2)))``. With
    this convention the unknot evaluates to ``-2 cos(pi / (k + 2))``, i.e.
    minus the quantum dimension.
    """

    value: CyclotomicInteger
    level: int
    normalization: str = "writhe_corrected"
    representation: str = "fundamental"

    @property
    def complex(self) -> complex:
        return self.value.to_complex()

    def to_json(self) -> dict:
        z = self.complex
        return {
            "level": self.level,
            "normalization": self.normalization,
            "representation": self.representation,
            "root_order": self.value.order,
            "value_exact": list(self.value.coeffs),
            "value_re": z.real,
            "value_im": z.imag,
        }


def framing_factor(k: int, w: int) -> CyclotomicInteger:
    """``(-A^3)^(-w)`` exactly."""
    order = root_order(k)
    sign = -1 if w % 2 else 1
    return sign * CyclotomicInteger.root_power(order, -3 * w)


def cs_expectation(
    pd: PDCode, k: int, framing: str = "writhe_corrected", representation: str = "fundamental"
) -> CSExpectation:
    """Wilson-loop expectation of the link ``pd`` in SU(2) CS theory at level ``k``.

    ``framing="writhe_corrected"`` multiplies the bracket by
    ``(-A^3)^(-w)`` (an ambient isotopy invariant); ``"bracket"`` returns
    the raw bracket (blackboard framing).
    """
    k = check_level(k)
    if framing not in NORMALIZATIONS:
        raise DomainError(f"normalization must be one of {NORMALIZATIONS}, got {framing!r}")
    if representation != "fundamental":
        raise DomainError("only the fundamental representation is evaluated")
    value = kauffman_bracket(pd, k)
    if framing == "writhe_corrected":
        value = framing_factor(k, writhe(pd)) * value
    return CSExpectation(value, k, framing, representation)


def quantum_dimension(k: int) -> float:
    """``2 cos(pi / (k + 2))``, the SU(2)_k dimension of the fundamental."""
    return 2.0 * math.cos(math.pi / (check_level(k) + 2))
