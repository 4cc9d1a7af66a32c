"""Theory tags, level splitting of inner products, and gauge-phase bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DomainError

THEORIES = ("CS", "TMYM", "YM")


@dataclass(frozen=True)
class TheoryLevel:
    """Theory tag with integer level ``k`` and mass ``m`` (TMYM and YM only)."""

    theory: str
    k: int
    m: float | None = None

    def __post_init__(self) -> None:
        if self.theory not in THEORIES:
            raise DomainError(f"theory must be one of {THEORIES}, got {self.theory!r}")
        if isinstance(self.k, bool) or int(self.k) != self.k:
            raise DomainError(f"level must be an integer, got {self.k!r}")
        object.__setattr__(self, "k", int(self.k))
        if self.theory == "CS":
            if self.m is not None:
                raise DomainError("pure CS carries no mass parameter")
        else:
            if self.m is None:
                raise DomainError(f"{self.theory} requires a mass parameter m")
            if not self.m > 0:
                raise DomainError(f"mass parameter must be positive, got {self.m}")


@dataclass(frozen=True)
class CorrectionOrder:
    """Size of the neglected terms: ``O(1/m^order)``.

    ``bound_coefficient`` is the dimensionless small parameter
    ``(1 / (m L))^order`` when a length scale ``L`` was supplied. It is
    metadata only and is never added to a value.
    """

    order: int = 2
    bound_coefficient: float | None = None

    def __post_init__(self) -> None:
        if self.bound_coefficient is not None and self.bound_coefficient < 0:
            raise DomainError("bound coefficient must be non-negative")

    def to_json(self) -> dict:
        return {"order": self.order, "bound_coefficient": self.bound_coefficient}


@dataclass(frozen=True)
class WZWCoefficient:
    """Symbolic exponent coefficient ``casimir_multiple * c_A + shift``."""

    casimir_multiple: int
    shift: Fraction

    def __str__(self) -> str:
        if self.shift == 0:
            return f"{self.casimir_multiple}c_A"
        op = "+" if self.shift > 0 else "-"
        return f"{self.casimir_multiple}c_A {op} {abs(self.shift)}"


@dataclass(frozen=True)
class InnerProductFactor:
    theory: str
    level: Fraction
    wzw_coefficient: WZWCoefficient

    def to_json(self) -> dict:
        return {
            "theory": self.theory,
            "level": str(self.level),
            "wzw_coefficient": str(self.wzw_coefficient),
        }


@dataclass(frozen=True)
class InnerProductForm:
    """Factorized inner product: a product of CS inner products.

    ``observable_mapping`` is true only when every factor has an integer
    level, which is when observables can be evaluated by the CS skein
    evaluator.
    """

    source: TheoryLevel
    factors: tuple[InnerProductFactor, ...]
    correction: CorrectionOrder = field(default_factory=CorrectionOrder)

    def __post_init__(self) -> None:
        if len(self.factors) not in (1, 2):
            raise DomainError("an inner-product form has one or two factors")

    @property
    def level_sum(self) -> Fraction:
        return sum((f.level for f in self.factors), Fraction(0))

    @property
    def observable_mapping(self) -> bool:
        return all(f.level.denominator == 1 for f in self.factors)

    def to_json(self) -> dict:
        return {
            "theory": self.source.theory,
            "level": self.source.k,
            "m": self.source.m,
            "factors": [f.to_json() for f in self.factors],
            "level_sum": str(self.level_sum),
            "observable_mapping": self.observable_mapping,
            "note": None if self.observable_mapping else "observable mapping unavailable for odd level",
            "correction": self.correction.to_json(),
        }


def split_inner_product(t: TheoryLevel) -> InnerProductForm:
    """Level-``k`` TMYM splits into CS_{k/2} x CS_{k/2}; YM into CS_{k/2} x CS_{-k/2}.

    Both hold up to ``O(1/m^2)``. The WZW exponents are ``2c_A + k/2`` for
    both TMYM factors and ``2c_A +- k/2`` for YM, with ``c_A`` symbolic.
    """
    if t.theory == "CS":
        raise DomainError("CS does not split: the map would be the identity")
    half = Fraction(t.k, 2)
    second = half if t.theory == "TMYM" else -half
    factors = (
        InnerProductFactor("CS", half, WZWCoefficient(2, half)),
        InnerProductFactor("CS", second, WZWCoefficient(2, second)),
    )
    return InnerProductForm(t, factors, CorrectionOrder(2))


@dataclass(frozen=True)
class GaugePhase:
    """Shift of the action under a large gauge transformation, in units of pi."""

    multiple_of_pi: int
    invariant: bool


def gauge_phase_check(t: TheoryLevel, winding: int, part: str = "total") -> GaugePhase:
    """Phase picked up by ``exp(i S)`` under a gauge transformation of winding ``winding``.

    Each half-level CS part shifts by ``pi k w``. TMYM adds the two halves
    (``2 pi k w``), YM subtracts them (exactly 0), and a full-level CS term
    shifts by ``2 pi k w``. ``part="half"`` looks at one half-level part
    alone, which is invariant only when ``k w`` is even.
    """
    if isinstance(winding, bool) or int(winding) != winding:
        raise DomainError("winding number must be an integer")
    w = int(winding)
    if part == "half":
        total = t.k * w
    elif part == "total":
        total = 0 if t.theory == "YM" else 2 * t.k * w
    else:
        raise DomainError(f"part must be 'total' or 'half', got {part!r}")
    return GaugePhase(total, total % 2 == 0)


def correction_bound(t: TheoryLevel, length_scale: float) -> CorrectionOrder:
    """``O(1/m^2)`` with the dimensionless parameter ``(1 / (m L))^2``."""
    if t.m is None:
        raise DomainError("correction bound needs a mass parameter m")
    if not length_scale > 0:
        raise DomainError(f"length scale must be positive, got {length_scale}")
    return CorrectionOrder(2, (1.0 / (t.m * length_scale)) ** 2)
