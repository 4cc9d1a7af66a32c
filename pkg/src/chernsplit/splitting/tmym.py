"""TMYM loop observables evaluated through the CS_{k/2} x CS_{k/2} splitting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..errors import DomainError
from ..linkmodel import corpus
from ..linkmodel.pd import PDCode
from ..skein import CSExpectation, CyclotomicInteger, cs_expectation
from .levels import CorrectionOrder, TheoryLevel, correction_bound
from .words import LoopOperatorWord

EVEN_LEVEL_MESSAGE = "even level required for observable splitting"
ZERO_INTERSECTION_MESSAGE = "zero intersection required"


@dataclass(frozen=True)
class Provenance:
    curve: str
    kind: str
    expectation: CSExpectation

    def to_json(self) -> dict:
        out = {"curve": self.curve, "kind": self.kind}
        out.update(self.expectation.to_json())
        return out


@dataclass(frozen=True)
class SplitExpectation:
    """A TMYM observable written as a product of CS expectation values.

    ``value`` is the exact product of the provenance values; the neglected
    terms are described by ``correction`` and never folded into ``value``.
    """

    value: CyclotomicInteger
    theory: TheoryLevel
    split_level: int
    provenance: tuple[Provenance, ...]
    correction: CorrectionOrder = field(default_factory=CorrectionOrder)

    @property
    def complex(self) -> complex:
        return self.value.to_complex()

    def product_of_provenance(self) -> CyclotomicInteger:
        total = CyclotomicInteger.one(self.value.order)
        for p in self.provenance:
            total = total * p.expectation.value
        return total

    def to_json(self) -> dict:
        z = self.complex
        return {
            "theory": self.theory.theory,
            "level": self.theory.k,
            "m": self.theory.m,
            "split_level": self.split_level,
            "root_order": self.value.order,
            "value_exact": list(self.value.coeffs),
            "value_re": z.real,
            "value_im": z.imag,
            "provenance": [p.to_json() for p in self.provenance],
            "correction": self.correction.to_json(),
        }


def resolve_curve(curve_id: str, curves: Mapping[str, PDCode] | None) -> PDCode:
    if curves and curve_id in curves:
        return curves[curve_id]
    try:
        return corpus.diagram(curve_id)
    except KeyError:
        raise DomainError(f"curve {curve_id!r} has no diagram") from None


def tmym_expectation(
    word: LoopOperatorWord,
    t: TheoryLevel,
    curves: Mapping[str, PDCode] | None = None,
    length_scale: float | None = None,
    normalization: str = "writhe_corrected",
) -> SplitExpectation:
    """Large-distance TMYM_k expectation of a W/T word via CS at level k/2.

    Each entry's curve id is looked up in ``curves`` (falling back to the
    named corpus diagrams). Every entry, W or T, contributes its
    CS_{k/2} Wilson-loop value; distinct entries are distinct diagrams and
    combine multiplicatively. A link whose components must be evaluated
    jointly belongs in a single entry.

    Only even ``k`` and words with vanishing pairwise intersection numbers
    are accepted.
    """
    if t.theory != "TMYM":
        raise DomainError(f"tmym_expectation needs a TMYM theory level, got {t.theory}")
    if t.k < 2 or t.k % 2:
        raise DomainError(f"{EVEN_LEVEL_MESSAGE}; got k = {t.k}")
    n = len(word)
    for i in range(n):
        for j in range(i + 1, n):
            if word.l(i, j) != 0:
                a, b = word.entries[i].curve, word.entries[j].curve
                raise DomainError(
                    f"l({a}, {b}) = {word.l(i, j)}: {ZERO_INTERSECTION_MESSAGE} "
                    "(nonzero intersection lies outside the split regime)"
                )
    half = t.k // 2
    provenance = []
    for e in word.entries:
        if abs(e.charge) != 1:
            raise DomainError(f"entry {e.curve}: only the fundamental representation (charge +-1)")
        value = cs_expectation(resolve_curve(e.curve, curves), half, normalization)
        provenance.append(Provenance(e.curve, e.kind, value))

    total = CyclotomicInteger.one(4 * (half + 2))
    for p in provenance:
        total = total * p.expectation.value
    correction = correction_bound(t, length_scale) if length_scale is not None else CorrectionOrder(2)
    return SplitExpectation(total, t, half, tuple(provenance), correction)
