"""Exact U(1)_k phases for configurations of abelian Wilson and 't Hooft loops.

Phases are stored exactly as a fraction of a full turn (a rational multiple
of 2 pi) reduced to ``[0, 1)``.

Convention: a Wilson loop of charge ``n`` and a 't Hooft loop of charge
``m`` whose curves link ``lk`` times contribute ``exp(2 pi i n m lk / k)``.
Moving the 't Hooft loop across the Wilson loop once changes ``lk`` by the
intersection number and reproduces the exchange factor
``exp(2 pi i l / k)`` of the 't Hooft algebra; only such ratios are
convention independent. W-W and T-T pairs contribute 1. Self-linking is
opt-in: a framed loop with self-linking ``s`` contributes
``exp(i pi n^2 s / k)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import DomainError
from .linkmodel.pd import LinkingMatrix


@dataclass(frozen=True, order=True)
class Phase:
    """``exp(2 pi i * turns)`` with ``turns`` an exact fraction in ``[0, 1)``."""

    turns: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "turns", Fraction(self.turns) % 1)

    @classmethod
    def of(cls, numerator: int, denominator: int) -> "Phase":
        return cls(Fraction(numerator, denominator))

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.turns + other.turns)

    def __pow__(self, n: int) -> "Phase":
        return Phase(self.turns * n)

    def inverse(self) -> "Phase":
        return Phase(-self.turns)

    def __complex__(self) -> complex:
        return self.to_complex()

    def to_complex(self) -> complex:
        # exact values for the quarter turns keep printed output clean
        quarter = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
        if self.turns in quarter:
            return quarter[self.turns]
        return cmath.exp(2j * math.pi * float(self.turns))

    @property
    def numerator(self) -> int:
        return self.turns.numerator

    @property
    def denominator(self) -> int:
        return self.turns.denominator


IDENTITY = Phase()


@dataclass(frozen=True)
class ChargedLoop:
    """An abelian loop operator: Wilson (``"W"``) or 't Hooft (``"T"``)."""

    curve: Any
    kind: str
    charge: int = 1
    framed: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("W", "T"):
            raise DomainError(f"loop kind must be 'W' or 'T', got {self.kind!r}")
        if int(self.charge) != self.charge or self.charge == 0:
            raise DomainError("loop charge must be a nonzero integer")


def _check_level(k: int) -> int:
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise DomainError(f"level must be an integer >= 1, got {k!r}")
    return int(k)


def mixed_phase_turns(a: ChargedLoop, b: ChargedLoop, k: int, lk: int) -> Phase:
    k = _check_level(k)
    if a.kind != "W" or b.kind != "T":
        raise DomainError(
            "mixed_phase takes a W loop and a T loop; same-kind pairs go through normal ordering"
        )
    return Phase.of(a.charge * b.charge * int(lk), k)


def mixed_phase(a: ChargedLoop, b: ChargedLoop, k: int, lk: int) -> complex:
    """``exp(2 pi i n_a n_b lk / k)`` for a Wilson loop ``a`` and 't Hooft loop ``b``."""
    return mixed_phase_turns(a, b, k, lk).to_complex()


def configuration_phase_turns(
    loops: Sequence[ChargedLoop], k: int, linking: LinkingMatrix
) -> Phase:
    k = _check_level(k)
    if linking.size != len(loops):
        raise DomainError(f"linking matrix is {linking.size}x{linking.size}, have {len(loops)} loops")
    total = IDENTITY
    for i, li in enumerate(loops):
        if li.framed:
            s = linking[i, i]
            if s is None:
                raise DomainError(f"loop {i} is framed but its self-linking entry is missing")
            total = total * Phase.of(li.charge * li.charge * s, 2 * k)
        for j in range(i + 1, len(loops)):
            lj = loops[j]
            if li.kind == lj.kind:
                continue
            lk = linking[i, j]
            if lk is None:
                raise DomainError(f"missing linking entry for loops ({i}, {j})")
            w, t = (li, lj) if li.kind == "W" else (lj, li)
            total = total * mixed_phase_turns(w, t, k, lk)
    return total


def configuration_phase(loops: Sequence[ChargedLoop], k: int, linking: LinkingMatrix) -> complex:
    """Product of the mixed W-T phases over all pairs (plus opt-in framing)."""
    return configuration_phase_turns(loops, k, linking).to_complex()
