"""Braid words and their trace closures."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError
from .pd import PDCode


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group generators.

    ``letters`` holds signed generator indices: ``+i`` is sigma_i and ``-i``
    its inverse, with ``1 <= i < strand_count``.
    """

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strand_count < 1:
            raise ParseError(f"strand_count must be positive, got {self.strand_count}")
        for g in self.letters:
            if g == 0:
                raise ParseError("zero generator index")
            if abs(g) >= self.strand_count:
                raise ParseError(
                    f"generator {g} needs {abs(g) + 1} strands, have {self.strand_count}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Where each bottom position ends up at the top."""
        where = list(range(self.strand_count))  # where[p] = strand now at p
        for g in self.letters:
            p = abs(g) - 1
            where[p], where[p + 1] = where[p + 1], where[p]
        perm = [0] * self.strand_count
        for pos, strand in enumerate(where):
            perm[strand] = pos
        return tuple(perm)

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * len(perm)
        cycles = 0
        for start in range(len(perm)):
            if seen[start]:
                continue
            cycles += 1
            p = start
            while not seen[p]:
                seen[p] = True
                p = perm[p]
        return cycles


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated signed generator tokens, e.g. ``"1 -2 1"``.

    The strand count is ``max|index| + 1`` unless ``strands`` overrides it.
    """
    letters = []
    for token in text.replace(",", " ").split():
        try:
            g = int(token)
        except ValueError:
            raise ParseError(f"malformed braid token {token!r}") from None
        if g == 0:
            raise ParseError("zero generator index")
        letters.append(g)
    inferred = max((abs(g) for g in letters), default=0) + 1
    if strands is None:
        strands = inferred
    elif strands < inferred:
        raise ParseError(f"word needs {inferred} strands, {strands} given")
    return BraidWord(strands, tuple(letters))


def braid_closure(braid: BraidWord) -> PDCode:
    """PD code of the trace closure of ``braid``.

    Strands run upward. At a positive letter the strand coming from the left
    position passes over; at a negative letter the one from the right does.
    Both cases are recorded with their crossing sign (positive letters give
    right-handed crossings). Components are ordered by the lowest bottom
    position they pass through.
    """
    n = braid.strand_count
    current = list(range(n))
    next_label = n
    raw = []
    for g in braid.letters:
        p = abs(g) - 1
        u_out, o_out = next_label, next_label + 1
        next_label += 2
        if g > 0:
            u_in, o_in = current[p + 1], current[p]
            raw.append((u_in, o_out, u_out, o_in, 1))
            current[p], current[p + 1] = u_out, o_out
        else:
            u_in, o_in = current[p], current[p + 1]
            raw.append((u_in, o_in, u_out, o_out, -1))
            current[p], current[p + 1] = o_out, u_out

    # close up: the arc leaving the top at position p is the bottom arc p
    rename = {current[p]: p for p in range(n)}
    crossings = [tuple(rename.get(x, x) for x in c[:4]) + (c[4],) for c in raw]
    used = {x for c in crossings for x in c[:4]}
    free = [p for p in range(n) if p not in used]
    return PDCode.from_crossings(crossings, free_loops=free)
