"""Planar-diagram codes with explicit crossing signs.

A crossing is ``(a, b, c, d, sign)``. ``a`` is the incoming under-arc and
``a, b, c, d`` run counterclockwise around the crossing, so the under-strand
goes ``a -> c``. The over-strand joins ``b`` and ``d``; for a right-handed
crossing (``sign = +1``) it runs ``d -> b``, for a left-handed one ``b -> d``.
Storing the sign removes the usual ambiguity of reading it off arc labels.

An arc that meets no crossing is a crossingless circle and must form a
component on its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections import Counter
from typing import Iterable, Sequence

from ..errors import DomainError, ParseError

Crossing = tuple[int, int, int, int, int]


def _incoming_slots(c: Crossing) -> tuple[int, int]:
    return (0, 3) if c[4] > 0 else (0, 1)


def _successors(crossings: Sequence[Crossing]) -> dict[int, int]:
    succ: dict[int, int] = {}
    for c in crossings:
        a, b, cc, d, s = c
        pairs = ((a, cc), (d, b)) if s > 0 else ((a, cc), (b, d))
        for x, y in pairs:
            if x in succ:
                raise ParseError(
                    f"arc {x} enters two crossings; crossing signs disagree with arc orientation"
                )
            succ[x] = y
    return succ


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    _component_of: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        crossings = tuple(tuple(int(v) for v in c) for c in self.crossings)
        comps = tuple(tuple(int(v) for v in comp) for comp in self.components)
        object.__setattr__(self, "crossings", crossings)
        for i, c in enumerate(crossings):
            if len(c) != 5:
                raise ParseError(f"crossings[{i}] must have 4 arc labels and a sign")
            if c[4] not in (1, -1):
                raise ParseError(f"crossings[{i}] sign must be +1 or -1, got {c[4]}")

        counts = Counter(x for c in crossings for x in c[:4])
        bad = sorted(x for x, n in counts.items() if n != 2)
        if bad:
            raise ParseError(f"arc labels must appear exactly twice; offending arcs {bad}")

        listed = [x for comp in comps for x in comp]
        if len(listed) != len(set(listed)):
            raise ParseError("components must be disjoint")
        missing = set(counts) - set(listed)
        if missing:
            raise ParseError(f"arcs {sorted(missing)} belong to no component")
        if any(len(comp) == 0 for comp in comps):
            raise ParseError("empty component")

        succ = _successors(crossings)
        ordered = []
        for idx, comp in enumerate(comps):
            free = [x for x in comp if x not in counts]
            if free:
                if len(comp) != 1:
                    raise ParseError(
                        f"components[{idx}]: crossingless arc {free[0]} must be its own component"
                    )
                ordered.append(comp)
                continue
            cycle = [comp[0]]
            while True:
                nxt = succ[cycle[-1]]
                if nxt == comp[0]:
                    break
                cycle.append(nxt)
                if len(cycle) > len(comp):
                    break
            if sorted(cycle) != sorted(comp):
                raise ParseError(f"components[{idx}] is not a closed cycle of arcs")
            ordered.append(tuple(cycle))
        object.__setattr__(self, "components", tuple(ordered))
        object.__setattr__(
            self,
            "_component_of",
            {x: i for i, comp in enumerate(ordered) for x in comp},
        )

    @classmethod
    def from_crossings(
        cls, crossings: Iterable[Sequence[int]], free_loops: Iterable[int] = ()
    ) -> "PDCode":
        """Build a PD code, tracing components from the arc orientation.

        Components are ordered by their smallest arc label and each one is
        listed starting from that label.
        """
        crossings = [tuple(int(v) for v in c) for c in crossings]
        succ = _successors(crossings)
        seen: set[int] = set()
        comps = []
        for start in sorted(set(succ) | set(free_loops)):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            x = succ.get(start)
            while x is not None and x != start:
                if x in seen:
                    raise ParseError(f"arc {x} reached twice while tracing components")
                comp.append(x)
                seen.add(x)
                x = succ.get(x)
            comps.append(tuple(comp))
        return cls(tuple(crossings), tuple(comps))

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted(self._component_of))

    def component_of(self, arc: int) -> int:
        return self._component_of[arc]

    def free_loops(self) -> int:
        """Number of crossingless circles."""
        used = {x for c in self.crossings for x in c[:4]}
        return sum(1 for comp in self.components if comp[0] not in used)

    def strand_components(self, index: int) -> tuple[int, int]:
        """(under component, over component) at crossing ``index``."""
        c = self.crossings[index]
        return self._component_of[c[0]], self._component_of[c[1]]

    def to_json(self) -> dict:
        return {
            "format": "pd",
            "crossings": [list(c) for c in self.crossings],
            "components": [list(comp) for comp in self.components],
        }


@dataclass(frozen=True)
class LinkingMatrix:
    """Pairwise linking numbers; the diagonal holds self-linking.

    ``framing`` records where the diagonal came from: ``"blackboard"``
    (self-writhe of each component) or ``"explicit"``. Entries may be
    ``None`` when a value is unknown.
    """

    entries: tuple[tuple[int | None, ...], ...]
    framing: str = "blackboard"

    def __post_init__(self) -> None:
        rows = tuple(tuple(None if v is None else int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DomainError("linking matrix must be square")
            for j in range(i + 1, n):
                if row[j] != rows[j][i]:
                    raise DomainError(f"linking matrix not symmetric at ({i}, {j})")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int | None:
        i, j = ij
        return self.entries[i][j]


def writhe(pd: PDCode) -> int:
    """Sum of all crossing signs."""
    return sum(c[4] for c in pd.crossings)


def self_writhe(pd: PDCode, i: int) -> int:
    """Sum of signs of the crossings of component ``i`` with itself."""
    total = 0
    for idx, c in enumerate(pd.crossings):
        under, over = pd.strand_components(idx)
        if under == over == i:
            total += c[4]
    return total


def linking_number(
    pd: PDCode, i: int, j: int, framing: int | str | None = None
) -> int:
    """Linking number of components ``i`` and ``j``.

    Half the signed count of crossings between the two components. For
    ``i == j`` a framing is required: an integer, or ``"blackboard"`` for
    the self-writhe of the diagram.
    """
    n = pd.n_components
    if not (0 <= i < n and 0 <= j < n):
        raise DomainError(f"component index out of range (have {n} components)")
    if i == j:
        if framing is None:
            raise DomainError("self-linking requires framing")
        if framing == "blackboard":
            return self_writhe(pd, i)
        return int(framing)
    total = 0
    for idx, c in enumerate(pd.crossings):
        if set(pd.strand_components(idx)) == {i, j}:
            total += c[4]
    if total % 2:
        raise DomainError("odd crossing-sign sum between two components")
    return total // 2


def linking_matrix(pd: PDCode, framings: Sequence[int] | None = None) -> LinkingMatrix:
    """All pairwise linking numbers; blackboard framing on the diagonal by default."""
    n = pd.n_components
    if framings is not None and len(framings) != n:
        raise DomainError(f"need {n} framing integers, got {len(framings)}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(framings[i] if framings is not None else self_writhe(pd, i))
            else:
                row.append(linking_number(pd, i, j))
        rows.append(row)
    return LinkingMatrix(tuple(map(tuple, rows)), "explicit" if framings is not None else "blackboard")


def reverse_component(pd: PDCode, i: int) -> PDCode:
    """Reverse the orientation of component ``i``.

    Crossings whose under-strand is reversed are rotated so the incoming
    under-arc stays first; a crossing's sign flips when exactly one of its
    strands is reversed.
    """
    arcs = set(pd.components[i])
    out = []
    for c in pd.crossings:
        a, b, cc, d, s = c
        under_rev, over_rev = a in arcs, b in arcs
        if under_rev:
            a, b, cc, d = cc, d, a, b
        if under_rev != over_rev:
            s = -s
        out.append((a, b, cc, d, s))
    comps = list(pd.components)
    comp = comps[i]
    comps[i] = (comp[0],) + tuple(reversed(comp[1:]))
    return PDCode(tuple(out), tuple(comps))


def add_kink(pd: PDCode, arc: int, sign: int = 1, over_first: bool = False) -> PDCode:
    """Insert a Reidemeister-I curl on ``arc``.

    The curl's crossing has sign ``sign``; ``over_first`` chooses whether the
    strand enters the curl on the over- or the under-strand.
    """
    if sign not in (1, -1):
        raise DomainError("kink sign must be +1 or -1")
    if arc not in pd.arcs:
        raise DomainError(f"arc {arc} not in diagram")
    top = max(pd.arcs)
    y, z = top + 1, top + 2
    crossings = [list(c) for c in pd.crossings]
    head = None
    for ci, c in enumerate(pd.crossings):
        for slot in _incoming_slots(c):
            if c[slot] == arc:
                head = (ci, slot)
    if head is None:
        z = arc  # crossingless circle: the curl closes back onto it
    else:
        crossings[head[0]][head[1]] = z
    x = arc
    if not over_first:
        new = (x, z, y, y, 1) if sign > 0 else (x, y, y, z, -1)
    else:
        new = (y, y, z, x, 1) if sign > 0 else (y, x, z, y, -1)
    crossings.append(list(new))

    comps = []
    for comp in pd.components:
        if arc in comp:
            k = comp.index(arc)
            extra = (y,) if z == arc else (y, z)
            comp = comp[: k + 1] + extra + comp[k + 1 :]
        comps.append(comp)
    return PDCode(tuple(map(tuple, crossings)), tuple(comps))


def disjoint_union(first: PDCode, second: PDCode) -> PDCode:
    """Split union: ``second`` is drawn far away from ``first``."""
    offset = (max(first.arcs) + 1) if first.arcs else 0
    shifted = tuple(tuple(x + offset for x in c[:4]) + (c[4],) for c in second.crossings)
    comps = tuple(tuple(x + offset for x in comp) for comp in second.components)
    return PDCode(first.crossings + shifted, first.components + comps)


def empty_diagram() -> PDCode:
    return PDCode((), ())
