"""Words of abelian W/T loop operators and their normal ordering.

Exchange rule: ``T(C1) W(C2) = exp(2 pi i l(C1, C2) n1 n2 / k) W(C2) T(C1)``
with ``l`` the intersection number. Normal order puts every W to the left
of every T, keeping the relative order within each kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..abelianoracle import IDENTITY, Phase
from ..errors import DomainError, ParseError


@dataclass(frozen=True)
class WordEntry:
    kind: str
    curve: str
    charge: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("W", "T"):
            raise DomainError(f"entry kind must be 'W' or 'T', got {self.kind!r}")
        if isinstance(self.charge, bool) or int(self.charge) != self.charge or self.charge == 0:
            raise DomainError("entry charge must be a nonzero integer")

    def to_json(self) -> dict:
        return {"kind": self.kind, "curve": self.curve, "charge": self.charge}


@dataclass(frozen=True)
class LoopOperatorWord:
    """Ordered operator product with the antisymmetric intersection matrix.

    ``intersections[i][j]`` is ``l(C_i, C_j)`` for the curves of entries
    ``i`` and ``j``; it is permuted along with the entries.
    """

    entries: tuple[WordEntry, ...]
    intersections: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        n = len(entries)
        mat = self.intersections
        if mat is None:
            mat = tuple((0,) * n for _ in range(n))
        mat = tuple(tuple(int(v) for v in row) for row in mat)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "intersections", mat)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise DomainError(f"intersection matrix must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                if mat[i][j] != -mat[j][i]:
                    raise DomainError(f"intersection matrix not antisymmetric at ({i}, {j})")
        ids = [e.curve for e in entries]
        if len(set(ids)) != len(ids):
            raise DomainError("word entries must reference distinct curves")

    def __len__(self) -> int:
        return len(self.entries)

    def l(self, i: int, j: int) -> int:
        return self.intersections[i][j]

    def permuted(self, order: Sequence[int]) -> "LoopOperatorWord":
        """Entries re-listed as ``order`` (old indices), matrix permuted along."""
        entries = tuple(self.entries[i] for i in order)
        mat = tuple(tuple(self.intersections[i][j] for j in order) for i in order)
        return LoopOperatorWord(entries, mat)

    def is_normal_ordered(self) -> bool:
        kinds = [e.kind for e in self.entries]
        return kinds == sorted(kinds, key=lambda k: k == "T")

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "intersections": [list(row) for row in self.intersections],
        }


def swap_phase(word: LoopOperatorWord, i: int, k: int) -> Phase:
    """Phase ``p`` with ``word = p * (word with entries i, i+1 exchanged)``."""
    x, y = word.entries[i], word.entries[i + 1]
    if x.kind == y.kind:
        return IDENTITY
    if x.kind == "T":
        return Phase.of(word.l(i, i + 1) * x.charge * y.charge, k)
    return Phase.of(-word.l(i + 1, i) * x.charge * y.charge, k)


def _check_level(k: int) -> int:
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise DomainError(f"level must be an integer >= 1, got {k!r}")
    return int(k)


def reorder(word: LoopOperatorWord, order: Sequence[int], k: int) -> tuple[LoopOperatorWord, Phase]:
    """Bring ``word`` into the entry order ``order`` by adjacent swaps.

    Returns the reordered word and the phase ``p`` with
    ``word = p * reordered``.
    """
    k = _check_level(k)
    if sorted(order) != list(range(len(word))):
        raise DomainError("order must be a permutation of the entry indices")
    rank = {old: pos for pos, old in enumerate(order)}
    current = list(range(len(word)))
    phase = IDENTITY
    w = word
    changed = True
    while changed:
        changed = False
        for i in range(len(current) - 1):
            if rank[current[i]] > rank[current[i + 1]]:
                phase = phase * swap_phase(w, i, k)
                perm = list(range(len(current)))
                perm[i], perm[i + 1] = i + 1, i
                w = w.permuted(perm)
                current[i], current[i + 1] = current[i + 1], current[i]
                changed = True
    return w, phase


def normal_order(word: LoopOperatorWord, k: int) -> tuple[LoopOperatorWord, Phase]:
    """Move all W's left of all T's; return the new word and accumulated phase."""
    ws = [i for i, e in enumerate(word.entries) if e.kind == "W"]
    ts = [i for i, e in enumerate(word.entries) if e.kind == "T"]
    return reorder(word, ws + ts, k)


def word_from_json(obj: dict) -> LoopOperatorWord:
    """``{"entries": [{"kind", "curve", "charge"}...], "intersections": [[...]]}``."""
    if not isinstance(obj, dict) or not isinstance(obj.get("entries"), list):
        raise ParseError("word file needs an 'entries' list")
    entries = []
    for i, e in enumerate(obj["entries"]):
        if not isinstance(e, dict):
            raise ParseError(f"field 'entries[{i}]' must be an object")
        kind, curve, charge = e.get("kind"), e.get("curve"), e.get("charge", 1)
        if kind not in ("W", "T"):
            raise ParseError(f"field 'entries[{i}].kind' must be 'W' or 'T'")
        if not isinstance(curve, str):
            raise ParseError(f"field 'entries[{i}].curve' must be a string id")
        if not isinstance(charge, int) or isinstance(charge, bool):
            raise ParseError(f"field 'entries[{i}].charge' must be an integer")
        entries.append(WordEntry(kind, curve, charge))
    mat = obj.get("intersections")
    if mat is not None:
        if not (
            isinstance(mat, list)
            and all(isinstance(r, list) and all(isinstance(v, int) for v in r) for r in mat)
        ):
            raise ParseError("field 'intersections' must be an integer matrix")
        mat = tuple(map(tuple, mat))
    return LoopOperatorWord(tuple(entries), mat)
