"""A small fixed corpus of named diagrams (all with at most 8 crossings)."""

from __future__ import annotations

from .braid import BraidWord, braid_closure
from .pd import PDCode

BRAIDS: dict[str, tuple[int, tuple[int, ...]]] = {
    "unknot": (1, ()),
    "unlink2": (2, ()),
    "hopf": (2, (1, 1)),
    "trefoil": (2, (1, 1, 1)),
    "figure8_braid": (3, (1, -2, 1, -2)),
    "torus_link_2_4": (2, (1, 1, 1, 1)),
    "cinquefoil": (2, (1, 1, 1, 1, 1)),
    "granny": (3, (1, 1, 1, 2, 2, 2)),
    "square": (3, (1, 1, 1, -2, -2, -2)),
    "borromean": (3, (1, -2, 1, -2, 1, -2)),
    "trefoil_figure8": (4, (1, 1, 1, 2, -3, 2, -3)),
    "torus_link_2_8": (2, (1,) * 8),
}

# standard 4-crossing figure-eight code, signs written out
FIGURE8_PD = PDCode(
    ((4, 2, 5, 1, 1), (8, 6, 1, 5, 1), (6, 3, 7, 4, -1), (2, 7, 3, 8, -1)),
    ((1, 2, 3, 4, 5, 6, 7, 8),),
)


def braid(name: str) -> BraidWord:
    strands, letters = BRAIDS[name]
    return BraidWord(strands, letters)


def diagram(name: str) -> PDCode:
    if name == "figure8":
        return FIGURE8_PD
    if name not in BRAIDS:
        raise KeyError(f"unknown diagram {name!r}; known: {sorted(names())}")
    return braid_closure(braid(name))


def names() -> list[str]:
    return sorted(BRAIDS) + ["figure8"]


ACCEPTANCE_CORPUS = (
    "unknot",
    "unlink2",
    "hopf",
    "trefoil",
    "figure8",
    "torus_link_2_4",
    "cinquefoil",
    "granny",
    "square",
    "trefoil_figure8",
)
