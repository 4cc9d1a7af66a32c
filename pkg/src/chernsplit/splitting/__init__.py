"""Level splitting of TMYM and YM into Chern-Simons factors."""

from .levels import (
    CorrectionOrder,
    GaugePhase,
    InnerProductFactor,
    InnerProductForm,
    TheoryLevel,
    WZWCoefficient,
    correction_bound,
    gauge_phase_check,
    split_inner_product,
)
from .tmym import (
    EVEN_LEVEL_MESSAGE,
    ZERO_INTERSECTION_MESSAGE,
    Provenance,
    SplitExpectation,
    tmym_expectation,
)
from .words import (
    LoopOperatorWord,
    WordEntry,
    normal_order,
    reorder,
    swap_phase,
    word_from_json,
)

__all__ = [
    "CorrectionOrder",
    "EVEN_LEVEL_MESSAGE",
    "GaugePhase",
    "InnerProductFactor",
    "InnerProductForm",
    "LoopOperatorWord",
    "Provenance",
    "SplitExpectation",
    "TheoryLevel",
    "WZWCoefficient",
    "WordEntry",
    "ZERO_INTERSECTION_MESSAGE",
    "correction_bound",
    "gauge_phase_check",
    "normal_order",
    "reorder",
    "split_inner_product",
    "swap_phase",
    "tmym_expectation",
    "word_from_json",
]
