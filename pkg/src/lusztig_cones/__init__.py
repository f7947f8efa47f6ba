"""Lusztig cones of type A: wiring diagrams, partial quivers and exact
simplicial spanning vectors."""

from .cone import (
    ChamberLabel,
    ConeMatrix,
    NotInConeError,
    RootVector,
    SimpleRootLabel,
    SpanningSet,
    UnimodularityError,
    cone_matrix,
    contains,
    decompose,
    invert_unimodular,
    spanning_set,
    superadditivity,
)
from .pquiver import (
    Component,
    PartialQuiver,
    Quiver,
    bfz_word,
    chamber_crossings,
    chamber_set_of,
    components,
    leq,
    partial_quiver_of,
    quiver_chamber_set,
)
from .spanning import (
    TheoremReport,
    VerifyReport,
    v_component,
    v_partial_quiver,
    v_simple,
    verify_all,
    verify_theorem,
)
from .wiring import Chamber, Crossing, WiringDiagram, build_wiring, chambers, render
from .words import (
    BraidMoveError,
    ReducedWord,
    apply_braid_move,
    commutation_class,
    enumerate_reduced_words,
    is_reduced_word_for_w0,
    root_ordering,
    staircase_word,
)

__all__ = [
    "BraidMoveError",
    "Chamber",
    "ChamberLabel",
    "Component",
    "ConeMatrix",
    "Crossing",
    "NotInConeError",
    "PartialQuiver",
    "Quiver",
    "ReducedWord",
    "RootVector",
    "SimpleRootLabel",
    "SpanningSet",
    "TheoremReport",
    "UnimodularityError",
    "VerifyReport",
    "WiringDiagram",
    "apply_braid_move",
    "bfz_word",
    "build_wiring",
    "chamber_crossings",
    "chamber_set_of",
    "chambers",
    "commutation_class",
    "components",
    "cone_matrix",
    "contains",
    "decompose",
    "enumerate_reduced_words",
    "invert_unimodular",
    "is_reduced_word_for_w0",
    "leq",
    "partial_quiver_of",
    "quiver_chamber_set",
    "render",
    "root_ordering",
    "spanning_set",
    "staircase_word",
    "superadditivity",
    "v_component",
    "v_partial_quiver",
    "v_simple",
    "verify_all",
    "verify_theorem",
]
