"""Mixed unit interval bigraphs: models, catalog, recognition, repair."""

from .bigraph import (
    Bigraph,
    Embedding,
    canonical_form,
    contains_induced,
    copy_classes,
    enumerate_connected_bipartite,
    find_copies,
    format_graph,
    induced_subgraph_search,
    parse_graph,
)
from .families import FamilyId, forbidden_catalog, generate, tilde
from .fixtures import fixture
from .intervals import Interval, cc, co, format_interval, intersects, is_unit, oc, oo, parse_interval, reflect, translate
from .recognize import (
    DifferenceConstraint,
    RecognitionOutcome,
    min_bad_pair_representation,
    recognize_interval_closed,
    recognize_mixed_unit,
    solve_difference_constraints,
)
from .repair import (
    BadPairStructure,
    FailureReport,
    claim1_witnesses,
    extract_structure,
    finish_clean,
    repair,
    rewrite_left,
    rewrite_right,
)
from .representation import (
    BadPair,
    ValidityReport,
    format_representation,
    intersection_bigraph,
    is_almost_proper,
    is_mixed_proper,
    is_mixed_unit,
    list_bad_pairs,
    parse_representation,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
