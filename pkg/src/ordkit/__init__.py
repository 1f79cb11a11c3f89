"""ordkit: finite order structures, their axioms, and exhaustive verification."""

from .axioms import (
    AxiomProfile,
    check_asymmetry,
    check_cotransitivity,
    check_decidable_eq,
    check_discreteness,
    check_negative_antisymmetry,
    check_positive_antisymmetry,
    check_total,
    check_transitivity,
    classify,
)
from .derived import (
    DerivedOrder,
    WeakOrderComparison,
    compare_weak_orders,
    derive,
    gord_to_poset,
    leq_neg_rows,
    leq_pos_rows,
)
from .enumeration import (
    DEFAULT_BOUNDS,
    EQUALITY_MODES,
    EnumerationSummary,
    enumerate_structures,
    partition_setoids,
    profile_key,
)
from .gallery import (
    GALLERY_NAMES,
    BridgeFailureReport,
    ExtractionReport,
    GalleryOutcome,
    gallery_bridge_antisymmetry_failure,
    gallery_double_negation_from_strengthening,
    gallery_lem_from_lex_cotransitivity,
    gallery_non_cotransitive,
    gallery_sierpinski,
    gallery_weak_lem_from_cotransitivity,
    gallery_weak_lem_from_totality,
    run_all_galleries,
    run_gallery,
)
from .products import (
    EmbeddingMap,
    check_embedding,
    check_isomorphism,
    check_star_condition,
    coarse_product,
    identity_embedding,
    lex_product,
    lex_product_n,
    pair_index,
    pair_split,
    poset_to_strict,
    unit_structure,
    weak_lex_product,
)
from .relfile import (
    InvalidStructureError,
    ParseError,
    dumps_structure,
    load_structure,
    parse_seq_compare,
    parse_structure,
    poset_to_dict,
    strict_to_dict,
    structure_to_dict,
)
from .sequences import (
    EvConstSeq,
    SeqOutcome,
    SeqVerdict,
    seq_compare,
    seq_compare_bounded,
    seq_normalize,
    seq_universe,
)
from .setoid import (
    PosetRel,
    Setoid,
    StrictRel,
    Verdict,
    check_well_defined,
    dual,
    identity_setoid,
    make_poset_rel,
    make_setoid,
    make_strict_rel,
    poset_violation,
    well_defined_violation,
)

__version__ = "0.1.0"
