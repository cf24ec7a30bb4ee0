"""Finite ordered semigroups: structure, ideals, Green's relations,
regularity classes, semilattice decompositions, power constructions, and
exhaustive verification of their characterization theorems.
"""

from .core import (
    ElementSet,
    FiniteSemigroup,
    OrderedSemigroup,
    down_closure,
    dual_structure,
    induced_substructure,
    set_product,
    validate_semigroup,
    validate_structure,
)
from .elements import (
    ElementRegularity,
    element_regularity,
    group_component,
    h_commute_witness,
    inverses_of,
    ordered_idempotents,
)
from .ideals import (
    EquivalenceRelation,
    IdealCheck,
    Side,
    enumerate_ideals,
    green_relation,
    idempotent_ideal_identities,
    is_ideal,
    n_relation,
    principal_filter,
    principal_ideal,
)
from .classification import (
    BUNDLE_ORDER,
    PREDICATE_ORDER,
    classify,
    equivalence_bundle,
    predicate,
)
from .congruence import (
    Decomposition,
    RelationProperties,
    THEOREM_ORDER,
    complete_semilattice_congruences,
    decompose,
    enumerate_partitions,
    least_csc,
    relation_properties,
    structure_theorem_check,
)
from .power import (
    SemigroupMorphism,
    is_completely_regular_semigroup,
    is_group,
    is_left_group,
    join,
    power_correspondence_check,
    power_ordered_semigroup,
    semigroup_morphism,
    universal_extension,
)
from .enumeration import (
    EnumerationStream,
    canonical_form,
    enumerate_compatible_orders,
    enumerate_ordered_semigroups,
    enumerate_semigroups,
    sample_ordered_semigroups,
    transcript_hash,
)
from .fileformat import parse_document, serialize_document
from .report import (
    BundleResult,
    ClassificationReport,
    ConditionResult,
    PredicateResult,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BUNDLE_ORDER",
    "BundleResult",
    "ClassificationReport",
    "ConditionResult",
    "Decomposition",
    "ElementRegularity",
    "ElementSet",
    "EnumerationStream",
    "EquivalenceRelation",
    "FiniteSemigroup",
    "IdealCheck",
    "OrderedSemigroup",
    "PREDICATE_ORDER",
    "PredicateResult",
    "RelationProperties",
    "SemigroupMorphism",
    "Side",
    "THEOREM_ORDER",
    "canonical_form",
    "classify",
    "complete_semilattice_congruences",
    "decompose",
    "down_closure",
    "dual_structure",
    "element_regularity",
    "enumerate_compatible_orders",
    "enumerate_ideals",
    "enumerate_ordered_semigroups",
    "enumerate_partitions",
    "enumerate_semigroups",
    "equivalence_bundle",
    "errors",
    "green_relation",
    "group_component",
    "h_commute_witness",
    "idempotent_ideal_identities",
    "induced_substructure",
    "inverses_of",
    "is_completely_regular_semigroup",
    "is_group",
    "is_ideal",
    "is_left_group",
    "join",
    "least_csc",
    "n_relation",
    "ordered_idempotents",
    "parse_document",
    "power_correspondence_check",
    "power_ordered_semigroup",
    "predicate",
    "principal_filter",
    "principal_ideal",
    "relation_properties",
    "sample_ordered_semigroups",
    "semigroup_morphism",
    "serialize_document",
    "set_product",
    "structure_theorem_check",
    "transcript_hash",
    "universal_extension",
    "validate_semigroup",
    "validate_structure",
]
