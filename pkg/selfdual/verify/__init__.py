from selfdual.verify.canonical import canonical_form, canonical_graph, canonical_order, isomorphic
from selfdual.verify.embedding import planar_embed
from selfdual.verify.enumerate import EnumerationQuery, count_realizations, enumerate_realizations, is_unigraphic
from selfdual.verify.fingerprint import (
    ComponentDescriptor,
    Fingerprint,
    component_fingerprint,
    degree_fingerprint,
    degree_profile,
)
from selfdual.verify.selfdual import check_lemma_leaf, check_phi, is_self_dual, self_dual_witness
from selfdual.verify.witnesses import WitnessBranch, WitnessEvidence, WitnessPair, two_witnesses, witness_evidence

__all__ = [
    "ComponentDescriptor",
    "EnumerationQuery",
    "Fingerprint",
    "WitnessBranch",
    "WitnessEvidence",
    "WitnessPair",
    "canonical_form",
    "canonical_graph",
    "canonical_order",
    "check_lemma_leaf",
    "check_phi",
    "component_fingerprint",
    "count_realizations",
    "degree_fingerprint",
    "degree_profile",
    "enumerate_realizations",
    "is_self_dual",
    "is_unigraphic",
    "isomorphic",
    "planar_embed",
    "self_dual_witness",
    "two_witnesses",
    "witness_evidence",
]
