"""Witness extraction for nilpotent coefficients of invertible polynomials.

Given an inverse pair f*g = 1 of univariate polynomials over a commutative
ring, every nonconstant coefficient u of f is nilpotent.  This package
computes an exponent e with u^e = 0 by induction over the finite lattice of
generator-set labels, and in the indeterminate-coefficient mode also emits
an independently checkable certificate: an exact polynomial identity
writing u^e as a combination of the defining relations.
"""

from .certificates import (
    ConcreteCheck,
    MembershipWitness,
    NilpotencyCertificate,
    NotInClosure,
    SymbolicCheck,
    WitnessBuilder,
    combine,
    dump_certificate,
    expand_witness,
    extract_certificate,
    gauss_product_witness,
    load_certificate,
    membership_witness,
    node_witnesses,
    power_check,
    unit_relation,
    verify_concrete,
    verify_symbolic,
    witness_gap,
)
from .dot import emit_dot
from .engine import (
    CaseTag,
    Digraph,
    DigraphNode,
    InternalInconsistency,
    NotAUnit,
    ProblemInstance,
    case_split,
    check_unit,
    convolution,
    convolution_polys,
    generic_coefficients,
    grow_digraph,
    root_exponent,
    structural_metrics,
)
from .induction import (
    BadInput,
    CompositeWitness,
    FinitePoset,
    GoodnessOutcome,
    Holds,
    ModIdeal,
    NotReducible,
    PrimeIdeal,
    Reduce,
    SptOutcome,
    UnitIdeal,
    check_key_lemma,
    label_poset,
    ln_decompose,
    nc_run_induction,
    radical_ideal_poset,
    radical_modn,
    run_induction,
    spt_modn,
)
from .oracles import (
    Derivation,
    IdealLabel,
    MembershipDecision,
    generic_closure,
    generic_membership,
    mod_membership,
)
from .poly import (
    Indeterminate,
    MissingAssignment,
    Monomial,
    MultiPoly,
    PolyParseError,
    avar,
    bvar,
)
from .rings import RingHandle, xgcd

__version__ = "0.1.0"

__all__ = [
    "BadInput",
    "CaseTag",
    "CompositeWitness",
    "ConcreteCheck",
    "Derivation",
    "Digraph",
    "DigraphNode",
    "FinitePoset",
    "GoodnessOutcome",
    "Holds",
    "IdealLabel",
    "Indeterminate",
    "InternalInconsistency",
    "MembershipDecision",
    "MembershipWitness",
    "MissingAssignment",
    "ModIdeal",
    "Monomial",
    "MultiPoly",
    "NilpotencyCertificate",
    "NotAUnit",
    "NotInClosure",
    "NotReducible",
    "PolyParseError",
    "PrimeIdeal",
    "ProblemInstance",
    "Reduce",
    "RingHandle",
    "SptOutcome",
    "SymbolicCheck",
    "UnitIdeal",
    "WitnessBuilder",
    "avar",
    "bvar",
    "case_split",
    "check_key_lemma",
    "check_unit",
    "combine",
    "convolution",
    "convolution_polys",
    "dump_certificate",
    "emit_dot",
    "expand_witness",
    "extract_certificate",
    "gauss_product_witness",
    "generic_closure",
    "generic_coefficients",
    "generic_membership",
    "grow_digraph",
    "label_poset",
    "ln_decompose",
    "load_certificate",
    "membership_witness",
    "mod_membership",
    "nc_run_induction",
    "node_witnesses",
    "power_check",
    "radical_ideal_poset",
    "radical_modn",
    "root_exponent",
    "run_induction",
    "spt_modn",
    "structural_metrics",
    "unit_relation",
    "verify_concrete",
    "verify_symbolic",
    "witness_gap",
    "xgcd",
]
