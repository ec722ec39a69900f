"""Exhaustive verification of exchange axioms for M-natural-concave set
functions, valuated matroids and their effective-domain families."""

from .axioms import (
    AxiomId,
    CheckReport,
    Witness,
    check_axiom,
    check_batch,
    is_m_concave,
    is_mnat_concave,
    two_maximizer_check,
    verify_witness,
)
from .core import (
    NEG_INF,
    CapExceeded,
    EmptyDomain,
    GroundSet,
    LiftSpec,
    LiftTooSmall,
    SetFamily,
    SetFunction,
    add_linear,
    effective_domain,
    elements_of,
    eval_at,
    layer,
    lift,
    mask_of,
)
from .duality import (
    DualityConfig,
    ExchangeContext,
    HypothesisViolated,
    check_conjugate_submodular,
    check_multiple_exchange_value,
    conjugate,
    exchange_pair,
    verify_lemma_g1g2,
)
from .family import (
    FamilyAxiomId,
    InternalContradiction,
    check_family,
    implied_properties,
    is_matroid_independence,
    verify_family_witness,
)

__version__ = "0.1.0"
