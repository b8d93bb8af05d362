"""Braid calculus for transversal links: invariants, Markov moves, certificate search."""

from .braid import (
    BraidWord,
    closure_permutation,
    components,
    degree,
    linking_matrix,
    parse_braid,
    format_braid,
    self_linking,
)
from .garside import ConjugacyEngine, conj_key, equal, normal_form, positive_decomposition
from .handles import handle_reduce
from .moves import MoveCertificate, apply_move, verify_certificate
from .alexander import alexander_poly
from .search import SearchBudget, SearchOutcome, search, reduce_to_standard_unknot

__all__ = [
    "BraidWord", "closure_permutation", "components", "degree", "linking_matrix",
    "parse_braid", "format_braid", "self_linking", "ConjugacyEngine", "conj_key", "equal",
    "normal_form", "positive_decomposition", "handle_reduce", "MoveCertificate",
    "apply_move", "verify_certificate", "alexander_poly", "SearchBudget", "SearchOutcome",
    "search", "reduce_to_standard_unknot",
]
__version__ = "0.1.0"
