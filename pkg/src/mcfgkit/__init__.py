"""Toolkit for multiple context-free grammars.

Grammars whose non-terminals derive tuples of strings, with:

- rule application, validity and shape checks (:mod:`mcfgkit.grammar`),
- derivation trees and subtree surgery (:mod:`mcfgkit.derivation`),
- a chart recognizer with parse extraction (:mod:`mcfgkit.recognizer`),
- bounded term and language enumeration (:mod:`mcfgkit.enumeration`),
- preorders on index sets and their block languages (:mod:`mcfgkit.preorders`),
- a grammar construction for those languages (:mod:`mcfgkit.construction`),
- subtree-swap pumping experiments (:mod:`mcfgkit.pumping`),
- plain-text file formats (:mod:`mcfgkit.formats`) and a CLI (:mod:`mcfgkit.cli`).
"""

from .derivation import (
    DerivationTree,
    count_identity_violations,
    letter_counts,
    nodes,
    substitute_subtree,
    subtree_at,
    term_of,
    validate_tree,
    yield_of,
)
from .enumeration import (
    DiffReport,
    TermEnumeration,
    compare_languages,
    direct_language,
    enumerate_language,
    enumerate_terms,
)
from .errors import (
    ForeignLetterError,
    FormatError,
    LabelMismatchError,
    McfgError,
    RuleApplicationError,
    TermLimitError,
    TreePathError,
    TreeStructureError,
    UnsupportedGrammarError,
    WordRejectedError,
)
from .construction import build_grammar, increment_rules, witness_derivation
from .grammar import (
    EPSILON,
    MCFG,
    NonTerminal,
    Pattern,
    ProductionRule,
    Term,
    Variable,
    Violation,
    Word,
    apply_rule,
    dimension,
    equivalent_grammars,
    is_non_deleting,
    is_normal_form,
    is_valid,
    validate_grammar,
)
from .preorders import (
    Preorder,
    block_word,
    canonical_alphabet,
    chain,
    closure,
    comparability_graph,
    discrete,
    is_connected,
    is_total,
    member,
    totalisations,
)
from .pumping import (
    DeltaReport,
    ExperimentReport,
    PumpSite,
    SiteResult,
    branching_bound,
    combiner_count,
    combiners,
    delta_report,
    find_pump_sites,
    pump_down,
    pump_experiment,
    pump_up,
    site_forcing_size,
)
from .recognizer import Item, Span, parse, recognize
from .samples import (
    balanced_pair_grammar,
    deleting_grammar,
    overgenerating_block_grammar,
    single_letter_pump_grammar,
)

__version__ = "0.1.0"

__all__ = [
    "DerivationTree",
    "DeltaReport",
    "DiffReport",
    "EPSILON",
    "ExperimentReport",
    "ForeignLetterError",
    "FormatError",
    "Item",
    "LabelMismatchError",
    "MCFG",
    "McfgError",
    "NonTerminal",
    "Pattern",
    "Preorder",
    "ProductionRule",
    "PumpSite",
    "RuleApplicationError",
    "SiteResult",
    "Span",
    "Term",
    "TermEnumeration",
    "TermLimitError",
    "TreePathError",
    "TreeStructureError",
    "UnsupportedGrammarError",
    "Variable",
    "Violation",
    "Word",
    "WordRejectedError",
    "apply_rule",
    "balanced_pair_grammar",
    "block_word",
    "branching_bound",
    "build_grammar",
    "canonical_alphabet",
    "chain",
    "closure",
    "combiner_count",
    "combiners",
    "comparability_graph",
    "compare_languages",
    "count_identity_violations",
    "deleting_grammar",
    "delta_report",
    "dimension",
    "direct_language",
    "discrete",
    "enumerate_language",
    "enumerate_terms",
    "equivalent_grammars",
    "find_pump_sites",
    "increment_rules",
    "is_connected",
    "is_non_deleting",
    "is_normal_form",
    "is_total",
    "is_valid",
    "letter_counts",
    "member",
    "nodes",
    "overgenerating_block_grammar",
    "parse",
    "pump_down",
    "pump_experiment",
    "pump_up",
    "recognize",
    "single_letter_pump_grammar",
    "site_forcing_size",
    "substitute_subtree",
    "subtree_at",
    "term_of",
    "totalisations",
    "validate_grammar",
    "validate_tree",
    "witness_derivation",
    "yield_of",
]
