"""strata: stratified-labeling solver for abstract argumentation.

Computes classical and stratified labelings of attack graphs, bridges them
to the tolerance-based ranking of conditional knowledge bases, checks
ranking postulates, and searches minimal attack edits that enforce
acceptance. See the README for the command line interface.
"""

from .enforce import EnforcementResult, attack_distance, characteristic, conjecture_scan
from .errors import (
    AmbiguousBarError,
    ArgumentSetMismatchError,
    BudgetExceededError,
    DuplicateArgumentError,
    InconsistentKnowledgeBaseError,
    LabelingMismatchError,
    LimitExceededError,
    NotStratifiedError,
    ParseError,
    StrataError,
    UndeclaredArgumentError,
    UnknownArgumentError,
    UnknownAtomError,
)
from .formats import (
    parse_af,
    parse_conditional,
    parse_formula,
    parse_kb,
    print_af,
    print_kb,
    to_dot,
)
from .framework import (
    ALL_SEMANTICS,
    ArgumentationFramework,
    Label,
    Labeling,
    Semantics,
    grounded,
    is_admissible,
    is_complete,
    labelings,
)
from .ordsem import (
    PropertyReport,
    PropertyTag,
    PropertyWitness,
    check_property,
    is_isomorphism,
    weakly_connected_components,
)
from .propositional import (
    And,
    Bottom,
    Conditional,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Status,
    Top,
    Var,
    World,
    conditional_status,
    evaluate,
    satisfies,
    worlds,
)
from .ranks import INF, Rank, is_finite, rank_str
from .stratified import (
    Characterization,
    StratifiedLabeling,
    characterize,
    grounded_stratified,
    reconstruct,
    stratified_labelings,
)
from .systemz import (
    BridgeReport,
    KnowledgeBase,
    RankingFunction,
    ZPartition,
    bridge_check,
    induced_framework,
    satisfied_conditionals,
    tolerance_witness,
    z_partition,
    z_ranking,
)

__version__ = "0.1.0"
