"""Reasoning over rich incomplete argumentation frameworks, by completion
enumeration or by SAT."""

__version__ = "0.1.0"

from .completions import (
    CompletionChoice,
    Orientation,
    completion_count_bound,
    enumerate_completions,
    is_completion,
    iter_completions,
)
from .core import (
    ArgumentationFramework,
    RichIAF,
    RIAFError,
    ValidationError,
    lift_af,
    lift_iaf,
    restrict,
    validate_riaf,
)
from .engine import Engine, has_sat_path, solve
from .io import ParseError, parse_riaf, read_riaf, serialize_riaf
from .reasoning import (
    ProblemKind,
    QueryError,
    QueryVerdict,
    inc_nv,
    inc_nv_star,
    inc_pv,
    inc_pv_star,
    nca,
    nsa,
    pca,
    psa,
)
from .semantics import (
    AcceptanceStatus,
    Semantics,
    acceptance_sets,
    attacks,
    defends,
    defends_against,
    enumerate_extensions,
    grounded_extension,
    is_extension,
)
