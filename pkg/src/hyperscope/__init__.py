"""Typed n-ary hypernetworks with boundary-scoped, identity-preserving views.

The backcloth is an immutable value; boundary tags are non-structural
annotations; projection filters visibility without creating, removing, or
inferring structure; and the structural operators applied to projections
give safe, view-level reasoning that never touches the backcloth.
"""

from .axioms import ValidationReport, Violation, validate
from .corpus import load_fixture
from .errors import (
    ArityError,
    BaseMismatchError,
    CycleError,
    DuplicateIdentifierError,
    FixtureMissingError,
    HtSyntaxError,
    HypernetworkError,
    IdentityConflictError,
    UnresolvedIdentifierError,
)
from .model import (
    Hypernetwork,
    Hypersimplex,
    Identifier,
    Kind,
    Participant,
    RelationSymbol,
    View,
    descendants,
    structural_digest,
)
from .ops import difference, merge, meet, prune, split
from .scope import (
    project,
    scoped_apply,
    scoped_prune,
    scoped_split,
    view_intersect,
    view_union,
    visible_set,
)
from .text import SourceSpan, parse, parse_unchecked, serialize

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "BaseMismatchError",
    "CycleError",
    "DuplicateIdentifierError",
    "FixtureMissingError",
    "HtSyntaxError",
    "Hypernetwork",
    "HypernetworkError",
    "Hypersimplex",
    "Identifier",
    "IdentityConflictError",
    "Kind",
    "Participant",
    "RelationSymbol",
    "SourceSpan",
    "UnresolvedIdentifierError",
    "ValidationReport",
    "View",
    "Violation",
    "descendants",
    "difference",
    "load_fixture",
    "merge",
    "meet",
    "parse",
    "parse_unchecked",
    "project",
    "prune",
    "scoped_apply",
    "scoped_prune",
    "scoped_split",
    "serialize",
    "split",
    "structural_digest",
    "validate",
    "view_intersect",
    "view_union",
    "visible_set",
]
