"""Validation of a hypernetwork against its axioms.

``validate`` is total: it never stops at the first defect, and defects are
returned as data rather than raised, so a whole corpus can be checked and
reported in one pass. An empty report means the hypernetwork is valid.

Checked per axiom:

* A1: every identifier declared once across the joint namespace of
  vertices, relations, and hypersimplices; every Present participant and
  every relation reference resolves.
* A2: every anti-vertex (Excluded participant) reference resolves; an
  exclusion of an unknown name is indistinguishable from a typo.
* A3: kind is alpha or beta (unreachable through the parser, re-checked for
  directly constructed values).
* A4: participant count equals the declared arity of the bound relation.
* A5: tags are well-formed identifiers with no duplicates on one
  hypersimplex. Tags impose nothing further; they are not resolved against
  any declaration.
* WELLFORMED: containment (Present references between hypersimplices) is
  acyclic, so downward closure is well-founded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Hypernetwork, Hypersimplex, Kind, is_identifier

_DUP_PREFIX = "duplicate declaration"
_DUP_TAG_PREFIX = "duplicate tag"


@dataclass(frozen=True)
class Violation:
    """One axiom defect, located by axiom code and subject identifier."""

    axiom: str
    subject: str
    message: str

    def render(self) -> str:
        return f"{self.axiom}\t{self.subject}\t{self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "violations", tuple(self.violations))

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        """One violation per line: ``AXIOM<tab>subject<tab>message``."""
        return "\n".join(v.render() for v in self.violations)


def _containment_cycles(h: Hypernetwork) -> list[list[str]]:
    """Cycles among hypersimplices along Present participant references."""
    by_id: dict[str, Hypersimplex] = {}
    for s in h.simplices:
        by_id.setdefault(s.id, s)

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {sid: WHITE for sid in by_id}
    cycles: list[list[str]] = []

    for root in by_id:
        if color[root] != WHITE:
            continue
        color[root] = GRAY
        stack: list[tuple[str, int]] = [(root, 0)]
        path = [root]
        while stack:
            node, idx = stack[-1]
            children = [
                p.ref
                for p in by_id[node].participants
                if not p.excluded and p.ref in by_id
            ]
            if idx < len(children):
                stack[-1] = (node, idx + 1)
                child = children[idx]
                if color[child] == GRAY:
                    at = path.index(child)
                    cycles.append(path[at:] + [child])
                elif color[child] == WHITE:
                    color[child] = GRAY
                    stack.append((child, 0))
                    path.append(child)
            else:
                stack.pop()
                path.pop()
                color[node] = BLACK
    return cycles


def validate(h: Hypernetwork) -> ValidationReport:
    """Report every axiom violation in ``h``; empty report means valid.

    Pure and deterministic: the report is ordered by the declaration order
    of the subject, then by axiom code.
    """
    violations: list[Violation] = []

    decls: list[tuple[str, str]] = [("vertex", str(v)) for v in h.vertices]
    decls += [("relation", str(r.id)) for r in h.relations]
    decls += [("hypersimplex", str(s.id)) for s in h.simplices]

    order: dict[str, int] = {}
    first_kind: dict[str, str] = {}
    dup_reported: set[str] = set()
    for kind_name, name in decls:
        if name not in order:
            order[name] = len(order)
            first_kind[name] = kind_name
            if not is_identifier(name):
                violations.append(
                    Violation("A1", name, f"{name!r} is not a well-formed identifier")
                )
        elif name not in dup_reported:
            dup_reported.add(name)
            violations.append(
                Violation(
                    "A1",
                    name,
                    f"{_DUP_PREFIX} of {name} (first declared as a {first_kind[name]})",
                )
            )

    declared_refs = set(h.vertices) | {s.id for s in h.simplices}
    rel_by_id = {}
    for r in h.relations:
        rel_by_id.setdefault(r.id, r)

    for s in h.simplices:
        if not isinstance(s.kind, Kind):
            violations.append(
                Violation("A3", s.id, f"kind must be alpha or beta, got {s.kind!r}")
            )
        rel = rel_by_id.get(s.relation)
        if rel is None:
            violations.append(
                Violation("A1", s.id, f"relation {s.relation} is not declared")
            )
        elif len(s.participants) != rel.arity:
            violations.append(
                Violation(
                    "A4",
                    s.id,
                    f"binds {len(s.participants)} participants to {rel.id}"
                    f" which has arity {rel.arity}",
                )
            )
        for p in s.participants:
            if p.ref not in declared_refs:
                if p.excluded:
                    violations.append(
                        Violation("A2", s.id, f"anti-vertex {p.ref} does not resolve")
                    )
                else:
                    violations.append(
                        Violation("A1", s.id, f"participant {p.ref} does not resolve")
                    )
        seen_tags: set[str] = set()
        for t in s.tags:
            if not is_identifier(t):
                violations.append(
                    Violation("A5", s.id, f"tag {t!r} is not a well-formed identifier")
                )
                continue
            if t in seen_tags:
                violations.append(Violation("A5", s.id, f"{_DUP_TAG_PREFIX} {t}"))
            seen_tags.add(t)

    for cycle in _containment_cycles(h):
        violations.append(
            Violation("WELLFORMED", cycle[0], "containment cycle: " + " -> ".join(cycle))
        )

    violations.sort(key=lambda v: (order.get(v.subject, len(order)), v.subject, v.axiom))
    return ValidationReport(tuple(violations))
