"""The ``.ht`` text format: parser and canonical serializer.

Line-oriented grammar; ``#`` starts a comment, blank lines are ignored:

    vertex NAME
    relation NAME(role1, role2, ...)
    NAME = < p1, p2, ... ; REL ; tag1, tag2, ... > : alpha|beta

The ``; tags`` segment may be omitted entirely for an empty tag set (an
empty segment such as ``< a ; R ; >`` is a syntax error), and ``: kind``
may be omitted and defaults to alpha. A participant written ``!x`` is the
anti-vertex of ``x``. Forward references within one file are fine;
resolution happens once the whole file has been read.

Canonical output, produced by :func:`serialize`, is bit-exact: one
declaration per line in the hypernetwork's stored order (vertices, then
relations, then hypersimplices), exactly one space after commas and around
``;``, ``=``, and ``:``, the kind always written, tags in stored order, LF
line endings, and a trailing newline. ``parse(serialize(h))`` is full-equal
to ``h``, and ``serialize`` is a fixed point on its own output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import axioms
from .errors import (
    ArityError,
    CycleError,
    DuplicateIdentifierError,
    HtSyntaxError,
    UnresolvedIdentifierError,
)
from .model import Hypernetwork, Hypersimplex, Identifier, Kind, Participant, RelationSymbol

_TOKEN_RE = re.compile(r"[A-Za-z0-9_-]+|[<>();,=:!]")
_IDENT_RE = re.compile(r"[A-Za-z0-9_-]+\Z")


@dataclass(frozen=True)
class SourceSpan:
    """1-based line and column of a position in source text."""

    line: int
    column: int


@dataclass(frozen=True)
class _Token:
    text: str
    span: SourceSpan

    @property
    def is_ident(self) -> bool:
        return bool(_IDENT_RE.match(self.text))


def _tokenize(line: str, lineno: int) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    for m in _TOKEN_RE.finditer(line):
        gap = line[pos : m.start()]
        if gap.strip():
            bad = len(gap) - len(gap.lstrip())
            raise HtSyntaxError(
                f"unexpected character {gap.strip()[0]!r}",
                SourceSpan(lineno, pos + bad + 1),
            )
        tokens.append(_Token(m.group(), SourceSpan(lineno, m.start() + 1)))
        pos = m.end()
    tail = line[pos:]
    if tail.strip():
        bad = len(tail) - len(tail.lstrip())
        raise HtSyntaxError(
            f"unexpected character {tail.strip()[0]!r}",
            SourceSpan(lineno, pos + bad + 1),
        )
    return tokens


class _Cursor:
    def __init__(self, tokens: list[_Token], lineno: int):
        self.tokens = tokens
        self.lineno = lineno
        self.at = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.at] if self.at < len(self.tokens) else None

    def _end_span(self) -> SourceSpan:
        if self.tokens:
            last = self.tokens[-1]
            return SourceSpan(self.lineno, last.span.column + len(last.text))
        return SourceSpan(self.lineno, 1)

    def take(self, expected: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise HtSyntaxError(f"expected {expected!r}", self._end_span())
        if tok.text != expected:
            raise HtSyntaxError(f"expected {expected!r}, got {tok.text!r}", tok.span)
        self.at += 1
        return tok

    def take_ident(self, what: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise HtSyntaxError(f"expected {what}", self._end_span())
        if not tok.is_ident:
            raise HtSyntaxError(f"expected {what}, got {tok.text!r}", tok.span)
        self.at += 1
        return tok

    def expect_end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise HtSyntaxError(f"unexpected {tok.text!r} at end of declaration", tok.span)


@dataclass
class _VertexDecl:
    name: _Token


@dataclass
class _RelationDecl:
    name: _Token
    roles: list[_Token]


@dataclass
class _SimplexDecl:
    name: _Token
    participants: list[tuple[bool, _Token]]  # (excluded, ref)
    relation: _Token
    tags: list[_Token]
    kind: Kind


_Decl = _VertexDecl | _RelationDecl | _SimplexDecl


def _parse_relation(cur: _Cursor) -> _RelationDecl:
    cur.take("relation")
    name = cur.take_ident("relation name")
    cur.take("(")
    roles = [cur.take_ident("role name")]
    while cur.peek() is not None and cur.peek().text == ",":
        cur.take(",")
        roles.append(cur.take_ident("role name"))
    cur.take(")")
    cur.expect_end()
    seen: set[str] = set()
    for r in roles:
        if r.text in seen:
            raise HtSyntaxError(f"duplicate role name {r.text!r}", r.span)
        seen.add(r.text)
    return _RelationDecl(name, roles)


def _parse_simplex(cur: _Cursor) -> _SimplexDecl:
    name = cur.take_ident("hypersimplex name")
    cur.take("=")
    cur.take("<")

    participants: list[tuple[bool, _Token]] = []
    while True:
        excluded = False
        tok = cur.peek()
        if tok is not None and tok.text == "!":
            cur.take("!")
            excluded = True
        participants.append((excluded, cur.take_ident("participant")))
        tok = cur.peek()
        if tok is not None and tok.text == ",":
            cur.take(",")
            continue
        break
    cur.take(";")
    relation = cur.take_ident("relation name")

    tags: list[_Token] = []
    tok = cur.peek()
    if tok is not None and tok.text == ";":
        cur.take(";")
        tags.append(cur.take_ident("boundary tag"))
        while cur.peek() is not None and cur.peek().text == ",":
            cur.take(",")
            tags.append(cur.take_ident("boundary tag"))
    cur.take(">")

    kind = Kind.ALPHA
    tok = cur.peek()
    if tok is not None and tok.text == ":":
        cur.take(":")
        ktok = cur.take_ident("kind (alpha or beta)")
        if ktok.text == "alpha":
            kind = Kind.ALPHA
        elif ktok.text == "beta":
            kind = Kind.BETA
        else:
            raise HtSyntaxError(f"expected alpha or beta, got {ktok.text!r}", ktok.span)
    cur.expect_end()
    return _SimplexDecl(name, participants, relation, tags, kind)


def _scan(text: str) -> list[_Decl]:
    decls: list[_Decl] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = _tokenize(line, lineno)
        cur = _Cursor(tokens, lineno)
        head = tokens[0]
        nxt = tokens[1] if len(tokens) > 1 else None
        # "vertex" and "relation" are not reserved: a second token "="
        # means the line declares a hypersimplex of that name.
        if head.text == "vertex" and (nxt is None or nxt.text != "="):
            cur.take("vertex")
            name = cur.take_ident("vertex name")
            cur.expect_end()
            decls.append(_VertexDecl(name))
        elif head.text == "relation" and (nxt is None or nxt.text != "="):
            decls.append(_parse_relation(cur))
        else:
            decls.append(_parse_simplex(cur))
    return decls


def _build(decls: list[_Decl]) -> Hypernetwork:
    vertices: list[Identifier] = []
    relations: list[RelationSymbol] = []
    simplices: list[Hypersimplex] = []
    for d in decls:
        if isinstance(d, _VertexDecl):
            vertices.append(Identifier(d.name.text))
        elif isinstance(d, _RelationDecl):
            relations.append(
                RelationSymbol(Identifier(d.name.text), tuple(r.text for r in d.roles))
            )
        else:
            simplices.append(
                Hypersimplex(
                    id=Identifier(d.name.text),
                    participants=tuple(
                        Participant(Identifier(t.text), excluded=excl)
                        for excl, t in d.participants
                    ),
                    relation=Identifier(d.relation.text),
                    kind=d.kind,
                    tags=tuple(Identifier(t.text) for t in d.tags),
                )
            )
    return Hypernetwork(tuple(vertices), tuple(relations), tuple(simplices))


def _decl_spans(decls: list[_Decl]) -> dict[str, list[SourceSpan]]:
    spans: dict[str, list[SourceSpan]] = {}
    for d in decls:
        spans.setdefault(d.name.text, []).append(d.name.span)
    return spans


def _raise_for(violation: axioms.Violation, spans: dict[str, list[SourceSpan]]) -> None:
    at = spans.get(violation.subject, [None])
    span = at[0]
    message = violation.message
    if violation.axiom == "A1" and message.startswith(axioms._DUP_PREFIX):
        span = at[1] if len(at) > 1 else at[0]
        raise DuplicateIdentifierError(message, span)
    if violation.axiom == "A5":
        raise DuplicateIdentifierError(message, span)
    if violation.axiom in ("A1", "A2"):
        raise UnresolvedIdentifierError(message, span)
    if violation.axiom == "A4":
        raise ArityError(message, span)
    if violation.axiom == "WELLFORMED":
        raise CycleError(message, span)
    raise HtSyntaxError(message, span)


def parse_unchecked(text: str) -> Hypernetwork:
    """Parse syntax only, leaving semantic defects in the returned value.

    Used by validation tooling that wants to report axiom violations as
    data instead of failing on the first one.
    """
    return _build(_scan(text))


def parse(text: str) -> Hypernetwork:
    """Parse ``.ht`` source into a validated hypernetwork.

    Semantic defects (duplicate declarations, unresolved references, arity
    mismatches, duplicate tags, containment cycles) are rejected eagerly
    with the declaration's source position attached.
    """
    decls = _scan(text)
    h = _build(decls)
    report = axioms.validate(h)
    if not report.ok:
        _raise_for(report.violations[0], _decl_spans(decls))
    return h


def _render_simplex(s: Hypersimplex) -> str:
    parts = ", ".join(str(p) for p in s.participants)
    if s.tags:
        body = f"< {parts} ; {s.relation} ; {', '.join(s.tags)} >"
    else:
        body = f"< {parts} ; {s.relation} >"
    return f"{s.id} = {body} : {s.kind.value}"


def serialize(h: Hypernetwork) -> str:
    """Canonical ``.ht`` form of ``h``; empty hypernetwork gives ``""``."""
    lines = [f"vertex {v}" for v in h.vertices]
    lines += [f"relation {r.id}({', '.join(r.roles)})" for r in h.relations]
    lines += [_render_simplex(s) for s in h.simplices]
    return "".join(line + "\n" for line in lines)
