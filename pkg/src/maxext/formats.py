"""Plain-text instance files: operators, finite functions, posets, semilattices.

Operator file, one rule per line (``#`` starts a comment)::

    {1,2} -> 5          # deterministic rule
    {} -> {3,4}         # nondeterministic rule, choose one of 3, 4

Poset file::

    elements 3
    0 <= 1
    1 <= 2

A semilattice file is a poset file plus ``join a b = c`` lines or the single
line ``join auto``.
"""

from __future__ import annotations

import re

from .closure import ClosureOperator
from .errors import InputError, PreconditionError
from .finset import FinSet, Universe, parse_set
from .ndclosure import NdClosureOperator
from .orders import JoinSemilattice, Poset

_RULE = re.compile(r"^(\{[^}]*\})\s*->\s*(\{[^}]*\}|\d+)$")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield no, raw, s


def parse_rules(text: str, source: str | None = None) -> list[tuple[FinSet, int | FinSet]]:
    rules = []
    for no, raw, s in _lines(text):
        m = _RULE.match(s)
        if not m:
            raise InputError("expected a rule like '{1,2} -> 5' or '{1} -> {2,3}'", no, raw.find(s[0]) + 1, source)
        try:
            premise = parse_set(m.group(1))
            rhs = m.group(2)
            conclusion = int(rhs) if rhs.isdigit() else parse_set(rhs)
        except InputError as e:
            raise InputError(e.message, no, raw.find(s[0]) + 1, source) from None
        rules.append((premise, conclusion))
    return rules


def _mentioned(rules) -> int:
    top = -1
    for F, c in rules:
        top = max(top, F.max(), c if isinstance(c, int) else c.max())
    return top + 1


def load_closure_operator(text: str, universe: int | None = None, source: str | None = None) -> ClosureOperator:
    rules = parse_rules(text, source)
    for F, c in rules:
        if not isinstance(c, int):
            raise InputError(f"rule {F} -> {c} is nondeterministic; expected a single conclusion", source=source)
    size = universe if universe is not None else max(1, _mentioned(rules))
    try:
        return ClosureOperator(rules, Universe(size))
    except PreconditionError as e:
        raise InputError(str(e), source=source) from None


def load_nd_operator(text: str, universe: int | None = None, source: str | None = None) -> NdClosureOperator:
    rules = [
        (F, FinSet.of([c]) if isinstance(c, int) else c) for F, c in parse_rules(text, source)
    ]
    size = universe if universe is not None else max(1, _mentioned(rules))
    try:
        return NdClosureOperator(rules, Universe(size))
    except PreconditionError as e:
        raise InputError(str(e), source=source) from None


_PAIR = re.compile(r"^\s*(\d+)\s*[:]\s*(\d+)\s*$")


def parse_function(text: str) -> list[tuple[int, int]]:
    """``"0:3, 1:3, 2:5"`` to ``[(0, 3), (1, 3), (2, 5)]``; ``""`` or ``"{}"`` is empty."""
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    if not s.strip():
        return []
    out = []
    seen = {}
    for part in s.split(","):
        m = _PAIR.match(part)
        if not m:
            raise InputError(f"bad function entry {part.strip()!r}; expected 'n:value'")
        n, v = int(m.group(1)), int(m.group(2))
        if n in seen and seen[n] != v:
            raise InputError(f"{n} is mapped to both {seen[n]} and {v}")
        seen[n] = v
        out.append((n, v))
    return out


_ELEMENTS = re.compile(r"^elements\s+(\d+)$")
_LEQ = re.compile(r"^(\d+)\s*<=\s*(\d+)$")
_JOIN = re.compile(r"^join\s+(\d+)\s+(\d+)\s*=\s*(\d+)$")


def _parse_order(text: str, source, allow_join: bool):
    size = None
    pairs = []
    joins = []
    auto = False
    for no, raw, s in _lines(text):
        col = raw.find(s[0]) + 1
        if size is None:
            m = _ELEMENTS.match(s)
            if not m:
                raise InputError("first line must be 'elements m'", no, col, source)
            size = int(m.group(1))
            continue
        m = _LEQ.match(s)
        if m:
            a, b = int(m.group(1)), int(m.group(2))
            if a >= size or b >= size:
                raise InputError(f"element out of range 0..{size - 1}", no, col, source)
            pairs.append((a, b))
            continue
        if allow_join:
            if s == "join auto":
                auto = True
                continue
            m = _JOIN.match(s)
            if m:
                a, b, c = (int(g) for g in m.groups())
                if max(a, b, c) >= size:
                    raise InputError(f"element out of range 0..{size - 1}", no, col, source)
                joins.append((a, b, c, no))
                continue
        raise InputError("expected 'a <= b'" + (", 'join a b = c' or 'join auto'" if allow_join else ""), no, col, source)
    if size is None:
        raise InputError("empty order file", 1, 1, source)
    return size, pairs, joins, auto


def load_poset(text: str, source: str | None = None) -> Poset:
    size, pairs, _, _ = _parse_order(text, source, allow_join=False)
    try:
        return Poset.from_relations(size, pairs)
    except PreconditionError as e:
        raise InputError(str(e), source=source) from None


def load_semilattice(text: str, source: str | None = None) -> JoinSemilattice:
    size, pairs, joins, auto = _parse_order(text, source, allow_join=True)
    if not joins and not auto:
        raise InputError("semilattice file needs 'join a b = c' lines or 'join auto'", source=source)
    try:
        L = JoinSemilattice.from_poset(Poset.from_relations(size, pairs))
    except PreconditionError as e:
        raise InputError(str(e), source=source) from None
    for a, b, c, no in joins:
        if L.join[a][b] != c:
            raise InputError(
                f"join {a} {b} = {c} disagrees with the order (least upper bound is {L.join[a][b]})",
                no, 1, source,
            )
    return L
