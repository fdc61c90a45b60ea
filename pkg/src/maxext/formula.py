"""Bounded-quantifier formulas with one free set variable ``X``.

Concrete syntax::

    forall y < 8 . (y in X -> y < 5)
    not 0 in X
    exists z < u . (z in P0 and z in X)

Precedence, tightest first: ``not``, ``and``, ``or``, ``->`` (right
associative), ``<->``.  Quantifier bodies are always parenthesized.  Terms are
naturals, number variables, ``+`` and ``*``.  Lowercase identifiers are number
variables; ``X`` is the free set variable and any other capitalized name is a
set parameter.  The variable ``u`` is always available as a free variable and
is bound to the universe size by :func:`environment`.

Two evaluators are provided.  :func:`eval_hat` compiles the formula to Python
with ``t in X`` replaced by the bit test ``(n >> t) & 1`` on a canonical
index ``n``.  :func:`eval_direct` walks the tree with ``X`` given as an
explicit set of elements; it shares no code with the compiled path and serves
as its oracle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .errors import BudgetError, InputError, PreconditionError
from .finset import (
    DEFAULT_ENUMERATION_CAP,
    EMPTY,
    FinSet,
    Universe,
    format_set,
    iter_bits,
    mask_of,
    parse_set,
    subset_masks,
)

SET_VAR = "X"
UNIVERSE_VAR = "u"


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[Const, Var, Add, Mul]


@dataclass(frozen=True)
class Bool:
    value: bool


@dataclass(frozen=True)
class In:
    term: Term
    set_name: str = SET_VAR


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Less:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Node"


@dataclass(frozen=True)
class And:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Or:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Implies:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Iff:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Forall:
    var: str
    bound: Term
    body: "Node"


@dataclass(frozen=True)
class Exists:
    var: str
    bound: Term
    body: "Node"


Node = Union[Bool, In, Eq, Less, Not, And, Or, Implies, Iff, Forall, Exists]


@dataclass(frozen=True)
class Formula:
    """A checked formula: its tree, free number variables and set parameters."""

    root: Node
    free_vars: tuple[str, ...] = ()
    param_names: tuple[str, ...] = ()
    _code: object = field(default=None, compare=False, repr=False, hash=False)

    def __str__(self) -> str:
        return to_text(self.root)


# ---------------------------------------------------------------------------
# lexer

KEYWORDS = {"forall", "exists", "in", "true", "false", "and", "or", "not"}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym><->|->|[()<=.+*])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'ident', a keyword, a symbol, or 'eof'
    text: str
    line: int
    column: int


def tokenize(text: str, source: str | None = None) -> list[Token]:
    out: list[Token] = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"unexpected character {text[pos]!r}", line, col, source)
        lexeme = m.group()
        kind = m.lastgroup
        if kind == "ident" and lexeme in KEYWORDS:
            kind = lexeme
        elif kind == "sym":
            kind = lexeme
        if kind != "ws":
            out.append(Token(kind, lexeme, line, col))
        nl = lexeme.count("\n")
        if nl:
            line += nl
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


# ---------------------------------------------------------------------------
# parser


class _Fail(Exception):
    def __init__(self, pos: int, tok: Token, expected: Iterable[str]):
        self.pos = pos
        self.tok = tok
        self.expected = tuple(expected)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0
        self.furthest: _Fail | None = None

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def fail(self, *expected: str):
        err = _Fail(self.pos, self.tok, expected)
        f = self.furthest
        if f is None or self.pos > f.pos:
            self.furthest = err
        elif f.pos == self.pos:
            self.furthest = _Fail(self.pos, self.tok, f.expected + expected)
        raise err

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail(kind)
        t = self.tok
        self.pos += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.pos += 1
            return True
        return False

    # formula := imp ('<->' imp)*
    def formula(self) -> Node:
        node = self.implication()
        while self.accept("<->"):
            node = Iff(node, self.implication())
        return node

    def implication(self) -> Node:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Node:
        node = self.conjunction()
        while self.accept("or"):
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Node:
        node = self.unary()
        while self.accept("and"):
            node = And(node, self.unary())
        return node

    def unary(self) -> Node:
        k = self.tok.kind
        if k == "not":
            self.pos += 1
            return Not(self.unary())
        if k in ("forall", "exists"):
            self.pos += 1
            var = self.expect("ident").text
            self.expect("<")
            bound = self.term()
            self.expect(".")
            self.expect("(")
            body = self.formula()
            self.expect(")")
            return (Forall if k == "forall" else Exists)(var, bound, body)
        if k == "true":
            self.pos += 1
            return Bool(True)
        if k == "false":
            self.pos += 1
            return Bool(False)
        if k == "(":
            # '(' opens either a formula group or a term group; try the
            # formula reading first and fall back to an atom
            start = self.pos
            try:
                self.pos += 1
                node = self.formula()
                self.expect(")")
                if self.tok.kind not in ("+", "*", "in", "=", "<"):
                    return node
            except _Fail:
                pass
            self.pos = start
        return self.atom()

    def atom(self) -> Node:
        left = self.term()
        k = self.tok.kind
        if k == "in":
            self.pos += 1
            name = self.expect("ident").text
            return In(left, name)
        if k == "=":
            self.pos += 1
            return Eq(left, self.term())
        if k == "<":
            self.pos += 1
            return Less(left, self.term())
        self.fail("in", "=", "<")

    def term(self) -> Term:
        node = self.product()
        while self.accept("+"):
            node = Add(node, self.product())
        return node

    def product(self) -> Term:
        node = self.primary()
        while self.accept("*"):
            node = Mul(node, self.primary())
        return node

    def primary(self) -> Term:
        t = self.tok
        if t.kind == "num":
            self.pos += 1
            return Const(int(t.text))
        if t.kind == "ident":
            self.pos += 1
            return Var(t.text)
        if t.kind == "(":
            self.pos += 1
            node = self.term()
            self.expect(")")
            return node
        self.fail("number", "variable", "(")


def parse(
    text: str,
    free: Iterable[str] = (),
    params: Iterable[str] | Mapping[str, object] | None = None,
    source: str | None = None,
) -> Formula:
    """Parse formula text.

    ``free`` declares the free number variables; ``params``, when given, is
    the set of admissible parameter names (a mapping's keys count).
    Raises :class:`InputError` with a line/column on syntax errors and on
    unbound or ill-sorted names.
    """
    p = _Parser(tokenize(text, source))
    try:
        root = p.formula()
        p.expect("eof")
    except _Fail:
        f = p.furthest
        t = f.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        exp = ", ".join(dict.fromkeys(f.expected))
        raise InputError(f"syntax error at {found}; expected {exp}", t.line, t.column, source)
    allowed = None if params is None else set(params)
    return _check(root, tuple(free), allowed, source)


def _check(root: Node, free: tuple[str, ...], allowed, source) -> Formula:
    for v in free:
        if not _is_number_var(v):
            raise InputError(f"free variable {v!r} must be a lowercase identifier", source=source)
    declared = set(free) | {UNIVERSE_VAR}
    used_free: set[str] = set()
    used_params: set[str] = set()

    def term(t: Term, bound: tuple[str, ...]):
        if isinstance(t, Var):
            if not _is_number_var(t.name):
                raise InputError(f"{t.name!r} is a set name, not a number", source=source)
            if t.name in bound:
                return
            if t.name in declared:
                used_free.add(t.name)
                return
            raise InputError(f"unbound variable {t.name!r}", source=source)
        if isinstance(t, (Add, Mul)):
            term(t.left, bound)
            term(t.right, bound)

    def walk(n: Node, bound: tuple[str, ...]):
        if isinstance(n, In):
            term(n.term, bound)
            if _is_number_var(n.set_name):
                raise InputError(f"{n.set_name!r} is a number variable, not a set", source=source)
            if n.set_name != SET_VAR:
                if allowed is not None and n.set_name not in allowed:
                    raise InputError(f"undeclared set parameter {n.set_name!r}", source=source)
                used_params.add(n.set_name)
        elif isinstance(n, (Eq, Less)):
            term(n.left, bound)
            term(n.right, bound)
        elif isinstance(n, Not):
            walk(n.body, bound)
        elif isinstance(n, (And, Or, Implies, Iff)):
            walk(n.left, bound)
            walk(n.right, bound)
        elif isinstance(n, (Forall, Exists)):
            if not _is_number_var(n.var):
                raise InputError(f"cannot quantify over {n.var!r}", source=source)
            if n.var in bound or n.var in declared:
                raise InputError(f"variable {n.var!r} is bound twice", source=source)
            term(n.bound, bound)
            walk(n.body, bound + (n.var,))

    walk(root, ())
    ordered = tuple(v for v in dict.fromkeys(free + (UNIVERSE_VAR,)) if v in used_free)
    return Formula(root, ordered, tuple(sorted(used_params)))


def _is_number_var(name: str) -> bool:
    return name[:1].islower() or name[:1] == "_"


@dataclass(frozen=True)
class FormulaFile:
    formula: Formula
    params: dict[str, FinSet]


_PARAM_LINE = re.compile(r"^\s*param\s+([A-Z][A-Za-z0-9_]*)\s*=\s*(\{.*\})\s*$")
_FREE_LINE = re.compile(r"^\s*free\s+([a-z_][A-Za-z0-9_]*(?:\s*,\s*[a-z_][A-Za-z0-9_]*)*)\s*$")


def parse_file(text: str, source: str | None = None, free: Iterable[str] = ()) -> FormulaFile:
    """Parse a formula file: ``param``/``free`` header lines, then one formula.

    Header lines may be interleaved with ``#`` comments and blank lines; the
    first other line starts the formula body.
    """
    lines = text.splitlines()
    params: dict[str, FinSet] = {}
    free = list(free)
    body_start = len(lines)
    for i, raw in enumerate(lines):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        m = _PARAM_LINE.match(s)
        if m:
            name = m.group(1)
            if name == SET_VAR:
                raise InputError("X is the free set variable, not a parameter", i + 1, 1, source)
            if name in params:
                raise InputError(f"parameter {name} declared twice", i + 1, 1, source)
            try:
                params[name] = parse_set(m.group(2))
            except InputError as e:
                raise InputError(e.message, i + 1, raw.find("{") + 1, source) from None
            continue
        m = _FREE_LINE.match(s)
        if m:
            free.extend(v.strip() for v in m.group(1).split(","))
            continue
        if s.startswith("param") or s.startswith("free "):
            raise InputError("malformed header line", i + 1, 1, source)
        body_start = i
        break
    # keep line numbers of the body aligned with the file
    body = "\n" * body_start + "\n".join(lines[body_start:])
    if not body.split("#")[0].strip() and body_start == len(lines):
        raise InputError("formula file has no formula", len(lines) or 1, 1, source)
    phi = parse(body, free=free, params=params, source=source)
    return FormulaFile(phi, params)


# ---------------------------------------------------------------------------
# printer

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}


def to_text(n: Node) -> str:
    """Render a formula so that ``parse(to_text(n)).root == n``."""
    return _fmt(n)


def _fmt(n: Node) -> str:
    if isinstance(n, Bool):
        return "true" if n.value else "false"
    if isinstance(n, In):
        return f"{term_text(n.term)} in {n.set_name}"
    if isinstance(n, Eq):
        return f"{term_text(n.left)} = {term_text(n.right)}"
    if isinstance(n, Less):
        return f"{term_text(n.left)} < {term_text(n.right)}"
    if isinstance(n, Not):
        return f"not {_operand(n.body, 5)}"
    if isinstance(n, (Forall, Exists)):
        q = "forall" if isinstance(n, Forall) else "exists"
        return f"{q} {n.var} < {term_text(n.bound)} . ({_fmt(n.body)})"
    p = _PREC[type(n)]
    sym = {Iff: "<->", Implies: "->", Or: "or", And: "and"}[type(n)]
    if isinstance(n, Implies):
        # right associative
        left, right = _operand(n.left, p + 1), _operand(n.right, p)
    else:
        left, right = _operand(n.left, p), _operand(n.right, p + 1)
    return f"{left} {sym} {right}"


def _operand(n: Node, min_prec: int) -> str:
    p = _PREC.get(type(n), 6)
    s = _fmt(n)
    return f"({s})" if p < min_prec else s


def term_text(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Add):
        r = term_text(t.right)
        if isinstance(t.right, Add):
            r = f"({r})"
        return f"{term_text(t.left)} + {r}"
    l, r = term_text(t.left), term_text(t.right)
    if isinstance(t.left, Add):
        l = f"({l})"
    if isinstance(t.right, (Add, Mul)):
        r = f"({r})"
    return f"{l} * {r}"


# ---------------------------------------------------------------------------
# compiled evaluation on canonical indices


def _py_term(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return "v_" + t.name
    op = "+" if isinstance(t, Add) else "*"
    return f"({_py_term(t.left)} {op} {_py_term(t.right)})"


def _py(n: Node) -> str:
    if isinstance(n, Bool):
        return "True" if n.value else "False"
    if isinstance(n, In):
        src = "n" if n.set_name == SET_VAR else "p_" + n.set_name
        return f"(({src} >> {_py_term(n.term)}) & 1 == 1)"
    if isinstance(n, Eq):
        return f"({_py_term(n.left)} == {_py_term(n.right)})"
    if isinstance(n, Less):
        return f"({_py_term(n.left)} < {_py_term(n.right)})"
    if isinstance(n, Not):
        return f"(not {_py(n.body)})"
    if isinstance(n, And):
        return f"({_py(n.left)} and {_py(n.right)})"
    if isinstance(n, Or):
        return f"({_py(n.left)} or {_py(n.right)})"
    if isinstance(n, Implies):
        return f"((not {_py(n.left)}) or {_py(n.right)})"
    if isinstance(n, Iff):
        return f"({_py(n.left)} == {_py(n.right)})"
    q = "all" if isinstance(n, Forall) else "any"
    return f"{q}({_py(n.body)} for v_{n.var} in range({_py_term(n.bound)}))"


def compile_hat(phi: Formula):
    """Compile ``phi`` to ``f(n, *free_values, *param_indices) -> bool``."""
    if phi._code is not None:
        return phi._code
    args = ["n"] + ["v_" + v for v in phi.free_vars] + ["p_" + p for p in phi.param_names]
    src = f"def _phi_hat({', '.join(args)}):\n    return {_py(phi.root)}\n"
    ns: dict = {}
    exec(compile(src, "<formula>", "exec"), ns)
    fn = ns["_phi_hat"]
    object.__setattr__(phi, "_code", fn)
    return fn


def bind_values(phi: Formula, env: Mapping[str, int] | None, params: Mapping[str, FinSet] | None):
    env = env or {}
    params = params or {}
    values = []
    for v in phi.free_vars:
        if v not in env:
            raise PreconditionError(f"no value for free variable {v!r}")
        values.append(int(env[v]))
    for p in phi.param_names:
        if p not in params:
            raise PreconditionError(f"no value for set parameter {p!r}")
        values.append(mask_of(params[p]))
    return values


def eval_hat(
    phi: Formula,
    n: int,
    env: Mapping[str, int] | None = None,
    params: Mapping[str, FinSet] | None = None,
) -> bool:
    """Truth of ``phi`` with ``X`` read as the finite set with index ``n``."""
    return compile_hat(phi)(n, *bind_values(phi, env, params))


def bind_hat(phi: Formula, env=None, params=None):
    """``eval_hat`` with environment and parameters fixed: ``n -> bool``."""
    fn = compile_hat(phi)
    values = bind_values(phi, env, params)
    if not values:
        return fn
    return lambda n: fn(n, *values)


def environment(universe: Universe | int, env: Mapping[str, int] | None = None) -> dict[str, int]:
    """``env`` with the universe variable ``u`` filled in (unless given)."""
    size = universe.size if isinstance(universe, Universe) else int(universe)
    out = {UNIVERSE_VAR: size}
    out.update(env or {})
    return out


# ---------------------------------------------------------------------------
# direct evaluation on explicit sets


def eval_direct(
    phi: Formula | Node,
    X: Iterable[int],
    env: Mapping[str, int] | None = None,
    params: Mapping[str, Iterable[int]] | None = None,
) -> bool:
    """Tree-walking evaluation with ``X`` given as an explicit element set."""
    root = phi.root if isinstance(phi, Formula) else phi
    sets = {SET_VAR: frozenset(X)}
    for name, value in (params or {}).items():
        sets[name] = frozenset(value)
    return _truth(root, dict(env or {}), sets)


def _value(t: Term, env: dict) -> int:
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Var):
        return env[t.name]
    a, b = _value(t.left, env), _value(t.right, env)
    return a + b if isinstance(t, Add) else a * b


def _truth(n: Node, env: dict, sets: dict) -> bool:
    if isinstance(n, Bool):
        return n.value
    if isinstance(n, In):
        if n.set_name not in sets:
            raise PreconditionError(f"no value for set parameter {n.set_name!r}")
        return _value(n.term, env) in sets[n.set_name]
    if isinstance(n, Eq):
        return _value(n.left, env) == _value(n.right, env)
    if isinstance(n, Less):
        return _value(n.left, env) < _value(n.right, env)
    if isinstance(n, Not):
        return not _truth(n.body, env, sets)
    if isinstance(n, And):
        return _truth(n.left, env, sets) and _truth(n.right, env, sets)
    if isinstance(n, Or):
        return _truth(n.left, env, sets) or _truth(n.right, env, sets)
    if isinstance(n, Implies):
        return (not _truth(n.left, env, sets)) or _truth(n.right, env, sets)
    if isinstance(n, Iff):
        return _truth(n.left, env, sets) == _truth(n.right, env, sets)
    bound = _value(n.bound, env)
    want = isinstance(n, Exists)
    inner = dict(env)
    for k in range(bound):
        inner[n.var] = k
        if _truth(n.body, inner, sets) == want:
            return want
    return not want


# ---------------------------------------------------------------------------
# finite character


def x_support(phi: Formula, env: Mapping[str, int] | None = None, limit: int | None = None) -> FinSet:
    """Every value ``t`` takes in an atom ``t in X`` over all evaluations.

    Terms never mention ``X``, so this set does not depend on ``X`` and
    ``phi(X)`` is determined by ``X`` intersected with it.  Collection stops
    early once all of ``{0..limit-1}`` is covered.
    """
    env = dict(env or {})
    for v in phi.free_vars:
        if v not in env:
            raise PreconditionError(f"no value for free variable {v!r}")
    full = (1 << limit) - 1 if limit is not None else None
    acc = [0]

    class _Done(Exception):
        pass

    def walk(n: Node, env: dict):
        if isinstance(n, In):
            if n.set_name == SET_VAR:
                t = _value(n.term, env)
                if limit is not None and t >= limit:
                    return
                acc[0] |= 1 << t
                if full is not None and acc[0] & full == full:
                    raise _Done
        elif isinstance(n, Not):
            walk(n.body, env)
        elif isinstance(n, (And, Or, Implies, Iff)):
            walk(n.left, env)
            walk(n.right, env)
        elif isinstance(n, (Forall, Exists)):
            if not _mentions_x(n.body):
                return
            inner = dict(env)
            if isinstance(n.body, In) and n.body.term == Var(n.var) and n.body.set_name == SET_VAR:
                b = _value(n.bound, env)
                if limit is not None:
                    b = min(b, limit)
                acc[0] |= (1 << b) - 1
                return
            for k in range(_value(n.bound, env)):
                inner[n.var] = k
                walk(n.body, inner)

    try:
        walk(phi.root, env)
    except _Done:
        pass
    return FinSet(acc[0])


def _mentions_x(n: Node) -> bool:
    if isinstance(n, In):
        return n.set_name == SET_VAR
    if isinstance(n, Not):
        return _mentions_x(n.body)
    if isinstance(n, (And, Or, Implies, Iff)):
        return _mentions_x(n.left) or _mentions_x(n.right)
    if isinstance(n, (Forall, Exists)):
        return _mentions_x(n.body)
    return False


@dataclass(frozen=True)
class FiniteCharacterReport:
    holds_on_empty: bool
    downward_closed: bool
    counterexample: tuple[FinSet, ...] | None
    support: FinSet

    @property
    def holds(self) -> bool:
        return self.holds_on_empty and self.downward_closed

    def describe(self) -> str:
        if self.holds:
            return "finite character: yes"
        if not self.holds_on_empty:
            return "finite character: no (fails on {})"
        a, b = self.counterexample
        return f"finite character: no (holds on {a} but not on its subset {b})"


def truth_table(pred, base: int, cap: int = DEFAULT_ENUMERATION_CAP) -> dict[int, bool]:
    return {m: bool(pred(m)) for m in subset_masks(base, cap)}


def downward_closure_witness(table: Mapping[int, bool]) -> tuple[int, int] | None:
    """A pair ``(A, B)``, ``B`` a subset of ``A``, with A true and B false.

    Checking one-element removals suffices: a chain of removals links any
    subset to its superset.
    """
    for a, ok in table.items():
        if not ok:
            continue
        for e in iter_bits(a):
            b = a & ~(1 << e)
            if not table[b]:
                return a, b
    return None


def check_finite_character(
    phi: Formula,
    universe: Universe | int,
    params: Mapping[str, FinSet] | None = None,
    env: Mapping[str, int] | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> FiniteCharacterReport:
    """Decide finite character of ``phi`` on the subsets of ``universe``.

    On a finite universe this is ``phi({})`` plus downward closure.  Only the
    subsets of the formula's ``X``-support inside the universe are
    enumerated; the rest of ``X`` cannot change the truth value.
    """
    U = universe if isinstance(universe, Universe) else Universe(universe)
    env = environment(U, env)
    hat = bind_hat(phi, env, params)
    support = x_support(phi, env, limit=U.size).index & U.mask
    if support.bit_count() > cap:
        raise BudgetError(
            f"formula depends on {support.bit_count()} elements; enumeration cap is {cap}"
        )
    table = truth_table(hat, support, cap)
    on_empty = table[0]
    witness = downward_closure_witness(table)
    if not on_empty:
        cx = (EMPTY,)
    elif witness is not None:
        cx = (FinSet(witness[0]), FinSet(witness[1]))
    else:
        cx = None
    return FiniteCharacterReport(on_empty, witness is None, cx, FinSet(support))


__all__ = [
    "Formula",
    "FormulaFile",
    "FiniteCharacterReport",
    "parse",
    "parse_file",
    "to_text",
    "eval_hat",
    "eval_direct",
    "bind_hat",
    "compile_hat",
    "environment",
    "x_support",
    "check_finite_character",
    "format_set",
]
