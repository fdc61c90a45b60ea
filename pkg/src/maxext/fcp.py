"""Maximal subsets for properties of finite character."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import BudgetError, PreconditionError
from .finset import (
    DEFAULT_ENUMERATION_CAP,
    FinSet,
    Universe,
    iter_bits,
    mask_of,
    subset_masks,
)
from .formula import (
    Formula,
    bind_hat,
    bind_values,
    check_finite_character,
    compile_hat,
    downward_closure_witness,
    environment,
    truth_table,
)


class Property:
    """A predicate on finite sets certified to have finite character.

    Instances are only built through :meth:`from_formula` and
    :meth:`from_predicate`, both of which run the exhaustive check over the
    working universe and refuse anything that fails it.  Calling the
    property on a :class:`FinSet` (or a raw canonical index) evaluates it.
    """

    def __init__(self, holds: Callable[[int], bool], universe: Universe, name: str, support: FinSet):
        self._holds = holds
        self.universe = universe
        self.name = name
        self.support = support

    def __call__(self, X: FinSet | int) -> bool:
        return bool(self._holds(mask_of(X)))

    def __repr__(self) -> str:
        return f"Property({self.name!r}, universe={self.universe.size})"

    @classmethod
    def from_formula(
        cls,
        phi: Formula,
        universe: Universe | int,
        params: Mapping[str, FinSet] | None = None,
        env: Mapping[str, int] | None = None,
        cap: int = DEFAULT_ENUMERATION_CAP,
    ) -> "Property":
        U = _universe(universe)
        report = check_finite_character(phi, U, params, env, cap)
        if not report.holds:
            raise PreconditionError(f"{phi}: {report.describe()}")
        holds = bind_hat(phi, environment(U, env), params)
        return cls(holds, U, str(phi), report.support)

    @classmethod
    def from_predicate(
        cls,
        predicate: Callable[[FinSet], bool],
        universe: Universe | int,
        name: str = "predicate",
        support: FinSet | Iterable[int] | None = None,
        cap: int = DEFAULT_ENUMERATION_CAP,
    ) -> "Property":
        """Certify an arbitrary predicate.

        ``support``, when given, asserts that the predicate only looks at
        ``X`` intersected with it; validation then enumerates subsets of the
        support instead of the whole universe.
        """
        U = _universe(universe)
        base = U.mask if support is None else mask_of(support) & U.mask
        holds = lambda m: predicate(FinSet(m))  # noqa: E731
        table = truth_table(holds, base, cap)
        if not table[0]:
            raise PreconditionError(f"{name}: fails on the empty set")
        witness = downward_closure_witness(table)
        if witness is not None:
            a, b = (FinSet(w) for w in witness)
            raise PreconditionError(f"{name}: holds on {a} but not on its subset {b}")
        return cls(holds, U, name, FinSet(base))


def _universe(u: Universe | int) -> Universe:
    return u if isinstance(u, Universe) else Universe(u)


def _enumeration(A: int, order: Sequence[int] | None) -> list[int]:
    if order is None:
        return list(iter_bits(A))
    order = list(order)
    if len(set(order)) != len(order) or FinSet.of(order).index != A:
        raise PreconditionError("order must list every element of A exactly once")
    return order


def greedy_stages(
    A: FinSet | Iterable[int], phi: Property, order: Sequence[int] | None = None
) -> list[FinSet]:
    """The chain ``B_0 <= B_1 <= ...`` built by the greedy scan.

    ``B_{i+1}`` is ``B_i`` plus ``a_i`` if the property still holds with
    ``a_i`` added, else ``B_i``.  The property is asserted at every stage.
    """
    a = mask_of(A)
    if not phi.universe.admits(a):
        raise PreconditionError("A is not inside the property's universe")
    cur = 0
    if not phi(cur):
        raise PreconditionError(f"{phi.name} fails on the empty set")
    stages = [FinSet(0)]
    for x in _enumeration(a, order):
        trial = cur | (1 << x)
        if phi(trial):
            cur = trial
        assert phi(cur)
        stages.append(FinSet(cur))
    return stages


def greedy_maximal(
    A: FinSet | Iterable[int], phi: Property, order: Sequence[int] | None = None
) -> FinSet:
    """A maximal subset of ``A`` satisfying ``phi``, scanning ``A`` in ``order``.

    Defaults to ascending order.  Different orders can give different
    maximal sets.
    """
    return greedy_stages(A, phi, order)[-1]


# ---------------------------------------------------------------------------
# Sigma^0_1 properties given by a prefix predicate


class PrefixPredicate:
    """A decidable predicate ``rho`` on finite 0/1 strings.

    The induced property is ``phi(X) = exists m. rho(X[m])`` where ``X[m]``
    is the characteristic string of ``X`` of length ``m``.
    """

    def __init__(self, rho: Callable[[tuple[int, ...]], bool], name: str = "rho"):
        self.rho = rho
        self.name = name

    def __call__(self, prefix: Sequence[int]) -> bool:
        return bool(self.rho(tuple(prefix)))

    @classmethod
    def from_formula(cls, phi: Formula, params: Mapping[str, FinSet] | None = None, length_var: str = "m"):
        """Read a formula as a prefix predicate.

        ``t in X`` means position ``t`` of the string is 1 (positions past
        the end count as 0); the free variable ``length_var`` is bound to the
        string length.
        """
        extra = [v for v in phi.free_vars if v != length_var]
        if extra:
            raise PreconditionError(f"prefix formula has unexpected free variables {extra}")
        hat = _compiled_with_length(phi, params, length_var)

        def rho(bits):
            n = 0
            for i, b in enumerate(bits):
                if b:
                    n |= 1 << i
            return hat(n, len(bits))

        return cls(rho, str(phi))

    def witness(self, X: FinSet | int, search_cap: int) -> int | None:
        """Least ``m <= search_cap`` with ``rho(X[m])``, if any."""
        x = mask_of(X)
        bits = [(x >> i) & 1 for i in range(search_cap)]
        for m in range(search_cap + 1):
            if self.rho(tuple(bits[:m])):
                return m
        return None

    def holds(self, X: FinSet | int, search_cap: int) -> bool:
        return self.witness(X, search_cap) is not None


def _compiled_with_length(phi: Formula, params, length_var):
    fn = compile_hat(phi)
    names = phi.free_vars
    if length_var not in names:
        rest = bind_values(phi, {}, params)
        return lambda n, m: fn(n, *rest)
    rest = bind_values(phi, {length_var: 0}, params)
    pos = names.index(length_var)

    def call(n, m):
        vals = list(rest)
        vals[pos] = m
        return fn(n, *vals)

    return call


@dataclass(frozen=True)
class Sigma1Result:
    result: FinSet
    c_phi: int


def sigma1_maximal(A: FinSet | Iterable[int], rho: PrefixPredicate, search_cap: int = 64) -> Sigma1Result:
    """Maximal subset of ``A`` for ``phi(X) = exists m. rho(X[m])``.

    Finds the least ``c`` with ``rho`` true on the all-zero string of length
    ``c``; every set missing ``{0..c}`` then satisfies ``phi``.  Among the
    subsets ``D`` of ``A`` inside ``{0..c}``, those for which ``D`` plus the
    part of ``A`` above ``c`` satisfies ``phi`` are collected, and one of
    maximal size (least index on ties) is returned with the tail attached.

    ``phi`` is decided by searching ``m`` up to ``search_cap``; a candidate
    with no witness in that range counts as failing.  If no ``c`` exists up
    to the cap, :class:`BudgetError` is raised since ``phi({})`` is then
    undecided.
    """
    a = mask_of(A)
    c = None
    for k in range(search_cap + 1):
        if rho((0,) * k):
            c = k
            break
    if c is None:
        raise BudgetError(f"no c <= {search_cap} with rho true on the empty prefix")
    low = (1 << (c + 1)) - 1
    tail = a & ~low
    best = None
    for d in subset_masks(a & low, cap=max(DEFAULT_ENUMERATION_CAP, c + 1)):
        if not rho.holds(d | tail, search_cap):
            continue
        if best is None or d.bit_count() > best.bit_count():
            best = d
    # the all-zero prefix of length c witnesses the tail alone
    assert best is not None
    return Sigma1Result(FinSet(best | tail), c)


# ---------------------------------------------------------------------------
# sequential gadget


def _as_function(f: Iterable[tuple[int, int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for n, v in f:
        if n in out and out[n] != v:
            raise PreconditionError(f"f is not a function: {n} maps to {out[n]} and {v}")
        out[n] = v
    return out


def range_gadget_fcp(f: Iterable[tuple[int, int]], universe: Universe | int) -> list[FinSet]:
    """``B_i`` maximal in ``{i}`` for ``exists y (i in X -> f(y) = i)``.

    With ``y`` ranging over all naturals and ``f`` defined on a finite
    domain, the existential holds when ``i`` is missing from ``X`` (take any
    ``y`` outside the domain) or ``i`` is a value of ``f``, which is checked
    by scanning the domain.  Hence ``i in range(f)`` iff ``i in B_i``.
    """
    U = _universe(universe)
    fn = _as_function(f)
    for n, v in fn.items():
        if n < 0 or not 0 <= v < U.size:
            raise PreconditionError(f"f({n}) = {v} is outside the universe")
    out = []
    for i in range(U.size):

        def phi_i(X: FinSet, i=i) -> bool:
            if i not in X:
                return True
            return any(fn[y] == i for y in fn)

        prop = Property.from_predicate(phi_i, U, name=f"phi(X, {i})", support=[i])
        out.append(greedy_maximal(FinSet.of([i]), prop))
    return out
