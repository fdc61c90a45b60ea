"""Nondeterministic finitary closure operators.

A rule ``F -> S`` asks that a set containing ``F`` meet ``S``; unlike the
deterministic case there is in general no least closed superset, so maximal
extension needs a search for witnesses.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Union

from .closure import ClosureOperator
from .errors import BudgetError, PreconditionError
from .fcp import Property, _universe
from .finset import DEFAULT_ENUMERATION_CAP, FinSet, Universe, iter_bits, mask_of, subset_masks

DEFAULT_NODE_BUDGET = 10**6


class NdClosureOperator:
    """Finite list of rules ``(premise, choices)`` over a universe.

    Choice sets are cut down to the universe and must stay nonempty;
    premises must lie inside it.
    """

    def __init__(self, rules: Iterable[tuple], universe: Universe | int):
        U = _universe(universe)
        seen = set()
        for premise, choices in rules:
            pm = mask_of(premise)
            if not U.admits(pm):
                raise PreconditionError(f"premise {FinSet(pm)} leaves the universe")
            raw = mask_of(choices)
            cm = raw & U.mask
            if cm == 0:
                raise PreconditionError(
                    f"rule {FinSet(pm)} -> {FinSet(raw)} has no choice inside the universe"
                )
            seen.add((pm, cm))
        self.universe = U
        self._rules = tuple(sorted(seen))

    @property
    def rules(self) -> tuple[tuple[FinSet, FinSet], ...]:
        return tuple((FinSet(pm), FinSet(cm)) for pm, cm in self._rules)

    def __len__(self) -> int:
        return len(self._rules)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NdClosureOperator)
            and self.universe == other.universe
            and self._rules == other._rules
        )

    def __repr__(self) -> str:
        return f"NdClosureOperator({len(self._rules)} rules, universe={self.universe.size})"

    def to_text(self) -> str:
        return "".join(f"{FinSet(pm)} -> {FinSet(cm)}\n" for pm, cm in self._rules)

    def is_closed_mask(self, m: int) -> bool:
        for pm, cm in self._rules:
            if pm & ~m == 0 and cm & m == 0:
                return False
        return True


def is_nclosed(X: FinSet | Iterable[int], N: NdClosureOperator) -> bool:
    return N.is_closed_mask(mask_of(X))


def nclosed_family(
    N: NdClosureOperator, within: FinSet | Iterable[int], cap: int = DEFAULT_ENUMERATION_CAP
) -> list[FinSet]:
    """Every ``N``-closed subset of ``within``, by increasing index."""
    w = mask_of(within)
    found = [m for m in subset_masks(w, cap) if N.is_closed_mask(m)]
    return [FinSet(m) for m in sorted(found)]


class _Search:
    """Least-index witness search with a shared node budget."""

    def __init__(self, N: NdClosureOperator, phi: Property, budget: int):
        self.rules = N._rules
        self.phi = phi
        self.budget = budget
        self.nodes = 0

    def least_witness(self, base: int, bound: int) -> int | None:
        """Least-index ``N``-closed ``Y`` with ``base <= Y <= bound`` and ``phi(Y)``.

        Free elements are decided from the largest down, leaving each out
        before putting it in, so the first complete solution found has the
        least index.  A branch dies when the property fails on what is
        already in (nothing larger can repair it) or when a rule has fired
        with none of its choices still available.
        """
        if base & ~bound or not self.phi(base):
            return None
        free = sorted(iter_bits(bound & ~base), reverse=True)
        return self._dfs(free, 0, base, bound & ~base)

    def _dfs(self, free: list[int], k: int, inc: int, open_: int) -> int | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetError(f"witness search exceeded {self.budget} nodes")
        avail = inc | open_
        for pm, cm in self.rules:
            if pm & ~inc == 0 and cm & avail == 0:
                return None
        if k == len(free):
            return inc
        e = 1 << free[k]
        rest = open_ & ~e
        hit = self._dfs(free, k + 1, inc, rest)
        if hit is not None:
            return hit
        if self.phi(inc | e):
            return self._dfs(free, k + 1, inc | e, rest)
        return None


def nce_maximal(
    A: FinSet | Iterable[int],
    C: FinSet | Iterable[int],
    phi: Property,
    N: NdClosureOperator,
    budget: int = DEFAULT_NODE_BUDGET,
) -> FinSet:
    """Maximal ``N``-closed ``B`` with ``C <= B <= A`` and ``phi(B)``.

    ``B_0 = C``; for each ``i`` of ``A`` in ascending order, if some
    ``N``-closed ``Y`` between ``B_i | {i}`` and ``A`` satisfies ``phi``, the
    least-index such ``Y`` becomes ``B_{i+1}``, else ``B_{i+1} = B_i``.
    """
    a, c = mask_of(A), mask_of(C)
    if c & ~a:
        raise PreconditionError("start set is not contained in A")
    if not N.is_closed_mask(c):
        raise PreconditionError("start set is not closed under the operator")
    if not phi(c):
        raise PreconditionError(f"start set does not satisfy {phi.name}")
    if not N.universe.admits(a):
        raise PreconditionError("A is not inside the operator's universe")
    search = _Search(N, phi, budget)
    cur = c
    for i in iter_bits(a):
        if (cur >> i) & 1:
            continue
        y = search.least_witness(cur | (1 << i), a)
        if y is not None:
            cur = y
    return FinSet(cur)


Strategy = Union[str, Callable[[FinSet], int]]


def determinize(N: NdClosureOperator, strategy: Strategy = "least", seed: int | None = None) -> ClosureOperator:
    """Replace each rule ``F -> S`` by ``F -> n`` for one chosen ``n`` in ``S``.

    ``strategy`` is ``"least"``, ``"greatest"``, ``"random"`` (seeded by
    ``seed``) or a function picking an element of ``S``.  Every set closed
    under the result is ``N``-closed; the converse can fail.
    """
    rng = random.Random(seed)
    if strategy == "least":
        pick = lambda s: s.elements[0]  # noqa: E731
    elif strategy == "greatest":
        pick = lambda s: s.max()  # noqa: E731
    elif strategy == "random":
        pick = lambda s: rng.choice(s.elements)  # noqa: E731
    elif callable(strategy):
        pick = strategy
    else:
        raise PreconditionError(f"unknown choice strategy {strategy!r}")
    rules = []
    for F, S in N.rules:
        n = pick(S)
        if n not in S:
            raise PreconditionError(f"strategy chose {n}, which is not in {S}")
        rules.append((F, n))
    return ClosureOperator(rules, N.universe)
