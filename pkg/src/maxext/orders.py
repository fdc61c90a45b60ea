"""Finite posets and join-semilattices, and maximal ideals via closure operators.

Elements are ``0..m-1``.  Orders are stored as bitmasks: ``up[a]`` holds every
``b`` with ``a <= b`` and ``down[a]`` every ``b`` with ``b <= a``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .closure import ClosureOperator, ce_maximal
from .errors import PreconditionError
from .fcp import Property
from .finset import FinSet, Universe, iter_bits, mask_of, subset_masks
from .formula import parse
from .ndclosure import DEFAULT_NODE_BUDGET, NdClosureOperator, nce_maximal


class Poset:
    def __init__(self, leq: Sequence[Sequence[bool]]):
        m = len(leq)
        if any(len(row) != m for row in leq):
            raise PreconditionError("order matrix must be square")
        up = [sum(1 << b for b in range(m) if leq[a][b]) for a in range(m)]
        for a in range(m):
            if not (up[a] >> a) & 1:
                raise PreconditionError(f"order is not reflexive at {a}")
            for b in iter_bits(up[a]):
                if b != a and (up[b] >> a) & 1:
                    raise PreconditionError(f"order is not antisymmetric: {a} <= {b} <= {a}")
                if up[b] & ~up[a]:
                    raise PreconditionError(f"order is not transitive through {a} <= {b}")
        self.size = m
        self.up = tuple(up)
        self.down = tuple(sum(1 << a for a in range(m) if (up[a] >> b) & 1) for b in range(m))

    @classmethod
    def from_relations(cls, m: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Reflexive-transitive closure of ``pairs`` (each ``(a, b)`` meaning ``a <= b``)."""
        up = [1 << a for a in range(m)]
        for a, b in pairs:
            if not (0 <= a < m and 0 <= b < m):
                raise PreconditionError(f"relation {a} <= {b} mentions an element outside 0..{m - 1}")
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for a in range(m):
                acc = up[a]
                for b in iter_bits(up[a]):
                    acc |= up[b]
                if acc != up[a]:
                    up[a] = acc
                    changed = True
        return cls([[bool((up[a] >> b) & 1) for b in range(m)] for a in range(m)])

    @classmethod
    def chain(cls, m: int) -> "Poset":
        return cls.from_relations(m, [(i, i + 1) for i in range(m - 1)])

    @classmethod
    def antichain(cls, m: int) -> "Poset":
        return cls.from_relations(m, [])

    def leq(self, a: int, b: int) -> bool:
        return bool((self.up[a] >> b) & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(a, b) for b in range(self.size)] for a in range(self.size)]

    def with_top(self) -> "Poset":
        """``P`` with a new element ``t = size`` above everything."""
        m = self.size
        rows = [row + [True] for row in self.matrix()]
        rows.append([False] * m + [True])
        return Poset(rows)

    def upper_bounds(self, a: int, b: int) -> int:
        return self.up[a] & self.up[b]

    def relations(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.size) for b in iter_bits(self.up[a]) if a != b]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.up == other.up

    def __repr__(self) -> str:
        return f"Poset({self.size}, {self.relations()})"


class JoinSemilattice(Poset):
    """A finite poset with all binary joins; its maximum is ``top``."""

    def __init__(self, leq: Sequence[Sequence[bool]], join: Sequence[Sequence[int]] | None = None):
        super().__init__(leq)
        m = self.size
        if m == 0:
            raise PreconditionError("a join-semilattice needs at least one element")
        derived = [[self._lub(a, b) for b in range(m)] for a in range(m)]
        if join is not None:
            for a in range(m):
                for b in range(m):
                    if join[a][b] != derived[a][b]:
                        raise PreconditionError(
                            f"join {a} v {b} = {join[a][b]} is not the least upper bound"
                        )
        self.join = tuple(tuple(row) for row in derived)
        tops = [a for a in range(m) if self.down[a] == (1 << m) - 1]
        self.top = tops[0]

    def _lub(self, a: int, b: int) -> int:
        ub = self.up[a] & self.up[b]
        for c in iter_bits(ub):
            if self.up[c] & ub == ub:
                return c
        raise PreconditionError(f"{a} and {b} have no least upper bound")

    @classmethod
    def from_poset(cls, P: Poset) -> "JoinSemilattice":
        return cls(P.matrix())

    def meet(self, a: int, b: int) -> int | None:
        """Greatest lower bound, or None when there is none."""
        lb = self.down[a] & self.down[b]
        for c in iter_bits(lb):
            if self.down[c] & lb == lb:
                return c
        return None

    def is_lattice(self) -> bool:
        return all(self.meet(a, b) is not None for a in range(self.size) for b in range(self.size))


def is_downward_closed(I: FinSet | Iterable[int], P: Poset) -> bool:
    i = mask_of(I)
    return all(P.down[a] & ~i == 0 for a in iter_bits(i))


def is_semilattice_ideal(I: FinSet | Iterable[int], L: JoinSemilattice) -> bool:
    """Downward closed and closed under joins."""
    i = mask_of(I)
    if not is_downward_closed(i, L):
        return False
    elems = list(iter_bits(i))
    return all((i >> L.join[a][b]) & 1 for a in elems for b in elems)


def is_poset_ideal(I: FinSet | Iterable[int], P: Poset) -> bool:
    """Downward closed and directed: any two members have an upper bound inside."""
    i = mask_of(I)
    if not is_downward_closed(i, P):
        return False
    elems = list(iter_bits(i))
    return all(P.up[a] & P.up[b] & i for a in elems for b in elems)


def is_prime_ideal(I: FinSet | Iterable[int], L: JoinSemilattice) -> bool:
    """Proper ideal with ``a ^ b in I`` forcing ``a in I`` or ``b in I``."""
    if not L.is_lattice():
        raise PreconditionError("primeness needs meets; L is not a lattice")
    i = mask_of(I)
    if not is_semilattice_ideal(i, L) or (i >> L.top) & 1:
        return False
    for a in range(L.size):
        for b in range(L.size):
            if (i >> L.meet(a, b)) & 1 and not ((i >> a) & 1 or (i >> b) & 1):
                return False
    return True


def semilattice_ideal_operator(L: JoinSemilattice) -> ClosureOperator:
    """Rules ``{a, b} -> a v b`` and ``{a} -> b`` for ``b <= a``; closed sets are the ideals."""
    rules = []
    for a in range(L.size):
        for b in range(L.size):
            rules.append((FinSet.of([a, b]), L.join[a][b]))
        for b in iter_bits(L.down[a]):
            rules.append((FinSet.of([a]), b))
    return ClosureOperator(rules, Universe(L.size))


def _avoid(element: int, size: int) -> Property:
    return Property.from_formula(parse(f"not {element} in X"), Universe(size))


def extend_to_maximal_ideal_semilattice(L: JoinSemilattice, I: FinSet | Iterable[int]) -> FinSet:
    """A maximal proper ideal containing the proper ideal ``I``."""
    i = mask_of(I)
    if not is_semilattice_ideal(i, L) or (i >> L.top) & 1:
        raise PreconditionError(f"{FinSet(i)} is not a proper ideal")
    D = semilattice_ideal_operator(L)
    return ce_maximal(Universe(L.size).all(), i, _avoid(L.top, L.size), D)


def poset_ideal_operator(P: Poset, enumeration: Sequence[int] | None = None) -> NdClosureOperator:
    """Operator on ``P`` plus a new top ``t = P.size`` whose closed sets are the ideals.

    For each pair ``p_j <= p_k`` in the extended order: ``{p_k} -> {p_j}``;
    for each pair ``p_j, p_k`` with a common upper bound:
    ``{p_j, p_k} -> {common upper bounds}``.  ``enumeration`` only fixes the
    order in which rules are generated; the rule set does not depend on it.
    """
    Q = P.with_top()
    n = Q.size
    order = list(range(n)) if enumeration is None else list(enumeration)
    if sorted(order) != list(range(n)):
        raise PreconditionError(f"enumeration must be a permutation of 0..{n - 1}")
    rules = []
    for pj in order:
        for pk in order:
            if Q.leq(pj, pk):
                rules.append((FinSet.of([pk]), FinSet.of([pj])))
            bounds = Q.upper_bounds(pj, pk)
            if bounds:
                rules.append((FinSet.of([pj, pk]), FinSet(bounds)))
    return NdClosureOperator(rules, Universe(n))


def extend_to_maximal_ideal_poset(
    P: Poset, I: FinSet | Iterable[int], budget: int = DEFAULT_NODE_BUDGET
) -> FinSet:
    """A maximal ideal of ``P`` containing the ideal ``I``."""
    i = mask_of(I)
    if i >> P.size or not is_poset_ideal(i, P):
        raise PreconditionError(f"{FinSet(i)} is not an ideal")
    N = poset_ideal_operator(P)
    t = P.size
    J = nce_maximal(Universe(t + 1).all(), i, _avoid(t, t + 1), N, budget)
    return J.discard(t)


# ---------------------------------------------------------------------------
# enumeration


def ideals(P: Poset) -> list[FinSet]:
    return [FinSet(m) for m in subset_masks((1 << P.size) - 1) if is_poset_ideal(m, P)]


def semilattice_ideals(L: JoinSemilattice) -> list[FinSet]:
    return [FinSet(m) for m in subset_masks((1 << L.size) - 1) if is_semilattice_ideal(m, L)]


def _down_sets(down: list[int], m: int) -> Iterator[int]:
    for s in subset_masks((1 << m) - 1):
        if all(down[a] & ~s == 0 for a in iter_bits(s)):
            yield s


def naturally_labeled_posets(m: int) -> Iterator[Poset]:
    """Every poset on ``0..m-1`` in which ``a <= b`` implies ``a <= b`` as numbers.

    Each isomorphism type appears at least once.  Element ``j`` is added by
    choosing its strict down-set among the down-closed sets of ``0..j-1``.
    """

    def grow(down: list[int]) -> Iterator[list[int]]:
        j = len(down)
        if j == m:
            yield down
            return
        for s in _down_sets(down, j):
            yield from grow(down + [s | (1 << j)])

    for down in grow([]):
        yield Poset([[bool((down[b] >> a) & 1) for b in range(m)] for a in range(m)])


def poset_catalog(max_size: int) -> list[Poset]:
    return [P for m in range(max_size + 1) for P in naturally_labeled_posets(m)]


def semilattice_catalog(max_size: int) -> list[JoinSemilattice]:
    out = []
    for m in range(1, max_size + 1):
        for P in naturally_labeled_posets(m):
            try:
                out.append(JoinSemilattice.from_poset(P))
            except PreconditionError:
                continue
    return out


def diamond() -> JoinSemilattice:
    """``bottom=0 < a=1, b=2 < top=3``."""
    return JoinSemilattice.from_poset(Poset.from_relations(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))


def m3() -> JoinSemilattice:
    """The five-element lattice with three atoms ``1, 2, 3`` between ``0`` and ``4``."""
    return JoinSemilattice.from_poset(
        Poset.from_relations(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    )
