"""Deterministic finitary closure operators."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import PreconditionError
from .fcp import Property, _as_function, _enumeration, _universe
from .finset import FinSet, Universe, iter_bits, mask_of, subset_masks
from .formula import parse


class ClosureOperator:
    """A finite list of rules ``F -> n`` over a universe.

    A set is closed when every rule whose premise it contains also has its
    conclusion in it.  Rules are deduplicated and sorted on construction;
    any element outside the universe is rejected.
    """

    def __init__(self, rules: Iterable[tuple[FinSet | Iterable[int], int]], universe: Universe | int):
        U = _universe(universe)
        seen = set()
        for premise, conclusion in rules:
            pm = mask_of(premise)
            if not U.admits(pm) or not 0 <= conclusion < U.size:
                raise PreconditionError(
                    f"rule {FinSet(pm)} -> {conclusion} leaves the universe {{0..{U.size - 1}}}"
                )
            seen.add((pm, conclusion))
        self.universe = U
        self._rules = tuple(sorted(seen, key=lambda r: (r[0], r[1])))
        self._axioms = 0
        self._by_elem: dict[int, list[tuple[int, int]]] = {}
        for pm, c in self._rules:
            if pm == 0:
                self._axioms |= 1 << c
            for e in iter_bits(pm):
                self._by_elem.setdefault(e, []).append((pm, c))

    @property
    def rules(self) -> tuple[tuple[FinSet, int], ...]:
        return tuple((FinSet(pm), c) for pm, c in self._rules)

    def __len__(self) -> int:
        return len(self._rules)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClosureOperator)
            and self.universe == other.universe
            and self._rules == other._rules
        )

    def __repr__(self) -> str:
        return f"ClosureOperator({len(self._rules)} rules, universe={self.universe.size})"

    def to_text(self) -> str:
        return "".join(f"{FinSet(pm)} -> {c}\n" for pm, c in self._rules)

    def _close(self, m: int, pending: Iterable[int]) -> int:
        # worklist: every rule is inspected when one of its premise elements
        # is first added, and fires once the last of them is present
        stack = list(pending)
        by_elem = self._by_elem
        while stack:
            x = stack.pop()
            for pm, c in by_elem.get(x, ()):
                if not (m >> c) & 1 and pm & ~m == 0:
                    m |= 1 << c
                    stack.append(c)
        return m

    def close_mask(self, m: int) -> int:
        start = m | self._axioms
        return self._close(start, iter_bits(start))

    def extend_closed(self, closed: int, extra: Iterable[int]) -> int:
        """Closure of ``closed`` plus the elements ``extra``, given that
        ``closed`` is already closed."""
        new = [e for e in extra if not (closed >> e) & 1]
        m = closed
        for e in new:
            m |= 1 << e
        return self._close(m, new)

    def is_closed_mask(self, m: int) -> bool:
        for pm, c in self._rules:
            if pm & ~m == 0 and not (m >> c) & 1:
                return False
        return True


def is_closed(X: FinSet | Iterable[int], D: ClosureOperator) -> bool:
    return D.is_closed_mask(mask_of(X))


def cl(X: FinSet | Iterable[int], D: ClosureOperator) -> FinSet:
    """Least ``D``-closed superset of ``X``."""
    return FinSet(D.close_mask(mask_of(X)))


def closure_stages(X: FinSet | Iterable[int], D: ClosureOperator) -> list[FinSet]:
    """The stages ``X_0 = X``, ``X_{i+1} = X_i`` plus every conclusion of a
    rule whose premise lies in ``X_i``, up to the first repeat."""
    cur = mask_of(X)
    stages = [FinSet(cur)]
    while True:
        nxt = cur
        for pm, c in D.rules:
            if pm.index & ~cur == 0:
                nxt |= 1 << c
        if nxt == cur:
            return stages
        cur = nxt
        stages.append(FinSet(cur))


def ce_maximal(
    A: FinSet | Iterable[int],
    C: FinSet | Iterable[int],
    phi: Property,
    D: ClosureOperator,
    order: Sequence[int] | None = None,
) -> FinSet:
    """Maximal ``D``-closed ``B`` with ``C <= B <= A`` and ``phi(B)``.

    Scans the elements of ``A``; ``i`` is accepted when the closure of the
    current set plus ``i`` stays inside ``A`` and satisfies ``phi``, in which
    case that closure becomes the current set.
    """
    a, c = mask_of(A), mask_of(C)
    if c & ~a:
        raise PreconditionError("start set is not contained in A")
    if not D.is_closed_mask(c):
        raise PreconditionError("start set is not closed under the operator")
    if not phi(c):
        raise PreconditionError(f"start set does not satisfy {phi.name}")
    if not D.universe.admits(a):
        raise PreconditionError("A is not inside the operator's universe")
    cur = c
    for i in _enumeration(a, order):
        if (cur >> i) & 1:
            continue
        trial = D.extend_closed(cur, (i,))
        if trial & ~a == 0 and phi(trial):
            cur = trial
    return FinSet(cur)


def psi_accepts(k: int, X: FinSet | int, A: FinSet | int, phi: Property, D: ClosureOperator) -> bool:
    """Acceptance test quantifying over every finite subset of the closure.

    True iff ``cl(X | D_k)`` lies in ``A`` and every subset of it satisfies
    ``phi``.  Agrees with testing ``phi`` on the closure itself whenever
    ``phi`` has finite character.
    """
    closure = D.close_mask(mask_of(X) | k)
    if closure & ~mask_of(A):
        return False
    return all(phi(n) for n in subset_masks(closure))


# ---------------------------------------------------------------------------
# prime-power gadget


def primes_below(n: int) -> list[int]:
    if n < 3:
        return []
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n, p)))
    return [i for i in range(n) if sieve[i]]


def nth_primes(k: int) -> list[int]:
    out, n = [], 2
    while len(out) < k:
        if all(n % p for p in out if p * p <= n):
            out.append(n)
        n += 1
    return out


def range_gadget_operator(f: Iterable[tuple[int, int]], universe: Universe | int) -> ClosureOperator:
    """Operator whose maximal closed 0-free set encodes ``range(f)``.

    For every prime ``p`` below the universe size the powers ``p, p^2, ...``
    are chained in both directions, and ``f(n) = i`` adds ``{p_i^(n+1)} -> 0``
    where ``p_0 = 2, p_1 = 3, ...``.  Rules mentioning a number outside the
    universe are dropped, except that every ``p_i^(n+1)`` demanded by ``f``
    must fit.
    """
    U = _universe(universe)
    fn = _as_function(f)
    rules: list[tuple[FinSet, int]] = []
    for p in primes_below(U.size):
        q = p
        while q * p < U.size:
            rules.append((FinSet.of([q]), q * p))
            rules.append((FinSet.of([q * p]), q))
            q *= p
    if fn:
        ps = nth_primes(max(fn.values()) + 1)
        for n, i in sorted(fn.items()):
            power = ps[i] ** (n + 1)
            if power >= U.size:
                raise PreconditionError(
                    f"universe of size {U.size} is too small for f({n}) = {i}: needs {power}"
                )
            rules.append((FinSet.of([power]), 0))
    return ClosureOperator(rules, U)


def range_from_gadget(B: FinSet | int, k: int) -> FinSet:
    """``{i < k : p_i not in B}``, the range read back off a maximal set."""
    b = mask_of(B)
    return FinSet.of(i for i, p in enumerate(nth_primes(k)) if not (b >> p) & 1)


def solve_range_gadget(f: Iterable[tuple[int, int]], universe: Universe | int) -> FinSet:
    """Run the gadget: maximal ``D``-closed subset of the universe omitting 0."""
    U = _universe(universe)
    D = range_gadget_operator(f, U)
    phi = Property.from_formula(parse("not 0 in X"), U)
    return ce_maximal(U.all(), FinSet(0), phi, D)
