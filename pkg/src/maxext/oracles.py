"""Brute-force checks that certify the outputs of the constructions.

Everything here works by enumerating subsets and uses only the definitions
(closedness, the property, set inclusion), never the algorithms under test.
Each ``*_checks`` function returns ``(name, passed)`` pairs.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .finset import DEFAULT_ENUMERATION_CAP, FinSet, iter_bits, mask_of, subset_masks, superset_masks

Checks = list[tuple[str, bool]]


def maximal_admissible(
    A: FinSet | int, admissible: Callable[[int], bool], cap: int = DEFAULT_ENUMERATION_CAP
) -> list[FinSet]:
    """Every inclusion-maximal admissible subset of ``A``."""
    good = [m for m in subset_masks(mask_of(A), cap) if admissible(m)]
    out = []
    for m in good:
        if not any(o != m and m & ~o == 0 for o in good):
            out.append(FinSet(m))
    return out


def no_admissible_strict_superset(
    W: int, A: int, admissible: Callable[[int], bool], cap: int = DEFAULT_ENUMERATION_CAP
) -> bool:
    return not any(h != W and admissible(h) for h in superset_masks(W, A, cap))


def fcp_checks(W, A, phi) -> Checks:
    w, a = mask_of(W), mask_of(A)
    inside = w & ~a == 0
    holds = phi(w)
    # one-element extensions suffice for a downward-closed property
    maximal = inside and not any(phi(w | (1 << x)) for x in iter_bits(a & ~w))
    return [("subset of A", inside), ("property holds", holds), ("maximal", maximal)]


def fcp_exhaustive_maximal(W, A, phi, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """No strict superset of ``W`` inside ``A`` satisfies ``phi``."""
    w, a = mask_of(W), mask_of(A)
    return w & ~a == 0 and no_admissible_strict_superset(w, a, phi, cap)


def ce_checks(W, A, C, phi, op, cap: int = DEFAULT_ENUMERATION_CAP) -> Checks:
    """For a deterministic or nondeterministic operator ``op``."""
    w, a, c = mask_of(W), mask_of(A), mask_of(C)
    inside = w & ~a == 0
    closed = op.is_closed_mask(w)
    holds = phi(w)
    admissible = lambda h: op.is_closed_mask(h) and phi(h)  # noqa: E731
    maximal = inside and no_admissible_strict_superset(w, a, admissible, cap)
    return [
        ("contains start", c & ~w == 0),
        ("within bound", inside),
        ("closed", closed),
        ("property holds", holds),
        ("maximal", maximal),
    ]


def least_closed_superset(X, D, cap: int = DEFAULT_ENUMERATION_CAP) -> FinSet:
    """Intersection of every ``D``-closed superset of ``X`` in the universe."""
    x = mask_of(X)
    acc = D.universe.mask
    for h in superset_masks(x, D.universe.mask, cap):
        if D.is_closed_mask(h):
            acc &= h
    return FinSet(acc)


def closure_checks(W, X, D, cap: int = DEFAULT_ENUMERATION_CAP) -> Checks:
    w, x = mask_of(W), mask_of(X)
    return [
        ("contains set", x & ~w == 0),
        ("closed", D.is_closed_mask(w)),
        ("least", least_closed_superset(x, D, cap).index == w),
    ]


def sigma1_checks(W, A, rho, search_cap: int) -> Checks:
    holds = lambda m: rho.holds(m, search_cap)  # noqa: E731
    w, a = mask_of(W), mask_of(A)
    inside = w & ~a == 0
    maximal = inside and no_admissible_strict_superset(w, a, holds)
    return [("subset of A", inside), ("property holds", holds(w)), ("maximal", maximal)]


def ideal_checks(J, I, size: int, is_ideal: Callable[[int], bool], forbidden: int) -> Checks:
    """Checks for a maximal ideal avoiding ``forbidden`` (the top element)."""
    j, i = mask_of(J), mask_of(I)
    whole = (1 << size) - 1
    admissible = lambda h: is_ideal(h) and not (h >> forbidden) & 1  # noqa: E731
    return [
        ("ideal", is_ideal(j)),
        ("contains start", i & ~j == 0),
        ("avoids top", not (j >> forbidden) & 1),
        ("maximal", no_admissible_strict_superset(j, whole, admissible)),
    ]


def all_pass(checks: Iterable[tuple[str, bool]]) -> bool:
    return all(ok for _, ok in checks)
