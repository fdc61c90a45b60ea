"""Finite sets of naturals coded by their canonical index.

A finite set ``F`` is identified with ``index_of(F) = sum(2**i for i in F)``,
so membership ``i in D_n`` is the single bit test ``(n >> i) & 1`` and every
natural number is the index of exactly one finite set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetError, IndexRangeError, InputError

DEFAULT_ENUMERATION_CAP = 24


@dataclass(frozen=True, order=False)
class FinSet:
    """Immutable finite set of naturals, stored as its canonical index."""

    index: int = 0

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"canonical index must be a natural, got {self.index!r}")

    @classmethod
    def of(cls, elements: Iterable[int] = ()) -> "FinSet":
        n = 0
        for e in elements:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"elements must be naturals, got {e!r}")
            n |= 1 << e
        return cls(n)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.index))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.index)

    def __len__(self) -> int:
        return self.index.bit_count()

    def __contains__(self, i) -> bool:
        return isinstance(i, int) and i >= 0 and (self.index >> i) & 1 == 1

    def __bool__(self) -> bool:
        return self.index != 0

    def __or__(self, other: "FinSet") -> "FinSet":
        return FinSet(self.index | other.index)

    def __and__(self, other: "FinSet") -> "FinSet":
        return FinSet(self.index & other.index)

    def __sub__(self, other: "FinSet") -> "FinSet":
        return FinSet(self.index & ~other.index)

    def __le__(self, other: "FinSet") -> bool:
        return self.index & ~other.index == 0

    def __lt__(self, other: "FinSet") -> bool:
        return self <= other and self.index != other.index

    def __ge__(self, other: "FinSet") -> bool:
        return other <= self

    def __gt__(self, other: "FinSet") -> bool:
        return other < self

    def issubset(self, other: "FinSet") -> bool:
        return self <= other

    def add(self, i: int) -> "FinSet":
        return FinSet(self.index | (1 << i))

    def discard(self, i: int) -> "FinSet":
        return FinSet(self.index & ~(1 << i))

    def max(self) -> int:
        """Largest element, or -1 for the empty set."""
        return self.index.bit_length() - 1

    def __str__(self) -> str:
        return format_set(self)

    def __repr__(self) -> str:
        return f"FinSet({format_set(self)})"


EMPTY = FinSet(0)


def iter_bits(n: int) -> Iterator[int]:
    """Yield the positions of the 1 bits of ``n`` in ascending order."""
    if n < 64:
        i = 0
        while n:
            if n & 1:
                yield i
            n >>= 1
            i += 1
        return
    # string scan is linear for large indices; repeated shifting is quadratic
    for i, c in enumerate(reversed(bin(n)[2:])):
        if c == "1":
            yield i


def index_of(F: FinSet | Iterable[int], width: int | None = None) -> int:
    """Canonical index of ``F``.

    With ``width`` set, the index must fit in ``width`` bits; a larger
    element raises :class:`IndexRangeError` instead of overflowing.
    """
    fs = F if isinstance(F, FinSet) else FinSet.of(F)
    if width is not None and fs.index.bit_length() > width:
        raise IndexRangeError(
            f"element {fs.max()} does not fit an index of width {width}"
        )
    return fs.index


def members(n: int) -> FinSet:
    """The finite set ``D_n`` with canonical index ``n``."""
    return FinSet(n)


def contains(i: int, n: int) -> bool:
    """Membership test ``i in D_n``."""
    return (n >> i) & 1 == 1


def mask_of(x: FinSet | int | Iterable[int]) -> int:
    if isinstance(x, FinSet):
        return x.index
    if isinstance(x, int):
        return x
    return FinSet.of(x).index


@dataclass(frozen=True)
class Universe:
    """The ground segment ``{0, ..., size-1}``."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"universe size must be >= 1, got {self.size!r}")

    @property
    def mask(self) -> int:
        return (1 << self.size) - 1

    def all(self) -> FinSet:
        return FinSet(self.mask)

    def admits(self, F: FinSet | int) -> bool:
        return mask_of(F) >> self.size == 0

    def require(self, F: FinSet | int, what: str = "set") -> None:
        if not self.admits(F):
            raise ValueError(
                f"{what} {format_set(mask_of(F))} leaves the universe "
                f"{{0..{self.size - 1}}}"
            )


def subsets(base: FinSet | int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[FinSet]:
    """All subsets of ``base``.

    Subsets are yielded in increasing order of their characteristic vector
    over ``base`` read as a binary number, so ``{1,3}`` gives
    ``{}, {1}, {3}, {1,3}``.
    """
    for m in subset_masks(mask_of(base), cap):
        yield FinSet(m)


def subset_masks(base: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[int]:
    k = base.bit_count()
    if k > cap:
        raise BudgetError(
            f"refusing to enumerate 2^{k} subsets (enumeration cap is {cap})"
        )
    # ascending submask walk, same order as the characteristic vectors
    sub = 0
    while True:
        yield sub
        if sub == base:
            return
        sub = (sub - base) & base


def superset_masks(
    lower: int, upper: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[int]:
    """All ``S`` with ``lower <= S <= upper`` (lower must be inside upper)."""
    for m in subset_masks(upper & ~lower, cap):
        yield lower | m


def format_set(x: FinSet | int | Iterable[int]) -> str:
    return "{" + ",".join(str(e) for e in iter_bits(mask_of(x))) + "}"


_ITEM = re.compile(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_set(text: str, source: str | None = None) -> FinSet:
    """Parse a literal like ``{a,b,c}``, ``{}`` or ``{a..b}``.

    Ranges are inclusive and may be mixed with single elements; any element
    listed twice is an error.
    """
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise InputError(f"set literal must be enclosed in braces: {text!r}", source=source)
    body = s[1:-1].strip()
    n = 0
    if not body:
        return FinSet(0)
    for part in body.split(","):
        m = _ITEM.match(part)
        if not m:
            raise InputError(f"bad set element {part.strip()!r} in {text!r}", source=source)
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) is not None else lo
        if hi < lo:
            raise InputError(f"empty range {lo}..{hi} in {text!r}", source=source)
        block = ((1 << (hi - lo + 1)) - 1) << lo
        if n & block:
            dup = next(iter_bits(n & block))
            raise InputError(f"duplicate element {dup} in {text!r}", source=source)
        n |= block
    return FinSet(n)
