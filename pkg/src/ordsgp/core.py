"""Finite ordered semigroup model and the primitive set operators.

An ordered semigroup here is a carrier {0, ..., n-1} with an associative
multiplication table and a partial order that multiplication preserves on
both sides: a <= b implies c*a <= c*b and a*c <= b*c.  Subsets of the
carrier are ElementSet values; downward closure

    (H] = {t : t <= h for some h in H}

and the setwise product A*B = {a*b : a in A, b in B} are the primitives
every higher-level computation is built from.

Element indices are the canonical identity; display names are cosmetic.
All values are immutable after validation and safe to share.  Subsets are
stored as bitmasks over the carrier, which keeps the exhaustive scans in
the rest of the package cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    EmptySet,
    NotAntisymmetric,
    NotAssociative,
    NotClosed,
    NotCompatible,
    NotTransitive,
)

Table = tuple[tuple[int, ...], ...]
LeqMatrix = tuple[tuple[bool, ...], ...]


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup: carrier 0..size-1 plus an associative table."""

    size: int
    table: Table
    names: tuple[str, ...] | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def prod(self, a: int, b: int) -> int:
        return self.table[a][b]

    def word(self, *xs: int) -> int:
        """Product of a nonempty sequence of elements, left to right."""
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def name_of(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteSemigroup(size={self.size})"


@dataclass(frozen=True)
class OrderedSemigroup:
    """A finite ordered semigroup: table plus a compatible partial order."""

    size: int
    table: Table
    leq: LeqMatrix
    names: tuple[str, ...] | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def prod(self, a: int, b: int) -> int:
        return self.table[a][b]

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def word(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def name_of(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def subset(self, members: Iterable[int]) -> "ElementSet":
        return ElementSet.from_members(self, members)

    def carrier_set(self) -> "ElementSet":
        return ElementSet(self, (1 << self.size) - 1)

    def order_pairs(self) -> list[tuple[int, int]]:
        """All non-reflexive pairs (a, b) with a <= b, sorted."""
        return [
            (a, b)
            for a in range(self.size)
            for b in range(self.size)
            if a != b and self.leq[a][b]
        ]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"OrderedSemigroup(size={self.size})"


@dataclass(frozen=True)
class ElementSet:
    """A subset of one structure's carrier, stored as a bitmask."""

    structure: OrderedSemigroup
    mask: int

    @classmethod
    def from_members(cls, structure: OrderedSemigroup, members: Iterable[int]) -> "ElementSet":
        mask = 0
        for m in members:
            if not 0 <= m < structure.size:
                raise ValueError(f"element {m} out of range 0..{structure.size - 1}")
            mask |= 1 << m
        return cls(structure, mask)

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.structure.size:
            raise ValueError("mask exceeds the carrier")

    @property
    def members(self) -> frozenset[int]:
        return frozenset(bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __contains__(self, item: int) -> bool:
        return 0 <= item < self.structure.size and (self.mask >> item) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "{" + ",".join(str(i) for i in self) + "}"


def bits(mask: int) -> Iterator[int]:
    """Indices set in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(members: Iterable[int]) -> int:
    mask = 0
    for m in members:
        mask |= 1 << m
    return mask


def _check_table(size: int, table) -> Table:
    if size < 1:
        raise ValueError("size must be a positive integer")
    rows = []
    if len(table) != size:
        raise ValueError(f"table must have {size} rows")
    for i, row in enumerate(table):
        r = tuple(int(v) for v in row)
        if len(r) != size:
            raise ValueError(f"table row {i} must have {size} entries")
        for j, v in enumerate(r):
            if not 0 <= v < size:
                raise ValueError(f"table entry ({i},{j}) out of range: {v}")
        rows.append(r)
    return tuple(rows)


def _check_associative(size: int, table: Table) -> None:
    for i in range(size):
        ti = table[i]
        for j in range(size):
            ij = ti[j]
            tj = table[j]
            row_ij = table[ij]
            for k in range(size):
                if row_ij[k] != ti[tj[k]]:
                    raise NotAssociative(i, j, k)


def _check_names(size: int, names) -> tuple[str, ...] | None:
    if names is None:
        return None
    out = tuple(str(x) for x in names)
    if len(out) != size:
        raise ValueError(f"expected {size} names, got {len(out)}")
    for nm in out:
        if not nm or any(ch.isspace() for ch in nm) or "#" in nm:
            raise ValueError(f"bad display name: {nm!r}")
    return out


def validate_semigroup(size: int, table, names=None) -> FiniteSemigroup:
    """Check associativity and build a FiniteSemigroup."""
    tbl = _check_table(size, table)
    _check_associative(size, tbl)
    return FiniteSemigroup(size, tbl, _check_names(size, names))


def validate_structure(
    size: int,
    table,
    leq_pairs: Iterable[tuple[int, int]] = (),
    names=None,
    close_order: bool = False,
) -> OrderedSemigroup:
    """Check all ordered-semigroup axioms and build the structure.

    ``leq_pairs`` lists the pairs (a, b) with a <= b; reflexive pairs are
    implied and added.  Transitivity is NOT auto-completed (a silent
    closure could mask modeling errors) unless ``close_order`` is set, in
    which case the transitive closure is taken before validation.
    """
    tbl = _check_table(size, table)
    _check_associative(size, tbl)

    leq = [[False] * size for _ in range(size)]
    for i in range(size):
        leq[i][i] = True
    for a, b in leq_pairs:
        a, b = int(a), int(b)
        if not (0 <= a < size and 0 <= b < size):
            raise ValueError(f"order pair ({a},{b}) out of range")
        leq[a][b] = True

    if close_order:
        for k in range(size):
            lk = leq[k]
            for i in range(size):
                if leq[i][k]:
                    li = leq[i]
                    for j in range(size):
                        if lk[j]:
                            li[j] = True

    for i in range(size):
        for j in range(i + 1, size):
            if leq[i][j] and leq[j][i]:
                raise NotAntisymmetric(i, j)
    for i in range(size):
        li = leq[i]
        for j in range(size):
            if li[j] and i != j:
                lj = leq[j]
                for k in range(size):
                    if lj[k] and not li[k]:
                        raise NotTransitive(i, j, k)

    for a in range(size):
        la = leq[a]
        for b in range(size):
            if a != b and la[b]:
                for c in range(size):
                    tc = tbl[c]
                    if not leq[tc[a]][tc[b]]:
                        raise NotCompatible(a, b, c, "left")
                    if not leq[tbl[a][c]][tbl[b][c]]:
                        raise NotCompatible(a, b, c, "right")

    return OrderedSemigroup(
        size, tbl, tuple(tuple(row) for row in leq), _check_names(size, names)
    )


# ---------------------------------------------------------------------------
# cached per-structure bitmask helpers


def _cached(s, key, build):
    cache = s._cache
    value = cache.get(key)
    if value is None:
        value = cache[key] = build()
    return value


def full_mask(s: OrderedSemigroup) -> int:
    return (1 << s.size) - 1


def below_masks(s: OrderedSemigroup) -> tuple[int, ...]:
    """below[i] = mask of {t : t <= i}, the principal down-set (i]."""

    def build():
        n = s.size
        leq = s.leq
        return tuple(
            sum(1 << t for t in range(n) if leq[t][i]) for i in range(n)
        )

    return _cached(s, "below", build)


def above_masks(s: OrderedSemigroup) -> tuple[int, ...]:
    """above[i] = mask of {x : i <= x}."""

    def build():
        n = s.size
        leq = s.leq
        return tuple(
            sum(1 << x for x in range(n) if leq[i][x]) for i in range(n)
        )

    return _cached(s, "above", build)


def down_mask(s: OrderedSemigroup, mask: int) -> int:
    below = below_masks(s)
    out = 0
    while mask:
        low = mask & -mask
        out |= below[low.bit_length() - 1]
        mask ^= low
    return out


def up_mask(s: OrderedSemigroup, mask: int) -> int:
    above = above_masks(s)
    out = 0
    while mask:
        low = mask & -mask
        out |= above[low.bit_length() - 1]
        mask ^= low
    return out


def product_mask(s: OrderedSemigroup, amask: int, bmask: int) -> int:
    table = s.table
    out = 0
    a = amask
    while a:
        la = a & -a
        row = table[la.bit_length() - 1]
        b = bmask
        while b:
            lb = b & -b
            out |= 1 << row[lb.bit_length() - 1]
            b ^= lb
        a ^= la
    return out


def left_multiples(s: OrderedSemigroup, a: int) -> int:
    """Mask of S*a."""

    def build():
        n = s.size
        table = s.table
        return tuple(
            mask_of(table[x][e] for x in range(n)) for e in range(n)
        )

    return _cached(s, "left_multiples", build)[a]


def right_multiples(s: OrderedSemigroup, a: int) -> int:
    """Mask of a*S."""

    def build():
        n = s.size
        table = s.table
        return tuple(
            mask_of(table[e][x] for x in range(n)) for e in range(n)
        )

    return _cached(s, "right_multiples", build)[a]


def sandwich_mask(s: OrderedSemigroup, x: int, y: int) -> int:
    """Mask of x*S*y."""
    store = _cached(s, "sandwich", dict)
    key = (x, y)
    value = store.get(key)
    if value is None:
        table = s.table
        row = table[x]
        value = 0
        for t in range(s.size):
            value |= 1 << table[row[t]][y]
        store[key] = value
    return value


def _require_bound(s: OrderedSemigroup, x: ElementSet, what: str = "set") -> None:
    if x.structure is not s and x.structure != s:
        raise ValueError(f"{what} is bound to a different structure")


# ---------------------------------------------------------------------------
# public set operators


def down_closure(s: OrderedSemigroup, x: ElementSet) -> ElementSet:
    """(X] = {t : t <= h for some h in X}.  Extensive, monotone, idempotent."""
    _require_bound(s, x)
    return ElementSet(s, down_mask(s, x.mask))


def set_product(s: OrderedSemigroup, a: ElementSet, b: ElementSet) -> ElementSet:
    """A*B = {a*b : a in A, b in B}."""
    _require_bound(s, a)
    _require_bound(s, b)
    return ElementSet(s, product_mask(s, a.mask, b.mask))


def induced_substructure(s: OrderedSemigroup, t: ElementSet) -> OrderedSemigroup:
    """The ordered semigroup on a product-closed subset T.

    The result carries the restricted table and order; closures computed in
    the returned structure range over T only.  Element i of the result is
    the i-th smallest member of T.
    """
    _require_bound(s, t)
    if not t.mask:
        raise EmptySet("substructure carrier")
    members = sorted(t)
    inside = t.mask
    for a in members:
        row = s.table[a]
        for b in members:
            if not (inside >> row[b]) & 1:
                raise NotClosed(a, b)
    index = {m: i for i, m in enumerate(members)}
    table = tuple(
        tuple(index[s.table[a][b]] for b in members) for a in members
    )
    leq = tuple(tuple(s.leq[a][b] for b in members) for a in members)
    names = tuple(s.names[m] for m in members) if s.names else None
    return OrderedSemigroup(len(members), table, leq, names)


def dual_structure(s: OrderedSemigroup) -> OrderedSemigroup:
    """Order dual under multiplication reversal: a*b becomes b*a.

    Right-sided variants of every left-sided notion are the left-sided
    notion evaluated on the dual.
    """
    n = s.size
    table = tuple(tuple(s.table[b][a] for b in range(n)) for a in range(n))
    return OrderedSemigroup(n, table, s.leq, s.names)
