"""Per-element analysis: ordered idempotency, regularity variants, ordered
inverses, commutation witnesses, and the group component around an ordered
idempotent.

All existential witnesses are searched in ascending index order, so every
reported witness is the least one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ElementSet, OrderedSemigroup, _cached, bits, full_mask
from .errors import InvariantViolation, NotIdempotent


@dataclass(frozen=True)
class ElementRegularity:
    """Regularity flags for one element, with least witnesses.

    regular             a in (aSa]
    completely_regular  a in (a^2 S a^2]
    left_regular        a in (S a^2]
    right_regular       a in (a^2 S]

    ``witnesses`` maps each true flag to the least x realising it, e.g.
    a <= a*x*a for the "regular" entry.
    """

    element: int
    regular: bool
    completely_regular: bool
    left_regular: bool
    right_regular: bool
    witnesses: dict


def idempotent_mask(s: OrderedSemigroup) -> int:
    def build():
        table, leq = s.table, s.leq
        mask = 0
        for e in range(s.size):
            if leq[e][table[e][e]]:
                mask |= 1 << e
        return mask

    return _cached(s, "idempotents", build)


def ordered_idempotents(s: OrderedSemigroup) -> ElementSet:
    """All e with e <= e*e."""
    return ElementSet(s, idempotent_mask(s))


def _regularity_witness(s: OrderedSemigroup, a: int, left: int, right: int) -> int:
    """Least x with a <= left*x*right, or -1."""
    table, leq = s.table, s.leq
    row = table[left]
    la = leq[a]
    for x in range(s.size):
        if la[table[row[x]][right]]:
            return x
    return -1


def regular_mask(s: OrderedSemigroup) -> int:
    def build():
        mask = 0
        for a in range(s.size):
            if _regularity_witness(s, a, a, a) >= 0:
                mask |= 1 << a
        return mask

    return _cached(s, "regular_mask", build)


def completely_regular_mask(s: OrderedSemigroup) -> int:
    def build():
        table = s.table
        mask = 0
        for a in range(s.size):
            aa = table[a][a]
            if _regularity_witness(s, a, aa, aa) >= 0:
                mask |= 1 << a
        return mask

    return _cached(s, "cr_mask", build)


def is_regular_structure(s: OrderedSemigroup) -> bool:
    return regular_mask(s) == full_mask(s)


def element_regularity(s: OrderedSemigroup, a: int) -> ElementRegularity:
    table, leq = s.table, s.leq
    aa = table[a][a]
    witnesses = {}

    x = _regularity_witness(s, a, a, a)
    regular = x >= 0
    if regular:
        witnesses["regular"] = x

    x = _regularity_witness(s, a, aa, aa)
    completely_regular = x >= 0
    if completely_regular:
        witnesses["completely_regular"] = x

    la = leq[a]
    left_regular = False
    for x in range(s.size):
        if la[table[x][aa]]:
            left_regular = True
            witnesses["left_regular"] = x
            break
    right_regular = False
    row_aa = table[aa]
    for x in range(s.size):
        if la[row_aa[x]]:
            right_regular = True
            witnesses["right_regular"] = x
            break

    if completely_regular and not (regular and left_regular and right_regular):
        raise InvariantViolation(
            f"element {a}: completely regular without the implied flags"
        )
    return ElementRegularity(
        a, regular, completely_regular, left_regular, right_regular, witnesses
    )


def inverse_mask(s: OrderedSemigroup, a: int) -> int:
    """Mask of the ordered inverses of a: b with a <= aba and b <= bab."""

    def build():
        table, leq = s.table, s.leq
        out = []
        for e in range(s.size):
            le = leq[e]
            row = table[e]
            mask = 0
            for b in range(s.size):
                eb = row[b]
                if le[table[eb][e]] and leq[b][table[table[b][e]][b]]:
                    mask |= 1 << b
            out.append(mask)
        return tuple(out)

    return _cached(s, "inverse_masks", build)[a]


def inverses_of(s: OrderedSemigroup, a: int) -> ElementSet:
    return ElementSet(s, inverse_mask(s, a))


def h_commute_witness(s: OrderedSemigroup, a: int, b: int) -> int | None:
    """Least x with a*b <= b*x*a, or None."""
    table, leq = s.table, s.leq
    lab = leq[table[a][b]]
    row_b = table[b]
    for x in range(s.size):
        if lab[table[row_b[x]][a]]:
            return x
    return None


def group_component_mask(
    s: OrderedSemigroup, e: int, shared_witness: bool = True
) -> int:
    table, leq = s.table, s.leq
    row_e = table[e]
    le = leq[e]
    mask = 0
    for a in range(s.size):
        if not (leq[a][row_e[a]] and leq[a][table[a][e]]):
            continue
        row_a = table[a]
        if shared_witness:
            ok = any(
                le[table[z][a]] and le[row_a[z]] for z in range(s.size)
            )
        else:
            ok = any(le[table[z][a]] for z in range(s.size)) and any(
                le[row_a[z]] for z in range(s.size)
            )
        if ok:
            mask |= 1 << a
    return mask


def group_component(
    s: OrderedSemigroup, e: int, shared_witness: bool = True
) -> ElementSet:
    """G_e = {a : a <= ea, a <= ae, and e <= za, e <= az for some z}.

    The two existentials share a single z by default; ``shared_witness=False``
    allows independent witnesses for comparison.
    """
    if not (idempotent_mask(s) >> e) & 1:
        raise NotIdempotent(e)
    return ElementSet(s, group_component_mask(s, e, shared_witness))
