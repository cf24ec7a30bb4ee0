"""Structure-level predicates and the executable equivalence bundles.

A predicate is a named property of a whole structure (regular, completely
regular, group like, Clifford, ...).  A bundle groups together conditions
that a characterization theorem asserts to be equivalent; evaluating a
bundle computes every condition independently, from its own definition,
and reports whether they all agree.  A bundle whose conditions disagree on
any finite structure falsifies the theorem it encodes, so the enumeration
sweeps treat a failed ``agree`` flag as a build-stopping finding.

Predicates with a regularity premise (left/right group like, Clifford,
left Clifford, inverse) raise NotApplicable on non-regular structures
rather than returning a vacuous boolean.  Bundles evaluated on structures
outside such premises use the total forms (regular AND the condition) so
that equivalences remain meaningful on every input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import limits
from .core import (
    OrderedSemigroup,
    above_masks,
    bits,
    down_mask,
    full_mask,
    left_multiples,
    right_multiples,
    sandwich_mask,
)
from .elements import (
    idempotent_mask,
    inverse_mask,
    is_regular_structure,
)
from .errors import InvariantViolation, NotApplicable, SizeLimit, UnknownBundle, UnknownPredicate
from .ideals import Side, green_relation
from .report import (
    BundleResult,
    ClassificationReport,
    ConditionGroup,
    ConditionResult,
    PredicateResult,
    make_bundle,
)

# ---------------------------------------------------------------------------
# quantifier scans
#
# Every scan takes an optional carrier mask ``t`` restricting both the
# quantifiers and the witnesses to a subset (used for classes of a
# decomposition); None means the full carrier.  Scans return
# (holds, counterexample, witnesses); witnesses are collected only when
# requested and map argument tuples to least witness tuples.


def _tmask(s: OrderedSemigroup, t: int | None) -> int:
    return full_mask(s) if t is None else t


def _scan_regular(s, t=None, witnesses=False):
    table, leq = s.table, s.leq
    t = _tmask(s, t)
    wits = {} if witnesses else None
    for a in bits(t):
        la = leq[a]
        row_a = table[a]
        found = -1
        for x in bits(t):
            if la[table[row_a[x]][a]]:
                found = x
                break
        if found < 0:
            return False, (a,), None
        if witnesses:
            wits[(a,)] = (found,)
    return True, None, wits


def _scan_completely_regular(s, t=None, witnesses=False):
    table, leq = s.table, s.leq
    t = _tmask(s, t)
    wits = {} if witnesses else None
    for a in bits(t):
        la = leq[a]
        aa = table[a][a]
        row = table[aa]
        found = -1
        for x in bits(t):
            if la[table[row[x]][aa]]:
                found = x
                break
        if found < 0:
            return False, (a,), None
        if witnesses:
            wits[(a,)] = (found,)
    return True, None, wits


def _scan_left_divisible(s, t=None, witnesses=False):
    """For all a, b there is x with a <= x*b (x inside the same carrier)."""
    table, leq = s.table, s.leq
    t = _tmask(s, t)
    wits = {} if witnesses else None
    for a in bits(t):
        la = leq[a]
        for b in bits(t):
            found = -1
            for x in bits(t):
                if la[table[x][b]]:
                    found = x
                    break
            if found < 0:
                return False, (a, b), None
            if witnesses:
                wits[(a, b)] = (found,)
    return True, None, wits


def _scan_right_divisible(s, t=None, witnesses=False):
    table, leq = s.table, s.leq
    t = _tmask(s, t)
    wits = {} if witnesses else None
    for a in bits(t):
        la = leq[a]
        for b in bits(t):
            row_b = table[b]
            found = -1
            for y in bits(t):
                if la[row_b[y]]:
                    found = y
                    break
            if found < 0:
                return False, (a, b), None
            if witnesses:
                wits[(a, b)] = (found,)
    return True, None, wits


def _scan_group_like(s, t=None, witnesses=False):
    """For all a, b there are x, y with a <= x*b and a <= b*y."""
    table, leq = s.table, s.leq
    t = _tmask(s, t)
    wits = {} if witnesses else None
    for a in bits(t):
        la = leq[a]
        for b in bits(t):
            row_b = table[b]
            x_found = -1
            for x in bits(t):
                if la[table[x][b]]:
                    x_found = x
                    break
            if x_found < 0:
                return False, (a, b), None
            y_found = -1
            for y in bits(t):
                if la[row_b[y]]:
                    y_found = y
                    break
            if y_found < 0:
                return False, (a, b), None
            if witnesses:
                wits[(a, b)] = (x_found, y_found)
    return True, None, wits


def _principal_mask_in(s, t, a, side: Side) -> int:
    table = s.table
    seed = 1 << a
    if side in (Side.LEFT, Side.TWO_SIDED):
        for x in bits(t):
            seed |= 1 << table[x][a]
    if side in (Side.RIGHT, Side.TWO_SIDED):
        row = table[a]
        for x in bits(t):
            seed |= 1 << row[x]
    if side is Side.TWO_SIDED:
        for x in bits(t):
            row = table[table[x][a]]
            for y in bits(t):
                seed |= 1 << row[y]
    return down_mask(s, seed) & t


def _scan_simple(s, t=None, side=Side.TWO_SIDED, witnesses=False):
    """No proper ideal of the given side: every principal ideal is everything."""
    t = _tmask(s, t)
    for a in bits(t):
        m = _principal_mask_in(s, t, a, side)
        if m != t:
            return False, (a, next(bits(t & ~m))), None
    return True, None, ({} if witnesses else None)


def _closed(s, mask: int) -> bool:
    table = s.table
    for a in bits(mask):
        row = table[a]
        for b in bits(mask):
            if not (mask >> row[b]) & 1:
                return False
    return True


def _scan_clifford_condition(s, witnesses=False):
    """For every a and ordered idempotent e: ae <= e*u*a and ea <= a*v*e."""
    table = s.table
    above = above_masks(s)
    idem = idempotent_mask(s)
    wits = {} if witnesses else None
    for a in range(s.size):
        row_a = table[a]
        for e in bits(idem):
            ae = row_a[e]
            ea = table[e][a]
            if not above[ae] & sandwich_mask(s, e, a):
                return False, (a, e), None
            if not above[ea] & sandwich_mask(s, a, e):
                return False, (a, e), None
            if witnesses:
                leq = s.leq
                u = next(
                    u for u in range(s.size)
                    if leq[ae][table[table[e][u]][a]]
                )
                v = next(
                    v for v in range(s.size)
                    if leq[ea][table[row_a[v]][e]]
                )
                wits[(a, e)] = (u, v)
    return True, None, wits


def _left_clifford_condition(s, witnesses=False):
    """(aS] is contained in (Sa] for every a."""
    for a in range(s.size):
        aS = down_mask(s, right_multiples(s, a))
        Sa = down_mask(s, left_multiples(s, a))
        if aS & ~Sa:
            return False, (a, next(bits(aS & ~Sa))), None
    return True, None, ({} if witnesses else None)


def _inverse_condition(s, witnesses=False):
    """Any two ordered inverses of the same element are H-related."""
    h = green_relation(s, "H")
    ids = h.class_ids
    for a in range(s.size):
        vs = list(bits(inverse_mask(s, a)))
        for i, a1 in enumerate(vs):
            for a2 in vs[i + 1:]:
                if ids[a1] != ids[a2]:
                    return False, (a, a1, a2), None
    return True, None, ({} if witnesses else None)


def _scan_h_commutative(s, witnesses=False):
    """Every pair a, b admits x with a*b <= b*x*a."""
    table = s.table
    above = above_masks(s)
    wits = {} if witnesses else None
    for a in range(s.size):
        row_a = table[a]
        for b in range(s.size):
            ab = row_a[b]
            if not above[ab] & sandwich_mask(s, b, a):
                return False, (a, b), None
            if witnesses:
                leq = s.leq
                x = next(
                    x for x in range(s.size)
                    if leq[ab][table[table[b][x]][a]]
                )
                wits[(a, b)] = (x,)
    return True, None, wits


# total forms used by bundles evaluated outside a premise


def _regular_total(s) -> bool:
    return _scan_regular(s)[0]


def _clifford_total(s):
    if not _regular_total(s):
        return False, ("not-regular",)
    holds, ce, _ = _scan_clifford_condition(s)
    return holds, ce


def _left_clifford_total(s):
    if not _regular_total(s):
        return False, ("not-regular",)
    holds, ce, _ = _left_clifford_condition(s)
    return holds, ce


def _left_group_like_total(s):
    if not _regular_total(s):
        return False, ("not-regular",)
    holds, ce, _ = _scan_left_divisible(s)
    return holds, ce


# ---------------------------------------------------------------------------
# predicate registry


def _pred_regular(s, w):
    return _scan_regular(s, None, w)


def _pred_completely_regular(s, w):
    return _scan_completely_regular(s, None, w)


def _pred_group_like(s, w):
    return _scan_group_like(s, None, w)


def _pred_left_group_like(s, w):
    return _scan_left_divisible(s, None, w)


def _pred_right_group_like(s, w):
    return _scan_right_divisible(s, None, w)


def _pred_simple(s, w):
    return _scan_simple(s, None, Side.TWO_SIDED, w)


def _pred_left_simple(s, w):
    return _scan_simple(s, None, Side.LEFT, w)


def _pred_right_simple(s, w):
    return _scan_simple(s, None, Side.RIGHT, w)


def _pred_t_simple(s, w):
    holds, ce, _ = _scan_simple(s, None, Side.LEFT)
    if not holds:
        return False, ("left",) + ce, None
    holds, ce, _ = _scan_simple(s, None, Side.RIGHT)
    if not holds:
        return False, ("right",) + ce, None
    return True, None, ({} if w else None)


def _pred_clifford(s, w):
    return _scan_clifford_condition(s, w)


def _pred_left_clifford(s, w):
    return _left_clifford_condition(s, w)


def _pred_inverse(s, w):
    return _inverse_condition(s, w)


def _pred_h_commutative(s, w):
    return _scan_h_commutative(s, w)


def _pred_completely_simple(s, w):
    holds, ce, _ = _scan_simple(s, None, Side.TWO_SIDED)
    if not holds:
        return False, ("simple",) + ce, None
    holds, ce, _ = _scan_completely_regular(s)
    if not holds:
        return False, ("completely_regular",) + ce, None
    return True, None, ({} if w else None)


PREDICATES: dict[str, Callable] = {
    "regular": _pred_regular,
    "completely_regular": _pred_completely_regular,
    "group_like": _pred_group_like,
    "left_group_like": _pred_left_group_like,
    "right_group_like": _pred_right_group_like,
    "simple": _pred_simple,
    "left_simple": _pred_left_simple,
    "right_simple": _pred_right_simple,
    "t_simple": _pred_t_simple,
    "clifford": _pred_clifford,
    "left_clifford": _pred_left_clifford,
    "inverse": _pred_inverse,
    "h_commutative": _pred_h_commutative,
    "completely_simple": _pred_completely_simple,
}

PREDICATE_ORDER = tuple(PREDICATES)

REQUIRES_REGULAR = frozenset(
    {"left_group_like", "right_group_like", "clifford", "left_clifford", "inverse"}
)


def predicate(s: OrderedSemigroup, name: str) -> PredicateResult:
    """Evaluate one registry predicate with least witness or counterexample."""
    fn = PREDICATES.get(name)
    if fn is None:
        raise UnknownPredicate(name)
    if name in REQUIRES_REGULAR and not is_regular_structure(s):
        raise NotApplicable(name, "structure is not regular")
    holds, ce, wits = fn(s, True)
    if holds:
        return PredicateResult(name, True, witnesses=wits)
    return PredicateResult(name, False, counterexample=ce)


# ---------------------------------------------------------------------------
# equivalence bundles


@dataclass(frozen=True)
class _Bundle:
    premise: str | None
    build: Callable


def _cond(label, pair_or_holds, detail=None) -> ConditionResult:
    if isinstance(pair_or_holds, tuple):
        holds, detail = pair_or_holds
        return ConditionResult(label, holds, detail)
    return ConditionResult(label, pair_or_holds, detail)


def _forall_membership(s, target_of, mask_of_elem):
    """Check target_of(a) in (mask_of_elem(a)] for every a; least failing a."""
    above = above_masks(s)
    for a in range(s.size):
        if not above[target_of(a)] & mask_of_elem(a):
            return False, (a,)
    return True, None


def _build_cr_eq5(s) -> BundleResult:
    table = s.table
    above = above_masks(s)

    def member(a, mask):
        return bool(above[a] & mask)

    def check(parts):
        for a in range(s.size):
            aa = table[a][a]
            for part in parts:
                if not member(a, part(a, aa)):
                    return False, (a,)
        return True, None

    a2Sa = lambda a, aa: sandwich_mask(s, aa, a)
    aSa2 = lambda a, aa: sandwich_mask(s, a, aa)
    Sa2 = lambda a, aa: left_multiples(s, aa)
    a2S = lambda a, aa: right_multiples(s, aa)

    c1 = _scan_completely_regular(s)[:2]
    c2 = check((a2Sa, aSa2))
    c3 = check((a2Sa, Sa2))
    c4 = check((aSa2, a2S))
    reg, reg_ce, _ = _scan_regular(s)
    if reg:
        c5 = check((a2S, Sa2))
    else:
        c5 = (False, reg_ce)
    return make_bundle(
        "CR-EQ5",
        (
            _cond("a in (a^2 S a^2] for all a", c1),
            _cond("a in (a^2 S a] and a in (a S a^2] for all a", c2),
            _cond("a in (a^2 S a] and a in (S a^2] for all a", c3),
            _cond("a in (a S a^2] and a in (a^2 S] for all a", c4),
            _cond("regular, and a in (a^2 S] and a in (S a^2] for all a", c5),
        ),
    )


def _build_gl_char(s) -> BundleResult:
    above = above_masks(s)

    def forall_pairs(make_mask):
        for a in range(s.size):
            ua = above[a]
            for b in range(s.size):
                if not ua & make_mask(a, b):
                    return False, (a, b)
        return True, None

    c0 = _scan_group_like(s)[:2]
    c1 = forall_pairs(lambda a, b: sandwich_mask(s, b, b))
    c2 = _left_group_like_total(s)
    c3 = forall_pairs(lambda a, b: sandwich_mask(s, a, b))
    return make_bundle(
        "GL-CHAR",
        (
            _cond("group like: a <= xb and a <= by solvable for all a, b", c0),
            _cond("a in (b S b] for all a, b", c1),
            _cond("left group like: regular and a <= xb solvable for all a, b", c2),
            _cond("a in (a S b] for all a, b", c3),
        ),
        (
            ConditionGroup("equivalence", (0, 1)),
            ConditionGroup("equivalence", (2, 3)),
        ),
    )


def _build_gl_hrel(s) -> BundleResult:
    c0 = _scan_group_like(s)[:2]
    ids = green_relation(s, "H").class_ids
    idem = list(bits(idempotent_mask(s)))
    c1 = (True, None)
    for i, e in enumerate(idem):
        for f in idem[i + 1:]:
            if ids[e] != ids[f]:
                c1 = (False, (e, f))
                break
        if not c1[0]:
            break
    return make_bundle(
        "GL-HREL",
        (
            _cond("group like", c0),
            _cond("all ordered idempotents lie in one H-class", c1),
        ),
    )


def _build_inv_comm(s) -> BundleResult:
    c0 = _inverse_condition(s)[:2]
    above = above_masks(s)
    table = s.table
    idem = list(bits(idempotent_mask(s)))
    c1 = (True, None)
    for e in idem:
        row_e = table[e]
        for f in idem:
            if not above[row_e[f]] & sandwich_mask(s, f, e):
                c1 = (False, (e, f))
                break
        if not c1[0]:
            break
    return make_bundle(
        "INV-COMM",
        (
            _cond("ordered inverses of each element are H-related", c0),
            _cond("ef <= f x e solvable for all ordered idempotents e, f", c1),
        ),
    )


def _build_cr_hcomm(s) -> BundleResult:
    return make_bundle(
        "CR-HCOMM",
        (
            _cond("regular", _scan_regular(s)[:2]),
            _cond("completely regular", _scan_completely_regular(s)[:2]),
        ),
    )


def _build_cr_inv(s) -> BundleResult:
    c0 = _scan_completely_regular(s)[:2]
    above = above_masks(s)
    table = s.table
    c1 = (True, None)
    for a in range(s.size):
        row_a = table[a]
        ok = False
        for ap in bits(inverse_mask(s, a)):
            aap = row_a[ap]
            apa = table[ap][a]
            if above[aap] & sandwich_mask(s, ap, a) and above[apa] & sandwich_mask(
                s, a, ap
            ):
                ok = True
                break
        if not ok:
            c1 = (False, (a,))
            break
    return make_bundle(
        "CR-INV",
        (
            _cond("completely regular", c0),
            _cond(
                "each a has an ordered inverse a' with aa' <= a'ua and a'a <= ava'",
                c1,
            ),
        ),
    )


def _union_of_group_like(s):
    """Is the carrier covered by product-closed group-like subsets?"""
    limits.check("ideals", s.size)
    covered = 0
    full = full_mask(s)
    for mask in range(1, full + 1):
        if covered | mask == covered:
            continue
        if _closed(s, mask) and _scan_group_like(s, mask)[0]:
            covered |= mask
            if covered == full:
                return True, None
    return False, (next(bits(full & ~covered)),)


def _build_cr_hclass(s) -> BundleResult:
    c0 = _scan_completely_regular(s)[:2]
    h = green_relation(s, "H")
    c1 = (True, None)
    for cls_set in h.classes:
        mask = cls_set.mask
        if not _closed(s, mask) or not _scan_group_like(s, mask)[0]:
            c1 = (False, tuple(cls_set))
            break
    c2 = _union_of_group_like(s)
    return make_bundle(
        "CR-HCLASS",
        (
            _cond("completely regular", c0),
            _cond("every H-class is a group like ordered subsemigroup", c1),
            _cond("carrier is a union of group like ordered subsemigroups", c2),
        ),
    )


def _build_cl_eq(s) -> BundleResult:
    c0 = _scan_clifford_condition(s)[:2]
    lrel = green_relation(s, "L")
    rrel = green_relation(s, "R")
    if lrel.class_ids == rrel.class_ids:
        c1 = (True, None)
    else:
        pair = next(
            (a, b)
            for a in range(s.size)
            for b in range(s.size)
            if (lrel.class_ids[a] == lrel.class_ids[b])
            != (rrel.class_ids[a] == rrel.class_ids[b])
        )
        c1 = (False, pair)

    c2 = (True, None)
    for a in range(s.size):
        aS = down_mask(s, right_multiples(s, a))
        Sa = down_mask(s, left_multiples(s, a))
        if aS != Sa:
            c2 = (False, (a, next(bits(aS ^ Sa))))
            break
    c3 = (True, None)
    for e in bits(idempotent_mask(s)):
        eS = down_mask(s, right_multiples(s, e))
        Se = down_mask(s, left_multiples(s, e))
        if eS != Se:
            c3 = (False, (e, next(bits(eS ^ Se))))
            break
    return make_bundle(
        "CL-EQ",
        (
            _cond("clifford: ae <= eua and ea <= ave solvable", c0),
            _cond("L = R", c1),
            _cond("(aS] = (Sa] for all a", c2),
            _cond("(eS] = (Se] for all ordered idempotents e", c3),
        ),
    )


def _build_cl_hcomm(s) -> BundleResult:
    return make_bundle(
        "CL-HCOMM",
        (
            _cond("clifford: ae <= eua and ea <= ave solvable", _scan_clifford_condition(s)[:2]),
            _cond("h-commutative: ab <= bxa solvable for all a, b", _scan_h_commutative(s)[:2]),
        ),
    )


def _build_cl_cresef(s) -> BundleResult:
    c0 = _clifford_total(s)
    cr, cr_ce, _ = _scan_completely_regular(s)
    if not cr:
        c1 = (False, cr_ce)
    else:
        above = above_masks(s)
        c1 = (True, None)
        idem = list(bits(idempotent_mask(s)))
        for e in idem:
            for f in idem:
                target = sandwich_mask(s, f, e)
                bad = next(
                    (m for m in bits(sandwich_mask(s, e, f)) if not above[m] & target),
                    None,
                )
                if bad is not None:
                    c1 = (False, (e, f, bad))
                    break
            if not c1[0]:
                break
    return make_bundle(
        "CL-CRESEF",
        (
            _cond("regular with the clifford condition", c0),
            _cond(
                "completely regular, and eSf inside (f S e] for all ordered idempotents",
                c1,
            ),
        ),
    )


def _build_cl_crinv(s) -> BundleResult:
    c0 = _clifford_total(s)
    cr, cr_ce, _ = _scan_completely_regular(s)
    if not cr:
        c1 = (False, cr_ce)
    else:
        c1 = _inverse_condition(s)[:2]
    return make_bundle(
        "CL-CRINV",
        (
            _cond("regular with the clifford condition", c0),
            _cond("completely regular and inverse", c1),
        ),
    )


def _build_lcl_eq5(s) -> BundleResult:
    above = above_masks(s)
    table = s.table
    c0 = _left_clifford_condition(s)[:2]

    c1 = (True, None)
    for e in bits(idempotent_mask(s)):
        eS = down_mask(s, right_multiples(s, e))
        Se = down_mask(s, left_multiples(s, e))
        if eS & ~Se:
            c1 = (False, (e, next(bits(eS & ~Se))))
            break

    c2 = (True, None)
    for a in range(s.size):
        for e in bits(idempotent_mask(s)):
            ea = table[e][a]
            if not above[ea] & down_mask(s, left_multiples(s, e)):
                c2 = (False, (a, e))
                break
        if not c2[0]:
            break

    c3 = (True, None)
    for a in range(s.size):
        row_a = table[a]
        Sa = left_multiples(s, a)
        for b in range(s.size):
            if not above[row_a[b]] & Sa:
                c3 = (False, (a, b))
                break
        if not c3[0]:
            break

    rrel = green_relation(s, "R")
    lrel = green_relation(s, "L")
    if rrel.refines(lrel):
        c4 = (True, None)
    else:
        pair = next(
            (a, b)
            for a in range(s.size)
            for b in range(s.size)
            if rrel.same(a, b) and not lrel.same(a, b)
        )
        c4 = (False, pair)

    return make_bundle(
        "LCL-EQ5",
        (
            _cond("left clifford: (aS] inside (Sa] for all a", c0),
            _cond("(eS] inside (Se] for all ordered idempotents e", c1),
            _cond("ea <= xe solvable for all a and ordered idempotents e", c2),
            _cond("ab <= xa solvable for all a, b", c3),
            _cond("R inside L", c4),
        ),
    )


def _build_lcl_eq2(s) -> BundleResult:
    c0 = _left_clifford_total(s)
    above = above_masks(s)
    table = s.table
    c1 = (True, None)
    for a in range(s.size):
        if not above[a] & sandwich_mask(s, a, table[a][a]):
            c1 = (False, (a,))
            break
    if c1[0]:
        idem = list(bits(idempotent_mask(s)))
        for e in idem:
            row_e = table[e]
            for f in idem:
                ef = row_e[f]
                fe = table[f][e]
                if not above[ef] & sandwich_mask(s, ef, fe):
                    c1 = (False, (e, f))
                    break
            if not c1[0]:
                break
    return make_bundle(
        "LCL-EQ2",
        (
            _cond("regular with the left clifford condition", c0),
            _cond(
                "a in (a S a^2] for all a, and ef in (ef S fe] for ordered idempotents",
                c1,
            ),
        ),
    )


BUNDLES: dict[str, _Bundle] = {
    "CR-EQ5": _Bundle(None, _build_cr_eq5),
    "GL-CHAR": _Bundle(None, _build_gl_char),
    "GL-HREL": _Bundle("regular", _build_gl_hrel),
    "INV-COMM": _Bundle("regular", _build_inv_comm),
    "CR-HCOMM": _Bundle("h_commutative", _build_cr_hcomm),
    "CR-INV": _Bundle(None, _build_cr_inv),
    "CR-HCLASS": _Bundle(None, _build_cr_hclass),
    "CL-EQ": _Bundle("regular", _build_cl_eq),
    "CL-HCOMM": _Bundle("regular", _build_cl_hcomm),
    "CL-CRESEF": _Bundle(None, _build_cl_cresef),
    "CL-CRINV": _Bundle(None, _build_cl_crinv),
    "LCL-EQ5": _Bundle("regular", _build_lcl_eq5),
    "LCL-EQ2": _Bundle(None, _build_lcl_eq2),
}

BUNDLE_ORDER = tuple(BUNDLES)


def equivalence_bundle(s: OrderedSemigroup, bundle_id: str) -> BundleResult:
    """Evaluate one characterization bundle; every condition independently."""
    spec = BUNDLES.get(bundle_id)
    if spec is None:
        raise UnknownBundle(bundle_id)
    if spec.premise == "regular" and not is_regular_structure(s):
        raise NotApplicable(bundle_id, "requires a regular structure")
    if spec.premise == "h_commutative" and not _scan_h_commutative(s)[0]:
        raise NotApplicable(bundle_id, "requires an h-commutative structure")
    return spec.build(s)


# ---------------------------------------------------------------------------
# whole-structure report


def _implies(premise, conclusion, what: str):
    if premise and conclusion is not True:
        raise InvariantViolation(f"implication failed: {what}")


def _check_implications(verdicts, regular_flag: bool) -> None:
    def holds(name):
        return verdicts[name].holds

    _implies(holds("group_like"), holds("t_simple"), "group_like -> t_simple")
    _implies(
        holds("group_like"),
        holds("completely_regular"),
        "group_like -> completely_regular",
    )
    _implies(holds("completely_regular"), holds("regular"), "completely_regular -> regular")
    _implies(holds("t_simple"), holds("regular"), "t_simple -> regular")
    if regular_flag:
        _implies(holds("clifford"), holds("completely_regular"), "clifford -> completely_regular")
        _implies(holds("clifford"), holds("left_clifford"), "clifford -> left_clifford")
        both = holds("left_group_like") and holds("right_group_like")
        if holds("group_like") != both:
            raise InvariantViolation(
                "group_like must equal left_group_like and right_group_like"
            )
    elif holds("group_like"):
        raise InvariantViolation("group_like on a non-regular structure")


def classify(s: OrderedSemigroup) -> ClassificationReport:
    """Evaluate every registry predicate and every bundle on one structure."""
    verdicts = {}
    for name in PREDICATE_ORDER:
        try:
            verdicts[name] = predicate(s, name)
        except NotApplicable as exc:
            verdicts[name] = PredicateResult(name, None, note=exc.reason)
    bundles = []
    for bundle_id in BUNDLE_ORDER:
        try:
            bundles.append(equivalence_bundle(s, bundle_id))
        except NotApplicable as exc:
            bundles.append(
                BundleResult(bundle_id, (), (), True, applicable=False, note=exc.reason)
            )
        except SizeLimit as exc:
            bundles.append(
                BundleResult(bundle_id, (), (), True, applicable=False, note=str(exc))
            )
    regular_flag = is_regular_structure(s)
    _check_implications(verdicts, regular_flag)
    return ClassificationReport(s, verdicts, regular_flag, tuple(bundles))
