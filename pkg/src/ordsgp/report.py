"""Result records shared by the classification and decomposition layers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PredicateResult:
    """Verdict for one structure-level predicate.

    ``holds`` is None when the predicate does not apply (a regularity
    premise failed); ``witnesses`` maps argument tuples to least witness
    tuples for a true verdict, ``counterexample`` is the least failing
    tuple for a false one.
    """

    name: str
    holds: bool | None
    witnesses: dict | None = None
    counterexample: tuple | None = None
    note: str = ""


@dataclass(frozen=True)
class ConditionResult:
    label: str
    holds: bool
    detail: tuple | None = None


@dataclass(frozen=True)
class ConditionGroup:
    """How a slice of a bundle's conditions is judged.

    mode "equivalence": all verdicts in the group must be equal.
    mode "implication": if the first condition holds, the rest must.
    mode "claim": every condition must hold.
    """

    mode: str
    indices: tuple[int, ...]


@dataclass(frozen=True)
class BundleResult:
    bundle_id: str
    conditions: tuple[ConditionResult, ...]
    groups: tuple[ConditionGroup, ...]
    agree: bool
    applicable: bool = True
    note: str = ""


def _group_ok(group: ConditionGroup, conditions) -> bool:
    verdicts = [conditions[i].holds for i in group.indices]
    if group.mode == "equivalence":
        return len(set(verdicts)) == 1
    if group.mode == "implication":
        return (not verdicts[0]) or all(verdicts[1:])
    if group.mode == "claim":
        return all(verdicts)
    raise ValueError(f"unknown group mode: {group.mode!r}")


def make_bundle(bundle_id: str, conditions, groups=None) -> BundleResult:
    conditions = tuple(conditions)
    if groups is None:
        groups = (ConditionGroup("equivalence", tuple(range(len(conditions)))),)
    else:
        groups = tuple(groups)
    agree = all(_group_ok(g, conditions) for g in groups)
    return BundleResult(bundle_id, conditions, groups, agree)


@dataclass(frozen=True, eq=False)
class ClassificationReport:
    """Every registry predicate plus every equivalence bundle for one structure."""

    structure: object
    verdicts: dict = field(repr=False)
    regularity_flag: bool = False
    bundle_results: tuple[BundleResult, ...] = ()
