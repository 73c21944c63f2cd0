"""Sign-reversing involution on rooted special rim-hook tableaux.

A rooted tableau marks one cell (the root) and one hook (the active one).
Non-overlapping states tile their diagram exactly; overlapping states have
exactly two hooks meeting precisely at the root.  apply_rule rewrites a
state into its successor; iterating from a rooted tileable state always
returns to one, with the sign of the tableau flipped.  The pair-level
involution wraps this core with max-entry bookkeeping on a standard
filling.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .partitions import Cell, Partition, cells, num_partitions, shape_of_cells
from .tableaux import (
    RimHook,
    SemistandardTableau,
    SpecialRimHookTableau,
    enumerate_srht,
    enumerate_ssyt,
    render_hooks,
)


class HookClass(Enum):
    """How the root sits in the active hook; decides the rewrite rule."""

    INNER_CORNER = "CI"      # corner with both lower and right neighbors in hook
    OUTER_CORNER = "CE"      # corner with both upper and left neighbors in hook
    HEAD_HORIZONTAL = "HH"   # root is the head, reached by a rightward step
    HEAD_VERTICAL = "HV"     # root is the head, reached by an upward step
    TAIL_VERTICAL = "TV"     # root is the tail, walk leaves upward
    TAIL_HORIZONTAL = "TH"   # root is the tail, walk leaves rightward
    SINGLETON = "SI"         # the active hook is a single cell

    @property
    def rule(self) -> str:
        """Label of the rewrite rule this class triggers."""
        return {
            "CI": "CO", "CE": "CO",
            "HH": "HE", "HV": "HE",
            "TV": "TV", "TH": "TH", "SI": "SI",
        }[self.value]


# classes whose states keep the starting sign along a trace; the
# complementary classes carry the opposite sign (singletons are exempt)
_SAME_SIGN = frozenset(
    {HookClass.OUTER_CORNER, HookClass.HEAD_HORIZONTAL, HookClass.TAIL_VERTICAL}
)


@dataclass(frozen=True)
class RootedTableau:
    """State of the rewrite walk: hooks at stable indices, a root, an active hook.

    The shape is the union of all hook cells (a partition either way); in an
    overlapping state the root is the one doubly covered cell.
    """

    shape: Partition
    hooks: tuple[RimHook, ...]
    root: Cell
    active: int

    def __post_init__(self):
        if not 0 <= self.active < len(self.hooks):
            raise ValueError("active index out of range")
        coverage: dict[Cell, int] = {}
        for h in self.hooks:
            if not h.is_special:
                raise ValueError(f"hook does not touch column 1: {h.walk}")
            for c in h.cell_set:
                coverage[c] = coverage.get(c, 0) + 1
        if shape_of_cells(coverage) != self.shape:
            raise ValueError("hooks do not cover the stated shape")
        doubled = [c for c, k in coverage.items() if k > 1]
        if doubled and (doubled != [self.root] or coverage[self.root] != 2):
            raise ValueError("only the root may be covered twice")
        owners = self.root_hooks
        if self.active not in owners:
            raise ValueError("active hook does not contain the root")
        if len(owners) == 2:
            a, b = (self.hooks[k] for k in owners)
            if a.cell_set & b.cell_set != {self.root}:
                raise ValueError("overlapping hooks must meet exactly at the root")
            for h in (a, b):
                if self.root not in h.permissible_cells():
                    raise ValueError("root not permissible in an overlapping hook")
        else:
            if self.root not in self.hooks[self.active].permissible_cells():
                raise ValueError("root not permissible in the active hook")
            if not _at_diagram_corner(self.shape, self.root):
                raise ValueError("root must close both its row and its column")

    @cached_property
    def root_hooks(self) -> tuple[int, ...]:
        return tuple(k for k, h in enumerate(self.hooks) if self.root in h)

    @property
    def overlapping(self) -> bool:
        return len(self.root_hooks) == 2

    @property
    def type(self) -> Partition:
        return tuple(sorted((len(h) for h in self.hooks), reverse=True))

    @property
    def sign(self) -> int:
        """Product of hook signs; the root's edges count in both owners."""
        s = 1
        for h in self.hooks:
            s *= h.sign
        return s

    def region(self) -> frozenset[Cell]:
        """Diagram minus the root: the invariant cell set of a trace."""
        return frozenset(cells(self.shape)) - {self.root}

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "hooks": [h.to_json() for h in self.hooks],
            "root": list(self.root),
            "active": self.active,
        }

    @classmethod
    def from_json(cls, data) -> "RootedTableau":
        return cls(
            tuple(int(x) for x in data["shape"]),
            tuple(RimHook.from_json(h) for h in data["hooks"]),
            (int(data["root"][0]), int(data["root"][1])),
            int(data["active"]),
        )

    def render(self) -> str:
        return render_hooks(self.hooks, self.root, self.active)


Trace = tuple[tuple[RootedTableau, HookClass], ...]


def classify(state: RootedTableau) -> HookClass:
    """The unique class of (active hook, root); errors on corrupt states."""
    hook = state.hooks[state.active]
    r = state.root
    if len(hook) == 1:
        return HookClass.SINGLETON
    if r == hook.head:
        prev = hook.walk[-2]
        if prev == (r[0], r[1] - 1):
            return HookClass.HEAD_HORIZONTAL
        return HookClass.HEAD_VERTICAL
    if r == hook.tail:
        nxt = hook.walk[1]
        if nxt == (r[0] - 1, r[1]):
            return HookClass.TAIL_VERTICAL
        return HookClass.TAIL_HORIZONTAL
    i, j = r
    s = hook.cell_set
    if (i + 1, j) in s and (i, j + 1) in s:
        return HookClass.INNER_CORNER
    if (i - 1, j) in s and (i, j - 1) in s:
        return HookClass.OUTER_CORNER
    raise ValueError(f"root {r} is not a permissible cell of the active hook")


def _settle(old: RootedTableau, hooks: list[RimHook], new_root: Cell) -> RootedTableau:
    """Rebuild a valid state around the moved root and hand over activity.

    The hook that now overlaps the modified one at the root becomes active;
    if the root landed on singly covered ground the walk has terminated and
    the modified hook stays active.
    """
    owners = [k for k, h in enumerate(hooks) if new_root in h]
    if len(owners) == 2 and old.active in owners:
        new_active = next(k for k in owners if k != old.active)
    elif owners == [old.active]:
        new_active = old.active
    else:
        raise ValueError(f"root landed with unexpected coverage {owners}")
    covered = set()
    for h in hooks:
        covered |= h.cell_set
    return RootedTableau(shape_of_cells(covered), tuple(hooks), new_root, new_active)


def _walk_continues(state: RootedTableau) -> bool:
    """Whether the partner hook of an overlapping state supports the next step.

    Only two classes put a precondition on the second root hook: a singleton
    must slide along the partner's column-1 run, and a tail exchange needs
    the partner's tail at the root with a different size.
    """
    q = state.hooks[state.active]
    o = next(k for k in state.root_hooks if k != state.active)
    p = state.hooks[o]
    if len(q) == 1:
        run = p.column_one_run()
        return len(run) >= 2 and state.root in (run[0], run[-1])
    if state.root == q.tail and q.walk[1][0] == state.root[0]:
        return p.tail == state.root and len(p) >= 2 and len(p) != len(q)
    return True


def apply_rule(state: RootedTableau) -> RootedTableau:
    """One rewrite step; the applied rule is determined by classify."""
    cls = classify(state)
    hooks = list(state.hooks)
    a = state.active
    hook = hooks[a]
    r = state.root

    if cls in (HookClass.INNER_CORNER, HookClass.OUTER_CORNER):
        i, j = r
        if cls is HookClass.INNER_CORNER:
            mirror = (i + 1, j + 1)
        else:
            mirror = (i - 1, j - 1)
        k = hook.walk.index(r)
        hooks[a] = RimHook(hook.walk[:k] + (mirror,) + hook.walk[k + 1:])
        return _settle(state, hooks, mirror)

    if cls in (HookClass.HEAD_HORIZONTAL, HookClass.HEAD_VERTICAL):
        below_tail = (hook.tail[0] + 1, 1)
        hooks[a] = RimHook((below_tail,) + hook.walk[:-1])
        return _settle(state, hooks, below_tail)

    if cls is HookClass.TAIL_VERTICAL:
        base = hook.walk[1:]
        hi, hj = hook.head
        results = []
        for new_cell in ((hi - 1, hj), (hi, hj + 1)):
            if new_cell[0] < 1:
                continue
            try:
                trial = list(hooks)
                trial[a] = RimHook(base + (new_cell,))
                results.append(_settle(state, trial, new_cell))
            except ValueError:
                continue
        if len(results) > 1:
            # A statically valid overlapping attachment can still strand the
            # walk one step later; the attachment that keeps going wins.
            results = [
                st for st in results if not st.overlapping or _walk_continues(st)
            ]
        if len(results) != 1:
            raise ValueError(
                f"tail move admits {len(results)} valid attachments, expected exactly 1"
            )
        return results[0]

    if cls is HookClass.SINGLETON:
        partners = [k for k in state.root_hooks if k != a]
        if len(partners) != 1:
            raise ValueError("singleton slide requires an overlapping partner")
        o = partners[0]
        run = hooks[o].column_one_run()
        if len(run) < 2:
            raise ValueError("partner's column-1 portion has no opposite end")
        if r == run[0]:
            dest = run[-1]
        elif r == run[-1]:
            dest = run[0]
        else:
            raise ValueError("singleton is not at an end of the partner's column-1 run")
        hooks[a] = RimHook((dest,))
        return _settle(state, hooks, dest)

    # TAIL_HORIZONTAL: two hooks sharing their tail at the root, one walking
    # right (the active one) and one walking up; the longer walk is cut after
    # as many cells as the shorter has, and the cut part moves over.
    partners = [k for k in state.root_hooks if k != a]
    if len(partners) != 1:
        raise ValueError("tail exchange requires an overlapping partner")
    o = partners[0]
    if hooks[o].tail != r:
        raise ValueError("partner hook's tail is not at the root")
    if len(hooks[o]) == 1 or len(hooks[a]) == len(hooks[o]):
        raise ValueError("tail exchange would not change the state")
    big_idx, small_idx = (a, o) if len(hooks[a]) > len(hooks[o]) else (o, a)
    big, small = hooks[big_idx], hooks[small_idx]
    s = len(small)
    hooks[big_idx] = RimHook(big.walk[:s])
    hooks[small_idx] = RimHook(small.walk + big.walk[s:])
    return _settle(state, hooks, r)


def _at_diagram_corner(shape: Partition, cell: Cell) -> bool:
    i, j = cell
    if not (1 <= i <= len(shape) and shape[i - 1] == j):
        return False
    return i == len(shape) or shape[i] < j


def inner_involution(
    state: RootedTableau, budget: int | None = None
) -> tuple[RootedTableau, Trace]:
    """Iterate apply_rule from a tileable rooted state back to one.

    Returns the terminal state and the full trace of (state, class) pairs.
    The terminal state has the same cell set away from the root, the same
    type, and the opposite sign; a step budget turns any non-terminating
    bug into a hard error instead of a hang.
    """
    if state.overlapping:
        raise ValueError("walk must start from a non-overlapping state")
    if len(state.hooks[state.active]) < 2:
        raise ValueError("root hook must have at least two cells")
    n = sum(state.shape)
    if budget is None:
        budget = 4 * n * num_partitions(n)
    trace: list[tuple[RootedTableau, HookClass]] = [(state, classify(state))]
    cur = state
    steps = 0
    while True:
        cur = apply_rule(cur)
        steps += 1
        trace.append((cur, classify(cur)))
        if not cur.overlapping:
            break
        if steps > budget:
            raise RuntimeError(f"rewrite walk exceeded the {budget}-step budget")
    if cur.region() != state.region():
        raise RuntimeError("cell set away from the root changed along the walk")
    if any(st.type != state.type for st, _ in trace):
        raise RuntimeError("hook-size multiset changed along the walk")
    if cur.sign != -state.sign:
        raise RuntimeError("terminal state failed to flip the sign")
    return cur, tuple(trace)


iota = inner_involution


def check_sign_lemma(trace: Trace, eps0: int) -> bool:
    """Every non-terminal, non-singleton state carries eps0 or -eps0
    according to its class."""
    for st, cls in trace[:-1]:
        if cls is HookClass.SINGLETON:
            continue
        expected = eps0 if cls in _SAME_SIGN else -eps0
        if st.sign != expected:
            return False
    return True


def outer_involution(
    tableau: SpecialRimHookTableau, filling: SemistandardTableau
) -> tuple[SpecialRimHookTableau, SemistandardTableau]:
    """Partner of a (hook tableau, standard filling) pair of equal shape.

    Bottom singleton rows holding the running maximum are peeled off, the
    core walk is run rooted at the cell of the largest remaining entry, that
    entry follows the root, and the peeled rows are put back.  Applying the
    map twice returns the original pair; the hook tableau's sign flips.
    """
    if tableau.shape != filling.shape:
        raise ValueError("tableau and filling must have the same shape")
    n = sum(tableau.shape)
    if not filling.is_standard:
        raise ValueError("filling must be standard")
    if tableau.type == (1,) * n:
        raise ValueError("the all-singleton pair has no partner")

    entries = dict(filling.entries)
    hooks = list(tableau.hooks)          # canonical: deepest tail first
    shape = list(tableau.shape)
    stripped: list[int] = []
    m = n
    while shape[-1] == 1 and len(hooks[0]) == 1 and entries[(len(shape), 1)] == m:
        stripped.append(m)
        del entries[(len(shape), 1)]
        hooks.pop(0)
        shape.pop()
        m -= 1

    root = next(c for c, v in entries.items() if v == m)
    active = next(k for k, h in enumerate(hooks) if root in h)
    start = RootedTableau(tuple(shape), tuple(hooks), root, active)
    final, _ = inner_involution(start)

    entries[final.root] = entries.pop(root)
    new_hooks = list(final.hooks)
    depth = len(final.shape)
    for v in reversed(stripped):
        depth += 1
        c = (depth, 1)
        new_hooks.append(RimHook((c,)))
        entries[c] = v
    out_tableau = SpecialRimHookTableau.from_hooks(new_hooks)
    rows = tuple(
        tuple(entries[(i, j)] for j in range(1, out_tableau.shape[i - 1] + 1))
        for i in range(1, len(out_tableau.shape) + 1)
    )
    return out_tableau, SemistandardTableau(rows)


def enumerate_standard_pairs(mu) -> list[tuple[SpecialRimHookTableau, SemistandardTableau]]:
    """All (hook tableau of the given type, standard filling) pairs of a
    common shape, shapes in canonical order."""
    from .partitions import check_partition, enumerate_partitions

    mu = check_partition(mu)
    n = sum(mu)
    pairs = []
    for lam in enumerate_partitions(n):
        tableaux = enumerate_srht(lam, mu)
        if not tableaux:
            continue
        fillings = enumerate_ssyt(lam, (1,) * n) if n else [SemistandardTableau(())]
        for s in tableaux:
            for t in fillings:
                pairs.append((s, t))
    return pairs


def trace_to_json(trace: Trace) -> list[dict]:
    return [
        {
            "class": cls.rule,
            "tag": cls.value,
            "tableau": {
                "shape": list(st.shape),
                "hooks": [h.to_json() for h in st.hooks],
            },
            "root": list(st.root),
            "active": st.active,
        }
        for st, cls in trace
    ]
