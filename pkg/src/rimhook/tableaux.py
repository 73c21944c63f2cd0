"""Semistandard Young tableaux, rim hooks, and special rim-hook tableaux.

A rim hook is stored as the ordered walk of its cells from tail to head,
each step going up one row or right one column.  A special rim-hook
tableau tiles a Ferrers diagram with such hooks, every hook touching
column 1; its sign is the product of per-hook signs (-1)^(vertical steps).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .partitions import (
    Cell,
    Partition,
    cells,
    check_partition,
    shape_of_cells,
)


@dataclass(frozen=True)
class RimHook:
    """A connected strip of cells with no 2x2 block, walked tail to head.

    walk[0] is the tail (the lowest, leftmost end); walk[-1] is the head
    (smallest row, largest column).  Consecutive cells differ by one step
    up, (i,j) -> (i-1,j), or right, (i,j) -> (i,j+1).
    """

    walk: tuple[Cell, ...]

    def __post_init__(self):
        if not self.walk:
            raise ValueError("a rim hook has at least one cell")
        for (i, j) in self.walk:
            if i < 1 or j < 1:
                raise ValueError(f"cell off the diagram: {(i, j)}")
        for (i, j), (i2, j2) in zip(self.walk, self.walk[1:]):
            if (i2, j2) not in ((i - 1, j), (i, j + 1)):
                raise ValueError(f"bad hook step {(i, j)} -> {(i2, j2)}")

    @classmethod
    def from_cells(cls, cs) -> "RimHook":
        # a monotone staircase visits lower rows first and, within a row,
        # left cells first, so sorting recovers the walk order
        return cls(tuple(sorted(set(cs), key=lambda c: (-c[0], c[1]))))

    def __len__(self) -> int:
        return len(self.walk)

    def __contains__(self, cell) -> bool:
        return cell in self.cell_set

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        cs = frozenset(self.walk)
        if len(cs) != len(self.walk):
            raise ValueError("hook walk revisits a cell")
        return cs

    @property
    def tail(self) -> Cell:
        return self.walk[0]

    @property
    def head(self) -> Cell:
        return self.walk[-1]

    @cached_property
    def leg_length(self) -> int:
        """Number of vertical (upward) steps in the walk."""
        return sum(1 for a, b in zip(self.walk, self.walk[1:]) if b[0] == a[0] - 1)

    @property
    def sign(self) -> int:
        return -1 if self.leg_length % 2 else 1

    @property
    def is_special(self) -> bool:
        """True when the hook touches column 1 (i.e. its tail is there)."""
        return self.tail[1] == 1

    def column_one_run(self) -> tuple[Cell, ...]:
        """The column-1 cells, bottom to top; a prefix of the walk."""
        run = []
        for c in self.walk:
            if c[1] != 1:
                break
            run.append(c)
        return tuple(run)

    def predecessor(self, cell: Cell) -> Cell | None:
        k = self.walk.index(cell)
        return self.walk[k - 1] if k > 0 else None

    def successor(self, cell: Cell) -> Cell | None:
        k = self.walk.index(cell)
        return self.walk[k + 1] if k + 1 < len(self.walk) else None

    def internal_corners(self) -> frozenset[Cell]:
        """Cells (i,j) with both (i+1,j) and (i,j+1) in the hook."""
        s = self.cell_set
        return frozenset(
            (i, j) for (i, j) in s if (i + 1, j) in s and (i, j + 1) in s
        )

    def external_corners(self) -> frozenset[Cell]:
        """Cells (i,j) with both (i-1,j) and (i,j-1) in the hook."""
        s = self.cell_set
        return frozenset(
            (i, j) for (i, j) in s if (i - 1, j) in s and (i, j - 1) in s
        )

    def permissible_cells(self) -> frozenset[Cell]:
        return (
            frozenset((self.tail, self.head))
            | self.internal_corners()
            | self.external_corners()
        )

    def to_json(self) -> list[list[int]]:
        return [[i, j] for (i, j) in self.walk]

    @classmethod
    def from_json(cls, data) -> "RimHook":
        return cls(tuple((int(i), int(j)) for i, j in data))


def permissible_cells(hook: RimHook) -> frozenset[Cell]:
    """Head, tail, and both kinds of corner: the legal root positions."""
    return hook.permissible_cells()


@dataclass(frozen=True)
class SemistandardTableau:
    """Row-major filling: rows weakly increase, columns strictly increase."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_partition(len(r) for r in self.rows)
        for r in self.rows:
            if any(x < 1 for x in r):
                raise ValueError("entries must be positive")
            if any(r[k] > r[k + 1] for k in range(len(r) - 1)):
                raise ValueError(f"row not weakly increasing: {r}")
        for i in range(len(self.rows) - 1):
            hi, lo = self.rows[i], self.rows[i + 1]
            if any(hi[k] >= lo[k] for k in range(len(lo))):
                raise ValueError("column not strictly increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @cached_property
    def entries(self) -> dict[Cell, int]:
        return {
            (i, j): v
            for i, row in enumerate(self.rows, 1)
            for j, v in enumerate(row, 1)
        }

    def content(self) -> tuple[int, ...]:
        """Composition c with c[k-1] = number of entries equal to k."""
        flat = [v for row in self.rows for v in row]
        if not flat:
            return ()
        return tuple(flat.count(k) for k in range(1, max(flat) + 1))

    @property
    def is_standard(self) -> bool:
        n = sum(len(r) for r in self.rows)
        return self.content() == (1,) * n

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> "SemistandardTableau":
        return cls(tuple(tuple(int(v) for v in row) for row in data["rows"]))


def enumerate_ssyt(shape, content) -> list[SemistandardTableau]:
    """All fillings of `shape` with `content[k-1]` copies of k, row-major order.

    `content` may be any composition of |shape|; the classical matrix entries
    use partition content only.
    """
    shape = check_partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content parts must be nonnegative")
    if sum(shape) != sum(content):
        raise ValueError("shape and content have different weights")
    order = [(i, j) for i, row in enumerate(shape, 1) for j in range(1, row + 1)]
    remaining = list(content)
    grid: dict[Cell, int] = {}
    out: list[SemistandardTableau] = []

    def fill(pos: int):
        if pos == len(order):
            rows = tuple(
                tuple(grid[(i, j)] for j in range(1, shape[i - 1] + 1))
                for i in range(1, len(shape) + 1)
            )
            out.append(SemistandardTableau(rows))
            return
        i, j = order[pos]
        lo = 1
        if j > 1:
            lo = max(lo, grid[(i, j - 1)])          # weak along the row
        if i > 1:
            lo = max(lo, grid[(i - 1, j)] + 1)      # strict down the column
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[(i, j)] = v
            fill(pos + 1)
            del grid[(i, j)]
            remaining[v - 1] += 1

    fill(0)
    return out


def kostka_number(shape, content) -> int:
    return len(enumerate_ssyt(shape, content))


@dataclass(frozen=True)
class SpecialRimHookTableau:
    """A Ferrers diagram tiled by rim hooks that each touch column 1.

    Hooks are kept in canonical order: deepest tail first (tails occupy
    distinct column-1 rows), so structural equality is meaningful.
    """

    shape: Partition
    hooks: tuple[RimHook, ...]

    def __post_init__(self):
        check_partition(self.shape)
        covered: set[Cell] = set()
        total = 0
        for h in self.hooks:
            if not h.is_special:
                raise ValueError(f"hook does not touch column 1: {h.walk}")
            covered |= h.cell_set
            total += len(h)
        if covered != cells(self.shape) or total != sum(self.shape):
            raise ValueError("hooks do not tile the shape")
        tails = [h.tail[0] for h in self.hooks]
        if tails != sorted(tails, reverse=True):
            raise ValueError("hooks not in canonical (deepest tail first) order")

    @classmethod
    def from_hooks(cls, hooks) -> "SpecialRimHookTableau":
        hooks = tuple(sorted(hooks, key=lambda h: -h.tail[0]))
        shape = shape_of_cells(set().union(*(h.cell_set for h in hooks)))
        return cls(shape, hooks)

    @property
    def type(self) -> Partition:
        return tuple(sorted((len(h) for h in self.hooks), reverse=True))

    @property
    def sign(self) -> int:
        s = 1
        for h in self.hooks:
            s *= h.sign
        return s

    def hook_at(self, cell: Cell) -> RimHook:
        for h in self.hooks:
            if cell in h:
                return h
        raise KeyError(cell)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "hooks": [h.to_json() for h in self.hooks]}

    @classmethod
    def from_json(cls, data) -> "SpecialRimHookTableau":
        return cls(
            tuple(int(x) for x in data["shape"]),
            tuple(RimHook.from_json(h) for h in data["hooks"]),
        )


def sign(tableau: SpecialRimHookTableau) -> int:
    """Product over hooks of (-1)^(leg length)."""
    return tableau.sign


def _staircase_walks(start: Cell, region: frozenset[Cell]) -> Iterator[tuple[Cell, ...]]:
    """Every up/right walk from `start` inside `region` (all lengths)."""
    walk = [start]

    def extend() -> Iterator[tuple[Cell, ...]]:
        yield tuple(walk)
        i, j = walk[-1]
        for nxt in ((i, j + 1), (i - 1, j)):
            if nxt in region:
                walk.append(nxt)
                yield from extend()
                walk.pop()

    yield from extend()


@lru_cache(maxsize=None)
def _all_srht(shape: Partition) -> tuple[SpecialRimHookTableau, ...]:
    """Every special rim-hook tableau of the given shape.

    Peels hooks at the lowest uncovered column-1 cell: that cell must be
    the tail of the hook covering it, so each tableau is built exactly once,
    hooks in canonical order.
    """
    out: list[SpecialRimHookTableau] = []
    if shape == ():
        return (SpecialRimHookTableau((), ()),)

    def peel(region: frozenset[Cell], acc: list[RimHook]):
        if not region:
            out.append(SpecialRimHookTableau(shape, tuple(acc)))
            return
        col1 = [c for c in region if c[1] == 1]
        if not col1:
            return  # dead branch: leftover cells unreachable by special hooks
        start = max(col1)
        for walk in _staircase_walks(start, region):
            hook = RimHook(walk)
            acc.append(hook)
            peel(region - hook.cell_set, acc)
            acc.pop()

    peel(frozenset(cells(shape)), [])
    return tuple(out)


def enumerate_srht(shape, type) -> list[SpecialRimHookTableau]:
    """All special rim-hook tableaux of the given shape whose hook sizes
    sort to `type`."""
    shape = check_partition(shape)
    type = check_partition(type)
    if sum(shape) != sum(type):
        raise ValueError("shape and type have different weights")
    return [t for t in _all_srht(shape) if t.type == type]


def enumerate_srht_all_types(shape) -> list[SpecialRimHookTableau]:
    return list(_all_srht(check_partition(shape)))


# --- ASCII rendering -------------------------------------------------------
#
# Two characters per cell: nodes sit on even grid positions, hook edges on
# the odd positions between them.  Nodes draw as '*', the active hook's
# nodes as 'O', and the root as '#'.

def render_hooks(hooks, root: Cell | None = None, active: int | None = None) -> str:
    all_cells: set[Cell] = set()
    for h in hooks:
        all_cells |= h.cell_set
    if not all_cells:
        return ""
    height = max(i for i, _ in all_cells)
    width = max(j for _, j in all_cells)
    grid = [[" "] * (2 * width - 1) for _ in range(2 * height - 1)]
    for k, h in enumerate(hooks):
        node = "O" if k == active else "*"
        for (i, j) in h.walk:
            grid[2 * i - 2][2 * j - 2] = node
        for (i, j), (i2, j2) in zip(h.walk, h.walk[1:]):
            if i2 == i:
                grid[2 * i - 2][2 * j - 1] = "-"
            else:
                # up step: the edge sits between rows i2 and i
                grid[2 * i - 3][2 * j - 2] = "|"
    if root is not None:
        i, j = root
        grid[2 * i - 2][2 * j - 2] = "#"
    return "\n".join("".join(row).rstrip() for row in grid)


def render_tableau(tableau: SpecialRimHookTableau) -> str:
    return render_hooks(tableau.hooks)


def render_filling(t: SemistandardTableau) -> str:
    width = max((len(str(v)) for row in t.rows for v in row), default=1)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in t.rows)
