"""Integer partitions and their Ferrers diagrams.

Partitions are plain tuples of weakly decreasing positive ints.  Cells are
1-based (row, col) pairs with row 1 at the top, matching English notation.
The canonical ordering used everywhere in this package is reverse
lexicographic: (n) comes first, (1^n) comes last.
"""

from __future__ import annotations

from functools import lru_cache

Partition = tuple[int, ...]
Cell = tuple[int, int]


def check_partition(parts) -> Partition:
    """Normalize to a tuple and reject anything not weakly decreasing positive."""
    p = tuple(parts)
    if any(not isinstance(x, int) or isinstance(x, bool) for x in p):
        raise TypeError(f"parts must be ints: {p!r}")
    if any(x < 1 for x in p):
        raise ValueError(f"parts must be positive integers: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p!r}")
    return p


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographically: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out = []
    p = [n]
    while True:
        out.append(tuple(p))
        # locate the last part greater than 1
        i = len(p) - 1
        ones = 0
        while i >= 0 and p[i] == 1:
            ones += 1
            i -= 1
        if i < 0:
            break
        p[i] -= 1
        rem = ones + 1
        p = p[: i + 1]
        # redistribute the remainder greedily; parts stay weakly decreasing
        while rem > 0:
            t = min(p[-1], rem)
            p.append(t)
            rem -= t
    return tuple(out)


@lru_cache(maxsize=None)
def num_partitions(n: int) -> int:
    return len(enumerate_partitions(n))


def revlex_precedes(a, b) -> bool:
    """True when a comes strictly before b in reverse-lexicographic order."""
    a = check_partition(a)
    b = check_partition(b)
    if sum(a) != sum(b):
        raise ValueError("partitions of different weights are not compared")
    width = max(len(a), len(b))
    return a + (0,) * (width - len(a)) > b + (0,) * (width - len(b))


def conjugate(p) -> Partition:
    """Transpose the Ferrers diagram: (3,2,2,1,1) -> (5,3,1)."""
    p = check_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def cells(p) -> frozenset[Cell]:
    p = check_partition(p)
    return frozenset((i, j) for i, row in enumerate(p, 1) for j in range(1, row + 1))


def shape_of_cells(cs) -> Partition:
    """Recover the partition whose diagram is exactly the given cell set.

    Raises ValueError when the cells are not a left-justified staircase of
    contiguous rows starting at row 1.
    """
    cs = set(cs)
    if not cs:
        return ()
    rows: dict[int, set[int]] = {}
    for (i, j) in cs:
        rows.setdefault(i, set()).add(j)
    height = max(rows)
    if set(rows) != set(range(1, height + 1)):
        raise ValueError("cells do not fill contiguous rows from the top")
    parts = []
    for i in range(1, height + 1):
        width = max(rows[i])
        if rows[i] != set(range(1, width + 1)):
            raise ValueError(f"row {i} is not left-justified")
        parts.append(width)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("row lengths are not weakly decreasing")
    return tuple(parts)


def parse_partition(text: str) -> Partition:
    """Parse "[3,2,1]" or the multiplicity form "1^2 2^2 3"."""
    s = text.strip()
    if s in ("", "[]", "()"):
        return ()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unbalanced brackets: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return ()
        return check_partition(int(tok) for tok in body.split(","))
    parts: list[int] = []
    for tok in s.split():
        if "^" in tok:
            base, _, mult = tok.partition("^")
            if int(mult) < 1:
                raise ValueError(f"multiplicity must be positive: {tok!r}")
            parts.extend([int(base)] * int(mult))
        else:
            parts.append(int(tok))
    return check_partition(sorted(parts, reverse=True))


def format_partition(p) -> str:
    return "[" + ",".join(str(x) for x in check_partition(p)) + "]"


def format_multiplicity(p) -> str:
    """Ascending multiplicity form: (3,2,2,1,1) -> "1^2 2^2 3"."""
    p = check_partition(p)
    toks = []
    for part in sorted(set(p)):
        m = p.count(part)
        toks.append(f"{part}^{m}" if m > 1 else str(part))
    return " ".join(toks)
