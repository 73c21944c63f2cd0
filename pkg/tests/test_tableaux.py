"""Hooks, fillings, and the signed-tiling enumeration.

The brute-force oracles here deliberately avoid the package's own walk
construction: a hook is checked through its row intervals, and tilings are
generated as raw set partitions.
"""

import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import partitions_of
from rimhook import (
    RimHook,
    SemistandardTableau,
    SpecialRimHookTableau,
    cells,
    enumerate_partitions,
    enumerate_srht,
    enumerate_ssyt,
    kostka_number,
    permissible_cells,
    render_hooks,
    render_tableau,
    sign,
)
from rimhook.tableaux import enumerate_srht_all_types


# ---------------------------------------------------------------- oracles

def is_hook_block(block) -> bool:
    """Row-interval test: contiguous rows, each row an interval, and
    consecutive rows overlapping in exactly one column (the turning
    column).  Equivalent to `connected skew diagram without a 2x2`."""
    rows: dict[int, set[int]] = {}
    for i, j in block:
        rows.setdefault(i, set()).add(j)
    lo, hi = min(rows), max(rows)
    if set(rows) != set(range(lo, hi + 1)):
        return False
    spans = {}
    for i, js in rows.items():
        a, b = min(js), max(js)
        if js != set(range(a, b + 1)):
            return False
        spans[i] = (a, b)
    return all(spans[i][0] == spans[i + 1][1] for i in range(lo, hi))


def is_special_block(block) -> bool:
    return is_hook_block(block) and any(j == 1 for _, j in block)


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [part[k] + [first]] + part[k + 1 :]
        yield [[first]] + part


def brute_tilings(shape):
    """Every partition of the diagram into special hooks, as a set of
    frozensets of frozensets."""
    found = set()
    for part in set_partitions(sorted(cells(shape))):
        if all(is_special_block(b) for b in part):
            found.add(frozenset(frozenset(b) for b in part))
    return found


def brute_fillings(shape, content):
    """Distinct row-major arrangements of the content multiset that satisfy
    the row/column conditions."""
    entries = [k for k, m in enumerate(content, 1) for _ in range(m)]
    widths = list(shape)
    seen = set()
    for perm in set(itertools.permutations(entries)):
        rows, pos = [], 0
        for w in widths:
            rows.append(perm[pos : pos + w])
            pos += w
        if any(r[i] > r[i + 1] for r in rows for i in range(len(r) - 1)):
            continue
        if any(
            rows[i][j] >= rows[i + 1][j]
            for i in range(len(rows) - 1)
            for j in range(len(rows[i + 1]))
        ):
            continue
        seen.add(tuple(rows))
    return seen


# ------------------------------------------------------------------ hooks

def test_walk_must_step_up_or_right():
    with pytest.raises(ValueError):
        RimHook(((1, 1), (1, 3)))  # gap
    with pytest.raises(ValueError):
        RimHook(((1, 2), (1, 1)))  # leftward
    with pytest.raises(ValueError):
        RimHook(((2, 2), (2, 1)))
    with pytest.raises(ValueError):
        RimHook(((0, 1), (0, 2)))  # cells are 1-based


def test_from_cells_recovers_walk_order():
    h = RimHook.from_cells({(1, 3), (2, 1), (2, 2), (1, 2)})
    assert h.walk == ((2, 1), (2, 2), (1, 2), (1, 3))
    with pytest.raises(ValueError):
        RimHook.from_cells({(1, 1), (2, 2)})


def test_head_tail_leg_sign():
    h = RimHook(((4, 1), (3, 1), (2, 1), (2, 2)))
    assert h.tail == (4, 1)
    assert h.head == (2, 2)
    assert h.leg_length == 2
    assert h.sign == 1
    assert h.is_special
    flat = RimHook(((1, 1), (1, 2), (1, 3)))
    assert flat.leg_length == 0 and flat.sign == 1
    tall = RimHook(((3, 1), (2, 1), (1, 1)))
    assert tall.leg_length == 2 and tall.sign == 1
    assert RimHook(((2, 1), (1, 1))).sign == -1
    assert not RimHook(((1, 2), (1, 3))).is_special


def test_permissible_cells_of_the_four_cell_hook():
    # Walk (2,1) -> (2,2) -> (1,2) -> (1,3): one turn of each kind.
    h = RimHook(((2, 1), (2, 2), (1, 2), (1, 3)))
    assert h.internal_corners() == frozenset({(1, 2)})
    assert h.external_corners() == frozenset({(2, 2)})
    assert permissible_cells(h) == frozenset({(2, 1), (2, 2), (1, 2), (1, 3)})


def test_permissible_cells_degenerate_hooks():
    assert permissible_cells(RimHook(((1, 1),))) == frozenset({(1, 1)})
    # Straight hooks have no corners, only the two ends.
    assert permissible_cells(RimHook(((1, 1), (1, 2), (1, 3)))) == frozenset(
        {(1, 1), (1, 3)}
    )
    assert permissible_cells(RimHook(((3, 1), (2, 1), (1, 1)))) == frozenset(
        {(3, 1), (1, 1)}
    )


@given(st.integers(min_value=1, max_value=6).flatmap(partitions_of))
def test_every_enumerated_hook_passes_the_interval_oracle(shape):
    for t in enumerate_srht_all_types(shape):
        for h in t.hooks:
            assert is_special_block(h.cell_set)


def test_hook_json_roundtrip():
    h = RimHook(((2, 1), (2, 2), (1, 2)))
    assert RimHook.from_json(h.to_json()) == h


# --------------------------------------------------------------- fillings

def test_filling_validation():
    SemistandardTableau(((1, 1, 2), (2, 3)))
    with pytest.raises(ValueError):
        SemistandardTableau(((1, 2), (1, 3)))  # column repeats
    with pytest.raises(ValueError):
        SemistandardTableau(((2, 1),))  # row decreases
    with pytest.raises(ValueError):
        SemistandardTableau(((1,), (2, 3)))  # not a partition shape


def test_filling_accessors():
    t = SemistandardTableau(((1, 1), (2,)))
    assert t.shape == (2, 1)
    assert t.content() == (2, 1)
    assert not t.is_standard
    assert SemistandardTableau(((1, 3), (2,))).is_standard
    assert SemistandardTableau.from_json(t.to_json()) == t


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fillings_match_permutation_oracle(n):
    for shape in enumerate_partitions(n):
        for content in enumerate_partitions(n):
            expected = brute_fillings(shape, content)
            got = enumerate_ssyt(shape, content)
            assert {t.rows for t in got} == expected
            assert len(got) == len(expected)  # no duplicates


def test_composition_content_is_allowed():
    # Content need not be sorted; (1,2) means one 1 and two 2s.
    got = enumerate_ssyt((2, 1), (1, 2))
    assert {t.rows for t in got} == {((1, 2), (2,))}


def test_kostka_number_values():
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert kostka_number((3, 1), (2, 1, 1)) == 2
    assert kostka_number((2, 2), (1, 1, 1, 1)) == 2
    assert kostka_number((1, 1), (2,)) == 0


# ---------------------------------------------------------------- tilings

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_tilings_match_set_partition_oracle(n):
    for shape in enumerate_partitions(n):
        got = enumerate_srht_all_types(shape)
        as_sets = {frozenset(h.cell_set for h in t.hooks) for t in got}
        assert as_sets == brute_tilings(shape)
        assert len(as_sets) == len(got)


def test_tilings_of_the_square():
    got = enumerate_srht_all_types((2, 2))
    by_type = {t.type: t.sign for t in got}
    assert by_type == {(2, 2): 1, (3, 1): -1}


def test_tilings_of_column_strip():
    # Stacked vertical hooks: one tiling per composition of n.
    got = enumerate_srht_all_types((1, 1, 1, 1))
    assert len(got) == 8
    assert sum(t.sign for t in got if t.type == (2, 1, 1)) == -3


def test_signed_tiling_worked_example():
    tableaux = enumerate_srht((3, 2, 2, 1, 1), (4, 4, 1))
    assert len(tableaux) == 2
    assert all(t.sign == -1 for t in tableaux)
    walks = {tuple(h.walk for h in t.hooks) for t in tableaux}
    assert (
        ((5, 1), (4, 1), (3, 1), (3, 2)),
        ((2, 1), (2, 2), (1, 2), (1, 3)),
        ((1, 1),),
    ) in walks


def test_canonical_hook_order_is_by_tail_depth():
    for shape in enumerate_partitions(6):
        for t in enumerate_srht_all_types(shape):
            tails = [h.tail[0] for h in t.hooks]
            assert tails == sorted(tails, reverse=True)


def test_tableau_validation():
    with pytest.raises(ValueError):  # overlapping hooks
        SpecialRimHookTableau(
            (2,), (RimHook(((1, 1), (1, 2))), RimHook(((1, 1),)))
        )
    with pytest.raises(ValueError):  # hole in the shape
        SpecialRimHookTableau((2,), (RimHook(((1, 1),)),))
    with pytest.raises(ValueError):  # non-special hook
        SpecialRimHookTableau(
            (2, 2),
            (RimHook(((2, 1), (1, 1))), RimHook(((2, 2), (1, 2)))),
        )


def test_tableau_accessors_and_json():
    t = enumerate_srht((2, 2), (2, 2))[0]
    assert t.type == (2, 2)
    assert t.hook_at((1, 2)) == t.hooks[1]
    assert sign(t) == t.sign == 1
    assert SpecialRimHookTableau.from_json(t.to_json()) == t


def test_from_hooks_reorders():
    a = RimHook(((1, 1), (1, 2)))
    b = RimHook(((2, 1), (2, 2)))
    t = SpecialRimHookTableau.from_hooks([a, b])
    assert t.hooks == (b, a)
    assert t.shape == (2, 2)


# ----------------------------------------------------------------- render

def test_render_smoke():
    t = enumerate_srht((2, 2), (3, 1))[0]
    art = render_tableau(t)
    assert "*" in art and "|" in art
    rooted = render_hooks(t.hooks, root=(2, 1), active=0)
    assert "#" in rooted
