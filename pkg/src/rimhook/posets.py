"""Finite posets, their incomparability graphs, and chromatic symmetric
functions.

The expansion pipeline: count order-respecting fillings per shape, convert
through the signed hook-count matrix to the elementary basis, and — for
orders of height at most two — certify nonnegativity by an explicit
matching whose fixed points are counted by the coefficients.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .involution import RootedTableau, inner_involution
from .partitions import (
    Partition,
    check_partition,
    conjugate,
    enumerate_partitions,
)
from .symfunc import SymFuncExpansion, inverse_kostka_matrix
from .tableaux import SpecialRimHookTableau, enumerate_srht_all_types

Rows = tuple[tuple[str, ...], ...]
PairST = tuple[SpecialRimHookTableau, Rows]


@dataclass(frozen=True)
class Poset:
    """Elements with a strict order relation, stored transitively closed."""

    elements: tuple[str, ...]
    less: frozenset[tuple[str, str]]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate elements")
        universe = set(self.elements)
        for x, y in self.less:
            if x not in universe or y not in universe:
                raise ValueError(f"relation {x} < {y} uses unknown elements")
            if x == y:
                raise ValueError(f"reflexive strict relation {x} < {x}")
            if (y, x) in self.less:
                raise ValueError(f"cycle between {x} and {y}")
        for x, y in self.less:
            for z in self.elements:
                if (y, z) in self.less and (x, z) not in self.less:
                    raise ValueError("relation is not transitively closed")

    @classmethod
    def from_relations(cls, elements, relations) -> "Poset":
        """Build from any generating set of strict relations (covers are
        fine); the transitive closure is computed here."""
        elements = tuple(elements)
        idx = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        mat = [[False] * n for _ in range(n)]
        for x, y in relations:
            if x not in idx or y not in idx:
                raise ValueError(f"relation {x} < {y} uses unknown elements")
            mat[idx[x]][idx[y]] = True
        for k in range(n):
            for i in range(n):
                if mat[i][k]:
                    row_k = mat[k]
                    row_i = mat[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        less = frozenset(
            (elements[i], elements[j])
            for i in range(n)
            for j in range(n)
            if mat[i][j]
        )
        return cls(elements, less)

    def __len__(self) -> int:
        return len(self.elements)

    def lt(self, x, y) -> bool:
        return (x, y) in self.less

    def leq(self, x, y) -> bool:
        return x == y or (x, y) in self.less

    def incomparable(self, x, y) -> bool:
        return x != y and (x, y) not in self.less and (y, x) not in self.less

    @cached_property
    def _down(self) -> dict[str, frozenset[str]]:
        return {
            x: frozenset(y for y in self.elements if (y, x) in self.less)
            for x in self.elements
        }

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "relations": sorted([x, y] for (x, y) in self.less),
        }

    @classmethod
    def from_json(cls, data) -> "Poset":
        return cls.from_relations(
            data["elements"], [tuple(r) for r in data["relations"]]
        )


def parse_poset(text: str) -> Poset:
    """Poset file format: `x < y` relation lines, bare lines naming isolated
    elements, `#` comments.  Elements appear in first-mention order."""
    elements: list[str] = []
    seen: set[str] = set()
    relations: list[tuple[str, str]] = []

    def note(name: str):
        if name not in seen:
            seen.add(name)
            elements.append(name)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "<" in line:
            parts = [p.strip() for p in line.split("<")]
            if len(parts) < 2 or any(not p or " " in p for p in parts):
                raise ValueError(f"line {lineno}: expected `x < y`, got {raw!r}")
            for name in parts:
                note(name)
            for x, y in zip(parts, parts[1:]):
                relations.append((x, y))
        else:
            if " " in line:
                raise ValueError(f"line {lineno}: element names cannot contain spaces")
            note(line)
    return Poset.from_relations(tuple(elements), relations)


def height(poset: Poset) -> int:
    """Number of elements in a longest chain."""
    if not poset.elements:
        raise ValueError("empty poset has no height")
    best: dict[str, int] = {}

    def chain_to(x) -> int:
        if x not in best:
            below = poset._down[x]
            best[x] = 1 + max((chain_to(y) for y in below), default=0)
        return best[x]

    return max(chain_to(x) for x in poset.elements)


def _chains(poset: Poset, size: int) -> list[tuple[str, ...]]:
    out = []
    for combo in itertools.combinations(poset.elements, size):
        if all(
            not poset.incomparable(x, y) for x, y in itertools.combinations(combo, 2)
        ):
            out.append(combo)
    return out


def is_ab_free(poset: Poset, a: int, b: int) -> bool:
    """No induced copy of an a-chain next to a completely incomparable
    b-chain."""
    if a < 1 or b < 1:
        raise ValueError("chain sizes must be positive")
    a_chains = _chains(poset, a)
    b_chains = _chains(poset, b) if b != a else a_chains
    for ca in a_chains:
        sa = set(ca)
        for cb in b_chains:
            if sa & set(cb):
                continue
            if all(poset.incomparable(x, y) for x in ca for y in cb):
                return False
    return True


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for u, v in self.edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if u not in vs or v not in vs:
                raise ValueError(f"edge {u}-{v} uses unknown vertices")
        normalized = frozenset(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", normalized)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": sorted([u, v] for (u, v) in self.edges),
        }


def incomparability_graph(poset: Poset) -> Graph:
    edges = frozenset(
        tuple(sorted((x, y)))
        for x, y in itertools.combinations(poset.elements, 2)
        if poset.incomparable(x, y)
    )
    return Graph(poset.elements, edges)


def chromatic_polynomial_value(graph: Graph, k: int) -> int:
    """Number of proper colorings with colors 1..k, by exhaustive
    backtracking (isolated vertices contribute a closed-form factor)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = len(graph.vertices)
    if n == 0:
        return 1
    if k == 0:
        return 0
    adj = graph.adjacency
    order = sorted(graph.vertices, key=lambda v: -len(adj[v]))
    pos = {v: i for i, v in enumerate(order)}
    prior = [
        [pos[u] for u in adj[v] if pos[u] < i] for i, v in enumerate(order)
    ]
    # positions from which every remaining vertex is isolated
    free_from = n
    while free_from > 0 and not adj[order[free_from - 1]]:
        free_from -= 1
    colors = [0] * n

    def count(p: int) -> int:
        if p >= free_from:
            return k ** (n - p)
        banned = {colors[q] for q in prior[p]}
        total = 0
        for c in range(k):
            if c not in banned:
                colors[p] = c
                total += count(p + 1)
        return total

    return count(0)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def chromatic_polynomial(graph: Graph) -> tuple[int, ...]:
    """Coefficients (ascending powers of k) via deletion–contraction, with
    complete-graph and component shortcuts.  Independent of the counting
    route above; the two are cross-checked in the test suite."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    edges = frozenset(
        (min(index[u], index[v]), max(index[u], index[v])) for u, v in graph.edges
    )
    memo: dict[tuple[int, frozenset], tuple[int, ...]] = {}

    def components(n: int, es: frozenset) -> list[tuple[int, frozenset]]:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in es:
            parent[find(u)] = find(v)
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(find(v), []).append(v)
        out = []
        for verts in groups.values():
            remap = {v: i for i, v in enumerate(verts)}
            sub = frozenset(
                (remap[u], remap[v]) for u, v in es if u in remap and v in remap
            )
            out.append((len(verts), sub))
        return out

    def poly(n: int, es: frozenset) -> tuple[int, ...]:
        if not es:
            return tuple([0] * n + [1])
        if n >= 2 and len(es) == n * (n - 1) // 2:
            coeffs = [1]
            for i in range(n):
                coeffs = _poly_mul(coeffs, [-i, 1])
            return tuple(coeffs)
        key = (n, es)
        if key in memo:
            return memo[key]
        comps = components(n, es)
        if len(comps) > 1:
            acc = [1]
            for cn, ces in comps:
                acc = _poly_mul(acc, list(poly(cn, ces)))
            memo[key] = tuple(acc)
            return memo[key]
        u, v = max(es, key=lambda e: e[1] - e[0])
        deleted = poly(n, es - {(u, v)})
        merged = set()
        for a, b in es:
            if (a, b) == (u, v):
                continue
            a = u if a == v else a
            b = u if b == v else b
            a = a - 1 if a > v else a
            b = b - 1 if b > v else b
            if a != b:
                merged.add((min(a, b), max(a, b)))
        contracted = poly(n - 1, frozenset(merged))
        out = [0] * (n + 1)
        for i, c in enumerate(deleted):
            out[i] += c
        for i, c in enumerate(contracted):
            out[i] -= c
        while out and out[-1] == 0:
            out.pop()
        memo[key] = tuple(out)
        return memo[key]

    return poly(len(graph.vertices), edges)


def evaluate_polynomial(coeffs, k: int) -> int:
    total = 0
    for c in reversed(tuple(coeffs)):
        total = total * k + c
    return total


# --- order-respecting fillings ----------------------------------------------

def enumerate_p_tableaux(poset: Poset, shape) -> list[Rows]:
    """Bijective fillings of the shape by poset elements: columns strictly
    increase in the order, a row entry is never strictly above its right
    neighbor.  Fillings come out in lexicographic row-major label order."""
    shape = check_partition(shape)
    if sum(shape) != len(poset.elements):
        raise ValueError("shape weight must equal the number of elements")
    cells_rm = [
        (i, j) for i, row in enumerate(shape, 1) for j in range(1, row + 1)
    ]
    order = sorted(poset.elements)
    grid: dict[tuple[int, int], str] = {}
    used: set[str] = set()
    out: list[Rows] = []

    def fill(pos: int):
        if pos == len(cells_rm):
            out.append(
                tuple(
                    tuple(grid[(i, j)] for j in range(1, shape[i - 1] + 1))
                    for i in range(1, len(shape) + 1)
                )
            )
            return
        i, j = cells_rm[pos]
        for x in order:
            if x in used:
                continue
            if i > 1 and not poset.lt(grid[(i - 1, j)], x):
                continue
            if j > 1 and poset.lt(x, grid[(i, j - 1)]):
                continue
            used.add(x)
            grid[(i, j)] = x
            fill(pos + 1)
            used.discard(x)
            del grid[(i, j)]

    fill(0)
    return out


def count_p_tableaux(poset: Poset, shape) -> int:
    return len(enumerate_p_tableaux(poset, shape))


def is_p_tableau(poset: Poset, rows: Rows) -> bool:
    flat = [x for r in rows for x in r]
    if sorted(flat) != sorted(poset.elements):
        return False
    for i in range(len(rows) - 1):
        for j in range(len(rows[i + 1])):
            if not poset.lt(rows[i][j], rows[i + 1][j]):
                return False
    for row in rows:
        for a, b in zip(row, row[1:]):
            if poset.lt(b, a):
                return False
    return True


# --- the height-2 matching ---------------------------------------------------

@dataclass(frozen=True)
class SSCensus:
    """Pairing census over (hook tableau, filling) pairs of 2-row shapes."""

    total_pairs: int
    matched: tuple[tuple[PairST, PairST], ...]
    fixed: tuple[PairST, ...]
    coefficients: dict[Partition, int]

    def to_json(self) -> dict:
        def combined(pair: PairST) -> dict:
            s, rows = pair
            return {
                "shape": list(s.shape),
                "rows": [list(r) for r in rows],
                "hooks": [h.to_json() for h in s.hooks],
            }

        fixed_by_shape: dict[str, list] = {}
        for s, rows in self.fixed:
            from .partitions import format_partition

            fixed_by_shape.setdefault(format_partition(s.shape), []).append(
                combined((s, rows))
            )
        return {
            "total_pairs": self.total_pairs,
            "matched": [
                {"negative": combined(a), "positive": combined(b)}
                for a, b in self.matched
            ],
            "fixed_by_shape": fixed_by_shape,
        }


def _rooted_at(s: SpecialRimHookTableau, root) -> RootedTableau:
    active = next(k for k, h in enumerate(s.hooks) if root in h)
    return RootedTableau(s.shape, s.hooks, root, active)


def _push_longer(poset: Poset, s: SpecialRimHookTableau, rows: Rows) -> PairST:
    """Negative 2-row pair -> positive pair one column longer on top."""
    lam = s.shape
    final, _ = inner_involution(_rooted_at(s, (2, lam[1])))
    if final.root != (1, lam[0] + 1):
        raise RuntimeError(f"walk from {lam} ended at {final.root}, not row 1")
    s2 = SpecialRimHookTableau.from_hooks(final.hooks)
    label = rows[1][-1]
    row2 = rows[1][:-1]
    rows2 = (rows[0] + (label,),) + ((row2,) if row2 else ())
    if not is_p_tableau(poset, rows2):
        raise RuntimeError(f"moved entry broke a filling on {lam}: {rows}")
    return s2, rows2


def _pull_shorter(poset: Poset, s: SpecialRimHookTableau, rows: Rows) -> PairST:
    """Inverse of _push_longer."""
    nu = s.shape
    nu2 = nu[1] if len(nu) > 1 else 0
    final, _ = inner_involution(_rooted_at(s, (1, nu[0])))
    if final.root != (2, nu2 + 1):
        raise RuntimeError(f"walk from {nu} ended at {final.root}, not row 2")
    s2 = SpecialRimHookTableau.from_hooks(final.hooks)
    label = rows[0][-1]
    row2 = (rows[1] if len(rows) > 1 else ()) + (label,)
    rows2 = (rows[0][:-1], row2)
    if not is_p_tableau(poset, rows2):
        raise RuntimeError(f"moved entry broke a filling on {nu}: {rows}")
    return s2, rows2


def stanley_stembridge_involution(poset: Poset) -> SSCensus:
    """Match every negative pair with a positive one; the leftover positive
    pairs, counted by hook-size type, are the elementary coefficients.

    Image test applied to each positive pair of shape nu: it is hit exactly
    when nu has a row-1 overhang of at least 2 and the entry over the end of
    row 2 is above the last row-1 entry in the order.  A failure here is a
    counterexample to the characterization and is raised, not patched.
    """
    if not poset.elements:
        raise ValueError("empty poset")
    if height(poset) > 2:
        raise ValueError("order height must be at most 2")
    n = len(poset.elements)

    pairs: list[PairST] = []
    for lam in enumerate_partitions(n):
        if len(lam) > 2:
            continue
        fillings = enumerate_p_tableaux(poset, lam)
        if not fillings:
            continue
        for s in enumerate_srht_all_types(lam):
            for rows in fillings:
                pairs.append((s, rows))

    matched: list[tuple[PairST, PairST]] = []
    image: dict[PairST, PairST] = {}
    for s, rows in pairs:
        if s.sign == 1:
            continue
        target = _push_longer(poset, s, rows)
        if target in image:
            raise RuntimeError("two negative pairs map to the same positive pair")
        image[target] = (s, rows)
        matched.append(((s, rows), target))

    fixed: list[PairST] = []
    for s, rows in pairs:
        if s.sign == -1:
            continue
        nu = s.shape
        nu2 = nu[1] if len(nu) > 1 else 0
        hit_predicted = False
        if nu[0] > nu2 + 1:
            x = rows[0][nu[0] - 1]
            y = rows[0][nu2]
            hit_predicted = poset.lt(y, x)
        hit = (s, rows) in image
        if hit != hit_predicted:
            raise RuntimeError(
                f"image characterization counterexample: shape {nu}, rows {rows}, "
                f"predicted {hit_predicted}, matched {hit}"
            )
        if hit:
            if _pull_shorter(poset, s, rows) != image[(s, rows)]:
                raise RuntimeError("matching is not self-inverse")
        else:
            fixed.append((s, rows))

    coeffs = Counter(s.type for s, _ in fixed)
    return SSCensus(len(pairs), tuple(matched), tuple(fixed), dict(coeffs))


# --- the full expansion -------------------------------------------------------

@dataclass(frozen=True)
class CsfResult:
    s_expansion: SymFuncExpansion
    e_expansion: SymFuncExpansion
    pair_census: SSCensus | None

    def to_json(self) -> dict:
        return {
            "s": self.s_expansion.to_json(),
            "e": self.e_expansion.to_json(),
            "census": None if self.pair_census is None else self.pair_census.to_json(),
        }


def csf(poset: Poset) -> CsfResult:
    """Chromatic symmetric function of the incomparability graph, in the
    Schur and elementary bases; needs a (3+1)-free order."""
    if not is_ab_free(poset, 3, 1):
        raise ValueError("expansion requires a (3+1)-free order")
    n = len(poset.elements)
    h = height(poset) if n else 0
    fill_counts: dict[Partition, int] = {}
    s_coeffs: dict[Partition, int] = {}
    for lam in enumerate_partitions(n):
        if len(lam) > h and n:
            continue  # a column must be a chain
        f = count_p_tableaux(poset, lam)
        if f:
            fill_counts[lam] = f
            s_coeffs[conjugate(lam)] = f
    inv = inverse_kostka_matrix(n)
    e_coeffs = {
        mu: sum(inv.entry(mu, lam) * f for lam, f in fill_counts.items())
        for mu in inv.order
    }
    census = stanley_stembridge_involution(poset) if n and h <= 2 else None
    return CsfResult(
        SymFuncExpansion("s", s_coeffs, n),
        SymFuncExpansion("e", e_coeffs, n),
        census,
    )


def csf_monomial_from_colorings(poset: Poset) -> SymFuncExpansion:
    """Monomial expansion assembled directly from proper colorings with at
    most |P| colors — the slow independent route, for cross-checks only."""
    n = len(poset.elements)
    graph = incomparability_graph(poset)
    adj = graph.adjacency
    elems = list(poset.elements)
    counts: Counter[Partition] = Counter()
    for coloring in itertools.product(range(1, n + 1), repeat=n):
        by = dict(zip(elems, coloring))
        if any(by[u] == by[v] for u, v in graph.edges):
            continue
        used = sorted(set(coloring))
        # one representative monomial per coefficient: colors exactly 1..m,
        # used with weakly decreasing multiplicities
        if used != list(range(1, len(used) + 1)):
            continue
        key = tuple(coloring.count(c) for c in used)
        if all(key[i] >= key[i + 1] for i in range(len(key) - 1)):
            counts[check_partition(key)] += 1
    return SymFuncExpansion("m", dict(counts), n)


# --- exhaustive small-poset generation ---------------------------------------

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _order_ideals(poset: Poset) -> list[frozenset[str]]:
    out = []
    elems = poset.elements
    for bits in range(1 << len(elems)):
        subset = frozenset(x for i, x in enumerate(elems) if bits >> i & 1)
        if all(poset._down[x] <= subset for x in subset):
            out.append(subset)
    return out


def _rank(values) -> list[int]:
    table = {v: i for i, v in enumerate(sorted(set(values)))}
    return [table[v] for v in values]


def canonical_form(poset: Poset) -> tuple:
    """Isomorphism-invariant key: minimal relation matrix over relabelings
    compatible with an iterated degree refinement."""
    elems = poset.elements
    n = len(elems)
    idx = {x: i for i, x in enumerate(elems)}
    less = [[False] * n for _ in range(n)]
    for x, y in poset.less:
        less[idx[x]][idx[y]] = True
    color = _rank(
        [
            (sum(less[j][i] for j in range(n)), sum(less[i]))
            for i in range(n)
        ]
    )
    while True:
        refined = _rank(
            [
                (
                    color[i],
                    tuple(sorted(color[j] for j in range(n) if less[j][i])),
                    tuple(sorted(color[j] for j in range(n) if less[i][j])),
                )
                for i in range(n)
            ]
        )
        if refined == color:
            break
        color = refined
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(color):
        classes.setdefault(c, []).append(i)
    blocks = [classes[c] for c in sorted(classes)]
    best = None
    for arrangement in itertools.product(
        *(itertools.permutations(b) for b in blocks)
    ):
        perm = [i for block in arrangement for i in block]
        mat = tuple(
            less[perm[i]][perm[j]] for i in range(n) for j in range(n)
        )
        if best is None or mat < best:
            best = mat
    return (n, best)


@lru_cache(maxsize=None)
def enumerate_posets(n: int) -> tuple[Poset, ...]:
    """All posets on n elements up to isomorphism, built by repeatedly
    adjoining a maximal element above each order ideal."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (Poset((), frozenset()),)
    if n > len(_ALPHABET):
        raise ValueError("poset enumeration is a desk-scale tool")
    labels = tuple(_ALPHABET[:n])
    new = labels[-1]
    out: dict[tuple, Poset] = {}
    for base in enumerate_posets(n - 1):
        for ideal in _order_ideals(base):
            less = set(base.less) | {(x, new) for x in ideal}
            candidate = Poset(labels, frozenset(less))
            key = canonical_form(candidate)
            if key not in out:
                out[key] = candidate
    return tuple(out.values())
