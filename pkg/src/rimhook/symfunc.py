"""Exact partition-indexed matrices and symmetric-function expansions.

The tableau-count matrix is upper unitriangular in the canonical
(reverse-lexicographic) order; its inverse is assembled entry-by-entry
from signed special rim-hook tableaux, never by numerical inversion.
Expansions carry exact integer coefficients in the e, s, or m basis.
"""

from __future__ import annotations

import io
import csv as _csv
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .involution import enumerate_standard_pairs, outer_involution
from .partitions import (
    Partition,
    check_partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .tableaux import enumerate_srht_all_types, kostka_number


@dataclass(frozen=True)
class PartitionMatrix:
    """Square integer matrix indexed both ways by the partitions of n in
    canonical order."""

    n: int
    order: tuple[Partition, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        p = len(self.order)
        if len(self.rows) != p or any(len(r) != p for r in self.rows):
            raise ValueError("matrix is not square against its index")

    def index(self, part) -> int:
        return self.order.index(check_partition(part))

    def entry(self, row_part, col_part) -> int:
        return self.rows[self.index(row_part)][self.index(col_part)]

    def matmul(self, other: "PartitionMatrix") -> "PartitionMatrix":
        if self.order != other.order:
            raise ValueError("matrices indexed by different orders")
        p = len(self.order)
        prod = tuple(
            tuple(
                sum(self.rows[i][k] * other.rows[k][j] for k in range(p))
                for j in range(p)
            )
            for i in range(p)
        )
        return PartitionMatrix(self.n, self.order, prod)

    @property
    def is_identity(self) -> bool:
        return all(
            v == (1 if i == j else 0)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = _csv.writer(buf, lineterminator="\n")
        labels = [format_partition(p) for p in self.order]
        w.writerow([""] + labels)
        for label, row in zip(labels, self.rows):
            w.writerow([label] + list(row))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": [format_partition(p) for p in self.order],
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> "PartitionMatrix":
        return cls(
            int(data["n"]),
            tuple(parse_partition(s) for s in data["order"]),
            tuple(tuple(int(v) for v in r) for r in data["rows"]),
        )


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> PartitionMatrix:
    """Entry (shape, content): number of semistandard fillings."""
    order = enumerate_partitions(n)
    rows = tuple(
        tuple(kostka_number(lam, mu) for mu in order) for lam in order
    )
    return PartitionMatrix(n, order, rows)


@lru_cache(maxsize=None)
def inverse_kostka_matrix(n: int) -> PartitionMatrix:
    """Entry (type, shape): signed count of special rim-hook tableaux."""
    order = enumerate_partitions(n)
    idx = {p: i for i, p in enumerate(order)}
    grid = [[0] * len(order) for _ in order]
    for j, lam in enumerate(order):
        for t in enumerate_srht_all_types(lam):
            grid[idx[t.type]][j] += t.sign
    return PartitionMatrix(n, order, tuple(tuple(r) for r in grid))


@dataclass(frozen=True)
class PairCensus:
    """Cancellation bookkeeping for one hook-size type."""

    pairs: int
    cycles: int
    fixed: int
    signed_sum: int


@dataclass(frozen=True)
class VerificationReport:
    n: int
    left_identity: bool            # K . K^-1 = I
    right_identity: bool           # K^-1 . K = I
    involution_consistent: bool
    last_column: dict[Partition, PairCensus] = field(compare=False)

    @property
    def ok(self) -> bool:
        return self.left_identity and self.right_identity and self.involution_consistent

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "left_identity": self.left_identity,
            "right_identity": self.right_identity,
            "involution_consistent": self.involution_consistent,
            "last_column": {
                format_partition(mu): {
                    "pairs": c.pairs,
                    "cycles": c.cycles,
                    "fixed": c.fixed,
                    "signed_sum": c.signed_sum,
                }
                for mu, c in self.last_column.items()
            },
        }


def verify_identities(n: int) -> VerificationReport:
    """Both matrix products, plus pair cancellation against the standard
    column, all in exact arithmetic."""
    k = kostka_matrix(n)
    k_inv = inverse_kostka_matrix(n)
    left = k.matmul(k_inv).is_identity
    right = k_inv.matmul(k).is_identity

    ones = (1,) * n
    census: dict[Partition, PairCensus] = {}
    consistent = True
    for mu in enumerate_partitions(n):
        pairs = enumerate_standard_pairs(mu)
        signed = sum(s.sign for s, _ in pairs)
        if mu == ones:
            fixed, cycles = len(pairs), 0
            consistent &= len(pairs) == 1 and signed == 1
        else:
            fixed, cycles = 0, len(pairs) // 2
            seen = set()
            for s, t in pairs:
                key = (s, t.rows)
                if key in seen:
                    continue
                s2, t2 = outer_involution(s, t)
                s3, t3 = outer_involution(s2, t2)
                if (s3, t3) != (s, t) or s2.sign != -s.sign or (s2, t2) == (s, t):
                    consistent = False
                seen.add(key)
                seen.add((s2, t2.rows))
            consistent &= len(pairs) % 2 == 0 and signed == 0
        census[mu] = PairCensus(len(pairs), cycles, fixed, signed)
    return VerificationReport(n, left, right, consistent, census)


@dataclass(frozen=True)
class SymFuncExpansion:
    """Exact integer coefficients on partitions of one weight, in a named
    basis ("e", "s", or "m"); zero coefficients are never stored."""

    basis: str
    coeffs: dict[Partition, int] = field(compare=True)
    weight: int

    def __post_init__(self):
        if self.basis not in ("e", "s", "m"):
            raise ValueError(f"unknown basis {self.basis!r}")
        cleaned = {}
        for part, c in self.coeffs.items():
            part = check_partition(part)
            if sum(part) != self.weight:
                raise ValueError(f"{part} does not have weight {self.weight}")
            if c != 0:
                cleaned[part] = int(c)
        object.__setattr__(self, "coeffs", cleaned)

    def __getitem__(self, part) -> int:
        return self.coeffs.get(check_partition(part), 0)

    def terms(self) -> list[tuple[Partition, int]]:
        """Coefficients in canonical partition order."""
        return [
            (p, self.coeffs[p])
            for p in enumerate_partitions(self.weight)
            if p in self.coeffs
        ]

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def format_text(self) -> str:
        parts = []
        for p, c in self.terms():
            parts.append((c, f"{abs(c)} {self.basis}{format_partition(p)}"))
        if not parts:
            return "0"
        out = [parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]]
        for c, txt in parts[1:]:
            out.append((" + " if c > 0 else " - ") + txt)
        return "".join(out)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "weight": self.weight,
            "coeffs": {format_partition(p): c for p, c in self.terms()},
        }

    @classmethod
    def from_json(cls, data) -> "SymFuncExpansion":
        return cls(
            data["basis"],
            {parse_partition(k): int(v) for k, v in data["coeffs"].items()},
            int(data["weight"]),
        )


def schur_to_e(lam) -> SymFuncExpansion:
    """e-expansion of the Schur function on the conjugate of `lam`, read
    off one column of the signed hook-count matrix."""
    lam = check_partition(lam)
    n = sum(lam)
    inv = inverse_kostka_matrix(n)
    j = inv.index(lam)
    coeffs = {mu: inv.rows[i][j] for i, mu in enumerate(inv.order)}
    return SymFuncExpansion("e", coeffs, n)


def _eval_e_ones(mu: Partition, k: int) -> int:
    out = 1
    for part in mu:
        out *= comb(k, part)
    return out


def _eval_m_ones(mu: Partition, k: int) -> int:
    ell = len(mu)
    if ell > k:
        return 0
    out = 1
    for i in range(ell):
        out *= k - i
    for part in set(mu):
        out //= factorial(mu.count(part))
    return out


def evaluate_at_ones(f: SymFuncExpansion, k: int) -> int:
    """Value of the expansion with k variables set to 1, exact."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = 0
    for part, c in f.coeffs.items():
        if f.basis == "e":
            total += c * _eval_e_ones(part, k)
        elif f.basis == "m":
            total += c * _eval_m_ones(part, k)
        else:
            total += c * evaluate_at_ones(schur_to_e(conjugate(part)), k)
    return total
