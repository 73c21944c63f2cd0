"""Command-line front end: every library operation behind one binary.

Exit codes: 0 success, 1 domain error (bad mathematical input), 2 flag
parse error.  All output is deterministic for fixed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .involution import (
    RootedTableau,
    classify,
    inner_involution,
    outer_involution,
    trace_to_json,
)
from .partitions import format_partition, parse_partition
from .posets import (
    Poset,
    chromatic_polynomial_value,
    csf,
    height,
    incomparability_graph,
    is_ab_free,
    enumerate_posets,
    parse_poset,
    stanley_stembridge_involution,
)
from .symfunc import (
    evaluate_at_ones,
    inverse_kostka_matrix,
    kostka_matrix,
    verify_identities,
)
from .tableaux import (
    SemistandardTableau,
    SpecialRimHookTableau,
    enumerate_srht,
    kostka_number,
    render_filling,
    render_hooks,
)


def _parse_cell(text: str) -> tuple[int, int]:
    body = text.strip().strip("[]()")
    parts = [p for p in body.replace(",", " ").split() if p]
    if len(parts) != 2:
        raise ValueError(f"expected a cell `i,j`, got {text!r}")
    return int(parts[0]), int(parts[1])


def _load_poset(path: str) -> Poset:
    return parse_poset(Path(path).read_text())


def _emit(payload, fmt: str, text_fn):
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text_fn())


def _cmd_kostka(args) -> int:
    if args.shape and args.content:
        print(kostka_number(parse_partition(args.shape), parse_partition(args.content)))
        return 0
    if args.n is None:
        raise ValueError("need --n, or --shape with --content")
    m = kostka_matrix(args.n)
    _emit(m.to_json(), args.format, lambda: m.to_csv().rstrip("\n"))
    return 0


def _cmd_inv_kostka(args) -> int:
    if args.shape and args.type:
        total = sum(
            t.sign
            for t in enumerate_srht(parse_partition(args.shape), parse_partition(args.type))
        )
        print(total)
        return 0
    if args.n is None:
        raise ValueError("need --n, or --shape with --type")
    m = inverse_kostka_matrix(args.n)
    _emit(m.to_json(), args.format, lambda: m.to_csv().rstrip("\n"))
    return 0


def _cmd_verify(args) -> int:
    report = verify_identities(args.n)

    def text() -> str:
        lines = [
            f"n = {report.n}",
            f"K . K^-1 = I: {report.left_identity}",
            f"K^-1 . K = I: {report.right_identity}",
            f"pair matching consistent: {report.involution_consistent}",
            "standard-column cancellation by type:",
        ]
        for mu, c in report.last_column.items():
            lines.append(
                f"  {format_partition(mu)}: pairs={c.pairs} cycles={c.cycles} "
                f"fixed={c.fixed} signed_sum={c.signed_sum}"
            )
        return "\n".join(lines)

    _emit(report.to_json(), args.format, text)
    return 0 if report.ok else 1


def _load_pair(path: str) -> tuple[SpecialRimHookTableau, SemistandardTableau]:
    data = json.loads(Path(path).read_text())
    return (
        SpecialRimHookTableau.from_json(data["tableau"]),
        SemistandardTableau.from_json(data["filling"]),
    )


def _cmd_involve(args) -> int:
    s, t = _load_pair(args.pair)
    s2, t2 = outer_involution(s, t)

    def text() -> str:
        return "\n".join(
            [
                f"input  (sign {s.sign:+d}):",
                render_hooks(s.hooks),
                render_filling(t),
                f"output (sign {s2.sign:+d}):",
                render_hooks(s2.hooks),
                render_filling(t2),
            ]
        )

    payload = {
        "input": {"tableau": s.to_json(), "filling": t.to_json(), "sign": s.sign},
        "output": {"tableau": s2.to_json(), "filling": t2.to_json(), "sign": s2.sign},
    }
    _emit(payload, args.format, text)
    return 0


def _trace_start(args) -> RootedTableau:
    if args.input:
        return RootedTableau.from_json(json.loads(Path(args.input).read_text()))
    if not (args.shape and args.type and args.root):
        raise ValueError("need --input, or --shape/--type/--root")
    shape = parse_partition(args.shape)
    typ = parse_partition(args.type)
    root = _parse_cell(args.root)
    tableaux = enumerate_srht(shape, typ)
    if not (0 <= args.index < len(tableaux)):
        raise ValueError(
            f"--index {args.index} out of range: {len(tableaux)} tableaux of "
            f"shape {format_partition(shape)} and type {format_partition(typ)}"
        )
    s = tableaux[args.index]
    active = next(k for k, h in enumerate(s.hooks) if root in h)
    return RootedTableau(s.shape, s.hooks, root, active)


def _cmd_trace(args) -> int:
    start = _trace_start(args)
    final, trace = inner_involution(start)

    def text() -> str:
        blocks = []
        for i, (state, cls) in enumerate(trace):
            label = "terminal" if i == len(trace) - 1 else f"{cls.rule} ({cls.value})"
            blocks.append(f"step {i}  [{label}]")
            blocks.append(state.render())
            blocks.append("")
        blocks.append(f"sign {trace[0][0].sign:+d} -> {final.sign:+d}")
        return "\n".join(blocks)

    _emit(trace_to_json(trace), args.format, text)
    return 0


def _cmd_csf(args) -> int:
    result = csf(_load_poset(args.poset))
    _emit(result.to_json(), args.format, result.e_expansion.format_text)
    return 0


def _cmd_ss(args) -> int:
    poset = _load_poset(args.poset)
    census = stanley_stembridge_involution(poset)

    def text() -> str:
        lines = [
            f"pairs: {census.total_pairs}",
            f"matched 2-cycles: {len(census.matched)}",
            f"fixed points: {len(census.fixed)}",
        ]
        by_shape: dict[str, int] = {}
        for s, _ in census.fixed:
            key = format_partition(s.shape)
            by_shape[key] = by_shape.get(key, 0) + 1
        for key in sorted(by_shape):
            lines.append(f"  shape {key}: {by_shape[key]}")
        coeff = " + ".join(
            f"{census.coefficients[mu]} e{format_partition(mu)}"
            for mu in sorted(census.coefficients, reverse=True)
        )
        lines.append(f"coefficients: {coeff}")
        return "\n".join(lines)

    _emit(census.to_json(), args.format, text)
    return 0


def _cmd_ab_free(args) -> int:
    poset = _load_poset(args.poset)
    print("true" if is_ab_free(poset, args.a, args.b) else "false")
    return 0


def _cmd_corpus(args) -> int:
    rng = random.Random(args.seed)
    summary = []
    for n in range(1, args.max_elements + 1):
        posets = list(enumerate_posets(n))
        if args.seed is not None:
            rng.shuffle(posets)  # order only; the aggregate is unchanged
        free = [p for p in posets if is_ab_free(p, 3, 1)]
        low = [p for p in free if height(p) <= 2]
        failures = 0
        positive = 0
        for poset in free:
            result = csf(poset)
            graph = incomparability_graph(poset)
            for k in range(1, 5):
                if evaluate_at_ones(result.e_expansion, k) != chromatic_polynomial_value(graph, k):
                    failures += 1
            if height(poset) <= 2:
                if result.pair_census is None or dict(result.pair_census.coefficients) != dict(
                    result.e_expansion.coeffs
                ):
                    failures += 1
                if result.e_expansion.is_positive():
                    positive += 1
        summary.append(
            {
                "n": n,
                "posets": len(posets),
                "three_plus_one_free": len(free),
                "height_le_2": len(low),
                "e_positive_height_le_2": positive,
                "failures": failures,
            }
        )

    def text() -> str:
        lines = []
        for row in summary:
            lines.append(
                f"n={row['n']}: posets={row['posets']} "
                f"(3+1)-free={row['three_plus_one_free']} "
                f"height<=2={row['height_le_2']} "
                f"e-positive={row['e_positive_height_le_2']}/{row['height_le_2']} "
                f"failures={row['failures']}"
            )
        total_free = sum(r["three_plus_one_free"] for r in summary)
        total_fail = sum(r["failures"] for r in summary)
        lines.append(f"total (3+1)-free posets: {total_free}")
        lines.append("all checks passed" if total_fail == 0 else f"FAILURES: {total_fail}")
        return "\n".join(lines)

    _emit(summary, args.format, text)
    return 0 if all(r["failures"] == 0 for r in summary) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rimhook",
        description="Signed rim-hook tableaux, inverse Kostka matrices, and "
        "chromatic symmetric functions, all in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("kostka", help="tableau-count matrix, or one entry")
    p.add_argument("--n", type=int)
    p.add_argument("--shape")
    p.add_argument("--content")
    add_format(p)
    p.set_defaults(fn=_cmd_kostka)

    p = sub.add_parser("inv-kostka", help="signed hook-count matrix, or one entry")
    p.add_argument("--n", type=int)
    p.add_argument("--shape")
    p.add_argument("--type")
    add_format(p)
    p.set_defaults(fn=_cmd_inv_kostka)

    p = sub.add_parser("verify", help="matrix identities and pair cancellation")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("involve", help="partner of a (tableau, standard filling) pair")
    p.add_argument("--pair", required=True, help="JSON file with tableau and filling")
    add_format(p)
    p.set_defaults(fn=_cmd_involve)

    p = sub.add_parser("trace", help="full rewrite walk from a rooted tableau")
    p.add_argument("--input", help="JSON file with a rooted tableau")
    p.add_argument("--shape")
    p.add_argument("--type")
    p.add_argument("--root", help="cell `i,j`")
    p.add_argument("--index", type=int, default=0, help="which tableau of this shape/type")
    add_format(p)
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("csf", help="chromatic symmetric function of an order's incomparability graph")
    p.add_argument("--poset", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_csf)

    p = sub.add_parser("ss-involution", help="height-2 pairing census and coefficients")
    p.add_argument("--poset", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_ss)

    p = sub.add_parser("ab-free", help="check for an induced chain+chain configuration")
    p.add_argument("--poset", required=True)
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--b", type=int, default=1)
    p.set_defaults(fn=_cmd_ab_free)

    p = sub.add_parser("corpus", help="exhaustive small-poset sweep with cross-checks")
    p.add_argument("--max-elements", type=int, default=5)
    p.add_argument("--seed", type=int, default=None, help="processing order only")
    add_format(p)
    p.set_defaults(fn=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
