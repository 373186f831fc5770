"""Command-line entry point.

Subcommands: make, analyze, cayley, enumerate, verify.
Exit codes: 0 success, 1 a verification suite found a failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .catalog import resolve
from .products import ellis_product
from .report import SPACE_KEYS, analyze
from .semigroup import (
    FiniteSemigroup,
    SemigroupError,
    from_table,
    make_cyclic,
    make_linear_semilattice,
    make_monogenic,
    make_ordered_union,
    make_product,
    make_v3,
    make_zero_bouquet,
    save_semigroup,
    to_json_dict,
)
from .spaces import GroundTooLarge, SpaceKind, count_space, enumerate_space, label_lambda4
from .verify import run_suite

_SPACE_ALIASES = {
    "filters": "filters",
    "phi": "filters",
    "linked": "linked",
    "n2": "linked",
    "lambda": "maximal_linked",
    "maximal-linked": "maximal_linked",
    "maximal_linked": "maximal_linked",
    "upsilon": "all_upfamilies",
    "all-upfamilies": "all_upfamilies",
    "all_upfamilies": "all_upfamilies",
}

_KIND_ALIASES = dict(_SPACE_ALIASES, principal="principal")


def _space_key(token: str) -> str:
    t = token.strip().lower()
    if t not in _SPACE_ALIASES:
        raise ValueError(f"unknown space {token!r}; expected one of {sorted(set(_SPACE_ALIASES))}")
    return _SPACE_ALIASES[t]


def _threads() -> int | None:
    raw = os.environ.get("SGX_THREADS", "").strip()
    if not raw:
        return None
    v = int(raw)
    if v < 1:
        raise ValueError("SGX_THREADS must be a positive integer")
    return v


def _ref_name(ref: str) -> str:
    stem = Path(ref).stem
    return stem if stem else ref


# -- make ------------------------------------------------------------------


def _parse_table_arg(src: str) -> list[list[int]]:
    p = Path(src)
    text = p.read_text(encoding="utf-8") if p.exists() else src
    data = json.loads(text)
    if isinstance(data, dict):
        data = data["table"]
    return data


def _built(args) -> tuple[str, FiniteSemigroup]:
    fam = args.family
    if fam == "cyclic":
        return f"cyclic({args.n})", make_cyclic(args.n)
    if fam == "semilattice":
        return f"semilattice({args.n})", make_linear_semilattice(args.n)
    if fam == "v3":
        return "v3", make_v3()
    if fam == "monogenic":
        return f"monogenic({args.n},{args.m})", make_monogenic(args.n, args.m)
    if fam == "product":
        a, b = resolve(args.operands[0]), resolve(args.operands[1])
        return f"product({args.operands[0]},{args.operands[1]})", make_product(a, b)
    if fam == "ordered-union":
        a, b = resolve(args.operands[0]), resolve(args.operands[1])
        return f"ordered-union({args.operands[0]},{args.operands[1]})", make_ordered_union(a, b)
    if fam == "bouquet":
        comps = [resolve(ref) for ref in args.operands]
        return f"bouquet({','.join(args.operands)})", make_zero_bouquet(comps)
    if fam == "from-table":
        names = args.names.split(",") if args.names else None
        return "from-table", from_table(_parse_table_arg(args.table), names)
    raise ValueError(f"unknown family {fam!r}")


def cmd_make(args) -> int:
    label, s = _built(args)
    if args.out:
        save_semigroup(s, args.out)
        print(f"{label}: order {s.order} -> {args.out}")
    else:
        print(json.dumps(to_json_dict(s), sort_keys=True, indent=2, ensure_ascii=False))
        print(f"{label}: order {s.order}", file=sys.stderr)
    return 0


# -- analyze ---------------------------------------------------------------


def cmd_analyze(args) -> int:
    s = resolve(args.semigroup)
    if args.spaces == "all":
        keys = SPACE_KEYS
    else:
        keys = tuple(dict.fromkeys(_space_key(t) for t in args.spaces.split(",")))
    checks = tuple(dict.fromkeys(t.strip().lower() for t in args.check.split(",")))
    for c in checks:
        if c not in ("comm", "supercomm"):
            raise ValueError(f"unknown check {c!r}; expected comm, supercomm")
    report = analyze(
        s,
        name=_ref_name(args.semigroup),
        space_keys=keys,
        checks=checks,
        want_witness=args.witness,
        want_timings=args.timings,
    )
    payload = json.dumps(report.to_json_dict(), sort_keys=True, indent=2, ensure_ascii=False)
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
    print(payload if args.json else report.render())
    return 0


# -- cayley ----------------------------------------------------------------


def _display(space, s: FiniteSemigroup) -> tuple[list, list[str]]:
    """Members in display order with print labels."""
    members = list(space.members)
    if space.kind is SpaceKind.MAXIMAL_LINKED and space.ground_size == 4:
        labeled = label_lambda4(space)
        order = [str(k) for k in range(1, 5)]
        order += [f"△{k}" for k in range(1, 5)] + [f"□{k}" for k in range(1, 5)]
        by_label = dict(zip(labeled.labels, labeled.members))
        return [by_label[lab] for lab in order], order
    labels = []
    nonprincipal = [m for m in members if len(m.minimal_sets) != 1 or m.minimal_sets[0].bit_count() != 1]
    for m in members:
        ms = m.minimal_sets
        if len(ms) == 1 and ms[0].bit_count() == 1:
            labels.append(s.names[ms[0].bit_length() - 1])
        elif len(nonprincipal) == 1:
            labels.append("△")
        else:
            labels.append(m.render(s.names))
    return members, labels


def cmd_cayley(args) -> int:
    s = resolve(args.semigroup)
    kind = SpaceKind(_space_key(args.space))
    space = enumerate_space(kind, s.order)
    members, labels = _display(space, s)
    index = {m: i for i, m in enumerate(members)}

    def cell(a, b) -> str:
        p = ellis_product(s, a, b)
        i = index.get(p)
        return labels[i] if i is not None else p.render(s.names)

    grid = [[cell(a, b) for b in members] for a in members]
    widths = [max(len(labels[j]), max(len(row[j]) for row in grid)) for j in range(len(members))]
    head = max(len(lab) for lab in labels + ["*"])
    print("  ".join(["*".ljust(head)] + [labels[j].ljust(widths[j]) for j in range(len(members))]).rstrip())
    for i, row in enumerate(grid):
        print("  ".join([labels[i].ljust(head)] + [row[j].ljust(widths[j]) for j in range(len(members))]).rstrip())
    return 0


# -- enumerate ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    t = args.kind.strip().lower()
    if t not in _KIND_ALIASES:
        raise ValueError(f"unknown kind {args.kind!r}; expected one of {sorted(set(_KIND_ALIASES))}")
    kind = SpaceKind(_KIND_ALIASES[t])
    if args.count_only:
        print(count_space(kind, args.n))
        return 0
    space = enumerate_space(kind, args.n)
    print(f"{kind.value}({args.n}): {len(space.members)} members")
    for m in space.members:
        print(m.render())
    return 0


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    results = run_suite(args.suite, max_workers=_threads())
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgx",
        description="Finite semigroups, their upfamily extension spaces, and commutativity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mk = sub.add_parser("make", help="construct a semigroup and write/print its JSON")
    mk_sub = mk.add_subparsers(dest="family", required=True)
    for fam, with_n, with_m in (("cyclic", True, False), ("semilattice", True, False), ("monogenic", True, True)):
        p = mk_sub.add_parser(fam)
        p.add_argument("--n", type=int, required=True)
        if with_m:
            p.add_argument("--m", type=int, required=True)
        p.add_argument("-o", "--out")
        p.set_defaults(func=cmd_make)
    p = mk_sub.add_parser("v3")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_make)
    for fam, nargs in (("product", 2), ("ordered-union", 2), ("bouquet", "+")):
        p = mk_sub.add_parser(fam)
        p.add_argument("operands", nargs=nargs, metavar="SEMIGROUP")
        p.add_argument("-o", "--out")
        p.set_defaults(func=cmd_make)
    p = mk_sub.add_parser("from-table")
    p.add_argument("table", help="JSON file or inline JSON list of rows")
    p.add_argument("--names", help="comma-separated element names")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_make)

    an = sub.add_parser("analyze", help="full report over the extension spaces")
    an.add_argument("semigroup", help="semigroup file or catalog name")
    an.add_argument("--spaces", default="all", help="comma list: filters, linked, lambda, upsilon (default all)")
    an.add_argument("--check", default="comm,supercomm", help="comma list: comm, supercomm")
    an.add_argument("--witness", action="store_true", help="include the least non-commuting pair")
    an.add_argument("--timings", action="store_true", help="include per-phase milliseconds")
    an.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    an.add_argument("-o", "--out", help="also write the JSON report to a file")
    an.set_defaults(func=cmd_analyze)

    cy = sub.add_parser("cayley", help="print the product table of an extension space")
    cy.add_argument("semigroup")
    cy.add_argument("--space", default="lambda")
    cy.set_defaults(func=cmd_cayley)

    en = sub.add_parser("enumerate", help="list or count the members of a space")
    en.add_argument("kind", help="principal, filters, linked, lambda, upsilon")
    en.add_argument("n", type=int, help="ground set size")
    en.add_argument("--count-only", action="store_true")
    en.set_defaults(func=cmd_enumerate)

    ve = sub.add_parser("verify", help="run a self-check suite")
    ve.add_argument("--suite", default="all", choices=["tables", "invariants", "theorems", "all"])
    ve.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SemigroupError, GroundTooLarge) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
