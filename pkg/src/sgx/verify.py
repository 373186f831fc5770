"""Self-check suites behind `sgx verify`.

tables      recompute the nonprincipal maximal-linked product block of
            ⟨x | x³=x⁵⟩ and diff it against the expected fixture
invariants  space cardinalities and the algebraic identities the products
            and the transversal must satisfy
theorems    exhaustive order-3/4 sweep of the commutativity equivalences
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .catalog import catalog_names, load_catalog
from .products import (
    ProductKind,
    check_associativity,
    ellis_product,
    ellis_upmask,
    pointwise_product,
)
from .criteria import sweep_theorem_equivalences
from .semigroup import make_monogenic
from .spaces import (
    SpaceKind,
    count_space,
    enumerate_space,
    label_lambda4,
    lambda_members_antichain,
    lambda_members_pairs,
)
from .upfamily import Upfamily, minimize

SEED = 8897
LAMBDA_COUNTS = (1, 2, 4, 12, 81)

# products of nonprincipal maximal linked systems over <x | x^3 = x^5>,
# row * column, in the block order △1..△4, □1..□4; "3"/"4" are the principal
# systems at x^3/x^4
_BLOCK_ORDER = ("△1", "△2", "△3", "△4", "□1", "□2", "□3", "□4")
_ROW_A = ("4", "3", "4", "3", "3", "4", "3", "4")
_ROW_B = ("3", "△1", "3", "△1", "△1", "3", "△1", "3")
EXPECTED_M35_BLOCK = {
    "△1": _ROW_A,
    "△2": _ROW_B,
    "△3": _ROW_A,
    "△4": _ROW_B,
    "□1": _ROW_B,
    "□2": _ROW_A,
    "□3": _ROW_B,
    "□4": _ROW_A,
}


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" — {self.detail}" if self.detail else ""
        return f"[{status}] {self.name}{tail}"


def suite_tables() -> list[CheckResult]:
    s = make_monogenic(3, 5)
    space = label_lambda4(enumerate_space(SpaceKind.MAXIMAL_LINKED, 4))
    by_label = {lab: m for lab, m in zip(space.labels, space.members)}
    diffs = []
    for r in _BLOCK_ORDER:
        for c, expected in zip(_BLOCK_ORDER, EXPECTED_M35_BLOCK[r]):
            prod = ellis_product(s, by_label[r], by_label[c])
            idx = space.index_of(prod)
            got = space.labels[idx] if idx is not None else prod.machine_form()
            if got != expected:
                diffs.append(f"{r}*{c}: got {got}, expected {expected}")
    ok = not diffs and len(space.members) == 12
    detail = "64/64 entries match" if ok else "; ".join(diffs[:4])
    return [CheckResult("nonprincipal λ block of ⟨x | x³=x⁵⟩", ok, detail)]


def _random_upfamily(rng: random.Random, n: int) -> Upfamily:
    full = (1 << n) - 1
    masks = [rng.randint(1, full) for _ in range(rng.randint(1, 4))]
    return Upfamily(n, minimize(masks))


def _order_le(k: int) -> list[tuple[str, object]]:
    out = []
    for name in catalog_names():
        s = load_catalog(name)
        if s.order <= k:
            out.append((name, s))
    return out


def suite_invariants(seed: int = SEED) -> list[CheckResult]:
    results = []

    counts_a = [len(lambda_members_antichain(n)) for n in range(1, 6)]
    counts_p = [len(lambda_members_pairs(n)) for n in range(1, 6)]
    same_sets = all(
        set(lambda_members_antichain(n)) == set(lambda_members_pairs(n))
        for n in range(1, 6)
    )
    ok = tuple(counts_a) == LAMBDA_COUNTS and counts_a == counts_p and same_sets
    results.append(
        CheckResult(
            "maximal linked counts n=1..5, dual enumerators",
            ok,
            f"antichain {counts_a}, complement-pair {counts_p}",
        )
    )

    filter_counts = [count_space(SpaceKind.FILTERS, n) for n in range(1, 11)]
    ok = all(c == (1 << n) - 1 for n, c in enumerate(filter_counts, start=1))
    results.append(
        CheckResult("filter counts 2^n − 1 for n ≤ 10", ok, str(filter_counts))
    )

    bad = 0
    total = 0
    for n in range(1, 5):
        for f in enumerate_space(SpaceKind.ALL_UPFAMILIES, n).members:
            total += 1
            if f.transversal().transversal() != f:
                bad += 1
    results.append(
        CheckResult(
            "(F⊥)⊥ = F exhaustive n ≤ 4", bad == 0, f"{total} upfamilies, {bad} failures"
        )
    )

    rng = random.Random(seed)
    bad = 0
    cases = 100_000
    for i in range(cases):
        f = _random_upfamily(rng, 5 if i % 2 else 6)
        if f.transversal().transversal() != f:
            bad += 1
    results.append(
        CheckResult(
            "(F⊥)⊥ = F random n = 5,6",
            bad == 0,
            f"{cases} cases (seed {seed}), {bad} failures",
        )
    )

    ok = True
    detail_parts = []
    for n in range(1, 6):
        lam = set(lambda_members_antichain(n))
        fixed = {
            f
            for f in enumerate_space(SpaceKind.ALL_UPFAMILIES, n).members
            if f.transversal() == f
        }
        detail_parts.append(f"n={n}: {len(fixed)}")
        if lam != fixed:
            ok = False
    results.append(
        CheckResult(
            "maximal linked = transversal fixed points, n ≤ 5",
            ok,
            ", ".join(detail_parts),
        )
    )

    small = _order_le(4)

    bad_pairs = 0
    total = 0
    for _, s in small:
        members = enumerate_space(SpaceKind.ALL_UPFAMILIES, s.order).members
        ums = [m.upmask() for m in members]
        for i, a in enumerate(members):
            for j, b in enumerate(members):
                pw = pointwise_product(s, a, b).upmask()
                el = ellis_upmask(s, ums[i], ums[j])
                total += 1
                if pw & ~el:
                    bad_pairs += 1
    results.append(
        CheckResult(
            "A⊛B ⊆ A*B over all upfamily pairs, catalog order ≤ 4",
            bad_pairs == 0,
            f"{len(small)} semigroups, {total} pairs, {bad_pairs} violations",
        )
    )

    ok = True
    triples = 0
    for _, s in small:
        for kind in (SpaceKind.MAXIMAL_LINKED, SpaceKind.FILTERS):
            res = check_associativity(s, enumerate_space(kind, s.order))
            triples += res.triples_checked
            if not (res.associative and res.exhaustive):
                ok = False
    results.append(
        CheckResult(
            "Ellis associativity on maximal linked and filters, order ≤ 4",
            ok,
            f"{triples} exhaustive triples",
        )
    )

    bad_pairs = 0
    total = 0
    for _, s in small:
        ups = enumerate_space(SpaceKind.ALL_UPFAMILIES, s.order).members
        filt = enumerate_space(SpaceKind.FILTERS, s.order).members
        for a in ups:
            aum = a.upmask()
            for b in filt:
                total += 1
                if ellis_upmask(s, aum, b.upmask()) != pointwise_product(s, a, b).upmask():
                    bad_pairs += 1
    results.append(
        CheckResult(
            "A*B = A⊛B when B is a filter, catalog order ≤ 4",
            bad_pairs == 0,
            f"{total} exhaustive pairs, {bad_pairs} violations",
        )
    )

    return results


def suite_theorems(max_workers: int | None = None) -> list[CheckResult]:
    results = []
    expected_classes = {3: 12, 4: 58}
    for order in (3, 4):
        res = sweep_theorem_equivalences(order, max_workers=max_workers)
        ok = not res.falsifications and res.class_count == expected_classes[order]
        detail = f"{res.class_count} classes, {len(res.falsifications)} falsifications"
        if res.falsifications:
            f = res.falsifications[0]
            detail += f"; first: {f.chain} on {f.table}: {f.detail}"
        results.append(
            CheckResult(f"commutativity equivalences, all order-{order} tables", ok, detail)
        )
    return results


SUITES = {
    "tables": lambda max_workers=None: suite_tables(),
    "invariants": lambda max_workers=None: suite_invariants(),
    "theorems": suite_theorems,
}


def run_suite(name: str, max_workers: int | None = None) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in ("tables", "invariants", "theorems"):
            out.extend(SUITES[key](max_workers=max_workers))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; expected tables, invariants, theorems, all")
    return SUITES[name](max_workers=max_workers)
