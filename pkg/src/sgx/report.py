"""Analysis reports: one semigroup in, verdicts over its extension spaces out.

The JSON dict is the source of truth; the human-readable table is rendered
from it, never computed separately.
"""
from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass

from .criteria import (
    NotCommutativeBase,
    NotRegular,
    classify_regular_lambda,
    delta_digraph,
    has_pure_4cycle,
    is_square_linear,
)
from .products import ProductKind, check_space
from .semigroup import FiniteSemigroup, has_projection_group, is_regular
from .spaces import GroundTooLarge, SpaceKind, enumerate_space

# report keys in presentation order; JSON output is sorted anyway
SPACE_KEYS = ("filters", "linked", "maximal_linked", "all_upfamilies")

_KIND_BY_KEY = {
    "filters": SpaceKind.FILTERS,
    "linked": SpaceKind.LINKED,
    "maximal_linked": SpaceKind.MAXIMAL_LINKED,
    "all_upfamilies": SpaceKind.ALL_UPFAMILIES,
}

# N2 commutativity is implied by upsilon commutativity, lambda by N2: the
# spaces sit inside each other, so a verdict pattern breaking this order
# means a product bug, not mathematics.
_CHAIN = ("all_upfamilies", "linked", "maximal_linked")


def table_hash(s: FiniteSemigroup) -> str:
    flat = f"{s.order}:" + ",".join(str(v) for row in s.table for v in row)
    return hashlib.sha256(flat.encode()).hexdigest()[:16]


@dataclass
class AnalysisReport:
    name: str
    order: int
    hash: str
    base: dict
    spaces: dict
    classification: str | None = None
    timings_ms: dict | None = None
    seed: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "semigroup": {"name": self.name, "order": self.order, "hash": self.hash},
            "base": self.base,
            "spaces": self.spaces,
            "classification": self.classification,
            "timings_ms": self.timings_ms,
            "seed": self.seed,
        }

    def render(self) -> str:
        d = self.to_json_dict()
        out = [f"{d['semigroup']['name']}  order={d['semigroup']['order']}  table={d['semigroup']['hash']}"]
        base = d["base"]
        flags = [k for k in ("commutative", "regular", "square_linear") if base[k]]
        out.append("base: " + (", ".join(flags) if flags else "none of commutative/regular/square-linear"))
        if base["square_linear"]:
            out.append(f"  pure 4-cycle: {'yes' if base['has_pure_4cycle'] else 'no'}")
        if base["projection_group"] is not None:
            out.append("  projection group: {" + ", ".join(base["projection_group"]) + "}")
        width = max(len(k) for k in SPACE_KEYS)
        for key in SPACE_KEYS:
            if key not in d["spaces"]:
                continue
            v = d["spaces"][key]
            if "error" in v:
                out.append(f"{key:<{width}}  -- {v['error']}")
                continue
            cells = [f"|{key}|={v['count']}"]
            if "commutative" in v:
                cells.append(f"comm={'yes' if v['commutative'] else 'NO'}")
            if "supercommutative" in v:
                cells.append(f"supercomm={'yes' if v['supercommutative'] else 'NO'}")
            out.append(f"{key:<{width}}  " + "  ".join(cells))
            if v.get("witness"):
                out.append(f"  witness: {v['witness']}")
        if d["classification"]:
            out.append(f"classification: {d['classification']}")
        if d["timings_ms"]:
            parts = ", ".join(f"{k}={v:.1f}ms" for k, v in sorted(d["timings_ms"].items()))
            out.append(f"timings: {parts}")
        return "\n".join(out)


def _validate_lattice(spaces: dict) -> None:
    for key, v in spaces.items():
        if "error" in v or "supercommutative" not in v or "commutative" not in v:
            continue
        assert not (v["supercommutative"] and not v["commutative"]), key
    comms = [
        spaces[k]["commutative"]
        for k in _CHAIN
        if k in spaces and "commutative" in spaces[k]
    ]
    for earlier, later in zip(comms, comms[1:]):
        assert not (earlier and not later), "containment chain violated"


def analyze(
    s: FiniteSemigroup,
    name: str = "semigroup",
    space_keys: tuple[str, ...] = SPACE_KEYS,
    checks: tuple[str, ...] = ("comm", "supercomm"),
    want_witness: bool = False,
    want_timings: bool = False,
) -> AnalysisReport:
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    commutative = s.is_commutative()
    sql, _ = is_square_linear(s)
    pure4 = None
    if sql:
        pure4 = has_pure_4cycle(delta_digraph(s)) is not None
    proj = has_projection_group(s)
    base = {
        "commutative": commutative,
        "regular": is_regular(s),
        "square_linear": sql,
        "has_pure_4cycle": pure4,
        "projection_group": None if proj is None else [s.names[proj[0]], s.names[proj[1]]],
    }
    timings["base"] = (time.perf_counter() - t0) * 1000.0

    spaces: dict[str, dict] = {}
    for key in SPACE_KEYS:
        if key not in space_keys:
            continue
        t0 = time.perf_counter()
        try:
            space = enumerate_space(_KIND_BY_KEY[key], s.order)
        except GroundTooLarge as e:
            spaces[key] = {"error": str(e)}
            continue
        verdict = check_space(s, space, kind=ProductKind.ELLIS)
        entry: dict = {"count": len(space.members)}
        if "comm" in checks:
            entry["commutative"] = verdict.commutative
        if "supercomm" in checks:
            entry["supercommutative"] = verdict.supercommutative
        entry["witness"] = (
            verdict.witness.render(s.names) if want_witness and verdict.witness else None
        )
        spaces[key] = entry
        timings[key] = (time.perf_counter() - t0) * 1000.0
    _validate_lattice(spaces)

    classification = None
    if commutative and base["regular"]:
        try:
            _, _, tag = classify_regular_lambda(s)
            classification = tag.label()
        except (NotCommutativeBase, NotRegular):  # pragma: no cover - guarded above
            pass

    return AnalysisReport(
        name=name,
        order=s.order,
        hash=table_hash(s),
        base=base,
        spaces=spaces,
        classification=classification,
        timings_ms=timings if want_timings else None,
        seed=None,
    )
