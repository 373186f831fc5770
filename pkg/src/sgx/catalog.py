"""Named semigroups shipped with the package.

Each entry is a JSON file under catalog/ plus the constructor that produced
it, so the files can be regenerated (and tested) from code.
"""
from __future__ import annotations

from pathlib import Path

from .semigroup import (
    FiniteSemigroup,
    from_table,
    load_semigroup,
    make_cyclic,
    make_linear_semilattice,
    make_monogenic,
    make_ordered_union,
    make_product,
    make_v3,
    save_semigroup,
)

CATALOG_DIR = Path(__file__).parent / "catalog"


def _projection_order3() -> FiniteSemigroup:
    # C2 = {e, h} with an extra point t multiplying through the retraction
    # t -> h: x*y is computed in C2 after projecting both arguments.
    return from_table([[0, 1, 1], [1, 0, 0], [1, 0, 0]], names=("e", "h", "t"))


BUILDERS = {
    "c2": lambda: make_cyclic(2),
    "c3": lambda: make_cyclic(3),
    "c4": lambda: make_cyclic(4),
    "c2xc2": lambda: make_product(make_cyclic(2), make_cyclic(2)),
    "c2xl2": lambda: make_product(make_cyclic(2), make_linear_semilattice(2)),
    "l1-c2": lambda: make_ordered_union(make_linear_semilattice(1), make_cyclic(2)),
    "c2-l1": lambda: make_ordered_union(make_cyclic(2), make_linear_semilattice(1)),
    "c2-l2": lambda: make_ordered_union(make_cyclic(2), make_linear_semilattice(2)),
    "v3": make_v3,
    "l2": lambda: make_linear_semilattice(2),
    "l3": lambda: make_linear_semilattice(3),
    "l4": lambda: make_linear_semilattice(4),
    "l5": lambda: make_linear_semilattice(5),
    "l6": lambda: make_linear_semilattice(6),
    "m35": lambda: make_monogenic(3, 5),
    "c2c2-ordered": lambda: make_ordered_union(make_cyclic(2), make_cyclic(2)),
    "projection-order3": _projection_order3,
}


def catalog_names() -> list[str]:
    return sorted(BUILDERS)


def catalog_path(name: str) -> Path:
    if name not in BUILDERS:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")
    return CATALOG_DIR / f"{name}.json"


def load_catalog(name: str) -> FiniteSemigroup:
    path = catalog_path(name)
    if path.exists():
        return load_semigroup(path)
    return BUILDERS[name]()


def resolve(ref: str) -> FiniteSemigroup:
    """Load a semigroup from a file path, falling back to a catalog name."""
    p = Path(ref)
    if p.exists():
        return load_semigroup(p)
    name = ref[:-5] if ref.endswith(".json") else ref
    if name in BUILDERS:
        return load_catalog(name)
    raise FileNotFoundError(f"{ref}: no such file and not a catalog name")


def regenerate(directory: Path | None = None) -> list[Path]:
    """Rewrite every catalog file from its builder. Returns the paths."""
    target = CATALOG_DIR if directory is None else directory
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in BUILDERS.items():
        path = target / f"{name}.json"
        save_semigroup(build(), path)
        written.append(path)
    return written
