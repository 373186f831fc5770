"""Finite semigroups, upfamily extension spaces, and commutativity criteria."""

from .upfamily import Upfamily, generate, principal
from .semigroup import (
    FiniteSemigroup,
    from_table,
    make_cyclic,
    make_linear_semilattice,
    make_monogenic,
    make_ordered_union,
    make_product,
    make_v3,
    make_zero_bouquet,
    structure,
)
from .spaces import ExtensionSpace, SpaceKind, enumerate_space, label_lambda4
from .products import (
    CommutativityVerdict,
    ProductKind,
    check_associativity,
    check_closure,
    check_space,
    ellis_product,
    pointwise_product,
)
from .catalog import catalog_names, load_catalog
from .report import AnalysisReport, analyze

__all__ = [
    "Upfamily",
    "generate",
    "principal",
    "FiniteSemigroup",
    "from_table",
    "make_cyclic",
    "make_linear_semilattice",
    "make_monogenic",
    "make_ordered_union",
    "make_product",
    "make_v3",
    "make_zero_bouquet",
    "structure",
    "ExtensionSpace",
    "SpaceKind",
    "enumerate_space",
    "label_lambda4",
    "CommutativityVerdict",
    "ProductKind",
    "check_associativity",
    "check_closure",
    "check_space",
    "ellis_product",
    "pointwise_product",
    "catalog_names",
    "load_catalog",
    "AnalysisReport",
    "analyze",
]
