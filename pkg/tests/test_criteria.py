"""Finite commutativity criteria against brute-force space verdicts."""
from __future__ import annotations

import pytest

from sgx.catalog import load_catalog
from sgx.criteria import (
    DeltaDigraph,
    LAMBDA_COMMUTATIVE_PAIRS,
    LAMBDA_SUPERCOMMUTATIVE_PAIRS,
    NotCommutativeBase,
    NotRegular,
    NotSemicomplete,
    NotSquareLinear,
    bouquet_components,
    classify_monogenic_lambda,
    classify_regular_lambda,
    commutative_semigroup_classes,
    cond_lambda_sextuple,
    cond_lambda_sextuple_chain,
    cond_n2_points,
    cond_upsilon_points,
    cross_check_suite,
    delta_digraph,
    has_bipartite_cycle,
    has_pure_4cycle,
    is_bipartite_cycle,
    is_square_linear,
    lambda_brute_verdicts,
    lambda_candidate_witness,
    sextuple_fails,
    square_linear_properties,
    substitute_sextuple,
    sweep_theorem_equivalences,
)
from sgx.products import ellis_upmask
from sgx.semigroup import (
    from_table,
    make_cyclic,
    make_linear_semilattice,
    make_monogenic,
    make_zero_bouquet,
)
from sgx.spaces import GroundTooLarge

CATALOG_SMALL = [
    "c2", "c3", "c4", "c2xc2", "c2xl2", "l1-c2", "c2-l1", "c2-l2",
    "v3", "l2", "l3", "l4", "m35", "c2c2-ordered", "projection-order3",
]


# -- square-linearity and the product digraph ---------------------------------


def test_square_linear_examples():
    assert is_square_linear(make_linear_semilattice(4)) == (True, None)
    ok, pair = is_square_linear(make_cyclic(3))
    assert not ok and pair == (0, 1)  # e*a = a is neither e^2 nor a^2


def test_square_linear_properties_report():
    rep = square_linear_properties(make_linear_semilattice(4))
    assert rep.all_hold and not rep.counterexamples
    with pytest.raises(NotSquareLinear):
        square_linear_properties(make_cyclic(3))


def test_delta_digraph_of_a_chain():
    d = delta_digraph(make_linear_semilattice(4))
    assert d.is_semicomplete()
    # x*y = x^2 means min(x,y) = x, so edges point up the chain
    for i in range(4):
        for j in range(4):
            assert d.has_edge(i, j) == (i <= j)
    assert has_pure_4cycle(d) is None


def test_non_semicomplete_digraph_rejected():
    d = delta_digraph(load_catalog("c2c2-ordered"))
    assert not d.is_semicomplete()
    with pytest.raises(NotSemicomplete):
        has_pure_4cycle(d)


def _cycle4() -> DeltaDigraph:
    edges = [[False] * 4 for _ in range(4)]
    for i in range(4):
        edges[i][i] = True
        edges[i][(i + 1) % 4] = True
    edges[0][2] = edges[1][3] = True
    return DeltaDigraph(4, tuple(tuple(r) for r in edges))


def test_pure_4cycle_detected_on_synthetic_digraph():
    d = _cycle4()
    assert d.is_semicomplete()
    assert has_pure_4cycle(d) == (0, 1, 2, 3)
    seq = has_bipartite_cycle(d)
    assert seq is not None and is_bipartite_cycle(d, seq)
    assert not is_bipartite_cycle(d, (0, 1))  # too short to alternate


def test_two_sided_edges_block_bipartite_cycles():
    # complete symmetric digraph: every pair two-sided, nothing is pure
    edges = tuple(tuple(True for _ in range(4)) for _ in range(4))
    d = DeltaDigraph(4, edges)
    assert has_pure_4cycle(d) is None
    assert has_bipartite_cycle(d) is None


# -- point conditions -----------------------------------------------------------


def test_quadruple_condition_certificates():
    ok, quad = cond_upsilon_points(load_catalog("m35"))
    assert not ok
    x, y, u, v = quad
    t = load_catalog("m35").table
    assert {t[x][u], t[y][v]}.isdisjoint({t[x][v], t[y][u]})
    assert cond_upsilon_points(make_linear_semilattice(5)) == (True, None)


def test_quintuple_condition_projection_branch():
    assert cond_n2_points(load_catalog("projection-order3"))[0]
    assert cond_n2_points(make_cyclic(2))[0]
    assert not cond_n2_points(load_catalog("m35"))[0]


def test_sextuple_condition_and_chain_form():
    s = load_catalog("c2c2-ordered")
    ok, tup = cond_lambda_sextuple(s)
    assert not ok and sextuple_fails(s, tup)
    ok_c, chain = cond_lambda_sextuple_chain(s)
    assert not ok_c and sextuple_fails(s, substitute_sextuple(chain))
    assert cond_lambda_sextuple(load_catalog("m35")) == (True, None)


def test_conditions_require_commutative_base():
    left_zero = from_table([[0, 0], [1, 1]])
    for cond in (cond_upsilon_points, cond_n2_points, cond_lambda_sextuple):
        with pytest.raises(NotCommutativeBase):
            cond(left_zero)


# -- monogenic classification ---------------------------------------------------


def test_monogenic_pair_lists():
    assert set(LAMBDA_SUPERCOMMUTATIVE_PAIRS) <= set(LAMBDA_COMMUTATIVE_PAIRS)
    assert (3, 5) in LAMBDA_COMMUTATIVE_PAIRS
    assert (3, 5) not in LAMBDA_SUPERCOMMUTATIVE_PAIRS
    assert (2, 6) in LAMBDA_COMMUTATIVE_PAIRS


def test_classify_monogenic_spot_checks():
    assert classify_monogenic_lambda(3, 5) == (True, False)
    assert classify_monogenic_lambda(4, 5) == (True, True)
    assert classify_monogenic_lambda(3, 7) == (False, False)
    assert classify_monogenic_lambda(1, 2) == (True, True)


def test_brute_verdicts_small_orders():
    assert lambda_brute_verdicts(make_monogenic(3, 5)) == (True, False)
    assert lambda_brute_verdicts(make_linear_semilattice(4)) == (True, True)


@pytest.mark.slow
def test_l6_supercommutative_by_full_scan():
    assert lambda_brute_verdicts(load_catalog("l6")) == (True, True)


def test_brute_verdict_order_7_by_witness():
    s = make_monogenic(3, 8)
    assert lambda_brute_verdicts(s) == (False, False)
    a, b = lambda_candidate_witness(s)
    assert ellis_upmask(s, a.upmask(), b.upmask()) != ellis_upmask(
        s, b.upmask(), a.upmask()
    )
    with pytest.raises(GroundTooLarge):
        lambda_brute_verdicts(make_monogenic(1, 9))


def test_candidate_witness_none_on_commutative_extension():
    assert lambda_candidate_witness(make_linear_semilattice(5)) is None
    assert lambda_candidate_witness(load_catalog("c2c2-ordered")) is not None


# -- regular classification ------------------------------------------------------


def test_regular_tags():
    assert classify_regular_lambda(load_catalog("v3"))[2].label() == "V3"
    assert classify_regular_lambda(load_catalog("c2xl2"))[2].label() == "C2xL2"
    assert classify_regular_lambda(load_catalog("l1-c2"))[2].label() == "L1⊔C2"
    assert classify_regular_lambda(load_catalog("c2-l2"))[2].label() == "C2⊔L2"
    assert classify_regular_lambda(load_catalog("l5"))[2].label() == "L5"
    assert classify_regular_lambda(make_cyclic(5))[2].label() == "C5"
    b = make_zero_bouquet([make_linear_semilattice(2), make_linear_semilattice(3)])
    assert classify_regular_lambda(b)[2].label() == "Bouquet[L2 ∨ L3]"


def test_regular_verdict_flags():
    assert classify_regular_lambda(load_catalog("v3"))[:2] == (True, True)
    assert classify_regular_lambda(load_catalog("c2xl2"))[:2] == (True, False)
    assert classify_regular_lambda(make_cyclic(5))[:2] == (False, False)
    assert classify_regular_lambda(load_catalog("c2c2-ordered"))[:2] == (False, False)


def test_classification_guards():
    with pytest.raises(NotRegular):
        classify_regular_lambda(load_catalog("m35"))
    with pytest.raises(NotCommutativeBase):
        classify_regular_lambda(from_table([[0, 0], [1, 1]]))


def test_bouquet_decomposition():
    b = make_zero_bouquet(
        [make_linear_semilattice(2), make_linear_semilattice(2), make_linear_semilattice(3)]
    )
    comps = bouquet_components(b)
    assert comps is not None and sorted(c.order for c in comps) == [2, 2, 3]
    assert bouquet_components(make_cyclic(3)) is None


# -- cross-checks ------------------------------------------------------------------


def test_cross_check_catalog_consistency():
    for name in CATALOG_SMALL:
        rep = cross_check_suite(load_catalog(name))
        assert rep.falsifications == [], (name, rep.falsifications)


def test_cross_check_known_verdict_patterns():
    rep = cross_check_suite(load_catalog("m35"))
    assert rep.verdicts["maximal_linked"] == (True, False)
    assert rep.verdicts["all_upfamilies"] == (False, False)
    rep = cross_check_suite(load_catalog("projection-order3"))
    assert rep.conditions["projection_group"]
    assert not rep.conditions["upsilon_points"]
    assert rep.verdicts["linked"] == (True, True)
    assert rep.verdicts["all_upfamilies"] == (False, False)


def test_class_enumeration_order_3():
    classes = commutative_semigroup_classes(3)
    assert len(classes) == 12


def test_sweep_order_3_clean():
    res = sweep_theorem_equivalences(3)
    assert res.class_count == 12 and res.falsifications == []
