"""Canonical forms, transversals, and the class predicates on upfamilies."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgx.upfamily import (
    Upfamily,
    generate,
    mask_of,
    minimize,
    principal,
    set_of,
    supersets_of,
)


def brute_transversal(f: Upfamily) -> Upfamily:
    """Scan all subsets for the hitting ones, then minimize.  Independent of
    the product-and-minimize implementation."""
    n = f.ground_size
    members = f.member_sets()
    hits = [t for t in range(1, 1 << n) if all(t & m for m in members)]
    return Upfamily(n, minimize(hits))


@st.composite
def upfamilies(draw, max_ground=6):
    n = draw(st.integers(1, max_ground))
    full = (1 << n) - 1
    masks = draw(st.lists(st.integers(1, full), min_size=1, max_size=5))
    return Upfamily(n, minimize(masks))


# -- construction and canonical form ----------------------------------------


def test_generate_collapses_to_minimal_antichain():
    f = generate(3, [[0], [0, 1], [0, 2], [1, 2]])
    assert f.minimal_sets == (0b001, 0b110)


def test_minimal_sets_sorted_ascending():
    f = generate(4, [[2, 3], [0, 1], [1, 2]])
    assert list(f.minimal_sets) == sorted(f.minimal_sets)


def test_rejects_empty_family_and_empty_member():
    with pytest.raises(ValueError):
        Upfamily(3, ())
    with pytest.raises(ValueError):
        Upfamily(3, (0,))
    with pytest.raises(ValueError):
        generate(3, [])


def test_rejects_non_antichain_and_outside_ground():
    with pytest.raises(ValueError):
        Upfamily(3, (0b001, 0b011))  # {0} ⊂ {0,1}
    with pytest.raises(ValueError):
        Upfamily(2, (0b100,))
    with pytest.raises(ValueError):
        generate(2, [[0, 5]])


def test_mask_set_roundtrip():
    assert set_of(mask_of([0, 2, 5], 6)) == (0, 2, 5)
    assert list(supersets_of(0b101, 3)) == [0b111, 0b101]


# -- membership ---------------------------------------------------------------


def test_contains_members_and_supersets_only():
    f = generate(3, [[0, 1]])
    assert f.contains([0, 1]) and f.contains([0, 1, 2])
    assert not f.contains([0]) and not f.contains([0, 2])


def test_member_sets_is_upward_closure():
    f = generate(3, [[0], [1, 2]])
    got = set(f.member_sets())
    want = {m for m in range(1, 8) if (m & 0b001) == 0b001 or (m & 0b110) == 0b110}
    assert got == want


# -- class predicates ---------------------------------------------------------


def test_principal_is_ultrafilter():
    f = principal(4, 2)
    assert f.is_filter() and f.is_ultrafilter() and f.is_linked()
    assert f.is_maximal_linked()


def test_filter_iff_intersection_closed():
    # oracle: the full member list is closed under pairwise intersection
    for n in (2, 3):
        full = (1 << n) - 1
        seen = set()
        for m1 in range(1, full + 1):
            for m2 in range(m1, full + 1):
                f = Upfamily(n, minimize([m1, m2]))
                if f in seen:
                    continue
                seen.add(f)
                members = set(f.member_sets())
                closed = all(
                    (a & b) in members or (a & b) == 0
                    for a in members
                    for b in members
                ) and all(a & b for a in members for b in members)
                assert f.is_filter() == closed, f


def test_linked_matches_pairwise_intersection_of_members():
    f = generate(4, [[0, 1], [1, 2], [0, 2]])
    assert f.is_linked()
    g = generate(4, [[0, 1], [2, 3]])
    assert not g.is_linked()


def test_maximal_linked_examples():
    tri = generate(3, [[0, 1], [0, 2], [1, 2]])
    assert tri.is_maximal_linked()
    wedge = generate(3, [[0, 1], [0, 2]])
    assert wedge.is_linked() and not wedge.is_maximal_linked()


def test_maximal_linked_iff_no_linked_extension():
    # definitional maximality on small grounds: no single extra set keeps it
    # linked; equality with the transversal fixed-point test
    for n in (2, 3):
        full = (1 << n) - 1
        import itertools

        fams = set()
        for r in (1, 2, 3):
            for combo in itertools.combinations(range(1, full + 1), r):
                fams.add(Upfamily(n, minimize(combo)))
        for f in fams:
            members = set(f.member_sets())
            extendable = any(
                c not in members and all(c & m for m in members)
                for c in range(1, full + 1)
            )
            brute = f.is_linked() and not extendable
            assert f.is_maximal_linked() == brute, f


# -- transversal ---------------------------------------------------------------


def test_transversal_small_examples():
    f = generate(3, [[0, 1]])
    assert f.transversal().minimal_sets == (0b001, 0b010)
    tri = generate(3, [[0, 1], [0, 2], [1, 2]])
    assert tri.transversal() == tri


@settings(max_examples=300)
@given(upfamilies())
def test_transversal_matches_brute_force(f):
    assert f.transversal() == brute_transversal(f)


@settings(max_examples=300)
@given(upfamilies())
def test_transversal_is_an_involution(f):
    assert f.transversal().transversal() == f


@settings(max_examples=300)
@given(upfamilies())
def test_linked_iff_contained_in_transversal(f):
    sub = f.upmask() & ~f.transversal().upmask() == 0
    assert f.is_linked() == sub


# -- upmask encoding ------------------------------------------------------------


@settings(max_examples=300)
@given(upfamilies())
def test_upmask_roundtrip(f):
    assert Upfamily.from_upmask(f.ground_size, f.upmask()) == f


@settings(max_examples=200)
@given(upfamilies(max_ground=5))
def test_upmask_bits_are_members(f):
    um = f.upmask()
    for c in range(1, 1 << f.ground_size):
        assert ((um >> c) & 1) == int(f.contains(c))


# -- pushforward ----------------------------------------------------------------


@settings(max_examples=200)
@given(upfamilies(max_ground=5), st.data())
def test_pushforward_matches_preimage_description(f, data):
    n = f.ground_size
    m = data.draw(st.integers(1, 5))
    fn = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    g = f.pushforward(fn, m)
    for a in range(1, 1 << m):
        pre = mask_of([x for x in range(n) if (a >> fn[x]) & 1], n)
        assert g.contains(a) == (pre != 0 and f.contains(pre))


def test_pushforward_rejects_partial_maps():
    f = principal(3, 0)
    with pytest.raises(ValueError):
        f.pushforward([0, 1], 2)
    with pytest.raises(ValueError):
        f.pushforward([0, 1, 5], 2)


# -- rendering -------------------------------------------------------------------


def test_render_and_machine_form():
    f = generate(3, [[0, 1], [2]])
    assert f.render() == "⟨{0,1},{2}⟩"
    assert f.render(["a", "b", "c"]) == "⟨{a,b},{c}⟩"
    assert f.machine_form() == [[0, 1], [2]]
