"""Decision procedures for the finitely checkable (super)commutativity criteria.

Everything in this module works on the base semigroup itself: bounded scans
over element tuples (the quadruple / quintuple / sextuple conditions), the
Delta digraph (edge x -> y iff x*y = x*x) with its pure-4-cycle and
bipartite-cycle tests, classification lookups for monogenic and regular
semigroups, and a cross-check suite that replays every verdict by brute
force over the enumerated extension spaces.  Disagreements between a
criterion and the brute-force answer are collected as Falsification records
rather than raised, so sweeps can report all of them at once.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .semigroup import (
    FiniteSemigroup,
    find_zero,
    from_table,
    has_projection_group,
    is_isomorphic,
    is_regular,
    make_cyclic,
    make_linear_semilattice,
    make_monogenic,
    make_ordered_union,
    make_product,
    make_v3,
    structure,
)
from .spaces import GroundTooLarge, SpaceKind, enumerate_space, triangle
from .products import ProductKind, check_space, ellis_upmask
from .upfamily import Upfamily, principal


class NotCommutativeBase(ValueError):
    """Raised when a criterion only meaningful over a commutative base
    semigroup is applied to a non-commutative one."""


class NotRegular(ValueError):
    pass


class NotSquareLinear(ValueError):
    pass


class NotSemicomplete(ValueError):
    pass


# ---------------------------------------------------------------------------
# square-linearity and the Delta digraph


def is_square_linear(s: FiniteSemigroup):
    """xy ∈ {x², y²} for all pairs.  Returns (True, None) or (False, (x, y))
    with the least failing pair."""
    t = s.table
    for x in range(s.order):
        tx = t[x]
        xx = tx[x]
        for y in range(s.order):
            p = tx[y]
            if p != xx and p != t[y][y]:
                return False, (x, y)
    return True, None


@dataclass(frozen=True)
class DeltaDigraph:
    """Digraph with an edge x -> y whenever x*y = x*x.

    For square-linear semigroups this digraph is semicomplete and, together
    with the squaring map, determines the whole multiplication.
    """

    order: int
    edges: tuple[tuple[bool, ...], ...]

    def has_edge(self, x: int, y: int) -> bool:
        return self.edges[x][y]

    def is_pure(self, x: int, y: int) -> bool:
        return self.edges[x][y] and not self.edges[y][x]

    def is_semicomplete(self) -> bool:
        e = self.edges
        return all(e[x][y] or e[y][x] for x in range(self.order) for y in range(self.order))

    def pure_edges(self):
        return [(x, y) for x in range(self.order) for y in range(self.order) if self.is_pure(x, y)]


def delta_digraph(s: FiniteSemigroup) -> DeltaDigraph:
    """Build the Delta digraph of s.  When s is square-linear the digraph is
    checked to be semicomplete and to recover the multiplication via
    xy = x² on edges and y² otherwise."""
    t = s.table
    n = s.order
    edges = tuple(tuple(t[x][y] == t[x][x] for y in range(n)) for x in range(n))
    d = DeltaDigraph(n, edges)
    sl, _ = is_square_linear(s)
    if sl:
        if not d.is_semicomplete():
            raise AssertionError("square-linear semigroup with a non-semicomplete digraph")
        for x in range(n):
            for y in range(n):
                recovered = t[x][x] if edges[x][y] else t[y][y]
                if t[x][y] != recovered:
                    raise AssertionError(f"digraph does not recover the product at ({x},{y})")
    return d


def has_pure_4cycle(d: DeltaDigraph):
    """First 4-tuple (x0,x1,x2,x3) forming a cycle of pure edges, or None.

    Only meaningful on semicomplete digraphs (raises NotSemicomplete
    otherwise).  Vertices of such a cycle are automatically distinct.
    """
    if not d.is_semicomplete():
        raise NotSemicomplete("pure 4-cycle test needs a semicomplete digraph")
    n = d.order
    pure = [[d.is_pure(x, y) for y in range(n)] for x in range(n)]
    for x0 in range(n):
        for x1 in range(n):
            if not pure[x0][x1]:
                continue
            for x2 in range(n):
                if not pure[x1][x2]:
                    continue
                for x3 in range(n):
                    if pure[x2][x3] and pure[x3][x0]:
                        return (x0, x1, x2, x3)
    return None


def is_bipartite_cycle(d: DeltaDigraph, seq) -> bool:
    """Literal definition check: seq = (x0, ..., xn) with x0 = xn, n even and
    positive, every (x_i, x_{i+1}) an edge, and (x_i, x_j) not a two-way edge
    for all i, j in 1..n with odd difference."""
    n = len(seq) - 1
    if n <= 0 or n % 2 or seq[0] != seq[-1]:
        return False
    e = d.edges
    if not all(e[seq[i]][seq[i + 1]] for i in range(n)):
        return False
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i - j) % 2 and e[seq[i]][seq[j]] and e[seq[j]][seq[i]]:
                return False
    return True


def has_bipartite_cycle(d: DeltaDigraph):
    """Search for a bipartite cycle, returned as a vertex sequence
    (x0, ..., xn=x0), or None.

    Uses the two-sided form of the definition: the odd and even positions of
    a bipartite cycle give disjoint vertex sets A, B with no two-way edge
    across, and the cycle is a closed walk in the bipartite digraph of
    crossing edges.  Conversely any directed cycle in such a crossing
    digraph is a bipartite cycle, so it suffices to scan all disjoint (A, B)
    pairs; witnesses have length ≤ 2·order.  Kept deliberately independent
    of has_pure_4cycle — it is the oracle the 4-cycle test is checked
    against.
    """
    if not d.is_semicomplete():
        raise NotSemicomplete("bipartite-cycle test needs a semicomplete digraph")
    n = d.order
    e = d.edges
    sym = [sum(1 << y for y in range(n) if e[x][y] and e[y][x]) for x in range(n)]
    for amask in range(1, 1 << n):
        avail = ((1 << n) - 1) & ~amask
        bmask = avail
        while bmask:
            if all(not (sym[x] & bmask) for x in range(n) if amask >> x & 1):
                cyc = _directed_cycle_across(e, n, amask, bmask)
                if cyc is not None:
                    k = cyc.index(min(cyc))
                    cyc = cyc[k:] + cyc[:k]
                    seq = tuple(cyc) + (cyc[0],)
                    assert is_bipartite_cycle(d, seq)
                    return seq
            bmask = (bmask - 1) & avail
    return None


def _directed_cycle_across(e, n, amask, bmask):
    """First directed cycle using only edges between the two vertex masks."""
    members = [x for x in range(n) if (amask | bmask) >> x & 1]
    succ = {}
    for u in members:
        other = bmask if amask >> u & 1 else amask
        succ[u] = [v for v in members if (other >> v & 1) and e[u][v]]
    color = {u: 0 for u in members}  # 0 white, 1 on stack, 2 done
    stack: list[int] = []

    def dfs(u):
        color[u] = 1
        stack.append(u)
        for v in succ[u]:
            if color[v] == 1:
                return stack[stack.index(v):]
            if color[v] == 0:
                got = dfs(v)
                if got is not None:
                    return got
        color[u] = 2
        stack.pop()
        return None

    for u in members:
        if color[u] == 0:
            found = dfs(u)
            if found is not None:
                return found
    return None


# ---------------------------------------------------------------------------
# point conditions


def _require_commutative(s: FiniteSemigroup, what: str):
    if not s.is_commutative():
        raise NotCommutativeBase(f"{what} is only meaningful over a commutative semigroup")


def cond_upsilon_points(s: FiniteSemigroup):
    """{xu, yv} meets {xv, yu} for all x, y, u, v.  Returns (True, None) or
    (False, (x, y, u, v)) with the least failing quadruple."""
    _require_commutative(s, "the quadruple condition")
    t = s.table
    r = range(s.order)
    for x in r:
        tx = t[x]
        for y in r:
            ty = t[y]
            for u in r:
                xu = tx[u]
                yu = ty[u]
                for v in r:
                    xv = tx[v]
                    yv = ty[v]
                    if xu != xv and xu != yu and yv != xv and yv != yu:
                        return False, (x, y, u, v)
    return True, None


def cond_n2_points(s: FiniteSemigroup):
    """{xu, yv} meets {xv, yu, xw, yw} for all x, y, u, v, w.  Returns
    (True, None) or (False, (x, y, u, v, w))."""
    _require_commutative(s, "the quintuple condition")
    t = s.table
    r = range(s.order)
    for x in r:
        tx = t[x]
        for y in r:
            ty = t[y]
            for u in r:
                xu = tx[u]
                yu = ty[u]
                for v in r:
                    xv = tx[v]
                    yv = ty[v]
                    if not (xu != xv and xu != yu and yv != xv and yv != yu):
                        continue
                    for w in r:
                        xw = tx[w]
                        yw = ty[w]
                        if xu != xw and xu != yw and yv != xw and yv != yw:
                            return False, (x, y, u, v, w)
    return True, None


def cond_lambda_sextuple(s: FiniteSemigroup):
    """{ax, ay, cy, cz} meets {xc, xb, za, zb} for all a, b, c, x, y, z.

    Returns (True, None) or (False, (a, b, c, x, y, z)).  The equivalent
    single-chain form (see cond_lambda_sextuple_chain) is evaluated as well
    and both scans must agree.
    """
    _require_commutative(s, "the sextuple condition")
    t = s.table
    r = range(s.order)
    result = True, None
    for a in r:
        ta = t[a]
        for b in r:
            tb = t[b]
            for c in r:
                tc = t[c]
                for x in r:
                    ax = ta[x]
                    xc = tc[x]
                    xb = tb[x]
                    for y in r:
                        ay = ta[y]
                        cy = tc[y]
                        for z in r:
                            left = {ax, ay, cy, tc[z]}
                            if xc in left or xb in left or ta[z] in left or tb[z] in left:
                                continue
                            result = False, (a, b, c, x, y, z)
                            break
                        if not result[0]:
                            break
                    if not result[0]:
                        break
                if not result[0]:
                    break
            if not result[0]:
                break
        if not result[0]:
            break
    alt_ok, _ = cond_lambda_sextuple_chain(s)
    if alt_ok != result[0]:
        raise AssertionError("the two sextuple scans disagree")
    return result


def cond_lambda_sextuple_chain(s: FiniteSemigroup):
    """Chain form of the sextuple condition: {x1x2, x2x3, x3x4, x4x5} meets
    {x1x4, x2x5, x0x1, x0x5} for all x0..x5."""
    _require_commutative(s, "the sextuple condition")
    t = s.table
    r = range(s.order)
    for x0 in r:
        t0 = t[x0]
        for x1 in r:
            t1 = t[x1]
            x01 = t0[x1]
            for x2 in r:
                t2 = t[x2]
                x12 = t1[x2]
                for x3 in r:
                    x23 = t2[x3]
                    t3 = t[x3]
                    for x4 in r:
                        x34 = t3[x4]
                        x14 = t1[x4]
                        t4 = t[x4]
                        for x5 in r:
                            left = {x12, x23, x34, t4[x5]}
                            if x14 in left or t2[x5] in left or x01 in left or t0[x5] in left:
                                continue
                            return False, (x0, x1, x2, x3, x4, x5)
    return True, None


def substitute_sextuple(chain_tuple):
    """Map a failing chain-form tuple (x0..x5) to the equivalent
    (a, b, c, x, y, z) of cond_lambda_sextuple: a=x2, b=x0, c=x4, x=x1,
    y=x3, z=x5."""
    x0, x1, x2, x3, x4, x5 = chain_tuple
    return (x2, x0, x4, x1, x3, x5)


def sextuple_fails(s: FiniteSemigroup, tup) -> bool:
    """True when the (a,b,c,x,y,z) tuple violates the sextuple condition."""
    a, b, c, x, y, z = tup
    t = s.table
    left = {t[a][x], t[a][y], t[c][y], t[c][z]}
    right = {t[x][c], t[x][b], t[z][a], t[z][b]}
    return not (left & right)


# ---------------------------------------------------------------------------
# classification lookups

# pairs (n, m) with x^n = x^m whose monogenic semigroup has a commutative
# maximal-linked extension; the shorter list is the supercommutative one.
LAMBDA_COMMUTATIVE_PAIRS = (
    (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4),
    (1, 5), (2, 5), (3, 5), (4, 5), (2, 6),
)
LAMBDA_SUPERCOMMUTATIVE_PAIRS = ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5))


def classify_monogenic_lambda(n: int, m: int):
    """(commutative, supercommutative) verdicts for the maximal-linked
    extension of the monogenic semigroup with x^n = x^m.

    Lookup is up to isomorphism: some defining pairs describe the same
    abstract semigroup, so we compare semigroups, not exponent arithmetic.
    """
    if not (1 <= n < m):
        raise ValueError("need 1 <= n < m")
    s = make_monogenic(n, m)
    comm = any(is_isomorphic(s, make_monogenic(a, b)) is not None
               for a, b in LAMBDA_COMMUTATIVE_PAIRS)
    supercomm = any(is_isomorphic(s, make_monogenic(a, b)) is not None
                    for a, b in LAMBDA_SUPERCOMMUTATIVE_PAIRS)
    return comm, supercomm


@dataclass(frozen=True)
class ClassificationTag:
    """Isomorphism-class tag for commutative regular semigroups.

    family is one of Cn, Ln, V3, C2xC2, C2xL2, L1⊔C2, C2⊔Ln, Bouquet, Other.
    parameters holds n for the parametric families; for Bouquet it holds one
    code per component: k for a k-element chain, 0 for the three-element
    zero + 2-group component (L1⊔C2).
    """

    family: str
    parameters: tuple[int, ...] = ()

    def label(self) -> str:
        if self.family == "Cn":
            return f"C{self.parameters[0]}"
        if self.family == "Ln":
            return f"L{self.parameters[0]}"
        if self.family == "C2⊔Ln":
            return f"C2⊔L{self.parameters[0]}"
        if self.family == "Bouquet":
            parts = ["L1⊔C2" if k == 0 else f"L{k}" for k in self.parameters]
            return "Bouquet[" + " ∨ ".join(parts) + "]"
        return self.family


def _restrict(s: FiniteSemigroup, elems) -> FiniteSemigroup:
    """Subsemigroup on the given (closed) element set, renumbered."""
    elems = sorted(elems)
    idx = {e: i for i, e in enumerate(elems)}
    table = [[idx[s.mul(a, b)] for b in elems] for a in elems]
    return from_table(table, names=tuple(s.names[e] for e in elems))


def bouquet_components(s: FiniteSemigroup):
    """Decompose s as a shared-zero union of subsemigroups, any two of which
    multiply into the zero.  Non-zero elements are grouped by the transitive
    closure of "x*y is not the zero"; each group plus the zero must then be
    closed.  Returns the component subsemigroups or None."""
    z = find_zero(s)
    if z is None or s.order < 2:
        return None
    rest = [x for x in range(s.order) if x != z]
    parent = list(range(s.order))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in rest:
        for y in rest:
            if s.mul(x, y) != z:
                parent[root(x)] = root(y)
    groups: dict[int, list[int]] = {}
    for x in rest:
        groups.setdefault(root(x), []).append(x)
    comps = []
    for members in sorted(groups.values()):
        elems = set(members) | {z}
        if any(s.mul(a, b) not in elems for a in elems for b in elems):
            return None
        comps.append(_restrict(s, elems))
    return comps


def _tag_regular(s: FiniteSemigroup) -> ClassificationTag:
    n = s.order
    if is_isomorphic(s, make_linear_semilattice(n)) is not None:
        return ClassificationTag("Ln", (n,))
    if is_isomorphic(s, make_cyclic(n)) is not None:
        return ClassificationTag("Cn", (n,))
    if n == 3 and is_isomorphic(s, make_v3()) is not None:
        return ClassificationTag("V3")
    if n == 4:
        c2 = make_cyclic(2)
        if is_isomorphic(s, make_product(c2, c2)) is not None:
            return ClassificationTag("C2xC2")
        if is_isomorphic(s, make_product(c2, make_linear_semilattice(2))) is not None:
            return ClassificationTag("C2xL2")
    if n == 3 and is_isomorphic(
            s, make_ordered_union(make_linear_semilattice(1), make_cyclic(2))) is not None:
        return ClassificationTag("L1⊔C2")
    if n >= 3 and is_isomorphic(
            s, make_ordered_union(make_cyclic(2), make_linear_semilattice(n - 2))) is not None:
        return ClassificationTag("C2⊔Ln", (n - 2,))
    comps = bouquet_components(s)
    if comps is not None and len(comps) >= 2:
        codes = []
        for c in comps:
            if is_isomorphic(c, make_linear_semilattice(c.order)) is not None:
                codes.append(c.order)
            elif c.order == 3 and is_isomorphic(
                    c, make_ordered_union(make_linear_semilattice(1), make_cyclic(2))) is not None:
                codes.append(0)
            else:
                return ClassificationTag("Other")
        return ClassificationTag("Bouquet", tuple(sorted(codes)))
    return ClassificationTag("Other")


def classify_regular_lambda(s: FiniteSemigroup):
    """(commutative, supercommutative, tag) for the maximal-linked extension
    of a commutative regular semigroup, via the classification lookups."""
    if not s.is_commutative():
        raise NotCommutativeBase("regular classification assumes a commutative semigroup")
    if not is_regular(s):
        raise NotRegular("classification only covers regular semigroups")
    tag = _tag_regular(s)
    if tag.family == "Cn":
        comm = tag.parameters[0] <= 4
        supercomm = tag.parameters[0] <= 2
    elif tag.family in ("Ln", "V3", "L1⊔C2"):
        comm = supercomm = True
    elif tag.family in ("C2xC2", "C2xL2", "C2⊔Ln", "Bouquet"):
        comm, supercomm = True, False
    else:
        comm = supercomm = False
    return comm, supercomm, tag


# ---------------------------------------------------------------------------
# square-linear structure report


@dataclass(frozen=True)
class SquareLinearReport:
    """Pointwise checks of the structural facts that hold in every
    square-linear commutative semigroup.  counterexamples maps the name of
    a failed item to its first failing tuple."""

    cube_stabilizes: bool            # x^3 = x^4 and x^3 idempotent
    idempotents_linear: bool         # ef in {e, f} on idempotents
    clifford_equals_idempotents: bool
    squared_pairs_project: bool      # xy = e_x e_y when x^2, y^2 idempotent
    triples_project: bool            # xyz = e_x e_y e_z
    nonidempotent_square_top: bool   # x^2 not idempotent => e_x is the top idempotent
    counterexamples: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return not self.counterexamples


def square_linear_properties(s: FiniteSemigroup) -> SquareLinearReport:
    _require_commutative(s, "the square-linear structure report")
    sl, pair = is_square_linear(s)
    if not sl:
        raise NotSquareLinear(f"not square-linear, witness pair {pair}")
    t = s.table
    n = s.order
    info = structure(s)
    idem = set(info.idempotents)
    e_of = info.idempotent_of
    bad: dict[str, tuple] = {}

    for x in range(n):
        x3 = s.power(x, 3)
        if not (x3 == s.power(x, 4) and t[x3][x3] == x3 and x3 == e_of[x]):
            bad.setdefault("cube_stabilizes", (x,))
    for e in idem:
        for f in idem:
            if t[e][f] not in (e, f):
                bad.setdefault("idempotents_linear", (e, f))
    if set(info.clifford) != idem:
        bad.setdefault("clifford_equals_idempotents", ())
    for x in range(n):
        if t[x][x] not in idem:
            continue
        for y in range(n):
            if t[y][y] in idem and t[x][y] != t[e_of[x]][e_of[y]]:
                bad.setdefault("squared_pairs_project", (x, y))
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            exy = t[e_of[x]][e_of[y]]
            for z in range(n):
                if t[xy][z] != t[exy][e_of[z]]:
                    bad.setdefault("triples_project", (x, y, z))
    for x in range(n):
        if t[x][x] in idem:
            continue
        ex = e_of[x]
        for f in idem:
            if t[f][ex] != f:
                bad.setdefault("nonidempotent_square_top", (x, f))
    return SquareLinearReport(
        cube_stabilizes="cube_stabilizes" not in bad,
        idempotents_linear="idempotents_linear" not in bad,
        clifford_equals_idempotents="clifford_equals_idempotents" not in bad,
        squared_pairs_project="squared_pairs_project" not in bad,
        triples_project="triples_project" not in bad,
        nonidempotent_square_top="nonidempotent_square_top" not in bad,
        counterexamples=bad,
    )


# ---------------------------------------------------------------------------
# brute-force lambda verdicts (incl. ground 7 via small-support witnesses)


def lambda_candidate_witness(s: FiniteSemigroup):
    """Look for a non-commuting pair of maximal-linked upfamilies among the
    members supported on at most three points: the principal ones and the
    2-of-3 triangles.  Any mismatch found here is verified directly against
    the Ellis product, so a hit certifies non-commutativity without
    enumerating the full space."""
    n = s.order
    cands = [principal(n, x) for x in range(n)]
    cands += [triangle(n, c) for c in itertools.combinations(range(n), 3)]
    ums = [f.upmask() for f in cands]
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            ab = ellis_upmask(s, ums[i], ums[j])
            ba = ellis_upmask(s, ums[j], ums[i])
            if ab != ba:
                return cands[i], cands[j]
    return None


def lambda_brute_verdicts(s: FiniteSemigroup):
    """(commutative, supercommutative) of the maximal-linked extension by
    brute force.  Full pair scans up to order 6; at order 7 the pair scan is
    out of reach, so only a negative answer — certified by a small-support
    witness pair — is available."""
    n = s.order
    if n <= 6:
        v = check_space(s, enumerate_space(SpaceKind.MAXIMAL_LINKED, n))
        return v.commutative, v.supercommutative
    if n == 7:
        if lambda_candidate_witness(s) is not None:
            return False, False
        raise GroundTooLarge(SpaceKind.MAXIMAL_LINKED, n)
    raise GroundTooLarge(SpaceKind.MAXIMAL_LINKED, n)


# ---------------------------------------------------------------------------
# cross-check suite and table sweeps


@dataclass(frozen=True)
class Falsification:
    table: str     # candidate encoding, e.g. "3:001011122"
    chain: str     # which equivalence chain broke
    detail: str


@dataclass
class CrossCheckReport:
    semigroup: FiniteSemigroup
    conditions: dict
    verdicts: dict
    falsifications: list[Falsification]

    @property
    def ok(self) -> bool:
        return not self.falsifications


def table_encoding(s: FiniteSemigroup) -> str:
    return f"{s.order}:" + "".join(str(v) for row in s.table for v in row)


_SUITE_SPACES = (
    ("filters", SpaceKind.FILTERS),
    ("linked", SpaceKind.LINKED),
    ("maximal_linked", SpaceKind.MAXIMAL_LINKED),
    ("all_upfamilies", SpaceKind.ALL_UPFAMILIES),
)


def cross_check_suite(s: FiniteSemigroup) -> CrossCheckReport:
    """Evaluate every finite criterion on s and replay each verdict by brute
    force over the enumerated spaces, recording disagreements.

    The three chains checked, each of which must be internally constant:
      all_upfamilies:  quadruple condition == (square-linear and no pure
                       4-cycle) == brute commutativity == brute supercommutativity
      linked:          quintuple condition == (that branch or a projection
                       2-group) == brute commutativity == brute supercommutativity
      maximal_linked:  sextuple condition == brute commutativity
    plus, for filters, brute commutativity == brute supercommutativity.
    """
    _require_commutative(s, "the cross-check suite")
    enc = table_encoding(s)
    sl, _ = is_square_linear(s)
    no_cycle = sl and has_pure_4cycle(delta_digraph(s)) is None
    proj = has_projection_group(s) is not None
    ups_ok, _ = cond_upsilon_points(s)
    n2_ok, _ = cond_n2_points(s)
    lam_ok, _ = cond_lambda_sextuple(s)
    conditions = {
        "square_linear": sl,
        "square_linear_no_pure_4cycle": no_cycle,
        "projection_group": proj,
        "upsilon_points": ups_ok,
        "n2_points": n2_ok,
        "lambda_sextuple": lam_ok,
    }
    verdicts = {}
    for key, kind in _SUITE_SPACES:
        v = check_space(s, enumerate_space(kind, s.order))
        verdicts[key] = (v.commutative, v.supercommutative)
    records = []

    def expect(chain, values):
        if len(set(values)) > 1:
            records.append(Falsification(enc, chain, repr(values)))

    expect("all_upfamilies", (ups_ok, no_cycle) + verdicts["all_upfamilies"])
    expect("linked", (n2_ok, no_cycle or proj) + verdicts["linked"])
    expect("maximal_linked", (lam_ok, verdicts["maximal_linked"][0]))
    expect("filters", verdicts["filters"])
    return CrossCheckReport(s, conditions, verdicts, records)


def _assoc_symmetric_tables(n):
    """All commutative associative Cayley tables of order n, as a numpy
    array, built from the n(n+1)/2 free upper-triangle entries and filtered
    by a vectorized associativity check."""
    import numpy as np

    pos = [(i, j) for i in range(n) for j in range(i, n)]
    count = n ** len(pos)
    codes = np.arange(count, dtype=np.int64)
    tabs = np.zeros((count, n, n), dtype=np.int8)
    for t, (i, j) in enumerate(pos):
        digit = ((codes // (n ** t)) % n).astype(np.int8)
        tabs[:, i, j] = digit
        tabs[:, j, i] = digit
    ok = np.ones(count, dtype=bool)
    ar = np.arange(count)
    for i in range(n):
        for j in range(n):
            ij = tabs[:, i, j].astype(np.int64)
            for k in range(n):
                ok &= tabs[ar, ij, k] == tabs[ar, i, tabs[:, j, k].astype(np.int64)]
    return tabs[ok]


def _canonical_table(table, perms):
    n = len(table)
    best = None
    for p in perms:
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        flat = tuple(inv[table[p[i]][p[j]]] for i in range(n) for j in range(n))
        if best is None or flat < best:
            best = flat
    return best


def commutative_semigroup_classes(n: int) -> list[FiniteSemigroup]:
    """Every commutative semigroup of order n, one representative per
    isomorphism class, sorted by canonical table encoding."""
    tabs = _assoc_symmetric_tables(n)
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for row in tabs:
        t = row.tolist()
        seen.add(_canonical_table(t, perms))
    reps = []
    for flat in sorted(seen):
        table = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        reps.append(from_table(table))
    return reps


def _suite_records(s: FiniteSemigroup) -> list[Falsification]:
    return cross_check_suite(s).falsifications


@dataclass
class SweepResult:
    order: int
    class_count: int
    falsifications: list[Falsification]

    @property
    def ok(self) -> bool:
        return not self.falsifications


def sweep_theorem_equivalences(order: int, max_workers: Optional[int] = None) -> SweepResult:
    """Run the cross-check suite over every commutative semigroup class of
    the given order.  Records come back sorted by candidate encoding because
    the class list itself is."""
    classes = commutative_semigroup_classes(order)
    records: list[Falsification] = []
    if max_workers and max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as ex:
            for recs in ex.map(_suite_records, classes, chunksize=4):
                records.extend(recs)
    else:
        for s in classes:
            records.extend(_suite_records(s))
    return SweepResult(order, len(classes), records)
