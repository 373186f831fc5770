"""The two extension products on upfamilies and space-level verdicts.

pointwise:  A ⊛ B = ⟨ A0·B0 : A0 ∈ A, B0 ∈ B ⟩
Ellis:      A * B = ⟨ ⋃_{a ∈ A0} a·B_a : A0 ∈ A, each B_a ∈ B ⟩

Both are generated from minimal sets only; any member-level choice contains
a minimal-level choice, so the generated upfamily is the same (tested against
an expansion oracle).  The subset-indexed fast forms used for bulk checks:

  C ∈ A * B  ⟺  {a : {y : a·y ∈ C} ∈ B} ∈ A
  C ∈ A ⊛ B  ⟺  some B0 ∈ B has {a : a·B0 ⊆ C} ∈ A

are cross-validated against the definitions in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product as iproduct

from .semigroup import FiniteSemigroup
from .spaces import ExtensionSpace
from .upfamily import Upfamily, minimize, set_of


class GroundMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class ProductKind(Enum):
    POINTWISE = "pointwise"
    ELLIS = "ellis"


def _check_grounds(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> None:
    if a.ground_size != s.order or b.ground_size != s.order:
        raise GroundMismatch(
            f"upfamilies on {a.ground_size}/{b.ground_size} elements, semigroup of order {s.order}"
        )


def pointwise_product(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> Upfamily:
    _check_grounds(s, a, b)
    prods = {
        s.set_product(am, bm) for am in a.minimal_sets for bm in b.minimal_sets
    }
    return Upfamily(s.order, minimize(prods))


def ellis_product(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> Upfamily:
    """Union-of-choices product, iterating choice functions over minimal sets."""
    _check_grounds(s, a, b)
    bmins = b.minimal_sets
    rows = {
        x: tuple(s.set_product(1 << x, bm) for bm in bmins)
        for am in a.minimal_sets
        for x in set_of(am)
    }
    out = set()
    for am in a.minimal_sets:
        elems = set_of(am)
        if len(bmins) ** len(elems) > 200_000:
            # same value through the subset-indexed form; the choice space
            # is too wide to walk literally
            return _ellis_via_upmask(s, a, b)
        for choice in iproduct(range(len(bmins)), repeat=len(elems)):
            u = 0
            for x, ci in zip(elems, choice):
                u |= rows[x][ci]
            out.add(u)
    return Upfamily(s.order, minimize(out))


# -- subset-indexed fast forms -------------------------------------------------


@lru_cache(maxsize=64)
def preimage_table(s: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    """pre[a][C] = mask {y : a·y ∈ C}, for every element a and subset C."""
    n = s.order
    size = 1 << n
    out = []
    for a in range(n):
        row = s.table[a]
        cur = [0] * size
        for c in range(size):
            m = 0
            for y in range(n):
                if (c >> row[y]) & 1:
                    m |= 1 << y
            cur[c] = m
        out.append(tuple(cur))
    return tuple(out)


def ellis_upmask(s: FiniteSemigroup, aum: int, bum: int) -> int:
    """Ellis product on membership bitmaps over all 2^n subsets."""
    n = s.order
    pre = preimage_table(s)
    out = 0
    for c in range(1, 1 << n):
        t = 0
        for a in range(n):
            if (bum >> pre[a][c]) & 1:
                t |= 1 << a
        if (aum >> t) & 1:
            out |= 1 << c
    return out


def _ellis_via_upmask(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> Upfamily:
    return Upfamily.from_upmask(s.order, ellis_upmask(s, a.upmask(), b.upmask()))


# -- verdicts ------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    a: Upfamily
    b: Upfamily
    left: str
    right: str
    left_value: Upfamily
    right_value: Upfamily
    separating_set: int

    def render(self, names=None) -> str:
        sep = Upfamily(self.a.ground_size, (self.separating_set,)).render(names)
        sep = sep[1:-1]  # just the {..} part
        return (
            f"A={self.a.render(names)} B={self.b.render(names)}: "
            f"{self.left} ≠ {self.right}, separated by {sep}"
        )


@dataclass(frozen=True)
class CommutativityVerdict:
    commutative: bool
    supercommutative: bool
    witness: Witness | None

    def __post_init__(self):
        if self.supercommutative and not self.commutative:
            raise ValueError("supercommutative implies commutative")
        if (self.witness is None) != (self.commutative and self.supercommutative):
            raise ValueError("witness present iff some verdict is false")


_CHAIN_ELLIS = ("A*B", "A⊛B", "B⊛A", "B*A")
_CHAIN_PW = ("A⊛B", "A*B", "B*A", "B⊛A")  # same chain entered from the ⊛ side


def _first_diff_bit(x: int, y: int) -> int:
    d = x ^ y
    return (d & -d).bit_length() - 1


def check_space(
    s: FiniteSemigroup, space: ExtensionSpace, kind: ProductKind = ProductKind.ELLIS
) -> CommutativityVerdict:
    """Commutativity and supercommutativity of a whole space, with witness.

    commutative: the chosen product agrees both ways on every pair.
    supercommutative: A*B = A⊛B = B⊛A = B*A on every pair (diagonal included,
    where the two products themselves must agree).
    The witness is the lexicographically least failing pair in canonical
    member order, with the least separating subset.
    """
    if space.ground_size != s.order:
        raise GroundMismatch("space and semigroup ground sizes differ")
    members = space.members
    n_mem = len(members)
    use_fast_engine = n_mem >= 120 and s.order <= 6
    if use_fast_engine:
        from . import fastspace

        comm_pair, super_pair = fastspace.space_mismatch_pairs(s, space, kind)
    else:
        comm_pair, super_pair = _mismatch_pairs_pure(s, space, kind)

    if comm_pair is None and super_pair is None:
        return CommutativityVerdict(True, True, None)
    if comm_pair is not None:
        i, j = comm_pair
        witness = _build_witness(s, members[i], members[j], kind, comm_only=True)
        return CommutativityVerdict(False, False, witness)
    i, j = super_pair
    witness = _build_witness(s, members[i], members[j], kind, comm_only=False)
    return CommutativityVerdict(True, False, witness)


def _mismatch_pairs_pure(
    s: FiniteSemigroup, space: ExtensionSpace, kind: ProductKind
) -> tuple[tuple[int, int] | None, tuple[int, int] | None]:
    members = space.members
    ums = [m.upmask() for m in members]
    n_mem = len(members)

    ell: dict[tuple[int, int], int] = {}
    pw: dict[tuple[int, int], int] = {}

    def get_e(i: int, j: int) -> int:
        v = ell.get((i, j))
        if v is None:
            v = ellis_upmask(s, ums[i], ums[j])
            ell[(i, j)] = v
        return v

    def get_p(i: int, j: int) -> int:
        v = pw.get((i, j))
        if v is None:
            v = pointwise_product(s, members[i], members[j]).upmask()
            pw[(i, j)] = v
        return v

    comm_pair = None
    super_pair = None
    for i in range(n_mem):
        for j in range(i, n_mem):
            if comm_pair is None and i != j:
                if kind is ProductKind.ELLIS:
                    if get_e(i, j) != get_e(j, i):
                        comm_pair = (i, j)
                else:
                    if get_p(i, j) != get_p(j, i):
                        comm_pair = (i, j)
            if super_pair is None:
                chain = (get_e(i, j), get_p(i, j), get_p(j, i), get_e(j, i))
                if any(chain[k] != chain[k + 1] for k in range(3)):
                    super_pair = (i, j)
            if comm_pair is not None and super_pair is not None:
                return comm_pair, super_pair
    return comm_pair, super_pair


def _build_witness(
    s: FiniteSemigroup, a: Upfamily, b: Upfamily, kind: ProductKind, comm_only: bool
) -> Witness:
    e_ab = ellis_upmask(s, a.upmask(), b.upmask())
    e_ba = ellis_upmask(s, b.upmask(), a.upmask())
    p_ab = pointwise_product(s, a, b).upmask()
    p_ba = pointwise_product(s, b, a).upmask()
    if comm_only:
        values = (
            (e_ab, e_ba, "A*B", "B*A")
            if kind is ProductKind.ELLIS
            else (p_ab, p_ba, "A⊛B", "B⊛A")
        )
        lv, rv, ln, rn = values
    else:
        chain_vals = (e_ab, p_ab, p_ba, e_ba)
        names = _CHAIN_ELLIS
        for k in range(3):
            if chain_vals[k] != chain_vals[k + 1]:
                lv, rv, ln, rn = chain_vals[k], chain_vals[k + 1], names[k], names[k + 1]
                break
        else:  # pragma: no cover - guarded by caller
            raise AssertionError("no difference found while building witness")
    # upmask bit positions are subset encodings, so the first differing bit
    # is itself the mask of the least separating subset
    sep = _first_diff_bit(lv, rv)
    return Witness(
        a,
        b,
        ln,
        rn,
        Upfamily.from_upmask(s.order, lv),
        Upfamily.from_upmask(s.order, rv),
        sep,
    )


def product_of(
    s: FiniteSemigroup, a: Upfamily, b: Upfamily, kind: ProductKind
) -> Upfamily:
    if kind is ProductKind.ELLIS:
        return ellis_product(s, a, b)
    return pointwise_product(s, a, b)


def check_closure(
    s: FiniteSemigroup,
    space: ExtensionSpace,
    kind: ProductKind = ProductKind.ELLIS,
    pair_budget: int = 2_000_000,
) -> tuple[bool, tuple[Upfamily, Upfamily, Upfamily] | None]:
    """Is the space closed under the product?  First escaping pair if not."""
    n_mem = len(space.members)
    if n_mem * n_mem > pair_budget:
        raise BudgetExceeded(f"{n_mem}^2 pairs exceed the closure budget")
    for a in space.members:
        for b in space.members:
            p = product_of(s, a, b, kind)
            if space.index_of(p) is None:
                return False, (a, b, p)
    return True, None


@dataclass(frozen=True)
class AssociativityResult:
    associative: bool
    counterexample: tuple[Upfamily, Upfamily, Upfamily] | None
    exhaustive: bool
    triples_checked: int
    seed: int | None


def check_associativity(
    s: FiniteSemigroup,
    space: ExtensionSpace,
    kind: ProductKind = ProductKind.ELLIS,
    triple_budget: int = 10_000_000,
    sample_size: int = 100_000,
    seed: int = 2024,
) -> AssociativityResult:
    """(AB)C = A(BC) over the space; exhaustive within budget, else sampled."""
    members = space.members
    n_mem = len(members)
    ums = [m.upmask() for m in members]
    memo: dict[tuple[int, int], int] = {}

    def mul(x: int, y: int) -> int:
        v = memo.get((x, y))
        if v is not None:
            return v
        if kind is ProductKind.ELLIS:
            v = ellis_upmask(s, x, y)
        else:
            a = Upfamily.from_upmask(s.order, x)
            b = Upfamily.from_upmask(s.order, y)
            v = pointwise_product(s, a, b).upmask()
        memo[(x, y)] = v
        return v

    def bad(i: int, j: int, k: int) -> bool:
        return mul(mul(ums[i], ums[j]), ums[k]) != mul(ums[i], mul(ums[j], ums[k]))

    if n_mem**3 <= triple_budget:
        for i in range(n_mem):
            for j in range(n_mem):
                for k in range(n_mem):
                    if bad(i, j, k):
                        return AssociativityResult(
                            False, (members[i], members[j], members[k]), True, 0, None
                        )
        return AssociativityResult(True, None, True, n_mem**3, None)

    import random

    rng = random.Random(seed)
    for _ in range(sample_size):
        i, j, k = (rng.randrange(n_mem) for _ in range(3))
        if bad(i, j, k):
            return AssociativityResult(
                False, (members[i], members[j], members[k]), False, 0, seed
            )
    return AssociativityResult(True, None, False, sample_size, seed)
