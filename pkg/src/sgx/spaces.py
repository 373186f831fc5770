"""Enumeration of the extension spaces over a finite ground set.

Spaces: filters φ (principal families ⟨A⟩), linked upfamilies N₂, maximal
linked systems λ (the superextension), and all upfamilies υ.  Members come
back in canonical order (sorted by the minimal-set encoding).

Two structurally independent λ enumerators are provided: antichain
backtracking with a self-transversality filter (used for ground size <= 5)
and complementary-pair decision backtracking (used for 6 and 7, and as the
cross-check oracle below that).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator

from .upfamily import Upfamily, supersets_of


class SpaceKind(Enum):
    PRINCIPAL = "principal"
    FILTERS = "filters"
    LINKED = "linked"
    MAXIMAL_LINKED = "maximal_linked"
    ALL_UPFAMILIES = "all_upfamilies"


LIMITS = {
    SpaceKind.PRINCIPAL: 32,
    SpaceKind.FILTERS: 32,
    SpaceKind.LINKED: 6,
    SpaceKind.MAXIMAL_LINKED: 7,
    SpaceKind.ALL_UPFAMILIES: 6,
}


class GroundTooLarge(ValueError):
    def __init__(self, kind: SpaceKind, ground_size: int):
        self.kind = kind
        self.limit = LIMITS[kind]
        super().__init__(
            f"{kind.value} enumeration capped at ground size {self.limit}, got {ground_size}"
        )


@dataclass
class ExtensionSpace:
    kind: SpaceKind
    ground_size: int
    members: tuple[Upfamily, ...]
    labels: tuple[str, ...] | None = None
    _index: dict[Upfamily, int] | None = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def index_of(self, f: Upfamily) -> int | None:
        if self._index is None:
            self._index = {m: i for i, m in enumerate(self.members)}
        return self._index.get(f)

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels else str(self.members[i])


def antichain_masks(n: int, linked_only: bool) -> Iterator[tuple[int, ...]]:
    """All antichains of nonempty subsets of [n] (optionally pairwise linked).

    Candidates are visited in descending popcount then ascending mask, so a
    later candidate can never be a superset of a chosen one; each emitted
    tuple is re-sorted ascending (canonical form).  Every recursion node is
    itself a valid antichain, so the node count equals the output count.
    """
    full = (1 << n) - 1
    cands = sorted(range(1, full + 1), key=lambda m: (-m.bit_count(), m))
    chosen: list[int] = []

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, len(cands)):
            c = cands[i]
            ok = True
            for k in chosen:
                if c & ~k == 0 or (linked_only and not c & k):
                    ok = False
                    break
            if ok:
                chosen.append(c)
                yield tuple(sorted(chosen))
                yield from rec(i + 1)
                chosen.pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def _subset_closures(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For each subset s of [n]: bitmaps over 2^n of its supersets / subsets."""
    size = 1 << n
    sup = [0] * size
    sub = [0] * size
    for s in range(size):
        acc = 0
        for t in supersets_of(s, n):
            acc |= 1 << t
        sup[s] = acc
    for s in range(size):
        t = s
        acc = 0
        while True:
            acc |= 1 << t
            if t == 0:
                break
            t = (t - 1) & s
        sub[s] = acc
    return tuple(sup), tuple(sub)


def maximal_linked_upmasks(n: int) -> Iterator[int]:
    """Complementary-pair enumeration of maximal linked systems.

    A maximal linked family contains exactly one of each pair {A, X∖A}; decide
    the pairs one at a time, propagating "A in ⇒ all supersets in, all subsets
    of X∖A out".  That single step is a complete closure: any freshly excluded
    B ⊆ X∖A has complement ⊇ A, already included.  Conflicts (a subset both in
    and out) prune the branch; every leaf is exactly one maximal linked family,
    yielded as a membership bitmap over all 2^n subsets.
    """
    sup, sub = _subset_closures(n)
    size = 1 << n
    full = size - 1
    pairs = []
    for a in range(1, size - 1):
        b = full ^ a
        if (a.bit_count(), a) < (b.bit_count(), b):
            pairs.append(a)
    pairs.sort(key=lambda a: (a.bit_count(), a))

    def rec(idx: int, inn: int, out: int) -> Iterator[int]:
        while idx < len(pairs) and ((inn | out) >> pairs[idx]) & 1:
            idx += 1
        if idx == len(pairs):
            yield inn
            return
        a = pairs[idx]
        b = full ^ a
        ni, no = inn | sup[a], out | sub[b]
        if not ni & no:
            yield from rec(idx + 1, ni, no)
        ni, no = inn | sup[b], out | sub[a]
        if not ni & no:
            yield from rec(idx + 1, ni, no)

    yield from rec(0, sup[full], 1)


def lambda_members_antichain(n: int) -> list[Upfamily]:
    """λ(n) via linked-antichain backtracking plus the self-transversal filter."""
    out = [
        f
        for masks in antichain_masks(n, linked_only=True)
        for f in [Upfamily(n, masks)]
        if f.is_maximal_linked()
    ]
    out.sort(key=lambda f: f.minimal_sets)
    return out


def lambda_members_pairs(n: int) -> list[Upfamily]:
    """λ(n) via complementary-pair decision backtracking."""
    out = [Upfamily.from_upmask(n, um) for um in maximal_linked_upmasks(n)]
    out.sort(key=lambda f: f.minimal_sets)
    return out


def count_space(kind: SpaceKind, ground_size: int) -> int:
    """Cardinality of the space without materializing members."""
    n = ground_size
    if n < 1:
        raise ValueError("ground size must be >= 1")
    if n > LIMITS[kind]:
        raise GroundTooLarge(kind, n)
    if kind is SpaceKind.PRINCIPAL:
        return n
    if kind is SpaceKind.FILTERS:
        return (1 << n) - 1
    if kind is SpaceKind.MAXIMAL_LINKED:
        if n <= 5:
            return len(lambda_members_antichain(n))
        return sum(1 for _ in maximal_linked_upmasks(n))
    linked = kind is SpaceKind.LINKED
    return sum(1 for _ in antichain_masks(n, linked_only=linked))


@lru_cache(maxsize=32)
def enumerate_space(kind: SpaceKind, ground_size: int) -> ExtensionSpace:
    """The full space, members in canonical sorted order.  Cached per (kind, n)."""
    n = ground_size
    if n < 1:
        raise ValueError("ground size must be >= 1")
    if n > LIMITS[kind]:
        raise GroundTooLarge(kind, n)
    if kind is SpaceKind.PRINCIPAL:
        members = [Upfamily(n, (1 << x,)) for x in range(n)]
    elif kind is SpaceKind.FILTERS:
        members = [Upfamily(n, (a,)) for a in range(1, 1 << n)]
    elif kind is SpaceKind.MAXIMAL_LINKED:
        members = lambda_members_antichain(n) if n <= 5 else lambda_members_pairs(n)
    else:
        linked = kind is SpaceKind.LINKED
        members = [Upfamily(n, masks) for masks in antichain_masks(n, linked_only=linked)]
        members.sort(key=lambda f: f.minimal_sets)
    return ExtensionSpace(kind, n, tuple(members))


def triangle(n: int, support: tuple[int, int, int]) -> Upfamily:
    """The maximal linked system ⟨all 2-subsets of a 3-element support⟩."""
    a, b, c = (1 << x for x in support)
    return Upfamily(n, tuple(sorted((a | b, a | c, b | c))))


def label_lambda4(space: ExtensionSpace) -> ExtensionSpace:
    """Attach the order-4 λ labels: k, △k, □k for elements x^1..x^4.

    Principal families ⟨{x^k}⟩ get "k"; the family of 2-sets avoiding x^k
    gets "△k"; ⟨complement of x^k plus the 2-sets through x^k⟩ gets "□k".
    Element index i stands for x^{i+1}.
    """
    if space.kind is not SpaceKind.MAXIMAL_LINKED or space.ground_size != 4:
        raise ValueError("labels defined for maximal linked systems on 4 elements")
    full = 0b1111
    labels = []
    for f in space.members:
        ms = f.minimal_sets
        union = 0
        for m in ms:
            union |= m
        if len(ms) == 1 and ms[0].bit_count() == 1:
            labels.append(str(ms[0].bit_length()))
        elif len(ms) == 3 and all(m.bit_count() == 2 for m in ms):
            k = (full ^ union).bit_length()
            labels.append(f"△{k}")
        elif len(ms) == 4:
            three = [m for m in ms if m.bit_count() == 3]
            twos = [m for m in ms if m.bit_count() == 2]
            if len(three) != 1 or len(twos) != 3:
                raise ValueError(f"unexpected member shape {f}")
            k = (full ^ three[0]).bit_length()
            if any(not m & (full ^ three[0]) for m in twos):
                raise ValueError(f"unexpected member shape {f}")
            labels.append(f"□{k}")
        else:
            raise ValueError(f"unexpected member shape {f}")
    return ExtensionSpace(space.kind, space.ground_size, space.members, tuple(labels))
