"""Upfamilies on a finite ground set.

An upfamily on the ground set {0, ..., n-1} is a nonempty collection of
nonempty subsets that is closed under taking supersets.  We store only the
antichain of inclusion-minimal members (as bitmasks, sorted ascending), so
two upfamilies are equal exactly when their canonical forms are equal.

On a finite ground set the "finitely supported" variants of the classical
extension spaces coincide with the plain ones (every family here has finite
support), so this module exposes a single, unbulleted notion throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_GROUND = 32


def mask_of(elements: Iterable[int], ground_size: int) -> int:
    """Bitmask of a collection of element indices, range-checked."""
    m = 0
    for x in elements:
        if not 0 <= x < ground_size:
            raise ValueError(f"element {x} outside ground set of size {ground_size}")
        m |= 1 << x
    return m


def set_of(mask: int) -> tuple[int, ...]:
    """Sorted element indices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def minimize(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of a family of masks, sorted ascending."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    kept.sort()
    return tuple(kept)


def supersets_of(mask: int, ground_size: int) -> Iterable[int]:
    """All supersets of mask inside the ground set (mask itself included)."""
    free = ((1 << ground_size) - 1) & ~mask
    s = free
    while True:
        yield mask | s
        if s == 0:
            return
        s = (s - 1) & free


@dataclass(frozen=True)
class Upfamily:
    """Canonical upfamily: ground size plus the sorted antichain of minimal sets."""

    ground_size: int
    minimal_sets: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.ground_size <= MAX_GROUND:
            raise ValueError(f"ground size must be in 1..{MAX_GROUND}")
        if not self.minimal_sets:
            raise ValueError("an upfamily has at least one member set")
        full = (1 << self.ground_size) - 1
        prev = 0
        for m in self.minimal_sets:
            if m == 0:
                raise ValueError("empty set cannot belong to an upfamily")
            if m & ~full:
                raise ValueError("member set outside the ground set")
            if m <= prev:
                raise ValueError("minimal sets must be strictly ascending by mask")
            prev = m
        for a in self.minimal_sets:
            for b in self.minimal_sets:
                if a != b and a & ~b == 0:
                    raise ValueError("minimal sets must form an antichain")

    # -- membership and classes -------------------------------------------

    def contains(self, s: int | Iterable[int]) -> bool:
        """Is the subset (mask or element iterable) a member of the family?"""
        m = s if isinstance(s, int) else mask_of(s, self.ground_size)
        return any(k & ~m == 0 for k in self.minimal_sets)

    def is_linked(self) -> bool:
        """Any two members intersect (enough to test the minimal sets)."""
        ms = self.minimal_sets
        return all(a & b for i, a in enumerate(ms) for b in ms[i + 1 :])

    def is_filter(self) -> bool:
        """Closed under pairwise intersection.

        In canonical form over a finite ground set this happens exactly when
        there is a single minimal set: the intersection of two distinct
        antichain members is a proper subset of each, hence not a member.
        (Verified against a closure oracle in tests.)
        """
        return len(self.minimal_sets) == 1

    def is_ultrafilter(self) -> bool:
        return len(self.minimal_sets) == 1 and self.minimal_sets[0].bit_count() == 1

    def is_maximal_linked(self) -> bool:
        """Maximal linked system: the family equals its own transversal."""
        return self.transversal() == self

    # -- operators ----------------------------------------------------------

    def transversal(self) -> Upfamily:
        """The family of all sets meeting every member; minimal hitting sets.

        Iterative product-and-minimize over the minimal antichain (hypergraph
        dualization; ground sizes here are tiny).
        """
        hitting: list[int] = [0]
        for m in self.minimal_sets:
            bits = []
            mm = m
            while mm:
                low = mm & -mm
                bits.append(low)
                mm ^= low
            hitting = list(minimize(h | b for h in hitting for b in bits))
        return Upfamily(self.ground_size, tuple(hitting))

    def pushforward(self, f: Sequence[int], target_size: int) -> Upfamily:
        """Image under a map of ground sets: {A : f^{-1}(A) in F}.

        Computed as the family generated by the images of the minimal sets,
        which coincides with the preimage description (tested both ways).
        """
        if len(f) != self.ground_size:
            raise ValueError("map must be total on the ground set")
        for x, fx in enumerate(f):
            if not 0 <= fx < target_size:
                raise ValueError(f"f({x})={fx} outside target ground set")
        images = []
        for m in self.minimal_sets:
            img = 0
            for x in set_of(m):
                img |= 1 << f[x]
            images.append(img)
        return Upfamily(target_size, minimize(images))

    # -- encodings ----------------------------------------------------------

    def upmask(self) -> int:
        """Membership bitmap over all 2^n subsets: bit C set iff C is a member."""
        um = 0
        for m in self.minimal_sets:
            for s in supersets_of(m, self.ground_size):
                um |= 1 << s
        return um

    @classmethod
    def from_upmask(cls, ground_size: int, um: int) -> Upfamily:
        """Inverse of upmask(): recover the antichain of minimal members."""
        mins = []
        for c in range(1, 1 << ground_size):
            if not (um >> c) & 1:
                continue
            cc = c
            minimal = True
            while cc:
                low = cc & -cc
                if (um >> (c ^ low)) & 1:
                    minimal = False
                    break
                cc ^= low
            if minimal:
                mins.append(c)
        return cls(ground_size, tuple(mins))

    def member_sets(self) -> list[int]:
        """Every member subset (the full upward closure), ascending by mask."""
        out = set()
        for m in self.minimal_sets:
            out.update(supersets_of(m, self.ground_size))
        return sorted(out)

    # -- rendering ----------------------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        """Text form like "⟨{a,b},{c}⟩" using element names."""
        def name(i: int) -> str:
            return names[i] if names is not None else str(i)

        parts = [
            "{" + ",".join(name(i) for i in set_of(m)) + "}" for m in self.minimal_sets
        ]
        return "⟨" + ",".join(parts) + "⟩"

    def __str__(self) -> str:
        return self.render()

    def machine_form(self) -> list[list[int]]:
        """JSON form: sorted list of sorted element-index lists."""
        return [list(set_of(m)) for m in self.minimal_sets]


def generate(ground_size: int, sets: Iterable[int | Iterable[int]]) -> Upfamily:
    """The upfamily generated by the given sets (masks or element iterables)."""
    masks = []
    for s in sets:
        m = s if isinstance(s, int) else mask_of(s, ground_size)
        if m == 0:
            raise ValueError("cannot generate from an empty set")
        if m >> ground_size:
            raise ValueError("generator outside the ground set")
        masks.append(m)
    if not masks:
        raise ValueError("cannot generate from an empty family")
    return Upfamily(ground_size, minimize(masks))


def principal(ground_size: int, x: int) -> Upfamily:
    """The principal ultrafilter ⟨{x}⟩."""
    return generate(ground_size, [[x]])
