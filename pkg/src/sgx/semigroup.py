"""Finite semigroups given by Cayley tables.

Constructors for the families used throughout (cyclic groups, linear
semilattices, monogenic semigroups, ordered unions, 0-bouquets, products),
structural maps (idempotent / Clifford / regular parts, the projections
e_* and c_*), and a profile-pruned isomorphism search.  Elements are the
indices 0..order-1; table[i][j] is the product of element i by element j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

MAX_ORDER = 32


class SemigroupError(ValueError):
    pass


class BadDimensions(SemigroupError):
    pass


class IndexOutOfRange(SemigroupError):
    pass


class NotAssociative(SemigroupError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"associativity fails at triple {triple}")


class NoZero(SemigroupError):
    def __init__(self, component: int):
        self.component = component
        super().__init__(f"bouquet component {component} has no two-sided zero")


@dataclass(frozen=True)
class FiniteSemigroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    def __post_init__(self):
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise BadDimensions(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise BadDimensions(f"table must be {n}x{n}")
        if len(self.names) != n:
            raise BadDimensions("need one name per element")
        for row in self.table:
            for v in row:
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"table entry {v} outside 0..{n-1}")
        t = self.table
        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    if t[ij][k] != t[i][t[j][k]]:
                        raise NotAssociative((i, j, k))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        acc = x
        for _ in range(k - 1):
            acc = self.table[acc][x]
        return acc

    def power_orbit(self, x: int) -> tuple[int, int]:
        """(index, period) of x: smallest i, p with x^i = x^{i+p}."""
        seen: dict[int, int] = {}
        cur, k = x, 1
        while cur not in seen:
            seen[cur] = k
            cur = self.table[cur][x]
            k += 1
        index = seen[cur]
        return index, k - index

    def is_commutative(self) -> bool:
        t = self.table
        return all(
            t[i][j] == t[j][i] for i in range(self.order) for j in range(i + 1, self.order)
        )

    def set_product(self, amask: int, bmask: int) -> int:
        """Mask of {a*b : a in A, b in B} for element masks A, B."""
        out = 0
        a = amask
        while a:
            la = a & -a
            i = la.bit_length() - 1
            row = self.table[i]
            b = bmask
            while b:
                lb = b & -b
                out |= 1 << row[lb.bit_length() - 1]
                b ^= lb
            a ^= la
        return out

    def __str__(self) -> str:
        return f"semigroup of order {self.order} on {{{', '.join(self.names)}}}"


def _default_names(n: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


def from_table(
    table: Sequence[Sequence[int]], names: Sequence[str] | None = None
) -> FiniteSemigroup:
    order = len(table)
    if names is None:
        names = _default_names(order)
    return FiniteSemigroup(order, tuple(tuple(row) for row in table), tuple(names))


def make_cyclic(n: int) -> FiniteSemigroup:
    """Cyclic group C_n; element 0 is the identity."""
    if n < 1:
        raise SemigroupError("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ("e",) + tuple(f"a{i}" if i > 1 else "a" for i in range(1, n))
    return from_table(table, names)


def make_linear_semilattice(n: int) -> FiniteSemigroup:
    """L_n = {0,..,n-1} under minimum."""
    if n < 1:
        raise SemigroupError("semilattice order must be >= 1")
    table = [[min(i, j) for j in range(n)] for i in range(n)]
    return from_table(table, tuple(str(i) for i in range(n)))


def make_v3() -> FiniteSemigroup:
    """The non-linear 3-element semilattice: two incomparable atoms over 0."""
    table = [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
    return from_table(table, ("0", "a", "b"))


def make_monogenic(n: int, m: int) -> FiniteSemigroup:
    """⟨x | x^n = x^m⟩: the semigroup {x, x^2, ..., x^{m-1}} with index n.

    Element i stands for x^{i+1}.  Exponents >= m reduce into the window
    [n, m-1] modulo the period m-n.
    """
    if not 1 <= n < m:
        raise SemigroupError("need 1 <= n < m")
    if m - 1 > MAX_ORDER:
        raise SemigroupError("order cap exceeded")

    def reduce(k: int) -> int:
        return k if k < m else n + ((k - n) % (m - n))

    order = m - 1
    table = [[reduce(i + j + 2) - 1 for j in range(order)] for i in range(order)]
    names = tuple("x" if k == 1 else f"x{k}" for k in range(1, m))
    return from_table(table, names)


def make_product(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Direct product; element i*t.order + j stands for the pair (i, j)."""
    order = s.order * t.order
    if order > MAX_ORDER:
        raise SemigroupError("order cap exceeded")
    table = [
        [
            s.table[i1][i2] * t.order + t.table[j1][j2]
            for i2 in range(s.order)
            for j2 in range(t.order)
        ]
        for i1 in range(s.order)
        for j1 in range(t.order)
    ]
    names = tuple(f"({a},{b})" for a in s.names for b in t.names)
    return from_table(table, names)


def _block_names(s: FiniteSemigroup, t: FiniteSemigroup) -> tuple[str, ...]:
    if set(s.names) & set(t.names):
        return tuple(f"{a}_1" for a in s.names) + tuple(f"{b}_2" for b in t.names)
    return s.names + t.names


def make_ordered_union(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Ordered union S ⊔ T: S-elements absorb T-elements.

    Products inside each block are unchanged; a mixed product equals its
    S-side factor.  Elements 0..|S|-1 are the S block, the rest the T block.
    """
    order = s.order + t.order
    if order > MAX_ORDER:
        raise SemigroupError("order cap exceeded")
    k = s.order
    table = [[0] * order for _ in range(order)]
    for i in range(order):
        for j in range(order):
            if i < k and j < k:
                table[i][j] = s.table[i][j]
            elif i < k:
                table[i][j] = i
            elif j < k:
                table[i][j] = j
            else:
                table[i][j] = k + t.table[i - k][j - k]
    return from_table(table, _block_names(s, t))


def find_zero(s: FiniteSemigroup) -> int | None:
    """The two-sided zero (z with zx = xz = z for all x), if one exists."""
    for z in range(s.order):
        if all(s.table[z][x] == z and s.table[x][z] == z for x in range(s.order)):
            return z
    return None


def make_zero_bouquet(components: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    """Amalgam of semigroups with zero: zeros identified, cross products = 0.

    Element 0 of the result is the shared zero; the nonzero elements of each
    component follow in order.
    """
    if not components:
        raise SemigroupError("bouquet needs at least one component")
    zeros = []
    for idx, c in enumerate(components):
        z = find_zero(c)
        if z is None:
            raise NoZero(idx)
        zeros.append(z)
    order = 1 + sum(c.order - 1 for c in components)
    if order > MAX_ORDER:
        raise SemigroupError("order cap exceeded")

    offsets = []
    names = ["0"]
    off = 1
    many = len(components) > 1
    for k, (c, z) in enumerate(zip(components, zeros)):
        local = {}  # component element -> global element
        for x in range(c.order):
            if x == z:
                local[x] = 0
            else:
                local[x] = off
                nm = c.names[x]
                names.append(f"{nm}_{k+1}" if many else nm)
                off += 1
        offsets.append(local)

    table = [[0] * order for _ in range(order)]
    for k, (c, loc) in enumerate(zip(components, offsets)):
        for x in range(c.order):
            for y in range(c.order):
                table[loc[x]][loc[y]] = loc[c.table[x][y]]
    # cross products between distinct components annihilate; rows/columns
    # through 0 are already 0 because each component zero maps to 0
    return from_table(table, names)


# -- structure ---------------------------------------------------------------


@dataclass(frozen=True)
class StructureSummary:
    idempotents: frozenset[int]
    clifford: frozenset[int]
    regular: frozenset[int]
    idempotent_of: tuple[int, ...]
    clifford_projection: tuple[int, ...]
    max_subgroups: dict[int, frozenset[int]]


def structure(s: FiniteSemigroup) -> StructureSummary:
    n = s.order
    t = s.table
    idem = frozenset(x for x in range(n) if t[x][x] == x)

    def e_of(x: int) -> int:
        seen = set()
        cur = x
        while cur not in seen:
            seen.add(cur)
            cur = t[cur][x]
        # walk the cycle containing cur until the idempotent appears
        start = cur
        while t[cur][cur] != cur:
            cur = t[cur][x]
            if cur == start:
                raise SemigroupError("no idempotent in power cycle")  # unreachable
        return cur

    e_map = tuple(e_of(x) for x in range(n))
    c_map = tuple(t[e_map[x]][x] for x in range(n))

    subgroups: dict[int, frozenset[int]] = {}
    for e in idem:
        members = set()
        for x in range(n):
            for y in range(n):
                if (
                    t[t[x][y]][x] == x
                    and t[t[y][x]][y] == y
                    and t[x][y] == e
                    and t[y][x] == e
                ):
                    members.add(x)
                    break
        subgroups[e] = frozenset(members)

    clifford = frozenset(x for g in subgroups.values() for x in g)
    regular = frozenset(
        x for x in range(n) if any(t[t[x][y]][x] == x for y in range(n))
    )
    return StructureSummary(idem, clifford, regular, e_map, c_map, subgroups)


def is_regular(s: FiniteSemigroup) -> bool:
    return structure(s).regular == frozenset(range(s.order))


def has_projection_group(s: FiniteSemigroup) -> tuple[int, int] | None:
    """A 2-element subgroup H = {e, h} with x^3 in H and xy = x^3 y^3 for all x, y."""
    n = s.order
    t = s.table
    cubes = [t[t[x][x]][x] for x in range(n)]
    for e in range(n):
        if t[e][e] != e:
            continue
        for h in range(n):
            if h == e or t[h][h] != e or t[e][h] != h or t[h][e] != h:
                continue
            if any(cubes[x] not in (e, h) for x in range(n)):
                continue
            if all(
                t[x][y] == t[cubes[x]][cubes[y]] for x in range(n) for y in range(n)
            ):
                return (e, h)
    return None


# -- isomorphism -------------------------------------------------------------


def _profiles(s: FiniteSemigroup) -> list[tuple]:
    n = s.order
    t = s.table
    counts = [0] * n
    diag = [0] * n
    for i in range(n):
        for j in range(n):
            counts[t[i][j]] += 1
        diag[t[i][i]] += 1
    out = []
    for x in range(n):
        idx, per = s.power_orbit(x)
        out.append((t[x][x] == x, idx, per, counts[x], diag[x]))
    return out


def is_isomorphic(s: FiniteSemigroup, t: FiniteSemigroup) -> tuple[int, ...] | None:
    """A table-preserving bijection S -> T as a tuple, or None.

    Backtracking over assignments compatible with cheap element profiles
    (idempotency, power index/period, table occurrence counts).
    """
    if s.order != t.order:
        return None
    ps, pt = _profiles(s), _profiles(t)
    if sorted(ps) != sorted(pt):
        return None
    n = s.order
    cands = [[y for y in range(n) if pt[y] == ps[x]] for x in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def ok(x: int, y: int) -> bool:
        for a in range(n):
            if mapping[a] < 0:
                continue
            if mapping[s.table[x][a]] >= 0 and t.table[y][mapping[a]] != mapping[s.table[x][a]]:
                return False
            if mapping[s.table[a][x]] >= 0 and t.table[mapping[a]][y] != mapping[s.table[a][x]]:
                return False
        if mapping[s.table[x][x]] >= 0 and t.table[y][y] != mapping[s.table[x][x]]:
            return False
        return True

    def solve(x: int) -> bool:
        if x == n:
            return all(
                t.table[mapping[a]][mapping[b]] == mapping[s.table[a][b]]
                for a in range(n)
                for b in range(n)
            )
        for y in cands[x]:
            if not used[y] and ok(x, y):
                mapping[x] = y
                used[y] = True
                if solve(x + 1):
                    return True
                mapping[x] = -1
                used[y] = False
        return False

    return tuple(mapping) if solve(0) else None


# -- persistence ---------------------------------------------------------------


def to_json_dict(s: FiniteSemigroup) -> dict:
    return {
        "names": list(s.names),
        "order": s.order,
        "table": [list(row) for row in s.table],
    }


def save_semigroup(s: FiniteSemigroup, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(to_json_dict(s), sort_keys=True, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def load_semigroup(path: str | Path) -> FiniteSemigroup:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "order" not in data or "table" not in data:
        raise SemigroupError(f"{path}: not a semigroup file")
    names = data.get("names")
    if data["order"] != len(data["table"]):
        raise BadDimensions("order field disagrees with table size")
    return from_table(data["table"], names)
