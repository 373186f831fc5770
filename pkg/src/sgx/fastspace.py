"""Vectorized pairwise product checks for whole extension spaces.

Members are encoded as membership bitmaps over all 2^n subsets (n <= 6, so a
bitmap fits a uint64).  The subset-indexed product forms (see products.py)
turn every pairwise product into gathers over precomputed index tables, so
the full |space|^2 commutativity / supercommutativity grid is a few blocked
numpy passes instead of millions of Python-level products.  Semantics are
pinned to the pure implementation by cross-validation tests: same verdicts,
same (lexicographically least) failing pair.
"""

from __future__ import annotations

import numpy as np

from .products import ProductKind, preimage_table
from .semigroup import FiniteSemigroup
from .spaces import ExtensionSpace

_BLOCK = 256


def _pack_last_axis(bits: np.ndarray, size: int) -> np.ndarray:
    """Collapse a trailing axis of 0/1 uint8 into uint64 bitmaps."""
    acc = np.zeros(bits.shape[:-1], dtype=np.uint64)
    for c in range(size):
        acc |= bits[..., c].astype(np.uint64) << np.uint64(c)
    return acc


def _tables(s: FiniteSemigroup) -> tuple[np.ndarray, np.ndarray]:
    """(preidx, gidx): Ellis preimage indices and pointwise inclusion indices."""
    n = s.order
    size = 1 << n
    pre = preimage_table(s)
    preidx = np.array(pre, dtype=np.int64)  # (n, size)
    rowprod = [[s.set_product(1 << a, b0) for b0 in range(size)] for a in range(n)]
    gidx = np.zeros((size, size), dtype=np.int64)
    for c in range(size):
        for b0 in range(size):
            m = 0
            for a in range(n):
                if rowprod[a][b0] & ~c == 0:
                    m |= 1 << a
            gidx[c, b0] = m
    return preidx, gidx


def space_mismatch_pairs(
    s: FiniteSemigroup, space: ExtensionSpace, kind: ProductKind
) -> tuple[tuple[int, int] | None, tuple[int, int] | None]:
    """Least commutativity-failing pair (i<j) and least supercommutativity-failing
    pair (i<=j) over the space, or None where no failure exists."""
    n = s.order
    if n > 6:
        raise ValueError("vectorized engine handles ground size <= 6")
    size = 1 << n
    members = space.members
    n_mem = len(members)
    ums = np.array([m.upmask() for m in members], dtype=np.uint64)
    shifts = np.arange(size, dtype=np.uint64)
    bits = ((ums[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint8)

    preidx, gidx = _tables(s)

    # Ellis selector: sidx[B, C] = packed {a : pre[a][C] in B}
    sel = bits[:, preidx]  # (N, n, size)
    weights = (1 << np.arange(n, dtype=np.int64))[None, :, None]
    sidx = (sel.astype(np.int64) * weights).sum(axis=1)  # (N, size), values < size

    # pointwise selector: T[A, C] = packed-over-B0 {bits[A, gidx[C, B0]]}
    t_mat = np.zeros((n_mem, size), dtype=np.uint64)
    for b0 in range(size):
        t_mat |= bits[:, gidx[:, b0]].astype(np.uint64) << np.uint64(b0)

    comm_pair: tuple[int, int] | None = None
    super_pair: tuple[int, int] | None = None
    col_idx = np.arange(n_mem)[None, :]

    for start in range(0, n_mem, _BLOCK):
        stop = min(start + _BLOCK, n_mem)
        blk = slice(start, stop)
        nb = stop - start

        e_rows = _pack_last_axis(bits[blk][:, sidx], size)  # (nb, N)
        e_cols_t = _pack_last_axis(bits[:, sidx[blk]], size).T  # (nb, N)

        pw_rows = np.zeros((nb, n_mem), dtype=np.uint64)
        pw_cols_t = np.zeros((nb, n_mem), dtype=np.uint64)
        for c in range(size):
            hit = (t_mat[blk][:, c][:, None] & ums[None, :]) != 0
            pw_rows |= hit.astype(np.uint64) << np.uint64(c)
            hit_t = (t_mat[:, c][None, :] & ums[blk][:, None]) != 0
            pw_cols_t |= hit_t.astype(np.uint64) << np.uint64(c)

        rows_here = (start + np.arange(nb))[:, None]
        if comm_pair is None:
            lhs, rhs = (e_rows, e_cols_t) if kind is ProductKind.ELLIS else (pw_rows, pw_cols_t)
            bad = (lhs != rhs) & (col_idx > rows_here)
            flat = np.flatnonzero(bad)
            if flat.size:
                r, j = divmod(int(flat[0]), n_mem)
                comm_pair = (start + r, j)
        if super_pair is None:
            bad = (
                (e_rows != pw_rows) | (pw_rows != pw_cols_t) | (pw_cols_t != e_cols_t)
            ) & (col_idx >= rows_here)
            flat = np.flatnonzero(bad)
            if flat.size:
                r, j = divmod(int(flat[0]), n_mem)
                super_pair = (start + r, j)
        if comm_pair is not None and super_pair is not None:
            break

    return comm_pair, super_pair
