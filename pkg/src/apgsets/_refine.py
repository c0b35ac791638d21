"""Partition refinement over integer-numbered nodes.

Two flavours share one driver:

* ``counting=False``: blockmates must have children hitting the same *set* of
  blocks.  The fixpoint from the one-block partition is the maximum
  bisimulation.
* ``counting=True``: blockmates must have the same *number* of children in
  every block.  The fixpoint characterises isomorphism of tree unfoldings.

Small inputs use dictionaries of exact signatures.  Large inputs use numpy
with random 64-bit block weights; a collision can only make the hashed
partition coarser than the exact one, so after convergence the result is
checked for exact stability and, if unstable, refined exactly from there.
A stable partition that is coarser than or equal to the exact fixpoint is
the fixpoint itself.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

NUMPY_THRESHOLD = 4096


def refine(kids: Sequence[Sequence[int]], counting: bool) -> list[int]:
    """Block id per node, numbered in order of each block's least node."""
    n = len(kids)
    if n == 0:
        return []
    if n < NUMPY_THRESHOLD:
        return _refine_exact(kids, counting, [0] * n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum([len(k) for k in kids], out=indptr[1:])
    dst = np.fromiter((v for k in kids for v in k), dtype=np.int64, count=int(indptr[-1]))
    return refine_csr(indptr, dst, counting)


def refine_csr(indptr: np.ndarray, dst: np.ndarray, counting: bool) -> list[int]:
    n = len(indptr) - 1
    if n == 0:
        return []
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    blk = _refine_hashed(n, src, dst, counting)
    if not _is_stable(n, src, dst, blk, counting):
        kids = [dst[indptr[u] : indptr[u + 1]].tolist() for u in range(n)]
        return _refine_exact(kids, counting, blk.tolist())
    return _canonical(blk).tolist()


def _refine_exact(kids: Sequence[Sequence[int]], counting: bool, blk: list[int]) -> list[int]:
    nb = len(set(blk))
    while True:
        table: dict[tuple, int] = {}
        new = []
        for u, ks in enumerate(kids):
            cs = [blk[v] for v in ks]
            sig = (blk[u], tuple(sorted(cs)) if counting else tuple(sorted(set(cs))))
            new.append(table.setdefault(sig, len(table)))
        blk = new
        if len(table) == nb:
            return blk
        nb = len(table)


def _refine_hashed(n: int, src: np.ndarray, dst: np.ndarray, counting: bool) -> np.ndarray:
    rng = np.random.default_rng(0x5EED)
    blk = np.zeros(n, dtype=np.int64)
    nb = 1
    while True:
        weights = rng.integers(0, 2**64, size=nb, dtype=np.uint64, endpoint=False)
        cb = blk[dst]
        if counting:
            owner, vals = src, weights[cb]
        else:
            key = np.unique(src * nb + cb)
            owner, vals = key // nb, weights[key % nb]
        h = np.zeros(n, dtype=np.uint64)
        if len(owner):
            starts = np.flatnonzero(np.r_[True, owner[1:] != owner[:-1]])
            h[owner[starts]] = np.add.reduceat(vals, starts)
        order = np.lexsort((h, blk))
        sb, sh = blk[order], h[order]
        fresh = np.r_[True, (sb[1:] != sb[:-1]) | (sh[1:] != sh[:-1])]
        ids = np.cumsum(fresh) - 1
        new = np.empty(n, dtype=np.int64)
        new[order] = ids
        nb_new = int(ids[-1]) + 1
        blk = new
        if nb_new == nb:
            return blk
        nb = nb_new


def _is_stable(n: int, src: np.ndarray, dst: np.ndarray, blk: np.ndarray, counting: bool) -> bool:
    # every node's signature must equal the union of signatures over its block
    nb = int(blk.max()) + 1
    key, counts = np.unique(src * nb + blk[dst], return_counts=True)
    owner, cb = key // nb, key % nb
    per_node = np.bincount(owner, minlength=n)
    if counting:
        span = int(counts.max()) + 1 if len(counts) else 1
        union = np.unique((blk[owner] * nb + cb) * span + counts)
        per_block = np.bincount(union // (nb * span), minlength=nb)
    else:
        union = np.unique(blk[owner] * nb + cb)
        per_block = np.bincount(union // nb, minlength=nb)
    return bool(np.all(per_node == per_block[blk]))


def _canonical(blk: np.ndarray) -> np.ndarray:
    _, first = np.unique(blk, return_index=True)
    relabel = np.empty(len(first), dtype=np.int64)
    relabel[np.argsort(first, kind="stable")] = np.arange(len(first))
    return relabel[blk]
