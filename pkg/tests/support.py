"""Independent oracles and graph generators for the test suite.

Nothing here calls the partition-refinement or search code under test.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from apgsets import Apg


# -- generators --------------------------------------------------------------

def _accessible(n: int, kids: list[list[int]]) -> bool:
    seen, todo = {0}, [0]
    while todo:
        for v in kids[todo.pop()]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return len(seen) == n


def _to_apg(kids: list[list[int]], prefix: str = "n") -> Apg:
    return Apg({f"{prefix}{u}": [f"{prefix}{v}" for v in ks] for u, ks in enumerate(kids)}, f"{prefix}0")


@lru_cache(maxsize=None)
def small_corpus(max_nodes: int = 4) -> tuple[Apg, ...]:
    """Every apg on nodes n0..n(k-1), k <= max_nodes, pointed at n0."""
    out = []
    for n in range(1, max_nodes + 1):
        for bits in range(2 ** (n * n)):
            kids = [[v for v in range(n) if bits >> (u * n + v) & 1] for u in range(n)]
            if _accessible(n, kids):
                out.append(_to_apg(kids))
    return tuple(out)


def random_apg(rng: random.Random, max_nodes: int, p: float | None = None, prefix: str = "v") -> Apg:
    n = rng.randint(1, max_nodes)
    p = rng.uniform(0.1, 0.6) if p is None else p
    kids = [sorted({v for v in range(n) if rng.random() < p}) for _ in range(n)]
    order = list(range(1, n))
    rng.shuffle(order)
    placed = [0]
    for v in order:
        u = rng.choice(placed)
        if v not in kids[u]:
            kids[u].append(v)
        placed.append(v)
    return _to_apg(kids, prefix)


def uniform_small_apg(rng: random.Random, max_nodes: int) -> Apg:
    """Uniform child map on 1..max_nodes nodes, rejection-sampled for accessibility."""
    while True:
        n = rng.randint(1, max_nodes)
        kids = [[v for v in range(n) if rng.random() < 0.5] for _ in range(n)]
        if _accessible(n, kids):
            return _to_apg(kids, "w")


def relabel(g: Apg, rng: random.Random, prefix: str = "r") -> tuple[Apg, dict[str, str]]:
    names = list(g.nodes)
    targets = [f"{prefix}{i}" for i in range(len(names))]
    rng.shuffle(targets)
    f = dict(zip(names, targets))
    return Apg({f[a]: [f[c] for c in g.children[a]] for a in names}, f[g.point]), f


def split_node(g: Apg, rng: random.Random) -> Apg:
    """Duplicate one node (same children) and move some incoming edges to the copy.

    Tree unfoldings are unchanged, so the result is Scott-equivalent (and
    bisimilar) to g.
    """
    a = rng.choice(sorted(g.nodes))
    copy = "s" + a
    while copy in g:
        copy = "s" + copy
    children = {b: set(cs) for b, cs in g.children.items()}
    children[copy] = set(g.children[a])
    moved = False
    for b in sorted(g.nodes):
        if a in g.children[b] and rng.random() < 0.5:
            children[b].discard(a)
            children[b].add(copy)
            moved = True
    if not moved:
        # hang the copy somewhere so it stays accessible: under a parent of a
        parents = [b for b in sorted(g.nodes) if a in g.children[b]]
        if not parents:
            return g
        b = rng.choice(parents)
        children[b].discard(a)
        children[b].add(copy)
    seen, todo = {g.point}, [g.point]
    while todo:
        for c in children[todo.pop()]:
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return Apg({b: children[b] for b in children if b in seen}, g.point)


def unroll(g: Apg) -> Apg:
    """Replace the point by a fresh copy with the same children (bisimilar to g)."""
    fresh = "top"
    while fresh in g:
        fresh += "_"
    children = {fresh: set(g.children[g.point]), **{b: set(cs) for b, cs in g.children.items()}}
    seen, todo = {fresh}, [fresh]
    while todo:
        for c in children[todo.pop()]:
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return Apg({b: children[b] for b in children if b in seen}, fresh)


# -- oracles -----------------------------------------------------------------

def brute_isomorphisms(g: Apg, h: Apg):
    """All point-preserving edge-preserving-and-reflecting bijections, in lex order."""
    gs, hs = sorted(g.nodes), sorted(h.nodes)
    if len(gs) != len(hs):
        return
    for perm in itertools.permutations(hs):
        f = dict(zip(gs, perm))
        if f[g.point] != h.point:
            continue
        if all({f[c] for c in g.children[a]} == h.children[f[a]] for a in gs):
            yield f


def brute_dhoms(g: Apg, h: Apg):
    """All d-homomorphisms g -> h by exhaustive enumeration, in lex order."""
    gs, hs = sorted(g.nodes), sorted(h.nodes)
    for images in itertools.product(hs, repeat=len(gs)):
        f = dict(zip(gs, images))
        if f[g.point] != h.point:
            continue
        if all({f[c] for c in g.children[a]} == h.children[f[a]] for a in gs):
            yield f


def gfp_bisimulation(g: Apg, h: Apg) -> set[tuple[str, str]]:
    """Largest bisimulation between g and h by deleting violating pairs."""
    rel = {(a, b) for a in g.nodes for b in h.nodes}
    changed = True
    while changed:
        changed = False
        for a, b in sorted(rel):
            forth = all(any((c, d) in rel for d in h.children[b]) for c in g.children[a])
            back = all(any((c, d) in rel for c in g.children[a]) for d in h.children[b])
            if not (forth and back):
                rel.discard((a, b))
                changed = True
    return rel


def is_bisimulation(g: Apg, h: Apg, rel: set) -> bool:
    for a, b in rel:
        if any(all((c, d) not in rel for d in h.children[b]) for c in g.children[a]):
            return False
        if any(all((c, d) not in rel for c in g.children[a]) for d in h.children[b]):
            return False
    return True


def enum_max_bisimulation(g: Apg, h: Apg) -> set[tuple[str, str]]:
    """Union of every bisimulation, by enumerating all relations (tiny graphs only)."""
    pairs = [(a, b) for a in sorted(g.nodes) for b in sorted(h.nodes)]
    best: set = set()
    for bits in range(2 ** len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if bits >> i & 1}
        if is_bisimulation(g, h, rel):
            best |= rel
    return best


class UnfoldingCodes:
    """Canonical codes of depth-truncated tree unfoldings (AHU interning).

    code(a, d) identifies the unfolding of node a cut at depth d up to tree
    isomorphism: a leaf at d = 0, otherwise the sorted multiset of the
    children's codes at d - 1.  Several graphs may share one instance so
    their codes are comparable.  Graphs are kept alive so their ids, used
    as memo keys, are never recycled.
    """

    def __init__(self):
        self.table: dict[tuple, int] = {}
        self.memo: dict[tuple, int] = {}
        self.graphs: dict[int, Apg] = {}

    def code(self, g: Apg, a: str, d: int) -> int:
        self.graphs.setdefault(id(g), g)
        key = (id(g), a, d)
        if key in self.memo:
            return self.memo[key]
        for depth in range(d + 1):
            for b in g.nodes:
                k = (id(g), b, depth)
                if k in self.memo:
                    continue
                if depth == 0:
                    sig: tuple = ()
                else:
                    sig = tuple(sorted(self.memo[(id(g), c, depth - 1)] for c in g.children[b]))
                self.memo[k] = self.table.setdefault((depth, sig), len(self.table))
        return self.memo[key]


def tree_code(t: Apg) -> tuple:
    """Nested sorted tuple canonical form of a finite tree pointed at its root."""
    def rec(a):
        return tuple(sorted(rec(c) for c in t.children[a]))
    return rec(t.point)


def descendants_bfs(g: Apg, a: str) -> set[str]:
    from collections import deque

    seen = {a}
    q = deque([a])
    while q:
        x = q.popleft()
        for c in g.children[x]:
            if c not in seen:
                seen.add(c)
                q.append(c)
    return seen


def bits_of(s, limit: int = 257) -> list[bool]:
    return [n in s for n in range(limit)]


def bits_from_parts(base, progressions, limit: int = 257) -> list[bool]:
    out = [False] * limit
    for n in base:
        if n < limit:
            out[n] = True
    for s, p in progressions:
        for n in range(s, limit, p):
            out[n] = True
    return out


def bits_shift(bits: list[bool]) -> list[bool]:
    """Image under b0 -> b0, b(i+1) -> b(i), valid on all but the last slot."""
    out = [False] * len(bits)
    for i, on in enumerate(bits):
        if on:
            out[max(i - 1, 0)] = True
    return out
