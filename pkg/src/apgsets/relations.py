"""Binary relations between apgs and verifiers for their witnesses.

Node order everywhere is lexicographic by name, so every returned witness
(isomorphism, d-homomorphism, partition) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from ._refine import refine
from .core import Apg
from .errors import IncompleteMap, UnknownNode

NodeMap = dict[str, str]
PairRelation = frozenset[tuple[str, str]]


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks covering a node universe, ordered by least member.

    Members of joint partitions are ``(side, name)`` with side 0 for the
    first graph and 1 for the second.
    """

    blocks: tuple[frozenset, ...]

    def block_of(self, x) -> int:
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        raise KeyError(x)

    def __len__(self) -> int:
        return len(self.blocks)


def _joint_kids(g: Apg, h: Apg) -> list[tuple[int, ...]]:
    off = g.ix.n
    return list(g.ix.kids) + [tuple(v + off for v in ks) for ks in h.ix.kids]


def joint_blocks(g: Apg, h: Apg, counting: bool) -> tuple[list[int], list[int]]:
    """Refinement over the disjoint union, split back into per-graph block ids."""
    blk = refine(_joint_kids(g, h), counting)
    return blk[: g.ix.n], blk[g.ix.n :]


def node_blocks(g: Apg, counting: bool) -> list[int]:
    return refine(g.ix.kids, counting)


def _partition(g: Apg, h: Apg, counting: bool) -> Partition:
    bg, bh = joint_blocks(g, h, counting)
    blocks: dict[int, set] = {}
    for i, b in enumerate(bg):
        blocks.setdefault(b, set()).add((0, g.ix.names[i]))
    for i, b in enumerate(bh):
        blocks.setdefault(b, set()).add((1, h.ix.names[i]))
    ordered = sorted((frozenset(s) for s in blocks.values()), key=min)
    return Partition(tuple(ordered))


def same_children(g: Apg, a: str, a2: str) -> bool:
    for x in (a, a2):
        if x not in g:
            raise UnknownNode(x)
    return g.children[a] == g.children[a2]


# -- Scott equivalence and maximum bisimulation ------------------------------

def scott_partition(g: Apg, h: Apg) -> Partition:
    """Coarsest counting-stable partition of the disjoint union of g and h."""
    return _partition(g, h, counting=True)


def scott_eq(g: Apg, h: Apg) -> bool:
    bg, bh = joint_blocks(g, h, counting=True)
    return bg[g.ix.point] == bh[h.ix.point]


def max_bisim_partition(g: Apg, h: Apg) -> Partition:
    return _partition(g, h, counting=False)


def bisimilar(g: Apg, h: Apg) -> bool:
    bg, bh = joint_blocks(g, h, counting=False)
    return bg[g.ix.point] == bh[h.ix.point]


def max_bisimulation(g: Apg, h: Apg) -> PairRelation:
    """All pairs (a, b) from g x h lying in a common maximum-bisimulation block."""
    bg, bh = joint_blocks(g, h, counting=False)
    by_block: dict[int, list[str]] = {}
    for j, b in enumerate(bh):
        by_block.setdefault(b, []).append(h.ix.names[j])
    return frozenset(
        (a, b) for i, a in enumerate(g.ix.names) for b in by_block.get(bg[i], ())
    )


def check_bisimulation(g: Apg, h: Apg, r) -> bool:
    """Does ``r`` contain the pair of points and satisfy forth and back locally?"""
    r = frozenset(r)
    if (g.point, h.point) not in r:
        return False
    for a, b in r:
        if a not in g or b not in h:
            return False
        ca, cb = g.children[a], h.children[b]
        if any(all((x, y) not in r for y in cb) for x in ca):
            return False
        if any(all((x, y) not in r for x in ca) for y in cb):
            return False
    return True


# -- witnesses ----------------------------------------------------------------

def verify_dhom(g: Apg, h: Apg, f: Mapping[str, str]) -> bool:
    """Point preserved and C_h(f(a)) = f[C_g(a)] at every node of g."""
    missing = [a for a in g.nodes if a not in f]
    if missing:
        raise IncompleteMap(f"map undefined on {sorted(missing)}")
    if any(f[a] not in h for a in g.nodes):
        return False
    if f[g.point] != h.point:
        return False
    return all(
        h.children[f[a]] == {f[c] for c in g.children[a]} for a in g.nodes
    )


def verify_iso(g: Apg, h: Apg, f: Mapping[str, str]) -> bool:
    if len(g) != len(h) or len(set(f.values())) != len(g):
        return False
    return verify_dhom(g, h, f)


def _search(g: Apg, h: Apg, domains: list[set[int]], injective: bool) -> Iterator[list[int]]:
    """Depth-first search in name order over candidate images.

    Assigning a -> t restricts each child of a to children of t and each
    parent of a to parents of t.  For d-homomorphisms a node is checked as
    soon as it and all its children are assigned.  Solutions come out in
    lexicographic order.
    """
    G, H = g.ix, h.ix
    n = G.n
    hk = [frozenset(k) for k in H.kids]
    hp = [frozenset(p) for p in H.parents]
    gk = G.kids
    assign = [-1] * n

    def ok_at(u: int) -> bool:
        return {assign[c] for c in gk[u]} == hk[assign[u]]

    def ready(u: int) -> bool:
        return assign[u] >= 0 and all(assign[c] >= 0 for c in gk[u])

    def step(i: int, doms: list[set[int]]) -> Iterator[list[int]]:
        if i == n:
            yield list(assign)
            return
        for t in sorted(doms[i]):
            new = list(doms)
            new[i] = {t}
            for c in gk[i]:
                new[c] = new[c] & hk[t]
            for q in G.parents[i]:
                new[q] = new[q] & hp[t]
            if injective:
                for j in range(i + 1, n):
                    if t in new[j]:
                        new[j] = new[j] - {t}
            if any(not new[j] for j in range(i, n)):
                continue
            assign[i] = t
            good = True
            for u in (i, *G.parents[i]):
                if ready(u) and not ok_at(u):
                    good = False
                    break
            if good:
                yield from step(i + 1, new)
            assign[i] = -1

    yield from step(0, domains)


def isomorphic(g: Apg, h: Apg) -> NodeMap | None:
    """Least point-preserving isomorphism g -> h, or None."""
    G, H = g.ix, h.ix
    if G.n != H.n or G.m != H.m:
        return None
    bg, bh = joint_blocks(g, h, counting=True)
    if bg[G.point] != bh[H.point]:
        return None
    # isomorphic nodes share a Scott block, so only same-block targets are candidates
    by_block: dict[tuple, set[int]] = {}
    for j in range(H.n):
        by_block.setdefault((bh[j], len(H.parents[j])), set()).add(j)
    domains = [set(by_block.get((bg[i], len(G.parents[i])), ())) for i in range(G.n)]
    domains[G.point] &= {H.point}
    if any(not d for d in domains):
        return None
    for sol in _search(g, h, domains, injective=True):
        f = {G.names[i]: H.names[t] for i, t in enumerate(sol)}
        if verify_iso(g, h, f):
            return f
    return None


def dhom_exists(g: Apg, h: Apg) -> NodeMap | None:
    """Least d-homomorphism g -> h, or None.

    D-homomorphisms are onto, so |g| < |h| rules one out.  The graph of a
    d-homomorphism is a bisimulation, so each node may only go to a
    bisimilar node.
    """
    G, H = g.ix, h.ix
    if G.n < H.n:
        return None
    bg, bh = joint_blocks(g, h, counting=False)
    if bg[G.point] != bh[H.point]:
        return None
    by_block: dict[int, set[int]] = {}
    for j, b in enumerate(bh):
        by_block.setdefault(b, set()).add(j)
    domains = [set(by_block.get(bg[i], ())) for i in range(G.n)]
    domains[G.point] &= {H.point}
    if any(not d for d in domains):
        return None
    for sol in _search(g, h, domains, injective=False):
        f = {G.names[i]: H.names[t] for i, t in enumerate(sol)}
        if verify_dhom(g, h, f):
            return f
    return None


def mutual_dhom(g: Apg, h: Apg) -> bool:
    return dhom_exists(g, h) is not None and dhom_exists(h, g) is not None


# -- Finsler equivalence --------------------------------------------------------

def star(g: Apg) -> Apg:
    """Add a fresh point copying the point's children, if the point has a parent."""
    if not any(g.point in cs for cs in g.children.values()):
        return g
    fresh = "_star"
    k = 0
    while fresh in g:
        fresh = f"_star{k}"
        k += 1
    children = {fresh: g.children[g.point], **g.children}
    return Apg(children, fresh, check=False)


def finsler_eq(g: Apg, h: Apg) -> bool:
    return isomorphic(star(g), star(h)) is not None
