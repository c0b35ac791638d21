"""Canonical forms, the bisimulation product, unfoldings and flat systems."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import count
from typing import Mapping, NamedTuple

import numpy as np

from .core import Apg, SetLiteral, _check_name, descendant_subgraph, reachable
from .errors import ApgSyntaxError, NoRoot, NotABisimulation, UndefinedVariable, UnknownRelation
from .relations import (
    NodeMap,
    bisimilar,
    check_bisimulation,
    finsler_eq,
    isomorphic,
    max_bisimulation,
    node_blocks,
)


def quotient(g: Apg, block_of: Mapping[str, object]) -> tuple[Apg, NodeMap]:
    """Merge nodes with equal ``block_of`` keys; each class is named by its least member.

    [a] -> [b] whenever some member of [a] has a child in [b].
    """
    members: dict[object, list[str]] = {}
    for a in g.nodes:
        members.setdefault(block_of[a], []).append(a)
    rep = {k: min(ms) for k, ms in members.items()}
    f = {a: rep[block_of[a]] for a in g.nodes}
    children: dict[str, set[str]] = {}
    for a in g.nodes:
        children.setdefault(f[a], set()).update(f[c] for c in g.children[a])
    order = sorted(children)
    return Apg(children, f[g.point], order, check=False), f


def _quotient_blocks(g: Apg, blk: list[int]) -> tuple[Apg, NodeMap]:
    # blocks are numbered by least member and names are sorted, so a block's
    # first member in index order is its least name
    G = g.ix
    nb = max(blk) + 1
    rep: list[str] = [""] * nb
    for i in range(G.n - 1, -1, -1):
        rep[blk[i]] = G.names[i]
    b = np.asarray(blk, dtype=np.int64)
    src = np.repeat(np.arange(G.n), [len(k) for k in G.kids])
    dst = np.fromiter((v for k in G.kids for v in k), dtype=np.int64, count=G.m)
    pairs = np.unique(b[src] * nb + b[dst])
    kids: list[list[str]] = [[] for _ in range(nb)]
    for u, v in zip((pairs // nb).tolist(), (pairs % nb).tolist()):
        kids[u].append(rep[v])
    f = {a: rep[blk[i]] for i, a in enumerate(G.names)}
    return Apg({rep[k]: kids[k] for k in range(nb)}, f[g.point], check=False), f


def collapse_afa_map(g: Apg) -> tuple[Apg, NodeMap]:
    return _quotient_blocks(g, node_blocks(g, counting=False))


def collapse_afa(g: Apg) -> Apg:
    """Quotient by the maximum bisimulation: the strongly extensional picture."""
    return collapse_afa_map(g)[0]


def _related_classes(g: Apg, rel: str) -> dict[str, object]:
    names = g.ix.names
    blk = node_blocks(g, counting=True)
    if rel == "scott":
        return {names[i]: b for i, b in enumerate(blk)}
    # both relations refine Scott equivalence and are transitive, so comparing
    # against one representative per class suffices
    test = (lambda x, y: isomorphic(x, y) is not None) if rel == "iso" else finsler_eq
    sub = {a: descendant_subgraph(g, a) for a in names}
    rep: dict[str, str] = {}
    reps_by_block: dict[int, list[str]] = {}
    for i, a in enumerate(names):
        for r in reps_by_block.get(blk[i], ()):
            if test(sub[a], sub[r]):
                rep[a] = r
                break
        else:
            rep[a] = a
            reps_by_block.setdefault(blk[i], []).append(a)
    return rep


def collapse_iter_map(g: Apg, rel: str) -> tuple[Apg, NodeMap]:
    if rel not in ("iso", "finsler", "scott"):
        raise UnknownRelation(f"collapse needs iso, finsler or scott, got {rel!r}")
    total = {a: a for a in g.nodes}
    while True:
        classes = _related_classes(g, rel)
        if len(set(classes.values())) == len(g):
            return g, total
        g, f = quotient(g, classes)
        total = {a: f[b] for a, b in total.items()}


def collapse_iter(g: Apg, rel: str) -> Apg:
    """Quotient by ``rel``-equivalence of descendant subgraphs until ``rel``-extensional.

    One round can create new equivalent pairs, so rounds repeat; each round
    that changes anything removes at least one node.
    """
    return collapse_iter_map(g, rel)[0]


# -- bisimulation product -------------------------------------------------------

class Product(NamedTuple):
    graph: Apg
    left: NodeMap
    right: NodeMap


def product_bisim(g: Apg, h: Apg, r) -> Product:
    """Graph on the pairs of ``r`` reachable from the pair of points.

    (a, b) -> (c, d) iff a -> c in g and b -> d in h.  Nodes are named
    ``q0, q1, ...`` in breadth-first order; the projections recover pairs.
    """
    r = frozenset(r)
    if not check_bisimulation(g, h, r):
        raise NotABisimulation("relation is not a bisimulation between the graphs")
    start = (g.point, h.point)
    names = {start: "q0"}
    queue = deque([start])
    children: dict[str, list[str]] = {}
    while queue:
        a, b = queue.popleft()
        kids = []
        for c in sorted(g.children[a]):
            for d in sorted(h.children[b]):
                if (c, d) in r:
                    if (c, d) not in names:
                        names[(c, d)] = f"q{len(names)}"
                        queue.append((c, d))
                    kids.append(names[(c, d)])
        children[names[(a, b)]] = kids
    graph = Apg(children, "q0", check=False)
    left = {q: a for (a, _), q in names.items()}
    right = {q: b for (_, b), q in names.items()}
    return Product(graph, left, right)


def join_witness(g: Apg, h: Apg) -> Product | None:
    if not bisimilar(g, h):
        return None
    return product_bisim(g, h, max_bisimulation(g, h))


def joinable(g: Apg, h: Apg) -> Apg | None:
    """A common d-homomorphic ancestor of g and h when they are bisimilar."""
    w = join_witness(g, h)
    return None if w is None else w.graph


# -- unfolding --------------------------------------------------------------------

def unfold_depth(g: Apg, d: int) -> Apg:
    """Tree of paths from the point of length at most ``d``.

    A path is named by the positions of the chosen children (in name order),
    e.g. ``u_0_2``; the root is ``u``.
    """
    if d < 0:
        raise ValueError("depth must be non-negative")
    kids = {a: sorted(cs) for a, cs in g.children.items()}
    children: dict[str, list[str]] = {}
    stack = [("u", g.point, 0)]
    while stack:
        name, a, depth = stack.pop()
        if depth == d:
            children[name] = []
            continue
        names = [f"{name}_{i}" for i in range(len(kids[a]))]
        children[name] = names
        stack.extend((n, c, depth + 1) for n, c in zip(names, kids[a]))
    return Apg(children, "u", check=False)


# -- flat systems -------------------------------------------------------------------

@dataclass(frozen=True)
class FlatSystem:
    """Equations ``x = {terms}``; a term is a variable name or a SetLiteral."""

    equations: Mapping[str, tuple]
    root: str | None


_EQ_RE = re.compile(r"^\s*([A-Za-z0-9_]+)\s*=\s*\{(.*)\}\s*$")


def _split_terms(body: str) -> list[str]:
    terms, depth, cur = [], 0, []
    for ch in body:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            terms.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail or terms:
        terms.append(tail)
    if any(t == "" for t in terms):
        raise ApgSyntaxError(f"empty term in {{{body}}}")
    return terms


def parse_flat_system(text: str) -> FlatSystem:
    equations: dict[str, tuple] = {}
    root = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        words = line.split()
        if words[0] == "root":
            if len(words) != 2:
                raise ApgSyntaxError(f"line {lineno}: expected 'root <var>'")
            root = _check_name(words[1])
            continue
        m = _EQ_RE.match(line)
        if m is None:
            raise ApgSyntaxError(f"line {lineno}: expected '<var> = {{ <term>, ... }}'")
        var = m.group(1)
        if var in equations:
            raise ApgSyntaxError(f"line {lineno}: {var!r} defined twice")
        terms = []
        for t in _split_terms(m.group(2)):
            terms.append(SetLiteral.parse(t) if t.startswith("{") else _check_name(t))
        equations[var] = tuple(terms)
    return FlatSystem(equations, root)


def solve_flat_system(s: FlatSystem) -> Apg:
    """The unique solution of ``s`` at its root, as a strongly extensional picture."""
    if s.root is None:
        raise NoRoot("flat system has no root variable")
    if s.root not in s.equations:
        raise UndefinedVariable(f"root {s.root!r} is not defined")
    children: dict[str, list[str]] = {}
    lit_names: dict[SetLiteral, str] = {}
    fresh = count()

    def literal_node(x: SetLiteral) -> str:
        if x not in lit_names:
            name = f"_lit{next(fresh)}"
            while name in s.equations:
                name = f"_lit{next(fresh)}"
            lit_names[x] = name
            children[name] = [literal_node(e) for e in x.elements]
        return lit_names[x]

    for var, terms in s.equations.items():
        kids = []
        for t in terms:
            if isinstance(t, SetLiteral):
                kids.append(literal_node(t))
            elif t in s.equations:
                kids.append(t)
            else:
                raise UndefinedVariable(f"{t!r} used in the equation for {var!r} is not defined")
        children[var] = kids
    full = Apg(children, s.root, check=False)
    keep = reachable(full, s.root)
    g = Apg({a: children[a] for a in children if a in keep}, s.root)
    return collapse_afa(g)
