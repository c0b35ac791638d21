"""Accessible pointed graphs, hereditarily finite set literals, and decorations.

An :class:`Apg` is a finite directed graph with a distinguished point from
which every node can be reached.  Nodes are plain identifier strings and the
children of a node form a set.  Values are immutable; every function here is
pure.
"""

from __future__ import annotations

import re
import weakref
from collections import deque
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    ApgSyntaxError,
    CyclicGraph,
    DuplicateChild,
    DuplicateDeclaration,
    NotAccessible,
    UndeclaredNode,
    UnknownNode,
)

NAME_RE = re.compile(r"[A-Za-z0-9_]+")


def _check_name(name: str) -> str:
    if not isinstance(name, str) or NAME_RE.fullmatch(name) is None:
        raise ApgSyntaxError(f"invalid node name {name!r}")
    return name


class _Indexed:
    """Integer view of an Apg: nodes numbered in lexicographic name order."""

    __slots__ = ("names", "index", "kids", "parents", "point", "n", "m")

    def __init__(self, g: Apg):
        self.names = sorted(g.nodes)
        self.index = {a: i for i, a in enumerate(self.names)}
        get = self.index.__getitem__
        ch = g.children
        self.kids = [tuple(sorted(map(get, ch[a]))) for a in self.names]
        parents: list[list[int]] = [[] for _ in self.names]
        for u, ks in enumerate(self.kids):
            for v in ks:
                parents[v].append(u)
        self.parents = [tuple(p) for p in parents]
        self.point = self.index[g.point]
        self.n = len(self.names)
        self.m = sum(len(k) for k in self.kids)


class Apg:
    """Accessible pointed graph.

    ``children`` maps every node to the set of its children.  ``nodes`` fixes
    the declaration order (defaults to the mapping's order).  Construction
    validates names, closure of the child relation, and accessibility from
    ``point``; an invalid Apg cannot exist.
    """

    __slots__ = ("_nodes", "_children", "_point", "__dict__")

    def __init__(
        self,
        children: Mapping[str, Iterable[str]],
        point: str,
        nodes: Iterable[str] | None = None,
        *,
        check: bool = True,
    ):
        order = tuple(children) if nodes is None else tuple(nodes)
        kids = {a: frozenset(children.get(a, ())) for a in order}
        if check:
            if len(kids) != len(order):
                seen: set[str] = set()
                for a in order:
                    if a in seen:
                        raise DuplicateDeclaration(f"node {a!r} declared twice")
                    seen.add(a)
            if len(kids) != len(children) or any(a not in kids for a in children):
                extra = sorted(set(children) - set(kids))
                raise UndeclaredNode(f"children given for undeclared nodes {extra}")
            for a in order:
                _check_name(a)
            if point not in kids:
                raise UndeclaredNode(f"point {point!r} is not a node")
            for a, cs in kids.items():
                for c in cs:
                    if c not in kids:
                        raise UndeclaredNode(f"child {c!r} of {a!r} is not declared")
            missing = set(kids) - _reach(kids, point)
            if missing:
                raise NotAccessible(f"unreachable from {point!r}: {sorted(missing)}")
        self._nodes = order
        self._children = MappingProxyType(kids)
        self._point = point

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def children(self) -> Mapping[str, frozenset[str]]:
        return self._children

    @property
    def point(self) -> str:
        return self._point

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, a: object) -> bool:
        return a in self._children

    def edges(self) -> list[tuple[str, str]]:
        return sorted((a, c) for a, cs in self._children.items() for c in cs)

    @cached_property
    def ix(self) -> _Indexed:
        return _Indexed(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Apg):
            return NotImplemented
        return self._point == other._point and self._children == other._children

    def __hash__(self) -> int:
        return hash((self._point, frozenset(self._children.items())))

    def __repr__(self) -> str:
        return f"Apg(point={self._point!r}, nodes={len(self._nodes)}, edges={len(self.edges())})"


def _reach(children: Mapping[str, Iterable[str]], start: str) -> set[str]:
    seen = {start}
    todo = [start]
    while todo:
        a = todo.pop()
        for c in children[a]:
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return seen


def reachable(g: Apg, a: str) -> set[str]:
    if a not in g:
        raise UnknownNode(a)
    return _reach(g.children, a)


# -- text format ------------------------------------------------------------

def parse_apg(text: str) -> Apg:
    """Parse the ``apg v1`` text format.

    >>> parse_apg("apg v1\\npoint x\\nx: x").children["x"]
    frozenset({'x'})
    """
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines or lines[0].strip() != "apg v1":
        raise ApgSyntaxError("line 1 must be 'apg v1'")
    if len(lines) < 2:
        raise ApgSyntaxError("missing 'point' line")
    head = lines[1].split()
    if len(head) != 2 or head[0] != "point":
        raise ApgSyntaxError(f"line 2 must be 'point <name>', got {lines[1]!r}")
    point = _check_name(head[1])
    children: dict[str, list[str]] = {}
    for lineno, line in enumerate(lines[2:], start=3):
        name, sep, rest = line.partition(":")
        if not sep:
            raise ApgSyntaxError(f"line {lineno}: expected '<name>: <children>'")
        name = name.strip()
        _check_name(name)
        if name in children:
            raise DuplicateDeclaration(f"line {lineno}: node {name!r} declared twice")
        kids = rest.split()
        for c in kids:
            _check_name(c)
        if len(set(kids)) != len(kids):
            dup = next(c for c in kids if kids.count(c) > 1)
            raise DuplicateChild(f"line {lineno}: child {dup!r} listed twice")
        children[name] = kids
    return Apg(children, point)


def serialize_apg(g: Apg) -> str:
    """Point first, then the remaining nodes in name order; children sorted."""
    order = [g.point] + sorted(a for a in g.nodes if a != g.point)
    out = ["apg v1", f"point {g.point}"]
    for a in order:
        kids = " ".join(sorted(g.children[a]))
        out.append(f"{a}: {kids}" if kids else f"{a}:")
    return "\n".join(out)


def to_dot(g: Apg) -> str:
    lines = ["digraph apg {"]
    for a in sorted(g.nodes):
        shape = "doublecircle" if a == g.point else "circle"
        lines.append(f'  "{a}" [shape={shape}];')
    for a, c in g.edges():
        lines.append(f'  "{a}" -> "{c}";')
    lines.append("}")
    return "\n".join(lines)


def descendant_subgraph(g: Apg, a: str) -> Apg:
    """The subgraph induced by the nodes reachable from ``a``, pointed at ``a``."""
    keep = reachable(g, a)
    if len(keep) == len(g) and a == g.point:
        return g
    nodes = [b for b in g.nodes if b in keep]
    return Apg({b: g.children[b] for b in nodes}, a, nodes, check=False)


# -- hereditarily finite sets -----------------------------------------------

class SetLiteral:
    """A hereditarily finite well-founded set.

    Instances are hash-consed, so two literals denoting the same set are the
    same object and equality is identity.  Elements are exposed sorted by
    their canonical text.
    """

    __slots__ = ("_elems", "_key", "_text", "_sorted", "__weakref__")
    _table: "weakref.WeakValueDictionary[frozenset, SetLiteral]" = weakref.WeakValueDictionary()

    def __new__(cls, elements: Iterable[SetLiteral] = ()):
        key = frozenset(elements)
        for e in key:
            if not isinstance(e, SetLiteral):
                raise TypeError(f"elements must be SetLiteral, got {type(e).__name__}")
        hit = cls._table.get(key)
        if hit is not None:
            return hit
        obj = super().__new__(cls)
        obj._key = key
        obj._text = None
        obj._sorted = None
        cls._table[key] = obj
        return obj

    def __reduce__(self):
        return (SetLiteral, (tuple(self._key),))

    @property
    def elements(self) -> tuple[SetLiteral, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._key, key=str))
        return self._sorted

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self._key)

    def __contains__(self, x: object) -> bool:
        return x in self._key

    def __str__(self) -> str:
        if self._text is None:
            self._text = "{" + ",".join(sorted(str(e) for e in self._key)) + "}"
        return self._text

    def __repr__(self) -> str:
        return f"SetLiteral({self})"

    @property
    def rank(self) -> int:
        ranks: dict[SetLiteral, int] = {}
        for s in _postorder_sets(self):
            ranks[s] = max((ranks[e] + 1 for e in s._key), default=0)
        return ranks[self]

    @classmethod
    def parse(cls, text: str) -> SetLiteral:
        """Parse ``{}``, ``{{},{{}}}`` and the like; spaces are ignored."""
        s = "".join(text.split())
        stack: list[list[SetLiteral]] = []
        result = None
        for pos, ch in enumerate(s):
            if result is not None:
                raise ApgSyntaxError(f"trailing text in set literal at {pos}")
            if ch == "{":
                stack.append([])
            elif ch == "}":
                if not stack:
                    raise ApgSyntaxError(f"unbalanced '}}' at {pos}")
                done = cls(stack.pop())
                if stack:
                    stack[-1].append(done)
                else:
                    result = done
            elif ch == ",":
                if not stack or s[pos - 1] in "{," or s[pos + 1 : pos + 2] in ("}", ""):
                    raise ApgSyntaxError(f"misplaced ',' at {pos}")
            else:
                raise ApgSyntaxError(f"unexpected {ch!r} in set literal")
        if result is None:
            raise ApgSyntaxError(f"incomplete set literal {text!r}")
        return result


EMPTY = SetLiteral()


def _postorder_sets(x: SetLiteral) -> list[SetLiteral]:
    out: list[SetLiteral] = []
    seen = {x}
    stack = [(x, iter(x._key))]
    while stack:
        s, it = stack[-1]
        for e in it:
            if e not in seen:
                seen.add(e)
                stack.append((e, iter(e._key)))
                break
        else:
            stack.pop()
            out.append(s)
    return out


def transitive_closure(x: SetLiteral) -> set[SetLiteral]:
    """Members of trcl({x}), i.e. x together with everything below it."""
    return set(_postorder_sets(x))


Decoration = dict[str, SetLiteral]


def decorate_wf(g: Apg) -> Decoration:
    """The unique decoration of a well-founded graph (its Mostowski collapse).

    Raises CyclicGraph when some cycle makes a well-founded decoration
    impossible.
    """
    deco: Decoration = {}
    state: dict[str, int] = {}
    for root in g.nodes:
        if root in deco:
            continue
        stack = [(root, iter(sorted(g.children[root])))]
        state[root] = 1
        while stack:
            a, it = stack[-1]
            for c in it:
                if c in deco:
                    continue
                if state.get(c) == 1:
                    raise CyclicGraph(f"cycle through {c!r}")
                state[c] = 1
                stack.append((c, iter(sorted(g.children[c]))))
                break
            else:
                stack.pop()
                state[a] = 2
                deco[a] = SetLiteral(deco[c] for c in g.children[a])
    return deco


def canonical_picture(x: SetLiteral) -> Apg:
    """G_x: one node per member of trcl({x}), edges from a set to its members.

    Nodes are named ``n0`` (the point), ``n1``, ... in breadth-first order
    with elements visited in canonical order.
    """
    names = {x: "n0"}
    order = [x]
    queue = deque([x])
    while queue:
        s = queue.popleft()
        for e in s.elements:
            if e not in names:
                names[e] = f"n{len(names)}"
                order.append(e)
                queue.append(e)
    children = {names[s]: [names[e] for e in s.elements] for s in order}
    return Apg(children, "n0", check=False)


def is_picture_of(g: Apg, x: SetLiteral) -> bool:
    return decorate_wf(g)[g.point] is x
