"""Extensionality notions and the classification of a single graph.

A graph is ~-extensional when distinct nodes never have ~-related
descendant subgraphs.  Witness pairs ``(a, b)`` always satisfy ``a < b`` and
are the least such pair in name order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Union

from .core import Apg, descendant_subgraph
from .errors import UnknownRelation
from .relations import (
    dhom_exists,
    finsler_eq,
    isomorphic,
    node_blocks,
)

Pair = tuple[str, str]
Oracle = Callable[[Apg, Apg], bool]

RELATIONS = ("iso", "finsler", "scott", "bisim", "mutual_dhom")
NOTIONS = ("extensional", "iso_ext", "finsler_ext", "scott_ext", "strongly_ext", "mutual_dhom_ext")


def is_extensional(g: Apg) -> Pair | None:
    seen: dict[frozenset[str], str] = {}
    best = None
    for a in sorted(g.nodes):
        cs = g.children[a]
        if cs in seen:
            pair = (seen[cs], a)
            if best is None or pair < best:
                best = pair
        else:
            seen[cs] = a
    return best


def _least_pair_in_blocks(names: list[str], blk: list[int]) -> Pair | None:
    groups: dict[int, list[str]] = {}
    for name, b in zip(names, blk):
        groups.setdefault(b, []).append(name)
    pairs = [tuple(sorted(m)[:2]) for m in groups.values() if len(m) > 1]
    return min(pairs) if pairs else None


def _mutual(x: Apg, y: Apg) -> bool:
    return dhom_exists(x, y) is not None and dhom_exists(y, x) is not None


def is_ext_wrt(g: Apg, rel: Union[str, Oracle]) -> Pair | None:
    """Least pair of distinct nodes with ``rel``-related descendant subgraphs.

    ``rel`` is one of ``iso``, ``finsler``, ``scott``, ``bisim``,
    ``mutual_dhom`` or any callable ``(G[a], G[b]) -> bool``.
    """
    names = g.ix.names
    if rel == "scott":
        return _least_pair_in_blocks(names, node_blocks(g, counting=True))
    if rel == "bisim":
        return _least_pair_in_blocks(names, node_blocks(g, counting=False))
    if callable(rel):
        test, candidates = rel, combinations(names, 2)
    elif rel in ("iso", "finsler", "mutual_dhom"):
        # iso and finsler imply Scott equivalence; mutual_dhom implies bisimilarity
        blk = node_blocks(g, counting=(rel != "mutual_dhom"))
        candidates = (
            (a, b) for (i, a), (j, b) in combinations(enumerate(names), 2) if blk[i] == blk[j]
        )
        test = {
            "iso": lambda x, y: isomorphic(x, y) is not None,
            "finsler": finsler_eq,
            "mutual_dhom": _mutual,
        }[rel]
    else:
        raise UnknownRelation(f"unknown relation {rel!r}")
    sub: dict[str, Apg] = {}

    def below(a: str) -> Apg:
        if a not in sub:
            sub[a] = descendant_subgraph(g, a)
        return sub[a]

    for a, b in candidates:
        if test(below(a), below(b)):
            return (a, b)
    return None


@dataclass(frozen=True)
class ExtReport:
    extensional: bool
    iso_ext: bool
    finsler_ext: bool
    scott_ext: bool
    strongly_ext: bool
    mutual_dhom_ext: bool
    witnesses: dict[str, Pair | None] = field(default_factory=dict)

    def as_dict(self) -> dict:
        out: dict = {k: getattr(self, k) for k in NOTIONS}
        out["witnesses"] = {k: (list(v) if v else None) for k, v in self.witnesses.items()}
        return out


def classify(g: Apg) -> ExtReport:
    w = {
        "extensional": is_extensional(g),
        "iso_ext": is_ext_wrt(g, "iso"),
        "finsler_ext": is_ext_wrt(g, "finsler"),
        "scott_ext": is_ext_wrt(g, "scott"),
        "strongly_ext": is_ext_wrt(g, "bisim"),
        "mutual_dhom_ext": is_ext_wrt(g, "mutual_dhom"),
    }
    finsler_direct = w["finsler_ext"] is None
    finsler_derived = w["extensional"] is None and w["iso_ext"] is None
    if finsler_direct != finsler_derived:
        raise AssertionError(f"Finsler extensionality disagrees on {g!r}")
    return ExtReport(**{k: v is None for k, v in w.items()}, witnesses=w)
