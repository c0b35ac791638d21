"""Finitely presented infinite graphs built on one omega-chain.

A presentation has finitely many named singleton nodes and a chain
``b0, b1, ...`` with the fixed edges ``b0 -> b0`` and
``b(i+1) -> b(i+1), b(i)``.  Each singleton's chain-children form an
ultimately periodic :class:`IndexSet`, which keeps d-homomorphism equations
decidable without truncating the chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Mapping

from .core import Apg
from .errors import NotAccessible, NotTotal, UnknownNode


@dataclass(frozen=True)
class IndexSet:
    """``base`` plus arithmetic progressions ``start, start+period, ...``.

    Instances are always normalised: the preperiod and period are minimal,
    ``base`` holds exactly the members below the preperiod and every
    progression has the common period, so equal sets compare equal.
    """

    base: frozenset[int] = frozenset()
    progressions: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if any(n < 0 for n in self.base):
            raise ValueError("index sets hold naturals")
        for s, p in self.progressions:
            if s < 0 or p < 1:
                raise ValueError(f"bad progression ({s}, {p})")
        base, progs = _normalise(self.base, self.progressions)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "progressions", progs)

    @classmethod
    def of(cls, base: Iterable[int] = (), progressions: Iterable[tuple[int, int]] = ()) -> IndexSet:
        return cls(frozenset(base), frozenset(progressions))

    @property
    def threshold(self) -> int:
        """Every n at or above this is periodic with ``period``."""
        starts = [s for s, _ in self.progressions]
        return max([n + 1 for n in self.base] + starts, default=0)

    @property
    def period(self) -> int:
        return lcm(*(p for _, p in self.progressions)) if self.progressions else 1

    @property
    def is_finite(self) -> bool:
        return not self.progressions

    def __contains__(self, n: int) -> bool:
        return _member(self.base, self.progressions, n)

    def up_to(self, n: int) -> list[int]:
        return [i for i in range(n + 1) if i in self]

    def __or__(self, other: IndexSet) -> IndexSet:
        return IndexSet(self.base | other.base, self.progressions | other.progressions)

    def __str__(self) -> str:
        parts = []
        if self.base:
            parts.append("{" + ",".join(map(str, sorted(self.base))) + "}")
        parts += [f"[{s}::{p}]" for s, p in sorted(self.progressions)]
        return " + ".join(parts) if parts else "{}"


def _member(base, progs, n: int) -> bool:
    return n in base or any(n >= s and (n - s) % p == 0 for s, p in progs)


def _normalise(base, progs) -> tuple[frozenset[int], frozenset[tuple[int, int]]]:
    if not progs:
        return frozenset(base), frozenset()
    t = max([n + 1 for n in base] + [s for s, _ in progs], default=0)
    big = lcm(*(p for _, p in progs))
    window = [_member(base, progs, n) for n in range(t, t + big)]
    if not any(window):
        return frozenset(n for n in base), frozenset()
    period = next(q for q in range(1, big + 1) if big % q == 0 and all(
        window[i] == window[i % q] for i in range(big)))
    while t > 0 and _member(base, progs, t - 1) == _member(base, progs, t - 1 + period):
        t -= 1
    new_base = frozenset(n for n in range(t) if _member(base, progs, n))
    new_progs = frozenset(
        (r, period) for r in range(t, t + period) if _member(base, progs, r)
    )
    return new_base, new_progs


NATURALS = IndexSet.of(progressions=[(0, 1)])
EVENS = IndexSet.of(progressions=[(0, 2)])
ODDS = IndexSet.of(progressions=[(1, 2)])


def shift_down(s: IndexSet) -> IndexSet:
    """Image of s under the chain map b0 -> b0, b(i+1) -> b(i)."""
    base = {n - 1 for n in s.base if n >= 1}
    if 0 in s.base:
        base.add(0)
    progs = set()
    for start, p in s.progressions:
        if start >= 1:
            progs.add((start - 1, p))
        else:
            base.add(0)
            progs.add((p - 1, p))
    return IndexSet(frozenset(base), frozenset(progs))


def index_eq(s: IndexSet, t: IndexSet) -> bool:
    """Semantic equality: both sides are periodic beyond the larger threshold."""
    bound = max(s.threshold, t.threshold) + lcm(s.period, t.period)
    return all((n in s) == (n in t) for n in range(bound))


# -- presentations -------------------------------------------------------------

@dataclass(frozen=True)
class OmegaPresentation:
    """Singletons with (singleton-children, chain-children) plus the fixed chain."""

    singletons: tuple[str, ...]
    root: str
    children_sing: Mapping[str, tuple[frozenset[str], IndexSet]]
    chain: str = "b"

    def __post_init__(self):
        if self.root not in self.singletons:
            raise UnknownNode(self.root)
        for a in self.singletons:
            sing, _ = self.children_sing[a]
            bad = set(sing) - set(self.singletons)
            if bad:
                raise UnknownNode(f"{a!r} has unknown singleton children {sorted(bad)}")
        if self.reachable_singletons(self.root) != set(self.singletons):
            raise NotAccessible("root does not reach every singleton")
        if not any(not self.children_sing[a][1].is_finite or self.children_sing[a][1].base
                   for a in self.singletons):
            raise NotAccessible("no singleton points into the chain")

    def chain_name(self, i: int) -> str:
        return f"{self.chain}{i}"

    def reachable_singletons(self, a: str) -> set[str]:
        seen, todo = {a}, [a]
        while todo:
            for c in self.children_sing[todo.pop()][0]:
                if c not in seen:
                    seen.add(c)
                    todo.append(c)
        return seen

    def chain_reach(self, a: str) -> float:
        """Largest chain index reachable from singleton a (-1 if none, inf if unbounded)."""
        top = -1.0
        for s in self.reachable_singletons(a):
            idx = self.children_sing[s][1]
            if not idx.is_finite:
                return float("inf")
            if idx.base:
                top = max(top, max(idx.base))
        return top

    def describe(self) -> str:
        lines = [
            "omega-presentation v1",
            f"root {self.root}",
            f"chain {self.chain}: {self.chain}0 -> {self.chain}0; "
            f"{self.chain}(i+1) -> {self.chain}(i+1) {self.chain}(i)",
        ]
        for a in self.singletons:
            sing, idx = self.children_sing[a]
            head = " ".join([f"{a}:"] + sorted(sing))
            lines.append(f"{head} | {self.chain} @ {idx}")
        return "\n".join(lines)


@dataclass(frozen=True)
class SymbolicWitness:
    """Singleton assignments together with the chain map b0 -> b0, b(i+1) -> b(i)."""

    singleton_map: Mapping[str, str] = field(default_factory=dict)


def make_J() -> OmegaPresentation:
    """Root r over a and ap; a sees b0 and the odd chain nodes, ap the even ones."""
    return OmegaPresentation(
        singletons=("r", "a", "ap"),
        root="r",
        children_sing={
            "r": (frozenset({"a", "ap"}), IndexSet()),
            "a": (frozenset(), IndexSet.of([0]) | ODDS),
            "ap": (frozenset(), EVENS),
        },
    )


def make_Q2() -> Apg:
    return Apg({"b": ["a", "b"], "a": ["a"]}, "b", ["b", "a"])


# Chain edges as offsets relative to the parent's index: b(i) -> b(i+o).
# _CHAIN_BASE lists the irregular prefix, _CHAIN_STEP the rule for i >= len(prefix).
_CHAIN_BASE = ({0},)
_CHAIN_STEP = (0, -1)


def _chain_children(i: int) -> set[int]:
    if i < len(_CHAIN_BASE):
        return set(_CHAIN_BASE[i])
    return {i + o for o in _CHAIN_STEP}


def _shift(i: int) -> int:
    return max(i - 1, 0)


def _chain_map_ok() -> bool:
    """Check C(shift(b_i)) = shift[C(b_i)] for every i by a finite case split.

    Below ``k = len(_CHAIN_BASE) + max offset depth + 1`` the clamp at 0 can
    matter, so those indices are checked one by one.  From ``k`` on every
    child index i+o is at least 1, the shift is plain subtraction, and both
    sides equal {i-1+o : o in step}.
    """
    depth = -min(_CHAIN_STEP)
    k = len(_CHAIN_BASE) + depth + 1
    for i in range(k):
        if _chain_children(_shift(i)) != {_shift(c) for c in _chain_children(i)}:
            return False
    # i >= k: every child i+o is >= 1, so the shift subtracts one, and i-1 is
    # past the irregular prefix, so both sides equal {i-1+o : o in step}.
    # That argument needs exactly these two bounds.
    return k - depth >= 1 and k - 1 >= len(_CHAIN_BASE)


def verify_dhom_symbolic(
    p: OmegaPresentation, w: SymbolicWitness, source: str, target: str
) -> bool:
    """Decide whether w is a d-homomorphism from p[source] onto p[target].

    Exact on the whole infinite chain: chain equations by case split,
    singleton equations by IndexSet equality after shifting.
    """
    for x in (source, target):
        if x not in p.singletons:
            raise UnknownNode(x)
    dom = p.reachable_singletons(source)
    missing = dom - set(w.singleton_map)
    if missing:
        raise NotTotal(f"witness undefined on {sorted(missing)}")
    f = w.singleton_map
    if f[source] != target:
        return False
    cod = p.reachable_singletons(target)
    if any(f[a] not in cod for a in dom):
        return False
    src_top, dst_top = p.chain_reach(source), p.chain_reach(target)
    if src_top >= 0:
        if not _chain_map_ok():
            return False
        # chain images must stay inside the target's reachable chain (inf - 1 == inf)
        if _shift(src_top) > dst_top:
            return False
    for a in dom:
        sing, idx = p.children_sing[a]
        tsing, tidx = p.children_sing[f[a]]
        if {f[c] for c in sing} != set(tsing):
            return False
        if not index_eq(shift_down(idx), tidx):
            return False
    return True


def j_witnesses() -> tuple[SymbolicWitness, SymbolicWitness]:
    return SymbolicWitness({"a": "ap"}), SymbolicWitness({"ap": "a"})


def truncate(p: OmegaPresentation, n: int) -> Apg:
    """Finite shadow: chain b0..bn, chain indices above n dropped."""
    if n < 0:
        raise ValueError("truncation index must be non-negative")
    children: dict[str, list[str]] = {}
    for a in p.singletons:
        sing, idx = p.children_sing[a]
        children[a] = sorted(sing) + [p.chain_name(i) for i in idx.up_to(n)]
    for i in range(n + 1):
        children[p.chain_name(i)] = [p.chain_name(c) for c in sorted(_chain_children(i))]
    return Apg(children, p.root)


GALLERY_NAMES = ("omega-J", "Q2", "omega1", "omega2", "vee")


def gallery(name: str):
    """Finite items are Apgs; ``omega-J`` is an OmegaPresentation."""
    if name == "omega-J":
        return make_J()
    if name == "Q2":
        return make_Q2()
    if name == "omega1":
        return Apg({"x": ["x"]}, "x")
    if name == "omega2":
        return Apg({"a": ["b"], "b": ["a"]}, "a")
    if name == "vee":
        return Apg({"p": ["a", "b"], "a": [], "b": []}, "p")
    raise KeyError(name)
