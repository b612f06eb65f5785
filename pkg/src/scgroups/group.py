"""Permutation groups backed by a deterministic stabilizer chain.

All heavy lifting happens on raw 0-based image tuples; ``Permutation`` is
only used at the boundary.  The chain is built with an incremental
Schreier-Sims that remembers which Schreier generators it has already
sifted, so adding generators later (as the intersection search does) does
not redo earlier work.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import Permutation

__all__ = [
    "EngineConfig",
    "ResourceLimitError",
    "SizeLimitError",
    "StabilizerChain",
    "PermutationGroup",
    "BlockSystem",
    "closure_elements",
    "group_order",
    "membership",
    "orbits",
    "is_transitive",
    "minimal_blocks",
    "all_minimal_block_systems",
    "is_primitive",
    "is_even_group",
    "intersect",
]

Raw = tuple[int, ...]


@dataclass
class EngineConfig:
    enum_threshold: int = 10**5
    backtrack_budget: int = 10**8


DEFAULT_CONFIG = EngineConfig()


class ResourceLimitError(RuntimeError):
    """The backtrack search ran out of nodes before deciding."""


class SizeLimitError(ValueError):
    """A brute-force routine was asked to enumerate too many elements."""


def _mul(a: Raw, b: Raw) -> Raw:
    return tuple([b[i] for i in a])


def _inv(a: Raw) -> Raw:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _first_moved(a: Raw) -> int | None:
    for i, j in enumerate(a):
        if i != j:
            return i
    return None


class _Level:
    __slots__ = ("point", "gens", "u", "uinv", "order", "tested")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[int] = []  # indices into the chain's strong generators
        self.u: dict[int, Raw] = {}
        self.uinv: dict[int, Raw] = {}
        self.order: list[int] = []
        self.tested: set[tuple[int, int]] = set()


class StabilizerChain:
    """Base, strong generators and explicit transversals.

    ``base_prefix`` forces the first base points (0-based); further points
    are appended as needed, always the smallest point moved by the strong
    generator that fixes the current base.
    """

    def __init__(self, degree: int, gens: Iterable[Raw] = (), base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.identity: Raw = tuple(range(degree))
        self.base: list[int] = []
        self.strong: list[Raw] = []
        self.levels: list[_Level] = []
        for b in base_prefix:
            if b not in self.base:
                self._new_level(b)
        for g in gens:
            self.add_generator(g)

    def _new_level(self, point: int) -> None:
        lvl = _Level(point)
        lvl.u[point] = self.identity
        lvl.uinv[point] = self.identity
        lvl.order.append(point)
        self.base.append(point)
        self.levels.append(lvl)

    def _extend_orbit(self, lvl: _Level) -> None:
        gens = [self.strong[k] for k in lvl.gens]
        queue = deque(lvl.order)
        u, uinv, order = lvl.u, lvl.uinv, lvl.order
        while queue:
            p = queue.popleft()
            up = u[p]
            for s in gens:
                q = s[p]
                if q not in u:
                    uq = _mul(up, s)
                    u[q] = uq
                    uinv[q] = _inv(uq)
                    order.append(q)
                    queue.append(q)

    def sift(self, g: Raw, start: int = 0) -> tuple[Raw, int]:
        """Strip ``g`` through levels ``start..``; return residue and the level it stopped at."""
        levels = self.levels
        for m in range(start, len(levels)):
            lvl = levels[m]
            b = g[lvl.point]
            if b == lvl.point:
                continue
            w = lvl.uinv.get(b)
            if w is None:
                return g, m
            g = _mul(g, w)
        return g, len(levels)

    def _insert(self, h: Raw, depth: int) -> None:
        """Add strong generator ``h`` that fixes base[:depth]."""
        if depth == len(self.levels):
            self._new_level(_first_moved(h))
        idx = len(self.strong)
        self.strong.append(h)
        for m in range(depth + 1):
            self.levels[m].gens.append(idx)

    def add_generator(self, g: Raw) -> bool:
        """Extend the group by ``g``; return False if ``g`` was already a member."""
        if len(g) != self.degree:
            raise ValueError("degree mismatch")
        h, j = self.sift(g)
        if h == self.identity:
            return False
        self._insert(h, j)
        self._complete(j)
        return True

    def _complete(self, top: int) -> None:
        i = top
        while i >= 0:
            lvl = self.levels[i]
            self._extend_orbit(lvl)
            found = None
            for b in lvl.order:
                ub = lvl.u[b]
                for k in lvl.gens:
                    if (b, k) in lvl.tested:
                        continue
                    lvl.tested.add((b, k))
                    s = self.strong[k]
                    g = _mul(_mul(ub, s), lvl.uinv[s[b]])
                    h, j = self.sift(g, i + 1)
                    if h != self.identity:
                        found = (h, j)
                        break
                if found:
                    break
            if found:
                h, j = found
                self._insert(h, j)
                i = j
                continue
            i -= 1

    # -- queries --

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.order)
        return n

    def contains(self, g: Raw) -> bool:
        return self.sift(g)[0] == self.identity

    def level_generators(self, m: int) -> list[Raw]:
        if m >= len(self.levels):
            return []
        return [self.strong[k] for k in self.levels[m].gens]

    def elements(self) -> Iterator[Raw]:
        """Every element exactly once, as products u_{L-1} ... u_0."""
        # sifting factors g as u_{L-1} ... u_0, so deeper levels go on the left
        def rec(m: int, right: Raw) -> Iterator[Raw]:
            if m == len(self.levels):
                yield right
                return
            for p in self.levels[m].order:
                yield from rec(m + 1, _mul(self.levels[m].u[p], right))
        if not self.levels:
            yield self.identity
            return
        yield from rec(0, self.identity)


def closure_elements(gens: Iterable[Raw], degree: int, limit: int | None = None) -> set[Raw]:
    """All elements of <gens> by breadth-first closure; the chain-free oracle."""
    gens = [g for g in gens]
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = _mul(x, s)
            if y not in seen:
                seen.add(y)
                if limit is not None and len(seen) > limit:
                    raise SizeLimitError(f"group has more than {limit} elements")
                queue.append(y)
    return seen


@dataclass(frozen=True)
class BlockSystem:
    blocks: tuple[frozenset[int], ...]  # 1-based points

    @property
    def block_size(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def is_trivial(self) -> bool:
        return self.block_size <= 1 or self.num_blocks <= 1


class PermutationGroup:
    """A permutation group given by generators; the chain is built on demand."""

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = list(generators)
        n = max([degree or 0, *(g.degree for g in gens)])
        self.degree = n
        self.generators = [g.extend(n) for g in gens]
        self._raw = [g.raw(n) for g in self.generators if not g.is_identity()]
        self._chain: StabilizerChain | None = None

    @classmethod
    def _from_raw(cls, raws: Iterable[Raw], degree: int) -> "PermutationGroup":
        return cls([Permutation._raw(r) for r in raws], degree)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self._raw)
        return self._chain

    def chain_with_base(self, prefix: Sequence[int]) -> StabilizerChain:
        return StabilizerChain(self.degree, self._raw, prefix)

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g: Permutation) -> bool:
        if len(g._key) > self.degree:
            return False
        return self.chain.contains(g.raw(self.degree))

    def elements(self) -> Iterator[Permutation]:
        for r in self.chain.elements():
            yield Permutation._raw(r)

    def is_trivial(self) -> bool:
        return not self._raw

    def orbits(self) -> list[frozenset[int]]:
        """Orbit partition of {1..n}, sorted by smallest point."""
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self._raw:
            for i, j in enumerate(g):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, set[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), set()).add(i + 1)
        return [frozenset(groups[k]) for k in sorted(groups)]

    def orbit(self, point: int) -> frozenset[int]:
        for o in self.orbits():
            if point in o:
                return o
        return frozenset({point})

    def is_transitive(self) -> bool:
        return len(self.orbits()) <= 1

    def is_even(self) -> bool:
        return all(g.is_even() for g in self.generators)

    def restrict(self, points: Iterable[int]) -> "PermutationGroup":
        """The action on an invariant set, relabelled 1..k in increasing order."""
        pts = sorted(points)
        index = {p - 1: i for i, p in enumerate(pts)}
        raws = []
        for g in self._raw:
            try:
                raws.append(tuple(index[g[p - 1]] for p in pts))
            except KeyError:
                raise ValueError("point set is not invariant") from None
        return PermutationGroup._from_raw(raws, len(pts))

    # -- blocks --

    def minimal_blocks(self, seed: tuple[int, int]) -> BlockSystem:
        """Finest invariant partition with both seed points in one block."""
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a, b = seed[0] - 1, seed[1] - 1
        queue = deque()
        if a != b:
            parent[max(a, b)] = min(a, b)
            queue.append((a, b))
        while queue:
            x, y = queue.popleft()
            for g in self._raw:
                u, v = find(g[x]), find(g[y])
                if u != v:
                    parent[max(u, v)] = min(u, v)
                    queue.append((u, v))
        groups: dict[int, set[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), set()).add(i + 1)
        return BlockSystem(tuple(frozenset(groups[k]) for k in sorted(groups)))

    def all_minimal_block_systems(self) -> list[BlockSystem]:
        """Distinct block systems minimal_blocks((first, b)) that no other one refines.

        Only meaningful for transitive groups.
        """
        if self.degree < 2:
            return []
        first = min(self.orbits()[0])
        systems = []
        for b in range(1, self.degree + 1):
            if b == first:
                continue
            bs = self.minimal_blocks((first, b))
            if bs not in systems:
                systems.append(bs)

        def refines(x: BlockSystem, y: BlockSystem) -> bool:
            return x != y and all(any(blk <= big for big in y.blocks) for blk in x.blocks)

        return [s for s in systems if not any(refines(t, s) for t in systems)]

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            return False
        return all(len(s.blocks) == 1 for s in self.all_minimal_block_systems())

    # -- intersection --

    def intersect(self, other: "PermutationGroup", known: "PermutationGroup | None" = None,
                  config: EngineConfig | None = None) -> "PermutationGroup":
        return intersect(self, other, known=known, config=config)

    def __repr__(self) -> str:
        return f"PermutationGroup([{', '.join(map(str, self.generators))}], degree={self.degree})"


# -- intersection ----------------------------------------------------------


def _filter_intersection(small: PermutationGroup, large: PermutationGroup, n: int) -> PermutationGroup:
    big = large.chain
    found = StabilizerChain(n)
    gens = []
    for e in small.chain.elements():
        if not big.contains(e) or found.contains(e):
            continue
        found.add_generator(e)
        gens.append(e)
    grp = PermutationGroup._from_raw(gens, n)
    grp._chain = found
    return grp


class _Search:
    """Subgroup search for G ∩ H over a common base, seeded with a known subgroup."""

    def __init__(self, g: StabilizerChain, h: StabilizerChain, known: Iterable[Raw], budget: int):
        self.G, self.H = g, h
        self.base = g.base
        self.L = len(self.base)
        self.budget = budget
        self.nodes = 0
        self.ident = g.identity
        # generators of the result, grouped by the first base point they move
        self.found: list[list[Raw]] = [[] for _ in range(self.L + 1)]
        kchain = StabilizerChain(g.degree, known, self.base)
        if kchain.base != self.base:
            raise ValueError("known subgroup is not contained in both groups")
        for m, lvl in enumerate(kchain.levels):
            for k in lvl.gens:
                s = kchain.strong[k]
                d = next((i for i, b in enumerate(self.base) if s[b] != b), self.L)
                if s not in self.found[d]:
                    self.found[d].append(s)

    def _orbit(self, m: int, point: int) -> set[int]:
        gens = [x for d in range(m, self.L + 1) for x in self.found[d]]
        seen = {point}
        queue = [point]
        while queue:
            p = queue.pop()
            for s in gens:
                q = s[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    def run(self) -> list[Raw]:
        G, H = self.G, self.H
        for l in range(self.L - 1, -1, -1):
            b = self.base[l]
            cand = [p for p in G.levels[l].order if p in H.levels[l].u]
            covered = self._orbit(l, b)
            dead: set[int] = set()
            for gamma in sorted(cand):
                if gamma in covered or gamma in dead:
                    continue
                x = self._find(l, gamma)
                if x is None:
                    dead |= self._orbit(l, gamma)
                else:
                    self.found[l].append(x)
                    covered = self._orbit(l, b)
        return [x for d in range(self.L + 1) for x in self.found[d]]

    def _find(self, l: int, gamma: int) -> Raw | None:
        g = self.G.levels[l].u[gamma]
        h = self.H.levels[l].u[gamma]
        return self._descend(l + 1, g, h)

    def _descend(self, j: int, g: Raw, h: Raw) -> Raw | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimitError(f"backtrack budget of {self.budget} nodes exhausted")
        if j == self.L:
            return g if g == h else None
        lg, lh = self.G.levels[j], self.H.levels[j]
        imgs_h = {h[d]: d for d in lh.order}
        for d in lg.order:
            c = g[d]
            dh = imgs_h.get(c)
            if dh is None:
                continue
            x = self._descend(j + 1, _mul(lg.u[d], g), _mul(lh.u[dh], h))
            if x is not None:
                return x
        return None


def intersect(G: PermutationGroup, H: PermutationGroup, known: PermutationGroup | None = None,
              config: EngineConfig | None = None) -> PermutationGroup:
    """Exact intersection of two groups on a common degree.

    ``known`` may name a subgroup already known to lie in both; it seeds the
    search and is checked for containment.
    """
    cfg = config or DEFAULT_CONFIG
    n = max(G.degree, H.degree, known.degree if known else 0)
    if G.degree != n:
        G = PermutationGroup(G.generators, n)
    if H.degree != n:
        H = PermutationGroup(H.generators, n)
    if G.is_trivial() or H.is_trivial():
        return PermutationGroup([], n)
    og, oh = G.order(), H.order()
    small, large = (G, H) if og <= oh else (H, G)
    if min(og, oh) <= cfg.enum_threshold:
        return _filter_intersection(small, large, n)

    known_raw = []
    if known is not None:
        known_raw = [g.raw(n) for g in known.generators if not g.is_identity()]
        for k in known_raw:
            if not (G.chain.contains(k) and H.chain.contains(k)):
                raise ValueError("known subgroup is not contained in both groups")
    hc = H.chain_with_base(small.chain.base if small is G else large.chain.base)
    gc = G.chain_with_base(hc.base)
    if gc.base != hc.base:
        hc = H.chain_with_base(gc.base)
    search = _Search(gc, hc, known_raw, cfg.backtrack_budget)
    gens = search.run()
    grp = PermutationGroup._from_raw(gens, n)
    grp._chain = StabilizerChain(n, gens, gc.base)
    return grp


# -- functional aliases ----------------------------------------------------


def group_order(G: PermutationGroup) -> int:
    return G.order()


def membership(G: PermutationGroup, g: Permutation) -> bool:
    return g in G


def orbits(G: PermutationGroup) -> list[frozenset[int]]:
    return G.orbits()


def is_transitive(G: PermutationGroup) -> bool:
    return G.is_transitive()


def minimal_blocks(G: PermutationGroup, seed_pair: tuple[int, int]) -> BlockSystem:
    return G.minimal_blocks(seed_pair)


def all_minimal_block_systems(G: PermutationGroup) -> list[BlockSystem]:
    return G.all_minimal_block_systems()


def is_primitive(G: PermutationGroup) -> bool:
    return G.is_primitive()


def is_even_group(G: PermutationGroup) -> bool:
    return G.is_even()
