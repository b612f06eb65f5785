"""Shared oracles and corpora for the test suite.

The oracles here deliberately avoid the stabilizer-chain engine: group
orders come from a breadth-first closure over permutation tuples.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from scgroups import Permutation, Sggi


def closure(gens: list[tuple[int, ...]], degree: int, limit: int | None = None) -> set[tuple[int, ...]]:
    """All products of ``gens`` (0-based image tuples), by BFS."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        raise OverflowError("closure exceeded limit")
        frontier = nxt
    return seen


def tuples(s: Sggi, idx=None) -> list[tuple[int, ...]]:
    idx = range(s.rank) if idx is None else idx
    return [tuple(s[i](p) - 1 for p in range(1, s.degree + 1)) for i in idx]


def closure_order(s: Sggi, idx=None, limit: int | None = None) -> int:
    return len(closure(tuples(s, idx), s.degree, limit))


def brute_intersection_ok(s: Sggi) -> bool:
    """Independent string C-group test: every pair of index sets, by enumeration."""
    n = s.degree
    for i in range(s.rank):
        if s[i].is_identity() or not s[i].is_involution():
            return False
        for j in range(i + 2, s.rank):
            if s[i] * s[j] != s[j] * s[i]:
                return False
    if s.rank == 2 and s[0] == s[1]:
        return False
    subsets = [frozenset(c) for k in range(s.rank + 1) for c in combinations(range(s.rank), k)]
    elems = {I: closure(tuples(s, sorted(I)), n) for I in subsets}
    for I, J in combinations(subsets, 2):
        if len(elems[I] & elems[J]) != len(elems[I & J]):
            return False
    return True


def random_involution(rng: random.Random, n: int) -> Permutation:
    pts = list(range(1, n + 1))
    rng.shuffle(pts)
    pairs = rng.randint(1, n // 2)
    cyc = [(pts[2 * i], pts[2 * i + 1]) for i in range(pairs)]
    return Permutation.from_cycles(cyc, n)


def random_sggi(rng: random.Random, n: int, rank: int, tries: int = 500) -> Sggi | None:
    """Random tuple of non-trivial involutions satisfying the string condition."""
    for _ in range(tries):
        gens = [random_involution(rng, n)]
        ok = True
        for i in range(1, rank):
            for _ in range(50):
                g = random_involution(rng, n)
                if all(g * h == h * g for h in gens[:i - 1]):
                    gens.append(g)
                    break
            else:
                ok = False
                break
        if ok:
            return Sggi(gens, n)
    return None


def make_corpus(seed: int, count: int, max_order: int, degrees=range(3, 8), ranks=range(2, 5)) -> list[Sggi]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = random_sggi(rng, rng.choice(list(degrees)), rng.choice(list(ranks)))
        if s is None:
            continue
        try:
            closure(tuples(s), s.degree, limit=max_order)
        except OverflowError:
            continue
        out.append(s)
    return out


KLEIN = Sggi.parse(["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"], 4)
SIMPLEX = Sggi.parse(["(1,2)", "(2,3)", "(3,4)"], 4)


def named_examples() -> list[tuple[str, Sggi, bool]]:
    """Small hand-made cases with known verdicts."""
    return [
        ("klein", KLEIN, False),
        ("simplex", SIMPLEX, True),
        ("cube", Sggi.parse(["(1,2)(3,4)(5,6)(7,8)", "(2,3)(6,7)", "(1,5)(2,6)(3,7)(4,8)"], 8), True),
        ("triangle", Sggi.parse(["(1,2)", "(2,3)"], 3), True),
        ("equal_pair", Sggi.parse(["(1,2)", "(1,2)"], 2), False),
        ("pentagon", Sggi.parse(["(2,5)(3,4)", "(1,2)(3,5)"], 5), True),
    ]


@pytest.fixture(scope="session")
def corpus() -> list[Sggi]:
    return make_corpus(2024, 60, 10**4)


@pytest.fixture(scope="session")
def klein() -> Sggi:
    return KLEIN


@pytest.fixture(scope="session")
def simplex() -> Sggi:
    return SIMPLEX
