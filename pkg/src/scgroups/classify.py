"""Recognise the handful of group types that string C-group families land in.

Every tag is certified by exact order together with orbit, parity and
block checks; nothing is guessed from partial evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .group import PermutationGroup

__all__ = ["GroupType", "classify"]


@dataclass(frozen=True)
class GroupType:
    tag: str
    params: tuple = ()

    def __str__(self) -> str:
        if self.tag == "Unrecognized":
            order, sizes = self.params
            return f"Unrecognized({order}, [{','.join(map(str, sizes))}])"
        return f"{self.tag}({','.join(map(str, self.params))})"

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        tag, _, rest = text.partition("(")
        body = rest.rstrip(")")
        if tag == "Unrecognized":
            order, _, sizes = body.partition(",")
            sizes = sizes.strip().strip("[]")
            return cls(tag, (int(order), tuple(int(x) for x in sizes.split(",") if x.strip())))
        return cls(tag, tuple(int(x) for x in body.split(",") if x.strip()))

    @classmethod
    def sym(cls, n: int) -> "GroupType":
        return cls("Sym", (n,))

    @classmethod
    def alt(cls, n: int) -> "GroupType":
        return cls("Alt", (n,))

    @classmethod
    def even_wreath(cls, m: int) -> "GroupType":
        return cls("EvenWreath", (m,))

    @classmethod
    def direct(cls, a: int, b: int) -> "GroupType":
        return cls("DirectProdSym", tuple(sorted((a, b))))

    @classmethod
    def even_direct(cls, a: int, b: int) -> "GroupType":
        return cls("EvenDirectProdSym", tuple(sorted((a, b))))

    @classmethod
    def sym_times_c2(cls, m: int) -> "GroupType":
        return cls("SymTimesC2", (m,))

    @property
    def order(self) -> int | None:
        """Group order implied by the tag."""
        p = self.params
        return {
            "Sym": lambda: factorial(p[0]),
            "Alt": lambda: factorial(p[0]) // 2,
            "EvenWreath": lambda: 2 ** p[0] * factorial(p[0]) // 2,
            "DirectProdSym": lambda: factorial(p[0]) * factorial(p[1]),
            "EvenDirectProdSym": lambda: factorial(p[0]) * factorial(p[1]) // 2,
            "SymTimesC2": lambda: 2 * factorial(p[0]),
            "Unrecognized": lambda: p[0],
        }[self.tag]()


def classify(G: PermutationGroup) -> GroupType:
    order = G.order()
    orbs = G.orbits()
    moved = [o for o in orbs if len(o) > 1]
    sizes = [len(o) for o in moved]
    even = G.is_even()
    unrecognized = GroupType("Unrecognized", (order, tuple(len(o) for o in orbs)))

    if len(moved) == 1:
        m = sizes[0]
        if m <= 2:
            return unrecognized
        if order == factorial(m):
            return GroupType.sym(m)
        if even and order == factorial(m) // 2:
            return GroupType.alt(m)
        if m % 2 == 0 and even and order == 2 ** (m // 2) * factorial(m // 2) // 2:
            sub = G.restrict(moved[0])
            for bs in sub.all_minimal_block_systems():
                if bs.block_size == 2 and bs.num_blocks == m // 2:
                    return GroupType.even_wreath(m // 2)
        return unrecognized

    big = [o for o in moved if len(o) > 2]
    if len(big) == 1 and len(big[0]) >= 3:
        m = len(big[0])
        if order == 2 * factorial(m) and G.restrict(big[0]).order() == factorial(m):
            return GroupType.sym_times_c2(m)

    if len(moved) == 2 and min(sizes) >= 2:
        a, b = sizes
        if order == factorial(a) * factorial(b):
            return GroupType.direct(a, b)
        if even and order == factorial(a) * factorial(b) // 2:
            return GroupType.even_direct(a, b)
    return unrecognized
