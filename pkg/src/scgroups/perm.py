"""Permutations of {1..n}.

Points are 1-based at the API surface and composition is left to right:
``a * b`` first applies ``a``, then ``b``, so ``p^(a*b) = (p^a)^b``.
Internally the images are kept as a 0-based tuple, which is also the raw
form the group engine works with.
"""

from __future__ import annotations

import re
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "compose",
    "inverse",
    "element_order",
    "parity",
    "cycles",
    "support",
    "is_involution",
]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _trim(img: tuple[int, ...]) -> tuple[int, ...]:
    end = len(img)
    while end and img[end - 1] == end - 1:
        end -= 1
    return img[:end]


class Permutation:
    """An immutable bijection of {1..degree}.

    Permutations of different declared degrees compare, hash and multiply
    as if the smaller one fixed the extra points.
    """

    __slots__ = ("_img", "_key")

    def __init__(self, images: Sequence[int] = ()):
        img = tuple(p - 1 for p in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {list(images)}")
        self._img = img
        self._key = _trim(img)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p._img = img
        p._key = _trim(img)
        return p

    @classmethod
    def identity(cls, degree: int = 0) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cyc: Iterable[Sequence[int]], degree: int = 0) -> "Permutation":
        cyc = [tuple(c) for c in cyc]
        n = max([degree, *(max(c) for c in cyc if c)])
        img = list(range(n))
        seen = set()
        for c in cyc:
            if len(set(c)) != len(c) or seen & set(c):
                raise ValueError(f"cycles are not disjoint: {cyc}")
            seen |= set(c)
            if min(c, default=1) < 1:
                raise ValueError("points are 1-based")
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @classmethod
    def parse(cls, text: str, degree: int = 0) -> "Permutation":
        """Parse cycle notation such as ``"(1,2)(3, 4 ,5)"`` or ``"()"``."""
        stripped = re.sub(r"\s+", "", text)
        if _CYCLE_RE.sub("", stripped):
            raise ValueError(f"cannot parse permutation {text!r}")
        cyc = []
        for body in _CYCLE_RE.findall(stripped):
            if not body:
                continue
            try:
                cyc.append(tuple(int(x) for x in body.split(",")))
            except ValueError:
                raise ValueError(f"cannot parse permutation {text!r}") from None
        return cls.from_cycles(cyc, degree)

    # -- basic access --

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image list: ``images[p-1]`` is the image of ``p``."""
        return tuple(i + 1 for i in self._img)

    def raw(self, degree: int | None = None) -> tuple[int, ...]:
        """0-based image tuple, padded with fixed points up to ``degree``."""
        if degree is None or degree == len(self._img):
            return self._img
        if degree < len(self._key):
            raise ValueError(f"permutation moves points beyond degree {degree}")
        return self._key + tuple(range(len(self._key), degree))

    def __call__(self, point: int) -> int:
        if point > len(self._img):
            return point
        return self._img[point - 1] + 1

    def extend(self, degree: int) -> "Permutation":
        return Permutation._raw(self.raw(max(degree, len(self._key))))

    # -- arithmetic --

    def __mul__(self, other: "Permutation") -> "Permutation":
        a, b = self._img, other._img
        n = max(len(a), len(b))
        if len(a) < n:
            a = a + tuple(range(len(a), n))
        if len(b) < n:
            b = b + tuple(range(len(b), n))
        return Permutation._raw(tuple([b[i] for i in a]))

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: "Permutation") -> bool:
        return self._key < other._key

    # -- structure --

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self._img[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self._img[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(p + 1 for p in cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted lengths of the nontrivial cycles."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, j in enumerate(self._img) if i != j)

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def is_identity(self) -> bool:
        return not self._key

    def is_involution(self) -> bool:
        return bool(self._key) and all(self._img[j] == i for i, j in enumerate(self._img))

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation mapping p to b(a(p))."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return ~a


def element_order(a: Permutation) -> int:
    return a.order()


def parity(a: Permutation) -> str:
    """``"even"`` or ``"odd"``."""
    return "even" if a.is_even() else "odd"


def cycles(a: Permutation) -> list[tuple[int, ...]]:
    return a.cycles()


def support(a: Permutation) -> frozenset[int]:
    return a.support()


def is_involution(a: Permutation) -> bool:
    return a.is_involution()
