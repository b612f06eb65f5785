"""String groups generated by involutions and their CPR graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .group import PermutationGroup
from .perm import Permutation

__all__ = ["Sggi", "CprGraph", "GraphError", "StringViolation"]


class GraphError(ValueError):
    """A graph does not describe involutions (some label is not a matching)."""


@dataclass(frozen=True)
class StringViolation:
    i: int
    j: int
    order: int
    reason: str = "commuting"  # or "involution" when i == j


class Sggi:
    """An ordered tuple of involutions rho_0..rho_{r-1} on {1..degree}.

    Identity generators are allowed (they arise when a lower-rank group is
    padded for mixing) and are reported by ``degenerate``.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = list(generators)
        n = max([degree or 0, *(g.degree for g in gens)])
        self.degree = n
        self.generators: tuple[Permutation, ...] = tuple(g.extend(n) for g in gens)

    @classmethod
    def parse(cls, cycle_strings: Sequence[str], degree: int | None = None) -> "Sggi":
        return cls([Permutation.parse(s) for s in cycle_strings], degree)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> Permutation:
        return self.generators[i]

    @property
    def degenerate(self) -> list[int]:
        """Indices of identity generators."""
        return [i for i, g in enumerate(self.generators) if g.is_identity()]

    @cached_property
    def group(self) -> PermutationGroup:
        return PermutationGroup(self.generators, self.degree)

    def order(self) -> int:
        return self.group.order()

    @property
    def key(self) -> tuple:
        """Hashable identity: degree plus the raw generator images."""
        return (self.degree, tuple(g.raw(self.degree) for g in self.generators))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Sggi) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Sggi([{', '.join(repr(str(g)) for g in self.generators)}], degree={self.degree})"

    # -- relations --

    def check_string_condition(self) -> list[StringViolation]:
        """Every failure of the involution and commuting conditions; empty means ok."""
        out = []
        for i, g in enumerate(self.generators):
            if not g.is_identity() and not g.is_involution():
                out.append(StringViolation(i, i, g.order(), "involution"))
        for i in range(self.rank):
            for j in range(i + 2, self.rank):
                o = (self.generators[i] * self.generators[j]).order()
                if o > 2:
                    out.append(StringViolation(i, j, o))
        return out

    def is_sggi(self) -> bool:
        return not self.check_string_condition()

    def schlafli_type(self) -> list[int]:
        return [(self.generators[i] * self.generators[i + 1]).order() for i in range(self.rank - 1)]

    # -- derived tuples --

    def dual(self) -> "Sggi":
        return Sggi(reversed(self.generators), self.degree)

    def section(self, keep: Iterable[int]) -> "Sggi":
        idx = sorted(set(keep))
        if idx and (idx[0] < 0 or idx[-1] >= self.rank):
            raise IndexError(f"section indices {idx} out of range for rank {self.rank}")
        return Sggi([self.generators[i] for i in idx], self.degree)

    def facet(self) -> "Sggi":
        return self.section(range(self.rank - 1))

    def vertex_figure(self) -> "Sggi":
        return self.section(range(1, self.rank))

    def relabel(self, mapping: dict[int, int], degree: int | None = None) -> "Sggi":
        """Rename points by ``mapping`` (points not mentioned stay put)."""
        n = degree or max([self.degree, *mapping.values()])
        gens = []
        for g in self.generators:
            cyc = [tuple(mapping.get(p, p) for p in c) for c in g.cycles()]
            gens.append(Permutation.from_cycles(cyc, n))
        return Sggi(gens, n)

    def shift(self, offset: int) -> "Sggi":
        return self.relabel({p: p + offset for p in range(1, self.degree + 1)}, self.degree + offset)

    def to_graph(self) -> "CprGraph":
        return CprGraph.from_sggi(self)


@dataclass(frozen=True)
class CprGraph:
    """Edge-labelled graph: an ``i``-edge {a, b} whenever rho_i swaps a and b."""

    degree: int
    rank: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        canon = tuple(sorted({(min(u, v), max(u, v), lab) for u, v, lab in self.edges},
                             key=lambda e: (e[2], e[0], e[1])))
        object.__setattr__(self, "edges", canon)
        self.validate()

    def validate(self) -> None:
        used: dict[int, set[int]] = {}
        for u, v, lab in self.edges:
            if not (1 <= u < v <= self.degree):
                raise GraphError(f"edge ({u},{v}) label {lab}: vertices must satisfy 1 <= u < v <= {self.degree}")
            if not 0 <= lab < self.rank:
                raise GraphError(f"edge ({u},{v}) label {lab}: label outside 0..{self.rank - 1}")
            seen = used.setdefault(lab, set())
            clash = {u, v} & seen
            if clash:
                raise GraphError(f"label {lab} is not a matching: vertex {min(clash)} lies on two {lab}-edges")
            seen |= {u, v}

    @classmethod
    def from_sggi(cls, s: Sggi) -> "CprGraph":
        edges = []
        for lab, g in enumerate(s.generators):
            for c in g.cycles():
                if len(c) != 2:
                    raise GraphError(f"generator {lab} is not an involution: {g}")
                edges.append((c[0], c[1], lab))
        return cls(s.degree, s.rank, tuple(edges))

    def to_sggi(self) -> Sggi:
        cyc: list[list[tuple[int, int]]] = [[] for _ in range(self.rank)]
        for u, v, lab in self.edges:
            cyc[lab].append((u, v))
        return Sggi([Permutation.from_cycles(c, self.degree) for c in cyc], self.degree)

    def edges_with_label(self, lab: int) -> list[tuple[int, int]]:
        return [(u, v) for u, v, l in self.edges if l == lab]

    # -- serialisation --

    def dumps(self) -> str:
        """Canonical text form; identical graphs give identical bytes."""
        lines = ["{", f'  "degree": {self.degree},', f'  "rank": {self.rank},']
        if self.edges:
            lines.append('  "edges": [')
            body = [f"    [{u}, {v}, {lab}]" for u, v, lab in self.edges]
            lines.append(",\n".join(body))
            lines.append("  ]")
        else:
            lines.append('  "edges": []')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "CprGraph":
        try:
            data = json.loads(text)
            degree, rank, edges = int(data["degree"]), int(data["rank"]), data["edges"]
            triples = tuple((int(u), int(v), int(lab)) for u, v, lab in edges)
        except (ValueError, KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph file: {exc}") from None
        return cls(degree, rank, triples)

    def to_dot(self, name: str = "cpr") -> str:
        lines = [f"graph {name} {{", "  node [shape=circle];"]
        lines += [f"  {v};" for v in range(1, self.degree + 1)]
        for u, v, lab in sorted(self.edges):
            lines.append(f'  {u} -- {v} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_graph(g: CprGraph) -> Sggi:
    return g.to_sggi()


def to_graph(s: Sggi) -> CprGraph:
    return s.to_graph()


def _labelled_nx(s: Sggi):
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(1, s.degree + 1))
    for lab, gen in enumerate(s.generators):
        for c in gen.cycles():
            if len(c) != 2:
                raise GraphError(f"generator {lab} is not an involution: {gen}")
            u, v = c
            if g.has_edge(u, v):
                g[u][v]["labels"] = g[u][v]["labels"] | {lab}
            else:
                g.add_edge(u, v, labels=frozenset([lab]))
    return g


def isomorphic(a: Sggi, b: Sggi) -> bool:
    """Same labelled CPR graph up to renaming the points."""
    if (a.rank, a.degree) != (b.rank, b.degree):
        return False
    if a.to_graph() == b.to_graph():
        return True
    from networkx.algorithms.isomorphism import GraphMatcher

    gm = GraphMatcher(_labelled_nx(a), _labelled_nx(b),
                      edge_match=lambda x, y: x["labels"] == y["labels"])
    return gm.is_isomorphic()


__all__ += ["isomorphic", "from_graph", "to_graph"]
