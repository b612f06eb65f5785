"""Registry of the parameterised string C-group families and the rank 4-6 seeds.

Each family is a row of ``FAMILIES``: its parameter domain, degree and
expected isomorphism type as formulas in (r, k), and the route used to
build it.  Base graphs are written down directly as edge lists; the other
members come from the construction operators.

Vertex numbering in the transcribed graphs is ours.  The tests compare
graphs up to relabelling, so only the labelled shape matters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .classify import GroupType
from .constructions import (
    TailSpec,
    compact,
    dual_rank_reduce,
    mix,
    mix_with_facet,
    rank_reduce,
    strip_tail,
    tail_extend,
)
from .perm import Permutation
from .sggi import CprGraph, Sggi

__all__ = [
    "DomainError",
    "TranscriptionMissingError",
    "FamilySpec",
    "FAMILIES",
    "SEEDS",
    "SeedSpec",
    "build",
    "transcribed",
    "expected",
    "check_domain",
    "seed_base",
    "seed_underlying",
    "seed_extended",
    "seed_for",
    "three_cycle_witness",
    "registry_table",
    "dump_registry",
]


class DomainError(ValueError):
    """Parameters outside a family's domain."""


class TranscriptionMissingError(LookupError):
    """No explicit base graph is encoded for this family."""


# -- graph helpers --

Edge = tuple[int, int, int]


def _graph(degree: int, rank: int, edges: list[Edge]) -> Sggi:
    return CprGraph(degree, rank, tuple(edges)).to_sggi()


def _path(labels: list[int], start: int = 1) -> list[Edge]:
    """Edges start -- start+1 -- ... carrying ``labels`` in order."""
    return [(start + i, start + i + 1, lab) for i, lab in enumerate(labels)]


def _alternating(count: int, first: int) -> list[int]:
    """``count`` labels alternating between 0 and 1, starting at ``first``."""
    return [first if i % 2 == 0 else 1 - first for i in range(count)]


def _fl_labels(r: int, k: int) -> list[int]:
    # r-1, r-2, ..., 2 along the top, then k+2 edges 1, 0, 1, ...
    return list(range(r - 1, 1, -1)) + _alternating(k + 2, 1)


def _r_labels(r: int, k: int) -> list[int]:
    # k+2 alternating 0/1 edges ending in 1, then 2..r-2, then r-1, r-2, r-1
    tail = _alternating(k + 2, k % 2)
    return tail + list(range(2, r - 1)) + [r - 1, r - 2, r - 1]


def _shifted(labels: list[int], by: int = 1) -> list[int]:
    return [lab + by for lab in labels]


def _twin(labels: list[int], rungs: range) -> tuple[list[Edge], int]:
    """Two copies of a labelled path joined by 0-edges at the given positions."""
    size = len(labels) + 1
    edges = _path(labels, 1) + _path(labels, size + 1)
    edges += [(v, size + v, 0) for v in rungs]
    return edges, size


# -- transcribed base graphs --

def _fl(r: int, k: int) -> Sggi:
    lab = _fl_labels(r, k)
    return _graph(len(lab) + 1, r, _path(lab))


def _p(r: int, k: int) -> Sggi:
    # c -(r-2)- b -(r-1)- then the FL(r-1, k) path
    lab = [r - 2, r - 1] + _fl_labels(r - 1, k)
    return _graph(len(lab) + 1, r, _path(lab))


def _sh(r: int, k: int) -> Sggi:
    # two copies of FL(r-1, k/2) with labels raised by one; the 0-edges pair
    # up the tail vertices beyond the first 2-edge
    lab = _shifted(_fl_labels(r - 1, k // 2))
    size = len(lab) + 1
    edges, _ = _twin(lab, range(r, size + 1))
    return _graph(2 * size, r, edges)


def _sh_top(r: int, k: int) -> tuple[list[Edge], int, int, int]:
    """Sh(r, k) edges plus the two path ends carrying the top label."""
    s = _sh(r, k)
    size = s.degree // 2
    return list(s.to_graph().edges), s.degree, 1, size + 1


def _sl(r: int, k: int) -> Sggi:
    edges, n, top_a, top_b = _sh_top(r - 1, k)
    y, z, w = n + 1, n + 2, n + 3
    edges += [(y, z, r - 2), (z, top_b, r - 1), (top_a, w, r - 1)]
    return _graph(n + 3, r, edges)


def _s(r: int, k: int) -> Sggi:
    edges, n, top_a, top_b = _sh_top(r - 2, k)
    y, z, w, d, e = range(n + 1, n + 6)
    edges += [(y, z, r - 3), (z, top_b, r - 2), (top_a, w, r - 2), (d, e, r - 3)]
    edges += [(y, d, r - 1), (z, e, r - 1)]
    return _graph(n + 5, r, edges)


def _sy(r: int, k: int) -> Sggi:
    # two copies of FL(r-2, k/2); one continues to w, the other to z and y;
    # d - e is the sesqui edge, and rho_{r-1} swaps the y-z and d-e edges
    lab = _fl_labels(r - 2, k // 2)
    size = len(lab) + 1
    edges = _path(lab, 1) + _path(lab, size + 1)
    n = 2 * size
    y, z, w, d, e = range(n + 1, n + 6)
    edges += [(y, z, r - 3), (z, size + 1, r - 2), (1, w, r - 2), (d, e, r - 3)]
    edges += [(y, d, r - 1), (z, e, r - 1)]
    return _graph(n + 5, r, edges)


def _sm(r: int, k: int = 0) -> Sggi:
    return _sy(r, 0)


def _r(r: int, k: int) -> Sggi:
    lab = _r_labels(r, k)
    return _graph(len(lab) + 1, r, _path(lab))


def _l(r: int, k: int) -> Sggi:
    # R(r-1, k) plus two (r-1)-edges: one doubles the (r-3)-edge next to
    # the end, the other hangs off the end vertex
    lab = _r_labels(r - 1, k)
    n = len(lab) + 1
    edges = _path(lab) + [(n - 2, n - 1, r - 1), (n, n + 1, r - 1)]
    return _graph(n + 1, r, edges)


def _bl(r: int, k: int, pendant: bool = False) -> Sggi:
    # two copies of R(r-1, k/2) with labels raised by one, joined by 0-edges
    # at the tail vertices furthest from the 3-edge
    kp = k // 2
    edges, size = _twin(_shifted(_r_labels(r - 1, kp)), range(1, kp + 2))
    n = 2 * size
    if not pendant:
        return _graph(n, r, edges)
    # as in L: one r-edge doubles the edge next to the first copy's end,
    # one hangs off the end vertex
    edges += [(size - 2, size - 1, r), (size, n + 1, r)]
    return _graph(n + 1, r + 1, edges)


def _b(r: int, k: int) -> Sggi:
    return _bl(r - 1, k, pendant=True)


def _d(r: int, k: int) -> Sggi:
    # the dual of Sh(r-2, 2) with labels raised to 2..r-1, then a path of
    # four 0/1-edges hanging off the end of one copy
    sh = _sh(r - 2, 2)
    n = sh.degree
    lifted = [(u, v, r - 1 - lab) for u, v, lab in sh.to_graph().edges]
    p, m, t1, t2, t3 = 1, n + 1, n + 2, n + 3, n + 4
    lifted += [(p, m, 1), (m, t1, 0), (t1, t2, 1), (t2, t3, 0)]
    return _graph(n + 4, r, lifted)


TRANSCRIPTIONS: dict[str, Callable[[int, int], Sggi]] = {
    "FL": _fl,
    "R": _r,
    "Sh": _sh,
    "Bl": _bl,
    "P": _p,
    "Sm": _sm,
    "Sy": _sy,
    "L": _l,
    "Sl": _sl,
    "S": _s,
    "B": _b,
    "D": lambda r, k: _d(r, 0) if k == 0 else _raise_missing("D", k),
}


def _raise_missing(name: str, k: int):
    raise TranscriptionMissingError(f"{name}: only k=0 is encoded as a graph (got k={k})")


# -- derivation routes --

def _route_r(r, k):
    if k == 0:
        return build("FL", r, 2).dual()
    return rank_reduce(build("R", r + 1, k - 1))


def _route_bl(r, k):
    return dual_rank_reduce(dual_rank_reduce(build("Sh", r + 2, k)))


def _route_sp(r, k):
    return mix(build("P", r, k // 2), build("FL", r, k // 2))


def _route_sy(r, k):
    # the chain passes through Sy(r', 0) = Sm(r') for r' below the Sy domain
    if k == 0:
        return _sm(r)
    return rank_reduce(_route_sy(r + 1, k - 2))


def _route_l(r, k):
    if k == 0:
        return _l(r, 0)
    return rank_reduce(build("L", r + 1, k - 1))


def _route_m(r, k):
    return mix_with_facet(build("L", r, k // 2))


def _route_d(r, k):
    if k == 0:
        return _d(r, 0)
    return rank_reduce(build("D", r + 1, k - 2))


# -- the table --

def _even(k):
    return k % 2 == 0


def _two_mod_four(k):
    return k % 4 == 2


def _any(k):
    return True


@dataclass(frozen=True)
class FamilySpec:
    name: str
    r_min: int
    k_rule: str  # "any", "even", "2 mod 4" or "none"
    degree: Callable[[int, int], int]
    expected_type: Callable[[int, int], GroupType | None]
    route: str
    builder: Callable[[int, int], Sggi]
    citation: str
    degree_text: str = ""
    type_text: str = ""

    def k_ok(self, k: int) -> bool:
        return {"any": _any, "even": _even, "2 mod 4": _two_mod_four, "none": lambda k: k == 0}[self.k_rule](k)


_G = GroupType
_TABLE = [
    FamilySpec("FL", 3, "any", lambda r, k: r + 1 + k, lambda r, k: _G.sym(r + 1 + k),
               "transcribed", _fl, "published construction, FL family", "r+1+k", "Sym(r+1+k)"),
    FamilySpec("R", 5, "any", lambda r, k: r + 3 + k, lambda r, k: _G.sym(r + 3 + k),
               "derived: dual(FL(r,2)), then rank_reduce(R(r+1,k-1))", _route_r,
               "published construction, R family", "r+3+k", "Sym(r+3+k)"),
    FamilySpec("Sh", 4, "2 mod 4", lambda r, k: 2 * r + k, lambda r, k: _G.even_wreath(r + k // 2),
               "transcribed", _sh, "published construction, Sh family", "2r+k", "EvenWreath(r+k/2)"),
    FamilySpec("Bl", 6, "2 mod 4", lambda r, k: 2 * r + 4 + k, lambda r, k: _G.even_wreath(r + 2 + k // 2),
               "derived: dual_rank_reduce twice from Sh(r+2,k)", _route_bl,
               "published construction, Bl family", "2r+4+k", "EvenWreath(r+2+k/2)"),
    FamilySpec("P", 4, "any", lambda r, k: r + 2 + k, lambda r, k: _G.sym(r + 2 + k),
               "transcribed", _p, "published construction, P family", "r+2+k", "Sym(r+2+k)"),
    FamilySpec("Sp", 4, "2 mod 4", lambda r, k: 2 * r + 3 + k,
               lambda r, k: _G.direct(r + 2 + k // 2, r + 1 + k // 2),
               "derived: mix(P(r,k/2), FL(r,k/2))", _route_sp,
               "published construction, Sp family", "2r+3+k", "DirectProdSym(r+1+k/2,r+2+k/2)"),
    FamilySpec("Sm", 4, "none", lambda r, k: 2 * r + 3, lambda r, k: _G.even_direct(r, r + 3),
               "transcribed", _sm, "published construction, Sm family", "2r+3", "EvenDirectProdSym(r,r+3)"),
    FamilySpec("Sy", 6, "even", lambda r, k: 2 * r + 3 + k,
               lambda r, k: _G.even_direct(r + k // 2, r + 3 + k // 2),
               "derived: Sm(r) for k=0, else rank_reduce(Sy(r+1,k-2))", _route_sy,
               "published construction, Sy family", "2r+3+k", "EvenDirectProdSym(r+k/2,r+3+k/2)"),
    FamilySpec("L", 6, "any", lambda r, k: r + 3 + k, lambda r, k: _G.sym(r + 3 + k),
               "transcribed for k=0, else rank_reduce(L(r+1,k-1))", _route_l,
               "published construction, L family", "r+3+k", "Sym(r+3+k)"),
    FamilySpec("M", 6, "even", lambda r, k: 2 * r + 5 + k, lambda r, k: None,
               "derived: mix_with_facet(L(r,k/2))", _route_m,
               "published construction, M family", "2r+5+k", "not stated"),
    FamilySpec("Sl", 6, "2 mod 4", lambda r, k: 2 * r + 1 + k, lambda r, k: _G.sym(2 * r + 1 + k),
               "transcribed", _sl, "published construction, Sl family", "2r+1+k", "Sym(2r+1+k)"),
    FamilySpec("S", 7, "2 mod 4", lambda r, k: 2 * r + 1 + k, lambda r, k: _G.alt(2 * r + 1 + k),
               "transcribed", _s, "published construction, S family", "2r+1+k", "Alt(2r+1+k)"),
    FamilySpec("B", 7, "2 mod 4", lambda r, k: 2 * r + 3 + k, lambda r, k: _G.alt(2 * r + 3 + k),
               "transcribed", _b, "published construction, B family", "2r+3+k", "Alt(2r+3+k)"),
    FamilySpec("D", 6, "even", lambda r, k: 2 * r + 2 + k, lambda r, k: _G.alt(2 * r + 2 + k),
               "transcribed for k=0, else rank_reduce(D(r+1,k-2))", _route_d,
               "published construction, D family", "2r+2+k", "Alt(2r+2+k)"),
]

FAMILIES: dict[str, FamilySpec] = {f.name: f for f in _TABLE}


def check_domain(name: str, r: int, k: int = 0, *, allow_sh_rank3: bool = False) -> FamilySpec:
    spec = FAMILIES.get(name)
    if spec is None:
        raise DomainError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    r_min = 3 if (name == "Sh" and allow_sh_rank3) else spec.r_min
    if r < r_min:
        raise DomainError(f"{name}: needs r >= {r_min}, got r={r}")
    if k < 0:
        raise DomainError(f"{name}: needs k >= 0, got k={k}")
    if not spec.k_ok(k):
        rule = "k = 0" if spec.k_rule == "none" else f"k {spec.k_rule}" if spec.k_rule != "even" else "k even"
        raise DomainError(f"{name}: needs {rule}, got k={k}")
    return spec


def build(name: str, r: int, k: int = 0, *, allow_sh_rank3: bool = False) -> Sggi:
    """Construct family ``name`` at (r, k) by its registered route."""
    spec = check_domain(name, r, k, allow_sh_rank3=allow_sh_rank3)
    return spec.builder(r, k)


def transcribed(name: str, r: int, k: int = 0) -> Sggi:
    """The explicit-graph version, for comparison with a derived route."""
    check_domain(name, r, k)
    fn = TRANSCRIPTIONS.get(name)
    if fn is None:
        raise TranscriptionMissingError(f"{name} has no explicit graph; it is built from other families")
    return fn(r, k)


def expected(name: str, r: int, k: int = 0) -> tuple[int, int | None, GroupType | None]:
    """(degree, order, type) as stated for the family; order and type may be None."""
    spec = check_domain(name, r, k)
    t = spec.expected_type(r, k)
    return spec.degree(r, k), (t.order if t else None), t


# -- seeds for ranks 4, 5 and 6 --

@dataclass(frozen=True)
class SeedSpec:
    rank: int
    family: int
    generators: tuple[str, ...]
    t0: int   # Gamma^(t0 + 4j) is the alternating group of degree n0 + 4j
    n0: int

    @property
    def m(self) -> int:
        """Attachment vertex of the tail: the smaller point of rho_0."""
        return min(Permutation.parse(self.generators[0]).support())


_SEED_ROWS = [
    (4, 1, ["(6,7)", "(5,6)(7,8)", "(2,3)(4,5)", "(1,2)(3,4)"], 3, 9),
    (4, 2, ["(15,16)", "(4,5)(6,7)(14,15)(16,17)", "(1,2)(3,4)(6,8)(9,10)(11,12)(13,14)",
            "(2,3)(4,6)(5,7)(8,9)(10,11)(12,13)"], 3, 18),
    (4, 3, ["(11,12)", "(3,4)(5,7)(6,11)(10,9)(12,13)", "(2,3)(4,6)(5,8)(7,10)",
            "(1,2)(3,5)(4,7)(10,9)"], 4, 15),
    (4, 4, ["(12,13)", "(3,4)(5,7)(6,9)(10,12)(13,14)", "(2,3)(4,6)(5,8)(7,10)",
            "(1,2)(3,5)(4,7)(8,11)"], 4, 16),
    (5, 1, ["(10,11)", "(9,10)(11,12)", "(4,5)(8,9)", "(1,2)(3,4)(5,6)(7,8)", "(2,3)(6,7)"], 3, 13),
    (5, 2, ["(11,12)", "(10,11)(12,13)", "(5,6)(9,10)", "(2,3)(4,5)(6,7)(8,9)",
            "(1,2)(3,4)(5,6)(7,8)"], 3, 14),
    (5, 3, ["(12,13)", "(9,12)(13,14)", "(3,4)(5,7)(6,9)(10,11)", "(2,3)(4,6)(5,8)(7,10)",
            "(1,2)(3,5)(4,7)(10,11)"], 3, 15),
    (5, 4, ["(9,10)", "(8,9)(10,11)", "(1,2)(3,4)(5,6)(7,8)", "(2,3)(6,7)", "(3,5)(4,6)"], 3, 12),
    (6, 1, ["(14,15)", "(13,14)(15,16)", "(6,7)(12,13)", "(2,4)(5,6)(7,8)(11,12)",
            "(1,2)(3,5)(8,9)(10,11)", "(1,3)(9,10)"], 3, 17),
    (6, 2, ["(15,16)", "(14,15)(16,17)", "(9,12)(11,14)", "(3,4)(5,7)(6,9)(8,11)",
            "(2,3)(4,6)(5,8)(7,10)", "(1,2)(3,5)(4,7)(10,13)"], 3, 18),
    (6, 3, ["(12,13)", "(11,12)(13,14)", "(2,4)(5,8)(6,9)(10,11)", "(1,2)(3,6)(5,8)(7,10)",
            "(2,5)(3,7)(4,8)(6,9)", "(1,3)(2,6)(4,9)(5,8)"], 3, 15),
    (6, 4, ["(13,14)", "(12,13)(14,15)", "(8,10)(11,12)", "(2,3)(4,6)(5,8)(9,11)",
            "(1,2)(3,5)(4,7)(6,9)", "(2,4)(3,6)"], 3, 16),
]

SEEDS: dict[tuple[int, int], SeedSpec] = {
    (rank, fam): SeedSpec(rank, fam, tuple(gens), t0, n0) for rank, fam, gens, t0, n0 in _SEED_ROWS
}


def _seed(rank: int, family: int) -> SeedSpec:
    try:
        return SEEDS[(rank, family)]
    except KeyError:
        raise DomainError(f"no seed family {family} at rank {rank}; ranks 4-6, families 1-4") from None


def seed_base(rank: int, family: int) -> Sggi:
    """The listed Gamma^2 generators, verbatim."""
    spec = _seed(rank, family)
    gens = [Permutation.parse(g) for g in spec.generators]
    return Sggi(gens, spec.m + 2)


def seed_underlying(rank: int, family: int) -> Sggi:
    """Gamma itself: Gamma^2 with its two tail edges removed (rho_0 becomes trivial)."""
    spec = _seed(rank, family)
    return strip_tail(seed_base(rank, family), spec.m)


def seed_extended(rank: int, family: int, t: int) -> Sggi:
    if t < 2:
        raise DomainError(f"tail length must be >= 2, got t={t}")
    spec = _seed(rank, family)
    return tail_extend(TailSpec(seed_underlying(rank, family), spec.m, t))


def seed_for(rank: int, n: int) -> tuple[int, int] | None:
    """(family, t) whose Gamma^t is the alternating group of degree n, if any."""
    for fam in range(1, 5):
        spec = SEEDS.get((rank, fam))
        if spec and n >= spec.n0 and (n - spec.n0) % 4 == 0:
            return fam, spec.t0 + (n - spec.n0)
    return None


def three_cycle_witness(s: Sggi) -> Permutation:
    """(rho_2 rho_1 rho_0 rho_1)^2."""
    if s.rank < 3:
        raise DomainError("three_cycle_witness needs rank >= 3")
    r0, r1, r2 = s[0], s[1], s[2]
    return (r2 * r1 * r0 * r1) ** 2


# -- dump --

def registry_table() -> list[dict]:
    rows = []
    for f in _TABLE:
        rows.append({
            "name": f.name,
            "domain": {"r_min": f.r_min, "k": f.k_rule},
            "degree": f.degree_text,
            "type": f.type_text,
            "route": f.route,
            "citation": f.citation,
        })
    for spec in SEEDS.values():
        rows.append({
            "name": f"seed({spec.rank},{spec.family})",
            "domain": {"t_min": 2},
            "degree": f"{spec.m}+t",
            "type": f"Alt({spec.n0}+4j) at t={spec.t0}+4j",
            "route": "listed generators, tail_extend",
            "citation": f"rank {spec.rank} seed family {spec.family}",
            "generators": list(spec.generators),
        })
    return rows


def dump_registry() -> str:
    return json.dumps(registry_table(), indent=2) + "\n"


__all__ += ["TRANSCRIPTIONS", "compact"]
