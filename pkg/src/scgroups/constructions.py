"""Operators that build new string groups from old ones."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .group import PermutationGroup
from .perm import Permutation
from .sggi import Sggi

__all__ = [
    "PreconditionError",
    "TailSpec",
    "TailCheck",
    "mix",
    "comix_order",
    "covers",
    "mix_with_facet",
    "sesqui_extension",
    "rank_reduce",
    "dual_rank_reduce",
    "tail_extend",
    "strip_tail",
    "check_tail_hypotheses",
    "compact",
]


class PreconditionError(ValueError):
    """A construction was applied outside its hypotheses."""


def compact(s: Sggi) -> Sggi:
    """Drop the points fixed by every generator, keeping the relative order."""
    moved = sorted(set().union(*(g.support() for g in s.generators)))
    return s.relabel({p: i + 1 for i, p in enumerate(moved)}, len(moved))


def mix(P: Sggi, Q: Sggi) -> Sggi:
    """Diagonal generators on the disjoint union; Q's points follow P's."""
    r = max(P.rank, Q.rank)
    n = P.degree + Q.degree
    q = Q.shift(P.degree)
    ident = Permutation.identity(n)
    gens = []
    for i in range(r):
        a = P[i] if i < P.rank else ident
        b = q[i] if i < q.rank else ident
        gens.append(a * b)
    return Sggi(gens, n)


def comix_order(P: Sggi, Q: Sggi) -> int:
    """Order of the largest common quotient, as the index of the mix in P x Q."""
    whole = P.order() * Q.order()
    m = mix(P, Q).order()
    if whole % m:
        raise ArithmeticError(f"|mix| = {m} does not divide |P||Q| = {whole}")
    return whole // m


def covers(P: Sggi, Q: Sggi) -> bool:
    """Whether rho_i -> rho'_i extends to a homomorphism from P onto Q."""
    return mix(P, Q).order() == P.order()


def mix_with_facet(P: Sggi) -> Sggi:
    if P.rank < 1:
        raise PreconditionError("mix_with_facet needs rank >= 1")
    return mix(P, compact(P.facet()))


def sesqui_extension(s: Sggi, k: int) -> Sggi:
    """Multiply rho_k by a transposition on two fresh points."""
    if not 0 <= k < s.rank:
        raise PreconditionError(f"k={k} outside 0..{s.rank - 1}")
    n = s.degree
    tau = Permutation.from_cycles([(n + 1, n + 2)])
    gens = [g * tau if i == k else g.extend(n + 2) for i, g in enumerate(s.generators)]
    return Sggi(gens, n + 2)


def rank_reduce(s: Sggi, check_order: bool = True) -> Sggi:
    """Replace (rho_0, rho_1, rho_2) by (rho_1, rho_0 rho_2)."""
    r = s.rank
    if r < 4:
        raise PreconditionError(f"rank reduction needs rank >= 4, got {r}")
    sch = s.schlafli_type()
    small = [i for i, p in enumerate(sch) if p <= 2]
    if small:
        raise PreconditionError(f"consecutive product rho_{small[0]} rho_{small[0] + 1} has order {sch[small[0]]} <= 2")
    rho = s.generators
    if sch[2] % 2 == 0:
        if rho[0] not in PermutationGroup([rho[0] * rho[2], rho[3]], s.degree):
            raise PreconditionError("rho_0 is not in <rho_0 rho_2, rho_3>")
    out = Sggi([rho[1], rho[0] * rho[2], *rho[3:]], s.degree)
    if check_order and out.order() != s.order():
        raise AssertionError("rank reduction changed the group order")
    return out


def dual_rank_reduce(s: Sggi, check_order: bool = True) -> Sggi:
    return rank_reduce(s.dual(), check_order).dual()


@dataclass(frozen=True)
class TailSpec:
    """Adjoin a path m, m+1, ..., m+t with labels 0, 1, 0, ... to ``base``.

    ``base`` acts on 1..m and has the full rank; its rho_0 is normally
    trivial.
    """

    base: Sggi
    m: int
    t: int

    def __post_init__(self):
        if self.t < 0:
            raise PreconditionError("tail length must be >= 0")
        if self.base.rank < 2:
            raise PreconditionError("tail extension needs rank >= 2")


def tail_extend(spec: TailSpec) -> Sggi:
    base, m, t = spec.base, spec.m, spec.t
    if t == 0:
        return base
    n = max(base.degree, m + t)
    extra: list[list[tuple[int, int]]] = [[], []]
    for i in range(t):
        extra[i % 2].append((m + i, m + i + 1))
    gens = []
    for j, g in enumerate(base.generators):
        if j < 2 and extra[j]:
            g = g.extend(n) * Permutation.from_cycles(extra[j], n)
        gens.append(g.extend(n))
    return Sggi(gens, n)


def strip_tail(s: Sggi, m: int) -> Sggi:
    """Inverse of ``tail_extend``: drop every 0/1-edge beyond vertex m."""
    gens = []
    for j, g in enumerate(s.generators):
        keep = [c for c in g.cycles() if max(c) <= m]
        if j >= 2 and len(keep) != len(g.cycles()):
            raise PreconditionError(f"rho_{j} moves points beyond {m}")
        gens.append(Permutation.from_cycles(keep, m))
    return Sggi(gens, m)


@dataclass
class TailCheck:
    ok: bool
    failures: list[str] = field(default_factory=list)
    orbit_sizes: dict[int, int] = field(default_factory=dict)


def check_tail_hypotheses(s: Sggi, m: int, certify: bool = False, config=None) -> TailCheck:
    """Symmetric action of <rho_0..rho_k> on the orbit of m, for 2 <= k <= r-2.

    With ``certify`` also require a tail of length >= 2 and a positive
    verification of ``s`` itself.
    """
    failures = []
    sizes = {}
    for k in range(2, s.rank - 1):
        sub = s.section(range(k + 1)).group
        orbit = sub.orbit(m)
        sizes[k] = len(orbit)
        restricted = sub.restrict(orbit).order() if len(orbit) > 1 else 1
        if restricted != factorial(len(orbit)):
            failures.append(f"k={k}: orbit of {m} has size {len(orbit)} but the action has order {restricted}")
    if certify:
        from .verify import verify
        b = s.degree - m
        if b < 2:
            failures.append(f"tail length {b} < 2")
        rep = verify(s, config=config, classify_group=False)
        if not rep.positive:
            failures.append(f"verification: {rep.verdict}")
    return TailCheck(not failures, failures, sizes)
