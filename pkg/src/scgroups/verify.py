"""Certification of the intersection property.

``verify`` recurses on the two maximal string sections and then compares
Gamma_0 ∩ Gamma_{r-1} with Gamma_{0,r-1} by exact intersection; that
single equality, with both sections certified, suffices.  ``verify_brute``
checks every pair of generator subsets by element enumeration and serves
as the oracle for small groups.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .classify import GroupType, classify
from .group import (
    DEFAULT_CONFIG,
    EngineConfig,
    ResourceLimitError,
    SizeLimitError,
    closure_elements,
    intersect,
)
from .sggi import Sggi, StringViolation

__all__ = ["VerificationReport", "verify", "verify_brute", "CERTIFIED", "REFUTED", "UNDECIDED"]

CERTIFIED = "string C-group"
REFUTED = "not a string C-group"
UNDECIDED = "undecided"

EXIT_CODES = {CERTIFIED: 0, REFUTED: 1, UNDECIDED: 2}


@dataclass
class VerificationReport:
    rank: int
    degree: int
    order: int
    schlafli: list[int]
    violations: list[StringViolation]
    verdict: str
    method: str = "recursive"
    facet: "VerificationReport | None" = None
    vertex_figure: "VerificationReport | None" = None
    intersection_ok: bool | None = None
    intersection_orders: tuple[int, int] | None = None  # (|G0 ∩ G_{r-1}|, |G_{0,r-1}|)
    classification: GroupType | None = None
    note: str = ""

    @property
    def string_ok(self) -> bool:
        return not self.violations

    @property
    def positive(self) -> bool:
        return self.verdict == CERTIFIED

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "rank": self.rank,
            "degree": self.degree,
            "order": self.order,
            "schlafli": self.schlafli,
            "string_condition": "ok" if self.string_ok else [
                {"i": v.i, "j": v.j, "order": v.order, "reason": v.reason} for v in self.violations],
            "intersection_ok": self.intersection_ok,
            "intersection_orders": list(self.intersection_orders) if self.intersection_orders else None,
            "classification": str(self.classification) if self.classification else None,
            "method": self.method,
            "note": self.note,
            "facet": self.facet.to_dict() if self.facet else None,
            "vertex_figure": self.vertex_figure.to_dict() if self.vertex_figure else None,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def summary(self) -> str:
        cls = f" {self.classification}" if self.classification else ""
        return f"{self.verdict}: rank {self.rank}, degree {self.degree}, order {self.order}, type {self.schlafli}{cls}"

    def render_text(self, depth: int = 1, indent: int = 0, label: str = "group") -> str:
        """Indented certificate tree, one line per section, ``depth`` levels deep."""
        pad = "  " * indent
        line = f"{pad}{label}: {self.summary()}"
        if self.violations:
            bad = ", ".join(f"rho_{v.i}rho_{v.j} order {v.order}" if v.i != v.j
                            else f"rho_{v.i} order {v.order}" for v in self.violations)
            line += f"; string condition fails ({bad})"
        if self.intersection_orders:
            got, want = self.intersection_orders
            line += f"; intersection order {got}, section order {want}"
        if self.note:
            line += f"; {self.note}"
        lines = [line]
        if depth > 0:
            for sub, name in ((self.facet, "facet"), (self.vertex_figure, "vertex figure")):
                if sub:
                    lines.append(sub.render_text(depth - 1, indent + 1, name))
        return "\n".join(lines)


def _base_report(s: Sggi, violations, verdict, classify_group: bool, **kw) -> VerificationReport:
    order = s.order()
    return VerificationReport(
        rank=s.rank,
        degree=s.degree,
        order=order,
        schlafli=s.schlafli_type(),
        violations=violations,
        verdict=verdict,
        classification=classify(s.group) if classify_group else None,
        **kw,
    )


def verify(s: Sggi, config: EngineConfig | None = None, memo: dict | None = None,
           classify_group: bool = True) -> VerificationReport:
    """Certify or refute that ``s`` is a string C-group.

    Section reports are memoised by generator tuple; Gamma_0 of the facet
    and the facet of Gamma_0 are the same section and are computed once.
    """
    cfg = config or DEFAULT_CONFIG
    memo = {} if memo is None else memo
    report = _verify(s, cfg, memo)
    if classify_group and report.classification is None:
        report.classification = classify(s.group)
    return report


def _verify(s: Sggi, cfg: EngineConfig, memo: dict) -> VerificationReport:
    hit = memo.get(s.key)
    if hit is not None:
        return hit
    violations = s.check_string_condition()
    r = s.rank
    trivial = s.degenerate
    if violations or trivial:
        note = f"trivial generators {trivial}" if trivial else ""
        rep = _base_report(s, violations, REFUTED, False, note=note)
    elif r <= 1:
        rep = _base_report(s, violations, CERTIFIED, False)
    elif r == 2:
        same = s[0] == s[1]
        rep = _base_report(s, violations, REFUTED if same else CERTIFIED, False,
                           note="rho_0 = rho_1" if same else "")
    else:
        facet = _verify(s.facet(), cfg, memo)
        vfig = _verify(s.vertex_figure(), cfg, memo)
        if not (facet.positive and vfig.positive):
            verdict = UNDECIDED if UNDECIDED in (facet.verdict, vfig.verdict) else REFUTED
            rep = _base_report(s, violations, verdict, False, facet=facet, vertex_figure=vfig,
                               note="a maximal section is not certified")
        else:
            g0 = s.vertex_figure().group
            g1 = s.facet().group
            middle = s.section(range(1, r - 1)).group
            try:
                inter = intersect(g0, g1, known=middle, config=cfg)
            except ResourceLimitError as exc:
                rep = _base_report(s, violations, UNDECIDED, False, facet=facet,
                                   vertex_figure=vfig, note=str(exc))
            else:
                got, want = inter.order(), middle.order()
                ok = got == want
                rep = _base_report(s, violations, CERTIFIED if ok else REFUTED, False,
                                   facet=facet, vertex_figure=vfig, intersection_ok=ok,
                                   intersection_orders=(got, want))
    memo[s.key] = rep
    return rep


def verify_brute(s: Sggi, limit: int = 10**5) -> bool:
    """Check the intersection property for every pair of index sets by enumeration."""
    if s.check_string_condition() or s.degenerate:
        return False
    if s.rank == 2 and s[0] == s[1]:
        return False
    n = s.degree
    raws = [g.raw(n) for g in s.generators]
    total = closure_elements(raws, n, limit=limit)
    del total
    subsets = [frozenset(c) for k in range(s.rank + 1) for c in combinations(range(s.rank), k)]
    elems = {I: closure_elements([raws[i] for i in sorted(I)], n) for I in subsets}
    for a, I in enumerate(subsets):
        for J in subsets[a + 1:]:
            if I <= J or J <= I:
                continue
            small, large = sorted((elems[I], elems[J]), key=len)
            common = sum(1 for x in small if x in large)
            if common != len(elems[I & J]):
                return False
    return True


__all__ += ["SizeLimitError", "EXIT_CODES"]
