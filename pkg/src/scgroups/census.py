"""Census: for each degree n and rank r, a certified rank r string C-group for A_n.

Each (n, r) cell is planned from the family registry and the seeds, then
built and verified independently.  A cell that no in-package construction
reaches is either an external cell (covered by a cited classification and
listed explicitly) or a gap.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .classify import GroupType
from .families import build, seed_extended, seed_for
from .group import DEFAULT_CONFIG, EngineConfig
from .sggi import Sggi
from .verify import CERTIFIED, UNDECIDED, verify

__all__ = ["Route", "CensusCell", "CensusResult", "plan_cell", "run_census", "format_census",
           "DEFAULT_N_CAP", "EXTERNAL_SMALL"]

DEFAULT_N_CAP = 24

# Rank 4-6 cells with n >= 12 that no seed family reaches and no other
# construction here covers; they rest on the small-degree classifications.
EXTERNAL_SMALL = {(4, 10), (4, 12), (4, 14), (5, 10)}

VERIFIED = "verified"
EXTERNAL = "external"
GAP = "gap"
REFUTED_CELL = "refuted"


@dataclass(frozen=True)
class Route:
    kind: str          # "family", "seed" or "external"
    name: str = ""
    r: int = 0
    k: int = 0
    rank: int = 0
    family: int = 0
    t: int = 0
    reason: str = ""

    def label(self) -> str:
        if self.kind == "family":
            return f"{self.name}({self.r},{self.k})"
        if self.kind == "seed":
            return f"seed({self.rank},{self.family}) t={self.t}"
        return self.reason

    def construct(self) -> Sggi:
        if self.kind == "family":
            return build(self.name, self.r, self.k)
        if self.kind == "seed":
            return seed_extended(self.rank, self.family, self.t)
        raise ValueError("external cells have no construction")


@dataclass
class CensusCell:
    n: int
    r: int
    status: str
    source: str
    order: int | None = None
    classification: str | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (VERIFIED, EXTERNAL)


@dataclass
class CensusResult:
    cells: list[CensusCell] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.cells)

    @property
    def failures(self) -> list[CensusCell]:
        return [c for c in self.cells if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


def plan_cell(n: int, r: int) -> Route | None:
    """Which construction covers A_n at rank r, or None for a gap."""
    if r == 3:
        return Route("external", reason="external: rank 3 classification")
    if n % 2 == 1 and n == 2 * r + 1:
        return Route("external", reason="external: top odd rank n = 2r+1")
    if r in (4, 5, 6):
        hit = seed_for(r, n)
        if hit:
            fam, t = hit
            return Route("seed", rank=r, family=fam, t=t)
        if r == 6 and n % 2 == 0 and n >= 2 * r + 2:
            return Route("family", name="D", r=r, k=n - 2 * r - 2)
        if (r, n) in EXTERNAL_SMALL:
            return Route("external", reason="external: small-degree classification")
        return None
    if n % 2 == 0:
        if n >= 2 * r + 2:
            return Route("family", name="D", r=r, k=n - 2 * r - 2)
        return None
    k = n - 2 * r - 1
    if k >= 0 and k % 4 == 2:
        return Route("family", name="S", r=r, k=k)
    k = n - 2 * r - 3
    if k >= 0 and k % 4 == 2:
        return Route("family", name="B", r=r, k=k)
    return None


def _run_cell(n: int, r: int, config: EngineConfig, graph_dir: str | None) -> CensusCell:
    route = plan_cell(n, r)
    if route is None:
        return CensusCell(n, r, GAP, "no construction")
    if route.kind == "external":
        return CensusCell(n, r, EXTERNAL, route.reason)
    s = route.construct()
    rep = verify(s, config=config)
    cls = rep.classification
    cell = CensusCell(n, r, VERIFIED, route.label(), rep.order, str(cls) if cls else None)
    if rep.verdict == UNDECIDED:
        cell.status, cell.note = UNDECIDED, rep.note
    elif rep.verdict != CERTIFIED:
        cell.status, cell.note = REFUTED_CELL, "verification refuted the intersection property"
    elif s.degree != n or s.rank != r or cls != GroupType.alt(n):
        cell.status = REFUTED_CELL
        cell.note = f"expected Alt({n}) of rank {r} on {n} points"
    if graph_dir is not None:
        path = Path(graph_dir) / f"A{n}_rank{r}.json"
        path.write_text(s.to_graph().dumps())
    return cell


def census_cells(n_min: int, n_max: int) -> list[tuple[int, int]]:
    # ranks 3 .. ceil(n/2) - 1
    return [(n, r) for n in range(n_min, n_max + 1) for r in range(3, (n + 1) // 2)]


def run_census(n_max: int, n_min: int = 12, config: EngineConfig | None = None, jobs: int = 1,
               graph_dir: str | None = None, time_budget: float | None = None,
               n_cap: int = DEFAULT_N_CAP) -> CensusResult:
    if n_max > n_cap:
        raise ValueError(f"n_max={n_max} exceeds the cap {n_cap}")
    if n_min > n_max:
        raise ValueError(f"n_min={n_min} > n_max={n_max}")
    cfg = config or DEFAULT_CONFIG
    if graph_dir is not None:
        Path(graph_dir).mkdir(parents=True, exist_ok=True)
    todo = census_cells(n_min, n_max)
    start = time.monotonic()
    done: dict[tuple[int, int], CensusCell] = {}

    def out_of_time() -> bool:
        return time_budget is not None and time.monotonic() - start > time_budget

    if jobs <= 1:
        for n, r in todo:
            if out_of_time():
                done[(n, r)] = CensusCell(n, r, UNDECIDED, "not run", note="time budget exhausted")
            else:
                done[(n, r)] = _run_cell(n, r, cfg, graph_dir)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(_run_cell, n, r, cfg, graph_dir): (n, r) for n, r in todo}
            for fut in as_completed(futures):
                n, r = futures[fut]
                done[(n, r)] = fut.result()
                if out_of_time():
                    for other, key in futures.items():
                        if other.cancel():
                            done[key] = CensusCell(*key, UNDECIDED, "not run", note="time budget exhausted")
    return CensusResult([done[key] for key in todo])


def format_census(result: CensusResult, fmt: str = "text") -> str:
    if fmt == "structured":
        body = {
            "cells": [asdict(c) for c in result.cells],
            "summary": _summary(result),
        }
        return json.dumps(body, indent=2) + "\n"
    lines = [f"{'n':>3} {'r':>3}  {'status':<9} {'source':<40} classification"]
    for c in result.cells:
        lines.append(f"{c.n:>3} {c.r:>3}  {c.status:<9} {c.source:<40} {c.classification or '-'}"
                     + (f"  ({c.note})" if c.note else ""))
    s = _summary(result)
    lines.append("")
    lines.append(", ".join(f"{k} {v}" for k, v in s.items()))
    return "\n".join(lines) + "\n"


def _summary(result: CensusResult) -> dict:
    return {status: result.count(status) for status in (VERIFIED, EXTERNAL, GAP, UNDECIDED, REFUTED_CELL)}
