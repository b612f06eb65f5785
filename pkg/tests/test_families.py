from math import factorial

import pytest

from scgroups import (DomainError, FAMILIES, GroupType, TranscriptionMissingError, build, classify, expected,
                      isomorphic, mix_with_facet, rank_reduce, sesqui_extension, verify)
from scgroups.families import check_domain, transcribed

DEGREE_CAP = 24


def members(cap, rank_span=None):
    """Registry entries of degree <= cap; P and Sp at r = 4 are tested separately."""
    for name, f in FAMILIES.items():
        top = cap if rank_span is None else f.r_min + rank_span
        for r in range(f.r_min, top + 1):
            if name in ("P", "Sp") and r == 4:
                continue
            for k in range(cap):
                if f.k_ok(k) and f.degree(r, k) <= cap:
                    yield name, r, k


def _case_id(c):
    return f"{c[0]}({c[1]},{c[2]})"


# every family, its first few ranks, degree up to 20; the full sweep is opt-in
QUICK = list(members(20, rank_span=2))
FULL = [c for c in members(DEGREE_CAP) if c not in QUICK]


def _check_member(name, r, k):
    s = build(name, r, k)
    degree, order, typ = expected(name, r, k)
    assert (s.degree, s.rank) == (degree, r)
    rep = verify(s)
    assert rep.positive, rep.render_text()
    if typ is not None:
        assert rep.classification == typ
        assert rep.order == order


@pytest.mark.parametrize("case", QUICK, ids=_case_id)
def test_member(case):
    _check_member(*case)


@pytest.mark.slow
@pytest.mark.parametrize("case", FULL, ids=_case_id)
def test_member_full_sweep(case):
    _check_member(*case)


def test_table_examples():
    assert build("FL", 3, 0).order() == 24
    assert build("P", 4, 0).order() == 720
    sh = build("Sh", 4, 2)
    assert sh.order() == 2 ** 5 * factorial(5) // 2
    assert classify(sh.group) == GroupType.even_wreath(5)
    assert build("Sm", 4).order() == factorial(4) * factorial(7) // 2
    L = build("L", 6, 0)
    assert L.order() == factorial(9) and L.facet().order() == factorial(8)


@pytest.mark.parametrize("k", range(11))
def test_p_rank4_pattern(k):
    # P(4,k) certifies only for k = 0 or k = 2 mod 4; otherwise Gamma_0 and
    # Gamma_3 meet in 24 elements while Gamma_{0,3} has 12
    rep = verify(build("P", 4, k))
    good = k == 0 or k % 4 == 2
    assert rep.positive is good
    assert rep.intersection_orders == ((12, 12) if good else (24, 12))
    assert rep.classification == GroupType.sym(6 + k)


def test_sp_4_2_has_the_stated_order_but_fails_intersection():
    s = build("Sp", 4, 2)
    assert s.order() == factorial(7) * factorial(6)
    assert sorted(map(len, s.group.orbits())) == [6, 7]
    assert not verify(s).positive


@pytest.mark.parametrize("name, r, k", [
    ("R", 5, 0), ("R", 6, 1), ("R", 5, 3), ("Bl", 6, 2), ("Bl", 7, 2), ("Sy", 6, 2), ("Sy", 7, 2),
    ("L", 6, 0), ("L", 6, 2), ("D", 6, 0), ("D", 7, 0),
])
def test_derivation_matches_transcription(name, r, k):
    try:
        t = transcribed(name, r, k)
    except TranscriptionMissingError:
        pytest.skip("no explicit graph for this parameter")
    assert isomorphic(build(name, r, k), t)


def test_exact_equalities():
    assert build("R", 6, 2) == transcribed("R", 6, 2)
    assert build("Sy", 6, 0) == build("Sm", 6)
    assert build("Sy", 7, 0) == build("Sm", 7)


def test_l_rank_reduction_and_facet():
    for r in (6, 7):
        for k in range(3):
            s = build("L", r, k)
            assert isomorphic(rank_reduce(build("L", r + 1, k)), build("L", r, k + 1))
            assert s.facet().order() == factorial(s.degree - 1)


def test_m_is_mix_with_facet_of_l():
    m = build("M", 6, 0)
    assert m == mix_with_facet(build("L", 6, 0))
    assert m.degree == 17
    assert classify(m.group) == GroupType.even_direct(8, 9)
    assert classify(build("M", 6, 2).group) == GroupType.even_direct(9, 10)


def test_section_cross_checks():
    b, s, sl = build("B", 7, 2), build("S", 7, 2), build("Sl", 6, 2)
    assert isomorphic(b.vertex_figure(), build("M", 6, 2))
    assert isomorphic(s.vertex_figure(), build("Sy", 6, 2))
    assert isomorphic(sl.vertex_figure(), build("Sp", 5, 2))
    assert isomorphic(s.facet(), sesqui_extension(sl, 4))


def test_edge_counts():
    for name, r, k in [("FL", 5, 2), ("R", 6, 1), ("Sh", 5, 2), ("S", 7, 2), ("D", 6, 0)]:
        s = build(name, r, k)
        edges = len(s.to_graph().edges)
        assert edges == sum(len(g.cycles()) for g in s.generators)
        if name in ("FL", "R"):
            assert edges == s.degree - 1  # a path


@pytest.mark.parametrize("name, r, k, msg", [
    ("FL", 2, 0, "r >= 3"),
    ("Sh", 4, 1, "2 mod 4"),
    ("Sh", 4, 4, "2 mod 4"),
    ("Sm", 4, 2, "k = 0"),
    ("Sy", 6, 1, "even"),
    ("S", 6, 2, "r >= 7"),
    ("FL", 4, -1, "k >= 0"),
    ("Q", 4, 0, "unknown"),
])
def test_domain_errors(name, r, k, msg):
    with pytest.raises(DomainError, match=msg):
        build(name, r, k)


def test_sh_rank3_override():
    with pytest.raises(DomainError):
        check_domain("Sh", 3, 2)
    assert build("Sh", 3, 2, allow_sh_rank3=True).rank == 3


def test_missing_transcription():
    with pytest.raises(TranscriptionMissingError):
        transcribed("D", 6, 2)
    with pytest.raises(TranscriptionMissingError):
        transcribed("M", 6, 0)
