import pytest

from semitotal.catalog_io import catalog, stored_coloring, stored_cover
from semitotal.codes import (
    CodesError,
    classify_stc,
    code_report,
    edge_orthogonal,
    find_perfect_codes,
    is_efficient_tc,
    is_perfect_code,
    is_total_perfect_code,
    vertex_classes,
)
from semitotal.coloring import Coloring, beta_edges, listing, validate
from semitotal.covering import lift_coloring, verify_covering
from semitotal.kempe import swap, trace_alternating
from semitotal.graph import distances_from


def test_q3_antipodal_pairs_are_perfect_codes():
    g = catalog("q3").graph
    for v in range(g.n):
        dist = distances_from(g, v)
        antipode = dist.index(3)
        assert is_perfect_code(g, {v, antipode})
    assert not is_perfect_code(g, set(range(g.n)))


def test_foster90_mod3_codes():
    g = catalog("foster90").graph
    # the residue-1 class is a total perfect code; the other two residue
    # classes are independent dominating sets but NOT perfect codes, since
    # every residue-2 vertex has both its cycle successor and its chord
    # partner in the residue-0 class (offsets 37 and -17 are 1 mod 3)
    assert is_total_perfect_code(g, [v for v in range(90) if v % 3 == 1])
    red = [v for v in range(90) if v % 3 == 0]
    blue = [v for v in range(90) if v % 3 == 2]
    for s in (red, blue):
        assert not is_perfect_code(g, s)
        sset = set(s)
        assert all(w not in sset for v in s for w in g.adjacency[v])  # independent
        assert all(
            any(w in sset for w in g.adjacency[v]) for v in range(90) if v not in sset
        )  # dominating
    assert not is_total_perfect_code(g, [])


def test_mob6_rung_class_is_total_perfect():
    entry = catalog("mobius_ladder_6")
    mu = entry.lacunar_stc()
    for s in vertex_classes(mu):
        if s:
            assert is_total_perfect_code(entry.graph, s)


def test_classify_stc_ranks():
    assert classify_stc(catalog("k33").lacunar_stc()) == 3
    for k in (2, 3, 4):
        assert classify_stc(catalog(f"mobius_ladder_{3 * k}").lacunar_stc()) == 3
    assert classify_stc(catalog("mcgee").lacunar_stc()) == 1
    assert classify_stc(catalog("tutte_coxeter").lacunar_stc()) == 1
    assert classify_stc(catalog("foster90").lacunar_stc()) == 1
    assert classify_stc(catalog("q3").lacunar_stc()) == 0


def test_classify_stc_input_guards():
    with pytest.raises(CodesError):
        classify_stc(stored_coloring("petersen_tc"))  # TC, not lacunar
    rob = catalog("robertson").graph
    mu = Coloring(rob, (0,) * rob.n, (1,) * rob.m)
    with pytest.raises(CodesError):
        classify_stc(mu)  # not cubic (and not a valid STC)


def test_total_perfect_code_induces_matching():
    # rank >= 1 classes induce a perfect matching on themselves
    for key in ("k33", "mcgee", "tutte_coxeter", "foster90"):
        entry = catalog(key)
        mu = entry.lacunar_stc()
        g = entry.graph
        for s in vertex_classes(mu):
            if s and set(s) <= set().union(
                *({u, v} for u, v in (g.edges[ei] for ei in beta_edges(mu)))
            ) and is_total_perfect_code(g, s):
                inside = {v: 0 for v in s}
                sset = set(s)
                for u, v in g.edges:
                    if u in sset and v in sset:
                        inside[u] += 1
                        inside[v] += 1
                assert all(c == 1 for c in inside.values()), key


def test_rank3_beta_edges_are_the_union_of_induced_matchings():
    entry = catalog("k33")
    mu = entry.lacunar_stc()
    g = entry.graph
    assert classify_stc(mu) == 3
    matched = set()
    for s in vertex_classes(mu):
        sset = set(s)
        for ei, (u, v) in enumerate(g.edges):
            if u in sset and v in sset:
                matched.add(ei)
    assert matched == set(beta_edges(mu))


def test_efficient_tc():
    q3 = catalog("q3")
    mu = q3.lacunar_stc()
    tc = swap(mu, trace_alternating(mu, 0, 1, 3))
    assert is_efficient_tc(tc)

    cover = stored_cover("prism8_to_q3")
    cm = verify_covering(cover["source_graph"], cover["target_graph"], cover["map"])
    lifted = lift_coloring(cm, tc)
    assert is_efficient_tc(lifted)

    pet_tc = stored_coloring("petersen_tc")
    assert listing(pet_tc).vertex_counts == (2, 2, 2, 4)
    assert not is_efficient_tc(pet_tc)
    # the Petersen graph has no perfect code at all: 4|S| = 10 is unsolvable
    assert find_perfect_codes(catalog("petersen").graph) == []

    with pytest.raises(CodesError):
        is_efficient_tc(mu)  # STC, not TC


def test_find_perfect_codes_on_q3():
    g = catalog("q3").graph
    codes = find_perfect_codes(g)
    assert all(len(s) == 2 for s in codes)
    assert len(codes) == 4
    for s in codes:
        assert is_perfect_code(g, s)


def test_edge_orthogonal():
    q3 = catalog("q3")
    mu = q3.lacunar_stc()
    tc = swap(mu, trace_alternating(mu, 0, 1, 3))
    assert not edge_orthogonal(tc, tc)
    mate = _orthogonal_mate(tc)
    assert mate is not None
    assert edge_orthogonal(tc, mate)
    assert validate(mate).is_tc
    with pytest.raises(CodesError):
        edge_orthogonal(tc, catalog("heawood").lacunar_stc())


def _orthogonal_mate(tc):
    """Search a proper total coloring sharing tc's vertex colors with every
    edge differently colored; brute backtracking on 12 edges."""
    g = tc.graph
    ecol = [-1] * g.m

    def rec(ei):
        if ei == g.m:
            return True
        u, v = g.edges[ei]
        for c in range(4):
            if c == tc.edge_colors[ei] or c == tc.vertex_colors[u] or c == tc.vertex_colors[v]:
                continue
            if any(ecol[ej] == c for x in (u, v) for ej in g.incident[x] if ecol[ej] >= 0):
                continue
            ecol[ei] = c
            if rec(ei + 1):
                return True
            ecol[ei] = -1
        return False

    if rec(0):
        return Coloring(g, tc.vertex_colors, tuple(ecol))
    return None


def test_code_report_roundtrip():
    mu = catalog("foster90").lacunar_stc()
    rep = code_report(mu)
    assert rep.total_perfect_rank == 1
    assert rep.efficient_tc is None  # not a TC
    obj = rep.to_json()
    assert obj["total_perfect_rank"] == 1
    assert sum(obj["total_perfect_code_flags"]) == 1
