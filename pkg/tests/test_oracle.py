import pytest

from semitotal.catalog_io import catalog
from semitotal.families import mobius_ladder
from semitotal.graph import GraphError, build_graph
from semitotal.oracle import (
    OracleCache,
    closed_form,
    complete_graph,
    cycle_graph,
    exact_total_chromatic,
    min_beta,
    min_gamma,
)


def test_closed_forms():
    assert (closed_form("cycle", 9).type1, closed_form("cycle", 9).beta) == (True, 0)
    assert (closed_form("cycle", 8).type1, closed_form("cycle", 8).beta) == (False, 2)
    assert closed_form("complete", 6).beta == 3
    assert closed_form("complete", 5).type1
    with pytest.raises(GraphError):
        closed_form("path", 5)
    with pytest.raises(GraphError):
        closed_form("cycle", 2)


def test_cycles_match_closed_forms():
    for n in range(3, 13):
        g = cycle_graph(n)
        cf = closed_form("cycle", n)
        chi2 = exact_total_chromatic(g)
        assert chi2.value == (3 if cf.type1 else 4), n
        res = min_beta(g)
        assert res.value == cf.beta, n
        assert res.status == "ok" and not res.cap_hit


def test_complete_graphs_match_closed_forms():
    expected_chi2 = {2: 3, 3: 3, 4: 5, 5: 5, 6: 7}
    for n in range(2, 7):
        g = complete_graph(n)
        cf = closed_form("complete", n)
        assert exact_total_chromatic(g).value == expected_chi2[n], n
        assert min_beta(g).value == cf.beta, n


def test_min_beta_zero_iff_type1():
    for n in range(3, 10):
        g = cycle_graph(n)
        type1 = exact_total_chromatic(g).value == 3
        assert (min_beta(g).value == 0) == type1


def test_min_gamma_values():
    assert min_gamma(cycle_graph(6)).value == 0
    assert min_gamma(catalog("q3").graph).value == 0
    res = min_gamma(mobius_ladder(3)[0])
    assert res.value is None and res.status == "no-tc"


def test_k33_exact_values():
    g = mobius_ladder(3)[0]
    assert min_beta(g).value == 3
    assert exact_total_chromatic(g).value == 5


def test_cap_hit_reports_no_value():
    g = catalog("heawood").graph  # 35 elements
    res = min_beta(g, cap=26)
    assert res.cap_hit and res.value is None and res.status == "cap"
    res = exact_total_chromatic(g, cap=26)
    assert res.cap_hit and res.value is None


def test_oracle_requires_connected_graphs():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        min_beta(g)


def test_reduce_meets_oracle_floor():
    from semitotal.coloring import beta_gamma
    from semitotal.kempe import Budget, reduce

    q3 = catalog("q3")
    tr = reduce(q3.lacunar_stc(), "min_beta_gamma", Budget(nodes=5000))
    assert beta_gamma(tr.final)[0] == min_beta(q3.graph).value == 0

    k33 = catalog("k33")
    tr = reduce(k33.lacunar_stc(), "min_beta_gamma", Budget(nodes=5000))
    assert beta_gamma(tr.final)[0] == min_beta(k33.graph).value == 3


def test_cache_roundtrip(tmp_path):
    path = str(tmp_path / "oracle.json")
    cache = OracleCache(path)
    g = cycle_graph(7)
    first = min_beta(g, cache=cache)
    assert first.value == 2
    cache2 = OracleCache(path)
    hit = min_beta(g, cache=cache2)
    assert hit.value == 2 and hit.nodes == first.nodes
    dump = cache2.dump_text()
    assert "min_beta" not in dump or dump  # plain text dump is non-empty
    assert len(dump.splitlines()) == 1


def test_reduce_matches_oracle_on_small_cycles():
    from semitotal.coloring import beta_gamma, greedy_stc
    from semitotal.kempe import Budget, reduce

    for n in (4, 5, 6, 7, 9, 12):
        g = cycle_graph(n)
        tr = reduce(greedy_stc(g), "min_beta_gamma", Budget(nodes=5000))
        assert beta_gamma(tr.final)[0] == closed_form("cycle", n).beta, n
