import math

import pytest

from semitotal.families import (
    K23,
    K23_WITH_TRIANGLE,
    expansion_stc,
    fat_mobius,
    fat_mobius_constructive,
    find_isomorphism,
    from_extended_lcf,
    from_lcf,
    generalized_petersen,
    haar,
    isomorphic,
    mobius_ladder,
    parse_lcf,
    prism,
    vertex_expand,
)
from semitotal.graph import GraphError, girth, max_degree, verify_hamilton
from semitotal.oracle import complete_graph
from semitotal.catalog_io import catalog, catalog_keys


def test_parse_lcf_forms():
    n = parse_lcf("[5,-5]^7")
    assert n.groups == ((5,), (-5,)) and n.exponent == 7 and not n.is_extended
    n = parse_lcf(" [ (-11, -15, 7), (11, 15, -7) ] ^ 7 ")
    assert n.is_extended and len(n.groups) == 2
    n = parse_lcf("[16,24,-38]")
    assert n.exponent == 1
    with pytest.raises(GraphError):
        parse_lcf("5,-5")


def test_from_lcf_known_graphs():
    hea, ham = from_lcf("[5,-5]^7")
    assert (hea.n, hea.m, girth(hea)) == (14, 21, 6)
    des, _ = from_lcf("[5,-5,9,-9]^5")
    assert (des.n, des.m) == (20, 30)
    q3, _ = from_lcf("[3,-3]^4")
    assert (q3.n, q3.m, girth(q3)) == (8, 12, 4)


def test_from_lcf_always_admits_identity_cycle():
    for notation in ["[5,-5]^7", "[12,7,-7]^8", "[5,7,-7,7,-7,-5]^3"]:
        g, ham = from_lcf(notation)
        assert verify_hamilton(g, list(ham.cycle)).chords == ham.chords


def test_from_lcf_errors():
    with pytest.raises(GraphError):
        from_lcf("[8]^8")  # offset 0 mod n
    with pytest.raises(GraphError):
        from_lcf("[1,-1]^4")  # collides with the cycle
    with pytest.raises(GraphError):
        from_lcf("[5,-5]^7", n=12)


def test_extended_lcf_cage_candidate():
    g, ham, report = from_extended_lcf(
        "[(-11,-15,7),(11,15,-7)]^7", 42, expected_degree=5, expected_girth=6
    )
    assert g.n == 42 and g.m == 105
    assert report.regular_degree == 5 and report.girth == 6 and report.ok


def test_extended_lcf_single_groups_match_plain():
    g1, _ = from_lcf("[3,-3]^4")
    g2, _, _ = from_extended_lcf("[(3),(-3)]^4", 8)
    assert g1.edges == g2.edges
    with pytest.raises(GraphError):
        from_extended_lcf("[(0,3),(3,-3)]^4", 8)


def test_haar_identities():
    assert isomorphic(haar(7), mobius_ladder(3)[0])
    assert isomorphic(haar(11), from_lcf("[-3,3]^4")[0])
    assert isomorphic(haar(69), from_lcf("[5,-5]^7")[0])
    with pytest.raises(GraphError):
        haar(0)


def test_haar_regularity_and_bipartiteness():
    for N in (7, 11, 37, 69, 133, 137, 529):
        g = haar(N)
        k = bin(N).count("1")
        assert all(g.degree(v) == k for v in range(g.n))
        half = g.n // 2
        for u, v in g.edges:
            assert (u < half) != (v < half)


def test_mobius_ladders():
    k4, _ = mobius_ladder(2)
    assert isomorphic(k4, complete_graph(4))
    m6, _ = mobius_ladder(6)
    assert (m6.n, m6.m) == (12, 18)
    with pytest.raises(GraphError):
        mobius_ladder(1)


def test_fat_mobius_matches_constructive_form():
    assert (fat_mobius(3).n, fat_mobius(4).n) == (12, 16)
    assert isomorphic(fat_mobius(3), fat_mobius_constructive(3))
    assert isomorphic(fat_mobius(4), fat_mobius_constructive(4))
    g5 = fat_mobius(5)
    assert g5.n == 20 and all(g5.degree(v) == 3 for v in range(20))
    assert 2 ** 9 + 2 ** 4 + 1 == 529
    assert isomorphic(g5, haar(529))
    with pytest.raises(GraphError):
        fat_mobius(2)


def test_prisms():
    p8, ham = prism(8)
    assert (p8.n, p8.m) == (16, 24) and ham is not None
    p4, _ = prism(4)
    assert isomorphic(p4, haar(11))
    p3, ham3 = prism(3)
    assert p3.m == 9 and ham3 is None
    with pytest.raises(GraphError):
        prism(2)


def test_generalized_petersen():
    pet = generalized_petersen(5, 2)
    assert (pet.n, girth(pet)) == (10, 5)
    assert isomorphic(generalized_petersen(8, 3), haar(133))
    assert isomorphic(generalized_petersen(10, 2), catalog("dodecahedron").graph)
    with pytest.raises(GraphError):
        generalized_petersen(8, 4)


def test_vertex_expansions():
    k4 = complete_graph(4)
    x = vertex_expand(k4, K23)
    assert x.n == 20 and all(x.degree(v) == 3 for v in range(x.n))
    tri, _ = prism(3)
    y = vertex_expand(tri, K23_WITH_TRIANGLE)
    assert y.n == 28 and all(y.degree(v) == 3 for v in range(y.n))
    pet = generalized_petersen(5, 2)
    z = vertex_expand(pet, K23)
    assert z.n == 50 and all(z.degree(v) == 3 for v in range(z.n))
    assert girth(z) == 4
    with pytest.raises(GraphError):
        vertex_expand(complete_graph(5))


def test_expansion_stc_is_valid_and_block_lacunar():
    from semitotal.coloring import listing, validate

    g, mu = expansion_stc(complete_graph(4), K23)
    rep = validate(mu)
    assert rep.is_stc
    l = listing(mu)
    assert sum(l.totals) == g.element_count


def test_catalog_statistics():
    expected = {
        "q3": (8, 12, 4),
        "heawood": (14, 21, 6),
        "pappus": (18, 27, 6),
        "desargues": (20, 30, 6),
        "dodecahedron": (20, 30, 5),
        "petersen": (10, 15, 5),
        "coxeter": (28, 42, 7),
        "k33": (6, 9, 4),
        "franklin": (12, 18, 4),
        "fmob4": (16, 24, 4),
        "mobius_kantor": (16, 24, 6),
        "dyck": (32, 48, 6),
        "foster90": (90, 135, 10),
        "biggs_smith": (102, 153, 9),
        "mcgee": (24, 36, 7),
        "robertson": (19, 38, 5),
        "tutte_coxeter": (30, 45, 8),
        "cage_5_6": (42, 105, 6),
    }
    for key, (n, m, gi) in expected.items():
        g = catalog(key).graph
        assert (g.n, g.m, girth(g)) == (n, m, gi), key


def test_catalog_patterns_are_valid_lacunar_stcs():
    from semitotal.coloring import listing, validate

    for key in catalog_keys():
        entry = catalog(key)
        if entry.pattern is None:
            continue
        mu = entry.lacunar_stc()
        l = listing(mu)
        assert validate(mu).is_stc, key
        assert l.lacunar_colors, key
        assert (l.gamma <= 1) == l.is_equitable
        # the chord class owns at least the complementary 1-factor
        spare = l.lacunar_colors[-1]
        assert l.vertex_counts[spare] == 0
        assert l.edge_counts[spare] >= entry.graph.n // 2, key


def test_catalog_robertson_and_cage56_validation():
    rob = catalog("robertson").graph
    assert all(rob.degree(v) == 4 for v in range(rob.n))
    entry = catalog("cage_5_6")
    assert entry.validation["ok"] is True
    assert entry.validation["regular_degree"] == 5
    assert entry.validation["girth"] == 6


def test_unknown_catalog_key():
    from semitotal.catalog_io import CatalogError

    with pytest.raises(CatalogError):
        catalog("nope")
