import pytest

from semitotal.catalog_io import catalog, stored_coloring, stored_cover
from semitotal.coloring import beta_gamma, listing, validate
from semitotal.covering import CoveringError, lift_coloring, verify_covering
from semitotal.kempe import swap, trace_alternating


def q3_equitable_tc():
    mu = catalog("q3").lacunar_stc()
    return swap(mu, trace_alternating(mu, 0, 1, 3))


def test_identity_cover():
    g = catalog("q3").graph
    cm = verify_covering(g, g, list(range(g.n)))
    assert cm.fold == 1
    mu = q3_equitable_tc()
    assert lift_coloring(cm, mu).key() == mu.key()


def test_prism8_covers_q3():
    cover = stored_cover("prism8_to_q3")
    cm = verify_covering(cover["source_graph"], cover["target_graph"], cover["map"])
    assert cm.fold == 2
    lifted = lift_coloring(cm, q3_equitable_tc())
    l = listing(lifted)
    assert l.is_tc and (l.beta, l.gamma) == (0, 0)
    assert l.totals == (10, 10, 10, 10)


def test_dodecahedron_covers_petersen():
    cover = stored_cover("dodecahedron_to_petersen")
    cm = verify_covering(cover["source_graph"], cover["target_graph"], cover["map"])
    assert cm.fold == 2
    pet_tc = stored_coloring("petersen_tc")
    assert listing(pet_tc).totals == (6, 6, 6, 7)
    lifted = lift_coloring(cm, pet_tc)
    l = listing(lifted)
    assert l.is_tc and l.gamma == 2
    assert not l.is_equitable
    # exact scaling
    b0, g0 = beta_gamma(pet_tc)
    assert beta_gamma(lifted) == (2 * b0, 2 * g0)


def test_lift_scaling_for_stc_with_beta():
    # lift the lacunar STC of q3 (beta 2, gamma 2) through the 2-fold cover
    cover = stored_cover("prism8_to_q3")
    cm = verify_covering(cover["source_graph"], cover["target_graph"], cover["map"])
    mu = catalog("q3").lacunar_stc()
    lifted = lift_coloring(cm, mu)
    assert validate(lifted).is_stc
    assert beta_gamma(lifted) == (4, 4)


def test_covering_errors():
    q3 = catalog("q3").graph
    hea = catalog("heawood").graph
    with pytest.raises(CoveringError):
        verify_covering(q3, q3, [0] * 8)  # not surjective
    with pytest.raises(CoveringError):
        verify_covering(q3, q3, list(range(7)))  # not total
    with pytest.raises(CoveringError):
        verify_covering(hea, q3, list(range(8)) + [0, 1, 2, 3, 4, 5])
    cover = stored_cover("prism8_to_q3")
    bad = list(cover["map"])
    bad[0], bad[1] = bad[1], bad[0]
    with pytest.raises(CoveringError):
        verify_covering(cover["source_graph"], cover["target_graph"], bad)


def test_lift_requires_valid_and_matching_input():
    cover = stored_cover("prism8_to_q3")
    cm = verify_covering(cover["source_graph"], cover["target_graph"], cover["map"])
    with pytest.raises(CoveringError):
        lift_coloring(cm, catalog("heawood").lacunar_stc())
