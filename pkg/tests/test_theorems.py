import math

import pytest
from hypothesis import given, settings, strategies as st

from ecc_spectra.errors import DiameterTooSmall, Inapplicable, KOutOfRange, NotInCT
from ecc_spectra.exact import char_poly, inertia_exact
from ecc_spectra.generators import (
    FIXTURES,
    GeneratorSpec,
    clique_path,
    clique_star,
    complete_graph,
    random_ct_clique_tree,
)
from ecc_spectra.graph import build_graph
from ecc_spectra.spectra import symmetric_eigenvalues
from ecc_spectra.theorems import (
    NOT_IN_CT,
    OUTSIDE_PATTERN,
    GraphContext,
    MatrixContext,
    check_center,
    check_distinguished,
    check_five_distinct,
    check_inertia,
    check_inertia_agreement,
    check_irreducibility,
    check_block_matrix,
    check_perron,
    check_structure,
    check_symmetry,
    check_witness_matrix_a,
    fits_ct_inertia_pattern,
    lemma31_matrix,
    verify_all,
    verify_matrix,
    witness_matrix_a,
    witness_matrix_a_spectrum,
)

from conftest import vs

C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
GRAPH_FIXTURES = ["G_fig1", "G1", "G2", "G3"]


def test_witness_matrix_a_k1():
    assert witness_matrix_a(1).rows == ((0, 3, 0, 2), (3, 0, 2, 0), (0, 2, 0, 0), (2, 0, 0, 0))
    assert witness_matrix_a_spectrum(1).eigenvalues == pytest.approx((4, 1, -1, -4))


def test_witness_matrix_a_k2():
    q = math.sqrt(61)
    expected = ((q + 5) / 2, (q - 5) / 2, -(q - 5) / 2, -(q + 5) / 2)
    assert witness_matrix_a_spectrum(2).eigenvalues == pytest.approx(expected, abs=1e-12)
    assert symmetric_eigenvalues(witness_matrix_a(2)).eigenvalues == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("k", range(1, 11))
def test_witness_matrix_a_records(k):
    assert check_witness_matrix_a(k).passed


def test_k_out_of_range():
    for fn in (witness_matrix_a, witness_matrix_a_spectrum):
        with pytest.raises(KOutOfRange):
            fn(0)
    with pytest.raises(KOutOfRange):
        lemma31_matrix(2, 0)
    with pytest.raises(ValueError):
        lemma31_matrix(0, 1)


def test_block_matrix_n2_k1():
    a = lemma31_matrix(2, 1)
    assert a.rows == ((0, 2, 0, 1), (2, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
    assert inertia_exact(char_poly(a)).as_tuple() == (2, 2, 0)


def test_block_matrix_degenerate():
    a = lemma31_matrix(1, 3)
    assert a.rows == ((0, 0), (0, 0))
    assert inertia_exact(char_poly(a)).as_tuple() == (0, 0, 2)
    rec = check_block_matrix(1, 3)
    assert not rec.applicable and rec.passed is None


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("k", range(1, 6))
def test_block_matrix_inertia(n, k):
    assert check_block_matrix(n, k).passed


@pytest.mark.parametrize("name", GRAPH_FIXTURES)
def test_fixture_graphs_pass(name):
    report = verify_all(FIXTURES[name].value, name)
    assert report.ok and not report.flags
    assert all(c.applicable for c in report.checks if c.id in {"center", "inertia", "symmetry", "structure"})


def test_checks_sorted_by_id():
    ids = [c.id for c in verify_all(FIXTURES["G1"].value).checks]
    assert ids == sorted(ids)


def test_center_records(fx):
    rec = check_center(fx("G3"))
    assert rec.passed and rec.witness["center"] == sorted(vs(6))
    rec = check_center(fx("G2"))
    assert rec.passed and rec.witness["center"] == sorted(vs(2, 7, 11))
    rec = check_center(complete_graph(5))
    assert rec.passed and rec.witness["center"] == list(range(5))


def test_inertia_records(fx):
    rec = check_inertia(fx("G1"))
    assert rec.passed and rec.witness["inertia"] == [2, 2, 7] and rec.witness["witness_matrix_ok"]
    rec = check_inertia(fx("G3"))
    assert rec.passed and rec.witness["inertia"] == [2, 2, 11] and rec.witness["l"] == 2


def test_clique_star_two_triangles():
    rec = check_inertia(clique_star([3, 3]))
    assert rec.passed
    assert rec.witness["expected_rank"] == 3
    assert rec.witness["inertia"] == [1, 2, 2]


def test_symmetry_records(fx):
    rec = check_symmetry(fx("G1"))
    assert rec.passed and rec.witness["symmetric"]
    rec = check_symmetry(fx("G2"))
    assert rec.passed and not rec.witness["symmetric"]
    assert rec.witness["e3"] == rec.witness["e3_formula"] == "360"
    rec = check_symmetry(fx("G3"))
    assert rec.passed and rec.witness["asymmetry_witness"] == [2, 3]


def test_irreducibility(fx):
    for name in ("G1", "G2", "G3"):
        assert check_irreducibility(fx(name)).passed
    with pytest.raises(NotInCT) as info:
        check_irreducibility(C4)
    assert info.value.diagnostic["is_irreducible"] is False


def test_irreducibility_random_trees():
    for seed in range(30):
        tree = random_ct_clique_tree(GeneratorSpec(seed, block_size=(2, 2)))
        assert check_irreducibility(tree).passed


def test_structure(fx):
    rec = check_structure(fx("G1"))
    assert rec.passed
    rec = check_structure(fx("G3"))
    assert rec.passed and sorted(rec.witness["tree_vertices"]) == sorted(vs(1, 5, 6, 7, 9, 11, 12, 13))
    with pytest.raises(DiameterTooSmall):
        check_structure(complete_graph(4))


def test_preconditions(fx):
    with pytest.raises(Inapplicable):
        check_five_distinct(fx("G3"))
    with pytest.raises(Inapplicable):
        check_five_distinct(fx("G2"))
    assert check_five_distinct(fx("G1")).passed
    with pytest.raises(Inapplicable):
        check_distinguished(fx("G1"))
    assert check_distinguished(fx("G3")).witness["distinguished"] == sorted(vs(5, 11))
    with pytest.raises(Inapplicable):
        check_perron(complete_graph(1))
    with pytest.raises(NotInCT):
        check_center(fx("triangle_pendants"))


def test_inapplicable_checks_are_recorded():
    report = verify_all(C4, "c4")
    assert report.ok
    assert NOT_IN_CT in report.flags
    irr = report.check("irreducibility")
    assert not irr.applicable and irr.witness["is_irreducible"] is False
    assert report.check("inertia_agreement").applicable


def test_order_one():
    report = verify_all(complete_graph(1))
    assert report.ok and not report.flags


def test_complete_graphs():
    for n in range(2, 12):
        report = verify_all(complete_graph(n))
        assert report.ok and report.check("inertia").witness["expected"] == [1, n - 1, 0]


def test_clique_paths_and_stars():
    for sizes in ([2, 3, 4, 2, 3], [3, 3, 3], [2, 2, 2, 2, 2, 2], [4, 2, 4, 2]):
        assert verify_all(clique_path(sizes)).ok
    for sizes in ([2, 2], [3, 3], [4, 2, 5], [2] * 7):
        report = verify_all(clique_star(sizes))
        assert report.ok and report.check("inertia").applicable


def test_matrix_fixtures_flagged():
    for name, inertia in (("H1_matrix", [3, 3, 3]), ("H2_matrix", [4, 4, 1])):
        ctx = MatrixContext(FIXTURES[name].value, name)
        report = verify_matrix(ctx)
        assert OUTSIDE_PATTERN in report.flags
        assert list(ctx.inertia.as_tuple()) == inertia
        assert report.ok


def test_triangle_pendants_flags(fx):
    report = verify_all(fx("triangle_pendants"))
    assert NOT_IN_CT in report.flags


def test_pattern():
    from ecc_spectra.exact import InertiaTriple as T

    assert fits_ct_inertia_pattern(1, 4, T(1, 3, 0))
    assert fits_ct_inertia_pattern(3, 9, T(2, 2, 5))
    assert not fits_ct_inertia_pattern(3, 9, T(3, 3, 3))
    assert fits_ct_inertia_pattern(2, 7, T(1, 3, 3))
    assert fits_ct_inertia_pattern(4, 9, T(3, 3, 3))
    assert not fits_ct_inertia_pattern(4, 9, T(3, 2, 4))


def test_context_tolerances(fx):
    ctx = GraphContext(fx("G3"), "g3", tol=1e-6, zero_tol=1e-3)
    assert ctx.float_inertia.as_tuple() == (2, 2, 11)
    assert check_inertia_agreement(ctx).passed


def test_report_failures_listed(fx):
    # a deliberately wrong claim shows up as a failure, not an exception
    ctx = GraphContext(fx("G3"))
    ctx.__dict__["inertia"] = inertia_exact(char_poly(FIXTURES["H1_matrix"].value))
    assert not verify_all(ctx).ok


@settings(max_examples=150)
@given(st.integers(0, 2**64 - 1), st.sampled_from(["tree-random", "path", "star"]))
def test_random_members_pass(seed, shape):
    g = random_ct_clique_tree(GeneratorSpec(seed, shape=shape))
    report = verify_all(g)
    assert report.ok, [c.to_dict() for c in report.failures]
    assert not report.flags
