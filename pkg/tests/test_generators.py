from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from ecc_spectra.blocks import classify, decompose
from ecc_spectra.errors import UnknownFixture
from ecc_spectra.generators import (
    FIXTURE_NAMES,
    FIXTURES,
    GeneratorSpec,
    SplitMix64,
    clique_path,
    clique_star,
    complete_graph,
    corpus_spec,
    fixture,
    fixture_info,
    prufer_tree,
    random_ct_clique_tree,
    vertex,
)
from ecc_spectra.graph import Graph, all_pairs_distances, build_graph, eccentricity_profile


def diameter(g):
    return eccentricity_profile(all_pairs_distances(g)).diameter


def test_splitmix_reference_values():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_randint_bounds_and_spread():
    rng = SplitMix64(5)
    draws = [rng.randint(3, 7) for _ in range(5000)]
    counts = Counter(draws)
    assert set(counts) == {3, 4, 5, 6, 7}
    assert min(counts.values()) > 800
    with pytest.raises(ValueError):
        rng.randint(2, 1)


def test_shuffle_is_permutation():
    items = list(range(20))
    SplitMix64(9).shuffle(items)
    assert sorted(items) == list(range(20)) and items != list(range(20))


def test_families():
    g = clique_star([3, 3])
    assert g.n == 5 and diameter(g) == 2
    assert clique_path([2, 2, 2]) == build_graph(4, [(0, 1), (1, 2), (2, 3)])
    k4 = complete_graph(4)
    cls = classify(k4, decompose(k4))
    assert cls.in_ct and cls.diameter == 1
    for bad in ([3], [3, 1]):
        with pytest.raises(ValueError):
            clique_path(bad)
        with pytest.raises(ValueError):
            clique_star(bad)
    with pytest.raises(ValueError):
        complete_graph(0)


def test_prufer():
    assert prufer_tree([3, 3, 3], 5) == [(0, 3), (1, 3), (2, 3), (3, 4)]
    assert prufer_tree([], 2) == [(0, 1)]


@given(st.lists(st.integers(0, 6), min_size=5, max_size=5))
def test_prufer_gives_tree(seq):
    g = build_graph(7, prufer_tree(seq, 7))
    assert g.m == 6 and g.is_connected
    # degree of v is one more than its count in the sequence
    assert all(g.degree(v) == 1 + seq.count(v) for v in range(7))


def test_edge_blocks_give_trees():
    for seed in range(20):
        g = random_ct_clique_tree(GeneratorSpec(seed, block_size=(2, 2)))
        assert g.m == g.n - 1 and g.is_connected


def test_deterministic():
    spec = GeneratorSpec(42, n_blocks=(6, 6), block_size=(2, 4))
    assert random_ct_clique_tree(spec) == random_ct_clique_tree(spec)
    assert len(decompose(random_ct_clique_tree(spec)).blocks) == 6


@settings(max_examples=200)
@given(st.integers(0, 2**64 - 1), st.sampled_from(["tree-random", "path", "star"]))
def test_random_graphs_in_ct(seed, shape):
    g = random_ct_clique_tree(GeneratorSpec(seed, shape=shape))
    cls = classify(g, decompose(g))
    assert g.is_connected and cls.in_ct and cls.in_ct_ge2
    assert 5 <= g.n <= 40


def test_shapes():
    g = random_ct_clique_tree(GeneratorSpec(3, n_blocks=(5, 5), block_size=(2, 2), shape="path"))
    assert diameter(g) == 5
    g = random_ct_clique_tree(GeneratorSpec(3, n_blocks=(5, 5), shape="star"))
    assert diameter(g) == 2


def test_spec_validation():
    for kwargs in ({"shape": "cycle"}, {"n_blocks": (0, 3)}, {"n_blocks": (5, 4)}, {"block_size": (1, 3)}):
        with pytest.raises(ValueError):
            GeneratorSpec(0, **kwargs)


def test_corpus_spec_cycles_shapes():
    assert [corpus_spec(s).shape for s in range(5)] == ["tree-random"] * 3 + ["path", "star"]


def test_fixtures():
    assert len(FIXTURE_NAMES) == 7
    g3 = fixture("G3")
    assert isinstance(g3, Graph) and g3.n == 15 and diameter(g3) == 4
    assert fixture("G3") == fixture("G_fig1")
    assert fixture("H1_matrix").rows[0] == (0, 0, 3, 0, 2, 2, 3, 3, 3)
    assert fixture_info("H2_matrix").kind == "matrix"
    assert fixture_info("G1").labels[vertex("v7")] == "v7"
    with pytest.raises(UnknownFixture):
        fixture("G4")
    with pytest.raises(KeyError):
        fixture("nope")

