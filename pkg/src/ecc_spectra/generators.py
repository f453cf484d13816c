"""Fixture graphs/matrices and seeded random members of CT.

Random generation uses SplitMix64 so that a seed reproduces the same graph in
any language:

    state  <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2**64)
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2**64)
    output  z ^ (z >> 31)

Integers in ``[lo, hi]`` are drawn by rejection: with ``b = hi - lo + 1``,
outputs ``>= 2**64 - (2**64 mod b)`` are discarded and ``lo + x mod b`` is
returned.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import UnknownFixture
from .graph import Graph, build_graph
from .matrix import IntSymMatrix

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        bound = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]


# -- deterministic families ----------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _clique_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1:]]


def _check_sizes(sizes: Sequence[int]) -> None:
    if len(sizes) < 2:
        raise ValueError("need at least two blocks")
    if any(s < 2 for s in sizes):
        raise ValueError("every block needs at least two vertices")


def clique_path(sizes: Sequence[int]) -> Graph:
    """Cliques of the given sizes chained through single shared vertices."""
    _check_sizes(sizes)
    edges, nxt, joint = [], 1, 0
    for s in sizes:
        block = [joint] + list(range(nxt, nxt + s - 1))
        edges += _clique_edges(block)
        nxt += s - 1
        joint = block[-1]
    return build_graph(nxt, edges)


def clique_star(sizes: Sequence[int]) -> Graph:
    """Cliques of the given sizes sharing vertex 0."""
    _check_sizes(sizes)
    edges, nxt = [], 1
    for s in sizes:
        edges += _clique_edges([0] + list(range(nxt, nxt + s - 1)))
        nxt += s - 1
    return build_graph(nxt, edges)


# -- random members of CT ------------------------------------------------------

SHAPES = ("tree-random", "path", "star")


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int
    n_blocks: tuple[int, int] = (4, 12)
    block_size: tuple[int, int] = (2, 4)
    shape: str = "tree-random"

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"shape must be one of {SHAPES}")
        lo, hi = self.n_blocks
        if lo < 1 or hi < lo:
            raise ValueError(f"bad n_blocks range {self.n_blocks}")
        lo, hi = self.block_size
        if lo < 2 or hi < lo:
            raise ValueError(f"bad block_size range {self.block_size}")


def prufer_tree(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``n`` vertices with Prüfer sequence ``seq``."""
    if n == 2:
        return [(0, 1)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def random_ct_clique_tree(spec: GeneratorSpec) -> Graph:
    """Random tree skeleton whose edges are inflated into cliques.

    Each clique holds exactly two skeleton vertices, so no block can have more
    than two cut-vertices.  Labels are shuffled at the end.
    """
    rng = SplitMix64(spec.seed)
    t = rng.randint(*spec.n_blocks)
    if spec.shape == "path":
        skeleton = [(i, i + 1) for i in range(t)]
    elif spec.shape == "star":
        skeleton = [(0, i) for i in range(1, t + 1)]
    else:
        seq = [rng.randint(0, t) for _ in range(t - 1)]
        skeleton = prufer_tree(seq, t + 1)
    edges, nxt = [], t + 1
    for u, v in sorted(skeleton):
        s = rng.randint(*spec.block_size)
        block = [u, v] + list(range(nxt, nxt + s - 2))
        nxt += s - 2
        edges += _clique_edges(block)
    perm = list(range(nxt))
    rng.shuffle(perm)
    return build_graph(nxt, [(perm[a], perm[b]) for a, b in edges])


def corpus_spec(seed: int) -> GeneratorSpec:
    """Spec used by the CLI corpus: mostly random skeletons, every fifth seed a path or star."""
    shape = ("tree-random", "tree-random", "tree-random", "path", "star")[seed % 5]
    return GeneratorSpec(seed=seed, shape=shape)


# -- fixtures --------------------------------------------------------------------

@dataclass(frozen=True)
class Fixture:
    name: str
    value: Graph | IntSymMatrix
    description: str
    # labels[i] is the figure label of vertex (or row) i
    labels: tuple[str, ...]
    filename: str

    @property
    def kind(self) -> str:
        return "edges" if isinstance(self.value, Graph) else "matrix"


def _v(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(1, n + 1))


def _fig1() -> Graph:
    edges = (
        _clique_edges(range(0, 5))
        + [(4, 5)]
        + _clique_edges([5, 6, 7])
        + _clique_edges([5, 8, 9])
        + [(5, 10), (10, 11)]
        + _clique_edges([10, 12, 13, 14])
    )
    return build_graph(15, edges)


def _g1_edges() -> list[tuple[int, int]]:
    return (
        [(0, 1)]
        + _clique_edges([1, 2, 3])
        + _clique_edges([1, 4, 5])
        + [(1, 6), (6, 10)]
        + _clique_edges([6, 7, 8, 9])
    )


H1_ROWS = (
    (0, 0, 3, 0, 2, 2, 3, 3, 3),
    (0, 0, 3, 0, 2, 2, 3, 3, 3),
    (3, 3, 0, 2, 0, 2, 3, 3, 3),
    (0, 0, 2, 0, 0, 0, 2, 2, 2),
    (2, 2, 0, 0, 0, 0, 2, 2, 2),
    (2, 2, 2, 0, 0, 0, 0, 0, 0),
    (3, 3, 3, 2, 2, 0, 0, 0, 0),
    (3, 3, 3, 2, 2, 0, 0, 0, 0),
    (3, 3, 3, 2, 2, 0, 0, 0, 0),
)

H2_ROWS = (
    (0, 0, 3, 0, 2, 3, 3, 2, 2),
    (0, 0, 3, 0, 2, 3, 3, 2, 2),
    (3, 3, 0, 2, 0, 3, 3, 2, 2),
    (0, 0, 2, 0, 0, 2, 2, 0, 0),
    (2, 2, 0, 0, 0, 2, 2, 0, 0),
    (3, 3, 3, 2, 2, 0, 3, 0, 2),
    (3, 3, 3, 2, 2, 3, 0, 2, 0),
    (2, 2, 2, 0, 0, 0, 2, 0, 0),
    (2, 2, 2, 0, 0, 2, 0, 0, 0),
)


def _build_fixtures() -> dict[str, Fixture]:
    fig1 = _fig1()
    g1 = build_graph(11, _g1_edges())
    g2 = build_graph(11, _g1_edges() + [(1, 10)])
    tri = build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    items = [
        Fixture("G_fig1", fig1, "clique tree with seven blocks and its associated tree", _v(15), "g_fig1.edges"),
        Fixture("G1", g1, "odd diameter, central block is the edge v2v7", _v(11), "g1.edges"),
        Fixture("G2", g2, "odd diameter, central block is the triangle v2v7v11", _v(11), "g2.edges"),
        Fixture("G3", fig1, "even diameter 4, same graph as G_fig1", _v(15), "g3.edges"),
        Fixture("H1_matrix", IntSymMatrix(H1_ROWS), "eccentricity matrix of H1 (a block with three cut-vertices)", _v(9), "h1.matrix"),
        Fixture("H2_matrix", IntSymMatrix(H2_ROWS), "eccentricity matrix of H2 (a block with three cut-vertices)", _v(9), "h2.matrix"),
        Fixture("triangle_pendants", tri, "triangle with a pendant edge at every vertex; smallest clique tree outside CT", tuple(f"t{i}" for i in range(6)), "triangle_pendants.edges"),
    ]
    return {f.name: f for f in items}


FIXTURES = _build_fixtures()
FIXTURE_NAMES = tuple(FIXTURES)


def fixture_info(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}") from None


def fixture(name: str) -> Graph | IntSymMatrix:
    return fixture_info(name).value


def vertex(label: str) -> int:
    """Zero-based vertex index of a figure label ``v<i>``."""
    return int(label.lstrip("v")) - 1
