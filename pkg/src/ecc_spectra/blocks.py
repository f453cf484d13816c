"""Blocks, clique-tree recognition and the structures used by the inertia proofs.

Terminology: a *leaf* block holds one cut-vertex, a *bridge* block two, a
*sole* block none (the graph is a single block) and *other* three or more.
The class ``CT`` consists of clique trees with no ``other`` blocks; ``CT>=2``
are its members of diameter at least two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DiameterTooSmall,
    EvenDiameter,
    MultipleCenters,
    NotInCT,
    OddDiameter,
)
from .graph import (
    DistanceMatrix,
    EccentricityProfile,
    Graph,
    all_pairs_distances,
    component_of,
    diametral_pairs,
    eccentricity_profile,
    on_shortest_path,
)

LEAF, BRIDGE, SOLE, OTHER = "leaf", "bridge", "sole", "other"

ORACLE_MAX_N = 12


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_kind: tuple[str, ...]

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def block_containing(self, vertices: Iterable[int]) -> int | None:
        want = set(vertices)
        for i, b in enumerate(self.blocks):
            if want <= b:
                return i
        return None

    def cut_vertices_of(self, i: int) -> list[int]:
        return sorted(self.blocks[i] & self.cut_vertices)


def _kind(num_cut: int) -> str:
    return {0: SOLE, 1: LEAF, 2: BRIDGE}.get(num_cut, OTHER)


def decompose(g: Graph) -> BlockDecomposition:
    """Biconnected components by an iterative lowpoint depth-first search."""
    n = g.n
    if n == 0:
        return BlockDecomposition((), frozenset(), ())
    if n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset(), (SOLE,))
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            descended = False
            for v in it:
                if v == parent:
                    continue
                if disc[v] < 0:
                    disc[v] = low[v] = counter
                    counter += 1
                    edge_stack.append((u, v))
                    stack.append((v, u, iter(g.adjacency[v])))
                    descended = True
                    break
                if disc[v] < disc[u]:
                    low[u] = min(low[u], disc[v])
                    edge_stack.append((u, v))
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                comp: set[int] = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (p, u):
                        break
                found.append(frozenset(comp))
        if not g.adjacency[root]:
            found.append(frozenset({root}))
    blocks = tuple(sorted(found, key=lambda b: sorted(b)))
    count = [0] * n
    for b in blocks:
        for v in b:
            count[v] += 1
    cut = frozenset(v for v in range(n) if count[v] >= 2)
    kinds = tuple(_kind(len(b & cut)) for b in blocks)
    return BlockDecomposition(blocks, cut, kinds)


# -- class recognition -------------------------------------------------------

@dataclass(frozen=True)
class ClassReport:
    is_clique_tree: bool
    in_ct: bool
    in_ct_ge2: bool
    diameter_parity: str
    num_blocks: int
    diameter: int


def _is_clique(g: Graph, vertices: frozenset[int]) -> bool:
    size = len(vertices)
    inside = sum(1 for u in vertices for v in g.adjacency[u] if v in vertices)
    return inside == size * (size - 1)


def is_diamond_free_chordal(g: Graph) -> bool:
    """Independent block-graph test: chordal (via maximum cardinality search) and diamond-free."""
    n = g.n
    weight = [0] * n
    picked = [False] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not picked[u]), key=lambda u: (weight[u], -u))
        picked[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not picked[w]:
                weight[w] += 1
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.adjacency[v] if pos[w] < pos[v]]
        if any(not g.has_edge(a, b) for i, a in enumerate(earlier) for b in earlier[i + 1:]):
            return False
    for u, v in g.edges():
        common = sorted(set(g.adjacency[u]) & set(g.adjacency[v]))
        if any(not g.has_edge(a, b) for i, a in enumerate(common) for b in common[i + 1:]):
            return False
    return True


def classify(g: Graph, dec: BlockDecomposition, profile: EccentricityProfile | None = None) -> ClassReport:
    if profile is None:
        profile = eccentricity_profile(all_pairs_distances(g))
    clique_tree = all(_is_clique(g, b) for b in dec.blocks)
    if g.n <= ORACLE_MAX_N and g.n > 0:
        oracle = is_diamond_free_chordal(g)
        if oracle != clique_tree:
            raise AssertionError(
                f"block-completeness ({clique_tree}) disagrees with diamond-free chordal test ({oracle})"
            )
    in_ct = clique_tree and OTHER not in dec.block_kind
    diam = profile.diameter
    return ClassReport(
        is_clique_tree=clique_tree,
        in_ct=in_ct,
        in_ct_ge2=in_ct and diam >= 2,
        diameter_parity="odd" if diam % 2 else "even",
        num_blocks=len(dec.blocks),
        diameter=diam,
    )


def require_ct(g: Graph, dec: BlockDecomposition) -> None:
    bad_kind = OTHER in dec.block_kind
    if bad_kind or not all(_is_clique(g, b) for b in dec.blocks):
        reason = "a block has three or more cut-vertices" if bad_kind else "a block is not complete"
        raise NotInCT(f"graph is not in CT: {reason}")


# -- associated tree -----------------------------------------------------------

@dataclass(frozen=True)
class AssociatedTree:
    vertex_subset: tuple[int, ...]
    tree: Graph  # vertex i of ``tree`` is ``vertex_subset[i]`` of the source graph


def associated_tree(g: Graph, dec: BlockDecomposition) -> AssociatedTree:
    """Tree induced on the cut-vertices plus the minimal-label noncut-vertex of every leaf block."""
    require_ct(g, dec)
    if len(dec.blocks) == 1:
        keep = [0, 1] if g.n >= 2 else [0]
    else:
        keep = set(dec.cut_vertices)
        for b, kind in zip(dec.blocks, dec.block_kind):
            if kind == LEAF:
                keep.add(min(b - dec.cut_vertices))
    tree, labels = g.induced_subgraph(keep)
    return AssociatedTree(tuple(labels), tree)


def tree_centers(at: AssociatedTree) -> list[int]:
    prof = eccentricity_profile(all_pairs_distances(at.tree))
    return sorted(at.vertex_subset[i] for i in prof.center)


# -- centers and diametral structure ----------------------------------------------

def diametrally_distinguished(
    g: Graph, profile: EccentricityProfile, d: DistanceMatrix | None = None
) -> frozenset[int]:
    """Neighbours of the unique center lying on some diametral path."""
    if profile.diameter % 2:
        raise OddDiameter("diametrally distinguished vertices need an even diameter")
    if len(profile.center) != 1:
        raise MultipleCenters(f"center has {len(profile.center)} vertices")
    if d is None:
        d = all_pairs_distances(g)
    (z,) = profile.center
    pairs = diametral_pairs(d)
    return frozenset(
        v for v in g.adjacency[z]
        if any(on_shortest_path(d, x, v, y) for x, y in pairs)
    )


def central_block(g: Graph, dec: BlockDecomposition, profile: EccentricityProfile) -> frozenset[int]:
    """The block holding both centers of the associated tree (odd diameter)."""
    if profile.diameter % 2 == 0:
        raise EvenDiameter("central block needs an odd diameter")
    at = associated_tree(g, dec)
    z = tree_centers(at)
    idx = dec.block_containing(z)
    if idx is None:
        raise AssertionError(f"no block contains the tree centers {z}")
    block = dec.blocks[idx]
    if block != profile.center:
        raise AssertionError(f"central block {sorted(block)} differs from center {sorted(profile.center)}")
    return block


@dataclass(frozen=True)
class OddPartition:
    W1: frozenset[int]
    W2: frozenset[int]
    W3: frozenset[int]
    W4: frozenset[int]
    W5: frozenset[int]
    k: int
    central_block: frozenset[int]
    z1: int
    z2: int

    @property
    def parts(self) -> tuple[frozenset[int], ...]:
        return (self.W1, self.W2, self.W3, self.W4, self.W5)


def _block_edges(block: Iterable[int]) -> list[tuple[int, int]]:
    vs = sorted(block)
    return [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]


def odd_partition(
    g: Graph,
    dec: BlockDecomposition,
    profile: EccentricityProfile,
    d: DistanceMatrix | None = None,
) -> OddPartition:
    """Five-set partition around the central block (odd diameter ``2k+1``).

    ``z1 < z2`` are the tree centers; ``W2``/``W4`` hold the vertices of the
    ``z1``/``z2`` sides closer than ``k`` to their center, ``W1``/``W3`` those
    at distance exactly ``k``, and ``W5`` the rest of the central block.
    """
    if profile.diameter % 2 == 0:
        raise EvenDiameter("odd partition needs an odd diameter")
    if d is None:
        d = all_pairs_distances(g)
    block = central_block(g, dec, profile)
    z1, z2 = tree_centers(associated_tree(g, dec))
    k = (profile.diameter - 1) // 2
    split = g.without_edges(_block_edges(block))
    side1 = component_of(split, z1)
    side2 = component_of(split, z2)
    return OddPartition(
        W1=frozenset(u for u in side1 if d[u, z1] == k),
        W2=frozenset(u for u in side1 if d[u, z1] < k),
        W3=frozenset(v for v in side2 if d[v, z2] == k),
        W4=frozenset(v for v in side2 if d[v, z2] < k),
        W5=block - {z1, z2},
        k=k,
        central_block=block,
        z1=z1,
        z2=z2,
    )


@dataclass(frozen=True)
class EvenPartition:
    parts: tuple[frozenset[int], ...]  # V_1 .. V_{2l+1}
    l: int
    k: int
    center: int
    distinguished: tuple[int, ...]  # w_1 .. w_l, increasing labels


def even_partition(
    g: Graph,
    dec: BlockDecomposition,
    profile: EccentricityProfile,
    d: DistanceMatrix | None = None,
) -> EvenPartition:
    """``2l+1``-set partition around the unique center (even diameter ``2k >= 4``)."""
    if profile.diameter % 2:
        raise OddDiameter("even partition needs an even diameter")
    if profile.diameter < 4:
        raise DiameterTooSmall(f"even partition needs diameter >= 4, got {profile.diameter}")
    require_ct(g, dec)
    if d is None:
        d = all_pairs_distances(g)
    k = profile.diameter // 2
    ws = sorted(diametrally_distinguished(g, profile, d))
    (z,) = profile.center
    outer, inner, covered = [], [], set()
    for w in ws:
        idx = dec.block_containing((z, w))
        side = component_of(g.without_edges(_block_edges(dec.blocks[idx])), w)
        covered |= side
        outer.append(frozenset(u for u in side if d[u, z] == k))
        inner.append(frozenset(u for u in side if d[u, w] < k - 1))
    rest = frozenset(range(g.n)) - covered
    return EvenPartition(tuple(outer + inner + [rest]), len(ws), k, z, tuple(ws))
