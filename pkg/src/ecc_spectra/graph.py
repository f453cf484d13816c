"""Simple undirected graphs, BFS distances and eccentricity profiles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .errors import GraphDisconnected, InvalidEdge, ParseError, VertexOutOfRange


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build instances with :func:`build_graph`; the constructor assumes the
    adjacency lists are already sorted, symmetric and loop-free.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_edge_set",
            frozenset((u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v),
        )

    @property
    def m(self) -> int:
        return len(self._edge_set)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edge_set)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(component_of(self, 0)) == self.n

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in sorted order.

        Returns the graph and the list mapping new labels to old ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep for v in self.adjacency[u]
            if u < v and v in index
        ]
        return build_graph(len(keep), edges), keep

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return build_graph(self.n, [e for e in self._edge_set if e not in drop])

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        indptr[1:] = np.cumsum([len(nb) for nb in self.adjacency])
        indices = np.fromiter(
            itertools.chain.from_iterable(self.adjacency), dtype=np.int32, count=int(indptr[-1])
        )
        return indptr, indices


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Graph on ``n`` vertices; duplicate edges collapse, self-loops are rejected."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def component_of(g: Graph, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``p <n>`` / ``u v`` lines; ``#`` starts a comment line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None or edges or len(tok) != 2:
                raise ParseError(f"line {lineno}: misplaced or malformed header")
            n = _parse_int(tok[1], lineno)
            continue
        if len(tok) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = _parse_int(tok[0], lineno), _parse_int(tok[1], lineno)
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex label")
        edges.append((u, v))
    if n is None:
        if not edges:
            raise ParseError("no header and no edges")
        n = 1 + max(max(e) for e in edges)
    try:
        return build_graph(n, edges)
    except (InvalidEdge, VertexOutOfRange) as exc:
        raise ParseError(str(exc)) from exc


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"line {lineno}: not an integer: {tok!r}") from None


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"p {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- distances ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs graph distances of a connected graph (read-only ``int64`` array)."""

    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return int(self.d[uv])

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and np.array_equal(self.d, other.d)

    __hash__ = None


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex."""
    indptr, indices = g.csr()
    d = _backend.bfs_all_pairs(indptr, indices, g.n).astype(np.int64)
    if g.n and (d < 0).any():
        raise GraphDisconnected(f"graph with {g.n} vertices is not connected")
    d.setflags(write=False)
    return DistanceMatrix(d)


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: frozenset[int]


def eccentricity_profile(d: DistanceMatrix) -> EccentricityProfile:
    if d.n == 0:
        raise ValueError("empty graph has no eccentricities")
    ecc = tuple(int(x) for x in d.d.max(axis=1))
    rad, diam = min(ecc), max(ecc)
    return EccentricityProfile(ecc, rad, diam, frozenset(v for v, e in enumerate(ecc) if e == rad))


def diametral_pairs(d: DistanceMatrix) -> list[tuple[int, int]]:
    diam = int(d.d.max()) if d.n else 0
    us, vs = np.nonzero(np.triu(d.d == diam, k=1))
    return sorted(zip(us.tolist(), vs.tolist()))


def on_shortest_path(d: DistanceMatrix, x: int, v: int, y: int) -> bool:
    return d[x, v] + d[v, y] == d[x, y]
