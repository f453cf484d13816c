"""Symmetric integer matrices, the eccentricity matrix and its indicator graph."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import IndexOutOfRange, NotSymmetric, OrderOne, ParseError
from .graph import DistanceMatrix, EccentricityProfile, Graph, build_graph


@dataclass(frozen=True)
class IntSymMatrix:
    """Dense symmetric matrix of Python integers (arbitrary precision)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, r in enumerate(self.rows):
            if len(r) != n:
                raise NotSymmetric(f"row {i} has length {len(r)}, expected {n}")
        for i in range(n):
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise NotSymmetric(f"entry ({i},{j}) != ({j},{i})")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntSymMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.rows], dtype=np.float64).reshape(
            self.order, self.order
        )

    def frobenius_norm(self) -> float:
        return math.sqrt(sum(x * x for r in self.rows for x in r))


def eccentricity_matrix(d: DistanceMatrix, profile: EccentricityProfile) -> IntSymMatrix:
    """Keep ``d(u,v)`` where it equals ``min(e(u), e(v))``, zero elsewhere."""
    dd = d.d
    ecc = np.asarray(profile.ecc, dtype=np.int64)
    keep = dd == np.minimum.outer(ecc, ecc)
    eps = np.where(keep, dd, 0)
    return IntSymMatrix(tuple(tuple(int(x) for x in r) for r in eps.tolist()))


def indicator_graph(a: IntSymMatrix) -> Graph:
    """Graph with an edge ``uv`` (``u != v``) wherever ``a[u, v]`` is nonzero."""
    n = a.order
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a.rows[i][j]])


def is_irreducible(a: IntSymMatrix) -> bool:
    if a.order <= 1:
        raise OrderOne("irreducibility needs order > 1")
    return indicator_graph(a).is_connected


def principal_submatrix(a: IntSymMatrix, rows: Iterable[int]) -> IntSymMatrix:
    """Restriction to ``rows`` (kept in increasing index order)."""
    idx = sorted(set(rows))
    for i in idx:
        if not 0 <= i < a.order:
            raise IndexOutOfRange(f"index {i} not in 0..{a.order - 1}")
    return IntSymMatrix(tuple(tuple(a.rows[i][j] for j in idx) for i in idx))


def submatrix_ordered(a: IntSymMatrix, rows: Sequence[int]) -> IntSymMatrix:
    """Principal submatrix in the given (not necessarily sorted) row order."""
    for i in rows:
        if not 0 <= i < a.order:
            raise IndexOutOfRange(f"index {i} not in 0..{a.order - 1}")
    return IntSymMatrix(tuple(tuple(a.rows[i][j] for j in rows) for i in rows))


def eccentricities_from_matrix(a: IntSymMatrix) -> list[int]:
    """Row maxima; equal to the vertex eccentricities when ``a`` is an eccentricity matrix."""
    return [max(r) if r else 0 for r in a.rows]


# -- matrix text format ------------------------------------------------------

def parse_matrix(text: str) -> IntSymMatrix:
    """Parse ``m <order>`` followed by ``order`` rows of integers."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "m":
        raise ParseError(f"expected header 'm <order>', got {lines[0]!r}")
    try:
        order = int(head[1])
        rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    if order < 0 or len(rows) != order:
        raise ParseError(f"header declares {order} rows, found {len(rows)}")
    try:
        return IntSymMatrix.from_rows(rows)
    except NotSymmetric as exc:
        raise ParseError(str(exc)) from exc


def format_matrix(a: IntSymMatrix, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"m {a.order}")
    lines.extend(" ".join(str(x) for x in r) for r in a.rows)
    return "\n".join(lines) + "\n"
