"""Exact characteristic polynomials, inertia and spectral-symmetry tests.

All arithmetic is on Python integers.  Inertia is read off the characteristic
polynomial with Descartes' rule of signs, which is exact here because the
matrices are symmetric and so every root is real.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from .errors import SizeOutOfRange, ZeroPolynomial
from .matrix import IntSymMatrix


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(reversed(coeffs)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_factors(cls, factors: Iterable["IntPolynomial | Sequence[int]"]) -> "IntPolynomial":
        """Product of factors; plain sequences are read lowest degree first."""
        out = cls((1,))
        for f in factors:
            out = out * (f if isinstance(f, IntPolynomial) else cls(tuple(f)))
        return out

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def normalized(self) -> "IntPolynomial":
        """Same polynomial with a positive leading coefficient."""
        return -self if self.leading < 0 else self

    def zero_multiplicity(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no finite root multiplicity")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def reduced(self) -> "IntPolynomial":
        """Divide out the largest power of ``x``."""
        return IntPolynomial(self.coeffs[self.zero_multiplicity():])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "IntPolynomial":
        return cls(tuple(int(s) for s in data))

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: IntPolynomial, var: str = "x") -> str:
    if p.is_zero:
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def char_poly(a: IntSymMatrix) -> IntPolynomial:
    """``det(xI - A)`` by Berkowitz's division-free algorithm."""
    return IntPolynomial.from_descending(_backend.charpoly(a.rows))


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def principal_minor_sum(a: IntSymMatrix, k: int) -> int:
    """Sum of all ``k x k`` principal minors (direct enumeration)."""
    n = a.order
    if not 1 <= k <= n:
        raise SizeOutOfRange(f"minor size {k} not in 1..{n}")
    r = a.rows
    if k == 1:
        return sum(r[i][i] for i in range(n))
    if k == 2:
        return sum(
            r[i][i] * r[j][j] - r[i][j] * r[j][i]
            for i in range(n) for j in range(i + 1, n)
        )
    if k == 3:
        total = 0
        for i, j, l in itertools.combinations(range(n), 3):
            total += (
                r[i][i] * (r[j][j] * r[l][l] - r[j][l] * r[l][j])
                - r[i][j] * (r[j][i] * r[l][l] - r[j][l] * r[l][i])
                + r[i][l] * (r[j][i] * r[l][j] - r[j][j] * r[l][i])
            )
        return total
    return sum(
        bareiss_det([[r[i][j] for j in idx] for i in idx])
        for idx in itertools.combinations(range(n), k)
    )


@dataclass(frozen=True)
class InertiaTriple:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)

    def __iter__(self):
        return iter(self.as_tuple())


def inertia_exact(p: IntPolynomial) -> InertiaTriple:
    """Inertia of a symmetric matrix from its characteristic polynomial.

    Zero eigenvalues are the multiplicity of the root 0; positive ones are the
    sign changes of the remaining coefficients.
    """
    zeros = p.zero_multiplicity()
    nonzero = [c for c in p.coeffs[zeros:] if c]
    plus = sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a < 0) != (b < 0))
    return InertiaTriple(plus, p.degree - zeros - plus, zeros)


def rank_exact(p: IntPolynomial) -> int:
    return p.degree - p.zero_multiplicity()


def _c_coeff(red: IntPolynomial, i: int) -> int:
    # c_i is the coefficient of x^(deg - i)
    return red.coeffs[red.degree - i]


def is_spectrum_symmetric_exact(p: IntPolynomial) -> bool:
    """True iff the nonzero roots come in ``±`` pairs (reduced polynomial is even)."""
    red = p.reduced()
    return all(c == 0 for i, c in enumerate(red.coeffs) if i % 2)


def asymmetry_witness(p: IntPolynomial) -> tuple[int, int] | None:
    """First ``(i, i+1)`` with ``c_i`` and ``c_{i+1}`` both nonzero, or ``None``.

    Indices follow the convention ``x^d + c_1 x^(d-1) + ... + c_d`` for the
    reduced polynomial of degree ``d``; ``i`` ranges over ``1..d-1``.
    """
    red = p.reduced()
    d = red.degree
    for i in range(1, d):
        if _c_coeff(red, i) and _c_coeff(red, i + 1):
            return (i, i + 1)
    return None


def reduced_c(p: IntPolynomial, i: int) -> int:
    """``c_i`` of the reduced polynomial (see :func:`asymmetry_witness`)."""
    red = p.reduced()
    return _c_coeff(red, i) if 0 <= i <= red.degree else 0
