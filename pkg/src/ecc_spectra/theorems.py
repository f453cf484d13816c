"""Executable checks of the structural and spectral results for CT.

Each ``check_*`` function takes a :class:`GraphContext` (or a bare
:class:`~ecc_spectra.graph.Graph`) and returns a :class:`CheckRecord`.  When a
precondition fails they raise an :class:`~ecc_spectra.errors.Inapplicable`
subclass; :func:`verify_all` turns those into records with
``applicable=False``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable

from .blocks import (
    BRIDGE,
    LEAF,
    AssociatedTree,
    associated_tree,
    classify,
    decompose,
    diametrally_distinguished,
    even_partition,
    odd_partition,
    require_ct,
    tree_centers,
)
from .errors import DiameterTooSmall, EccSpectraError, Inapplicable, KOutOfRange, NotInCT
from .exact import (
    IntPolynomial,
    InertiaTriple,
    asymmetry_witness,
    char_poly,
    inertia_exact,
    is_spectrum_symmetric_exact,
    principal_minor_sum,
    reduced_c,
)
from .graph import Graph, all_pairs_distances, eccentricity_profile
from .matrix import (
    IntSymMatrix,
    eccentricities_from_matrix,
    eccentricity_matrix,
    indicator_graph,
    is_irreducible,
    principal_submatrix,
    submatrix_ordered,
)
from .spectra import (
    DEFAULT_TOL,
    Spectrum,
    cluster,
    inertia_float,
    interlaces,
    spectral_radius,
    symmetric_eigenvalues,
)

OUTSIDE_PATTERN = "outside CT inertia pattern"
NOT_IN_CT = "not in CT"


@dataclass
class CheckRecord:
    id: str
    applicable: bool
    passed: bool | None
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.id, "applicable": self.applicable, "passed": self.passed, "witness": self.witness}


@dataclass
class TheoremReport:
    graph_id: str
    checks: list[CheckRecord]
    flags: list[str] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.applicable and not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, check_id: str) -> CheckRecord:
        return next(c for c in self.checks if c.id == check_id)


class GraphContext:
    """Lazily computed data about one connected graph, shared between checks."""

    def __init__(self, g: Graph, graph_id: str = "graph", tol: float = DEFAULT_TOL, zero_tol: float | None = None):
        self.g = g
        self.graph_id = graph_id
        self.tol = tol
        self.zero_tol = zero_tol

    @cached_property
    def d(self):
        return all_pairs_distances(self.g)

    @cached_property
    def profile(self):
        return eccentricity_profile(self.d)

    @cached_property
    def dec(self):
        return decompose(self.g)

    @cached_property
    def cls(self):
        return classify(self.g, self.dec, self.profile)

    @cached_property
    def eps(self) -> IntSymMatrix:
        return eccentricity_matrix(self.d, self.profile)

    @cached_property
    def poly(self) -> IntPolynomial:
        return char_poly(self.eps)

    @cached_property
    def inertia(self) -> InertiaTriple:
        return inertia_exact(self.poly)

    @cached_property
    def spectrum(self) -> Spectrum:
        return symmetric_eigenvalues(self.eps, self.tol)

    @cached_property
    def float_inertia(self) -> InertiaTriple:
        return inertia_float(self.spectrum, self.zero_tol)

    @cached_property
    def tree(self) -> AssociatedTree:
        return associated_tree(self.g, self.dec)

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def diameter(self) -> int:
        return self.profile.diameter

    @property
    def is_complete(self) -> bool:
        return self.profile.diameter <= 1

    def require_ct(self) -> None:
        if not self.cls.in_ct:
            require_ct(self.g, self.dec)
            raise NotInCT("graph is not in CT")

    def require_ct_ge2(self) -> None:
        self.require_ct()
        if self.diameter < 2:
            raise DiameterTooSmall("complete graph; needs diameter >= 2")


def _ctx(x):
    return x if isinstance(x, (GraphContext, MatrixContext)) else GraphContext(x)


def _sorted(vs) -> list[int]:
    return sorted(int(v) for v in vs)


# -- closed-form witness matrices -------------------------------------------------

def witness_matrix_a(k: int) -> IntSymMatrix:
    """4x4 principal submatrix on (u1, u2, z1, z2) certifying rank 4 for diameter ``2k+1``."""
    if k < 1:
        raise KOutOfRange(f"k must be >= 1, got {k}")
    a, b = 2 * k + 1, k + 1
    return IntSymMatrix(((0, a, 0, b), (a, 0, b, 0), (0, b, 0, 0), (b, 0, 0, 0)))


def witness_matrix_a_spectrum(k: int) -> Spectrum:
    """Closed-form eigenvalues of :func:`witness_matrix_a`."""
    if k < 1:
        raise KOutOfRange(f"k must be >= 1, got {k}")
    q = math.sqrt(5 + 12 * k + 8 * k * k)
    big, small = (q + 2 * k + 1) / 2, (q - 2 * k - 1) / 2
    norm = witness_matrix_a(k).frobenius_norm()
    return Spectrum((big, small, -small, -big), norm)


def lemma31_matrix(n: int, k: int) -> IntSymMatrix:
    """``[[2k(J-I), (2k-1)(J-I)], [(2k-1)(J-I), O]]`` with ``n x n`` blocks."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1:
        raise KOutOfRange(f"k must be >= 1, got {k}")
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            if i != j:
                rows[i][j] = 2 * k
                rows[i][n + j] = rows[n + j][i] = 2 * k - 1
    return IntSymMatrix.from_rows(rows)


def check_block_matrix(n: int, k: int) -> CheckRecord:
    cid = f"block_matrix[n={n},k={k}]"
    if n < 2:
        return CheckRecord(cid, False, None, {"precondition": "n >= 2 (J - I of order one is zero)"})
    got = inertia_exact(char_poly(lemma31_matrix(n, k))).as_tuple()
    return CheckRecord(cid, True, got == (n, n, 0), {"inertia": list(got)})


def check_witness_matrix_a(k: int) -> CheckRecord:
    a = witness_matrix_a(k)
    jac = symmetric_eigenvalues(a).eigenvalues
    closed = witness_matrix_a_spectrum(k).eigenvalues
    err = max(abs(x - y) for x, y in zip(jac, closed))
    inert = inertia_exact(char_poly(a)).as_tuple()
    return CheckRecord(
        f"witness_a[k={k}]", True, err <= 1e-9 and inert == (2, 2, 0),
        {"max_abs_error": err, "inertia": list(inert)},
    )


# -- graph checks ------------------------------------------------------------------

def check_irreducibility(x: Graph | GraphContext) -> CheckRecord:
    ctx = _ctx(x)
    if ctx.n < 2:
        raise Inapplicable("order one")
    try:
        ctx.require_ct()
    except NotInCT as exc:
        exc.diagnostic["is_irreducible"] = is_irreducible(ctx.eps)
        raise
    ok = is_irreducible(ctx.eps)
    return CheckRecord("irreducibility", True, ok, None if ok else {"components": "indicator graph disconnected"})


def check_structure(x: Graph | GraphContext) -> CheckRecord:
    """Associated-tree lemmas, checked together; the witness lists failing parts."""
    ctx = _ctx(x)
    ctx.require_ct_ge2()
    g, dec, prof, d = ctx.g, ctx.dec, ctx.profile, ctx.d
    at = ctx.tree
    tree = at.tree
    vt = at.vertex_subset
    failed: dict[str, Any] = {}

    leaves = dec.block_kind.count(LEAF)
    if leaves < 2:
        failed["leaf_blocks"] = leaves
    if not (tree.is_connected and tree.m == tree.n - 1):
        failed["tree"] = {"n": tree.n, "m": tree.m, "connected": tree.is_connected}
    if tree.m != len(dec.blocks):
        failed["edges_vs_blocks"] = [tree.m, len(dec.blocks)]

    tprof = eccentricity_profile(all_pairs_distances(tree))
    if tprof.diameter != prof.diameter:
        failed["diameter"] = [tprof.diameter, prof.diameter]
    bad_ecc = [vt[i] for i in range(tree.n) if tprof.ecc[i] != prof.ecc[vt[i]]]
    if bad_ecc:
        failed["eccentricity_equality"] = bad_ecc

    nonpendant = {vt[i] for i in range(tree.n) if tree.degree(i) >= 2}
    if nonpendant != set(dec.cut_vertices):
        failed["nonpendant_are_cut"] = _sorted(nonpendant ^ dec.cut_vertices)

    tset = set(vt)
    far_in_tree = [
        u for u in range(g.n)
        if not any(d[u, v] == prof.ecc[u] for v in tset)
    ]
    if far_in_tree:
        failed["eccentricity_attained_in_tree"] = far_in_tree

    tree_eps = eccentricity_matrix(all_pairs_distances(tree), tprof)
    sub = principal_submatrix(ctx.eps, vt)
    if tree_eps != sub:
        failed["principal_submatrix"] = True

    gamma_g, gamma_t = indicator_graph(ctx.eps), indicator_graph(tree_eps)
    induced = all(
        gamma_t.has_edge(i, j) == gamma_g.has_edge(vt[i], vt[j])
        for i in range(tree.n) for j in range(i + 1, tree.n)
    )
    if not induced:
        failed["indicator_induced"] = True

    ecc = prof.ecc
    bad_noncut = []
    for idx, (block, kind) in enumerate(zip(dec.blocks, dec.block_kind)):
        cuts = dec.cut_vertices_of(idx)
        for u in sorted(block - dec.cut_vertices):
            if kind == LEAF and ecc[u] != ecc[cuts[0]] + 1:
                bad_noncut.append(u)
            elif kind == BRIDGE and ecc[u] != max(ecc[cuts[0]], ecc[cuts[1]]):
                bad_noncut.append(u)
    if bad_noncut:
        failed["noncut_eccentricity"] = bad_noncut

    tree_spec = symmetric_eigenvalues(tree_eps)
    if not interlaces(tree_spec, ctx.spectrum):
        failed["interlacing"] = {"sub": list(tree_spec.eigenvalues), "full": list(ctx.spectrum.eigenvalues)}

    return CheckRecord("structure", True, not failed, failed or {"tree_vertices": list(vt)})


def check_center(x: Graph | GraphContext) -> CheckRecord:
    ctx = _ctx(x)
    ctx.require_ct()
    center = ctx.profile.center
    if ctx.is_complete:
        expected = frozenset(range(ctx.n))
        case = "complete"
    else:
        tc = tree_centers(ctx.tree)
        if ctx.diameter % 2 == 0:
            case = "even"
            expected = frozenset(tc)
            if len(tc) != 1:
                return CheckRecord("center", True, False, {"case": case, "tree_centers": tc})
        else:
            case = "odd"
            idx = ctx.dec.block_containing(tc)
            expected = ctx.dec.blocks[idx] if idx is not None else frozenset()
    return CheckRecord(
        "center", True, center == expected,
        {"case": case, "center": _sorted(center), "expected": _sorted(expected)},
    )


def _even_witness(ctx: GraphContext):
    part = even_partition(ctx.g, ctx.dec, ctx.profile, ctx.d)
    l, k = part.l, part.k
    vs = [min(part.parts[i]) for i in range(l)]
    zs = []
    for v in vs:
        (bi,) = ctx.dec.blocks_of(v)
        zs.append(ctx.dec.cut_vertices_of(bi)[0])
    m = submatrix_ordered(ctx.eps, vs + zs)
    return part, m, m == lemma31_matrix(l, k)


def check_inertia(x: Graph | GraphContext) -> CheckRecord:
    ctx = _ctx(x)
    ctx.require_ct()
    n = ctx.n
    if n < 2:
        raise Inapplicable("order one")
    got = ctx.inertia
    diam = ctx.diameter
    w: dict[str, Any] = {"inertia": list(got.as_tuple())}
    if ctx.is_complete:
        w["case"] = "complete"
        w["expected"] = [1, n - 1, 0]
        ok = got.as_tuple() == (1, n - 1, 0)
    elif diam % 2:
        part = odd_partition(ctx.g, ctx.dec, ctx.profile, ctx.d)
        rows = [min(part.W1), min(part.W3), part.z1, part.z2]
        sub = submatrix_ordered(ctx.eps, rows)
        witness_ok = sub == witness_matrix_a(part.k)
        w.update(case="odd", expected=[2, 2, n - 4], k=part.k, witness_rows=rows, witness_matrix_ok=witness_ok)
        ok = got.as_tuple() == (2, 2, n - 4) and witness_ok
    elif diam == 2:
        t = len(ctx.dec.blocks)
        fl = ctx.float_inertia
        w.update(case="clique_star", blocks=t, expected_rank=t + 1, float_inertia=list(fl.as_tuple()))
        ok = got.rank == t + 1 and got.n_plus == 1 and got == fl
    else:
        part, m, witness_ok = _even_witness(ctx)
        l = part.l
        w.update(case="even", l=l, k=part.k, expected=[l, l, n - 2 * l], witness_matrix_ok=witness_ok)
        ok = got.as_tuple() == (l, l, n - 2 * l) and witness_ok
    return CheckRecord("inertia", True, ok, w)


def check_symmetry(x: Graph | GraphContext) -> CheckRecord:
    ctx = _ctx(x)
    ctx.require_ct()
    if ctx.n < 2:
        raise Inapplicable("order one")
    p = ctx.poly
    sym = is_spectrum_symmetric_exact(p)
    predicate = ctx.diameter % 2 == 1 and len(ctx.profile.center) == 2
    wit = asymmetry_witness(p)
    w: dict[str, Any] = {"symmetric": sym, "expected": predicate, "asymmetry_witness": list(wit) if wit else None}
    ok = sym == predicate and (wit is None or not sym)
    if not ctx.is_complete and ctx.diameter % 2 == 0 and ctx.diameter >= 4:
        ok = ok and wit == (2, 3)
    elif not ctx.is_complete and ctx.diameter % 2 == 1:
        part = odd_partition(ctx.g, ctx.dec, ctx.profile, ctx.d)
        if part.W5:
            k = part.k
            e3_formula = len(part.W1) * len(part.W3) * len(part.W5) * 2 * (2 * k + 1) * (k + 1) ** 2
            e3 = principal_minor_sum(ctx.eps, 3)
            b = reduced_c(p, 3)
            w.update(e3=str(e3), e3_formula=str(e3_formula), b=str(b))
            ok = ok and e3 == e3_formula and b == -e3 and wit == (2, 3)
        else:
            ok = ok and wit is None
    return CheckRecord("symmetry", True, ok, w)


def check_five_distinct(x: Graph | GraphContext) -> CheckRecord:
    ctx = _ctx(x)
    ctx.require_ct_ge2()
    if ctx.diameter % 2 == 0:
        raise Inapplicable("needs odd diameter")
    if len(ctx.profile.center) != 2 or ctx.n < 5:
        raise Inapplicable("needs a two-vertex central block and n >= 5")
    groups = cluster(ctx.spectrum.eigenvalues)
    return CheckRecord("five_distinct", True, len(groups) == 5, {"distinct": len(groups)})


def check_perron(x: Graph | GraphContext) -> CheckRecord:
    """Largest eigenvalue is simple and equals the spectral radius."""
    ctx = _ctx(x)
    ctx.require_ct()
    if ctx.n < 2:
        raise Inapplicable("order one")
    s = ctx.spectrum
    gap = s.eigenvalues[0] - s.eigenvalues[1]
    rho = spectral_radius(s)
    ok = gap > s.default_zero_tol() and abs(rho - s.eigenvalues[0]) <= 1e-9 * max(1.0, s.norm)
    return CheckRecord("perron_simple", True, ok, {"gap": gap, "radius": rho})


def check_distinguished(x: Graph | GraphContext) -> CheckRecord:
    ctx = _ctx(x)
    ctx.require_ct_ge2()
    if ctx.diameter % 2 or ctx.diameter < 4:
        raise Inapplicable("needs even diameter >= 4")
    dg = diametrally_distinguished(ctx.g, ctx.profile, ctx.d)
    ok = dg <= ctx.dec.cut_vertices and len(dg) >= 2
    return CheckRecord("distinguished_cut", True, ok, {"distinguished": _sorted(dg)})


def check_inertia_agreement(x: Graph | GraphContext) -> CheckRecord:
    ctx = _ctx(x)
    ex, fl = ctx.inertia, ctx.float_inertia
    return CheckRecord(
        "inertia_agreement", True, ex == fl,
        {"exact": list(ex.as_tuple()), "float": list(fl.as_tuple())},
    )


GRAPH_CHECKS: tuple[tuple[str, Callable[[GraphContext], CheckRecord]], ...] = (
    ("irreducibility", check_irreducibility),
    ("structure", check_structure),
    ("center", check_center),
    ("inertia", check_inertia),
    ("symmetry", check_symmetry),
    ("five_distinct", check_five_distinct),
    ("perron_simple", check_perron),
    ("distinguished_cut", check_distinguished),
    ("inertia_agreement", check_inertia_agreement),
)


def _run(cid: str, fn, ctx) -> CheckRecord:
    try:
        return fn(ctx)
    except Inapplicable as exc:
        return CheckRecord(cid, False, None, {"precondition": str(exc), **exc.diagnostic})
    except (AssertionError, EccSpectraError) as exc:
        return CheckRecord(cid, True, False, {"error": f"{type(exc).__name__}: {exc}"})


def fits_ct_inertia_pattern(diameter: int, n: int, inertia: InertiaTriple) -> bool:
    """Whether ``inertia`` has the shape every member of CT with this diameter has."""
    if diameter <= 1:
        return inertia.as_tuple() == (1, n - 1, 0)
    if diameter % 2:
        return inertia.as_tuple() == (2, 2, n - 4)
    if diameter == 2:
        return inertia.n_plus == 1
    return inertia.n_plus == inertia.n_minus >= 2


def verify_all(x: Graph | GraphContext, graph_id: str | None = None) -> TheoremReport:
    """Run every check on a connected graph; inapplicable checks are recorded, not raised."""
    ctx = _ctx(x)
    if graph_id is not None:
        ctx.graph_id = graph_id
    checks = sorted((_run(cid, fn, ctx) for cid, fn in GRAPH_CHECKS), key=lambda c: c.id)
    flags = []
    if not ctx.cls.in_ct:
        flags.append(NOT_IN_CT)
    if ctx.n >= 2 and not fits_ct_inertia_pattern(ctx.diameter, ctx.n, ctx.inertia):
        flags.append(OUTSIDE_PATTERN)
    return TheoremReport(ctx.graph_id, checks, flags)


class MatrixContext:
    """Counterpart of :class:`GraphContext` for an eccentricity matrix given without its graph."""

    def __init__(self, a: IntSymMatrix, graph_id: str = "matrix", tol: float = DEFAULT_TOL, zero_tol: float | None = None):
        self.eps = a
        self.graph_id = graph_id
        self.tol = tol
        self.zero_tol = zero_tol

    @property
    def n(self) -> int:
        return self.eps.order

    @cached_property
    def ecc(self) -> list[int]:
        return eccentricities_from_matrix(self.eps)

    @property
    def diameter(self) -> int:
        return max(self.ecc, default=0)

    @property
    def radius(self) -> int:
        return min(self.ecc, default=0)

    @property
    def center(self) -> list[int]:
        return [i for i, e in enumerate(self.ecc) if e == self.radius]

    @cached_property
    def poly(self) -> IntPolynomial:
        return char_poly(self.eps)

    @cached_property
    def inertia(self) -> InertiaTriple:
        return inertia_exact(self.poly)

    @cached_property
    def spectrum(self) -> Spectrum:
        return symmetric_eigenvalues(self.eps, self.tol)

    @cached_property
    def float_inertia(self) -> InertiaTriple:
        return inertia_float(self.spectrum, self.zero_tol)


def verify_matrix(a: IntSymMatrix | MatrixContext, graph_id: str | None = None) -> TheoremReport:
    ctx = a if isinstance(a, MatrixContext) else MatrixContext(a)
    if graph_id is not None:
        ctx.graph_id = graph_id
    skip = {"precondition": "matrix input without a graph"}
    checks = []
    for cid, _ in GRAPH_CHECKS:
        if cid == "inertia_agreement":
            checks.append(check_inertia_agreement(ctx))
        elif cid == "irreducibility" and ctx.n > 1:
            checks.append(CheckRecord(cid, False, None, {**skip, "is_irreducible": is_irreducible(ctx.eps)}))
        else:
            checks.append(CheckRecord(cid, False, None, dict(skip)))
    checks.sort(key=lambda c: c.id)
    flags = []
    if ctx.n >= 2 and not fits_ct_inertia_pattern(ctx.diameter, ctx.n, ctx.inertia):
        flags.append(OUTSIDE_PATTERN)
    return TheoremReport(ctx.graph_id, checks, flags)
