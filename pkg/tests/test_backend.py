import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ecc_spectra import _backend, _purepy
from ecc_spectra.generators import GeneratorSpec, random_ct_clique_tree

from test_matrix import sym_matrices

needs_compiled = pytest.mark.skipif(not _backend.COMPILED_AVAILABLE, reason="extension not built")


def test_name_and_switch():
    before = _backend.name()
    _backend.use("python")
    assert _backend.name() == "python"
    _backend.use(before)
    with pytest.raises(ValueError):
        _backend.use("fortran")


def test_env_var_forces_python():
    env = dict(os.environ, ECC_SPECTRA_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import ecc_spectra; print(ecc_spectra.backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_purepy_berkowitz_small():
    assert _purepy.berkowitz([[0, 1], [1, 0]]) == [1, 0, -1]
    assert _purepy.berkowitz([]) == [1]


@given(sym_matrices(max_n=8, lo=-1000, hi=1000))
def test_coefficient_bound_holds(a):
    bound = _backend.coefficient_bound(a.rows)
    assert all(abs(c) <= bound for c in _purepy.berkowitz([list(r) for r in a.rows]))


@needs_compiled
@given(sym_matrices(max_n=12, lo=-10**6, hi=10**6))
def test_charpoly_backends_agree(a):
    rows = [list(r) for r in a.rows]
    assert _backend._crt_charpoly(a.rows) == _purepy.berkowitz(rows)


@needs_compiled
def test_charpoly_large_entries():
    rng = np.random.default_rng(0)
    m = rng.integers(-(10**12), 10**12, size=(9, 9))
    rows = [[int(x) for x in r] for r in (m + m.T)]
    assert _backend._crt_charpoly(rows) == _purepy.berkowitz(rows)


@needs_compiled
@settings(max_examples=30)
@given(st.integers(0, 2**64 - 1))
def test_bfs_backends_agree(seed):
    from ecc_spectra import _kernels

    g = random_ct_clique_tree(GeneratorSpec(seed))
    indptr, indices = g.csr()
    assert (_kernels.bfs_all_pairs(indptr, indices, g.n) == _purepy.bfs_all_pairs(indptr, indices, g.n)).all()


@needs_compiled
@given(sym_matrices(max_n=10))
def test_jacobi_backends_agree(a):
    from ecc_spectra import _kernels

    if a.order == 0:
        return
    x = a.to_float()
    c, _, ok1 = _kernels.jacobi_eigenvalues(x.copy(), 1e-12, 100)
    p, _, ok2 = _purepy.jacobi_eigenvalues(x.copy(), 1e-12, 100)
    assert ok1 and ok2
    assert np.sort(c) == pytest.approx(np.sort(p), abs=1e-9 * max(1.0, a.frobenius_norm()))


def test_primes_descend_and_are_prime():
    ps = [_backend._prime(i) for i in range(5)]
    assert ps == sorted(ps, reverse=True) and ps[0] == 2**31 - 1
    assert all(_backend._is_prime(p) for p in ps)
    assert not _backend._is_prime(2**31 - 3)


@needs_compiled
def test_reports_identical_across_backends():
    from ecc_spectra.report import build_report
    from ecc_spectra.theorems import GraphContext
    from conftest import using

    for seed in range(15):
        g = random_ct_clique_tree(GeneratorSpec(seed))
        reps = {}
        for name in ("python", "compiled"):
            with using(name):
                reps[name] = build_report(GraphContext(g, f"s{seed}"))
        a, b = reps["python"], reps["compiled"]
        assert a["char_poly"] == b["char_poly"] and a["inertia_exact"] == b["inertia_exact"]
        assert [(c["id"], c["passed"]) for c in a["checks"]] == [(c["id"], c["passed"]) for c in b["checks"]]
        assert a["spectrum"] == pytest.approx(b["spectrum"], abs=1e-9)
