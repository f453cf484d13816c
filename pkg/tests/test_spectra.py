import math

import numpy as np
import pytest
from hypothesis import given

from ecc_spectra.errors import NoConvergence
from ecc_spectra.generators import FIXTURES, complete_graph
from ecc_spectra.matrix import IntSymMatrix
from ecc_spectra.spectra import (
    Spectrum,
    cluster,
    inertia_float,
    interlaces,
    spectral_radius,
    symmetric_eigenvalues,
)

from conftest import BACKENDS, using
from test_matrix import ecc, sym_matrices


def test_k3():
    s = symmetric_eigenvalues(ecc(complete_graph(3)))
    assert s.eigenvalues == pytest.approx((2, -1, -1), abs=1e-12)


def test_g2(fx):
    s = symmetric_eigenvalues(ecc(fx("G2")))
    nonzero = [x for x in s if abs(x) > 1e-6]
    assert nonzero == pytest.approx([14.8323, 1.2042, -3.1211, -12.9155], abs=1e-3)


def test_g3(fx):
    s = symmetric_eigenvalues(ecc(fx("G3")))
    r = math.sqrt(105)
    expected = [8 + 2 * r, 2] + [0] * 11 + [8 - 2 * r, -18]
    assert list(s) == pytest.approx(sorted(expected, reverse=True), abs=1e-9)


def test_spectral_radius(fx):
    assert spectral_radius(symmetric_eigenvalues(ecc(complete_graph(2)))) == pytest.approx(1)
    g1 = spectral_radius(symmetric_eigenvalues(ecc(fx("G1"))))
    assert g1 == pytest.approx(2 * math.sqrt(27 + math.sqrt(709)), abs=1e-9)
    h1 = spectral_radius(symmetric_eigenvalues(FIXTURES["H1_matrix"].value))
    assert h1 == pytest.approx(13.6595, abs=1e-3)
    with pytest.raises(ValueError):
        spectral_radius(Spectrum(()))


def test_inertia_float():
    assert inertia_float(symmetric_eigenvalues(FIXTURES["H1_matrix"].value)).as_tuple() == (3, 3, 3)
    assert inertia_float(symmetric_eigenvalues(FIXTURES["H2_matrix"].value)).as_tuple() == (4, 4, 1)
    assert inertia_float(symmetric_eigenvalues(ecc(complete_graph(2)))).as_tuple() == (1, 1, 0)
    with pytest.raises(ValueError):
        inertia_float(Spectrum((1.0,)), zero_tol=0)


def test_h_spectra_match_printed():
    h1 = [13.6595, 1.1515, 1.03969, 0, 0, 0, -2.15288, -5.03793, -8.65993]
    h2 = [14.1244, 1.08678, 1, 1, 0, -3.04056, -4, -4, -6.17059]
    assert list(symmetric_eigenvalues(FIXTURES["H1_matrix"].value)) == pytest.approx(h1, abs=1e-4)
    assert list(symmetric_eigenvalues(FIXTURES["H2_matrix"].value)) == pytest.approx(h2, abs=1e-4)


@pytest.mark.parametrize("name", BACKENDS)
@given(a=sym_matrices(max_n=10))
def test_matches_numpy(name, a):
    if a.order == 0:
        return
    with using(name):
        s = symmetric_eigenvalues(a)
    ref = sorted(np.linalg.eigvalsh(a.to_float()), reverse=True)
    assert list(s) == pytest.approx(ref, abs=1e-9 * max(1.0, a.frobenius_norm()))


def test_no_convergence():
    a = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 5.0], [3.0, 5.0, 6.0]])
    with pytest.raises(NoConvergence):
        symmetric_eigenvalues(a, max_sweeps=0)
    with pytest.raises(ValueError):
        symmetric_eigenvalues(a, tol=0)


def test_interlaces():
    full = Spectrum((1.0, -1.0), 2**0.5)
    assert interlaces(full, full)
    assert not interlaces(Spectrum((100.0,)), full)
    assert not interlaces(Spectrum((1.0, 0.0, -1.0)), full)


@given(sym_matrices(max_n=8))
def test_principal_submatrices_interlace(a):
    if a.order < 2:
        return
    sub = IntSymMatrix(tuple(r[1:] for r in a.rows[1:]))
    assert interlaces(symmetric_eigenvalues(sub), symmetric_eigenvalues(a))


def test_cluster():
    assert cluster([3.0, 3.0 + 1e-9, 1.0, -1.0, -1.0]) == [(3.0, 2), (1.0, 1), (-1.0, 2)]
    assert cluster([]) == []
