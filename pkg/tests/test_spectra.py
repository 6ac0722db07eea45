"""Normalized Laplacians, the eigensolver oracle, comparison, clustering."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rcorona import (
    HypothesisError,
    Spectrum,
    adjacency_matrix,
    build_graph,
    compare_spectra,
    degree_profile,
    generate,
    nl_spectrum,
    normalized_laplacian,
    normalized_laplacian_regular,
    numeric_spectrum,
    summarize,
)


class TestNormalizedLaplacian:
    def test_k3(self):
        lap = normalized_laplacian(generate("complete", 3))
        expect = np.eye(3) - (np.ones((3, 3)) - np.eye(3)) / 2
        assert np.array_equal(lap, expect)

    def test_p2(self):
        assert np.array_equal(normalized_laplacian(generate("path", 2)), [[1, -1], [-1, 1]])

    def test_star_off_diagonal(self):
        lap = normalized_laplacian(generate("complete_bipartite", 1, 3))
        assert lap[0, 1] == pytest.approx(-1 / math.sqrt(3), abs=1e-15)

    def test_isolated_vertex_rejected(self):
        with pytest.raises(HypothesisError, match="degree-0"):
            normalized_laplacian(build_graph(2, []))

    def test_regular_shortcut_exact(self, regular_catalog):
        for name, g in regular_catalog.items():
            general = normalized_laplacian(g)
            shortcut = normalized_laplacian_regular(g)
            assert np.array_equal(general, shortcut), name

    def test_regular_shortcut_rejects_irregular(self):
        with pytest.raises(HypothesisError):
            normalized_laplacian_regular(generate("complete_bipartite", 1, 2))


class TestNumericSpectrum:
    def test_k3_values(self):
        s = nl_spectrum(generate("complete", 3))
        assert np.allclose(s.values, [0, 1.5, 1.5], atol=1e-12)

    def test_p2_values(self):
        s = nl_spectrum(generate("path", 2))
        assert np.allclose(s.values, [0, 2], atol=1e-12)

    def test_identity(self):
        assert numeric_spectrum(np.eye(2)).values == (1.0, 1.0)

    def test_empty(self):
        assert numeric_spectrum(np.zeros((0, 0))).values == ()

    def test_non_symmetric_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            numeric_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_deterministic(self):
        lap = normalized_laplacian(generate("petersen"))
        assert numeric_spectrum(lap).values == numeric_spectrum(lap).values

    def test_cycle_closed_form(self):
        # solver self-test: C_n eigenvalues are 1 - cos(2 pi k / n)
        for n in (3, 4, 5, 8, 12):
            got = nl_spectrum(generate("cycle", n)).values
            expect = sorted(1 - math.cos(2 * math.pi * k / n) for k in range(n))
            assert np.allclose(got, expect, atol=1e-12), n

    def test_complete_closed_form(self):
        # solver self-test: K_n has 0 once and n/(n-1) with multiplicity n-1
        for n in (2, 3, 5, 9):
            got = nl_spectrum(generate("complete", n)).values
            expect = [0.0] + [n / (n - 1)] * (n - 1)
            assert np.allclose(got, expect, atol=1e-12), n

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 25), st.integers(0, 2**31 - 1))
    def test_matches_lapack_on_random_symmetric(self, n, seed):
        rng = np.random.default_rng(seed)
        m = rng.standard_normal((n, n))
        m = (m + m.T) / 2
        got = numeric_spectrum(m).values
        assert np.allclose(got, np.sort(np.linalg.eigvalsh(m)), atol=1e-10 * n)

    def test_adversarial_structures(self):
        rng = np.random.default_rng(99)
        v = rng.standard_normal(25)
        v /= np.linalg.norm(v)
        block = rng.standard_normal((5, 5))
        block = (block + block.T) / 2
        cases = {
            "diagonal": np.diag(rng.standard_normal(40)),
            "scaled identity": 7.5 * np.eye(30),
            "reflector": np.eye(25) - 2 * np.outer(v, v),
            "rank one": np.outer(v, v),
            "repeated blocks": np.kron(np.eye(8), block),
            "zero": np.zeros((12, 12)),
        }
        for name, m in cases.items():
            got = np.array(numeric_spectrum(m).values)
            ref = np.sort(np.linalg.eigvalsh(m))
            assert np.max(np.abs(got - ref)) < 1e-11, name

    def test_broken_tridiagonal(self):
        # zero subdiagonal entries exercise the deflation splits
        rng = np.random.default_rng(5)
        t = np.diag(rng.standard_normal(20))
        for i in range(0, 19, 2):
            t[i, i + 1] = t[i + 1, i] = rng.standard_normal()
        got = np.array(numeric_spectrum(t).values)
        assert np.max(np.abs(got - np.sort(np.linalg.eigvalsh(t)))) < 1e-12

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError, match="finite"):
            numeric_spectrum(np.array([[np.nan, 0.0], [0.0, 1.0]]))

    def test_trace_and_range_invariants(self, catalog):
        for name, g in catalog.items():
            s = nl_spectrum(g)
            n = g.vertex_count
            assert abs(math.fsum(s.values) - n) <= 1e-9 * n, name
            assert all(-1e-9 <= v <= 2 + 1e-9 for v in s.values), name

    def test_zero_eigenvector_residual(self, catalog):
        for name, g in catalog.items():
            lap = normalized_laplacian(g)
            d = np.sqrt(np.array(degree_profile(g).degrees, dtype=float))
            residual = np.linalg.norm(lap @ d)
            assert residual <= 1e-9, name

    def test_connected_graphs_have_simple_zero(self, catalog):
        for name, g in catalog.items():
            s = nl_spectrum(g)
            assert abs(s.values[0]) <= 1e-12, name
            assert s.values[1] > 1e-9, name


class TestCompare:
    def test_equal(self):
        a = Spectrum((0.0, 1.5, 1.5))
        assert compare_spectra(a, Spectrum((0.0, 1.5, 1.5)), 1e-8).matched

    def test_length_mismatch(self):
        rep = compare_spectra(Spectrum((0.0, 1.0)), Spectrum((0.0, 1.0, 2.0)), 1e-8)
        assert not rep.matched and "length" in rep.reason

    def test_within_tolerance(self):
        assert compare_spectra(Spectrum((0.0,)), Spectrum((1e-9,)), 1e-8).matched

    def test_outside_tolerance_reports_worst(self):
        rep = compare_spectra(Spectrum((0.0, 1.0)), Spectrum((0.0, 1.5)), 1e-8)
        assert not rep.matched
        assert rep.max_deviation == pytest.approx(0.5)
        assert rep.worst_index == 1

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            compare_spectra(Spectrum(()), Spectrum(()), 0.0)


class TestSummarize:
    def test_clusters(self):
        s = Spectrum((0.0, 1.4999999999, 1.5))
        got = summarize(s, 1e-6).groups
        assert len(got) == 2
        assert got[0] == (0.0, 1)
        assert got[1][1] == 2 and got[1][0] == pytest.approx(1.5, abs=1e-6)

    def test_empty(self):
        assert summarize(Spectrum(()), 1e-8).groups == ()

    def test_singletons(self):
        assert summarize(Spectrum((0.0, 1.0, 2.0)), 1e-9).groups == ((0.0, 1), (1.0, 1), (2.0, 1))

    def test_total_preserved(self):
        s = nl_spectrum(generate("petersen"))
        assert summarize(s, 1e-8).total == 10


class TestSerialization:
    def test_json(self):
        assert Spectrum((0.0, 2.0)).to_json() == "[0.0, 2.0]"

    def test_csv_has_17_digits(self):
        text = Spectrum((1 / 3,)).to_csv()
        assert text == "0.33333333333333331\n"

    def test_adjacency_spectra_fit_in_spectrum(self):
        # Spectrum also carries adjacency eigenvalues (outside [0, 2])
        s = numeric_spectrum(adjacency_matrix(generate("complete", 4)).astype(float))
        assert s.values[0] == pytest.approx(-1.0, abs=1e-12)
        assert s.values[-1] == pytest.approx(3.0, abs=1e-12)
