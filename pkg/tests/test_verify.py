import json

import numpy as np
import pytest

from octe6 import jordan as jd, verify
from octe6.rng import suite_generator, trial_generator


class TestRngStreams:
    def test_suite_streams_reproducible(self):
        a = suite_generator(7, "octonion").uniform(size=5)
        b = suite_generator(7, "octonion").uniform(size=5)
        assert np.array_equal(a, b)

    def test_suites_decorrelated(self):
        a = suite_generator(7, "octonion").uniform(size=5)
        b = suite_generator(7, "jordan").uniform(size=5)
        assert not np.array_equal(a, b)

    def test_trial_addressing(self):
        a = trial_generator(7, "e6", 123).uniform(size=3)
        b = trial_generator(7, "e6", 123).uniform(size=3)
        c = trial_generator(7, "e6", 124).uniform(size=3)
        assert np.array_equal(a, b) and not np.array_equal(a, c)


class TestGenerators:
    def test_cayley_spinors_admissible(self, rng):
        for _ in range(50):
            psi = verify.random_cayley_spinor(rng)
            assert np.linalg.norm(jd.spinor_associator(psi)) < 1e-12
            assert np.sum(psi * psi) == pytest.approx(1.0)

    def test_op2_frames_orthogonal(self, rng):
        frame = verify.random_op2_frame(rng)
        for n in range(3):
            assert jd.op2_membership(frame[n], tol=1e-10).is_member
            for m in range(n + 1, 3):
                assert jd.frob(jd.jordan_product(frame[n], frame[m])) < 1e-10
        assert jd.frob(frame.sum(axis=0) - jd.IDENT3) < 1e-10

    def test_spectral_matrices_have_spread_spectra(self, rng):
        _, lam, _ = verify.random_spectral_matrix(rng)
        assert lam[0] - lam[1] >= 0.05 and lam[1] - lam[2] >= 0.05

    def test_sigma_zero_matrices(self, rng):
        zeros = verify.random_sigma_zero(rng, 10)
        for z in zeros:
            assert abs(jd.sigma_quadratic(z)) < 1e-12
            assert abs(jd.determinant(z)) < 1e-12


class TestSuiteRuns:
    def test_all_pass_small(self):
        report = verify.run_suites(seed=3, trials=500)
        assert report["passed"]
        assert set(report["suites"]) == set(verify.SUITE_NAMES)

    def test_deterministic_bytes(self):
        a = verify.run_suites(seed=11, trials=300)
        b = verify.run_suites(seed=11, trials=300)
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_different_seeds_differ(self):
        a = verify.run_suites(seed=1, trials=300, suites=["octonion"])
        b = verify.run_suites(seed=2, trials=300, suites=["octonion"])
        assert json.dumps(a) != json.dumps(b)

    def test_suite_selection(self):
        report = verify.run_suites(seed=1, trials=300, suites=["jordan"])
        assert list(report["suites"]) == ["jordan"]

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError, match="unknown suites"):
            verify.run_suites(seed=1, trials=10, suites=["nope"])

    def test_tolerance_override_can_fail_a_suite(self):
        report = verify.run_suites(
            seed=1, trials=300, suites=["octonion"], tolerances={"composition_law": 0.0}
        )
        assert not report["passed"]
        assert not report["suites"]["octonion"]["checks"]["composition_law"]["passed"]

    def test_check_shapes(self):
        report = verify.run_suites(seed=5, trials=300, suites=["e6"])
        checks = report["suites"]["e6"]["checks"]
        assert checks["det_invariance"]["trials"] == 78 * 16
        witness = checks["boost_trace_witness"]
        assert witness["kind"] == "witness" and witness["max_discrepancy"] > 0.1
