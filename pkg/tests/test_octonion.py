import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octe6 import octonion as oc

U = oc.unit


def coeffs8():
    return st.lists(
        st.floats(min_value=-1.0, max_value=1.0, allow_nan=False), min_size=8, max_size=8
    ).map(np.array)


class TestStructureTable:
    def test_anchored_triples(self):
        # the three products printed around the top of the table
        assert np.array_equal(oc.mul(U("k"), U("l")), U("kl"))
        assert np.array_equal(oc.mul(U("l"), U("kl")), U("k"))
        assert np.array_equal(oc.mul(U("kl"), U("k")), U("l"))

    def test_quaternion_triple(self):
        assert np.array_equal(oc.mul(U("i"), U("j")), U("k"))
        assert np.array_equal(oc.mul(U("j"), U("k")), U("i"))
        assert np.array_equal(oc.mul(U("k"), U("i")), U("j"))

    def test_association_failure(self):
        # (i j) l = kl but i (j l) = -kl
        assert np.array_equal(oc.mul(oc.mul(U("i"), U("j")), U("l")), U("kl"))
        assert np.array_equal(oc.mul(U("i"), oc.mul(U("j"), U("l"))), -U("kl"))

    def test_diagonal_squares_to_minus_one(self):
        for x in range(1, 8):
            assert oc.TABLE.entry(x, x) == (0, -1.0)

    def test_antisymmetric_off_diagonal(self):
        for x in range(1, 8):
            for y in range(1, 8):
                if x != y:
                    kx, sx = oc.TABLE.entry(x, y)
                    ky, sy = oc.TABLE.entry(y, x)
                    assert kx == ky and sx == -sy

    def test_unit_rows_shape(self):
        rows = oc.TABLE.unit_rows()
        assert len(rows) == 7 and all(len(r) == 7 for r in rows)
        assert rows[0][0] == "-1"  # i * i
        assert rows[2][6] == "kl"  # k * l

    def test_identity_element(self, rng):
        a = rng.uniform(-1, 1, (50, 8))
        assert np.array_equal(oc.mul(np.broadcast_to(oc.ONE, (50, 8)), a), a)
        assert np.array_equal(oc.mul(a, np.broadcast_to(oc.ONE, (50, 8))), a)


class TestConjugate:
    def test_example(self):
        a = oc.ONE + 2 * U("i") + 3 * U("l")
        expected = oc.ONE - 2 * U("i") - 3 * U("l")
        assert np.array_equal(oc.conj(a), expected)

    def test_involution(self, rng):
        a = rng.uniform(-1, 1, (100, 8))
        assert np.array_equal(oc.conj(oc.conj(a)), a)

    def test_anti_homomorphism_units(self):
        # conj(i j) = conj(j) conj(i) = (-j)(-i) = -k
        assert np.array_equal(oc.conj(oc.mul(U("i"), U("j"))), oc.mul(oc.conj(U("j")), oc.conj(U("i"))))
        assert np.array_equal(oc.conj(U("k")), -U("k"))

    def test_anti_homomorphism_random(self, rng):
        a, b = rng.uniform(-1, 1, (200, 8)), rng.uniform(-1, 1, (200, 8))
        assert np.abs(oc.conj(oc.mul(a, b)) - oc.mul(oc.conj(b), oc.conj(a))).max() < 1e-14


class TestNormInverse:
    def test_pure_imaginary_example(self):
        a = U("i") + U("j")
        n, inv = oc.norm_inverse(a)
        assert n == pytest.approx(np.sqrt(2), abs=1e-15)
        assert np.allclose(inv, -(U("i") + U("j")) / 2, atol=1e-15)
        assert np.allclose(oc.mul(a, inv), oc.ONE, atol=1e-15)
        assert np.allclose(oc.mul(inv, a), oc.ONE, atol=1e-15)

    def test_zero_has_no_inverse(self):
        n, inv = oc.norm_inverse(oc.ZERO)
        assert n == 0.0 and inv is None
        with pytest.raises(ZeroDivisionError):
            oc.inverse(oc.ZERO)

    def test_composition_law(self, rng):
        a, b = rng.uniform(-1, 1, (5000, 8)), rng.uniform(-1, 1, (5000, 8))
        lhs = oc.norm(oc.mul(a, b))
        rhs = oc.norm(a) * oc.norm(b)
        assert (np.abs(lhs - rhs) / rhs).max() < 1e-12

    @given(a=coeffs8(), b=coeffs8())
    @settings(max_examples=50, deadline=None)
    def test_composition_law_hypothesis(self, a, b):
        lhs = float(oc.norm(oc.mul(a, b)))
        rhs = float(oc.norm(a) * oc.norm(b))
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, rhs)


class TestAssociator:
    def test_unit_example(self):
        # difference of (i j) l = +kl and i (j l) = -kl
        assert np.array_equal(oc.associator(U("i"), U("j"), U("l")), 2 * U("kl"))

    def test_quaternionic_triple_associates(self):
        assert np.array_equal(oc.associator(U("i"), U("j"), U("k")), np.zeros(8))

    def test_alternative(self, rng):
        a, b = rng.uniform(-1, 1, (2000, 8)), rng.uniform(-1, 1, (2000, 8))
        assert np.abs(oc.associator(a, a, b)).max() < 1e-12
        assert np.abs(oc.associator(a, b, b)).max() < 1e-12

    @given(a=coeffs8(), b=coeffs8())
    @settings(max_examples=50, deadline=None)
    def test_alternative_hypothesis(self, a, b):
        assert np.abs(oc.associator(a, a, b)).max() <= 1e-12

    def test_total_antisymmetry(self, rng):
        a, b, c = (rng.uniform(-1, 1, (500, 8)) for _ in range(3))
        base = oc.associator(a, b, c)
        assert np.abs(oc.associator(b, a, c) + base).max() < 1e-12
        assert np.abs(oc.associator(a, c, b) + base).max() < 1e-12
        assert np.abs(oc.associator(c, b, a) + base).max() < 1e-12
        assert np.abs(oc.associator(b, c, a) - base).max() < 1e-12
        assert np.abs(oc.associator(c, a, b) - base).max() < 1e-12

    def test_conjugate_flips_sign(self, rng):
        a, b, c = (rng.uniform(-1, 1, (500, 8)) for _ in range(3))
        base = oc.associator(a, b, c)
        assert np.abs(oc.associator(oc.conj(a), b, c) + base).max() < 1e-12
        assert np.abs(oc.associator(a, oc.conj(b), c) + base).max() < 1e-12
        assert np.abs(oc.associator(a, b, oc.conj(c)) + base).max() < 1e-12

    def test_commutator(self):
        assert np.array_equal(oc.commutator(U("i"), U("j")), 2 * U("k"))
        assert np.array_equal(oc.commutator(U("i"), U("i")), np.zeros(8))


class TestExpUnit:
    def test_quarter_turn(self):
        assert np.allclose(oc.exp_unit(U("l"), np.pi / 2), U("l"), atol=1e-15)

    def test_euler_sixth(self):
        got = oc.exp_unit(U("i"), np.pi / 3)
        assert np.allclose(got, 0.5 * oc.ONE + (np.sqrt(3) / 2) * U("i"), atol=1e-15)

    def test_unit_norm(self, rng):
        v = rng.normal(size=(100, 7))
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        s = np.zeros((100, 8))
        s[:, 1:] = v
        theta = rng.uniform(-10, 10, 100)
        assert np.abs(oc.norm(oc.exp_unit(s, theta)) - 1).max() < 1e-12

    def test_rejects_non_imaginary(self):
        with pytest.raises(ValueError):
            oc.exp_unit(oc.ONE, 0.5)

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            oc.exp_unit(2 * U("i"), 0.5)

    def test_polar_reconstruction(self, rng):
        for _ in range(50):
            a = rng.uniform(-1, 1, 8)
            r, s_hat, theta = oc.polar(a)
            assert np.allclose(r * oc.exp_unit(s_hat, theta), a, atol=1e-12)


class TestQuaternionicSubalgebras:
    def test_two_units_close(self, rng):
        # any two independent imaginary directions span a closed 4-dim subalgebra
        for _ in range(20):
            s = np.zeros(8)
            s[1:] = rng.normal(size=7)
            s /= np.linalg.norm(s)
            t = np.zeros(8)
            t[1:] = rng.normal(size=7)
            t[1:] -= np.dot(t[1:], s[1:]) * s[1:]
            t /= np.linalg.norm(t)
            basis = np.stack([oc.ONE, s, t, oc.mul(s, t)])
            prods = oc.mul(basis[:, None, :], basis[None, :, :]).reshape(16, 8)
            coeffs, *_ = np.linalg.lstsq(basis.T, prods.T, rcond=None)
            assert np.abs(prods.T - basis.T @ coeffs).max() < 1e-12

    def test_quaternion_restriction_no_leakage(self, rng):
        a = rng.uniform(-1, 1, (500, 8))
        b = rng.uniform(-1, 1, (500, 8))
        a[:, 4:] = 0.0
        b[:, 4:] = 0.0
        prod = oc.mul(a, b)
        assert np.array_equal(prod[:, 4:], np.zeros((500, 4)))
        # structural: table closes on the first four slots
        for x in range(4):
            for y in range(4):
                assert oc.TABLE.entry(x, y)[0] < 4


class TestMatrixHelpers:
    def test_conj_transpose_outer(self, rng):
        u = rng.uniform(-1, 1, (3, 8))
        m = oc.outer(u)
        assert oc.hermiticity_residual(m) < 1e-14

    def test_hermitian_dot_real_for_self(self, rng):
        u = rng.uniform(-1, 1, (3, 8))
        d = oc.hermitian_dot(u, u)
        assert np.abs(d[1:]).max() < 1e-14
        assert d[0] == pytest.approx(np.sum(u * u))

    def test_matvec_matches_matmul(self, rng):
        a = rng.uniform(-1, 1, (3, 3, 8))
        v = rng.uniform(-1, 1, (3, 8))
        assert np.allclose(oc.matvec(a, v), oc.matmul(a, v[:, None, :])[:, 0, :], atol=1e-14)
