from fractions import Fraction

import pytest

from bnslopes.schubert import GrassmannianSpec, brute_zeta_integral, make_index
from bnslopes.tautpush import (
    DivisorClass,
    GrdParams,
    ParameterError,
    TautCombo,
    castelnuovo_N,
    push_a,
    push_b,
    push_c,
    push_combo,
    rho,
    rho_zero_triples,
    xi,
)


class TestRho:
    def test_values(self):
        assert rho(4, 1, 3) == 0
        assert rho(10, 4, 12) == 0
        assert rho(2, 1, 2) == 0
        assert rho(3, 1, 2) == -1


class TestCastelnuovo:
    def test_values(self):
        assert castelnuovo_N(4, 1, 3) == 2
        assert castelnuovo_N(6, 2, 6) == 5
        assert castelnuovo_N(10, 4, 12) == 42

    def test_rejects_nonzero_rho(self):
        with pytest.raises(ParameterError):
            castelnuovo_N(3, 1, 2)

    def test_equals_brute_zeta_power(self):
        # acceptance runs the full g <= 12 sweep; spot-check the small ones here
        for g, r, d in rho_zero_triples(8):
            spec = GrassmannianSpec(r, d)
            idx = make_index(spec, (0,) * (r + 1))
            assert brute_zeta_integral(spec, idx, g) == castelnuovo_N(g, r, d)


class TestXi:
    def test_values(self):
        assert xi(10, 4, 12) == 72
        assert xi(21, 6, 24) == 312
        assert xi(4, 1, 3) == 9  # r = 1 kills the correction term

    def test_zero_denominator(self):
        with pytest.raises(ParameterError):
            xi(2, 0, 3)


class TestPushforwards:
    def test_push_b_psi_coefficient(self):
        dc = push_b(GrdParams(10, 4, 12))
        assert dc.psi == -504  # -dN

    def test_push_a_lambda_genus21(self):
        p = GrdParams(21, 6, 24)
        assert push_a(p).lam == Fraction(-420, 19) * p.N

    def test_push_c_lambda_genus21(self):
        p = GrdParams(21, 6, 24)
        assert push_c(p).lam == Fraction(-906, 95) * p.N

    def test_push_b_displayed_form_is_integral(self):
        for g, r, d in ((6, 2, 6), (10, 4, 12)):
            p = GrdParams(g, r, d)
            pre = Fraction(d * p.N, 2 * (g - 1))
            dc = (1 / pre) * push_b(p)
            assert dc.lam == 12
            assert dc.psi == -2 * (g - 1)
            assert dc.delta[0] == -1
            for i in range(1, g):
                assert dc.delta[i] == 4 * (g - i) * (g - i - 1)

    def test_domain_guards(self):
        with pytest.raises(ParameterError):
            push_a(GrdParams(2, 1, 2))  # (g-1)(g-2) vanishes
        with pytest.raises(ParameterError):
            push_c(GrdParams(2, 1, 2))
        with pytest.raises(ParameterError):
            push_b(GrdParams(3, 1, 2))  # rho != 0


class TestPushCombo:
    def test_pure_lambda(self):
        p = GrdParams(4, 1, 3)
        dc = push_combo(TautCombo.of(0, 0, 0, 1), p)
        assert dc.lam == p.N
        assert dc.psi == 0
        assert all(x == 0 for x in dc.delta)

    def test_pure_lambda_skips_out_of_domain_pushes(self):
        # only the lambda term is evaluated, so g = 2 is fine
        dc = push_combo(TautCombo.of(0, 0, 0, 1), GrdParams(2, 1, 2))
        assert dc.lam == 1

    def test_genus10(self):
        p = GrdParams(10, 4, 12)
        dc = push_combo(TautCombo.of(2, -1, -6, 1), p)
        assert dc.lam == 7 * p.N
        assert dc.delta[0] == -p.N
        assert dc.psi == 0

    def test_genus21(self):
        p = GrdParams(21, 6, 24)
        dc = push_combo(TautCombo.of(2, -1, -8, 1), p)
        assert dc.lam == Fraction(2459, 95) * p.N
        assert dc.delta[0] == Fraction(-377, 95) * p.N
        assert dc.psi == 0
        assert dc.is_delta_symmetric()


class TestDivisorClass:
    def test_json_roundtrip(self):
        dc = push_combo(TautCombo.of(2, -1, -8, 1), GrdParams(21, 6, 24))
        assert DivisorClass.from_json_dict(dc.to_json_dict()) == dc

    def test_json_shape(self):
        obj = push_b(GrdParams(6, 2, 6)).to_json_dict()
        assert set(obj) == {"lambda", "psi", "delta"}
        assert len(obj["delta"]) == 6
        assert all(isinstance(x, str) for x in obj["delta"])

    def test_genus_mismatch(self):
        with pytest.raises(ParameterError):
            push_b(GrdParams(6, 2, 6)) + push_b(GrdParams(10, 4, 12))


def test_rho_zero_triples():
    triples = rho_zero_triples(12)
    assert (4, 1, 3) in triples
    assert (6, 2, 6) in triples
    assert (10, 4, 12) in triples
    assert (12, 11, 22) in triples
    assert all(rho(g, r, d) == 0 and r >= 1 for g, r, d in triples)
    assert triples == sorted(triples)
