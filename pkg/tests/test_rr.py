import pytest

from golden import G_TABLE
from ovquiver import rr
from ovquiver.algebra import IntLaurent, eval_at_one
from ovquiver.errors import IncompleteExponents, SignViolation, SupportViolation
from ovquiver.ov import f_at_one
from ovquiver.rr import (
    classical_rr_check,
    complete_up_to,
    deformed_product_check,
    expected_exponent,
    g_poly,
    g_table,
    rr_exponents,
    rr_verify,
    support_set,
)


def q_poly(row):
    return IntLaurent({2 * k: c for k, c in row.items()})


class TestGPoly:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_published_rows(self, m):
        assert g_poly(m).poly == q_poly(G_TABLE[m])

    def test_str(self):
        assert str(g_poly(5)) == "q^6 + q^8 + q^10 + q^12 + q^16"
        assert g_poly(6).to_json()["coefficients"][1] == [9, "2"]

    def test_support_sets(self):
        assert support_set(1) == {0} and support_set(2) == {1} and support_set(3) == {4}
        assert support_set(4) == {5, 9}
        assert support_set(6) == {7, 9, 11, 13, 15, 17, 19, 21, 25}

    @pytest.mark.parametrize("m", range(1, 13))
    def test_row_invariants(self, m):
        g = g_table(12)[m - 1]
        assert g.m == m
        coeffs = g.coefficients
        assert all(c > 0 for c in coeffs.values())
        assert set(coeffs) <= support_set(m)
        assert eval_at_one(g.poly) == (-1) ** m * f_at_one(m, 1)
        if m >= 4:
            ks = sorted(coeffs)
            assert ks[-1] == (m - 1) ** 2
            assert ks[-1] - ks[-2] == 4

    def test_violations_raised(self):
        with pytest.raises(SignViolation):
            rr._gpoly_from_row(2, IntLaurent({1: -1}))
        with pytest.raises(SupportViolation):
            rr._gpoly_from_row(4, IntLaurent({7: 1}))


class TestExponents:
    def test_small_values(self):
        v1 = rr_exponents(1, g_table(4)).values
        assert (v1[1], v1[2], v1[3]) == (-1, 1, 0)
        assert rr_exponents(2, g_table(2)).values[2] == -1

    def test_completeness_bound(self):
        assert complete_up_to(1, 12) == 13
        assert complete_up_to(1, 3) == 4
        assert complete_up_to(2, 12) == 26
        exps = rr_exponents(1, g_table(12))
        assert exps.complete[13] and not exps.complete[14]

    @pytest.mark.parametrize("variant", [1, 2])
    def test_mod_five_pattern(self, variant):
        exps = rr_exponents(variant, g_table(12))
        complete = [i for i, ok in exps.complete.items() if ok]
        assert len(complete) >= 13
        for i in complete:
            assert exps.values[i] == expected_exponent(variant, i)

    def test_json(self):
        data = rr_exponents(1, g_table(3)).to_json()
        assert data["exponents"][0] == {"i": 1, "value": -1, "complete": True}


class TestIdentities:
    @pytest.mark.parametrize("variant", [1, 2])
    def test_verify(self, variant):
        report = rr_verify(variant, 13, 12)
        assert report.ok and report.to_json() == {"variant": variant, "order": 13, "rows": 12, "status": "verified"}

    def test_default_rows(self):
        assert rr_verify(1, 13).rows == 12

    def test_incomplete(self):
        with pytest.raises(IncompleteExponents):
            rr_verify(1, 13, 11)

    @pytest.mark.parametrize("variant", [1, 2])
    def test_classical(self, variant):
        assert classical_rr_check(variant, 50).ok

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            rr_verify(3, 5)

    @pytest.mark.parametrize("m", [1, 2, 6])
    def test_deformed(self, m):
        assert deformed_product_check(m, 40).status == "verified"

    def test_deformed_detects_corruption(self, monkeypatch):
        real = rr.g_table

        def corrupted(m):
            rows = real(m)
            rows[3] = rr.GPoly(4, rows[3].poly + IntLaurent({10: 1}))
            return rows

        monkeypatch.setattr(rr, "g_table", corrupted)
        with pytest.raises(rr.MismatchAt):
            deformed_product_check(6, 40)
