"""Closed forms for the three- and four-term shifted geometric families."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobkit import (
    GcdNotOneError,
    InvalidInputError,
    NoClosedFormCaseError,
    OutOfValidityRangeError,
    UnsupportedCaseError,
    abg_decompose,
    apery_grid_triple,
    apery_set,
    closed_form_case,
    denumerant_table,
    g_p_closed_quad,
    g_p_closed_triple,
    g_p_two_gens,
    make_quad,
    make_triple,
    n_p_closed_triple,
    p_frobenius_scan,
    p_sylvester_count,
    qr_decompose,
)
from frobkit.errors import FrobkitError


def random_positive_triples(count, seed, a_max=4, b_max=4, n_max=2):
    """Seeded valid triples with c > 0, paired with a p in [0, q]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = rng.randint(1, a_max)
        b = rng.randint(2, b_max)
        n = rng.randint(1, n_max)
        head = a * b**n
        if head < 4:
            continue
        c = rng.randint(1, head - 2)
        try:
            t = make_triple(a, b, c, n)
        except FrobkitError:
            continue
        out.append((t, rng.randint(0, qr_decompose(t).q)))
    return out


class TestMakeTriple:
    def test_golden_positive(self):
        assert make_triple(5, 2, 19, 3).gens.gens == (21, 61, 141)

    def test_golden_negative(self):
        assert make_triple(4, 3, -1, 1).gens.gens == (13, 37, 109)

    def test_gcd_not_one(self):
        with pytest.raises(GcdNotOneError):
            make_triple(2, 2, 2, 1)  # (2, 6, 14)

    def test_head_too_small(self):
        with pytest.raises(InvalidInputError):
            make_triple(1, 2, 7, 1)  # 2 - 7 < 2

    def test_parameter_domains(self):
        with pytest.raises(InvalidInputError):
            make_triple(0, 2, 1, 1)
        with pytest.raises(InvalidInputError):
            make_triple(1, 1, 1, 1)
        with pytest.raises(InvalidInputError):
            make_triple(1, 2, 0, 1)
        with pytest.raises(InvalidInputError):
            make_triple(1, 2, 1, 0)

    def test_c0_property(self):
        assert make_triple(4, 3, -1, 1).c0 == 1
        assert make_triple(5, 2, 19, 3).c0 is None


class TestQRDecompose:
    def test_golden(self):
        qr = qr_decompose(make_triple(5, 2, 19, 3))
        assert (qr.q, qr.r) == (7, 0)

    def test_negative_shift(self):
        qr = qr_decompose(make_triple(4, 3, -1, 1))
        assert (qr.q, qr.r) == (3, 1)

    def test_exact_division(self):
        qr = qr_decompose(make_triple(1, 2, -1, 1))
        assert (qr.q, qr.r) == (1, 0)

    @given(
        st.integers(1, 30),
        st.integers(2, 12),
        st.integers(-50, 50).filter(lambda c: c != 0),
        st.integers(1, 4),
    )
    @settings(max_examples=60, deadline=None)
    def test_identity(self, a, b, c, n):
        try:
            t = make_triple(a, b, c, n)
        except FrobkitError:
            return
        qr = qr_decompose(t)
        assert t.gens.gens[0] == (b + 1) * qr.q + qr.r
        assert 0 <= qr.r <= b


class TestClosedTriple:
    def test_golden_positive(self):
        t = make_triple(5, 2, 19, 3)
        assert g_p_closed_triple(t, 3) == 1370
        for p in range(8):
            assert g_p_closed_triple(t, p) == 141 * p + 947

    def test_case2_golden(self):
        t = make_triple(4, 3, -1, 1)
        assert g_p_closed_triple(t, 0) == 316

    def test_case4_small(self):
        t = make_triple(1, 2, -5, 1)  # gens (7, 9, 13), q=2, r=1, c0=5 > 4
        assert closed_form_case(t).case_id == 4
        assert g_p_closed_triple(t, 0) == 24

    def test_positive_r_branch(self):
        t = make_triple(3, 2, 1, 2)  # gens (11, 23, 47), q=3, r=2
        assert g_p_closed_triple(t, 0) == 153
        assert p_frobenius_scan(t.gens, 0) == 153

    def test_out_of_validity(self):
        t = make_triple(5, 2, 19, 3)
        with pytest.raises(OutOfValidityRangeError):
            g_p_closed_triple(t, 8)

    def test_case4_tightened_bound(self):
        # the case-4 position x3 = q-p-1 does not exist at p = q; the scan
        # oracle confirms the formula value would be wrong there
        t = make_triple(1, 2, -5, 1)
        q = qr_decompose(t).q
        with pytest.raises(OutOfValidityRangeError):
            g_p_closed_triple(t, q)
        assert g_p_closed_triple(t, q - 1) == p_frobenius_scan(t.gens, q - 1)

    def test_no_case_surfaces(self):
        t = make_triple(1, 3, -100, 1)  # gens (103, 109, 127), r = b
        with pytest.raises(NoClosedFormCaseError):
            g_p_closed_triple(t, 0)

    def test_strictly_increasing_in_p(self):
        for t, _ in random_positive_triples(20, seed=404):
            q = qr_decompose(t).q
            values = [g_p_closed_triple(t, p) for p in range(q + 1)]
            assert all(x < y for x, y in zip(values, values[1:]))


class TestCaseSelector:
    def test_case2_example(self):
        cf = closed_form_case(make_triple(4, 3, -1, 1))
        assert cf.case_id == 2
        assert cf.conditions.b_gap_growth == 72
        assert cf.conditions.b_gap_shift == 2
        assert cf.conditions.r_excess_growth == 0

    def test_case4_example(self):
        cf = closed_form_case(make_triple(1, 2, -5, 1))
        assert cf.case_id == 4
        assert cf.conditions.b_gap_shift == 5
        assert cf.conditions.b_gap_growth == 4

    def test_no_case_at_r_equals_b(self):
        cf = closed_form_case(make_triple(1, 3, -100, 1))
        assert cf.case_id is None

    def test_rejects_positive_c(self):
        with pytest.raises(InvalidInputError):
            closed_form_case(make_triple(5, 2, 19, 3))

    @given(
        st.integers(1, 20),
        st.integers(2, 10),
        st.integers(1, 10**6),
        st.integers(1, 3),
    )
    @settings(max_examples=80, deadline=None)
    def test_at_most_one_case(self, a, b, c0, n):
        try:
            t = make_triple(a, b, -c0, n)
        except FrobkitError:
            return
        closed_form_case(t)  # internal assertion fires on overlap

    def test_each_selected_case_matches_oracle(self):
        # exercise every branch id against the scan oracle at p <= 1
        seen = set()
        rng = random.Random(11)
        for _ in range(4000):
            if seen == {1, 2, 3, 4}:
                break
            a, b = rng.randint(1, 4), rng.randint(2, 5)
            c0, n = rng.randint(1, 30), rng.randint(1, 2)
            try:
                t = make_triple(a, b, -c0, n)
            except FrobkitError:
                continue
            if t.gens.a1 > 500:
                continue
            cid = closed_form_case(t).case_id
            if cid is None or cid in seen:
                continue
            for p in (0, 1):
                try:
                    assert g_p_closed_triple(t, p) == p_frobenius_scan(t.gens, p)
                except OutOfValidityRangeError:
                    pass
            seen.add(cid)
        assert seen == {1, 2, 3, 4}


class TestSylvesterClosed:
    def test_golden(self):
        t = make_triple(5, 2, 19, 3)
        assert n_p_closed_triple(t, 0) == 474
        assert n_p_closed_triple(t, 7) == 3 * (158 + 420 - 49)

    def test_matches_count_oracle(self):
        t = make_triple(3, 2, 1, 2)
        assert n_p_closed_triple(t, 0) == p_sylvester_count(t.gens, 0) == 80

    def test_negative_shift_unsupported(self):
        with pytest.raises(UnsupportedCaseError):
            n_p_closed_triple(make_triple(4, 3, -1, 1), 0)

    def test_out_of_validity(self):
        with pytest.raises(OutOfValidityRangeError):
            n_p_closed_triple(make_triple(5, 2, 19, 3), 8)

    def test_matches_oracle_on_random_corpus(self):
        for t, p in random_positive_triples(20, seed=808):
            assert n_p_closed_triple(t, p) == p_sylvester_count(t.gens, p)


class TestAperyGrid:
    def test_golden_block(self):
        grid = apery_grid_triple(make_triple(5, 2, 19, 3), 0)
        assert grid.positions == frozenset(
            (x2, x3) for x2 in range(3) for x3 in range(7)
        )

    def test_partial_row_and_max_position(self):
        t = make_triple(3, 2, 1, 2)  # gens (11, 23, 47), q=3, r=2
        grid = apery_grid_triple(t, 0)
        expected = {(x2, x3) for x2 in range(3) for x3 in range(3)}
        expected |= {(0, 3), (1, 3)}
        assert grid.positions == frozenset(expected)
        assert grid.max_value() == grid.value_at((1, 3))

    def test_residue_unit(self):
        grid = apery_grid_triple(make_triple(5, 2, 19, 3), 0)
        assert grid.residue_unit == 19 % 21

    def test_rejects_negative_shift_and_large_p(self):
        with pytest.raises(InvalidInputError):
            apery_grid_triple(make_triple(4, 3, -1, 1), 0)
        with pytest.raises(OutOfValidityRangeError):
            apery_grid_triple(make_triple(5, 2, 19, 3), 8)

    def test_residues_are_a_permutation(self):
        for t, p in random_positive_triples(25, seed=505):
            grid = apery_grid_triple(t, p)
            a1 = t.gens.a1
            assert sorted(v % a1 for v in grid.values()) == list(range(a1))

    def test_grid_values_equal_generic_apery_set(self):
        for t, p in random_positive_triples(25, seed=606):
            grid = apery_grid_triple(t, p)
            assert grid.entries_by_residue() == apery_set(t.gens, p).entries

    def test_grid_values_have_exact_count(self):
        for t, p in random_positive_triples(15, seed=707):
            grid = apery_grid_triple(t, p)
            counts = denumerant_table(t.gens, grid.max_value()).counts
            a1 = t.gens.a1
            for v in grid.values():
                assert counts[v] == p + 1
                if v >= a1:
                    assert counts[v - a1] == p


class TestMakeQuadAndDigits:
    def test_golden(self):
        assert make_quad(2, 3, 37, 3).gens.gens == (17, 125, 449, 1421)

    def test_small(self):
        assert make_quad(1, 2, 1, 2).gens.gens == (3, 7, 15, 31)

    def test_gcd_not_one(self):
        with pytest.raises(GcdNotOneError):
            make_quad(2, 2, 2, 1)

    def test_digits_golden(self):
        d = abg_decompose(make_quad(2, 3, 37, 3))
        assert (d.alpha, d.beta, d.gamma) == (1, 1, 0)

    def test_digits_exact_block(self):
        d = abg_decompose(make_quad(1, 2, 1, 3))  # 7 = 1*7 + 0*3 + 0
        assert (d.alpha, d.beta, d.gamma) == (1, 0, 0)

    def test_digits_second_example(self):
        d = abg_decompose(make_quad(2, 2, 1, 3))  # 15 = 2*7 + 0*3 + 1
        assert (d.alpha, d.beta, d.gamma) == (2, 0, 1)

    @given(
        st.integers(1, 30),
        st.integers(2, 10),
        st.integers(-50, 50).filter(lambda c: c != 0),
        st.integers(1, 3),
    )
    @settings(max_examples=60, deadline=None)
    def test_digit_constraints(self, a, b, c, n):
        try:
            qd = make_quad(a, b, c, n)
        except FrobkitError:
            return
        d = abg_decompose(qd)
        head = qd.gens.gens[0]
        assert head == d.alpha * (b * b + b + 1) + d.beta * (b + 1) + d.gamma
        assert 0 <= d.beta * (b + 1) + d.gamma <= b * b + b
        assert 0 <= d.gamma <= b


class TestClosedQuad:
    def test_golden(self):
        qd = make_quad(2, 3, 37, 3)
        assert g_p_closed_quad(qd, 0) == 1779
        assert g_p_closed_quad(qd, 2) == 2677

    def test_out_of_validity_with_oracle_value(self):
        qd = make_quad(2, 3, 37, 3)
        with pytest.raises(OutOfValidityRangeError):
            g_p_closed_quad(qd, 3)
        assert p_frobenius_scan(qd.gens, 3) == 3075
        assert 2 * 125 + 2 * 1421 - 17 == 3075

    def test_negative_shift_unsupported(self):
        with pytest.raises(UnsupportedCaseError):
            g_p_closed_quad(make_quad(4, 3, -1, 1), 0)

    def test_gamma_zero_with_alpha_zero(self):
        # 3 = 0*7 + 1*3 + 0: the gamma=0 branch still evaluates correctly
        qd = make_quad(1, 2, 1, 2)
        assert g_p_closed_quad(qd, 0) == 11
        assert p_frobenius_scan(qd.gens, 0) == 11

    def test_known_early_breakdown(self):
        # the four-term pattern can break before b - beta: (5, 11, 23, 47)
        # agrees with the oracle only at p = 0; the sweep harness exists to
        # find exactly this kind of point
        qd = make_quad(3, 2, 1, 1)
        assert g_p_closed_quad(qd, 0) == p_frobenius_scan(qd.gens, 0)
        assert g_p_closed_quad(qd, 1) == 52
        assert p_frobenius_scan(qd.gens, 1) == 42

    def test_strictly_increasing_in_p(self):
        qd = make_quad(2, 3, 37, 3)
        values = [g_p_closed_quad(qd, p) for p in range(3)]
        assert all(x < y for x, y in zip(values, values[1:]))


class TestTwoGenerators:
    def test_classic(self):
        assert g_p_two_gens(2, 3, 0) == 1

    def test_formula(self):
        assert g_p_two_gens(3, 5, 1) == 22

    def test_matches_scan(self):
        assert g_p_two_gens(2, 3, 2) == 13 == p_frobenius_scan((2, 3), 2)

    def test_gcd_not_one(self):
        with pytest.raises(GcdNotOneError):
            g_p_two_gens(4, 6, 0)


class TestGeneratorIdentity:
    @given(
        st.integers(1, 10**6),
        st.integers(2, 10**3),
        st.integers(-(10**9), 10**9).filter(lambda c: c != 0),
        st.integers(1, 20),
    )
    @settings(max_examples=100, deadline=None)
    def test_three_term_recurrence(self, a, b, c, n):
        g1 = a * b**n - c
        g2 = a * b ** (n + 1) - c
        g3 = a * b ** (n + 2) - c
        assert (b + 1) * g2 == b * g1 + g3
