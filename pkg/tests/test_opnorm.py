"""Operator-norm estimation: finite sections, kernel quotients, bound suites."""

from __future__ import annotations

import math

import numpy as np
import pytest

from h2comp.affine import AffineSymbol, comp_norm_sq, xi
from h2comp.dseries import DirichletPoly
from h2comp.opnorm import (
    LOWER_KEYS,
    UPPER_KEYS,
    adjoint_bound_2s,
    adjoint_bound_general,
    bound_suite,
    build_matrix,
    kernel_quotient,
    kernel_quotient_report,
    phi_alpha_adjoint_sup,
    phi_alpha_kernel_ratio_sq,
    phi_alpha_operator,
    sigma_max_series,
    sigma_max_sq,
    suite_for_phi_alpha,
)
from h2comp.zeta import FullIntegers, GeometricPowers, alpha0, zeta


# --- finite sections ------------------------------------------------------

def test_first_column_is_unit_vector():
    op = build_matrix(AffineSymbol(1.5, (0.5, 0.5)), 8, 12)
    col = op.entries[:, 0]
    zero_row = op.out_indices.index((0, 0))
    assert col[zero_row] == pytest.approx(1.0)
    assert np.sum(np.abs(col) ** 2) == pytest.approx(1.0)
    assert op.column_defects[0] == pytest.approx(0.0, abs=1e-15)


def test_constant_symbol_matrix_is_rank_one():
    op = build_matrix(AffineSymbol(2.0, ()), 32, 0)
    assert op.entries.shape[0] == 1
    expected = sum(n ** (-4.0) for n in range(1, 33))
    assert sigma_max_sq(op) == pytest.approx(expected, rel=1e-10)


def test_constant_symbol_sigma_tends_to_zeta():
    val = sigma_max_sq(build_matrix(AffineSymbol(2.0, ()), 512, 0))
    assert val == pytest.approx(zeta(4.0), abs=1e-6)
    assert val <= zeta(4.0)


def test_entry_closed_form():
    # A[k, n] = n^{-c} (-ln n)^{|k|} prod c_j^{k_j} / k_j!
    phi = AffineSymbol(1.6 + 0.2j, (0.4, 0.3))
    op = build_matrix(phi, 6, 8)
    n = 5
    j = op.input_ns.index(n)
    for k_idx, kk in enumerate(op.out_indices):
        tot = sum(kk)
        expected = (
            complex(n) ** (-phi.c)
            * (-math.log(n)) ** tot
            * (0.4 ** kk[0] / math.factorial(kk[0]))
            * (0.3 ** kk[1] / math.factorial(kk[1]))
        )
        assert op.entries[k_idx, j] == pytest.approx(expected, abs=1e-14)


def test_column_norms_certified_against_exact():
    phi = AffineSymbol(1.5, (0.6, 0.4))
    op = build_matrix(phi, 16, 40)
    col_sq = op.column_norm_sq()
    for i, n in enumerate(op.input_ns):
        exact = comp_norm_sq(phi, DirichletPoly.monomial(n, 1.0))
        assert abs(col_sq[i] + op.column_defects[i] - exact) < 1e-10


def test_truncated_columns_never_exceed_exact():
    phi = AffineSymbol(1.5, (1.0,))
    op = build_matrix(phi, 12, 10)
    col_sq = op.column_norm_sq()
    for i, n in enumerate(op.input_ns):
        exact = comp_norm_sq(phi, DirichletPoly.monomial(n, 1.0))
        assert col_sq[i] <= exact + 1e-12


def test_sigma_dominates_column_norms():
    phi = AffineSymbol(1.5, (0.75, 0.25))
    op = build_matrix(phi, 24, 20)
    assert sigma_max_sq(op) >= float(np.max(op.column_norm_sq())) - 1e-12


def test_sigma_monotone_in_truncation():
    phi = AffineSymbol(1.5, (1.0,))
    rows = sigma_max_series(phi, [(8, 40), (16, 40), (32, 40), (64, 40)])
    vals = [v for _, _, v in rows]
    assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))

    rows_k = sigma_max_series(phi, [(64, 10), (64, 20), (64, 30), (64, 40)])
    vals_k = [v for _, _, v in rows_k]
    assert all(b >= a - 1e-12 for a, b in zip(vals_k, vals_k[1:]))


def test_sigma_beats_point_evaluation_bound():
    # the finite section already certifies more than zeta(2 Re c)
    phi = AffineSymbol(1.5, (1.0,))
    val = sigma_max_sq(build_matrix(phi, 16, 24))
    assert val > zeta(3.0)


# --- kernel quotients -----------------------------------------------------

def test_kernel_quotient_far_right_tends_to_one():
    phi = AffineSymbol(1.5, (0.5, 0.5))
    ratio = kernel_quotient(phi, 50.0, 64, 30)
    assert 0.99 < ratio < 1.01


def test_kernel_quotient_constant_symbol_cap():
    phi = AffineSymbol(1.8, ())
    for w in (0.75, 1.0, 2.0, 5.0):
        ratio = kernel_quotient(phi, w, 128, 0)
        assert ratio ** 2 <= zeta(3.6) + 1e-6


def test_kernel_quotient_requires_half_plane():
    phi = AffineSymbol(1.5, (1.0,))
    with pytest.raises(ValueError):
        kernel_quotient(phi, 0.5, 16, 10)
    with pytest.raises(ValueError):
        kernel_quotient(phi, 0.2 + 3.0j, 16, 10)


def test_kernel_quotient_report_defects():
    phi = AffineSymbol(1.5, (1.0,))
    rep = kernel_quotient_report(phi, 2.0, 64, 40)
    assert rep.image_defect >= 0.0
    assert rep.kernel_tail >= 0.0
    # at Re w = 2 the kernel mass beyond n = 64 is tiny
    assert rep.kernel_tail < 1e-2
    assert rep.ratio ** 2 <= zeta(2.0)  # never above the best upper bound


def test_kernel_quotient_is_norm_lower_bound():
    # any quotient through the finite section stays below sigma_max
    phi = AffineSymbol(1.5, (0.75, 0.25))
    op = build_matrix(phi, 48, 24)
    top = sigma_max_sq(op)
    for w in (0.8, 1.0, 1.5, 3.0):
        assert kernel_quotient(phi, w, op=op) ** 2 <= top + 1e-10


# --- adjoint bounds -------------------------------------------------------

def test_adjoint_general_constant_symbol():
    phi = AffineSymbol(1.5, ())
    grid = np.linspace(1.0, 40.0, 200)
    val = adjoint_bound_general(phi, FullIntegers(), grid)
    assert val >= zeta(3.0) - 1e-4
    assert val <= zeta(3.0) + 1e-12


def test_adjoint_general_lattice_beats_full():
    phi = AffineSymbol(1.5, (1.0,))
    grid = np.geomspace(0.55, 20.0, 300)
    lattice = adjoint_bound_general(phi, GeometricPowers(2), np.geomspace(0.05, 20.0, 300))
    full = adjoint_bound_general(phi, FullIntegers(), grid)
    assert lattice > full


def test_adjoint_general_strictly_above_point_bound():
    for phi in (AffineSymbol(1.5, (1.0,)), AffineSymbol(2.0, (0.5, 0.5))):
        val = adjoint_bound_general(phi, GeometricPowers(2), np.geomspace(0.05, 30.0, 400))
        assert val > zeta(2.0 * phi.c.real)


def test_adjoint_general_empty_grid():
    with pytest.raises(ValueError):
        adjoint_bound_general(AffineSymbol(1.5, (1.0,)), FullIntegers(), [])


@pytest.mark.parametrize("xi_val", [0.1, 0.2, 0.25])
def test_adjoint_2s_diagonal_reciprocal(xi_val):
    # on the diagonal Re c - 1/2 = r the sup is exactly 1/xi, attained
    # only in the x -> 0+ limit
    val = adjoint_bound_2s(0.5 + xi_val, xi_val)
    assert val == pytest.approx(1.0 / xi_val, abs=1e-6)


def test_adjoint_2s_reciprocal_lower_bound_sweep():
    rng = np.random.default_rng(97)
    for _ in range(15):
        r = float(rng.uniform(0.05, 1.5))
        a = 0.5 + r + float(rng.uniform(0.0, 1.0))
        val = adjoint_bound_2s(complex(a, rng.normal()), r)
        x = xi(AffineSymbol.unchecked(a, (r,)))
        assert val >= 1.0 / x - 1e-9


def test_adjoint_2s_single_prime_interior():
    val = adjoint_bound_2s(1.5, 1.0)
    assert val >= max(1.0, zeta(3.0))


def test_adjoint_2s_domain():
    with pytest.raises(ValueError):
        adjoint_bound_2s(1.0, 1.0)  # Re c - 1/2 < r
    with pytest.raises(ValueError):
        adjoint_bound_2s(1.5, 0.0)  # needs r > 0


# --- bound suites ---------------------------------------------------------

def test_suite_single_prime_bracket():
    rep = bound_suite(AffineSymbol(1.5, (1.0,)))
    assert rep.entries["genlower"].value == pytest.approx(zeta(3.0), rel=1e-12)
    assert rep.entries["mpq_upper"].value == pytest.approx(zeta(2.0), rel=1e-12)
    assert rep.entries["mpq_upper"].applicable
    assert not rep.entries["newupper"].applicable  # xi = 1 below the crossing
    assert rep.gate_ok()
    lo, hi = rep.bracket()
    assert zeta(3.0) < lo <= hi <= zeta(2.0)


def test_suite_wide_single_prime_newupper():
    rep = bound_suite(AffineSymbol(2.5, (2.0,)))
    e = rep.entries["newupper"]
    assert e.applicable
    expected = 0.5 * (zeta(5.0) + zeta(3.0))
    assert e.value == pytest.approx(expected, rel=1e-12)
    assert e.value == pytest.approx(1.11949, abs=1e-5)
    assert e.value < rep.entries["mpq_upper"].value  # beats zeta(3)
    assert rep.gate_ok()


def test_suite_two_prime_combo():
    rep = bound_suite(AffineSymbol(2.0, (0.5, 0.5)))
    x = xi(AffineSymbol(2.0, (0.5, 0.5)))
    assert x == pytest.approx(1.5 + math.sqrt(1.25), rel=1e-12)
    combo = rep.entries["combo_upper"]
    assert combo.applicable
    assert combo.value == pytest.approx(0.5 * zeta(4.0) + 0.5 * zeta(1.0 + x), rel=1e-12)
    # mpq itself is only claimed for one prime
    assert not rep.entries["mpq_upper"].applicable
    # uniform coefficients switch the d-dependent upper on
    small = rep.entries["smallnorm_upper"]
    assert small.applicable
    assert small.value == pytest.approx(zeta(4.0) * 1.5, rel=1e-12)
    assert rep.gate_ok()


def test_suite_constant_symbol_degenerates():
    rep = bound_suite(AffineSymbol(2.0, ()))
    lo, hi = rep.bracket()
    assert lo == pytest.approx(zeta(4.0), rel=1e-12)
    assert hi == pytest.approx(zeta(4.0), rel=1e-12)
    assert rep.gate_ok()


def test_suite_strict_gap_over_point_bound():
    # every non-constant symbol separates from zeta(2 Re c) strictly
    for phi in (
        AffineSymbol(1.5, (1.0,)),
        AffineSymbol(1.5, (0.75, 0.25)),
        AffineSymbol(1.5, (0.5, 0.5)),
        AffineSymbol(2.5, (2.0,)),
    ):
        rep = bound_suite(phi)
        assert rep.max_lower() > zeta(2.0 * phi.c.real)


def test_suite_json_shape():
    rep = bound_suite(AffineSymbol(1.5, (1.0,)))
    data = rep.to_jsonable()
    assert set(data) == {"entries", "bracket", "gate_ok", "violations"}
    for k, e in data["entries"].items():
        assert k in LOWER_KEYS or k in UPPER_KEYS
        assert set(e) == {"value", "applicable", "provenance"}
    assert data["gate_ok"] is True
    assert data["violations"] == []


# --- the boundary-fixing family -------------------------------------------

def test_family_operator_columns_exact():
    op = phi_alpha_operator(1.0, n_in=64, K_out=80)
    col_sq = op.column_norm_sq()
    for i, n in enumerate(op.input_ns):
        # the exact column norm is 1/n; truncation plus defect restores it
        assert col_sq[i] + op.column_defects[i] == pytest.approx(1.0 / n, abs=1e-12)


def test_family_kernel_ratio_closed_form():
    for a in (0.5, 1.0, 1.4, 3.0):
        for w in (0.25, 1.0, 2.0):
            t = 2.0 ** (-w)
            x = (1.0 - t) / (1.0 + t)
            expected = 4.0 * x / (1.0 + x) ** 2 * zeta(1.0 + 2.0 * a * x)
            assert phi_alpha_kernel_ratio_sq(a, w) == pytest.approx(expected, rel=1e-13)


def test_family_kernel_ratio_climbs_to_flat_bound():
    # as w -> 0 the quotient approaches 2/alpha from below
    for a in (0.5, 1.0, 1.4):
        vals = [phi_alpha_kernel_ratio_sq(a, w) for w in (1.0, 0.1, 0.01, 1e-3, 1e-4)]
        assert all(b >= v - 1e-12 for v, b in zip(vals, vals[1:]))
        assert vals[-1] <= 2.0 / a
        assert vals[-1] >= 2.0 / a - 0.01


def test_family_kernel_ratio_domain():
    with pytest.raises(ValueError):
        phi_alpha_kernel_ratio_sq(0.0, 1.0)
    with pytest.raises(ValueError):
        phi_alpha_kernel_ratio_sq(1.0, 0.0)


def test_family_adjoint_sup_below_crossing():
    # below the crossing point the sup is the x -> 0+ boundary limit
    for a in (0.5, 1.0, 1.4):
        assert phi_alpha_adjoint_sup(a) == pytest.approx(2.0 / a, abs=1e-9)


def test_family_adjoint_sup_above_crossing():
    a = 3.0
    val = phi_alpha_adjoint_sup(a)
    assert val >= max(2.0 / a, zeta(1.0 + 2.0 * a)) - 1e-12


def test_family_suite_pinches_below_crossing():
    rep = suite_for_phi_alpha(1.0, n_in=128, K_out=200)
    assert rep.entries["brevig_lower"].value == pytest.approx(2.0, abs=1e-9)
    assert rep.entries["brevig_upper"].value == pytest.approx(2.0, abs=1e-9)
    lo, hi = rep.bracket()
    assert lo == pytest.approx(2.0, abs=1e-9)
    assert hi == pytest.approx(2.0, abs=1e-9)
    assert rep.entries["kernel_S_lower"].value >= 2.0 - 0.05
    assert rep.entries["adjoint_lower"].value >= max(2.0, zeta(3.0)) - 1e-9
    assert rep.gate_ok()


def test_family_suite_above_crossing():
    rep = suite_for_phi_alpha(3.0, n_in=128, K_out=200)
    assert rep.entries["brevig_lower"].value == pytest.approx(zeta(7.0), rel=1e-12)
    assert rep.entries["brevig_upper"].value == pytest.approx(zeta(4.0), rel=1e-12)
    assert rep.entries["brevig_upper"].value > rep.entries["brevig_lower"].value
    assert rep.gate_ok()


def test_family_kernel_reaches_adjoint():
    # the sampled closed-form quotient reaches the adjoint supremum up to
    # the O(w_min) gap left by the grid end
    for a in (0.5, 1.0, 3.0):
        rep = suite_for_phi_alpha(a, n_in=64, K_out=100)
        k = rep.entries["kernel_S_lower"].value
        s = rep.entries["adjoint_lower"].value
        assert k >= s - 1e-3


def test_family_matrix_stays_below_certified_value():
    # the finite forward section is itself a valid lower bound and must
    # not cross the collapsed bracket
    rep = suite_for_phi_alpha(1.0, n_in=128, K_out=200)
    assert rep.entries["matrix_lower"].value <= 2.0 + 1e-9


def test_alpha0_sits_between_regimes():
    a0 = alpha0()
    below = suite_for_phi_alpha(a0 - 0.02, n_in=32, K_out=60)
    above = suite_for_phi_alpha(a0 + 0.02, n_in=32, K_out=60)
    lo_b, hi_b = below.bracket()
    assert hi_b - lo_b <= 1e-9  # pinched
    lo_a, hi_a = above.bracket()
    assert hi_a - lo_a > 1e-6  # genuinely open
