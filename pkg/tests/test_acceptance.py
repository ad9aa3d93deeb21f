"""Acceptance criteria 1-9, one PASS/FAIL line each.

The lines are printed as each test runs (visible with ``-s``) and repeated
in the terminal summary.
"""

import math
import time
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import golden
from oracles import TABLE2_Z, ccot, mp_Z, rel_err
from psiaccel import (
    EULER_GAMMA,
    ModelSequence,
    TTransformState,
    digamma,
    hurwitz_zeta_int,
    model_transformed_tail,
    partial_sums_Z,
    t_transform_explicit,
    t_transform_push,
    wynn_epsilon,
)
from psiaccel.error_series import (
    poch_hat_coeffs,
    pochhammer,
    transform_error_direct,
    transform_error_hurwitz,
)
from psiaccel.tables import build_table

RESULTS = {}


def report(criterion, ok, detail):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[criterion] = line
    print(line)
    return ok


def within_last_digit(value, printed):
    """|value - printed| <= one unit in the last printed decimal place."""
    unit = Decimal(1).scaleb(Decimal(printed).as_tuple().exponent)
    return abs(Decimal(value) - Decimal(printed)) <= unit


def within_last_digit_complex(value, printed_pair):
    return within_last_digit(value.real, printed_pair[0]) and within_last_digit(value.imag, printed_pair[1])


# --- checks ---------------------------------------------------------------------


def check_table1():
    start = time.perf_counter()
    table = build_table(1)
    elapsed = time.perf_counter() - start
    bad = []
    for row in table.rows:
        raw, t, eps = golden.TABLE1[row.n]
        for name, value, printed in (("raw", row.raw, raw), ("T", row.t_value, t), ("eps", row.eps_value, eps)):
            if not within_last_digit(value, printed):
                bad.append(f"n={row.n} {name}")
    if not within_last_digit(table.psi_t, golden.TABLE1_PSI):
        bad.append("psi")
    ok = not bad and elapsed < 1.0
    return ok, f"Table 1, 15 rows x 3 columns, {len(bad)} mismatches {bad[:3]}, {elapsed:.3f} s"


def check_table2():
    start = time.perf_counter()
    table = build_table(2)
    elapsed = time.perf_counter() - start
    bad = []
    for row in table.rows:
        raw, t = golden.TABLE2[row.n]
        if not within_last_digit_complex(row.raw, raw):
            bad.append(f"n={row.n} raw")
        if not within_last_digit_complex(row.t_value, t):
            bad.append(f"n={row.n} T")
    ok = not bad and elapsed < 1.0
    return ok, f"Table 2, 16 rows x 2 complex columns, {len(bad)} mismatches {bad[:3]}, {elapsed:.3f} s"


def check_epsilon_spots():
    table = wynn_epsilon(partial_sums_Z(TABLE2_Z, 15))
    v0 = -EULER_GAMMA + TABLE2_Z * table.epsilon(14, 0)
    v1 = -EULER_GAMMA + TABLE2_Z * table.epsilon(14, 1)
    ok = within_last_digit_complex(v0, golden.EPS14_0) and within_last_digit_complex(v1, golden.EPS14_1)
    return ok, f"eps_14^(0) -> {v0.real:.15f}{v0.imag:+.15f}i, eps_14^(1) -> {v1.real:.15f}{v1.imag:+.15f}i"


def check_converged_values():
    a = digamma(1)
    b = digamma(TABLE2_Z)
    err_a = abs(a.value - 0.422784335098467)
    err_b = max(abs(b.value.real - 0.285073441270304), abs(b.value.imag - 0.691215820928756))
    ok = a.converged and b.converged and err_a < 1e-15 and err_b < 1e-15
    return ok, f"psi(2) err {err_a:.1e} (order {a.order_used}), table-2 point err {err_b:.1e} (order {b.order_used})"


def _transform_model(seq, n, k):
    state = TTransformState()
    for m, s in enumerate(seq.elements(k + 1, start=n)):
        state = t_transform_push(state, s, seq.ratios[m - 1] if m else None)
    return state.value


@st.composite
def _model_sequences(draw):
    qs = draw(
        st.lists(st.floats(min_value=0.01, max_value=0.99), min_size=1, max_size=5, unique=True)
        .map(lambda v: sorted(v, reverse=True))
        .filter(lambda v: all(a - b > 1e-3 for a, b in zip(v, v[1:])))
    )
    cs = draw(st.lists(st.floats(min_value=-2, max_value=2), min_size=len(qs), max_size=len(qs)))
    return ModelSequence(draw(st.floats(min_value=-3, max_value=3)), list(zip(cs, qs)))


def check_elimination():
    seen = []
    worst = [0.0]

    @settings(max_examples=100, deadline=None, database=None, derandomize=True)
    @given(_model_sequences())
    def prop(seq):
        seen.append(seq)
        J = len(seq.terms)
        for n in range(6):
            for k in range(J + 1):
                expected = model_transformed_tail(seq, n, k)
                err = abs(_transform_model(seq, n, k) - expected) / (1 + abs(expected))
                worst[0] = max(worst[0], err)
                assert err <= 1e-12

    start = time.perf_counter()
    try:
        prop()
        ok = True
    except AssertionError:
        ok = False
    elapsed = time.perf_counter() - start
    ok = ok and len(seen) >= 100 and elapsed < 5.0
    return ok, f"{len(seen)} model sequences, worst rel err {worst[0]:.1e}, {elapsed:.2f} s"


def _t_value(z, n, k):
    s = partial_sums_Z(z, n + k)
    return t_transform_explicit(s[n:], [z / j for j in range(1, k + 1)])


def error_series_measurements():
    identity = 0.0
    for z in (0.25, 0.5, 0.75):
        ref = mp_Z(z)
        for n in range(7):
            for k in range(7):
                identity = max(identity, rel_err(_t_value(z, n, k) + transform_error_direct(z, n, k).value, ref))
    forms = {}
    for z in (0.25, 0.5, 0.75, -0.75, 0.75j):
        for n in range(11):
            for k in range(11 - n):
                d = transform_error_direct(z, n, k).value
                h = transform_error_hurwitz(z, n, k, m_max=60).value
                forms[(z, n, k)] = rel_err(h, d)
    return identity, forms


def check_error_series():
    identity, forms = error_series_measurements()
    worst = max(forms.values())
    worst_at = max(forms, key=forms.get)
    ok = identity < 1e-12 and worst < 1e-10
    return ok, (
        f"identity worst rel err {identity:.1e}; form agreement worst {worst:.1e} at "
        f"(z, n, k) = {worst_at} (m_max = 60 truncation ~ |z|^61 for k = 0)"
    )


def check_identities():
    poch_ok = all(
        sum(c * (k + m + 1) ** (k - kappa) for kappa, c in enumerate(poch_hat_coeffs(k))) == pochhammer(m + 1, k)
        for m in range(11)
        for k in range(11)
    )
    beta = 0.0
    for z in (0.05, 0.3, 0.5, 0.77, 0.95):
        for k in range(11):
            lhs = z ** (k + 4) / pochhammer(z + 1, k)
            b = math.factorial(k) / (z * pochhammer(z + 1, k))
            beta = max(beta, rel_err(lhs, z ** (k + 5) * b / math.factorial(k)))
    shift = 0.0
    for s in range(2, 21):
        for a in (1, 2, 3, 4, 7, 10):
            start = hurwitz_zeta_int(s, a)
            shift = max(shift, abs(hurwitz_zeta_int(s, a + 1) - (start - a**-s)) / math.ulp(start))
    ok = poch_ok and beta < 1e-13 and shift <= 4
    return ok, f"Pochhammer expansion exact: {poch_ok}; beta identity {beta:.1e}; Hurwitz shift {shift:.1f} ulp"


def check_reduction_invariants():
    rec = max(abs(digamma(w + 1).value - digamma(w).value - 1 / (1 + w)) for w in (0.1, 0.3, 0.7, 1.4, 5.2))
    refl = 0.0
    coth_gap = math.inf
    for w in (0.2, 0.35, 0.45):
        diff = digamma(-w).value - digamma(w - 1).value
        refl = max(refl, abs(diff - math.pi * ccot(w).real))
        coth_gap = min(coth_gap, abs(diff - math.pi / math.tanh(math.pi * w)))
    ok = rec < 1e-13 and refl < 1e-12 and coth_gap > 1
    return ok, f"recurrence {rec:.1e}, reflection with cot {refl:.1e}, coth kernel off by >= {coth_gap:.2f}"


def check_double_precision():
    values = [digamma(1).value, digamma(TABLE2_Z).value] + list(partial_sums_Z(TABLE2_Z, 15))
    native = all(type(v) in (float, complex) for v in values)
    parts = [check_table1()[0], check_table2()[0], check_epsilon_spots()[0], check_converged_values()[0]]
    ok = native and all(parts)
    return ok, f"criteria 1-4 in IEEE double: {parts}, native float/complex results: {native}"


# --- tests --------------------------------------------------------------------


def test_criterion_1_table1():
    assert report(1, *check_table1())


def test_criterion_2_table2():
    assert report(2, *check_table2())


def test_criterion_3_epsilon_spot_values():
    assert report(3, *check_epsilon_spots())


def test_criterion_4_converged_values():
    assert report(4, *check_converged_values())


def test_criterion_5_elimination():
    assert report(5, *check_elimination())


@pytest.mark.xfail(
    strict=True,
    reason="Hurwitz form with m_max=60 cannot reach 1e-10 at k=0, |z|=0.75 (truncation ~2.4e-8)",
)
def test_criterion_6_error_series():
    assert report(6, *check_error_series())


def test_criterion_6_attainable_parts():
    identity, forms = error_series_measurements()
    assert identity < 1e-12
    for (z, n, k), err in forms.items():
        if k == 0 and abs(z) == 0.75:
            assert err < 2 * 0.75**61 / (1 - 0.75)
        else:
            assert err < 1e-10


def test_criterion_7_identities():
    assert report(7, *check_identities())


def test_criterion_8_reduction_invariants():
    assert report(8, *check_reduction_invariants())


def test_criterion_9_double_precision():
    assert report(9, *check_double_precision())
