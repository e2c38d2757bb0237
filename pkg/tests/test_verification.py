"""Machine verification: the oracle, the record checks, and the sweeps."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from foliadex import (
    BundleVariety,
    CheckStatus,
    Class2,
    DomainError,
    EmptyGrid,
    OracleGrid,
    SynthGrid,
    SynthKind,
    check_record,
    mixed_record,
    oracle_generalized_index,
    rc_genus_record,
    run_sweep,
    synth_fano_index,
    verify_record,
)


def test_oracle_frozen_values():
    assert oracle_generalized_index(
        BundleVariety(1, 1, (0,)), Class2(2, -1), 3, 4
    ) == Fraction(1, 2)
    assert oracle_generalized_index(
        BundleVariety(1, 2, (1, 1)), Class2(3, 0), 4, 10
    ) == Fraction(3, 2)
    assert oracle_generalized_index(
        BundleVariety(5, 1, (1, 1, 1)), Class2(4, 5), 6, 40
    ) == 3


def test_oracle_rejects_bad_bounds_and_classes():
    x = BundleVariety(1, 2, (1, 1))
    with pytest.raises(DomainError):
        oracle_generalized_index(x, Class2(3, 0), 0, 10)
    with pytest.raises(DomainError):
        oracle_generalized_index(x, Class2(3, 0), 4, 2)  # c_max below b1*d_max + 1
    with pytest.raises(DomainError):
        oracle_generalized_index(x, Class2(0, 1), 3, 10)  # not big


@given(st.integers(1, 5), st.integers(0, 8), st.integers(0, 4), st.integers(0, 5))
@settings(max_examples=80)
def test_oracle_stable_under_bound_enlargement(beta, gamma_off, extra_d, extra_c):
    x = BundleVariety(2, 2, (1, 1))
    cls = Class2(beta, -2 * beta + 1 + gamma_off)  # big by construction
    base_d = 1
    base_c = x.b1 + 1
    small = oracle_generalized_index(x, cls, base_d, base_c)
    grown = oracle_generalized_index(
        x, cls, base_d + extra_d, x.b1 * (base_d + extra_d) + 1 + extra_c
    )
    assert grown == small


def test_check_record_order_and_results():
    rec = mixed_record(3)
    report = check_record(rec)
    names = [o.name for o in report.outcomes]
    assert names == [
        "kobayashi-ochiai-generalized",
        "kobayashi-ochiai-fano",
        "fano-le-generalized",
        "seshadri-bound",
        "rc-consistency",
        "maximal-seshadri-classification",
    ]
    assert not report.failures


def test_check_record_is_pure():
    rec = rc_genus_record(3, 2)
    assert check_record(rec) == check_record(rec)
    rc = next(o for o in check_record(rec).outcomes if o.name == "rc-consistency")
    # eps = r^a - 1 exactly, so the rational-leaf trigger must not fire
    assert rc.status is CheckStatus.PASS


def test_classification_check_accepts_linear_pullback():
    rec = synth_fano_index(5, 1, 1)  # P^5 with a degree-zero rank-one foliation
    report = check_record(rec)
    cls = next(o for o in report.outcomes if o.name == "maximal-seshadri-classification")
    assert cls.status is CheckStatus.PASS


def test_verify_record_recomputes_everything():
    rec = mixed_record(2)
    report = verify_record(rec)
    assert len(report.outcomes) == 9
    assert not report.failures
    names = {o.name for o in report.outcomes}
    assert "stored-invariants-match-recomputation" in names
    assert "closed-form-vs-oracle" in names
    assert "stored-construction-checks" in names


def test_small_oracle_sweep_is_clean():
    report = run_sweep(OracleGrid(m_max=2, b1_max=1, rprime_max=2, k_max=2, coeff_max=3))
    assert report.failed == 0
    assert report.total > 0


def test_synth_sweep_is_clean():
    report = run_sweep(SynthGrid(kind=SynthKind.GENERALIZED_INDEX, n_max=4, q_max=6))
    assert report.failed == 0
    assert report.total == 1032
    assert report.skipped >= 6  # unsupported corners show up as skips, not failures


def test_empty_grid():
    report = run_sweep(EmptyGrid())
    assert (report.total, report.passed, report.failed, report.skipped) == (0, 0, 0, 0)


def test_unknown_grid_rejected():
    with pytest.raises(TypeError):
        run_sweep(object())
