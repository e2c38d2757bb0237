"""Synthesis: target invariant in, certified example record out."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from foliadex import (
    BundleVariety,
    DomainError,
    SynthKind,
    SynthesisRequest,
    UnsupportedRequest,
    WeightedProjectiveSpace,
    case1_parameters,
    synth_fano_index,
    synth_generalized_index,
    synth_seshadri,
    synthesize,
)
from foliadex.catalog import record_to_json
from foliadex.synthesis import TARGET_FIELD

# every synthesized record must come back with its construction checks green
def assert_certified(record):
    bad = [c for c in record.checks if c.status.value == "fail"]
    assert not bad, bad


def test_gen_index_fibration_case():
    rec = synth_generalized_index(3, 2, "3/2")
    assert rec.branch == "case1"
    assert rec.variety == BundleVariety(1, 2, (1, 1))
    assert rec.invariants.gen_index == Fraction(3, 2)
    assert_certified(rec)


def test_gen_index_small_target_case():
    rec = synth_generalized_index(3, 2, "1/2")
    assert rec.branch == "case2"
    assert rec.variety == BundleVariety(2, 2, (1,))
    assert rec.invariants.gen_index == Fraction(1, 2)
    assert_certified(rec)


def test_gen_index_surface():
    rec = synth_generalized_index(2, 1, "1/2")
    assert rec.branch == "hirzebruch"
    assert rec.variety == BundleVariety(1, 1, (0,))
    assert_certified(rec)
    with pytest.raises(UnsupportedRequest):
        synth_generalized_index(2, 1, "2/5")  # not of the form (a-1)/a


def test_fano_index_cone_case():
    rec = synth_fano_index(4, 2, "3/2")
    assert rec.branch == "cone"
    assert rec.variety.m == 2
    assert rec.variety.vertex_rank == 2
    assert rec.variety.base.dim == 2
    assert rec.invariants.fano_index == Fraction(3, 2)
    assert rec.foliation.algebraic_rank == 2
    assert_certified(rec)


def test_fano_index_weighted_case():
    rec = synth_fano_index(3, 2, "3/2")
    assert rec.branch == "wps1"
    assert rec.variety == WeightedProjectiveSpace((1, 1, 1, 2))
    assert rec.invariants.fano_index == Fraction(3, 2)
    assert_certified(rec)


def test_fano_index_integer_target():
    rec = synth_fano_index(5, 1, 1)
    assert rec.branch == "pn"
    assert rec.variety == WeightedProjectiveSpace((1,) * 6)
    assert rec.invariants.fano_index == 1
    assert_certified(rec)


def test_seshadri_band_case():
    rec = synth_seshadri(3, 2, "3/2")
    assert rec.branch == "wps2"
    assert rec.variety == WeightedProjectiveSpace((1, 1, 1, 2))
    assert rec.invariants.seshadri_antican == Fraction(3, 2)
    assert_certified(rec)


def test_seshadri_surface_case():
    rec = synth_seshadri(2, 1, "2/3")
    assert rec.branch == "wps4"
    assert rec.variety == WeightedProjectiveSpace((1, 2, 3))
    assert rec.invariants.seshadri_antican == Fraction(2, 3)
    assert_certified(rec)


def test_seshadri_cone_case():
    rec = synth_seshadri(4, 2, "3/2")
    assert rec.branch == "cone"
    assert rec.invariants.seshadri_antican == Fraction(3, 2)
    assert_certified(rec)


def test_case1_parameters_values():
    small = case1_parameters(2, 3, 2)
    assert (small.l, small.b_list) == (1, (1, 1))
    wide = case1_parameters(3, 5, 2)
    assert (wide.l, wide.b_list) == (2, (3, 3, 3))
    with pytest.raises(DomainError):
        case1_parameters(2, 1, 2)  # needs q < p


def test_request_validation():
    with pytest.raises(DomainError):
        SynthesisRequest(SynthKind.GENERALIZED_INDEX, n=1, r=1, c=Fraction(1))
    with pytest.raises(DomainError):
        SynthesisRequest(SynthKind.GENERALIZED_INDEX, n=3, r=3, c=Fraction(1))
    with pytest.raises(DomainError):
        SynthesisRequest(SynthKind.GENERALIZED_INDEX, n=3, r=2, c=Fraction(0))


def test_target_above_rank_is_rejected():
    with pytest.raises(UnsupportedRequest):
        synth_generalized_index(4, 2, "5/2")
    with pytest.raises(UnsupportedRequest):
        synth_fano_index(4, 1, 2)


def test_kind_spellings():
    assert SynthKind.from_text("generalized_index") is SynthKind.GENERALIZED_INDEX
    assert SynthKind.from_text("fano-index") is SynthKind.FANO_INDEX
    with pytest.raises(DomainError):
        SynthKind.from_text("volume")


requests = st.builds(
    lambda kind, n, r_seed, p, q: SynthesisRequest(
        kind, n=n, r=1 + r_seed % (n - 1), c=Fraction(p, q)
    ),
    st.sampled_from(list(SynthKind)),
    st.integers(2, 6),
    st.integers(0, 4),
    st.integers(1, 18),
    st.integers(1, 6),
)


@given(requests)
@settings(max_examples=150)
def test_round_trip_is_exact(request):
    try:
        rec = synthesize(request)
    except UnsupportedRequest:
        return
    field = TARGET_FIELD[request.kind]
    assert getattr(rec.invariants, field) == request.c
    assert_certified(rec)


@given(requests)
@settings(max_examples=150)
def test_branch_totality(request):
    # raising anything but UnsupportedRequest here is a bug, whatever c is
    try:
        rec = synthesize(request)
    except UnsupportedRequest:
        return
    assert rec.branch
    assert rec.id.startswith(request.kind.value)


def test_records_are_deterministic():
    a = record_to_json(synth_generalized_index(5, 3, "7/3"))
    b = record_to_json(synth_generalized_index(5, 3, "7/3"))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a == b
