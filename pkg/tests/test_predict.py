from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclolc.cyclotomy import ResidueClass
from cyclolc.errors import InvalidInput
from cyclolc.numthy import PrimePair, primes_between
from cyclolc.predict import RECORD_FIELDS, PredicateSet, predict_complexity, verify
from cyclolc.seqgen import weight_closed_form

from conftest import TWO_IN_D2
from strategies import ORDER4_PAIRS

LS = primes_between(2, 60)


def preds(l, n, *, delta=0, d1=1, d2=1, quarter=False, cls="D1", same=False, half=None, quartic=None):
    return PredicateSet(l, n, delta, d1, d2, quarter, ResidueClass("D", int(cls[1])), same, half, quartic)


def test_pair_5_13():
    r2 = verify(PrimePair(5, 13), 2, 2, 2)
    assert (r2.decomposition.a, r2.decomposition.b) == (1, 4)
    assert r2.diagnostics["info"]["class_of_2"] == "D0"
    assert r2.computed_L_gcd == r2.computed_L_bm == 29
    assert r2.prediction.branch == "Cor15_D0" and r2.match == "Exact"
    r3 = verify(PrimePair(5, 13), 2, 2, 3)
    assert r3.computed_L_gcd == r3.computed_L_bm == 65
    assert r3.prediction.branch == "Thm11"


def test_pair_5_17():
    r = verify(PrimePair(5, 17), 2, 3, 2)
    assert (r.g, r.decomposition.a, r.decomposition.b) == (37, -7, 3)
    assert r.diagnostics["info"]["class_of_2"] == "D3"
    assert r.computed_L_gcd == 69 and r.prediction.branch == "Cor16"
    assert r.diagnostics["checks"]["minpoly_shape"]


def test_pair_5_17_over_f7_flags_reference_value():
    r = verify(PrimePair(5, 17), 2, 3, 7)
    assert r.predicates.delta == 1
    assert r.computed_L_gcd == r.computed_L_bm == 84
    assert r.prediction == r.prediction.__class__("Thm9_case3", 84)
    assert r.diagnostics["literal"]["reference_agrees"] is False
    assert "delta = 1" in r.diagnostics["info"]["reference_conflict"]


def test_dispatch_table():
    pair = PrimePair(5, 13)
    dec = None
    # l = 2 cases by n mod 8 and class of 2
    assert predict_complexity(preds(2, 65, cls="D0", quarter=True, same=True), pair, dec).branch == "Cor15_D0"
    assert predict_complexity(preds(2, 65, cls="D2", quarter=True, same=True), pair, dec).branch == "Cor15_D2"
    assert predict_complexity(preds(2, 65, cls="D1"), pair, dec).branch == "NotCovered"
    p17 = PrimePair(5, 17)
    assert predict_complexity(preds(2, 85), p17, dec).predicted_L == 85 + 1 - 17
    # quarter test
    got = predict_complexity(preds(3, 65, quarter=True, same=True, half=True, cls="D0"), pair, dec)
    assert got == got.__class__("Thm9_case1", (65 + 5 + 13 - 1) // 2)
    got = predict_complexity(preds(3, 85, quarter=True, quartic=True, cls="D0", d2=0), p17, dec)
    assert got == got.__class__("Thm9_case2", (3 * 85 - 3 * 5 + 17 + 3) // 4)
    got = predict_complexity(preds(3, 85, quarter=True, quartic=False, cls="D0", delta=1), p17, dec)
    assert got == got.__class__("Thm9_case3", 84)
    # generic
    got = predict_complexity(preds(7, 65, d1=0, d2=0, cls="D3"), pair, dec)
    assert got == got.__class__("Thm11", 65 + 2 - 5 - 13)
    assert predict_complexity(preds(7, 65, cls="D0"), pair, dec).branch == "NotCovered"


def test_verify_errors():
    with pytest.raises(InvalidInput):
        verify(PrimePair(5, 7), None, None, 3)
    with pytest.raises(InvalidInput):
        verify(PrimePair(5, 13), None, None, 5)
    with pytest.raises(InvalidInput):
        verify(PrimePair(5, 13), None, None, 9)
    with pytest.raises(InvalidInput):
        verify(PrimePair(5, 13), 2, None, 3)


def test_record_shape():
    rec = verify(PrimePair(13, 17), None, None, 3).to_record()
    assert tuple(rec) == RECORD_FIELDS
    assert set(rec["diagnostics"]) == {"checks", "literal", "info"}


def test_record_reproducible_from_its_inputs():
    rec = verify(PrimePair(29, 13), None, None, 7).to_record()
    again = verify(PrimePair(rec["p"], rec["q"]), rec["g1"], rec["g2"], rec["l"]).to_record()
    assert again == rec


@pytest.mark.parametrize("p,q,g1,g2", TWO_IN_D2)
def test_two_in_d2_branch(p, q, g1, g2):
    r = verify(PrimePair(p, q), g1, g2, 2, charsum_cap=0)
    assert r.prediction.branch == "Cor15_D2"
    assert r.match == "Exact"
    assert r.diagnostics["checks"]["minpoly_shape"]
    assert r.diagnostics["checks"]["b_mod4_tracks_class_of_2"]


@given(st.sampled_from(ORDER4_PAIRS), st.sampled_from(LS))
def test_double_zero_rows_unreachable_under_quarter_test(pq, l):
    p, q = pq
    n = p * q
    if gcd(l, n) != 1 or ((n - 1) // 4) % l:
        return
    assert ((p - 1) // 2) % l or ((q + 1) // 2) % l


@given(st.sampled_from([pq for pq in ORDER4_PAIRS if pq[0] * pq[1] <= 1500]), st.sampled_from(LS[:8]))
def test_prediction_matches_computation(pq, l):
    pair = PrimePair(*pq)
    if gcd(l, pair.n) != 1:
        return
    r = verify(pair, None, None, l, charsum_cap=0)
    assert r.oracles_agree
    assert r.match in ("Exact", "NotCovered")
    assert r.failed_checks == []


@given(st.sampled_from(ORDER4_PAIRS), st.sampled_from(LS))
def test_double_zero_row_forces_delta_zero(pq, l):
    p, q = pq
    if gcd(l, p * q) != 1 or ((p - 1) // 2) % l or ((q + 1) // 2) % l:
        return
    assert weight_closed_form(p, q, l) != 0


def test_mismatch_produces_discrepancy_record(monkeypatch):
    from cyclolc import predict

    def off_by_one(preds, pair, dec):
        return predict.Prediction("Thm11", pair.n + 1)

    monkeypatch.setattr(predict, "predict_complexity", off_by_one)
    r = predict.verify(PrimePair(13, 17), None, None, 3, charsum_cap=0)
    assert r.match == "Mismatch"
    disc = r.diagnostics["info"]["discrepancy"]
    assert disc["predicted_L"] == 222 and disc["computed_L"] == r.computed_L_gcd
    assert disc["class_of_minus1"] == r.class_of_minus1 == "D2"
    assert r.to_record()["match"] == "Mismatch"
