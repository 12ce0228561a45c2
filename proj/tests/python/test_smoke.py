"""Smoke tests for the python bindings."""

import random

import pytest

import irsdec


def test_field_arithmetic():
    gf = irsdec.Field(3, 0xB)
    assert gf.size == 8
    assert gf.mul(2, 2) == 4
    assert gf.add(5, 5) == 0
    assert gf.mul(7, gf.inv(7)) == 1
    assert gf.pow(0, 0) == 1
    with pytest.raises(ValueError):
        irsdec.Field(3, 0xF)  # reducible polynomial


def test_default_spec_is_the_dvb_style_code():
    spec = irsdec.make_spec()
    assert (spec.n, spec.k, spec.m, spec.q) == (204, 188, 16, 256)
    assert spec.variant == "shortened"
    assert spec.f_max(16) == 15


def test_encode_decode_roundtrip_with_burst_errors():
    spec = irsdec.make_spec(field_bits=3, k=3, variant="extended", s=0)
    rng = random.Random(7)
    l = 4
    info = [[rng.randrange(8) for _ in range(l)] for _ in range(3)]
    word = irsdec.encode(spec, info)

    received = [row[:] for row in word]
    corrupted = [1, 4, 6, 7]  # one beyond the per-column budget of 2
    for i, r in enumerate(corrupted):
        for j in range(l):
            received[r][j] ^= (i + j) % 7 + 1

    res = irsdec.decode(spec, received)
    assert res["ok"]
    assert res["codeword"] == word
    assert res["support"] == corrupted

    inc = irsdec.decode_incremental(spec, received, check_cols=l)
    assert inc["ok"] and inc["codeword"] == word

    indep = irsdec.decode_independent(spec, received)
    assert not (indep.get("ok") and indep.get("codeword") == word)


def test_decode_failure_reports_reason():
    spec = irsdec.make_spec(field_bits=3, k=3, variant="extended", s=0)
    l = 6
    zero = [[0] * l for _ in range(spec.n)]
    received = [row[:] for row in zero]
    for i in range(5):  # m independent rows exhaust the syndrome rank
        for j in range(l):
            received[i][j] = 1 if i == j else 0
    res = irsdec.decode(spec, received)
    assert not res["ok"]
    assert res["reason"] == "TooManyErrors"


def test_bounds_values():
    assert irsdec.p_dependent_bound(2, 3, 8) == pytest.approx(9 / 512, rel=1e-12)
    assert irsdec.p_failure_bound(1, 16, 256, 15) == 0.0
    assert irsdec.p_failure_bound(16, 16, 256, 15) == 1.0
    assert irsdec.p_valid_fraction(2, 8) == pytest.approx(28 / 64, rel=1e-12)
    fer = irsdec.fer_bound(1e-2)
    fer_e = irsdec.fer_error_bound(1e-2)
    assert 0 < fer_e < fer * 1e-10
    grid = [1e-3, 1e-2, 1e-1]
    curve = [irsdec.fer_bound(p) for p in grid]
    assert curve == sorted(curve)


def test_simulation_is_deterministic():
    spec = irsdec.make_spec(field_bits=3, k=3, variant="extended", s=0)
    kwargs = dict(mode="fixed", f=3, force_independent=True, trials=500, seed=11)
    a = irsdec.simulate(spec, 4, **kwargs)
    b = irsdec.simulate(spec, 4, workers=4, **kwargs)
    assert a.as_dict() == b.as_dict()
    assert a.successes == a.trials  # within budget, independent rows always decode


def test_sweep_rows():
    spec = irsdec.make_spec(field_bits=3, k=3, variant="extended", s=0)
    rows = irsdec.sweep(spec, 4, [0.0, 1.0], trials=200, seed=3)
    assert len(rows) == 2
    assert rows[0]["fer_sim"] == 0.0
    assert rows[1]["fer_sim"] == 1.0
    assert rows[1]["fer_bound"] == 1.0


def test_selftest_passes():
    for check in irsdec.selftest():
        assert check["passed"], check["name"]
