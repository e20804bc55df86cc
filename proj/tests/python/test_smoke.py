"""Smoke tests for the _qps extension module."""

import os

import pytest

import _qps

WS_PATH = os.path.join(os.path.dirname(__file__), "..", "data", "example.qs")


@pytest.fixture(scope="module")
def ws():
    return _qps.load_workspace(WS_PATH)


def test_workspace_loads(ws):
    assert ws.surface.gates == 2
    assert ws.surface.ygens == 1
    assert "a" in ws.loop_names()
    assert _qps.class_of(ws.surface, ws.loop("a")) == "g2"
    assert _qps.class_of(ws.surface, ws.loop("b")) == "y1 g2"


def test_bracket_and_mu(ws):
    assert _qps.bracket(ws.surface, ws.loop("a"), ws.loop("b")) == {}
    assert _qps.bracket(ws.surface, ws.loop("s1"), ws.loop("s2")) == {}
    mu2 = _qps.mu(ws.surface, [ws.loop("a"), ws.loop("b")], gate=1)
    assert mu2 == {"y1 g2 g2": "1"}
    assert _qps.mu(ws.surface, [ws.loop("a")]) == {}
    total = _qps.mu(ws.surface, [ws.loop("a"), ws.loop("b")])
    assert total == {"y1 g2 g2": "2"}


def test_bracket_of_classes():
    X = _qps.QuasiSurface(gates=3, ygens=1)
    out = _qps.bracket_of_classes(X, "g2", "g3")
    assert out == {"g2 g3": "1"}
    rev = _qps.bracket_of_classes(X, "g3", "g2")
    assert rev == {"g2 g3": "-1"}


def test_loop_roundtrip():
    X = _qps.QuasiSurface(gates=2, ygens=1)
    loop = _qps.loop_of_class(X, "g2 y1 g2^-1 y1^-1")
    # class_of renders the canonical rotation, which starts at y1
    assert _qps.class_of(X, loop) == "y1 g2^-1 y1^-1 g2"


def test_fox(ws):
    d1 = ws.fox("d1")
    assert _qps.fox_apply(ws.surface, d1, "y1 y1") == {"1": "1", "y1": "1"}
    assert _qps.fox_delta(ws.surface, d1, "y1") == {"y1": "1"}
    dg = _qps.gate_derivative(ws.surface, 2)
    assert _qps.fox_apply(ws.surface, dg, "g2") == {"g2": "-1"}


def test_trace_eval(ws):
    assert _qps.trace_eval(ws.surface, "T[y1]", ws.rep("rho")) == "2"
    rho = _qps.random_rep(ws.surface, 2, seed=5)
    assert rho.n == 2
    assert _qps.trace_eval(ws.surface, "T[1]", rho) == "2"


def test_suites_pass():
    for suite in ("skew", "cyclic"):
        for result in _qps.run_suite(suite, n=10, seed=3):
            assert result["ok"], result


def test_errors():
    with pytest.raises(_qps.QsParseError):
        _qps.load_workspace("/nonexistent.qs")
    ws = _qps.load_workspace(WS_PATH)
    with pytest.raises(_qps.QsNameError):
        ws.loop("missing")
    with pytest.raises(ValueError):
        _qps.run_suite("nosuite", n=1, seed=1)


def test_rat_normalization():
    assert _qps.rat("2/4") == "1/2"
    assert _qps.rat("-6/3") == "-2"
