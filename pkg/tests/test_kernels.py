"""Backend parity: the compiled kernels must match the pure-Python twins
bit for bit, and the backend selector must honor the override flag."""

import math
import subprocess
import sys

import pytest

from falpha import _backend, _kernels_py

try:
    from falpha import _kernels
except ImportError:
    _kernels = None

needs_compiled = pytest.mark.skipif(
    _kernels is None, reason="compiled extension not built"
)


def grid(n=5000):
    pts = [i / n for i in range(n + 1)]
    pts += [1e-12, 1.0 - 1e-16, 0.5 + 1e-16, 1.0 / 3.0, 2.0 / 3.0, 1.0 / 9.0]
    pts += [-0.5, 1.5]
    return pts


@needs_compiled
def test_cantor_scaled_parity():
    for x in grid():
        assert _kernels.cantor_scaled(x) == _kernels_py.cantor_scaled(x)


@needs_compiled
def test_g_series_parity():
    for x in grid():
        assert _kernels.g_series_scaled(x) == _kernels_py.g_series_scaled(x)


def test_cantor_scaled_special_values():
    f = _backend.cantor_scaled
    assert f(0.0) == 0.0
    assert f(1.0) == 1.0
    assert f(1.0 / 3.0) == 0.5
    assert f(0.5) == 0.5
    assert f(2.0 / 3.0) == 0.5
    assert f(1.0 / 9.0) == 0.25
    assert f(-1.0) == 0.0
    assert f(2.0) == 1.0
    # one ulp below 1 still transcribes to (almost) 1
    assert abs(f(1.0 - 1e-16) - 1.0) < 1e-12


def test_cantor_scaled_monotone():
    f = _backend.cantor_scaled
    prev = 0.0
    for i in range(2001):
        v = f(i / 2000)
        assert v >= prev
        prev = v


def test_g_series_scaled_values():
    g = _backend.g_series_scaled
    assert g(0.0) == 0.0
    assert abs(g(1.0) - 0.5) < 1e-15
    # scaling: the scaled series divides by 6 under y -> y/3
    for m in range(1, 6):
        assert abs(g(3.0 ** -m) - 0.5 / 6.0 ** m) < 1e-15


def test_backend_selector_reports():
    assert _backend.BACKEND in ("compiled", "python")


def test_pure_python_override():
    code = (
        "import os; os.environ['FALPHA_PURE_PYTHON'] = '1'; "
        "from falpha import _backend; print(_backend.BACKEND)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "python"
