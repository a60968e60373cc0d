import importlib
import random

import pytest

from fplab import _pykernels, kernels
from fplab.fpdata import FixedPointData
from fplab.genus import chi_sum
from fplab.exactalg import rf_constant_value
from helpers import random_balanced


def _random_lists(rng):
    n = rng.randint(1, 3)
    k = rng.randint(1, 5)
    if rng.random() < 0.6 and n * k % 2 == 0:
        return random_balanced(rng, n, k, 5).weight_lists
    pool = [w for w in range(-5, 6) if w]
    return [tuple(sorted(rng.choice(pool) for _ in range(n))) for _ in range(k)]


def test_python_kernel_matches_exact_route():
    rng = random.Random(2)
    for _ in range(250):
        lists = _random_lists(rng)
        d = FixedPointData.from_weights(lists)
        exact = [rf_constant_value(chi_sum(d, i)) for i in range(d.n + 1)]
        assert _pykernels.chi_constants(lists) == exact


@pytest.mark.skipif(kernels.compiled_impl is None, reason="compiled extension not built")
def test_backends_agree():
    rng = random.Random(9)
    c = kernels.compiled_impl
    for _ in range(2000):
        lists = _random_lists(rng)
        assert c.chi_constants(lists) == _pykernels.chi_constants(lists)
        assert c.is_balanced(lists) == _pykernels.is_balanced(lists)


@pytest.mark.skipif(kernels.compiled_impl is None, reason="compiled extension not built")
def test_compiled_falls_back_on_large_input():
    lists = [(1,) * 8, (-1,) * 8] * 4
    assert kernels.compiled_impl.chi_constants(lists) == _pykernels.chi_constants(lists)


def test_env_selects_python(monkeypatch):
    monkeypatch.setenv("FPLAB_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
        assert mod.chi_constants is _pykernels.chi_constants
    finally:
        monkeypatch.delenv("FPLAB_PURE_PYTHON")
        importlib.reload(kernels)


def test_balance():
    assert _pykernels.is_balanced([(1, 2), (-1, -2)])
    assert not _pykernels.is_balanced([(1,), (1,)])
