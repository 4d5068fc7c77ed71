"""Compiled and pure-Python kernels must be interchangeable."""

import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

import seqident._backend as backend
import seqident._kernels_py as pure

compiled = backend.available_backends().get("c")

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernel extension not built"
)


def test_active_backend_is_reported():
    assert backend.BACKEND in {"c", "python"}
    assert backend.kernels is backend.available_backends()[backend.BACKEND]


def test_pure_backend_always_available():
    assert backend.available_backends()["python"] is pure


@needs_compiled
def test_fib_pair_agreement():
    for n in range(0, 400):
        assert compiled.fib_pair(n) == pure.fib_pair(n)
    rng = random.Random(94)
    for _ in range(10):
        n = rng.randrange(10 ** 4, 10 ** 5)
        assert compiled.fib_pair(n) == pure.fib_pair(n)


@needs_compiled
def test_fill_forward_agreement():
    rng = random.Random(31415)
    for _ in range(40):
        d = rng.randrange(1, 6)
        coeffs = [rng.randrange(-9, 10) or 1 for _ in range(d)]
        window = [rng.randrange(-100, 100) for _ in range(d)]
        count = rng.randrange(0, 60)
        assert (compiled.fill_forward(coeffs, window, count)
                == pure.fill_forward(coeffs, window, count))


@needs_compiled
def test_fill_forward_fraction_agreement():
    coeffs = [Fraction(1, 2), Fraction(3, 4)]
    window = [Fraction(1), Fraction(2)]
    assert (compiled.fill_forward(coeffs, window, 20)
            == pure.fill_forward(coeffs, window, 20))


@needs_compiled
def test_dot_product_agreement():
    rng = random.Random(777)
    for _ in range(20):
        k = rng.randrange(0, 50)
        xs = [rng.randrange(-10 ** 20, 10 ** 20) for _ in range(k)]
        ys = [rng.randrange(-10 ** 20, 10 ** 20) for _ in range(k)]
        assert compiled.dot_product(xs, ys) == pure.dot_product(xs, ys)


@needs_compiled
def test_convolution_values_agreement():
    rng = random.Random(271828)
    hi = 120
    weights = [rng.randrange(-50, 50) for _ in range(hi + 1)]
    values = [rng.randrange(-50, 50) for _ in range(hi + 1)]
    assert (compiled.convolution_values(weights, values, 2, hi)
            == pure.convolution_values(weights, values, 2, hi))


def test_env_override_forces_pure_backend():
    env = dict(os.environ, SEQIDENT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from seqident._backend import BACKEND; print(BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"


@needs_compiled
def test_full_pipeline_matches_across_backends():
    env_pure = dict(os.environ, SEQIDENT_PURE="1")
    script = (
        "import json\n"
        "from seqident import check_range, conjecture, TRIBONACCI\n"
        "r = check_range(2, 300)\n"
        "c = conjecture(TRIBONACCI, 40, 120)\n"
        "print(json.dumps({'passed': r.passed, 'status': c.status,\n"
        "                  'seeds': list(c.weight_seeds)}))\n"
    )
    runs = []
    for env in (None, env_pure):
        out = subprocess.run([sys.executable, "-c", script],
                             capture_output=True, text=True, env=env, check=True)
        runs.append(out.stdout)
    assert runs[0] == runs[1]
    assert '"passed": true' in runs[0]
