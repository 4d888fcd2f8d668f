import itertools
import json
import os
import subprocess
import sys

import pytest

from coxq import _kernels, _kernels_py

try:
    from coxq import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def windows(n, max_len):
    for level in _kernels_py.ball_levels(n, max_len, tuple(range(n)), 10**6):
        yield from level


def test_backend_reported():
    assert _kernels.BACKEND in ("cython", "python")


@needs_ext
@pytest.mark.parametrize("n", range(2, 6))
def test_compiled_matches_python(n):
    for w in windows(n, 8):
        assert _ckernels.window_length(w, n) == _kernels_py.window_length(w, n)
        for i in range(n):
            assert _ckernels.has_descent(w, i, n) == _kernels_py.has_descent(w, i, n)
            assert _ckernels.right_mult(w, i, n) == _kernels_py.right_mult(w, i, n)


@needs_ext
@pytest.mark.parametrize("n,gens", [(3, (0, 1, 2)), (4, (1, 2, 3)), (4, (0, 2))])
def test_compiled_ball_matches_python(n, gens):
    assert _ckernels.ball_levels(n, 9, gens, 10**6) == _kernels_py.ball_levels(n, 9, gens, 10**6)


@pytest.mark.parametrize("impl", [_kernels_py, _ckernels] if _ckernels else [_kernels_py])
def test_cap_enforced(impl):
    with pytest.raises(_kernels.EnumerationLimitError):
        impl.ball_levels(4, 20, (0, 1, 2, 3), 50)


def test_finite_parabolic_is_symmetric_group():
    levels = _kernels_py.ball_levels(4, 10, (1, 2, 3), 10**6)
    perms = {w for level in levels for w in level}
    assert perms == set(itertools.permutations(range(1, 5)))


def test_pure_python_fallback_end_to_end():
    code = (
        "import coxq, json; from coxq import assembly;"
        "print(json.dumps([coxq.KERNEL_BACKEND, assembly.T_brute(5, 14).to_json()]))"
    )
    env = dict(os.environ, COXQ_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, data = json.loads(out.stdout)
    assert backend == "python"
    from coxq import assembly
    assert data == assembly.T_closed(5, 14).to_json()
