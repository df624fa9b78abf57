import importlib
import os
import subprocess
import sys

import pytest

from surfclass import _kernels_py, kernels
from surfclass.normal import enumerate_admissible, matching_system, primary_sides
from surfclass.oracle import canonical_sphere, canonical_torus, genus_g, refine

compiled = pytest.importorskip("surfclass._kernels", reason="compiled kernels not built")

FIXTURES = [canonical_torus(), canonical_sphere(), genus_g(2), refine(genus_g(1), 4, 3)]


@pytest.mark.parametrize("T", FIXTURES, ids=["torus", "sphere", "genus2", "refined"])
def test_backends_agree(T):
    eqs = matching_system(T).equations
    k = 2 if T.n <= 4 else 1
    sols = compiled.enumerate_solutions(3 * T.n, eqs, k)
    assert sols == _kernels_py.enumerate_solutions(3 * T.n, eqs, k)
    partner = list(T.partner)
    primary = primary_sides(T)
    for x in sols[:: max(1, len(sols) // 200)]:
        x = list(x)
        assert compiled.trace_curves(partner, primary, x) == _kernels_py.trace_curves(partner, primary, x)
        assert compiled.complement_labels(partner, x) == _kernels_py.complement_labels(partner, x)


def test_empty_system():
    assert compiled.enumerate_solutions(0, (), 3) == [()]
    assert _kernels_py.enumerate_solutions(0, (), 3) == [()]


def test_compiled_backend_selected():
    if os.environ.get("SURFCLASS_PURE_PYTHON"):
        assert kernels.BACKEND == "python"
    else:
        assert kernels.BACKEND == "cython"


def test_environment_forces_pure_python():
    code = "from surfclass import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, SURFCLASS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_results_independent_of_backend(monkeypatch):
    T = genus_g(2)
    expected = enumerate_admissible(T, 1)
    monkeypatch.setenv("SURFCLASS_PURE_PYTHON", "1")
    importlib.reload(kernels)
    try:
        assert kernels.BACKEND == "python"
        assert enumerate_admissible(T, 1) == expected
    finally:
        monkeypatch.delenv("SURFCLASS_PURE_PYTHON")
        importlib.reload(kernels)
