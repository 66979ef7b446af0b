import os
import subprocess
import sys

from irrsub import _kernels_py, kernels
from irrsub.rootsys import SimpleType, build_root_datum


def test_backends_agree_on_e8_adjoint():
    d = build_root_datum(SimpleType.parse("E8"))
    lam = (0,) * 7 + (1,)
    args = (d.cartan, d.norms, d.positive_roots, d.roots_fund, lam)
    got = kernels.dominant_multiplicities(*args)
    assert got == _kernels_py.dominant_multiplicities(*args)
    assert got == {lam: 1, (0,) * 8: 8}


def test_pure_python_switch():
    code = "from irrsub import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={**os.environ, "IRRSUB_PURE_PYTHON": "1"}, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")
