import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2quot import _kernels
from sl2quot._kernels import _pyimpl
from sl2quot.rootdata import build_root_system

try:
    from sl2quot._kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="Cython extension not built")


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")


@needs_ext
@pytest.mark.parametrize("name", ["A3", "B3", "C4", "D4", "G2", "F4", "E6"])
def test_orbits_agree(name):
    rs = build_root_system(name)
    cartan = [list(row) for row in rs.cartan]
    for i in range(rs.rank):
        mu = [0] * rs.rank
        mu[i] = 1
        assert sorted(_ckernels.weyl_orbit(mu, cartan)) == sorted(_pyimpl.weyl_orbit(mu, cartan))
        vals = list(range(1, rs.rank + 1))
        assert _ckernels.orbit_values(mu, cartan, vals) == _pyimpl.orbit_values(mu, cartan, vals)
        neg = [-x for x in mu]
        assert tuple(_ckernels.dominant_rep(neg, cartan)) == tuple(_pyimpl.dominant_rep(neg, cartan))


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(-6, 6), st.integers(1, 3), min_size=1, max_size=6), st.integers(0, 6))
def test_subset_sums_agree(w, k):
    keys = sorted(w)
    counts = [w[m] for m in keys]
    if k > sum(counts):
        return
    assert _ckernels.subset_sums(keys, counts, k) == _pyimpl.subset_sums(keys, counts, k)


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=1, max_size=8))
def test_signed_sums_agree(entries):
    assert _ckernels.signed_sums(entries) == _pyimpl.signed_sums(entries)


def test_pure_python_forced(monkeypatch):
    import importlib

    monkeypatch.setenv("SL2QUOT_PURE_PYTHON", "1")
    mod = importlib.reload(_kernels)
    try:
        assert mod.BACKEND == "python" and mod.subset_sums is _pyimpl.subset_sums
    finally:
        monkeypatch.delenv("SL2QUOT_PURE_PYTHON")
        importlib.reload(_kernels)
