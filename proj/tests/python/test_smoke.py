"""Smoke tests for the python bindings (needs the built package on PYTHONPATH)."""

import json

import pytest

import xwell

REF_ENERGIES = [2.6759909394474103, 7.7766938196884972,
                13.330490617556487, 19.561606072767060]


def test_spectrum():
    states = xwell.solve_spectrum(xwell.WellParams(), 3)
    assert [s.n for s in states] == [0, 1, 2, 3]
    assert [s.parity for s in states] == ["even", "odd", "even", "odd"]
    for s, ref in zip(states, REF_ENERGIES):
        assert abs(s.energy - ref) <= 1e-7


def test_eigenfunction_and_nodes():
    params = xwell.WellParams()
    states = xwell.solve_spectrum(params, 1)
    assert xwell.eigenfunction(params, states[1], 0.0) == 0.0
    assert xwell.count_nodes(params, states[0]) == 0
    normalized = xwell.normalize(params, states[0])
    assert normalized.norm_constant > 0


def test_scattering():
    barrier = xwell.BarrierParams(u0=5.0, a=1.0)
    pt = xwell.rt_probabilities(barrier, 0.0)
    assert abs(pt.r + pt.t - 1.0) <= 1e-8
    assert pt.t > 0.5
    ec = xwell.find_crossover(barrier, -5.0, 5.0)
    assert abs(ec - -1.1487) <= 1e-3


def test_sweep_table():
    barrier = xwell.BarrierParams()
    table = xwell.sweep(barrier, -10.0, 10.0, 101, threads=2)
    assert len(table.rows) == 101
    assert [name for name, _ in table.columns] == ["E", "R", "T", "unitarity_defect"]
    assert float(table.metadata["max_unitarity_defect"]) <= 1e-8
    doc = json.loads(table.to_json())
    assert doc["schema_version"] == "1"
    assert len(doc["rows"]) == 101
    assert table.to_csv().splitlines()[0] == "E[energy],R,T,unitarity_defect"


def test_semiclassics():
    well = xwell.WellParams()
    assert xwell.action_f(well, 0.0) == 0.0
    wkb = xwell.wkb_spectrum(well, 1)
    assert abs(wkb[0][1] - 2.6471) <= 5e-4
    barrier = xwell.BarrierParams()
    assert xwell.t_wkb(barrier, -1e-300) == 0.5


def test_poles():
    well = xwell.WellParams()
    poles = xwell.pole_locate(well, 1)
    assert abs(poles[0][0] - REF_ENERGIES[0]) <= 1e-6
    assert [kind for _, kind in poles] == ["Kprime", "K"]


def test_specfun():
    assert xwell.gamma_complex(5.0) == pytest.approx(24.0, rel=1e-12)
    assert xwell.k_imag_order(0.0, 1.0) == pytest.approx(0.42102443824070834, rel=1e-12)
    _, h2 = xwell.hankel_pair(0.3j, 2.0)
    h1_m, _ = xwell.hankel_pair(-0.3j, 2.0)
    assert abs(h2.conjugate() - h1_m) <= 1e-10


def test_errors():
    with pytest.raises(xwell.XwellError):
        xwell.turning_points(xwell.WellParams(), -1.0)
