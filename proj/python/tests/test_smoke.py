import pytest

import xyzcyclic as xc


def test_construct_and_dimension():
    p = xc.XYZParams(5, 0)
    assert p.n == 17
    code = xc.build_code(p)
    assert code.num_qubits == 17
    assert code.num_logical_qubits == 1
    assert code.check_abelian()
    assert xc.seed_generator(xc.XYZParams(0, 0)) == "XZYIYZX"
    assert xc.code_dimension(xc.XYZParams(2, 2)) == 3


def test_repetition_and_witnesses():
    p = xc.XYZParams(5, 0)
    for s in (xc.PauliType.X, xc.PauliType.Y, xc.PauliType.Z):
        assert xc.has_repetition_structure(p, s) == xc.repetition_by_rank(p, s)
    w = xc.x_logical_witness(0, 1)
    assert w.weight == 3
    assert xc.build_code(xc.x_witness_params(0, 1)).is_logical(w)
    y = xc.y_logical_witness(xc.XYZParams(20, 3))
    assert y.weight == xc.y_weight_upper_bound(3) == 11
    with pytest.raises(xc.PreconditionError):
        xc.x_logical_witness(1, 1)


def test_pauli_algebra():
    a = xc.PauliString("XZYIYZX")
    assert (a * xc.PauliString("YYYYYYY")).label == "ZXIYIXZ"
    assert a.commutes_with(xc.PauliString("ZZZZZZZ"))


def test_distance():
    code = xc.build_code(xc.XYZParams(5, 0))
    r = xc.distance_upper_bound(code, trials=40, seed=3)
    assert (r.d_x_up, r.d_z_up, r.d_y_up) == (5, 5, 5)
    assert code.is_logical(r.y_witness)
    assert xc.exhaustive_distance(code, 5) == 5
    assert xc.exhaustive_distance(code, 4) is None
    with pytest.raises(xc.BudgetExceeded):
        xc.exhaustive_distance(code, 5, max_candidates=10)
    assert xc.overhead_row(7) == (25, 49)


def test_simulation_is_deterministic():
    noise = xc.NoiseModel.pure(xc.PauliType.Z, 0.3)
    rows = xc.threshold_sweep([xc.XYZParams(5, 0)], noise, [0.2, 0.3], trials=200, seed=9)
    again = xc.threshold_sweep([xc.XYZParams(5, 0)], noise, [0.2, 0.3], trials=200, seed=9, threads=2)
    assert xc.sweep_csv(rows) == xc.sweep_csv(again)
    assert xc.sweep_csv(rows).splitlines()[1].startswith("a,b,n,noise_kind")
    r = xc.logical_error_rate(xc.XYZParams(5, 0), xc.NoiseModel.depolarizing(0.0), trials=50)
    assert r.failures == 0
    lo, hi = rows[0].wilson()
    assert lo <= rows[0].p_logical <= hi
    assert xc.NoiseModel.z_biased(0.1001, 1000).rates()[2] == pytest.approx(0.1)
