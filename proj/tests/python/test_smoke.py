"""Smoke tests for the python bindings: the main operations are reachable,
numpy interop works, and errors map onto python exceptions."""

import numpy as np
import pytest

import lsekit


def test_pseudo_inverse_identity_and_cutoff():
    eye = np.eye(3)
    assert np.allclose(lsekit.pseudo_inverse(eye), eye, atol=1e-12)

    diag = np.diag([2.0, 0.0])
    p = lsekit.pseudo_inverse(diag, rcond=1e-12)
    assert np.allclose(p, np.diag([0.5, 0.0]), atol=1e-14)


def test_rank_one_update_identities():
    rng = np.random.default_rng(7)
    a = rng.uniform(-1, 1, (4, 4)) + 8 * np.eye(4)
    a_inv = np.linalg.inv(a)
    u = rng.uniform(-1, 1, 4)
    v = rng.uniform(-1, 1, 4)

    sm = lsekit.sherman_morrison_update(a_inv, u, v)
    direct = np.linalg.inv(a + np.outer(u, v))
    assert np.max(np.abs(sm - direct)) <= 1e-10

    wb = lsekit.woodbury_inverse(a_inv, u[:, None], np.eye(1), v[None, :])
    assert np.max(np.abs(sm - wb)) <= 1e-12


def test_symmetrize_is_exact():
    m = np.array([[1.0, 2.0], [0.0, 1.0]])
    s = lsekit.symmetrize(m)
    assert (s == np.array([[1.0, 1.0], [1.0, 1.0]])).all()


def test_batch_solve_recovers_noiseless_parameters():
    rng = np.random.default_rng(3)
    theta = np.array([1.5, -0.7, 0.2])
    X = rng.uniform(-1, 1, (40, 3))
    y = X @ theta
    ds = lsekit.dataset_from_arrays(X, y)
    assert len(ds) == 40
    assert ds.dim == 3

    sol = lsekit.solve_batch(ds)
    assert np.max(np.abs(sol.theta_hat - theta)) <= 1e-9
    assert sol.rank == 3
    assert not sol.used_pseudo_inverse
    assert lsekit.cost(ds, sol.theta_hat) <= 1e-18


def test_assemble_shape_contract():
    ds = lsekit.Dataset(2)
    ds.append(np.array([1.0, 2.0]), 3.0)
    phi, y = lsekit.assemble(ds)
    assert phi.shape == (2, 1)
    assert y.shape == (1,)
    assert phi[1, 0] == 2.0


def test_recursive_estimator_matches_batch():
    rng = np.random.default_rng(11)
    theta = np.array([2.0, -0.5])
    X = rng.uniform(-1, 1, (100, 2))
    y = X @ theta
    ds = lsekit.dataset_from_arrays(X, y)

    cfg = lsekit.ForgettingConfig(forgetting_factor=1.0, f0_scale=1e8)
    state, records = lsekit.rls_run(ds, cfg)
    assert state.step == 100
    assert len(records) == 100
    assert records[-1].step == 100

    batch = lsekit.solve_batch(ds)
    assert np.max(np.abs(state.theta_hat - batch.theta_hat)) <= 1e-4
    assert lsekit.gain_trace(state) < 2e8


def test_single_step_and_predict():
    cfg = lsekit.ForgettingConfig(forgetting_factor=1.0, f0_scale=100.0)
    state = lsekit.rls_init(1, cfg)
    assert lsekit.rls_predict(state, np.array([3.0])) == 0.0

    stepped = lsekit.rls_step(state, np.array([1.0]), 2.0, cfg)
    assert stepped.gain[0, 0] == pytest.approx(100.0 / 101.0, rel=1e-12)
    assert stepped.theta_hat[0] == pytest.approx(200.0 / 101.0, rel=1e-12)
    assert stepped.last_innovation == 2.0
    # the input state is a value: untouched by the step
    assert state.step == 0
    assert state.theta_hat[0] == 0.0


def test_generate_is_deterministic_and_solvable():
    spec = lsekit.ScenarioSpec(
        kind=lsekit.ScenarioKind.spring,
        true_theta=np.array([2.0]),
        num_samples=50,
        noise_std=0.0,
        seed=7,
    )
    a = lsekit.generate(spec)
    b = lsekit.generate(spec)
    for sa, sb in zip(a.true_theta_per_step, b.true_theta_per_step):
        assert (sa == sb).all()
    assert len(a.dataset) == 50

    sol = lsekit.solve_batch(a.dataset)
    assert sol.theta_hat[0] == pytest.approx(2.0, abs=1e-9)


def test_csv_round_trip(tmp_path):
    rng = np.random.default_rng(5)
    X = rng.uniform(-1, 1, (20, 2))
    y = rng.uniform(-1, 1, 20)
    ds = lsekit.dataset_from_arrays(X, y)

    path = tmp_path / "samples.csv"
    lsekit.write_samples_csv(path, ds)
    back = lsekit.read_samples_csv(path)
    assert len(back) == 20
    for i in range(20):
        assert (back[i].regressor == ds[i].regressor).all()
        assert back[i].output == ds[i].output


def test_errors_map_to_python_exceptions():
    with pytest.raises(lsekit.ConfigError):
        lsekit.ForgettingConfig(forgetting_factor=1.5)
    with pytest.raises(ValueError):
        lsekit.ForgettingConfig(forgetting_factor=0.0)

    ds = lsekit.Dataset(2)
    with pytest.raises(lsekit.EmptyInputError):
        lsekit.solve_batch(ds)
    with pytest.raises(lsekit.ShapeError):
        ds.append(np.array([1.0, 2.0, 3.0]), 1.0)
    with pytest.raises(lsekit.DataError):
        ds.append(np.array([np.nan, 1.0]), 1.0)

    with pytest.raises(lsekit.SingularityError):
        eye = np.eye(2)
        e1 = np.array([1.0, 0.0])
        lsekit.sherman_morrison_update(eye, e1, -e1)

    with pytest.raises(lsekit.IoError):
        lsekit.read_samples_csv("/nonexistent/nowhere.csv")
