import json

import numpy as np
import pytest

import superholonomy as sh


def theta(i, n=2):
    return sh.GrassmannElement.generator(n, i)


def test_grassmann_anticommutes():
    t1, t2 = theta(1), theta(2)
    assert (t1 * t2 + t2 * t1).is_zero()
    assert (t1 * t1).is_zero()
    one = sh.GrassmannElement(2, 1.0)
    x = one + t1 * t2
    assert x * x.inverse() == one
    assert (t1 * t2).coeff([1, 2]) == 1.0


def test_osp12_algebra():
    alg = sh.alg_build_osp12()
    assert alg.dim == 5
    assert alg.labels == ["J0", "J1", "J2", "Q1", "Q2"]
    assert alg.parities == [0, 0, 0, 1, 1]
    rep = sh.alg_check_jacobi(alg, 1e-12)
    assert rep["pass"]


def test_membership_and_xi():
    alg = sh.alg_build_osp(2, 1)
    g = sh.sample_member(alg, 2, 7)
    h = sh.sample_member(alg, 2, 8)
    assert sh.grp_membership_residual(sh.sm_mul(g, h)) < 1e-9
    assert sh.grp_membership_residual(sh.sm_inverse(g)) < 1e-9
    xi = sh.grp_xi_block(g)
    expected = sh.grp_xi_from_chi(g)
    for row, erow in zip(xi, expected):
        for a, b in zip(row, erow):
            assert (a - b).max_abs() < 1e-10


def test_supermatrix_json_round_trip():
    g = sh.sample_member(sh.alg_build_osp12(), 2, 3)
    back = sh.SuperMatrix.from_json(g.to_json())
    assert back == g
    assert json.loads(g.to_json())["m"] == 1


def test_ahat_and_gauge_fixing():
    a0 = np.eye(1)
    parabolic = np.array([[1.0, 0.6], [0.0, 1.0]])
    _, det, rank = sh.mod_ahat(a0, parabolic)
    assert abs(det) < 1e-14 and rank == 1
    hyper = np.diag([np.exp(0.7), np.exp(-0.7)])
    _, det, rank = sh.mod_ahat(a0, hyper)
    assert rank == 2 and abs(det) > 0.1
    for seed in range(20):
        u = sh.sample_member(sh.alg_build_osp12(), 2, seed)
        if sh.mod_ahat(u.body()[:1, :1], u.body()[1:, 1:])[2] < 2:
            continue
        S, fixed = sh.mod_gauge_fix_sigma(u)
        assert np.abs(fixed.coefficient([1])).max() < 1e-10
        assert sh.grp_is_member(S)


def test_moduli_counts():
    one = np.eye(1)
    parabolic = np.array([[1.0, 0.6], [0.0, 1.0]])
    parabolic2 = np.array([[1.0, -1.1], [0.0, 1.0]])
    assert sh.mod_fermionic_moduli_count(one, one, parabolic, parabolic2) == 2
    assert sh.mod_fermionic_moduli_bruteforce(one, one, parabolic, parabolic2) == 2
    with pytest.raises(sh.HypothesisError):
        sh.mod_fermionic_moduli_count(one, one, parabolic, np.eye(2))


def test_sectors_and_closure():
    rep = sh.mod_enumerate_sectors_osp12()
    assert rep["bosonic_sectors"] == 36
    assert len(rep["fermionic_sectors"]) == 4
    assert all(s["moduli"] == 2 for s in rep["fermionic_sectors"])
    closure = sh.sp_check_closure(sh.alg_build_osp12(), 1e-12)
    assert closure["pass"]
    assert closure["lambda"] == pytest.approx(1.0)
    partial = sh.mod_osp22_partial_report()
    assert partial["partial"] and partial["so2_so2_sector"]["moduli"] == 4


def test_efm_sigma_plus():
    alg = sh.alg_build_osp12()
    x = np.zeros((3, 3))
    x[1:, 1:] = sh.sigma_plus()
    c = sh.alg_real_coefficients(alg, x)
    efm = sh.sp_efm(alg, c)
    assert efm["rank"] == 1 and efm["moduli"] == 2


def test_errors_map_to_python():
    with pytest.raises(sh.DimensionError):
        sh.alg_build_osp(0, 1)
    t1 = theta(1)
    with pytest.raises(sh.NotInvertibleError):
        t1.inverse()


def test_cli_entry_point():
    code, out, err = sh.run_cli(["sectors"])
    assert code == 0 and "bosonic=36 fermionic=4" in out
    code, _, err = sh.run_cli(["jacobi", "--m", "0"])
    assert code == 2 and err
