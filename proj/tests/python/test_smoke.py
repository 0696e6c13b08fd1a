# Copyright 2026 The tomoent Authors
# SPDX-License-Identifier: Apache-2.0

import math
import os
import pathlib

import numpy as np
import pytest

import tomoent

SOURCE = pathlib.Path(os.environ.get("TOMOENT_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


def test_squeezed_entropy_matches_closed_form():
    r = 0.5
    psi = tomoent.two_mode_squeezed(r, 40, 40)
    c, s = math.cosh(r) ** 2, math.sinh(r) ** 2
    assert tomoent.svne(psi) == pytest.approx(c * math.log(c) - s * math.log(s), abs=1e-8)
    rho = tomoent.reduced_density_matrix(psi, "A")
    assert rho.shape == (41, 41)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)


def test_product_state_indicators_vanish():
    psi = tomoent.BipartiteState.product(tomoent.coherent_state(1.0, 20), tomoent.coherent_state(0.0, 20))
    rec = tomoent.indicators(psi, grid=tomoent.QuadratureGrid(8.0, 129))
    for key in ("svne", "sle", "xi_tei", "xi_tei_prime", "d1", "d2"):
        assert abs(rec[key]) < 1e-6, key


def test_tomogram_is_normalized():
    grid = tomoent.QuadratureGrid(8.0, 129)
    psi = tomoent.BipartiteState.basis(1, 2, 6, 6)
    w = tomoent.tomogram(psi, 0.3, 1.1, grid)
    h = grid.spacing
    weights = np.ones(grid.n_points)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    weights *= h / 3.0
    assert weights @ w @ weights == pytest.approx(1.0, abs=1e-6)
    assert (w >= -1e-14).all()


def test_analytic_and_numeric_propagation_agree():
    p = tomoent.BECParams(1.0, 1.0, 1.0, 1.0)
    h = tomoent.build_hamiltonian_bec(p, 30)
    psi0 = tomoent.BipartiteState.product(tomoent.pacs_state(1.0, 1, 30), tomoent.coherent_state(1.0, 30))
    num = tomoent.evolve(psi0, h, 0.7)
    ana = tomoent.bec_analytic_state(p, 1.0, 1.0, 1, 0, 0.7, 30, 30)
    assert abs(tomoent.overlap(num, ana)) ** 2 == pytest.approx(1.0, abs=1e-8)


def test_logistic_exponent():
    x, v = [], 0.3141592653589793
    for i in range(4000):
        v = 4.0 * v * (1.0 - v)
        if i >= 1000:
            x.append(v)
    rep = tomoent.analyze(x, dt=1.0, seed=1)
    assert rep["delay"] == 1
    assert 0.62 <= rep["lambda_inf"] <= 0.77


def test_errors_are_typed():
    with pytest.raises(tomoent.InvalidArgument):
        tomoent.AtomFieldParams(g=0.0)
    with pytest.raises(tomoent.DegenerateSeriesError):
        tomoent.estimate_delay([0.25] * 500)
    with pytest.raises(tomoent.ConfigError):
        tomoent.load_config(SOURCE / "configs" / "bec_cs_w1_l1.json", ["params.u=\"x\""])


def test_config_run():
    cfg = tomoent.load_config(SOURCE / "configs" / "bec_cs_w1_l1.json", ["grid.n_points=65", "cutoffs=[12,12]"])
    cfg.n_steps = 3
    cols = tomoent.run_indicators(cfg)
    assert len(cols["t"]) == 3
    assert cols["t"][0] == 0.0
    assert abs(cols["svne"][0]) < 1e-9
