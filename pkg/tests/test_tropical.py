from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lrsnake.tropical import (
    PhiParams, TropicalContext, check_R_transport, f_mu, f_mu_batch, f_mu_generic, in_R,
    phi, phi_batch, phi_direct, phi_inverse, phi_trace, reproduce_counterexamples,
    search_local_solutions, sweep_tropical, tau, zeta_match,
)
from lrsnake.tuples import RSetParams, enumerate_R, snakes_in_box

GOLDEN = PhiParams(4, 1, 4, (2, 1, 0, 0))


def test_golden_trace():
    tr = phi_trace(GOLDEN, (5, 3, 2, 0))
    assert tr.nu == (4, 2, 1, -1)
    assert tr.tau == (1, 2, 2, 3)
    assert tr.eta == (1, 1, 1, -3)
    assert tr.result == (5, 5, 5, 1)
    assert phi(GOLDEN, (5, 3, 2, 0)) == (5, 5, 5, 1)
    assert phi_inverse(GOLDEN, (5, 5, 5, 1)) == (5, 3, 2, 0)


def test_tau_values():
    ctx = TropicalContext((2, 1, 0, 0))
    assert [tau(ctx, (4, 2, 1, -1), j) for j in range(1, 5)] == [1, 2, 2, 3]
    ctx2 = TropicalContext((2, 1))
    assert (tau(ctx2, (4, 0), 0), tau(ctx2, (4, 0), 1)) == (2, 0)


def test_f_mu_examples():
    ctx = TropicalContext((2, 1))
    assert f_mu(ctx, (3, 0)) == (3, 0)
    assert f_mu(ctx, (4, 0)) == (3, -1)
    assert f_mu(ctx, (3, -1)) == (4, 0)
    assert f_mu(TropicalContext((2, 1, 0, 0)), (4, 2, 1, -1)) == (1, 1, 1, -3)


def test_phi_trivial_case():
    p = PhiParams(3, 0, 0, (2, 1, 0))
    assert phi(p, (1, 1, 1)) == (1, 1, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_phi_direct_agrees_on_grid(n):
    grid = np.array(list(product(range(-3, 9), repeat=n)))
    for a, b in [(0, 0), (1, 2), (3, 1)]:
        for mu in [(2,) + (1,) * (n - 2) + (0,), (3,) * n]:
            p = PhiParams(n, a, b, mu)
            batch = phi_batch(p, grid)
            for om, im in zip(grid[::7], batch[::7]):
                assert phi_direct(p, tuple(om)) == tuple(im)


def test_phi_direct_agrees_n4_sample():
    p = GOLDEN
    for om in product(range(-3, 9, 3), repeat=4):
        assert phi_direct(p, om) == phi(p, om)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(*[st.lists(st.integers(-6, 6), min_size=n, max_size=n)] * 2)))
def test_native_generic_batch_agree(data):
    mu, g = data
    eta = f_mu(TropicalContext(mu), g)
    assert f_mu_generic(mu, g) == eta
    assert tuple(f_mu_batch(mu, np.array([g]))[0]) == eta
    assert f_mu(TropicalContext(mu), eta) == tuple(g)


def test_params_validation():
    with pytest.raises(ValueError):
        PhiParams(1, 0, 0, (0,))
    with pytest.raises(ValueError):
        PhiParams(2, -1, 0, (1, 0))
    with pytest.raises(ValueError):
        PhiParams(2, 0, 0, (1, -1))
    assert GOLDEN.alpha == (5, 1, 1, 0) and GOLDEN.beta == (5, 4, 4, 0)


def test_zeta_example():
    ctx = TropicalContext((2, 1))
    assert in_R((2, 1), (4, 0), 1, 2, (2, 0))
    z = zeta_match(ctx, (4, 0), (2, 0), 1, 2)
    assert z == (2, -1)
    assert in_R((2, 1), f_mu(ctx, (4, 0)), 2, 1, z)
    with pytest.raises(ValueError):
        zeta_match(ctx, (4, 0), (2, 0), 1, 0)


def test_zeta_fixed_point_is_identity():
    ctx = TropicalContext((2, 1))
    for nu in enumerate_R(RSetParams((2, 1), (3, 0), 1, 1)):
        assert zeta_match(ctx, (3, 0), nu, 1, 1) == nu


@pytest.mark.parametrize("n", [2, 3])
def test_R_transport_grid(n):
    box = list(snakes_in_box(n, -2, 2))
    for mu in box[::2]:
        for gamma in box:
            for a in range(3):
                for b in range(3):
                    assert check_R_transport(mu, gamma, a, b)


def test_counterexamples():
    res = reproduce_counterexamples()
    assert res["pass"]
    assert any(e["g"] == 3 and e["k"] == 2 and e["pass"] for e in res["n3_family"])
    assert [e["y"] for e in res["n4_instance"]] == [[1, 1, 1, 1], [2, 2, 0, 0]]


def test_local_search_finds_listed_solutions():
    sols = search_local_solutions((2, 1, 1, 0), (1, 1, 1, 1), 0, 2, with_product=True)
    assert (1, 1, 1, 1) in sols and (2, 2, 0, 0) in sols


def test_sweep_small():
    res = sweep_tropical(ns=(2, 3), lo=-2, hi=2)
    assert res["failures"] == [] and res["instances"] == 25 * 25 + 125 * 125
