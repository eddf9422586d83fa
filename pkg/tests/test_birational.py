import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lrsnake import birational as bir
from lrsnake.semifield import QPLUS, TROPICAL

pos = st.builds(F, st.integers(1, 12), st.integers(1, 12))


def qtuples(n):
    return st.lists(pos, min_size=n, max_size=n)


U, X = (F(1), F(1)), (F(2), F(3))


def test_two_variable_hand_example():
    ctx = bir.BirationalContext(QPLUS, U)
    t = bir.t_table(ctx, X)
    assert (t(1, 0), t(1, 1)) == (3, 4)
    assert all(t(0, j) == 1 for j in range(2))
    assert bir.f_u(ctx, X) == [F(1, 3), F(1, 2)]
    assert bir.f_u_via_back_formula(ctx, X) == [F(1, 3), F(1, 2)]


def test_r_matrix_hand_example():
    a2, b2 = bir.r_matrix(QPLUS, U, X)
    assert (a2[0], b2[0]) == (F(3, 4), F(9, 4))
    assert U[0] * a2[0] / b2[0] == F(1, 3)


def test_local_identities_hand_example():
    ctx = bir.BirationalContext(QPLUS, U)
    locals_ = [e for e in bir.check_full_theorem(ctx, X) if e["identity"].startswith("local")]
    assert [(e["lhs"], e["rhs"]) for e in locals_] == [("4/1", "4/1"), ("6/1", "6/1")]


def test_t_30_for_n4():
    rng = random.Random(7)
    for _ in range(20):
        u = [QPLUS.random(rng) for _ in range(4)]
        x = [QPLUS.random(rng) for _ in range(4)]
        t = bir.t_table(bir.BirationalContext(QPLUS, u), x)
        u1, u2, u3 = u[:3]
        x1, x2, x3 = x[:3]
        assert t(3, 0) == u1 * u2 * u3 + x1 * u2 * u3 + x1 * x2 * u3 + x1 * x2 * x3


@pytest.mark.parametrize("K,u", [(QPLUS, (F(2), F(1, 3), F(5))), (TROPICAL, (2, -1, 0))])
def test_fixed_point_at_u(K, u):
    ctx = bir.BirationalContext(K, u)
    assert K.equal(bir.f_u(ctx, u)[0], u[0]) and list(bir.f_u(ctx, u)) == list(u)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(qtuples(n), qtuples(n), qtuples(n))))
def test_identities_random_qplus(data):
    u, x, g = data
    ctx = bir.BirationalContext(QPLUS, u)
    entries = (
        bir.check_full_theorem(ctx, x)
        + bir.check_t_recurrences(ctx, x)
        + bir.check_r_matrix(ctx, x, g)
        + [bir.check_equal_case(ctx, x)]
        + bir.check_cyclic_product(QPLUS, x)
    )
    assert all(e["pass"] for e in entries), [e for e in entries if not e["pass"]][:3]


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(*[st.lists(st.integers(-4, 4), min_size=n, max_size=n)] * 2)))
def test_identities_tropical(data):
    u, x = data
    ctx = bir.BirationalContext(TROPICAL, u)
    entries = bir.check_full_theorem(ctx, x) + bir.check_t_recurrences(ctx, x)
    assert all(e["pass"] for e in entries)


def test_mixed_instances_rejected():
    ctx = bir.BirationalContext(QPLUS, U)
    with pytest.raises(TypeError):
        bir.f_u(ctx, (1, 2))
    with pytest.raises(ValueError):
        bir.f_u(ctx, (F(1),))
