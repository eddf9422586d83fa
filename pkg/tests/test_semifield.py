from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lrsnake.semifield import QPLUS, TROPICAL, TROPICAL_BATCH, SemifieldMismatch

pos = st.builds(Fraction, st.integers(1, 30), st.integers(1, 30))
ints = st.integers(-50, 50)


@pytest.mark.parametrize("K,elems", [(QPLUS, pos), (TROPICAL, ints)])
def test_axioms(K, elems):
    @given(elems, elems, elems)
    def check(a, b, c):
        assert K.equal(K.add(a, b), K.add(b, a))
        assert K.equal(K.add(K.add(a, b), c), K.add(a, K.add(b, c)))
        assert K.equal(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c)))
        assert K.equal(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c)))
        assert K.equal(K.mul(a, K.inv(a)), K.one())
        assert K.equal(K.div(K.mul(a, b), b), a)

    check()


def test_tropical_operations():
    assert TROPICAL.add(3, -1) == -1
    assert TROPICAL.mul(3, -1) == 2
    assert TROPICAL.pow(2, -3) == -6
    assert TROPICAL.prod([]) == 0


def test_empty_sum_rejected():
    with pytest.raises(ValueError):
        QPLUS.sum([])


def test_membership_checks():
    with pytest.raises(SemifieldMismatch):
        QPLUS.add(Fraction(1), 2)
    with pytest.raises(SemifieldMismatch):
        QPLUS.check(Fraction(0))
    with pytest.raises(SemifieldMismatch):
        TROPICAL.check(True)
    with pytest.raises(SemifieldMismatch):
        TROPICAL_BATCH.check(np.array([0.5]))


def test_qplus_text_roundtrip():
    assert QPLUS.format(QPLUS.parse("6/4")) == "3/2"


def test_batch_matches_scalar():
    a, b = np.array([1, -2, 3]), np.array([0, 0, 5])
    assert TROPICAL_BATCH.add(a, b).tolist() == [TROPICAL.add(x, y) for x, y in zip(a.tolist(), b.tolist())]
