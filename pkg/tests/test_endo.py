import pytest

from helpers import random_specs
from zkinv import make_spec
from zkinv.bundle import validate
from zkinv.cech import NoStabilization
from zkinv.endo import (
    conjecture_values,
    delta,
    delta_sequence,
    determinant,
    end_candidates,
    end_transition,
    end_transition_from_tensor,
    h0_end,
    h0_end_split_formula,
    h1_end,
    h1_end_oracle,
    instanton_total,
    relative_identity_holds,
)
from zkinv.poly import LaurentPoly, parse_laurent, zpow


def test_end_transition_split_is_diagonal():
    S = end_transition(make_spec(2, 3, "0"))
    diag = [LaurentPoly.const(1), zpow(6), zpow(-6), LaurentPoly.const(1)]
    for i in range(4):
        for l in range(4):
            assert S[i][l] == (diag[i] if i == l else LaurentPoly.zero())


def test_end_transition_row_two():
    S = end_transition(make_spec(2, 3, "u"))
    assert S[1] == [LaurentPoly.zero(), zpow(6), LaurentPoly.zero(), parse_laurent("z^3*u")]


@pytest.mark.parametrize("k,j,p", [(1, 2, "u"), (2, 7, "z^-1*u + z*u^2"), (3, 5, "z^-1*u + 2*z^4*u")])
def test_end_transition_from_tensor_product(k, j, p):
    spec = make_spec(k, j, p)
    assert end_transition_from_tensor(spec) == end_transition(spec)
    assert determinant(end_transition(spec)) == LaurentPoly.const(1)


def test_end_candidates_range():
    assert end_candidates(1, 1) == [(0, -1)]
    assert end_candidates(2, 0) == []
    assert len(end_candidates(2, 6)) == 36


@pytest.mark.parametrize("k,j,p,h", [(1, 2, "u", 4), (2, 6, "0", 36), (2, 7, "z^-1*u + z*u^2", 33), (1, 2, "0", 6)])
def test_h1_end_examples(k, j, p, h):
    assert h1_end(make_spec(k, j, p), oracle=True) == h


def test_h0_end_smallest_case():
    assert h0_end(make_spec(1, 1, "0"), 0) == 5


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("j", [1, 2, 3, 4, 5])
def test_h0_end_split_formula(k, j):
    spec = make_spec(k, j, "0")
    for n in range(0, 7):
        assert h0_end(spec, n) == h0_end_split_formula(k, j, n)


@pytest.mark.parametrize("k,j,p", [(1, 2, "u"), (2, 5, "z^-1*u + u^2"), (3, 4, "z^3*u^2")])
def test_h0_end_non_decreasing(k, j, p):
    spec = make_spec(k, j, p)
    vals = [h0_end(spec, n) for n in range(8)]
    assert vals == sorted(vals)


def test_h0_end_rejects_bad_input():
    with pytest.raises(ValueError):
        h0_end(make_spec(1, 0, "0"), 1)
    with pytest.raises(ValueError):
        h0_end(make_spec(1, 2, "u"), -1)


@pytest.mark.parametrize("k,j,p,d", [(1, 2, "u", 2), (2, 6, "z*u", 13), (2, 6, "0", 0), (1, 0, "0", 0)])
def test_delta_examples(k, j, p, d):
    assert delta(make_spec(k, j, p)) == d


def test_delta_sequence_settles():
    seq = delta_sequence(make_spec(2, 6, "z*u"), 0, 10)
    assert seq[-1] == 13 and all(x >= 0 for x in seq)


def test_delta_cap():
    with pytest.raises(NoStabilization):
        delta(make_spec(2, 6, "z*u"), cap=1)


@pytest.mark.parametrize("spec", random_specs(20, 23), ids=str)
def test_h1_end_oracle_and_relative_identity(spec):
    assert h1_end(spec) == h1_end_oracle(spec)
    assert delta(spec) >= 0
    assert relative_identity_holds(spec)


def test_invariants_unchanged_by_normalization():
    raw = validate(2, 5, "z^-1*u + z^7*u + u^9")
    assert h1_end(raw) == h1_end(make_spec(2, 5, "z^-1*u + z^7*u + u^9"))
    assert delta(raw) == delta(make_spec(2, 5, "z^-1*u"))


def test_instanton_total_and_conjecture_values():
    assert instanton_total(2, 6) == 36 and instanton_total(2, 5) is None
    lhs, rhs = conjecture_values(2, 6, 0, 5, 23, 13)
    assert lhs == 5 and rhs == 5
