import math

import pytest

import fodesc


def test_synthesize_defines():
    f = fodesc.synthesize([2, 4])
    assert f.size == 28
    assert f.size <= fodesc.upper_bound([2, 4])
    assert fodesc.defines([2, 4], f)
    assert not fodesc.defines([3, 3], f)


def test_parse_and_eval():
    vocab = fodesc.Vocabulary.with_arity(1)
    f = fodesc.parse("Ax1. P(x1)", vocab)
    assert f.size == 2
    assert fodesc.eval(fodesc.representative([0, 3]), f)
    assert not fodesc.eval(fodesc.representative([1, 2]), f)


def test_exact_complexity():
    r = fodesc.exact_complexity([1, 1])
    assert r["size"] == 5
    assert fodesc.defines([1, 1], r["witness"])
    r = fodesc.exact_complexity([2, 2], max_size=4)
    assert r["size"] is None and r["searched_up_to"] == 4


def test_game():
    assert fodesc.play([[0, 1]], [[1, 0]], r=2, q=1)["winner"] == "S"
    assert fodesc.play([[2, 3]], [[1, 4]], r=9, q=1)["winner"] == "D"
    assert fodesc.lower_bound_witness([2, 3]) == ([1, 4], 3)


def test_entropy():
    # Independent: log2 of the multinomial directly.
    assert fodesc.boltzmann_entropy([3, 5]) == pytest.approx(math.log2(math.comb(8, 3)))
    assert fodesc.multinomial([3, 5]) == math.comb(8, 3)
    assert fodesc.shannon_entropy([2, 2]) == pytest.approx(1.0)
    rep = fodesc.entropy_report([5, 5])
    assert rep["gap"] < rep["gap_bound"]


def test_structures_and_errors():
    s = fodesc.sample_uniform(fodesc.Vocabulary.with_arity(2), 50, 7)
    assert s.n == 50 and sum(s.profile()) == 50
    assert fodesc.UnaryStructure.from_csv(s.to_csv()) == s
    with pytest.raises(fodesc.InputError):
        fodesc.synthesize([1, 2, 3])
    with pytest.raises(ValueError):
        fodesc.balance_threshold(1, 1)
