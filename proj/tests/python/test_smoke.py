"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import dhn


def test_partitions():
    assert dhn.partitions_of(3) == [[3], [2, 1], [1, 1, 1]]
    assert dhn.aut_order([1, 1, 1]) == 6
    assert dhn.conjugacy_class_size([2, 1]) == 3
    assert dhn.conjugate([4, 2]) == [2, 2, 1, 1]
    assert dhn.shifted_power_sum([2, 1, 1], 4) == 17


def test_characters():
    assert dhn.character([2, 1], [1, 1, 1]) == 2
    assert dhn.character([1, 1, 1], [2, 1]) == -1
    assert dhn.eta([3]) == 3
    with pytest.raises(ValueError):
        dhn.character([2], [3])


def test_special_series():
    assert dhn.bernoulli(4) == Fraction(-1, 30)
    assert dhn.xi_coeff(4) == Fraction(-1, 180)
    assert dhn.v_coeff(2) == Fraction(1, 24)
    assert dhn.f_coeff(2) == Fraction(-1, 24)


def test_hurwitz_values():
    assert dhn.hurwitz(0, [3], [1, 1, 1]) == 6
    assert dhn.hurwitz(1, [2], [2]) == Fraction(1, 2)
    assert dhn.hurwitz(0, [3], [1, 1, 1], method="brute") == 6
    assert dhn.one_part(0, [1, 1, 1]) == 6
    assert dhn.one_part_closed(2, [1, 1]) == 1
    assert dhn.diagonal(0, 7) == Fraction(1, 7)
    assert dhn.two_two(0, [3, 8], [4, 7]) == 16
    assert dhn.genus0_mparts([2, 1], [2, 1]) == 4
    assert dhn.hurwitz_disconnected([1, 1], [1, 1], 0) == 2


def test_symbol():
    assert dhn.symbol_def(1, 0, [2]) == Fraction(1, 24)
    assert dhn.symbol_wittcor(1, 1, [0]) == Fraction(1, 24)
    assert dhn.symbol_def(0, 0, [0, 0, 0]) == 1
    assert dhn.closed_form_symbol("one_point", 1, 1) == Fraction(1, 24)


def test_ray_fit():
    fit = dhn.ray_fit(0, [2, 1], [2, 1], 6)
    assert fit["degree"] == 1
    assert fit["leading"] == 4
    assert fit["ok"]


def test_verify_suite():
    lines = dhn.verify_suite("string-dilaton")
    assert lines and all(line["pass"] for line in lines)
