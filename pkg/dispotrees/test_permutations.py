"""
    dispotrees.test_permutations
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Test suite for cycle decompositions and colored permutations.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import itertools
import math

import pytest

from . import (
    ColoredCyclePermutation, CycleDecomposition, Disposition,
    InvalidObjectError, OutOfRangeError, ParseError, Polynomial,
    VariableContext, colored_to_disposition, cycle_color_generating_function,
    disposition_polynomial, disposition_to_colored, enumerate_colored,
    enumerate_dispositions, enumerate_permutations, fundamental_bijection,
    parse_colored, rising_factorial, rl_min, standard_word,
    stirling_cycle_numbers, word_to_cycles)

SAMPLE_DISPOSITION = Disposition(
    [(2, 9), (7, 4), (), (5,), (), (6, 1, 8), (3,), ()])


def test_standard_word():
    assert standard_word((5,)) == (5,)
    assert standard_word((1, 3)) == (3, 1)
    assert standard_word((2, 9)) == (9, 2)
    assert standard_word((4, 2, 7, 5)) == (7, 5, 4, 2)
    with pytest.raises(InvalidObjectError):
        standard_word(())
    with pytest.raises(InvalidObjectError):
        standard_word((1, 1))


def test_cycle_decomposition():
    p = CycleDecomposition([(8,), (1, 6)])
    assert p.cycles == ((6, 1), (8,))
    assert p == CycleDecomposition([(6, 1), (8,)])
    assert len(p) == 2
    assert str(p) == '(6 1)(8)'
    with pytest.raises(InvalidObjectError):
        CycleDecomposition([(1, 2), (2, 3)])
    with pytest.raises(InvalidObjectError):
        CycleDecomposition([(0,)])
    q = CycleDecomposition.from_one_line((2, 3, 1, 4))
    assert q.cycles == ((2, 3, 1), (4,))
    assert q.to_one_line() == (2, 3, 1, 4)
    with pytest.raises(InvalidObjectError):
        p.to_one_line()


def test_fundamental_bijection():
    assert fundamental_bijection(
        CycleDecomposition([(1,), (2,), (3,)])) == (1, 2, 3)
    word = fundamental_bijection(CycleDecomposition([(6, 1), (8,)]))
    assert word == (6, 1, 8)
    assert rl_min(word) == 2
    cycle = fundamental_bijection(CycleDecomposition([(3, 5, 1, 4, 2)]))
    assert len(cycle) == 5
    assert rl_min(cycle) == 1


def test_word_to_cycles():
    assert word_to_cycles((6, 1, 8)).cycles == ((6, 1), (8,))
    assert len(word_to_cycles(())) == 0
    assert word_to_cycles((1, 2, 3, 4)).cycles == ((1,), (2,), (3,), (4,))
    with pytest.raises(InvalidObjectError):
        word_to_cycles((2, 2))


@pytest.mark.parametrize('m', range(7))
def test_fundamental_bijection_inverse(m):
    for p in enumerate_permutations(m):
        word = fundamental_bijection(p)
        assert word_to_cycles(word) == p
        assert rl_min(word) == len(p)
        assert CycleDecomposition.from_one_line(p.to_one_line()) == p
    for word in itertools.permutations(range(1, m + 1)):
        assert fundamental_bijection(word_to_cycles(word)) == word


def test_colored_permutation():
    p = ColoredCyclePermutation([((1,), 2), ((2,), 1)], 2)
    assert p.colors == (2, 1)
    assert p.color_counts() == (1, 1)
    assert p.cycles_of_color(1) == ((2,),)
    assert str(p) == '(1)@2(2)@1'
    with pytest.raises(OutOfRangeError):
        ColoredCyclePermutation([((1,), 3)], 2)
    with pytest.raises(InvalidObjectError):
        ColoredCyclePermutation([((2,), 1)], 2)


def test_colored_to_disposition():
    one_color = ColoredCyclePermutation(
        [((3, 1), 1), ((2,), 1), ((5, 4), 1)], 3)
    assert colored_to_disposition(one_color, 3) == Disposition(
        [(3, 1, 2, 5, 4), (), ()])
    p = ColoredCyclePermutation([((1,), 2), ((2,), 1)], 2)
    assert colored_to_disposition(p, 2) == Disposition([(2,), (1,)])
    assert colored_to_disposition(p, 3) == Disposition([(2,), (1,), ()])
    with pytest.raises(OutOfRangeError):
        colored_to_disposition(p, 1)


def test_disposition_to_colored():
    empty = disposition_to_colored(Disposition.empty(3))
    assert empty.m == 0
    assert str(empty) == '()'
    p = disposition_to_colored(SAMPLE_DISPOSITION)
    assert p.cycles_of_color(6) == ((6, 1), (8,))
    assert p.color_counts() == SAMPLE_DISPOSITION.rl_min_vector()
    assert str(p) == '(6 1)@6(2)@1(3)@7(7 4)@2(5)@4(8)@6(9)@1'
    assert colored_to_disposition(p) == SAMPLE_DISPOSITION


def test_rlmin_counts_cycles():
    for p in enumerate_colored(3, 2):
        assert colored_to_disposition(p, 2).rl_min_vector() == \
            p.color_counts()


@pytest.mark.parametrize('m', range(5))
@pytest.mark.parametrize('n', range(1, 4))
def test_correspondence_inverse(m, n):
    for p in enumerate_colored(m, n):
        assert disposition_to_colored(colored_to_disposition(p, n)) == p
    for d in enumerate_dispositions(m, n):
        assert colored_to_disposition(disposition_to_colored(d), n) == d


def test_enumerate_colored():
    assert len(list(enumerate_colored(0, 4))) == 1
    assert len(list(enumerate_colored(1, 3))) == 3
    assert [str(p) for p in enumerate_colored(2, 2)] == [
        '(1)(2)@1', '(1)@1(2)@2', '(1)@2(2)@1', '(1)(2)@2',
        '(2 1)@1', '(2 1)@2']
    for m in range(5):
        for n in range(1, 4):
            colored = list(enumerate_colored(m, n))
            assert len(colored) == rising_factorial(n, m)
            assert len(set(colored)) == len(colored)


def test_cycle_color_generating_function():
    context = VariableContext.indexed(3)
    assert cycle_color_generating_function(1, 3) == sum(
        (Polynomial.variable(context, name) for name in context),
        Polynomial.zero(context))
    assert str(cycle_color_generating_function(2, 2)) == (
        'x1^2 + 2*x1*x2 + x2^2 + x1 + x2')


@pytest.mark.parametrize('m', range(6))
@pytest.mark.parametrize('n', range(1, 4))
def test_cycle_color_closed_form(m, n):
    assert cycle_color_generating_function(m, n) == \
        disposition_polynomial(m, n)


def test_stirling_cycle_numbers():
    assert stirling_cycle_numbers(0) == (1,)
    assert stirling_cycle_numbers(4) == (0, 6, 11, 6, 1)
    for m in range(7):
        numbers = stirling_cycle_numbers(m)
        assert sum(numbers) == math.factorial(m)
        counts = [0] * (m + 1)
        for p in enumerate_permutations(m):
            counts[len(p)] += 1
        assert tuple(counts) == numbers
        polynomial = disposition_polynomial(m, 1)
        assert tuple(
            polynomial.coefficient((k,)) for k in range(m + 1)) == numbers


def test_parse_colored():
    p = disposition_to_colored(SAMPLE_DISPOSITION)
    assert parse_colored(str(p), 8) == p
    assert parse_colored(str(p)).n == 7
    assert parse_colored(' (1 3) (4)@2 (2)@1 ', 2).cycles_of_color(2) == (
        (3, 1), (4,))
    assert parse_colored('()', 2).m == 0
    assert parse_colored('()').n == 1
    assert parse_colored('{"m": 2, "n": 2, "cycles": [[2, 1]], '
                         '"colors": [2]}') == ColoredCyclePermutation(
        [((1, 2), 2)], 2)
    for text in ('(1 2)', '@1', '(1 x)@1', '(1)@1 x', '()(1)@1',
                 '{"cycles": [[1]]}', '{"n": 1, "cycles": [[1]], '
                 '"colors": []}', '{"n": 1, "cycles": [5], "colors": [1]}'):
        with pytest.raises(ParseError):
            parse_colored(text)
    with pytest.raises(OutOfRangeError):
        parse_colored('(1)@0')
    with pytest.raises(InvalidObjectError):
        parse_colored('(1)(1)@1')
    with pytest.raises(InvalidObjectError):
        parse_colored('(2)@1')
