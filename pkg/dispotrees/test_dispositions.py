"""
    dispotrees.test_dispositions
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Test suite for dispositions.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import collections

import numpy
import pytest

from . import (
    Disposition, InvalidObjectError, OutOfRangeError, ParseError, Polynomial,
    VariableContext, disposition_stats, enumerate_dispositions,
    extend_dispositions, gdes, generating_function,
    homogeneous_disposition_polynomial, insert_element, parse_disposition,
    rising_factorial, rl_min, rl_min_positions, sample_dispositions,
    sample_uniform)

SAMPLE_DISPOSITION = Disposition(
    [(2, 9), (7, 4), (), (5,), (), (6, 1, 8), (3,), ()])


def test_rl_min():
    assert rl_min((2, 9)) == 2
    assert rl_min((6, 1, 8)) == 2
    assert rl_min(()) == 0
    with pytest.raises(InvalidObjectError):
        rl_min((1, 2, 1))


def test_rl_min_positions():
    assert rl_min_positions((6, 1, 8)) == [1, 2]
    assert rl_min_positions((7, 4)) == [1]
    assert rl_min_positions((1, 2, 3)) == [0, 1, 2]
    with pytest.raises(InvalidObjectError):
        rl_min_positions((3, 3))


def test_sample_disposition():
    assert SAMPLE_DISPOSITION.m == 9
    assert SAMPLE_DISPOSITION.n == 8
    assert SAMPLE_DISPOSITION.rl_min_vector() == (2, 1, 0, 1, 0, 2, 1, 0)
    assert gdes(SAMPLE_DISPOSITION) == 2
    assert disposition_stats(SAMPLE_DISPOSITION) == (
        (2, 1, 0, 1, 0, 2, 1, 0), 2)
    assert SAMPLE_DISPOSITION.to_text() == '[2 9|7 4||5||6 1 8|3|]'
    assert parse_disposition('[2 9|7 4||5||6 1 8|3|]') == SAMPLE_DISPOSITION
    assert SAMPLE_DISPOSITION.segment(6) == (6, 1, 8)
    assert SAMPLE_DISPOSITION.segment_of(3) == 7


def test_gdes():
    assert gdes(Disposition([(1,), (2,), (3,)])) == 0
    assert gdes(Disposition([(3, 2, 1)])) == 2
    assert gdes(Disposition.empty(4)) == 0


def test_invalid():
    with pytest.raises(InvalidObjectError):
        Disposition([(1, 3)])
    with pytest.raises(InvalidObjectError):
        Disposition([(1,), (1,)])
    with pytest.raises(InvalidObjectError):
        Disposition([])
    with pytest.raises(InvalidObjectError):
        Disposition([('1',)])
    with pytest.raises(OutOfRangeError):
        Disposition.empty(0)


def test_parse():
    assert parse_disposition('[]') == Disposition.empty(1)
    assert parse_disposition('[|]') == Disposition.empty(2)
    data = '{"m": 2, "n": 2, "segments": [[2, 1], []]}'
    assert parse_disposition(data) == Disposition([(2, 1), ()])
    assert parse_disposition(
        '{"segments": [[1]], "rng": "PCG64"}') == Disposition([(1,)])
    for text in ('2 1', '[1 x]', '{"m": 1', '{"segs": []}'):
        with pytest.raises(ParseError):
            parse_disposition(text)
    with pytest.raises(InvalidObjectError):
        parse_disposition('[1 1]')
    with pytest.raises(InvalidObjectError):
        parse_disposition('{"m": 3, "n": 1, "segments": [[1]]}')


def test_insert_element():
    d = Disposition([(2, 1), ()])
    extended = insert_element(d, 1, 2)
    assert extended.segments == ((2, 1, 3), ())
    assert rl_min(d.segment(1)) == 1
    assert rl_min(extended.segment(1)) == 2
    assert insert_element(d, 2, 0).segments == ((2, 1), (3,))
    assert insert_element(d, 1, 0).segments == ((3, 2, 1), ())
    with pytest.raises(OutOfRangeError):
        insert_element(d, 3, 0)
    with pytest.raises(OutOfRangeError):
        insert_element(d, 2, 1)
    with pytest.raises(OutOfRangeError):
        insert_element(d, 1, -1)


def test_insertion_cases():
    for d in enumerate_dispositions(3, 2):
        before = d.rl_min_vector()
        for segment in range(1, 3):
            appended = d.insert(segment, len(d.segment(segment)))
            after = list(before)
            after[segment - 1] += 1
            assert appended.rl_min_vector() == tuple(after)
            if d.segment(segment):
                assert d.insert(segment, 0).rl_min_vector() == before


def test_enumerate_small():
    assert list(enumerate_dispositions(0, 3)) == [Disposition.empty(3)]
    assert list(enumerate_dispositions(1, 2)) == [
        Disposition([(1,), ()]), Disposition([(), (1,)])]
    assert [d.to_text() for d in enumerate_dispositions(2, 2)] == [
        '[2 1|]', '[1 2|]', '[1|2]', '[2|1]', '[|2 1]', '[|1 2]']


@pytest.mark.parametrize('m', range(7))
@pytest.mark.parametrize('n', range(1, 5))
def test_enumerate_count(m, n):
    dispositions = list(enumerate_dispositions(m, n))
    assert len(dispositions) == rising_factorial(n, m)
    assert len(set(dispositions)) == len(dispositions)


@pytest.mark.parametrize('m', range(6))
@pytest.mark.parametrize('n', range(1, 5))
def test_enumerate_invariants(m, n):
    for d in enumerate_dispositions(m, n):
        assert Disposition(d.segments) == d
        assert d.m == m and d.n == n
        assert d.gdes() == m - sum(d.rl_min_vector())
        assert all(
            count <= len(segment)
            for count, segment in zip(d.rl_min_vector(), d.segments))


@pytest.mark.parametrize('m', range(1, 5))
@pytest.mark.parametrize('n', range(1, 4))
def test_insertion_bijection(m, n):
    inserted = [
        d.insert(segment, position)
        for d in enumerate_dispositions(m - 1, n)
        for segment, position in d.slots()]
    assert len(inserted) == rising_factorial(n, m)
    assert set(inserted) == set(enumerate_dispositions(m, n))


def test_extend_dispositions():
    seeds = list(enumerate_dispositions(2, 3))
    assert [
        d for seed in seeds for d in extend_dispositions(seed, 4)
    ] == list(enumerate_dispositions(4, 3))
    assert list(extend_dispositions(seeds[0], 2)) == [seeds[0]]
    with pytest.raises(OutOfRangeError):
        list(extend_dispositions(seeds[0], 1))


def test_generating_function():
    context = VariableContext.indexed(2, ('t',))
    x1, x2, t = (Polynomial.variable(context, name) for name in context)
    assert generating_function(1, 2) == x1 + x2
    context = VariableContext.indexed(1, ('t',))
    x1, t = (Polynomial.variable(context, name) for name in context)
    assert generating_function(2, 1) == x1 ** 2 + x1 * t


@pytest.mark.parametrize('m', range(5))
@pytest.mark.parametrize('n', range(1, 4))
def test_generating_function_closed_form(m, n):
    assert generating_function(m, n) == \
        homogeneous_disposition_polynomial(m, n)


def test_sample_uniform():
    assert sample_uniform(0, 3, 42) == Disposition.empty(3)
    assert sample_uniform(5, 3, 42) == sample_uniform(5, 3, 42)
    assert list(sample_dispositions(4, 2, 7, 10)) == list(
        sample_dispositions(4, 2, 7, 10))
    outcomes = set(sample_uniform(1, 2, seed) for seed in range(50))
    assert outcomes == {Disposition([(1,), ()]), Disposition([(), (1,)])}
    with pytest.raises(OutOfRangeError):
        sample_uniform(-1, 2, 0)


@pytest.mark.parametrize('seed', [-1, 2.5, '7', True])
def test_sample_invalid_seed(seed):
    with pytest.raises(OutOfRangeError):
        sample_uniform(3, 2, seed)
    with pytest.raises(OutOfRangeError):
        list(sample_dispositions(3, 2, seed, 2))


def test_sample_uniformity():
    samples = 24000
    family = set(enumerate_dispositions(3, 2))
    counts = collections.Counter(sample_dispositions(3, 2, 2026, samples))
    assert set(counts) == family
    p = 1 / len(family)
    deviation = numpy.sqrt(samples * p * (1 - p))
    assert all(
        abs(count - samples * p) <= 5 * deviation
        for count in counts.values())
