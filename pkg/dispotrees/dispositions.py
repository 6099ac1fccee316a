"""
    dispotrees.dispositions
    ~~~~~~~~~~~~~~~~~~~~~~~

    Dispositions of ``[m]`` into ``n`` linearly ordered segments,
    their statistics, enumeration by insertion and uniform sampling.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import json
from collections import namedtuple

import numpy

from . import _check_range, _check_status, constants
from .polynomials import Polynomial, VariableContext

#: Name of the pseudo-random bit generator used for sampling.
RNG_ALGORITHM = 'PCG64'

DispositionStats = namedtuple('DispositionStats', ['rlmin', 'gdes'])
DispositionStats.__doc__ = '''Statistics of a :class:`Disposition`.

``rlmin`` is the tuple of right-to-left minima counts, one per segment,
and ``gdes`` the total number of general descents.
'''


def _check_distinct(segment):
    if len(set(segment)) != len(segment):
        _check_status(
            constants.STATUS_INVALID_OBJECT,
            'duplicate entries in %r' % (segment,))


def rl_min_positions(segment):
    """Return the indexes of the right-to-left minima of :obj:`segment`,
    from left to right.

    An entry is a right-to-left minimum
    if it is smaller than every entry on its right.

    :raises: :exc:`InvalidObjectError` on duplicate entries.

    """
    segment = tuple(segment)
    _check_distinct(segment)
    positions = []
    smallest = None
    for index in range(len(segment) - 1, -1, -1):
        if smallest is None or segment[index] < smallest:
            positions.append(index)
            smallest = segment[index]
    positions.reverse()
    return positions


def rl_min(segment):
    """Return the number of right-to-left minima of :obj:`segment`."""
    return len(rl_min_positions(segment))


def _general_descents(segment):
    count = 0
    smallest = None
    for entry in reversed(segment):
        if smallest is not None and entry > smallest:
            count += 1
        else:
            smallest = entry
    return count


class Disposition(object):
    """A disposition of ``[m]`` into ``n`` segments:
    ``n`` sequences, possibly empty,
    whose concatenation is a permutation of ``1, …, m``.

    Dispositions are immutable values.
    Elements and segment indexes are 1-based.

    :param segments: An iterable of ``n >= 1`` integer sequences.
    :raises: :exc:`InvalidObjectError` if the segments do not contain
        every element of ``[m]`` exactly once.

    """
    def __init__(self, segments):
        segments = tuple(tuple(segment) for segment in segments)
        if not segments:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'a disposition needs at least one segment')
        elements = [element for segment in segments for element in segment]
        for element in elements:
            if isinstance(element, bool) or not isinstance(element, int):
                _check_status(
                    constants.STATUS_INVALID_OBJECT,
                    'element %r is not an integer' % (element,))
        if sorted(elements) != list(range(1, len(elements) + 1)):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'segments %r do not contain 1..%d exactly once' % (
                    segments, len(elements)))
        self._segments = segments
        self._m = len(elements)

    @classmethod
    def empty(cls, n):
        """Return the unique disposition of the empty set into
        :obj:`n` segments.

        """
        _check_range(n, 'n', 1)
        return cls(((),) * n)

    @property
    def m(self):
        """The number of placed elements."""
        return self._m

    @property
    def n(self):
        """The number of segments."""
        return len(self._segments)

    @property
    def segments(self):
        """The tuple of segments, each a tuple of integers."""
        return self._segments

    def segment(self, index):
        """Return segment number :obj:`index`, counting from 1."""
        _check_range(index, 'segment', 1, self.n)
        return self._segments[index - 1]

    def segment_of(self, element):
        """Return the index of the segment containing :obj:`element`."""
        _check_range(element, 'element', 1, self._m)
        for index, segment in enumerate(self._segments, 1):
            if element in segment:
                return index

    def rl_min_vector(self):
        """Return the right-to-left minima count of every segment."""
        return tuple(rl_min(segment) for segment in self._segments)

    def gdes(self):
        """Return the total number of general descents."""
        return sum(_general_descents(segment) for segment in self._segments)

    def stats(self):
        """Return the :class:`DispositionStats` of this disposition."""
        return DispositionStats(self.rl_min_vector(), self.gdes())

    def insert(self, segment, position):
        """Return a new disposition of ``[m + 1]`` with ``m + 1`` inserted
        in segment :obj:`segment` before the entry at :obj:`position`
        (at the end when :obj:`position` is the segment length).

        """
        _check_range(segment, 'segment', 1, self.n)
        target = self._segments[segment - 1]
        _check_range(position, 'position', 0, len(target))
        segments = list(self._segments)
        segments[segment - 1] = (
            target[:position] + (self._m + 1,) + target[position:])
        result = object.__new__(Disposition)
        result._segments = tuple(segments)
        result._m = self._m + 1
        return result

    def slots(self):
        """Yield every ``(segment, position)`` insertion slot,
        segments left to right and positions front to back.

        There are ``n + m`` of them.

        """
        for index, segment in enumerate(self._segments, 1):
            for position in range(len(segment) + 1):
                yield index, position

    def __iter__(self):
        return iter(self._segments)

    def __eq__(self, other):
        if not isinstance(other, Disposition):
            return NotImplemented
        return self._segments == other._segments

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._segments)

    def to_text(self):
        """Return the one-line text form, such as ``[2 9|7 4||5]``."""
        return '[%s]' % '|'.join(
            ' '.join(str(element) for element in segment)
            for segment in self._segments)

    __str__ = to_text

    def __repr__(self):
        return 'Disposition(%r)' % (self._segments,)

    def to_json(self):
        """Return a JSON-compatible dict."""
        return {
            'm': self._m, 'n': self.n,
            'segments': [list(segment) for segment in self._segments]}


def gdes(d):
    """Return the number of general descents of :obj:`d`:
    positions whose entry is larger than a later entry of its segment.

    """
    return d.gdes()


def disposition_stats(d):
    """Return the :class:`DispositionStats` of :obj:`d`."""
    return d.stats()


def insert_element(d, segment, position):
    """Insert ``m + 1`` in :obj:`d`. See :meth:`Disposition.insert`.

    :raises: :exc:`OutOfRangeError` on invalid segment or position.

    """
    return d.insert(segment, position)


def extend_dispositions(d, m):
    """Yield every disposition of ``[m]`` obtained from :obj:`d`
    by inserting ``d.m + 1, …, m`` one after the other.

    Slots are scanned segments left to right and positions front to back,
    the last inserted element varying fastest.

    """
    _check_range(m, 'm', d.m)
    if d.m == m:
        yield d
        return
    for segment, position in d.slots():
        for extended in extend_dispositions(d.insert(segment, position), m):
            yield extended


def enumerate_dispositions(m, n):
    """Yield every disposition of ``[m]`` into :obj:`n` segments once,
    by repeated insertion from the empty disposition.

    The stream has ``n (n + 1) … (n + m - 1)`` items.

    """
    _check_range(m, 'm', 0)
    return extend_dispositions(Disposition.empty(n), m)


def generating_function(m, n, dispositions=None):
    """Return the sum of ``t^gdes(D) prod_i x_i^RLmin(D_i)``
    over every disposition of ``[m]`` into :obj:`n` segments,
    in the context ``x1, …, xn, t``.

    :param dispositions:
        An optional iterable replacing the full enumeration,
        such as one part of a partitioned stream.

    """
    if dispositions is None:
        dispositions = enumerate_dispositions(m, n)
    context = VariableContext.indexed(n, (constants.VARIABLE_T,))
    return Polynomial.from_terms(context, (
        (d.rl_min_vector() + (d.gdes(),), 1) for d in dispositions))


def rlmin_generating_function(m, n, dispositions=None):
    """Return the sum of ``prod_i x_i^RLmin(D_i)``
    over every disposition of ``[m]`` into :obj:`n` segments,
    in the context ``x1, …, xn``.

    """
    if dispositions is None:
        dispositions = enumerate_dispositions(m, n)
    context = VariableContext.indexed(n)
    return Polynomial.from_terms(context, (
        (d.rl_min_vector(), 1) for d in dispositions))


def make_generator(seed):
    """Return a seeded :class:`numpy.random.Generator`.

    :raises: :exc:`OutOfRangeError` unless :obj:`seed` is a non-negative
        integer.

    """
    _check_range(seed, 'seed', 0)
    return numpy.random.Generator(numpy.random.PCG64(seed))


def _random_disposition(m, n, generator):
    segments = [[] for _ in range(n)]
    for element in range(1, m + 1):
        slot = int(generator.integers(n + element - 1))
        for segment in segments:
            if slot <= len(segment):
                segment.insert(slot, element)
                break
            slot -= len(segment) + 1
    return Disposition(segments)


def sample_uniform(m, n, seed):
    """Return a uniformly random disposition of ``[m]`` into :obj:`n`
    segments.

    Elements ``1, …, m`` are inserted in turn,
    element ``k`` in one of the ``n + k - 1`` slots chosen uniformly,
    so that every disposition has probability ``1 / (n)^m``.
    The result only depends on ``(seed, m, n)``.

    """
    _check_range(m, 'm', 0)
    _check_range(n, 'n', 1)
    return _random_disposition(m, n, make_generator(seed))


def sample_dispositions(m, n, seed, count):
    """Yield :obj:`count` independent uniform dispositions
    drawn from a single generator seeded with :obj:`seed`.

    """
    _check_range(m, 'm', 0)
    _check_range(n, 'n', 1)
    _check_range(count, 'count', 0)
    generator = make_generator(seed)
    for _ in range(count):
        yield _random_disposition(m, n, generator)


def disposition_from_json(data):
    """Build a :class:`Disposition` from its JSON dict.

    :raises: :exc:`ParseError` on malformed data.

    """
    try:
        segments = data['segments']
        m, n = data.get('m'), data.get('n')
        disposition = Disposition(segments)
    except (KeyError, TypeError, AttributeError) as exception:
        _check_status(
            constants.STATUS_PARSE_ERROR,
            'malformed disposition: %s' % exception)
    if m is not None and m != disposition.m or (
            n is not None and n != disposition.n):
        _check_status(
            constants.STATUS_INVALID_OBJECT,
            'declared m=%r, n=%r do not match segments %r' % (
                m, n, disposition.segments))
    return disposition


def parse_disposition(text):
    """Parse a disposition from its text form ``[2 9|7 4||5]``
    or from a JSON document.

    :raises: :exc:`ParseError` on malformed input.

    """
    text = text.strip()
    if text.startswith('{'):
        try:
            data = json.loads(text)
        except ValueError as exception:
            _check_status(
                constants.STATUS_PARSE_ERROR, 'invalid JSON: %s' % exception)
        return disposition_from_json(data)
    if not (text.startswith('[') and text.endswith(']')):
        _check_status(
            constants.STATUS_PARSE_ERROR,
            'a disposition is written between brackets, got %r' % text)
    try:
        segments = [
            [int(element) for element in part.split()]
            for part in text[1:-1].split('|')]
    except ValueError:
        _check_status(
            constants.STATUS_PARSE_ERROR, 'non-integer entry in %r' % text)
    return Disposition(segments)
