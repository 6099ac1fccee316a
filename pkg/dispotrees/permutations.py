"""
    dispotrees.permutations
    ~~~~~~~~~~~~~~~~~~~~~~~

    Cycle decompositions, the fundamental bijection between permutations
    and words, and permutations whose cycles carry colors,
    which correspond to dispositions.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import itertools
import json
import re

from . import _check_range, _check_status, constants
from .dispositions import Disposition, rl_min_positions
from .polynomials import Polynomial, VariableContext

COLORED_RE = re.compile(r'\s*(?:\(([^()]*)\)|@\s*(\d+))')


def standard_word(cycle):
    """Return the rotation of :obj:`cycle` ending at its minimum.

    :param cycle: A nonempty sequence of distinct positive integers,
        read cyclically.
    :raises: :exc:`InvalidObjectError` on empty cycles or duplicates.

    """
    cycle = tuple(cycle)
    if not cycle:
        _check_status(constants.STATUS_INVALID_OBJECT, 'empty cycle')
    if len(set(cycle)) != len(cycle):
        _check_status(
            constants.STATUS_INVALID_OBJECT,
            'duplicate entries in cycle %r' % (cycle,))
    index = cycle.index(min(cycle))
    return cycle[index + 1:] + cycle[:index + 1]


class CycleDecomposition(object):
    """A set of disjoint cycles over a finite set of positive integers.

    Cycles are stored as standard words (minimum last)
    sorted by increasing minima,
    so two decompositions of the same permutation compare equal
    whatever rotation the cycles were given in.

    """
    def __init__(self, cycles):
        words = [standard_word(cycle) for cycle in cycles]
        elements = [element for word in words for element in word]
        for element in elements:
            if isinstance(element, bool) or not isinstance(element, int) \
                    or element < 1:
                _check_status(
                    constants.STATUS_INVALID_OBJECT,
                    'cycle entry %r is not a positive integer' % (element,))
        if len(set(elements)) != len(elements):
            _check_status(
                constants.STATUS_INVALID_OBJECT, 'cycles are not disjoint')
        self._cycles = tuple(sorted(words, key=lambda word: word[-1]))

    @classmethod
    def from_one_line(cls, images):
        """Build the decomposition of the permutation of ``[m]``
        sending ``i`` to ``images[i - 1]``.

        """
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                '%r is not a permutation' % (images,))
        seen = set()
        cycles = []
        for start in range(1, len(images) + 1):
            if start in seen:
                continue
            cycle = []
            element = start
            while element not in seen:
                seen.add(element)
                cycle.append(element)
                element = images[element - 1]
            cycles.append(cycle)
        return cls(cycles)

    @property
    def cycles(self):
        """The standard words, sorted by increasing minima."""
        return self._cycles

    @property
    def m(self):
        """The number of elements moved or fixed by the cycles."""
        return sum(len(cycle) for cycle in self._cycles)

    def support(self):
        """Return the set of elements covered by the cycles."""
        return set(element for cycle in self._cycles for element in cycle)

    def to_one_line(self):
        """Return the images of ``1, …, m``.

        :raises: :exc:`InvalidObjectError` unless the support is ``[m]``.

        """
        if self.support() != set(range(1, self.m + 1)):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'cycles do not cover 1..%d' % self.m)
        images = [0] * self.m
        for cycle in self._cycles:
            for index, element in enumerate(cycle):
                images[element - 1] = cycle[(index + 1) % len(cycle)]
        return tuple(images)

    def __len__(self):
        return len(self._cycles)

    def __iter__(self):
        return iter(self._cycles)

    def __eq__(self, other):
        if not isinstance(other, CycleDecomposition):
            return NotImplemented
        return self._cycles == other._cycles

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._cycles)

    def to_text(self):
        if not self._cycles:
            return '()'
        return ''.join(
            '(%s)' % ' '.join(str(element) for element in cycle)
            for cycle in self._cycles)

    __str__ = to_text

    def __repr__(self):
        return 'CycleDecomposition(%r)' % (self._cycles,)


def fundamental_bijection(p):
    """Return the word obtained by writing the cycles of :obj:`p`
    minimum last, in increasing order of minima,
    and erasing the parentheses.

    The right-to-left minima of the word are exactly the cycle minima.

    """
    return tuple(element for cycle in p.cycles for element in cycle)


def word_to_cycles(w):
    """Cut :obj:`w` after each right-to-left minimum.

    This inverts :func:`fundamental_bijection`.

    :raises: :exc:`InvalidObjectError` on duplicate entries.

    """
    w = tuple(w)
    cycles = []
    start = 0
    for position in rl_min_positions(w):
        cycles.append(w[start:position + 1])
        start = position + 1
    return CycleDecomposition(cycles)


class ColoredCyclePermutation(object):
    """A permutation of ``[m]`` whose cycles are each colored
    by one of ``n`` colors.

    :param pairs: An iterable of ``(cycle, color)`` pairs.
    :param n: The number of available colors.
    :raises:
        :exc:`InvalidObjectError` if the cycles do not cover ``[m]``,
        :exc:`OutOfRangeError` if a color is outside ``[n]``.

    """
    def __init__(self, pairs, n):
        _check_range(n, 'n', 1)
        pairs = [(standard_word(cycle), color) for cycle, color in pairs]
        base = CycleDecomposition(cycle for cycle, _ in pairs)
        if base.support() != set(range(1, base.m + 1)):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'cycles do not cover 1..%d' % base.m)
        color_of = dict(pairs)
        for color in color_of.values():
            _check_range(color, 'color', 1, n)
        self._base = base
        self._colors = tuple(color_of[cycle] for cycle in base.cycles)
        self._n = n

    @property
    def base(self):
        """The underlying :class:`CycleDecomposition`."""
        return self._base

    @property
    def m(self):
        return self._base.m

    @property
    def n(self):
        return self._n

    @property
    def cycles(self):
        return self._base.cycles

    @property
    def colors(self):
        """The colors, aligned with :attr:`cycles`."""
        return self._colors

    def cycles_of_color(self, color):
        """Return the cycles colored :obj:`color`, by increasing minima."""
        _check_range(color, 'color', 1, self._n)
        return tuple(
            cycle for cycle, cycle_color in zip(self.cycles, self._colors)
            if cycle_color == color)

    def color_counts(self):
        """Return the number of cycles of each color ``1, …, n``."""
        counts = [0] * self._n
        for color in self._colors:
            counts[color - 1] += 1
        return tuple(counts)

    def __eq__(self, other):
        if not isinstance(other, ColoredCyclePermutation):
            return NotImplemented
        return (self._base, self._colors, self._n) == (
            other._base, other._colors, other._n)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._base, self._colors, self._n))

    def to_text(self):
        """Return the text form, such as ``(3 1)@2(2)@1``.

        Each ``@c`` colors the run of cycles written since the previous
        one. The empty permutation is ``()``.

        """
        if not self._colors:
            return '()'
        parts = []
        for index, (cycle, color) in enumerate(
                zip(self.cycles, self._colors)):
            parts.append('(%s)' % ' '.join(str(element) for element in cycle))
            if index + 1 == len(self._colors) or \
                    self._colors[index + 1] != color:
                parts.append('@%d' % color)
        return ''.join(parts)

    __str__ = to_text

    def __repr__(self):
        return 'ColoredCyclePermutation(%r, n=%d)' % (self.to_text(), self._n)

    def to_json(self):
        return {
            'm': self.m, 'n': self._n,
            'cycles': [list(cycle) for cycle in self.cycles],
            'colors': list(self._colors)}


def colored_to_disposition(p, n=None):
    """Return the disposition whose segment ``i`` is the fundamental word
    of the cycles of :obj:`p` colored ``i``.

    The right-to-left minima of segment ``i`` count the cycles of color
    ``i``.

    :param n: The number of segments, :obj:`p.n` by default.
    :raises: :exc:`OutOfRangeError` if a color exceeds :obj:`n`.

    """
    if n is None:
        n = p.n
    _check_range(n, 'n', 1)
    for color in p.colors:
        _check_range(color, 'color', 1, n)
    segments = [[] for _ in range(n)]
    for cycle, color in zip(p.cycles, p.colors):
        segments[color - 1].extend(cycle)
    return Disposition(segments)


def disposition_to_colored(d):
    """Cut every segment of :obj:`d` into cycles
    and color them with the segment index.

    This inverts :func:`colored_to_disposition`.

    """
    pairs = []
    for color, segment in enumerate(d.segments, 1):
        pairs.extend(
            (cycle, color) for cycle in word_to_cycles(segment).cycles)
    return ColoredCyclePermutation(pairs, d.n)


def enumerate_permutations(m):
    """Yield the cycle decompositions of every permutation of ``[m]``,
    in lexicographic order of one-line notation.

    """
    _check_range(m, 'm', 0)
    for images in itertools.permutations(range(1, m + 1)):
        yield CycleDecomposition.from_one_line(images)


def enumerate_colored(m, n):
    """Yield every permutation of ``[m]`` with cycles colored in ``[n]``.

    Permutations come in lexicographic one-line order,
    and for each one the colorings of its cycles, sorted by minima,
    in mixed-radix order (last cycle fastest).
    The stream has ``n (n + 1) … (n + m - 1)`` items.

    """
    _check_range(n, 'n', 1)
    for base in enumerate_permutations(m):
        for colors in itertools.product(range(1, n + 1), repeat=len(base)):
            yield ColoredCyclePermutation(zip(base.cycles, colors), n)


def cycle_color_generating_function(m, n, colored=None):
    """Return the sum of ``prod_i x_i^c_i`` over colored permutations
    of ``[m]``, where ``c_i`` counts the cycles of color ``i``,
    in the context ``x1, …, xn``.

    """
    if colored is None:
        colored = enumerate_colored(m, n)
    context = VariableContext.indexed(n)
    return Polynomial.from_terms(context, (
        (p.color_counts(), 1) for p in colored))


def stirling_cycle_numbers(m):
    """Return ``(c(m, 0), …, c(m, m))``, where ``c(m, k)`` counts
    the permutations of ``[m]`` with ``k`` cycles.

    Computed by the recurrence ``c(j + 1, k) = c(j, k - 1) + j c(j, k)``.

    """
    _check_range(m, 'm', 0)
    row = [1]
    for j in range(m):
        row = [
            (row[k - 1] if k >= 1 else 0) + (j * row[k] if k <= j else 0)
            for k in range(j + 2)]
    return tuple(row)


def colored_from_json(data):
    """Build a :class:`ColoredCyclePermutation` from its JSON dict.

    :raises: :exc:`ParseError` on malformed data.

    """
    try:
        cycles, colors, n = data['cycles'], data['colors'], data['n']
        if len(cycles) != len(colors):
            raise ValueError('%d cycles but %d colors' % (
                len(cycles), len(colors)))
    except (KeyError, TypeError, AttributeError, ValueError) as exception:
        _check_status(
            constants.STATUS_PARSE_ERROR,
            'malformed colored permutation: %s' % exception)
    try:
        p = ColoredCyclePermutation(zip(cycles, colors), n)
    except TypeError as exception:
        _check_status(
            constants.STATUS_PARSE_ERROR,
            'malformed colored permutation: %s' % exception)
    if data.get('m') not in (None, p.m):
        _check_status(
            constants.STATUS_INVALID_OBJECT,
            'declared m=%r but the cycles cover %d elements' % (
                data['m'], p.m))
    return p


def parse_colored(text, n=None):
    """Parse a colored permutation from its text form or a JSON document.

    :param n:
        The number of colors for text input;
        defaults to the largest color used, and to 1 when there is none.
    :raises: :exc:`ParseError` on malformed input.

    """
    text = text.strip()
    if text.startswith('{'):
        try:
            data = json.loads(text)
        except ValueError as exception:
            _check_status(
                constants.STATUS_PARSE_ERROR, 'invalid JSON: %s' % exception)
        p = colored_from_json(data)
        if n is not None and n != p.n:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'expected %d colors, got n=%d' % (n, p.n))
        return p
    pairs = []
    if text != '()':
        pending = []
        position = 0
        while position < len(text):
            match = COLORED_RE.match(text, position)
            if match is None or match.end() == position:
                _check_status(
                    constants.STATUS_PARSE_ERROR,
                    'unexpected %r' % text[position:])
            position = match.end()
            cycle, color = match.groups()
            if cycle is not None:
                try:
                    entries = [int(entry) for entry in cycle.split()]
                except ValueError:
                    entries = []
                if not entries:
                    _check_status(
                        constants.STATUS_PARSE_ERROR,
                        'invalid cycle (%s)' % cycle)
                pending.append(entries)
            elif pending:
                pairs.extend((entries, int(color)) for entries in pending)
                pending = []
            else:
                _check_status(
                    constants.STATUS_PARSE_ERROR,
                    '@%s colors no cycle' % color)
        if pending or not pairs:
            _check_status(
                constants.STATUS_PARSE_ERROR, 'uncolored cycles in %r' % text)
    if n is None:
        n = max([color for _, color in pairs] or [1])
    return ColoredCyclePermutation(pairs, n)
