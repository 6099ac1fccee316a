"""
    dispotrees.bijections
    ~~~~~~~~~~~~~~~~~~~~~

    Prüfer marks of plane trees and the bijection between plane trees
    on ``[n]`` and dispositions of ``[n - 1]`` into ``n`` segments,
    together with its order-forgetting version
    between rooted trees and decompositions.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import heapq
import itertools

from . import _check_range, _check_status, constants
from .dispositions import Disposition, sample_dispositions
from .plane_trees import PlaneTree


class MarkTable(object):
    """A bijection between vertex labels ``[n]`` and marks ``0, …, n - 1``.

    :param marks: A mapping of labels to marks.
    :raises: :exc:`InvalidObjectError` if the mapping is not a bijection.

    """
    def __init__(self, marks):
        marks = dict(marks)
        n = len(marks)
        if set(marks) != set(range(1, n + 1)) or \
                set(marks.values()) != set(range(n)):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                '%r is not a bijection from 1..%d to 0..%d' % (
                    marks, n, n - 1))
        self._marks = marks
        self._vertices = dict((mark, v) for v, mark in marks.items())

    @property
    def n(self):
        return len(self._marks)

    def mark(self, v):
        """Return the mark of vertex :obj:`v`."""
        return self._marks[_check_range(v, 'vertex', 1, self.n)]

    def vertex(self, mark):
        """Return the vertex carrying :obj:`mark`."""
        return self._vertices[_check_range(mark, 'mark', 0, self.n - 1)]

    def as_dict(self):
        return dict(self._marks)

    def __eq__(self, other):
        if not isinstance(other, MarkTable):
            return NotImplemented
        return self._marks == other._marks

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._marks.items()))

    def to_text(self):
        """Return ``vertex_mark`` pairs by decreasing mark,
        such as ``6_5 4_4 3_3 1_2 5_1 2_0``.

        """
        return ' '.join(
            '%d_%d' % (self._vertices[mark], mark)
            for mark in range(self.n - 1, -1, -1))

    __str__ = to_text

    def __repr__(self):
        return 'MarkTable(%r)' % self.to_text()

    def to_json(self):
        return {'marks': dict(
            (str(v), mark) for v, mark in sorted(self._marks.items()))}


class Decomposition(object):
    """``n`` disjoint unordered blocks, possibly empty, covering ``[m]``.

    :raises: :exc:`InvalidObjectError` if the blocks overlap
        or do not cover ``[m]``.

    """
    def __init__(self, blocks):
        blocks = tuple(frozenset(block) for block in blocks)
        if not blocks:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'a decomposition needs at least one block')
        m = sum(len(block) for block in blocks)
        if frozenset().union(*blocks) != frozenset(range(1, m + 1)):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'blocks do not cover 1..%d exactly once' % m)
        self._blocks = blocks
        self._m = m

    @property
    def m(self):
        return self._m

    @property
    def n(self):
        return len(self._blocks)

    @property
    def blocks(self):
        """The tuple of blocks, each a :class:`frozenset`."""
        return self._blocks

    def lift(self):
        """Return the disposition listing every block in increasing order."""
        return Disposition(sorted(block) for block in self._blocks)

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._blocks == other._blocks

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._blocks)

    def to_text(self):
        """Return the text form, such as ``{|1 4||5|2 3|}``."""
        return '{%s}' % '|'.join(
            ' '.join(str(element) for element in sorted(block))
            for block in self._blocks)

    __str__ = to_text

    def __repr__(self):
        return 'Decomposition(%r)' % self.to_text()

    def to_json(self):
        return {
            'm': self._m, 'n': self.n,
            'blocks': [sorted(block) for block in self._blocks]}


def prufer_marks(t):
    """Return the Prüfer marks of :obj:`t`.

    The largest vertex without remaining children is removed and marked
    ``n - 1``, then the next one ``n - 2``, and so on;
    the root is the last vertex left and is marked ``0``.

    :param t: A :class:`PlaneTree` or :class:`RootedTree`.

    """
    remaining = [t.degree(v) for v in range(1, t.n + 1)]
    leaves = [-v for v in range(1, t.n + 1) if not remaining[v - 1]]
    heapq.heapify(leaves)
    marks = {}
    for mark in range(t.n - 1, -1, -1):
        v = -heapq.heappop(leaves)
        marks[v] = mark
        parent = t.parent(v)
        if parent is not None:
            remaining[parent - 1] -= 1
            if not remaining[parent - 1]:
                heapq.heappush(leaves, -parent)
    return MarkTable(marks)


def phi(t):
    """Return the disposition whose segment ``i`` lists the marks of the
    children of vertex ``i``, in the tree's child order.

    Segment ``i`` has as many entries as ``i`` has children
    and as many right-to-left minima as ``i`` has younger children;
    the element 1 lies in the segment of the root when ``n >= 2``.

    """
    marks = prufer_marks(t)
    return Disposition(
        [marks.mark(child) for child in t.children(v)]
        for v in range(1, t.n + 1))


def _check_tree_sized(d):
    if d.m != d.n - 1:
        _check_status(
            constants.STATUS_INVALID_OBJECT,
            'expected a disposition of [%d] into %d segments, got m=%d' % (
                d.n - 1, d.n, d.m))


def _pop_rightmost_empty(empty, counter):
    # empty holds negated segment indexes
    if not empty:
        _check_status(
            constants.STATUS_INVALID_OBJECT,
            'no unmarked empty segment left for mark %d' % counter)
    return -heapq.heappop(empty)


def marks_from_disposition(d):
    """Recover the Prüfer marks of ``phi_inverse(d)`` from :obj:`d` alone.

    For ``c = n - 1, …, 1`` the rightmost unmarked empty segment gets
    mark ``c`` and ``c`` is deleted from the segment containing it;
    the last unmarked segment gets ``0``.

    :param d: A disposition of ``[n - 1]`` into ``n`` segments.
    :raises: :exc:`InvalidObjectError` for any other size.

    """
    _check_tree_sized(d)
    n = d.n
    sizes = [len(segment) for segment in d.segments]
    where = dict(
        (element, index)
        for index, segment in enumerate(d.segments, 1)
        for element in segment)
    empty = [-index for index in range(1, n + 1) if not sizes[index - 1]]
    heapq.heapify(empty)
    marks = {}
    for counter in range(n - 1, 0, -1):
        index = _pop_rightmost_empty(empty, counter)
        marks[index] = counter
        holder = where[counter]
        sizes[holder - 1] -= 1
        if not sizes[holder - 1]:
            heapq.heappush(empty, -holder)
    (last,) = set(range(1, n + 1)) - set(marks)
    marks[last] = 0
    return MarkTable(marks)


def phi_inverse(d):
    """Return the plane tree :obj:`T` with ``phi(T) == d``.

    The root is the vertex marked 0 and the children of vertex ``v``
    are the vertices whose marks are listed in segment ``v``, in order.

    :param d: A disposition of ``[n - 1]`` into ``n`` segments.
    :raises: :exc:`InvalidObjectError` for any other size.

    """
    marks = marks_from_disposition(d)
    children = dict(
        (v, [marks.vertex(mark) for mark in segment])
        for v, segment in enumerate(d.segments, 1))
    return PlaneTree(marks.vertex(0), children)


def tree_to_decomposition(t):
    """Return the decomposition whose block ``i`` is the set of marks of
    the children of vertex ``i``; child order is disregarded.

    """
    marks = prufer_marks(t)
    return Decomposition(
        [marks.mark(child) for child in t.children(v)]
        for v in range(1, t.n + 1))


def decomposition_to_tree(dec):
    """Return the :class:`RootedTree` mapped to :obj:`dec`
    by :func:`tree_to_decomposition`.

    Blocks are listed in increasing order to get a disposition,
    which is mapped through :func:`phi_inverse`
    before the child order is forgotten.
    Any other listing gives the same rooted tree.

    """
    return phi_inverse(dec.lift()).forget_order()


def enumerate_decompositions(m, n):
    """Yield every decomposition of ``[m]`` into :obj:`n` blocks,
    one per function from ``[m]`` to ``[n]``.

    """
    _check_range(m, 'm', 0)
    _check_range(n, 'n', 1)
    for assignment in itertools.product(range(n), repeat=m):
        blocks = [[] for _ in range(n)]
        for element, block in enumerate(assignment, 1):
            blocks[block].append(element)
        yield Decomposition(blocks)


def sample_trees(n, seed, count):
    """Yield :obj:`count` uniform plane trees on ``[n]``,
    mapped from uniform dispositions through :func:`phi_inverse`.

    """
    _check_range(n, 'n', 1)
    for d in sample_dispositions(n - 1, n, seed, count):
        yield phi_inverse(d)
