"""
    dispotrees.plane_trees
    ~~~~~~~~~~~~~~~~~~~~~~

    Plane trees on ``[n]``, their younger/elder statistics,
    direct enumeration and the tree-side generating functions.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import heapq
import itertools
import json
import re
from collections import namedtuple

from . import _check_range, _check_status, constants
from .dispositions import rl_min
from .polynomials import Polynomial, VariableContext

TOKEN_RE = re.compile(r'\d+|[()]|\S')

TreeStats = namedtuple('TreeStats', [
    'beta', 'young_children', 'eld_children', 'eld_total', 'young_total'])
TreeStats.__doc__ = '''Statistics of a :class:`PlaneTree`.

``beta``, ``young_children`` and ``eld_children`` are tuples indexed by
label minus one; ``eld_total`` counts elder vertices and ``young_total``
younger vertices, the root included.
'''


class _Tree(object):
    """Shared structure of labeled rooted trees on ``[n]``."""
    def __init__(self, root, children=None):
        children = dict(children or {})
        edges = [
            child for vertex_children in children.values()
            for child in vertex_children]
        n = len(edges) + 1
        labels = set(children) | set(edges) | {root}
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, int):
                _check_status(
                    constants.STATUS_INVALID_OBJECT,
                    'label %r is not an integer' % (label,))
        if labels != set(range(1, n + 1)):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'labels %s are not exactly 1..%d' % (sorted(labels), n))
        if len(set(edges)) != len(edges) or root in edges:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'every vertex but the root needs exactly one parent')
        table = [()] * n
        for label, vertex_children in children.items():
            table[label - 1] = self._order_children(vertex_children)
        self._root = root
        self._children = tuple(table)
        self._parents = [None] * n
        for label, vertex_children in enumerate(self._children, 1):
            for child in vertex_children:
                self._parents[child - 1] = label
        if len(self.preorder()) != n:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'tree is not connected to its root %d' % root)
        self._beta = None

    @staticmethod
    def _order_children(children):
        return tuple(children)

    @classmethod
    def _from_nested(cls, nested):
        children = {}
        stack = [nested]
        while stack:
            label, forest = stack.pop()
            children[label] = [child for child, _ in forest]
            stack.extend(forest)
        return cls(nested[0], children)

    @property
    def n(self):
        """The number of vertices."""
        return len(self._children)

    @property
    def root(self):
        """The label of the root."""
        return self._root

    def _check_label(self, v):
        return _check_range(v, 'vertex', 1, self.n)

    def children(self, v):
        """Return the tuple of children of vertex :obj:`v`."""
        return self._children[self._check_label(v) - 1]

    def parent(self, v):
        """Return the parent of :obj:`v`, ``None`` for the root."""
        return self._parents[self._check_label(v) - 1]

    def degree(self, v):
        """Return the number of children of :obj:`v`."""
        return len(self.children(v))

    def preorder(self):
        """Return the labels, parents before children,
        siblings left to right.

        """
        order = []
        stack = [self._root]
        while stack:
            label = stack.pop()
            order.append(label)
            stack.extend(reversed(self._children[label - 1]))
        return order

    def _betas(self):
        if self._beta is None:
            beta = [0] * self.n
            for label in reversed(self.preorder()):
                beta[label - 1] = min(
                    [label] + [beta[child - 1]
                               for child in self._children[label - 1]])
            self._beta = tuple(beta)
        return self._beta

    def beta(self, v):
        """Return the smallest descendant of :obj:`v`,
        :obj:`v` itself included.

        """
        return self._betas()[self._check_label(v) - 1]

    def descendants(self, v):
        """Return the set of descendants of :obj:`v`, itself included."""
        result = set()
        stack = [self._check_label(v)]
        while stack:
            label = stack.pop()
            result.add(label)
            stack.extend(self._children[label - 1])
        return result

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self._root, self._children) == (other._root, other._children)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((type(self).__name__, self._root, self._children))

    def _text(self, label):
        children = self._children[label - 1]
        if not children:
            return str(label)
        return '%d(%s)' % (
            label, ' '.join(self._text(child) for child in children))

    def to_text(self):
        """Return the canonical text form, such as ``2(4(6) 5(3 1))``."""
        return self._text(self._root)

    __str__ = to_text

    def __repr__(self):
        return '%s(%r)' % (type(self).__name__, self.to_text())

    def _json(self, label):
        return {
            'label': label,
            'children': [
                self._json(child) for child in self._children[label - 1]]}

    def to_json(self):
        """Return a JSON-compatible dict ``{"n": …, "tree": …}``."""
        return {'n': self.n, 'tree': self._json(self._root)}


class PlaneTree(_Tree):
    """A labeled rooted tree on ``[n]``
    in which the children of each vertex are linearly ordered.

    Plane trees are immutable values.

    :param root: The label of the root.
    :param children:
        A mapping of labels to the ordered sequence of their children.
        Leaves may be omitted.
    :raises:
        :exc:`InvalidObjectError` if the labels are not exactly ``[n]``
        or the table is not a tree rooted at :obj:`root`.

    """

    def is_elder(self, v):
        """Whether :obj:`v` has a brother on its right
        with a smaller smallest descendant.

        The root has no brothers and is never elder.

        """
        parent = self.parent(v)
        if parent is None:
            return False
        brothers = self._children[parent - 1]
        beta = self._betas()
        own = beta[v - 1]
        return any(
            beta[brother - 1] < own
            for brother in brothers[brothers.index(v) + 1:])

    def young_children(self, v):
        """Return the number of younger children of :obj:`v`:
        the right-to-left minima of the children’s smallest descendants.

        """
        beta = self._betas()
        return rl_min([beta[child - 1] for child in self.children(v)])

    def eld_children(self, v):
        """Return the number of elder children of :obj:`v`."""
        return self.degree(v) - self.young_children(v)

    def eld_total(self):
        """Return the number of elder vertices."""
        return sum(1 for v in range(1, self.n + 1) if self.is_elder(v))

    def young_total(self):
        """Return the number of younger vertices, the root included."""
        return self.n - self.eld_total()

    def stats(self):
        """Return the :class:`TreeStats` of this tree."""
        labels = range(1, self.n + 1)
        young = tuple(self.young_children(v) for v in labels)
        eld = self.eld_total()
        return TreeStats(
            self._betas(), young,
            tuple(self.degree(v) - young[v - 1] for v in labels),
            eld, self.n - eld)

    def exponents(self):
        """Return the exponent vector of
        ``t^eld(T) prod_i x_i^young_T(i)`` over ``x1, …, xn, t``.

        """
        return tuple(
            self.young_children(v)
            for v in range(1, self.n + 1)) + (self.eld_total(),)

    def forget_order(self):
        """Return the :class:`RootedTree` with the same parent relation."""
        return RootedTree(self._root, dict(
            (label, children)
            for label, children in enumerate(self._children, 1)))


class RootedTree(_Tree):
    """A labeled rooted tree on ``[n]`` without order among children.

    Children are stored in increasing order,
    so that equal trees have equal text forms.

    """
    @staticmethod
    def _order_children(children):
        return tuple(sorted(children))


def beta(t, v):
    """Return the smallest descendant of vertex :obj:`v` in :obj:`t`.

    :raises: :exc:`OutOfRangeError` on unknown labels.

    """
    return t.beta(v)


def is_elder(t, v):
    """Whether vertex :obj:`v` of :obj:`t` is an elder vertex."""
    return t.is_elder(v)


def young_children(t, v):
    """Return the number of younger children of :obj:`v` in :obj:`t`."""
    return t.young_children(v)


def eld_children(t, v):
    """Return the number of elder children of :obj:`v` in :obj:`t`."""
    return t.eld_children(v)


def eld_total(t):
    """Return the number of elder vertices of :obj:`t`."""
    return t.eld_total()


def young_total(t):
    """Return the number of younger vertices of :obj:`t`."""
    return t.young_total()


def tree_stats(t):
    """Return the :class:`TreeStats` of :obj:`t`."""
    return t.stats()


def _nested_text(tree):
    label, forest = tree
    if not forest:
        return str(label)
    return '%d(%s)' % (
        label, ' '.join(_nested_text(child) for child in forest))


def _forest_key(forest):
    # A forest is always written before the ")" closing its parent.
    return ' '.join(_nested_text(tree) for tree in forest) + ')'


def _forest_labels(forest):
    for label, children in forest:
        yield label
        yield from _forest_labels(children)


def _subforests(labels):
    # Forests on every nonempty subset of labels, merged in text order.
    return heapq.merge(*(
        _forests(block)
        for size in range(1, len(labels) + 1)
        for block in itertools.combinations(labels, size)), key=_forest_key)


def _forests(labels):
    # Ordered forests on a nonempty label set, in the order of their text
    # followed by ")". Separators sort as " " < "(" < ")" < digits, so
    # forests group by first root label, and within a group a leaf
    # followed by siblings comes before a first tree with children.
    for first in sorted(labels, key=str):
        others = tuple(label for label in labels if label != first)
        if not others:
            yield ((first, ()),)
            continue
        for rest in _forests(others):
            yield ((first, ()),) + rest
        for children in _subforests(others):
            used = set(_forest_labels(children))
            rest_labels = tuple(
                label for label in others if label not in used)
            if not rest_labels:
                yield ((first, children),)
                continue
            for rest in _forests(rest_labels):
                yield ((first, children),) + rest


def _trees(labels, roots=None):
    for root in sorted(labels if roots is None else roots, key=str):
        others = tuple(label for label in labels if label != root)
        if not others:
            yield root, ()
            continue
        for forest in _forests(others):
            yield root, forest


def enumerate_plane_trees(n, root=None):
    """Yield every plane tree on ``[n]`` once,
    or only those rooted at :obj:`root` when given.

    Trees come in lexicographic order of their canonical text form,
    so ``1(2 3)`` before ``1(2(3))`` before ``1(3 2)``.
    They are generated directly in that order, never materialized:
    within a subtree, the forests of children over every label subset
    are merged by their text.

    """
    _check_range(n, 'n', 1)
    roots = None
    if root is not None:
        roots = (_check_range(root, 'root', 1, n),)
    for nested in _trees(tuple(range(1, n + 1)), roots):
        yield PlaneTree._from_nested(nested)


def _is_rooted_at(parents, root):
    for start in parents:
        label, steps = start, 0
        while label != root:
            label = parents[label]
            steps += 1
            if steps > len(parents):
                return False
    return True


def enumerate_rooted_trees(n, root=None):
    """Yield every labeled rooted (non-plane) tree on ``[n]`` once,
    by scanning parent functions and keeping the acyclic ones.

    """
    _check_range(n, 'n', 1)
    roots = range(1, n + 1)
    if root is not None:
        roots = (_check_range(root, 'root', 1, n),)
    for r in roots:
        others = [label for label in range(1, n + 1) if label != r]
        for choice in itertools.product(range(1, n + 1), repeat=n - 1):
            parents = dict(zip(others, choice))
            if any(parents[label] == label for label in others):
                continue
            if not _is_rooted_at(parents, r):
                continue
            children = {}
            for label in others:
                children.setdefault(parents[label], []).append(label)
            yield RootedTree(r, children)


def tree_generating_function(n, root=None, trees=None):
    """Return the sum of ``t^eld(T) prod_i x_i^young_T(i)``
    over plane trees on ``[n]`` (rooted at :obj:`root` when given),
    in the context ``x1, …, xn, t``.

    :param trees: An optional iterable replacing the enumeration.

    """
    if trees is None:
        trees = enumerate_plane_trees(n, root)
    context = VariableContext.indexed(n, (constants.VARIABLE_T,))
    return Polynomial.from_terms(context, (
        (tree.exponents(), 1) for tree in trees))


def _tree_from_tokens(tokens, cls):
    children = {}
    stack = []
    root = None
    previous = None
    for token in tokens:
        if token.isdigit():
            label = int(token)
            if label in children:
                _check_status(
                    constants.STATUS_PARSE_ERROR,
                    'label %d appears twice' % label)
            if stack:
                children[stack[-1]].append(label)
            elif root is None:
                root = label
            else:
                _check_status(
                    constants.STATUS_PARSE_ERROR, 'more than one root')
            children[label] = []
            previous = label
        elif token == '(' and previous is not None:
            stack.append(previous)
            previous = None
        elif token == ')' and stack and children[stack[-1]]:
            stack.pop()
            previous = None
        else:
            _check_status(
                constants.STATUS_PARSE_ERROR, 'unexpected %r' % token)
    if root is None or stack:
        _check_status(constants.STATUS_PARSE_ERROR, 'incomplete tree')
    return cls(root, children)


def _nested_from_json(node):
    label = node['label']
    return label, tuple(
        _nested_from_json(child) for child in node.get('children', ()))


def tree_from_json(data, cls=PlaneTree):
    """Build a tree from its JSON dict ``{"n": …, "tree": …}``.

    :raises: :exc:`ParseError` on malformed data.

    """
    try:
        nested = _nested_from_json(data['tree'])
        n = data.get('n')
    except (KeyError, TypeError, AttributeError) as exception:
        _check_status(
            constants.STATUS_PARSE_ERROR, 'malformed tree: %s' % exception)
    try:
        tree = cls._from_nested(nested)
    except TypeError as exception:
        _check_status(
            constants.STATUS_PARSE_ERROR, 'malformed tree: %s' % exception)
    if n is not None and n != tree.n:
        _check_status(
            constants.STATUS_INVALID_OBJECT,
            'declared n=%r but the tree has %d vertices' % (n, tree.n))
    return tree


def parse_tree(text, cls=PlaneTree):
    """Parse a tree from its canonical text form or a JSON document.

    :raises:
        :exc:`ParseError` on malformed input,
        :exc:`InvalidObjectError` if the labels are not exactly ``[n]``.

    """
    text = text.strip()
    if text.startswith('{'):
        try:
            data = json.loads(text)
        except ValueError as exception:
            _check_status(
                constants.STATUS_PARSE_ERROR, 'invalid JSON: %s' % exception)
        return tree_from_json(data, cls)
    return _tree_from_tokens(TOKEN_RE.findall(text), cls)


def serialize_tree(t, format=constants.FORMAT_TEXT):
    """Return the canonical text form of :obj:`t`,
    or a one-line JSON document when :obj:`format` is ``'json'``.

    """
    if format == constants.FORMAT_JSON:
        return json.dumps(t.to_json())
    return t.to_text()
