"""
    dispotrees.verifier
    ~~~~~~~~~~~~~~~~~~~

    Exhaustive verification of the generating function identities:
    every family is enumerated, its generating function is summed
    and compared term by term with the closed-form product.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from . import _check_range, _check_status, constants
from .bijections import marks_from_disposition, phi, phi_inverse, prufer_marks
from .dispositions import enumerate_dispositions, generating_function, \
    rl_min, rlmin_generating_function
from .permutations import cycle_color_generating_function, enumerate_colored
from .plane_trees import enumerate_plane_trees, tree_generating_function
from .polynomials import Polynomial, disposition_polynomial, \
    gessel_seo_context, gessel_seo_polynomial, \
    homogeneous_disposition_polynomial, rising_factorial, \
    rooted_tree_polynomial, shifted_gessel_seo_polynomial, tree_polynomial

LOGGER = logging.getLogger(__name__)


class Caps(namedtuple('Caps', constants.CAP_KEYS)):
    """Largest parameters of the verification grid.

    ``m`` and ``n`` bound the disposition and colored permutation cells,
    ``trees`` the number of vertices of the tree cells
    and ``gessel_seo`` the ``n`` of the three-variable cells.

    """
    __slots__ = ()

    def to_json(self):
        return dict(self._asdict())


DEFAULT_CAPS = Caps(**constants.DEFAULT_CAPS)


def parse_caps(text, base=DEFAULT_CAPS):
    """Override :obj:`base` with ``key=value`` pairs such as ``m=5,n=3``.

    :raises:
        :exc:`OutOfRangeError` on unknown keys, non-integer values
        or values outside ``[1, MAX_CAPS[key]]`` (``[0, …]`` for ``m``).

    """
    values = base._asdict()
    for item in filter(None, (part.strip() for part in text.split(','))):
        key, _, value = item.partition('=')
        key = key.strip()
        if key not in constants.CAP_KEYS:
            _check_status(
                constants.STATUS_OUT_OF_RANGE,
                'unknown cap %r, expected one of %s' % (
                    key, ', '.join(constants.CAP_KEYS)))
        try:
            value = int(value)
        except ValueError:
            _check_status(
                constants.STATUS_OUT_OF_RANGE,
                'cap %s=%r is not an integer' % (key, value))
        minimum = 0 if key == constants.CAP_M else 1
        values[key] = _check_range(
            value, key, minimum, constants.MAX_CAPS[key])
    return Caps(**values)


class VerificationReport(namedtuple('VerificationReport', [
        'identity', 'parameters', 'objects_enumerated', 'expected_objects',
        'passed', 'counterexample'])):
    """Outcome of one verification cell.

    ``counterexample`` is ``None`` when the cell passes;
    otherwise a dict describing the first differing monomial,
    or the first object breaking a bijection property.

    """
    __slots__ = ()

    def to_json(self):
        return {
            'identity': self.identity,
            'parameters': dict(self.parameters),
            'objects_enumerated': self.objects_enumerated,
            'expected_objects': self.expected_objects,
            'passed': self.passed,
            'counterexample': self.counterexample,
        }

    def to_text(self):
        parameters = ' '.join(
            '%s=%d' % item for item in sorted(self.parameters.items()))
        line = '%-15s %-10s %s  %d/%d objects' % (
            self.identity, parameters, 'PASS' if self.passed else 'FAIL',
            self.objects_enumerated, self.expected_objects)
        counterexample = self.counterexample
        if counterexample and 'monomial' in counterexample:
            form = counterexample.get('form')
            line += '  first difference%s at %s: ' % (
                ' (%s)' % form if form else '', counterexample['monomial'])
            line += '%d enumerated, %d expected' % (
                counterexample['enumerated'], counterexample['expected'])
        elif counterexample:
            line += '  %s: %s' % (
                counterexample['object'], counterexample['reason'])
        return line

    __str__ = to_text


class _Tally(object):
    """Iterate over :obj:`iterable` while counting its items."""
    def __init__(self, iterable):
        self._iterable = iterable
        self.count = 0

    def __iter__(self):
        for item in self._iterable:
            self.count += 1
            yield item


def _difference(enumerated, expected, form=None):
    difference = enumerated.first_difference(expected)
    if difference is None:
        return None
    exponents, left, right = difference
    counterexample = {
        'monomial': enumerated.format_monomial(exponents),
        'exponents': list(exponents),
        'enumerated': left,
        'expected': right,
    }
    if form is not None:
        counterexample['form'] = form
    return counterexample


def _report(identity, parameters, objects, expected_objects,
            counterexample, passed=None):
    if passed is None:
        passed = counterexample is None and objects == expected_objects
    report = VerificationReport(
        identity, parameters, objects, expected_objects, passed,
        counterexample)
    LOGGER.info('%s', report)
    if counterexample is not None:
        LOGGER.debug('%s %r: counterexample %r',
                     identity, parameters, counterexample)
    return report


def _check_m_n(m, n):
    _check_range(m, 'm', 0, constants.MAX_CAPS[constants.CAP_M])
    _check_range(n, 'n', 1, constants.MAX_CAPS[constants.CAP_N])


def _check_tree_size(n, minimum=1):
    return _check_range(
        n, 'n', minimum, constants.MAX_CAPS[constants.CAP_TREES])


def verify_dispositions(m, n):
    """Compare the right-to-left minima generating function
    of dispositions of ``[m]`` into ``n`` segments
    with ``prod_{k=0}^{m-1} (x1 + … + xn + k)``.

    """
    _check_m_n(m, n)
    dispositions = _Tally(enumerate_dispositions(m, n))
    enumerated = rlmin_generating_function(m, n, dispositions)
    return _report(
        constants.IDENTITY_DISPOSITIONS, {'m': m, 'n': n},
        dispositions.count, rising_factorial(n, m),
        _difference(enumerated, disposition_polynomial(m, n)))


def verify_homogeneous(m, n):
    """Compare the generating function of dispositions graded by general
    descents with ``prod_{k=0}^{m-1} (x1 + … + xn + k t)``.

    """
    _check_m_n(m, n)
    dispositions = _Tally(enumerate_dispositions(m, n))
    enumerated = generating_function(m, n, dispositions)
    return _report(
        constants.IDENTITY_HOMOGENEOUS, {'m': m, 'n': n},
        dispositions.count, rising_factorial(n, m),
        _difference(enumerated, homogeneous_disposition_polynomial(m, n)))


def verify_colored_cycles(m, n):
    """Compare the cycle-color generating function of permutations
    of ``[m]`` with cycles colored in ``[n]``
    with ``prod_{k=0}^{m-1} (x1 + … + xn + k)``.

    """
    _check_m_n(m, n)
    colored = _Tally(enumerate_colored(m, n))
    enumerated = cycle_color_generating_function(m, n, colored)
    return _report(
        constants.IDENTITY_COLORED_CYCLES, {'m': m, 'n': n},
        colored.count, rising_factorial(n, m),
        _difference(enumerated, disposition_polynomial(m, n)))


def verify_trees(n):
    """Compare the younger/elder generating function of plane trees
    on ``[n]`` with ``prod_{k=0}^{n-2} (x1 + … + xn + k t)``.

    """
    _check_tree_size(n)
    trees = _Tally(enumerate_plane_trees(n))
    enumerated = tree_generating_function(n, trees=trees)
    return _report(
        constants.IDENTITY_TREES, {'n': n}, trees.count,
        rising_factorial(n, n - 1),
        _difference(enumerated, tree_polynomial(n)))


def verify_rooted_trees(n, r):
    """Same as :func:`verify_trees` for the trees rooted at :obj:`r`,
    against ``x_r prod_{k=1}^{n-2} (x1 + … + xn + k t)``.

    :raises: :exc:`OutOfRangeError` unless ``2 <= n`` and ``1 <= r <= n``.

    """
    _check_tree_size(n, 2)
    _check_range(r, 'r', 1, n)
    trees = _Tally(enumerate_plane_trees(n, r))
    enumerated = tree_generating_function(n, r, trees)
    return _report(
        constants.IDENTITY_ROOTED_TREES, {'n': n, 'r': r}, trees.count,
        rising_factorial(n + 1, n - 2),
        _difference(enumerated, rooted_tree_polynomial(n, r)))


def verify_transport(n):
    """Compare the tree-side and disposition-side generating functions:
    plane trees on ``[n]`` weighted by younger children and elder vertices,
    and dispositions of ``[n - 1]`` into ``n`` segments weighted by
    right-to-left minima and general descents.

    No closed form is involved.
    ``objects_enumerated`` counts trees;
    the dispositions must be as many.

    """
    _check_tree_size(n)
    trees = _Tally(enumerate_plane_trees(n))
    tree_side = tree_generating_function(n, trees=trees)
    dispositions = _Tally(enumerate_dispositions(n - 1, n))
    disposition_side = generating_function(n - 1, n, dispositions)
    expected_objects = rising_factorial(n, n - 1)
    counterexample = _difference(tree_side, disposition_side)
    return _report(
        constants.IDENTITY_TRANSPORT, {'n': n}, trees.count,
        expected_objects, counterexample,
        counterexample is None and
        trees.count == dispositions.count == expected_objects)


def _gessel_seo_weighted(n, counts):
    context = gessel_seo_context()
    x, z, t = (Polynomial.variable(context, name) for name in context)
    result = Polynomial.zero(context)
    for (young, eld), count in sorted(counts.items()):
        result = result + count * x ** young * (t - z) ** eld * \
            z ** (n - young - eld)
    return result


def verify_gessel_seo(n, r):
    """Check the three-variable specialization over plane trees
    on ``[n + 1]`` rooted at :obj:`r`.

    Each tree weighs ``x^a (t - z)^e z^(n - a - e)``,
    where ``a`` counts the younger children of the root
    and ``e`` the elder vertices.
    The sum is compared with ``x prod_{k=1}^{n-1} (x + (n - k) z + k t)``,
    then, after replacing ``t`` by ``t + z``,
    with ``x prod_{k=1}^{n-1} (x + n z + k t)``.
    That shifted form is also compared with the sum over dispositions
    of ``[n]`` into ``n + 1`` segments with 1 in segment :obj:`r`,
    weighting right-to-left minima of segment :obj:`r` by ``x``,
    other right-to-left minima by ``z`` and general descents by ``t``.
    The cell passes when the three comparisons succeed.

    """
    _check_range(n, 'n', 1, constants.MAX_CAPS[constants.CAP_GESSEL_SEO])
    _check_range(r, 'r', 1, n + 1)
    counts = {}
    trees = 0
    for tree in enumerate_plane_trees(n + 1, r):
        key = tree.young_children(r), tree.eld_total()
        counts[key] = counts.get(key, 0) + 1
        trees += 1
    weighted = _gessel_seo_weighted(n, counts)
    context = weighted.context
    z, t = (Polynomial.variable(context, name) for name in (
        constants.VARIABLE_Z, constants.VARIABLE_T))
    shifted = weighted.substitute(constants.VARIABLE_T, t + z)
    shifted_closed_form = shifted_gessel_seo_polynomial(n)

    dispositions = 0
    disposition_terms = []
    for d in enumerate_dispositions(n, n + 1):
        if d.segment_of(1) != r:
            continue
        dispositions += 1
        rlmin = d.rl_min_vector()
        root = rlmin[r - 1]
        disposition_terms.append(
            ((root, sum(rlmin) - root, d.gdes()), 1))
    disposition_side = Polynomial.from_terms(context, disposition_terms)

    counterexample = (
        _difference(weighted, gessel_seo_polynomial(n), 'weighted') or
        _difference(shifted, shifted_closed_form, 'shifted') or
        _difference(disposition_side, shifted_closed_form, 'dispositions'))
    expected_objects = rising_factorial(n + 2, n - 1)
    return _report(
        constants.IDENTITY_GESSEL_SEO, {'n': n, 'r': r}, trees,
        expected_objects, counterexample,
        counterexample is None and
        trees == dispositions == expected_objects)


def _bijection_failure(t, d, n):
    if phi_inverse(d) != t:
        return 'phi_inverse(phi(T)) differs from T'
    for v in range(1, n + 1):
        segment = d.segment(v)
        if t.young_children(v) != rl_min(segment):
            return 'vertex %d has %d younger children but RLmin %d' % (
                v, t.young_children(v), rl_min(segment))
        if t.degree(v) != len(segment):
            return 'vertex %d has %d children but segment length %d' % (
                v, t.degree(v), len(segment))
    if n >= 2 and d.segment_of(1) != t.root:
        return 'root %d but 1 lies in segment %d' % (
            t.root, d.segment_of(1))


def verify_bijection(n):
    """Check that ``phi`` is a bijection from plane trees on ``[n]``
    to dispositions of ``[n - 1]`` into ``n`` segments,
    both enumerated independently,
    which sends younger children to right-to-left minima,
    child counts to segment lengths and the root to the segment of 1.

    The two ways of computing Prüfer marks must agree as well.

    """
    _check_tree_size(n)
    identity = constants.IDENTITY_BIJECTION
    expected_objects = rising_factorial(n, n - 1)
    images = set()
    trees = 0
    counterexample = None
    for t in enumerate_plane_trees(n):
        trees += 1
        d = phi(t)
        images.add(d)
        reason = _bijection_failure(t, d, n)
        if reason is not None:
            counterexample = {'object': t.to_text(), 'reason': reason}
            break
    dispositions = 0
    if counterexample is None:
        for d in enumerate_dispositions(n - 1, n):
            dispositions += 1
            t = phi_inverse(d)
            if phi(t) != d:
                reason = 'phi(phi_inverse(D)) differs from D'
            elif prufer_marks(t) != marks_from_disposition(d):
                reason = 'the two mark procedures disagree'
            elif d not in images:
                reason = 'not the image of an enumerated tree'
            else:
                continue
            counterexample = {'object': d.to_text(), 'reason': reason}
            break
    return _report(
        identity, {'n': n}, trees, expected_objects, counterexample,
        counterexample is None and
        trees == dispositions == len(images) == expected_objects)


VERIFIERS = {
    constants.IDENTITY_DISPOSITIONS: verify_dispositions,
    constants.IDENTITY_HOMOGENEOUS: verify_homogeneous,
    constants.IDENTITY_COLORED_CYCLES: verify_colored_cycles,
    constants.IDENTITY_TREES: verify_trees,
    constants.IDENTITY_ROOTED_TREES: verify_rooted_trees,
    constants.IDENTITY_TRANSPORT: verify_transport,
    constants.IDENTITY_GESSEL_SEO: verify_gessel_seo,
    constants.IDENTITY_BIJECTION: verify_bijection,
}


def _values(fixed, key, first, last, lowest=None, highest=None):
    value = fixed.get(key)
    if value is None:
        return range(first, last + 1)
    if (lowest is not None and value < lowest) or \
            (highest is not None and value > highest):
        return []
    return [value]


def cells(caps=DEFAULT_CAPS, identities=constants.IDENTITIES, fixed=None):
    """Return the ``(identity, parameters)`` pairs of the grid.

    :param identities:
        Identity names, or their aliases in
        :data:`~dispotrees.constants.IDENTITY_ALIASES`.
    :param fixed:
        An optional dict of ``m``, ``n`` or ``r`` values
        replacing the corresponding ranges.
        An identity skips the fixed values outside its own domain,
        such as ``n = 1`` or ``r > n`` for rooted trees.
    :raises:
        :exc:`OutOfRangeError` on unknown identities,
        or when no cell is left.

    """
    fixed = fixed or {}
    result = []
    for identity in identities:
        identity = constants.IDENTITY_ALIASES.get(identity, identity)
        if identity not in VERIFIERS:
            _check_status(
                constants.STATUS_OUT_OF_RANGE,
                'unknown identity %r' % (identity,))
        if identity in (constants.IDENTITY_DISPOSITIONS,
                        constants.IDENTITY_HOMOGENEOUS,
                        constants.IDENTITY_COLORED_CYCLES):
            for m in _values(fixed, 'm', 0, caps.m):
                for n in _values(fixed, 'n', 1, caps.n):
                    result.append((identity, {'m': m, 'n': n}))
        elif identity == constants.IDENTITY_ROOTED_TREES:
            for n in _values(fixed, 'n', 2, caps.trees, lowest=2):
                for r in _values(fixed, 'r', 1, n, highest=n):
                    result.append((identity, {'n': n, 'r': r}))
        elif identity == constants.IDENTITY_GESSEL_SEO:
            for n in _values(fixed, 'n', 1, caps.gessel_seo):
                for r in _values(fixed, 'r', 1, n + 1, highest=n + 1):
                    result.append((identity, {'n': n, 'r': r}))
        else:
            for n in _values(fixed, 'n', 1, caps.trees):
                result.append((identity, {'n': n}))
    if not result:
        _check_status(
            constants.STATUS_OUT_OF_RANGE,
            'no verification cell matches %r' % (fixed,))
    return result


def run_cell(identity, parameters):
    """Run one verification cell."""
    return VERIFIERS[identity](**parameters)


def verify_all(caps=None, parallel=False, identities=None, fixed=None,
               max_workers=None):
    """Run every cell of the grid and return the list of reports,
    in grid order.

    :param caps: A :class:`Caps`, :data:`DEFAULT_CAPS` by default.
    :param parallel:
        Run cells on a :class:`~concurrent.futures.ProcessPoolExecutor`;
        reports are still returned in grid order.
    :param identities: Identity names, every identity by default.
    :raises: :exc:`CoefficientOverflowError` from any cell.

    """
    caps = DEFAULT_CAPS if caps is None else caps
    grid = cells(caps, identities or constants.IDENTITIES, fixed)
    LOGGER.info('running %d verification cells with caps %r', len(grid), caps)
    if not parallel:
        return [run_cell(identity, parameters)
                for identity, parameters in grid]
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        futures = [
            executor.submit(run_cell, identity, parameters)
            for identity, parameters in grid]
        return [future.result() for future in futures]
