"""
    dispotrees.polynomials
    ~~~~~~~~~~~~~~~~~~~~~~

    Exact sparse multivariate polynomials with fixed-width integer
    coefficients, and the closed-form product polynomials.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import re

from . import _check_range, _check_status, constants, ffi

VARIABLE_NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


def _checked(value):
    """Return :obj:`value` if it fits in a ``coefficient_t``.

    :raises: :exc:`CoefficientOverflowError` otherwise.

    """
    try:
        fits = int(ffi.cast('coefficient_t', value)) == value
    except OverflowError:  # pragma: no cover
        fits = False
    if not fits:
        _check_status(
            constants.STATUS_OVERFLOW,
            'coefficient %d does not fit in %d bits' % (
                value, ffi.sizeof('coefficient_t') * 8))
    return value


def _canonical_key(exponents):
    """Sort key of the graded lexicographic order, largest monomial first."""
    return (-sum(exponents), tuple(-exponent for exponent in exponents))


def _format_monomial(names, exponents):
    factors = []
    for name, exponent in zip(names, exponents):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append('%s^%d' % (name, exponent))
    return '*'.join(factors)


class VariableContext(object):
    """An ordered list of distinct variable names.

    Every :class:`Polynomial` belongs to a context,
    and exponent vectors are indexed like the context’s names.

    :param names: An iterable of variable names, such as ``('x1', 'x2', 't')``.

    """
    def __init__(self, names):
        names = tuple(names)
        if not names:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'a context needs at least one variable')
        for name in names:
            if not isinstance(name, str) or not VARIABLE_NAME_RE.match(name):
                _check_status(
                    constants.STATUS_INVALID_OBJECT,
                    'invalid variable name %r' % (name,))
        if len(set(names)) != len(names):
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'duplicate variable names in %r' % (names,))
        self._names = names
        self._indexes = dict((name, i) for i, name in enumerate(names))

    @classmethod
    def indexed(cls, n, extra=()):
        """Return the context ``x1, …, xn`` then :obj:`extra` names."""
        _check_range(n, 'n', 1)
        return cls(tuple(
            '%s%d' % (constants.INDEXED_VARIABLE_PREFIX, i)
            for i in range(1, n + 1)) + tuple(extra))

    @property
    def names(self):
        """The tuple of variable names."""
        return self._names

    @property
    def arity(self):
        """The number of variables."""
        return len(self._names)

    def index(self, name):
        """Return the position of variable :obj:`name`.

        :raises: :exc:`UnknownVariableError` if it is not in this context.

        """
        try:
            return self._indexes[name]
        except KeyError:
            _check_status(
                constants.STATUS_UNKNOWN_VARIABLE,
                '%r is not one of %s' % (name, ', '.join(self._names)))

    def __contains__(self, name):
        return name in self._indexes

    def __iter__(self):
        return iter(self._names)

    def __len__(self):
        return len(self._names)

    def __eq__(self, other):
        if not isinstance(other, VariableContext):
            return NotImplemented
        return self._names == other._names

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._names)

    def __repr__(self):
        return 'VariableContext(%r)' % (self._names,)


class Polynomial(object):
    """A polynomial with integer coefficients, stored as a map from
    exponent vectors to nonzero coefficients.

    Polynomials are immutable.
    They support ``+``, ``-``, ``*`` and ``**`` with each other
    and with plain integers, which are read as constants.

    Coefficients are checked against the fixed-width C type
    ``coefficient_t``; arithmetic that leaves its range raises
    :exc:`~dispotrees.CoefficientOverflowError`.

    :type context: VariableContext
    :param context: The variables of the polynomial.
    :param terms:
        A mapping of exponent vectors (sequences of nonnegative integers,
        one per variable) to integer coefficients.
        Zero coefficients are dropped.

    """
    def __init__(self, context, terms=None):
        self._context = context
        normalized = {}
        for exponents, coefficient in dict(terms or {}).items():
            exponents = self._check_exponents(exponents)
            if isinstance(coefficient, bool) or not isinstance(
                    coefficient, int):
                _check_status(
                    constants.STATUS_INVALID_OBJECT,
                    'coefficient %r is not an integer' % (coefficient,))
            if coefficient:
                normalized[exponents] = _checked(coefficient)
        self._terms = normalized

    @classmethod
    def _from_normalized(cls, context, terms):
        self = object.__new__(cls)
        self._context = context
        self._terms = dict(
            (exponents, coefficient)
            for exponents, coefficient in terms.items() if coefficient)
        return self

    @classmethod
    def from_terms(cls, context, pairs):
        """Sum an iterable of ``(exponents, coefficient)`` pairs.

        Repeated exponent vectors are accumulated,
        which makes this the constructor of choice for generating functions.

        """
        accumulated = {}
        for exponents, coefficient in pairs:
            exponents = tuple(exponents)
            accumulated[exponents] = _checked(
                accumulated.get(exponents, 0) + coefficient)
        return cls(context, accumulated)

    @classmethod
    def zero(cls, context):
        """Return the zero polynomial of :obj:`context`."""
        return cls._from_normalized(context, {})

    @classmethod
    def constant(cls, context, value):
        """Return the constant polynomial :obj:`value`."""
        return cls(context, {(0,) * context.arity: value})

    @classmethod
    def variable(cls, context, name):
        """Return the polynomial made of the single variable :obj:`name`."""
        exponents = [0] * context.arity
        exponents[context.index(name)] = 1
        return cls._from_normalized(context, {tuple(exponents): 1})

    @classmethod
    def monomial(cls, context, exponents, coefficient=1):
        """Return ``coefficient * x^exponents``."""
        return cls(context, {tuple(exponents): coefficient})

    def _check_exponents(self, exponents):
        exponents = tuple(exponents)
        if len(exponents) != self._context.arity:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'exponent vector %r does not match %d variables' % (
                    exponents, self._context.arity))
        for exponent in exponents:
            if isinstance(exponent, bool) or not isinstance(
                    exponent, int) or exponent < 0:
                _check_status(
                    constants.STATUS_INVALID_OBJECT,
                    'invalid exponent vector %r' % (exponents,))
        return exponents

    @property
    def context(self):
        """The :class:`VariableContext` of this polynomial."""
        return self._context

    @property
    def terms(self):
        """A new dict of exponent tuples to nonzero coefficients."""
        return dict(self._terms)

    def items(self):
        """Return the ``(exponents, coefficient)`` pairs in canonical order:
        graded lexicographic, largest monomial first.

        """
        return sorted(
            self._terms.items(), key=lambda item: _canonical_key(item[0]))

    def coefficient(self, exponents):
        """Return the coefficient of a monomial, 0 if absent."""
        return self._terms.get(tuple(exponents), 0)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def total_degree(self):
        """Return the largest exponent sum, or ``None`` for zero."""
        if not self._terms:
            return None
        return max(sum(exponents) for exponents in self._terms)

    def is_homogeneous(self, degree=None):
        """Whether every monomial has the same total degree
        (:obj:`degree` when given).

        """
        degrees = set(sum(exponents) for exponents in self._terms)
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._context != self._context:
                _check_status(
                    constants.STATUS_CONTEXT_MISMATCH,
                    '%r and %r' % (self._context, other._context))
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial.constant(self._context, other)
        return NotImplemented

    def add(self, other):
        """Return the sum of this polynomial and :obj:`other`.
        Same as ``self + other``.

        """
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            terms[exponents] = _checked(terms.get(exponents, 0) + coefficient)
        return Polynomial._from_normalized(self._context, terms)

    __add__ = add
    __radd__ = add

    def __neg__(self):
        return Polynomial._from_normalized(self._context, dict(
            (exponents, _checked(-coefficient))
            for exponents, coefficient in self._terms.items()))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.add(-self)

    def multiply(self, other):
        """Return the product of this polynomial and :obj:`other`.
        Same as ``self * other``.

        """
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for left, left_coefficient in self._terms.items():
            for right, right_coefficient in other._terms.items():
                exponents = tuple(a + b for a, b in zip(left, right))
                product = _checked(left_coefficient * right_coefficient)
                terms[exponents] = _checked(terms.get(exponents, 0) + product)
        return Polynomial._from_normalized(self._context, terms)

    __mul__ = multiply
    __rmul__ = multiply

    def __pow__(self, exponent):
        _check_range(exponent, 'exponent', 0)
        result = Polynomial.constant(self._context, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def substitute(self, name, replacement):
        """Replace every occurrence of variable :obj:`name`
        by the polynomial :obj:`replacement` and expand.

        :raises:
            :exc:`UnknownVariableError` if :obj:`name` is not a variable,
            :exc:`ContextMismatchError` if :obj:`replacement`
            has another context.

        """
        index = self._context.index(name)
        replacement = self._coerce(replacement)
        if replacement is NotImplemented:
            _check_status(
                constants.STATUS_INVALID_OBJECT,
                'cannot substitute %r' % (replacement,))
        powers = [Polynomial.constant(self._context, 1)]
        result = Polynomial.zero(self._context)
        for exponents, coefficient in self._terms.items():
            power = exponents[index]
            while len(powers) <= power:
                powers.append(powers[-1] * replacement)
            rest = exponents[:index] + (0,) + exponents[index + 1:]
            result = result + Polynomial._from_normalized(
                self._context, {rest: coefficient}) * powers[power]
        return result

    def evaluate(self, assignment):
        """Return the integer value at :obj:`assignment`,
        a sequence of one integer per variable.

        """
        assignment = tuple(assignment)
        if len(assignment) != self._context.arity:
            _check_status(
                constants.STATUS_OUT_OF_RANGE,
                'expected %d values, got %d' % (
                    self._context.arity, len(assignment)))
        total = 0
        for exponents, coefficient in self._terms.items():
            value = coefficient
            for base, exponent in zip(assignment, exponents):
                if exponent:
                    value = _checked(value * _checked(base ** exponent))
            total = _checked(total + value)
        return total

    def first_difference(self, other):
        """Return the first monomial, in canonical order,
        where this polynomial and :obj:`other` differ.

        :returns:
            An ``(exponents, self_coefficient, other_coefficient)`` tuple,
            or ``None`` if both polynomials are equal.

        """
        other = self._coerce(other)
        keys = sorted(
            set(self._terms) | set(other._terms), key=_canonical_key)
        for exponents in keys:
            left = self._terms.get(exponents, 0)
            right = other._terms.get(exponents, 0)
            if left != right:
                return exponents, left, right
        return None

    def equals(self, other):
        """Whether both polynomials have the same terms.

        :raises:
            :exc:`ContextMismatchError` if the contexts differ.

        """
        return self._coerce(other)._terms == self._terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._context == other._context and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._context, frozenset(self._terms.items())))

    def format_monomial(self, exponents):
        """Return the text form of a single monomial, ``1`` for the unit."""
        return _format_monomial(self._context.names, exponents) or '1'

    def to_text(self):
        """Return the canonical text form, such as ``2*x1*x2 + x1 + x2``."""
        parts = []
        for exponents, coefficient in self.items():
            monomial = _format_monomial(self._context.names, exponents)
            magnitude = abs(coefficient)
            if not monomial:
                term = str(magnitude)
            elif magnitude == 1:
                term = monomial
            else:
                term = '%d*%s' % (magnitude, monomial)
            if not parts:
                parts.append('-' + term if coefficient < 0 else term)
            else:
                parts.append(('- ' if coefficient < 0 else '+ ') + term)
        return ' '.join(parts) or '0'

    __str__ = to_text

    def __repr__(self):
        return 'Polynomial(%r, vars=%r)' % (
            self.to_text(), self._context.names)

    def to_json(self):
        """Return a JSON-compatible dict, terms in canonical order."""
        return {
            'vars': list(self._context.names),
            'terms': [
                {'exp': list(exponents), 'coef': coefficient}
                for exponents, coefficient in self.items()]}

    @classmethod
    def from_json(cls, data):
        """Inverse of :meth:`to_json`.

        :raises: :exc:`ParseError` on malformed data.

        """
        try:
            context = VariableContext(data['vars'])
            pairs = [(term['exp'], term['coef']) for term in data['terms']]
        except (KeyError, TypeError) as exception:
            _check_status(
                constants.STATUS_PARSE_ERROR,
                'malformed polynomial: %s' % exception)
        return cls.from_terms(context, pairs)


def add(p, q):
    """Return ``p + q``.

    :raises: :exc:`ContextMismatchError` if the contexts differ.

    """
    return p.add(q)


def mul(p, q):
    """Return ``p * q``.

    :raises:
        :exc:`ContextMismatchError` if the contexts differ,
        :exc:`CoefficientOverflowError` on coefficient overflow.

    """
    return p.multiply(q)


def substitute(p, var, r):
    """Return :obj:`p` with variable :obj:`var` replaced by :obj:`r`."""
    return p.substitute(var, r)


def evaluate(p, assignment):
    """Return the integer value of :obj:`p` at :obj:`assignment`."""
    return p.evaluate(assignment)


def equals(p, q):
    """Whether :obj:`p` and :obj:`q` have identical normalized terms."""
    return p.equals(q)


def rising_factorial(x, m):
    """Return ``x (x + 1) … (x + m - 1)``, 1 when :obj:`m` is 0."""
    _check_range(m, 'm', 0)
    result = 1
    for k in range(m):
        result = _checked(result * (x + k))
    return result


def _sum_of_variables(context, n):
    return Polynomial.from_terms(context, (
        (tuple(1 if j == i else 0 for j in range(context.arity)), 1)
        for i in range(n)))


def disposition_polynomial(m, n):
    """Return ``prod_{k=0}^{m-1} (x1 + … + xn + k)`` over ``x1, …, xn``."""
    _check_range(m, 'm', 0)
    _check_range(n, 'n', 1)
    context = VariableContext.indexed(n)
    total = _sum_of_variables(context, n)
    result = Polynomial.constant(context, 1)
    for k in range(m):
        result = result * (total + k)
    return result


def homogeneous_disposition_polynomial(m, n):
    """Return ``prod_{k=0}^{m-1} (x1 + … + xn + k t)``
    over ``x1, …, xn, t``.

    """
    _check_range(m, 'm', 0)
    _check_range(n, 'n', 1)
    context = VariableContext.indexed(n, (constants.VARIABLE_T,))
    total = _sum_of_variables(context, n)
    t = Polynomial.variable(context, constants.VARIABLE_T)
    result = Polynomial.constant(context, 1)
    for k in range(m):
        result = result * (total + k * t)
    return result


def tree_polynomial(n):
    """Return the plane tree product ``prod_{k=0}^{n-2} (x1 + … + xn + kt)``.
    """
    _check_range(n, 'n', 1)
    return homogeneous_disposition_polynomial(n - 1, n)


def rooted_tree_polynomial(n, r):
    """Return ``x_r prod_{k=1}^{n-2} (x1 + … + xn + k t)``,
    the product counting plane trees on ``[n]`` with root :obj:`r`.

    """
    _check_range(n, 'n', 2)
    _check_range(r, 'r', 1, n)
    context = VariableContext.indexed(n, (constants.VARIABLE_T,))
    total = _sum_of_variables(context, n)
    t = Polynomial.variable(context, constants.VARIABLE_T)
    result = Polynomial.variable(
        context, '%s%d' % (constants.INDEXED_VARIABLE_PREFIX, r))
    for k in range(1, n - 1):
        result = result * (total + k * t)
    return result


def gessel_seo_context():
    """Return the ``x, z, t`` context."""
    return VariableContext(
        (constants.VARIABLE_X, constants.VARIABLE_Z, constants.VARIABLE_T))


def gessel_seo_polynomial(n):
    """Return ``x prod_{k=1}^{n-1} (x + (n - k) z + k t)`` over ``x, z, t``.
    """
    _check_range(n, 'n', 1)
    context = gessel_seo_context()
    x, z, t = (Polynomial.variable(context, name) for name in context)
    result = x
    for k in range(1, n):
        result = result * (x + (n - k) * z + k * t)
    return result


def shifted_gessel_seo_polynomial(n):
    """Return ``x prod_{k=1}^{n-1} (x + n z + k t)``,
    which is :func:`gessel_seo_polynomial` with ``t`` replaced by ``t + z``.

    """
    _check_range(n, 'n', 1)
    context = gessel_seo_context()
    x, z, t = (Polynomial.variable(context, name) for name in context)
    result = x
    for k in range(1, n):
        result = result * (x + n * z + k * t)
    return result
