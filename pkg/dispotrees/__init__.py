"""
    dispotrees
    ~~~~~~~~~~

    Dispositions, plane trees and the Prüfer-style bijection between them.
    See README for details.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

from pathlib import Path

from . import constants

try:
    from ._generated.ffi import ffi
except ImportError:  # pragma: no cover
    # Source checkout without a built package: use the declarations in-line.
    from .ffi_build import ffi

VERSION = __version__ = (Path(__file__).parent / 'VERSION').read_text().strip()


class DispotreesError(Exception):
    """Raised when an operation on a combinatorial object fails.

    :param message: A human-readable description.
    :param status: One of the ``STATUS_*`` codes of
        :mod:`dispotrees.constants`.

    """
    def __init__(self, message, status):
        super(DispotreesError, self).__init__(message)
        self.status = status

    def __reduce__(self):
        return type(self), (self.args[0], self.status)


class CoefficientOverflowError(DispotreesError, OverflowError):
    """A coefficient does not fit in the fixed-width coefficient type."""


class ParseError(DispotreesError, ValueError):
    """Text or JSON input is malformed."""


class InvalidObjectError(DispotreesError, ValueError):
    """An object violates the invariants of its type."""


class ContextMismatchError(DispotreesError, ValueError):
    """Two polynomials over different variables were combined."""


class UnknownVariableError(DispotreesError, ValueError):
    """A variable is not part of a polynomial's context."""


class OutOfRangeError(DispotreesError, ValueError):
    """A parameter, label or index is out of its allowed range."""


STATUS_TO_EXCEPTION = {
    constants.STATUS_OVERFLOW: CoefficientOverflowError,
    constants.STATUS_PARSE_ERROR: ParseError,
    constants.STATUS_INVALID_OBJECT: InvalidObjectError,
    constants.STATUS_CONTEXT_MISMATCH: ContextMismatchError,
    constants.STATUS_UNKNOWN_VARIABLE: UnknownVariableError,
    constants.STATUS_OUT_OF_RANGE: OutOfRangeError,
}


def _check_status(status, detail=''):
    """Take a status code and raise an exception if/as appropriate."""
    if status != constants.STATUS_SUCCESS:
        exception = STATUS_TO_EXCEPTION.get(status, DispotreesError)
        message = '%s: %s' % (
            constants.STATUS_NAMES.get(status, 'UNKNOWN'), detail)
        raise exception(message, status)


def _check_range(value, name, minimum, maximum=None):
    """Raise :exc:`OutOfRangeError` unless :obj:`value` is an integer
    between :obj:`minimum` and :obj:`maximum` (inclusive).

    """
    if isinstance(value, bool) or not isinstance(value, int):
        _check_status(
            constants.STATUS_OUT_OF_RANGE,
            '%s must be an integer, got %r' % (name, value))
    if value < minimum or (maximum is not None and value > maximum):
        if maximum is None:
            expected = '>= %d' % minimum
        else:
            expected = 'in [%d, %d]' % (minimum, maximum)
        _check_status(
            constants.STATUS_OUT_OF_RANGE,
            '%s must be %s, got %d' % (name, expected, value))
    return value


def coefficient_bits():
    """Return the width in bits of polynomial coefficients, such as 64."""
    return ffi.sizeof('coefficient_t') * 8


# Implementation is in submodules, but public API is all here.

from .polynomials import (  # noqa isort:skip
    VariableContext, Polynomial, add, mul, substitute, evaluate, equals,
    disposition_polynomial, homogeneous_disposition_polynomial,
    gessel_seo_polynomial, shifted_gessel_seo_polynomial, tree_polynomial,
    rooted_tree_polynomial, rising_factorial)
from .dispositions import (  # noqa isort:skip
    Disposition, DispositionStats, rl_min, rl_min_positions, gdes,
    disposition_stats, insert_element, enumerate_dispositions,
    extend_dispositions, generating_function, rlmin_generating_function,
    sample_uniform, sample_dispositions, parse_disposition)
from .plane_trees import (  # noqa isort:skip
    PlaneTree, RootedTree, TreeStats, beta, is_elder, young_children,
    eld_children, eld_total, young_total, tree_stats, enumerate_plane_trees,
    enumerate_rooted_trees, tree_generating_function, parse_tree,
    serialize_tree)
from .permutations import (  # noqa isort:skip
    CycleDecomposition, ColoredCyclePermutation, standard_word,
    fundamental_bijection, word_to_cycles, colored_to_disposition,
    disposition_to_colored, enumerate_permutations, enumerate_colored,
    cycle_color_generating_function, stirling_cycle_numbers,
    parse_colored)
from .bijections import (  # noqa isort:skip
    MarkTable, Decomposition, prufer_marks, phi, marks_from_disposition,
    phi_inverse, tree_to_decomposition, decomposition_to_tree,
    enumerate_decompositions, sample_trees)
from .verifier import (  # noqa isort:skip
    VerificationReport, Caps, parse_caps, verify_dispositions,
    verify_homogeneous, verify_colored_cycles, verify_trees,
    verify_rooted_trees, verify_transport, verify_gessel_seo,
    verify_bijection, verify_all)
