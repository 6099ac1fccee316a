"""
    dispotrees.constants
    ~~~~~~~~~~~~~~~~~~~~

    Status codes, serialization formats and verification caps.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

STATUS_SUCCESS = 0
STATUS_VERIFICATION_FAILED = 1
STATUS_USAGE_ERROR = 2
STATUS_OVERFLOW = 3
STATUS_INVALID_OBJECT = 4
STATUS_PARSE_ERROR = 5
STATUS_CONTEXT_MISMATCH = 6
STATUS_UNKNOWN_VARIABLE = 7
STATUS_OUT_OF_RANGE = 8

STATUS_NAMES = {
    STATUS_SUCCESS: 'SUCCESS',
    STATUS_VERIFICATION_FAILED: 'VERIFICATION_FAILED',
    STATUS_USAGE_ERROR: 'USAGE_ERROR',
    STATUS_OVERFLOW: 'OVERFLOW',
    STATUS_INVALID_OBJECT: 'INVALID_OBJECT',
    STATUS_PARSE_ERROR: 'PARSE_ERROR',
    STATUS_CONTEXT_MISMATCH: 'CONTEXT_MISMATCH',
    STATUS_UNKNOWN_VARIABLE: 'UNKNOWN_VARIABLE',
    STATUS_OUT_OF_RANGE: 'OUT_OF_RANGE',
}

# Process exit codes of the command line interface.
EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2
EXIT_OVERFLOW = 3

STATUS_TO_EXIT_CODE = {
    STATUS_SUCCESS: EXIT_SUCCESS,
    STATUS_VERIFICATION_FAILED: EXIT_VERIFICATION_FAILED,
    STATUS_OVERFLOW: EXIT_OVERFLOW,
}

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'
FORMATS = (FORMAT_TEXT, FORMAT_JSON)

# Variable names of the generating functions.
VARIABLE_T = 't'
VARIABLE_X = 'x'
VARIABLE_Z = 'z'
INDEXED_VARIABLE_PREFIX = 'x'

CAP_M = 'm'
CAP_N = 'n'
CAP_TREES = 'trees'
CAP_GESSEL_SEO = 'gessel_seo'
CAP_KEYS = (CAP_M, CAP_N, CAP_TREES, CAP_GESSEL_SEO)

DEFAULT_CAPS = {
    CAP_M: 5,
    CAP_N: 4,
    CAP_TREES: 6,
    CAP_GESSEL_SEO: 4,
}

MAX_CAPS = {
    CAP_M: 8,
    CAP_N: 8,
    CAP_TREES: 8,
    CAP_GESSEL_SEO: 7,
}

IDENTITY_DISPOSITIONS = 'dispositions'
IDENTITY_HOMOGENEOUS = 'homogeneous'
IDENTITY_COLORED_CYCLES = 'colored-cycles'
IDENTITY_TREES = 'trees'
IDENTITY_ROOTED_TREES = 'rooted-trees'
IDENTITY_TRANSPORT = 'transport'
IDENTITY_GESSEL_SEO = 'gessel-seo'
IDENTITY_BIJECTION = 'bijection'
IDENTITY_ALL = 'all'

IDENTITIES = (
    IDENTITY_DISPOSITIONS, IDENTITY_HOMOGENEOUS, IDENTITY_COLORED_CYCLES,
    IDENTITY_TREES, IDENTITY_ROOTED_TREES, IDENTITY_TRANSPORT,
    IDENTITY_GESSEL_SEO, IDENTITY_BIJECTION)

# Short names accepted by ``verify --identity``.
IDENTITY_ALIASES = {
    'thm2.1': IDENTITY_DISPOSITIONS,
    'q': IDENTITY_HOMOGENEOUS,
    'thm2.2': IDENTITY_COLORED_CYCLES,
    'eq3': IDENTITY_TREES,
    'eq4': IDENTITY_ROOTED_TREES,
}
