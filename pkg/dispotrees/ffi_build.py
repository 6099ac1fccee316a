"""
    dispotrees.ffi_build
    ~~~~~~~~~~~~~~~~~~~~

    Build the cffi declarations of the fixed-width coefficient type.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

from pathlib import Path

from cffi import FFI

# Create an empty _generated folder if needed
(Path(__file__).parent / '_generated').mkdir(exist_ok=True)

ffi = FFI()
ffi.set_source('dispotrees._generated.ffi', None)
ffi.cdef('''
    typedef int64_t coefficient_t;
''')


if __name__ == '__main__':
    ffi.compile()
