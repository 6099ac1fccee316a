import sys

from setuptools import setup

if sys.version_info < (3, 8):
    raise RuntimeError('dispotrees requires Python 3.8 or later.')

setup(
    cffi_modules=['dispotrees/ffi_build.py:ffi']
)
