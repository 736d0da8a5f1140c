"""Minimal stand-in for the ``cython`` module when Cython is not installed.

Only the names used by ``_kernel.py`` are provided; all of them are no-ops.
"""

import builtins

compiled = False


class _Type:
    def __init__(self, py_type):
        self.py_type = py_type

    def __getitem__(self, item):
        return self

    def __call__(self, *args):
        return self.py_type(*args)


double = _Type(builtins.float)
int = _Type(builtins.int)  # noqa: A001
bint = _Type(builtins.bool)
Py_ssize_t = _Type(builtins.int)


def _passthrough(func=None, **kwargs):
    if func is None:
        return _passthrough
    return func


def declare(kind, value=None):
    return value


cfunc = ccall = inline = _passthrough


def exceptval(*args, **kwargs):
    return _passthrough


class _NoGil:
    def __call__(self, func):
        return func

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


nogil = _NoGil()


def boundscheck(flag):
    return _passthrough


wraparound = cdivision = boundscheck
