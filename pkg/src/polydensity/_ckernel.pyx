# cython: language_level=3, cdivision=True, initializedcheck=False
# Compiled build of the scalar kernels; the source lives in _kernel.py.
include "_kernel.py"
