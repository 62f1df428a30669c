"""Term-kernel backend selection.

Imports the compiled kernel when present, otherwise the pure-Python twin.
Set COMPDET_PURE=1 to force the pure kernel (used by the benchmark and by
tests that compare the two).
"""

import os

if os.environ.get("COMPDET_PURE"):
    from . import _termkernel_py as kernel

    BACKEND = "pure"
else:
    try:
        from . import _termkernel as kernel  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _termkernel_py as kernel

        BACKEND = "pure"

add_terms = kernel.add_terms
muladd_terms = kernel.muladd_terms
mul_terms = kernel.mul_terms
