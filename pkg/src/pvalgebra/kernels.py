"""Backend selection for the polynomial term kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``PVALGEBRA_PURE=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("PVALGEBRA_PURE", "") not in ("", "0"):
    from ._pykernels import affine_terms, diff_terms, mul_terms, shear_terms, shift_terms
else:
    try:
        from ._ckernels import affine_terms, diff_terms, mul_terms, shear_terms, shift_terms

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._pykernels import affine_terms, diff_terms, mul_terms, shear_terms, shift_terms

__all__ = ["BACKEND", "affine_terms", "diff_terms", "mul_terms", "shear_terms", "shift_terms"]
