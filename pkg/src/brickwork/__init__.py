"""Exact computations around bricks and generic modules of finite-dimensional algebras.

Submodules:

* ``fields``, ``poly``, ``linalg``, ``parsing``: exact scalars, polynomials,
  rational functions and matrices.
* ``algebra``, ``modules``: bound quiver algebras, representations, Hom and End.
* ``p1``: projective presentations, special objects and the zero-cokernel
  decomposition.
* ``family``: one-parameter families over k[x]_h and the brick verdict.
* ``convolution``: lazy linear maps on k(x) and the convolution solver.
* ``ditalgebra``: minimal ditalgebras, coefficient matrices, normalization
  and factorization.
* ``io``, ``cli``: JSON files, reports and the ``brickwork`` command.
"""

from .errors import BrickworkError, ValidationError
from .fields import GF, QQ, field_from_spec

__all__ = ["BrickworkError", "ValidationError", "GF", "QQ", "field_from_spec"]
__version__ = "0.1.0"
