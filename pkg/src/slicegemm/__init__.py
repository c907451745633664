"""slicegemm: bit-plane dense linear algebra over tiny finite fields.

Matrices over GF(2), GF(3), GF(5), GF(7), Z/4 and Z/8 are stored as
parallel bit planes so one word operation acts on 64 elements at a time;
multiplication uses lookup tables of binary row combinations driven by an
additive basis of the coefficient ring.  Quadratic and cubic extension
fields ride on top as polynomials of base-field matrices.

The hot loops live in a compiled extension with a pure-Python fallback;
``slicegemm.backend_name()`` reports which one is active.
"""

from ._core import active_name as backend_name
from .fields import EXT_FIELDS, F2, F3, F4, F5, F7, F8, F9, F25, F27, FIELDS, Z4, Z8
from .matrix import BitslicedMatrix, RowRef, row_accumulate
from .m4rm import M4rmParams, build_table, choose_k, classical_multiply, m4rm_multiply
from .extension import ExtMatrix, ext_multiply
from .oracle import DenseMatrix, oracle_element, oracle_multiply
from .programs import SequentialProgram, count_programs
from .search import FunctionSpec, search, verify_program

__version__ = "0.1.0"

__all__ = [
    "BitslicedMatrix", "DenseMatrix", "ExtMatrix", "FunctionSpec",
    "M4rmParams", "RowRef", "SequentialProgram",
    "F2", "F3", "F4", "F5", "F7", "F8", "F9", "F25", "F27", "Z4", "Z8",
    "FIELDS", "EXT_FIELDS",
    "backend_name", "build_table", "choose_k", "classical_multiply",
    "count_programs", "ext_multiply", "m4rm_multiply", "oracle_element",
    "oracle_multiply", "row_accumulate", "search", "verify_program",
]
