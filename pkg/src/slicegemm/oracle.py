"""Reference arithmetic used as ground truth by every other module.

DenseMatrix keeps entries as plain small integers in a numpy array;
products run through integer matmul, accumulate exactly in 64-bit ints
(dimensions times (order-1)^2 stays far below 2^63) and reduce once at
the end.  No bit tricks anywhere, so correctness is auditable by
inspection.
"""

from __future__ import annotations

import numpy as np

from .fields import ExtFieldSpec, FieldSpec


class DenseMatrix:
    """Row-major matrix of canonical residues over one base ring."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("entries must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise ValueError(f"entries out of range for {field.name}")
        self.field = field
        self.entries = arr

    @property
    def nrows(self) -> int:
        return self.entries.shape[0]

    @property
    def ncols(self) -> int:
        return self.entries.shape[1]

    @classmethod
    def zero(cls, field: FieldSpec, m: int, n: int) -> "DenseMatrix":
        return cls(field, np.zeros((m, n), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "DenseMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def random(cls, field: FieldSpec, m: int, n: int, seed: int) -> "DenseMatrix":
        rng = np.random.Generator(np.random.PCG64(seed))
        return cls(field, rng.integers(0, field.order, size=(m, n), dtype=np.int64))

    def copy(self) -> "DenseMatrix":
        return DenseMatrix(self.field, self.entries.copy())

    def equals(self, other) -> bool:
        return (
            isinstance(other, DenseMatrix)
            and self.field is other.field
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    __eq__ = equals

    def __repr__(self):
        return f"DenseMatrix({self.field.name}, {self.nrows}x{self.ncols})"


def _check_same_field(A: DenseMatrix, B: DenseMatrix):
    if A.field is not B.field:
        raise ValueError(f"field mismatch: {A.field.name} vs {B.field.name}")


def oracle_multiply(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    """Schoolbook product reduced mod the ring order."""
    _check_same_field(A, B)
    if A.ncols != B.nrows:
        raise ValueError(f"inner dimensions {A.ncols} != {B.nrows}")
    return DenseMatrix(A.field, (A.entries @ B.entries) % A.field.order)


def oracle_add(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    _check_same_field(A, B)
    if A.entries.shape != B.entries.shape:
        raise ValueError("shape mismatch")
    return DenseMatrix(A.field, (A.entries + B.entries) % A.field.order)


def oracle_sub(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    _check_same_field(A, B)
    if A.entries.shape != B.entries.shape:
        raise ValueError("shape mismatch")
    return DenseMatrix(A.field, (A.entries - B.entries) % A.field.order)


def oracle_neg(A: DenseMatrix) -> DenseMatrix:
    return DenseMatrix(A.field, (-A.entries) % A.field.order)


def oracle_scalar_mul(A: DenseMatrix, c: int) -> DenseMatrix:
    if not 0 <= c < A.field.order:
        raise ValueError(f"{c} is not a residue of {A.field.name}")
    return DenseMatrix(A.field, (A.entries * c) % A.field.order)


def poly_mul_mod(spec: ExtFieldSpec, a, b) -> tuple:
    """Multiply two extension elements given as coefficient tuples."""
    p = spec.base.order
    n = spec.degree
    a = spec.canonical_element(a)
    b = spec.canonical_element(b)
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] += ai * bj
    return tuple(c % p for c in poly_reduce_coeffs(spec, prod))


def poly_reduce_coeffs(spec: ExtFieldSpec, coeffs) -> list:
    """Reduce an integer coefficient list modulo the defining polynomial."""
    p = spec.base.order
    n = spec.degree
    work = list(coeffs)
    for i in range(len(work) - 1, n - 1, -1):
        c = work[i] % p
        work[i] = 0
        if c:
            # x^n = -(modulus[n-1] x^(n-1) + ... + modulus[0])
            for j in range(n):
                work[i - n + j] -= c * spec.modulus[j]
    return [w % p for w in work[:n]]


def oracle_element(field, op: str, operands):
    """Textbook scalar arithmetic for base rings and extension fields.

    Base operands are residues; extension operands are coefficient tuples
    (low degree first).  ``reduce`` canonicalizes a stored representation
    value, which for the binary-coded rings means taking the value mod
    the characteristic.
    """
    if isinstance(field, ExtFieldSpec):
        p = field.base.order
        if op == "add":
            a, b = operands
            return tuple((x + y) % p for x, y in zip(a, b))
        if op == "sub":
            a, b = operands
            return tuple((x - y) % p for x, y in zip(a, b))
        if op == "neg":
            (a,) = operands
            return tuple((-x) % p for x in a)
        if op == "double":
            (a,) = operands
            return tuple((2 * x) % p for x in a)
        if op == "mul":
            a, b = operands
            return poly_mul_mod(field, a, b)
        if op == "reduce":
            (a,) = operands
            return field.canonical_element(a)
        raise ValueError(f"unknown op {op!r}")

    order = field.order
    if op == "reduce":
        # Accepts any representation value (0 .. 2^bits - 1).
        (a,) = operands
        if not 0 <= a < 2**field.bits:
            raise ValueError(f"{a} is not a {field.name} representation value")
        return a % order
    for a in operands:
        if not 0 <= a < order:
            raise ValueError(f"{a} is not a residue of {field.name}")
    if op == "add":
        a, b = operands
        return (a + b) % order
    if op == "sub":
        a, b = operands
        return (a - b) % order
    if op == "neg":
        (a,) = operands
        return (-a) % order
    if op == "double":
        (a,) = operands
        return (2 * a) % order
    if op == "mul":
        a, b = operands
        return (a * b) % order
    raise ValueError(f"unknown op {op!r}")


def oracle_ext_multiply(spec: ExtFieldSpec, A_coeffs, B_coeffs) -> list:
    """Schoolbook product of extension matrices given as coefficient lists.

    Uses the full degree^2 grid of base products followed by polynomial
    reduction, so it shares nothing with the fast multiply it checks.
    """
    n = spec.degree
    if len(A_coeffs) != n or len(B_coeffs) != n:
        raise ValueError(f"need {n} coefficient matrices")
    m, inner = A_coeffs[0].nrows, B_coeffs[0].ncols
    prod = [DenseMatrix.zero(spec.base, m, inner) for _ in range(2 * n - 1)]
    for i in range(n):
        for j in range(n):
            prod[i + j] = oracle_add(prod[i + j], oracle_multiply(A_coeffs[i], B_coeffs[j]))
    # Reduce by the defining polynomial using only add/sub/scalar ops.
    for i in range(2 * n - 2, n - 1, -1):
        head = prod[i]
        for j in range(n):
            c = spec.modulus[j]
            if c:
                prod[i - n + j] = oracle_sub(
                    prod[i - n + j], oracle_scalar_mul(head, c)
                )
    return prod[:n]
