"""Word-parallel boolean kernels for elementwise ring arithmetic.

Each routine exists twice: as a plain Python function on integer words
(bit position = lane, so Python ints of any width work) and as a
SequentialProgram whose instruction count is part of the contract.  The
tests check the two forms compute the same function and that the program
lengths hit their budgets exactly.

Routines that need bitwise complement take an explicit all-ones word so
lane width stays caller-controlled; their program form spends one extra
input on the constant rather than an instruction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .fields import F3, F5, F7, FieldSpec, Z4, Z8
from .programs import ProgramBuilder, SequentialProgram

WORD_BITS = 64
ALL_ONES = (1 << WORD_BITS) - 1


# ---------------------------------------------------------------------------
# Lanewise binary adders.

def adder_chain(a_bits, b_bits, drop_final_carry: bool = False) -> list:
    """Lanewise integer sum of two little-endian word vectors.

    Operands may arrive in either length order; the result has
    max(n, m) + 1 words unless the final carry is dropped.
    """
    a, b = list(a_bits), list(b_bits)
    if not a or not b:
        raise ValueError("adder operands must be non-empty")
    if len(b) > len(a):
        a, b = b, a
    n, m = len(a), len(b)
    out = []
    carry = 0
    for pos in range(n):
        if pos < m:
            t = a[pos] ^ b[pos]
            out.append(t ^ carry)
            carry = (a[pos] & b[pos]) | (t & carry)
        else:
            out.append(a[pos] ^ carry)
            carry = a[pos] & carry
    if not drop_final_carry:
        out.append(carry)
    return out


def emit_adder_chain(pb: ProgramBuilder, a_refs, b_refs,
                     drop_final_carry: bool = False) -> list:
    """Emit the grade-school adder into an open builder; returns sum refs.

    Costs one half adder at the bottom, full adders while both operands
    have bits, and carry-propagate half adders above: 3m + 2n - 3
    instructions with the final carry kept.
    """
    a, b = list(a_refs), list(b_refs)
    if not a or not b:
        raise ValueError("adder operands must be non-empty")
    if len(b) > len(a):
        a, b = b, a
    n, m = len(a), len(b)
    out = []
    carry = None
    for pos in range(n):
        last = pos == n - 1
        skip_carry = last and drop_final_carry
        if pos == 0:
            out.append(pb.xor(a[0], b[0]))
            if not skip_carry:
                carry = pb.and_(a[0], b[0])
        elif pos < m:
            t = pb.xor(a[pos], b[pos])
            out.append(pb.xor(t, carry))
            if not skip_carry:
                u = pb.and_(a[pos], b[pos])
                w = pb.and_(t, carry)
                carry = pb.or_(u, w)
        else:
            out.append(pb.xor(a[pos], carry))
            if not skip_carry:
                carry = pb.and_(a[pos], carry)
    if not drop_final_carry:
        out.append(carry)
    return out


def adder_chain_program(n: int, m: int,
                        drop_final_carry: bool = False) -> SequentialProgram:
    """Program form of adder_chain: inputs a0..a(n-1) then b0..b(m-1)."""
    if n < 1 or m < 1:
        raise ValueError("adder operands must be non-empty")
    if m > n:
        n, m = m, n
    pb = ProgramBuilder(n + m)
    a = [pb.input(t) for t in range(n)]
    b = [pb.input(n + t) for t in range(m)]
    return pb.finish(emit_adder_chain(pb, a, b, drop_final_carry))


def adder_chain_cost(n: int, m: int, drop_final_carry: bool = False) -> int:
    """Instruction count of the emitted chain."""
    if m > n:
        n, m = m, n
    cost = 3 * m + 2 * n - 3
    if drop_final_carry:
        cost -= 3 if (m == n and n > 1) else 1
    return cost


# ---------------------------------------------------------------------------
# Z/4: two planes, unique representation.

def z4_add(a0, a1, b0, b1):
    return a0 ^ b0, (a1 ^ b1) ^ (a0 & b0)


def z4_neg(a0, a1):
    return a0, a0 ^ a1


def z4_sub(a0, a1, b0, b1):
    n0, n1 = z4_neg(b0, b1)
    return z4_add(a0, a1, n0, n1)


def z4_double(a0, a1):
    return 0, a0


def _z4_add_program():
    pb = ProgramBuilder(4)
    a0, a1, b0, b1 = (pb.input(t) for t in range(4))
    r0 = pb.xor(a0, b0)
    c = pb.and_(a0, b0)
    t = pb.xor(a1, b1)
    r1 = pb.xor(t, c)
    return pb.finish((r0, r1))


# ---------------------------------------------------------------------------
# GF(3): planes (unit, sign); 0 = 00, 1 = 01, -1 = 11.

def f3_add(xu, xs, yu, ys):
    u = xu ^ ys
    v = xs ^ yu
    s = u ^ xs
    t = v ^ ys
    # The shared subexpressions u, v make this six operations total.
    return s | t, u & v


def f3_neg(au, as_):
    return au, au ^ as_


def f3_sub(xu, xs, yu, ys):
    t = xu ^ yu
    ru = t | (xs ^ ys)
    rs = (t ^ ys) & (yu ^ xs)
    return ru, rs


def _f3_add_program():
    pb = ProgramBuilder(4)
    xu, xs, yu, ys = (pb.input(t) for t in range(4))
    u = pb.xor(xu, ys)
    v = pb.xor(xs, yu)
    s = pb.xor(u, xs)
    t = pb.xor(v, ys)
    rs = pb.and_(u, v)
    ru = pb.or_(s, t)
    return pb.finish((ru, rs))


def _f3_neg_program():
    pb = ProgramBuilder(2)
    au, as_ = pb.input(0), pb.input(1)
    rs = pb.xor(au, as_)
    return pb.finish((au, rs))


def _f3_sub_program():
    pb = ProgramBuilder(4)
    xu, xs, yu, ys = (pb.input(t) for t in range(4))
    t = pb.xor(xu, yu)
    w = pb.xor(xs, ys)
    ru = pb.or_(t, w)
    p = pb.xor(t, ys)
    q = pb.xor(yu, xs)
    rs = pb.and_(p, q)
    return pb.finish((ru, rs))


# ---------------------------------------------------------------------------
# GF(5): three planes, value mod 5, representations 0..7 non-unique.

def f5_fold5(s0, s1, s2, s3):
    """Fold the 8-bit of a 4-bit lane into the low three, preserving mod 5."""
    t = s2 | s1
    r2 = s0 ^ t
    r1 = (r2 & s0) ^ (s3 ^ s1)
    r0 = (t ^ s2) | (r1 & s3)
    return r0, r1, r2


def f5_fold5_wide(s0, s1, s2, s3, ones: int = ALL_ONES):
    """The longer but readable fold: bias by 5 - s2 - 2*s3, add, unwrap 8."""
    n0 = s2 ^ ones
    n1 = s3
    n2 = s3 ^ ones
    e0, e1, e2, e3 = adder_chain([n0, n1, n2], [s0, s1])
    return e0 ^ e3, e1 ^ e3, e2


def f5_add(a0, a1, a2, b0, b1, b2):
    s0, s1, s2, s3 = adder_chain([a0, a1, a2], [b0, b1, b2])
    return f5_fold5(s0, s1, s2, s3)


def f5_double(a0, a1, a2):
    # fold5 of the left-shifted lane with the zero constant propagated.
    t = a1 | a0
    r1 = a2 ^ a0
    r0 = (t ^ a1) | (r1 & a2)
    return r0, r1, t


def f5_neg(a0, a1, a2):
    # fold5 of the lane permutation s3 s2 s1 s0 = a1 a0 0 a2, simplified.
    r2 = a2 ^ a0
    r1 = (r2 & a2) ^ a1
    r0 = r1 & a1
    return r0, r1, r2


def f5_reduce(a0, a1, a2):
    # c flags lanes >= 5; conditionally add 3 and clear the top bit.
    c = a2 & (a1 | a0)
    r0 = a0 ^ c
    r2 = a2 ^ c
    w = c ^ (c & a0)
    r1 = a1 ^ (a1 & w)
    return r0, r1, r2


def f5_sub(a0, a1, a2, b0, b1, b2):
    n0, n1, n2 = f5_neg(b0, b1, b2)
    return f5_add(a0, a1, a2, n0, n1, n2)


def _emit_fold5(pb: ProgramBuilder, s):
    t = pb.or_(s[2], s[1])
    r2 = pb.xor(s[0], t)
    u = pb.and_(r2, s[0])
    w = pb.xor(s[3], s[1])
    r1 = pb.xor(u, w)
    p = pb.xor(t, s[2])
    q = pb.and_(r1, s[3])
    r0 = pb.or_(p, q)
    return r0, r1, r2


def _f5_fold5_program():
    pb = ProgramBuilder(4)
    return pb.finish(_emit_fold5(pb, [pb.input(t) for t in range(4)]))


def _f5_fold5_wide_program():
    pb = ProgramBuilder(5, const_one=True)
    s = [pb.input(t) for t in range(4)]
    n0 = pb.xor(s[2], pb.one)
    n2 = pb.xor(s[3], pb.one)
    e = emit_adder_chain(pb, [n0, s[3], n2], [s[0], s[1]])
    r0 = pb.xor(e[0], e[3])
    r1 = pb.xor(e[1], e[3])
    return pb.finish((r0, r1, e[2]))


def _f5_add_program():
    pb = ProgramBuilder(6)
    a = [pb.input(t) for t in range(3)]
    b = [pb.input(3 + t) for t in range(3)]
    s = emit_adder_chain(pb, a, b)
    return pb.finish(_emit_fold5(pb, s))


def _f5_double_program():
    pb = ProgramBuilder(3)
    a0, a1, a2 = (pb.input(t) for t in range(3))
    t = pb.or_(a1, a0)
    r1 = pb.xor(a2, a0)
    p = pb.xor(t, a1)
    q = pb.and_(r1, a2)
    r0 = pb.or_(p, q)
    return pb.finish((r0, r1, t))


def _f5_neg_program():
    pb = ProgramBuilder(3)
    a0, a1, a2 = (pb.input(t) for t in range(3))
    r2 = pb.xor(a2, a0)
    u = pb.and_(r2, a2)
    r1 = pb.xor(u, a1)
    r0 = pb.and_(r1, a1)
    return pb.finish((r0, r1, r2))


def _f5_reduce_program():
    pb = ProgramBuilder(3)
    a0, a1, a2 = (pb.input(t) for t in range(3))
    v = pb.or_(a1, a0)
    c = pb.and_(a2, v)
    r0 = pb.xor(a0, c)
    r2 = pb.xor(a2, c)
    u = pb.and_(c, a0)
    w = pb.xor(c, u)
    f = pb.and_(a1, w)
    r1 = pb.xor(a1, f)
    return pb.finish((r0, r1, r2))


# ---------------------------------------------------------------------------
# GF(7): three planes, value mod 7, both 0 and 7 represent zero.

def f7_add(a0, a1, a2, b0, b1, b2):
    s0, s1, s2, s3 = adder_chain([a0, a1, a2], [b0, b1, b2])
    # The 8-bit is worth 1 mod 7; fold it back in.  The carry out of the
    # top position cannot fire because the lane sum is at most 14.
    r0 = s0 ^ s3
    c0 = s0 & s3
    r1 = s1 ^ c0
    c1 = s1 & c0
    r2 = s2 ^ c1
    return r0, r1, r2


def f7_double(a0, a1, a2):
    return a2, a0, a1


def f7_neg(a0, a1, a2, ones: int = ALL_ONES):
    # 7 - v is the bitwise complement for three-bit lanes.
    return a0 ^ ones, a1 ^ ones, a2 ^ ones


def f7_reduce(a0, a1, a2):
    t = (a0 & a1) & a2
    return a0 ^ t, a1 ^ t, a2 ^ t


def f7_sub(a0, a1, a2, b0, b1, b2, ones: int = ALL_ONES):
    n0, n1, n2 = f7_neg(b0, b1, b2, ones)
    return f7_add(a0, a1, a2, n0, n1, n2)


def _f7_add_program():
    pb = ProgramBuilder(6)
    a = [pb.input(t) for t in range(3)]
    b = [pb.input(3 + t) for t in range(3)]
    s = emit_adder_chain(pb, a, b)
    r0 = pb.xor(s[0], s[3])
    c0 = pb.and_(s[0], s[3])
    r1 = pb.xor(s[1], c0)
    c1 = pb.and_(s[1], c0)
    r2 = pb.xor(s[2], c1)
    return pb.finish((r0, r1, r2))


def _f7_double_program():
    pb = ProgramBuilder(3)
    return pb.finish((pb.input(2), pb.input(0), pb.input(1)))


def _f7_neg_program():
    pb = ProgramBuilder(4, const_one=True)
    outs = tuple(pb.xor(pb.input(t), pb.one) for t in range(3))
    return pb.finish(outs)


def _f7_reduce_program():
    pb = ProgramBuilder(3)
    a0, a1, a2 = (pb.input(t) for t in range(3))
    u = pb.and_(a0, a1)
    t = pb.and_(u, a2)
    return pb.finish((pb.xor(a0, t), pb.xor(a1, t), pb.xor(a2, t)))


# ---------------------------------------------------------------------------
# Z/8: three planes, plain binary, unique representation.

def z8_add(a0, a1, a2, b0, b1, b2):
    r = adder_chain([a0, a1, a2], [b0, b1, b2], drop_final_carry=True)
    return tuple(r)


def z8_neg(a0, a1, a2):
    # Two's complement: flip strictly above the lowest set bit.
    return a0, a0 ^ a1, (a0 | a1) ^ a2


def z8_sub(a0, a1, a2, b0, b1, b2):
    n0, n1, n2 = z8_neg(b0, b1, b2)
    return z8_add(a0, a1, a2, n0, n1, n2)


def z8_double(a0, a1, a2):
    return 0, a0, a1


def _z8_add_program():
    pb = ProgramBuilder(6)
    a = [pb.input(t) for t in range(3)]
    b = [pb.input(3 + t) for t in range(3)]
    return pb.finish(emit_adder_chain(pb, a, b, drop_final_carry=True))


def _z8_neg_program():
    pb = ProgramBuilder(3)
    a0, a1, a2 = (pb.input(t) for t in range(3))
    v = pb.or_(a0, a1)
    r2 = pb.xor(v, a2)
    r1 = pb.xor(a0, a1)
    return pb.finish((a0, r1, r2))


def _z8_double_program():
    # The shifted-out low bit needs a constant zero, built from the
    # constant-one input in two instructions.  No budget is claimed here;
    # the matrix layer implements doubling as a free plane shift.
    pb = ProgramBuilder(4, const_one=True)
    n = pb.xor(pb.input(0), pb.one)
    z = pb.and_(pb.input(0), n)
    return pb.finish((z, pb.input(0), pb.input(1)))


# ---------------------------------------------------------------------------
# GF(2) degenerate single-plane kernels (used by the matrix layer).

def f2_add(a, b):
    return (a ^ b,)


# ---------------------------------------------------------------------------
# Registry: ties fast routines, programs and reference semantics together.

def _pattern_bits(pattern: int, bits: int) -> tuple:
    return tuple((pattern >> d) & 1 for d in range(bits))


def _patterns_for(field: FieldSpec, residue: int) -> frozenset:
    return frozenset(
        _pattern_bits(p, field.bits)
        for p in field.valid_patterns
        if field.decode_table[p] == residue
    )


def _binary_cases(field: FieldSpec, op: str) -> tuple:
    cases = []
    for p in sorted(field.valid_patterns):
        for q in sorted(field.valid_patterns):
            r = oracle.oracle_element(
                field, op, (field.decode(p), field.decode(q))
            )
            cases.append(
                (
                    _pattern_bits(p, field.bits) + _pattern_bits(q, field.bits),
                    _patterns_for(field, r),
                )
            )
    return tuple(cases)


def _unary_cases(field: FieldSpec, op: str) -> tuple:
    cases = []
    for p in sorted(field.valid_patterns):
        r = oracle.oracle_element(field, op, (field.decode(p),))
        cases.append((_pattern_bits(p, field.bits), _patterns_for(field, r)))
    return tuple(cases)


def _reduce_cases(field: FieldSpec) -> tuple:
    # Reduce must land on the canonical pattern, not just the right residue.
    cases = []
    for p in sorted(field.valid_patterns):
        r = field.decode(p)
        cases.append(
            (
                _pattern_bits(p, field.bits),
                frozenset({_pattern_bits(field.canonical(r), field.bits)}),
            )
        )
    return tuple(cases)


def _fold5_cases() -> tuple:
    cases = []
    for v in range(15):
        acc = frozenset(_pattern_bits(r, 3) for r in range(8) if r % 5 == v % 5)
        cases.append((_pattern_bits(v, 4), acc))
    return tuple(cases)


@dataclass(frozen=True)
class KernelInfo:
    """One kernel's contract: program form, fast form, budget, semantics.

    ``cases`` enumerates every meaningful single-lane input as bit tuples
    together with the set of acceptable output bit tuples.
    """

    name: str
    fast_name: str
    program: SequentialProgram
    n_out: int
    cases: tuple
    exact_ops: int = None
    max_ops: int = None
    field: FieldSpec = None

    @property
    def needs_ones(self) -> bool:
        return self.program.const_one

    def fast(self):
        import sys

        return getattr(sys.modules[__name__], self.fast_name)

    def run_fast(self, words, ones: int = ALL_ONES):
        fn = self.fast()
        if self.needs_ones:
            return fn(*words, ones)
        out = fn(*words)
        return out if isinstance(out, tuple) else (out,)

    def run_program(self, words, ones: int = ALL_ONES):
        ins = list(words) + ([ones] if self.needs_ones else [])
        return tuple(self.program.evaluate(ins))


def _build_registry() -> dict:
    infos = [
        KernelInfo("f3_add", "f3_add", _f3_add_program(), 2,
                   _binary_cases(F3, "add"), exact_ops=6, field=F3),
        KernelInfo("f3_sub", "f3_sub", _f3_sub_program(), 2,
                   _binary_cases(F3, "sub"), exact_ops=6, field=F3),
        KernelInfo("f3_neg", "f3_neg", _f3_neg_program(), 2,
                   _unary_cases(F3, "neg"), exact_ops=1, field=F3),
        KernelInfo("z4_add", "z4_add", _z4_add_program(), 2,
                   _binary_cases(Z4, "add"), exact_ops=4, field=Z4),
        KernelInfo("f5_fold5", "f5_fold5", _f5_fold5_program(), 3,
                   _fold5_cases(), exact_ops=8, field=F5),
        KernelInfo("f5_fold5_wide", "f5_fold5_wide", _f5_fold5_wide_program(),
                   3, _fold5_cases(), exact_ops=13, field=F5),
        KernelInfo("f5_add", "f5_add", _f5_add_program(), 3,
                   _binary_cases(F5, "add"), exact_ops=20, field=F5),
        KernelInfo("f5_double", "f5_double", _f5_double_program(), 3,
                   _unary_cases(F5, "double"), max_ops=5, field=F5),
        KernelInfo("f5_neg", "f5_neg", _f5_neg_program(), 3,
                   _unary_cases(F5, "neg"), max_ops=6, field=F5),
        KernelInfo("f5_reduce", "f5_reduce", _f5_reduce_program(), 3,
                   _reduce_cases(F5), max_ops=8, field=F5),
        KernelInfo("f7_add", "f7_add", _f7_add_program(), 3,
                   _binary_cases(F7, "add"), exact_ops=17, field=F7),
        KernelInfo("f7_double", "f7_double", _f7_double_program(), 3,
                   _unary_cases(F7, "double"), exact_ops=0, field=F7),
        KernelInfo("f7_neg", "f7_neg", _f7_neg_program(), 3,
                   _unary_cases(F7, "neg"), exact_ops=3, field=F7),
        KernelInfo("f7_reduce", "f7_reduce", _f7_reduce_program(), 3,
                   _reduce_cases(F7), exact_ops=5, field=F7),
        KernelInfo("z8_add", "z8_add", _z8_add_program(), 3,
                   _binary_cases(Z8, "add"), max_ops=11, field=Z8),
        KernelInfo("z8_neg", "z8_neg", _z8_neg_program(), 3,
                   _unary_cases(Z8, "neg"), max_ops=7, field=Z8),
        KernelInfo("z8_double", "z8_double", _z8_double_program(), 3,
                   _unary_cases(Z8, "double"), field=Z8),
    ]
    return {info.name: info for info in infos}


KERNELS = _build_registry()
