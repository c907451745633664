"""Pure-Python core: numpy implementations of the hot kernels.

This module mirrors the compiled extension exactly: same function names,
same in-place semantics on (rows, words) uint64 arrays, same enumeration
orders in the program search.  It exists so the library works without a C
compiler; the compiled core is selected automatically when present.

Elementwise functions mutate their destination plane arrays in place.
Argument order is destination planes low to high, then source planes.
"""

from __future__ import annotations

import numpy as np

NAME = "pure"

_ONE = np.uint64(1)


# ---------------------------------------------------------------------------
# Elementwise plane kernels.

def f2_add(d0, s0):
    np.bitwise_xor(d0, s0, out=d0)


def f3_add(d0, d1, s0, s1):
    u = d0 ^ s1
    v = d1 ^ s0
    np.bitwise_or(u ^ d1, v ^ s1, out=d0)
    np.bitwise_and(u, v, out=d1)


def f3_sub(d0, d1, s0, s1):
    t = d0 ^ s0
    rs = (t ^ s1) & (s0 ^ d1)
    np.bitwise_or(t, d1 ^ s1, out=d0)
    d1[...] = rs


def f3_neg(p0, p1):
    np.bitwise_xor(p1, p0, out=p1)


def z4_add(d0, d1, s0, s1):
    c = d0 & s0
    np.bitwise_xor(d0, s0, out=d0)
    np.bitwise_xor(d1, s1, out=d1)
    np.bitwise_xor(d1, c, out=d1)


def z4_sub(d0, d1, s0, s1):
    n1 = s0 ^ s1
    c = d0 & s0
    np.bitwise_xor(d0, s0, out=d0)
    np.bitwise_xor(d1, n1, out=d1)
    np.bitwise_xor(d1, c, out=d1)


def z4_neg(p0, p1):
    np.bitwise_xor(p1, p0, out=p1)


def _add3_into(d0, d1, d2, s0, s1, s2, fold):
    """Three-bit lanewise add of s into d, then the field's carry fold."""
    t0 = d0 ^ s0
    c0 = d0 & s0
    t1 = d1 ^ s1
    r1 = t1 ^ c0
    c1 = (d1 & s1) | (t1 & c0)
    t2 = d2 ^ s2
    r2 = t2 ^ c1
    s3 = (d2 & s2) | (t2 & c1)
    fold(d0, d1, d2, t0, r1, r2, s3)


def _fold_z8(d0, d1, d2, s0, s1, s2, s3):
    d0[...] = s0
    d1[...] = s1
    d2[...] = s2


def _fold_f7(d0, d1, d2, s0, s1, s2, s3):
    c0 = s0 & s3
    d0[...] = s0 ^ s3
    d1[...] = s1 ^ c0
    d2[...] = s2 ^ (s1 & c0)


def _fold_f5(d0, d1, d2, s0, s1, s2, s3):
    t = s2 | s1
    r2 = s0 ^ t
    r1 = (r2 & s0) ^ (s3 ^ s1)
    d0[...] = (t ^ s2) | (r1 & s3)
    d1[...] = r1
    d2[...] = r2


def z8_add(d0, d1, d2, s0, s1, s2):
    _add3_into(d0, d1, d2, s0, s1, s2, _fold_z8)


def z8_neg(p0, p1, p2):
    v = p0 | p1
    np.bitwise_xor(p2, v, out=p2)
    np.bitwise_xor(p1, p0, out=p1)


def z8_sub(d0, d1, d2, s0, s1, s2):
    n1 = s0 ^ s1
    n2 = (s0 | s1) ^ s2
    _add3_into(d0, d1, d2, s0, n1, n2, _fold_z8)


def f5_add(d0, d1, d2, s0, s1, s2):
    _add3_into(d0, d1, d2, s0, s1, s2, _fold_f5)


def f5_neg(p0, p1, p2):
    r2 = p2 ^ p0
    r1 = (r2 & p2) ^ p1
    p0[...] = r1 & p1
    p1[...] = r1
    p2[...] = r2


def f5_sub(d0, d1, d2, s0, s1, s2):
    n2 = s2 ^ s0
    n1 = (n2 & s2) ^ s1
    n0 = n1 & s1
    _add3_into(d0, d1, d2, n0, n1, n2, _fold_f5)


def f5_double(p0, p1, p2):
    t = p1 | p0
    r1 = p2 ^ p0
    p0[...] = (t ^ p1) | (r1 & p2)
    p1[...] = r1
    p2[...] = t


def f5_reduce(p0, p1, p2):
    c = p2 & (p1 | p0)
    w = c ^ (c & p0)
    np.bitwise_xor(p0, c, out=p0)
    np.bitwise_xor(p2, c, out=p2)
    np.bitwise_xor(p1, p1 & w, out=p1)


def f7_add(d0, d1, d2, s0, s1, s2):
    _add3_into(d0, d1, d2, s0, s1, s2, _fold_f7)


def f7_neg(p0, p1, p2, tail):
    for p in (p0, p1, p2):
        np.invert(p, out=p)
        if p.shape[-1]:
            p[..., -1] &= tail


def f7_sub(d0, d1, d2, s0, s1, s2, tail):
    n0, n1, n2 = ~s0, ~s1, ~s2
    if n0.shape[-1]:
        n0[..., -1] &= tail
        n1[..., -1] &= tail
        n2[..., -1] &= tail
    _add3_into(d0, d1, d2, n0, n1, n2, _fold_f7)


def f7_reduce(p0, p1, p2):
    t = (p0 & p1) & p2
    np.bitwise_xor(p0, t, out=p0)
    np.bitwise_xor(p1, t, out=p1)
    np.bitwise_xor(p2, t, out=p2)


# ---------------------------------------------------------------------------
# Table-driven multiply block drivers.
#
# Each driver applies one k-wide block of the decomposition to rows
# row0..row1 of the output: it reads the block's index bits straight off
# the left operand's planes, looks rows up in the precomputed table and
# accumulates.  Table row 0 is all zero and is skipped.

def _extract(plane, col0, kp):
    m = plane.shape[0]
    out = np.zeros(m, dtype=np.int64)
    for t in range(kp):
        w, b = divmod(col0 + t, 64)
        out |= ((plane[:, w] >> np.uint64(b)) & _ONE).astype(np.int64) << t
    return out


def _extract_xor(pa, pb, col0, kp):
    m = pa.shape[0]
    out = np.zeros(m, dtype=np.int64)
    for t in range(kp):
        w, b = divmod(col0 + t, 64)
        bits = (((pa[:, w] ^ pb[:, w]) >> np.uint64(b)) & _ONE).astype(np.int64)
        out |= bits << t
    return out


def m4rm_block_f2(C0, A0, col0, kp, T0, row0, row1):
    idx = _extract(A0, col0, kp)
    for i in range(row0, row1):
        g = idx[i]
        if g:
            np.bitwise_xor(C0[i], T0[g], out=C0[i])


def m4rm_block_f3(C0, C1, A0, A1, col0, kp, T0, T1, row0, row1):
    idx_pos = _extract_xor(A0, A1, col0, kp)
    idx_neg = _extract(A1, col0, kp)
    for i in range(row0, row1):
        g = idx_pos[i]
        if g:
            f3_add(C0[i], C1[i], T0[g], T1[g])
        h = idx_neg[i]
        if h:
            f3_sub(C0[i], C1[i], T0[h], T1[h])


def m4rm_block_z4(C0, C1, A0, A1, col0, kp, T0, T1, row0, row1):
    idx0 = _extract(A0, col0, kp)
    idx1 = _extract(A1, col0, kp)
    w = C0.shape[1]
    for i in range(row0, row1):
        g1, g0 = idx1[i], idx0[i]
        if not (g1 or g0):
            continue
        # Horner over the basis {1, 2}: acc = 2*T[g1] + T[g0].
        acc0 = np.zeros(w, dtype=np.uint64)
        acc1 = T0[g1].copy()
        if g0:
            z4_add(acc0, acc1, T0[g0], T1[g0])
        z4_add(C0[i], C1[i], acc0, acc1)


def _block_basis3(add_into, double_inplace, C, A, col0, kp, T, row0, row1):
    idx = [_extract(A[d], col0, kp) for d in range(3)]
    w = C[0].shape[1]
    acc = [np.zeros(w, dtype=np.uint64) for _ in range(3)]
    for i in range(row0, row1):
        g2, g1, g0 = idx[2][i], idx[1][i], idx[0][i]
        if not (g2 or g1 or g0):
            continue
        for d in range(3):
            acc[d][...] = T[d][g2]
        acc = double_inplace(acc)
        add_into(acc[0], acc[1], acc[2], T[0][g1], T[1][g1], T[2][g1])
        acc = double_inplace(acc)
        add_into(acc[0], acc[1], acc[2], T[0][g0], T[1][g0], T[2][g0])
        add_into(C[0][i], C[1][i], C[2][i], acc[0], acc[1], acc[2])


def _double_f7(acc):
    return [acc[2], acc[0], acc[1]]


def _double_z8(acc):
    acc[2][...] = acc[1]
    acc[1][...] = acc[0]
    acc[0][...] = 0
    return acc


def _double_f5(acc):
    f5_double(acc[0], acc[1], acc[2])
    return acc


def m4rm_block_f5(C0, C1, C2, A0, A1, A2, col0, kp, T0, T1, T2, row0, row1):
    _block_basis3(f5_add, _double_f5, (C0, C1, C2), (A0, A1, A2),
                  col0, kp, (T0, T1, T2), row0, row1)


def m4rm_block_f7(C0, C1, C2, A0, A1, A2, col0, kp, T0, T1, T2, row0, row1):
    _block_basis3(f7_add, _double_f7, (C0, C1, C2), (A0, A1, A2),
                  col0, kp, (T0, T1, T2), row0, row1)


def m4rm_block_z8(C0, C1, C2, A0, A1, A2, col0, kp, T0, T1, T2, row0, row1):
    _block_basis3(z8_add, _double_z8, (C0, C1, C2), (A0, A1, A2),
                  col0, kp, (T0, T1, T2), row0, row1)


# ---------------------------------------------------------------------------
# Classical multiply drivers: one row accumulation per nonzero coefficient.

def classical_f2(C0, A0, B0):
    m, l = C0.shape[0], B0.shape[0]
    for j in range(l):
        w, b = divmod(j, 64)
        bits = (A0[:, w] >> np.uint64(b)) & _ONE
        for i in range(m):
            if bits[i]:
                np.bitwise_xor(C0[i], B0[j], out=C0[i])


def classical_f3(C0, C1, A0, A1, B0, B1):
    m, l = C0.shape[0], B0.shape[0]
    for j in range(l):
        w, b = divmod(j, 64)
        u = (A0[:, w] >> np.uint64(b)) & _ONE
        s = (A1[:, w] >> np.uint64(b)) & _ONE
        for i in range(m):
            if s[i]:
                f3_sub(C0[i], C1[i], B0[j], B1[j])
            elif u[i]:
                f3_add(C0[i], C1[i], B0[j], B1[j])


def classical_z4(C0, C1, A0, A1, B0, B1):
    m, l = C0.shape[0], B0.shape[0]
    w_words = C0.shape[1]
    for j in range(l):
        w, b = divmod(j, 64)
        v0 = (A0[:, w] >> np.uint64(b)) & _ONE
        v1 = (A1[:, w] >> np.uint64(b)) & _ONE
        for i in range(m):
            if not (v0[i] or v1[i]):
                continue
            acc0 = np.zeros(w_words, dtype=np.uint64)
            acc1 = B0[j].copy() if v1[i] else np.zeros(w_words, dtype=np.uint64)
            if v0[i]:
                z4_add(acc0, acc1, B0[j], B1[j])
            z4_add(C0[i], C1[i], acc0, acc1)


def _classical_basis3(add_into, double_inplace, C, A, B):
    m, l = C[0].shape[0], B[0].shape[0]
    w_words = C[0].shape[1]
    acc = [np.zeros(w_words, dtype=np.uint64) for _ in range(3)]
    for j in range(l):
        w, b = divmod(j, 64)
        bits = [((A[d][:, w] >> np.uint64(b)) & _ONE) for d in range(3)]
        for i in range(m):
            v2, v1, v0 = bits[2][i], bits[1][i], bits[0][i]
            if not (v2 or v1 or v0):
                continue
            for d in range(3):
                acc[d][...] = B[d][j] if v2 else 0
            acc = double_inplace(acc)
            if v1:
                add_into(acc[0], acc[1], acc[2], B[0][j], B[1][j], B[2][j])
            acc = double_inplace(acc)
            if v0:
                add_into(acc[0], acc[1], acc[2], B[0][j], B[1][j], B[2][j])
            add_into(C[0][i], C[1][i], C[2][i], acc[0], acc[1], acc[2])


def classical_f5(C0, C1, C2, A0, A1, A2, B0, B1, B2):
    _classical_basis3(f5_add, _double_f5, (C0, C1, C2), (A0, A1, A2),
                      (B0, B1, B2))


def classical_f7(C0, C1, C2, A0, A1, A2, B0, B1, B2):
    _classical_basis3(f7_add, _double_f7, (C0, C1, C2), (A0, A1, A2),
                      (B0, B1, B2))


def classical_z8(C0, C1, C2, A0, A1, A2, B0, B1, B2):
    _classical_basis3(z8_add, _double_z8, (C0, C1, C2), (A0, A1, A2),
                      (B0, B1, B2))


# ---------------------------------------------------------------------------
# Packed (classical integer packing) row kernels.

def packed_z4_add(out, a, b, mask):
    np.bitwise_and(a + b, mask, out=out)


def packed_f3_add(acc, src, low_mask, high_mask):
    t = acc + src
    np.add(t & low_mask, (t & high_mask) >> np.uint64(2), out=acc)


# ---------------------------------------------------------------------------
# Program search engines.
#
# Truth tables are integers with one bit per input assignment.  The
# enumeration order is fixed and shared with the compiled twin: operators
# and < or < xor, then left operand, then right operand.  A candidate
# value equal to an existing one is skipped (a shortest program never
# repeats a value), and a branch is pruned when more outputs are missing
# than instructions remain.

FOUND = 1
EXHAUSTED = 0
CAPPED = 2


def _proj_ok(v, bad1, bad0, full):
    return (v & bad1) == 0 and ((~v & full) & bad0) == 0


def _apply_op(op, a, b):
    if op == 0:
        return a & b
    if op == 1:
        return a | b
    return a ^ b


class _AcceptState:
    """Per-care-pattern bitmasks over the acceptable output tuples."""

    def __init__(self, cs):
        self.care_pats = cs["care_pats"]
        self.acc_vals = cs["acc_vals"]
        self.masks = [(1 << len(t)) - 1 for t in cs["acc_vals"]]

    def commit(self, o, table):
        """Filter tuples by output o taking table's bit per pattern.

        Returns the saved masks for rollback, or None if some pattern is
        left with no consistent tuple.
        """
        saved = list(self.masks)
        for ci, pat in enumerate(self.care_pats):
            bit = (table >> pat) & 1
            mm = self.masks[ci]
            nm = 0
            for ti, tv in enumerate(self.acc_vals[ci]):
                if (mm >> ti) & 1 and ((tv >> o) & 1) == bit:
                    nm |= 1 << ti
            if nm == 0:
                self.masks = saved
                return None
            self.masks[ci] = nm
        return saved

    def rollback(self, saved):
        self.masks = saved


def _try_assign(cs, vals, n_vals):
    """Pick output values (first workable choice in index order)."""
    m = cs["m"]
    bad1, bad0, full = cs["bad1"], cs["bad0"], cs["full_mask"]
    acc = _AcceptState(cs)
    chosen = [0] * m

    def rec(o):
        if o == m:
            return True
        for vi in range(n_vals):
            v = vals[vi]
            if not _proj_ok(v, bad1[o], bad0[o], full):
                continue
            saved = acc.commit(o, v)
            if saved is None:
                continue
            chosen[o] = vi
            if rec(o + 1):
                return True
            acc.rollback(saved)
        return False

    return list(chosen) if rec(0) else None


def run_exhaustive(cs, length, first=None, node_cap=0):
    """Depth-first search for a program of exactly `length` instructions.

    Returns (status, instructions, output_positions, nodes); instruction
    operands are positions into the value array (inputs first).
    """
    v0 = len(cs["tables0"])
    m = cs["m"]
    bad1, bad0, full = cs["bad1"], cs["bad0"], cs["full_mask"]
    vals = list(cs["tables0"]) + [0] * length
    ops = [0] * length
    lft = [0] * length
    rgt = [0] * length
    matched = [0] * m
    for o in range(m):
        matched[o] = sum(
            1 for vi in range(v0) if _proj_ok(vals[vi], bad1[o], bad0[o], full)
        )
    state = {"nodes": 0, "result": None, "capped": False}

    def push(k, op, i, j):
        state["nodes"] += 1
        if node_cap and state["nodes"] > node_cap:
            state["capped"] = True
            return None
        t = _apply_op(op, vals[i], vals[j])
        base = v0 + k
        for vi in range(base):
            if vals[vi] == t:
                return None
        vals[base] = t
        ops[k], lft[k], rgt[k] = op, i, j
        hits = []
        missing = 0
        for o in range(m):
            if _proj_ok(t, bad1[o], bad0[o], full):
                matched[o] += 1
                hits.append(o)
        return hits

    def pop(hits):
        for o in hits:
            matched[o] -= 1

    def dfs(k):
        if state["capped"] or state["result"] is not None:
            return
        missing = sum(1 for o in range(m) if matched[o] == 0)
        if missing > length - k:
            return
        if k == length:
            if missing == 0:
                outs = _try_assign(cs, vals, v0 + length)
                if outs is not None:
                    state["result"] = (
                        [(ops[q], lft[q], rgt[q]) for q in range(length)],
                        outs,
                    )
            return
        base = v0 + k
        for op in range(3):
            for i in range(base - 1):
                for j in range(i + 1, base):
                    hits = push(k, op, i, j)
                    if hits is None:
                        if state["capped"]:
                            return
                        continue
                    dfs(k + 1)
                    pop(hits)
                    if state["capped"] or state["result"] is not None:
                        return

    if first is not None:
        if length == 0:
            return (EXHAUSTED, None, None, 0)
        op, i, j = first
        hits = push(0, op, i, j)
        if hits is not None:
            dfs(1)
            pop(hits)
    else:
        dfs(0)

    if state["result"] is not None:
        instrs, outs = state["result"]
        return (FOUND, instrs, outs, state["nodes"])
    return (CAPPED if state["capped"] else EXHAUSTED, None, None, state["nodes"])


def run_staged(cs, perm, lens, node_cap=0):
    """Output-at-a-time search: stage q spends exactly lens[q] instructions
    building the cone of output perm[q], whose value is the stage's last
    instruction (or any existing value when lens[q] is 0).

    Covers every program whose per-output cone increments match `lens`
    under the order `perm`; used to find long programs that plain
    exhaustive search cannot reach.
    """
    v0 = len(cs["tables0"])
    m = cs["m"]
    bad1, bad0, full = cs["bad1"], cs["bad0"], cs["full_mask"]
    total = sum(lens)
    vals = list(cs["tables0"]) + [0] * total
    ops = [0] * total
    lft = [0] * total
    rgt = [0] * total
    acc = _AcceptState(cs)
    out_pos = [0] * m
    state = {"nodes": 0, "capped": False}

    def stage(q, n_vals):
        if q == m:
            return True
        budget = lens[q]
        o = perm[q]
        if budget == 0:
            for vi in range(n_vals):
                v = vals[vi]
                if not _proj_ok(v, bad1[o], bad0[o], full):
                    continue
                saved = acc.commit(o, v)
                if saved is None:
                    continue
                out_pos[o] = vi
                if stage(q + 1, n_vals):
                    return True
                acc.rollback(saved)
            return False

        used = [False] * budget
        k0 = n_vals - v0

        def sdfs(d, unused):
            if state["capped"]:
                return False
            cur = n_vals + d
            if d == budget:
                vi = cur - 1
                v = vals[vi]
                if not _proj_ok(v, bad1[o], bad0[o], full):
                    return False
                saved = acc.commit(o, v)
                if saved is None:
                    return False
                out_pos[o] = vi
                if stage(q + 1, cur):
                    return True
                acc.rollback(saved)
                return False
            remaining = budget - d - 1
            for op in range(3):
                for i in range(cur - 1):
                    for j in range(i + 1, cur):
                        state["nodes"] += 1
                        if node_cap and state["nodes"] > node_cap:
                            state["capped"] = True
                            return False
                        t = _apply_op(op, vals[i], vals[j])
                        dup = False
                        for vi in range(cur):
                            if vals[vi] == t:
                                dup = True
                                break
                        if dup:
                            continue
                        marks = []
                        for x in (i, j):
                            li = x - n_vals
                            if li >= 0 and not used[li]:
                                used[li] = True
                                marks.append(li)
                        u2 = unused + 1 - len(marks)
                        # Every value before the stage's last must feed it.
                        if u2 - 1 > remaining:
                            for li in marks:
                                used[li] = False
                            continue
                        vals[cur] = t
                        kk = k0 + d
                        ops[kk], lft[kk], rgt[kk] = op, i, j
                        if sdfs(d + 1, u2):
                            return True
                        for li in marks:
                            used[li] = False
                        if state["capped"]:
                            return False
            return False

        return sdfs(0, 0)

    found = stage(0, v0)
    if found:
        instrs = [(ops[q], lft[q], rgt[q]) for q in range(total)]
        return (FOUND, instrs, list(out_pos), state["nodes"])
    return (CAPPED if state["capped"] else EXHAUSTED, None, None, state["nodes"])
