"""Straight-line boolean programs over AND, OR and XOR.

A program on n inputs is a list of instructions (op, i, j) with
-n <= i < j < k at position k; evaluation runs the recurrence
v[k] = v[i] op v[j] where v[-n] .. v[-1] are the inputs.  Outputs may
name any value, inputs included.  Because every instruction is a plain
bitwise word operation, evaluating a program on W-bit words runs W
independent bit lanes at once; Python integers extend that to lanes of
any width.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import product

OPS = ("and", "or", "xor")
_OP_INDEX = {name: k for k, name in enumerate(OPS)}


def _apply(op: str, a: int, b: int) -> int:
    if op == "and":
        return a & b
    if op == "or":
        return a | b
    if op == "xor":
        return a ^ b
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class SequentialProgram:
    """An immutable straight-line program.

    ``n_inputs`` counts every input wire.  When ``const_one`` is set the
    final input is by convention fed an all-ones word; it counts as an
    input, not an instruction, so op_count is unaffected.
    """

    n_inputs: int
    instructions: tuple
    outputs: tuple
    const_one: bool = False

    def __post_init__(self):
        n = self.n_inputs
        if n < 1:
            raise ValueError("a program needs at least one input")
        for k, (op, i, j) in enumerate(self.instructions):
            if op not in _OP_INDEX:
                raise ValueError(f"instruction {k}: unknown op {op!r}")
            if not (-n <= i < j < k):
                raise ValueError(
                    f"instruction {k}: indices ({i}, {j}) violate "
                    f"-{n} <= i < j < {k}"
                )
        for o in self.outputs:
            if not (-n <= o < len(self.instructions)):
                raise ValueError(f"output index {o} out of range")

    @property
    def op_count(self) -> int:
        return len(self.instructions)

    def evaluate(self, inputs) -> list:
        """Run the program; ``inputs`` supplies all n_inputs words.

        For const_one programs the caller passes the all-ones word of the
        desired lane width as the last input.
        """
        if len(inputs) != self.n_inputs:
            raise ValueError(
                f"expected {self.n_inputs} inputs, got {len(inputs)}"
            )
        n = self.n_inputs
        values = list(inputs)
        for op, i, j in self.instructions:
            values.append(_apply(op, values[i + n], values[j + n]))
        return [values[o + n] for o in self.outputs]


class ProgramBuilder:
    """Incremental construction helper used by the kernel definitions."""

    def __init__(self, n_inputs: int, const_one: bool = False):
        self.n_inputs = n_inputs
        self.const_one = const_one
        self.instructions = []

    def input(self, t: int) -> int:
        if not 0 <= t < self.n_inputs:
            raise ValueError(f"no input {t}")
        return t - self.n_inputs

    @property
    def one(self) -> int:
        if not self.const_one:
            raise ValueError("program has no constant-one input")
        return -1

    def emit(self, op: str, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        if i == j:
            raise ValueError("operands must be distinct")
        k = len(self.instructions)
        self.instructions.append((op, i, j))
        return k

    def xor(self, i, j):
        return self.emit("xor", i, j)

    def and_(self, i, j):
        return self.emit("and", i, j)

    def or_(self, i, j):
        return self.emit("or", i, j)

    def finish(self, outputs) -> SequentialProgram:
        return SequentialProgram(
            self.n_inputs,
            tuple(self.instructions),
            tuple(outputs),
            const_one=self.const_one,
        )


def count_programs(n: int, length: int) -> int:
    """Number of length-``length`` programs on ``n`` inputs.

    Each of the ``length`` instructions picks one of three ops and an
    unordered pair of earlier values, of which there are k + n at
    position k.
    """
    if n < 2:
        raise ValueError("need at least two inputs")
    if length < 0:
        raise ValueError("length must be nonnegative")
    total = 3 ** length
    for k in range(length):
        total *= math.comb(k + n, 2)
    return total


def enumerate_programs(n: int, length: int):
    """Yield every instruction sequence counted by count_programs.

    Brute force; only usable for tiny (n, length).  Outputs are not
    enumerated, matching the counting formula.
    """
    slots = []
    for k in range(length):
        pairs = [
            (i, j)
            for j in range(-n, k)
            for i in range(-n, j)
        ]
        slots.append([(op, i, j) for op in OPS for (i, j) in pairs])
    for combo in product(*slots):
        yield combo


def _ref(idx: int, n: int) -> str:
    return f"in{idx + n}" if idx < 0 else f"v{idx}"


def serialize(prog: SequentialProgram) -> str:
    """Render a program in the one-instruction-per-line text format."""
    lines = []
    if prog.const_one:
        lines.append(f"# const-one input: in{prog.n_inputs - 1}")
    for k, (op, i, j) in enumerate(prog.instructions):
        lines.append(
            f"v{k} = {op}({_ref(i, prog.n_inputs)}, {_ref(j, prog.n_inputs)})"
        )
    outs = ", ".join(_ref(o, prog.n_inputs) for o in prog.outputs)
    lines.append(f"out = {outs}")
    return "\n".join(lines) + "\n"


_INSTR_RE = re.compile(
    r"^v(\d+)\s*=\s*(and|or|xor)\(\s*(in\d+|v\d+)\s*,\s*(in\d+|v\d+)\s*\)$"
)
_OUT_RE = re.compile(r"^out\s*=\s*(.*)$")


def _parse_ref(tok: str, n: int, limit: int) -> int:
    if tok.startswith("in"):
        t = int(tok[2:])
        if t >= n:
            raise ValueError(f"input {tok} out of range")
        return t - n
    k = int(tok[1:])
    if k >= limit:
        raise ValueError(f"forward reference {tok}")
    return k


def parse(text: str, n_inputs: int = None, const_one: bool = False):
    """Parse the text format back into a SequentialProgram.

    When ``n_inputs`` is omitted it is inferred as one past the highest
    input index referenced.
    """
    instr_lines = []
    out_line = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            if "const-one" in line:
                const_one = True
            continue
        m = _OUT_RE.match(line)
        if m:
            out_line = m.group(1)
            continue
        m = _INSTR_RE.match(line)
        if not m:
            raise ValueError(f"cannot parse line {raw!r}")
        k, op, a, b = m.groups()
        if int(k) != len(instr_lines):
            raise ValueError(f"instruction lines out of order at {raw!r}")
        instr_lines.append((op, a, b))
    if out_line is None:
        raise ValueError("missing out = ... line")

    if n_inputs is None:
        hi = -1
        toks = [t for _, a, b in instr_lines for t in (a, b)]
        toks += [t.strip() for t in out_line.split(",") if t.strip()]
        for tok in toks:
            if tok.startswith("in"):
                hi = max(hi, int(tok[2:]))
        n_inputs = hi + 1
        if n_inputs < 1:
            raise ValueError("cannot infer input count")

    instructions = []
    for k, (op, a, b) in enumerate(instr_lines):
        i = _parse_ref(a, n_inputs, k)
        j = _parse_ref(b, n_inputs, k)
        if i > j:
            i, j = j, i
        instructions.append((op, i, j))
    outputs = tuple(
        _parse_ref(tok.strip(), n_inputs, len(instructions))
        for tok in out_line.split(",")
        if tok.strip()
    )
    return SequentialProgram(
        n_inputs, tuple(instructions), outputs, const_one=const_one
    )
