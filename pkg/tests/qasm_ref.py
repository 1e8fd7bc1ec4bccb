"""Strict parser for the QASM subset the exporter emits, used in round-trip tests."""

from __future__ import annotations

import re

import numpy as np

from walsh_edge import qsim

_GATE_LINE = re.compile(r"(h|x|cx|ccx|swap)\s+([^;]+);")
_MAIN_REG = re.compile(r"qreg q\[(\d+)\];")
_ANC_REG = re.compile(r"qreg anc\[(\d+)\];")
_OPERAND = re.compile(r"(q|anc)\[(\d+)\]")


def parse_qasm(text: str) -> tuple[qsim.Circuit, int, int]:
    """Parse exporter output back into a circuit.

    Returns (circuit, main_width, ancilla_width); ancilla wires are mapped to
    the qubits above the main register.  Any line outside the emitted grammar
    fails the parse.
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    assert lines[0] == "OPENQASM 2.0;", lines[0]
    assert lines[1] == 'include "qelib1.inc";', lines[1]
    main_match = _MAIN_REG.fullmatch(lines[2])
    assert main_match, lines[2]
    main = int(main_match.group(1))
    cursor = 3
    anc = 0
    if cursor < len(lines):
        anc_match = _ANC_REG.fullmatch(lines[cursor])
        if anc_match:
            anc = int(anc_match.group(1))
            cursor += 1
    width = main + anc
    circuit = qsim.Circuit(width)

    def operand(token: str) -> int:
        match = _OPERAND.fullmatch(token.strip())
        assert match, f"bad operand {token!r}"
        index = int(match.group(2))
        return index if match.group(1) == "q" else main + index

    for line in lines[cursor:]:
        match = _GATE_LINE.fullmatch(line)
        assert match, f"unrecognized QASM line: {line!r}"
        name = match.group(1)
        regs = [operand(tok) for tok in match.group(2).split(",")]
        if name == "h":
            circuit.h(regs[0])
        elif name == "x":
            circuit.x(regs[0])
        elif name == "cx":
            circuit.cx(regs[0], regs[1])
        elif name == "ccx":
            circuit.mcx([(regs[0], 1), (regs[1], 1)], regs[2])
        else:  # swap: same permutation a relabel marker realizes
            perm = list(range(width))
            perm[regs[0]], perm[regs[1]] = perm[regs[1]], perm[regs[0]]
            circuit.relabel(perm)
    return circuit, main, anc


def reparsed_unitary(circuit: qsim.Circuit) -> np.ndarray:
    """Export, parse back, simulate; restrict to the main register.

    Asserts that no amplitude leaks out of the ancilla |0...0> subspace, then
    returns the main-register block for comparison with the original unitary.
    """
    parsed, main, anc = parse_qasm(qsim.export_qasm(circuit))
    full = qsim.unitary_of(parsed)
    dim = 1 << main
    if anc:
        leak = np.max(np.abs(full[dim:, :dim]))
        assert leak < 1e-12, f"ancillas not returned to zero (leak {leak})"
    return full[:dim, :dim]
