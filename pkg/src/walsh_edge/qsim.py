"""Gate-level statevector simulator for the H / X / CNOT / MCX gate set.

Every gate used by the edge-detection circuits is a real orthogonal matrix,
so amplitudes are stored as float64 (no complex phases can arise).  Qubit 0
is the least-significant bit of the basis index.  Wire renamings (used for
the qubit-order reversal inside the sequency reordering) are recorded as
:class:`Relabel` markers: they permute amplitudes in simulation, cost zero
depth, and are materialized as swap gates on QASM export.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_INV_SQRT2 = 1.0 / np.sqrt(2.0)

MAX_UNITARY_QUBITS = 10

_GATE_KINDS = ("h", "x", "cx", "mcx")


class DegeneratePostselectionError(RuntimeError):
    """Raised when the requested ancilla outcome has (numerically) zero weight."""


@dataclass(frozen=True)
class Gate:
    """A primitive gate; ``controls`` holds (qubit, polarity) pairs.

    Polarity 1 is a regular control, polarity 0 an anti-control (fires on 0).
    Plain h/x gates carry no controls; cx carries exactly one positive control.
    """

    kind: str
    target: int
    controls: tuple[tuple[int, int], ...] = ()

    def qubits(self) -> tuple[int, ...]:
        return (self.target, *(q for q, _ in self.controls))


@dataclass(frozen=True)
class Relabel:
    """Zero-cost wire renaming: the qubit labelled i becomes label perm[i]."""

    perm: tuple[int, ...]


def _validate_gate(gate: Gate, width: int) -> None:
    if gate.kind not in _GATE_KINDS:
        raise ValueError(f"unknown gate kind {gate.kind!r}")
    qubits = gate.qubits()
    for q in qubits:
        if not 0 <= q < width:
            raise ValueError(f"qubit {q} out of range for width {width}")
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"duplicate qubit in gate {gate}")
    for _, pol in gate.controls:
        if pol not in (0, 1):
            raise ValueError(f"control polarity must be 0 or 1, got {pol}")
    if gate.kind in ("h", "x") and gate.controls:
        raise ValueError(f"{gate.kind} gate takes no controls")
    if gate.kind == "cx" and (len(gate.controls) != 1 or gate.controls[0][1] != 1):
        raise ValueError("cx requires exactly one positive control")
    if gate.kind == "mcx" and not gate.controls:
        raise ValueError("mcx requires a non-empty control list")


def _validate_relabel(op: Relabel, width: int) -> None:
    if sorted(op.perm) != list(range(width)):
        raise ValueError(f"relabel {op.perm} is not a permutation of 0..{width - 1}")


@dataclass
class Circuit:
    """Ordered operation list over ``width`` qubits.

    ``ops`` interleaves :class:`Gate` objects with :class:`Relabel` markers;
    only gates contribute to gate counts and depth.
    """

    width: int
    ops: list = field(default_factory=list)

    def __post_init__(self):
        if self.width < 1:
            raise ValueError(f"circuit width must be >= 1, got {self.width}")
        for op in self.ops:
            self._validate(op)

    def _validate(self, op) -> None:
        if isinstance(op, Relabel):
            _validate_relabel(op, self.width)
        elif isinstance(op, Gate):
            _validate_gate(op, self.width)
        else:
            raise TypeError(f"unsupported op {op!r}")

    def append(self, op) -> "Circuit":
        self._validate(op)
        self.ops.append(op)
        return self

    def h(self, target: int) -> "Circuit":
        return self.append(Gate("h", target))

    def x(self, target: int) -> "Circuit":
        return self.append(Gate("x", target))

    def cx(self, control: int, target: int) -> "Circuit":
        return self.append(Gate("cx", target, ((control, 1),)))

    def mcx(self, controls, target: int) -> "Circuit":
        ctrl = tuple((int(q), int(p)) for q, p in controls)
        return self.append(Gate("mcx", target, ctrl))

    def relabel(self, perm) -> "Circuit":
        return self.append(Relabel(tuple(perm)))

    def compose(self, other: "Circuit") -> "Circuit":
        """Append another circuit's ops; the other circuit may be narrower."""
        for op in extend_circuit(other, self.width).ops:
            self.append(op)
        return self

    @property
    def gates(self) -> list:
        return [op for op in self.ops if isinstance(op, Gate)]


def extend_circuit(circuit: Circuit, width: int) -> Circuit:
    """Embed a circuit into a wider register, leaving the new qubits idle."""
    if width < circuit.width:
        raise ValueError(f"cannot shrink circuit of width {circuit.width} to {width}")
    if width == circuit.width:
        return circuit
    wide = Circuit(width)
    for op in circuit.ops:
        if isinstance(op, Relabel):
            wide.append(Relabel(op.perm + tuple(range(circuit.width, width))))
        else:
            wide.append(op)
    return wide


def _state_width(state: np.ndarray) -> int:
    size = state.shape[0]
    if state.ndim != 1 or size < 2 or size & (size - 1):
        raise ValueError(f"state length must be a power of two >= 2, got shape {state.shape}")
    return size.bit_length() - 1


def basis_state(width: int, index: int) -> np.ndarray:
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    if not 0 <= index < (1 << width):
        raise ValueError(f"basis index {index} out of range for width {width}")
    state = np.zeros(1 << width, dtype=np.float64)
    state[index] = 1.0
    return state


def _apply_hadamard(state: np.ndarray, target: int) -> np.ndarray:
    new = state.copy()
    view = new.reshape(-1, 2, 1 << target)
    top = view[:, 0, :].copy()
    bottom = view[:, 1, :].copy()
    view[:, 0, :] = (top + bottom) * _INV_SQRT2
    view[:, 1, :] = (top - bottom) * _INV_SQRT2
    return new


def _apply_controlled_flip(state: np.ndarray, controls, target: int) -> np.ndarray:
    if not controls:
        # plain X: gather with the target bit flipped
        idx = np.arange(state.shape[0])
        return state[idx ^ (1 << target)]
    new = state.copy()
    idx = np.arange(state.shape[0])
    mask = np.ones(state.shape[0], dtype=bool)
    for q, pol in controls:
        mask &= ((idx >> q) & 1) == pol
    fired = idx[mask]
    new[fired ^ (1 << target)] = state[fired]
    return new


def _apply_relabel(state: np.ndarray, perm) -> np.ndarray:
    idx = np.arange(state.shape[0])
    dest = np.zeros_like(idx)
    for i, p in enumerate(perm):
        dest |= ((idx >> i) & 1) << p
    new = np.empty_like(state)
    new[dest] = state
    return new


def apply_gate(state, op) -> np.ndarray:
    """Apply one gate (or relabel marker) and return the new statevector."""
    vec = np.asarray(state, dtype=np.float64)
    width = _state_width(vec)
    if isinstance(op, Relabel):
        _validate_relabel(op, width)
        return _apply_relabel(vec, op.perm)
    _validate_gate(op, width)
    if op.kind == "h":
        return _apply_hadamard(vec, op.target)
    return _apply_controlled_flip(vec, op.controls, op.target)


def run(circuit: Circuit, state) -> np.ndarray:
    """Apply all circuit ops in order; the input state is not modified."""
    vec = np.array(state, dtype=np.float64)
    if _state_width(vec) != circuit.width:
        raise ValueError(
            f"state of {_state_width(vec)} qubits does not fit circuit width {circuit.width}"
        )
    norm_in = float(np.linalg.norm(vec))
    for op in circuit.ops:
        vec = apply_gate(vec, op)
    norm_out = float(np.linalg.norm(vec))
    if abs(norm_out - norm_in) > 1e-9 * max(1.0, norm_in):
        raise ArithmeticError(f"norm drifted from {norm_in} to {norm_out}")
    return vec


def postselect_ancilla(state, ancilla: int, value: int) -> tuple[np.ndarray, float]:
    """Project onto ``ancilla == value`` and drop that qubit.

    Returns the UNNORMALIZED amplitude block plus its squared norm (the
    probability of observing ``value``).  Raises
    :class:`DegeneratePostselectionError` when that probability is below
    1e-15, i.e. there is nothing to select.
    """
    vec = np.asarray(state, dtype=np.float64)
    width = _state_width(vec)
    if width < 2:
        raise ValueError("postselection needs at least 2 qubits")
    if not 0 <= ancilla < width:
        raise ValueError(f"ancilla {ancilla} out of range for width {width}")
    if value not in (0, 1):
        raise ValueError(f"ancilla value must be 0 or 1, got {value}")
    block = vec.reshape(-1, 2, 1 << ancilla)[:, value, :].reshape(-1).copy()
    probability = float(block @ block)
    if probability < 1e-15:
        raise DegeneratePostselectionError(
            f"ancilla {ancilla} has no weight on outcome {value}"
        )
    return block, probability


def gate_count(circuit: Circuit) -> int:
    """Number of gates; relabel markers are free."""
    return sum(1 for op in circuit.ops if isinstance(op, Gate))


def circuit_depth(circuit: Circuit) -> int:
    """Greedy layering depth: gates sharing no qubit may share a layer."""
    level = [0] * circuit.width
    for op in circuit.ops:
        if isinstance(op, Relabel):
            moved = [0] * circuit.width
            for i, p in enumerate(op.perm):
                moved[p] = level[i]
            level = moved
            continue
        touched = op.qubits()
        layer = 1 + max(level[q] for q in touched)
        for q in touched:
            level[q] = layer
    return max(level, default=0)


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Dense matrix of the circuit; column k is the image of basis state k."""
    if circuit.width > MAX_UNITARY_QUBITS:
        raise ValueError(
            f"unitary_of supports at most {MAX_UNITARY_QUBITS} qubits, got {circuit.width}"
        )
    dim = 1 << circuit.width
    matrix = np.empty((dim, dim), dtype=np.float64)
    for k in range(dim):
        matrix[:, k] = run(circuit, basis_state(circuit.width, k))
    return matrix


def build_sequency_order_circuit(n: int) -> Circuit:
    """Basis permutation sending |m> to |gray_index(m, n)>.

    A qubit-order reversal (free relabel) followed by a descending CNOT
    cascade whose controls read the already-updated wire values.
    """
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    circ = Circuit(n)
    if n > 1:
        circ.relabel(range(n - 1, -1, -1))
        for j in range(n - 2, -1, -1):
            circ.cx(j + 1, j)
    return circ


def build_sequency_wht_circuit(n: int) -> Circuit:
    """Sequency-ordered Walsh-Hadamard transform: H layer, then reordering.

    Depth n (one H layer plus n-1 sequential CNOTs), 2n-1 gates.
    """
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    circ = Circuit(n)
    for q in range(n):
        circ.h(q)
    return circ.compose(build_sequency_order_circuit(n))


def build_inverse_sequency_wht_circuit(n: int) -> Circuit:
    """Inverse transform: ascending CNOT cascade, reversal, then H layer."""
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    circ = Circuit(n)
    if n > 1:
        for j in range(n - 1):
            circ.cx(j + 1, j)
        circ.relabel(range(n - 1, -1, -1))
    for q in range(n):
        circ.h(q)
    return circ


def dyadic_cover(cutoff: int, n: int) -> list[tuple[int, int]]:
    """Minimal dyadic-interval cover of [0, cutoff) as (prefix, prefix_len) pairs.

    Each pair fixes the top ``prefix_len`` bits of an n-bit index to the value
    ``prefix``; the intervals are disjoint and there is one per set bit of
    ``cutoff``.
    """
    if n < 1:
        raise ValueError(f"bit width must be >= 1, got {n}")
    if not 1 <= cutoff <= (1 << n) - 1:
        raise ValueError(f"cutoff must be in [1, {(1 << n) - 1}], got {cutoff}")
    cover = []
    base = 0
    for b in range(n - 1, -1, -1):
        if (cutoff >> b) & 1:
            cover.append((base >> b, n - b))
            base += 1 << b
    return cover


def build_highpass_circuit(n: int, cutoff: int) -> Circuit:
    """Ancilla-tagging filter on n data qubits plus ancilla qubit n.

    One multi-controlled X per dyadic interval of [0, cutoff): the ancilla is
    flipped exactly when the data index is below the cutoff.  Gate count
    equals popcount(cutoff).
    """
    cover = dyadic_cover(cutoff, n)
    circ = Circuit(n + 1)
    for prefix, length in cover:
        controls = [(n - 1 - i, (prefix >> (length - 1 - i)) & 1) for i in range(length)]
        circ.mcx(controls, n)
    return circ


# --- OpenQASM 2.0 export -----------------------------------------------------


def _permutation_swaps(perm) -> list[tuple[int, int]]:
    """Transpositions realizing a wire permutation, cycle by cycle."""
    swaps = []
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        for other in cycle[1:]:
            swaps.append((cycle[0], other))
    return swaps


def _emit_mcx(lines: list, controls, target: int) -> None:
    for q, pol in controls:
        if pol == 0:
            lines.append(f"x q[{q}];")
    ctrl = [q for q, _ in controls]
    k = len(ctrl)
    if k == 1:
        lines.append(f"cx q[{ctrl[0]}],q[{target}];")
    elif k == 2:
        lines.append(f"ccx q[{ctrl[0]}],q[{ctrl[1]}],q[{target}];")
    else:
        # clean-ancilla Toffoli chain: compute the AND tree, hit the target,
        # then uncompute so the ancillas return to |0>
        chain = [f"ccx q[{ctrl[0]}],q[{ctrl[1]}],anc[0];"]
        for i in range(2, k - 1):
            chain.append(f"ccx q[{ctrl[i]}],anc[{i - 2}],anc[{i - 1}];")
        lines.extend(chain)
        lines.append(f"ccx q[{ctrl[k - 1]}],anc[{k - 3}],q[{target}];")
        lines.extend(reversed(chain))
    for q, pol in controls:
        if pol == 0:
            lines.append(f"x q[{q}];")


def export_qasm(circuit: Circuit) -> str:
    """OpenQASM 2.0 text for the circuit.

    h/x/cx map directly; relabel markers become explicit swap gates; an MCX
    with k >= 3 controls is decomposed into a clean-ancilla Toffoli chain on
    an auxiliary register ``anc`` (k - 2 ancillas, borrowed at |0> and
    returned to |0>).  Anti-controls are wrapped in X gates.
    """
    anc = 0
    for gate in circuit.gates:
        if gate.kind == "mcx" and len(gate.controls) >= 3:
            anc = max(anc, len(gate.controls) - 2)
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{circuit.width}];"]
    if anc:
        lines.append(f"qreg anc[{anc}];")
    for op in circuit.ops:
        if isinstance(op, Relabel):
            for a, b in _permutation_swaps(op.perm):
                lines.append(f"swap q[{a}],q[{b}];")
        elif op.kind == "h":
            lines.append(f"h q[{op.target}];")
        elif op.kind == "x":
            lines.append(f"x q[{op.target}];")
        elif op.kind == "cx":
            lines.append(f"cx q[{op.controls[0][0]}],q[{op.target}];")
        else:
            _emit_mcx(lines, op.controls, op.target)
    return "\n".join(lines) + "\n"
