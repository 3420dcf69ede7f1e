"""Gate and circuit records, standard decompositions, and basis-label evaluation.

Gates are plain records over wire indices; all primitives except H act as
permutations of the computational basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import PreconditionError

GATE_ARITY = {
    "X": 1,
    "H": 1,
    "CNOT": 2,
    "SWAP": 2,
    "CSWAP": 3,
    "TOFFOLI": 3,
}

# Every supported gate kind except H permutes basis labels with phase +1.
PERMUTATION_KINDS = frozenset(GATE_ARITY) - {"H"}


@dataclass(frozen=True)
class Gate:
    """One primitive gate: a kind plus the wires it acts on.

    For CNOT the wires are (control, target); for TOFFOLI
    (control, control, target); for CSWAP (control, swapped, swapped).
    """

    kind: str
    wires: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in GATE_ARITY:
            raise PreconditionError(f"unknown gate kind {self.kind!r}")
        wires = tuple(int(w) for w in self.wires)
        object.__setattr__(self, "wires", wires)
        if len(wires) != GATE_ARITY[self.kind]:
            raise PreconditionError(
                f"{self.kind} takes {GATE_ARITY[self.kind]} wires, got {len(wires)}"
            )
        if len(set(wires)) != len(wires):
            raise PreconditionError(f"{self.kind} wires must be distinct: {wires}")
        if any(w < 0 for w in wires):
            raise PreconditionError(f"wire indices must be nonnegative: {wires}")

    @classmethod
    def x(cls, target: int) -> "Gate":
        return cls("X", (target,))

    @classmethod
    def h(cls, target: int) -> "Gate":
        return cls("H", (target,))

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls("CNOT", (control, target))

    @classmethod
    def swap(cls, a: int, b: int) -> "Gate":
        return cls("SWAP", (a, b))

    @classmethod
    def cswap(cls, control: int, a: int, b: int) -> "Gate":
        return cls("CSWAP", (control, a, b))

    @classmethod
    def toffoli(cls, control_a: int, control_b: int, target: int) -> "Gate":
        return cls("TOFFOLI", (control_a, control_b, target))


@dataclass
class Circuit:
    """Ordered gate list over a fixed number of wires."""

    num_wires: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        if self.num_wires < 1:
            raise PreconditionError("circuit needs at least one wire")
        self.gates = list(self.gates)
        for gate in self.gates:
            self._check(gate)

    def _check(self, gate: Gate) -> None:
        if max(gate.wires) >= self.num_wires:
            raise PreconditionError(
                f"gate {gate.kind}{gate.wires} exceeds {self.num_wires} wires"
            )

    def append(self, gate: Gate) -> None:
        self._check(gate)
        self.gates.append(gate)

    def extend(self, gates: Iterable[Gate]) -> None:
        for gate in gates:
            self.append(gate)

    def reversed(self) -> "Circuit":
        """Gate-reversed circuit; the inverse, since every primitive is an involution."""
        return Circuit(self.num_wires, list(reversed(self.gates)))

    def counts(self) -> dict[str, int]:
        """Tally of gates by kind (only kinds that occur)."""
        out: dict[str, int] = {}
        for gate in self.gates:
            out[gate.kind] = out.get(gate.kind, 0) + 1
        return out

    def is_permutation(self) -> bool:
        """True when the circuit contains no H gate."""
        return all(g.kind in PERMUTATION_KINDS for g in self.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)


def decompose_swap(a: int, b: int) -> Circuit:
    """SWAP(a, b) as its three-CNOT equivalent."""
    if a == b:
        raise PreconditionError("swap wires must differ")
    wires = max(a, b) + 1
    return Circuit(wires, [Gate.cnot(a, b), Gate.cnot(b, a), Gate.cnot(a, b)])


def decompose_cswap(control: int, a: int, b: int) -> Circuit:
    """CSWAP(control, a, b) as CNOT, TOFFOLI, CNOT."""
    if len({control, a, b}) != 3:
        raise PreconditionError("cswap wires must be distinct")
    wires = max(control, a, b) + 1
    return Circuit(
        wires,
        [Gate.cnot(b, a), Gate.toffoli(control, a, b), Gate.cnot(b, a)],
    )


def expand_swaps(circuit: Circuit) -> Circuit:
    """Replace every SWAP by its three-CNOT decomposition."""
    out = Circuit(circuit.num_wires)
    for gate in circuit:
        if gate.kind == "SWAP":
            out.extend(decompose_swap(*gate.wires).gates)
        else:
            out.append(gate)
    return out


def expand_cswaps(circuit: Circuit) -> Circuit:
    """Replace every CSWAP by its CNOT/TOFFOLI/CNOT decomposition."""
    out = Circuit(circuit.num_wires)
    for gate in circuit:
        if gate.kind == "CSWAP":
            out.extend(decompose_cswap(*gate.wires).gates)
        else:
            out.append(gate)
    return out


def apply_gate_to_label(gate: Gate, label: int) -> int:
    """Image of one basis label under a permutation gate.

    H is rejected: it does not map basis states to basis states.
    """
    kind, ws = gate.kind, gate.wires
    if kind == "X":
        return label ^ (1 << ws[0])
    if kind == "CNOT":
        c, t = ws
        if (label >> c) & 1:
            return label ^ (1 << t)
        return label
    if kind == "SWAP":
        i, j = ws
        if ((label >> i) ^ (label >> j)) & 1:
            return label ^ (1 << i) ^ (1 << j)
        return label
    if kind == "TOFFOLI":
        c1, c2, t = ws
        if (label >> c1) & (label >> c2) & 1:
            return label ^ (1 << t)
        return label
    if kind == "CSWAP":
        c, i, j = ws
        if (label >> c) & 1 and ((label >> i) ^ (label >> j)) & 1:
            return label ^ (1 << i) ^ (1 << j)
        return label
    raise PreconditionError(f"{kind} is not a basis permutation")


def apply_circuit_to_label(circuit: Circuit, label: int) -> int:
    """Run an H-free circuit on a single basis label, gate by gate."""
    if not 0 <= label < (1 << circuit.num_wires):
        raise PreconditionError(f"label {label} out of range for {circuit.num_wires} wires")
    for gate in circuit:
        label = apply_gate_to_label(gate, label)
    return label
