"""Dense state-vector engine: register layouts, gate application, amplitude inspection.

Basis labels are integers; wire w contributes bit w of the label. Register
slots are little-endian: slot 1 of a segment is its least significant bit.
Displayed bitstrings are MSB-first within each segment.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import PreconditionError
from .gates import Circuit, Gate

NORM_TOL = 1e-12
SCHMIDT_TOL = 1e-10
DEFAULT_MAX_WIRES = 24

_SQRT_HALF = 1.0 / math.sqrt(2.0)


class StateVector:
    """Unit-norm array of ``2**num_wires`` complex amplitudes.

    Gate application mutates the amplitude buffer in place; use
    :meth:`copy` to keep a snapshot. Callers hold exclusive access to a
    state while operating on it.
    """

    __slots__ = ("num_wires", "amplitudes")

    def __init__(self, amplitudes, *, max_wires: int = DEFAULT_MAX_WIRES):
        arr = np.asarray(amplitudes, dtype=np.complex128).reshape(-1).copy()
        if arr.size < 2:
            raise PreconditionError(f"amplitude count {arr.size} is not 2**m with m >= 1")
        m = int(arr.size).bit_length() - 1
        if arr.size != 1 << m:
            raise PreconditionError(f"amplitude count {arr.size} is not 2**m with m >= 1")
        if m > max_wires:
            raise PreconditionError(f"{m} wires exceeds the {max_wires}-wire ceiling")
        norm = np.linalg.norm(arr)
        if abs(norm - 1.0) > NORM_TOL:
            raise PreconditionError(f"state norm {norm!r} deviates from 1 beyond {NORM_TOL}")
        self.num_wires = m
        self.amplitudes = arr

    @classmethod
    def from_label(cls, num_wires: int, label: int, *, max_wires: int = DEFAULT_MAX_WIRES) -> "StateVector":
        if num_wires < 1:
            raise PreconditionError("need at least one wire")
        if num_wires > max_wires:
            raise PreconditionError(f"{num_wires} wires exceeds the {max_wires}-wire ceiling")
        if not 0 <= label < (1 << num_wires):
            raise PreconditionError(f"label {label} out of range for {num_wires} wires")
        amps = np.zeros(1 << num_wires, dtype=np.complex128)
        amps[label] = 1.0
        out = object.__new__(cls)
        out.num_wires = num_wires
        out.amplitudes = amps
        return out

    def copy(self) -> "StateVector":
        out = object.__new__(StateVector)
        out.num_wires = self.num_wires
        out.amplitudes = self.amplitudes.copy()
        return out

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def amplitude(self, label: int) -> complex:
        return complex(self.amplitudes[label])

    def nonzero_labels(self) -> np.ndarray:
        return np.flatnonzero(self.amplitudes)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def allclose(self, other: "StateVector", tol: float = NORM_TOL) -> bool:
        if self.num_wires != other.num_wires:
            return False
        return bool(np.max(np.abs(self.amplitudes - other.amplitudes)) <= tol)

    def _tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.num_wires)

    def apply(self, gate: Gate) -> "StateVector":
        return apply_gate(self, gate)

    def run(self, circuit: Circuit) -> "StateVector":
        return run_circuit(self, circuit)

    def __repr__(self) -> str:
        return f"StateVector(num_wires={self.num_wires})"


def new_basis_state(num_wires: int, label: str, *, max_wires: int = DEFAULT_MAX_WIRES) -> StateVector:
    """Basis state from an MSB-first bitstring of length ``num_wires``."""
    if num_wires < 1:
        raise PreconditionError("need at least one wire")
    if len(label) != num_wires or set(label) - {"0", "1"}:
        raise PreconditionError(
            f"label {label!r} is not a bitstring of length {num_wires}"
        )
    return StateVector.from_label(num_wires, int(label, 2), max_wires=max_wires)


def _slice_index(m: int, assignment: dict[int, int]) -> tuple:
    # Axis for wire w in the reshaped tensor is m - 1 - w.
    idx: list = [slice(None)] * m
    for wire, bit in assignment.items():
        idx[m - 1 - wire] = bit
    return tuple(idx)


def _exchange_slices(tensor: np.ndarray, idx_a: tuple, idx_b: tuple) -> None:
    tmp = tensor[idx_a].copy()
    tensor[idx_a] = tensor[idx_b]
    tensor[idx_b] = tmp


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate in place and return the state.

    Permutation gates move amplitudes exactly; H is the standard one-wire
    Hadamard butterfly. Norm is preserved (exactly for permutations).
    """
    m = state.num_wires
    if max(gate.wires) >= m:
        raise PreconditionError(f"gate {gate.kind}{gate.wires} exceeds {m} wires")
    t = state._tensor()
    kind, ws = gate.kind, gate.wires
    if kind == "X":
        _exchange_slices(t, _slice_index(m, {ws[0]: 0}), _slice_index(m, {ws[0]: 1}))
    elif kind == "H":
        lo = _slice_index(m, {ws[0]: 0})
        hi = _slice_index(m, {ws[0]: 1})
        a = t[lo].copy()
        b = t[hi]
        t[lo] = (a + b) * _SQRT_HALF
        t[hi] = (a - b) * _SQRT_HALF
    elif kind == "CNOT":
        c, tg = ws
        _exchange_slices(t, _slice_index(m, {c: 1, tg: 0}), _slice_index(m, {c: 1, tg: 1}))
    elif kind == "SWAP":
        i, j = ws
        _exchange_slices(t, _slice_index(m, {i: 0, j: 1}), _slice_index(m, {i: 1, j: 0}))
    elif kind == "TOFFOLI":
        c1, c2, tg = ws
        _exchange_slices(
            t,
            _slice_index(m, {c1: 1, c2: 1, tg: 0}),
            _slice_index(m, {c1: 1, c2: 1, tg: 1}),
        )
    elif kind == "CSWAP":
        c, i, j = ws
        _exchange_slices(
            t,
            _slice_index(m, {c: 1, i: 0, j: 1}),
            _slice_index(m, {c: 1, i: 1, j: 0}),
        )
    else:  # pragma: no cover - Gate validates kinds
        raise PreconditionError(f"unknown gate kind {kind!r}")
    return state


def run_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Apply a circuit's gates in order (in place)."""
    if circuit.num_wires != state.num_wires:
        raise PreconditionError(
            f"circuit has {circuit.num_wires} wires, state has {state.num_wires}"
        )
    for gate in circuit:
        apply_gate(state, gate)
    return state


class RegisterLayout:
    """Named, disjoint wire segments covering all wires of a state.

    Segment order is the declaration order; it fixes the display order of
    bitstrings (each segment printed MSB-first, slot 1 being the LSB).
    """

    def __init__(self, segments: Iterable[tuple[str, Sequence[int]]]):
        self._segments: dict[str, tuple[int, ...]] = {}
        seen: set[int] = set()
        for name, wires in segments:
            wires = tuple(int(w) for w in wires)
            if not wires:
                raise PreconditionError(f"segment {name!r} is empty")
            if name in self._segments:
                raise PreconditionError(f"duplicate segment {name!r}")
            overlap = seen.intersection(wires)
            if overlap or len(set(wires)) != len(wires):
                raise PreconditionError(f"segment {name!r} overlaps other wires")
            seen.update(wires)
            self._segments[name] = wires
        if not self._segments:
            raise PreconditionError("layout needs at least one segment")
        if seen != set(range(len(seen))) or min(seen) < 0:
            raise PreconditionError("segments must cover wires 0..m-1 exactly")
        self.num_wires = len(seen)

    @classmethod
    def single(cls, name: str, num_wires: int) -> "RegisterLayout":
        return cls([(name, range(num_wires))])

    @property
    def segment_names(self) -> tuple[str, ...]:
        return tuple(self._segments)

    def has_segment(self, name: str) -> bool:
        return name in self._segments

    def wires(self, name: str) -> tuple[int, ...]:
        """Wires of a segment in slot order (slot 1 first)."""
        try:
            return self._segments[name]
        except KeyError:
            raise PreconditionError(f"unknown segment {name!r}") from None

    def width(self, name: str) -> int:
        return len(self.wires(name))

    def value(self, label: int, name: str) -> int:
        """Integer held by a segment within a basis label."""
        out = 0
        for slot, wire in enumerate(self.wires(name)):
            out |= ((label >> wire) & 1) << slot
        return out

    def values(self, labels: np.ndarray, name: str) -> np.ndarray:
        """Vectorized :meth:`value` over an array of labels."""
        labels = np.asarray(labels, dtype=np.int64)
        out = np.zeros_like(labels)
        for slot, wire in enumerate(self.wires(name)):
            out |= ((labels >> wire) & 1) << slot
        return out

    def label_with_value(self, label: int, name: str, value: int) -> int:
        """Label with one segment replaced by an integer value."""
        wires = self.wires(name)
        if not 0 <= value < (1 << len(wires)):
            raise PreconditionError(f"value {value} does not fit segment {name!r}")
        for slot, wire in enumerate(wires):
            label &= ~(1 << wire)
            label |= ((value >> slot) & 1) << wire
        return label

    def display_label(self, label: int) -> str:
        """Bitstring for a label: segments in declaration order, each MSB-first."""
        parts = []
        for name in self._segments:
            for wire in reversed(self._segments[name]):
                parts.append("1" if (label >> wire) & 1 else "0")
        return "".join(parts)

    def label_from_display(self, bits: str) -> int:
        if len(bits) != self.num_wires or set(bits) - {"0", "1"}:
            raise PreconditionError(
                f"bitstring {bits!r} is not {self.num_wires} bits"
            )
        label = 0
        pos = 0
        for name in self._segments:
            for wire in reversed(self._segments[name]):
                if bits[pos] == "1":
                    label |= 1 << wire
                pos += 1
        return label

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}={list(w)}" for n, w in self._segments.items())
        return f"RegisterLayout({inner})"


def segment_value_distribution(
    state: StateVector, layout: RegisterLayout, name: str
) -> dict[int, float]:
    """Marginal probability of each integer value of one segment.

    Values with exactly zero probability are omitted; the returned
    probabilities sum to 1 within 1e-12.
    """
    if layout.num_wires != state.num_wires:
        raise PreconditionError("layout and state wire counts differ")
    wires = layout.wires(name)
    probs = state.probabilities()
    values = layout.values(np.arange(probs.size, dtype=np.int64), name)
    marg = np.bincount(values, weights=probs, minlength=1 << len(wires))
    return {int(v): float(p) for v, p in enumerate(marg) if p > 0.0}


class ProductCheck(NamedTuple):
    is_product: bool
    schmidt_rank: int


def schmidt_rank(state: StateVector, cut: Iterable[int], tol: float = SCHMIDT_TOL) -> int:
    """Number of singular values above ``tol`` across the given bipartition."""
    m = state.num_wires
    cut_set = {int(w) for w in cut}
    if not cut_set or any(w < 0 or w >= m for w in cut_set):
        raise PreconditionError("cut must be a nonempty set of in-range wires")
    if len(cut_set) == m:
        raise PreconditionError("cut must be a proper subset of the wires")
    cut_axes = [m - 1 - w for w in sorted(cut_set, reverse=True)]
    rest_axes = [a for a in range(m) if a not in cut_axes]
    mat = state._tensor().transpose(cut_axes + rest_axes).reshape(1 << len(cut_set), -1)
    singular = np.linalg.svd(mat, compute_uv=False)
    return int(np.count_nonzero(singular > tol))


def is_product_across(
    state: StateVector, cut: Iterable[int], tol: float = SCHMIDT_TOL
) -> ProductCheck:
    """Product-state verdict across a cut: Schmidt rank 1 means unentangled."""
    rank = schmidt_rank(state, cut, tol)
    return ProductCheck(rank == 1, rank)


def support_values(state: StateVector, layout: RegisterLayout, name: str) -> np.ndarray:
    """Distinct integer values a segment takes on the state's basis support."""
    labels = state.nonzero_labels()
    return np.unique(layout.values(labels, name))


def segment_is_zero_on_support(state: StateVector, wires: Sequence[int]) -> bool:
    """True when every supported basis label has 0 on all the given wires."""
    labels = state.nonzero_labels()
    mask = 0
    for w in wires:
        mask |= 1 << int(w)
    return not bool(np.any(labels & mask))
