"""Gate and circuit containers.

Gates carry a side tag: ``out`` gates act on the n output qubits after the
isometry embedding, ``in`` gates act on the k data qubits before it.  The
gate list is in execution (time) order with all input-side gates first;
that invariant is produced by the synthesis recorder and assumed by the
replay and dense simulators.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import BadGateError, BadQubitError

ONE_QUBIT = {"h", "s", "sdg", "x", "y", "z", "rx"}
TWO_QUBIT = {"cz", "cx", "swap"}
KINDS = ONE_QUBIT | TWO_QUBIT

# Inverse as a sequence (time order) of same-set gates; rx needs a Pauli
# tail because Rx(-pi/2) is outside the gate set only up to an X.
_INVERSES = {
    "h": ("h",), "s": ("sdg",), "sdg": ("s",), "x": ("x",), "y": ("y",),
    "z": ("z",), "cz": ("cz",), "cx": ("cx",), "swap": ("swap",),
    "rx": ("rx", "x"),
}


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]
    side: str = "out"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadGateError(f"unknown gate kind {self.kind!r}")
        want = 2 if self.kind in TWO_QUBIT else 1
        if len(self.qubits) != want:
            raise BadGateError(f"{self.kind} takes {want} qubit(s)")
        if want == 2 and self.qubits[0] == self.qubits[1]:
            raise BadQubitError(f"{self.kind} qubits must differ")
        if self.side not in ("in", "out"):
            raise BadGateError(f"bad side tag {self.side!r}")

    def inverse_gates(self) -> tuple["Gate", ...]:
        return tuple(Gate(k, self.qubits, self.side) for k in _INVERSES[self.kind])


def gate(kind: str, *qubits: int, side: str = "out") -> Gate:
    return Gate(kind, tuple(int(q) for q in qubits), side)


@dataclass
class Circuit:
    """Time-ordered gate list for a k-to-n isometry."""

    n: int
    k: int
    gates: list[Gate] = field(default_factory=list)
    layout: str = "all-to-all"

    def __post_init__(self):
        if not (0 <= self.k <= self.n):
            raise BadQubitError(f"bad circuit dims n={self.n} k={self.k}")

    def append(self, g: Gate):
        hi = self.k if g.side == "in" else self.n
        if any(q < 0 or q >= hi for q in g.qubits):
            raise BadQubitError(f"{g.kind} on {g.qubits} outside side {g.side!r}")
        self.gates.append(g)

    def extend(self, gates):
        for g in gates:
            self.append(g)

    def input_gates(self) -> list[Gate]:
        return [g for g in self.gates if g.side == "in"]

    def output_gates(self) -> list[Gate]:
        return [g for g in self.gates if g.side == "out"]

    def copy(self) -> "Circuit":
        return Circuit(self.n, self.k, list(self.gates), self.layout)

    def relabeled(self, perm) -> "Circuit":
        """New circuit with every qubit q replaced by perm[q]."""
        out = Circuit(self.n, self.k, [], self.layout)
        for g in self.gates:
            out.append(replace(g, qubits=tuple(int(perm[q]) for q in g.qubits)))
        return out

    def __len__(self) -> int:
        return len(self.gates)
