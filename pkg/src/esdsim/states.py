"""Qubit-qutrit density matrices: construction, validation, reduction, text I/O.

The states of interest live on a 2x3 composite system and carry coherence
only in off-diagonal slots where BOTH factor indices change. Tracing out
either factor therefore yields a diagonal reduced state: all coherence is
jointly shared, none is local. A one-parameter slice of this class (fixed
diagonal, a single corner coherence) is the workhorse for the dephasing
scenarios in :mod:`esdsim.esd`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .linalg import QUBIT_QUTRIT, BipartiteDims

TRACE_TOL = 1e-12
PSD_TOL = 1e-10
PATTERN_TOL = 1e-14

#: Fixed diagonal of the one-parameter family.
ANSATZ_DIAGONAL = (0.25, 0.125, 0.125, 0.125, 0.125, 0.25)

#: Largest corner coherence compatible with positivity of that diagonal.
ANSATZ_X_MAX = 0.25

#: Upper-triangle slots (i, j) where both the qubit index and the qutrit
#: index differ; coherence confined to these slots leaves both reduced
#: states diagonal. Listed row-major.
JOINT_COHERENCE_SLOTS = ((0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4))

#: The slot carrying the one-parameter family's single coherence.
CORNER_SLOT = (0, 5)


class InvalidStateError(ValueError):
    """A matrix failed density-matrix validation.

    Attributes:
        condition: which requirement failed ("hermiticity", "trace" or
            "positivity").
        magnitude: size of the violation.
    """

    def __init__(self, condition: str, magnitude: float):
        self.condition = condition
        self.magnitude = magnitude
        super().__init__(f"{condition} violated by {magnitude:.6e}")


@dataclass(frozen=True)
class DensityMatrix:
    """A matrix together with its declared bipartite factor dimensions.

    Instances produced by this package satisfy Hermiticity within 1e-12,
    unit trace within 1e-12 and positive semidefiniteness down to -1e-10;
    use :func:`validate` to build one from untrusted input. The stored
    array is marked read-only.
    """

    mat: np.ndarray
    dims: BipartiteDims

    def __post_init__(self) -> None:
        self.dims.check(self.mat)
        self.mat.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.dims.total


def validate(mat, dims: BipartiteDims = QUBIT_QUTRIT) -> DensityMatrix:
    """Check the three density-matrix conditions and wrap the input.

    Requirements, tested in order: Hermiticity within 1e-12, trace 1
    within 1e-12, and smallest eigenvalue >= -1e-10. The first failure
    raises InvalidStateError naming the condition and its magnitude.
    """
    arr = linalg.as_complex_matrix(mat).copy()
    dims.check(arr)
    herm = linalg.hermiticity_defect(arr)
    if herm > linalg.HERMITIAN_TOL:
        raise InvalidStateError("hermiticity", herm)
    trace_defect = abs(complex(np.trace(arr)) - 1.0)
    if trace_defect > TRACE_TOL:
        raise InvalidStateError("trace", trace_defect)
    lowest = float(linalg.hermitian_eigenvalues(arr)[0])
    if lowest < -PSD_TOL:
        raise InvalidStateError("positivity", -lowest)
    return DensityMatrix(arr, dims)


@dataclass(frozen=True)
class AnsatzState:
    """Bookkeeping record for the one-parameter family.

    ``x`` is the coherence the state started with; ``corner`` is its
    current (dephased) value. Both sit in [0, 1/4] with corner <= x.
    """

    x: float
    corner: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.x <= ANSATZ_X_MAX:
            raise ValueError(f"x must lie in [0, {ANSATZ_X_MAX}], got {self.x}")
        if not 0.0 <= self.corner <= self.x + 1e-15:
            raise ValueError(f"corner must lie in [0, x] = [0, {self.x}], got {self.corner}")

    @classmethod
    def initial(cls, x: float) -> "AnsatzState":
        return cls(x=x, corner=x)

    def evolved(self, gamma_product: float) -> "AnsatzState":
        """The same state after its corner decayed by gamma_product."""
        return AnsatzState(x=self.x, corner=self.x * gamma_product)

    def matrix(self) -> DensityMatrix:
        """Materialize the 6x6 density matrix for the current corner."""
        m = np.diag(np.array(ANSATZ_DIAGONAL, dtype=complex))
        i, j = CORNER_SLOT
        m[i, j] = self.corner
        m[j, i] = self.corner
        return DensityMatrix(m, QUBIT_QUTRIT)


def ansatz_x(x: float) -> DensityMatrix:
    """The one-parameter state: fixed diagonal, corner coherence x.

    Diagonal (1/4, 1/8, 1/8, 1/8, 1/8, 1/4); the only off-diagonal
    entries are x at the corner slot and its mirror. Every x in
    [0, 1/4] gives a valid state; x = 1/4 is rank-deficient (one zero
    eigenvalue) and x > 1/8 is where the state is entangled.
    """
    return AnsatzState.initial(x).matrix()


def ansatz_general(diagonal: Sequence[float], coherences: Sequence[float]) -> DensityMatrix:
    """Build a state of the jointly-coherent class from real entries.

    ``diagonal`` gives the six diagonal entries; ``coherences`` gives the
    six off-diagonal values in JOINT_COHERENCE_SLOTS order. Entries are
    real by construction, so the result is Hermitian automatically; trace
    and positivity are checked and violations raise InvalidStateError.
    """
    diagonal = [float(v) for v in diagonal]
    coherences = [float(v) for v in coherences]
    if len(diagonal) != 6:
        raise ValueError(f"expected 6 diagonal entries, got {len(diagonal)}")
    if len(coherences) != len(JOINT_COHERENCE_SLOTS):
        raise ValueError(
            f"expected {len(JOINT_COHERENCE_SLOTS)} coherence entries, got {len(coherences)}"
        )
    m = np.diag(np.array(diagonal, dtype=complex))
    for (i, j), value in zip(JOINT_COHERENCE_SLOTS, coherences):
        m[i, j] = value
        m[j, i] = value
    return validate(m, QUBIT_QUTRIT)


def reduce_a(rho: DensityMatrix) -> np.ndarray:
    """Reduced state of the first factor (trace out the qutrit)."""
    return linalg.partial_trace(rho.mat, rho.dims, keep="A")


def reduce_b(rho: DensityMatrix) -> np.ndarray:
    """Reduced state of the second factor (trace out the qubit)."""
    return linalg.partial_trace(rho.mat, rho.dims, keep="B")


def extract_corner(rho: DensityMatrix) -> float:
    """Current value of the corner coherence slot (real part)."""
    i, j = CORNER_SLOT
    return float(rho.mat[i, j].real)


def coherence_pattern_defect(mat) -> float:
    """Largest off-diagonal magnitude outside the allowed joint slots."""
    arr = linalg.as_complex_matrix(mat)
    QUBIT_QUTRIT.check(arr)
    allowed = set(JOINT_COHERENCE_SLOTS) | {(j, i) for i, j in JOINT_COHERENCE_SLOTS}
    worst = 0.0
    for i in range(6):
        for j in range(6):
            if i != j and (i, j) not in allowed:
                worst = max(worst, abs(arr[i, j]))
    return worst


def is_locally_incoherent(mat, tol: float = PATTERN_TOL) -> bool:
    """True when all coherence sits in the joint slots (reductions diagonal)."""
    return coherence_pattern_defect(mat) <= tol


def random_density_matrix(rng: np.random.Generator, dims: BipartiteDims = QUBIT_QUTRIT) -> DensityMatrix:
    """A random full-rank state: G G^dagger normalized, G complex Gaussian."""
    n = dims.total
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = g @ g.conj().T
    m /= np.trace(m).real
    return DensityMatrix(m, dims)


def format_state(rho: DensityMatrix) -> str:
    """Render a state in the plain-text matrix format.

    First line is ``dims dA dB``; each following line holds one matrix
    row with entries written as re+imj pairs at 17 significant digits,
    which round-trips float64 exactly.
    """
    lines = [f"dims {rho.dims.dim_a} {rho.dims.dim_b}"]
    for row in rho.mat:
        lines.append(" ".join(_format_entry(z) for z in row))
    return "\n".join(lines) + "\n"


def _format_entry(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}j"


def parse_state(text: str) -> DensityMatrix:
    """Parse the plain-text matrix format and validate the result."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty state text")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "dims":
        raise ValueError(f"malformed header {lines[0]!r}; expected 'dims dA dB'")
    dims = BipartiteDims(int(header[1]), int(header[2]))
    rows = lines[1:]
    if len(rows) != dims.total:
        raise ValueError(f"expected {dims.total} matrix rows, got {len(rows)}")
    entries = []
    for row in rows:
        tokens = row.split()
        if len(tokens) != dims.total:
            raise ValueError(f"expected {dims.total} entries per row, got {len(tokens)}")
        entries.append([complex(tok) for tok in tokens])
    return validate(np.array(entries, dtype=complex), dims)
