"""Partial-transpose entanglement tests for bipartite states.

Normalization note: negativity here is the plain sum of the absolute
values of the negative partial-transpose eigenvalues, with no
dimension-dependent prefactor. On the built-in one-parameter family it
ranges over [0, 1/8]. For 2x3 systems a positive partial transpose is
equivalent to separability, so negativity zero really means separable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .states import DensityMatrix

#: Eigenvalues above -1e-10 count as non-negative (eigensolver noise floor).
NEGATIVE_EIG_TOL = 1e-10


@dataclass(frozen=True)
class PTSpectrum:
    """Eigenvalues of a partially transposed state, ascending."""

    eigenvalues: np.ndarray
    subsystem: str


@dataclass(frozen=True)
class NegativityResult:
    value: float
    is_entangled: bool
    min_pt_eigenvalue: float


def pt_spectrum(rho: DensityMatrix, subsystem: str = "A") -> PTSpectrum:
    """Spectrum of the partial transpose over the chosen factor."""
    pt = linalg.partial_transpose(rho.mat, rho.dims, subsystem)
    eigs = linalg.hermitian_eigenvalues(pt)
    return PTSpectrum(eigenvalues=eigs, subsystem=subsystem)


def negativity(rho: DensityMatrix, subsystem: str = "A") -> NegativityResult:
    """Sum of |negative PT eigenvalues|; zero iff the spectrum is nonnegative.

    Eigenvalues within NEGATIVE_EIG_TOL of zero are treated as zero, so
    value == 0.0 exactly for PPT states and is_entangled is simply
    value > 0. Transposing either subsystem gives the same answer.
    """
    spec = pt_spectrum(rho, subsystem)
    eigs = spec.eigenvalues
    negative = eigs[eigs < -NEGATIVE_EIG_TOL]
    value = float(-np.sum(negative)) if negative.size else 0.0
    return NegativityResult(
        value=value,
        is_entangled=value > 0.0,
        min_pt_eigenvalue=float(eigs[0]),
    )


def is_ppt(rho: DensityMatrix, subsystem: str = "A") -> bool:
    """True when the partial transpose has no eigenvalue below -1e-10."""
    return not negativity(rho, subsystem).is_entangled
