"""4x4 complex gamma-matrix representations of Cl(1,3).

Two conventions are provided: the standard (Dirac-Pauli) set, with
gamma^0 = diag(1,1,-1,-1) block form, and the chiral (Weyl) set obtained
from it by conjugation with S = (1/sqrt 2)[[1,1],[1,-1]] in 2x2 blocks.
The Weyl matrices are never entered by hand, so the two sets cannot
drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .multivector import DIM, Multivector

I2 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (I2, SIGMA1, SIGMA2, SIGMA3)


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


# Upper-index matrices in the standard representation.
_GAMMA0_STD = _block(I2, 0 * I2, 0 * I2, -I2)
_GAMMAK_STD = tuple(_block(0 * I2, PAULI[k], -PAULI[k], 0 * I2) for k in (1, 2, 3))

# Change of basis between standard and Weyl spinors (real, S^2 = 1).
S_MATRIX = _block(I2, I2, I2, -I2) / np.sqrt(2.0)
S_INV = S_MATRIX  # involutory


@dataclass(frozen=True)
class GammaRep:
    """A gamma-matrix representation: four upper-index matrices plus g5."""

    tag: str
    upper: tuple  # gamma^0..gamma^3
    metric = (1.0, -1.0, -1.0, -1.0)

    @property
    def gamma5(self) -> np.ndarray:
        g = self.upper
        return g[0] @ g[1] @ g[2] @ g[3]

    def lower(self, mu: int) -> np.ndarray:
        return self.metric[mu] * self.upper[mu]

    def slash(self, p4) -> np.ndarray:
        """p_mu gamma^mu for p4 = (E, p1, p2, p3) with upper-index components."""
        e, p1, p2, p3 = p4
        return (e * self.upper[0] - p1 * self.upper[1]
                - p2 * self.upper[2] - p3 * self.upper[3])


STANDARD = GammaRep("standard", (_GAMMA0_STD,) + _GAMMAK_STD)
WEYL = GammaRep("weyl", tuple(S_MATRIX @ g @ S_INV for g in STANDARD.upper))

REPS = {"standard": STANDARD, "weyl": WEYL}


@lru_cache(maxsize=None)
def _blade_matrices(tag: str) -> tuple:
    rep = REPS[tag]
    mats = []
    for mask in range(DIM):
        m = np.eye(4, dtype=complex)
        for mu in range(4):
            if (mask >> mu) & 1:
                m = m @ rep.lower(mu)
        mats.append(m)
    return tuple(mats)


def matrix_rep(mv: Multivector, rep: GammaRep = STANDARD) -> np.ndarray:
    """Faithful algebra homomorphism Cl(1,3) -> Mat(4, C).

    Blade g_mu maps to the lower-index matrix of `rep`; products follow.
    """
    mats = _blade_matrices(rep.tag)
    out = np.zeros((4, 4), dtype=complex)
    for mask in range(DIM):
        c = mv.coeffs[mask]
        if c != 0:
            out += c * mats[mask]
    return out


def blade_matrix(mask: int, rep: GammaRep = STANDARD) -> np.ndarray:
    return _blade_matrices(rep.tag)[mask].copy()


def matrix_to_multivector(m: np.ndarray, rep: GammaRep = STANDARD,
                          tol: float = 1e-10) -> Multivector:
    """Invert matrix_rep via the trace pairing; rejects non-algebra input."""
    mats = _blade_matrices(rep.tag)
    coeffs = np.zeros(DIM, dtype=complex)
    for mask in range(DIM):
        b = mats[mask]
        coeffs[mask] = np.trace(b.conj().T @ m) / np.trace(b.conj().T @ b)
    recon = sum(coeffs[mask] * mats[mask] for mask in range(DIM))
    if np.abs(recon - m).max() > tol * max(1.0, np.abs(m).max()):
        raise ValueError("matrix is not in the image of the representation")
    if np.abs(coeffs.imag).max() <= tol * max(1.0, np.abs(coeffs).max()):
        coeffs = coeffs.real
    return Multivector(coeffs)


def to_weyl(psi_std: np.ndarray) -> np.ndarray:
    return S_MATRIX @ psi_std


def to_standard(psi_weyl: np.ndarray) -> np.ndarray:
    return S_INV @ psi_weyl
