"""Covariant (C^4) and operator (even multivector) spinors.

The operator representative of a standard-representation column spinor
(a1, a2, a3, a4) is

    psi = (m0 + m^k i sigma_k) + (n0 + n^k i sigma_k) sigma_3

with a1 = m0 + i m3, a2 = -m2 + i m1, a3 = n0 + i n3, a4 = -n2 + i n1.
The six translation rules between matrix operations on the column and
right/left Clifford multiplications on psi live in dictionary_apply.
"""

from __future__ import annotations

import numpy as np

from .gamma import REPS, STANDARD, WEYL, matrix_rep, to_standard, to_weyl
from .multivector import G, G5, G21, ONE, SIGMA, ISIGMA, Multivector

# Even basis in the (m0, m1, m2, m3, n0, n1, n2, n3) order of the map above.
_EVEN_BASIS = (
    ONE, ISIGMA[1], ISIGMA[2], ISIGMA[3],
    SIGMA[3], ISIGMA[1] * SIGMA[3], ISIGMA[2] * SIGMA[3], ISIGMA[3] * SIGMA[3],
)

_G20 = G[2] * G[0]
_HALF_IDEAL = (ONE + G[0]) * 0.5


def to_operator(psi: np.ndarray, rep: str = "standard") -> Multivector:
    """Covariant column -> even multivector (Weyl input converted first)."""
    psi = np.asarray(psi, dtype=complex)
    if rep == "weyl":
        psi = to_standard(psi)
    elif rep != "standard":
        raise ValueError(f"unknown representation tag {rep!r}")
    a1, a2, a3, a4 = psi
    coords = (a1.real, a2.imag, -a2.real, a1.imag,
              a3.real, a4.imag, -a4.real, a3.imag)
    out = Multivector.zero()
    for c, b in zip(coords, _EVEN_BASIS):
        out = out + b * c
    return out


def to_covariant(mv: Multivector, rep: str = "standard") -> np.ndarray:
    """Even multivector -> covariant column (inverse of to_operator)."""
    m0, m1, m2, m3, n0, n1, n2, n3 = (
        np.dot(b.coeffs, mv.coeffs) / np.dot(b.coeffs, b.coeffs)
        for b in _EVEN_BASIS
    )
    psi = np.array([m0 + 1j * m3, -m2 + 1j * m1,
                    n0 + 1j * n3, -n2 + 1j * n1], dtype=complex)
    if rep == "weyl":
        return to_weyl(psi)
    if rep != "standard":
        raise ValueError(f"unknown representation tag {rep!r}")
    return psi


DICTIONARY_KINDS = ("gamma0", "gamma1", "gamma2", "gamma3",
                    "mult_i", "i_gamma5", "bar", "dagger", "conjugate")

# Lines that act column -> column and can be tested directly on C^4.
COLUMN_KINDS = ("gamma0", "gamma1", "gamma2", "gamma3",
                "mult_i", "i_gamma5", "conjugate")


def dictionary_apply(kind: str, psi: Multivector) -> Multivector:
    """Clifford-side image of the standard matrix operations.

    gamma_mu . : g_mu psi g0        (lower-index matrix on the column)
    i .        : psi g2 g1
    i gamma5 . : psi sigma_3
    bar        : reverse(psi)
    dagger     : g0 reverse(psi) g0
    conjugate  : -g2 psi g2
    """
    if kind.startswith("gamma") and kind != "gamma5":
        mu = int(kind[-1])
        return G[mu] * psi * G[0]
    if kind == "mult_i":
        return psi * G21
    if kind == "i_gamma5":
        return psi * SIGMA[3]
    if kind == "bar":
        return psi.reverse()
    if kind == "dagger":
        return G[0] * psi.reverse() * G[0]
    if kind == "conjugate":
        return -(G[2] * psi * G[2])
    raise ValueError(f"unknown dictionary kind {kind!r}")


def dictionary_matrix_side(kind: str, psi: np.ndarray) -> np.ndarray:
    """Matrix-formalism counterpart of the column -> column lines."""
    g = REPS["standard"]
    if kind.startswith("gamma") and kind != "gamma5":
        mu = int(kind[-1])
        return g.lower(mu) @ psi
    if kind == "mult_i":
        return 1j * psi
    if kind == "i_gamma5":
        return 1j * g.gamma5 @ psi
    if kind == "conjugate":
        return psi.conj()
    raise ValueError(f"kind {kind!r} does not act column -> column")


def bar_matrix_identity(psi: Multivector) -> tuple[np.ndarray, np.ndarray]:
    """Dirac adjoint at the representation level.

    The bar operation on the matrix image is gamma^0 M^dagger gamma^0;
    the claim is that it equals the image of reverse(psi).
    """
    g0 = REPS["standard"].upper[0]
    m = matrix_rep(psi, STANDARD)
    return matrix_rep(psi.reverse(), STANDARD), g0 @ m.conj().T @ g0


def dagger_matrix_identity(psi: Multivector) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian adjoint at the representation level: M^dagger = M(g0 psi~ g0)."""
    m = matrix_rep(psi, STANDARD)
    return matrix_rep(G[0] * psi.reverse() * G[0], STANDARD), m.conj().T


def charge_conjugate(psi: Multivector) -> Multivector:
    """Charge conjugation on operator spinors: psi g2 g0.

    Matrix side (either representation, S is real): -gamma^2 psi^*.
    The overall sign is fixed so that the two sides agree through
    to_operator; self-conjugate and anti-self-conjugate spinors then
    come out with eigenvalues +1 and -1.
    """
    return psi * _G20


def charge_conjugate_matrix(psi: np.ndarray, rep: str = "weyl") -> np.ndarray:
    return -REPS[rep].upper[2] @ psi.conj()


def parity_rest(psi: Multivector) -> Multivector:
    """Frame-form parity g0 psi g0 (rest modes: u -> +u, v -> -v)."""
    return G[0] * psi * G[0]


def parity_momentum_matrix(p4, rep: str = "standard") -> np.ndarray:
    """Momentum-space parity (1/m) p_mu gamma^mu on covariant amplitudes."""
    p4 = np.asarray(p4, dtype=float)
    m2 = p4[0] ** 2 - p4[1] ** 2 - p4[2] ** 2 - p4[3] ** 2
    if m2 <= 0:
        raise ValueError("parity operator needs a timelike on-shell momentum")
    return REPS[rep].slash(p4) / np.sqrt(m2)


def momentum_vector(p4) -> Multivector:
    """p_mu g^mu as a 1-vector: E g0 + p^k g_k."""
    return Multivector.from_vector([p4[0], p4[1], p4[2], p4[3]])


def parity_momentum(p4, psi: Multivector) -> Multivector:
    """(1/m) p g0^-1 ... acting per the frame dictionary: (p/m) psi g0."""
    p4 = np.asarray(p4, dtype=float)
    m2 = p4[0] ** 2 - p4[1] ** 2 - p4[2] ** 2 - p4[3] ** 2
    if m2 <= 0:
        raise ValueError("parity operator needs a timelike on-shell momentum")
    return momentum_vector(p4) * psi * G[0] / np.sqrt(m2)


def ideal_projection(psi: Multivector) -> Multivector:
    """Right ideal representative psi (1 + g0)/2."""
    return psi * _HALF_IDEAL


def ideal_parity_momentum(p4, big_psi: Multivector) -> Multivector:
    """(1/m) p_mu g^mu acting by left multiplication on ideal spinors."""
    p4 = np.asarray(p4, dtype=float)
    m2 = p4[0] ** 2 - p4[1] ** 2 - p4[2] ** 2 - p4[3] ** 2
    if m2 <= 0:
        raise ValueError("parity operator needs a timelike on-shell momentum")
    return momentum_vector(p4) * big_psi / np.sqrt(m2)


def covariant_from_operator_column(psi: Multivector) -> np.ndarray:
    """Fiducial-column identity: to_covariant(psi) = M(psi) @ (1,0,0,0)."""
    return matrix_rep(psi, STANDARD)[:, 0].copy()
