"""Plane-wave spinor amplitudes: Dirac u/v modes, helicity bases, boosts,
and the dual-helicity charge-conjugation eigenspinors (lambda/rho family).

Phase conventions, fixed once for the whole package:

* phi_plus(direction) is the +1 eigenvector of sigma.phat with its first
  nonzero component real and positive.
* phi_minus := i sigma_2 phi_plus^*  (the -1 eigenvector; this relative
  phase is what makes the coupled first-order system, the identification
  rules and the parity relations all hold exactly).
* The right- and left-handed rest spinors are identified: phi_R = phi_L.
* Frequency signs: lambda_s and rho_a modes rotate with exp(-i p.x),
  lambda_a and rho_s with exp(+i p.x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gamma import SIGMA1, SIGMA2, SIGMA3, WEYL, to_standard
from .multivector import G, ONE, SIGMA, ISIGMA, Multivector
from .spinor import momentum_vector, to_operator

PAULI_VEC = np.array([SIGMA1, SIGMA2, SIGMA3])

ELKO_KINDS = ("lambda_s", "lambda_a", "rho_s", "rho_a")
HELICITY_LABELS = ("-+", "+-")

# exp(+/- i p.x) sign per kind; the rho family inherits the sign of the
# lambda field it is proportional to, not of its own conjugation type.
FREQUENCY_SIGN = {"lambda_s": -1, "lambda_a": +1, "rho_s": +1, "rho_a": -1}


@dataclass(frozen=True)
class OnShellMomentum:
    """Mass and spatial momentum with E = sqrt(|p|^2 + m^2)."""

    m: float
    p: tuple

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("mass must be positive")
        object.__setattr__(self, "p", tuple(float(c) for c in self.p))
        if len(self.p) != 3:
            raise ValueError("spatial momentum needs 3 components")

    @property
    def pmag(self) -> float:
        return math.sqrt(sum(c * c for c in self.p))

    @property
    def energy(self) -> float:
        return math.sqrt(self.pmag ** 2 + self.m ** 2)

    def four(self) -> np.ndarray:
        return np.array([self.energy, *self.p])

    def direction(self) -> np.ndarray:
        if self.pmag == 0:
            raise ValueError("direction undefined at p = 0")
        return np.array(self.p) / self.pmag

    @property
    def rapidity(self) -> float:
        return math.asinh(self.pmag / self.m)


def _fix_phase(phi: np.ndarray) -> np.ndarray:
    for c in phi:
        if abs(c) > 1e-14:
            return phi * (abs(c) / c)
    raise ValueError("zero spinor has no phase")


def helicity_states(direction) -> tuple[np.ndarray, np.ndarray]:
    """(phi_plus, phi_minus) for sigma.phat, unit norm, phases as fixed above."""
    nhat = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(nhat)
    if norm == 0:
        raise ValueError("helicity is undefined for p = 0")
    nhat = nhat / norm
    op = sum(nhat[k] * PAULI_VEC[k] for k in range(3))
    vals, vecs = np.linalg.eigh(op)
    phi_plus = _fix_phase(vecs[:, np.argmax(vals)])
    phi_minus = 1j * SIGMA2 @ phi_plus.conj()
    return phi_plus, phi_minus


def half_boost(alpha) -> tuple[np.ndarray, np.ndarray]:
    """exp(+sigma.alpha/2) and exp(-sigma.alpha/2) in closed form."""
    alpha = np.asarray(alpha, dtype=float)
    a = np.linalg.norm(alpha)
    if a == 0:
        return np.eye(2, dtype=complex), np.eye(2, dtype=complex)
    snh = sum((alpha[k] / a) * PAULI_VEC[k] for k in range(3))
    right = math.cosh(a / 2) * np.eye(2) + math.sinh(a / 2) * snh
    left = math.cosh(a / 2) * np.eye(2) - math.sinh(a / 2) * snh
    return right.astype(complex), left.astype(complex)


def boost_clifford(mom: OnShellMomentum) -> Multivector:
    """L(p) = (p g0 + m) / sqrt(2 m (E + m)); satisfies L reverse(L) = 1."""
    p = momentum_vector(mom.four())
    num = p * G[0] + Multivector.scalar(mom.m)
    return num / math.sqrt(2.0 * mom.m * (mom.energy + mom.m))


_KAPPA = (ONE, -ISIGMA[2])  # the two rest-frame mode seeds


def dirac_modes(mom: OnShellMomentum, r: int) -> tuple[Multivector, Multivector]:
    """Operator u/v amplitudes: u = L kappa_r, v = L kappa_r sigma_3.

    The u field carries exp(-i p.x), the v field exp(+i p.x).
    """
    if r not in (1, 2):
        raise ValueError("mode index r must be 1 or 2")
    L = boost_clifford(mom)
    u = L * _KAPPA[r - 1]
    v = L * _KAPPA[r - 1] * SIGMA[3]
    return u, v


@dataclass(frozen=True)
class ElkoSpinor:
    """A lambda- or rho-type dual-helicity spinor amplitude (Weyl column)."""

    kind: str            # lambda_s | lambda_a | rho_s | rho_a
    helicity: str        # "-+" | "+-"  (upper/lower block helicities)
    momentum: OnShellMomentum
    weyl: np.ndarray     # 4 complex components, chiral representation

    @property
    def frequency_sign(self) -> int:
        return FREQUENCY_SIGN[self.kind]

    def standard(self) -> np.ndarray:
        return to_standard(self.weyl)

    def operator(self) -> Multivector:
        return to_operator(self.standard(), rep="standard")

    def blocks(self) -> tuple[np.ndarray, np.ndarray]:
        return self.weyl[:2], self.weyl[2:]


def _resolve_axis(mom: OnShellMomentum, axis) -> np.ndarray:
    if mom.pmag > 0:
        nhat = mom.direction()
        if axis is not None:
            ax = np.asarray(axis, dtype=float)
            ax = ax / np.linalg.norm(ax)
            if np.linalg.norm(ax - nhat) > 1e-12:
                raise ValueError("axis must match the momentum direction")
        return nhat
    if axis is None:
        raise ValueError("rest spinors need an explicit helicity axis")
    ax = np.asarray(axis, dtype=float)
    return ax / np.linalg.norm(ax)


def elko_construct(mom: OnShellMomentum, kind: str, helicity: str,
                   axis=None) -> ElkoSpinor:
    """Build one member of the dual-helicity family at momentum p.

    The lambda stack puts sigma_2 phi_L^* on top of phi_L; the rho stack
    puts phi_R on top of -/+ sigma_2 phi_R^* (s/a).  The block signs and
    the helicity bookkeeping follow the defining table of the family.
    """
    if kind not in ELKO_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if helicity not in HELICITY_LABELS:
        raise ValueError(f"unknown helicity label {helicity!r}")
    nhat = _resolve_axis(mom, axis)
    phi_plus, phi_minus = helicity_states(nhat)
    boost_r, boost_l = half_boost(mom.rapidity * nhat)

    if kind.startswith("lambda"):
        # label {-+} uses phi^+ in the lower (left-handed) block
        phi = phi_plus if helicity == "-+" else phi_minus
        lower = boost_l @ phi
        top = SIGMA2 @ lower.conj()
        if kind == "lambda_a":
            top = -top
        weyl = np.concatenate([top, lower])
    else:
        # label {+-} uses phi^+ in the upper (right-handed) block
        phi = phi_plus if helicity == "+-" else phi_minus
        upper = boost_r @ phi
        bottom = SIGMA2 @ upper.conj()
        if kind == "rho_s":
            bottom = -bottom
        weyl = np.concatenate([upper, bottom])
    return ElkoSpinor(kind, helicity, mom, weyl)


def elko_octet(mom: OnShellMomentum, axis=None) -> dict:
    """All eight family members at one momentum, keyed (kind, helicity)."""
    return {(k, h): elko_construct(mom, k, h, axis=axis)
            for k in ELKO_KINDS for h in HELICITY_LABELS}


# rho = phase * lambda identification table: (kind, hel) -> (partner, phase)
RHO_LAMBDA_TABLE = {
    ("rho_s", "+-"): ("lambda_a", "+-", 1j),
    ("rho_s", "-+"): ("lambda_a", "-+", -1j),
    ("rho_a", "+-"): ("lambda_s", "+-", -1j),
    ("rho_a", "-+"): ("lambda_s", "-+", 1j),
}


def rho_lambda_identify(e: ElkoSpinor) -> tuple[ElkoSpinor, complex]:
    """Return the lambda spinor and phase with e = phase * lambda.

    Applies in either direction: for a lambda input returns the rho
    partner and the inverse phase.
    """
    if e.kind.startswith("rho"):
        partner_kind, hel, phase = RHO_LAMBDA_TABLE[(e.kind, e.helicity)]
    else:
        for (rk, rh), (lk, lh, ph) in RHO_LAMBDA_TABLE.items():
            if (lk, lh) == (e.kind, e.helicity):
                partner_kind, hel, phase = rk, rh, 1.0 / ph
                break
    axis = e.momentum.direction() if e.momentum.pmag > 0 else None
    partner = elko_construct(e.momentum, partner_kind, hel, axis=axis)
    return partner, phase


# Parity images: P lambda^{s,a}_{hel} = rho^{s,a}_{flipped hel}.
PARITY_TABLE = {
    ("lambda_s", "-+"): ("rho_s", "+-"),
    ("lambda_s", "+-"): ("rho_s", "-+"),
    ("lambda_a", "-+"): ("rho_a", "+-"),
    ("lambda_a", "+-"): ("rho_a", "-+"),
    ("rho_s", "+-"): ("lambda_s", "-+"),
    ("rho_s", "-+"): ("lambda_s", "+-"),
    ("rho_a", "+-"): ("lambda_a", "-+"),
    ("rho_a", "-+"): ("lambda_a", "+-"),
}


def elko_parity_matrix(mom: OnShellMomentum) -> np.ndarray:
    """i gamma5 pslash / m in the chiral representation.

    This squares to -1 on shell, so no family member is a parity
    eigenstate; it exchanges the lambda and rho stacks instead.
    """
    return 1j * WEYL.gamma5 @ WEYL.slash(mom.four()) / mom.m


def parity_on_elko(e: ElkoSpinor) -> tuple[np.ndarray, ElkoSpinor, float]:
    """Apply parity; returns (image, expected partner, expected sign).

    For lambda inputs the image equals +partner; applying parity twice
    accumulates i^2, so rho inputs map to -lambda.
    """
    image = elko_parity_matrix(e.momentum) @ e.weyl
    kind, hel = PARITY_TABLE[(e.kind, e.helicity)]
    axis = e.momentum.direction() if e.momentum.pmag > 0 else None
    partner = elko_construct(e.momentum, kind, hel, axis=axis)
    sign = 1.0 if e.kind.startswith("lambda") else -1.0
    return image, partner, sign


def elko_boost_factor(mom: OnShellMomentum) -> float:
    """Scale factor between lambda_s_{-+}(p) and the rest spinor.

    Equals exp(-rapidity/2) = (E + m - |p|) / sqrt(2 m (E + m)); the
    half-angle cosh/sinh form of the boost on a dual-helicity stack.
    """
    e, m, pm = mom.energy, mom.m, mom.pmag
    return (e + m - pm) / math.sqrt(2.0 * m * (e + m))


def big_sigma_dot(direction) -> np.ndarray:
    """Block-diagonal helicity operator diag(sigma.phat, sigma.phat)."""
    nhat = np.asarray(direction, dtype=float)
    nhat = nhat / np.linalg.norm(nhat)
    op = sum(nhat[k] * PAULI_VEC[k] for k in range(3))
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = op
    out[2:, 2:] = op
    return out


def standard_rep_helicity_demo(e: ElkoSpinor) -> dict:
    """Show that the standard-representation blocks are not helicity states.

    Returns the standard-representation column, its image under the
    helicity operator, and per-block proportionality defects (0 would
    mean the block is an eigenvector).
    """
    nhat = e.momentum.direction()
    psi = e.standard()
    image = big_sigma_dot(nhat) @ psi

    def block_defect(b, ib):
        nb = np.linalg.norm(b)
        if nb == 0:
            return 0.0
        coef = np.vdot(b, ib) / nb ** 2
        return float(np.linalg.norm(ib - coef * b))

    return {
        "standard": psi,
        "image": image,
        "upper_defect": block_defect(psi[:2], image[:2]),
        "lower_defect": block_defect(psi[2:], image[2:]),
    }
