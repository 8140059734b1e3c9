"""Plane-wave operator fields and the first-order / second-order residual
engine, plus the bilinear covariants and the six-class spinor taxonomy.

A field is a sum of modes A * exp(g2 g1 * eps * p.x).  Because
(g2 g1)^2 = -1, right multiplication by that exponential is the Clifford
image of the complex phase exp(i eps p.x) on the column side, so every
residual below has an exact per-mode closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .modes import ELKO_KINDS, HELICITY_LABELS, OnShellMomentum, elko_octet
from .multivector import G, G21, G5, SIGMA, Multivector, phase_rotor
from .spinor import momentum_vector

_G0 = G[0]


def minkowski_square(p4) -> float:
    p4 = np.asarray(p4, dtype=float)
    return float(p4[0] ** 2 - p4[1] ** 2 - p4[2] ** 2 - p4[3] ** 2)


@dataclass(frozen=True)
class Mode:
    amplitude: Multivector
    p4: tuple          # (E, p1, p2, p3); may be off shell
    eps: int           # +1 or -1 frequency sign

    def phase(self, x4) -> float:
        p = self.p4
        return self.eps * (p[0] * x4[0] - p[1] * x4[1]
                           - p[2] * x4[2] - p[3] * x4[3])


class PlaneWaveField:
    """Sum of operator plane-wave modes; immutable after construction."""

    def __init__(self, modes):
        self.modes = tuple(Mode(m.amplitude, tuple(float(c) for c in m.p4),
                                int(m.eps)) for m in modes)

    @classmethod
    def single(cls, amplitude: Multivector, p4, eps: int) -> "PlaneWaveField":
        return cls([Mode(amplitude, tuple(p4), eps)])

    def value(self, x4) -> Multivector:
        out = Multivector.zero()
        for mode in self.modes:
            out = out + mode.amplitude * phase_rotor(mode.phase(x4))
        return out

    def map_amplitudes(self, fn) -> "PlaneWaveField":
        return PlaneWaveField([Mode(fn(mode.amplitude), mode.p4, mode.eps)
                               for mode in self.modes])

    def right_mul(self, mv: Multivector) -> "PlaneWaveField":
        """Right-multiply by an element commuting with g2 g1 (checked)."""
        comm = (mv * G21 - G21 * mv).norm()
        if comm > 1e-12 * max(mv.norm(), 1.0):
            raise ValueError("right factor must commute with the phase plane")
        return self.map_amplitudes(lambda a: a * mv)

    def __add__(self, other: "PlaneWaveField") -> "PlaneWaveField":
        return PlaneWaveField(self.modes + other.modes)

    def scale(self, c: float) -> "PlaneWaveField":
        return self.map_amplitudes(lambda a: a * c)

    def norm(self) -> float:
        return float(sum(m.amplitude.norm() for m in self.modes))

    def derivative(self) -> "PlaneWaveField":
        """The vector derivative: per mode, A -> eps * p A g2 g1."""
        out = []
        for mode in self.modes:
            p = momentum_vector(mode.p4)
            out.append(Mode(p * mode.amplitude * G21 * mode.eps,
                            mode.p4, mode.eps))
        return PlaneWaveField(out)

    def dalembertian(self) -> "PlaneWaveField":
        """Box operator: per mode, A -> -p^2 A."""
        return PlaneWaveField([
            Mode(mode.amplitude * (-minkowski_square(mode.p4)), mode.p4, mode.eps)
            for mode in self.modes
        ])


def apply_dirac_operator(field: PlaneWaveField) -> PlaneWaveField:
    return field.derivative()


def derivative_fd(field: PlaneWaveField, x4, h: float = 1e-5) -> Multivector:
    """Central-difference vector derivative at a point (cross-check only).

    Assembles g^mu lc (d_mu psi) + g^mu ^ (d_mu psi) with the
    upper-index frame g^mu = eta^mu,mu g_mu.
    """
    from .multivector import METRIC
    out = Multivector.zero()
    for mu in range(4):
        xp = list(x4)
        xm = list(x4)
        xp[mu] += h
        xm[mu] -= h
        diff = (field.value(xp) - field.value(xm)) / (2.0 * h)
        gu = G[mu] * METRIC[mu]
        out = out + gu.left_contraction(diff) + gu.exterior(diff)
    return out


def dh_residual(field: PlaneWaveField, m: float) -> PlaneWaveField:
    """Dirac-Hestenes residual d(psi) g21 - m psi g0, mode-closed form."""
    out = []
    for mode in field.modes:
        p = momentum_vector(mode.p4)
        amp = -(p * mode.amplitude) * mode.eps - (mode.amplitude * _G0) * m
        out.append(Mode(amp, mode.p4, mode.eps))
    return PlaneWaveField(out)


def dirac_residual_covariant(amps, m: float):
    """(pslash - eps-signed) residual for covariant modes.

    amps: iterable of (column, p4, eps); returns list of residual columns
    of i gamma d psi - m psi per mode.
    """
    from .gamma import STANDARD
    out = []
    for col, p4, eps in amps:
        out.append(-eps * STANDARD.slash(p4) @ col - m * col)
    return out


def kg_residual(field: PlaneWaveField, m: float) -> PlaneWaveField:
    """Klein-Gordon residual (box + m^2) psi per mode."""
    return PlaneWaveField([
        Mode(mode.amplitude * (m * m - minkowski_square(mode.p4)),
             mode.p4, mode.eps)
        for mode in field.modes
    ])


# --- the coupled first-order system ------------------------------------

# One equation per field F: d(F) g21 + sign * m * partner * g0 = 0.
# The minus-sign family carries exp(-i p.x), the plus family exp(+i p.x);
# within each closed pair both equations share the sign, which is what
# on-shell consistency (composing to Klein-Gordon with +m^2) requires.
CSFOPDE_LINES = (
    ("lambda_s", "-+", "rho_a", "+-", -1),
    ("rho_a", "-+", "lambda_s", "+-", -1),
    ("lambda_a", "-+", "rho_s", "+-", +1),
    ("rho_s", "-+", "lambda_a", "+-", +1),
    ("lambda_s", "+-", "rho_a", "-+", -1),
    ("rho_a", "+-", "lambda_s", "-+", -1),
    ("lambda_a", "+-", "rho_s", "-+", +1),
    ("rho_s", "+-", "lambda_a", "-+", +1),
)


def csfopde_residual(octet: dict, m: float) -> dict:
    """All eight coupled-equation residuals of a field octet.

    octet maps (kind, helicity) -> PlaneWaveField.  Returns the same
    keying with residual fields; all eight vanish on octets built from
    elko_field_octet with the standard frequency signs.
    """
    missing = [(k, h) for k in ELKO_KINDS for h in HELICITY_LABELS
               if (k, h) not in octet]
    if missing:
        raise KeyError(f"octet is missing tags {missing}")
    out = {}
    for kind, hel, pkind, phel, sign in CSFOPDE_LINES:
        # d(F) g21, with the right factor folded into the mode amplitudes
        dterm = octet[(kind, hel)].derivative().map_amplitudes(lambda a: a * G21)
        mterm = octet[(pkind, phel)].map_amplitudes(lambda a: a * _G0 * (sign * m))
        out[(kind, hel)] = dterm + mterm
    return out


def elko_field_octet(mom: OnShellMomentum, axis=None) -> dict:
    """Mode fields for the full family with their frequency signs."""
    spinors = elko_octet(mom, axis=axis)
    return {key: PlaneWaveField.single(sp.operator(), mom.four(),
                                       sp.frequency_sign)
            for key, sp in spinors.items()}


def kg_not_csfopde_witness(mom: OnShellMomentum, axis=None) -> dict:
    """Octet whose lambda_s_{-+} frequency sign is flipped.

    Every member still satisfies Klein-Gordon (amplitudes are on shell),
    but the first-order system fails on the flipped tag.
    """
    octet = elko_field_octet(mom, axis=axis)
    tag = ("lambda_s", "-+")
    flipped = PlaneWaveField([Mode(md.amplitude, md.p4, -md.eps)
                              for md in octet[tag].modes])
    octet = dict(octet)
    octet[tag] = flipped
    return octet


def residual_norm(field: PlaneWaveField) -> float:
    """Sup over a fixed point lattice of the residual value norm.

    Modes of equal (p, eps) combine; distinct modes cannot cancel at
    every lattice point, so a zero here means the field is zero.
    """
    pts = [np.zeros(4)]
    rng = np.random.default_rng(314159)
    pts.extend(rng.uniform(-3.0, 3.0, size=(6, 4)))
    return max(field.value(x).norm() for x in pts)


# --- bilinear covariants and classification ------------------------------

@dataclass(frozen=True)
class BilinearSet:
    sigma: float
    omega: float
    j: Multivector       # psi g0 psi~
    s: Multivector       # psi g2 g1 psi~
    k: Multivector       # psi g3 psi~

    def j_components(self) -> np.ndarray:
        return np.array([self.j.coeffs[1 << mu] for mu in range(4)])

    def k_components(self) -> np.ndarray:
        return np.array([self.k.coeffs[1 << mu] for mu in range(4)])


def bilinears(psi: Multivector) -> BilinearSet:
    rev = psi.reverse()
    ssw = psi * rev
    return BilinearSet(
        sigma=float(ssw.coeffs[0]),
        omega=float(ssw.coeffs[15]),
        j=psi * _G0 * rev,
        s=psi * G21 * rev,
        k=psi * G[3] * rev,
    )


def vector_minkowski_norm(v: Multivector) -> float:
    """v.v for a grade-1 multivector (Lorentzian square)."""
    c = v.coeffs
    return float(c[1] ** 2 - c[2] ** 2 - c[4] ** 2 - c[8] ** 2)


def lightlike_check(b: BilinearSet, tol_scale: float = 1.0) -> dict:
    tol = 1e-10 * max(tol_scale, 1e-30)
    jj = vector_minkowski_norm(b.j)
    kk = vector_minkowski_norm(b.k)
    return {
        "j_lightlike": abs(jj) <= tol,
        "k_lightlike": abs(kk) <= tol,
        "j_nonzero": b.j.norm() > tol,
        "k_nonzero": b.k.norm() > tol,
        "j_square": jj,
        "k_square": kk,
        "j0": float(b.j.coeffs[1]),
    }


def classify(b: BilinearSet, convention: str = "lounesto") -> int:
    """Six-class taxonomy from the vanishing pattern of the covariants.

    "lounesto": classes 4/5/6 split by (K, S) = (both, K=0, S=0).
    "relaxed":  class 5 only requires sigma = omega = 0 with J nonzero
    and lightlike and S nonzero (the K test is dropped).
    """
    scale = max(b.j.norm(), b.s.norm(), b.k.norm(), abs(b.sigma), abs(b.omega))
    if scale == 0:
        raise ValueError("zero spinor has no class")
    tol = 1e-10 * scale
    sig_zero = abs(b.sigma) <= tol
    om_zero = abs(b.omega) <= tol
    if not sig_zero and not om_zero:
        return 1
    if not sig_zero:
        return 2
    if not om_zero:
        return 3
    k_zero = b.k.norm() <= tol
    s_zero = b.s.norm() <= tol
    if convention == "relaxed":
        if (not s_zero and b.j.norm() > tol
                and abs(vector_minkowski_norm(b.j)) <= tol * scale):
            return 5
        return 4 if not s_zero else 6
    if not k_zero and not s_zero:
        return 4
    if k_zero and not s_zero:
        return 5
    if not k_zero and s_zero:
        return 6
    raise ValueError("degenerate bilinears: no class")


def pseudoscalar_coefficient(mv: Multivector) -> float:
    return float(mv.coeffs[15])


__all__ = [
    "Mode", "PlaneWaveField", "apply_dirac_operator", "derivative_fd",
    "dh_residual", "dirac_residual_covariant", "kg_residual",
    "CSFOPDE_LINES", "csfopde_residual", "elko_field_octet",
    "kg_not_csfopde_witness", "residual_norm", "BilinearSet", "bilinears",
    "vector_minkowski_norm", "lightlike_check", "classify",
    "minkowski_square", "pseudoscalar_coefficient",
]
