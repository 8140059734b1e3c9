"""Fields valued in (spacetime Clifford algebra) x (internal even algebra).

The internal factor is the even subalgebra of a second Cl(1,3) copy,
i.e. a Pauli algebra with generators tau_i = Gamma_i Gamma_0 and central
element iota = Gamma_5 (iota^2 = -1).  A value is held as a (16, 16)
coefficient grid, internal blade index x spacetime blade index; the two
factors commute by construction.

The two composite fields pair a lambda-type field on the identity slot
with its rho-type equation partner on the iota*tau_2 slot, reproducing
the 2x2 matrix layout [[lam, -rho], [rho, lam]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import PlaneWaveField, minkowski_square
from .multivector import (DIM, G, G5, G21, Multivector, _MUL, _REVERSE_SIGN,
                          exp_scalar_square)
from .spinor import momentum_vector

TAU = (None, G[1] * G[0], G[2] * G[0], G[3] * G[0])
IOTA = G5
IOTA_TAU2 = IOTA * TAU[2]

_G0 = G[0]

# Internal (Pauli) reversal: tau monomial order reversed.  On the host
# algebra this is w -> g0 reverse(w) g0, which is blade-diagonal.
_PAULI_REV_SIGN = np.zeros(DIM)
for _mask in range(DIM):
    _b = Multivector.blade(_mask)
    _img = _G0 * _b.reverse() * _G0
    _PAULI_REV_SIGN[_mask] = _img.coeffs[_mask]

# 2x2 Pauli-matrix image of each internal blade (tau_i -> sigma_i).
from .gamma import PAULI  # noqa: E402  (kept close to its single use)

_PAULI_IMAGE = np.zeros((DIM, 2, 2), dtype=complex)


def _pauli_image_of(mv: Multivector) -> np.ndarray:
    # Decompose an even internal element on {1, tau_i, iota, iota tau_i}.
    basis = [Multivector.scalar(1.0), TAU[1], TAU[2], TAU[3],
             IOTA, IOTA * TAU[1], IOTA * TAU[2], IOTA * TAU[3]]
    mats = [np.eye(2, dtype=complex), PAULI[1], PAULI[2], PAULI[3],
            1j * np.eye(2), 1j * PAULI[1], 1j * PAULI[2], 1j * PAULI[3]]
    out = np.zeros((2, 2), dtype=complex)
    for b, mat in zip(basis, mats):
        coef = np.dot(b.coeffs, mv.coeffs) / np.dot(b.coeffs, b.coeffs)
        out += coef * mat
    return out


for _mask in range(DIM):
    _b = Multivector.blade(_mask)
    if _b.is_even():
        _PAULI_IMAGE[_mask] = _pauli_image_of(_b)


class CVal:
    """One tensor-product value: grid[internal_blade, spacetime_blade]."""

    __slots__ = ("grid",)

    def __init__(self, grid=None):
        if grid is None:
            self.grid = np.zeros((DIM, DIM))
        else:
            arr = np.asarray(grid)
            if arr.shape != (DIM, DIM):
                raise ValueError("CVal grid must be 16x16")
            self.grid = arr.astype(complex) if np.iscomplexobj(arr) else arr.astype(float)

    @classmethod
    def outer(cls, spacetime: Multivector, internal: Multivector) -> "CVal":
        return cls(np.outer(internal.coeffs, spacetime.coeffs))

    def __add__(self, other: "CVal") -> "CVal":
        return CVal(self.grid + other.grid)

    def __sub__(self, other: "CVal") -> "CVal":
        return CVal(self.grid - other.grid)

    def __neg__(self) -> "CVal":
        return CVal(-self.grid)

    def scale(self, c) -> "CVal":
        return CVal(self.grid * c)

    def __mul__(self, other: "CVal") -> "CVal":
        inner = np.einsum("ijk,ai,bj->abk", _MUL, self.grid, other.grid)
        return CVal(np.einsum("abc,abk->ck", _MUL, inner))

    def st_left(self, mv: Multivector) -> "CVal":
        """Left-multiply the spacetime factor only."""
        left = np.einsum("ijk,i->kj", _MUL, mv.coeffs)
        return CVal(self.grid @ left.T)

    def st_right(self, mv: Multivector) -> "CVal":
        right = np.einsum("ijk,j->ki", _MUL, mv.coeffs)
        return CVal(self.grid @ right.T)

    def int_left(self, mv: Multivector) -> "CVal":
        left = np.einsum("ijk,i->kj", _MUL, mv.coeffs)
        return CVal(left @ self.grid)

    def int_right(self, mv: Multivector) -> "CVal":
        right = np.einsum("ijk,j->ki", _MUL, mv.coeffs)
        return CVal(right @ self.grid)

    def reverse_cv(self) -> "CVal":
        """Reverse both factors (internal reversal in the tau sense)."""
        return CVal((self.grid * _REVERSE_SIGN[None, :]) * _PAULI_REV_SIGN[:, None])

    def int_reverse(self) -> "CVal":
        """Reverse only the internal factor."""
        return CVal(self.grid * _PAULI_REV_SIGN[:, None])

    def st_grades(self) -> set:
        from .multivector import GRADES
        present = np.abs(self.grid).sum(axis=0) > 1e-14 * max(self.norm(), 1e-300)
        return {int(g) for g in GRADES[present]}

    def norm(self) -> float:
        return float(np.linalg.norm(self.grid))

    def matrix2(self) -> np.ndarray:
        """2x2 transcription: entries are spacetime coefficient vectors."""
        return np.einsum("ars,ak->rsk", _PAULI_IMAGE, self.grid)


def matrix_correspondence(value: CVal) -> np.ndarray:
    return value.matrix2()


@dataclass(frozen=True)
class CVMode:
    amplitude: CVal
    p4: tuple
    eps: int

    def phase(self, x4) -> float:
        p = self.p4
        return self.eps * (p[0] * x4[0] - p[1] * x4[1]
                           - p[2] * x4[2] - p[3] * x4[3])


class CVField:
    """Plane-wave field with CVal amplitudes."""

    def __init__(self, modes):
        self.modes = tuple(CVMode(m.amplitude, tuple(float(c) for c in m.p4),
                                  int(m.eps)) for m in modes)

    def value(self, x4) -> CVal:
        from .multivector import phase_rotor
        out = CVal()
        for mode in self.modes:
            out = out + mode.amplitude.st_right(phase_rotor(mode.phase(x4)))
        return out

    def __add__(self, other: "CVField") -> "CVField":
        return CVField(self.modes + other.modes)

    def map_amplitudes(self, fn) -> "CVField":
        return CVField([CVMode(fn(m.amplitude), m.p4, m.eps) for m in self.modes])

    def norm(self) -> float:
        return float(sum(m.amplitude.norm() for m in self.modes))

    def derivative(self) -> "CVField":
        out = []
        for mode in self.modes:
            p = momentum_vector(mode.p4)
            out.append(CVMode(mode.amplitude.st_left(p).st_right(G21).scale(mode.eps),
                              mode.p4, mode.eps))
        return CVField(out)


def cv_residual_norm(field: CVField) -> float:
    pts = [np.zeros(4)]
    rng = np.random.default_rng(271828)
    pts.extend(rng.uniform(-3.0, 3.0, size=(6, 4)))
    return max(field.value(x).norm() for x in pts)


def _paired_modes(lam: PlaneWaveField, rho: PlaneWaveField):
    if len(lam.modes) != len(rho.modes):
        raise ValueError("component fields must have matching mode lists")
    for ml, mr in zip(lam.modes, rho.modes):
        if ml.p4 != mr.p4 or ml.eps != mr.eps:
            raise ValueError("component fields must share momenta and signs")
        yield ml, mr


def build_K(lam_field: PlaneWaveField, rho_field: PlaneWaveField) -> CVField:
    """K = lambda_s_{-+} (x) 1 - rho_a_{+-} (x) iota tau_2."""
    modes = []
    for ml, mr in _paired_modes(lam_field, rho_field):
        amp = CVal.outer(ml.amplitude, Multivector.scalar(1.0)) \
            - CVal.outer(mr.amplitude, IOTA_TAU2)
        modes.append(CVMode(amp, ml.p4, ml.eps))
    return CVField(modes)


def build_M(lam_field: PlaneWaveField, rho_field: PlaneWaveField) -> CVField:
    """M = lambda_s_{+-} (x) 1 - rho_a_{-+} (x) iota tau_2 (same layout)."""
    return build_K(lam_field, rho_field)


def km_residual(field: CVField, m: float, kind: str = "K") -> CVField:
    """Field-equation residual d(N) g21 + m iota tau_2 int_rev(N) g0.

    The mass multiplier acts on the internally reversed field; this is
    the form the composite actually satisfies, for either kind, given
    that both component equations in a pair carry the same mass sign
    (see the coupled-system sign table in fields.py).
    """
    if kind not in ("K", "M"):
        raise ValueError("kind must be 'K' or 'M'")
    out = []
    for mode in field.modes:
        p = momentum_vector(mode.p4)
        kin = mode.amplitude.st_left(p).scale(-mode.eps)
        mass = mode.amplitude.int_reverse().int_left(IOTA_TAU2).st_right(_G0).scale(m)
        out.append(CVMode(kin + mass, mode.p4, mode.eps))
    return CVField(out)


def km_residual_printed(field: CVField, m: float, kind: str = "K") -> CVField:
    """The uncorrected form d(N) g21 -/+ m N iota tau_2 g0.

    Composing it with itself forces box N = +m^2 N, so no on-shell
    plane-wave composite can satisfy it; kept as the reference form for
    the covariance checks and for the anomaly report.
    """
    sign = -1.0 if kind == "K" else 1.0
    out = []
    for mode in field.modes:
        p = momentum_vector(mode.p4)
        kin = mode.amplitude.st_left(p).scale(-mode.eps)
        mass = mode.amplitude.int_right(IOTA_TAU2).st_right(_G0).scale(sign * m)
        out.append(CVMode(kin + mass, mode.p4, mode.eps))
    return CVField(out)


PROJ3 = (Multivector.scalar(1.0) + TAU[3]) * 0.5


def column_project(field: CVField) -> CVField:
    """Right internal multiplication by (1 + tau_3)/2: keeps one column."""
    return field.map_amplitudes(lambda a: a.int_right(PROJ3))


def projected_residual(field: CVField, m: float) -> CVField:
    """Residual of the projected column: d(P) g21 - m tau_1 P g0."""
    out = []
    for mode in field.modes:
        p = momentum_vector(mode.p4)
        kin = mode.amplitude.st_left(p).scale(-mode.eps)
        mass = mode.amplitude.int_left(TAU[1]).st_right(_G0).scale(-m)
        out.append(CVMode(kin + mass, mode.p4, mode.eps))
    return CVField(out)


# -- currents -------------------------------------------------------------

@dataclass(frozen=True)
class TrigTerm:
    q4: tuple
    cos_part: CVal
    sin_part: CVal


class TrigCVField:
    """Finite trigonometric polynomial of CVal coefficients."""

    def __init__(self, terms):
        self.terms = tuple(terms)

    def value(self, x4) -> CVal:
        out = CVal()
        for t in self.terms:
            th = t.q4[0] * x4[0] - t.q4[1] * x4[1] - t.q4[2] * x4[2] - t.q4[3] * x4[3]
            out = out + t.cos_part.scale(np.cos(th)) + t.sin_part.scale(np.sin(th))
        return out

    def norm(self) -> float:
        return float(sum(t.cos_part.norm() + t.sin_part.norm() for t in self.terms))


_MIDDLE_C = CVal.outer(_G0, TAU[1])
_MIDDLE_S = CVal.outer(_G0 * G21, TAU[1])


def current(field: CVField) -> TrigCVField:
    """J = N tau_1 g0 reverse_cv(N) as a closed-form trig polynomial.

    For every mode pair the internal phases collapse onto the middle
    factor because g0 commutes with the phase plane g2 g1.
    """
    terms = []
    for m1 in field.modes:
        for m2 in field.modes:
            q4 = tuple(m1.eps * a - m2.eps * b for a, b in zip(m1.p4, m2.p4))
            rev2 = m2.amplitude.reverse_cv()
            cpart = m1.amplitude * _MIDDLE_C * rev2
            spart = m1.amplitude * _MIDDLE_S * rev2
            terms.append(TrigTerm(q4, cpart, spart))
    return TrigCVField(terms)


def current_divergence(j: TrigCVField) -> TrigCVField:
    """Left-contraction divergence, term-closed form."""
    out = []
    for t in j.terms:
        q = momentum_vector(t.q4)

        def contract(val: CVal) -> CVal:
            rows = np.zeros_like(val.grid)
            for a in range(DIM):
                row = Multivector(val.grid[a])
                rows[a] = q.left_contraction(row).coeffs
            return CVal(rows)

        out.append(TrigTerm(t.q4, contract(t.sin_part), -contract(t.cos_part)))
    return TrigCVField(out)


def divergence_fd(j: TrigCVField, x4, h: float = 1e-5) -> CVal:
    """Finite-difference cross-check of the divergence at a point."""
    from .multivector import METRIC
    out = CVal()
    for mu in range(4):
        xp = list(x4)
        xm = list(x4)
        xp[mu] += h
        xm[mu] -= h
        diff = (j.value(xp) - j.value(xm)).scale(1.0 / (2.0 * h))
        gu = G[mu] * METRIC[mu]
        rows = np.zeros_like(diff.grid)
        for a in range(DIM):
            rows[a] = gu.left_contraction(Multivector(diff.grid[a])).coeffs
        out = out + CVal(rows)
    return out


def trig_norm_at_points(field: TrigCVField) -> float:
    rng = np.random.default_rng(141421)
    pts = [np.zeros(4)] + list(rng.uniform(-3.0, 3.0, size=(6, 4)))
    return max(field.value(x).norm() for x in pts)


# -- gauge sector ---------------------------------------------------------

@dataclass(frozen=True)
class GaugePotential:
    """Constant internal-valued 1-form A = A^i (x) tau_i with coupling q."""

    components: tuple  # three grade-1 Multivectors
    q: float

    def __post_init__(self):
        for a in self.components:
            if a.grade(1).coeffs.tolist() != a.coeffs.tolist():
                raise ValueError("gauge components must be pure grade 1")

    def cval(self) -> CVal:
        out = CVal()
        for i, a in enumerate(self.components, start=1):
            out = out + CVal.outer(a, TAU[i])
        return out

    @classmethod
    def zero(cls) -> "GaugePotential":
        z = Multivector.zero()
        return cls((z, z, z), 0.0)

    @classmethod
    def random(cls, rng: np.random.Generator, q: float) -> "GaugePotential":
        comps = tuple(Multivector.from_vector(rng.standard_normal(4))
                      for _ in range(3))
        return cls(comps, q)


def coupling_term(pot: GaugePotential, value: CVal) -> CVal:
    """q Gamma_5 A N, with Gamma_5 the central internal iota."""
    return (pot.cval() * value).int_left(IOTA).scale(pot.q)


def gauge_residual(field: CVField, pot: GaugePotential, m: float,
                   kind: str = "K", mass_form: str = "conjugate") -> CVField:
    """Interacting residual: free residual plus q Gamma_5 A N.

    mass_form selects the satisfiable conjugate mass term (default) or
    the uncorrected right-multiplication form used by the covariance
    checks (which is exactly gauge covariant).
    """
    free = (km_residual if mass_form == "conjugate" else km_residual_printed)
    base = free(field, m, kind=kind)
    if pot.q == 0.0:
        return base
    out = []
    for mode_r, mode_f in zip(base.modes, field.modes):
        amp = mode_r.amplitude + coupling_term(pot, mode_f.amplitude)
        out.append(CVMode(amp, mode_r.p4, mode_r.eps))
    return CVField(out)


def gauge_rotor(theta, q: float) -> Multivector:
    """exp(Gamma_5 q theta^i Gamma_i0); the exponent squares to a scalar."""
    gen = Multivector.zero()
    for i in range(3):
        gen = gen + TAU[i + 1] * float(theta[i])
    return exp_scalar_square(IOTA * gen * q)


def gauge_transform(field: CVField, pot: GaugePotential, theta, q: float):
    """Apply the global internal transformation to field, potential, basis.

    Returns (field', potential', basis_map) where basis_map sends an
    internal element w to U w U^-1.
    """
    u = gauge_rotor(theta, q)
    u_inv = u.reverse()  # rotor inverse
    new_field = field.map_amplitudes(lambda a: a.int_left(u))
    new_pot_val = pot.cval().int_left(u).int_right(u_inv)

    def basis_map(w: Multivector) -> Multivector:
        return u * w * u_inv

    return new_field, new_pot_val, basis_map


def gauge_residual_printed_from_value(value: CVal, pot_val: CVal, p4, eps,
                                      m: float, q: float, kind: str = "K") -> CVal:
    """Printed-form interacting residual amplitude from raw pieces.

    Used by the covariance check, where the transformed potential is a
    raw CVal rather than a GaugePotential.
    """
    sign = -1.0 if kind == "K" else 1.0
    p = momentum_vector(p4)
    kin = value.st_left(p).scale(-eps)
    mass = value.int_right(IOTA_TAU2).st_right(_G0).scale(sign * m)
    coup = (pot_val * value).int_left(IOTA).scale(q)
    return kin + mass + coup
