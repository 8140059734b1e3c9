"""Mass-dimension-3/2 action density for two coupled field pairs and the
numerical variational machinery that recovers their first-order equations.

The density is

    L = 1/2 { sum_F (dF . i g3) . F  - 2m A.B + 2m C.D }

over the four fields F in {A = lambda_s_{+-}, C = lambda_a_{-+},
B = rho_a_{-+}, D = rho_s_{+-}}, with "." the Clifford scalar product
<X reverse(Y)>_0 and i g3 = g2 g1 g0.  Multiform derivatives are taken
by central differences over the blade coefficients and assembled with
the reciprocal basis, so they can be checked against the closed forms
they are supposed to equal.
"""

from __future__ import annotations

import numpy as np

from .fields import PlaneWaveField
from .multivector import (DIM, EVEN_MASKS, G, G5, G21, ODD_MASKS,
                          Multivector, METRIC, _MUL, _SP_WEIGHT)

IG3 = G5 * G[3]  # equals g2 g1 g0; squares to -1

CONFIG_TAGS = (("lambda_s", "+-"), ("lambda_a", "-+"),
               ("rho_a", "-+"), ("rho_s", "+-"))

# (field, partner, mass sign) for the two coupling terms of the density.
MASS_TERMS = (
    (("lambda_s", "+-"), ("rho_a", "-+"), -1.0),
    (("lambda_a", "-+"), ("rho_s", "+-"), +1.0),
)

# Per-tag mass partner and sign as seen from the varied field.
MASS_PARTNER = {
    ("lambda_s", "+-"): (("rho_a", "-+"), -1.0),
    ("rho_a", "-+"): (("lambda_s", "+-"), -1.0),
    ("lambda_a", "-+"): (("rho_s", "+-"), +1.0),
    ("rho_s", "+-"): (("lambda_a", "-+"), +1.0),
}

_RIGHT_IG3 = np.einsum("abk,b->ka", _MUL, IG3.coeffs)


class FieldConfiguration:
    """The four tagged fields of the density plus cached evaluation."""

    def __init__(self, fields: dict, m: float):
        missing = [t for t in CONFIG_TAGS if t not in fields]
        if missing:
            raise KeyError(f"configuration is missing tags {missing}")
        self.fields = {t: fields[t] for t in CONFIG_TAGS}
        self.m = float(m)

    def values_at(self, x4) -> dict:
        return {t: f.value(x4).coeffs for t, f in self.fields.items()}

    def grads_at(self, x4) -> dict:
        return {t: f.derivative().value(x4).coeffs for t, f in self.fields.items()}


def _scalar_product_raw(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.dot(a, b * _SP_WEIGHT))


def density_from_values(values: dict, grads: dict, m: float) -> float:
    """The density as a function of field and gradient values at a point."""
    total = 0.0
    for tag in CONFIG_TAGS:
        total += _scalar_product_raw(_RIGHT_IG3 @ grads[tag], values[tag])
    for tag_a, tag_b, sign in MASS_TERMS:
        total += sign * 2.0 * m * _scalar_product_raw(values[tag_a], values[tag_b])
    out = 0.5 * total
    if not np.isfinite(out):
        raise ValueError("density is not finite")
    return out


def lagrangian_density(cfg: FieldConfiguration, x4) -> float:
    return density_from_values(cfg.values_at(x4), cfg.grads_at(x4), cfg.m)


def _reciprocal_assemble(masks, partials) -> Multivector:
    # e^J = e_J / (e_J . e_J); blade self-products are +/-1.
    out = np.zeros(DIM)
    for mask, df in zip(masks, partials):
        blade = np.zeros(DIM)
        blade[mask] = 1.0
        square = _scalar_product_raw(blade, blade)
        out[mask] = df / square
    return Multivector(out)


def multiform_derivative(cfg: FieldConfiguration, tag, x4,
                         wrt: str = "value", step: float = 1e-4) -> Multivector:
    """Central-difference derivative of the density in field space.

    wrt="value" differentiates in the 8 even coefficients of the tagged
    field's value at x (gradients held fixed); wrt="gradient" in the 8
    odd coefficients of its vector-derivative value (values held fixed).
    """
    values = cfg.values_at(x4)
    grads = cfg.grads_at(x4)
    table = values if wrt == "value" else grads
    if wrt not in ("value", "gradient"):
        raise ValueError("wrt must be 'value' or 'gradient'")
    masks = EVEN_MASKS if wrt == "value" else ODD_MASKS
    scale = max(float(np.linalg.norm(table[tag])), 1.0)
    h = step * scale
    partials = []
    base = table[tag].copy()
    for mask in masks:
        for sgn in (+1.0, -1.0):
            table[tag] = base.copy()
            table[tag][mask] += sgn * h
            val = density_from_values(values, grads, cfg.m)
            if sgn > 0:
                plus = val
            else:
                minus = val
        partials.append((plus - minus) / (2.0 * h))
    table[tag] = base
    return _reciprocal_assemble(masks, partials)


def analytic_dL_dfield(cfg: FieldConfiguration, tag, x4) -> Multivector:
    """Closed form of the value derivative: 1/2 dF i g3 + sign m partner."""
    grad = Multivector(cfg.grads_at(x4)[tag])
    partner_tag, sign = MASS_PARTNER[tag]
    partner = cfg.fields[partner_tag].value(x4)
    return grad * IG3 * 0.5 + partner * (sign * cfg.m)


def analytic_dL_dgradient(cfg: FieldConfiguration, tag, x4) -> Multivector:
    """Closed form of the gradient derivative: -1/2 F i g3."""
    return cfg.fields[tag].value(x4) * IG3 * (-0.5)


def euler_lagrange_residual(cfg: FieldConfiguration, tag, x4,
                            step: float = 1e-4, xstep: float = 1e-4) -> Multivector:
    """dL/dF - d(dL/d(dF)), everything through finite differences.

    The outer vector derivative is itself a central difference of the
    gradient-space multiform derivative over the four coordinates.
    """
    first = multiform_derivative(cfg, tag, x4, wrt="value", step=step)
    second = Multivector.zero()
    for mu in range(4):
        xp = list(x4)
        xm = list(x4)
        xp[mu] += xstep
        xm[mu] -= xstep
        gp = multiform_derivative(cfg, tag, xp, wrt="gradient", step=step)
        gm = multiform_derivative(cfg, tag, xm, wrt="gradient", step=step)
        diff = (gp - gm) / (2.0 * xstep)
        second = second + (G[mu] * METRIC[mu]) * diff
    return first - second


def csfopde_line_value(cfg: FieldConfiguration, tag, x4) -> Multivector:
    """Closed-form first-order-equation value for the tagged field at x.

    Equals euler_lagrange_residual(...) * g0 up to finite-difference
    noise: d(F) g21 + sign m partner g0.
    """
    dval = cfg.fields[tag].derivative().value(x4)
    partner_tag, sign = MASS_PARTNER[tag]
    pval = cfg.fields[partner_tag].value(x4)
    return dval * G21 + pval * G[0] * (sign * cfg.m)


def random_configuration(rng: np.random.Generator, m: float,
                         n_modes: int = 1, on_shell: bool = False) -> FieldConfiguration:
    """Arbitrary (generally off-shell) configuration for operator identities."""
    from .fields import Mode
    from .multivector import random_multivector
    fields = {}
    for tag in CONFIG_TAGS:
        modes = []
        for _ in range(n_modes):
            amp = random_multivector(rng, even_only=True)
            if on_shell:
                p = rng.standard_normal(3)
                p4 = (float(np.sqrt(np.dot(p, p) + m * m)), *p)
            else:
                p4 = tuple(rng.standard_normal(4))
            modes.append(Mode(amp, p4, int(rng.choice([-1, 1]))))
        fields[tag] = PlaneWaveField(modes)
    return FieldConfiguration(fields, m)


def elko_configuration(mom, axis=None) -> FieldConfiguration:
    """On-shell configuration from the constructed family (zero residuals)."""
    from .fields import elko_field_octet
    octet = elko_field_octet(mom, axis=axis)
    return FieldConfiguration({t: octet[t] for t in CONFIG_TAGS}, mom.m)
