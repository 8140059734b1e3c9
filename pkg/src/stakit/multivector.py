"""Real Clifford algebra Cl(1,3) on a 16-dimensional blade basis.

Blades are indexed by a 4-bit mask over the generators (g0, g1, g2, g3):
bit i set means g_i is a factor, and factors are ordered by ascending
index.  The metric is diag(+1, -1, -1, -1).  Products are evaluated
through a precomputed 16x16x16 structure tensor, so a geometric product
is a single einsum and works unchanged for complex coefficients.
"""

from __future__ import annotations

import math

import numpy as np

DIM = 16
METRIC = (1.0, -1.0, -1.0, -1.0)

GRADES = np.array([bin(m).count("1") for m in range(DIM)])


def _blade_product(mask_a: int, mask_b: int) -> tuple[int, float]:
    """Product of two basis blades: result mask and sign."""
    sign = 1.0
    # Count transpositions needed to merge the two factor lists.
    for i in range(4):
        if not (mask_b >> i) & 1:
            continue
        # g_i from b moves left past the generators of a above index i.
        swaps = bin(mask_a >> (i + 1)).count("1")
        if swaps % 2:
            sign = -sign
        if (mask_a >> i) & 1:
            sign *= METRIC[i]
    return mask_a ^ mask_b, sign


def _build_structure() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    mul = np.zeros((DIM, DIM, DIM))
    idx = np.zeros((DIM, DIM), dtype=np.int64)
    sign = np.zeros((DIM, DIM))
    for a in range(DIM):
        for b in range(DIM):
            k, s = _blade_product(a, b)
            mul[a, b, k] = s
            idx[a, b] = k
            sign[a, b] = s
    return mul, idx, sign


_MUL, _IDX, _SIGN = _build_structure()

# (-1)^(r(r-1)/2) per blade: grade reversal signs.
_REVERSE_SIGN = np.array([(-1.0) ** (r * (r - 1) // 2) for r in GRADES])
_INVOLUTE_SIGN = np.array([(-1.0) ** r for r in GRADES])
# Scalar square of each basis blade, and the pairing weight
# <e_J reverse(e_J)>_0 used by the scalar product.
_BLADE_SQUARE = np.array([_blade_product(m, m)[1] for m in range(DIM)])
_SP_WEIGHT = _REVERSE_SIGN * _BLADE_SQUARE

EVEN_MASKS = tuple(m for m in range(DIM) if GRADES[m] % 2 == 0)
ODD_MASKS = tuple(m for m in range(DIM) if GRADES[m] % 2 == 1)


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "g" + "".join(str(i) for i in range(4) if (mask >> i) & 1)


BLADE_NAMES = tuple(blade_name(m) for m in range(DIM))


class Multivector:
    """Element of Cl(1,3) held as 16 blade coefficients.

    Instances are immutable by convention: operations return new values.
    Coefficients may be real or complex (complex is used by the
    propagator kernels; all physics-facing constructions stay real).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.coeffs = np.zeros(DIM)
        else:
            arr = np.asarray(coeffs)
            if arr.shape != (DIM,):
                raise ValueError(f"expected {DIM} blade coefficients, got {arr.shape}")
            self.coeffs = arr.astype(complex) if np.iscomplexobj(arr) else arr.astype(float)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "Multivector":
        return cls()

    @classmethod
    def scalar(cls, value) -> "Multivector":
        c = np.zeros(DIM, dtype=complex if isinstance(value, complex) else float)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, mask: int, value=1.0) -> "Multivector":
        c = np.zeros(DIM, dtype=complex if isinstance(value, complex) else float)
        c[mask] = value
        return cls(c)

    @classmethod
    def basis_vector(cls, mu: int) -> "Multivector":
        """g_mu, the lower-index frame 1-form."""
        return cls.blade(1 << mu)

    @classmethod
    def from_vector(cls, components) -> "Multivector":
        """1-vector sum c_mu g_mu from 4 components on the g_mu basis."""
        c = np.zeros(DIM, dtype=complex if np.iscomplexobj(np.asarray(components)) else float)
        for mu in range(4):
            c[1 << mu] = components[mu]
        return cls(c)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.coeffs + other.coeffs)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.coeffs - other.coeffs)

    def __neg__(self) -> "Multivector":
        return Multivector(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return Multivector(np.einsum("abk,a,b->k", _MUL, self.coeffs, other.coeffs))
        return Multivector(self.coeffs * other)

    def __rmul__(self, other):
        # Scalars commute; Multivector * Multivector is handled by __mul__.
        return Multivector(self.coeffs * other)

    def __truediv__(self, scalar):
        return Multivector(self.coeffs / scalar)

    # -- involutions and projections -------------------------------------

    def reverse(self) -> "Multivector":
        """Grade-r parts scaled by (-1)^(r(r-1)/2)."""
        return Multivector(self.coeffs * _REVERSE_SIGN)

    def grade_involution(self) -> "Multivector":
        return Multivector(self.coeffs * _INVOLUTE_SIGN)

    def grade(self, r: int) -> "Multivector":
        out = np.where(GRADES == r, self.coeffs, 0.0)
        return Multivector(out)

    def even(self) -> "Multivector":
        return Multivector(np.where(GRADES % 2 == 0, self.coeffs, 0.0))

    def odd(self) -> "Multivector":
        return Multivector(np.where(GRADES % 2 == 1, self.coeffs, 0.0))

    def is_even(self, tol: float = 0.0) -> bool:
        return float(np.abs(self.coeffs[np.array(ODD_MASKS)]).max()) <= tol

    def scalar_part(self):
        return self.coeffs[0]

    # -- products beyond the geometric one --------------------------------

    def left_contraction(self, other: "Multivector") -> "Multivector":
        """a 'lc' b: blade-wise grade projection <a_r b_s>_{s-r}."""
        out = np.zeros(DIM, dtype=np.result_type(self.coeffs, other.coeffs))
        for a in range(DIM):
            ca = self.coeffs[a]
            if ca == 0:
                continue
            for b in range(DIM):
                cb = other.coeffs[b]
                if cb == 0:
                    continue
                k = _IDX[a, b]
                if GRADES[k] == GRADES[b] - GRADES[a]:
                    out[k] += _SIGN[a, b] * ca * cb
        return Multivector(out)

    def exterior(self, other: "Multivector") -> "Multivector":
        """a ^ b: blade-wise grade projection <a_r b_s>_{r+s}."""
        out = np.zeros(DIM, dtype=np.result_type(self.coeffs, other.coeffs))
        for a in range(DIM):
            ca = self.coeffs[a]
            if ca == 0:
                continue
            for b in range(DIM):
                cb = other.coeffs[b]
                if cb == 0:
                    continue
                if a & b:
                    continue  # shared generator: wedge vanishes
                k = _IDX[a, b]
                out[k] += _SIGN[a, b] * ca * cb
        return Multivector(out)

    def scalar_product(self, other: "Multivector"):
        """a . b := <a reverse(b)>_0 (symmetric).

        Blade-diagonal: the pairing weight per blade is the blade's
        reversal sign times its scalar square.
        """
        return np.dot(self.coeffs, other.coeffs * _SP_WEIGHT)

    # -- norms and comparison ---------------------------------------------

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector (residual metric)."""
        return float(np.linalg.norm(self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for m in range(DIM):
            c = self.coeffs[m]
            if c != 0:
                terms.append(f"{c:+.6g}*{BLADE_NAMES[m]}")
        return "Multivector(" + (" ".join(terms) if terms else "0") + ")"

    def almost_equal(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return float(np.abs(self.coeffs - other.coeffs).max()) <= tol


# Shared basis elements.
ONE = Multivector.scalar(1.0)
G = tuple(Multivector.basis_vector(mu) for mu in range(4))
G5 = G[0] * G[1] * G[2] * G[3]  # pseudoscalar, squares to -1
SIGMA = (None, G[1] * G[0], G[2] * G[0], G[3] * G[0])  # sigma_k = g_k g_0
ISIGMA = (None, G5 * SIGMA[1], G5 * SIGMA[2], G5 * SIGMA[3])
G21 = G[2] * G[1]  # right-multiplication unit for the complex structure


def exp_scalar_square(x: Multivector, tol: float = 1e-10) -> Multivector:
    """exp(x) for x whose square is a real scalar multiple of 1.

    Uses cos/cosh closed forms depending on the sign of x^2; rejects
    arguments whose square has non-scalar residue above tol.
    """
    sq = x * x
    rest = sq.coeffs.copy()
    s = rest[0]
    rest[0] = 0.0
    scale = max(x.norm(), 1.0)
    if np.abs(rest).max() > tol * scale * scale:
        raise ValueError("exponent square is not a scalar within tolerance")
    if np.iscomplexobj(sq.coeffs) and abs(complex(s).imag) > tol * scale * scale:
        raise ValueError("exponent square is not real within tolerance")
    s = float(np.real(s))
    if s < 0.0:
        k = math.sqrt(-s)
        if k == 0.0:
            return ONE + x
        return Multivector.scalar(math.cos(k)) + x * (math.sin(k) / k)
    if s > 0.0:
        k = math.sqrt(s)
        return Multivector.scalar(math.cosh(k)) + x * (math.sinh(k) / k)
    return ONE + x


def exp_series(x: Multivector, terms: int = 30) -> Multivector:
    """Truncated power series of exp(x); oracle for exp_scalar_square."""
    acc = ONE
    term = ONE
    for n in range(1, terms):
        term = term * x / n
        acc = acc + term
    return acc


def phase_rotor(theta: float, eps: int = 1) -> Multivector:
    """exp(g2 g1 * eps * theta); (g2 g1)^2 = -1 so this is a rotation."""
    return Multivector.scalar(math.cos(theta)) + G21 * (eps * math.sin(theta))


def random_multivector(rng: np.random.Generator, even_only: bool = False) -> Multivector:
    c = rng.standard_normal(DIM)
    if even_only:
        c[np.array(ODD_MASKS)] = 0.0
    return Multivector(c)
