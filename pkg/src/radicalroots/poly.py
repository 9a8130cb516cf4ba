"""Polynomial values, Horner evaluation, and the depression coefficient maps.

Coefficients are stored constant term first, so ``coeffs[k]`` multiplies
``x**k`` and the leading coefficient is ``coeffs[-1]``. The same ordering
is used by the text format accepted everywhere:

    -144 324 -260 95 -16 1    <->    x^5 - 16x^4 + 95x^3 - 260x^2 + 324x - 144
"""

import math
from dataclasses import dataclass

from .errors import DegenerateLeading, NonFiniteInput

# below this fraction of the largest coefficient, a leading term is noise
EPS_LEAD = 1e-12


@dataclass(frozen=True)
class RealPolynomial:
    """Real-coefficient polynomial of degree 1..5, constant term first."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(float(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if not all(math.isfinite(c) for c in cs):
            raise NonFiniteInput(f"non-finite coefficient in {cs!r}")
        if len(cs) < 2 or len(cs) > 6:
            raise ValueError(f"degree must be 1..5, got {len(cs) - 1}")
        if cs[-1] == 0.0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_text(cls, text: str) -> "RealPolynomial":
        """Parse whitespace-separated coefficients, constant term first."""
        parts = text.split()
        if not parts:
            raise ValueError("empty polynomial text")
        try:
            cs = [float(tok) for tok in parts]
        except ValueError as exc:
            raise ValueError(f"malformed coefficient in {text!r}") from exc
        return cls(tuple(cs))

    def to_text(self) -> str:
        return " ".join(format(c, ".17g") for c in self.coeffs)


@dataclass(frozen=True)
class DepressedQuartic:
    """Coefficients of y^4 + P y^2 + Q y + R = 0."""

    P: float
    Q: float
    R: float


@dataclass(frozen=True)
class ReducedQuintic:
    """Coefficients of x^5 + c x^3 + d x^2 + e x + f = 0."""

    c: float
    d: float
    e: float
    f: float


def eval_horner(p: RealPolynomial, z: complex) -> complex:
    """Evaluate p(z) by nested multiplication from the leading coefficient down."""
    acc = complex(0.0)
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def eval_with_derivative(p: RealPolynomial, z: complex):
    """Return (p(z), p'(z)) from a single Horner pass."""
    acc = complex(0.0)
    dacc = complex(0.0)
    for c in reversed(p.coeffs):
        dacc = dacc * z + acc
        acc = acc * z + c
    return acc, dacc


def normalize_monic(p: RealPolynomial) -> RealPolynomial:
    """Divide through by the leading coefficient; refuse when it is noise-level."""
    lead = p.coeffs[-1]
    floor = EPS_LEAD * max(abs(c) for c in p.coeffs)
    if abs(lead) <= floor:
        raise DegenerateLeading(f"|leading|={abs(lead)!r} below floor {floor!r}")
    if lead == 1.0:
        return p
    return RealPolynomial(tuple(c / lead for c in p.coeffs[:-1]) + (1.0,))


def depressed_quartic_coeffs(p: RealPolynomial) -> DepressedQuartic:
    """Map a monic quartic x^4+bx^3+cx^2+dx+e to (P,Q,R) of y^4+Py^2+Qy+R.

    The substitution is x = (-b + y)/4; y-roots map back through it.
    Identity: 256*p((-b+y)/4) = y^4 + P y^2 + Q y + R.
    """
    if p.degree != 4 or p.coeffs[-1] != 1.0:
        raise ValueError("expected a monic quartic")
    e, d, c, b, _ = p.coeffs
    P = -6.0 * b * b + 16.0 * c
    Q = 8.0 * b * b * b - 32.0 * c * b + 64.0 * d
    R = -3.0 * b * b * b * b + 16.0 * c * b * b - 64.0 * d * b + 256.0 * e
    return DepressedQuartic(P, Q, R)


def quintic_reduction_coeffs(p: RealPolynomial) -> ReducedQuintic:
    """Map a monic quintic w^5+Bw^4+Cw^3+Dw^2+Ew+F to the depressed x-form.

    The substitution is w = (-B + x)/5; identity:
    3125*p((-B+x)/5) = x^5 + c x^3 + d x^2 + e x + f.
    """
    if p.degree != 5 or p.coeffs[-1] != 1.0:
        raise ValueError("expected a monic quintic")
    F, E, D, C, B, _ = p.coeffs
    B2 = B * B
    B3 = B2 * B
    c = -10.0 * B2 + 25.0 * C
    d = 20.0 * B3 - 75.0 * C * B + 125.0 * D
    e = -15.0 * B2 * B2 + 75.0 * C * B2 - 250.0 * D * B + 625.0 * E
    f = (4.0 * B3 * B2 - 25.0 * C * B3 + 125.0 * D * B2
         - 625.0 * E * B + 3125.0 * F)
    return ReducedQuintic(c, d, e, f)


def residual(p: RealPolynomial, z: complex) -> float:
    """Relative residual |p(z)| / sum_i |a_i| * max(1,|z|)^i.

    Scale-invariant in p and bounded in z; the package-wide measure of
    "z is a root of p".
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteInput(f"non-finite evaluation point {z!r}")
    m = max(1.0, abs(z))
    scale = 0.0
    power = 1.0
    for c in p.coeffs:
        scale += abs(c) * power
        power *= m
    return abs(eval_horner(p, z)) / scale
