"""Complex square and cube roots with pinned branch conventions.

Every radical taken anywhere in the package goes through these two
functions, so the branch choice is made exactly once:

* csqrt: principal branch, Re(w) >= 0; on the imaginary axis the
  result is normalized to Im(w) >= 0 (and -0.0 real parts are cleaned
  up so identical inputs give bit-identical outputs).
* ccbrt: sign-preserving real cube root for real inputs, otherwise
  |z|^(1/3) * exp(i*arg(z)/3) with arg in (-pi, pi].

Both are pure functions of their argument.
"""

import cmath
import math

from .errors import NonFiniteInput


def _require_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteInput(f"non-finite radicand {z!r}")
    return z


def csqrt(z: complex) -> complex:
    """Principal square root: Re >= 0, and Im >= 0 when Re == 0."""
    w = cmath.sqrt(_require_finite(z))
    if w.real == 0.0:
        # covers both the -i side of the branch cut and a -0.0 real part
        w = complex(0.0, abs(w.imag))
    return w


def _real_cbrt(r: float) -> float:
    """Cube root of a positive float, Newton-polished to sub-ulp accuracy."""
    y = r ** (1.0 / 3.0)
    # pow leaves a few ulps of drift that triples when cubed; one Newton
    # step on y^3 = r removes it
    if math.isfinite(y) and y > 0.0:
        y -= (y * y * y - r) / (3.0 * y * y)
    return y


def ccbrt(z: complex) -> complex:
    """Cube root: real and sign-preserving on the real axis, principal-argument otherwise."""
    z = _require_finite(z)
    if z.imag == 0.0:
        x = z.real
        if x == 0.0:
            return complex(0.0, 0.0)
        return complex(math.copysign(_real_cbrt(abs(x)), x), 0.0)
    r = _real_cbrt(abs(z))
    # atan2 rather than cmath.phase: the latter can raise a spurious
    # range error when the component magnitudes differ by ~600 orders
    theta = math.atan2(z.imag, z.real) / 3.0
    return complex(r * math.cos(theta), r * math.sin(theta))
