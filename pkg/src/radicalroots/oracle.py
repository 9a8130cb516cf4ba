"""Independent numeric ground truth: simultaneous iteration, a classical
quartic reference, and Newton polishing.

This module never imports `radical_solvers`; the point is an independent
code path. The quartic reference therefore carries its own small stable
quadratic helper and solves its resolvent cubic with the iterative
finder rather than any radical formula.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateLeading
from .numerics import csqrt
from .poly import RealPolynomial, eval_with_derivative, normalize_monic, residual

# angular offset (inverse golden ratio, radians) breaking start-circle symmetry
_ANGLE_OFFSET = 0.6180339887498949


@dataclass(frozen=True)
class OracleResult:
    roots: tuple
    iterations: int
    converged: bool
    max_residual: float


def _eval_monic(coeffs, z):
    """(value, derivative) of the constant-first coefficient list at z."""
    acc = complex(0.0)
    dacc = complex(0.0)
    for c in reversed(coeffs):
        dacc = dacc * z + acc
        acc = acc * z + c
    return acc, dacc


def roots_iterative(p: RealPolynomial, max_iter: int = 500, tol: float = 1e-12) -> OracleResult:
    """All complex roots by simultaneous (Aberth-style) iteration.

    Starts on a circle of radius 1 + max|a_i/a_n| with a fixed irrational
    angular offset. Converged means the last sweep moved every point less
    than tol and the worst relative residual is at most tol; when the
    sweep budget runs out the result is still returned with
    converged=False.
    """
    n = p.degree
    an = p.coeffs[-1]
    coeffs = [c / an for c in p.coeffs]
    if n == 1:
        root = complex(-coeffs[0])
        return OracleResult((root,), 0, True, residual(p, root))

    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    z = [
        radius * cmath.exp(1j * (2.0 * math.pi * k / n + _ANGLE_OFFSET))
        for k in range(n)
    ]
    iterations = 0
    moved_ok = False
    for sweep in range(max_iter):
        iterations = sweep + 1
        max_move = 0.0
        for k in range(n):
            zk = z[k]
            pv, dv = _eval_monic(coeffs, zk)
            if pv == 0.0:
                continue
            if dv == 0.0:
                # sitting on a critical point: nudge deterministically
                z[k] = zk + (1e-6 + 1e-6j) * (1.0 + abs(zk))
                max_move = max(max_move, abs(z[k] - zk))
                continue
            w = pv / dv
            s = complex(0.0)
            for j in range(n):
                if j == k:
                    continue
                diff = zk - z[j]
                if diff == 0.0:
                    diff = complex(1e-12 * (1.0 + abs(zk)), 0.0)
                s += 1.0 / diff
            denom = 1.0 - w * s
            step = w if denom == 0.0 else w / denom
            z[k] = zk - step
            move = abs(step)
            if move > max_move:
                max_move = move
        if max_move < tol:
            moved_ok = True
            break
    roots = tuple(z)
    max_res = max(residual(p, r) for r in roots)
    return OracleResult(roots, iterations, moved_ok and max_res <= tol, max_res)


def _quad(b: complex, c: complex):
    # local stable quadratic for z^2 + b z + c; independent of radical_solvers
    s = csqrt(b * b - 4.0 * c)
    r1 = (-b + s) / 2.0
    r2 = (-b - s) / 2.0
    if abs(r1) >= abs(r2):
        if r1 != 0.0:
            r2 = c / r1
    else:
        if r2 != 0.0:
            r1 = c / r2
    return r1, r2


def ferrari_quartic(p: RealPolynomial):
    """Classical quartic reference: depress, split via a resolvent found
    iteratively, solve two quadratics, polish once.
    """
    if p.degree != 4:
        raise ValueError(f"expected degree 4, got {p.degree}")
    monic = normalize_monic(p)
    e, d, c, b, _ = monic.coeffs
    # x = y - b/4 depresses to y^4 + py^2 + qy + r
    pp = c - 3.0 * b * b / 8.0
    qq = d - b * c / 2.0 + b * b * b / 8.0
    rr = e - b * d / 4.0 + b * b * c / 16.0 - 3.0 * b ** 4 / 256.0

    scale = max(1.0, abs(pp) ** 0.5, abs(qq) ** (1.0 / 3.0), abs(rr) ** 0.25)
    if abs(qq) <= 1e-14 * scale ** 3:
        # biquadratic: y^2 solves u^2 + p u + r
        u1, u2 = _quad(complex(pp), complex(rr))
        s1 = csqrt(u1)
        s2 = csqrt(u2)
        ys = (s1, -s1, s2, -s2)
    else:
        # (y^2 + p/2 + m)^2 = 2m y^2 - q y + (m^2 + pm + p^2/4 - r)
        # requires 8m^3 + 8pm^2 + (2p^2 - 8r)m - q^2 = 0
        resolvent = RealPolynomial((-qq * qq, 2.0 * pp * pp - 8.0 * rr, 8.0 * pp, 8.0))
        res = roots_iterative(resolvent, max_iter=200, tol=1e-13)
        # real cubic: take the most-real root, largest magnitude on ties
        m_root = min(res.roots, key=lambda w: (abs(w.imag), -abs(w)))
        m = m_root.real
        s = csqrt(complex(2.0 * m))
        shift = pp / 2.0 + m
        ys = _quad(-s, shift + qq / (2.0 * s)) + _quad(s, shift - qq / (2.0 * s))

    roots = tuple(y - b / 4.0 for y in ys)
    return tuple(polish_root(p, z, 1) for z in roots)


def polish_root(p: RealPolynomial, z: complex, steps: int = 1) -> complex:
    """Up to `steps` Newton updates; stops (value unchanged) near critical points."""
    z = complex(z)
    for _ in range(steps):
        pv, dv = eval_with_derivative(p, z)
        m = max(1.0, abs(z))
        dscale = 0.0
        power = 1.0
        for i, c in enumerate(p.coeffs):
            if i >= 1:
                dscale += i * abs(c) * power
                power *= m
        if abs(dv) <= 1e-10 * max(dscale, 1e-300):
            return z
        z = z - pv / dv
    return z
