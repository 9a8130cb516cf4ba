"""Closed-form solvers: quadratic, cubic, quartic, and the two quintic pipelines.

All arithmetic is complex end to end; branch choices live in `numerics`.
The quintic pipelines (solver ids t2 and t3) evaluate the claimed radical
formulas faithfully and report what they produce. Nothing here asserts
that the quintic outputs satisfy the input equation; the harness measures
that.

Numerical-stability choices that are contracts, not incidentals:

* solve_quadratic anchors on the larger-magnitude root and derives the
  other as c/anchor, so the product of the returned pair equals c to a
  couple of ulps. The resolvent triple inherits its Vieta product
  identity from this.
* the cubic takes the cube root of the larger-magnitude Cardano branch
  and pairs the second radical through u*v = -c/3, which both fixes the
  casus irreducibilis and avoids cancellation when the two branch
  radicands differ wildly in size.
"""

import math
from dataclasses import dataclass

from .errors import (
    DegenerateReduction,
    DegenerateResolvent,
    FifthRootUndefined,
    Gamma3Zero,
    Y3Zero,
)
from .numerics import ccbrt, csqrt
from .poly import (
    DepressedQuartic,
    RealPolynomial,
    ReducedQuintic,
    depressed_quartic_coeffs,
    normalize_monic,
    quintic_reduction_coeffs,
)

# relative floor for "this divisor is numerically zero", applied to the
# divisor's own natural scale at each use
EPS_DEG = 1e-10

Q_NEG = "Q_NEG"
Q_POS = "Q_POS"
Q_ZERO = "Q_ZERO"


@dataclass(frozen=True)
class ResolventTriple:
    """The three resolvent-cubic roots feeding a depressed-quartic solve."""

    y01: complex
    y02: complex
    y03: complex

    def as_tuple(self):
        return (self.y01, self.y02, self.y03)


@dataclass(frozen=True)
class QuarticSolution:
    roots: tuple
    case_tag: str
    resolvent: ResolventTriple


@dataclass(frozen=True)
class QuinticTrace:
    """Everything a quintic pipeline computed, kept for verification.

    candidate_roots and claimed_roots are in the original variable;
    claimed_internal keeps the pipeline variable so the fifth-root
    product identity (claimed_internal[4] * prod(claimed_internal[:4])
    == f) can be checked exactly as constructed.
    """

    theorem_id: int
    monic_coeffs: tuple          # (b, c, d, e, f) of the monic quintic
    reduced: object              # ReducedQuintic for t2, None for t3
    shift: float                 # t2 maps pipeline x to roots via (-shift + x)/5
    quad_coeffs: tuple           # (q2, q1, q0) of the quadratic-in-square resolvent
    g3_candidates: tuple         # four values, closed under negation
    quartic_coeffs: tuple        # group-1 quartic coefficients (z^3, z^2, z, 1 ordering: c3==g3)
    alpha1: complex
    alpha_diag: tuple            # (alpha2, alpha3, alpha4) diagnostics for group 1
    z_roots: tuple               # group-1 quartic roots
    candidate_roots: tuple       # 8 candidates (4 if group 2 degenerate), original variable
    claimed_internal: tuple      # five claimed roots, pipeline variable
    claimed_roots: tuple         # five claimed roots, original variable
    group2_error: str            # "" when group 2 was computed


def solve_quadratic(b: complex, c: complex):
    """Roots of z^2 + b z + c, + branch first.

    The larger-magnitude root is kept from the discriminant formula and
    the other is recomputed as c/anchor, which preserves the product.
    """
    b = complex(b)
    c = complex(c)
    s = csqrt(b * b - 4.0 * c)
    r_plus = (-b + s) / 2.0
    r_minus = (-b - s) / 2.0
    if abs(r_plus) >= abs(r_minus):
        if r_plus != 0.0:
            r_minus = c / r_plus
    else:
        if r_minus != 0.0:
            r_plus = c / r_minus
    return r_plus, r_minus


def solve_cubic_depressed(c: complex, d: complex):
    """Roots of w^3 + c w + d; first root from the paired radicals, rest by deflation."""
    c = complex(c)
    d = complex(d)
    half_d = d / 2.0
    third_c = c / 3.0
    disc = half_d * half_d + third_c * third_c * third_c
    sq = csqrt(disc)
    t_plus = -half_d + sq
    t_minus = -half_d - sq
    # cube-root the branch that did not cancel
    t_big = t_plus if abs(t_plus) >= abs(t_minus) else t_minus
    u = ccbrt(t_big)
    if abs(u) > 0.0:
        v = -third_c / u
    else:
        v = complex(0.0)
    w1 = u + v
    # deflate: w^3 + c w + d = (w - w1)(w^2 + w1 w + (w1^2 + c)) + p(w1)
    w2, w3 = solve_quadratic(w1, w1 * w1 + c)
    return w1, w2, w3


def solve_cubic_general(b: complex, c: complex, d: complex):
    """Roots of y^3 + b y^2 + c y + d via y = (-b + w)/3."""
    b = complex(b)
    C = 9.0 * c - 3.0 * b * b
    D = 27.0 * d + 2.0 * b * b * b - 9.0 * c * b
    return tuple((-b + w) / 3.0 for w in solve_cubic_depressed(C, D))


def _resolvent_scale(P: complex, Q: complex, R: complex) -> float:
    """Magnitude bound for the resolvent cubic's roots."""
    return max(
        1.0,
        abs(P) / 2.0,
        abs(P * P - 4.0 * R) ** 0.5 / 4.0,
        (abs(Q) * abs(Q) / 64.0) ** (1.0 / 3.0),
    )


def _resolvent_triple(P: complex, Q: complex, R: complex) -> ResolventTriple:
    """Solve y^3 + (P/2)y^2 + ((P^2-4R)/16)y - Q^2/64 = 0 with a nonzero first root.

    The first root comes from the shifted Cardano formula; when it is
    numerically zero the largest-magnitude cubic root replaces it (the
    two remaining roots divide by it). All three tiny means the quartic
    is y^4 = -R and the caller handles that directly.
    """
    b1 = P / 2.0
    c1 = (P * P - 4.0 * R) / 16.0
    d1 = -Q * Q / 64.0
    cubic_roots = solve_cubic_general(b1, c1, d1)
    eps = EPS_DEG * _resolvent_scale(P, Q, R)
    y01 = cubic_roots[0]
    if abs(y01) <= eps:
        y01 = max(cubic_roots, key=abs)
        if abs(y01) <= eps:
            raise DegenerateResolvent(f"all resolvent roots below {eps!r}")
    y02, y03 = solve_quadratic(b1 + y01, (Q * Q / 64.0) / y01)
    return ResolventTriple(y01, y02, y03)


def _depressed_quartic_roots(P: complex, Q: complex, R: complex):
    """Roots of y^4 + P y^2 + Q y + R plus the resolvent triple used.

    Principal square roots of the triple are sign-corrected so that
    8*sqrt(y01)*sqrt(y02)*sqrt(y03) = -Q, then the four roots are the
    even-sign combinations of the three radicals.
    """
    try:
        triple = _resolvent_triple(P, Q, R)
    except DegenerateResolvent:
        # P, Q, R all numerically zero except R's contribution: y^4 = -R
        w = csqrt(csqrt(-R))
        roots = (w, -w, complex(-w.imag, w.real), complex(w.imag, -w.real))
        b1 = P / 2.0
        c1 = (P * P - 4.0 * R) / 16.0
        d1 = -Q * Q / 64.0
        t = solve_cubic_general(b1, c1, d1)
        return roots, ResolventTriple(t[0], t[1], t[2])
    r0 = csqrt(triple.y01)
    r1 = csqrt(triple.y02)
    r2 = csqrt(triple.y03)
    prod8 = 8.0 * r0 * r1 * r2
    if abs(prod8 + Q) > abs(-prod8 + Q):
        r2 = -r2
    roots = (
        r0 + r1 + r2,
        r0 - r1 - r2,
        -r0 + r1 - r2,
        -r0 - r1 + r2,
    )
    return roots, triple


def resolvent_y01(dq: DepressedQuartic) -> ResolventTriple:
    """Resolvent triple for a real depressed quartic (first root nonzero)."""
    return _resolvent_triple(complex(dq.P), complex(dq.Q), complex(dq.R))


def _case_tag(P: float, Q: float, R: float) -> str:
    s = max(1.0, abs(P) ** 0.5, abs(Q) ** (1.0 / 3.0), abs(R) ** 0.25)
    if abs(Q) <= EPS_DEG * s * s * s:
        return Q_ZERO
    return Q_NEG if Q < 0.0 else Q_POS


def solve_quartic_depressed(dq: DepressedQuartic):
    """Four roots of y^4 + P y^2 + Q y + R, the sign-of-Q case tag, and the triple."""
    roots, triple = _depressed_quartic_roots(complex(dq.P), complex(dq.Q), complex(dq.R))
    return roots, _case_tag(dq.P, dq.Q, dq.R), triple


def solve_quartic_theorem1(p: RealPolynomial) -> QuarticSolution:
    """Quartic solver: depress, solve via the resolvent radicals, shift back."""
    if p.degree != 4:
        raise ValueError(f"expected degree 4, got {p.degree}")
    monic = normalize_monic(p)
    b = monic.coeffs[3]
    dq = depressed_quartic_coeffs(monic)
    y_roots, tag, triple = solve_quartic_depressed(dq)
    roots = tuple((-b + y) / 4.0 for y in y_roots)
    return QuarticSolution(roots, tag, triple)


def _monic_quartic_roots(c3: complex, c2: complex, c1: complex, c0: complex):
    """Roots of z^4 + c3 z^3 + c2 z^2 + c1 z + c0 with complex coefficients.

    Same depress/resolve/assemble path as the real quartic solver; the
    quintic pipelines feed it complex coefficients.
    """
    b2 = c3 * c3
    P = -6.0 * b2 + 16.0 * c2
    Q = 8.0 * b2 * c3 - 32.0 * c2 * c3 + 64.0 * c1
    R = -3.0 * b2 * b2 + 16.0 * c2 * b2 - 64.0 * c1 * c3 + 256.0 * c0
    y_roots, _ = _depressed_quartic_roots(P, Q, R)
    return tuple((-c3 + y) / 4.0 for y in y_roots)


# ---------------------------------------------------------------------------
# quintic pipelines


def _quintic_scale(c: float, d: float, e: float, f: float, b: float = 0.0) -> float:
    """Root-magnitude bound for x^5 + b x^4 + c x^3 + d x^2 + e x + f."""
    return max(
        1.0,
        abs(b),
        abs(c) ** 0.5,
        abs(d) ** (1.0 / 3.0),
        abs(e) ** 0.25,
        abs(f) ** 0.2,
    )


def _lambda_coeffs(rq: ReducedQuintic):
    """Quadratic-in-square coefficients for the t2 coupling value."""
    E = rq.e - rq.c * rq.c / 4.0
    K = 16.0 * rq.d
    l2 = 1024.0 * E / K
    l1 = 512.0 * rq.c - 40.0 * K * K / E
    l0 = -128.0 * (K * K / (E * E)) * (rq.f - rq.c * rq.d / 2.0)
    return l2, l1, l0


def gamma3_candidates(rq: ReducedQuintic):
    """Four coupling candidates (g1, g2, -g1, -g2) for the t2 pipeline.

    Each satisfies l2*g^4 + l1*g^2 + l0 = 0; the quadratic in g^2 is
    solved first and the principal square roots taken.
    """
    m = _quintic_scale(rq.c, rq.d, rq.e, rq.f)
    if abs(rq.d) <= EPS_DEG * m * m * m:
        raise DegenerateReduction("d_zero", f"|d|={abs(rq.d)!r}")
    E = rq.e - rq.c * rq.c / 4.0
    if abs(E) <= EPS_DEG * m * m * m * m:
        raise DegenerateReduction("e_c2_zero", f"|e - c^2/4|={abs(E)!r}")
    l2, l1, l0 = _lambda_coeffs(rq)
    t1, t2 = solve_quadratic(l1 / l2, l0 / l2)
    g1 = csqrt(t1)
    g2 = csqrt(t2)
    return g1, g2, -g1, -g2


def _gamma3_eps(rq: ReducedQuintic) -> float:
    # the coupling value scales like the square root of the root bound
    return EPS_DEG * _quintic_scale(rq.c, rq.d, rq.e, rq.f) ** 0.5


def gamma_coeffs(gamma3: complex, rq: ReducedQuintic):
    """Coefficients (G2, G1, G0) of the group quartic z^4 + g z^3 + G2 z^2 + G1 z + G0."""
    if abs(gamma3) <= _gamma3_eps(rq):
        raise Gamma3Zero(f"|gamma3|={abs(gamma3)!r}")
    g = complex(gamma3)
    g2 = g * g
    g3 = g2 * g
    g4 = g2 * g2
    E = rq.e - rq.c * rq.c / 4.0
    K2 = (16.0 * rq.d) * (16.0 * rq.d)
    G2 = K2 / (2.0 * g2 * E)
    G1 = -g3 / 4.0 + 3.0 * K2 / (16.0 * E * g)
    G0 = (-g4 / 16.0 - K2 / (32.0 * E)
          + (rq.f - rq.c * rq.d / 2.0) * K2 / (2.0 * g2 * E * E)
          + K2 * K2 / (16.0 * g4 * E * E))
    return G2, G1, G0


def alpha1_theorem2(gamma3: complex, rq: ReducedQuintic) -> complex:
    """Root-assembly constant for the t2 pipeline: (g^4 - K^2/E) / (4 g^2)."""
    if abs(gamma3) <= _gamma3_eps(rq):
        raise Gamma3Zero(f"|gamma3|={abs(gamma3)!r}")
    g = complex(gamma3)
    g2 = g * g
    E = rq.e - rq.c * rq.c / 4.0
    K2 = (16.0 * rq.d) * (16.0 * rq.d)
    return (g2 * g2 - K2 / E) / (4.0 * g2)


def _alpha_diag_t2(g: complex, a1: complex, rq: ReducedQuintic):
    """Diagnostic (alpha2, alpha3, alpha4) for a t2 group; not used by the roots."""
    E = rq.e - rq.c * rq.c / 4.0
    a3 = g * E / (-16.0 * rq.d)
    a4 = (-32.0 * g * g * a1 - 8.0 * g * g * E / (a3 * a3)
          + 64.0 * g * rq.d / a3) / 2048.0
    a2 = a3 * g - rq.c / 2.0 - 6.0 * a4
    return a2, a3, a4


def _group_candidates_t2(g: complex, rq: ReducedQuintic):
    """Quartic roots and pipeline-variable candidates for one t2 coupling value."""
    G2, G1, G0 = gamma_coeffs(g, rq)
    a1 = alpha1_theorem2(g, rq)
    z_roots = _monic_quartic_roots(g, G2, G1, G0)
    cands = tuple((z * z - a1) / 2.0 for z in z_roots)
    return z_roots, cands, a1, (G2, G1, G0)


def fifth_claim(first_four, f: complex, scale: float) -> complex:
    """The fifth claimed value: f over the product of the first four.

    scale is the coefficient-magnitude scale used by the degeneracy guard.
    """
    prod = first_four[0] * first_four[1] * first_four[2] * first_four[3]
    if abs(prod) <= EPS_DEG * scale ** 4:
        raise FifthRootUndefined(f"|product of first four|={abs(prod)!r}")
    return f / prod


def solve_quintic_theorem2(p: RealPolynomial) -> QuinticTrace:
    """t2 pipeline: depress the quintic, couple to a quartic, assemble five claims.

    The first four claimed roots come from the first coupling group; the
    fifth is f divided by their product, exactly as the formulas state.
    The second group is computed for diagnostics when possible.
    """
    if p.degree != 5:
        raise ValueError(f"expected degree 5, got {p.degree}")
    monic = normalize_monic(p)
    bb = monic.coeffs[4]
    rq = quintic_reduction_coeffs(monic)
    gs = gamma3_candidates(rq)
    l2, l1, l0 = _lambda_coeffs(rq)

    z_roots, cands1, a1, qc = _group_candidates_t2(gs[0], rq)
    group2_error = ""
    cands2 = ()
    try:
        _, cands2, _, _ = _group_candidates_t2(gs[1], rq)
    except Gamma3Zero as exc:
        group2_error = exc.code

    m = _quintic_scale(rq.c, rq.d, rq.e, rq.f)
    s5 = fifth_claim(cands1, rq.f, m)
    claimed_internal = cands1 + (s5,)

    all_cands = cands1 + cands2
    return QuinticTrace(
        theorem_id=2,
        monic_coeffs=(monic.coeffs[4], monic.coeffs[3], monic.coeffs[2],
                      monic.coeffs[1], monic.coeffs[0]),
        reduced=rq,
        shift=bb,
        quad_coeffs=(l2, l1, l0),
        g3_candidates=gs,
        quartic_coeffs=qc,
        alpha1=a1,
        alpha_diag=_alpha_diag_t2(gs[0], a1, rq),
        z_roots=z_roots,
        candidate_roots=tuple((-bb + x) / 5.0 for x in all_cands),
        claimed_internal=claimed_internal,
        claimed_roots=tuple((-bb + x) / 5.0 for x in claimed_internal),
        group2_error=group2_error,
    )


def _beta_coeffs(b: float, c: float, d: float, e: float, f: float):
    """Quadratic-in-square coefficients for the t3 coupling value."""
    E = e - c * c / 4.0
    K = 16.0 * (d - b * c)
    b2 = 1024.0 * E / K
    b1 = 512.0 * c - 40.0 * K * K / E + 1024.0 * b * b
    b0 = (-128.0 * (K * K / (E * E)) * (f - c * d / 2.0 + b * c * c / 4.0)
          + 128.0 * b * K * K / E)
    return b2, b1, b0


def y3_candidates(b: float, c: float, d: float, e: float, f: float):
    """Four coupling candidates for the t3 pipeline, first pair from the + branch."""
    m = _quintic_scale(c, d, e, f, b)
    if abs(d - b * c) <= EPS_DEG * m * m * m:
        raise DegenerateReduction("d_bc_zero", f"|d - b*c|={abs(d - b * c)!r}")
    E = e - c * c / 4.0
    if abs(E) <= EPS_DEG * m * m * m * m:
        raise DegenerateReduction("e_c2_zero", f"|e - c^2/4|={abs(E)!r}")
    b2, b1, b0 = _beta_coeffs(b, c, d, e, f)
    t1, t2 = solve_quadratic(b1 / b2, b0 / b2)
    y1 = csqrt(t1)
    y2 = csqrt(t2)
    return y1, y2, -y1, -y2


def _y_coeffs(y3: complex, b: float, c: float, d: float, e: float, f: float):
    """Coefficients (Y2, Y1, Y0) of the t3 group quartic."""
    g = complex(y3)
    g2 = g * g
    g3 = g2 * g
    g4 = g2 * g2
    E = e - c * c / 4.0
    K = 16.0 * (d - b * c)
    K2 = K * K
    Y2 = K2 / (2.0 * g2 * E) + 4.0 * b
    Y1 = -g3 / 4.0 + 3.0 * K2 / (16.0 * E * g) + 4.0 * b * g
    Y0 = (-g4 / 16.0 + b * g2 - K2 / (32.0 * E)
          + (f - c * d / 2.0 + b * c * c / 4.0) * K2 / (2.0 * g2 * E * E)
          + b * K2 / (2.0 * g2 * E)
          + K2 * K2 / (16.0 * g4 * E * E))
    return Y2, Y1, Y0


def _alpha1_theorem3(y3: complex, b: float, c: float, d: float, e: float) -> complex:
    g = complex(y3)
    g2 = g * g
    E = e - c * c / 4.0
    K = 16.0 * (d - b * c)
    return (g2 * g2 - 8.0 * b * g2 - K * K / E) / (4.0 * g2)


def _alpha_diag_t3(g: complex, a1: complex, b: float, c: float, d: float, e: float):
    E = e - c * c / 4.0
    a3 = g * E / (-16.0 * (d - b * c))
    a4 = (-32.0 * g * g * a1 + 64.0 * b * g * g
          - 8.0 * g * g * E / (a3 * a3)
          + 64.0 * g * (d - b * c) / a3) / 2048.0
    a2 = a3 * g - c / 2.0 - 6.0 * a4
    return a2, a3, a4


def _group_candidates_t3(g: complex, b, c, d, e, f, eps: float):
    if abs(g) <= eps:
        raise Y3Zero(f"|y3|={abs(g)!r}")
    Y2, Y1, Y0 = _y_coeffs(g, b, c, d, e, f)
    a1 = _alpha1_theorem3(g, b, c, d, e)
    z_roots = _monic_quartic_roots(g, Y2, Y1, Y0)
    cands = tuple((z * z - a1) / 2.0 for z in z_roots)
    return z_roots, cands, a1, (Y2, Y1, Y0)


def solve_quintic_theorem3(p: RealPolynomial) -> QuinticTrace:
    """t3 pipeline: couple the general quintic to a quartic without depressing it."""
    if p.degree != 5:
        raise ValueError(f"expected degree 5, got {p.degree}")
    monic = normalize_monic(p)
    f, e, d, c, b, _ = monic.coeffs
    ys = y3_candidates(b, c, d, e, f)
    b2, b1, b0 = _beta_coeffs(b, c, d, e, f)
    m = _quintic_scale(c, d, e, f, b)
    eps_y = EPS_DEG * m ** 0.5

    z_roots, cands1, a1, qc = _group_candidates_t3(ys[0], b, c, d, e, f, eps_y)
    group2_error = ""
    cands2 = ()
    try:
        _, cands2, _, _ = _group_candidates_t3(ys[1], b, c, d, e, f, eps_y)
    except Y3Zero as exc:
        group2_error = exc.code

    s5 = fifth_claim(cands1, f, m)
    claimed = cands1 + (s5,)

    return QuinticTrace(
        theorem_id=3,
        monic_coeffs=(b, c, d, e, f),
        reduced=None,
        shift=0.0,
        quad_coeffs=(b2, b1, b0),
        g3_candidates=ys,
        quartic_coeffs=qc,
        alpha1=a1,
        alpha_diag=_alpha_diag_t3(ys[0], a1, b, c, d, e),
        z_roots=z_roots,
        candidate_roots=cands1 + cands2,
        claimed_internal=claimed,
        claimed_roots=claimed,
        group2_error=group2_error,
    )
