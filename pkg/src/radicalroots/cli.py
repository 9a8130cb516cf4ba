"""Command-line front end.

Subcommands: solve, verify, ensemble, census. Coefficients are given
constant-term-first ("0 -8 14 -7 1" is x^4 - 7x^3 + 14x^2 - 8x), either
inline via --coeffs or one polynomial per line via --input. All numeric
output is printed with 17 significant digits so values round-trip.

Exit codes: 0 success, 2 usage error (bad flags, malformed or non-finite
coefficients, solver/degree mismatch), 3 degenerate-input solver error
in solve or census.
"""

import argparse
import sys

from . import harness
from . import oracle as _oracle
from . import radical_solvers as _rs
from .errors import NonFiniteInput, SolverError
from .poly import RealPolynomial, normalize_monic, residual

_SOLVER_IDS = {
    "cardano": harness.CUBIC_CARDANO,
    "t1": harness.QUARTIC_T1,
    "ferrari": harness.QUARTIC_FERRARI,
    "t2": harness.QUINTIC_T2,
    "t3": harness.QUINTIC_T3,
}


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_poly(text: str) -> RealPolynomial:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("no coefficients given")
    try:
        coeffs = tuple(float(tok) for tok in parts)
    except ValueError:
        raise ValueError(f"malformed coefficients: {text!r}")
    return RealPolynomial(coeffs)


def _load_polys(args) -> list:
    if args.coeffs is not None:
        return [_parse_poly(args.coeffs)]
    polys = []
    with open(args.input) as fh:
        for line in fh:
            line = line.strip()
            if line:
                polys.append(_parse_poly(line))
    if not polys:
        raise ValueError(f"no polynomials in {args.input}")
    return polys


def _check_degree(args, p: RealPolynomial) -> None:
    if args.degree is not None and args.degree != p.degree:
        raise ValueError(f"--degree {args.degree} but polynomial has degree {p.degree}")


def _print_roots(p: RealPolynomial, roots) -> None:
    for z in roots:
        print(f"root {_fmt(z.real)} {_fmt(z.imag)} residual {_fmt(residual(p, z))}")


def _solve_one(p: RealPolynomial, solver: str, tol: float) -> None:
    print(f"solver {solver}")
    print(f"polynomial {p.to_text()}")
    if solver == "oracle":
        res = _oracle.roots_iterative(p, tol=tol)
        print(f"converged {'true' if res.converged else 'false'} iterations {res.iterations}")
        _print_roots(p, res.roots)
        return
    degree = harness.SOLVER_DEGREE[_SOLVER_IDS[solver]]
    if p.degree != degree:
        raise ValueError(f"solver {solver} needs degree {degree}, got {p.degree}")
    if solver == "cardano":
        monic = normalize_monic(p)
        roots = _rs.solve_cubic_general(monic.coeffs[2], monic.coeffs[1], monic.coeffs[0])
        _print_roots(p, roots)
    elif solver == "t1":
        sol = _rs.solve_quartic_theorem1(p)
        print(f"case_tag {sol.case_tag}")
        _print_roots(p, sol.roots)
    elif solver == "ferrari":
        _print_roots(p, _oracle.ferrari_quartic(p))
    else:
        trace = _rs.solve_quintic_theorem2(p) if solver == "t2" else _rs.solve_quintic_theorem3(p)
        print(f"pipeline {trace.theorem_id} candidates {len(trace.candidate_roots)}")
        if trace.group2_error:
            print(f"group2_error {trace.group2_error}")
        _print_roots(p, trace.claimed_roots)


def _cmd_solve(args) -> int:
    for p in _load_polys(args):
        _check_degree(args, p)
        _solve_one(p, args.solver, args.tol)
    return 0


def _cmd_verify(args) -> int:
    if args.solver == "oracle":
        raise ValueError("verify compares a closed-form solver against the oracle; "
                         "pick one of cardano, t1, ferrari, t2, t3")
    sid = _SOLVER_IDS[args.solver]
    out_lines = []
    for p in _load_polys(args):
        _check_degree(args, p)
        if p.degree != harness.SOLVER_DEGREE[sid]:
            raise ValueError(f"solver {args.solver} needs degree "
                             f"{harness.SOLVER_DEGREE[sid]}, got {p.degree}")
        rec = harness.verify_solver(p, sid, tol=args.tol, match_tol=args.match_tol)
        out_lines.append(harness.render_record(rec))
    text = "\n".join(out_lines) + "\n"
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    print(text, end="")
    return 0


def _cmd_ensemble(args) -> int:
    names = [s.strip() for s in args.solver.split(",") if s.strip()]
    if not names:
        raise ValueError("no solver given")
    for name in names:
        if name not in _SOLVER_IDS:
            raise ValueError(f"unknown solver {name!r}")
    config = harness.EnsembleConfig(
        seed=args.seed, count=args.count, degree=args.degree,
        solver_ids=tuple(_SOLVER_IDS[name] for name in names),
        monic=args.monic, tol=args.tol, match_tol=args.match_tol,
        workers=args.workers,
    )
    report = harness.run_ensemble(config)
    if args.out:
        harness.write_report(report, args.out)
    print(harness.render_aggregate(report))
    return 0


def _cmd_census(args) -> int:
    if args.solver not in ("t2", "t3"):
        raise ValueError("census applies to the quintic pipelines: --solver t2 or t3")
    for p in _load_polys(args):
        _check_degree(args, p)
        if p.degree != 5:
            raise ValueError(f"census needs degree 5, got {p.degree}")
        trace = _rs.solve_quintic_theorem2(p) if args.solver == "t2" else _rs.solve_quintic_theorem3(p)
        census = harness.candidate_census_theorem2(trace, p, args.tol)
        print(harness.render_value({
            "pipeline": trace.theorem_id,
            "polynomial": list(p.coeffs),
            "candidates": list(trace.candidate_roots),
            "census": census,
        }))
    return 0


def _add_source_flags(sub, require_solver: bool, solver_choices) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--coeffs", help="coefficients, constant term first, "
                       "space or comma separated")
    group.add_argument("--input", help="file with one polynomial per line, "
                       "constant term first, whitespace separated")
    sub.add_argument("--solver", required=require_solver, choices=solver_choices,
                     help="which solver to run")
    sub.add_argument("--degree", type=int, default=None,
                     help="expected degree (checked against the coefficients)")
    sub.add_argument("--tol", type=float, default=1e-8,
                     help="relative residual tolerance (default 1e-8)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radicalroots",
        description="Closed-form cubic/quartic/quintic solvers with an "
                    "independent iterative oracle and a verification harness. "
                    "Coefficients are constant-term-first.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    all_solvers = ["cardano", "t1", "ferrari", "t2", "t3", "oracle"]

    p_solve = sub.add_parser("solve", help="solve one polynomial, print roots "
                             "with residuals")
    _add_source_flags(p_solve, True, all_solvers)
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="run one solver against the "
                              "oracle, print the case record")
    _add_source_flags(p_verify, True, all_solvers)
    p_verify.add_argument("--match-tol", type=float, default=1e-6,
                          help="root matching tolerance (default 1e-6)")
    p_verify.add_argument("--out", default=None, help="also write the record here")
    p_verify.set_defaults(func=_cmd_verify)

    p_ens = sub.add_parser("ensemble", help="verify a seeded random ensemble, "
                           "print the aggregate block")
    p_ens.add_argument("--seed", type=int, required=True, help="generator seed (u64)")
    p_ens.add_argument("--count", type=int, required=True, help="ensemble size")
    p_ens.add_argument("--degree", type=int, required=True, help="polynomial degree")
    p_ens.add_argument("--solver", required=True,
                       help="solver name or comma-separated list (cardano, t1, "
                            "ferrari, t2, t3)")
    p_ens.add_argument("--monic", action="store_true", help="generate monic polynomials")
    p_ens.add_argument("--tol", type=float, default=1e-8,
                       help="relative residual tolerance (default 1e-8)")
    p_ens.add_argument("--match-tol", type=float, default=1e-6,
                       help="root matching tolerance (default 1e-6)")
    p_ens.add_argument("--workers", type=int, default=0,
                       help="parallel worker processes (0 = sequential; the "
                            "report bytes do not depend on this)")
    p_ens.add_argument("--out", default=None, help="write the full report here")
    p_ens.set_defaults(func=_cmd_ensemble)

    p_census = sub.add_parser("census", help="candidate census for a quintic "
                              "pipeline on one polynomial")
    _add_source_flags(p_census, True, ["t2", "t3"])
    p_census.set_defaults(func=_cmd_census)

    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NonFiniteInput as exc:
        # non-finite coefficients are an input problem, not a solver domain gap
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"error {exc.code}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
