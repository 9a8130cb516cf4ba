"""Verification engine: oracle matching, per-case records, seeded ensembles,
and byte-deterministic reports.

A CaseRecord never adjudicates a formula; it stores what the solver
claimed, what the oracle found, and the measured residuals. "passed"
is defined purely by the configured tolerances. Reports are emitted in
a fixed field order with every float printed to 17 significant digits,
so identical configs produce identical bytes, sequential or parallel.
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import oracle as _oracle
from . import radical_solvers as _rs
from .errors import SolverError
from .poly import RealPolynomial, normalize_monic, residual

CUBIC_CARDANO = "CUBIC_CARDANO"
QUARTIC_T1 = "QUARTIC_T1"
QUARTIC_FERRARI = "QUARTIC_FERRARI"
QUINTIC_T2 = "QUINTIC_T2"
QUINTIC_T3 = "QUINTIC_T3"

SOLVER_DEGREE = {
    CUBIC_CARDANO: 3,
    QUARTIC_T1: 4,
    QUARTIC_FERRARI: 4,
    QUINTIC_T2: 5,
    QUINTIC_T3: 5,
}

GENERATOR_NAME = "splitmix64"

# oracle roots closer than this fraction of the root scale mark a case
# as ill-conditioned (near-multiple root); such cases get their own bucket
CLUSTER_REL = 1e-4


@dataclass(frozen=True)
class CaseRecord:
    seed_index: int
    solver_id: str
    polynomial: RealPolynomial
    case_tag: str
    error_code: str
    skipped_degenerate: bool
    ill_conditioned: bool
    claimed_roots: tuple
    polished_roots: tuple
    raw_residuals: tuple
    per_root_residuals: tuple
    candidate_roots: tuple
    census: object
    oracle_roots: tuple
    oracle_converged: bool
    match_distance: float
    passed: bool


@dataclass(frozen=True)
class EnsembleConfig:
    seed: int
    count: int
    degree: int
    solver_ids: tuple
    coeff_range: tuple = (-10.0, 10.0)
    monic: bool = False
    tol: float = 1e-8
    match_tol: float = 1e-6
    workers: int = 0

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if not self.solver_ids:
            raise ValueError("at least one solver id required")
        for s in self.solver_ids:
            if s not in SOLVER_DEGREE:
                raise ValueError(f"unknown solver id {s!r}")
            if SOLVER_DEGREE[s] != self.degree:
                raise ValueError(f"solver {s} does not apply to degree {self.degree}")
        lo, hi = self.coeff_range
        if not (hi > lo):
            raise ValueError("empty coefficient range")


@dataclass(frozen=True)
class EnsembleReport:
    config: EnsembleConfig
    records: tuple
    aggregate: dict


def match_roots(claimed, truth):
    """Best pairing over all permutations: minimal maximum pairwise distance.

    Returns (permutation, max_distance) where permutation[i] is the index
    of the truth root assigned to claimed[i].
    """
    n = len(claimed)
    if n != len(truth):
        raise ValueError(f"length mismatch: {n} vs {len(truth)}")
    best_perm = None
    best_cost = math.inf
    for perm in itertools.permutations(range(n)):
        cost = 0.0
        for i in range(n):
            dist = abs(claimed[i] - truth[perm[i]])
            if dist > cost:
                cost = dist
            if cost >= best_cost:
                break
        if cost < best_cost:
            best_cost = cost
            best_perm = perm
    return best_perm, best_cost


def _is_clustered(roots) -> bool:
    scale = max(1.0, max(abs(r) for r in roots))
    rs = list(roots)
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if abs(rs[i] - rs[j]) < CLUSTER_REL * scale:
                return True
    return False


def _distinct_count(values, ctol: float) -> int:
    reps = []
    for v in values:
        if all(abs(v - r) > ctol for r in reps):
            reps.append(v)
    return len(reps)


def candidate_census_theorem2(trace, p: RealPolynomial, tol: float):
    """Census of a quintic trace's candidate grid, measured against p.

    Counts how many of the (up to eight) candidates actually satisfy p
    at `tol`, how many distinct values the grid holds, and whether the
    second group merely duplicates the first. Works for either pipeline's
    trace; the second group is absent when its coupling value degenerated.
    """
    cands = trace.candidate_roots
    res = tuple(residual(p, z) for z in cands)
    scale = max(1.0, max(abs(z) for z in cands))
    ctol = 1e-6 * scale
    n_pass = sum(1 for r in res if r <= tol)
    n_distinct = _distinct_count(cands, ctol)
    group2_present = len(cands) == 8
    duplicates = None
    if group2_present:
        _, dist = match_roots(cands[:4], cands[4:])
        duplicates = dist <= ctol
    return {
        "n_candidates": len(cands),
        "candidate_residuals": res,
        "n_pass": n_pass,
        "n_distinct": n_distinct,
        "group2_present": group2_present,
        "group2_duplicates_group1": duplicates,
    }


def _run_solver(p: RealPolynomial, solver_id: str):
    """Returns (claimed_roots, case_tag, trace_or_None)."""
    if solver_id == CUBIC_CARDANO:
        monic = normalize_monic(p)
        roots = _rs.solve_cubic_general(monic.coeffs[2], monic.coeffs[1], monic.coeffs[0])
        return roots, "", None
    if solver_id == QUARTIC_T1:
        sol = _rs.solve_quartic_theorem1(p)
        return sol.roots, sol.case_tag, None
    if solver_id == QUARTIC_FERRARI:
        return _oracle.ferrari_quartic(p), "", None
    if solver_id == QUINTIC_T2:
        trace = _rs.solve_quintic_theorem2(p)
        return trace.claimed_roots, "", trace
    if solver_id == QUINTIC_T3:
        trace = _rs.solve_quintic_theorem3(p)
        return trace.claimed_roots, "", trace
    raise ValueError(f"unknown solver id {solver_id!r}")


def verify_solver(p: RealPolynomial, solver_id: str, tol: float = 1e-8,
                  match_tol: float = 1e-6, seed_index: int = -1) -> CaseRecord:
    """Run one solver against the oracle and fill a CaseRecord.

    Solver-domain errors become data (error_code, passed=False); they are
    flagged skipped_degenerate since they are documented preconditions.
    One Newton step is applied to every claimed root and the better of
    raw/polished is what residuals, matching, and passed are based on.
    """
    if SOLVER_DEGREE[solver_id] != p.degree:
        raise ValueError(f"solver {solver_id} does not apply to degree {p.degree}")

    error_code = ""
    claimed = ()
    case_tag = ""
    trace = None
    try:
        claimed, case_tag, trace = _run_solver(p, solver_id)
    except SolverError as exc:
        error_code = exc.code

    orc = _oracle.roots_iterative(p)
    ill = _is_clustered(orc.roots)

    if error_code:
        return CaseRecord(
            seed_index=seed_index, solver_id=solver_id, polynomial=p,
            case_tag=case_tag, error_code=error_code, skipped_degenerate=True,
            ill_conditioned=ill, claimed_roots=(), polished_roots=(),
            raw_residuals=(), per_root_residuals=(), candidate_roots=(),
            census=None, oracle_roots=orc.roots, oracle_converged=orc.converged,
            match_distance=math.inf, passed=False,
        )

    polished = tuple(_oracle.polish_root(p, z, 1) for z in claimed)
    raw_res = tuple(residual(p, z) for z in claimed)
    pol_res = tuple(residual(p, z) for z in polished)
    best = tuple(
        polished[i] if pol_res[i] < raw_res[i] else claimed[i]
        for i in range(len(claimed))
    )
    best_res = tuple(min(raw_res[i], pol_res[i]) for i in range(len(claimed)))

    _, dist = match_roots(best, orc.roots)
    scale = max(1.0, max(abs(r) for r in orc.roots))
    eff_match = match_tol * scale
    if ill:
        # near-multiple oracle roots limit locate-ability; widen, and report
        # the case in its own bucket either way
        eff_match = max(eff_match, 1e-3 * scale)
    passed = all(r <= tol for r in best_res) and dist <= eff_match

    census = None
    candidates = ()
    if trace is not None:
        candidates = trace.candidate_roots
        census = candidate_census_theorem2(trace, p, tol)

    return CaseRecord(
        seed_index=seed_index, solver_id=solver_id, polynomial=p,
        case_tag=case_tag, error_code="", skipped_degenerate=False,
        ill_conditioned=ill, claimed_roots=claimed, polished_roots=polished,
        raw_residuals=raw_res, per_root_residuals=best_res,
        candidate_roots=candidates, census=census, oracle_roots=orc.roots,
        oracle_converged=orc.converged, match_distance=dist, passed=passed,
    )


# ---------------------------------------------------------------------------
# deterministic generation (splitmix64 counter stream)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_SLOTS_PER_INDEX = 64


def _mix64(x: int) -> int:
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _unit(seed: int, counter: int) -> float:
    """Uniform in [0, 1) from (seed, counter); per-index, order-free."""
    x = _mix64((seed + _GOLDEN * (counter + 1)) & _MASK64)
    return (x >> 11) * (1.0 / (1 << 53))


def generate_polynomial(seed: int, index: int, degree: int,
                        coeff_range=(-10.0, 10.0), monic: bool = False) -> RealPolynomial:
    """The index-th ensemble polynomial; independent of generation order."""
    lo, hi = coeff_range
    base = index * _SLOTS_PER_INDEX
    coeffs = [lo + (hi - lo) * _unit(seed, base + k) for k in range(degree)]
    if monic:
        lead = 1.0
    else:
        k = degree
        while True:
            lead = lo + (hi - lo) * _unit(seed, base + k)
            if abs(lead) >= 0.5:
                break
            k += 1
            if k >= _SLOTS_PER_INDEX:
                raise ValueError("coefficient range cannot produce |leading| >= 0.5")
    return RealPolynomial(tuple(coeffs) + (lead,))


def _verify_index(args):
    config, index = args
    p = generate_polynomial(config.seed, index, config.degree,
                            config.coeff_range, config.monic)
    return tuple(
        verify_solver(p, sid, config.tol, config.match_tol, seed_index=index)
        for sid in config.solver_ids
    )


def run_ensemble(config: EnsembleConfig) -> EnsembleReport:
    """Verify `count` generated polynomials against every configured solver.

    Parallel execution (workers > 1) distributes indexes but the record
    stream and aggregates are identical to a sequential run: generation
    is per-index and aggregation folds records in index order.
    """
    tasks = [(config, i) for i in range(config.count)]
    if config.workers and config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(_verify_index, tasks,
                                   chunksize=max(1, config.count // (config.workers * 4))))
    else:
        chunks = [_verify_index(t) for t in tasks]
    records = tuple(rec for chunk in chunks for rec in chunk)
    return EnsembleReport(config, records, _aggregate(config, records))


def _residual_bucket(r: float) -> str:
    if r == 0.0:
        return "zero"
    b = math.floor(math.log10(r))
    b = max(-18, min(2, b))
    return f"1e{b}"


def _aggregate(config: EnsembleConfig, records) -> dict:
    by_solver = {}
    by_case_tag = {}
    residual_hist = {}
    distinct_hist = {}
    error_codes = {}
    failing = []
    for rec in records:
        s = by_solver.setdefault(rec.solver_id, {
            "n": 0, "passed": 0, "failed": 0,
            "skipped_degenerate": 0, "ill_conditioned": 0,
        })
        s["n"] += 1
        if rec.skipped_degenerate:
            s["skipped_degenerate"] += 1
            error_codes[rec.error_code] = error_codes.get(rec.error_code, 0) + 1
        elif rec.ill_conditioned:
            s["ill_conditioned"] += 1
        elif rec.passed:
            s["passed"] += 1
        else:
            s["failed"] += 1
            failing.append({"seed_index": rec.seed_index, "solver_id": rec.solver_id})
        if rec.case_tag:
            t = by_case_tag.setdefault(rec.solver_id, {}).setdefault(
                rec.case_tag, {"n": 0, "passed": 0})
            t["n"] += 1
            if rec.passed:
                t["passed"] += 1
        if rec.per_root_residuals:
            bucket = _residual_bucket(max(rec.per_root_residuals))
            residual_hist[bucket] = residual_hist.get(bucket, 0) + 1
        if rec.census is not None:
            d = distinct_hist.setdefault(rec.solver_id, {})
            key = str(rec.census["n_distinct"])
            d[key] = d.get(key, 0) + 1
    return {
        "total_records": len(records),
        "by_solver": {k: by_solver[k] for k in sorted(by_solver)},
        "by_case_tag": {
            k: {t: by_case_tag[k][t] for t in sorted(by_case_tag[k])}
            for k in sorted(by_case_tag)
        },
        "residual_hist": {k: residual_hist[k] for k in sorted(residual_hist)},
        "candidate_distinct_hist": {
            k: {t: distinct_hist[k][t] for t in sorted(distinct_hist[k], key=int)}
            for k in sorted(distinct_hist)
        },
        "error_codes": {k: error_codes[k] for k in sorted(error_codes)},
        "failing": failing,
    }


# ---------------------------------------------------------------------------
# canonical rendering (fixed field order, 17 significant digits)


def _fmt_float(x: float) -> str:
    if x != x or x in (math.inf, -math.inf):
        return "null"
    return format(float(x), ".17g")


def _canon(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return f"[{_fmt_float(obj.real)}, {_fmt_float(obj.imag)}]"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_canon(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{_canon(str(k))}: {_canon(v)}" for k, v in obj.items()) + "}"
    raise TypeError(f"cannot render {type(obj).__name__}")


def record_to_object(rec: CaseRecord) -> dict:
    return {
        "seed_index": rec.seed_index,
        "solver_id": rec.solver_id,
        "polynomial": list(rec.polynomial.coeffs),
        "case_tag": rec.case_tag,
        "error_code": rec.error_code,
        "skipped_degenerate": rec.skipped_degenerate,
        "ill_conditioned": rec.ill_conditioned,
        "claimed_roots": list(rec.claimed_roots),
        "polished_roots": list(rec.polished_roots),
        "raw_residuals": list(rec.raw_residuals),
        "per_root_residuals": list(rec.per_root_residuals),
        "candidate_roots": list(rec.candidate_roots),
        "census": rec.census,
        "oracle_roots": list(rec.oracle_roots),
        "oracle_converged": rec.oracle_converged,
        "match_distance": None if not math.isfinite(rec.match_distance) else rec.match_distance,
        "passed": rec.passed,
    }


def render_record(rec: CaseRecord) -> str:
    return _canon(record_to_object(rec))


def render_report(report: EnsembleReport) -> str:
    """One header line, one line per record, one aggregate line."""
    cfg = report.config
    header = {
        "report": "ensemble",
        "generator": GENERATOR_NAME,
        "config": {
            "seed": cfg.seed,
            "count": cfg.count,
            "degree": cfg.degree,
            "solver_ids": list(cfg.solver_ids),
            "coeff_range": list(cfg.coeff_range),
            "monic": cfg.monic,
            "tol": cfg.tol,
            "match_tol": cfg.match_tol,
        },
    }
    lines = [_canon(header)]
    lines.extend(render_record(rec) for rec in report.records)
    lines.append(_canon({"aggregate": report.aggregate}))
    return "\n".join(lines) + "\n"


def render_aggregate(report: EnsembleReport) -> str:
    """Just the final aggregate line of the report."""
    return _canon({"aggregate": report.aggregate})


def render_value(obj) -> str:
    """Canonical rendering of a plain value (dict/list/scalar/complex)."""
    return _canon(obj)


def write_report(report: EnsembleReport, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(render_report(report))
