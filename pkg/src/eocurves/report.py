"""Verification suites and machine-readable reports.

The suite registry is static: appended to, never reordered, so that
``--suite all`` is stable across versions.  Every check returns a pass
flag plus a short residual summary; rationals in reports are strings so
no binary floating point ever contaminates the output.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from . import catalan as cat
from . import hurwitz as hur
from . import qhbar
from . import schur
from . import wkb
from . import oracles
from .ratfunc import RatFunc, UPoly

Q = Fraction

CheckFn = Callable[["RunConfig"], tuple[bool, str]]


@dataclass
class RunConfig:
    command: str = "verify"
    subcommand: str = ""
    suite: str = "all"
    params: dict = field(default_factory=dict)
    output_format: str = "pretty"
    cache_path: str = ""
    jobs: int = 1
    tolerance: float = 1e-8

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class CheckRecord:
    check_id: str
    statement: str
    status: str
    residual: str
    wall_time: float


@dataclass
class Report:
    suite: str
    checks: list[CheckRecord]
    config: RunConfig

    @property
    def overall(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "version": __version__,
            "config": self.config.to_json(),
            "checks": [asdict(c) for c in self.checks],
            "overall": self.overall,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json_dict(), indent=2)
        if fmt == "csv":
            lines = ["id,status,residual,wall_time"]
            for c in self.checks:
                lines.append(f"{c.check_id},{c.status},{c.residual},{c.wall_time:.3f}")
            lines.append(f"overall,{self.overall},,")
            return "\n".join(lines)
        width = max((len(c.check_id) for c in self.checks), default=10)
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            lines.append(f"  {c.check_id.ljust(width)}  {c.status.upper():4}  "
                         f"{c.residual}")
        lines.append(f"overall: {self.overall.upper()}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def _zero_ratfuncs(fns: Sequence[RatFunc]) -> tuple[bool, str]:
    bad = [i for i, f in enumerate(fns) if not f.is_zero()]
    if bad:
        return False, f"nonzero at orders {bad}"
    return True, f"{len(fns)} residuals identically zero"


def check_catalan_base_sequence(cfg: RunConfig) -> tuple[bool, str]:
    expect = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]
    got = [cat.catalan_count(0, 1, [2 * m]) for m in range(13)]
    return got == expect, f"first 13 entries {'match' if got == expect else got}"


def check_catalan_curve_inversion(cfg: RunConfig) -> tuple[bool, str]:
    rep = cat.curve_inversion_check(8)
    return rep["pass"], f"series inverse exact through order {rep['order']}"


def check_catalan_free_energies(cfg: RunConfig) -> tuple[bool, str]:
    for g, n in [(1, 1), (0, 3), (0, 4), (1, 2), (0, 5), (1, 3), (2, 1)]:
        fe = cat.free_energy(g, n)
        if not fe.is_symmetric():
            return False, f"({g},{n}) asymmetric"
        if not fe.eval_partial(0, Q(-1)).is_zero():
            return False, f"({g},{n}) does not vanish at t=-1"
    return True, "symmetry and vanishing locus for 7 cases"


def check_catalan_laplace(cfg: RunConfig) -> tuple[bool, str]:
    worst = 0.0
    for g, n, xs, cap in [(1, 1, [10.0], 60), (0, 3, [10.0, 11.0, 12.0], 60)]:
        exact = cat.free_energy_float(g, n, xs)
        direct = cat.laplace_sum_float(g, n, xs, cap)
        worst = max(worst, abs(exact - direct) / abs(direct))
    return worst <= cfg.tolerance, f"max relative error {worst:.2e}"


def check_catalan_s_cross_paths(cfg: RunConfig) -> tuple[bool, str]:
    for m in (2, 3, 4):
        if cat.s_coefficient_assembled(m) != cat.s_coefficient_recursive(m):
            return False, f"paths differ at m={m}"
    return True, "assembled equals recursive for m=2..4"


def _catalan_table_z(m: int) -> RatFunc:
    if m == 2:
        return RatFunc(UPoly([0, 0, 0, 0, 9, 0, 1]),
                       UPoly([1, 0, -1]).pow(3) * 12, "z")
    if m == 3:
        return RatFunc(UPoly([0] * 6 + [5, 0, 5]),
                       UPoly([-1, 0, 1]).pow(6) * 2, "z")
    num = UPoly([0] * 8 + [-4725, 0, -12879, 0, -4524, 0, 36, 0, -9, 0, 1])
    return RatFunc(num, UPoly([-1, 0, 1]).pow(9) * 360, "z")


def check_catalan_s_table(cfg: RunConfig) -> tuple[bool, str]:
    for m in (2, 3, 4):
        if cat.to_z(cat.s_coefficient_assembled(m)) != _catalan_table_z(m):
            return False, f"closed form differs at m={m}"
    return True, "closed z-forms match for m=2..4"


def check_catalan_schrodinger(cfg: RunConfig) -> tuple[bool, str]:
    return _zero_ratfuncs(cat.schrodinger_residuals(3))


def check_catalan_s_polynomiality(cfg: RunConfig) -> tuple[bool, str]:
    for m in (2, 3, 4):
        p = cat.s_polynomial(cat.s_coefficient_assembled(m))
        if p.degree() > 3 * m - 3:
            return False, f"degree {p.degree()} > {3 * m - 3} at m={m}"
    return True, "polynomial in s with degree <= 3m-3"


def check_catalan_euler(cfg: RunConfig) -> tuple[bool, str]:
    for g, n in [(1, 1), (0, 3), (1, 2), (2, 1)]:
        got = cat.principal_ratfunc(cat.free_energy(g, n)).eval(Q(1))
        want = (-1) ** n * oracles.moduli_euler_characteristic(g, n)
        if got != want:
            return False, f"({g},{n}): {got} != {want}"
    return True, "matches orbifold Euler characteristics for 4 cases"


def check_hurwitz_values(cfg: RunConfig) -> tuple[bool, str]:
    cases = [
        hur.hurwitz_number(0, 1, [3]) == Q(1, 2),
        hur.hurwitz_number(0, 2, [1, 1]) == Q(1, 2),
        hur.hurwitz_number(1, 1, [2]) == Q(1, 12),
        hur.hurwitz_number(1, 1, [1]) == 0,
        hur.labeled_hurwitz(0, [1, 1, 1]) == 4,
    ]
    return all(cases), f"{sum(cases)}/5 reference values"


def check_hurwitz_nonnegative(cfg: RunConfig) -> tuple[bool, str]:
    import random
    rng = random.Random(1)
    for _ in range(30):
        n = rng.randint(1, 3)
        mu = [rng.randint(1, 5) for _ in range(n)]
        g = rng.randint(0, 2)
        if hur.hurwitz_number(g, n, mu) < 0:
            return False, f"negative at ({g},{mu})"
    return True, "30 random values non-negative"


def check_hurwitz_recursion(cfg: RunConfig) -> tuple[bool, str]:
    for g, n in [(1, 1), (0, 3), (0, 4), (1, 2), (0, 5), (1, 3), (2, 1)]:
        if not hur.fh_recursion_residual(g, n).is_zero():
            return False, f"nonzero residual at ({g},{n})"
    return True, "identically zero for all 2g-2+n <= 3"


def check_hurwitz_free_energies(cfg: RunConfig) -> tuple[bool, str]:
    for g, n in [(1, 1), (0, 3), (0, 4), (1, 2), (0, 5), (1, 3), (2, 1)]:
        fe = hur.free_energy(g, n)
        if not fe.is_symmetric():
            return False, f"({g},{n}) asymmetric"
        if not fe.eval_partial(0, Q(1)).is_zero():
            return False, f"({g},{n}) does not vanish at t=1"
        if fe.total_degree() > 6 * g - 6 + 3 * n:
            return False, f"({g},{n}) degree too big"
    return True, "symmetry, vanishing at t=1, degree bound for 7 cases"


def check_hurwitz_laplace(cfg: RunConfig) -> tuple[bool, str]:
    import math
    xs = [math.exp(-w) for w in (3.0, 3.1, 3.2)]
    exact = hur.free_energy_float(0, 3, xs)
    direct = hur.laplace_sum_float(0, 3, xs, 40)
    err = abs(exact - direct) / abs(direct)
    return err <= cfg.tolerance, f"relative error {err:.2e}"


def check_hurwitz_s_cross_paths(cfg: RunConfig) -> tuple[bool, str]:
    for m in (2, 3, 4):
        hur.s_coefficient(m)  # raises PathMismatch on any failure
    return True, "both constructions agree, degree 3m-3, vanish at t=1"


def check_hurwitz_heat(cfg: RunConfig) -> tuple[bool, str]:
    ok, msg = _zero_ratfuncs(hur.heat_residuals(3))
    if not ok:
        return ok, msg
    if not hur.s0_quadratic_identity_residual().is_zero():
        return False, "leading-order quadratic identity fails"
    return True, msg + "; leading-order identity holds"


def check_hurwitz_lambert(cfg: RunConfig) -> tuple[bool, str]:
    rep = hur.lambert_inversion_check(12)
    return rep["pass"], f"series identities exact through order {rep['order']}"


def check_zhou_series(cfg: RunConfig) -> tuple[bool, str]:
    rep = qhbar.zhou_series_checks(20)
    return rep["pass"], "termwise recursion/difference/heat checks to m=20"


def check_pq_commutator(cfg: RunConfig) -> tuple[bool, str]:
    rep = qhbar.pq_commutator_check(10, 3)
    return rep["pass"], "commutator bracket annihilates the basis grid"


def check_wkb_corrections(cfg: RunConfig) -> tuple[bool, str]:
    for model in ("catalan", "hurwitz"):
        corr = wkb.recover_corrections(model, 4)
        if not all(c.is_zero() for c in corr):
            return False, f"nonzero correction for {model}"
    return True, "A_1..A_4 vanish for both models"


def check_wkb_triple_path(cfg: RunConfig) -> tuple[bool, str]:
    from .ratfunc import substitute_mobius
    for m in (2, 3, 4):
        mine = wkb.s_prime_from_hierarchy("catalan", m)
        other = substitute_mobius(cat.ddx_factor() * cat.s_coefficient_assembled(m).diff(),
                                  wkb.Z_OF_T_CATALAN, "z")
        if mine != other:
            return False, f"catalan mismatch at m={m}"
        mineh = wkb.s_prime_from_hierarchy("hurwitz", m)
        otherh = substitute_mobius(hur.s_prime_logx(m), wkb.Z_OF_T_HURWITZ, "z")
        if mineh != otherh:
            return False, f"hurwitz mismatch at m={m}"
    return True, "hierarchy equals direct derivatives, m=2..4, both models"


def check_schur_eigenvalue(cfg: RunConfig) -> tuple[bool, str]:
    for d in range(7):
        for mu in schur.partitions_of(d):
            smu = schur.schur_in_p(mu)
            delta = schur.cutjoin_apply(smu) - smu * (
                schur.shifted_power_sum(2, mu) / 2)
            if not delta.is_zero():
                return False, f"fails at {mu}"
    return True, "exact for all |mu| <= 6"


def check_schur_tau(cfg: RunConfig) -> tuple[bool, str]:
    if not schur.tau_expansion_residual(6, 6).is_zero():
        return False, "graded residual nonzero"
    if not schur.heat_consistency_residual(6, 6).is_zero():
        return False, "cut-and-join flow residual nonzero"
    return True, "character expansion equals exp(H) to weight 6, order 6"


def check_schur_cauchy(cfg: RunConfig) -> tuple[bool, str]:
    if not schur.cauchy_residual(5).is_zero():
        return False, "pairing identity fails"
    if not schur.cauchy_restriction_residual(5).is_zero():
        return False, "restriction identity fails"
    return True, "pairing and restriction identities to weight 5"


def check_schur_collapse(cfg: RunConfig) -> tuple[bool, str]:
    rep = schur.principal_collapse_check(8)
    return rep["pass"], "one-row collapse matches explicit series to m=8"


def check_schur_orthogonality(cfg: RunConfig) -> tuple[bool, str]:
    for d in range(1, 7):
        ps = schur.partitions_of(d)
        for a in ps:
            for b in ps:
                tot = sum(Q(schur.character(a, l) * schur.character(b, l),
                            schur.z_order(l)) for l in ps)
                if tot != (1 if a == b else 0):
                    return False, f"fails at {a},{b}"
    import math
    for d in range(1, 7):
        if sum(schur.dimension(mu) ** 2 for mu in schur.partitions_of(d)) \
                != math.factorial(d):
            return False, f"dimension square sum fails at {d}"
    return True, "character orthogonality and Burnside identity to size 6"


SUITES: dict[str, list[tuple[str, str, CheckFn]]] = {
    "catalan": [
        ("catalan-base-sequence", "one-vertex planar counts are the Catalan numbers",
         check_catalan_base_sequence),
        ("catalan-curve-inversion", "z(x) series inverts x = z + 1/z",
         check_catalan_curve_inversion),
        ("catalan-free-energies", "free energies symmetric, vanish at t=-1",
         check_catalan_free_energies),
        ("catalan-laplace", "exact free energies match truncated Laplace sums",
         check_catalan_laplace),
        ("catalan-s-cross-paths", "assembled and recursive S_m agree",
         check_catalan_s_cross_paths),
        ("catalan-s-table", "S_2..S_4 match their closed z-forms",
         check_catalan_s_table),
        ("catalan-schrodinger", "quantum-curve residuals vanish to order 4",
         check_catalan_schrodinger),
        ("catalan-s-polynomiality", "principal specialization polynomial in s",
         check_catalan_s_polynomiality),
        ("catalan-euler", "value at s=1 gives moduli Euler characteristics",
         check_catalan_euler),
    ],
    "hurwitz": [
        ("hurwitz-values", "reference values of small Hurwitz numbers",
         check_hurwitz_values),
        ("hurwitz-nonnegative", "random Hurwitz numbers are non-negative",
         check_hurwitz_nonnegative),
        ("hurwitz-free-energies", "free energies symmetric, vanish at t=1, bounded degree",
         check_hurwitz_free_energies),
        ("hurwitz-recursion", "differential recursion residuals vanish",
         check_hurwitz_recursion),
        ("hurwitz-laplace", "exact free energies match truncated Laplace sums",
         check_hurwitz_laplace),
        ("hurwitz-s-cross-paths", "assembled and recursive S_m agree",
         check_hurwitz_s_cross_paths),
        ("hurwitz-heat", "heat-hierarchy residuals vanish to m=3",
         check_hurwitz_heat),
        ("hurwitz-lambert", "tree series inverts the exponential curve",
         check_hurwitz_lambert),
        ("hurwitz-zhou", "explicit series satisfies its termwise equations",
         check_zhou_series),
        ("hurwitz-pq-commutator", "[P,Q] = P on the basis grid",
         check_pq_commutator),
    ],
    "wkb": [
        ("wkb-corrections", "quantization corrections vanish to order 4",
         check_wkb_corrections),
        ("wkb-triple-path", "hierarchy solution equals direct S_m derivatives",
         check_wkb_triple_path),
    ],
    "schur": [
        ("schur-eigenvalue", "cut-and-join eigenvalue identity",
         check_schur_eigenvalue),
        ("schur-tau", "character expansion of exp(H) per graded piece",
         check_schur_tau),
        ("schur-cauchy", "Cauchy pairing identity and its restriction",
         check_schur_cauchy),
        ("schur-collapse", "principal specialization collapses to one-row terms",
         check_schur_collapse),
        ("schur-orthogonality", "character orthogonality and Burnside identity",
         check_schur_orthogonality),
    ],
}


def suite_checks(name: str) -> list[tuple[str, str, CheckFn]]:
    if name == "all":
        out = []
        for key in ("catalan", "hurwitz", "wkb", "schur"):
            out.extend(SUITES[key])
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name]


def run_suite(name: str, cfg: RunConfig) -> Report:
    checks = suite_checks(name)

    def run_one(item: tuple[str, str, CheckFn]) -> CheckRecord:
        check_id, statement, fn = item
        start = time.monotonic()
        try:
            ok, residual = fn(cfg)
        except Exception as exc:  # a crash is a failure, not a crash of the suite
            ok, residual = False, f"exception: {type(exc).__name__}: {exc}"
        return CheckRecord(check_id, statement, "pass" if ok else "fail",
                           residual, time.monotonic() - start)

    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(run_one, checks))
    else:
        records = [run_one(item) for item in checks]
    return Report(suite=name, checks=records, config=cfg)
