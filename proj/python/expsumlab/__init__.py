"""Exact exponential sums over finite fields, L-series reconstruction and p-adic radii."""
import json

from ._core import (
    BudgetExceeded,
    ContextMismatch,
    DomainError,
    Error,
    SchemaError,
    Uncertified,
    commands,
    curve_degree,
    robba_index,
    sl2_degree,
    verify_cases,
)
from . import _core


class JobResult:
    def __init__(self, report, table, csv, exit_code):
        self.report = report
        self.table = table
        self.csv = csv
        self.exit_code = exit_code

    def __repr__(self):
        return f"JobResult(command={self.report.get('command')!r}, exit_code={self.exit_code})"


def run_job(job, *, budget=None, s_max=None, threads=None):
    """Runs a job given as a dict or JSON text."""
    text = job if isinstance(job, str) else json.dumps(job)
    report, table, csv, code = _core.run_job(text, budget, s_max, threads)
    return JobResult(json.loads(report), table, csv, code)


def verify(case="all"):
    report, table, csv, code = _core.verify(case)
    return JobResult(json.loads(report), table, csv, code)


def power_sums(p, n, variety, levels, threads=1):
    """S_1..S_levels as lists of integer coordinates in the basis 1, zeta, ..., zeta^(p-2)."""
    raw = _core.power_sums(p, n, json.dumps(variety), levels, threads)
    return [[int(c) for c in s] for s in raw]


def chern_degree(n, d, e):
    return int(_core.chern_degree(n, list(d), list(e)))


def betti_degree(n, reduced_betti):
    degree, total_bound, signed_euler = _core.betti_degree(n, list(reduced_betti))
    return {"degree": degree, "total_bound": total_bound, "signed_euler": signed_euler}


def newton_degree(n, support):
    value, degenerate = _core.newton_degree(n, [list(v) for v in support])
    return int(value), degenerate


def fermat_report(n):
    return json.loads(_core.fermat_report(n))


def radius_profile(p, g, grid=(), s_max=200, threads=1):
    """g is a list of {"coeff", "power"} terms or {"numerator", "denominator"}."""
    return json.loads(_core.radius_profile(p, json.dumps(g), [str(x) for x in grid], s_max, threads))


__all__ = [
    "BudgetExceeded", "ContextMismatch", "DomainError", "Error", "JobResult", "SchemaError", "Uncertified",
    "betti_degree", "chern_degree", "commands", "curve_degree", "fermat_report", "newton_degree", "power_sums",
    "radius_profile", "robba_index", "run_job", "sl2_degree", "verify", "verify_cases",
]
