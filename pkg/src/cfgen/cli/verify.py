#
# Copyright (C) 2024  The cfgen authors
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#
import logging
log = logging.getLogger("cfgen-cli")

from fractions import Fraction
from math import factorial
import multiprocessing
import time

from cfgen.cli.utilities import check_depth, emit, make_check, overall_status, spec_from_opts
from cfgen.contfrac import convergents, defect_series, determinant_mismatch, eval_convergent
from cfgen.errors import ParameterError
from cfgen.families import EGF_FAMILIES, FamilySpec, build_family, classical_numbers
from cfgen.families import family_closed_form, target_series
from cfgen.numerics import certified_decimal, format_rational, rat_to_decimal
from cfgen.sequences import zeta_reciprocal_bounds
from cfgen.series import series_order
from cfgen.series2cf import REFERENCE_OGF_CAUCHY_STEPS, StepPair, normalized_coefficients, reconstruct

# Number of classical numbers compared with the target series
ORACLE_COUNT = 30

HARMONIC_STEPS = (Fraction(1), Fraction(2), Fraction(1, 2))

# Known truncated decimals of convergent m at x = 1, keyed by (s, m, digits)
ZETA_DECIMALS = {
    (7, 5, 28): "0.9917254568069276497590711416",
}


def _lambda_values(N):
    values = [Fraction(0), Fraction(1, 2), Fraction(-1, 3)]
    if N >= 1 and Fraction(1, N) not in values:
        values.append(Fraction(1, N))
    return values


def parameter_grid():
    """Every (family, params) pair checked by verify --all, in report order"""
    grid = []
    for N in range(0, 5):
        grid.extend(("bernoulli", {"N": N, "lam": lam}) for lam in _lambda_values(N))
    for N in range(1, 5):
        grid.extend(("cauchy", {"N": N, "lam": lam}) for lam in _lambda_values(N))
    for family in ("euler", "euler2"):
        grid.extend((family, {"N": N}) for N in range(0, 5))
    for m in range(1, 4):
        for a in HARMONIC_STEPS:
            grid.extend(("harmonic", {"m": m, "a": a, "b": b}) for b in HARMONIC_STEPS)
    grid.extend(("zeta", {"s": s}) for s in (2, 3, 7))
    grid.extend(("cauchy_interleaved", {"N": N}) for N in range(1, 5))
    grid.extend((family, {}) for family in ("arctan", "ogf_bernoulli", "ogf_cauchy"))
    return grid


def closed_form_check(spec, pairs):
    if family_closed_form(spec, 1) is None:
        return make_check("closed-form", "skipped", "%s has no closed form" % spec.family)
    for pair in pairs:
        closed = family_closed_form(spec, pair.index)
        if closed is None:
            continue
        if (closed.P, closed.Q) != (pair.P, pair.Q):
            return make_check("closed-form", "fail",
                              "n=%d: recurrence P=%s Q=%s, closed form P=%s Q=%s"
                              % (pair.index, pair.P, pair.Q, closed.P, closed.Q))
    return make_check("closed-form", "pass")


def defect_check(spec, cf, pairs):
    top = cf.expected_defect(pairs[-1].index)
    f = target_series(spec, (top if top is not None else pairs[-1].index) + 1)
    for pair in pairs:
        expected = cf.expected_defect(pair.index)
        if expected is None:
            continue
        defect = defect_series(cf, pair, f)
        got = series_order(defect)
        if not got.meets(expected):
            return make_check("defect-law", "fail",
                              "n=%d: order %s < %d, coefficient of x^%d is %s"
                              % (pair.index, got, expected, got.value,
                                 format_rational(defect[got.value])))
    return make_check("defect-law", "pass")


def determinant_result(cf, pairs):
    n = determinant_mismatch(pairs, cf)
    if n is None:
        return make_check("determinant", "pass")
    lhs = pairs[n].P * pairs[n-1].Q - pairs[n-1].P * pairs[n].Q
    return make_check("determinant", "fail", "n=%d: P_n Q_(n-1) - P_(n-1) Q_n = %s" % (n, lhs))


def oracle_check(spec):
    numbers = classical_numbers(spec, ORACLE_COUNT)
    f = target_series(spec, ORACLE_COUNT)
    if numbers is None:
        if f[0] != 1:
            return make_check("oracle", "fail", "constant term is %s, not 1" % format_rational(f[0]))
        return make_check("oracle", "pass", "no classical numbers, constant term 1")
    for n in range(ORACLE_COUNT + 1):
        value = f[n] * factorial(n) if spec.family in EGF_FAMILIES else f[n]
        if value != numbers[n]:
            return make_check("oracle", "fail", "n=%d: series gives %s, recurrence gives %s"
                              % (n, format_rational(value), format_rational(numbers[n])))
    return make_check("oracle", "pass")


def zeta_value_check(spec, pairs):
    """At x = 1 convergent m is 1/(1 + 2^-s + ... + m^-s)"""
    total = Fraction(0)
    for pair in pairs[1:]:
        total += Fraction(1, pair.index ** spec.s)
        value = eval_convergent(pair, 1)
        if value != 1 / total:
            return make_check("value", "fail", "m=%d: convergent %s, partial sum reciprocal %s"
                              % (pair.index, format_rational(value), format_rational(1 / total)))
    return make_check("value", "pass")


def _first_difference(a, b):
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i - a.index(".")
    return None


def zeta_decimal_check(spec, pairs, digits):
    """The truncated decimal of convergent m at x = 1

    It must print as the reciprocal of 1 + 2^-s + ... + m^-s, or as the
    recorded golden, and lie above the certified value of 1/zeta(s).
    """
    if len(pairs) < 2:
        return make_check("decimal", "skipped", "needs depth >= 1")
    m = pairs[-1].index
    value = eval_convergent(pairs[-1], 1)
    shown = rat_to_decimal(value, digits).text
    partial = sum(Fraction(1, k ** spec.s) for k in range(1, m + 1))
    expected = ZETA_DECIMALS.get((spec.s, m, digits), rat_to_decimal(1 / partial, digits).text)
    if shown != expected:
        return make_check("decimal", "fail", "m=%d: convergent prints %s, expected %s" % (m, shown, expected))

    try:
        low, high = zeta_reciprocal_bounds(spec.s, digits)
        reference = certified_decimal(low, high, digits)
    except ParameterError as e:
        return make_check("decimal", "pass", "convergent %s, no certified reference: %s" % (shown, e))
    witness = "convergent %s, 1/zeta(%d) %s" % (shown, spec.s, reference)
    diff = _first_difference(shown, reference)
    if diff is not None:
        witness += ", first difference at decimal %d" % diff
    if value <= high:
        return make_check("decimal", "fail", witness)
    return make_check("decimal", "pass", witness)


def ogf_cauchy_checks(spec, cf, pairs):
    steps = [StepPair(int(t.num[1]), t.den[0]) for t in cf.terms[:pairs[-1].index]]
    n = min(len(steps), len(REFERENCE_OGF_CAUCHY_STEPS))
    ours = normalized_coefficients(steps[:n])
    published = normalized_coefficients(REFERENCE_OGF_CAUCHY_STEPS[:n])
    same = 0
    while same < n and steps[same] == REFERENCE_OGF_CAUCHY_STEPS[same]:
        same += 1
    if ours != published:
        k = next(i for i in range(n) if ours[i] != published[i])
        reference = make_check("reference", "fail", "step %d: normalized coefficient %s, published %s"
                               % (k + 1, format_rational(ours[k]), format_rational(published[k])))
    else:
        reference = make_check("reference", "pass",
                               "normalized coefficients agree for %d steps, pairs identical for %d"
                               % (n, same))

    order = len(steps)
    rebuilt = reconstruct(cf.head[0], steps, order)
    f = target_series(spec, order)
    if rebuilt != f:
        k = next(i for i in range(order + 1) if rebuilt[i] != f[i])
        roundtrip = make_check("roundtrip", "fail", "x^%d: fraction gives %s, series has %s"
                               % (k, format_rational(rebuilt[k]), format_rational(f[k])))
    else:
        roundtrip = make_check("roundtrip", "pass")
    return [reference, roundtrip]


def run_suite(family, params, depth, digits=28):
    """Run every check for one family

    :param family: Family id
    :type family: str
    :param params: Family parameters
    :type params: dict
    :param depth: Requested depth, terminated fractions are checked as far as they go
    :type depth: int
    :param digits: Decimal digits for the zeta reference
    :type digits: int
    :returns: The report, a JSON-ready dict
    :rtype: dict
    """
    spec = FamilySpec(family, **params)
    cf = build_family(spec, depth)
    levels = min(depth, len(cf))
    pairs = convergents(cf, levels)

    checks = [closed_form_check(spec, pairs),
              defect_check(spec, cf, pairs),
              determinant_result(cf, pairs)]
    if family == "zeta":
        checks.append(zeta_value_check(spec, pairs))
        checks.append(zeta_decimal_check(spec, pairs, digits))
    else:
        checks.append(oracle_check(spec))
    if family == "ogf_cauchy":
        checks.extend(ogf_cauchy_checks(spec, cf, pairs))

    status = overall_status(checks)
    log.debug("%s: %s", spec.label(), status)
    return {"family":     family,
            "label":      spec.label(),
            "params":     spec.params.to_json(),
            "depth":      depth,
            "levels":     levels,
            "terminated": cf.terminated,
            "checks":     checks,
            "status":     status}


def verify_cmd(opts):
    """Run the verification suites

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :returns: 0 when every check passes, 1 otherwise
    :rtype: int
    """
    started = time.time()
    depth = check_depth(opts)
    if opts.all:
        jobs = [(family, params, depth, opts.digits) for family, params in parameter_grid()]
        if opts.jobs > 1:
            with multiprocessing.Pool(opts.jobs) as pool:
                reports = pool.starmap(run_suite, jobs)
        else:
            reports = [run_suite(*job) for job in jobs]
    else:
        spec = spec_from_opts(opts)
        reports = [run_suite(spec.family, dict(spec.params), depth, opts.digits)]

    summary = dict((s, sum(1 for r in reports if r["status"] == s))
                   for s in ("pass", "fail", "skipped"))
    status = "fail" if summary["fail"] else "pass"
    payload = {"command": "verify",
               "all":     opts.all,
               "depth":   depth,
               "reports": reports,
               "summary": summary,
               "status":  status}
    emit(opts, "verify.tmpl", payload, started)
    return 1 if status == "fail" else 0
