"""
Command-line front end for qtknots.

Subcommands compute Macdonald polynomials, ∇, Hall-algebra operators,
superpolynomials and triangular-partition enumerators, check A-candidates,
run verification suites and manage the persistent cache. Results go to
stdout uncoloured; messages go to stderr.
"""

import argparse
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import List, Optional, Tuple

from .cache import ResultCache
from .coeff import render, render_poly
from .console import configure_logging, print_error, print_header, print_info, print_success, print_warning
from .errors import (
    EXIT_INVALID_INPUT, EXIT_OK, ArithmeticInconsistencyError, DegreeLimitError, InvalidInputError, QtKnotsError,
    VerificationError,
)
from .hall import create, e_kn, seed, xkn_apply
from .knots import check_A_candidate, hook_poly_check, superpoly
from .macdonald import kostka_matrix, macH, nabla
from .output import dumps, encode_poly, encode_superpoly, encode_symfunc
from .partitions import format_partition, parse_partition
from .report_generator import generate_report
from .settings import (
    DEFAULT_JOBS, DEFAULT_MAX_DEGREE, SUPERPOLY_FORMATS, VERSION, load_suite_config, resolve_cache_dir,
)
from .suites import SUITES, get_suite
from .symfunc import parse_symfunc, render_symfunc
from .triangular import d_tau, d_tau_schur, delta_comb, enumerate_triangular, is_triangular, slope_interval

logger = logging.getLogger(__name__)


# --- argument helpers ---

def _pair(text: str) -> Tuple[int, int]:
    """"3,2" -> (3, 2)."""
    try:
        first, second = (int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return first, second


def _guard(degree: int, limit: int, what: str) -> None:
    if degree > limit:
        raise DegreeLimitError(degree, limit, what)


def _emit(args, text: str, payload) -> None:
    print(dumps(payload) if args.output == "json" else text)


def _parse_seed(text: str):
    """"e:3" or "shat:2,1"."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise InvalidInputError(f"seeds are written KIND:ARG, e.g. e:3 or shat:2,1; got {text!r}")
    return seed(kind.strip(), tuple(parse_partition(arg)))


# --- subcommands ---

def cmd_macdonald(args, cache) -> int:
    if args.kostka is not None:
        _guard(args.kostka, args.max_degree, "Kostka matrix")
        matrix = kostka_matrix(args.kostka, "classical" if args.classical else "modified")
        payload = {
            "n": matrix.n,
            "kind": matrix.kind,
            "index": [list(mu) for mu in matrix.index],
            "rows": [[encode_poly(c) for c in row] for row in matrix.rows],
        }
        _emit(args, matrix.render(), payload)
        return EXIT_OK
    if args.mu is None:
        raise InvalidInputError("macdonald needs --mu or --kostka")
    mu = parse_partition(args.mu)
    _guard(mu.size, args.max_degree, f"H̃_{mu}")
    value = macH(mu)
    _emit(args, render_symfunc(value), {"mu": list(mu), "value": encode_symfunc(value)})
    return EXIT_OK


def cmd_nabla(args, cache) -> int:
    f = parse_symfunc(args.f)
    if f:
        _guard(max(f.degrees()), args.max_degree, "∇")
    value = nabla(f, -1 if args.inverse else 1)
    _emit(args, render_symfunc(value), {"input": encode_symfunc(f), "inverse": args.inverse,
                                        "value": encode_symfunc(value)})
    return EXIT_OK


def cmd_hall(args, cache) -> int:
    if args.family is not None:
        k, n = args.family
        _guard(n, args.max_degree, f"e_({k},{n})")
        value = e_kn(k, n)
        label = {"family": [k, n]}
    elif args.ray is None:
        raise InvalidInputError("hall needs --ray (with --f or --seed) or --family")
    elif args.seed is not None:
        a, b = args.ray
        s = _parse_seed(args.seed)
        _guard(s.degree * b, args.max_degree, f"creation on the ray ({a},{b})")
        value = create(s, a, b)
        label = {"seed": args.seed, "ray": [a, b]}
    elif args.f is not None:
        k, n = args.ray
        f = parse_symfunc(args.f)
        _guard((max(f.degrees()) if f else 0) + n, args.max_degree, f"X^({k},{n})")
        value = xkn_apply(k, n, f)
        label = {"input": encode_symfunc(f), "ray": [k, n]}
    else:
        raise InvalidInputError("hall --ray needs --f (apply the operator) or --seed (create a family member)")
    _emit(args, render_symfunc(value), {**label, "value": encode_symfunc(value)})
    return EXIT_OK


def cmd_superpoly(args, cache) -> int:
    _guard(min(args.k, args.n), args.max_degree, f"𝒫_{args.k},{args.n}")
    sp = superpoly(args.k, args.n, schur=args.format == "schur" or args.output == "json")
    _emit(args, sp.render(args.format), encode_superpoly(sp))
    return EXIT_OK


def cmd_triangular(args, cache) -> int:
    if args.test is not None:
        mu = parse_partition(args.test)
        interval = slope_interval(mu)
        triangular = is_triangular(mu)
        text = f"triangular {interval}" if triangular else "not triangular"
        _emit(args, text, {"partition": list(mu), "triangular": triangular,
                           "interval": [str(interval.lo), str(interval.hi)] if triangular else None})
        return EXIT_OK
    _guard(args.max, args.max_degree, "triangular enumeration")
    rows = enumerate_triangular(args.max)
    if args.list:
        text = "\n".join(f"{n}: {' '.join(format_partition(mu) for mu in row)}" for n, row in enumerate(rows))
        _emit(args, text, {"partitions": [[list(mu) for mu in row] for row in rows]})
    else:
        counts = [len(row) for row in rows]
        _emit(args, " ".join(map(str, counts)), {"counts": counts})
    return EXIT_OK


def cmd_dtau(args, cache) -> int:
    tau = parse_partition(args.tau)
    _guard(tau.size, args.max_degree, f"𝒟_{tau}")
    if args.super:
        sp = delta_comb(tau, schur=args.schur or args.output == "json")
        _emit(args, sp.render("schur" if args.schur else "monomial"), encode_superpoly(sp))
        return EXIT_OK
    value = d_tau(tau)
    payload = {"tau": list(tau), "value": encode_poly(value)}
    if args.schur:
        form = d_tau_schur(tau)
        payload["schur_qt"] = [{"a": a, "b": b, "mult": mult} for a, b, mult in form.signed_pairs()]
        _emit(args, form.render(), payload)
    else:
        _emit(args, render_poly(value), payload)
    return EXIT_OK


def cmd_check_a(args, cache) -> int:
    candidate = parse_symfunc(args.candidate)
    _guard(min(args.k, args.n), args.max_degree, f"𝒫_{args.k},{args.n}")
    report = check_A_candidate(candidate, args.k, args.n)
    payload = {"k": args.k, "n": args.n, "passed": report.passed}
    if report.passed:
        lines = [f"PASS candidate reproduces 𝒫_{args.k},{args.n}"]
    else:
        payload.update(mismatch=report.mismatch, expected=encode_poly(report.expected), got=encode_poly(report.got))
        lines = [f"FAIL at A^{report.mismatch}: expected {render_poly(report.expected)}, got {render(report.got)}"]
    passed = report.passed
    if args.hook:
        hook_passed, delta_value = hook_poly_check(candidate, args.n)
        payload["hook"] = {"passed": hook_passed, "delta": delta_value}
        lines.append(f"{'PASS' if hook_passed else 'FAIL'} hook polynomial with δ = {delta_value}")
        passed = passed and hook_passed
    _emit(args, "\n".join(lines), payload)
    if not passed:
        raise VerificationError(f"candidate does not reproduce 𝒫_{args.k},{args.n}")
    return EXIT_OK


def _run_suites(names: List[str], config, jobs: int, show_progress: bool):
    suites = [get_suite(name, **config.get(name, {})) for name in names]
    if jobs <= 1 or len(suites) == 1:
        return [suite.run(show_progress) for suite in suites], suites
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        # map keeps the requested order
        results = list(pool.map(lambda suite: suite.run(False), suites))
    return results, suites


def cmd_verify(args, cache) -> int:
    if args.list:
        for name, suite_class in SUITES.items():
            kind = "gating" if suite_class.gating else "reported"
            print(f"{name:<28} {kind:<9} {suite_class.description}")
        return EXIT_OK

    names = list(SUITES) if args.all else args.suites
    if not names:
        raise InvalidInputError("verify needs suite names, --all or --list")
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise InvalidInputError(f"unknown suites: {', '.join(unknown)}. Available suites: {', '.join(SUITES)}")
    config = load_suite_config(args.config)

    print_header(f"qtknots v{VERSION} verification: {len(names)} suite(s)")
    start = time.perf_counter()
    per_suite, suites = _run_suites(names, config, args.jobs, show_progress=args.output == "text")
    total_time = time.perf_counter() - start

    results = [result for batch in per_suite for result in batch]
    gating = [r for r in results if r.gating]
    failed = [r for r in gating if not r.passed]
    if args.output == "json":
        print(dumps({"results": [r.as_dict() for r in results], "passed": not failed}))
    else:
        for r in results:
            print(r.summary_line())
        print(f"TOTAL gating={len(gating)} passed={len(gating) - len(failed)} failed={len(failed)} "
              f"reported={len(results) - len(gating)} elapsed={total_time:.2f}s")
    for suite in suites:
        logger.debug("suite stats: %s", suite.get_stats())

    if args.report:
        generate_report(args.report, {
            "timestamp": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            "version": VERSION,
            "suites": names,
            "cache_dir": str(cache.root),
            "cache_enabled": cache.enabled,
            "jobs": args.jobs,
            "max_degree": args.max_degree,
            "config_file": args.config,
            "total_time": total_time,
            "results": results,
        })
        print_success(f"Report generated: {args.report}")

    if failed:
        raise VerificationError(f"{len(failed)} gating check(s) failed")
    print_success(f"All {len(gating)} gating checks passed")
    return EXIT_OK


def cmd_cache(args, cache) -> int:
    if args.action == "info":
        entries = cache.info()
        if args.output == "json":
            print(dumps({"root": str(cache.root), "entries": [
                {"kind": e.kind, "path": str(e.path), "size": e.size, "valid": e.valid} for e in entries]}))
        else:
            print(f"root {cache.root}")
            for e in entries:
                print(f"{e.kind} {e.path.name} {e.size} {'valid' if e.valid else 'invalid'}")
            print(f"{len(entries)} file(s)")
        return EXIT_OK
    if args.action == "clear":
        removed = cache.clear()
        _emit(args, f"removed {removed} file(s) under {cache.root}", {"removed": removed})
        return EXIT_OK
    if not cache.enabled:
        raise InvalidInputError("cache warm cannot run with --no-cache")
    _guard(args.max_n, args.max_degree, "cache warm")
    written = cache.warm(args.max_n)
    _emit(args, f"wrote {written} file(s) under {cache.root}", {"written": written})
    return EXIT_OK


COMMANDS = {
    "macdonald": cmd_macdonald,
    "nabla": cmd_nabla,
    "hall": cmd_hall,
    "superpoly": cmd_superpoly,
    "triangular": cmd_triangular,
    "dtau": cmd_dtau,
    "check-a": cmd_check_a,
    "verify": cmd_verify,
    "cache": cmd_cache,
}


# --- parser ---

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output_group = common.add_mutually_exclusive_group()
    output_group.add_argument("--json", dest="output", action="store_const", const="json",
                              help="Print results as JSON.")
    output_group.add_argument("--text", dest="output", action="store_const", const="text",
                              help="Print results as text (default).")
    common.set_defaults(output="text")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                        help="Abort computations whose degree would exceed this limit.")
    common.add_argument("--cache-dir", default=None,
                        help="Cache root (default: $QTKNOTS_CACHE, then ~/.cache/qtknots).")
    common.add_argument("--no-cache", action="store_true", default=False,
                        help="Neither read nor write the persistent cache.")
    common.add_argument("--jobs", type=int, default=DEFAULT_JOBS,
                        help="Number of suites verified in parallel.")
    common.add_argument("--config", default=None, help="YAML file overriding suite options.")
    common.add_argument("-v", "--verbose", action="store_true", default=False, help="Debug logging on stderr.")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="qtknots",
        description="Macdonald polynomials, elliptic Hall algebra operators and torus-link superpolynomials.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"qtknots {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text,
                              formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    p = add("macdonald", "Print H̃_mu or a (q,t)-Kostka matrix.")
    p.add_argument("--mu", help="Partition, e.g. 2,1.")
    p.add_argument("--kostka", type=int, metavar="N", help="Print the Kostka matrix of degree N.")
    p.add_argument("--classical", action="store_true", help="Use K(q,t) = t^η K̃(q,1/t).")

    p = add("nabla", "Apply ∇ (or its inverse) to a symmetric function.")
    p.add_argument("--f", required=True, help='Symmetric function, e.g. "e[3]" or "p[2]+q*s[1,1]".')
    p.add_argument("--inverse", action="store_true", help="Apply ∇^-1.")

    p = add("hall", "Apply X^(k,n), create a family member, or print e_(k,n).")
    p.add_argument("--ray", type=_pair, metavar="K,N", help="Operator index (with --f) or creation ray (with --seed).")
    p.add_argument("--f", help="Symmetric function the operator acts on.")
    p.add_argument("--seed", help="Creation seed KIND:ARG with KIND in pi, phat, e, hhat, shat.")
    p.add_argument("--family", type=_pair, metavar="K,N", help="Print e_(k,n).")

    p = add("superpoly", "Print the superpolynomial 𝒫_kn.")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=SUPERPOLY_FORMATS, default="monomial")

    p = add("triangular", "Count, list or test triangular partitions.")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="Counts for sizes 0..MAX (default).")
    mode.add_argument("--list", action="store_true", help="Shapes for sizes 0..MAX.")
    mode.add_argument("--test", metavar="PARTITION", help="Test one partition and print its slope interval.")
    p.add_argument("--max", type=int, default=6)

    p = add("dtau", "Print 𝒟_tau, or 𝔻_tau with --super.")
    p.add_argument("--tau", required=True, help="Triangular partition, e.g. 2,1.")
    p.add_argument("--schur", action="store_true", help="Two-variable Schur form.")
    p.add_argument("--super", action="store_true", help="The A-graded polynomial 𝔻_tau.")

    p = add("check-a", "Check an A-candidate against 𝒫_kn.")
    p.add_argument("--candidate", required=True, help='Symmetric function, e.g. "s[1,1,1]+s[3,1]".')
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--hook", action="store_true", help="Also check the hook-term factorization.")

    p = add("verify", "Run verification suites.")
    p.add_argument("suites", nargs="*", metavar="SUITE")
    p.add_argument("--all", action="store_true", help="Run every suite.")
    p.add_argument("--list", action="store_true", help="List the suites and exit.")
    p.add_argument("--report", metavar="FILE.md", help="Write a markdown report.")

    p = add("cache", "Inspect, clear or warm the persistent cache.")
    p.add_argument("action", choices=["info", "clear", "warm"])
    p.add_argument("--max-n", type=int, default=6, help="Largest degree for cache warm.")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    if args.jobs < 1:
        print_error("--jobs must be at least 1")
        return EXIT_INVALID_INPUT

    cache = ResultCache(resolve_cache_dir(args.cache_dir), enabled=not args.no_cache)
    try:
        if args.command != "cache":
            seeded = cache.seed_all()
            if seeded and args.verbose:
                print_info(f"Loaded {seeded} cache file(s) from {cache.root}")
        code = COMMANDS[args.command](args, cache)
    except VerificationError as e:
        # failed checks still persist the cache
        print_error(str(e))
        code = e.exit_code
    except ArithmeticInconsistencyError as e:
        logger.exception("arithmetic inconsistency")
        print_error(f"internal arithmetic inconsistency: {e}")
        return e.exit_code
    except QtKnotsError as e:
        print_error(str(e))
        return e.exit_code

    if args.command != "cache":
        try:
            written = cache.persist()
            if written:
                logger.debug("cache: persisted %d file(s)", written)
        except OSError as e:
            print_warning(f"could not write the cache under {cache.root}: {e}")
    if args.verbose and cache.enabled:
        logger.debug("cache stats: %s", cache.stats)
    return code


__all__ = ["main", "build_parser", "COMMANDS"]
