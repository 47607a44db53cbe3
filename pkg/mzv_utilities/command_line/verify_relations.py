from concurrent.futures import ProcessPoolExecutor

from mzv_utilities.common import ConfigError, chunk_list
from mzv_utilities.constants import (
    DEFAULT_JOBS,
    DEFAULT_MAX_TOTAL_WEIGHT,
    DEFAULT_PRIME_MAX,
    DEFAULT_PRIME_MIN,
    DEFAULT_TRUNCATION,
    FINITE_FAMILIES,
    REAL_FAMILIES,
    SWEEP_CHUNK_SIZE,
)
from mzv_utilities.fmzv_modp import PrimeWindow, check_modp
from mzv_utilities.logger import logger
from mzv_utilities.mzv_numeric import check_real
from mzv_utilities.relation_families import Bounds, build, enumerate_params
from mzv_utilities.reports import build_report, log_summary, write_report


def _check_families(families, allowed, backend):
    unknown = [family for family in families if family not in allowed]
    if unknown:
        message = (
            f"{backend} cannot check {', '.join(unknown)}. "
            f"Choose from: {', '.join(allowed)}"
        )
        logger.error(message)
        raise ConfigError(message, {"families": unknown})


def collect_params(families, bounds):
    """(family, params) for every instance of every family, in enumeration order"""
    work = []
    for family in families:
        family_params = list(enumerate_params(family, bounds))
        logger.info(f"{family}: {len(family_params)} instances")
        work.extend((family, params) for params in family_params)
    return work


def _check_real_chunk(chunk, N, tol, strict_tolerance):
    return [
        check_real(build(family, params), N, tol, strict_tolerance)
        for (family, params) in chunk
    ]


def _check_modp_chunk(chunk, window):
    return [check_modp(build(family, params), window) for (family, params) in chunk]


def run_sweep(work, check_chunk, jobs, **kwargs):
    """Check `work` in chunks, in-process or across `jobs` worker processes

    Results come back sorted by instance id whatever the scheduling.
    """
    chunks = list(chunk_list(work, SWEEP_CHUNK_SIZE))
    results = []
    if jobs <= 1:
        for number, chunk in enumerate(chunks, start=1):
            results.extend(check_chunk(chunk, **kwargs))
            logger.info(f"Checked chunk {number} of {len(chunks)}")
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [
                executor.submit(check_chunk, chunk, **kwargs) for chunk in chunks
            ]
            for number, future in enumerate(futures, start=1):
                results.extend(future.result())
                logger.info(f"Checked chunk {number} of {len(chunks)}")
    return sorted(results, key=lambda result: result.instance_id)


def _finish(results, config, out):
    log_summary(results)
    failed = [result for result in results if not result.passed]
    print(f"{len(results) - len(failed)} passed, {len(failed)} failed")
    if out:
        write_report(build_report(results, config), out)
    return 1 if failed else 0


def verify_real_with_args(
    families,
    max_total_weight,
    max_m,
    max_depth,
    N,
    tol,
    strict_tolerance,
    jobs,
    out,
):
    """
    Enumerate instances of the real relation families within the bounds and
    check each numerically against truncated nested series.

    Args:
        families (list): Real family names
        max_total_weight (int): Bound on wt(k)+m, wt(k)+wt(l), or the sum-formula weight
        max_m (int): Optional bound on m
        max_depth (int): Optional bound on the depth of the index parameters
        N (int): Truncation bound
        tol (float): Base tolerance; None uses the per-family defaults
        strict_tolerance (bool): Do not add truncation estimates to the tolerance
        jobs (int): Worker processes
        out (str): Optional report path

    Returns:
        int: 0 if every check passes, 1 otherwise
    """
    _check_families(families, REAL_FAMILIES, "verify-real")
    bounds = Bounds(max_total_weight, max_m, max_depth)
    work = collect_params(families, bounds)
    logger.info(f"Checking {len(work)} real relation instances at N={N}")
    results = run_sweep(
        work,
        _check_real_chunk,
        jobs,
        N=N,
        tol=tol,
        strict_tolerance=strict_tolerance,
    )
    config = {
        "backend": "real",
        "families": list(families),
        "max_total_weight": max_total_weight,
        "max_m": max_m,
        "max_depth": max_depth,
        "N": N,
        "tol": tol,
        "strict_tolerance": strict_tolerance,
    }
    return _finish(results, config, out)


def verify_modp_with_args(
    families,
    max_total_weight,
    max_m,
    max_depth,
    pmin,
    pmax,
    skip_small,
    jobs,
    out,
):
    """
    Enumerate instances of the finite relation families within the bounds and
    check each exactly at every retained prime of [pmin, pmax].

    Returns:
        int: 0 if every check passes, 1 otherwise
    """
    _check_families(families, FINITE_FAMILIES, "verify-modp")
    window = PrimeWindow(pmin, pmax, skip_small)
    bounds = Bounds(max_total_weight, max_m, max_depth)
    work = collect_params(families, bounds)
    logger.info(
        f"Checking {len(work)} finite relation instances at primes in [{pmin}, {pmax}]"
    )
    results = run_sweep(work, _check_modp_chunk, jobs, window=window)
    config = {
        "backend": "modp",
        "families": list(families),
        "max_total_weight": max_total_weight,
        "max_m": max_m,
        "max_depth": max_depth,
        "pmin": pmin,
        "pmax": pmax,
        "skip_small": skip_small,
    }
    return _finish(results, config, out)


def _add_bound_arguments(parser, default_families):
    parser.add_argument(
        "--families",
        nargs="+",
        default=list(default_families),
        help="Space-separated family names (default: all families of this backend)",
    )
    parser.add_argument(
        "--max-total-weight",
        type=int,
        default=DEFAULT_MAX_TOTAL_WEIGHT,
        help="Bound on the total parameter weight, e.g. wt(k)+m",
    )
    parser.add_argument("--max-m", type=int, help="Bound on the shift weight m")
    parser.add_argument(
        "--max-depth", type=int, help="Bound on the depth of index parameters"
    )
    parser.add_argument(
        "--jobs", type=int, default=DEFAULT_JOBS, help="Worker processes"
    )
    parser.add_argument("--out", help="Path of the JSON report to write")


def add_verify_parsers(subparsers):
    parser = subparsers.add_parser(
        "verify-real", help="Numerically check the real relation families"
    )
    _add_bound_arguments(parser, REAL_FAMILIES)
    parser.add_argument(
        "--N", type=int, default=DEFAULT_TRUNCATION, help="Truncation bound"
    )
    parser.add_argument(
        "--tol", type=float, help="Tolerance (default: per family, 1e-4 or 1e-3)"
    )
    parser.add_argument(
        "--strict-tolerance",
        action="store_true",
        help="Compare against --tol alone, without the truncation error estimates",
    )
    parser.set_defaults(
        handler=lambda args: verify_real_with_args(
            args.families,
            args.max_total_weight,
            args.max_m,
            args.max_depth,
            args.N,
            args.tol,
            args.strict_tolerance,
            args.jobs,
            args.out,
        )
    )

    parser = subparsers.add_parser(
        "verify-modp", help="Check the finite relation families modulo primes"
    )
    _add_bound_arguments(parser, FINITE_FAMILIES)
    parser.add_argument("--pmin", type=int, default=DEFAULT_PRIME_MIN)
    parser.add_argument("--pmax", type=int, default=DEFAULT_PRIME_MAX)
    parser.add_argument(
        "--no-skip-small",
        dest="skip_small",
        action="store_false",
        help="Check primes p > weight + 1 instead of p > weight + 2",
    )
    parser.set_defaults(
        handler=lambda args: verify_modp_with_args(
            args.families,
            args.max_total_weight,
            args.max_m,
            args.max_depth,
            args.pmin,
            args.pmax,
            args.skip_small,
            args.jobs,
            args.out,
        )
    )
