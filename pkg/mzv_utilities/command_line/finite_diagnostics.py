from mzv_utilities.constants import DEFAULT_PRIME_MAX, DEFAULT_PRIME_MIN
from mzv_utilities.fmzv_modp import PrimeWindow, bernoulli_mod_p, remark_diagnostic
from mzv_utilities.reports import write_table


def bernoulli_modp_with_args(n, p):
    """Print B_n mod p"""
    print(bernoulli_mod_p(n, p))
    return 0


def diagnose_remark_with_args(k, pmin, pmax, out=None):
    """
    Print ζ_A(1, k-1) next to Z_A(k) for each prime p > k + 1 in [pmin, pmax],
    and the ratio between them when it is the same at every prime. Never fails
    on the data itself.
    """
    table, constant_ratio = remark_diagnostic(k, PrimeWindow(pmin, pmax))
    print(table.to_string(index=False))
    if constant_ratio is None:
        print("no constant ratio")
    else:
        print(f"constant ratio: {constant_ratio}")
    if out:
        write_table(table, out)
    return 0


def add_diagnostic_parsers(subparsers):
    parser = subparsers.add_parser("bernoulli-modp", help="Bernoulli number B_n mod p")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--p", type=int, required=True)
    parser.set_defaults(handler=lambda args: bernoulli_modp_with_args(args.n, args.p))

    parser = subparsers.add_parser(
        "diagnose-remark", help="Compare ζ_A(1,k-1) with Z_A(k) prime by prime"
    )
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--pmin", type=int, default=DEFAULT_PRIME_MIN)
    parser.add_argument("--pmax", type=int, default=DEFAULT_PRIME_MAX)
    parser.add_argument("--out", help="Write the table as .csv, or as JSON otherwise")
    parser.set_defaults(
        handler=lambda args: diagnose_remark_with_args(
            args.k, args.pmin, args.pmax, args.out
        )
    )
