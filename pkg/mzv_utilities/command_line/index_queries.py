from mzv_utilities.common import domain_error
from mzv_utilities.constants import EMPTY_INDEX_TEXT
from mzv_utilities.index_algebra import harmonic, shuffle, stuffle
from mzv_utilities.index_core import dagger, format_index, hoffman_dual, parse_index
from mzv_utilities.relation_families import FAMILY_PARAMETERS, build, check_family

PRODUCTS = {
    "shuffle": shuffle,
    "harmonic": harmonic,
    "stuffle": stuffle,
}


def _index_text(k):
    return format_index(k) or EMPTY_INDEX_TEXT


def dual_with_args(index_text):
    """Print the dual index k† of an admissible index"""
    print(_index_text(dagger(parse_index(index_text))))
    return 0


def hdual_with_args(index_text):
    """Print Hoffman's dual k^∨ of a nonempty index"""
    print(_index_text(hoffman_dual(parse_index(index_text))))
    return 0


def product_with_args(product_type, left_text, right_text):
    """Print the expansion of an index product, e.g. `(2,1) + (1,2) - (3)`"""
    product = PRODUCTS[product_type]
    print(product(parse_index(left_text), parse_index(right_text)))
    return 0


def relation_params_from_flags(family, k=None, l=None, m=None, r=None, i=None):
    """Map the generic --k/--l/--m/--r/--i flags onto a family's own parameters

    Sum families read their weight from --k as a single integer; star_depth2
    and main2_depth2 read their depth-2 index (k1, k2) or (i, j) from --k.
    """
    check_family(family)
    names = FAMILY_PARAMETERS[family]
    params = {"k": k, "l": l, "m": m, "r": r, "i": i}
    if names == ("k1", "k2"):
        k1, k2 = _depth2(family, k)
        return {"k1": k1, "k2": k2}
    if names == ("i", "j", "m"):
        first, second = _depth2(family, k)
        return {"i": first, "j": second, "m": m}
    return {name: params[name] for name in names}


def _depth2(family, k):
    parts = parse_index(k or "")
    if len(parts) != 2:
        raise domain_error(
            f"{family} reads a depth-2 index from --k, got `{k}`", family=family, k=k
        )
    return parts


def relation_with_args(family, k=None, l=None, m=None, r=None, i=None):
    """Print the instance id and both sides of one relation instance"""
    params = relation_params_from_flags(family, k=k, l=l, m=m, r=r, i=i)
    inst = build(family, params)
    print(inst.instance_id)
    print(f"{inst.describe()}    [{inst.value_space}, weight {inst.weight}]")
    return 0


def add_index_query_parsers(subparsers):
    parser = subparsers.add_parser(
        "dual", help="Dual index k† of an admissible index"
    )
    parser.add_argument("index", help="Comma-separated index, e.g. 1,2")
    parser.set_defaults(handler=lambda args: dual_with_args(args.index))

    parser = subparsers.add_parser("hdual", help="Hoffman's dual of a nonempty index")
    parser.add_argument("index", help="Comma-separated index, e.g. 1,2")
    parser.set_defaults(handler=lambda args: hdual_with_args(args.index))

    parser = subparsers.add_parser("product", help="Expand an index product")
    parser.add_argument(
        "--type",
        dest="product_type",
        choices=sorted(PRODUCTS),
        default="shuffle",
        help="shuffle (ш), harmonic (⊛, subtracted merge) or stuffle (∗, added merge)",
    )
    parser.add_argument("left", help="Comma-separated index")
    parser.add_argument("right", help="Comma-separated index")
    parser.set_defaults(
        handler=lambda args: product_with_args(args.product_type, args.left, args.right)
    )

    parser = subparsers.add_parser(
        "relation", help="Print both sides of one relation instance"
    )
    parser.add_argument("--family", required=True, help="Relation family name")
    parser.add_argument(
        "--k",
        help="Index (comma-separated), or the weight for the sum families",
    )
    parser.add_argument("--l", help="Second index of the product families")
    parser.add_argument("--m", type=int, help="Total shift weight")
    parser.add_argument("--r", type=int, help="Depth, for the sum families")
    parser.add_argument(
        "--i", type=int, help="Slot of the sum_finite families, or i of star_ones"
    )
    parser.set_defaults(
        handler=lambda args: relation_with_args(
            args.family, k=args.k, l=args.l, m=args.m, r=args.r, i=args.i
        )
    )
