"""Indices and the structural maps on them.

An index is stored as a plain tuple of positive ints, so it hashes, compares and
sorts for free. Every map here is a pure function of its arguments.
"""
from itertools import combinations

from .common import IndexParseError, domain_error
from .constants import EMPTY_INDEX_TEXT
from .logger import logger

# letters of the binary word used for the dagger dual
LETTER_A = "a"
LETTER_B = "b"
_SWAP_LETTERS = str.maketrans({LETTER_A: LETTER_B, LETTER_B: LETTER_A})

# separators of the Hoffman dual: "merge" sits inside a component, "cut" between two
MERGE = "+"
CUT = ","


def parse_index(text):
    """Parse the canonical comma-separated text form of an index

    Whitespace around tokens is ignored. The empty string, and the rendered
    empty index "()", both parse to the empty index.

    Args:
        text (str): e.g. "1,2" or ""

    Returns:
        tuple: The index, e.g. (1, 2)

    Raises:
        IndexParseError: naming the first token that is not a positive integer
    """
    text = text.strip()
    if text in ("", EMPTY_INDEX_TEXT):
        return ()
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            value = int(token, 10)
        except ValueError:
            message = f"Index component `{token}` in `{text}` is not a decimal integer"
            logger.error(message)
            raise IndexParseError(message, token)
        if value < 1:
            message = (
                f"Index component `{token}` in `{text}` is invalid: "
                "component must be ≥ 1"
            )
            logger.error(message)
            raise IndexParseError(message, token)
        parts.append(value)
    return tuple(parts)


def format_index(k):
    """Canonical text form: comma-separated, no spaces, "" for the empty index"""
    return ",".join(str(c) for c in k)


def render_index(k):
    """Report form of an index: "(1,2)", with "()" for the empty index"""
    return f"({format_index(k)})"


def make_index(parts):
    """Validate `parts` and return them as an index tuple"""
    k = tuple(int(c) for c in parts)
    for c in k:
        if c < 1:
            raise domain_error(
                f"Index {k} has component {c}: component must be ≥ 1", index=k
            )
    return k


def weight(k):
    return sum(k)


def depth(k):
    return len(k)


def is_admissible(k):
    """Empty, or last component greater than 1"""
    return not k or k[-1] >= 2


def classify(k):
    return {"weight": weight(k), "depth": depth(k), "admissible": is_admissible(k)}


def ones(m):
    """The index ({1}^m)"""
    return (1,) * m


def reverse(k):
    """The operator R"""
    return tuple(reversed(k))


def raise_last(k):
    """The operator P: add one to the last component of a nonempty index"""
    if not k:
        raise domain_error("P is only defined for nonempty indices", index=k)
    return k[:-1] + (k[-1] + 1,)


def oplus(k, e):
    """Componentwise sum of an index and a sequence of nonnegative integers"""
    if len(k) != len(e):
        raise domain_error(
            f"Cannot add {tuple(e)} to {render_index(k)}: depths differ "
            f"({len(e)} vs {len(k)})",
            index=k,
            shift=tuple(e),
        )
    return tuple(c + s for c, s in zip(k, e))


def _to_word(k):
    return "".join(LETTER_A + LETTER_B * (c - 1) for c in k)


def _from_word(word):
    parts = []
    for letter in word:
        if letter == LETTER_A:
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


def dagger(k):
    """The dual index of an admissible index

    Each component c becomes the block "a" + "b" * (c - 1); the dual is read off
    the reversed word with the two letters swapped. An admissible word ends in
    "b", so the dual word starts with "a" and decodes again.

    Args:
        k (tuple): An admissible index

    Returns:
        tuple: k† (the empty index is its own dual)
    """
    if not is_admissible(k):
        raise domain_error(
            f"Dual index {render_index(k)}†: index must be admissible", index=k
        )
    return _from_word(_to_word(k)[::-1].translate(_SWAP_LETTERS))


def _to_separators(k):
    separators = []
    for position, c in enumerate(k):
        if position:
            separators.append(CUT)
        separators.extend([MERGE] * (c - 1))
    return separators


def _from_separators(separators):
    parts = [1]
    for separator in separators:
        if separator == MERGE:
            parts[-1] += 1
        else:
            parts.append(1)
    return tuple(parts)


def hoffman_dual(k):
    """Hoffman's dual of a nonempty index

    Write the weight as a row of 1s; between consecutive 1s there is either a
    "+" (same component) or a "," (next component). The dual flips every
    separator, so (2) = (1+1) maps to (1,1) and (k) maps to ({1}^k).
    """
    if not k:
        raise domain_error(
            "Hoffman's dual is only defined for nonempty indices", index=k
        )
    flipped = [CUT if s == MERGE else MERGE for s in _to_separators(k)]
    return _from_separators(flipped)


def indices_of_weight(w, depth_=None):
    """All indices of weight `w` (optionally of one depth), in index order

    Index order is depth ascending, then components ascending. Weight 0 has
    only the empty index.
    """
    if w == 0:
        if depth_ in (None, 0):
            yield ()
        return
    depths = range(1, w + 1) if depth_ is None else [depth_]
    for r in depths:
        if r < 1 or r > w:
            continue
        # bars between the w unit cells, stars-and-bars style
        for cuts in combinations(range(1, w), r - 1):
            bounds = (0,) + cuts + (w,)
            yield tuple(bounds[j + 1] - bounds[j] for j in range(r))


def all_indices(max_weight, min_weight=0, admissible_only=False, max_depth=None):
    """Every index with min_weight <= weight <= max_weight, in index order"""
    for w in range(min_weight, max_weight + 1):
        for k in indices_of_weight(w):
            if max_depth is not None and len(k) > max_depth:
                continue
            if admissible_only and not is_admissible(k):
                continue
            yield k


def index_sort_key(k):
    return (weight(k), depth(k), k)
