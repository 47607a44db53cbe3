from math import comb

from .common import domain_error
from .index_core import render_index

C1 = "c1"
C2 = "c2"


def binom_conv(a, b):
    """Binomial coefficient with the convention binom(n - 1, n) = [n == 0]

    Args:
        a (int): Upper argument, a >= b - 1
        b (int): Lower argument, b >= 0

    Returns:
        int: binom(a, b) for a >= b >= 0; for a = b - 1, 1 if b == 0 else 0
    """
    if b < 0 or a < b - 1:
        raise domain_error(
            f"binom({a}, {b}) is outside the range a >= b - 1, b >= 0", a=a, b=b
        )
    if a == b - 1:
        return 1 if b == 0 else 0
    return comb(a, b)


def ohno_coefficient(kind, k, e):
    """The coefficients c1 (classical star) and c2 (finite star) of Ohno-type sums

    c1(k, e) = prod_i binom(k_i + e_i + [i = 1] - 2, e_i)
    c2(k, e) = prod_i binom(k_i + e_i + [i = 1] + [i = r] - 2, e_i)

    Args:
        kind (str): "c1" or "c2"
        k (tuple): Nonempty index
        e (tuple): Nonnegative shift vector of the same depth

    Returns:
        int: The coefficient
    """
    if kind not in (C1, C2):
        raise domain_error(f"Unknown Ohno coefficient kind `{kind}`", kind=kind)
    r = len(k)
    if r == 0 or len(e) != r:
        raise domain_error(
            f"Ohno coefficient needs a nonempty index and a shift of equal depth, "
            f"got {render_index(k)} and {tuple(e)}",
            index=k,
            shift=tuple(e),
        )
    coefficient = 1
    for i, (k_i, e_i) in enumerate(zip(k, e), start=1):
        offset = (i == 1) - 2
        if kind == C2:
            offset += i == r
        coefficient *= binom_conv(k_i + e_i + offset, e_i)
        if not coefficient:
            break
    return coefficient


def compositions(m, r):
    """All sequences of r nonnegative integers summing to m

    Ordered with the first coordinate descending (then recursively the rest),
    so compositions(1, 2) is [(1, 0), (0, 1)]. The empty sequence is the only
    composition of 0 into 0 parts.

    Returns:
        list: tuples of length r; there are binom(m + r - 1, r - 1) of them
    """
    if m < 0 or r < 0:
        raise domain_error(f"compositions({m}, {r}) needs m, r >= 0", m=m, r=r)
    if r == 0:
        return [()] if m == 0 else []
    if r == 1:
        return [(m,)]
    result = []
    for first in range(m, -1, -1):
        for rest in compositions(m - first, r - 1):
            result.append((first,) + rest)
    return result


def lemma33_check(m, n, i):
    """Evaluate both alternating binomial sums and their closed forms exactly

    sum_a (-1)^a binom(m+n, a+i) binom(a+i-1, a) binom(m+n-a-i, m-a) = binom(m+n, m+i)
    sum_a (-1)^a binom(m+n, a+i-1) binom(a+i-1, a) binom(m+n-a-i, m-a)
        = (-1)^m binom(m+n, i-1)

    with a running over 0..m.

    Returns:
        dict: lhs1, rhs1, lhs2, rhs2 as ints
    """
    if m < 1 or n < 1 or not 1 <= i <= n:
        raise domain_error(
            f"lemma33_check({m}, {n}, {i}) needs m, n >= 1 and 1 <= i <= n",
            m=m,
            n=n,
            i=i,
        )
    total = m + n
    lhs1 = lhs2 = 0
    for a in range(m + 1):
        sign = -1 if a % 2 else 1
        common = comb(a + i - 1, a) * comb(total - a - i, m - a)
        lhs1 += sign * comb(total, a + i) * common
        lhs2 += sign * comb(total, a + i - 1) * common
    return {
        "lhs1": lhs1,
        "rhs1": comb(total, m + i),
        "lhs2": lhs2,
        "rhs2": (-1) ** m * comb(total, i - 1),
    }
