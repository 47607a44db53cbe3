"""Truncated nested series for ζ and ζ* on admissible indices.

The partial sum is the prefix-sum dynamic program

    S_0(n) = 1,    S_j(n) = Σ_{m ≤ n} S_{j-1}(m - [not star]) / m^{k_j}

streamed over n in chunks of SERIES_CHUNK_SIZE, so memory is O(depth·chunk)
for any truncation bound N. Cumulative sums are plain numpy cumsums inside
blocks of SERIES_BLOCK_SIZE, stitched together with Neumaier summation.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .common import ConfigError, domain_error
from .constants import (
    DEFAULT_TOLERANCE,
    DEFAULT_TRUNCATION,
    FAMILY_TOLERANCES,
    MIN_TRUNCATION,
    REAL_SPACES,
    REAL_ZETA_STAR,
    SERIES_BLOCK_SIZE,
    SERIES_CHUNK_SIZE,
)
from .index_algebra import Idx, Prod, Zconst
from .index_core import is_admissible, render_index
from .logger import logger
from .reports import CheckResult, status_for


@dataclass(frozen=True)
class ApproxReal:
    value: float
    err: float

    def __str__(self):
        return f"{self.value!r} ± {self.err:.1e}"


class CompensatedSum:
    """Neumaier's variant of Kahan summation"""

    def __init__(self, total=0.0, compensation=0.0):
        self.total = float(total)
        self.compensation = float(compensation)

    def add(self, x):
        x = float(x)
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.compensation += (self.total - t) + x
        else:
            self.compensation += (x - t) + self.total
        self.total = t
        return self

    @property
    def value(self):
        return self.total + self.compensation


def compensated_cumsum(terms, carry=None, block_size=SERIES_BLOCK_SIZE):
    """Running sums of `terms` starting from `carry`

    Args:
        terms (numpy.ndarray): 1-d float array
        carry (CompensatedSum): Sum of everything before `terms`; advanced in place
        block_size (int): Length of the blocks summed with a plain cumsum

    Returns:
        numpy.ndarray: carry + terms[0], carry + terms[0] + terms[1], ...
    """
    if carry is None:
        carry = CompensatedSum()
    size = len(terms)
    if not size:
        return np.empty(0)
    blocks = -(-size // block_size)
    padded = np.zeros(blocks * block_size)
    padded[:size] = terms
    within = np.cumsum(padded.reshape(blocks, block_size), axis=1)
    offsets = np.empty(blocks)
    for b, block_total in enumerate(within[:, -1]):
        offsets[b] = carry.value
        carry.add(block_total)
    return (within + offsets[:, None]).ravel()[:size]


def _check_truncation(N):
    if N < MIN_TRUNCATION:
        message = f"Truncation bound N={N} is below the minimum {MIN_TRUNCATION}"
        logger.error(message)
        raise ConfigError(message, {"N": N})


@lru_cache(maxsize=None)
def _nested_partial_sums(k, star, N):
    """Return (S_r(N), S_{r-1}(N)) for a nonempty index"""
    depth = len(k)
    carries = [CompensatedSum() for _ in range(depth)]
    # S_j(start - 1) per level, level 0 being the constant 1
    last = [1.0] + [0.0] * depth
    for start in range(1, N + 1, SERIES_CHUNK_SIZE):
        stop = min(start + SERIES_CHUNK_SIZE, N + 1)
        n = np.arange(start, stop, dtype=np.float64)
        previous = np.ones(stop - start)
        new_last = list(last)
        for j, k_j in enumerate(k, start=1):
            if star:
                inner = previous
            else:
                inner = np.concatenate(([last[j - 1]], previous[:-1]))
            current = compensated_cumsum(inner / n ** k_j, carries[j - 1])
            new_last[j] = current[-1]
            previous = current
        last = new_last
    return last[depth], last[depth - 1]


def eval_nested(k, star=False, N=DEFAULT_TRUNCATION):
    """Partial sum of ζ(k) (or ζ*(k)) over chains bounded by N

    The error estimate 2·S_{r-1}(N)·N^(1-k_r)/(k_r - 1) bounds the tail of the
    outer variable heuristically; it is an estimate, not a proof. Both the
    partial sum and the true value lie on the same side, the partial sum
    being smaller.

    Args:
        k (tuple): Admissible index
        star (bool): Weak (≤) chains instead of strict ones
        N (int): Truncation bound, at least MIN_TRUNCATION

    Returns:
        ApproxReal: ζ(∅) = ζ*(∅) = 1 exactly
    """
    k = tuple(k)
    if not is_admissible(k):
        raise domain_error(
            f"ζ{'*' if star else ''}{render_index(k)} diverges: index must be admissible",
            index=k,
        )
    _check_truncation(N)
    if not k:
        return ApproxReal(1.0, 0.0)
    value, outer = _nested_partial_sums(k, bool(star), int(N))
    k_r = k[-1]
    err = 2.0 * outer * float(N) ** (1 - k_r) / (k_r - 1)
    return ApproxReal(float(value), float(err))


def _coefficient(c):
    return float(Fraction(c)) if isinstance(c, Fraction) else float(c)


def _eval_term(term, star, N):
    if isinstance(term, Idx):
        return eval_nested(term.parts, star, N)
    if isinstance(term, Prod):
        a = eval_nested(term.left, star, N)
        b = eval_nested(term.right, star, N)
        err = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err
        return ApproxReal(a.value * b.value, err)
    if isinstance(term, Zconst):
        raise domain_error(f"{term} has no value on the real side", term=str(term))
    raise domain_error(f"Unknown term `{term}`", term=str(term))


def eval_side(x, value_space, N=DEFAULT_TRUNCATION):
    """Evaluate a LinComb in real_zeta or real_zeta_star

    Returns:
        ApproxReal: err = Σ |coefficient|·(term err); the empty LinComb is 0
    """
    if value_space not in REAL_SPACES:
        raise domain_error(
            f"`{value_space}` is not a real value space", value_space=value_space
        )
    star = value_space == REAL_ZETA_STAR
    total = CompensatedSum()
    err = CompensatedSum()
    for term, coefficient in x.items():
        approx = _eval_term(term, star, N)
        c = _coefficient(coefficient)
        total.add(c * approx.value)
        err.add(abs(c) * approx.err)
    return ApproxReal(total.value, err.value)


def family_tolerance(family):
    return FAMILY_TOLERANCES.get(family, DEFAULT_TOLERANCE)


def check_real(inst, N=DEFAULT_TRUNCATION, tol=None, strict_tolerance=False):
    """Evaluate both sides of a real RelationInstance and compare them

    The recorded tolerance is `tol + lhs.err + rhs.err` unless
    `strict_tolerance` is set; the status is pass iff the absolute difference
    is at most the recorded tolerance.

    Args:
        inst (RelationInstance): An instance in a real value space
        N (int): Truncation bound
        tol (float): Base tolerance, defaulting per family
        strict_tolerance (bool): Compare against `tol` alone

    Returns:
        CheckResult
    """
    if inst.value_space not in REAL_SPACES:
        raise domain_error(
            f"{inst.instance_id} lives in `{inst.value_space}`, not a real value space",
            instance_id=inst.instance_id,
        )
    base = family_tolerance(inst.family) if tol is None else float(tol)
    lhs = eval_side(inst.lhs, inst.value_space, N)
    rhs = eval_side(inst.rhs, inst.value_space, N)
    difference = abs(lhs.value - rhs.value)
    tolerance = base if strict_tolerance else base + lhs.err + rhs.err
    if base < difference <= tolerance:
        logger.warning(
            f"{inst.instance_id}: difference {difference:.3e} passes only with "
            f"the truncation estimate added to the tolerance ({tolerance:.3e})"
        )
    return CheckResult(
        instance_id=inst.instance_id,
        family=inst.family,
        params=inst.params,
        space=inst.value_space,
        lhs_expr=str(inst.lhs),
        rhs_expr=str(inst.rhs),
        lhs=lhs.value,
        rhs=rhs.value,
        difference=difference,
        tolerance=tolerance,
        lhs_err=lhs.err,
        rhs_err=rhs.err,
        status=status_for(difference <= tolerance),
    )
