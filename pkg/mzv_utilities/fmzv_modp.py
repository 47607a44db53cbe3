"""Finite multiple zeta(-star) values, Bernoulli numbers and Z(k) modulo primes.

Everything here is exact integer arithmetic on residues in [0, p). A relation
in the finite value spaces is checked prime by prime over a PrimeWindow.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pandas as pd

from .common import ConfigError, domain_error
from .constants import (
    DEFAULT_PRIME_MAX,
    DEFAULT_PRIME_MIN,
    FINITE_SPACES,
    FINITE_ZETA_STAR,
    MIN_PRIME,
)
from .index_algebra import Idx, Prod, Zconst
from .index_core import render_index
from .logger import logger
from .reports import CheckResult, status_for


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise domain_error(
                    f"Cannot combine residues mod {self.modulus} and mod {other.modulus}"
                )
            return other.value
        return other

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def inverse(self):
        return Residue(mod_inverse(self.value, self.modulus), self.modulus)

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_in_window(p_min, p_max):
    """Primes p with p_min <= p <= p_max, ascending (sieve of Eratosthenes)"""
    if p_max < 2 or p_max < p_min:
        return []
    sieve = np.ones(p_max + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(p_max ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.nonzero(sieve)[0] if p >= p_min]


def _require_prime(p):
    if not is_prime(p):
        raise domain_error(f"Modulus {p} is not a prime", p=p)


def mod_inverse(a, p):
    """Inverse of a modulo p by the extended Euclidean algorithm"""
    a %= p
    if a == 0:
        raise domain_error(f"0 has no inverse modulo {p}", a=a, p=p)
    prev_x, x = 1, 0
    r0, r1 = a, p
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        prev_x, x = x, prev_x - q * x
    if r0 != 1:
        raise domain_error(f"{a} is not invertible modulo {p}", a=a, p=p)
    return prev_x % p


@lru_cache(maxsize=None)
def inverse_table(p):
    """inv[m] = m^{-1} mod p for 1 <= m < p (inv[0] is an unused 0)"""
    _require_prime(p)
    inv = [0, 1] + [0] * (p - 2)
    for m in range(2, p):
        inv[m] = (-(p // m) * inv[p % m]) % p
    return tuple(inv)


@lru_cache(maxsize=None)
def _harmonic_chain(k, p, star):
    inv = inverse_table(p)
    # previous[n] holds S_{j-1}(n) for 0 <= n < p
    previous = [1] * p
    for k_j in k:
        current = [0] * p
        running = 0
        for n in range(1, p):
            below = previous[n] if star else previous[n - 1]
            running = (running + below * pow(inv[n], k_j, p)) % p
            current[n] = running
        previous = current
    return previous[p - 1]


def eval_fmzv_p(k, p, star=False):
    """ζ_A(k) (or ζ_A*(k)) at the prime p

    Sum over chains 1 <= m_1 < ... < m_r < p (≤ for star) of
    1/(m_1^{k_1} ... m_r^{k_r}) mod p, by the prefix-sum dynamic program.

    Args:
        k (tuple): Index; the empty index gives 1
        p (int): Prime modulus
        star (bool): Weak chains instead of strict ones

    Returns:
        Residue
    """
    _require_prime(p)
    k = tuple(k)
    if not k:
        return Residue(1, p)
    return Residue(_harmonic_chain(k, p, bool(star)), p)


@lru_cache(maxsize=None)
def _bernoulli_table(p):
    """B_0..B_{p-2} mod p by Akiyama–Tanigawa in F_p (B_1 = +1/2 here)"""
    inv = inverse_table(p)
    a = [0] * (p - 1)
    table = []
    for m in range(p - 1):
        a[m] = inv[m + 1]
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j]) % p
        table.append(a[0])
    return tuple(table)


def bernoulli_mod_p(n, p):
    """B_n mod p for 0 <= n <= p - 2, with B_1 = -1/2

    Raises:
        DomainError: for n >= p - 1, where p divides the denominator of B_n
    """
    _require_prime(p)
    if n < 0 or n > p - 2:
        raise domain_error(
            f"B_{n} mod {p} is undefined: need 0 <= n <= p - 2", n=n, p=p
        )
    value = _bernoulli_table(p)[n]
    if n == 1:
        value = -value
    return Residue(value, p)


def bernoulli_exact(n):
    """Exact rational B_0..B_n (B_1 = -1/2) by Akiyama–Tanigawa with Fractions"""
    if n < 0:
        raise domain_error(f"bernoulli_exact needs n >= 0, got {n}", n=n)
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def z_a(k, p):
    """Z_A(k) at p: B_{p-k}/k mod p, for k >= 2 and p > k + 1"""
    if k < 2 or p <= k + 1:
        raise domain_error(f"Z({k}) mod {p} needs k >= 2 and p > k + 1", k=k, p=p)
    return bernoulli_mod_p(p - k, p) * mod_inverse(k, p)


@dataclass(frozen=True)
class PrimeWindow:
    """Inclusive prime bounds plus the per-instance small-prime skip rule

    With skip_small an instance of weight w is checked at primes p > w + 2;
    without it at primes p > w + 1, the least bound at which every Z(k) with
    k <= w is defined.
    """

    p_min: int = DEFAULT_PRIME_MIN
    p_max: int = DEFAULT_PRIME_MAX
    skip_small: bool = True

    def __post_init__(self):
        if self.p_min < MIN_PRIME or self.p_max < self.p_min:
            message = (
                f"Invalid prime window [{self.p_min}, {self.p_max}]: "
                f"need {MIN_PRIME} <= pmin <= pmax"
            )
            logger.error(message)
            raise ConfigError(message, {"p_min": self.p_min, "p_max": self.p_max})

    def primes(self):
        return primes_in_window(self.p_min, self.p_max)

    def threshold(self, weight):
        return weight + 2 if self.skip_small else weight + 1

    def retained(self, weight):
        bound = self.threshold(weight)
        return [p for p in self.primes() if p > bound]


def _coefficient_mod(c, p):
    c = Fraction(c)
    return c.numerator * mod_inverse(c.denominator, p) % p


def _eval_term_modp(term, star, p):
    if isinstance(term, Idx):
        return eval_fmzv_p(term.parts, p, star).value
    if isinstance(term, Zconst):
        return z_a(term.k, p).value
    if isinstance(term, Prod):
        left = eval_fmzv_p(term.left, p, star).value
        return left * eval_fmzv_p(term.right, p, star).value % p
    raise domain_error(f"Unknown term `{term}`", term=str(term))


def eval_side_modp(x, value_space, p):
    """Evaluate a LinComb in finite_zeta or finite_zeta_star at the prime p"""
    if value_space not in FINITE_SPACES:
        raise domain_error(
            f"`{value_space}` is not a finite value space", value_space=value_space
        )
    star = value_space == FINITE_ZETA_STAR
    total = 0
    for term, coefficient in x.items():
        total += _coefficient_mod(coefficient, p) * _eval_term_modp(term, star, p)
    return Residue(total, p)


def check_modp(inst, window):
    """Check a finite RelationInstance at every retained prime of `window`

    Args:
        inst (RelationInstance): An instance in a finite value space
        window (PrimeWindow)

    Returns:
        CheckResult: pass iff lhs ≡ rhs at every retained prime; each failing
        prime is recorded as a witness, in ascending order
    """
    if inst.value_space not in FINITE_SPACES:
        raise domain_error(
            f"{inst.instance_id} lives in `{inst.value_space}`, not a finite value space",
            instance_id=inst.instance_id,
        )
    primes = window.retained(inst.weight)
    if not primes:
        message = (
            f"No primes left in [{window.p_min}, {window.p_max}] for "
            f"{inst.instance_id} (weight {inst.weight} skips p <= "
            f"{window.threshold(inst.weight)})"
        )
        logger.error(message)
        raise ConfigError(message, {"instance_id": inst.instance_id})
    witnesses = []
    for p in primes:
        lhs = eval_side_modp(inst.lhs, inst.value_space, p)
        rhs = eval_side_modp(inst.rhs, inst.value_space, p)
        if lhs != rhs:
            witnesses.append({"p": p, "lhs": lhs.value, "rhs": rhs.value})
    if witnesses:
        logger.warning(
            f"{inst.instance_id} fails at p = "
            f"{', '.join(str(w['p']) for w in witnesses)}"
        )
    return CheckResult(
        instance_id=inst.instance_id,
        family=inst.family,
        params=inst.params,
        space=inst.value_space,
        lhs_expr=str(inst.lhs),
        rhs_expr=str(inst.rhs),
        lhs=witnesses[0]["lhs"] if witnesses else None,
        rhs=witnesses[0]["rhs"] if witnesses else None,
        primes_checked=tuple(primes),
        witnesses=witnesses,
        status=status_for(not witnesses),
    )


def _symmetric(value, modulus):
    return value - modulus if value > modulus // 2 else value


def crt_symmetric(residues):
    """The integer of least magnitude with the given residues at distinct primes

    Args:
        residues (list): (p, r) pairs

    Returns:
        int: x with x ≡ r mod p for every pair, in (-M/2, M/2] for M the product
    """
    x, modulus = 0, 1
    for p, r in residues:
        t = (r - x) * mod_inverse(modulus % p, p) % p
        x += modulus * t
        modulus *= p
    return _symmetric(x, modulus)


def _common_ratio(rows):
    defined = [(row["p"], row["ratio"]) for row in rows if row["ratio"] is not None]
    if len(defined) < 2:
        return None
    c = crt_symmetric(defined)
    # fixed only if the largest prime does not move it
    if crt_symmetric(defined[:-1]) != c:
        return None
    return c


def remark_diagnostic(k, window):
    """ζ_A(1, k-1) next to Z_A(k) at every prime p > k + 1 of the window

    No pass/fail judgment is made. Where Z_A(k) is nonzero the ratio is the
    residue ζ_A(1, k-1)/Z_A(k) mod p. The common ratio is the integer c of least
    magnitude with ζ_A(1, k-1) ≡ c·Z_A(k) at every prime where Z_A(k) is
    nonzero, recovered from all those primes together. It is None when fewer
    than two primes are usable, or when leaving out the largest of them gives
    a different c.

    Args:
        k (int): At least 2
        window (PrimeWindow): Its skip rule is not applied

    Returns:
        tuple: (pandas.DataFrame with columns p, zeta_a, z_a, ratio;
        the common ratio, or None)
    """
    if k < 2:
        raise domain_error(f"remark_diagnostic needs k >= 2, got {k}", k=k)
    index = (1, k - 1)
    rows = []
    for p in window.primes():
        if p <= k + 1:
            continue
        zeta = eval_fmzv_p(index, p).value
        z = z_a(k, p).value
        ratio = zeta * mod_inverse(z, p) % p if z else None
        rows.append({"p": p, "zeta_a": zeta, "z_a": z, "ratio": ratio})
    if not rows:
        message = f"No primes p > {k + 1} in [{window.p_min}, {window.p_max}]"
        logger.error(message)
        raise ConfigError(message, {"k": k})
    table = pd.DataFrame(rows, columns=["p", "zeta_a", "z_a", "ratio"])
    table["ratio"] = pd.Series([row["ratio"] for row in rows], dtype=object)
    constant_ratio = _common_ratio(rows)
    if constant_ratio is not None:
        logger.info(
            f"ζ_A{render_index(index)} ≡ {constant_ratio}·Z_A({k}) at every prime "
            "where Z_A is nonzero"
        )
    return table, constant_ratio
