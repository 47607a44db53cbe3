"""The rational span of indices, its products, and the two product lemmas.

Coefficients are ints whenever they are integral and `Fraction`s otherwise; all
builders in this package only ever produce ints, so the Fraction path is rare.
"""
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Tuple

from .combinatorics import C2, compositions, ohno_coefficient
from .common import DomainError, domain_error
from .index_core import (
    dagger,
    hoffman_dual,
    ones,
    oplus,
    raise_last,
    render_index,
    reverse,
)

PRODUCT_CACHE_SIZE = 2 ** 16


class Idx(NamedTuple):
    parts: Tuple[int, ...]

    def __str__(self):
        return render_index(self.parts)


class Zconst(NamedTuple):
    """The constant Z(k): B_{p-k}/k mod p on the finite side"""

    k: int

    def __str__(self):
        return f"Z({self.k})"


class Prod(NamedTuple):
    """Product of the values of two indices, in the value space of the relation"""

    left: Tuple[int, ...]
    right: Tuple[int, ...]

    def __str__(self):
        return f"{render_index(self.left)}*{render_index(self.right)}"


def term_weight(term):
    if isinstance(term, Idx):
        return sum(term.parts)
    if isinstance(term, Zconst):
        return term.k
    return sum(term.left) + sum(term.right)


def term_sort_key(term):
    """Idx by depth descending then components descending, then Z(k), then products"""
    if isinstance(term, Idx):
        return (0, -len(term.parts), tuple(-c for c in term.parts))
    if isinstance(term, Zconst):
        return (1, term.k, ())
    return (2, term.left, term.right)


def _normalize(coefficient):
    if isinstance(coefficient, Fraction) and coefficient.denominator == 1:
        return coefficient.numerator
    return coefficient


class LinComb:
    """A finite Q-linear combination of terms with no zero coefficients stored"""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        self._terms = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for term, coefficient in items:
            self._add_term(term, coefficient)

    @classmethod
    def of_index(cls, k, coefficient=1):
        return cls([(Idx(tuple(k)), coefficient)])

    @classmethod
    def of_indices(cls, indices):
        """Sum of the given indices, each with coefficient 1 (repeats add up)"""
        return cls((Idx(tuple(k)), 1) for k in indices)

    def _add_term(self, term, coefficient):
        if coefficient == 0:
            return
        if not isinstance(coefficient, (int, Fraction)):
            coefficient = Fraction(coefficient)
        total = _normalize(self._terms.get(term, 0) + coefficient)
        if total == 0:
            del self._terms[term]
        else:
            self._terms[term] = total

    def items(self):
        """(term, coefficient) pairs in canonical term order"""
        return sorted(self._terms.items(), key=lambda item: term_sort_key(item[0]))

    def terms(self):
        return [term for term, _ in self.items()]

    def coefficient(self, term):
        return self._terms.get(term, 0)

    def index_items(self):
        """(index tuple, coefficient) pairs; fails on Z/product terms"""
        result = []
        for term, coefficient in self.items():
            if not isinstance(term, Idx):
                raise domain_error(
                    f"Expected index terms only, found `{term}`", term=str(term)
                )
            result.append((term.parts, coefficient))
        return result

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.terms())

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        result = LinComb(self._terms)
        for term, coefficient in other._terms.items():
            result._add_term(term, coefficient)
        return result

    def __neg__(self):
        return LinComb((term, -c) for term, c in self._terms.items())

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            return NotImplemented
        return LinComb((term, c * scalar) for term, c in self._terms.items())

    __rmul__ = __mul__

    def __repr__(self):
        return f"LinComb({format_lincomb(self)!r})"

    def __str__(self):
        return format_lincomb(self)


def format_lincomb(x):
    """Render as "q1*(i1) + q2*(i2) - ..." in canonical term order; "0" if empty"""
    pieces = []
    for position, (term, coefficient) in enumerate(x.items()):
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        body = str(term) if magnitude == 1 else f"{magnitude}*{term}"
        if position == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _shuffle_indices(k, l):
    if not k:
        return ((l, 1),)
    if not l:
        return ((k, 1),)
    result = defaultdict(int)
    for index, c in _shuffle_indices(k[1:], l):
        result[(k[0],) + index] += c
    for index, c in _shuffle_indices(k, l[1:]):
        result[(l[0],) + index] += c
    return tuple(result.items())


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _quasi_shuffle_indices(k, l, merge_sign):
    if not k:
        return ((l, 1),)
    if not l:
        return ((k, 1),)
    result = defaultdict(int)
    for index, c in _quasi_shuffle_indices(k[1:], l, merge_sign):
        result[(k[0],) + index] += c
    for index, c in _quasi_shuffle_indices(k, l[1:], merge_sign):
        result[(l[0],) + index] += c
    for index, c in _quasi_shuffle_indices(k[1:], l[1:], merge_sign):
        result[(k[0] + l[0],) + index] += merge_sign * c
    return tuple((index, c) for index, c in result.items() if c)


def _bilinear(x, y, index_product, name):
    result = defaultdict(int)
    for k, a in _index_terms(x, name):
        for l, b in _index_terms(y, name):
            for index, c in index_product(k, l):
                result[Idx(index)] += a * b * c
    return LinComb(result)


def _index_terms(x, name):
    if isinstance(x, tuple):
        return [(x, 1)]
    try:
        return x.index_items()
    except DomainError:
        raise domain_error(
            f"The {name} product is only defined on index terms, got `{x}`",
            operand=str(x),
        )


def shuffle(x, y):
    """Index-level shuffle ш: components are interleaved as atomic letters

    (k1, k) ш (l1, l) = (k1, k ш (l1, l)) + (l1, (k1, k) ш l), with ∅ as unit.
    Operands may be LinComb values or bare index tuples.
    """
    return _bilinear(x, y, _shuffle_indices, "shuffle")


def harmonic(x, y):
    """Harmonic product ⊛, the quasi-shuffle with a subtracted merge term

    (k1, k) ⊛ (l1, l) = (k1, k ⊛ (l1, l)) + (l1, (k1, k) ⊛ l) - (k1 + l1, k ⊛ l).
    Star values (classical and finite) are multiplicative for it.
    """
    return _bilinear(
        x, y, lambda k, l: _quasi_shuffle_indices(k, l, -1), "harmonic"
    )


def stuffle(x, y):
    """Stuffle ∗, the quasi-shuffle with an added merge term

    Non-star values (classical and finite) are multiplicative for it.
    """
    return _bilinear(x, y, lambda k, l: _quasi_shuffle_indices(k, l, 1), "stuffle")


STRUCTURAL_MAPS = {
    "dagger": dagger,
    "hoffman_dual": hoffman_dual,
    "raise_last": raise_last,
    "reverse": reverse,
}


def map_linear(f, x):
    """Apply an index map termwise, merging coefficients of equal images

    Args:
        f (str or callable): one of STRUCTURAL_MAPS by name, or the function itself
        x (LinComb): combination of index terms

    Raises:
        DomainError: naming the first term outside the map's domain
    """
    if isinstance(f, str):
        try:
            f = STRUCTURAL_MAPS[f]
        except KeyError:
            raise domain_error(f"Unknown index map `{f}`", name=f)
    result = defaultdict(int)
    for k, coefficient in x.index_items():
        try:
            image = f(k)
        except DomainError as exc:
            raise domain_error(
                f"Term {render_index(k)} is outside the domain of "
                f"{getattr(f, '__name__', f)}: {exc}",
                term=render_index(k),
            )
        result[Idx(image)] += coefficient
    return LinComb(result)


def shifted_sum(k, m, coefficient=None):
    """Σ over e with wt(e) = m, dep(e) = dep(k) of coefficient(k, e)·(k ⊕ e)

    With `coefficient` None every shift counts once.
    """
    result = defaultdict(int)
    for e in compositions(m, len(k)):
        c = 1 if coefficient is None else coefficient(k, e)
        if c:
            result[Idx(oplus(k, e))] += c
    return LinComb(result)


def lemma21_sides(k, m):
    """Both sides of k ш ({1}^m) = Σ_i Σ_{wt(e)=m-i} (k ⊕ e) ⊛ ({1}^i)"""
    k = tuple(k)
    left = shuffle(k, ones(m))
    right = LinComb()
    for i in range(m + 1):
        for e in compositions(m - i, len(k)):
            right = right + harmonic(oplus(k, e), ones(i))
    return left, right


def lemma22_sides(k, m):
    """Both sides of (k^∨ ш ({1}^m))^∨ = Σ_{wt(e)=m} c2(k, e)·(k ⊕ e)"""
    k = tuple(k)
    if not k:
        raise domain_error("lemma22_sides needs a nonempty index", index=k)
    left = map_linear(hoffman_dual, shuffle(hoffman_dual(k), ones(m)))
    right = shifted_sum(k, m, lambda k_, e: ohno_coefficient(C2, k_, e))
    return left, right
