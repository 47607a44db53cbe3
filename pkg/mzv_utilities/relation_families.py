"""Every relation family as a pair of LinComb sides plus the space they live in.

Builders are purely structural: they never evaluate anything, and Z(k) terms
with even k are kept even though they vanish on the finite side.
"""
from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Optional

from .combinatorics import C1, C2, ohno_coefficient
from .common import ConfigError, domain_error
from .constants import (
    ALL_FAMILIES,
    EMPTY_INDEX_TEXT,
    FINITE_ZETA,
    FINITE_ZETA_STAR,
    REAL_ZETA,
    REAL_ZETA_STAR,
)
from .index_algebra import (
    LinComb,
    Prod,
    Zconst,
    harmonic,
    map_linear,
    shifted_sum,
    shuffle,
    stuffle,
)
from .index_core import (
    all_indices,
    dagger,
    format_index,
    hoffman_dual,
    index_sort_key,
    indices_of_weight,
    is_admissible,
    make_index,
    ones,
    parse_index,
    raise_last,
    render_index,
)
from .logger import logger


@dataclass
class RelationInstance:
    """One concrete relation: lhs = rhs in `value_space`"""

    family: str
    params: dict
    lhs: LinComb
    rhs: LinComb
    value_space: str
    weight: int

    @property
    def instance_id(self):
        return instance_id(self.family, self.params)

    def describe(self):
        return f"{self.lhs} = {self.rhs}"


class Bounds(NamedTuple):
    """Enumeration bounds: parameter weight, shift weight m, and index depth"""

    max_weight: int
    max_m: Optional[int] = None
    max_depth: Optional[int] = None


def _param_text(value):
    if isinstance(value, tuple):
        return format_index(value) or EMPTY_INDEX_TEXT
    return str(value)


def instance_id(family, params):
    """Report key of the form "family/k=1,2/m=1" (parameters in family order)"""
    names = FAMILY_PARAMETERS[family]
    parts = [f"{name}={_param_text(params[name])}" for name in names]
    return "/".join([family] + parts)


def _as_index(value):
    if isinstance(value, str):
        return parse_index(value)
    return make_index(value)


def _as_int(value, name):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise domain_error(f"Parameter `{name}` must be an integer, got `{value}`")


def _require(condition, family, message, **info):
    if not condition:
        raise domain_error(f"{family}: {message}", family=family, **info)


def _require_admissible(family, k):
    _require(
        k and is_admissible(k),
        family,
        f"{render_index(k)} must be admissible and nonempty",
        index=k,
    )


def _require_nonempty(family, *indices):
    for k in indices:
        _require(bool(k), family, "indices must be nonempty", index=k)


def _c1(k, e):
    return ohno_coefficient(C1, k, e)


def _c2(k, e):
    return ohno_coefficient(C2, k, e)


def _sum_side(w, r, slot=None):
    """Σ over indices of weight w, depth r: admissible, or with k_slot >= 2"""
    if slot is None:
        indices = [k for k in indices_of_weight(w, r) if is_admissible(k)]
    else:
        indices = [k for k in indices_of_weight(w, r) if k[slot - 1] >= 2]
    return LinComb.of_indices(indices)


def _check_classical_sum(family, w, r):
    _require(
        r >= 1 and w >= r + 1,
        family,
        f"need 1 <= r <= k - 1, got k={w}, r={r}",
    )


def _build_sum_classical(w, r):
    _check_classical_sum("sum_classical", w, r)
    return _sum_side(w, r), LinComb.of_index((w,)), w


def _build_sum_classical_star(w, r):
    _check_classical_sum("sum_classical_star", w, r)
    return _sum_side(w, r), LinComb.of_index((w,), comb(w - 1, r - 1)), w


def _build_duality_classical(k):
    _require(
        is_admissible(k), "duality_classical", f"{render_index(k)} must be admissible"
    )
    return LinComb.of_index(k), LinComb.of_index(dagger(k)), sum(k)


def _build_ohno(k, m):
    _require(is_admissible(k), "ohno", f"{render_index(k)} must be admissible")
    return shifted_sum(k, m), shifted_sum(dagger(k), m), sum(k) + m


def _build_ohno_star(k, m):
    _require_admissible("ohno_star", k)
    lhs = shifted_sum(k, m, _c1)
    rhs = map_linear(dagger, shifted_sum(dagger(k), m))
    return lhs, rhs, sum(k) + m


def _raise_hoffman(x):
    """ζ^{⋆,+}((·)^∨) realized as the index map P∘∨ applied termwise"""
    return map_linear(raise_last, map_linear(hoffman_dual, x))


def _build_kawashima_linear(k, l):
    _require_nonempty("kawashima_linear", k, l)
    return _raise_hoffman(harmonic(k, l)), LinComb(), sum(k) + sum(l) + 1


def _build_lemma24(k, m):
    _require_nonempty("lemma24", k)
    lhs = _raise_hoffman(shuffle(k, ones(m)))
    rhs = _raise_hoffman(shifted_sum(k, m))
    return lhs, rhs, sum(k) + m + 1


def _build_harmonic_hom_real(k, l):
    _require_admissible("harmonic_hom_real", k)
    _require_admissible("harmonic_hom_real", l)
    return harmonic(k, l), LinComb([(Prod(k, l), 1)]), sum(k) + sum(l)


def _build_sum_star_from_ohno(w, m):
    _require(
        w >= 2 and m >= 0,
        "sum_star_from_ohno",
        f"need k >= 2, m >= 0, got k={w}, m={m}",
    )
    lhs = LinComb.of_index((w + m,), comb(w + m - 1, m))
    rhs = shifted_sum(ones(m) + (2,), w - 2)
    return lhs, rhs, w + m


def _finite_sum_coefficient(w, r, i, star):
    if star:
        inner = (-1) ** r * comb(w - 1, i - 1) + comb(w - 1, r - i)
    else:
        inner = comb(w - 1, i - 1) + (-1) ** r * comb(w - 1, r - i)
    return (-1) ** i * inner


def _check_finite_sum(family, w, r, i):
    _require(
        1 <= i <= r <= w - 1,
        family,
        f"need 1 <= i <= r <= k - 1, got k={w}, r={r}, i={i}",
    )


def _build_sum_finite(w, r, i):
    _check_finite_sum("sum_finite", w, r, i)
    coefficient = _finite_sum_coefficient(w, r, i, star=False)
    return _sum_side(w, r, slot=i), LinComb([(Zconst(w), coefficient)]), w


def _build_sum_finite_star(w, r, i):
    _check_finite_sum("sum_finite_star", w, r, i)
    coefficient = _finite_sum_coefficient(w, r, i, star=True)
    return _sum_side(w, r, slot=i), LinComb([(Zconst(w), coefficient)]), w


def _build_duality_finite(k):
    _require_nonempty("duality_finite", k)
    return LinComb.of_index(k), LinComb.of_index(hoffman_dual(k), -1), sum(k)


def _build_oyama(k, m):
    _require_nonempty("oyama", k)
    rhs = map_linear(hoffman_dual, shifted_sum(hoffman_dual(k), m))
    return shifted_sum(k, m), rhs, sum(k) + m


def _build_ohno_star_finite(k, m):
    _require_nonempty("ohno_star_finite", k)
    return shifted_sum(k, m, _c2), -shifted_sum(hoffman_dual(k), m), sum(k) + m


def _build_lemma25(k, m):
    return shuffle(k, ones(m)), shifted_sum(k, m), sum(k) + m


def _build_star_ones(i):
    _require(i >= 1, "star_ones", f"need i >= 1, got i={i}")
    return LinComb.of_index(ones(i)), LinComb(), i


def _build_harmonic_hom(k, l):
    return harmonic(k, l), LinComb([(Prod(k, l), 1)]), sum(k) + sum(l)


def _build_stuffle_hom(k, l):
    return stuffle(k, l), LinComb([(Prod(k, l), 1)]), sum(k) + sum(l)


def _build_star_depth2(k1, k2):
    _require(k1 >= 1 and k2 >= 1, "star_depth2", f"need k1, k2 >= 1, got {k1}, {k2}")
    w = k1 + k2
    coefficient = -((-1) ** k1) * comb(w, k1)
    return LinComb.of_index((k1, k2)), LinComb([(Zconst(w), coefficient)]), w


def _build_main2_depth2(i, j, m):
    _require(
        i >= 1 and j >= 1 and m >= 0,
        "main2_depth2",
        f"need i, j >= 1, m >= 0, got {i}, {j}, {m}",
    )
    l = i + j
    inner = comb(l + m - 1, m + i) + (-1) ** m * comb(l + m - 1, i - 1)
    coefficient = -((-1) ** i) * inner
    lhs = shifted_sum((i, j), m, _c2)
    return lhs, LinComb([(Zconst(l + m), coefficient)]), l + m


# family -> (parameter names, parameter kinds, builder, value space)
INDEX = "index"
INT = "int"
FAMILY_SPECS = {
    "sum_classical": (("k", "r"), (INT, INT), _build_sum_classical, REAL_ZETA),
    "sum_classical_star": (
        ("k", "r"),
        (INT, INT),
        _build_sum_classical_star,
        REAL_ZETA_STAR,
    ),
    "duality_classical": (("k",), (INDEX,), _build_duality_classical, REAL_ZETA),
    "ohno": (("k", "m"), (INDEX, INT), _build_ohno, REAL_ZETA),
    "ohno_star": (("k", "m"), (INDEX, INT), _build_ohno_star, REAL_ZETA_STAR),
    "kawashima_linear": (
        ("k", "l"),
        (INDEX, INDEX),
        _build_kawashima_linear,
        REAL_ZETA_STAR,
    ),
    "lemma24": (("k", "m"), (INDEX, INT), _build_lemma24, REAL_ZETA_STAR),
    "harmonic_hom_real": (
        ("k", "l"),
        (INDEX, INDEX),
        _build_harmonic_hom_real,
        REAL_ZETA_STAR,
    ),
    "sum_star_from_ohno": (
        ("k", "m"),
        (INT, INT),
        _build_sum_star_from_ohno,
        REAL_ZETA_STAR,
    ),
    "sum_finite": (("k", "r", "i"), (INT, INT, INT), _build_sum_finite, FINITE_ZETA),
    "sum_finite_star": (
        ("k", "r", "i"),
        (INT, INT, INT),
        _build_sum_finite_star,
        FINITE_ZETA_STAR,
    ),
    "duality_finite": (("k",), (INDEX,), _build_duality_finite, FINITE_ZETA_STAR),
    "oyama": (("k", "m"), (INDEX, INT), _build_oyama, FINITE_ZETA),
    "ohno_star_finite": (
        ("k", "m"),
        (INDEX, INT),
        _build_ohno_star_finite,
        FINITE_ZETA_STAR,
    ),
    "lemma25": (("k", "m"), (INDEX, INT), _build_lemma25, FINITE_ZETA_STAR),
    "star_ones": (("i",), (INT,), _build_star_ones, FINITE_ZETA_STAR),
    "harmonic_hom": (("k", "l"), (INDEX, INDEX), _build_harmonic_hom, FINITE_ZETA_STAR),
    "stuffle_hom": (("k", "l"), (INDEX, INDEX), _build_stuffle_hom, FINITE_ZETA),
    "star_depth2": (("k1", "k2"), (INT, INT), _build_star_depth2, FINITE_ZETA_STAR),
    "main2_depth2": (
        ("i", "j", "m"),
        (INT, INT, INT),
        _build_main2_depth2,
        FINITE_ZETA_STAR,
    ),
}
FAMILY_PARAMETERS = {family: spec[0] for family, spec in FAMILY_SPECS.items()}
assert set(FAMILY_SPECS) == set(ALL_FAMILIES)


def check_family(family):
    if family not in FAMILY_SPECS:
        message = (
            f"Unknown relation family `{family}`. "
            f"Known families: {', '.join(ALL_FAMILIES)}"
        )
        logger.error(message)
        raise ConfigError(message, {"family": family})


def value_space(family):
    check_family(family)
    return FAMILY_SPECS[family][3]


def normalize_params(family, params):
    """Coerce raw parameter values (text, lists, ints) to index tuples and ints"""
    check_family(family)
    names, kinds, _, _ = FAMILY_SPECS[family]
    normalized = {}
    for name, kind in zip(names, kinds):
        if name not in params or params[name] is None:
            raise domain_error(f"{family}: missing parameter `{name}`", family=family)
        value = params[name]
        if kind == INDEX:
            normalized[name] = _as_index(value)
        else:
            normalized[name] = _as_int(value, name)
    return normalized


def build(family, params):
    """Build the RelationInstance of `family` for `params`

    Args:
        family (str): One of ALL_FAMILIES
        params (dict): Parameter names of the family (see FAMILY_PARAMETERS) to
            index tuples / index text / ints

    Returns:
        RelationInstance
    """
    params = normalize_params(family, params)
    names, _, builder, space = FAMILY_SPECS[family]
    for name in names:
        if isinstance(params[name], int) and params[name] < 0:
            raise domain_error(f"{family}: parameter `{name}` must be nonnegative")
    lhs, rhs, weight = builder(*(params[name] for name in names))
    return RelationInstance(family, params, lhs, rhs, space, weight)


def _index_pool(bounds, min_weight=1, admissible_only=False):
    return list(
        all_indices(
            bounds.max_weight,
            min_weight=min_weight,
            admissible_only=admissible_only,
            max_depth=bounds.max_depth,
        )
    )


def _m_range(bounds, used_weight):
    top = bounds.max_weight - used_weight
    if bounds.max_m is not None:
        top = min(top, bounds.max_m)
    return range(0, top + 1)


def _candidates(family, bounds):
    """Yield (sort key, params) for every valid parameter combination"""
    names = FAMILY_PARAMETERS[family]
    top = bounds.max_weight
    if names == ("k", "m") and FAMILY_SPECS[family][1][0] == INDEX:
        admissible_only = family in ("ohno", "ohno_star")
        for k in _index_pool(bounds, admissible_only=admissible_only):
            for m in _m_range(bounds, sum(k)):
                yield (sum(k) + m, len(k), index_sort_key(k), m), {"k": k, "m": m}
    elif names == ("k",):
        admissible_only = family == "duality_classical"
        for k in _index_pool(bounds, admissible_only=admissible_only):
            yield (sum(k), len(k), index_sort_key(k)), {"k": k}
    elif names == ("k", "l"):
        admissible_only = family == "harmonic_hom_real"
        pool = _index_pool(bounds, admissible_only=admissible_only)
        for k in pool:
            for l in pool:
                if sum(k) + sum(l) <= top:
                    key = (
                        sum(k) + sum(l),
                        len(k) + len(l),
                        index_sort_key(k),
                        index_sort_key(l),
                    )
                    yield key, {"k": k, "l": l}
    elif family in ("sum_classical", "sum_classical_star"):
        for w in range(2, top + 1):
            for r in range(1, w):
                if bounds.max_depth is None or r <= bounds.max_depth:
                    yield (w, r, w, r), {"k": w, "r": r}
    elif family in ("sum_finite", "sum_finite_star"):
        for w in range(2, top + 1):
            for r in range(1, w):
                if bounds.max_depth is not None and r > bounds.max_depth:
                    continue
                for i in range(1, r + 1):
                    yield (w, r, w, r, i), {"k": w, "r": r, "i": i}
    elif family == "star_ones":
        for i in range(1, top + 1):
            if bounds.max_depth is None or i <= bounds.max_depth:
                yield (i, i, i), {"i": i}
    elif family == "star_depth2":
        for w in range(2, top + 1):
            for k1 in range(1, w):
                yield (w, 2, k1), {"k1": k1, "k2": w - k1}
    elif family == "sum_star_from_ohno":
        for w in range(2, top + 1):
            for m in _m_range(bounds, w):
                yield (w + m, 1, w, m), {"k": w, "m": m}
    elif family == "main2_depth2":
        for l in range(2, top + 1):
            for i in range(1, l):
                for m in _m_range(bounds, l):
                    yield (l + m, 2, (l, i), m), {"i": i, "j": l - i, "m": m}


def enumerate_instances(family, bounds):
    """Every valid instance of `family` within `bounds`, each exactly once

    Order: total parameter weight (wt(k)+m, wt(k)+wt(l), or the weight
    parameter of the sum families), then total depth, then the parameters
    themselves in index order (weight, depth, components ascending).

    Args:
        family (str): One of ALL_FAMILIES
        bounds (Bounds): max_weight bounds the total parameter weight

    Yields:
        RelationInstance
    """
    check_family(family)
    if not isinstance(bounds, Bounds):
        bounds = Bounds(**bounds)
    for _, params in sorted(_candidates(family, bounds), key=lambda pair: pair[0]):
        yield build(family, params)


def enumerate_params(family, bounds):
    """Like enumerate_instances, but yields the parameter dicts only"""
    check_family(family)
    if not isinstance(bounds, Bounds):
        bounds = Bounds(**bounds)
    for _, params in sorted(_candidates(family, bounds), key=lambda pair: pair[0]):
        yield params


def side_terms(instance):
    """All terms of both sides, for homogeneity and domain checks"""
    return list(instance.lhs) + list(instance.rhs)
