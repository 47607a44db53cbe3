TOOL_VERSION = "1.0.0"
REPORT_VERSION = 1
LOG_FILE_NAME = "mzv-ohno.log"

# Value spaces in which a relation instance asserts equality
REAL_ZETA = "real_zeta"
REAL_ZETA_STAR = "real_zeta_star"
FINITE_ZETA = "finite_zeta"
FINITE_ZETA_STAR = "finite_zeta_star"
REAL_SPACES = (REAL_ZETA, REAL_ZETA_STAR)
FINITE_SPACES = (FINITE_ZETA, FINITE_ZETA_STAR)
STAR_SPACES = (REAL_ZETA_STAR, FINITE_ZETA_STAR)

# Relation families, grouped by the backend that verifies them
REAL_FAMILIES = (
    "sum_classical",
    "sum_classical_star",
    "duality_classical",
    "ohno",
    "ohno_star",
    "kawashima_linear",
    "lemma24",
    "harmonic_hom_real",
    "sum_star_from_ohno",
)
FINITE_FAMILIES = (
    "sum_finite",
    "sum_finite_star",
    "duality_finite",
    "oyama",
    "ohno_star_finite",
    "lemma25",
    "star_ones",
    "harmonic_hom",
    "stuffle_hom",
    "star_depth2",
    "main2_depth2",
)
ALL_FAMILIES = REAL_FAMILIES + FINITE_FAMILIES

# Real-number backend
MIN_TRUNCATION = 10
DEFAULT_TRUNCATION = 10 ** 6
# |zeta(1,2) - zeta(3)| <= 1e-6 needs N around 2e7 with plain truncation
ANCHOR_TRUNCATION = 4 * 10 ** 7
# The dynamic program is streamed over n in chunks of this many terms
SERIES_CHUNK_SIZE = 2 ** 18
# Plain cumsum is only trusted inside blocks of this length
SERIES_BLOCK_SIZE = 512
DEFAULT_TOLERANCE = 1e-4
FAMILY_TOLERANCES = {
    "kawashima_linear": 1e-3,
    "lemma24": 1e-3,
}

# Finite backend
DEFAULT_PRIME_MIN = 5
DEFAULT_PRIME_MAX = 199
MIN_PRIME = 3

# Sweeps
DEFAULT_MAX_TOTAL_WEIGHT = 6
DEFAULT_JOBS = 1
SWEEP_CHUNK_SIZE = 25

EMPTY_INDEX_TEXT = "()"
