"""Configuration"""

import os

from dotenv import load_dotenv

load_dotenv()


def _env_flag(name: str, default: str = "False") -> bool:
    return os.getenv(name, default).lower() in ("true", "1", "yes")


# === RANDOMNESS ===
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "7"))
# When set, overrides --seed of the check verb
SRCX_SEED = os.getenv("SRCX_SEED", "")

# === CHECK DEFAULTS ===
DEFAULT_TRIALS = int(os.getenv("DEFAULT_TRIALS", "200"))
DEFAULT_MAX_VERTICES = int(os.getenv("DEFAULT_MAX_VERTICES", "5"))

# === LOGGING ===
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()
LOG_FILE = os.getenv("LOG_FILE", "")

# === SENTRY (Error Monitoring) ===
SENTRY_ENABLED = _env_flag("SENTRY_ENABLED")
SENTRY_DSN = os.getenv("SENTRY_DSN", "")
SENTRY_ENVIRONMENT = os.getenv("SENTRY_ENVIRONMENT", "production")

# === CACHES ===
CACHE_SIZE = int(os.getenv("CACHE_SIZE", "4096"))

# === HARD LIMITS ===
MAX_VERTICES = 24
ENUMERATION_LIMIT = 20
ORACLE_LIMIT = 12
PRODUCT_LIMIT = 20
AUDIT_LIMIT = 6
MORPHISM_ENUMERATION_LIMIT = 4096

# === TEXT FORMATS ===
FORBIDDEN_LABEL_CHARS = ("{", "}", ",")
FORBIDDEN_LABEL_SEQUENCES = ("->",)
MONOMIAL_SEPARATOR = "*"
VOID_TOKEN = "-"
VARIABLE_PREFIXES = ("x", "y", "z")

# === TAGS ===
FUNCTOR_TAGS = ("ee", "se", "ss", "sa", "aa")
CATEGORY_TAGS = ("sc0", "sc1", "sc2")
PRODUCT_TAGS = (
    "disjoint_union",
    "external_join",
    "or_union",
    "cone_union",
    "cart_meet_lower",
    "cart_join_lower",
    "cart_meet_upper",
    "cart_join_upper",
)

# === EXIT CODES ===
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
