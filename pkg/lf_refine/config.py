"""Central configuration module.

Defines canonical paths, kernel and search limits, fuzz/oracle corpus
parameters and the emitted text vocabulary, plus a ``validate_config``
sanity check run at import. Search limits honour the
``LF_REFINE_MAX_DEPTH`` and ``LF_REFINE_MAX_STEPS`` environment variables.
"""

import os
from pathlib import Path

# ══════════════════════════════════════════════════════════════════════════════
# DIRECTORY PATHS
# ══════════════════════════════════════════════════════════════════════════════

# Project root directory
ROOT_DIR = Path(__file__).parent.parent

DATA_DIR = ROOT_DIR / "data"
RESULTS_DIR = DATA_DIR / "results"
LOGS_DIR = ROOT_DIR / "logs"

# Problem files shipped with the test-suite
FIXTURES_DIR = ROOT_DIR / "tests" / "fixtures"


# ══════════════════════════════════════════════════════════════════════════════
# KERNEL
# ══════════════════════════════════════════════════════════════════════════════

# Weak-head reduction steps allowed before an equality check gives up
WHNF_FUEL = 10_000

# "standard" decrements indices above the target, "verbatim" does not
SUBST_MODES = ("standard", "verbatim")
DEFAULT_SUBST_MODE = "standard"


# ══════════════════════════════════════════════════════════════════════════════
# SEARCH
# ══════════════════════════════════════════════════════════════════════════════

MAX_DEPTH = int(os.getenv("LF_REFINE_MAX_DEPTH", 64))
MAX_SOLUTIONS = 1
ALL_SOLUTIONS_CAP = 10          # default N for ``--all`` without a value
MAX_STEPS = int(os.getenv("LF_REFINE_MAX_STEPS", 200_000))

STRATEGIES = ("depth-first", "iterative-deepening")


# ══════════════════════════════════════════════════════════════════════════════
# FUZZ AND ORACLE CORPORA
# ══════════════════════════════════════════════════════════════════════════════

CORPUS_SEED = 20_240_601

# Ground oracle: every term up to this size over the toy signature
ORACLE_MAX_SIZE = 5

# Soundness fuzz
FUZZ_CASES = 200
FUZZ_MAX_SIZE = 8
FUZZ_MAX_HOLES = 2
FUZZ_MAX_STEPS = 20_000

# Goal generation totality
TOTALITY_CASES = 1_000
TOTALITY_MAX_SIZE = 30
GOAL_SIZE_FACTOR = 4

# Kernel algebraic laws
KERNEL_LAW_CASES = 500


# ══════════════════════════════════════════════════════════════════════════════
# EMITTED TEXT FORMAT
# ══════════════════════════════════════════════════════════════════════════════

FUNCTORS = {
    "app": 2, "lam": 2, "pi": 2, "tyapp": 2, "pik": 2, "tyconst": 1,
    "const": 1, "z": 0, "s": 1, "nil": 0, "cons": 2, "typek": 0,
}

PREDICATES = {
    "term": 3, "type": 3, "eq_t_a": 4, "eq_t_s": 4, "eq_ty": 4, "eq_k": 3,
    "proj": 3, "whr": 2, "shift": 3, "subst": 4, "top": 0,
}

# Metavariable letters in emitted text, keyed by sort value
META_LETTERS = {"term": "M", "type": "A", "kind": "L", "index": "I", "context": "G"}


def validate_config():
    """Validates that the configuration is correct."""
    errors = []

    if DEFAULT_SUBST_MODE not in SUBST_MODES:
        errors.append(f"DEFAULT_SUBST_MODE must be one of {SUBST_MODES}")

    if MAX_DEPTH < 1:
        errors.append("MAX_DEPTH must be at least 1")

    if MAX_STEPS < 1:
        errors.append("MAX_STEPS must be at least 1")

    if not 1 <= MAX_SOLUTIONS <= ALL_SOLUTIONS_CAP:
        errors.append("MAX_SOLUTIONS must lie between 1 and ALL_SOLUTIONS_CAP")

    if WHNF_FUEL < 1:
        errors.append("WHNF_FUEL must be positive")

    if len(set(META_LETTERS.values())) != len(META_LETTERS):
        errors.append("META_LETTERS must be pairwise distinct")

    if set(FUNCTORS) & set(PREDICATES):
        errors.append("FUNCTORS and PREDICATES overlap")

    if errors:
        raise ValueError("Configuration errors:\n" + "\n".join(f"  - {e}" for e in errors))


# Validate on module loading
validate_config()
