import os
from contextlib import contextmanager

from dotenv import load_dotenv
from mpmath import mp

# Load environment variables
load_dotenv()

PRECISION_BITS = int(os.getenv("ARCTIC_PRECISION_BITS", "512"))
OUTPUT_DIGITS = int(os.getenv("ARCTIC_OUTPUT_DIGITS", "30"))
LOG_LEVEL = os.getenv("ARCTIC_LOG_LEVEL", "WARNING")
GUARD_STEP_BITS = int(os.getenv("ARCTIC_GUARD_STEP_BITS", "20"))

MIN_PRECISION_BITS = 128

# Brute-force enumeration caps, per model
ENUMERATION_LIMITS = {
    "6v": 6,
    "6vp": 6,
    "20v": 3,
    "dt": 12,
}

FIGURE_INCHES_PER_UNIT = 3
CHEBYSHEV_END_SHRINK = "1e-8"


def precision_for(n: int) -> int:
    """Working precision for a computation whose largest lattice size is n."""
    return max(PRECISION_BITS, 256, 64 + 12 * n)


def guard_bits(n: int, singular_directions: int) -> int:
    """Extra bits absorbing the loss near a removable singular line."""
    return singular_directions * (n * (n + 1) // 2) * (GUARD_STEP_BITS + 2)


@contextmanager
def working_precision(bits: int):
    """Raise (never lower) the mpmath precision for the enclosed block."""
    bits = max(int(bits), MIN_PRECISION_BITS, mp.prec)
    with mp.workprec(bits):
        yield bits
