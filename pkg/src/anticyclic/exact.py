"""Exact rational coefficient type.

gmpy2's mpq is used when available (it is much faster on the large truncated
series computations); fractions.Fraction is a drop-in fallback.  All arithmetic
in this package is exact: no floating point anywhere.
"""

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is normally present
    from fractions import Fraction as QQ


def rat_str(x) -> str:
    """Render an exact rational as "num" or "num/den"."""
    return str(x)


def parse_rat(s: str):
    """Parse "num" or "num/den" back into an exact rational."""
    return QQ(s.strip())


def rat_pow(base, exponent: int):
    """base**exponent for an integer exponent, allowing negative exponents."""
    if exponent >= 0:
        return QQ(base) ** exponent
    b = QQ(base) ** (-exponent)
    if b == 0:
        raise ZeroDivisionError("0 cannot be raised to a negative power")
    return 1 / b
