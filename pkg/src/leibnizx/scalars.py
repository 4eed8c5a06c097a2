"""Exact rational scalars.

All coefficient arithmetic in the library goes through ``Q``.  gmpy2's mpq
is used when available (it is much faster for the row-reduction heavy
pipelines); the stdlib Fraction is a drop-in fallback.
"""

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)


def rat_from_str(s):
    """Parse "n" or "n/d" into an exact rational; reject zero denominators."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        d = int(den)
        if d == 0:
            raise ValueError("zero denominator in rational %r" % s)
        return Q(int(num), d)
    return Q(int(s))


def rat_to_str(x):
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)
