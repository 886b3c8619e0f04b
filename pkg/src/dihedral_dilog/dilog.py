"""Real dilogarithm Li2 and the Rogers dilogarithm L on [0, 1]."""

import math

from .errors import DomainError

L1 = math.pi ** 2 / 6  # L(1) = Li2(1) = zeta(2)

_TINY = 1e-300
_NEAR_ONE = 1e-15


def _check(x):
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"argument {x!r} outside [0, 1]")
    return x


def _li2_series(x):
    # 0 <= x <= 1/2: terms shrink at least geometrically with ratio 1/2
    total = 0.0
    power = x
    k = 1
    while True:
        term = power / (k * k)
        if term <= 1e-17 * total:
            break
        total += term
        k += 1
        power *= x
    return total


def li2(x):
    """
    Li2(x) = sum_{k>=1} x^k / k^2 for 0 <= x <= 1.

    Power series up to 1/2, then Li2(x) = pi^2/6 - log(x) log(1-x) - Li2(1-x).
    """
    x = _check(x)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return L1
    if x <= 0.5:
        return _li2_series(x)
    y = 1.0 - x  # exact for x in [1/2, 1]
    return L1 - math.log(x) * math.log(y) - _li2_series(y)


def rogers_l(x):
    """Rogers dilogarithm L(x) = Li2(x) + log(x) log(1-x) / 2, L(0) = 0, L(1) = pi^2/6."""
    x = _check(x)
    if x < _TINY:
        return 0.0
    if 1.0 - x < _NEAR_ONE:
        return L1
    if x <= 0.5:
        return _li2_series(x) + 0.5 * math.log(x) * math.log1p(-x)
    # L(x) + L(1-x) = L(1)
    y = 1.0 - x
    return L1 - (_li2_series(y) + 0.5 * math.log(y) * math.log(x))
