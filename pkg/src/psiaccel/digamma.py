"""Digamma function psi(1+z) from accelerated partial sums of its power series.

The argument is first moved into the strip ``0 <= Re z < 1`` (``z = 1`` is
kept as is) with the reflection and recurrence formulas

    psi(1 - w) = psi(w) + pi cot(pi w),      psi(w + 1) = psi(w) + 1/w,

and then ``psi(1+b) = -gamma + b Z(b)`` is evaluated by accelerating the
partial sums ``Z_n(b)``.
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from ._validation import check_int, check_not_negative_integer, check_positive, check_scalar
from .accel import t_transform_diagonal, wynn_epsilon
from .exceptions import DomainError
from .series import EULER_GAMMA, partial_sums_Z

METHODS = ("t_transform", "epsilon", "raw_series")
_METHOD_ALIASES = {"t": "t_transform", "eps": "epsilon", "raw": "raw_series"}

#: Beyond this |Re z| the asymptotic expansion would be needed; we refuse.
MAX_ABS_REAL = 1e6


def normalize_method(method):
    method = _METHOD_ALIASES.get(method, method)
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    return method


@dataclass(frozen=True)
class DigammaConfig:
    max_order: int = 40
    tol: float = 1e-15
    method: str = "t_transform"

    def __post_init__(self):
        check_int(self.max_order, "max_order", minimum=2)
        check_positive(self.tol, "tol")
        object.__setattr__(self, "method", normalize_method(self.method))


@dataclass(frozen=True)
class DigammaResult:
    value: complex
    order_used: int
    reduction_steps: int
    converged: bool
    method: str = "t_transform"


class Reduction(NamedTuple):
    """``psi(1+z) = psi(1+base) + correction``."""

    base: complex
    correction: complex
    used_reflection: bool
    steps: int


def _cot_pi(z):
    # cot has period 1; shifting first keeps pi*z small
    if isinstance(z, complex):
        w = z - round(z.real)
        return 1 / cmath.tan(math.pi * w)
    w = z - round(z)
    return 1 / math.tan(math.pi * w)


def _sum(values, like):
    if isinstance(like, complex):
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    return math.fsum(values)


def reduce_argument(z):
    """Map ``z`` to a base point in the strip ``0 <= Re b < 1``.

    Arguments with ``Re z < -1/2`` are reflected first. ``z = 1`` is returned
    unchanged since the accelerated series handles it directly.
    """
    z = check_scalar(z)
    check_not_negative_integer(z, "psi(1+z)")
    if abs(z.real) > MAX_ABS_REAL:
        raise DomainError(
            f"|Re z| > {MAX_ABS_REAL:g} needs the asymptotic expansion, which is not provided"
        )
    corrections = []
    steps = 0
    reflected = False
    if z.real < -0.5:
        # psi(1+z) = psi(-z) - pi cot(pi z), and psi(-z) = psi(1 + (-z-1))
        corrections.append(-math.pi * _cot_pi(z))
        z = -z - 1
        reflected = True
        steps += 1
    if z.real < 0:
        corrections.append(-1 / (z + 1))
        z = z + 1
        steps += 1
    while z.real >= 1 and z != 1:
        corrections.append(1 / z)
        z = z - 1
        steps += 1
    return Reduction(z, _sum(corrections, z) if corrections else 0.0 * z, reflected, steps)


def series_approximants(z, method, n_max):
    """Approximants to ``psi(1+z)`` built from ``Z_0(z), ..., Z_{n_max}(z)``.

    No argument reduction: element ``n`` is ``-gamma + z X_n`` with ``X_n``
    the partial sum, ``T_n^(0)`` or the epsilon staircase value.
    """
    z = check_scalar(z)
    method = normalize_method(method)
    sums = partial_sums_Z(z, n_max)
    if method == "t_transform":
        accelerated = t_transform_diagonal(sums, [z / j for j in range(1, n_max + 1)])
    elif method == "epsilon":
        accelerated = wynn_epsilon(sums).staircase_sequence()
    else:
        accelerated = sums
    return [-EULER_GAMMA + z * x for x in accelerated]


def psi_approximants(z, method="t_transform", n_max=40):
    """Approximants to ``psi(1+z)`` of orders ``0..n_max`` after reduction."""
    red = reduce_argument(z)
    if red.base == 0:
        return red, [-EULER_GAMMA + red.correction] * (n_max + 1)
    return red, [a + red.correction for a in series_approximants(red.base, method, n_max)]


def digamma(z, config=None):
    """Evaluate ``psi(1+z)``.

    Approximants of increasing order are generated until two successive ones
    agree to ``tol * (1 + |value|)`` or ``config.max_order`` is reached; in
    the latter case ``converged`` is False.

    >>> round(digamma(1).value, 15)
    0.422784335098467
    """
    config = DigammaConfig() if config is None else config
    red, approx = psi_approximants(z, config.method, config.max_order)
    if red.base == 0:
        return DigammaResult(approx[0], 0, red.steps, True, config.method)
    for m in range(1, len(approx)):
        if abs(approx[m] - approx[m - 1]) < config.tol * (1 + abs(approx[m])):
            return DigammaResult(approx[m], m, red.steps, True, config.method)
    return DigammaResult(approx[-1], config.max_order, red.steps, False, config.method)


def psi(x, config=None):
    """Digamma function ``psi(x) = Gamma'(x) / Gamma(x)``; returns the value only."""
    x = check_scalar(x, "x")
    return digamma(x - 1, config).value
