"""Zeta values at integer arguments and the power series of psi(1+z).

The digamma function is written as ``psi(1+z) = -gamma + z * Z(z)`` with

    Z(z) = sum_{nu>=0} zeta(nu+2) (-z)^nu,        |z| < 1.

This module provides the zeta values, the partial sums ``Z_n(z)`` and the
closed-form remainder ``R_n(z) = Z(z) - Z_n(z)``, which stays valid for all
``z`` off the negative integers.
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._validation import check_int, check_not_negative_integer, check_positive, check_scalar
from .exceptions import ConfigurationError, DomainError, TruncationWarning

EULER_GAMMA_STR = "0.577215664901532860606512090082402431042"
EULER_GAMMA = float(EULER_GAMMA_STR)

#: Euler-Maclaurin cut-off: terms below this index are summed explicitly.
EM_CUTOFF = 20

# B_{2i} / (2i)! for i = 1..6
_BERNOULLI_B2_TO_B12 = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
)
_EM_COEFFS = tuple(
    float(b / math.factorial(2 * i)) for i, b in enumerate(_BERNOULLI_B2_TO_B12, start=1)
)

DEFAULT_TOL = 1e-17
DEFAULT_MAX_TERMS = 10**6
_CHUNK = 8192


def _zeta_em(s, a):
    """Hurwitz zeta(s, a) for integer s >= 2 and real a >= 1 by Euler-Maclaurin."""
    x = a + EM_CUTOFF
    terms = [(a + j) ** -s for j in range(EM_CUTOFF)]
    base = x**-s
    terms.append(base * x / (s - 1))
    terms.append(0.5 * base)
    # (s)_{2i-1} x^{-s-2i+1}; scaled by x^-s last so nothing goes subnormal early
    rising = float(s)
    inv = 1.0 / x
    for i, coeff in enumerate(_EM_COEFFS, start=1):
        terms.append(coeff * rising * inv * base)
        rising *= (s + 2 * i - 1) * (s + 2 * i)
        inv /= x * x
    return math.fsum(terms)


def riemann_zeta_int(s):
    """Riemann zeta function at an integer argument ``s >= 2``."""
    s = check_int(s, "s")
    if s < 2:
        raise DomainError(f"riemann_zeta_int requires s >= 2, got {s}")
    return _zeta_em(s, 1)


def hurwitz_zeta_int(s, a, method="direct"):
    """Hurwitz zeta function ``zeta(s, a) = sum_{n>=0} (n + a)^(-s)``.

    Parameters
    ----------
    s : int
        Exponent, ``s >= 2``.
    a : int
        Offset, ``a >= 1``.
    method : {"direct", "riemann"}
        ``"direct"`` runs Euler-Maclaurin at offset ``a``. ``"riemann"``
        subtracts the leading terms from the ordinary zeta value,
        ``zeta(s) - sum_{m=1}^{a-1} m^(-s)``, which cancels digits once the
        result is much smaller than ``zeta(s)``.
    """
    s = check_int(s, "s")
    a = check_int(a, "a")
    if s < 2 or a < 1:
        raise DomainError(f"hurwitz_zeta_int requires s >= 2 and a >= 1, got s={s}, a={a}")
    if method == "direct":
        return _zeta_em(s, a)
    if method == "riemann":
        head = math.fsum(m**-s for m in range(1, a))
        return riemann_zeta_int(s) - head
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ZetaCache:
    """Memo of ``values[nu] = zeta(nu + 2)`` for ``nu = 0 .. nu_max``."""

    values: tuple
    nu_max: int

    @classmethod
    def build(cls, nu_max):
        nu_max = check_int(nu_max, "nu_max", minimum=0)
        return cls(tuple(riemann_zeta_int(nu + 2) for nu in range(nu_max + 1)), nu_max)

    def __getitem__(self, nu):
        return self.values[nu]

    def __len__(self):
        return len(self.values)


_DEFAULT_CACHE = ZetaCache.build(128)


def default_cache(nu_max):
    """Return a shared cache if it is deep enough, otherwise build a new one."""
    if nu_max <= _DEFAULT_CACHE.nu_max:
        return _DEFAULT_CACHE
    return ZetaCache.build(nu_max)


def partial_sums_Z(z, n_max, cache=None):
    """Partial sums ``[Z_0(z), ..., Z_{n_max}(z)]`` of the zeta power series.

    Terms ``zeta(nu+2) (-z)^nu`` are accumulated in increasing ``nu``.
    """
    z = check_scalar(z)
    n_max = check_int(n_max, "n_max", minimum=0)
    if cache is None:
        cache = default_cache(n_max)
    elif cache.nu_max < n_max:
        raise ConfigurationError(
            f"zeta cache holds nu <= {cache.nu_max}, partial sums need nu <= {n_max}"
        )
    sums = []
    acc = 0.0
    power = 1.0
    for nu in range(n_max + 1):
        acc += cache[nu] * power
        power *= -z
        sums.append(acc)
    return sums


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated infinite series plus termination metadata.

    ``truncation_estimate`` is the magnitude of the first term that was not
    summed explicitly. ``reason`` is ``"tolerance"``, ``"max_terms"`` or
    ``"exact"`` (every term vanishes).
    """

    value: complex
    terms_used: int
    truncation_estimate: float
    converged: bool = True
    reason: str = "tolerance"


def hurwitz_tail(z, s0, a, rel_tol=1e-17, max_terms=200):
    """``sum_{j>=a} j^(-s0) / (j + z)`` via ``sum_r (-z)^r zeta(s0 + 1 + r, a)``.

    Returns None when ``|z|`` is too large against ``a`` for the geometric
    expansion to converge quickly.
    """
    if abs(z) * 2 >= a:
        return None
    acc = 0.0
    term_scale = 1.0
    for r in range(max_terms):
        term = term_scale * _zeta_em(s0 + 1 + r, a)
        acc += term
        if abs(term) <= rel_tol * abs(acc):
            return acc
        term_scale *= -z
    return acc


def sum_terms(term_fn, tol, max_terms, chunk=_CHUNK):
    """Sum ``term_fn(m)`` over ``m = 0, 1, ...`` in numpy chunks.

    Stops before the first term with ``|term| < tol * |partial sum|``, or
    after ``max_terms`` terms. Each chunk is reduced with numpy's pairwise
    summation and the chunk totals are combined with ``math.fsum``.

    Returns ``(value, terms_used, first_neglected_magnitude, hit_cap)``.
    """
    re_parts, im_parts = [], []
    running = 0.0
    m0 = 0
    while m0 < max_terms:
        m = np.arange(m0, min(m0 + chunk, max_terms), dtype=np.float64)
        t = term_fn(m)
        before = running + np.concatenate(([0.0], np.cumsum(t)[:-1]))
        small = np.nonzero(np.abs(t) < tol * np.abs(before))[0]
        if small.size:
            i = int(small[0])
            block = t[:i]
            re_parts.append(float(np.sum(block.real)))
            im_parts.append(float(np.sum(block.imag)) if np.iscomplexobj(block) else 0.0)
            value = complex(math.fsum(re_parts), math.fsum(im_parts))
            return value, m0 + i, float(abs(t[i])), False
        re_parts.append(float(np.sum(t.real)))
        im_parts.append(float(np.sum(t.imag)) if np.iscomplexobj(t) else 0.0)
        running = running + np.sum(t)
        m0 += len(m)
    value = complex(math.fsum(re_parts), math.fsum(im_parts))
    return value, max_terms, float(abs(term_fn(np.array([float(max_terms)]))[0])), True


def as_scalar(value, like):
    """Drop the imaginary part when the input argument was real."""
    if isinstance(like, complex):
        return complex(value)
    return complex(value).real


def remainder_closed_form(z, n, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """Remainder ``R_n(z) = Z(z) - Z_n(z)`` from its closed-form series.

        R_n(z) = (-1)^{n+1} sum_{m>=0} [z/(m+1)]^{n+1} / ((m+1)(m+z+1))

    The series converges for every z off the negative integers, but only
    algebraically (like m^(-n-3)). Summation stops by the ``tol`` rule; the
    tail beyond the last explicit term is then added through its Hurwitz
    zeta expansion.

    Returns
    -------
    SeriesResult
    """
    z = check_scalar(z)
    n = check_int(n, "n", minimum=0)
    tol = check_positive(tol, "tol")
    max_terms = check_int(max_terms, "max_terms", minimum=1)
    check_not_negative_integer(z, "the remainder series")
    if z == 0:
        return SeriesResult(as_scalar(0.0, z), 1, 0.0, True, "exact")

    zc = complex(z) if isinstance(z, complex) else z
    sign = -1.0 if n % 2 == 0 else 1.0

    def term(m):
        j = m + 1.0
        return sign * (zc / j) ** (n + 1) / (j * (j + zc))

    value, used, neglected, hit_cap = sum_terms(term, tol, max_terms)
    tail = hurwitz_tail(zc, n + 2, used + 1)
    if tail is not None:
        value += sign * zc ** (n + 1) * tail
    if hit_cap and tail is None:
        warnings.warn(
            f"remainder series for n={n} stopped at max_terms={max_terms}",
            TruncationWarning,
            stacklevel=2,
        )
    return SeriesResult(
        as_scalar(value, z),
        used,
        neglected,
        converged=not hit_cap,
        reason="max_terms" if hit_cap else "tolerance",
    )


def Z_reference(z, n_terms=500, cache=None):
    """Direct summation of the power series with ``n_terms`` terms (|z| < 1)."""
    z = check_scalar(z)
    if abs(z) >= 1:
        raise DomainError("the power series for Z(z) converges only for |z| < 1")
    return partial_sums_Z(z, n_terms - 1, cache)[-1]
