"""Explicit transformation error of ``T_k^(n)`` on the digamma partial sums.

With ratios ``q_kappa = z / kappa`` the transform of ``Z_n(z), ..., Z_{n+k}(z)``
satisfies ``T_k^(n) = Z(z) - E`` where

    E = (-1)^{n+1} z^{n+k+1} / (z+1)_k
        * sum_{m>=0} (m+1)_k / ((k+m+1)^{n+k+2} (k+m+z+1)).

Both functions below return ``E`` with this sign: ``T = Z(z) - E``.
The second evaluates the same quantity through Hurwitz zeta values.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from ._validation import check_int, check_not_negative_integer, check_positive, check_scalar
from .accel import STABILITY_ORDER, elementary_symmetric
from .exceptions import DomainError, StabilityWarning, TruncationWarning
from .series import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    SeriesResult,
    _zeta_em,
    as_scalar,
    hurwitz_tail,
    sum_terms,
)


@dataclass(frozen=True)
class ErrorSeriesResult(SeriesResult):
    """SeriesResult tagged with the form that produced it (direct or hurwitz)."""

    form: str = "direct"


def pochhammer(x, k):
    """Rising factorial ``(x)_k = x (x+1) ... (x+k-1)``; ``(x)_0 = 1``.

    Exact for int and Fraction arguments.
    """
    k = check_int(k, "k", minimum=0)
    result = 1
    for i in range(k):
        result = result * (x + i)
    return result


def poch_hat_coeffs(k):
    """Integer coefficients with ``(m+1)_k = sum_kappa c[kappa] (k+m+1)^(k-kappa)``.

    These are the elementary symmetric polynomials of ``kappa - k - 1`` for
    ``kappa = 1..k``; their signs alternate.
    """
    k = check_int(k, "k", minimum=0)
    return elementary_symmetric([kappa - k - 1 for kappa in range(1, k + 1)])


def _check_args(z, n, k):
    z = check_scalar(z)
    n = check_int(n, "n", minimum=0)
    k = check_int(k, "k", minimum=0)
    check_not_negative_integer(z, "the transformation error")
    if k > STABILITY_ORDER:
        warnings.warn(
            f"error series at order k={k} > {STABILITY_ORDER}: symmetric-polynomial sums may be unstable",
            StabilityWarning,
            stacklevel=3,
        )
    return z, n, k


def _prefactor(z, n, k):
    sign = -1.0 if n % 2 == 0 else 1.0
    return sign * z ** (n + k + 1) / pochhammer(z + 1, k)


def transform_error_direct(z, n, k, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """Transformation error ``E = Z(z) - T_k^(n)`` from the Pochhammer series.

    Converges for every ``z`` off the negative integers, algebraically in
    ``m``. After the ``tol`` stop, the remaining tail is added via
    ``(m+1)_k = sum_kappa c_kappa (k+m+1)^(k-kappa)`` and Hurwitz zeta values.
    """
    z, n, k = _check_args(z, n, k)
    tol = check_positive(tol, "tol")
    max_terms = check_int(max_terms, "max_terms", minimum=1)
    if z == 0:
        return ErrorSeriesResult(as_scalar(0.0, z), 1, 0.0, True, "exact", form="direct")

    zc = complex(z) if isinstance(z, complex) else z

    def term(m):
        base = k + m + 1.0
        ratio = np.ones_like(m)
        for kappa in range(1, k + 1):
            ratio = ratio * ((m + kappa) / base)
        return ratio / (base ** (n + 2) * (base + zc))

    value, used, neglected, hit_cap = sum_terms(term, tol, max_terms)
    coeffs = poch_hat_coeffs(k)
    tails = [hurwitz_tail(zc, n + kappa + 2, k + used + 1) for kappa in range(k + 1)]
    corrected = all(t is not None for t in tails)
    if corrected:
        value += sum(c * t for c, t in zip(coeffs, tails))
    pre = _prefactor(zc, n, k)
    if hit_cap and not corrected:
        warnings.warn(
            f"error series for n={n}, k={k} stopped at max_terms={max_terms}",
            TruncationWarning,
            stacklevel=2,
        )
    return ErrorSeriesResult(
        as_scalar(pre * value, z),
        used,
        float(abs(pre) * neglected),
        converged=not hit_cap,
        reason="max_terms" if hit_cap else "tolerance",
        form="direct",
    )


def transform_error_hurwitz(z, n, k, m_max=60, tol=DEFAULT_TOL):
    """Transformation error through Hurwitz zeta values, for ``|z| < 1``.

        E = (-1)^{n+1} z^{n+k+1} / (z+1)_k
            * sum_{m=0}^{m_max} (-z)^m sum_kappa c_kappa zeta(n+m+kappa+3, k+1)

    The m-sum stops early once a term drops below ``tol`` times the partial
    sum. Its terms shrink roughly like ``(|z| / (k+1))^m``, so ``k = 0``
    with ``|z|`` near 1 needs many terms.
    """
    z, n, k = _check_args(z, n, k)
    m_max = check_int(m_max, "m_max", minimum=1)
    tol = check_positive(tol, "tol")
    if abs(z) >= 1:
        raise DomainError("the Hurwitz form of the error series requires |z| < 1")
    if z == 0:
        return ErrorSeriesResult(as_scalar(0.0, z), 1, 0.0, True, "exact", form="hurwitz")

    coeffs = poch_hat_coeffs(k)

    def term(m):
        inner = sum(c * _zeta_em(n + m + kappa + 3, k + 1) for kappa, c in enumerate(coeffs))
        return (-z) ** m * inner

    acc = 0.0
    converged = False
    m = 0
    while m <= m_max:
        t = term(m)
        acc += t
        m += 1
        if t == 0 or abs(t) < tol * abs(acc):
            converged = True
            break
    neglected = abs(term(m))
    pre = _prefactor(z, n, k)
    return ErrorSeriesResult(
        as_scalar(pre * acc, z),
        m,
        float(abs(pre) * neglected),
        converged=converged,
        reason="tolerance" if converged else "max_terms",
        form="hurwitz",
    )
