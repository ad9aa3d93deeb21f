"""Sequence transformations for sequences with known geometric ratios.

Two accelerators live here:

* ``T_k^(n) = prod_{kappa=1}^{k} (E + q_kappa) / (1 + q_kappa) s_n`` where
  ``E`` is the forward shift. Given the ratios ``q_kappa`` it removes the
  first ``k`` geometric components of a model sequence exactly.
* Wynn's epsilon algorithm, which needs only the sequence elements.

Index convention throughout: the subscript ``k`` is the transformation order
(the number of ratios consumed) and the superscript ``n`` is the offset of
the first sequence element used.
"""

import warnings
from dataclasses import dataclass, field

from ._validation import check_int, check_scalar
from .exceptions import SingularTransformError, StabilityWarning

#: Orders above this trigger a StabilityWarning in the explicit formula.
STABILITY_ORDER = 30

#: Differences below this magnitude mark an epsilon entry invalid.
EPSILON_GUARD = 1e-300


def _check_ratio(q, name="q"):
    q = check_scalar(q, name)
    if q == -1:
        raise SingularTransformError(f"{name} = -1 makes the transformation singular")
    return q


def elementary_symmetric(xs):
    """Elementary symmetric polynomials ``[e_0, ..., e_n]`` of ``xs``.

    The coefficients satisfy ``prod_j (1 + x_j t) = sum_nu e_nu t^nu`` and are
    built up one variable at a time.

    >>> elementary_symmetric([2, 3])
    [1, 5, 6]
    """
    e = [1]
    for x in xs:
        e.append(0)
        for nu in range(len(e) - 1, 0, -1):
            e[nu] = e[nu] + x * e[nu - 1]
    return e


@dataclass(frozen=True)
class TTransformState:
    """Rolling arrays of the recursive ``T`` transformation.

    After ``m + 1`` pushes, ``t[i]`` holds ``T_{m-i}^{(i)}``; in particular
    ``t[0]`` is ``T_m^{(0)}``. ``q[j - 1]`` holds the ratio ``q_j``.
    """

    t: tuple = field(default=())
    q: tuple = field(default=())

    @property
    def order(self):
        """Transformation order ``m`` of ``t[0]`` (-1 before the first push)."""
        return len(self.t) - 1

    @property
    def value(self):
        if not self.t:
            raise ValueError("no sequence elements pushed yet")
        return self.t[0]


def t_transform_push(state, s_new, q_new=None):
    """Feed one more sequence element into the ``T`` recursion.

    The first push only stores ``s_0``; ``q_new`` is ignored there. Push
    number ``m + 1`` (for ``m >= 1``) stores ``s_m`` together with the ratio
    ``q_m`` and sweeps the array so that ``t[0] = T_m^{(0)}``.

    Returns a new state; ``state`` is left untouched.
    """
    s_new = check_scalar(s_new, "s_new")
    t = list(state.t)
    q = list(state.q)
    if not t:
        return TTransformState((s_new,), ())
    if q_new is None:
        raise ValueError("q_new is required after the first element")
    q.append(_check_ratio(q_new, "q_new"))
    m = len(t)
    t.append(s_new)
    for j in range(1, m + 1):
        qj = q[j - 1]
        t[m - j] = (t[m - j + 1] + qj * t[m - j]) / (1 + qj)
    return TTransformState(tuple(t), tuple(q))


def t_transform_diagonal(seq, qs):
    """Return ``[T_0^(0), T_1^(0), ..., T_{N-1}^(0)]`` for ``N = len(seq)``.

    ``qs[j - 1]`` is the ratio ``q_j``; at least ``len(seq) - 1`` are needed.
    """
    seq = list(seq)
    qs = list(qs)
    if len(qs) < len(seq) - 1:
        raise ValueError(f"need {len(seq) - 1} ratios for {len(seq)} elements, got {len(qs)}")
    state = TTransformState()
    out = []
    for m, s in enumerate(seq):
        state = t_transform_push(state, s, qs[m - 1] if m else None)
        out.append(state.value)
    return out


def t_transform_explicit(window, qs):
    """``T_k^(n)`` from the elementary symmetric polynomials of the ratios.

        T_k^(n) = sum_kappa e_{k-kappa} s_{n+kappa} / sum_kappa e_kappa

    ``window`` is ``[s_n, ..., s_{n+k}]`` and ``qs`` is ``[q_1, ..., q_k]``.
    The alternating sums lose digits for large ``k``; prefer the recursive
    form for production use.
    """
    window = [check_scalar(s, "window element") for s in window]
    qs = [_check_ratio(q) for q in qs]
    k = len(qs)
    if len(window) != k + 1:
        raise ValueError(f"window must hold len(qs) + 1 = {k + 1} elements, got {len(window)}")
    if k > STABILITY_ORDER:
        warnings.warn(
            f"explicit T transform at order k={k} > {STABILITY_ORDER} may be unstable",
            StabilityWarning,
            stacklevel=2,
        )
    e = elementary_symmetric(qs)
    num = sum(e[k - kappa] * window[kappa] for kappa in range(k + 1))
    den = sum(e)
    if den == 0:
        raise SingularTransformError("denominator of the explicit T transform vanishes")
    return num / den


@dataclass(frozen=True)
class ModelSequence:
    """``s_n = s + (-1)^{n+1} sum_j c_j q_j^{n+1}`` with finitely many terms.

    ``terms`` is a sequence of ``(c_j, q_j)`` pairs with strictly decreasing
    ``|q_j|``; real ratios must share one sign.
    """

    limit: complex
    terms: tuple

    def __post_init__(self):
        terms = tuple((check_scalar(c, "c"), check_scalar(q, "q")) for c, q in self.terms)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "limit", check_scalar(self.limit, "limit"))
        mags = [abs(q) for _, q in terms]
        if any(a <= b for a, b in zip(mags, mags[1:])):
            raise ValueError("ratios must be strictly ordered by decreasing magnitude")
        real = [q for _, q in terms if not isinstance(q, complex)]
        if len(real) == len(terms) and real:
            nonzero = [q for q in real if q != 0]
            if nonzero and not (all(q > 0 for q in nonzero) or all(q < 0 for q in nonzero)):
                raise ValueError("real ratios must share a common sign")

    @property
    def ratios(self):
        return [q for _, q in self.terms]

    def element(self, n):
        sign = 1 if n % 2 else -1
        return self.limit + sign * sum(c * q ** (n + 1) for c, q in self.terms)

    def elements(self, count, start=0):
        return [self.element(n) for n in range(start, start + count)]


def model_transformed_tail(seq, n, k):
    """Exact ``T_k^(n)`` of a model sequence, using its own ratios.

    The first ``k`` geometric components vanish and each survivor ``j`` picks
    up the factor ``prod_{kappa<=k} (q_kappa - q_j) / (q_kappa + 1)``. For
    ``k >= J`` the result is the limit itself.
    """
    n = check_int(n, "n", minimum=0)
    k = check_int(k, "k", minimum=0)
    qs = seq.ratios
    for q in qs[:k]:
        _check_ratio(q)
    sign = 1 if n % 2 else -1
    tail = 0
    for c, qj in seq.terms[k:]:
        factor = 1
        for qk in qs[:k]:
            factor *= (qk - qj) / (qk + 1)
        tail += c * factor * qj ** (n + 1)
    return seq.limit + sign * tail


class EpsilonTable:
    """Triangular table ``eps_k^(n)`` of Wynn's epsilon algorithm.

    ``eps_{-1}^(n) = 0``, ``eps_0^(n) = s_n`` and

        eps_{k+1}^(n) = eps_{k-1}^(n+1) + 1 / (eps_k^(n+1) - eps_k^(n)).

    Entries whose difference falls below ``EPSILON_GUARD`` are stored as
    None, and so is everything computed from them.
    """

    def __init__(self, seq):
        seq = [check_scalar(s, "sequence element") for s in seq]
        if not seq:
            raise ValueError("the epsilon algorithm needs at least one element")
        self.n_terms = len(seq)
        # self._cols[k + 1][n] = eps_k^(n)
        cols = [[0.0] * (self.n_terms + 1), list(seq)]
        for k in range(0, self.n_terms - 1):
            prev, cur = cols[k], cols[k + 1]
            nxt = []
            for n in range(len(cur) - 1):
                a, b, c = prev[n + 1], cur[n + 1], cur[n]
                if a is None or b is None or c is None:
                    nxt.append(None)
                    continue
                diff = b - c
                if abs(diff) < EPSILON_GUARD:
                    nxt.append(None)
                else:
                    nxt.append(a + 1 / diff)
            cols.append(nxt)
        self._cols = cols

    def is_valid(self, k, n):
        return self._entry(k, n) is not None

    def _entry(self, k, n):
        if k < -1 or n < 0 or k + n >= self.n_terms + (1 if k == -1 else 0):
            raise IndexError(f"eps_{k}^({n}) is outside the table")
        return self._cols[k + 1][n]

    def epsilon(self, k, n):
        """Entry ``eps_k^(n)``, or None if it was flagged invalid."""
        return self._entry(k, n)

    def staircase(self, n):
        """``eps_{2j}^(n-2j)`` with ``j = n // 2``: one new element per step.

        If that entry is invalid, the nearest earlier valid staircase value is
        returned instead.
        """
        if not 0 <= n < self.n_terms:
            raise IndexError(f"staircase index {n} outside 0..{self.n_terms - 1}")
        for m in range(n, -1, -1):
            j = m // 2
            value = self._cols[2 * j + 1][m - 2 * j]
            if value is not None:
                return value
        raise AssertionError("eps_0^(0) is always valid")

    def staircase_sequence(self):
        return [self.staircase(n) for n in range(self.n_terms)]

    def even_column(self, j):
        """Approximants ``eps_{2j}^(n)`` for all available ``n``."""
        return list(self._cols[2 * j + 1])


def wynn_epsilon(seq):
    """Run Wynn's epsilon algorithm on ``seq`` and return the full table."""
    return EpsilonTable(seq)
