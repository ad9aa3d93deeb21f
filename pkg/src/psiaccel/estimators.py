"""scikit-learn compatible wrappers around the accelerators and psi(1+z).

All three transformers are stateless apart from the input width recorded in
``fit``, so they drop into pipelines and ``clone`` like any other estimator.
Complex input is supported (scikit-learn's own ``check_array`` rejects it,
hence the local validation helpers).
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_sequence_array
from .accel import t_transform_diagonal, wynn_epsilon
from .digamma import DigammaConfig, digamma, normalize_method


class _SequenceTransformer(TransformerMixin, BaseEstimator):
    def fit(self, X, y=None):
        X = check_sequence_array(X)
        self.n_features_in_ = X.shape[1]
        self._validate_params(X)
        return self

    def _validate_params(self, X):
        pass

    def _check_input(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_sequence_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} terms per sequence, but {type(self).__name__} "
                f"was fitted with {self.n_features_in_}"
            )
        return X


class TTransformer(_SequenceTransformer):
    """Accelerate each row of ``X`` with the ``T`` transformation.

    Parameters
    ----------
    ratios : array-like or callable
        Known ratios ``q_1, q_2, ...``. Either an array of shape
        ``(n_terms - 1,)`` shared by all rows, an array of shape
        ``(n_sequences, n_terms - 1)`` with one row of ratios per sequence, or
        a callable ``j -> q_j``.

    Notes
    -----
    ``transform`` returns, for each row ``s_0 .. s_{N-1}``, the diagonal
    ``T_0^(0), ..., T_{N-1}^(0)``.
    """

    def __init__(self, ratios=None):
        self.ratios = ratios

    def _ratio_rows(self, n_rows, n_terms):
        if self.ratios is None:
            raise ValueError("TTransformer requires ratios")
        if callable(self.ratios):
            row = [self.ratios(j) for j in range(1, n_terms)]
            return [row] * n_rows
        q = np.asarray(self.ratios)
        if q.ndim == 1:
            if q.shape[0] < n_terms - 1:
                raise ValueError(f"need {n_terms - 1} ratios, got {q.shape[0]}")
            return [list(q[: n_terms - 1])] * n_rows
        if q.ndim == 2 and q.shape[0] == n_rows and q.shape[1] >= n_terms - 1:
            return [list(r[: n_terms - 1]) for r in q]
        raise ValueError(f"ratios of shape {q.shape} do not match {n_rows} sequences of {n_terms} terms")

    def _validate_params(self, X):
        self._ratio_rows(X.shape[0], X.shape[1])

    def transform(self, X):
        X = self._check_input(X)
        rows = self._ratio_rows(*X.shape)
        out = [t_transform_diagonal(list(x), q) for x, q in zip(X, rows)]
        dtype = np.complex128 if np.iscomplexobj(X) or np.iscomplexobj(np.asarray(rows)) else np.float64
        return np.asarray(out, dtype=dtype)


class WynnEpsilonTransformer(_SequenceTransformer):
    """Replace each row by its epsilon-algorithm staircase approximants.

    Element ``n`` of the output is ``eps_{2[n/2]}^(n - 2[n/2])``, which uses
    exactly the first ``n + 1`` input terms.
    """

    def transform(self, X):
        X = self._check_input(X)
        out = [wynn_epsilon(list(x)).staircase_sequence() for x in X]
        return np.asarray(out, dtype=X.dtype)


class DigammaTransformer(TransformerMixin, BaseEstimator):
    """Map every entry ``z`` of ``X`` to ``psi(1 + z)``.

    Parameters
    ----------
    method : {"t_transform", "epsilon", "raw_series"}
    max_order : int
    tol : float
    """

    def __init__(self, method="t_transform", max_order=40, tol=1e-15):
        self.method = method
        self.max_order = max_order
        self.tol = tol

    def fit(self, X, y=None):
        normalize_method(self.method)
        X = np.asarray(X)
        self.n_features_in_ = X.shape[1] if X.ndim == 2 else 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = np.asarray(X)
        if np.iscomplexobj(X):
            X = X.astype(np.complex128)
        else:
            X = X.astype(np.float64)
        config = DigammaConfig(self.max_order, self.tol, self.method)
        out = np.empty_like(X)
        for idx, z in np.ndenumerate(X):
            out[idx] = digamma(z.item(), config).value
        return out
