"""Input validation helpers shared by the functional API and estimators."""

import math
import numbers

import numpy as np

from .exceptions import PoleError


def check_scalar(z, name="z"):
    """Return ``z`` as a Python float or complex, rejecting non-finite values."""
    if isinstance(z, (bool, np.bool_)):
        raise TypeError(f"{name} must be a number, got bool")
    if isinstance(z, numbers.Real):
        z = float(z)
        if not math.isfinite(z):
            raise ValueError(f"{name} must be finite, got {z!r}")
        return z
    if isinstance(z, numbers.Complex):
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"{name} must be finite, got {z!r}")
        if z.imag == 0.0:
            return z.real
        return z
    raise TypeError(f"{name} must be a real or complex number, got {type(z).__name__}")


def check_int(value, name, minimum=None):
    if isinstance(value, (bool, np.bool_)) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_positive(value, name):
    value = float(value)
    if not (value > 0 and math.isfinite(value)):
        raise ValueError(f"{name} must be a finite positive number, got {value!r}")
    return value


def negative_integer(z):
    """Return the integer ``-j`` if ``z`` equals a negative integer, else None."""
    if isinstance(z, complex):
        if z.imag != 0.0:
            return None
        z = z.real
    if z < 0 and z == math.floor(z):
        return int(z)
    return None


def check_not_negative_integer(z, what="function"):
    j = negative_integer(z)
    if j is not None:
        raise PoleError(f"{what} has a pole at z = {j}")


def check_sequence_array(X, name="X"):
    """Validate a 2-D array of sequences (one sequence per row).

    A 1-D input is treated as a single sequence. Complex input is kept
    complex; everything else is converted to float64.

    Returns
    -------
    ndarray of shape (n_sequences, n_terms)
    """
    X = np.asarray(X)
    if X.dtype == object:
        raise TypeError(f"{name} must be numeric")
    if np.iscomplexobj(X):
        X = X.astype(np.complex128)
    else:
        X = X.astype(np.float64)
    if X.ndim == 1:
        X = X[np.newaxis, :]
    if X.ndim != 2:
        raise ValueError(f"{name} must be 1-D or 2-D, got shape {X.shape}")
    if X.shape[1] < 1:
        raise ValueError(f"{name} must contain at least one term per sequence")
    if not np.all(np.isfinite(X)):
        raise ValueError(f"{name} contains NaN or infinity")
    return X
