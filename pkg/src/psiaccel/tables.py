"""Convergence tables for psi(1+z) and their CSV / markdown rendering."""

import csv
import io
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Optional

from .digamma import DigammaConfig, digamma, psi_approximants, series_approximants

TABLE_ARGUMENTS = {
    1: 1.0,
    2: complex(0.5, math.sqrt(3) / 2),
}
TABLE_LAST_N = {1: 14, 2: 15}


@dataclass(frozen=True)
class OutputRow:
    n: int
    raw: complex
    t_value: complex
    eps_value: Optional[complex] = None


@dataclass(frozen=True)
class ConvergenceTable:
    table_id: int
    z: complex
    rows: tuple
    psi_t: complex
    psi_eps: Optional[complex]

    @property
    def has_epsilon(self):
        return self.psi_eps is not None


def build_table(table_id):
    """Rows ``n = 0..14`` (table 1, z = 1) or ``0..15`` (table 2, z = e^{i pi/3})."""
    if table_id not in TABLE_ARGUMENTS:
        raise ValueError(f"table id must be 1 or 2, got {table_id!r}")
    z = TABLE_ARGUMENTS[table_id]
    last = TABLE_LAST_N[table_id]
    raw = series_approximants(z, "raw_series", last)
    tvals = series_approximants(z, "t_transform", last)
    with_eps = table_id == 1
    eps = series_approximants(z, "epsilon", last) if with_eps else [None] * (last + 1)
    rows = tuple(OutputRow(n, raw[n], tvals[n], eps[n]) for n in range(last + 1))
    psi_t = digamma(z, DigammaConfig(method="t_transform")).value
    psi_eps = digamma(z, DigammaConfig(method="epsilon")).value if with_eps else None
    return ConvergenceTable(table_id, z, rows, psi_t, psi_eps)


def format_real(x, digits, group=False):
    """Fixed-point string with ``digits - 1`` decimals, rounded half-even.

    For numbers of order one this keeps ``digits`` significant figures,
    the usual layout of convergence tables.
    """
    q = Decimal(x).quantize(Decimal(1).scaleb(-(digits - 1)), rounding=ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)
    text = f"{q:f}"
    if group and "." in text:
        head, frac = text.split(".")
        frac = " ".join(frac[i : i + 3] for i in range(0, len(frac), 3))
        text = f"{head}.{frac}"
    return text


def format_scalar(value, digits, group=False):
    if not isinstance(value, complex):
        return format_real(value, digits, group)
    re = format_real(value.real, digits, group)
    im = format_real(value.imag, digits, group)
    if im.startswith("-"):
        return f"{re} - {im[1:]} i"
    return f"{re} + {im} i"


def _columns(table):
    cols = [("raw", "-gamma + z Z_n(z)"), ("t", "-gamma + z T_n^(0)")]
    if table.has_epsilon:
        cols.append(("eps", "-gamma + z eps_{2[n/2]}^(n-2[n/2])"))
    return cols


def render_markdown(table, digits):
    cols = _columns(table)
    lines = [
        "| n | " + " | ".join(title for _, title in cols) + " |",
        "|---:|" + "---:|" * len(cols),
    ]
    for row in table.rows:
        vals = {"raw": row.raw, "t": row.t_value, "eps": row.eps_value}
        cells = [format_scalar(vals[key], digits, group=True) for key, _ in cols]
        lines.append(f"| {row.n} | " + " | ".join(cells) + " |")
    final = {"raw": "", "t": format_scalar(table.psi_t, digits, True)}
    if table.has_epsilon:
        final["eps"] = format_scalar(table.psi_eps, digits, True)
    lines.append("| psi(1+z) | " + " | ".join(final[key] for key, _ in cols) + " |")
    return "\n".join(lines) + "\n"


def render_csv(table, digits):
    cols = [key for key, _ in _columns(table)]
    is_complex = isinstance(table.z, complex)
    header = ["n"]
    for key in cols:
        header += [f"{key}_re", f"{key}_im"] if is_complex else [key]

    def cells(value):
        if value is None:
            return [""] * (2 if is_complex else 1)
        if is_complex:
            return [format_real(value.real, digits), format_real(value.imag, digits)]
        return [format_real(value, digits)]

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in table.rows:
        vals = {"raw": row.raw, "t": row.t_value, "eps": row.eps_value}
        out = [str(row.n)]
        for key in cols:
            out += cells(vals[key])
        writer.writerow(out)
    final = {"raw": None, "t": table.psi_t, "eps": table.psi_eps}
    out = ["psi"]
    for key in cols:
        out += cells(final[key])
    writer.writerow(out)
    return buf.getvalue()


def render_table(table, digits, fmt):
    if fmt == "csv":
        return render_csv(table, digits)
    if fmt == "markdown":
        return render_markdown(table, digits)
    raise ValueError(f"unknown format {fmt!r}")


@dataclass(frozen=True)
class CompareRow:
    n: int
    raw_error: float
    t_error: float
    eps_error: float


def compare_methods(z, max_n, reference_order=40):
    """Per-order errors of the three approximant families against a reference.

    The reference is the adaptive T-transform value at up to
    ``reference_order``. Returns ``(rows, reference_result)``.
    """
    ref = digamma(z, DigammaConfig(max_order=max(reference_order, max_n), method="t_transform"))
    _, raw = psi_approximants(z, "raw_series", max_n)
    _, tv = psi_approximants(z, "t_transform", max_n)
    _, ev = psi_approximants(z, "epsilon", max_n)
    rows = tuple(
        CompareRow(n, abs(raw[n] - ref.value), abs(tv[n] - ref.value), abs(ev[n] - ref.value))
        for n in range(max_n + 1)
    )
    return rows, ref


def render_compare(rows, fmt):
    header = ["n", "raw_error", "t_error", "eps_error"]
    body = [[str(r.n)] + [f"{e:.3e}" for e in (r.raw_error, r.t_error, r.eps_error)] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|---:|---:|---:|---:|"]
    lines += ["| " + " | ".join(r) + " |" for r in body]
    return "\n".join(lines) + "\n"
