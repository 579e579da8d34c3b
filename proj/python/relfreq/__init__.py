"""Availability and failure frequency of repairable systems via transfer matrices.

Rational inputs may be given as ``str`` ("3/4", "0.9"), ``int`` or
``fractions.Fraction``. Reports come back as dicts whose exact quantities are
``Fraction`` objects (``None`` in approximate mode).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _core
from ._core import (
    ParseError,
    RelfreqError,
    ValidationError,
    alpha_plus,
    asymptotic_rate,
    eigenvalues,
    first_order_rate,
    log_derivatives,
)

__all__ = [
    "ParseError",
    "RelfreqError",
    "ValidationError",
    "alpha_plus",
    "asymptotic_rate",
    "eigenvalues",
    "first_order_rate",
    "kofn_g_identical",
    "ladder_closed_form",
    "ladder_frequency",
    "log_derivatives",
    "rate_operator",
    "series_coeffs",
    "solve",
    "sweep",
    "verify",
]

_QUANTITIES = ("availability", "unavailability", "frequency", "rate")


def _text(x: Any) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _decode(text: str) -> dict:
    report = json.loads(text)
    for key in _QUANTITIES:
        q = report[key]
        if q["rational"] is not None:
            q["rational"] = Fraction(q["rational"])
    return report


def solve(config: dict | str, mode: str = "exact") -> dict:
    """Evaluate a system description (dict or JSON text)."""
    text = config if isinstance(config, str) else json.dumps(config)
    return _decode(_core.solve_json(text, mode))


def kofn_g_identical(k: int, n: int, p, lam, mode: str = "exact") -> dict:
    return _decode(_core.kofn_g_identical(k, n, _text(p), _text(lam), mode))


def ladder_closed_form(p, rho, n: int, mode: str = "approx") -> dict:
    out = _core.ladder_closed_form(_text(p), _text(rho), n, mode)
    for q in out.values():
        if q["rational"] is not None:
            q["rational"] = Fraction(q["rational"])
    return out


def ladder_frequency(p, rho, lam, xi, n: int, terminal: str = "Tn", mode: str = "exact") -> dict:
    return _decode(_core.ladder_frequency(_text(p), _text(rho), _text(lam), _text(xi), n, terminal, mode))


def series_coeffs(family: str, k: int, order: int, lam=1) -> list[list[Fraction]]:
    """Coefficients of z^0..z^order; each is a list of coefficients in p."""
    return [[Fraction(c) for c in row] for row in _core.series_coeffs(family, k, order, _text(lam))]


def rate_operator(expression: str, rates: dict) -> str:
    return _core.rate_operator(expression, [(k, _text(v)) for k, v in rates.items()])


def verify(max_components: int = 10, instances: int = 200, seed: int = 2007) -> dict:
    return _core.verify(max_components, instances, seed)


def sweep(family: str, parameter: str, range: str, **kwargs) -> str:
    for key in ("p", "rho", "lam", "xi"):
        if key in kwargs:
            kwargs[key] = _text(kwargs[key])
    return _core.sweep(family, parameter, range, **kwargs)
