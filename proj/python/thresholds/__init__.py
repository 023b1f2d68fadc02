"""Exact singularity thresholds.

Thin wrappers over the C++ core. Exact values come back as
``fractions.Fraction`` (or ``math.inf`` for an infinite threshold); ideals
are comma-separated generator strings such as ``"x^2, y^3"``.
"""

from fractions import Fraction
import math

from . import _core
from ._core import BudgetExceeded, NotStabilized, check_amgm, default_grid, frobenius_root, is_ordinary_cubic, multiplicity, nu, nu_sequence

__all__ = [
    "BudgetExceeded",
    "NotStabilized",
    "arnold_multiplicity",
    "check_amgm",
    "compare_diagonal",
    "cusp_fpt",
    "default_grid",
    "fjump",
    "fpt",
    "frobenius_root",
    "golden_ratio",
    "hyperbola_valuation",
    "is_ordinary_cubic",
    "lct_diagonal",
    "lct_monomial",
    "lct_polynomial",
    "multiplicity",
    "nu",
    "nu_sequence",
    "tau",
]


def _q(text):
    return math.inf if text == "inf" else Fraction(text)


def _pair(pair):
    return (Fraction(pair[0]), Fraction(pair[1]))


def _threshold(d):
    d = dict(d)
    d["lo"], d["hi"] = Fraction(d["lo"]), Fraction(d["hi"])
    return d


def lct_monomial(ideal):
    return _q(_core.lct_monomial(ideal))


def lct_diagonal(exponents):
    return Fraction(_core.lct_diagonal(list(exponents)))


def lct_polynomial(poly):
    return _q(_core.lct_polynomial(poly))


def arnold_multiplicity(ideal):
    return Fraction(_core.arnold_multiplicity(ideal))


def cusp_fpt(p):
    return Fraction(_core.cusp_fpt(p))


def fpt(ideal, p, e_max=4):
    """Threshold (exact or enclosed) with the nu values and raw enclosure."""
    d = _threshold(_core.fpt(ideal, p, e_max))
    d["enclosure"] = _pair(d["enclosure"])
    return d


def tau(ideal, p, exponent, e_max=5):
    return _core.tau(ideal, p, str(Fraction(exponent)), e_max)


def fjump(ideal, p, lambda_max=1, grid=None):
    d = _core.fjump(ideal, p, str(Fraction(lambda_max)), grid)
    for j in d["jumps"]:
        j["exponent"] = Fraction(j["exponent"])
    return d


def golden_ratio(m_max=2048):
    d = dict(_core.golden_ratio(m_max))
    d["estimate"] = Fraction(d["estimate"])
    d["tolerance"] = Fraction(d["tolerance"])
    d["limit"] = _pair(d["limit"])
    return d


def hyperbola_valuation(weights, m_max=2048):
    d = dict(_core.hyperbola_valuation([str(Fraction(w)) for w in weights], m_max))
    d["estimate"] = Fraction(d["estimate"])
    d["limit"] = _pair(d["limit"])
    return d


def compare_diagonal(exponents, primes, e_max=3):
    rows = []
    for r in _core.compare_diagonal(list(exponents), list(primes), e_max):
        r = dict(r)
        r["fpt"] = _threshold(r["fpt"])
        r["lct0"] = Fraction(r["lct0"])
        rows.append(r)
    return rows
