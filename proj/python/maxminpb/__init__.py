"""Maxmin participatory budgeting: exact solvers, LP relaxation, axiom audit.

Thin convenience layer over the C++ extension. Exact rational quantities
(LP objectives, certificate ratios) cross the boundary as "num/den" strings
and are converted to fractions.Fraction here.
"""

from fractions import Fraction

from ._maxminpb import (
    Error,
    Instance,
    ParseError,
    ResourceLimitError,
    SizeError,
    ValidationError,
    audit,
    fill_range,
    generate,
    hcbp_check,
    maxmin_value,
    minimax_disutility_value,
    parse_native,
    parse_pabulib,
    scale_down,
    solve,
    utility,
    write_native,
)
from ._maxminpb import certificate as _certificate
from ._maxminpb import lp_relax as _lp_relax
from ._maxminpb import ordered_relax as _ordered_relax

__all__ = [
    "Error",
    "Instance",
    "ParseError",
    "ResourceLimitError",
    "SizeError",
    "ValidationError",
    "audit",
    "certificate",
    "fill_range",
    "generate",
    "hcbp_check",
    "lp_relax",
    "maxmin_value",
    "minimax_disutility_value",
    "ordered_relax",
    "parse_native",
    "parse_pabulib",
    "scale_down",
    "solve",
    "utility",
    "write_native",
]


def _fractionize_lp(lp):
    lp["objective"] = Fraction(lp["objective"])
    lp["selection"] = {
        pid: Fraction(x) for pid, x in lp["selection"].items()
    }
    return lp


def lp_relax(instance):
    """Exact LP relaxation; objective and selection become Fractions."""
    return _fractionize_lp(_lp_relax(instance))


def ordered_relax(instance):
    """LP-guided greedy fill; the embedded LP fields become Fractions."""
    res = _ordered_relax(instance)
    res["lp"] = _fractionize_lp(res["lp"])
    return res


def certificate(instance, selected, opt_value):
    """Additive bound certificate; ratio and bound_rhs become Fractions."""
    cert = _certificate(instance, selected, opt_value)
    if cert["ratio"] is not None:
        cert["ratio"] = Fraction(cert["ratio"])
    if cert["bound_rhs"] is not None:
        cert["bound_rhs"] = Fraction(cert["bound_rhs"])
    return cert
