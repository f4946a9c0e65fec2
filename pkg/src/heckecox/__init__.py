"""Exact character values of generic Iwahori-Hecke algebras on Coxeter elements."""

from .coxvalues import CoxValue, cox_table, cox_value, epsilon_sum_check, exponent_table, m_from_a
from .labels import enumerate_labels, format_label, label_count, parse_label
from .laurent import LaurentHalf, RatFun, U, V, lh_format, lh_parse
from .weyl import WeylType, coxeter_number, parse_type

__all__ = [
    "CoxValue",
    "LaurentHalf",
    "RatFun",
    "U",
    "V",
    "WeylType",
    "cox_table",
    "cox_value",
    "coxeter_number",
    "enumerate_labels",
    "epsilon_sum_check",
    "exponent_table",
    "format_label",
    "label_count",
    "lh_format",
    "lh_parse",
    "m_from_a",
    "parse_label",
    "parse_type",
]

__version__ = "0.1.0"
