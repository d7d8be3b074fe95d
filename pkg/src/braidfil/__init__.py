"""Fillability toolkit for Legendrian 3-braid closures."""

from .braid import (
    BraidWord,
    GarsideForm,
    QuasipositivityCertificate,
    garside_decompose,
    group_equal,
    is_quasipositive,
    monoid_equal,
    parse_braid,
    positive_normal_form,
    qp_prefilter,
    quasipositive_bruteforce,
    signed_length,
)
from .laurent import LaurentPoly2

__all__ = [
    "BraidWord",
    "GarsideForm",
    "LaurentPoly2",
    "QuasipositivityCertificate",
    "garside_decompose",
    "group_equal",
    "is_quasipositive",
    "monoid_equal",
    "parse_braid",
    "positive_normal_form",
    "qp_prefilter",
    "quasipositive_bruteforce",
    "signed_length",
]
