"""Commuting graphs of finite groups: centralizers, exact spectra and closed-form predictions."""

import json

from ._commint import (
    CommutingGraph,
    Error,
    Group,
    build,
    catalog,
    center,
    centralizer,
    centralizer_count,
    char_poly,
    clique_union_spectrum,
    integer_spectrum,
    is_integral,
    max_noncommuting_set,
    predict_dihedral_quotient,
    predict_family,
    predict_order_p_cubed,
    predict_zpzp,
    quotient_by_center,
    read_cayley_text,
    recognize_small,
    write_cayley_text,
)
from ._commint import _corollaries_json, _verify_json


def verify_group(group, name="group", family=None):
    """Verification report as a dict; `family` is an optional catalog spec string."""
    return json.loads(_verify_json(group, name, family))


def verify_corollaries(group):
    """Centralizer-count corollary checklist as a dict."""
    return json.loads(_corollaries_json(group))


__all__ = [
    "CommutingGraph",
    "Error",
    "Group",
    "build",
    "catalog",
    "center",
    "centralizer",
    "centralizer_count",
    "char_poly",
    "clique_union_spectrum",
    "integer_spectrum",
    "is_integral",
    "max_noncommuting_set",
    "predict_dihedral_quotient",
    "predict_family",
    "predict_order_p_cubed",
    "predict_zpzp",
    "quotient_by_center",
    "read_cayley_text",
    "recognize_small",
    "verify_corollaries",
    "verify_group",
    "write_cayley_text",
]
