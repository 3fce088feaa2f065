import os

_data = os.path.join(os.path.dirname(__file__), "data")
if os.path.isdir(_data):
    os.environ.setdefault("LIEHR_CATALOG", os.path.join(_data, "catalog.json"))
    os.environ.setdefault("LIEHR_RULES", os.path.join(_data, "rules.json"))

from ._liehr import (  # noqa: E402,F401
    DataError,
    DomainError,
    InconsistencyError,
    ParseError,
    classify,
    fs_indicator,
    homogeneity_rank,
    min_degree_quaternionic,
    min_degree_real,
    rep_dim,
    rep_info,
    solve_eq9,
    solve_eq10,
    verify,
)
