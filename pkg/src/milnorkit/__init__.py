"""Exact symbol and residue calculus over truncated polynomial rings.

Everything is computed over the rational function field in x1..xr with
exact rational arithmetic; there are no floating-point code paths.
"""

from .errors import (
    DivisionByZero,
    MilnorkitError,
    NotAUnit,
    ParseError,
    PrecisionMismatch,
    PreconditionError,
    VariableCountMismatch,
)
from .field import BACKEND, Poly, RationalFunction
from .series import (
    INF,
    Series,
    ser_congruent_mod,
    ser_exp,
    ser_log,
    ser_norm,
)
from .forms import (
    KForm,
    LaurentForm,
    RelClass,
    SeriesForm,
    form_d,
    form_dlog,
    form_normalize_relative,
    form_reduce_mod_km,
    form_residue,
    form_wedge,
    laurent_d,
    rel_embed,
)
from .milnor import (
    MilnorChain,
    MilnorSymbol,
    mil_rel_expand,
    phi,
    psi_general,
    psi_slot,
    rel_class,
    rel_eq,
)
from .cycles import (
    GraphCycle,
    PerturbedFamily,
    TriangularSystem,
    chain_regulator,
    cyc_approximate_polynomial,
    cyc_ball_member,
    cyc_check_multiplicativity,
    cyc_check_steinberg,
    cyc_graph_move,
    cyc_mod_tm_equal,
    cyc_perturb,
    cyc_regulator,
    cyc_specialize,
    cyc_validate_triangular,
    graph_to_triangular,
)
from .parser import parse_field, parse_series

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DivisionByZero",
    "GraphCycle",
    "INF",
    "KForm",
    "LaurentForm",
    "MilnorChain",
    "MilnorSymbol",
    "MilnorkitError",
    "NotAUnit",
    "ParseError",
    "PerturbedFamily",
    "Poly",
    "PrecisionMismatch",
    "PreconditionError",
    "RationalFunction",
    "RelClass",
    "Series",
    "SeriesForm",
    "TriangularSystem",
    "VariableCountMismatch",
    "chain_regulator",
    "cyc_approximate_polynomial",
    "cyc_ball_member",
    "cyc_check_multiplicativity",
    "cyc_check_steinberg",
    "cyc_graph_move",
    "cyc_mod_tm_equal",
    "cyc_perturb",
    "cyc_regulator",
    "cyc_specialize",
    "cyc_validate_triangular",
    "form_d",
    "form_dlog",
    "form_normalize_relative",
    "form_reduce_mod_km",
    "form_residue",
    "form_wedge",
    "graph_to_triangular",
    "laurent_d",
    "mil_rel_expand",
    "parse_field",
    "parse_series",
    "phi",
    "psi_general",
    "psi_slot",
    "rel_class",
    "rel_eq",
    "ser_congruent_mod",
    "ser_exp",
    "ser_log",
    "ser_norm",
    "__version__",
]
