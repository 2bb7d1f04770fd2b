"""Exact canonical bases, mu-coefficients and Jones-type traces for
Temperley-Lieb quotients of Hecke algebras over arbitrary Coxeter graphs."""

__version__ = "0.1.0"

from .coxeter import (
    CoxeterGraph,
    GroupElement,
    bruhat_leq,
    classify,
    coset_decompose,
    enumerate_elements,
    normal_form,
    parse_element,
    parse_graph,
    preset,
)
from .hecke import HeckeAlgebra, HeckeElement, kl_tables
from .laurent import DeltaPoly, LaurentPoly, parse_poly
from .stars import (
    bipartite_coloring,
    check_property_F,
    check_property_S,
    k_epsilon,
    n_stat,
    star,
    star_reduction_paths,
)
from .tl import (
    TLAlgebra,
    TLElement,
    check_property_W,
    coeff_tables,
    dihedral_cbasis,
    lattice_membership,
)
from .trace import (
    PlanarDiagram,
    TraceTable,
    bilinear_form,
    builtin_trace,
    load_trace_table,
    mu_from_trace,
    mu_report,
    trace_of,
    verify_property_B,
)

__all__ = [
    "CoxeterGraph", "GroupElement", "bruhat_leq", "classify", "coset_decompose",
    "enumerate_elements", "normal_form", "parse_element", "parse_graph", "preset",
    "HeckeAlgebra", "HeckeElement", "kl_tables",
    "DeltaPoly", "LaurentPoly", "parse_poly",
    "bipartite_coloring", "check_property_F", "check_property_S", "k_epsilon",
    "n_stat", "star", "star_reduction_paths",
    "TLAlgebra", "TLElement", "check_property_W", "coeff_tables",
    "dihedral_cbasis", "lattice_membership",
    "PlanarDiagram", "TraceTable", "bilinear_form", "builtin_trace",
    "load_trace_table", "mu_from_trace", "mu_report", "trace_of",
    "verify_property_B",
    "__version__",
]
