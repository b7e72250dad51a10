"""Chromatic symmetric and quasisymmetric functions of graphs, computed exactly."""

from .algebra import (
    QPolynomial,
    SymFuncExpansion,
    conjugate,
    dominates,
    partitions_of,
    q_factorial,
    q_integer,
)
from .csf import (
    closed_form_kab,
    coefficient_en_formula,
    coefficient_en_peo,
    coefficient_sum_by_length,
    e_expansion,
    monomial_expansion,
    schur_expansion_via_tableaux,
)
from .graphs import Graph, enumerate_nuig, graph_from_edges, graph_from_hessenberg

__version__ = "0.1.0"
