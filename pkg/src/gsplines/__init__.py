"""Generalized splines over the integers on edge-labeled graphs."""

from .arith import Congruence, CrtSolution, crt_pair, crt_system, gcd_all, lcm_all
from .cycle import (
    DecompositionResult,
    FlowUpBasis,
    FlowUpClass,
    add_leading_zero,
    contract_first_edge,
    decompose,
    flowup_basis,
    recombine,
    smallest_flowup,
    smallest_leading_entry,
)
from .errors import BudgetExceeded, ConsistencyError, DomainError
from .families import complete_extend, complete_verify, star_center, wheel_extend, wheel_verify
from .graph import Edge, EdgeLabeledGraph, make_complete, make_cycle, make_general, make_star, make_wheel
from .oracle import EnumerationReport, enumerate_splines, minimality_scan, span_check
from .spline import Spline, Verdict, Violation, add, scale, verify

__version__ = "0.1.0"
