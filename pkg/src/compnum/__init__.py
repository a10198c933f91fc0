"""Certified upper bounds on competition numbers of graphs with few holes."""

from .certificate import Certificate, DerivationNode, parse_certificate, render_certificate
from .constructions import avoid2_decompose, certify, chordal_witness, compose, find_removable_edge
from .errors import BudgetExhausted, GraphError, ParseError, StructuralViolation
from .exact import SolveBudget, exact_k, feasible
from .graph import Digraph, Edge, Graph, parse_digraph, parse_graph, serialize_digraph, serialize_graph
from .holes import Hole, analyze, chordality, enumerate_holes, is_chordal, x_set
from .kernels import BACKEND
from .verifier import competition_graph, is_acyclic, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BudgetExhausted", "Certificate", "DerivationNode", "Digraph", "Edge",
    "Graph", "GraphError", "Hole", "ParseError", "SolveBudget", "StructuralViolation",
    "analyze", "avoid2_decompose", "certify", "chordal_witness", "chordality",
    "competition_graph", "compose", "enumerate_holes", "exact_k", "feasible",
    "find_removable_edge", "is_acyclic", "is_chordal", "parse_certificate",
    "parse_digraph", "parse_graph", "render_certificate", "serialize_digraph",
    "serialize_graph", "verify_certificate", "x_set",
]
