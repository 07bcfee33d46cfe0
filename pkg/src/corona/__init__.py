"""Edge-ideal invariants of corona products of graphs.

Closed forms for depth, Stanley depth, regularity, projective dimension,
Krull dimension and Cohen-Macaulayness of ``S/I(X ⊙ H)``, together with
brute-force oracles (Hochster Betti tables, exact independence and induced
matching numbers, interval-partition Stanley depth) to check them against.
"""

from .errors import CapacityError, CoronaError, NeedsOracleError, ParseError, SpecError
from .graphs import Graph, build, bristle, corona, disjoint_union, induced_subgraph
from .dsl import parse_spec
from .oracle import BettiTable, betti_table, sdepth_oracle
from .formulas import base_invariants, depth_formula, reg_formula, sdepth_formula

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "CapacityError",
    "CoronaError",
    "Graph",
    "NeedsOracleError",
    "ParseError",
    "SpecError",
    "base_invariants",
    "betti_table",
    "bristle",
    "build",
    "corona",
    "depth_formula",
    "disjoint_union",
    "induced_subgraph",
    "parse_spec",
    "reg_formula",
    "sdepth_formula",
    "sdepth_oracle",
]
