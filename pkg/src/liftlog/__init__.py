"""Exact computations with liftable derivations of monomial ideals.

The main entry points are re-exported here; see the submodules for the rest.
"""

__version__ = "0.1.0"

from .monomial import MonomialIdeal, RingContext, member, power, product, quotient, radical
from .parsing import parse_ring_and_ideal
from .newton import newton_polyhedron
from .closures import integral_closure, integral_member_oracle, rr_closure
from .derivations import GradedDerivation, DerivationModule, module_equal, staircase_T_2var, tangent_module
from .valuations import WeightValuation, liftable_module, log_module, rees_valuations, sandwich_report
from .charts import MonomialMap, chart_liftable, direct_lift, lifts_regularly, tangency_check
from .semigroup import NumericalSemigroup, SemigroupIdeal, sgr_rr_closure, sgr_tangent

__all__ = [
    "MonomialIdeal", "RingContext", "member", "power", "product", "quotient", "radical",
    "parse_ring_and_ideal", "newton_polyhedron",
    "integral_closure", "integral_member_oracle", "rr_closure",
    "GradedDerivation", "DerivationModule", "module_equal", "staircase_T_2var", "tangent_module",
    "WeightValuation", "liftable_module", "log_module", "rees_valuations", "sandwich_report",
    "MonomialMap", "chart_liftable", "direct_lift", "lifts_regularly", "tangency_check",
    "NumericalSemigroup", "SemigroupIdeal", "sgr_rr_closure", "sgr_tangent",
]
