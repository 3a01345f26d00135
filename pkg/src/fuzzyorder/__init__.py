"""Finite ordered fuzzy sets valued in continuous t-norms.

Categories enriched in the quantaloid of diagonals of a continuous t-norm,
their weights and coweights, nets, and the Cauchy / forward Cauchy /
biCauchy / flat classification with the matching completeness notions.
"""
from .category import (DQCategory, PartialMetricSpace, ValidationReport, final_prop_category, from_pms,
                       idempotent_counterexample, min_category, to_pms, transitive_closure)
from .classify import (CompletenessReport, FlatStatus, FlatVerdict, check_flat, classify_weight, completeness,
                       forward_cauchy_weights, is_bicauchy_weight, is_cauchy, is_forward_cauchy_weight,
                       pms_flat_conditions, reconstruct_net, refute_flat, transfer_classification,
                       verify_refutation)
from .diagonal import DiagArrow, compose, left_residual, right_residual
from .errors import *  # noqa: F401,F403
from .instance import Instance
from .nets import (EPSequence, bilimits, classify_net, generated_coweight, generated_weight, is_bilimit,
                   is_yoneda_limit, yoneda_limits)
from .presheaf import (Coweight, Distributor, Weight, canonical_left_adjoint, compose_cw, compose_wc,
                       coweight_closure, coyoneda, phom, supremum, trivial_weight, weight_closure, yoneda)
from .tnorm import EPS, GODEL, LUKASIEWICZ, PRODUCT, TNorm, shrink_delta, uniform_delta

__version__ = "0.1.0"
