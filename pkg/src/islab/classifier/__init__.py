"""Detectors from the inductive counting argument: light vertices, configurations,
the F- and A-class assignment and the class-level vertex sets."""

from .classify import (
    F1, F2, F3, T_Q, ClassVerdict, assign_a_class, classify_graph, regime_report, tstar_area,
    tstar_member,
)
from .light import (
    ASYMMETRIC, IDENTICAL, IRREGULAR, Configuration, DoublyLight, LightWitness, Psi, a_set,
    find_any_configuration, find_configuration, find_doubly_light, is_i_light,
    is_linear_forest_4, light_classes, pair_class,
)
from .sets import ClassSets, PropBeta, c_of, class_sets, has_63_forest, order_is_high, prop_beta_check, y_set
from .verify import dichotomy_holds, recheck_verdict

__all__ = [
    "ASYMMETRIC", "ClassSets", "ClassVerdict", "Configuration", "DoublyLight", "F1", "F2", "F3",
    "IDENTICAL", "IRREGULAR", "LightWitness", "PropBeta", "Psi", "T_Q", "a_set", "assign_a_class",
    "c_of", "class_sets", "classify_graph", "dichotomy_holds", "find_any_configuration",
    "find_configuration", "find_doubly_light", "has_63_forest", "is_i_light", "is_linear_forest_4",
    "light_classes", "order_is_high", "pair_class", "prop_beta_check", "recheck_verdict",
    "regime_report", "tstar_area", "tstar_member", "y_set",
]
