# services/homrep/__init__.py
from services.homrep.admissibility import admissibility, constraint_set, evaluate_constraints
from services.homrep.audit import audit_section3
from services.homrep.checks import (
    check_compat_27,
    check_homrep_26,
    check_weight_module,
    is_weight_module,
)
from services.homrep.models import Admissible, HomModuleSpec
from services.homrep.solver import TwistSolution, solve_twist_window
from services.homrep.twist import closed_form_matrix, derive_spec, hom_act, hom_act_printed, twist, twist_vec

__all__ = [
    "Admissible",
    "HomModuleSpec",
    "TwistSolution",
    "admissibility",
    "audit_section3",
    "check_compat_27",
    "check_homrep_26",
    "check_weight_module",
    "closed_form_matrix",
    "constraint_set",
    "derive_spec",
    "evaluate_constraints",
    "hom_act",
    "hom_act_printed",
    "is_weight_module",
    "solve_twist_window",
    "twist",
    "twist_vec",
]
