from .group import GroupElem, group_mul
from .action_result import ActionResult, Method, Target
from .action_driver import ActionDriver, act_u1, act_u1_recursive, act_u1_trees, act_u1_functional, internal_element
from .action_on_u import act_u, theta_values
from .witt_subgroup import witt_act_u1, witt_act_u, witt_act_u1_recursion, degree_support_check
from .closed_forms import LowDegreeTable, closed_gamma, low_degree_closed, low_degree_u_closed
from .ring_action import act_on_ring_element
from .linearity import LinearityReport, classify_linear, composition_convention
from .gating import requires_odd_residue_degree, requires_prime_residue_field
from .powers import PowerTable, truncated_powers
from .errors import (ActionError, ResidueDegreeError, ResidueDegreeParityError, OracleMismatchError,
                     IntegralityError, UnknownMethodError)
