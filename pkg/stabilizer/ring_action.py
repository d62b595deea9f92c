from __future__ import annotations

from typing import Optional

from series import ScaledSeries, compose, invert_unit
from .action_driver import AUTO, act_u1
from .action_on_u import act_u
from .group import GroupElem


def act_on_ring_element(g: GroupElem, s: ScaledSeries, d: int = 0, method: str = AUTO,
                        budget: Optional[int] = None) -> ScaledSeries:
    """
    g acting on s(u1) u^d: W(F_{q^2})-linearly, by u1 -> g.u1 and u -> g.u = u Theta(u1).
    The result is returned as the series multiplying u^d, truncated like s.
    :param d: the power of u, any integer; d != 0 needs an odd residue degree
    """
    wmax = s.wmax
    gamma = act_u1(g, wmax, method, budget).as_u1_series()
    result = compose(s, gamma)
    if d:
        theta = act_u(g, wmax, method, budget).as_u1_series()
        if d < 0:
            theta, d = invert_unit(theta), -d
        for _ in range(d):
            result = result * theta
    return result
