from __future__ import annotations

from typing import List

from series import f_and_f1_from_matrices
from witt import ScaledWitt, WittElem
from .abstract_method import ActionMethod
from ..action_result import Method
from ..powers import PowerTable, composed_coefficient


class FunctionalMethod(ActionMethod):
    """
    Solves f1(G) (sigma(alpha1) f1 + alpha0 f) = f(G) (sigma(alpha0) f1 + pi alpha1 f) for G = g.u1 degree by degree,
    with f and f1 taken from the transfer matrix products, independently of the Lambda sums.

    gamma_n enters the degree n part only through f1(G) = G + ..., against the constant term alpha0 of
    sigma(alpha1) f1 + alpha0 f, so each degree costs one division by alpha0. The constant terms of the
    two sides differ by pi alpha1 and are not part of the system.
    """
    name = 'functional'
    method = Method.FUNCTIONAL

    def _prepare(self):
        g = self.g
        f, f1 = f_and_f1_from_matrices(self.q, self.params, self.wmax)
        self.f_terms = [(L, c) for L, c in enumerate(f.scaled_coefficients()) if L and not c.is_zero()]
        self.f1_terms = [(L, c) for L, c in enumerate(f1.scaled_coefficients()) if L and not c.is_zero()]
        self.left = (f1 * g.alpha1.frobenius() + f * g.alpha0).scaled_coefficients()
        self.right = (f1 * g.alpha0.frobenius() + f * (g.alpha1 * self.params.p)).scaled_coefficients()
        self.table = PowerTable(self.params, max(L for L, _ in self.f_terms + self.f1_terms))
        self.f_of_gamma: List[ScaledWitt] = [ScaledWitt.of(1, self.params)]
        self.f1_of_gamma: List[ScaledWitt] = [ScaledWitt.zero(self.params)]

    def _solve_degree(self, n: int) -> ScaledWitt:
        self.table.advance()
        self.f_of_gamma.append(composed_coefficient(self.table, self.f_terms, n))
        self.f1_of_gamma.append(composed_coefficient(self.table, self.f1_terms, n))
        residual = ScaledWitt.zero(self.params)
        for j in range(n + 1):
            residual = residual + self.f1_of_gamma[j] * self.left[n - j] - self.f_of_gamma[j] * self.right[n - j]
        return -(residual * self.inverse_alpha0)

    def _accept(self, n: int, value: WittElem, prec: int):
        self.table.set_gamma(n, value, prec)
        self.f1_of_gamma[n] = self.f1_of_gamma[n] + ScaledWitt(value, 0, prec)
