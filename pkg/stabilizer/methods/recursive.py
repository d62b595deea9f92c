from __future__ import annotations

from itertools import accumulate
from typing import Dict, List, Tuple

from lambda_comb import LambdaSeq, lambda_table
from trees import vertex_factor
from witt import ScaledWitt
from .abstract_method import ActionMethod
from ..action_result import Method
from ..powers import truncated_powers


class RecursiveMethod(ActionMethod):
    """
    gamma_n = (1/alpha0) sum_K sum_(H, I) (-1)^|H| sigma^|I|(alpha_s) / pi^floor(s/2) prod_(k in K) gamma_k,
    s = |H| + |I| - 1, over the ordered compositions K != (n) and the H, I in Lambda with QH = |K| and
    QI = n - sum K.

    The sums over K collapse to coefficients of powers of G = sum_(k < n) gamma_k u1^k, recomputed from scratch
    at every degree. K = (n) is the only composition with QH = 1 and QI = 0, so leaving out the label ((0), ())
    removes it. Terms are ScaledWitt products carrying their precision: [u1^s] G^L is known to the lowest
    precision among gamma_1, ..., gamma_(s-L+1).
    """
    name = 'recursive'
    method = Method.RECURSIVE

    def _prepare(self):
        a0, a1 = self.g.alpha0, self.g.alpha1
        self.lambdas: Dict[int, List[LambdaSeq]] = lambda_table(self.q, self.wmax)
        self.vertex_factors: Dict[Tuple[LambdaSeq, LambdaSeq], ScaledWitt] = {}
        for qi, I_seqs in self.lambdas.items():
            for qh, H_seqs in self.lambdas.items():
                if qh + qi >= self.wmax:
                    break
                for H in H_seqs:
                    for I in I_seqs:
                        if (H, I) in (((), ()), ((0,), ())):
                            continue
                        factor = vertex_factor(H, I, a0, a1)
                        if any(factor.num.coeffs):
                            self.vertex_factors[H, I] = factor
        worst = max((factor.exp for factor in self.vertex_factors.values()), default=0)
        self.monitor.observe_exponent(worst, 'in the vertex factors')

    def _solve_degree(self, n: int) -> ScaledWitt:
        params = self.params
        known = [gamma.to_integral() for gamma in self.gammas]
        # prefix[j]: the lowest precision among gamma_1, ..., gamma_j
        prefix = [params.N] + list(accumulate((gamma.prec for gamma in self.gammas[1:]), min))
        weights = [w for w in self.lambdas if w <= n]
        rows = truncated_powers(known, n, max(weights), params)
        one = ScaledWitt.of(1, params)

        total = ScaledWitt.zero(params)
        for qi in weights:
            s = n - qi
            for qh in weights:
                if qh > s:
                    break
                if qh == 0:
                    if s:
                        continue
                    coefficient = one
                elif (qh, qi) == (1, 0):
                    continue  # K = (n)
                else:
                    coefficient = ScaledWitt(rows[qh][s], 0, prefix[s - qh + 1])
                for H in self.lambdas[qh]:
                    for I in self.lambdas[qi]:
                        factor = self.vertex_factors.get((H, I))
                        if factor is not None:
                            total = total + factor * coefficient
        return total * self.inverse_alpha0
