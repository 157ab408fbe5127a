"""The level-one vacuum character limit and the d-statistic."""
from typing import Iterator

from src.characters.limits import (
    chi_lambda0_truncated,
    chi_via_csf_stable,
    d_statistic,
    pop_s_map,
    renormalized_x_weight,
    s_map,
)
from src.combinatorics.bijections import psi_inv
from src.combinatorics.fillings import enumerate_csf
from src.combinatorics.shapes import add_theta, partitions_up_to
from src.models.shapes import Partition
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck


class CharacterLimitSuite(BaseSuite):
    """χ from C_k sums equals Θ / η^{n-1} truncated, after K-stabilization."""

    name = "character-limit"

    def build_checks(self) -> list[IdentityCheck]:
        patience = int(self.param("patience", 2))
        kmax_cap = int(self.param("kmax_cap", 8))

        def limit(case: Case, data: dict) -> tuple[bool, str]:
            n, degree = data["n"], data["degree"]
            csf_side, K = chi_via_csf_stable(Partition(()), n, degree, patience, kmax_cap)
            theta_side = chi_lambda0_truncated(n, degree)
            if csf_side != theta_side:
                return False, f"CSF side {csf_side} != theta side {theta_side} (K={K})"
            return True, f"stable at K={K}"

        return [FunctionCheck("limit", limit)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        for n in self.param("ranks", [2, 3]):
            if n > bounds.max_n:
                continue
            for degree in range(bounds.qmax + 1):
                yield Case(f"n={n} D={degree}", {"n": n, "qmax": degree}, {"n": n, "degree": degree})


class DirectLimitSuite(BaseSuite):
    """d >= 0 on POP(λ + kθ), and the injection s preserves d and the renormalized x-weight."""

    name = "direct-limit"

    def build_checks(self) -> list[IdentityCheck]:
        def invariance(case: Case, data: dict) -> tuple[bool, str]:
            shape, n, k = data["shape"], data["n"], data["k"]
            big = add_theta(shape, k, n)
            for F in enumerate_csf(big, n):
                P = psi_inv(F)
                d = d_statistic(P, shape, k)
                if d < 0:
                    return False, f"d = {d} < 0 for {F}"
                image = pop_s_map(P)
                if d_statistic(image, shape, k + 1) != d:
                    return False, f"d changes under s for {F}"
                if image != psi_inv(s_map(F)):
                    return False, f"POP-side s disagrees with s on {F}"
                if renormalized_x_weight(s_map(F)) != renormalized_x_weight(F):
                    return False, f"x̄-weight changes under s for {F}"
            return True, f"λ + {k}θ = {big}"

        return [FunctionCheck("d-invariance", invariance)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        kmax = int(self.param("kmax", 1))
        cells = int(self.param("max_cells", 4))
        for n in range(2, min(bounds.max_n, int(self.param("max_n", 3))) + 1):
            # λ + kθ needs fewer than n parts and n dividing |λ|
            for shape in partitions_up_to(cells, n - 1):
                if shape.size % n:
                    continue
                for k in range(kmax + 1):
                    witness = {"shape": shape.to_json(), "n": n, "k": k}
                    yield Case(f"λ={shape} n={n} k={k}", witness, {"shape": shape, "n": n, "k": k})

