"""Polynomial identities: the three Whittaker expansions, modified Macdonald, branching."""
from typing import Iterator

from src.characters.whittaker import (
    METHODS,
    branching_rhs,
    e_lambda_prime,
    is_symmetric,
    modified_macdonald,
    schur,
    specialize_q_one,
    whittaker,
)
from src.combinatorics.shapes import n_stat
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck
from src.verification.cases import shape_cases


def _three_methods(case: Case, data: dict) -> tuple[bool, str]:
    shape, n = data["shape"], data["n"]
    polys = {m: whittaker(shape, n, m) for m in METHODS}
    data["W"] = polys["fermionic"]
    agree = polys["inv"] == polys["quinv"] == polys["fermionic"]
    if not agree:
        return False, "; ".join(f"{m}: {p}" for m, p in polys.items())
    return True, f"{len(data['W'])} terms agree"


def _symmetric(case: Case, data: dict) -> tuple[bool, str]:
    return is_symmetric(data["W"]), "symmetric in x"


def _q_one(case: Case, data: dict) -> tuple[bool, str]:
    expected = e_lambda_prime(data["shape"], data["n"])
    got = specialize_q_one(data["W"])
    return got == expected, f"W(q=1) = {got}, e_λ' = {expected}"


def _q_zero(case: Case, data: dict) -> tuple[bool, str]:
    expected = schur(data["shape"], data["n"])
    got = data["W"].substitute_q_zero()
    return got == expected, f"W(q=0) = {got}, s_λ = {expected}"


class WhittakerExpansionsSuite(BaseSuite):
    """inv, quinv and fermionic expansions agree; symmetry and q = 0, 1 specializations."""

    name = "whittaker-expansions"

    def build_checks(self) -> list[IdentityCheck]:
        return [
            FunctionCheck("three-methods", _three_methods),
            FunctionCheck("symmetric", _symmetric),
            FunctionCheck("q=1", _q_one),
            FunctionCheck("q=0", _q_zero),
        ]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return shape_cases(bounds)


class ModifiedMacdonaldSuite(BaseSuite):
    """inv- and quinv-variants agree and their top t-coefficient is W_λ."""

    name = "modified-macdonald"

    def build_checks(self) -> list[IdentityCheck]:
        def variants(case: Case, data: dict) -> tuple[bool, str]:
            a = modified_macdonald(data["shape"], data["n"], "inv")
            b = modified_macdonald(data["shape"], data["n"], "quinv")
            data["H"] = a
            return a == b, "inv and quinv variants agree" if a == b else f"inv: {a}; quinv: {b}"

        def top_coefficient(case: Case, data: dict) -> tuple[bool, str]:
            top = n_stat(data["shape"])
            H = data["H"]
            W = whittaker(data["shape"], data["n"])
            ok = H.t_degree() <= top and H.coefficient_of_t(top) == W
            return ok, f"coefficient of t^{top} against W_λ"

        return [FunctionCheck("variants", variants), FunctionCheck("top-t", top_coefficient)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return shape_cases(bounds, max_cells=self.param("max_cells", 5), max_n=self.param("max_n", 3))


class BranchingSuite(BaseSuite):
    """W_λ(X_n) = Σ_{μ ≺ λ} Π qbinom · W_μ(X_{n-1}) · x_n^{|λ|-|μ|}."""

    name = "branching"

    def build_checks(self) -> list[IdentityCheck]:
        def branching(case: Case, data: dict) -> tuple[bool, str]:
            lhs = whittaker(data["shape"], data["n"])
            rhs = branching_rhs(data["shape"], data["n"])
            return lhs == rhs, "branching identity" if lhs == rhs else f"lhs {lhs} != rhs {rhs}"

        return [FunctionCheck("branching", branching)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return shape_cases(bounds, min_n=2)
