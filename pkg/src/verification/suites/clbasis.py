"""Chari-Loktev words: CSF-native bases against the POP monomials."""
from collections import defaultdict
from typing import Iterator

from src.combinatorics.bijections import STATISTICS, psi
from src.combinatorics.clbasis import b_stat, cl_monomial, fiber_profile
from src.combinatorics.fillings import enumerate_csf, inv, quinv, rowsort
from src.combinatorics.patterns import gt_from_ssyt
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck
from src.verification.cases import shape_cases


def _words(case: Case, data: dict) -> tuple[bool, str]:
    for F in enumerate_csf(data["shape"], data["n"]):
        for stat in STATISTICS:
            word = b_stat(F, stat)
            if word != cl_monomial(psi(F, stat)):
                return False, f"b_{stat}({F}) = {word} but CL(ψ_{stat}(F)) = {cl_monomial(psi(F, stat))}"
            expected = inv(F) if stat == "inv" else quinv(F)
            if word.t_degree != expected:
                return False, f"t-degree {word.t_degree} of b_{stat}({F}) != {expected}"
    return True, "b_stat = CL ∘ ψ_stat"


def _fibre_constancy(case: Case, data: dict) -> tuple[bool, str]:
    profiles: dict = defaultdict(set)
    for F in enumerate_csf(data["shape"], data["n"]):
        T = gt_from_ssyt(rowsort(F))
        profile = fiber_profile(F)
        if any(value != T.se(i, j) for (i, j, _), value in profile.items()):
            return False, f"zcount + zcb differs from SE for {F}"
        profiles[T].add(tuple(sorted(profile.items())))
    bad = [T for T, seen in profiles.items() if len(seen) > 1]
    if bad:
        return False, f"zcount + zcb not constant on the fibre of {bad[0].rows}"
    return True, f"{len(profiles)} fibres"


class CLBasisSuite(BaseSuite):
    name = "cl-basis"

    def build_checks(self) -> list[IdentityCheck]:
        return [FunctionCheck("words", _words), FunctionCheck("fibre-constancy", _fibre_constancy)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return shape_cases(bounds)
