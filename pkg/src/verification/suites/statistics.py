"""Per-filling statistic identities."""
from typing import Iterator

from src.combinatorics.fillings import inv, maj, quinv
from src.combinatorics.shapes import n_stat
from src.combinatorics.triples import quinv_triple_count, refinv
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck
from src.verification.cases import csf_cases


def _inv_refinv(case: Case, data: dict) -> tuple[bool, str]:
    F = data["filling"]
    a, b = inv(F), refinv(F)
    data["inv"] = a
    return a == b, f"inv={a}, refinv={b}"


def _quinv_triples(case: Case, data: dict) -> tuple[bool, str]:
    F = data["filling"]
    a, b = quinv(F), quinv_triple_count(F)
    data["quinv"] = a
    return a == b, f"quinv={a}, triples={b}"


def _maj_top(case: Case, data: dict) -> tuple[bool, str]:
    F = data["filling"]
    top = n_stat(F.require_partition_shape())
    value = maj(F)
    return value == top, f"maj={value}, n(λ)={top}"


class StatisticsSuite(BaseSuite):
    """inv = refinv and quinv = #quinv-triples on CSFs; maj attains n(λ) there."""

    name = "statistics"

    def build_checks(self) -> list[IdentityCheck]:
        return [
            FunctionCheck("inv=refinv", _inv_refinv),
            FunctionCheck("quinv=triples", _quinv_triples),
            FunctionCheck("maj=n(λ)", _maj_top),
        ]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return csf_cases(bounds)
