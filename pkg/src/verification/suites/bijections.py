"""ψ_inv / ψ_quinv: round trips, commuting squares, fibres and Ω."""
from collections import defaultdict
from typing import Iterator

from src.algebra.qpoly import QXPoly
from src.combinatorics.bijections import STATISTICS, omega, psi, psi_inverse
from src.combinatorics.fillings import enumerate_csf, inv, quinv, rowsort, x_exponents
from src.combinatorics.patterns import area, bcomp, br, enumerate_pop, gt_from_ssyt, gt_x_weight, wt_q
from src.combinatorics.splice import dsplice
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck
from src.verification.cases import csf_cases, shape_cases, shapes


def _csf_round_trip(case: Case, data: dict) -> tuple[bool, str]:
    if "pop" in data:
        P = data["pop"]
        for stat in STATISTICS:
            back = psi(psi_inverse(P, stat), stat)
            if back != P:
                return False, f"ψ_{stat}(ψ_{stat}⁻¹(P)) = {back.to_json()}"
        return True, "POP round trips"
    F = data["filling"]
    for stat in STATISTICS:
        P = psi(F, stat)
        data[stat] = P
        back = psi_inverse(P, stat)
        if back != F:
            return False, f"ψ_{stat}⁻¹(ψ_{stat}(F)) = {back}"
    return True, "CSF round trips"


def _weights(case: Case, data: dict) -> tuple[bool, str]:
    if "pop" in data:
        return True, "n/a"
    F = data["filling"]
    Pq, Pi = data["quinv"], data["inv"]
    if gt_x_weight(Pq.gt) != x_exponents(F):
        return False, "x-weight of the pattern differs from x^F"
    if Pq.weight != quinv(F) or Pi.weight != inv(F):
        return False, f"|Λ|={Pq.weight} vs quinv={quinv(F)}, |Λ̄|={Pi.weight} vs inv={inv(F)}"
    return True, "weights preserved"


def _projection(case: Case, data: dict) -> tuple[bool, str]:
    if "pop" in data:
        return True, "n/a"
    T = gt_from_ssyt(rowsort(data["filling"]))
    ok = data["quinv"].gt == T and data["inv"].gt == T
    return ok, "pr ∘ ψ = gt ∘ rowsort"


def _complement(case: Case, data: dict) -> tuple[bool, str]:
    if "pop" in data:
        return True, "n/a"
    ok = data["quinv"] == bcomp(data["inv"])
    return ok, "ψ_quinv = bcomp ∘ ψ_inv"


def _branching_square(case: Case, data: dict) -> tuple[bool, str]:
    if "pop" in data:
        return True, "n/a"
    F = data["filling"]
    if F.n < 2:
        return True, "n < 2"
    D = dsplice(F)
    for stat in STATISTICS:
        if psi(D, stat) != br(data[stat]):
            return False, f"ψ_{stat}(dsplice F) != br(ψ_{stat}(F)); dsplice F = {D}"
    return True, "ψ ∘ dsplice = br ∘ ψ"


class BijectionRoundtripSuite(BaseSuite):
    """Both bijections invert exactly and satisfy the projection, branching and complement squares."""

    name = "bijection-roundtrip"

    def build_checks(self) -> list[IdentityCheck]:
        return [
            FunctionCheck("round-trip", _csf_round_trip),
            FunctionCheck("weights", _weights),
            FunctionCheck("projection", _projection),
            FunctionCheck("complement", _complement),
            FunctionCheck("branching", _branching_square),
        ]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        yield from csf_cases(bounds)
        for shape, n in shapes(bounds):
            for P in enumerate_pop(shape, n):
                yield Case(label=f"P={P.to_json()}", witness={"pop": P.to_json()}, data={"pop": P})


def _fibres(case: Case, data: dict) -> tuple[bool, str]:
    groups: dict = defaultdict(list)
    for F in enumerate_csf(data["shape"], data["n"]):
        groups[gt_from_ssyt(rowsort(F))].append(F)
    for T, fibre in groups.items():
        target = wt_q(T)
        inv_sum = QXPoly.zero()
        quinv_sum = QXPoly.zero()
        for F in fibre:
            a, b = inv(F), quinv(F)
            if a + b != area(T):
                return False, f"inv + quinv = {a + b} != area = {area(T)} for {F}"
            inv_sum = inv_sum + QXPoly.q_power(a)
            quinv_sum = quinv_sum + QXPoly.q_power(b)
        if not inv_sum == quinv_sum == target:
            return False, f"fibre of {T.rows}: Σq^inv={inv_sum}, Σq^quinv={quinv_sum}, wt_q={target}"
    return True, f"{len(groups)} fibres"


class FiberIdentitiesSuite(BaseSuite):
    """Σ q^inv = Σ q^quinv = wt_q(T) over each rowsort fibre, and inv + quinv = area(T)."""

    name = "fiber-identities"

    def build_checks(self) -> list[IdentityCheck]:
        return [FunctionCheck("fibres", _fibres)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return shape_cases(bounds)


def _omega(case: Case, data: dict) -> tuple[bool, str]:
    F = data["filling"]
    G = omega(F)
    if omega(G) != F:
        return False, f"Ω²(F) = {omega(G)}"
    if inv(G) != quinv(F) or quinv(G) != inv(F):
        return False, f"Ω(F) = {G}: inv {inv(G)} vs quinv {quinv(F)}"
    if rowsort(G) != rowsort(F):
        return False, f"rowsort(Ω(F)) = {rowsort(G)}"
    return True, "involution swapping inv and quinv"


class OmegaInvolutionSuite(BaseSuite):
    name = "omega-involution"

    def build_checks(self) -> list[IdentityCheck]:
        return [FunctionCheck("omega", _omega)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return csf_cases(bounds)


