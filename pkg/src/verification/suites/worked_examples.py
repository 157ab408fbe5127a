"""Hand-checked worked examples, pinned as exact values."""
from typing import Callable, Iterator

from src.algebra.qpoly import QXPoly
from src.characters.limits import chi_lambda0_truncated, chi_via_csf_stable, s_map
from src.characters.whittaker import whittaker
from src.combinatorics.bijections import omega, psi_inv, psi_inv_inverse, psi_quinv, psi_quinv_inverse
from src.combinatorics.clbasis import b_inv, b_quinv
from src.combinatorics.fillings import inv, quinv
from src.combinatorics.splice import dsplice, s_i
from src.lattice.ensemble import build_ensemble, declutter, mark_circles
from src.models.clword import CLAtom, CLWord
from src.models.filling import Filling
from src.models.patterns import GTPattern, POP
from src.models.shapes import Partition
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck

Example = Callable[[], tuple[bool, str]]

# λ = (10, 6, 4), n = 4
RUNNING_FILLING = Filling.from_rows(
    [[1, 1, 2, 1, 2, 1, 2, 4, 4, 3], [2, 2, 3, 3, 3, 4], [3, 3, 4, 4]], n=4
)
RUNNING_POP = POP(
    GTPattern(((4,), (7, 2), (8, 5, 2), (10, 6, 4, 0))),
    {
        (1, 1): (2, 1, 0),
        (1, 2): (2,),
        (1, 3): (1, 1),
        (2, 2): (0, 0, 0),
        (2, 3): (1,),
        (3, 3): (2, 2),
    },
)
RUNNING_OMEGA = Filling.from_rows(
    [[2, 1, 1, 1, 3, 2, 1, 4, 4, 2], [3, 3, 2, 2, 4, 3], [4, 4, 3, 3]], n=4
)


def _atoms(*entries: tuple[int, int, int, int]) -> CLWord:
    """(p, q, t, multiplicity) tuples to a word."""
    return CLWord.of(CLAtom(p, q, t) for p, q, t, times in entries for _ in range(times))


def _running_psi_quinv() -> tuple[bool, str]:
    P = psi_quinv(RUNNING_FILLING)
    return P == RUNNING_POP, f"ψ_quinv(F) = {P.to_json()}"


def _running_inverses() -> tuple[bool, str]:
    back = psi_quinv_inverse(RUNNING_POP)
    if back != RUNNING_FILLING:
        return False, f"ψ_quinv⁻¹(T, Λ) = {back}"
    image = psi_inv_inverse(RUNNING_POP)
    if image != RUNNING_OMEGA:
        return False, f"ψ_inv⁻¹(T, Λ) = {image}"
    if omega(RUNNING_FILLING) != RUNNING_OMEGA:
        return False, f"Ω(F) = {omega(RUNNING_FILLING)}"
    return True, "ψ_quinv⁻¹ gives F and ψ_inv⁻¹ gives Ω(F)"


def _running_statistics() -> tuple[bool, str]:
    got = (quinv(RUNNING_FILLING), inv(RUNNING_FILLING), psi_inv(RUNNING_FILLING).weight)
    return got == (12, 5, 5), f"(quinv, inv, |Λ̄|) = {got}"


def _running_circles() -> tuple[bool, str]:
    marking = mark_circles(declutter(build_ensemble(RUNNING_FILLING)))
    got = (marking.solid_total, marking.open_total)
    return got == (12, 5), f"(solid, open) = {got}"


def _running_cl_word() -> tuple[bool, str]:
    expected = _atoms(
        (2, 1, 2, 1), (2, 1, 1, 1), (2, 1, 0, 1),
        (3, 1, 2, 1),
        (4, 1, 1, 2),
        (3, 2, 0, 3),
        (4, 2, 1, 1),
        (4, 3, 2, 2),
    )
    word = b_quinv(RUNNING_FILLING)
    return word == expected and word.t_degree == 12, f"b_quinv(F) = {word}"


def _small_cl_words() -> tuple[bool, str]:
    F = Filling.from_rows([[1, 2, 1, 2], [3, 4]], n=4)
    quinv_word = _atoms((2, 1, 2, 1), (2, 1, 1, 1), (3, 2, 0, 1), (4, 2, 1, 1))
    inv_word = _atoms((2, 1, 1, 1), (2, 1, 0, 1), (3, 2, 0, 1), (4, 2, 0, 1))
    if b_quinv(F) != quinv_word:
        return False, f"b_quinv = {b_quinv(F)}"
    if b_inv(F) != inv_word:
        return False, f"b_inv = {b_inv(F)}"
    return True, f"{quinv_word} / {inv_word}"


def _splice_pair() -> tuple[bool, str]:
    F = Filling.from_columns(
        [(1, 2, 3), (1, 3), (2, 3), (1, 2, 4, 5), (2, 3), (3,), (2, 3, 4), (5,)], n=5
    )
    first = s_i(1, F).columns[:2]
    third = s_i(3, F).columns[2:4]
    ok = first == ((1, 3), (1, 2, 3)) and third == ((2, 3, 4, 5), (1, 2))
    return ok, f"S_1 columns {first}, S_3 columns {third}"


def _dsplice_six() -> tuple[bool, str]:
    F = Filling.from_rows(
        [[1, 1, 2, 1, 2, 3, 2, 4, 6, 5], [2, 2, 3, 2, 3, 6, 3, 5], [4, 3, 4, 6, 5], [6, 4, 5]], n=6
    )
    expected = Filling.from_rows(
        [[1, 1, 2, 1, 2, 2, 3, 4, 5], [2, 2, 3, 2, 3, 3, 5], [3, 4, 4, 5], [4, 5]], n=5
    )
    D = dsplice(F)
    ok = D == expected and D.require_partition_shape() == Partition((9, 7, 4, 2))
    return ok, f"dsplice(F) = {D}"


def _two_row_whittaker() -> tuple[bool, str]:
    expected = (
        QXPoly.monomial(2, x=(2, 0))
        + QXPoly.monomial(2, x=(1, 1))
        + QXPoly.monomial(2, q=1, x=(1, 1))
        + QXPoly.monomial(2, x=(0, 2))
    )
    for method in ("inv", "quinv", "fermionic"):
        W = whittaker(Partition((2,)), 2, method)
        if W != expected:
            return False, f"W_(2) via {method} = {W}"
    return True, str(expected)


def _s_map_example() -> tuple[bool, str]:
    F = Filling.from_rows([[1, 2], [3]], n=4)
    image = s_map(F)
    expected = Filling.from_rows([[2, 1, 2, 1], [3, 3], [4]], n=4)
    ok = image == expected and (inv(F), inv(image)) == (0, 3)
    return ok, f"s(F) = {image}, inv {inv(F)} -> {inv(image)}"


def _rank_two_character() -> tuple[bool, str]:
    expected = QXPoly(
        {(0, 0, 0): 1, (1, 0, 0): 1, (1, 1, -1): 1, (1, -1, 1): 1}, 2
    )
    theta_side = chi_lambda0_truncated(2, 1)
    csf_side, K = chi_via_csf_stable(Partition(()), 2, 1)
    ok = theta_side == expected and csf_side == expected
    return ok, f"theta side {theta_side}, CSF side {csf_side} (K={K})"


EXAMPLES: dict[str, Example] = {
    "running-psi-quinv": _running_psi_quinv,
    "running-inverses": _running_inverses,
    "running-statistics": _running_statistics,
    "running-circles": _running_circles,
    "running-cl-word": _running_cl_word,
    "small-cl-words": _small_cl_words,
    "splice-pair": _splice_pair,
    "dsplice-six": _dsplice_six,
    "two-row-whittaker": _two_row_whittaker,
    "s-map": _s_map_example,
    "rank-two-character": _rank_two_character,
}


def _run_example(case: Case, data: dict) -> tuple[bool, str]:
    return EXAMPLES[data["example"]]()


class WorkedExamplesSuite(BaseSuite):
    """Fixed inputs with known outputs; bounds do not apply."""

    name = "worked-examples"

    def build_checks(self) -> list[IdentityCheck]:
        return [FunctionCheck("example", _run_example)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        for name in EXAMPLES:
            yield Case(label=name, witness={"example": name}, data={"example": name})
