"""dsplice well-definedness and the relations among the S_i."""
from typing import Iterator

from src.combinatorics.fillings import enumerate_composition_csf, rowsort
from src.combinatorics.shapes import compositions_of, interlaces
from src.combinatorics.splice import braid_holds, commutation_holds, dsplice_outcomes, dsplice_with_trace, s_i
from src.models.filling import Filling
from src.models.verification import Bounds, Case
from src.verification.base import BaseSuite, FunctionCheck, IdentityCheck
from src.verification.cases import csf_cases, filling_case, shapes


def _zcount_carried(case: Case, data: dict) -> tuple[bool, str]:
    trace = dsplice_with_trace(data["filling"])
    changes = trace.zcount_changes()
    if changes:
        k, c, old, new = changes[0]
        return False, f"step {k} moves zcount at ({c.row}, {c.col}): {old} -> {new}"
    return True, f"zcount carried through {len(trace.steps)} splices"


class DspliceConfluenceSuite(BaseSuite):
    """Every order of legal splice choices gives the same branching result, and each splice carries zcount."""

    name = "dsplice-confluence"

    def build_checks(self) -> list[IdentityCheck]:
        budget = int(self.param("confluence_budget", 200_000))

        def confluent(case: Case, data: dict) -> tuple[bool, str]:
            outcomes = dsplice_outcomes(data["filling"], budget)
            data["dsplice"] = next(iter(outcomes))
            if len(outcomes) != 1:
                return False, f"{len(outcomes)} distinct results: {sorted(str(D) for D in outcomes)}"
            return True, "confluent"

        def shape_and_rows(case: Case, data: dict) -> tuple[bool, str]:
            F, D = data["filling"], data["dsplice"]
            shape, mu = F.require_partition_shape(), D.require_partition_shape()
            if not interlaces(mu, shape):
                return False, f"shape {mu} does not interlace {shape}"
            expected = [[v for v in row if v != F.n] for row in rowsort(F).rows()]
            got = [list(row) for row in rowsort(D).rows()]
            while expected and not expected[-1]:
                expected.pop()
            return got == expected, "rowsort commutes with deleting n"

        return [
            FunctionCheck("confluent", confluent),
            FunctionCheck("shape", shape_and_rows),
            FunctionCheck("zcount", _zcount_carried),
        ]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        return csf_cases(bounds, min_n=1)


def _relations(case: Case, data: dict) -> tuple[bool, str]:
    F: Filling = data["filling"]
    d = F.shape.num_columns
    for i in range(1, d):
        if s_i(i, s_i(i, F)) != F:
            return False, f"S_{i}² != id"
    for i in range(1, d - 1):
        if not braid_holds(i, F):
            return False, f"braid relation fails at i={i}"
    for i in range(1, d):
        for j in range(i + 2, d):
            if not commutation_holds(i, j, F):
                return False, f"S_{i} and S_{j} do not commute"
    return True, f"{d} columns"


class SpliceRelationsSuite(BaseSuite):
    """Involution, commutation and braid relations on CSFs of every column composition."""

    name = "splice-relations"

    def build_checks(self) -> list[IdentityCheck]:
        return [FunctionCheck("relations", _relations)]

    def cases(self, bounds: Bounds) -> Iterator[Case]:
        for shape, n in shapes(bounds):
            for composition in compositions_of(shape):
                for F in enumerate_composition_csf(composition, n):
                    yield filling_case(F)
