"""
Check interface for multilinear relations on structure-constant algebras

A relation of degree 3 holds on an algebra iff it holds on every triple of
basis vectors. Implementations provide the residual of one triple; run()
scans triples in lexicographic order and stops at the first failure.
"""

from abc import ABC, abstractmethod
from itertools import product
from typing import Iterator, Optional, Tuple

from .models import CheckResult, StructureAlgebra, Vector


class TripleCheck(ABC):
    """Relation evaluated on basis triples (i, j, k) of an algebra"""

    label: str = ""

    def __init__(self, algebra: StructureAlgebra):
        self.algebra = algebra

    @abstractmethod
    def residual(self, triple: Tuple[int, int, int]) -> Vector:
        """Value of the relation at (e_i, e_j, e_k)"""
        pass

    def triples(self) -> Iterator[Tuple[int, int, int]]:
        return product(range(self.algebra.dim), repeat=3)

    def first_failure(self) -> Optional[Tuple[Tuple[int, int, int], Vector]]:
        for triple in self.triples():
            value = self.residual(triple)
            if any(x != 0 for x in value):
                return triple, value
        return None

    def run(self) -> CheckResult:
        """
        Pass, or the first failing triple with 1-based indices

        Returns:
            CheckResult
        """
        failure = self.first_failure()
        if failure is None:
            return CheckResult.success(self.label)
        triple, value = failure
        return CheckResult.failure(tuple(i + 1 for i in triple), value, self.label)
