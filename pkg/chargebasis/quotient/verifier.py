"""
Quotient Verifier
=================

Certifies candidate monomial sets as bases of R_{mu^t}, and the
antisymmetrized index sets as bases of N_gamma R_{mu^t}, by exact rank of
normal-form coefficient vectors over the standard monomials.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from math import lcm
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from ..bases.antisym import antisym_index_set
from ..bases.builder import charge_basis
from ..bases.monomials import MonomialSet
from ..charge.words import ExponentVector
from ..combinatorics.partitions import make_composition, make_partition, transpose
from ..permutations.stats import inv
from ..symmetric.functions import complete, elementary, hall_inner_product
from ..symmetric.hall_littlewood import e_coeff_combinatorial
from ..utils.config import DEFAULT_LIMITS, RunConfig
from ..utils.errors import InvalidPartitionError
from .groebner import GroebnerBasis, normal_form
from .polynomial import exponent_terms, format_polynomial, monomial, permute_variables
from .tanisaki import expected_dimension, tanisaki_basis

logger = logging.getLogger(__name__)


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    matrix = [list(row) for row in rows if any(row)]
    if not matrix:
        return 0
    width = len(matrix[0])
    rank = 0
    previous = 1
    for col in range(width):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][col]
            matrix[r] = [
                (head * matrix[r][c] - factor * matrix[rank][c]) // previous for c in range(width)
            ]
        previous = head
        rank += 1
        if rank == len(matrix):
            break
    return rank


def _integer_row(p: PolyElement, columns: Dict[ExponentVector, int]) -> List[int]:
    terms = exponent_terms(p)
    scale = lcm(*(c.denominator for c in terms.values())) if terms else 1
    row = [0] * len(columns)
    for e, c in terms.items():
        row[columns[e]] = int(c * scale)
    return row


def apply_antisymmetrizer(p: PolyElement, gamma: Sequence[int]) -> PolyElement:
    """
    N_gamma p = sum over sigma in S_gamma of sgn(sigma) sigma.p, where S_gamma
    permutes the variables within each block of gamma.

    Raises:
        InvalidPartitionError: if |gamma| differs from the variable count
    """
    gamma = make_composition(gamma)
    n = p.ring.ngens
    if sum(gamma) != n:
        raise InvalidPartitionError(f"|{gamma}| differs from the variable count {n}")
    blocks = []
    start = 1
    for part in gamma:
        blocks.append(tuple(range(start, start + part)))
        start += part
    total = p.ring.zero
    for choice in product(*(permutations(block) for block in blocks)):
        sigma = tuple(v for block in choice for v in block)
        term = permute_variables(p, sigma)
        total = total - term if inv(sigma) % 2 else total + term
    return total


@dataclass
class Certification:
    """Outcome of one basis certification; mismatches are data, not errors."""
    kind: str
    ring: Tuple[int, ...]
    basis_index: Tuple[int, ...]
    gamma: Optional[Tuple[int, ...]]
    order: str
    size: int
    rank: int
    dimension: int
    expected_dimension: int
    graded_ranks: List[int]
    expected_graded: List[int]
    passed: bool
    polynomials: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        data = {
            "kind": self.kind,
            "ring": list(self.ring),
            "mu": list(self.basis_index),
            "gamma": list(self.gamma) if self.gamma is not None else None,
            "order": self.order,
            "size": self.size,
            "rank": self.rank,
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "graded_ranks": self.graded_ranks,
            "expected_graded": self.expected_graded,
            "pass": self.passed,
        }
        if self.polynomials:
            data["polynomials"] = self.polynomials
        if include_timings:
            data["timings"] = self.timings
        return data


def _ranks(
    polys: Sequence[PolyElement], degrees: Sequence[int], basis: GroebnerBasis, workers: int = 1
) -> Tuple[int, List[int]]:
    """Total and per-degree rank of the normal forms of homogeneous polys."""
    columns = {e: j for j, e in enumerate(basis.standard_monomials())}
    if workers > 1 and len(polys) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            reduced = list(executor.map(lambda p: normal_form(p, basis), polys))
    else:
        reduced = [normal_form(p, basis) for p in polys]
    rows = [_integer_row(r, columns) for r in reduced]
    total = bareiss_rank(rows)
    top = max(degrees, default=-1)
    graded = [bareiss_rank([row for row, d in zip(rows, degrees) if d == k]) for k in range(top + 1)]
    return total, graded


def _trim(counts: List[int]) -> List[int]:
    counts = list(counts)
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def certify_basis(
    monomials: Iterable[Sequence[int]], mu: Sequence[int], order: str = "grevlex", workers: int = 1
) -> Certification:
    """
    Check that the monomials form a basis of R_{mu^t}.

    Passes iff exact rank = number of monomials = dim R_{mu^t}, and the
    per-degree ranks equal the graded standard-monomial counts.
    """
    started = time.perf_counter()
    mu = make_partition(mu)
    ring_index = transpose(mu)
    vectors = sorted(set(tuple(m) for m in monomials))
    basis = tanisaki_basis(ring_index, order)
    groebner_seconds = time.perf_counter() - started

    polys = [monomial(basis.ring, e) for e in vectors]
    degrees = [sum(e) for e in vectors]
    rank, graded = _ranks(polys, degrees, basis, workers)
    dimension = basis.quotient_dimension()
    expected_graded = basis.graded_standard_counts()
    passed = rank == len(vectors) == dimension and _trim(graded) == _trim(expected_graded)
    if not passed:
        logger.warning(
            f"basis certification failed for mu={mu} in R_{ring_index}: "
            f"rank {rank}, size {len(vectors)}, dimension {dimension}"
        )
    return Certification(
        kind="basis",
        ring=ring_index,
        basis_index=mu,
        gamma=None,
        order=order,
        size=len(vectors),
        rank=rank,
        dimension=dimension,
        expected_dimension=expected_dimension(ring_index),
        graded_ranks=_trim(graded),
        expected_graded=_trim(expected_graded),
        passed=passed,
        timings={"groebner": groebner_seconds, "total": time.perf_counter() - started},
    )


def certify_antisym_basis(
    mu: Sequence[int], gamma: Sequence[int], order: str = "grevlex", workers: int = 1
) -> Certification:
    """
    Check that N_gamma x^{cw(w)}, w in the antisymmetric index set, is a
    basis of N_gamma R_{mu^t}: rank = size = <e_gamma, h_{mu^t}> and the
    per-degree ranks match sum of q^charge(w).
    """
    started = time.perf_counter()
    mu = make_partition(mu)
    gamma = make_composition(gamma)
    if sum(mu) != sum(gamma):
        raise InvalidPartitionError(f"|{mu}| != |{gamma}|")
    ring_index = transpose(mu)
    basis = tanisaki_basis(ring_index, order)
    groebner_seconds = time.perf_counter() - started

    index_set = antisym_index_set(mu, gamma)
    polys = [apply_antisymmetrizer(monomial(basis.ring, entry.exponents), gamma) for entry in index_set.entries]
    degrees = [sum(entry.exponents) for entry in index_set.entries]
    rank, graded = _ranks(polys, degrees, basis, workers)
    expected = hall_inner_product(elementary(gamma), complete(ring_index)).evaluate(1)
    expected_graded = e_coeff_combinatorial(mu, gamma).to_list()
    passed = rank == len(polys) == expected and _trim(graded) == _trim(expected_graded)
    if not passed:
        logger.warning(
            f"antisymmetric certification failed for mu={mu}, gamma={gamma}: "
            f"rank {rank}, size {len(polys)}, expected {expected}"
        )
    return Certification(
        kind="antisym",
        ring=ring_index,
        basis_index=mu,
        gamma=gamma,
        order=order,
        size=len(polys),
        rank=rank,
        dimension=basis.quotient_dimension(),
        expected_dimension=expected,
        graded_ranks=_trim(graded),
        expected_graded=_trim(expected_graded),
        passed=passed,
        polynomials=[format_polynomial(p) for p in polys],
        timings={"groebner": groebner_seconds, "total": time.perf_counter() - started},
    )


class QuotientVerifier:
    """
    Runs certifications under the Gröbner size limits of the loaded
    configuration and fans independent jobs out to a thread pool.
    """

    def __init__(self, limits: Optional[Dict[str, Any]] = None, run_config: Optional[RunConfig] = None):
        self.limits = limits or DEFAULT_LIMITS
        self.run_config = run_config or RunConfig()
        self.logger = logging.getLogger(__name__)

    def _check(self, n: int):
        self.run_config.check_groebner_size(n, self.limits)

    def verify_ring(self, ring_index: Sequence[int], monomials: Optional[MonomialSet] = None) -> Certification:
        """Certify a monomial basis of R_{ring_index}; the charge basis C_{ring^t} by default."""
        ring_index = make_partition(ring_index)
        self._check(sum(ring_index))
        basis_index = transpose(ring_index)
        if monomials is None:
            monomials = charge_basis(basis_index, workers=self.run_config.workers)
        self.logger.info(f"certifying {len(monomials)} monomials in R_{ring_index} ({self.run_config.order})")
        return certify_basis(monomials, basis_index, self.run_config.order, self.run_config.workers)

    def verify_antisym(self, ring_index: Sequence[int], gamma: Sequence[int]) -> Certification:
        ring_index = make_partition(ring_index)
        self._check(sum(ring_index))
        self.logger.info(f"certifying N_{tuple(gamma)} R_{ring_index} ({self.run_config.order})")
        return certify_antisym_basis(transpose(ring_index), gamma, self.run_config.order, self.run_config.workers)

    def verify_many(self, jobs: Sequence[Tuple[Sequence[int], Optional[Sequence[int]]]]) -> List[Certification]:
        """Certify (ring_index, gamma) jobs concurrently; gamma None means the charge basis."""
        def run(job):
            ring_index, gamma = job
            return self.verify_ring(ring_index) if gamma is None else self.verify_antisym(ring_index, gamma)

        workers = self.run_config.workers
        if workers > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                return list(executor.map(run, jobs))
        return [run(job) for job in jobs]
