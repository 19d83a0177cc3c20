"""Solving for the scalings that extend a permutation to an algebra map,
assembling automorphism groups, diagonal subgroups, isomorphism decisions,
and the small brute-force oracle used to cross-check everything.

A monomial map (sigma, d) carries the source algebra A onto the target B
exactly when

    d_k * a_kj = d_j^2 * b_{sigma(k) sigma(j)}   for all k, j,

which forces the zero patterns to correspond and turns, along any transversal
cycle of length L, into a single equation x^(2^L - 1) = c for the scaling at
the cycle root. Remaining constraints are cross-checked afterwards.
"""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import (
    EvolutionAlgebra,
    entrywise_square,
    is_zero_matrix,
    mat_equal,
    mat_mul,
    star_product,
)
from .digraph import (
    Permutation,
    SEARCH_DIMENSION_CAP,
    graph_automorphisms,
    pattern_isomorphisms,
    transversals,
)
from .errors import (
    CapExceededError,
    DimensionCapError,
    FieldMismatchError,
    ParseError,
)
from .fields import PrimeField, Scalar
from .groups import MonomialGroup, MonomialMap
from .snf import solve_homogeneous_mod

MATERIALIZE_CAP = 10**6
ORACLE_PRIME_CAP = 13
ORACLE_DIMENSION_CAP = 4


class SolveStatus(enum.Enum):
    COMPLETE = "complete"
    NO_SOLUTION = "no-solution"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class SolveOutcome:
    status: SolveStatus
    maps: tuple[MonomialMap, ...] = ()
    unsolved: tuple[str, ...] = ()

    @property
    def is_complete(self) -> bool:
        return self.status is SolveStatus.COMPLETE


def _check_pair(a: EvolutionAlgebra, b: EvolutionAlgebra) -> None:
    if a.n != b.n:
        raise ParseError("algebras have different dimensions")
    if a.field != b.field:
        raise FieldMismatchError("algebras live over different fields")
    a.require_idempotent()
    b.require_idempotent()


def solve_monomial(
    a: EvolutionAlgebra, b: EvolutionAlgebra, sigma: Permutation
) -> SolveOutcome:
    """All scaling vectors d making (sigma, d) a map of E(A) onto E(B).

    Steps: reject on zero-pattern mismatch; read off the multiplicative
    constraints d_k = d_j^2 * r_kj at nonzero entries; root every cycle of one
    transversal and solve its closing equation with kth_roots; combine cycle
    candidates inside each weakly-connected constraint component, checking
    every remaining constraint; multiply the components out. Output is sorted
    by scaling vector, so it is deterministic.
    """
    _check_pair(a, b)
    n = a.n
    field = a.field
    if sigma.n != n:
        raise ParseError("permutation size mismatch")

    ratio: dict[tuple[int, int], Scalar] = {}
    for k in range(n):
        for j in range(n):
            a_kj = a.rows[k][j]
            b_im = b.rows[sigma(k)][sigma(j)]
            if a_kj.is_zero != b_im.is_zero:
                return SolveOutcome(SolveStatus.NO_SOLUTION)
            if not a_kj.is_zero:
                ratio[(j, k)] = b_im / a_kj  # d_k = d_j^2 * ratio

    # weakly-connected components of the constraint digraph
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j, k in ratio:
        rj, rk = find(j), find(k)
        if rj != rk:
            parent[rk] = rj
    comp_of = [find(v) for v in range(n)]

    tau = next(transversals(a.digraph))
    indeterminate: list[str] = []
    cycle_candidates: dict[tuple[int, ...], list[dict[int, Scalar]]] = {}
    for cycle in tau.cycles():
        length = len(cycle)
        coeff = {cycle[0]: field.one}
        for idx in range(length - 1):
            v, w = cycle[idx], cycle[idx + 1]
            coeff[w] = ratio[(v, w)] * coeff[v] * coeff[v]
        last = cycle[-1]
        closing = ratio[(last, cycle[0])] * coeff[last] * coeff[last]
        k_exp = 2**length - 1
        roots = field.kth_roots(field.one / closing, k_exp)
        if not roots.complete:
            indeterminate.append(roots.equation or f"x^{k_exp} = ?")
            continue
        if not roots.roots:
            # one unsatisfiable cycle settles the whole solve, even if some
            # other cycle equation was left undecided
            return SolveOutcome(SolveStatus.COMPLETE, ())
        options = []
        for root in roots.roots:
            # d at the idx-th cycle vertex is coeff[v] * root^(2^idx)
            values = {}
            t_pow = root
            for v in cycle:
                values[v] = coeff[v] * t_pow
                t_pow = t_pow * t_pow
            options.append(values)
        cycle_candidates[cycle] = options

    if indeterminate:
        return SolveOutcome(
            SolveStatus.INDETERMINATE, unsolved=tuple(sorted(set(indeterminate)))
        )

    comps: dict[int, list[tuple[int, ...]]] = {}
    for cycle in tau.cycles():
        comps.setdefault(comp_of[cycle[0]], []).append(cycle)
    comp_edges: dict[int, list[tuple[int, int]]] = {}
    for (j, k), r in ratio.items():
        comp_edges.setdefault(comp_of[j], []).append((j, k))

    component_solutions: list[list[dict[int, Scalar]]] = []
    for root in sorted(comps):
        cycles = sorted(comps[root])
        solutions = []
        for combo in itertools.product(*(cycle_candidates[c] for c in cycles)):
            merged: dict[int, Scalar] = {}
            for part in combo:
                merged.update(part)
            ok = True
            for j, k in comp_edges.get(root, ()):
                if merged[k] != merged[j] * merged[j] * ratio[(j, k)]:
                    ok = False
                    break
            if ok:
                solutions.append(merged)
        if not solutions:
            return SolveOutcome(SolveStatus.COMPLETE, ())
        component_solutions.append(solutions)

    maps = []
    for combo in itertools.product(*component_solutions):
        merged = {}
        for part in combo:
            merged.update(part)
        maps.append(MonomialMap(sigma, tuple(merged[v] for v in range(n))))
    maps = sorted(set(maps), key=MonomialMap.sort_key)
    return SolveOutcome(SolveStatus.COMPLETE, tuple(maps))


# ---------------------------------------------------------------------------
# diagonal automorphism subgroup in root-of-unity exponent space


@dataclass(frozen=True)
class DiagonalLattice:
    """The diagonal automorphisms d_i = g^(x_i), described by the solution
    subgroup of the congruences 2 x_j = x_i (mod N) at nonzero entries."""

    field: object
    n: int
    modulus: int
    generator: Scalar
    exponent_generators: tuple[tuple[int, ...], ...]
    generator_orders: tuple[int, ...]
    order: int
    min_transversal_order: int

    @property
    def conductor_sufficient(self) -> bool:
        """Whether the field already contains every root of unity that the
        transversal bound 2^t - 1 allows; when False the group over a larger
        cyclotomic field can be strictly bigger."""
        return self.modulus % (2**self.min_transversal_order - 1) == 0

    def exponent_vectors(self):
        import itertools as _it

        for combo in _it.product(*(range(o) for o in self.generator_orders)):
            x = [0] * self.n
            for gen, c in zip(self.exponent_generators, combo):
                for i in range(self.n):
                    x[i] = (x[i] + c * gen[i]) % self.modulus
            yield tuple(x)

    def maps(self) -> tuple[MonomialMap, ...]:
        if self.order > MATERIALIZE_CAP:
            raise CapExceededError(
                f"diagonal subgroup of order {self.order} exceeds the cap"
            )
        powers = [self.field.one]
        for _ in range(self.modulus - 1):
            powers.append(powers[-1] * self.generator)
        out = [
            MonomialMap.diagonal(tuple(powers[e] for e in vec))
            for vec in self.exponent_vectors()
        ]
        return tuple(sorted(set(out), key=MonomialMap.sort_key))

    def group(self) -> MonomialGroup:
        return MonomialGroup(self.field, self.n, self.maps(), verify_closed=False)


def diagonal_subgroup(a: EvolutionAlgebra) -> DiagonalLattice:
    """Diagonal automorphisms of E(A), solved in exponent space.

    Every nonzero entry (i, j) forces d_j^2 = d_i; writing d_i = g^(x_i) over
    the root-of-unity group of order N turns that into 2 x_j - x_i = 0
    (mod N), solved via the Smith normal form of the constraint matrix.
    """
    a.require_idempotent()
    n = a.n
    rows = []
    for i in range(n):
        for j in range(n):
            if not a.rows[i][j].is_zero:
                row = [0] * n
                row[j] += 2
                row[i] -= 1
                rows.append(row)
    unity = a.field.unity_group()
    sol = solve_homogeneous_mod(rows, n, unity.order)
    return DiagonalLattice(
        field=a.field,
        n=n,
        modulus=unity.order,
        generator=unity.generator,
        exponent_generators=sol.generators,
        generator_orders=sol.orders,
        order=sol.order,
        min_transversal_order=a.min_transversal_order,
    )


# ---------------------------------------------------------------------------
# full automorphism group


def automorphism_group(a: EvolutionAlgebra, threads: int = 1) -> MonomialGroup:
    """The group of all monomial self-maps of E(A); every automorphism is one.

    Fans the per-permutation solves out over a thread pool when asked; the
    merge sorts, so the result does not depend on the thread count. When some
    solve is undecided the group is returned partial and unclosed.
    """
    a.require_idempotent()
    if a.n > SEARCH_DIMENSION_CAP:
        raise DimensionCapError(
            f"automorphism search capped at n = {SEARCH_DIMENSION_CAP}"
        )
    sigmas = graph_automorphisms(a.digraph)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda s: solve_monomial(a, a, s), sigmas))
    else:
        outcomes = [solve_monomial(a, a, s) for s in sigmas]
    elements: list[MonomialMap] = []
    complete = True
    for outcome in outcomes:
        if outcome.status is SolveStatus.INDETERMINATE:
            complete = False
        else:
            elements.extend(outcome.maps)
    group = MonomialGroup(a.field, a.n, elements, complete=complete)
    if complete and not group.closed:
        raise RuntimeError("automorphism set failed closure verification")
    return group


# ---------------------------------------------------------------------------
# isomorphism testing with certificates


class IsoStatus(enum.Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "non-isomorphic"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class IsomorphismResult:
    status: IsoStatus
    witness: Optional[MonomialMap] = None
    certificate: Optional[dict] = None
    candidates_exhausted: int = 0
    unsolved: tuple[str, ...] = ()

    @property
    def found(self) -> bool:
        return self.status is IsoStatus.ISOMORPHIC


def verify_map(a: EvolutionAlgebra, b: EvolutionAlgebra, m: MonomialMap) -> bool:
    """Check both matrix identities of an algebra map E(A) -> E(B): the
    squared-column identity B P^(2) = P A and the annihilation B (P * P) = 0
    with the star-product columns built from the rows of P."""
    checks = certificate_checks(a, b, m)
    return all(checks.values())


def certificate_checks(
    a: EvolutionAlgebra, b: EvolutionAlgebra, m: MonomialMap
) -> dict[str, bool]:
    if m.n != a.n or a.n != b.n:
        raise ParseError("shape mismatch in verify_map")
    p = m.matrix()
    lhs = mat_mul(b.rows, entrywise_square(p))
    rhs = mat_mul(p, a.rows)
    star = mat_mul(b.rows, star_product(p)) if a.n > 1 else ()
    return {
        "BP2_eq_PA": mat_equal(lhs, rhs),
        "B_PstarP_zero": is_zero_matrix(star) if a.n > 1 else True,
    }


def make_certificate(
    a: EvolutionAlgebra, b: EvolutionAlgebra, m: MonomialMap
) -> dict:
    cert = m.to_json()
    cert["checked"] = certificate_checks(a, b, m)
    return cert


def isomorphism(a: EvolutionAlgebra, b: EvolutionAlgebra) -> IsomorphismResult:
    """Search the pattern isomorphisms of the associated digraphs and solve
    for scalings; the first witness comes with a machine-checkable
    certificate."""
    _check_pair(a, b)
    if a.n > SEARCH_DIMENSION_CAP:
        raise DimensionCapError(
            f"isomorphism search capped at n = {SEARCH_DIMENSION_CAP}"
        )
    unsolved: list[str] = []
    count = 0
    for sigma in pattern_isomorphisms(a.digraph, b.digraph):
        count += 1
        outcome = solve_monomial(a, b, sigma)
        if outcome.status is SolveStatus.INDETERMINATE:
            unsolved.extend(outcome.unsolved)
            continue
        if outcome.maps:
            witness = outcome.maps[0]
            return IsomorphismResult(
                IsoStatus.ISOMORPHIC,
                witness=witness,
                certificate=make_certificate(a, b, witness),
                candidates_exhausted=count,
            )
    if unsolved:
        return IsomorphismResult(
            IsoStatus.INDETERMINATE,
            candidates_exhausted=count,
            unsolved=tuple(sorted(set(unsolved))),
        )
    return IsomorphismResult(IsoStatus.NOT_ISOMORPHIC, candidates_exhausted=count)


# ---------------------------------------------------------------------------
# brute-force oracle over small prime fields


def brute_force_automorphisms(a: EvolutionAlgebra) -> MonomialGroup:
    """Oracle: enumerate every nonsingular monomial matrix G over GF(p) and
    keep those with A G^(2) = G A, checking the identities literally.

    For n <= 2 and p <= 3 additionally sweeps every invertible matrix with
    the full automorphism conditions and confirms that nothing non-monomial
    shows up.
    """
    a.require_idempotent()
    field = a.field
    if not isinstance(field, PrimeField) or field.p > ORACLE_PRIME_CAP:
        raise CapExceededError("oracle runs over GF(p) with p <= 13 only")
    if a.n > ORACLE_DIMENSION_CAP:
        raise CapExceededError("oracle capped at n <= 4")
    n = a.n
    units = [field.scalar(v) for v in range(1, field.p)]
    found = []
    for images in itertools.permutations(range(n)):
        sigma = Permutation(images)
        for d in itertools.product(units, repeat=n):
            g = MonomialMap(sigma, d)
            p_mat = g.matrix()
            if mat_equal(mat_mul(a.rows, entrywise_square(p_mat)), mat_mul(p_mat, a.rows)):
                found.append(g)

    if n <= 2 and field.p <= 3:
        monomial_matrices = {g.matrix() for g in found}
        from .algebra import determinant

        all_scalars = [field.scalar(v) for v in range(field.p)]
        for flat in itertools.product(all_scalars, repeat=n * n):
            mat = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
            if determinant(mat).is_zero:
                continue
            cond = mat_equal(
                mat_mul(a.rows, entrywise_square(mat)), mat_mul(mat, a.rows)
            )
            if n > 1:
                cond = cond and is_zero_matrix(mat_mul(a.rows, star_product(mat)))
            if cond and mat not in monomial_matrices:
                raise RuntimeError(
                    "an invertible non-monomial automorphism appeared; "
                    "this contradicts the monomial form of algebra maps"
                )
    return MonomialGroup(field, n, found)
