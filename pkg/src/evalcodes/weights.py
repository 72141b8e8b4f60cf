"""Relative generalized Hamming weights of evaluation codes.

M_r(C1, C2) is the smallest support size of an r dimensional subcode of C1
meeting C2 only in zero.  For standard evaluation codes it equals
deg(S/I(X)) minus the largest number of common zeros inside X over
candidate sets F of r monic polynomials in L1 with pairwise distinct lead
monomials whose span meets L2 trivially.  Candidates are walked in
coefficient space over the echelon basis of L1, with batch evaluation of
whole lead groups and pruning of branches that cannot beat the running
maximum.  A definition level oracle enumerating subcodes directly is
provided for cross checking; it never touches lead monomials or bases.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from .codes import (
    DEFAULT_BUDGET,
    EvaluationCode,
    GeneratorMatrix,
    _resolve_threads,
    evaluate_space,
    rank_mod,
    reduce_rows,
    rref_mod,
    standardize,
)
from .errors import BudgetExceededError, DimensionMismatchError
from .groebner import degree_with_F, footprint, vanishing_ideal
from .poly import GREVLEX, Polynomial, PolySpace, echelonize, monomial_divides

_CHUNK = 1 << 13


def gaussian_binomial(n, k, q):
    """Number of k dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class CandidateSet:
    """A set of r monic polynomials with pairwise distinct lead monomials."""

    def __init__(self, polys, leads):
        self.polys = tuple(polys)
        self.leads = tuple(leads)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __repr__(self):
        return f"CandidateSet({[str(p) for p in self.polys]})"


class RghwProblem:
    """A point set with two nested polynomial spaces, ready for the search.

    Both spaces are standardized against the vanishing ideal of X, so they
    consist of standard monomial combinations and evaluate injectively.
    L2 must be strictly contained in L1; an absent L2 means the zero space.
    """

    def __init__(self, points, space1, space2=None, order=GREVLEX, gb=None):
        self.points = points
        self.order = order
        field = points.field
        s = points.nvars
        self.gb = gb if gb is not None else vanishing_ideal(points, order)

        def as_space(sp):
            if sp is None:
                return PolySpace.empty(field, s, order)
            if isinstance(sp, PolySpace):
                return sp
            return echelonize(list(sp), order, field=field, nvars=s)

        self.space1 = standardize(as_space(space1), self.gb)
        self.space2 = standardize(as_space(space2), self.gb)
        if self.space1.dim == 0:
            raise ValueError("L1 reduces to the zero space on X")
        coords = []
        for b in self.space2.basis:
            c = self.space1.coordinates(b)
            if c is None:
                raise ValueError("L2 is not contained in L1")
            coords.append(c)
        if self.space2.dim >= self.space1.dim:
            raise ValueError("containment of L2 in L1 must be strict")
        q = field.q
        self._lead_monos = self.space1.leads()
        self._E = np.array(
            [[int(b.evaluate(p)) for p in points] for b in self.space1.basis],
            dtype=np.int64,
        )
        if coords:
            self._A, self._A_piv = rref_mod(np.array(coords, dtype=np.int64), q)
        else:
            self._A = np.zeros((0, self.space1.dim), dtype=np.int64)
            self._A_piv = []
        self._code_pair = None

    @property
    def field(self):
        return self.points.field

    @property
    def q(self):
        return self.points.field.q

    @property
    def k1(self):
        return self.space1.dim

    @property
    def k2(self):
        return self.space2.dim

    @property
    def num_points(self):
        return len(self.points)

    @property
    def footprint_monomials(self):
        return tuple(footprint(self.gb))

    def codes(self):
        """The evaluation code pair (C1, C2)."""
        if self._code_pair is None:
            c1 = evaluate_space(self.space1, self.points)
            c2 = evaluate_space(self.space2, self.points)
            self._code_pair = (c1, c2)
        return self._code_pair

    def poly_from_coefficients(self, coeffs):
        """The polynomial with the given coefficients on the L1 basis."""
        q = self.q
        terms = {}
        for c, b in zip(coeffs, self.space1.basis):
            c = int(c) % q
            if not c:
                continue
            for mono, v in b.terms.items():
                terms[mono] = (terms.get(mono, 0) + c * v) % q
        return Polynomial(self.field, self.points.nvars, terms)

    def _check_r(self, r):
        if not 1 <= r <= self.k1 - self.k2:
            raise ValueError(
                f"r must be between 1 and dim L1 - dim L2 = {self.k1 - self.k2},"
                f" got {r}"
            )

    def __repr__(self):
        return (
            f"RghwProblem(q={self.q}, m={self.num_points},"
            f" k1={self.k1}, k2={self.k2}, order={self.order.name})"
        )


def _candidate_rows(problem, lead, lo, hi):
    """Monic coefficient rows with the given lead position, odometer order."""
    q = problem.q
    k1 = problem.k1
    free = k1 - lead - 1
    rows = np.zeros((hi - lo, k1), dtype=np.int64)
    rows[:, lead] = 1
    idx = np.arange(lo, hi, dtype=np.int64)
    for t in range(free):
        rows[:, lead + 1 + t] = (idx // q ** (free - 1 - t)) % q
    return rows


def _reduce_by(red, rows, q):
    res = rows % q
    for p, row in red:
        res = (res - np.outer(res[:, p], row)) % q
    return res


def enumerate_candidates(problem, r):
    """Yield every admissible candidate set, in a fixed deterministic order.

    Lead positions are chosen as increasing index tuples over the L1 basis
    (which is sorted by decreasing lead monomial); coefficient fillings run
    in odometer order, later elements fastest.  A set is admissible when its
    span meets L2 only in zero, which also forces every member outside L2.
    """
    problem._check_r(r)
    q = problem.q
    k1 = problem.k1
    base = [(p, problem._A[i]) for i, p in enumerate(problem._A_piv)]

    def descend(level, start_lead, red, chosen, leads):
        if level == r:
            polys = [problem.poly_from_coefficients(c) for c in chosen]
            yield CandidateSet(polys, leads)
            return
        for lead in range(start_lead, k1 - (r - level) + 1):
            total = q ** (k1 - lead - 1)
            for lo in range(0, total, _CHUNK):
                rows = _candidate_rows(problem, lead, lo, min(lo + _CHUNK, total))
                res = _reduce_by(base + red, rows, q)
                for i in range(rows.shape[0]):
                    rr = res[i]
                    piv = next((j for j in range(k1) if rr[j]), None)
                    if piv is None:
                        continue
                    norm = (rr * pow(int(rr[piv]), q - 2, q)) % q
                    yield from descend(
                        level + 1,
                        lead + 1,
                        red + [(piv, norm)],
                        chosen + [rows[i]],
                        leads + [problem._lead_monos[lead]],
                    )

    yield from descend(0, 0, [], [], [])


def _search_max_zeros(problem, r, budget, threads):
    """Largest |V_X(F)| over admissible candidate sets, with a witness.

    Returns (max zeros, list of coefficient rows).  Chunks of a lead group
    can be evaluated on a thread pool; merging follows the fixed chunk
    order, so results do not depend on the thread count.
    """
    q = problem.q
    k1 = problem.k1
    e_matrix = problem._E
    m = e_matrix.shape[1]
    base = [(p, problem._A[i]) for i, p in enumerate(problem._A_piv)]
    nthreads = _resolve_threads(threads)
    pool = ThreadPoolExecutor(max_workers=nthreads) if nthreads > 1 else None
    counter = 0
    best_zeros = -1
    best_rows = None

    def charge(n):
        nonlocal counter
        counter += n
        if counter > budget:
            raise BudgetExceededError(counter, budget, "candidate enumeration")

    def group_chunks(lead, alive, red):
        total = q ** (k1 - lead - 1)
        ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
        e_alive = e_matrix[:, alive]

        def compute(rg):
            rows = _candidate_rows(problem, lead, *rg)
            res = _reduce_by(red, rows, q)
            ok = res.any(axis=1)
            vals = (rows @ e_alive) % q
            zeros = (vals == 0).sum(axis=1)
            return rows, res, ok, vals, zeros

        if pool is not None and len(ranges) > 1:
            yield from pool.map(compute, ranges)
        else:
            for rg in ranges:
                yield compute(rg)

    def extend(level, start_lead, alive, red, chosen):
        nonlocal best_zeros, best_rows
        remaining = r - level
        for lead in range(start_lead, k1 - remaining + 1):
            charge(q ** (k1 - lead - 1))
            for rows, res, ok, vals, zeros in group_chunks(lead, alive, red):
                if level == r - 1:
                    scored = np.where(ok, zeros, -1)
                    i = int(np.argmax(scored))
                    if int(scored[i]) > best_zeros:
                        best_zeros = int(scored[i])
                        best_rows = chosen + [rows[i].copy()]
                else:
                    for i in np.argsort(-zeros, kind="stable"):
                        i = int(i)
                        if int(zeros[i]) <= best_zeros:
                            break
                        if not ok[i]:
                            continue
                        rr = res[i]
                        piv = int(np.argmax(rr != 0))
                        norm = (rr * pow(int(rr[piv]), q - 2, q)) % q
                        extend(
                            level + 1,
                            lead + 1,
                            alive[vals[i] == 0],
                            red + [(piv, norm)],
                            chosen + [rows[i].copy()],
                        )

    try:
        extend(0, 0, np.arange(m), list(base), [])
    finally:
        if pool is not None:
            pool.shutdown()
    return best_zeros, best_rows


def rghw_degree(problem, r, budget=DEFAULT_BUDGET, threads=None, validate=False):
    """The r-th relative generalized Hamming weight M_r(C1, C2).

    Computed as deg(S/I(X)) minus the largest candidate zero count, with
    zeros counted by direct evaluation.  With validate=True the maximizing
    candidate set is recomputed through the Groebner basis degree route and
    the definition oracle is replayed when it fits the budget; any
    disagreement raises instead of being silently resolved.
    """
    problem._check_r(r)
    best_zeros, best_rows = _search_max_zeros(problem, r, budget, threads)
    if best_zeros < 0:
        raise RuntimeError("no admissible candidate set found")
    value = problem.num_points - best_zeros
    if validate:
        witness = [problem.poly_from_coefficients(c) for c in best_rows]
        gb_deg, fp_deg = degree_with_F(problem.gb, witness)
        if gb_deg != best_zeros:
            raise RuntimeError(
                f"validation mismatch: basis degree {gb_deg}"
                f" != zero count {best_zeros}"
            )
        if fp_deg < gb_deg:
            raise RuntimeError(
                "validation mismatch: footprint bound below the exact degree"
            )
        if gaussian_binomial(problem.k1, r, problem.q) <= budget:
            c1, c2 = problem.codes()
            oracle = rghw_definition_oracle(c1, c2, r, budget)
            if oracle != value:
                raise RuntimeError(
                    f"validation mismatch: oracle {oracle} != degree value {value}"
                )
    return value


def ghw(problem, r, budget=DEFAULT_BUDGET, threads=None, validate=False):
    """The r-th generalized Hamming weight of C1 (L2 taken as zero)."""
    if problem.k2:
        problem = RghwProblem(
            problem.points, problem.space1, None, problem.order, gb=problem.gb
        )
    return rghw_degree(problem, r, budget, threads, validate)


def rghw_definition_oracle(code1, code2, r, budget=DEFAULT_BUDGET):
    """M_r(C1, C2) straight from the definition.

    Enumerates every r dimensional subcode of C1 through reduced echelon
    coefficient matrices, keeps those meeting C2 only in zero, and takes
    the smallest support size.  Independent of monomial orders and bases.
    """
    q = code1.field.q
    k1 = code1.k
    g1 = code1.matrix.rows
    if code1.matrix.rank < k1:
        raise ValueError("generator matrix of C1 must have full rank")
    if code2 is None or code2.k == 0:
        g2r = np.zeros((0, code1.n), dtype=np.int64)
        piv2 = []
    else:
        if code2.field != code1.field or code2.n != code1.n:
            raise DimensionMismatchError("codes of different fields or lengths")
        g2r, piv2 = rref_mod(code2.matrix.rows, q)
        stacked = np.vstack([g1, g2r])
        if rank_mod(stacked, q) != k1:
            raise ValueError("C2 is not a subcode of C1")
    k2 = g2r.shape[0]
    if not 1 <= r <= k1 - k2:
        raise ValueError(f"r must be between 1 and {k1 - k2}, got {r}")
    total = gaussian_binomial(k1, r, q)
    if total > budget:
        raise BudgetExceededError(total, budget, "subcode enumeration")
    best = None
    for pivs in combinations(range(k1), r):
        free = [
            (t, j)
            for t in range(r)
            for j in range(pivs[t] + 1, k1)
            if j not in pivs
        ]
        for fill in range(q ** len(free)):
            rows = np.zeros((r, k1), dtype=np.int64)
            for t, p in enumerate(pivs):
                rows[t, p] = 1
            for fi, (t, j) in enumerate(free):
                rows[t, j] = (fill // q ** (len(free) - 1 - fi)) % q
            words = (rows @ g1) % q
            if k2:
                residues = reduce_rows(words, g2r, piv2, q)
                if rank_mod(residues, q) < r:
                    continue
            supp = int(np.any(words != 0, axis=0).sum())
            if best is None or supp < best:
                best = supp
    return best


def lead_set_difference(problem):
    """Lead monomials realized by L1 \\ L2, in decreasing order.

    A basis lead m_i belongs to the set exactly when the subspace of L1
    elements with lead at most m_i is not contained in L2.
    """
    k1 = problem.k1
    if problem.k2 == 0:
        return list(problem._lead_monos)
    eye = np.eye(k1, dtype=np.int64)
    residues = reduce_rows(eye, problem._A, problem._A_piv, problem.q)
    direction_in_l2 = [not residues[j].any() for j in range(k1)]
    included = []
    suffix_inside = True
    for i in reversed(range(k1)):
        suffix_inside = suffix_inside and direction_in_l2[i]
        if not suffix_inside:
            included.append(i)
    return [problem._lead_monos[i] for i in sorted(included)]


def relative_footprint(problem, r):
    """The r-th relative footprint bound RFP_r, a lower bound for M_r.

    deg(S/I) minus the largest count of standard monomials surviving after
    adjoining any r element subset of the realized lead monomials to the
    initial ideal.
    """
    leads = lead_set_difference(problem)
    if not 1 <= r <= len(leads):
        raise ValueError(
            f"r must be between 1 and {len(leads)} realized leads, got {r}"
        )
    delta = problem.footprint_monomials
    best = -1
    for subset in combinations(leads, r):
        survivors = sum(
            1
            for u in delta
            if not any(monomial_divides(mono, u) for mono in subset)
        )
        if survivors > best:
            best = survivors
    return len(delta) - best
