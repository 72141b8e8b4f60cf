"""Evaluation codes and weight statistics.

An evaluation code is the image of a polynomial space under evaluation at a
point set.  Generator matrices live over GF(q) as integer arrays with
entries in [0, q).  Weight enumeration walks all q^k codewords in chunks,
guarded by an explicit element budget.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    FieldMismatchError,
    NonInjectiveEvaluationError,
)
from .groebner import normal_form
from .poly import echelonize

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 14


def rref_mod(rows, q):
    """Reduced row echelon form over GF(q): (matrix, pivot columns).

    Zero rows are dropped; pivot entries are 1 with zeros above and below.
    """
    a = np.asarray(rows, dtype=np.int64) % q
    if a.ndim != 2:
        raise DimensionMismatchError("expected a 2d array")
    nrows, ncols = a.shape
    r = 0
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i, col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, col]), q - 2, q)) % q
        col_vals = a[:, col].copy()
        col_vals[r] = 0
        a = (a - np.outer(col_vals, a[r])) % q
        pivots.append(col)
        r += 1
    return a[:r], pivots


def rank_mod(rows, q):
    reduced, _ = rref_mod(rows, q)
    return reduced.shape[0]


def reduce_rows(rows, rref, pivots, q):
    """Residues of rows after eliminating the pivots of a reduced basis."""
    res = np.asarray(rows, dtype=np.int64) % q
    for i, p in enumerate(pivots):
        res = (res - np.outer(res[:, p], rref[i])) % q
    return res


class GeneratorMatrix:
    """A k x n matrix over GF(q) with entries stored as residues."""

    def __init__(self, field, rows, n=None):
        self.field = field
        a = np.asarray(rows, dtype=np.int64)
        if a.size == 0:
            a = a.reshape(0, n if n is not None else 0)
        if a.ndim != 2:
            raise DimensionMismatchError("generator matrix must be 2d")
        self.rows = a % field.q
        self._rank = None

    @property
    def k(self):
        return self.rows.shape[0]

    @property
    def n(self):
        return self.rows.shape[1]

    @property
    def rank(self):
        if self._rank is None:
            self._rank = rank_mod(self.rows, self.field.q)
        return self._rank

    def tolist(self):
        return [[int(v) for v in row] for row in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorMatrix)
            and self.field == other.field
            and self.rows.shape == other.rows.shape
            and bool(np.all(self.rows == other.rows))
        )

    def __repr__(self):
        return f"GeneratorMatrix(q={self.field.q}, k={self.k}, n={self.n})"


class EvaluationCode:
    """Image of a polynomial space under evaluation at a point set."""

    def __init__(self, space, points, matrix):
        self.space = space
        self.points = points
        self.matrix = matrix

    @property
    def n(self):
        return self.matrix.n

    @property
    def k(self):
        return self.matrix.k

    @property
    def field(self):
        return self.points.field

    def __repr__(self):
        return f"EvaluationCode(q={self.field.q}, n={self.n}, k={self.k})"


def evaluate_space(space, points):
    """Evaluate a polynomial space at a point set.

    The space must evaluate injectively; otherwise the caller should
    standardize it against the vanishing ideal first.
    """
    if space.field != points.field:
        raise FieldMismatchError("space and points over different fields")
    if space.nvars != points.nvars:
        raise DimensionMismatchError("space and points in different arities")
    rows = [
        [int(b.evaluate(p)) for p in points] for b in space.basis
    ]
    matrix = GeneratorMatrix(points.field, rows, n=len(points))
    if matrix.rank < space.dim:
        raise NonInjectiveEvaluationError(
            "evaluation is not injective on the space; standardize it first"
        )
    return EvaluationCode(space, points, matrix)


def standardize(space, gb):
    """Replace each basis element by its normal form, then echelonize.

    The evaluation image on the basis point set is unchanged, and the result
    consists of standard monomial combinations only, so evaluation becomes
    injective on it.
    """
    reduced = [normal_form(b, gb) for b in space.basis]
    return echelonize(
        reduced, space.order, field=space.field, nvars=space.nvars
    )


def support(rows):
    """Set of 1-based indices of the columns where some row is nonzero."""
    if isinstance(rows, GeneratorMatrix):
        a = rows.rows
    else:
        a = np.asarray(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.shape[0] == 0:
        return set()
    cols = np.nonzero(np.any(a != 0, axis=0))[0]
    return {int(c) + 1 for c in cols}


class WeightProfile:
    """Weight distribution of a code: counts of codewords per weight."""

    def __init__(self, n, q, k, distribution):
        self.n = n
        self.q = q
        self.k = k
        self.distribution = dict(distribution)

    @property
    def distinct_weights(self):
        """Sorted weights of nonzero codewords."""
        return sorted(w for w, c in self.distribution.items() if w > 0 and c > 0)

    @property
    def minimum_distance(self):
        weights = self.distinct_weights
        if not weights:
            raise ValueError("the zero code has no minimum distance")
        return weights[0]

    def total(self):
        return sum(self.distribution.values())

    def __eq__(self, other):
        return (
            isinstance(other, WeightProfile)
            and (self.n, self.q, self.k) == (other.n, other.q, other.k)
            and self.distribution == other.distribution
        )

    def __repr__(self):
        return f"WeightProfile(n={self.n}, k={self.k}, {self.distribution})"


def _resolve_threads(threads):
    if threads is None:
        return max(1, os.cpu_count() or 1)
    if threads < 1:
        raise ValueError("threads must be at least 1")
    return threads


def weight_distribution(code, budget=DEFAULT_BUDGET, threads=None):
    """Exact weight distribution by enumerating all q^k codewords.

    Work is chunked; chunks may run on a thread pool and are merged by
    commutative sums, so the result does not depend on the thread count.
    """
    q = code.field.q
    k = code.k
    n = code.n
    total = q**k
    if total > budget:
        raise BudgetExceededError(total, budget, "codeword enumeration")
    g = code.matrix.rows
    powers = np.array([q ** (k - 1 - j) for j in range(k)], dtype=np.int64)

    def chunk_hist(lo, hi):
        idx = np.arange(lo, hi, dtype=np.int64)
        coeffs = (idx[:, None] // powers[None, :]) % q
        words = (coeffs @ g) % q
        weights = np.count_nonzero(words, axis=1)
        return np.bincount(weights, minlength=n + 1)

    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    nthreads = _resolve_threads(threads)
    if nthreads == 1 or len(ranges) == 1:
        hists = [chunk_hist(lo, hi) for lo, hi in ranges]
    else:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            hists = list(pool.map(lambda r: chunk_hist(*r), ranges))
    hist = np.sum(hists, axis=0)
    distribution = {w: int(c) for w, c in enumerate(hist) if c}
    return WeightProfile(n, q, k, distribution)


def next_to_minimal(code_or_profile, budget=DEFAULT_BUDGET, threads=None):
    """Second smallest weight value of the code.

    Convention: the maximum over an empty set of zero counts is zero, so a
    code with a single nonzero weight value reports its length n.
    """
    if isinstance(code_or_profile, WeightProfile):
        profile = code_or_profile
    else:
        profile = weight_distribution(code_or_profile, budget, threads)
    weights = profile.distinct_weights
    if not weights:
        raise ValueError("the zero code has no next-to-minimal weight")
    if len(weights) == 1:
        return profile.n
    return weights[1]
