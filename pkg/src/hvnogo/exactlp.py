"""Exact rational linear feasibility with Farkas certificates.

Decides whether ``A w = b, w >= 0`` has a solution, entirely in rational
arithmetic.  The answer always comes with checkable evidence:

* feasible: a nonnegative rational point with exactly zero residual;
* infeasible: a row-multiplier vector y with ``y^T A <= 0`` componentwise
  and ``y^T b > 0`` (no nonnegative w can then satisfy the system, since
  ``y^T A w <= 0 < y^T b``).

The engine is a phase-one simplex over ``fractions.Fraction`` with Bland's
anti-cycling rule; certificates are the phase-one duals.  Systems in this
package have at most a few dozen rows and eight genuine variables, so
clarity and exactness trump all performance concerns.

A brute-force basic-solution enumerator (:func:`enumerate_basic_solutions`)
is provided as an independent cross-check: it shares no code with the
simplex and decides feasibility by inspecting every candidate basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Optional, Sequence

from .errors import DimensionMismatch

ZERO = Fraction(0)
ONE = Fraction(1)


def _as_fraction_row(row, what: str) -> tuple[Fraction, ...]:
    values = tuple(row)
    if any(isinstance(v, float) for v in values):
        raise TypeError(f"{what}: floats are inexact; pass Fraction or int entries")
    try:
        return tuple(Fraction(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"{what}: entries must be exact rationals") from exc


@dataclass(frozen=True)
class LinearSystem:
    """Equality system ``matrix . w = rhs`` with w constrained nonnegative.

    ``labels`` optionally names each row; narratives and error messages use
    them to say which constraint is doing what.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(_as_fraction_row(r, "LinearSystem.matrix") for r in self.matrix)
        rhs = _as_fraction_row(self.rhs, "LinearSystem.rhs")
        if len(rows) != len(rhs):
            raise DimensionMismatch(f"{len(rows)} rows vs {len(rhs)} right-hand sides")
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionMismatch(f"ragged matrix rows: widths {sorted(widths)}")
        labels = tuple(self.labels)
        if labels and len(labels) != len(rows):
            raise DimensionMismatch(f"{len(labels)} labels vs {len(rows)} rows")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "labels", labels)

    @property
    def num_rows(self) -> int:
        return len(self.matrix)

    @property
    def num_vars(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"row {i}"


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of a feasibility question, with evidence.

    ``witness`` is a tuple of Fractions for plain LP runs; higher-level
    checks repackage it (an ontic table, or per-setting tables).
    """

    feasible: bool
    witness: Optional[Any]
    certificate: Optional[tuple[Fraction, ...]]
    narrative: str


def residual(system: LinearSystem, point: Sequence) -> tuple[Fraction, ...]:
    """``A w - b`` for an exact point; all-zero means the point solves the system."""
    w = _as_fraction_row(point, "point")
    if len(w) != system.num_vars:
        raise DimensionMismatch(f"point has {len(w)} entries, system has {system.num_vars} variables")
    return tuple(sum(c * v for c, v in zip(row, w)) - b for row, b in zip(system.matrix, system.rhs))


def verify_certificate(system: LinearSystem, y: Sequence) -> bool:
    """Audit an infeasibility certificate in exact arithmetic.

    True iff ``y^T A <= 0`` componentwise and ``y^T b > 0``.
    """
    yv = _as_fraction_row(y, "certificate")
    if len(yv) != system.num_rows:
        raise DimensionMismatch(f"certificate has {len(yv)} entries, system has {system.num_rows} rows")
    for j in range(system.num_vars):
        if sum(yv[i] * system.matrix[i][j] for i in range(system.num_rows)) > 0:
            return False
    return sum(yv[i] * system.rhs[i] for i in range(system.num_rows)) > 0


def lp_feasible(system: LinearSystem) -> FeasibilityReport:
    """Decide ``A w = b, w >= 0`` by exact phase-one simplex.

    Total: always returns either an exact witness or a verified certificate.
    """
    m, n = system.num_rows, system.num_vars
    if m == 0:
        return FeasibilityReport(True, tuple([ZERO] * n), None, "no constraints; the origin is a witness")

    # Normalize so every right-hand side is nonnegative; remember the signs
    # to map dual multipliers back to the original row order.
    signs = [ONE if system.rhs[i] >= 0 else -ONE for i in range(m)]
    tab = [[signs[i] * system.matrix[i][j] for j in range(n)] for i in range(m)]
    rhs = [signs[i] * system.rhs[i] for i in range(m)]
    # Artificial variable i occupies column n + i and starts basic in row i.
    for i in range(m):
        tab[i].extend(ONE if k == i else ZERO for k in range(m))
    basis = [n + i for i in range(m)]

    # Reduced costs for minimizing the sum of artificials.
    red = [-sum(tab[i][j] for i in range(m)) for j in range(n)] + [ZERO] * m

    while True:
        entering = next((j for j in range(n + m) if red[j] < 0), None)
        if entering is None:
            break
        # Ratio test; Bland's rule breaks ties by smallest basic variable.
        best = None
        for i in range(m):
            coeff = tab[i][entering]
            if coeff > 0:
                ratio = rhs[i] / coeff
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise AssertionError("phase-one objective is bounded; no pivot row means a bug")
        row = best[1]
        pivot = tab[row][entering]
        tab[row] = [v / pivot for v in tab[row]]
        rhs[row] /= pivot
        for i in range(m):
            if i != row and tab[i][entering] != 0:
                factor = tab[i][entering]
                tab[i] = [v - factor * p for v, p in zip(tab[i], tab[row])]
                rhs[i] -= factor * rhs[row]
        factor = red[entering]
        red = [v - factor * p for v, p in zip(red, tab[row])]
        basis[row] = entering

    infeasibility = sum(rhs[i] for i in range(m) if basis[i] >= n)
    if infeasibility == 0:
        point = [ZERO] * n
        for i in range(m):
            if basis[i] < n:
                point[basis[i]] = rhs[i]
        if any(r != 0 for r in residual(system, point)):
            raise AssertionError("simplex returned a non-solution; this is a bug")
        return FeasibilityReport(
            True, tuple(point), None, "feasible: exact nonnegative solution found by phase-one simplex"
        )

    # Phase-one duals: the reduced cost of artificial i is 1 - y_i.
    y = tuple(signs[i] * (ONE - red[n + i]) for i in range(m))
    if not verify_certificate(system, y):
        raise AssertionError("simplex produced an invalid Farkas certificate; this is a bug")
    active = [system.label(i) for i in range(m) if y[i] != 0]
    narrative = "infeasible: Farkas certificate combines " + ", ".join(active)
    return FeasibilityReport(False, None, y, narrative)


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of an exact rational matrix by Gaussian elimination."""
    work = [list(_as_fraction_row(r, "matrix")) for r in rows]
    if not work:
        return 0
    n = len(work[0])
    rank = 0
    for col in range(n):
        pivot_row = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = work[rank][col]
        work[rank] = [v / inv for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [v - factor * p for v, p in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def _solve_unique(columns: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Solve the (possibly overdetermined) system with the given columns.

    Returns the unique solution, or None when the column set is rank
    deficient or the system is inconsistent.
    """
    m = len(rhs)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [rhs[i]] for i in range(m)]
    pivots = 0
    for col in range(k):
        pivot_row = next((i for i in range(pivots, m) if aug[i][col] != 0), None)
        if pivot_row is None:
            return None  # rank-deficient column set: not a basis
        aug[pivots], aug[pivot_row] = aug[pivot_row], aug[pivots]
        inv = aug[pivots][col]
        aug[pivots] = [v / inv for v in aug[pivots]]
        for i in range(m):
            if i != pivots and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [v - factor * p for v, p in zip(aug[i], aug[pivots])]
        pivots += 1
    for i in range(pivots, m):
        if aug[i][k] != 0:
            return None  # inconsistent
    return [aug[i][k] for i in range(k)]


def enumerate_basic_solutions(system: LinearSystem) -> tuple[tuple[Fraction, ...], ...]:
    """All basic feasible solutions (vertices) of ``{w >= 0 : A w = b}``.

    Brute force: try every size-rank(A) column subset, solve it exactly,
    keep nonnegative solutions.  The feasible region lies in the nonnegative
    orthant, so it is pointed and nonempty iff some basic feasible solution
    exists; this makes the enumerator an oracle for :func:`lp_feasible`.

    Intended for small systems only (the search is combinatorial).
    """
    m, n = system.num_rows, system.num_vars
    r = matrix_rank(system.matrix)
    if r == 0:
        if all(b == 0 for b in system.rhs):
            return (tuple([ZERO] * n),)
        return ()
    rhs = list(system.rhs)
    found: set[tuple[Fraction, ...]] = set()
    for subset in combinations(range(n), r):
        cols = [[system.matrix[i][j] for i in range(m)] for j in subset]
        solution = _solve_unique(cols, rhs)
        if solution is None or any(v < 0 for v in solution):
            continue
        point = [ZERO] * n
        for j, v in zip(subset, solution):
            point[j] = v
        found.add(tuple(point))
    return tuple(sorted(found))


def brute_force_feasible(system: LinearSystem) -> bool:
    """Feasibility by exhaustive basis enumeration; independent of the simplex."""
    return len(enumerate_basic_solutions(system)) > 0
