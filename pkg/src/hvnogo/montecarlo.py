"""Desk-scale counting experiments against exact predictions.

Sampling is multinomial over the four-cell joint: the closed-form
statistics already fix the per-shot distribution, so no amplitude-level
path simulation is needed (the Born-rule agreement tests cover that
layer).

Randomness contract
-------------------
Shot ``i`` of seed ``s`` consumes the ``i``-th 64-bit output word of the
Philox 4x64 counter-based generator keyed by ``s``, converted to a uniform
in [0, 1) by the standard 53-bit rule.  Every count is therefore a pure
function of (distribution, shot range, seed), identical on every platform,
and disjoint shot ranges can be sampled in parallel and merged: the result
equals the sequential run bit for bit.

A sweep over phase values reuses one seed, giving point ``j`` the shot
range ``[j*shots, (j+1)*shots)``.

The per-cell acceptance threshold in :func:`compare` is five standard
deviations: loose enough that a correct implementation essentially never
trips it, tight enough to catch any term confusion in the predictions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from numpy.random import Generator, Philox

from .dist import JointDist
from .errors import EmptySample
from .quantum import quantum_joint

#: compare() fails when any standardized cell deviation exceeds this.
Z_THRESHOLD = 5.0


@dataclass(frozen=True)
class Counts4:
    """Detector coincidence counts, one per outcome pair (order 00, 01, 10, 11)."""

    n00: int
    n01: int
    n10: int
    n11: int

    def __post_init__(self):
        for name in ("n00", "n01", "n10", "n11"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def total(self) -> int:
        return self.n00 + self.n01 + self.n10 + self.n11

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n00, self.n01, self.n10, self.n11)

    def frequencies(self) -> tuple[float, float, float, float]:
        n = self.total
        if n == 0:
            raise EmptySample("no events recorded")
        return tuple(c / n for c in self.as_tuple())


@dataclass(frozen=True)
class SweepRow:
    """One phase point of a fringe sweep.

    Conditional frequencies are None when the conditioning outcome never
    fired (an empty CSV field).
    """

    phi: float
    counts: Counts4
    f_a0_given_b1: Optional[float]
    f_a0_given_b0: Optional[float]


@dataclass(frozen=True)
class StatReport:
    """Agreement between counts and an exact joint."""

    tv: float
    z_max: float
    passed: bool


def _uniforms(seed: int, lo: int, hi: int) -> np.ndarray:
    """Philox output words [lo, hi) of the given seed, as uniforms in [0, 1).

    Philox advances in blocks of four words, so the block before ``lo`` is
    entered and the leftover words are discarded.
    """
    bit_gen = Philox(key=seed)
    bit_gen.advance(lo // 4)
    skip = lo % 4
    return Generator(bit_gen).random(skip + (hi - lo))[skip:]


def sample_events(dist: JointDist, n: int, seed: int, first_shot: int = 0) -> Counts4:
    """Draw ``n`` multinomial shots from a four-cell joint.

    ``first_shot`` selects the start of the shot range, letting callers
    split a run across workers; the default covers shots [0, n).  Cells
    with probability exactly zero never receive counts.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"sample count must be a nonnegative integer, got {n!r}")
    if not isinstance(seed, int) or seed < 0:
        raise ValueError(f"seed must be a nonnegative integer, got {seed!r}")
    if not isinstance(first_shot, int) or first_shot < 0:
        raise ValueError(f"first_shot must be a nonnegative integer, got {first_shot!r}")
    probs = np.array([float(e) for e in dist.entries], dtype=np.float64)
    cumulative = np.cumsum(probs)
    cumulative /= cumulative[3]  # exact 1.0 endpoint; zero-probability cells stay zero width
    if n == 0:
        return Counts4(0, 0, 0, 0)
    u = _uniforms(seed, first_shot, first_shot + n)
    cells = np.searchsorted(cumulative[:3], u, side="right")
    counts = np.bincount(cells, minlength=4)
    return Counts4(*(int(c) for c in counts))


def compare(counts: Counts4, exact: JointDist) -> StatReport:
    """Total-variation distance and worst standardized cell deviation.

    A cell with exact probability zero contributes only if it collected
    counts, which is an immediate failure.  Raises :class:`EmptySample`
    when there are no events to compare.
    """
    n = counts.total
    if n == 0:
        raise EmptySample("cannot compare an empty sample")
    q = [float(e) for e in exact.entries]
    f = counts.frequencies()
    tv = 0.5 * sum(abs(fi - qi) for fi, qi in zip(f, q))
    z_max = 0.0
    for ci, qi in zip(counts.as_tuple(), q):
        if qi == 0.0:
            if ci > 0:
                z_max = math.inf
        elif qi < 1.0:
            z = abs(ci - n * qi) / math.sqrt(n * qi * (1.0 - qi))
            z_max = max(z_max, z)
    return StatReport(tv=tv, z_max=z_max, passed=z_max <= Z_THRESHOLD)


def fringe_sweep(
    alpha: float, phi_grid: Sequence[float], shots_per_point: int, seed: int
) -> list[SweepRow]:
    """Sample the quantum joint across a phase grid and report the
    conditional detector-a frequencies.

    Conditioned on b=1 the frequency of a=0 tracks the interference fringe
    cos^2(phi/2); conditioned on b=0 it stays flat at 1/2.
    """
    if not isinstance(shots_per_point, int) or shots_per_point <= 0:
        raise ValueError(f"shots_per_point must be a positive integer, got {shots_per_point!r}")
    rows = []
    for j, phi in enumerate(phi_grid):
        dist = quantum_joint(alpha, float(phi))
        counts = sample_events(dist, shots_per_point, seed, first_shot=j * shots_per_point)
        b1 = counts.n01 + counts.n11
        b0 = counts.n00 + counts.n10
        rows.append(
            SweepRow(
                phi=float(phi),
                counts=counts,
                f_a0_given_b1=(counts.n01 / b1) if b1 > 0 else None,
                f_a0_given_b0=(counts.n00 / b0) if b0 > 0 else None,
            )
        )
    return rows


SWEEP_CSV_HEADER = "phi_radians,n00,n01,n10,n11,f_a0_given_b1,f_a0_given_b0"


def sweep_to_csv(rows: Sequence[SweepRow]) -> str:
    """Render sweep rows as CSV with a mandatory header; absent conditional
    frequencies become empty fields."""
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        f1 = "" if row.f_a0_given_b1 is None else repr(row.f_a0_given_b1)
        f0 = "" if row.f_a0_given_b0 is None else repr(row.f_a0_given_b0)
        c = row.counts
        lines.append(f"{row.phi!r},{c.n00},{c.n01},{c.n10},{c.n11},{f1},{f0}")
    return "\n".join(lines) + "\n"
