"""Gossez's skew operator G on summable sequences, exactly.

G maps a finitely supported rational sequence x to the bounded sequence

    (Gx)_n = -(sum of x_k for k < n) + (sum of x_k for k > n),

equivalently sum_k x_k * alpha(k, n) with the sign kernel alpha below.  For
finitely supported x the image has a finite head (up to the last support
index) followed by the constant -sum(x), so it always lands in the
convergent-sequence class and is representable as a TailSeq with a constant
tail.

Besides the forward map this module provides the exact inverse on the
eventually-constant class (``solve_G``, a decision procedure for range
membership built on the two-term recurrence satisfied by consecutive image
entries), finite weak-star moment matching (``weakstar_approximate``), and
the alternating family whose image/preimage norm ratio collapses like 1/m
(``range_ratio_family``), the certificate that G admits no lower norm bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve_minimal
from .spaces import SparseSeq, TailSeq, couple, format_rational


def alpha(k: int, n: int) -> int:
    """Sign kernel: -1 below the diagonal (k < n), 0 on it, +1 above."""
    if k < n:
        return -1
    if k > n:
        return 1
    return 0


def apply_G(x: SparseSeq) -> TailSeq:
    """Evaluate Gx; head covers indices 1..max(support), tail is -sum(x)."""
    top = x.max_index()
    total = x.entry_sum()
    head = []
    prefix = Fraction(0)  # sum of x_k for k <= n-1
    for n in range(1, top + 1):
        here = x.value(n)
        # -prefix + (total - prefix - here)
        head.append(total - 2 * prefix - here)
        prefix += here
    return TailSeq(tuple(head), (-total,))


def apply_negG(x: SparseSeq) -> TailSeq:
    """Pointwise negation of Gx."""
    return -apply_G(x)


@dataclass(frozen=True)
class RangeCertificate:
    """Outcome of deciding whether a TailSeq lies in the range of G.

    When feasible, ``preimage`` satisfies apply_G(preimage) == target
    exactly (re-checked during construction of the certificate).  When
    infeasible, ``obstruction`` names the reason: either the target does not
    converge, or the inversion recurrence forces an alternating tail of some
    fixed nonzero magnitude, which no summable sequence can produce.
    """

    target: TailSeq
    feasible: bool
    preimage: SparseSeq | None = None
    obstruction: str | None = None

    def to_json(self) -> dict:
        doc: dict = {"feasible": self.feasible}
        if self.preimage is not None:
            doc["preimage"] = self.preimage.to_json()
        if self.obstruction is not None:
            doc["obstruction"] = self.obstruction
        return doc


def solve_G(y: TailSeq) -> RangeCertificate:
    """Decide y in R(G) within the TailSeq class, with witness.

    Consecutive image entries satisfy (Gx)_{n+1} - (Gx)_n = -(x_n + x_{n+1})
    and the limit pins the first entry: x_1 = -lim(y) - y_1.  Running the
    recurrence across the head leaves x_{H+1}; past the head y is constant,
    so the recurrence degenerates to x_{n+1} = -x_n.  Feasibility therefore
    reduces to one exact check: x_{H+1} = 0.  Otherwise x would alternate
    with constant magnitude |x_{H+1}| forever and could not be summable.
    """
    lim = y.limit()
    if lim is None:
        return RangeCertificate(y, False, obstruction="not in c: tail oscillates, no limit")
    length = y.head_len()
    values = []
    current = -lim - y.value(1)
    for n in range(1, length + 1):
        values.append(current)
        current = (y.value(n) - y.value(n + 1)) - current
    if current != 0:
        return RangeCertificate(
            y,
            False,
            obstruction=(
                "recurrence forces an alternating tail of magnitude "
                f"{format_rational(abs(current))}, not summable"
            ),
        )
    candidate = SparseSeq.from_values(values)
    if apply_G(candidate) != y:  # cannot happen for consistent inputs; keep honest
        return RangeCertificate(y, False, obstruction="round-trip mismatch")
    return RangeCertificate(y, True, preimage=candidate)


def weakstar_approximate(y: TailSeq, tests: list[SparseSeq]) -> SparseSeq:
    """Find x with <w, Gx> = <w, y> exactly for every test functional w.

    Finitely many summable-sequence functionals can always be matched inside
    the range of G; this is the finite mechanics of weak-star density.  Via
    anti-symmetry each constraint reads <x, Gw> = -<w, y>, a linear system
    in the entries of x.  The unknown support starts at 1..(len(tests)+2)
    and grows until the exact system is consistent; leftmost-pivot
    elimination with zero free variables makes the answer deterministic and
    supported on minimal indices.
    """
    if not tests:
        return SparseSeq.zero()
    images = [apply_G(w) for w in tests]
    rhs = [-couple(w, y) for w in tests]
    max_support = max((w.max_index() for w in tests), default=0)
    size = len(tests) + 2
    # Consistency is guaranteed once the support covers the tests' support
    # plus one extra column (any dependent rows then have matching rhs).
    max_size = max(size, max_support + len(tests) + 1)
    while True:
        rows = [[gw.value(j) for j in range(1, size + 1)] for gw in images]
        solution = solve_minimal(rows, rhs)
        if solution is not None:
            return SparseSeq.from_pairs((j + 1, v) for j, v in enumerate(solution))
        if size >= max_size:
            raise RuntimeError("moment-matching system unexpectedly inconsistent")
        size += 1


def alternating(length: int) -> SparseSeq:
    """The sign-alternating sequence (1, -1, 1, -1, ...) of given length."""
    return SparseSeq.from_values(Fraction((-1) ** (n - 1)) for n in range(1, length + 1))


def range_ratio_family(m: int) -> Fraction:
    """Norm ratio |G x|_inf / |x|_1 for the alternating x of length 2m.

    The partial sums of the alternating sequence stay in {0, 1}, so the
    image keeps norm 1 while the preimage norm grows like 2m; the exact
    ratio 1/(2m) <= 1/m certifies that the injective G has no bounded
    inverse on its range.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    x = alternating(2 * m)
    return apply_G(x).linf_norm() / x.l1_norm()
