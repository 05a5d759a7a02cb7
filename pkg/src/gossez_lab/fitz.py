"""Fitzpatrick machinery and truncated conjugate computations.

The Fitzpatrick value of a graph A at z is sup over w in A of
(z.w - c(w)).  Over an infinite graph the sup is not computable, so it is
split into two routes that check each other:

- ``fitz_sampled``: the exact max over a finite sample, always a lower
  bound for the full value over any superset.
- closed forms for the graphs in play, where the sup collapses to an
  indicator: membership in Graph G (first system), Graph(-G*) (the
  Fitzpatrick function of G seen in the second system), and Graph G* (the
  Fitzpatrick function of -G there).

Conjugation with respect to the product coupling is implemented for
indicators of finitely spanned subspaces only: the conjugate of such an
indicator is the indicator of the annihilator, computed by exact nullspace
elimination inside a truncation window (``annihilator_truncated``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

from . import linalg
from .adjoint import apply_Gstar
from .gossez import apply_G
from .spaces import (
    DualSystem,
    ModelMeasure,
    OutsideModelDomain,
    PairPoint,
    SparseSeq,
    TailSeq,
    coupling_value,
    natural_couple,
)
from .verdict import INCONCLUSIVE, REFUTED, VERIFIED, PropertyVerdict

PLUS_INF = math.inf
MINUS_INF = -math.inf

# Finite values are always Fraction; the float infinities are pure
# sentinels, compared against but never mixed into arithmetic.
ExtendedRational = Union[Fraction, float]

OP_G_FIRST = "G-first"
OP_G_SECOND = "G-second"
OP_NEGG_SECOND = "negG-second"


@dataclass(frozen=True)
class SampledGraph:
    """A finite list of graph points sharing one dual system.

    Duplicates (under canonical equality) are dropped at construction.
    ``source`` is a label; the labels in SOURCE_MEMBERSHIP identify graphs
    of linear operators whose analytic membership test is available in
    closed form.
    """

    system: DualSystem
    points: tuple[PairPoint, ...]
    source: str = "custom"

    def __post_init__(self) -> None:
        unique: list[PairPoint] = []
        for p in self.points:
            if p.system is not self.system:
                raise ValueError("all points of a sampled graph must share its system")
            if p not in unique:
                unique.append(p)
        object.__setattr__(self, "points", tuple(unique))

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "system": self.system.value,
            "source": self.source,
            "points": [p.to_json() for p in self.points],
        }

    @staticmethod
    def from_json(obj: dict) -> SampledGraph:
        return SampledGraph(
            DualSystem(obj["system"]),
            tuple(PairPoint.from_json(p) for p in obj["points"]),
            obj["source"],
        )


def neg_transform(graph: SampledGraph) -> SampledGraph:
    """Flip the sign of every second component; an involution."""
    points = tuple(PairPoint(p.system, p.x, -p.y) for p in graph.points)
    return SampledGraph(graph.system, points, source=f"neg({graph.source})")


def eval_cA(z: PairPoint, graph: SampledGraph) -> ExtendedRational:
    """Coupling-plus-indicator: c(z) on the sampled graph, +inf off it.

    The empty graph gives +inf everywhere.
    """
    if z in graph.points:
        return coupling_value(z)
    return PLUS_INF


def fitz_sampled(z: PairPoint, graph: SampledGraph) -> ExtendedRational:
    """Exact max of z.w - c(w) over the sample; -inf for the empty sample.

    A lower bound for the Fitzpatrick value over any graph containing the
    sample.  Raises OutsideModelDomain if a pairing is not evaluable.
    """
    best: ExtendedRational = MINUS_INF
    for w in graph.points:
        candidate = natural_couple(z, w) - coupling_value(w)
        if best is MINUS_INF or candidate > best:
            best = candidate
    return best


def on_graph_G_first(z: PairPoint) -> bool:
    assert isinstance(z.x, SparseSeq)
    return z.y == apply_G(z.x)


def on_graph_negG_first(z: PairPoint) -> bool:
    assert isinstance(z.x, SparseSeq)
    return z.y == -apply_G(z.x)


def on_graph_negGstar(z: PairPoint) -> bool:
    assert isinstance(z.x, ModelMeasure)
    return z.y == -apply_Gstar(z.x)


def on_graph_Gstar(z: PairPoint) -> bool:
    assert isinstance(z.x, ModelMeasure)
    return z.y == apply_Gstar(z.x)


def on_graph_G_embedded(z: PairPoint) -> bool:
    assert isinstance(z.x, ModelMeasure)
    return z.x.infinity_mass == 0 and z.y == apply_G(z.x.atomic)


def on_graph_negG_embedded(z: PairPoint) -> bool:
    assert isinstance(z.x, ModelMeasure)
    return z.x.infinity_mass == 0 and z.y == -apply_G(z.x.atomic)


SOURCE_MEMBERSHIP: dict[str, Callable[[PairPoint], bool]] = {
    "Graph G": on_graph_G_first,
    "Graph negG": on_graph_negG_first,
    "Graph G embedded": on_graph_G_embedded,
    "Graph negG embedded": on_graph_negG_embedded,
    "Graph negG*": on_graph_negGstar,
    "Graph G*": on_graph_Gstar,
}


def fitz_closed_first(z: PairPoint) -> ExtendedRational:
    """Fitzpatrick function of G in the first system: the indicator of its graph.

    Off the graph some direction u has <u, y - Gx> != 0 and scaling u blows
    the sampled values up without bound; on the graph anti-symmetry kills
    every term, so the sup is 0.
    """
    if z.system is not DualSystem.FIRST:
        raise ValueError("fitz_closed_first expects a first-system point")
    return Fraction(0) if on_graph_G_first(z) else PLUS_INF


def fitz_closed_second_G(z: PairPoint) -> ExtendedRational:
    """Fitzpatrick function of G in the second system: indicator of Graph(-G*)."""
    if z.system is not DualSystem.SECOND:
        raise ValueError("fitz_closed_second_G expects a second-system point")
    return Fraction(0) if on_graph_negGstar(z) else PLUS_INF


def fitz_closed_second_negG(z: PairPoint) -> ExtendedRational:
    """Fitzpatrick function of -G in the second system: indicator of Graph G*.

    Mirror of fitz_closed_second_G: the two graphs are sign-mirrored, so
    this equals fitz_closed_second_G at (mu, -y).
    """
    if z.system is not DualSystem.SECOND:
        raise ValueError("fitz_closed_second_negG expects a second-system point")
    return Fraction(0) if on_graph_Gstar(z) else PLUS_INF


FITZ_CLOSED: dict[str, Callable[[PairPoint], ExtendedRational]] = {
    OP_G_FIRST: fitz_closed_first,
    OP_G_SECOND: fitz_closed_second_G,
    OP_NEGG_SECOND: fitz_closed_second_negG,
}


def divergence_certificate(z: PairPoint, threshold: int = 10**6) -> dict:
    """Exhibit sampled Fitzpatrick values exceeding ``threshold`` for an
    off-graph first-system point.

    Uses the scaled family (t*u, G(t*u)) along a unit direction u where
    y - Gx does not vanish; the sampled value there is t * <u, y - Gx>,
    unbounded in t.  Returns the witness: direction, scale, exact value.
    """
    if z.system is not DualSystem.FIRST:
        raise ValueError("divergence certificate works in the first system")
    assert isinstance(z.x, SparseSeq)
    deviation = z.y - apply_G(z.x)
    index = None
    for n in range(1, deviation.head_len() + 1):
        if deviation.value(n) != 0:
            index = n
            break
    if index is None:
        for offset, v in enumerate(deviation.tail):
            if v != 0:
                index = deviation.head_len() + 1 + offset
                break
    if index is None:
        raise ValueError("point lies on the graph; no divergence available")
    margin = deviation.value(index)
    direction = SparseSeq.unit(index)
    scale = Fraction(1) if margin > 0 else Fraction(-1)
    while scale * margin <= threshold:
        scale *= 10
    sample = SampledGraph(
        DualSystem.FIRST,
        (PairPoint.first(direction.scale(scale), apply_G(direction.scale(scale))),),
        source="Graph G",
    )
    value = fitz_sampled(z, sample)
    return {
        "direction_index": index,
        "scale": scale,
        "value": value,
        "threshold": threshold,
        "margin": margin,
    }


@dataclass(frozen=True)
class TruncatedAnnihilator:
    """Basis of the annihilator of a finite spanning set, inside a window.

    Coordinates are the x-entries 1..N (plus the mass at infinity in the
    second system) and the y-head 1..N plus one constant-tail coordinate.
    Results are certified only for vectors representable inside this
    window; ``truncation`` records N.
    """

    system: DualSystem
    truncation: int
    basis: tuple[PairPoint, ...]

    def to_json(self) -> dict:
        return {
            "system": self.system.value,
            "truncation": self.truncation,
            "basis": [p.to_json() for p in self.basis],
        }


def _annihilator_row_first(w: PairPoint, n: int) -> list[Fraction]:
    u, v = w.x, w.y
    assert isinstance(u, SparseSeq)
    if u.max_index() > n:
        raise ValueError("spanning first component exceeds the truncation window")
    x_coeffs = [v.value(j) for j in range(1, n + 1)]
    y_coeffs = [u.value(j) for j in range(1, n + 1)]
    return x_coeffs + y_coeffs + [Fraction(0)]


def _annihilator_row_second(w: PairPoint, n: int) -> list[Fraction]:
    nu, v = w.x, w.y
    assert isinstance(nu, ModelMeasure)
    if nu.atomic.max_index() > n:
        raise ValueError("spanning first component exceeds the truncation window")
    lim = v.limit()
    if lim is None:
        raise OutsideModelDomain("spanning point with oscillating y is not pairable")
    x_coeffs = [v.value(j) for j in range(1, n + 1)] + [lim]
    y_coeffs = [nu.atomic.value(j) for j in range(1, n + 1)] + [nu.infinity_mass]
    return x_coeffs + y_coeffs


def annihilator_truncated(
    spanning: Iterable[PairPoint], n: int, system: DualSystem
) -> TruncatedAnnihilator:
    """Basis of {z : z.w = 0 for all spanning w} on window coordinates.

    Exact rational elimination; the basis vectors are returned as points
    (x supported in 1..N, y with head 1..N and a constant tail).
    """
    spanning = list(spanning)
    if system is DualSystem.FIRST:
        rows = [_annihilator_row_first(w, n) for w in spanning]
        ncols = 2 * n + 1
    else:
        rows = [_annihilator_row_second(w, n) for w in spanning]
        ncols = 2 * n + 2
    vectors = linalg.nullspace(rows, ncols)
    basis = []
    for vec in vectors:
        if system is DualSystem.FIRST:
            x: SparseSeq | ModelMeasure = SparseSeq.from_pairs(
                (j + 1, vec[j]) for j in range(n)
            )
            y = TailSeq(tuple(vec[n : 2 * n]), (vec[2 * n],))
        else:
            x = ModelMeasure(SparseSeq.from_pairs((j + 1, vec[j]) for j in range(n)), vec[n])
            y = TailSeq(tuple(vec[n + 1 : 2 * n + 1]), (vec[2 * n + 1],))
        basis.append(PairPoint(system, x, y))
    return TruncatedAnnihilator(system, n, tuple(basis))


def annihilator_violation(z: PairPoint, spanning: Iterable[PairPoint]) -> dict | None:
    """First spanning element w with z.w != 0, or None if z annihilates all."""
    for w in spanning:
        value = natural_couple(z, w)
        if value != 0:
            return {"point": z, "against": w, "value": value}
    return None


def orthogonality_report(a: SampledGraph, b: SampledGraph) -> PropertyVerdict:
    """Check z.w = 0 for every z in b, w in a.

    Pairings outside the model domain are skipped and counted; the first
    violation refutes with the exact pair and value.
    """
    zeros = 0
    skipped = 0
    for z in b.points:
        for w in a.points:
            try:
                value = natural_couple(z, w)
            except OutsideModelDomain:
                skipped += 1
                continue
            if value != 0:
                return PropertyVerdict(
                    property="orthogonality",
                    status=REFUTED,
                    witnesses=({"z": z, "w": w, "value": value},),
                    stats={
                        "pairs_checked": zeros + skipped + 1,
                        "zeros": zeros,
                        "skipped": skipped,
                    },
                )
            zeros += 1
    status = VERIFIED if skipped == 0 else INCONCLUSIVE
    return PropertyVerdict(
        property="orthogonality",
        status=status,
        stats={"pairs_checked": zeros + skipped, "zeros": zeros, "skipped": skipped},
    )


@dataclass(frozen=True)
class RepresentedFunction:
    """A named extended-rational function on pair points.

    Wraps the indicator and Fitzpatrick constructions so property checkers
    can treat them uniformly; evaluation is total on representable points.
    """

    name: str
    system: DualSystem
    fn: Callable[[PairPoint], ExtendedRational]

    def __call__(self, z: PairPoint) -> ExtendedRational:
        return self.fn(z)


def indicator_graph_G() -> RepresentedFunction:
    return RepresentedFunction("indicator(Graph G)", DualSystem.FIRST, fitz_closed_first)


def indicator_graph_negGstar() -> RepresentedFunction:
    return RepresentedFunction("indicator(Graph negG*)", DualSystem.SECOND, fitz_closed_second_G)


def indicator_graph_Gstar() -> RepresentedFunction:
    return RepresentedFunction("indicator(Graph G*)", DualSystem.SECOND, fitz_closed_second_negG)


def indicator_closure_model() -> RepresentedFunction:
    """Model slice of the closed graph of embedded G: mass-free points with
    y = G(atomic).  The closure's extra points are not representable."""

    def fn(z: PairPoint) -> ExtendedRational:
        return Fraction(0) if on_graph_G_embedded(z) else PLUS_INF

    return RepresentedFunction("indicator(cl Graph G, model slice)", DualSystem.SECOND, fn)


def coupling_plus_indicator(graph: SampledGraph) -> RepresentedFunction:
    def fn(z: PairPoint) -> ExtendedRational:
        return eval_cA(z, graph)

    return RepresentedFunction(f"c + indicator({graph.source})", graph.system, fn)


def fitzpatrick_sampled(graph: SampledGraph) -> RepresentedFunction:
    def fn(z: PairPoint) -> ExtendedRational:
        return fitz_sampled(z, graph)

    return RepresentedFunction(f"fitz_sampled({graph.source})", graph.system, fn)


def fitzpatrick_closed(op_id: str) -> RepresentedFunction:
    system = DualSystem.FIRST if op_id == OP_G_FIRST else DualSystem.SECOND
    return RepresentedFunction(f"fitz_closed({op_id})", system, FITZ_CLOSED[op_id])
