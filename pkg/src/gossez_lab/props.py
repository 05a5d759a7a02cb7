"""Property checkers: monotonicity, extensions, negative-infimum, representability.

Maximality is never verified outright, only refuted (a violating pair) or
supported (a monotone-extension witness off the graph refutes maximality of
the sampled source).  Extension searches scale the sample points through a
geometric ladder: on a linear graph every scaled sample is still a graph
point, and linearity makes monotonicity violations scale-sensitive, so the
ladder catches what unit-scale probes miss.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .adjoint import apply_Gstar
from .fitz import (
    FITZ_CLOSED,
    OP_G_FIRST,
    OP_G_SECOND,
    OP_NEGG_SECOND,
    PLUS_INF,
    RepresentedFunction,
    SampledGraph,
    indicator_graph_G,
    indicator_graph_Gstar,
    indicator_graph_negGstar,
    SOURCE_MEMBERSHIP,
)
from .sampling import (
    ProbeSet,
    embed_first,
    off_graph_first,
    random_graph_points,
    rng_for,
    unit_graph_points,
)
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
from .verdict import INCONCLUSIVE, REFUTED, VERIFIED, WITNESS_FOUND, PropertyVerdict

__all__ = [
    "ProbeSet",
    "PropertyVerdict",
    "is_monotone",
    "extension_probe",
    "ni_witness_search",
    "representability_check",
    "dichotomy_crosscheck",
]


def is_monotone(graph: SampledGraph) -> PropertyVerdict:
    """Check c(z1 - z2) >= 0 over all unordered sample pairs."""
    checked = 0
    skipped = 0
    minimum: Fraction | None = None
    for z1, z2 in combinations(graph.points, 2):
        try:
            value = coupling_value(z1 - z2)
        except OutsideModelDomain:
            skipped += 1
            continue
        checked += 1
        if minimum is None or value < minimum:
            minimum = value
        if value < 0:
            return PropertyVerdict(
                property="monotone",
                status=REFUTED,
                witnesses=({"z1": z1, "z2": z2, "value": value},),
                stats={"pairs_checked": checked, "skipped": skipped},
            )
    stats = {"pairs_checked": checked, "skipped": skipped}
    if minimum is not None:
        stats["min_value"] = minimum
    return PropertyVerdict(
        property="monotone",
        status=VERIFIED if skipped == 0 else INCONCLUSIVE,
        stats=stats,
    )


def _scale_ladder(scale_max: int) -> list[Fraction]:
    ladder = []
    t = Fraction(1)
    while t <= scale_max:
        ladder.extend((t, -t))
        t *= 10
    return ladder


def extension_probe(
    graph: SampledGraph, z: PairPoint, scale_max: int = 10**6
) -> PropertyVerdict:
    """Probe whether z extends the sampled graph monotonically.

    Checks c(z - t*w) >= 0 for every sample w and every ladder scale t of
    both signs (plus the zero point, a graph point of every linear source).
    A violation refutes; survival makes z a monotone-extension witness,
    flagged when z already lies on the analytic graph of the source.
    """
    membership = SOURCE_MEMBERSHIP.get(graph.source)
    on_analytic_graph = membership(z) if membership is not None else None
    ladder = _scale_ladder(scale_max)
    cz = coupling_value(z)
    if cz < 0:
        # Violation against the origin, a graph point of any linear source.
        return PropertyVerdict(
            property="extension",
            status=REFUTED,
            witnesses=({"w": PairPoint.zero(graph.system), "scale": Fraction(1), "value": cz},),
            stats={"pairs_checked": 1, "scale_max": scale_max},
        )
    checked = 1
    skipped = 0
    for w in graph.points:
        try:
            zw = natural_couple(z, w)
            cw = coupling_value(w)
        except OutsideModelDomain:
            skipped += 1
            continue
        for t in ladder:
            # c(z - t*w) expanded bilinearly; exact for every scale.
            value = cz - t * zw + t * t * cw
            checked += 1
            if value < 0:
                return PropertyVerdict(
                    property="extension",
                    status=REFUTED,
                    witnesses=({"w": w, "scale": t, "value": value},),
                    stats={"pairs_checked": checked, "skipped": skipped, "scale_max": scale_max},
                )
    stats = {"pairs_checked": checked, "skipped": skipped, "scale_max": scale_max}
    if on_analytic_graph is not None:
        stats["already_in_analytic_graph"] = on_analytic_graph
    status = INCONCLUSIVE if skipped else WITNESS_FOUND
    return PropertyVerdict(
        property="extension",
        status=status,
        witnesses=({"point": z, "coupling": cz},),
        stats=stats,
    )


def ni_witness_search(op_id: str, probes: ProbeSet) -> PropertyVerdict:
    """Search probes for fitz(z) < c(z), refuting the negative-infimum property.

    The closed-form Fitzpatrick value is an indicator here, so a witness is
    a graph point of the indicator's graph whose coupling is positive.
    """
    fitz = FITZ_CLOSED[op_id]
    seed = probes.descriptor.get("seed")
    checked = 0
    skipped = 0
    for z in probes.points:
        try:
            cv = coupling_value(z)
        except OutsideModelDomain:
            skipped += 1
            continue
        fv = fitz(z)
        checked += 1
        if fv < cv:
            return PropertyVerdict(
                property=f"NI({op_id})",
                status=WITNESS_FOUND,
                witnesses=({"z": z, "fitz": fv, "coupling": cv, "margin": cv - fv},),
                stats={"probes_checked": checked, "skipped": skipped},
                seed=seed,
            )
    return PropertyVerdict(
        property=f"NI({op_id})",
        status=VERIFIED if skipped == 0 else INCONCLUSIVE,
        stats={"probes_checked": checked, "skipped": skipped},
        seed=seed,
    )


def representability_check(
    fn: RepresentedFunction,
    graph: SampledGraph,
    probes: ProbeSet,
    seed: int = 0,
    convexity_pairs: int = 100,
) -> PropertyVerdict:
    """Check fn against the graph and probes as a candidate representative.

    Three conditions: exact equality fn = c on the graph samples, fn >= c
    on every probe, and midpoint convexity on random probe pairs with both
    values finite.  A probe strictly below the coupling is reported as a
    witness (it disqualifies fn from the representative class); equality on
    the graph failing refutes outright.  The equality set among probes is
    reported for comparison with the graph.
    """
    for z in graph.points:
        fv = fn(z)
        cv = coupling_value(z)
        if fv != cv:
            return PropertyVerdict(
                property=f"representability({fn.name})",
                status=REFUTED,
                witnesses=({"z": z, "fn": fv, "coupling": cv},),
                stats={"graph_points": len(graph.points)},
                seed=seed,
            )
    below: dict | None = None
    equality_set = 0
    equality_on_analytic = 0
    skipped = 0
    membership = SOURCE_MEMBERSHIP.get(graph.source)
    for z in probes.points:
        try:
            cv = coupling_value(z)
            fv = fn(z)
        except OutsideModelDomain:
            skipped += 1
            continue
        if fv < cv and below is None:
            below = {"z": z, "fn": fv, "coupling": cv, "margin": cv - fv}
        if fv == cv:
            equality_set += 1
            if membership is not None and membership(z):
                equality_on_analytic += 1
    rng = rng_for(seed, f"convexity:{fn.name}")
    finite = []
    for z in probes.points:
        try:
            if fn(z) != PLUS_INF:
                finite.append(z)
        except OutsideModelDomain:
            continue
    convex_checked = 0
    for _ in range(convexity_pairs):
        if len(finite) < 2:
            break
        z1, z2 = rng.sample(finite, 2)
        try:
            mid = (z1 + z2).scale(Fraction(1, 2))
            fm, f1, f2 = fn(mid), fn(z1), fn(z2)
        except OutsideModelDomain:
            skipped += 1
            continue
        convex_checked += 1
        if fm != PLUS_INF and fm > (f1 + f2) / 2:
            return PropertyVerdict(
                property=f"representability({fn.name})",
                status=REFUTED,
                witnesses=({"z1": z1, "z2": z2, "midpoint_value": fm},),
                stats={"reason": "midpoint convexity violated"},
                seed=seed,
            )
    stats = {
        "graph_points": len(graph.points),
        "probes": len(probes.points),
        "equality_set": equality_set,
        "equality_on_analytic_graph": equality_on_analytic,
        "convexity_pairs": convex_checked,
        "skipped": skipped,
    }
    if below is not None:
        return PropertyVerdict(
            property=f"representability({fn.name})",
            status=WITNESS_FOUND,
            witnesses=(below,),
            stats=stats,
            seed=seed,
        )
    return PropertyVerdict(
        property=f"representability({fn.name})",
        status=VERIFIED if skipped == 0 else INCONCLUSIVE,
        stats=stats,
        seed=seed,
    )


def _sample_graph(op_id: str, seed: int, truncation: int, count: int) -> SampledGraph:
    # Unit points must cover the whole truncation window (plus one index for
    # tail-only deviations), or off-graph probes deviating on uncovered
    # indices would survive the refutation scan.
    rng = rng_for(seed, f"graph:{op_id}:{truncation}:{count}")
    if op_id == OP_G_FIRST:
        points = unit_graph_points(truncation + 1) + random_graph_points(
            rng, count, truncation, 6, 50, 50
        )
        return SampledGraph(DualSystem.FIRST, tuple(points), source="Graph G")
    base = unit_graph_points(truncation + 1) + random_graph_points(
        rng, count, truncation, 6, 50, 50
    )
    if op_id == OP_G_SECOND:
        embedded = tuple(embed_first(p.x) for p in base if isinstance(p.x, SparseSeq))
        return SampledGraph(DualSystem.SECOND, embedded, source="Graph G embedded")
    embedded = tuple(
        PairPoint.second(ModelMeasure.from_atomic(p.x), -p.y)
        for p in base
        if isinstance(p.x, SparseSeq)
    )
    return SampledGraph(DualSystem.SECOND, embedded, source="Graph negG embedded")


_REPRESENTATIVES = {
    OP_G_FIRST: indicator_graph_G,
    OP_G_SECOND: indicator_graph_negGstar,
    OP_NEGG_SECOND: indicator_graph_Gstar,
}

_PROFILES = {
    OP_G_FIRST: "maximal-consistent",
    OP_G_SECOND: "not-maximal-consistent",
    OP_NEGG_SECOND: "NI-but-not-maximal-consistent",
}


def dichotomy_crosscheck(
    op_id: str,
    seed: int = 0,
    truncation: int = 32,
    probe_count: int = 200,
    scale_max: int = 10**6,
) -> PropertyVerdict:
    """Aggregate the checker suite for one operator and test its coherence.

    The three profiles follow the characterization "maximal monotone iff
    representable and NI":

    - G-first: monotone, NI, representable, every off-graph probe refuted
      as an extension.
    - G-second: monotone but an NI witness and a proper extension witness
      exist, and the candidate representative dips below the coupling.
    - negG-second: monotone and NI; no extension witness is representable
      in the measure model (the closure points that refute maximality live
      outside it), so non-maximality is recorded as analytic.

    Any other combination is reported as refuted (an inconsistency).
    """
    if op_id not in _PROFILES:
        raise ValueError(f"unknown operator id {op_id!r}")
    graph = _sample_graph(op_id, seed, truncation, 20)
    probes = ProbeSet.generate(op_id, seed, truncation, probe_count)
    monotone = is_monotone(graph)
    ni = ni_witness_search(op_id, probes)
    representative = representability_check(
        _REPRESENTATIVES[op_id](), graph, probes, seed=seed
    )

    extension_found: dict | None = None
    extension_refuted = 0
    notes: list[str] = []
    if op_id == OP_G_FIRST:
        rng = rng_for(seed, "dichotomy-off-graph")
        for z in off_graph_first(rng, 20, truncation):
            verdict = extension_probe(graph, z, scale_max)
            if verdict.status == REFUTED:
                extension_refuted += 1
            else:
                extension_found = {"point": z}
        consistent = (
            monotone.status == VERIFIED
            and ni.status == VERIFIED
            and representative.status == VERIFIED
            and extension_found is None
            and extension_refuted == 20
        )
    elif op_id == OP_G_SECOND:
        canonical = PairPoint.second(
            ModelMeasure(SparseSeq.zero(), Fraction(1)), TailSeq.ones()
        )
        verdict = extension_probe(graph, canonical, scale_max)
        if verdict.status == WITNESS_FOUND:
            extension_found = {"point": canonical, "coupling": coupling_value(canonical)}
        consistent = (
            monotone.status == VERIFIED
            and ni.status == WITNESS_FOUND
            and representative.status == WITNESS_FOUND
            and extension_found is not None
        )
    else:
        candidates = [
            z
            for z in probes.points
            if isinstance(z.x, ModelMeasure)
            and z.x.infinity_mass != 0
            and z.y == apply_Gstar(z.x)
        ]
        for z in candidates:
            verdict = extension_probe(graph, z, scale_max)
            if verdict.status == REFUTED:
                extension_refuted += 1
            else:
                extension_found = {"point": z}
        notes.append(
            "no proper extension witness is representable in the model; "
            "the closure of the graph adds only unrepresentable points, "
            "so non-maximality is asserted analytically"
        )
        consistent = (
            monotone.status == VERIFIED
            and ni.status == VERIFIED
            and representative.status == VERIFIED
            and extension_found is None
            and extension_refuted == len(candidates) > 0
        )
    stats: dict = {
        "profile": _PROFILES[op_id],
        "monotone": monotone.status,
        "ni": ni.status,
        "representability": representative.status,
        "extension_refuted": extension_refuted,
        "extension_witness_found": extension_found is not None,
    }
    if notes:
        stats["notes"] = notes
    witnesses = []
    if extension_found is not None:
        witnesses.append({"extension": extension_found})
    if ni.status == WITNESS_FOUND:
        witnesses.extend(ni.witnesses)
    return PropertyVerdict(
        property=f"dichotomy({op_id})",
        status=VERIFIED if consistent else REFUTED,
        witnesses=tuple(witnesses),
        stats=stats,
        seed=seed,
    )
