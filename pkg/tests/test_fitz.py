"""Fitzpatrick values: sampled lower bounds vs closed forms, annihilators."""

from fractions import Fraction

import pytest
from hypothesis import given

from gossez_lab.adjoint import graph_Gstar_point, graph_negGstar_point
from gossez_lab.fitz import (
    MINUS_INF,
    PLUS_INF,
    SampledGraph,
    annihilator_truncated,
    annihilator_violation,
    coupling_plus_indicator,
    divergence_certificate,
    eval_cA,
    fitz_closed_first,
    fitz_closed_second_G,
    fitz_closed_second_negG,
    fitz_sampled,
    fitzpatrick_closed,
    indicator_closure_model,
    neg_transform,
    orthogonality_report,
)
from gossez_lab.gossez import apply_G
from gossez_lab.sampling import embed_first, graph_point_first, unit_graph_points
from gossez_lab.spaces import (
    DualSystem,
    ModelMeasure,
    PairPoint,
    SparseSeq,
    TailSeq,
)
from gossez_lab.verdict import REFUTED, VERIFIED

from strategies import model_measures, seq, sparse_seqs

F = Fraction

UNIT_MASS = ModelMeasure(SparseSeq.zero(), F(1))
CANONICAL = PairPoint.second(UNIT_MASS, TailSeq.ones())


def first_graph(*xs) -> SampledGraph:
    return SampledGraph(
        DualSystem.FIRST, tuple(graph_point_first(x) for x in xs), source="Graph G"
    )


# ------------------------------------------------------------- neg transform


def test_neg_transform_examples():
    g = first_graph(SparseSeq.unit(1))
    flipped = neg_transform(g)
    assert flipped.points[0].y == -apply_G(SparseSeq.unit(1))
    empty = SampledGraph(DualSystem.FIRST, (), source="custom")
    assert neg_transform(empty).points == ()


@given(sparse_seqs(), sparse_seqs())
def test_neg_transform_involution(x, y):
    g = first_graph(x, y)
    assert neg_transform(neg_transform(g)).points == g.points


# ---------------------------------------------------------- c + indicator


def test_eval_cA():
    g = first_graph(SparseSeq.unit(1), seq(1, 1))
    on = graph_point_first(seq(1, 1))
    assert eval_cA(on, g) == 0  # skew graph lies in [c = 0]
    off = PairPoint.first(SparseSeq.zero(), TailSeq.ones())
    assert eval_cA(off, g) == PLUS_INF
    empty = SampledGraph(DualSystem.FIRST, (), source="custom")
    assert eval_cA(on, empty) == PLUS_INF


# ------------------------------------------------------------ sampled values


def test_fitz_sampled_zero_sample():
    g = SampledGraph(DualSystem.FIRST, (PairPoint.zero(DualSystem.FIRST),), "custom")
    assert fitz_sampled(PairPoint.first(seq(1), TailSeq.ones()), g) == 0


def test_fitz_sampled_on_graph_point():
    g = first_graph(SparseSeq.unit(1))
    assert fitz_sampled(g.points[0], g) == 0


def test_fitz_sampled_scaled_family_max():
    # family (t*e1, G(t*e1)) for t = 1..10 against z = (0, ones): value is t
    points = tuple(
        graph_point_first(SparseSeq.unit(1).scale(t)) for t in range(1, 11)
    )
    g = SampledGraph(DualSystem.FIRST, points, source="Graph G")
    z = PairPoint.first(SparseSeq.zero(), TailSeq.ones())
    assert fitz_sampled(z, g) == 10


def test_fitz_sampled_empty_is_minus_inf():
    empty = SampledGraph(DualSystem.FIRST, (), source="custom")
    assert fitz_sampled(PairPoint.zero(DualSystem.FIRST), empty) == MINUS_INF


# -------------------------------------------------------------- closed forms


def test_fitz_closed_first_examples():
    assert fitz_closed_first(graph_point_first(SparseSeq.unit(1))) == 0
    assert fitz_closed_first(PairPoint.first(SparseSeq.zero(), TailSeq.ones())) == PLUS_INF
    assert fitz_closed_first(PairPoint.zero(DualSystem.FIRST)) == 0


def test_fitz_closed_first_rejects_second_system():
    with pytest.raises(ValueError):
        fitz_closed_first(CANONICAL)


@given(sparse_seqs())
def test_sampled_below_closed_on_graph(x):
    z = graph_point_first(x)
    g = first_graph(x, SparseSeq.unit(1), seq(1, -2))
    sampled = fitz_sampled(z, g)
    assert sampled <= fitz_closed_first(z)
    assert sampled == 0


def test_divergence_certificate_exceeds_threshold():
    z = PairPoint.first(SparseSeq.zero(), TailSeq.ones())
    cert = divergence_certificate(z, threshold=10**6)
    assert cert["value"] > 10**6
    on = graph_point_first(seq(1, 2))
    with pytest.raises(ValueError):
        divergence_certificate(on)


def test_fitz_closed_second_G_examples():
    assert fitz_closed_second_G(CANONICAL) == 0
    embedded = embed_first(SparseSeq.unit(1))
    assert fitz_closed_second_G(embedded) == 0
    off = PairPoint.second(UNIT_MASS, TailSeq.zero())
    assert fitz_closed_second_G(off) == PLUS_INF


def test_fitz_closed_second_negG_examples():
    on = PairPoint.second(UNIT_MASS, -TailSeq.ones())
    assert fitz_closed_second_negG(on) == 0
    assert fitz_closed_second_negG(CANONICAL) == PLUS_INF
    assert fitz_closed_second_negG(PairPoint.zero(DualSystem.SECOND)) == 0


@given(model_measures())
def test_closed_forms_are_sign_mirrors(mu):
    z = graph_Gstar_point(mu)
    mirrored = PairPoint.second(z.x, -z.y)
    assert fitz_closed_second_negG(z) == fitz_closed_second_G(mirrored) == 0
    w = graph_negGstar_point(mu)
    assert fitz_closed_second_G(w) == fitz_closed_second_negG(
        PairPoint.second(w.x, -w.y)
    ) == 0


@given(model_measures())
def test_sign_mirror_holds_off_graph_too(mu):
    z = PairPoint.second(mu, TailSeq.constant(F(7, 3), head=[1]))
    mirrored = PairPoint.second(z.x, -z.y)
    assert fitz_closed_second_negG(z) == fitz_closed_second_G(mirrored)


@given(model_measures())
def test_second_sampled_vanishes_on_embedded_closure(mu):
    z = graph_negGstar_point(mu)
    embedded = SampledGraph(
        DualSystem.SECOND,
        tuple(embed_first(x) for x in (SparseSeq.unit(1), seq(1, 1), seq(0, 2, -3))),
        source="Graph G embedded",
    )
    assert fitz_sampled(z, embedded) == 0 <= fitz_closed_second_G(z)


# --------------------------------------------------------------- annihilator


def test_annihilator_first_system():
    n = 8
    spanning = unit_graph_points(n)
    result = annihilator_truncated(spanning, n, DualSystem.FIRST)
    assert result.truncation == n
    # free coordinates: the n graph directions plus the tail coordinate
    assert len(result.basis) == n + 1
    for vec in result.basis:
        assert annihilator_violation(vec, spanning) is None
    for x in (seq(1, -2, 3), SparseSeq.unit(5), seq(0, F(1, 3))):
        assert annihilator_violation(graph_point_first(x), spanning) is None
    off = PairPoint.first(seq(1), apply_G(seq(1)) + TailSeq.constant(0, head=[1]))
    assert annihilator_violation(off, spanning) is not None


def test_annihilator_of_zero_span_is_everything():
    n = 3
    spanning = [PairPoint.zero(DualSystem.FIRST)]
    result = annihilator_truncated(spanning, n, DualSystem.FIRST)
    assert len(result.basis) == 2 * n + 1


def test_annihilator_second_system_contains_mass_direction():
    n = 6
    spanning = [embed_first(SparseSeq.unit(k)) for k in range(1, n + 1)]
    result = annihilator_truncated(spanning, n, DualSystem.SECOND)
    assert len(result.basis) == n + 2
    for a in (F(1), F(-3, 2)):
        direction = PairPoint.second(
            ModelMeasure(SparseSeq.zero(), a), TailSeq.constant(a)
        )
        assert annihilator_violation(direction, spanning) is None
    for mu in (ModelMeasure(seq(1, 2), F(1, 2)), ModelMeasure.from_atomic(seq(-1))):
        assert annihilator_violation(graph_negGstar_point(mu), spanning) is None


def test_annihilator_rejects_wide_support():
    with pytest.raises(ValueError):
        annihilator_truncated([graph_point_first(SparseSeq.unit(9))], 4, DualSystem.FIRST)


# --------------------------------------------------------------- orthogonality


def test_orthogonality_graph_vs_itself():
    g = first_graph(SparseSeq.unit(1), SparseSeq.unit(2), seq(1, -1), seq(F(1, 2), 0, 3))
    report = orthogonality_report(g, g)
    assert report.status == VERIFIED
    assert report.stats["zeros"] == len(g.points) ** 2


def test_orthogonality_mass_direction_passes():
    g = first_graph(SparseSeq.unit(1), seq(2, -1))
    embedded = SampledGraph(
        DualSystem.SECOND,
        tuple(embed_first(p.x) for p in g.points),
        source="Graph G embedded",
    )
    b = SampledGraph(DualSystem.SECOND, (CANONICAL,), source="Graph negG*")
    assert orthogonality_report(embedded, b).status == VERIFIED


def test_orthogonality_violation_is_reported():
    g = first_graph(SparseSeq.unit(1), SparseSeq.unit(2))
    b = SampledGraph(
        DualSystem.FIRST,
        (PairPoint.first(SparseSeq.zero(), TailSeq.ones()),),
        source="custom",
    )
    report = orthogonality_report(g, b)
    assert report.status == REFUTED
    witness = report.witnesses[0]
    assert witness["value"] == 1


# -------------------------------------------------------- function wrappers


def test_represented_function_factories():
    closed = fitzpatrick_closed("G-second")
    assert closed(CANONICAL) == 0
    closure = indicator_closure_model()
    assert closure(embed_first(seq(1, 2))) == 0
    assert closure(CANONICAL) == PLUS_INF
    g = first_graph(SparseSeq.unit(1))
    ca = coupling_plus_indicator(g)
    assert ca(g.points[0]) == 0
    assert ca(PairPoint.zero(DualSystem.FIRST)) == PLUS_INF


def test_sampled_graph_dedup_and_json():
    p = graph_point_first(SparseSeq.unit(1))
    g = SampledGraph(DualSystem.FIRST, (p, p), source="Graph G")
    assert len(g) == 1
    doc = g.to_json()
    assert doc["source"] == "Graph G"
    assert SampledGraph.from_json(doc).points == g.points


def test_sampled_graph_rejects_mixed_systems():
    with pytest.raises(ValueError):
        SampledGraph(DualSystem.FIRST, (CANONICAL,), source="custom")
