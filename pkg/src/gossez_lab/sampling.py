"""Seeded deterministic generators for samples, graphs, and probe grids.

All randomness flows through `random.Random` seeded with a string derived
from (seed, label), so identical descriptors reproduce identical objects,
bit for bit.  Magnitude caps keep the exact arithmetic fast and keep scaled
refutation searches inside the default scale ladder.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .adjoint import graph_Gstar_point, graph_negGstar_point
from .gossez import apply_G
from .spaces import DualSystem, ModelMeasure, PairPoint, SparseSeq, TailSeq


def rng_for(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def random_rational(
    rng: random.Random, max_num: int = 1000, max_den: int = 1000, nonzero: bool = False
) -> Fraction:
    num = rng.randint(-max_num, max_num)
    while nonzero and num == 0:
        num = rng.randint(-max_num, max_num)
    return Fraction(num, rng.randint(1, max_den))


def random_sparse(
    rng: random.Random,
    max_index: int = 64,
    max_support: int = 8,
    max_num: int = 1000,
    max_den: int = 1000,
) -> SparseSeq:
    k = rng.randint(1, min(max_support, max_index))
    indices = rng.sample(range(1, max_index + 1), k)
    return SparseSeq.from_pairs(
        (n, random_rational(rng, max_num, max_den, nonzero=True)) for n in sorted(indices)
    )


def random_tail(
    rng: random.Random, max_head: int = 4, max_num: int = 100, max_den: int = 100
) -> TailSeq:
    head = tuple(random_rational(rng, max_num, max_den) for _ in range(rng.randint(0, max_head)))
    if rng.random() < 0.5:
        tail: tuple[Fraction, ...] = (random_rational(rng, max_num, max_den),)
    else:
        tail = tuple(random_rational(rng, max_num, max_den) for _ in range(rng.randint(2, 3)))
    return TailSeq(head, tail)


def random_constant_tail(
    rng: random.Random, max_head: int = 4, max_num: int = 100, max_den: int = 100
) -> TailSeq:
    head = tuple(random_rational(rng, max_num, max_den) for _ in range(rng.randint(0, max_head)))
    return TailSeq.constant(random_rational(rng, max_num, max_den), head)


def random_measure(
    rng: random.Random,
    max_index: int = 32,
    max_support: int = 6,
    max_num: int = 100,
    max_den: int = 100,
    mass_nonzero: bool | None = None,
) -> ModelMeasure:
    atomic = random_sparse(rng, max_index, max_support, max_num, max_den)
    if mass_nonzero is None:
        mass = random_rational(rng, max_num, max_den)
    elif mass_nonzero:
        mass = random_rational(rng, max_num, max_den, nonzero=True)
    else:
        mass = Fraction(0)
    return ModelMeasure(atomic, mass)


def graph_point_first(x: SparseSeq) -> PairPoint:
    return PairPoint.first(x, apply_G(x))


def embed_first(x: SparseSeq) -> PairPoint:
    """Canonical embedding of a first-system graph point of G."""
    return PairPoint.second(ModelMeasure.from_atomic(x), apply_G(x))


def unit_graph_points(n: int) -> list[PairPoint]:
    return [graph_point_first(SparseSeq.unit(k)) for k in range(1, n + 1)]


def random_graph_points(
    rng: random.Random,
    count: int,
    max_index: int = 64,
    max_support: int = 8,
    max_num: int = 100,
    max_den: int = 100,
) -> list[PairPoint]:
    return [
        graph_point_first(random_sparse(rng, max_index, max_support, max_num, max_den))
        for _ in range(count)
    ]


def off_graph_first(
    rng: random.Random,
    count: int,
    max_index: int = 32,
    max_num: int = 10,
    max_den: int = 10,
) -> list[PairPoint]:
    """Points (x, Gx + d) with a nonzero head deviation inside the window.

    The deviation is supported on indices 1..max_index with zero tail, so
    any sample set containing the unit graph points up to max_index can
    detect and refute it.
    """
    points = []
    for _ in range(count):
        x = random_sparse(rng, max_index, 6, max_num, max_den)
        dev_index = rng.randint(1, max_index)
        values = {dev_index: random_rational(rng, max_num, max_den, nonzero=True)}
        for n, v in random_sparse(rng, max_index, 3, max_num, max_den).entries:
            if n != dev_index and rng.random() < 0.5:
                values[n] = v
        top = max(values)
        head = [values.get(n, Fraction(0)) for n in range(1, top + 1)]
        deviation = TailSeq.constant(0, head)
        points.append(PairPoint.first(x, apply_G(x) + deviation))
    return points


@dataclass(frozen=True)
class ProbeSet:
    """A reproducible finite set of pair points.

    ``descriptor`` is the generation recipe; `ProbeSet.generate` rebuilds
    the identical set from it.  Every generated point is evaluable in the
    model (measures with mass at infinity only meet convergent sequences).
    """

    system: DualSystem
    points: tuple[PairPoint, ...]
    descriptor: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.points)

    @staticmethod
    def generate(op_id: str, seed: int, truncation: int, count: int) -> ProbeSet:
        descriptor = {"op": op_id, "seed": seed, "truncation": truncation, "count": count}
        rng = rng_for(seed, f"probes:{op_id}:{truncation}:{count}")
        if op_id == "G-first":
            points = _first_system_grid(rng, truncation, count)
            system = DualSystem.FIRST
        elif op_id in ("G-second", "negG-second"):
            points = _second_system_grid(rng, truncation, count)
            system = DualSystem.SECOND
        else:
            raise ValueError(f"unknown operator id {op_id!r}")
        return ProbeSet(system, tuple(points), descriptor)


def _first_system_grid(rng: random.Random, truncation: int, count: int) -> list[PairPoint]:
    points: list[PairPoint] = [PairPoint.zero(DualSystem.FIRST)]
    while len(points) < count:
        x = random_sparse(rng, truncation, 6, 50, 50)
        roll = rng.random()
        if roll < 1 / 3:
            points.append(graph_point_first(x))
        elif roll < 2 / 3:
            points.extend(off_graph_first(rng, 1, truncation))
        else:
            points.append(PairPoint.first(x, random_tail(rng)))
    return points[:count]


def _second_system_grid(rng: random.Random, truncation: int, count: int) -> list[PairPoint]:
    # The canonical unit-mass point of Graph(-G*) comes first: it is the
    # standard witness against the negative-infimum property of G here.
    points: list[PairPoint] = [
        PairPoint.second(ModelMeasure(SparseSeq.zero(), Fraction(1)), TailSeq.ones()),
        PairPoint.zero(DualSystem.SECOND),
    ]
    while len(points) < count:
        roll = rng.random()
        mu = random_measure(rng, truncation, 5, 50, 50)
        if roll < 0.25:
            points.append(embed_first(mu.atomic))
        elif roll < 0.5:
            points.append(graph_negGstar_point(mu if mu.infinity_mass != 0 else ModelMeasure(mu.atomic, Fraction(1))))
        elif roll < 0.75:
            points.append(graph_Gstar_point(mu if mu.infinity_mass != 0 else ModelMeasure(mu.atomic, Fraction(1))))
        else:
            y = random_constant_tail(rng) if mu.infinity_mass != 0 else random_tail(rng)
            points.append(PairPoint.second(mu, y))
    return points[:count]


def negGstar_graph_samples(seed: int, count: int, truncation: int = 32) -> list[PairPoint]:
    rng = rng_for(seed, f"negGstar:{truncation}:{count}")
    return [
        graph_negGstar_point(random_measure(rng, truncation, 5, 50, 50))
        for _ in range(count)
    ]


def Gstar_graph_samples(seed: int, count: int, truncation: int = 32) -> list[PairPoint]:
    rng = rng_for(seed, f"Gstar:{truncation}:{count}")
    return [
        graph_Gstar_point(random_measure(rng, truncation, 5, 50, 50))
        for _ in range(count)
    ]
