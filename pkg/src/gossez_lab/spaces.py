"""Exact sequence spaces and couplings.

Everything is built from arbitrary-precision rationals (`fractions.Fraction`);
no operation here ever rounds.  Three value representations cover the spaces
in play:

- ``SparseSeq``: a finitely supported rational sequence, the computable slice
  of the summable sequences l1.  Indices are 1-based.
- ``TailSeq``: a finite head followed by an eventually periodic tail, the
  computable slice of the bounded sequences l-infinity.  A TailSeq converges
  exactly when its (canonical) tail pattern has length one.
- ``ModelMeasure``: an atomic part (SparseSeq) plus one rational mass acting
  as the limit functional on convergent sequences; the computable slice of
  the dual of l-infinity.

Two dual systems are supported: FIRST pairs SparseSeq with TailSeq through
the series coupling sum x_n*y_n, SECOND pairs ModelMeasure with TailSeq
through the measure action.  ``PairPoint`` tags a product-space point with
its system, and ``natural_couple`` implements the induced coupling
z.w = c(x_z, y_w) + c(x_w, y_z) on pairs.

All types are immutable and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union


class OutsideModelDomain(Exception):
    """Raised when a measure with nonzero mass at infinity meets a
    non-convergent sequence: the limit functional is undefined there and
    assigning a Banach-limit value would be an arbitrary choice."""


class SystemMismatchError(ValueError):
    """Raised when points from different dual systems are paired."""


RationalLike = Union[Fraction, int]


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Serialize a rational as the canonical string "p/q" (q always present)."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a bare integer string."""
    return Fraction(text)


@dataclass(frozen=True)
class SparseSeq:
    """Finitely supported rational sequence, indexed from 1.

    ``entries`` is the canonical form: sorted by index, no zero values.
    """

    entries: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        cleaned = []
        seen: set[int] = set()
        for index, value in self.entries:
            if not isinstance(index, int) or index < 1:
                raise ValueError(f"indices are 1-based integers, got {index!r}")
            if index in seen:
                raise ValueError(f"duplicate index {index}")
            seen.add(index)
            value = as_fraction(value)
            if value != 0:
                cleaned.append((index, value))
        cleaned.sort()
        object.__setattr__(self, "entries", tuple(cleaned))

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, RationalLike]]) -> SparseSeq:
        return SparseSeq(tuple((n, as_fraction(v)) for n, v in pairs))

    @staticmethod
    def from_values(values: Iterable[RationalLike]) -> SparseSeq:
        """Build from consecutive values starting at index 1."""
        return SparseSeq.from_pairs((n, v) for n, v in enumerate(values, start=1))

    @staticmethod
    def unit(index: int) -> SparseSeq:
        """The unit vector e_index."""
        return SparseSeq(((index, Fraction(1)),))

    @staticmethod
    def zero() -> SparseSeq:
        return SparseSeq()

    def value(self, index: int) -> Fraction:
        for n, v in self.entries:
            if n == index:
                return v
            if n > index:
                break
        return Fraction(0)

    def support(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.entries)

    def max_index(self) -> int:
        """Largest support index, 0 for the zero sequence."""
        return self.entries[-1][0] if self.entries else 0

    def is_zero(self) -> bool:
        return not self.entries

    def entry_sum(self) -> Fraction:
        return sum((v for _, v in self.entries), Fraction(0))

    def l1_norm(self) -> Fraction:
        return sum((abs(v) for _, v in self.entries), Fraction(0))

    def __add__(self, other: SparseSeq) -> SparseSeq:
        merged = dict(self.entries)
        for n, v in other.entries:
            merged[n] = merged.get(n, Fraction(0)) + v
        return SparseSeq.from_pairs(merged.items())

    def __sub__(self, other: SparseSeq) -> SparseSeq:
        return self + (-other)

    def __neg__(self) -> SparseSeq:
        return SparseSeq(tuple((n, -v) for n, v in self.entries))

    def scale(self, factor: RationalLike) -> SparseSeq:
        factor = as_fraction(factor)
        return SparseSeq(tuple((n, factor * v) for n, v in self.entries))

    def __mul__(self, factor: RationalLike) -> SparseSeq:
        return self.scale(factor)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"entries": [[n, format_rational(v)] for n, v in self.entries]}

    @staticmethod
    def from_json(obj: dict) -> SparseSeq:
        return SparseSeq.from_pairs((int(n), parse_rational(v)) for n, v in obj["entries"])


def _minimal_period(pattern: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    length = len(pattern)
    for d in range(1, length + 1):
        if length % d == 0 and pattern == pattern[:d] * (length // d):
            return pattern[:d]
    return pattern


@dataclass(frozen=True)
class TailSeq:
    """Bounded sequence with a finite head and an eventually periodic tail.

    ``head`` holds values at indices 1..H; for n > H the value is
    ``tail[(n - H - 1) % len(tail)]``.  A constant tail is the pattern of
    length one.  Construction canonicalizes: the pattern is reduced to its
    minimal period and the head is trimmed to the minimal preperiod (a head
    element equal to the value the tail would produce there is absorbed into
    the cycle).  Structural equality of canonical forms therefore decides
    semantic equality of the represented sequences.
    """

    head: tuple[Fraction, ...] = ()
    tail: tuple[Fraction, ...] = (Fraction(0),)

    def __post_init__(self) -> None:
        head = [as_fraction(v) for v in self.head]
        tail = tuple(as_fraction(v) for v in self.tail)
        if not tail:
            raise ValueError("tail pattern must be nonempty")
        tail = _minimal_period(tail)
        while head and head[-1] == tail[-1]:
            head.pop()
            tail = tail[-1:] + tail[:-1]
        object.__setattr__(self, "head", tuple(head))
        object.__setattr__(self, "tail", tail)

    @staticmethod
    def constant(value: RationalLike, head: Iterable[RationalLike] = ()) -> TailSeq:
        return TailSeq(tuple(head), (as_fraction(value),))

    @staticmethod
    def periodic(pattern: Iterable[RationalLike], head: Iterable[RationalLike] = ()) -> TailSeq:
        return TailSeq(tuple(head), tuple(pattern))

    @staticmethod
    def zero() -> TailSeq:
        return TailSeq()

    @staticmethod
    def ones() -> TailSeq:
        return TailSeq.constant(1)

    def value(self, index: int) -> Fraction:
        if index < 1:
            raise ValueError("indices are 1-based")
        if index <= len(self.head):
            return self.head[index - 1]
        return self.tail[(index - len(self.head) - 1) % len(self.tail)]

    def head_len(self) -> int:
        return len(self.head)

    def is_zero(self) -> bool:
        return not self.head and self.tail == (Fraction(0),)

    def is_convergent(self) -> bool:
        """Whether the represented sequence has a limit (constant tail)."""
        return len(self.tail) == 1

    def limit(self) -> Fraction | None:
        """The limit for a constant tail, None when the tail oscillates."""
        return self.tail[0] if len(self.tail) == 1 else None

    def linf_norm(self) -> Fraction:
        # Every head value occurs once and every pattern value infinitely
        # often, so the sup norm is a max over finitely many values.
        return max(abs(v) for v in self.head + self.tail)

    def oscillation(self) -> Fraction:
        """Half the spread of the tail pattern.

        An exact lower bound on the sup-distance to the convergent
        sequences: both the pattern max and the pattern min recur forever,
        and no limit value is within less than half their spread of both.
        """
        return (max(self.tail) - min(self.tail)) / 2

    def _combine(self, other: TailSeq, op) -> TailSeq:
        head_len = max(len(self.head), len(other.head))
        period = math.lcm(len(self.tail), len(other.tail))
        head = tuple(op(self.value(n), other.value(n)) for n in range(1, head_len + 1))
        tail = tuple(
            op(self.value(n), other.value(n))
            for n in range(head_len + 1, head_len + period + 1)
        )
        return TailSeq(head, tail)

    def __add__(self, other: TailSeq) -> TailSeq:
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: TailSeq) -> TailSeq:
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> TailSeq:
        return TailSeq(tuple(-v for v in self.head), tuple(-v for v in self.tail))

    def scale(self, factor: RationalLike) -> TailSeq:
        factor = as_fraction(factor)
        if factor == 0:
            return TailSeq.zero()
        return TailSeq(tuple(factor * v for v in self.head), tuple(factor * v for v in self.tail))

    def __mul__(self, factor: RationalLike) -> TailSeq:
        return self.scale(factor)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        kind = "const" if len(self.tail) == 1 else "periodic"
        return {
            "head": [format_rational(v) for v in self.head],
            "tail": {"kind": kind, "values": [format_rational(v) for v in self.tail]},
        }

    @staticmethod
    def from_json(obj: dict) -> TailSeq:
        head = tuple(parse_rational(v) for v in obj["head"])
        tail = tuple(parse_rational(v) for v in obj["tail"]["values"])
        return TailSeq(head, tail)


@dataclass(frozen=True)
class ModelMeasure:
    """Finitely many atoms on the integers plus one mass at infinity.

    Acts on a convergent TailSeq y as <atomic, y> + infinity_mass * lim y.
    The mass at infinity models the limit functional; measures with richer
    behaviour at infinity are not representable here.
    """

    atomic: SparseSeq = SparseSeq()
    infinity_mass: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "infinity_mass", as_fraction(self.infinity_mass))

    @staticmethod
    def zero() -> ModelMeasure:
        return ModelMeasure()

    @staticmethod
    def from_atomic(x: SparseSeq) -> ModelMeasure:
        """Canonical embedding of a summable sequence."""
        return ModelMeasure(x, Fraction(0))

    def is_zero(self) -> bool:
        return self.atomic.is_zero() and self.infinity_mass == 0

    def __add__(self, other: ModelMeasure) -> ModelMeasure:
        return ModelMeasure(self.atomic + other.atomic, self.infinity_mass + other.infinity_mass)

    def __sub__(self, other: ModelMeasure) -> ModelMeasure:
        return ModelMeasure(self.atomic - other.atomic, self.infinity_mass - other.infinity_mass)

    def __neg__(self) -> ModelMeasure:
        return ModelMeasure(-self.atomic, -self.infinity_mass)

    def scale(self, factor: RationalLike) -> ModelMeasure:
        factor = as_fraction(factor)
        return ModelMeasure(self.atomic.scale(factor), factor * self.infinity_mass)

    def __mul__(self, factor: RationalLike) -> ModelMeasure:
        return self.scale(factor)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"atomic": self.atomic.to_json(), "infinity_mass": format_rational(self.infinity_mass)}

    @staticmethod
    def from_json(obj: dict) -> ModelMeasure:
        return ModelMeasure(SparseSeq.from_json(obj["atomic"]), parse_rational(obj["infinity_mass"]))


def l1_norm(x: SparseSeq) -> Fraction:
    return x.l1_norm()


def linf_norm(y: TailSeq) -> Fraction:
    return y.linf_norm()


def couple(x: SparseSeq, y: TailSeq) -> Fraction:
    """Series coupling sum_n x_n * y_n; finite because x is finitely supported."""
    return sum((v * y.value(n) for n, v in x.entries), Fraction(0))


def pair_measure(mu: ModelMeasure, y: TailSeq) -> Fraction:
    """Measure action <mu, y> = <atomic, y> + infinity_mass * lim y.

    Raises OutsideModelDomain when the mass at infinity is nonzero and y
    does not converge.
    """
    result = couple(mu.atomic, y)
    if mu.infinity_mass != 0:
        lim = y.limit()
        if lim is None:
            raise OutsideModelDomain(
                "measure has mass at infinity but the sequence has no limit"
            )
        result += mu.infinity_mass * lim
    return result


class DualSystem(Enum):
    """The two dual systems: (l1, linf) and (linf*, linf) in the model."""

    FIRST = "first"
    SECOND = "second"


XPart = Union[SparseSeq, ModelMeasure]


@dataclass(frozen=True)
class PairPoint:
    """A point z = (x, y) of the product space, tagged with its dual system."""

    system: DualSystem
    x: XPart
    y: TailSeq

    def __post_init__(self) -> None:
        expected = SparseSeq if self.system is DualSystem.FIRST else ModelMeasure
        if not isinstance(self.x, expected):
            raise TypeError(
                f"{self.system.value} system requires x of type {expected.__name__}, "
                f"got {type(self.x).__name__}"
            )

    @staticmethod
    def first(x: SparseSeq, y: TailSeq) -> PairPoint:
        return PairPoint(DualSystem.FIRST, x, y)

    @staticmethod
    def second(mu: ModelMeasure, y: TailSeq) -> PairPoint:
        return PairPoint(DualSystem.SECOND, mu, y)

    @staticmethod
    def zero(system: DualSystem) -> PairPoint:
        x: XPart = SparseSeq.zero() if system is DualSystem.FIRST else ModelMeasure.zero()
        return PairPoint(system, x, TailSeq.zero())

    def __add__(self, other: PairPoint) -> PairPoint:
        _require_same_system(self, other)
        return PairPoint(self.system, self.x + other.x, self.y + other.y)

    def __sub__(self, other: PairPoint) -> PairPoint:
        _require_same_system(self, other)
        return PairPoint(self.system, self.x - other.x, self.y - other.y)

    def scale(self, factor: RationalLike) -> PairPoint:
        return PairPoint(self.system, self.x.scale(factor), self.y.scale(factor))

    def to_json(self) -> dict:
        return {"system": self.system.value, "x": self.x.to_json(), "y": self.y.to_json()}

    @staticmethod
    def from_json(obj: dict) -> PairPoint:
        system = DualSystem(obj["system"])
        x: XPart
        if system is DualSystem.FIRST:
            x = SparseSeq.from_json(obj["x"])
        else:
            x = ModelMeasure.from_json(obj["x"])
        return PairPoint(system, x, TailSeq.from_json(obj["y"]))


def _require_same_system(z: PairPoint, w: PairPoint) -> None:
    if z.system is not w.system:
        raise SystemMismatchError(f"cannot pair {z.system.value} with {w.system.value}")


def coupling_value(z: PairPoint) -> Fraction:
    """c(z) = <x, y> in the point's own system."""
    if z.system is DualSystem.FIRST:
        assert isinstance(z.x, SparseSeq)
        return couple(z.x, z.y)
    assert isinstance(z.x, ModelMeasure)
    return pair_measure(z.x, z.y)


def _cross(x: XPart, y: TailSeq) -> Fraction:
    if isinstance(x, SparseSeq):
        return couple(x, y)
    return pair_measure(x, y)


def natural_couple(z: PairPoint, w: PairPoint) -> Fraction:
    """The product-space coupling z.w = c(x_z, y_w) + c(x_w, y_z).

    Symmetric by construction; z.z = 2*c(z).
    """
    _require_same_system(z, w)
    return _cross(z.x, w.y) + _cross(w.x, z.y)
