"""
Primitive loops and homology intersection pairings.

A loop is a cyclic sequence of arcs (arc ``p`` runs from occurrence ``p`` to
occurrence ``p + 1``).  Between consecutive arcs the loop passes through a
crossing, entering at the incoming half-edge of one occurrence and leaving
at the outgoing half-edge of another occurrence of the same label.

Smoothing the diagram at ``a`` (occurrences ``p < q``) splits it into the
loop made of arcs ``p .. q-1`` and the loop made of arcs ``q .. p-1``.  The
left-turn loop ``D_a`` is the first of these when ``sign(a) = +1`` and the
second when ``sign(a) = -1``; ``D~_a`` is the other one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gauss import SignedGaussCode
from .surface import RotationSystem, build_rotation_system, half_in, half_out

__all__ = [
    "LoopWalk",
    "PairingTable",
    "full_loop",
    "primitive_loops",
    "interval",
    "pairing_interval",
    "pairing_pushoff",
    "pairing_table",
    "tilde_table",
]


@dataclass(frozen=True)
class LoopWalk:
    arcs: tuple[int, ...]
    origin: str = "D"
    label: str | None = None

    def passes(self, size: int) -> list[tuple[int, int]]:
        """``(in_occurrence, out_occurrence)`` for every crossing passage."""
        k = len(self.arcs)
        return [((self.arcs[i] + 1) % size, self.arcs[(i + 1) % k]) for i in range(k)]

    def check(self, code: SignedGaussCode) -> None:
        size = len(code)
        w = code.word
        if len(set(self.arcs)) != len(self.arcs):
            raise ValueError("loop uses an arc twice")
        for i, o in self.passes(size):
            if not (0 <= i < size and 0 <= o < size) or w[i] != w[o]:
                raise ValueError(f"loop {self} is not closed in this diagram")


def full_loop(code: SignedGaussCode) -> LoopWalk:
    return LoopWalk(tuple(range(len(code))), "D")


def interval(code: SignedGaussCode, a: str) -> tuple[int, ...]:
    """Arcs of the left-turn loop ``D_a``."""
    size = len(code)
    p, q = code.occurrences(a)
    if code.sign(a) > 0:
        return tuple(range(p, q))
    return tuple(i % size for i in range(q, p + size))


def primitive_loops(code: SignedGaussCode, a: str) -> tuple[LoopWalk, LoopWalk]:
    """``(D_a, D~_a)``."""
    size = len(code)
    p, q = code.occurrences(a)
    first = tuple(range(p, q))
    second = tuple(i % size for i in range(q, p + size))
    if code.sign(a) < 0:
        first, second = second, first
    return LoopWalk(first, "left", a), LoopWalk(second, "right", a)


def pairing_interval(code: SignedGaussCode, a: str) -> int:
    """``<D_a, D>`` from the occurrences strictly inside ``D_a``.

    Every crossing ``b`` met exactly once inside the loop contributes the
    occurrence sign there, ``eta * sign(b)`` with ``eta = +1`` on a first
    visit and ``-1`` on a second.
    """
    arcs = interval(code, a)
    inside = {(i + 1) % len(code) for i in arcs[:-1]}
    total = 0
    for pos in inside:
        if code.partner(pos) not in inside:
            total += code.occurrence_sign(pos)
    return total


def _chord_sign(e1: int, e2: int, f1: int, f2: int) -> int:
    """Sign of chord ``f1 -> f2`` crossing chord ``e1 -> e2`` on a 12-slot circle.

    +1 when ``f`` runs from the left of ``e`` to its right.  The left side of
    ``e1 -> e2`` is the counterclockwise arc from ``e2`` to ``e1``.
    """
    def left(x: int) -> bool:
        return 0 < (x - e2) % 12 < (e1 - e2) % 12

    lf1, lf2 = left(f1), left(f2)
    if lf1 == lf2:
        return 0
    return 1 if lf1 else -1


def _pushed_chords(rs: RotationSystem, u: LoopWalk) -> dict[str, list[tuple[int, int]]]:
    w = rs.code.word
    by_vertex: dict[str, list[tuple[int, int]]] = {}
    for i, o in u.passes(rs.size):
        by_vertex.setdefault(w[i], []).append((3 * rs.slot[half_in(i)], 3 * rs.slot[half_out(o)] + 2))
    return by_vertex


def _center_chords(rs: RotationSystem, v: LoopWalk) -> list[tuple[str, int, int]]:
    w = rs.code.word
    return [(w[i], 3 * rs.slot[half_in(i)] + 1, 3 * rs.slot[half_out(o)] + 1)
            for i, o in v.passes(rs.size)]


def _count(pushed: dict[str, list[tuple[int, int]]], centers: list[tuple[str, int, int]]) -> int:
    total = 0
    for vertex, f1, f2 in centers:
        for e1, e2 in pushed.get(vertex, ()):
            total += _chord_sign(e1, e2, f1, f2)
    return total


def pairing_pushoff(rs: RotationSystem, u: LoopWalk, v: LoopWalk) -> int:
    """Algebraic intersection of ``u`` pushed to its left with ``v``.

    Along shared arcs the pushed copy runs parallel to ``v``, so crossings
    only happen inside vertex disks.  The boundary of each disk carries
    three slots per half-edge (clockwise side, center, counterclockwise
    side); the pushed copy of ``u`` enters on the clockwise side of its
    incoming half-edge and leaves on the counterclockwise side of its
    outgoing one, while ``v`` runs center to center.
    """
    if not u.arcs or not v.arcs:
        return 0
    u.check(rs.code)
    v.check(rs.code)
    return _count(_pushed_chords(rs, u), _center_chords(rs, v))


def _table(rs: RotationSystem, loops: list[LoopWalk]) -> np.ndarray:
    for lp in loops:
        lp.check(rs.code)
    pushed = [_pushed_chords(rs, lp) for lp in loops]
    centers = [_center_chords(rs, lp) for lp in loops]
    m = len(loops)
    P = np.zeros((m, m), dtype=np.int64)
    for x in range(m):
        for y in range(m):
            if x != y and loops[x].arcs and loops[y].arcs:
                P[x, y] = _count(pushed[x], centers[y])
    return P


@dataclass(frozen=True)
class PairingTable:
    """Pairings over the index set ``labels + ["D"]``; ``P[x, y] = <x, y>``."""

    labels: tuple[str, ...]
    P: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, x: str) -> int:
        return self.n if x == "D" else self.labels.index(x)

    def __getitem__(self, key: tuple[str, str]) -> int:
        x, y = key
        return int(self.P[self.index(x), self.index(y)])

    def check(self) -> None:
        if not np.array_equal(self.P, -self.P.T):
            raise ValueError("pairing table is not skew-symmetric")


def pairing_table(code: SignedGaussCode, labels: Sequence[str] | None = None) -> PairingTable:
    """All pairings among ``D_{a_1}, ..., D_{a_n}, D`` by the push-off method."""
    labels = tuple(code.labels() if labels is None else labels)
    rs = build_rotation_system(code)
    loops = [primitive_loops(code, a)[0] for a in labels] + [full_loop(code)]
    return PairingTable(labels, _table(rs, loops))


def tilde_table(code: SignedGaussCode, labels: Sequence[str] | None = None) -> np.ndarray:
    """``<D~_{a_i}, D~_{a_j}>`` by the push-off method."""
    labels = tuple(code.labels() if labels is None else labels)
    rs = build_rotation_system(code)
    return _table(rs, [primitive_loops(code, a)[1] for a in labels])
