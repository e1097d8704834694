"""
Ribbon-graph model of the regular neighborhood of a doodle diagram.

Half-edges are numbered from word positions: ``2*p`` is the end of the arc
arriving at occurrence ``p`` and ``2*p + 1`` the start of the arc leaving it.
Arc ``p`` runs from half-edge ``2*p + 1`` to half-edge ``2*((p + 1) % 2n)``.

At a crossing with first occurrence ``p`` and second occurrence ``q`` the
counterclockwise order of the four half-edges is::

    occurrence_sign(p) = +1:   out(p), in(q), in(p), out(q)
    occurrence_sign(p) = -1:   out(p), out(q), in(p), in(q)

i.e. strand ``p`` runs west to east and strand ``q`` crosses it from north
to south (left to right) exactly when the occurrence sign at ``p`` is +1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gauss import SignedGaussCode

__all__ = [
    "RotationSystem",
    "SurfaceSummary",
    "build_rotation_system",
    "boundary_components",
    "faces",
    "minimal_genus",
    "is_planar",
]


def half_in(pos: int) -> int:
    return 2 * pos


def half_out(pos: int) -> int:
    return 2 * pos + 1


class RotationSystem:
    """4-regular ribbon graph with one vertex per crossing."""

    def __init__(self, code: SignedGaussCode):
        self.code = code
        size = len(code)
        self.size = size
        self.labels = code.labels()
        self.vertex_of: list[str] = [code.word[h // 2] for h in range(2 * size)]
        self.rotation: dict[str, tuple[int, int, int, int]] = {}
        for a in self.labels:
            p, q = code.occurrences(a)
            if code.occurrence_sign(p) > 0:
                cyc = (half_out(p), half_in(q), half_in(p), half_out(q))
            else:
                cyc = (half_out(p), half_out(q), half_in(p), half_in(q))
            self.rotation[a] = cyc
        self.succ = [0] * (2 * size)
        self.slot = [0] * (2 * size)
        for cyc in self.rotation.values():
            for i, h in enumerate(cyc):
                self.succ[h] = cyc[(i + 1) % 4]
                self.slot[h] = i

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return self.size

    def partner(self, h: int) -> int:
        """The other end of the arc containing half-edge ``h``."""
        pos, out = divmod(h, 2)
        if out:
            return half_in((pos + 1) % self.size)
        return half_out((pos - 1) % self.size)

    def straight(self, h: int) -> int:
        """Straight-through continuation of an incoming half-edge."""
        pos, out = divmod(h, 2)
        if out:
            raise ValueError("straight() takes an incoming half-edge")
        return half_out(pos)

    def d_walk(self) -> list[int]:
        """Occurrences visited by following straight-through routing from 0."""
        if not self.size:
            return []
        seen = []
        h = half_in(0)
        for _ in range(self.size):
            out = self.straight(h)
            seen.append(out // 2)
            h = self.partner(out)
        return seen

    def face_permutation(self) -> list[int]:
        """Cross the arc, then step to the rotation successor."""
        return [self.succ[self.partner(h)] for h in range(2 * self.size)]


def build_rotation_system(code: SignedGaussCode) -> RotationSystem:
    return RotationSystem(code)


def faces(rs: RotationSystem) -> list[list[int]]:
    """Orbits of the face permutation, each as a list of half-edges."""
    phi = rs.face_permutation()
    seen = [False] * len(phi)
    orbits = []
    for start in range(len(phi)):
        if seen[start]:
            continue
        orbit = []
        h = start
        while not seen[h]:
            seen[h] = True
            orbit.append(h)
            h = phi[h]
        orbits.append(orbit)
    return orbits


def boundary_components(rs: RotationSystem) -> int:
    """Number of boundary circles of the ribbon surface.

    A crossingless diagram is a simple closed curve whose neighborhood is an
    annulus, so it has two.
    """
    if rs.size == 0:
        return 2
    return len(faces(rs))


@dataclass(frozen=True)
class SurfaceSummary:
    n_crossings: int
    boundary_components: int
    genus: int


def minimal_genus(code: SignedGaussCode) -> SurfaceSummary:
    """Genus of the Carter surface, ``(m + 2 - |boundary|) / 2``."""
    rs = build_rotation_system(code)
    m = rs.n_vertices
    b = boundary_components(rs)
    twice = m + 2 - b
    if twice % 2 or twice < 0:
        raise ArithmeticError(f"parity violation: m={m}, boundary={b}")
    return SurfaceSummary(m, b, twice // 2)


def is_planar(code: SignedGaussCode) -> bool:
    return minimal_genus(code).genus == 0
