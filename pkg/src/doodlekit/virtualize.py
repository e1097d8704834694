"""
Predicted effect of virtualizing one crossing on ``(beta | alpha)``.

Index the crossings so the virtualized one, ``a_n``, comes last.  Every other
crossing ``a_i`` gets a profile recording which occurrences of ``a_n`` its
left-turn loop ``D_a_i`` passes through:

* ``none``: neither;
* ``both``: both occurrences;
* ``single``: exactly one, with ``epsilon`` the occurrence sign there.

Writing ``e_i`` for that epsilon (0 unless single), the new matrix is

* ``A'[i] = A[i] - 2 e_i`` and ``A'[n] = -A[n]``;
* ``B'[i, j] = B[i, j] + delta(i, j)`` off the last row and column, with
  ``delta = 0`` if either profile is ``none`` or both profiles agree,
  ``+2 e_j`` for ``(both, single)``, ``-2 e_i`` for ``(single, both)`` and
  ``(single e, single -e)``;
* ``B'[i, n] = A[i] - B[i, n] - e_i``.

The last rule is the pairing of ``D_a_i`` with the complementary loop of
``a_n``, which becomes the new left-turn loop at ``a_n``.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .gauss import SignedGaussCode, virtualize as flip_sign
from .homology import interval
from .skewmat import AugSkewMatrix, canonical_key, matrix_of, reduce, s_equivalent
from .surface import is_planar

__all__ = [
    "ProfileKind",
    "CrossingProfile",
    "ProfileSet",
    "profile",
    "predict_alpha",
    "predict_beta",
    "predict",
    "PredictionCheck",
    "check_prediction",
    "corollary_template",
    "CorollaryEntry",
    "CorollaryReport",
    "corollary_shape_check",
]


class ProfileKind(enum.Enum):
    NONE = "none"
    BOTH = "both"
    SINGLE = "single"


@dataclass(frozen=True)
class CrossingProfile:
    kind: ProfileKind
    epsilon: int = 0

    def __post_init__(self):
        if self.kind is ProfileKind.SINGLE:
            if self.epsilon not in (1, -1):
                raise ValueError("a single passage needs epsilon = +1 or -1")
        elif self.epsilon != 0:
            raise ValueError(f"{self.kind.value} profile carries no epsilon")

    @property
    def e(self) -> int:
        return self.epsilon

    def flipped(self) -> "CrossingProfile":
        return CrossingProfile(self.kind, -self.epsilon)

    def __str__(self) -> str:
        if self.kind is ProfileKind.SINGLE:
            return "+1" if self.epsilon > 0 else "-1"
        return "{}" if self.kind is ProfileKind.NONE else "both"


class ProfileSet(Mapping):
    """Profiles of every crossing except ``crossing``, in matrix order.

    ``labels`` is the index order of the matching matrix, with ``crossing``
    last.
    """

    def __init__(self, crossing: str, labels: Sequence[str], profiles: Sequence[CrossingProfile]):
        labels = tuple(labels)
        if not labels or labels[-1] != crossing:
            raise ValueError("the virtualized crossing must be the last index")
        if len(profiles) != len(labels) - 1:
            raise ValueError("inconsistent profile set: one profile per other crossing")
        self.crossing = crossing
        self.labels = labels
        self.profiles = tuple(profiles)

    def __getitem__(self, label: str) -> CrossingProfile:
        if label == self.crossing or label not in self.labels:
            raise KeyError(label)
        return self.profiles[self.labels.index(label)]

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels[:-1])

    def __len__(self) -> int:
        return len(self.profiles)

    def flipped(self) -> "ProfileSet":
        """Profiles of the virtualized code."""
        return ProfileSet(self.crossing, self.labels, [p.flipped() for p in self.profiles])

    def counts(self) -> tuple[int, int]:
        """``(k, m)``: single passages with epsilon +1 and -1."""
        k = sum(p.kind is ProfileKind.SINGLE and p.e > 0 for p in self.profiles)
        m = sum(p.kind is ProfileKind.SINGLE and p.e < 0 for p in self.profiles)
        return k, m


def _profile_of(code: SignedGaussCode, a_i: str, a_n: str) -> CrossingProfile:
    arcs = interval(code, a_i)
    inside = {(x + 1) % len(code) for x in arcs[:-1]}
    hits = [pos for pos in code.occurrences(a_n) if pos in inside]
    if not hits:
        return CrossingProfile(ProfileKind.NONE)
    if len(hits) == 2:
        return CrossingProfile(ProfileKind.BOTH)
    return CrossingProfile(ProfileKind.SINGLE, code.occurrence_sign(hits[0]))


def profile(code: SignedGaussCode, a_n: str, labels: Sequence[str] | None = None) -> ProfileSet:
    code.sign(a_n)  # unknown label raises
    if labels is None:
        labels = [x for x in code.labels() if x != a_n] + [a_n]
    labels = list(labels)
    if sorted(labels) != sorted(code.labels()) or labels[-1] != a_n:
        raise ValueError("labels must list every crossing once, ending with the virtualized one")
    return ProfileSet(a_n, labels, [_profile_of(code, x, a_n) for x in labels[:-1]])


def _check(M: AugSkewMatrix, profiles: ProfileSet) -> None:
    if M.n != len(profiles) + 1:
        raise ValueError(f"inconsistent profile set: {len(profiles)} profiles for order {M.n}")


def predict_alpha(M: AugSkewMatrix, profiles: ProfileSet) -> np.ndarray:
    _check(M, profiles)
    n = M.n
    A = M.A.copy()
    for i, p in enumerate(profiles.profiles):
        A[i] -= 2 * p.e
    A[n - 1] = -M.A[n - 1]
    return A


def _delta(pi: CrossingProfile, pj: CrossingProfile) -> int:
    ki, kj = pi.kind, pj.kind
    if ki is ProfileKind.NONE or kj is ProfileKind.NONE:
        return 0
    if ki is ProfileKind.BOTH and kj is ProfileKind.BOTH:
        return 0
    if ki is ProfileKind.BOTH:
        return 2 * pj.e
    if kj is ProfileKind.BOTH:
        return -2 * pi.e
    if pi.e == pj.e:
        return 0
    return -2 * pi.e


def predict_beta(M: AugSkewMatrix, profiles: ProfileSet) -> np.ndarray:
    _check(M, profiles)
    n = M.n
    P = profiles.profiles
    B = M.B.copy()
    for i in range(n - 1):
        for j in range(n - 1):
            if i != j:
                B[i, j] += _delta(P[i], P[j])
        B[i, n - 1] = M.A[i] - M.B[i, n - 1] - P[i].e
        B[n - 1, i] = -B[i, n - 1]
    if not np.array_equal(B, -B.T):
        raise ArithmeticError("predicted beta is not skew-symmetric")
    return B


def predict(M: AugSkewMatrix, profiles: ProfileSet) -> AugSkewMatrix:
    return AugSkewMatrix(predict_beta(M, profiles), predict_alpha(M, profiles))


@dataclass(frozen=True)
class PredictionCheck:
    crossing: str
    labels: tuple[str, ...]
    virtualized: SignedGaussCode
    original: AugSkewMatrix
    predicted: AugSkewMatrix
    recomputed: AugSkewMatrix

    @property
    def match(self) -> bool:
        return self.predicted == self.recomputed

    def mismatched_cells(self) -> list[tuple[int, int]]:
        """``(i, j)`` of disagreeing cells; column ``n`` is ``alpha``."""
        diff = self.predicted.full() != self.recomputed.full()
        return [tuple(map(int, ij)) for ij in np.argwhere(diff)]


def check_prediction(code: SignedGaussCode, a_n: str) -> PredictionCheck:
    """Predicted and recomputed matrix of ``code`` virtualized at ``a_n``."""
    profs = profile(code, a_n)
    M = matrix_of(code, profs.labels)
    V = flip_sign(code, a_n)
    return PredictionCheck(a_n, profs.labels, V, M, predict(M, profs), matrix_of(V, profs.labels))


# ---------------------------------------------------------------------------
# almost-classical diagrams
# ---------------------------------------------------------------------------

def corollary_template(k: int, m: int) -> AugSkewMatrix:
    """``k`` rows with ``A = -2``, ``m`` rows with ``A = 2``, then the virtualized crossing.

    The two groups pair to ``-2`` (first against second), the first group
    pairs to ``-1`` with the last index and the second to ``+1``.
    """
    N = k + m + 1
    B = np.zeros((N, N), np.int64)
    A = np.zeros(N, np.int64)
    A[:k] = -2
    A[k:k + m] = 2
    B[:k, k:k + m] = -2
    B[:k, N - 1] = -1
    B[k:k + m, N - 1] = 1
    B = B - B.T
    return AugSkewMatrix(B, A)


@dataclass(frozen=True)
class CorollaryEntry:
    crossing: str
    k: int
    m: int
    template_match: bool
    avoiding_rows_zero: bool
    s_equivalent_to_template: bool
    trivial: bool

    @property
    def ok(self) -> bool:
        good = self.template_match and self.avoiding_rows_zero and self.s_equivalent_to_template
        if self.k == self.m:
            good = good and self.trivial
        return good


@dataclass(frozen=True)
class CorollaryReport:
    code: SignedGaussCode
    entries: tuple[CorollaryEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)


def corollary_shape_check(code: SignedGaussCode) -> CorollaryReport:
    """Compare every virtualization of a planar code with the block template.

    The rows of single-passage crossings together with the virtualized one
    must be a permutation of ``corollary_template(k, m)``.  Rows of crossings
    whose loop avoids ``a_n`` must vanish, and the whole matrix must reduce
    to the same irreducible form as the template (trivial when ``k == m``).
    """
    if not is_planar(code):
        raise ValueError("code is not planar")
    entries = []
    for a in code.labels():
        chk = check_prediction(code, a)
        profs = profile(code, a)
        k, m = profs.counts()
        V = chk.recomputed
        n = V.n
        keep = [i for i, p in enumerate(profs.profiles) if p.kind is ProfileKind.SINGLE] + [n - 1]
        T = corollary_template(k, m)
        avoid = [i for i, p in enumerate(profs.profiles) if p.kind is ProfileKind.NONE]
        entries.append(CorollaryEntry(
            crossing=a,
            k=k,
            m=m,
            template_match=canonical_key(V.submatrix(keep)) == canonical_key(T),
            avoiding_rows_zero=all(not V.B[i].any() and V.A[i] == 0 for i in avoid),
            s_equivalent_to_template=s_equivalent(V, T),
            trivial=reduce(V)[0].n == 0,
        ))
    return CorollaryReport(code, tuple(entries))
