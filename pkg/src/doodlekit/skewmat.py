"""
Skew-symmetric augmented matrices ``(B | A)`` and their reductions.

``B`` is an ``n x n`` skew-symmetric integer matrix and ``A`` an integer
``n``-vector; ``n = 0`` is the empty matrix ``( | )``.  Two elementary
reductions shrink a matrix:

* type 1 at ``j``: ``A[j] == 0`` and column ``j`` of ``B`` is zero or equals
  ``A``; delete row and column ``j``;
* type 2 at ``(r, t)``: ``A[r] == -A[t]`` and ``B[:, r] + B[:, t] == A``;
  delete rows and columns ``r`` and ``t``.

Matrices are compared up to simultaneous permutation through
:func:`canonical_form`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AugSkewMatrix",
    "Step",
    "ReductionTrace",
    "Verdict",
    "from_pairing_table",
    "permute",
    "canonical_form",
    "canonical_key",
    "find_type1",
    "find_type2",
    "apply_type1",
    "apply_type2",
    "reduce",
    "all_reduction_outcomes",
    "s_equivalent",
    "extend_type1",
    "extend_type2",
    "matrix_of",
    "classify",
    "parse_matrix",
    "format_matrix",
]


class AugSkewMatrix:
    """Immutable ``(B | A)``."""

    __slots__ = ("B", "A")

    def __init__(self, B, A):
        B = np.array(B, dtype=np.int64).reshape(-1, len(A)) if len(A) else np.zeros((0, 0), np.int64)
        A = np.array(A, dtype=np.int64).reshape(-1)
        if B.shape != (len(A), len(A)):
            raise ValueError(f"B has shape {B.shape}, expected {(len(A), len(A))}")
        if not np.array_equal(B, -B.T):
            raise ValueError("B is not skew-symmetric")
        B.setflags(write=False)
        A.setflags(write=False)
        self.B = B
        self.A = A

    @classmethod
    def empty(cls) -> "AugSkewMatrix":
        return cls(np.zeros((0, 0), np.int64), [])

    @classmethod
    def zeros(cls, n: int) -> "AugSkewMatrix":
        return cls(np.zeros((n, n), np.int64), [0] * n)

    @property
    def n(self) -> int:
        return len(self.A)

    def is_null(self) -> bool:
        return not self.B.any() and not self.A.any()

    def full(self) -> np.ndarray:
        """The ``n x (n + 1)`` array ``[B | A]``."""
        return np.hstack([self.B, self.A.reshape(-1, 1)])

    def submatrix(self, keep: Sequence[int]) -> "AugSkewMatrix":
        keep = list(keep)
        return AugSkewMatrix(self.B[np.ix_(keep, keep)], self.A[keep])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AugSkewMatrix):
            return NotImplemented
        return np.array_equal(self.B, other.B) and np.array_equal(self.A, other.A)

    def __hash__(self) -> int:
        return hash((self.B.tobytes(), self.A.tobytes(), self.n))

    def __repr__(self) -> str:
        if self.n == 0:
            return "AugSkewMatrix( | )"
        rows = "; ".join(" ".join(map(str, r[:-1])) + " | " + str(r[-1]) for r in self.full())
        return f"AugSkewMatrix({rows})"


def from_pairing_table(table) -> AugSkewMatrix:
    """``B[i, j] = <phi_i, phi_j>`` and ``A[i] = <phi_i, phi_D>``."""
    P = np.asarray(table.P)
    if not np.array_equal(P, -P.T):
        raise ValueError("pairing table is not skew-symmetric")
    n = P.shape[0] - 1
    return AugSkewMatrix(P[:n, :n], P[:n, n])


def permute(M: AugSkewMatrix, sigma: Sequence[int]) -> AugSkewMatrix:
    """``(P B P^T | P A)`` where ``sigma[i]`` is the new index of old index ``i``."""
    sigma = list(sigma)
    if sorted(sigma) != list(range(M.n)):
        raise ValueError(f"{sigma} is not a permutation of {M.n} indices")
    inv = [0] * M.n
    for old, new in enumerate(sigma):
        inv[new] = old
    return M.submatrix(inv)


# ---------------------------------------------------------------------------
# canonical form under simultaneous permutation
# ---------------------------------------------------------------------------

def _block(M: AugSkewMatrix, order: Sequence[int], v: int) -> tuple[int, ...]:
    return (int(M.A[v]),) + tuple(int(M.B[v, u]) for u in order)


def _key_of_order(M: AugSkewMatrix, order: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for k, v in enumerate(order):
        out.extend(_block(M, order[:k], v))
    return tuple(out)


def _twin_classes(M: AugSkewMatrix) -> list[int]:
    """Representative index of each vertex's twin class.

    ``u`` and ``w`` are twins when swapping them fixes ``M``: equal ``A``
    entries, ``B[u, w] == 0`` and equal rows elsewhere.
    """
    n = M.n
    rep = list(range(n))
    for u in range(n):
        if rep[u] != u:
            continue
        for w in range(u + 1, n):
            if rep[w] != w or M.A[u] != M.A[w] or M.B[u, w] != 0:
                continue
            others = [x for x in range(n) if x not in (u, w)]
            if np.array_equal(M.B[u, others], M.B[w, others]):
                rep[w] = u
    return rep


def _canonical_order_brute(M: AugSkewMatrix) -> tuple[int, ...]:
    return min(itertools.permutations(range(M.n)), key=lambda o: _key_of_order(M, o))


def _canonical_order_search(M: AugSkewMatrix) -> tuple[int, ...]:
    """Level-by-level lexicographic search, one branch per twin class."""
    rep = _twin_classes(M)
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(M.n):
        best = None
        nxt: list[tuple[int, ...]] = []
        for order in frontier:
            used = set(order)
            tried = set()
            for v in range(M.n):
                if v in used or rep[v] in tried:
                    continue
                tried.add(rep[v])
                blk = _block(M, order, v)
                if best is None or blk < best:
                    best, nxt = blk, [order + (v,)]
                elif blk == best:
                    nxt.append(order + (v,))
        frontier = nxt
    return frontier[0]


BRUTE_FORCE_LIMIT = 8


def canonical_form(M: AugSkewMatrix, method: str = "auto") -> tuple[AugSkewMatrix, list[int]]:
    """Least permutation of ``M`` and the witness ``sigma`` with ``permute(M, sigma)``.

    Order of comparison: vertex by vertex, the ``A`` entry followed by the
    entries of ``B`` against the vertices already placed.  ``method`` is
    ``"brute"``, ``"search"`` or ``"auto"`` (brute force up to
    ``BRUTE_FORCE_LIMIT`` indices).
    """
    if method == "auto":
        method = "brute" if M.n <= BRUTE_FORCE_LIMIT else "search"
    if method == "brute":
        order = _canonical_order_brute(M)
    elif method == "search":
        order = _canonical_order_search(M)
    else:
        raise ValueError(f"unknown method {method!r}")
    sigma = [0] * M.n
    for new, old in enumerate(order):
        sigma[old] = new
    return M.submatrix(order), sigma


def canonical_key(M: AugSkewMatrix, method: str = "auto") -> tuple:
    C, _ = canonical_form(M, method)
    return (C.n,) + tuple(C.B.ravel().tolist()) + tuple(C.A.tolist())


# ---------------------------------------------------------------------------
# reductions
# ---------------------------------------------------------------------------

def find_type1(M: AugSkewMatrix) -> list[int]:
    out = []
    for j in range(M.n):
        if M.A[j] != 0:
            continue
        col = M.B[:, j]
        if not col.any() or np.array_equal(col, M.A):
            out.append(j)
    return out


def find_type2(M: AugSkewMatrix) -> list[tuple[int, int]]:
    out = []
    for r in range(M.n):
        for t in range(r + 1, M.n):
            if M.A[r] == -M.A[t] and np.array_equal(M.B[:, r] + M.B[:, t], M.A):
                out.append((r, t))
    return out


def _drop(M: AugSkewMatrix, idx: Iterable[int]) -> AugSkewMatrix:
    idx = set(idx)
    return M.submatrix([i for i in range(M.n) if i not in idx])


def apply_type1(M: AugSkewMatrix, j: int) -> AugSkewMatrix:
    if j not in find_type1(M):
        raise ValueError(f"no reduction of type 1 at {j}")
    return _drop(M, [j])


def apply_type2(M: AugSkewMatrix, r: int, t: int) -> AugSkewMatrix:
    r, t = sorted((r, t))
    if (r, t) not in find_type2(M):
        raise ValueError(f"no reduction of type 2 at {(r, t)}")
    return _drop(M, [r, t])


@dataclass(frozen=True)
class Step:
    """One step of a trace: ``kind`` is ``"perm"``, ``"type1"`` or ``"type2"``."""

    kind: str
    args: tuple[int, ...]

    def apply(self, M: AugSkewMatrix) -> AugSkewMatrix:
        if self.kind == "perm":
            return permute(M, self.args)
        if self.kind == "type1":
            return apply_type1(M, *self.args)
        if self.kind == "type2":
            return apply_type2(M, *self.args)
        raise ValueError(f"unknown step kind {self.kind!r}")

    def to_structured(self) -> dict:
        return {"kind": self.kind, "args": list(self.args)}


@dataclass
class ReductionTrace:
    steps: list[Step] = field(default_factory=list)

    def replay(self, M: AugSkewMatrix) -> AugSkewMatrix:
        for step in self.steps:
            M = step.apply(M)
        return M

    def to_structured(self) -> list[dict]:
        return [s.to_structured() for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


def reduce(M: AugSkewMatrix) -> tuple[AugSkewMatrix, ReductionTrace]:
    """Reduce greedily until irreducible: type 1 before type 2, lowest index first."""
    trace = ReductionTrace()
    while True:
        t1 = find_type1(M)
        if t1:
            step = Step("type1", (t1[0],))
        else:
            t2 = find_type2(M)
            if not t2:
                return M, trace
            step = Step("type2", t2[0])
        M = step.apply(M)
        trace.steps.append(step)


def all_reduction_outcomes(M: AugSkewMatrix) -> set[tuple]:
    """Canonical keys of the end points of every maximal reduction sequence."""
    memo: dict[tuple, frozenset] = {}

    def explore(X: AugSkewMatrix) -> frozenset:
        key = canonical_key(X)
        if key in memo:
            return memo[key]
        children = [_drop(X, [j]) for j in find_type1(X)]
        children += [_drop(X, rt) for rt in find_type2(X)]
        if not children:
            result = frozenset([key])
        else:
            result = frozenset().union(*(explore(c) for c in children))
        memo[key] = result
        return result

    return set(explore(M))


def s_equivalent(M1: AugSkewMatrix, M2: AugSkewMatrix) -> bool:
    return canonical_key(reduce(M1)[0]) == canonical_key(reduce(M2)[0])


def extend_type1(M: AugSkewMatrix, copy_augmentation: bool = False) -> AugSkewMatrix:
    """Append an index whose type-1 reduction gives back ``M``.

    The new column of ``B`` is zero, or equal to the new ``A`` when
    ``copy_augmentation`` is set.
    """
    n = M.n
    B = np.zeros((n + 1, n + 1), np.int64)
    B[:n, :n] = M.B
    if copy_augmentation:
        B[:n, n] = M.A
        B[n, :n] = -M.A
    return AugSkewMatrix(B, list(M.A) + [0])


def extend_type2(M: AugSkewMatrix, x: int, column: Sequence[int]) -> AugSkewMatrix:
    """Append indices ``r = n, t = n + 1`` whose type-2 reduction gives ``M``.

    ``A[r] = x``, ``A[t] = -x``; ``column`` is the old part of ``B[:, r]``
    and ``B[:, t]`` is completed so the two columns sum to ``A``.
    """
    n = M.n
    col = np.asarray(column, dtype=np.int64)
    B = np.zeros((n + 2, n + 2), np.int64)
    B[:n, :n] = M.B
    B[:n, n], B[n, :n] = col, -col
    B[:n, n + 1], B[n + 1, :n] = M.A - col, col - M.A
    B[n, n + 1], B[n + 1, n] = x, -x
    return AugSkewMatrix(B, list(M.A) + [x, -x])


# ---------------------------------------------------------------------------
# codes to matrices
# ---------------------------------------------------------------------------

class Verdict(enum.Enum):
    TRIVIAL_CLASS = "trivial"
    NON_CLASSICAL_OBSTRUCTION = "non-classical"


def matrix_of(code, labels: Sequence[str] | None = None) -> AugSkewMatrix:
    """``(beta(D) | alpha(D))`` of a code."""
    from .homology import pairing_table

    return from_pairing_table(pairing_table(code, labels))


def classify(code) -> Verdict:
    """``NON_CLASSICAL_OBSTRUCTION`` certifies the doodle is not classical.

    ``TRIVIAL_CLASS`` only says the invariant vanishes; it does not prove
    the doodle classical.
    """
    R, _ = reduce(matrix_of(code))
    return Verdict.TRIVIAL_CLASS if R.n == 0 else Verdict.NON_CLASSICAL_OBSTRUCTION


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def format_matrix(M: AugSkewMatrix) -> str:
    """``n``, then the ``n`` rows of ``B``, then the row ``A``."""
    lines = [str(M.n)]
    lines += [" ".join(str(int(x)) for x in row) for row in M.B]
    lines.append(" ".join(str(int(x)) for x in M.A))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> AugSkewMatrix:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix document")
    n = int(lines[0])
    rows = lines[1:]
    if n == 0:
        if rows:
            raise ValueError("order-zero matrix takes no rows")
        return AugSkewMatrix.empty()
    if len(rows) != n + 1:
        raise ValueError(f"expected {n + 1} rows after the order, got {len(rows)}")
    nums = [[int(x) for x in r.split()] for r in rows]
    if any(len(r) != n for r in nums):
        raise ValueError(f"every row must have {n} entries")
    return AugSkewMatrix(nums[:n], nums[n])
