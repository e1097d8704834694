"""
Seeded corpora and the invariant / prediction checks run over them.

Every check returns a list of :class:`Violation`; an empty list is a pass.
Reports are ordered by corpus index, so a fixed seed gives byte-identical
output whatever the number of worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import gauss
from .gauss import MoveKind, SignedGaussCode, find_moves, insert_move, random_code, serialize
from .homology import full_loop, pairing_interval, pairing_pushoff, pairing_table, primitive_loops, tilde_table
from .skewmat import all_reduction_outcomes, canonical_key, find_type1, find_type2, matrix_of, reduce
from .surface import build_rotation_system, boundary_components, faces, is_planar, minimal_genus
from .virtualize import check_prediction, corollary_shape_check

__all__ = [
    "CorpusEntry",
    "Violation",
    "Report",
    "make_corpus",
    "format_corpus",
    "read_corpus",
    "inflate",
    "CHECKS",
    "run_checks",
    "kishino_checks",
    "KISHINO_LAMBDA",
    "KISHINO_TILDE",
]

KISHINO_LAMBDA = np.array([
    [0, -1, -2, 0, -1],
    [1, 0, 0, 2, 1],
    [2, 0, 0, 1, 1],
    [0, -2, -1, 0, -1],
])
KISHINO_TILDE = np.array([
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 0, 1, 0],
])

UNIQUENESS_LIMIT = 6


@dataclass(frozen=True)
class CorpusEntry:
    index: int
    kind: str  # base, inflated, virtualized, golden
    code: SignedGaussCode
    trace: tuple[str, ...] = ()


@dataclass(frozen=True)
class Violation:
    check: str
    code: str
    detail: str
    trace: tuple[str, ...] = ()

    def to_structured(self) -> dict:
        return {"check": self.check, "code": self.code, "detail": self.detail, "trace": list(self.trace)}


@dataclass
class Report:
    counts: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "Report") -> None:
        for k, v in other.counts.items():
            self.counts[k] = self.counts.get(k, 0) + v
        self.violations.extend(other.violations)

    def to_structured(self) -> dict:
        failed: dict[str, int] = {}
        for v in self.violations:
            failed[v.check] = failed.get(v.check, 0) + 1
        return {
            "checks": {k: {"run": self.counts[k], "violations": failed.get(k, 0)} for k in sorted(self.counts)},
            "violations": [v.to_structured() for v in self.violations],
            "total_violations": len(self.violations),
        }

    def format_human(self) -> str:
        data = self.to_structured()
        lines = []
        for name, c in data["checks"].items():
            lines.append(f"{name}: {c['run']} checked, {c['violations']} violations")
        for v in self.violations:
            lines.append(f"VIOLATION {v.check}: {v.code}: {v.detail}")
            for step in v.trace:
                lines.append(f"    {step}")
        lines.append(f"{len(self.violations)} violations")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

def _entry_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def random_insertion(code: SignedGaussCode, rng: random.Random) -> tuple[SignedGaussCode, str]:
    size = len(code)
    sign = rng.choice((1, -1))
    if rng.random() < 0.5:
        g = rng.randint(0, size)
        return insert_move(code, MoveKind.MONOGON, g, sign), f"insert monogon gap={g} sign={sign:+d}"
    g1, g2 = sorted((rng.randint(0, size), rng.randint(0, size)))
    parallel = rng.random() < 0.5
    step = f"insert bigon gaps=({g1},{g2}) sign={sign:+d} parallel={parallel}"
    return insert_move(code, MoveKind.BIGON, (g1, g2), sign, parallel), step


def inflate(code: SignedGaussCode, moves: int, rng: random.Random) -> tuple[SignedGaussCode, tuple[str, ...]]:
    trace = []
    for _ in range(moves):
        code, step = random_insertion(code, rng)
        trace.append(step)
    return code, tuple(trace)


def make_corpus(seed: int = 1, count: int = 100, max_crossings: int = 6, moves: int = 5,
                golden: bool = True) -> list[CorpusEntry]:
    """``count`` random codes, each followed by an inflated and a virtualized variant."""
    entries: list[CorpusEntry] = []
    if golden:
        from . import load_kishino

        entries.append(CorpusEntry(0, "golden", load_kishino()))
    for i in range(count):
        rng = _entry_rng(seed, i)
        base = random_code(rng.randint(0, max_crossings), rng)
        entries.append(CorpusEntry(len(entries), "base", base))
        big, trace = inflate(base, moves, rng)
        entries.append(CorpusEntry(len(entries), "inflated", big, trace))
        if base.n:
            a = rng.choice(base.labels())
            entries.append(CorpusEntry(len(entries), "virtualized", gauss.virtualize(base, a),
                                       (f"virtualize {a}",)))
    return entries


def format_corpus(entries: list[CorpusEntry], header: str = "") -> str:
    lines = [f"# {header}"] if header else []
    for e in entries:
        tail = f" ({'; '.join(e.trace)})" if e.trace else ""
        lines.append(f"# {e.index} {e.kind}{tail}")
        lines.append(serialize(e.code))
    return "\n".join(lines) + "\n"


def read_corpus(text: str) -> list[SignedGaussCode]:
    """One code per non-comment line.  ``|`` alone is the empty code."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            out.append(gauss.parse(s))
        except gauss.GaussCodeError as exc:
            raise gauss.GaussCodeError(f"line {lineno}: {exc}") from exc
    return out


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def check_surface(code: SignedGaussCode, rng=None) -> list[Violation]:
    out = []
    rs = build_rotation_system(code)
    if rs.d_walk() != list(range(len(code))):
        out.append(Violation("surface", serialize(code), "D-walk does not follow the word"))
    sides = sorted(h for f in faces(rs) for h in f)
    if sides != list(range(2 * len(code))):
        out.append(Violation("surface", serialize(code), "faces do not partition the half-edges"))
    try:
        s = minimal_genus(code)
    except ArithmeticError as exc:
        return out + [Violation("surface", serialize(code), str(exc))]
    if code.n and s.n_crossings - 2 * s.n_crossings + boundary_components(rs) != 2 - 2 * s.genus:
        out.append(Violation("surface", serialize(code), "Euler count fails"))
    if minimal_genus(gauss.normalize(code)).genus != s.genus:
        out.append(Violation("surface", serialize(code), "genus changes under normalize"))
    return out


def check_identities(code: SignedGaussCode, rng=None) -> list[Violation]:
    """Skew symmetry, complement additivity and the two tilde identities."""
    out = []
    name = serialize(code)
    labels = code.labels()
    t = pairing_table(code)
    P = t.P
    n = len(labels)
    if not np.array_equal(P, -P.T):
        out.append(Violation("identities", name, "table not skew-symmetric"))
    rs = build_rotation_system(code)
    D = full_loop(code)
    T = tilde_table(code)
    loops = {a: primitive_loops(code, a) for a in labels}
    alpha_tilde = [pairing_pushoff(rs, loops[a][1], D) for a in labels]
    for i, a in enumerate(labels):
        left, right = loops[a]
        if pairing_interval(code, a) != P[i, n]:
            out.append(Violation("identities", name, f"interval formula differs from push-off at {a}"))
        cross = pairing_pushoff(rs, left, right)
        if not (P[i, n] == cross == -alpha_tilde[i]):
            out.append(Violation("identities", name, f"<a,D> = <a,a~> = -<a~,D> fails at {a}"))
        for j, x in enumerate(labels):
            xl = loops[x][0]
            if pairing_pushoff(rs, xl, left) + pairing_pushoff(rs, xl, right) != P[j, n]:
                out.append(Violation("identities", name, f"additivity fails for ({x}, {a})"))
            if P[i, j] != T[i, j] + P[i, n] - P[j, n]:
                out.append(Violation("identities", name, f"tilde relation fails at ({a}, {x})"))
    return out


def check_planarity(code: SignedGaussCode, rng=None) -> list[Violation]:
    planar = is_planar(code)
    zero = not pairing_table(code).P.any()
    if planar != zero:
        return [Violation("planarity", serialize(code), f"is_planar={planar} but table zero={zero}")]
    return []


def check_moves(code: SignedGaussCode, rng: random.Random, moves: int = 5) -> list[Violation]:
    """The canonical irreducible form survives random insertions and removals."""
    name = serialize(code)
    key = canonical_key(reduce(matrix_of(code))[0])
    out = []
    trace: list[str] = []
    cur = code
    for _ in range(moves):
        cur, step = random_insertion(cur, rng)
        trace.append(step)
        if canonical_key(reduce(matrix_of(cur))[0]) != key:
            out.append(Violation("moves", name, "form changed after insertion", tuple(trace)))
            return out
    while True:
        sites = find_moves(cur)
        if not sites:
            break
        site = rng.choice(sites)
        nxt = gauss.apply_reduction_move(cur, site)
        trace.append(f"remove {site.kind.value} {','.join(site.labels)} at {site.positions}")
        if nxt.n >= cur.n:
            out.append(Violation("moves", name, "removal did not shrink the code", tuple(trace)))
            return out
        cur = nxt
        if canonical_key(reduce(matrix_of(cur))[0]) != key:
            out.append(Violation("moves", name, "form changed after removal", tuple(trace)))
            return out
    return out


def check_uniqueness(code: SignedGaussCode, rng=None) -> list[Violation]:
    if code.n > UNIQUENESS_LIMIT:
        return []
    M = matrix_of(code)
    R, trace = reduce(M)
    outcomes = all_reduction_outcomes(M)
    if trace.replay(M) != R or find_type1(R) or find_type2(R):
        return [Violation("uniqueness", serialize(code), "greedy trace does not end irreducible",
                          tuple(str(s) for s in trace.steps))]
    if outcomes != {canonical_key(R)}:
        return [Violation("uniqueness", serialize(code), f"{len(outcomes)} distinct irreducible forms")]
    return []


def check_virtualization(code: SignedGaussCode, rng=None) -> list[Violation]:
    out = []
    for a in code.labels():
        chk = check_prediction(code, a)
        if not chk.match:
            out.append(Violation("virtualization", serialize(code),
                                 f"crossing {a}: cells {chk.mismatched_cells()} differ"))
    return out


def check_corollary(code: SignedGaussCode, rng=None) -> list[Violation]:
    if not is_planar(code):
        return []
    rep = corollary_shape_check(code)
    return [Violation("corollary", serialize(code), f"crossing {e.crossing}: {e}")
            for e in rep.entries if not e.ok]


CHECKS = {
    "surface": check_surface,
    "identities": check_identities,
    "planarity": check_planarity,
    "moves": check_moves,
    "uniqueness": check_uniqueness,
    "virtualization": check_virtualization,
    "corollary": check_corollary,
}


def _run_one(args) -> Report:
    index, code, seed, names = args
    rep = Report()
    for name in names:
        rng = random.Random(f"{seed}:{index}:{name}")
        if name == "uniqueness" and code.n > UNIQUENESS_LIMIT:
            continue
        if name == "corollary" and not is_planar(code):
            continue
        rep.counts[name] = rep.counts.get(name, 0) + 1
        rep.violations.extend(CHECKS[name](code, rng))
    return rep


def run_checks(codes: list[SignedGaussCode], seed: int = 1, names=None, jobs: int = 1) -> Report:
    """Run the named checks (default all) over ``codes``, results in corpus order."""
    names = tuple(CHECKS) if names is None else tuple(names)
    work = [(i, c, seed, names) for i, c in enumerate(codes)]
    total = Report()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_run_one, work, chunksize=8))
    else:
        parts = [_run_one(w) for w in work]
    for p in parts:
        total.merge(p)
    return total


def kishino_checks(code: SignedGaussCode | None = None) -> list[tuple[str, bool, str]]:
    """``(name, passed, detail)`` for the bundled golden example."""
    from . import load_kishino
    from .skewmat import Verdict, classify

    code = code or load_kishino()
    labels = ["a1", "a2", "a3", "a4"]
    t = pairing_table(code, labels)
    lam = t.P[:4, :]
    M = matrix_of(code, labels)
    golden = matrix_of_array(KISHINO_LAMBDA)
    summary = minimal_genus(code)
    return [
        ("alpha", list(lam[:, 4]) == [-1, 1, 1, -1], f"{list(map(int, lam[:, 4]))}"),
        ("lambda exact", np.array_equal(lam, KISHINO_LAMBDA), "labels a1..a4"),
        ("lambda up to permutation", canonical_key(M) == canonical_key(golden), ""),
        ("tilde table", np.array_equal(tilde_table(code, labels), KISHINO_TILDE), ""),
        ("classify", classify(code) is Verdict.NON_CLASSICAL_OBSTRUCTION, classify(code).value),
        ("irreducible", not find_type1(M) and not find_type2(M), ""),
        ("genus", summary.genus == 1, f"genus={summary.genus} boundary={summary.boundary_components}"),
    ]


def matrix_of_array(full: np.ndarray):
    from .skewmat import AugSkewMatrix

    full = np.asarray(full)
    return AugSkewMatrix(full[:, :-1], full[:, -1])
