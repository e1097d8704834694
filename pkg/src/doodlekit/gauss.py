"""
Signed Gauss codes of one-component doodle diagrams.

A code is a cyclic word in which every crossing label occurs exactly twice,
together with one sign per crossing.  Reading the word from its first letter,
``sign(a) = +1`` when, at crossing ``a``, the strand of the second visit
crosses the strand of the first visit from left to right.

That sign depends on where the word is cut.  The basepoint-free form of the
same data is the *occurrence sign*: at occurrence ``p`` of ``a``,
``occurrence_sign(p) = +1`` when the other strand through ``a`` crosses the
strand being travelled from left to right.  The first occurrence of ``a``
carries ``sign(a)``, the second carries ``-sign(a)``.  All geometric rules in
this package (rotation, moves, loops) are phrased in occurrence signs.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
import string
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "GaussCodeError",
    "SignedGaussCode",
    "MoveKind",
    "MoveSite",
    "parse",
    "serialize",
    "to_structured",
    "from_structured",
    "dumps_structured",
    "loads_structured",
    "from_occurrences",
    "rotate",
    "relabel",
    "normalize",
    "find_moves",
    "apply_reduction_move",
    "insert_move",
    "virtualize",
    "random_code",
    "fresh_labels",
]


class GaussCodeError(ValueError):
    """Invalid code text or invalid code data.

    ``token`` is the 1-based index of the offending token in the document
    (word tokens first, then sign tokens), or ``None`` when the problem is
    not tied to a single token.
    """

    def __init__(self, message: str, token: int | None = None):
        self.token = token
        if token is not None:
            message = f"token {token}: {message}"
        super().__init__(message)


_MINUS = "−"


def _check_label(label: str) -> None:
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise GaussCodeError(f"invalid crossing label {label!r}")
    if any(c in "|=,#" for c in label):
        raise GaussCodeError(f"crossing label {label!r} contains a reserved character")


class SignedGaussCode:
    """Immutable signed Gauss code.

    ``word`` is the linear reading of the cyclic word from the basepoint and
    ``signs`` maps every label to ``+1`` or ``-1``.  Equality is literal
    (same reading, same signs); use :func:`normalize` to compare up to
    rotation and relabeling.
    """

    __slots__ = ("_word", "_signs", "_occ")

    def __init__(self, word: Iterable[str], signs: Mapping[str, int]):
        word = tuple(word)
        signs = dict(signs)
        occ: dict[str, list[int]] = {}
        for pos, label in enumerate(word):
            _check_label(label)
            occ.setdefault(label, []).append(pos)
        for label, positions in occ.items():
            if len(positions) != 2:
                raise GaussCodeError(
                    f"label {label!r} appears {len(positions)} time(s), expected 2")
        if set(signs) != set(occ):
            missing = sorted(set(occ) - set(signs))
            extra = sorted(set(signs) - set(occ))
            raise GaussCodeError(f"sign map mismatch (missing {missing}, extra {extra})")
        for label, s in signs.items():
            if s not in (1, -1):
                raise GaussCodeError(f"sign of {label!r} must be +1 or -1, got {s!r}")
        self._word = word
        self._signs = {label: int(signs[label]) for label in occ}
        self._occ = {label: (p[0], p[1]) for label, p in occ.items()}

    @property
    def word(self) -> tuple[str, ...]:
        return self._word

    @property
    def signs(self) -> dict[str, int]:
        return dict(self._signs)

    @property
    def n(self) -> int:
        """Number of crossings."""
        return len(self._occ)

    def __len__(self) -> int:
        return len(self._word)

    def labels(self) -> list[str]:
        """Labels in order of first appearance."""
        return list(self._occ)

    def sign(self, label: str) -> int:
        try:
            return self._signs[label]
        except KeyError:
            raise KeyError(f"unknown crossing label {label!r}") from None

    def occurrences(self, label: str) -> tuple[int, int]:
        """Positions ``(first, second)`` of ``label`` in the word."""
        try:
            return self._occ[label]
        except KeyError:
            raise KeyError(f"unknown crossing label {label!r}") from None

    def partner(self, pos: int) -> int:
        """Position of the other occurrence of the label at ``pos``."""
        p, q = self._occ[self._word[pos]]
        return q if pos == p else p

    def is_first(self, pos: int) -> bool:
        return self._occ[self._word[pos]][0] == pos

    def occurrence_sign(self, pos: int) -> int:
        s = self._signs[self._word[pos]]
        return s if self.is_first(pos) else -s

    def occurrence_signs(self) -> list[int]:
        return [self.occurrence_sign(p) for p in range(len(self._word))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGaussCode):
            return NotImplemented
        return self._word == other._word and self._signs == other._signs

    def __hash__(self) -> int:
        return hash((self._word, tuple(sorted(self._signs.items()))))

    def __repr__(self) -> str:
        return f"SignedGaussCode({serialize(self)!r})"

    def __str__(self) -> str:
        return serialize(self)


def from_occurrences(items: Sequence[tuple[str, int]]) -> SignedGaussCode:
    """Build a code from ``(label, occurrence_sign)`` pairs in word order."""
    word = [label for label, _ in items]
    signs: dict[str, int] = {}
    seen: dict[str, int] = {}
    for label, s in items:
        if label in seen:
            if s != -seen[label]:
                raise GaussCodeError(
                    f"occurrence signs of {label!r} must be opposite")
        else:
            seen[label] = s
            signs[label] = s
    return SignedGaussCode(word, signs)


def _occurrence_items(code: SignedGaussCode) -> list[tuple[str, int]]:
    return list(zip(code.word, code.occurrence_signs()))


# ---------------------------------------------------------------------------
# text and structured formats
# ---------------------------------------------------------------------------

def _parse_sign(tok: str, index: int) -> int:
    t = tok.replace(_MINUS, "-")
    if t in ("+1", "1", "+"):
        return 1
    if t in ("-1", "-"):
        return -1
    raise GaussCodeError(f"invalid sign {tok!r}", index)


def parse(text: str) -> SignedGaussCode:
    """Parse one diagram in the text format ``<word> | <label>=<sign> ...``.

    Sign entries are separated by whitespace or commas.  Bare signs without
    ``label=`` are assigned to the labels in order of first appearance.
    Lines starting with ``#`` are comments; an empty document is the trivial
    doodle.
    """
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    body = " ".join(lines).strip()
    if not body:
        return SignedGaussCode((), {})
    if body.count("|") > 1:
        raise GaussCodeError("more than one '|' separator")
    word_part, _, sign_part = body.partition("|")
    if "|" not in body and body:
        raise GaussCodeError("missing '|' separator before the signs")
    word = word_part.split()
    index = 0
    positions: dict[str, list[int]] = {}
    for tok in word:
        index += 1
        _check_token_label(tok, index)
        positions.setdefault(tok, []).append(index)
        if len(positions[tok]) > 2:
            raise GaussCodeError(f"label {tok!r} appears more than twice", index)
    for label, where in positions.items():
        if len(where) == 1:
            # detected when the word ends
            raise GaussCodeError(f"label {label!r} appears once (at token {where[0]})", len(word))

    order = list(positions)
    signs: dict[str, int] = {}
    bare: list[int] = []
    raw = sign_part.replace(",", " ").split()
    for tok in raw:
        index += 1
        if "=" in tok:
            label, _, value = tok.partition("=")
            if not label:
                raise GaussCodeError(f"empty label in {tok!r}", index)
            if label not in positions:
                raise GaussCodeError(f"sign given for unknown label {label!r}", index)
            if label in signs:
                raise GaussCodeError(f"duplicate sign for {label!r}", index)
            if not value:
                raise GaussCodeError(f"empty sign for {label!r}", index)
            signs[label] = _parse_sign(value, index)
        else:
            bare.append(_parse_sign(tok, index))
    if bare:
        if signs:
            raise GaussCodeError("cannot mix bare signs with label=sign entries")
        if len(bare) != len(order):
            raise GaussCodeError(
                f"{len(bare)} bare sign(s) for {len(order)} crossing(s)")
        signs = dict(zip(order, bare))
    missing = [label for label in order if label not in signs]
    if missing:
        raise GaussCodeError(f"missing sign for {', '.join(missing)}")
    return SignedGaussCode(word, signs)


def _check_token_label(tok: str, index: int) -> None:
    if any(c in "=,#" for c in tok):
        raise GaussCodeError(f"invalid label token {tok!r}", index)


def _fmt_sign(s: int) -> str:
    return "+1" if s > 0 else "-1"


def serialize(code: SignedGaussCode) -> str:
    """Text form; signs listed in first-appearance order."""
    if code.n == 0:
        return "|"
    signs = " ".join(f"{a}={_fmt_sign(code.sign(a))}" for a in code.labels())
    return f"{' '.join(code.word)} | {signs}"


def to_structured(code: SignedGaussCode) -> dict:
    return {"word": list(code.word),
            "signs": {a: code.sign(a) for a in code.labels()}}


def from_structured(data: Mapping) -> SignedGaussCode:
    try:
        word = data["word"]
        signs = data["signs"]
    except (KeyError, TypeError):
        raise GaussCodeError("structured code needs 'word' and 'signs'") from None
    if not isinstance(word, list) or not isinstance(signs, Mapping):
        raise GaussCodeError("'word' must be a list and 'signs' a mapping")
    return SignedGaussCode(word, {str(k): v for k, v in signs.items()})


def dumps_structured(code: SignedGaussCode) -> str:
    return json.dumps(to_structured(code), sort_keys=False)


def loads_structured(text: str) -> SignedGaussCode:
    return from_structured(json.loads(text))


# ---------------------------------------------------------------------------
# rotation, relabeling, normal form
# ---------------------------------------------------------------------------

def rotate(code: SignedGaussCode, k: int) -> SignedGaussCode:
    """Move the basepoint ``k`` letters forward.

    The occurrence signs travel with their letters, so the per-label sign of
    every crossing whose first occurrence wraps around is negated.
    """
    items = _occurrence_items(code)
    if not items:
        return code
    k %= len(items)
    return from_occurrences(items[k:] + items[:k])


def fresh_labels() -> Iterator[str]:
    """``a, b, ..., z, aa, ab, ...``"""
    for size in itertools.count(1):
        for letters in itertools.product(string.ascii_lowercase, repeat=size):
            yield "".join(letters)


def relabel(code: SignedGaussCode, mapping: Mapping[str, str] | None = None) -> SignedGaussCode:
    """Rename labels; by default to ``a, b, c, ...`` in first-appearance order."""
    if mapping is None:
        mapping = dict(zip(code.labels(), fresh_labels()))
    if len(set(mapping.values())) != len(mapping):
        raise GaussCodeError("relabeling is not injective")
    return SignedGaussCode((mapping[a] for a in code.word),
                           {mapping[a]: s for a, s in code.signs.items()})


def _rotation_key(items: Sequence[tuple[str, int]]) -> tuple:
    index: dict[str, int] = {}
    word = []
    signs = []
    for label, s in items:
        if label not in index:
            index[label] = len(index)
            signs.append(0 if s > 0 else 1)
        word.append(index[label])
    return tuple(word), tuple(signs)


def normalize(code: SignedGaussCode) -> SignedGaussCode:
    """Canonical representative over cyclic rotations and relabelings.

    Among all basepoints, pick the one whose first-appearance relabeling is
    lexicographically least (word first, then signs with ``+1`` before
    ``-1``), and name the labels ``a, b, c, ...``.
    """
    items = _occurrence_items(code)
    if not items:
        return code
    best = min(range(len(items)), key=lambda k: _rotation_key(items[k:] + items[:k]))
    return relabel(from_occurrences(items[best:] + items[:best]))


# ---------------------------------------------------------------------------
# monogon / bigon moves
# ---------------------------------------------------------------------------

class MoveKind(enum.Enum):
    MONOGON = "monogon"
    BIGON = "bigon"


@dataclass(frozen=True)
class MoveSite:
    """A removable monogon or bigon.

    ``positions`` holds the occurrence indices: ``(p, p+1)`` for a monogon,
    and two cyclically adjacent pairs ``((i, i+1), (j, j+1))`` flattened to
    four indices for a bigon.
    """

    kind: MoveKind
    labels: tuple[str, ...]
    positions: tuple[int, ...]


def _adjacent(i: int, j: int, size: int) -> bool:
    return (i - j) % size in (1, size - 1)


def find_moves(code: SignedGaussCode) -> list[MoveSite]:
    """All monogon and bigon sites of ``code``.

    A monogon is a label whose two occurrences are cyclically adjacent.  A
    bigon is a pair of labels ``x, y`` whose four occurrences form two
    cyclically adjacent pairs, each holding one ``x`` and one ``y`` (in
    either relative order), such that on one of the pairs the occurrence
    signs of ``x`` and ``y`` are opposite.  The sign rule is the
    basepoint-free form of ``sign(x) = -sign(y)``; it coincides with it when
    the chosen pair holds the first visits of both labels.
    """
    size = len(code)
    w = code.word
    sites: list[MoveSite] = []
    seen: set = set()
    if size == 0:
        return sites
    for a in code.labels():
        p, q = code.occurrences(a)
        if _adjacent(p, q, size):
            sites.append(MoveSite(MoveKind.MONOGON, (a,), (p, q)))
    for i in range(size):
        j = (i + 1) % size
        x, y = w[i], w[j]
        if x == y:
            continue
        xi, yj = code.partner(i), code.partner(j)
        if not _adjacent(xi, yj, size):
            continue
        if code.occurrence_sign(i) != -code.occurrence_sign(j):
            continue
        pair1 = (i, j)
        pair2 = (xi, yj) if (yj - xi) % size == 1 else (yj, xi)
        key = frozenset((pair1, pair2))
        if key in seen:
            continue
        seen.add(key)
        first, second = sorted((pair1, pair2))
        labels = tuple(sorted((x, y), key=lambda lab: code.occurrences(lab)[0]))
        sites.append(MoveSite(MoveKind.BIGON, labels, first + second))
    return sites


def apply_reduction_move(code: SignedGaussCode, site: MoveSite) -> SignedGaussCode:
    """Delete the occurrences of ``site``; the site must be current."""
    if site not in find_moves(code):
        raise GaussCodeError(f"stale or invalid move site {site}")
    drop = set(site.positions)
    items = [it for pos, it in enumerate(_occurrence_items(code)) if pos not in drop]
    return from_occurrences(items)


def _new_labels(code: SignedGaussCode, count: int) -> list[str]:
    used = set(code.labels())
    out = []
    for lab in fresh_labels():
        if lab not in used:
            out.append(lab)
            if len(out) == count:
                return out
    raise AssertionError("unreachable")


def insert_move(code: SignedGaussCode, kind: MoveKind | str, gaps: int | Sequence[int],
                sign: int = 1, parallel: bool = True) -> SignedGaussCode:
    """Insert a monogon or a bigon.

    Gaps are indices ``0..len(code)``; gap ``g`` sits just before position
    ``g``.  A monogon ``x x`` goes into one gap with ``sign(x) = sign``.  A
    bigon takes two gaps ``g1 <= g2``: the pair ``x y`` goes into ``g1`` with
    occurrence signs ``(sign, -sign)``, and ``x y`` (``parallel``) or ``y x``
    goes into ``g2`` with the opposite occurrence signs.
    """
    kind = MoveKind(kind)
    if sign not in (1, -1):
        raise GaussCodeError("sign must be +1 or -1")
    size = len(code)
    items = _occurrence_items(code)
    if kind is MoveKind.MONOGON:
        g = gaps if isinstance(gaps, int) else gaps[0]
        if not 0 <= g <= size:
            raise GaussCodeError(f"invalid gap {g} for a word of length {size}")
        (x,) = _new_labels(code, 1)
        return from_occurrences(items[:g] + [(x, sign), (x, -sign)] + items[g:])
    if isinstance(gaps, int) or len(gaps) != 2:
        raise GaussCodeError("a bigon needs two gaps")
    g1, g2 = sorted(gaps)
    if not (0 <= g1 <= size and 0 <= g2 <= size):
        raise GaussCodeError(f"invalid gaps {gaps} for a word of length {size}")
    x, y = _new_labels(code, 2)
    first = [(x, sign), (y, -sign)]
    second = [(x, -sign), (y, sign)] if parallel else [(y, sign), (x, -sign)]
    return from_occurrences(items[:g1] + first + items[g1:g2] + second + items[g2:])


def virtualize(code: SignedGaussCode, label: str) -> SignedGaussCode:
    """Virtualize crossing ``label``: negate its sign, keep the word."""
    signs = code.signs
    if label not in signs:
        raise KeyError(f"unknown crossing label {label!r}")
    signs[label] = -signs[label]
    return SignedGaussCode(code.word, signs)


def random_code(n: int, rng: random.Random | None = None) -> SignedGaussCode:
    """Uniform random double-occurrence word on ``n`` labels with random signs."""
    rng = rng or random.Random()
    labels = list(itertools.islice(fresh_labels(), n))
    word = labels * 2
    rng.shuffle(word)
    return SignedGaussCode(word, {a: rng.choice((1, -1)) for a in labels})
