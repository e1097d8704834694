"""
Command line front end.

    doodle validate  -i FILE          parse and report
    doodle matrix    --inline CODE    (beta | alpha) and its irreducible form
    doodle reduce    -i FILE          greedy reduction with its step trace
    doodle classify  -i FILE          obstruction verdict and genus
    doodle genus     -i FILE          crossings, boundary circles, genus
    doodle moves     -i FILE          removable monogons and bigons
    doodle virtualize -i FILE [--at LABEL]
    doodle corpus    --seed S --count N --max-crossings M [-o FILE]
    doodle verify    [-i CORPUS]      run the checks (seeded corpus if no input)

Exit status: 0 on success, 1 when a check fails, 2 on usage or parse errors.
``--format structured`` prints one JSON document with the same numbers as
the human output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import gauss, load_kishino
from .gauss import GaussCodeError, SignedGaussCode
from .skewmat import AugSkewMatrix, Verdict, canonical_form, classify, format_matrix, matrix_of, reduce
from .suite import format_corpus, kishino_checks, make_corpus, read_corpus, run_checks
from .surface import minimal_genus
from .virtualize import check_prediction

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None
    inline: str | None
    format: str
    seed: int
    max_crossings: int
    count: int
    at: str | None = None
    output: str | None = None
    jobs: int = 1


class UsageError(Exception):
    pass


def _read_input(cfg: RunConfig) -> str:
    if cfg.inline is not None and cfg.input is not None:
        raise UsageError("give either --input or --inline, not both")
    if cfg.inline is not None:
        return cfg.inline
    if cfg.input is None:
        raise UsageError(f"{cfg.command} needs --input or --inline")
    if cfg.input == "-":
        return sys.stdin.read()
    try:
        with open(cfg.input, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc.strerror}") from exc


def _read_code(cfg: RunConfig) -> SignedGaussCode:
    return gauss.parse(_read_input(cfg))


def _matrix_tree(M: AugSkewMatrix) -> dict:
    return {"n": M.n, "B": M.B.tolist(), "A": M.A.tolist()}


def _emit(cfg: RunConfig, human: str, tree: dict) -> None:
    if cfg.format == "structured":
        sys.stdout.write(json.dumps(tree, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(human if human.endswith("\n") else human + "\n")


def cmd_validate(cfg: RunConfig) -> int:
    text = _read_input(cfg)
    try:
        code = gauss.parse(text)
    except GaussCodeError as exc:
        _emit(cfg, f"ERROR {exc}", {"ok": False, "error": str(exc), "token": exc.token})
        return EXIT_USAGE
    note = " (trivial doodle)" if code.n == 0 else ""
    _emit(cfg, f"OK n={code.n}{note}", {"ok": True, "n": code.n, "code": gauss.to_structured(code)})
    return EXIT_OK


def _irreducible(M: AugSkewMatrix) -> AugSkewMatrix:
    return canonical_form(reduce(M)[0])[0]


def cmd_matrix(cfg: RunConfig) -> int:
    code = _read_code(cfg)
    M = matrix_of(code)
    R = _irreducible(M)
    human = (f"# labels: {' '.join(code.labels())}\n" + format_matrix(M)
             + "# irreducible form\n" + format_matrix(R))
    _emit(cfg, human, {"labels": code.labels(), "matrix": _matrix_tree(M), "irreducible": _matrix_tree(R)})
    return EXIT_OK


def cmd_reduce(cfg: RunConfig) -> int:
    code = _read_code(cfg)
    M = matrix_of(code)
    R, trace = reduce(M)
    lines = [f"{s.kind} {' '.join(map(str, s.args))}" for s in trace.steps]
    human = "\n".join(["# steps"] + lines + ["# irreducible"]) + "\n" + format_matrix(R)
    _emit(cfg, human, {"matrix": _matrix_tree(M), "trace": trace.to_structured(), "irreducible": _matrix_tree(R)})
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    code = _read_code(cfg)
    verdict = classify(code)
    s = minimal_genus(code)
    line = ("NON-CLASSICAL (matrix obstruction)" if verdict is Verdict.NON_CLASSICAL_OBSTRUCTION
            else "INCONCLUSIVE (trivial invariant class)")
    human = f"{line}\nm={s.n_crossings} boundary={s.boundary_components} genus={s.genus}"
    _emit(cfg, human, {"verdict": verdict.value, "n_crossings": s.n_crossings,
                       "boundary_components": s.boundary_components, "genus": s.genus})
    return EXIT_OK


def cmd_genus(cfg: RunConfig) -> int:
    s = minimal_genus(_read_code(cfg))
    _emit(cfg, f"m={s.n_crossings} boundary={s.boundary_components} genus={s.genus}",
          {"n_crossings": s.n_crossings, "boundary_components": s.boundary_components, "genus": s.genus})
    return EXIT_OK


def cmd_moves(cfg: RunConfig) -> int:
    code = _read_code(cfg)
    sites = gauss.find_moves(code)
    human = "\n".join(f"{s.kind.value} {','.join(s.labels)} at {' '.join(map(str, s.positions))}"
                      for s in sites) or "no moves"
    _emit(cfg, human, {"moves": [{"kind": s.kind.value, "labels": list(s.labels),
                                  "positions": list(s.positions)} for s in sites]})
    return EXIT_OK


def cmd_virtualize(cfg: RunConfig) -> int:
    code = _read_code(cfg)
    if cfg.at is not None and cfg.at not in code.labels():
        raise UsageError(f"unknown crossing {cfg.at!r}")
    targets = [cfg.at] if cfg.at is not None else code.labels()
    blocks, trees, ok = [], [], True
    for a in targets:
        chk = check_prediction(code, a)
        ok = ok and chk.match
        flag = "MATCH" if chk.match else "MISMATCH"
        blocks.append(f"# virtualize {a}: {gauss.serialize(chk.virtualized)}\n"
                      f"# labels: {' '.join(chk.labels)}\n"
                      f"# predicted\n{format_matrix(chk.predicted)}"
                      f"# recomputed\n{format_matrix(chk.recomputed)}{flag}\n")
        trees.append({"crossing": a, "code": gauss.to_structured(chk.virtualized), "labels": list(chk.labels),
                      "predicted": _matrix_tree(chk.predicted), "recomputed": _matrix_tree(chk.recomputed),
                      "match": chk.match})
    _emit(cfg, "".join(blocks) or "no crossings", {"virtualizations": trees})
    return EXIT_OK if ok else EXIT_VIOLATION


def _golden_lines() -> tuple[list[str], list[dict], bool]:
    rows = kishino_checks(load_kishino())
    lines = [f"kishino {name}: {'pass' if ok else 'FAIL'}{' (' + d + ')' if d else ''}" for name, ok, d in rows]
    return lines, [{"name": n, "passed": ok, "detail": d} for n, ok, d in rows], all(ok for _, ok, _ in rows)


def _verify(cfg: RunConfig, codes: list[SignedGaussCode], golden: bool, prefix: str = "") -> int:
    report = run_checks(codes, seed=cfg.seed, jobs=cfg.jobs)
    tree = report.to_structured()
    human = prefix + report.format_human()
    ok = report.ok
    if golden:
        lines, gtree, gok = _golden_lines()
        human += "\n".join(lines) + "\n"
        tree["golden"] = gtree
        ok = ok and gok
    _emit(cfg, human, tree)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_corpus(cfg: RunConfig) -> int:
    if cfg.count < 0 or cfg.max_crossings < 0:
        raise UsageError("--count and --max-crossings must be nonnegative")
    entries = make_corpus(cfg.seed, cfg.count, cfg.max_crossings)
    header = f"seed={cfg.seed} count={cfg.count} max_crossings={cfg.max_crossings}"
    text = format_corpus(entries, header)
    prefix = ""
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        prefix = f"# corpus: {len(entries)} codes written to {cfg.output}\n"
    return _verify(cfg, [e.code for e in entries], golden=True, prefix=prefix)


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.input is None and cfg.inline is None:
        entries = make_corpus(cfg.seed, cfg.count, cfg.max_crossings)
        return _verify(cfg, [e.code for e in entries], golden=True)
    return _verify(cfg, read_corpus(_read_input(cfg)), golden=False)


COMMANDS = {
    "validate": cmd_validate,
    "matrix": cmd_matrix,
    "reduce": cmd_reduce,
    "classify": cmd_classify,
    "genus": cmd_genus,
    "virtualize": cmd_virtualize,
    "moves": cmd_moves,
    "corpus": cmd_corpus,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="doodle", description="Signed Gauss code doodle toolkit.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("-i", "--input", help="code file, or '-' for standard input")
    p.add_argument("--inline", help="code given on the command line")
    p.add_argument("--format", choices=("human", "structured"), default="human")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-crossings", type=int, default=6)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--at", help="crossing to virtualize (default: every crossing)")
    p.add_argument("-o", "--output", help="where corpus writes its codes")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for corpus checks")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = RunConfig(ns.command, ns.input, ns.inline, ns.format, ns.seed, ns.max_crossings,
                    ns.count, ns.at, ns.output, ns.jobs)
    try:
        return COMMANDS[cfg.command](cfg)
    except GaussCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
