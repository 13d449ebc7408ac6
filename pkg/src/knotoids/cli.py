"""Command-line front end.

Verbs: ``compute``, ``compare``, ``fuzz``, ``generate`` and ``tabulate``.
Data goes to stdout (or ``--out``), diagnostics to stderr.  Exit status 2
always means the input could not be read or parsed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import shlex
import sys
from dataclasses import dataclass
from typing import Sequence

from knotoids.errors import KnotoidError
from knotoids.gauss import CORPUS_NAMES, GaussDiagram, corpus, make_hm, parse_gauss_code, serialize
from knotoids.invariants import (
    GeneralizedPoly,
    chord_report,
    f_polynomial,
    index_polynomial,
    nth_f_polynomial,
    nth_polynomial,
)
from knotoids.laurent import LaurentPoly
from knotoids.moves import FORBIDDEN_KINDS, GENERATING_KINDS, MoveKind, apply_move, walk

DEFAULT_N = (1, 2, 3, 4)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


class InputError(Exception):
    """Bad user input; reported as one line and exit status 2."""


_HM_RE = re.compile(r"^hm\(?(\d+)\)?$", re.IGNORECASE)


def resolve(text: str) -> tuple[str, GaussDiagram]:
    """Map a corpus name, ``hm<m>`` or a raw Gauss code to ``(label, diagram)``."""
    key = text.strip()
    if key in CORPUS_NAMES:
        return key, corpus(key)
    m = _HM_RE.match(key)
    if m:
        return f"hm{m.group(1)}", _guard(make_hm, int(m.group(1)))
    return key, _guard(parse_gauss_code, key)


def _guard(fn, *args):
    try:
        return fn(*args)
    except (KnotoidError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _diagram_from_args(args) -> tuple[str, GaussDiagram]:
    if args.name is not None:
        key = args.name.strip()
        if key not in CORPUS_NAMES and not _HM_RE.match(key):
            raise InputError(f"unknown name {key!r}; known: {', '.join(CORPUS_NAMES)}, hm<m>")
        return resolve(key)
    if args.code is not None:
        return args.code.strip(), _guard(parse_gauss_code, args.code)
    if getattr(args, "file", None) is not None:
        text = _read_text(args.file)
        return text.strip(), _guard(parse_gauss_code, text)
    target = getattr(args, "target", None)
    if target is not None:
        return resolve(target)
    raise InputError("one of --code, --name or --file is required")


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


# --- structured renderings ---------------------------------------------------


def _lp_terms(p: LaurentPoly) -> list[dict]:
    return [{"exponent": e, "coefficient": c} for e, c in p.pairs]


def _gp_terms(p: GeneralizedPoly) -> list[dict]:
    return [
        {
            "coefficient": coeff,
            "exponent": [{"vexp": e, "coeff": c} for e, c in exp.pairs],
        }
        for exp, coeff in p.items()
    ]


@dataclass(frozen=True)
class ComputeResult:
    input: str
    f_polynomial: GeneralizedPoly
    index_polynomial: LaurentPoly
    z: dict[int, LaurentPoly]
    f_n: dict[int, GeneralizedPoly]
    chords: list

    @classmethod
    def of(cls, code: str, d: GaussDiagram, n_list: Sequence[int]) -> ComputeResult:
        return cls(
            input=code,
            f_polynomial=f_polynomial(d),
            index_polynomial=index_polynomial(d),
            z={n: nth_polynomial(d, n) for n in n_list},
            f_n={n: nth_f_polynomial(d, n) for n in n_list},
            chords=chord_report(d, n_list),
        )

    def to_json(self) -> dict:
        return {
            "input": self.input,
            "f_polynomial": {
                "canonical": self.f_polynomial.canonical(),
                "terms": _gp_terms(self.f_polynomial),
            },
            "index_polynomial": {
                "canonical": self.index_polynomial.canonical("t"),
                "terms": _lp_terms(self.index_polynomial),
            },
            "z": {str(n): p.canonical("t") for n, p in self.z.items()},
            "f_n": {str(n): p.canonical() for n, p in self.f_n.items()},
            "chords": [_chord_json(r) for r in self.chords],
        }

    def to_text(self) -> str:
        lines = [
            f"input: {self.input}" if self.input else "input: (empty)",
            f"F(u,v) = {self.f_polynomial.canonical()}",
            f"F(t) = {self.index_polynomial.canonical('t')}",
        ]
        lines += [f"Z^{n}(t) = {p.canonical('t')}" for n, p in self.z.items()]
        lines += [f"F^{n}(u,v) = {p.canonical()}" for n, p in self.f_n.items()]
        lines.append("chords:")
        if not self.chords:
            lines.append("  (none)")
        for r in self.chords:
            sign = "+" if r.sign > 0 else "-"
            row = f"  {r.chord}: sign {sign}  i = {r.i}  g = {r.g.rep.canonical()}"
            for n, data in r.nth.items():
                row += f"  d_{n} = {data.d_n}  g^{n} = {data.g_n.rep.canonical()}"
            lines.append(row)
        return "\n".join(lines) + "\n"


def _chord_json(r) -> dict:
    return {
        "chord": r.chord,
        "sign": r.sign,
        "i": r.i,
        "g": {"canonical": r.g.rep.canonical(), "modulus": r.g.modulus},
        "nth": {
            str(n): {"d_n": data.d_n, "g_n": data.g_n.rep.canonical(), "modulus": data.g_n.modulus}
            for n, data in r.nth.items()
        },
    }


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# --- invariant comparison ----------------------------------------------------


def invariant_table(d: GaussDiagram, n_list: Sequence[int]) -> list[tuple[str, str]]:
    """``(label, canonical value)`` for every invariant compared by compare/fuzz."""
    rows = [
        ("F(u,v)", f_polynomial(d).canonical()),
        ("F(t)", index_polynomial(d).canonical("t")),
    ]
    rows += [(f"Z^{n}(t)", nth_polynomial(d, n).canonical("t")) for n in n_list]
    rows += [(f"F^{n}(u,v)", nth_f_polynomial(d, n).canonical()) for n in n_list]
    return rows


# --- verbs -------------------------------------------------------------------


def cmd_compute(args) -> tuple[int, str]:
    _, d = _diagram_from_args(args)
    res = ComputeResult.of(serialize(d), d, args.n)
    body = _dump_json(res.to_json()) if args.format == "json" else res.to_text()
    return EXIT_OK, body


def cmd_compare(args) -> tuple[int, str]:
    la, da = resolve(args.a)
    lb, db = resolve(args.b)
    ta, tb = invariant_table(da, args.n), invariant_table(db, args.n)
    rows = []
    for (name, va), (_, vb) in zip(ta, tb):
        rows.append({"invariant": name, "a": va, "b": vb, "equal": va == vb})
    distinguished = any(not r["equal"] for r in rows)
    status = EXIT_OK if distinguished else EXIT_NEGATIVE
    if args.format == "json":
        doc = {"a": la, "b": lb, "invariants": rows, "distinguished": distinguished}
        return status, _dump_json(doc)
    out = [f"a: {la}", f"b: {lb}"]
    for r in rows:
        verdict = "equal" if r["equal"] else "different"
        out.append(f"{r['invariant']}: {verdict}")
        if not r["equal"]:
            out.append(f"  a: {r['a']}")
            out.append(f"  b: {r['b']}")
    out.append("verdict: " + ("distinguished" if distinguished else "not distinguished"))
    return status, "\n".join(out) + "\n"


_KIND_ALIASES = {
    "generating": GENERATING_KINDS,
    "forbidden": FORBIDDEN_KINDS,
    "all": GENERATING_KINDS | FORBIDDEN_KINDS,
}


def parse_kinds(text: str | None) -> frozenset[MoveKind]:
    if text is None:
        return GENERATING_KINDS
    kinds: set[MoveKind] = set()
    by_value = {k.value.lower(): k for k in MoveKind}
    for part in text.split(","):
        key = part.strip().lower()
        if not key:
            continue
        if key in _KIND_ALIASES:
            kinds |= _KIND_ALIASES[key]
        elif key in by_value:
            kinds.add(by_value[key])
        else:
            known = ", ".join(sorted([k.value for k in MoveKind] + list(_KIND_ALIASES)))
            raise InputError(f"unknown move kind {part.strip()!r}; known: {known}")
    if not kinds:
        raise InputError("--kinds selects no move kinds")
    return frozenset(kinds)


def _kinds_arg(kinds: frozenset[MoveKind]) -> str:
    return ",".join(sorted(k.value for k in kinds))


def _first_change(d: GaussDiagram, trace, n_list, reference) -> int:
    """Index of the first move in ``trace`` after which the invariants differ from ``reference``."""
    cur = d
    for idx, m in enumerate(trace):
        cur = apply_move(cur, m)
        if invariant_table(cur, n_list) != reference:
            return idx
    return -1


def _fuzz_targets(args) -> list[tuple[str, GaussDiagram]]:
    if args.name is not None or args.code is not None or args.file is not None:
        if args.targets:
            raise InputError("give either positional targets or one of --code/--name/--file")
        return [_diagram_from_args(args)]
    if not args.targets:
        raise InputError("fuzz needs a target: a corpus name, hm<m>, a Gauss code, or 'corpus'")
    out = []
    for t in args.targets:
        if t.strip() == "corpus":
            out += [(name, corpus(name)) for name in CORPUS_NAMES]
        else:
            out.append(resolve(t))
    return out


def cmd_fuzz(args) -> tuple[int, str]:
    kinds = parse_kinds(args.kinds)
    if args.trials < 0 or args.steps < 0:
        raise InputError("--trials and --steps must be non-negative")
    targets = _fuzz_targets(args)
    failures = []
    for label, d in targets:
        reference = invariant_table(d, args.n)
        for t in range(args.trials):
            trial_seed = args.seed + t
            final, trace = walk(d, args.steps, trial_seed, kinds)
            got = invariant_table(final, args.n)
            if got == reference:
                continue
            failures.append(_counterexample(label, d, trial_seed, trace, kinds, args, reference, got))
    lines = []
    for label, d in targets:
        lines.append(f"target {label or '(empty)'}: {d.num_chords} chords")
    lines.append(
        f"trials {args.trials}, steps {args.steps}, seed {args.seed}, kinds {_kinds_arg(kinds)}"
    )
    if not failures:
        lines.append(f"ok: {args.trials * len(targets)} walks preserved all invariants")
        status = EXIT_OK
    else:
        lines.append(f"FAILED: {len(failures)} walk(s) changed an invariant")
        for f in failures:
            lines += f
        status = EXIT_NEGATIVE
    return status, "\n".join(lines) + "\n"


def _counterexample(label, d, trial_seed, trace, kinds, args, reference, got) -> list[str]:
    code = serialize(d)
    step = _first_change(d, trace, args.n, reference)
    changed = [name for (name, a), (_, b) in zip(reference, got) if a != b]
    replay = (
        f"knotoids fuzz --code {shlex.quote(code)} --trials 1 --steps {args.steps} "
        f"--seed {trial_seed} --kinds {_kinds_arg(kinds)}"
    )
    for n in args.n:
        replay += f" --n {n}"
    out = [
        f"counterexample: target {label or '(empty)'}, seed {trial_seed}",
        f"  changed: {', '.join(changed)}",
        "  trace: " + (" ".join(str(m) for m in trace) or "(empty)"),
    ]
    if step >= 0:
        m = trace[step]
        tag = " [forbidden move]" if m.kind in FORBIDDEN_KINDS else ""
        out.append(f"  first change at step {step + 1}: {m}{tag}")
    out.append(f"  replay: {replay}")
    return out


def cmd_generate(args) -> tuple[int, str]:
    if args.family != "hm":
        raise InputError(f"unknown family {args.family!r}; known: hm")
    d = _guard(make_hm, args.m)
    return EXIT_OK, serialize(d) + "\n"


def _tab_columns(n_list) -> list[str]:
    return (
        ["name", "code", "f_poly", "index_poly"]
        + [f"z_{n}" for n in n_list]
        + [f"f_{n}" for n in n_list]
    )


def _tab_row(name: str, d: GaussDiagram, n_list) -> list[str]:
    return (
        [name, serialize(d), f_polynomial(d).canonical(), index_polynomial(d).canonical("t")]
        + [nth_polynomial(d, n).canonical("t") for n in n_list]
        + [nth_f_polynomial(d, n).canonical() for n in n_list]
    )


def cmd_tabulate(args, err) -> tuple[int, str]:
    if args.file is None:
        raise InputError("tabulate needs --file")
    text = _read_text(args.file)
    rows, bad = [], 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        try:
            if len(parts) != 2:
                raise InputError("expected 'name <whitespace> gauss-code'")
            name, code = parts
            d = parse_gauss_code(code)
        except (InputError, KnotoidError, ValueError) as exc:
            bad += 1
            err.write(f"{args.file}:{lineno}: {exc}\n")
            continue
        rows.append(_tab_row(name, d, args.n))
    cols = _tab_columns(args.n)
    if args.format == "json":
        body = _dump_json([dict(zip(cols, r)) for r in rows])
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        writer.writerows(rows)
        body = buf.getvalue()
    return (EXIT_NEGATIVE if bad else EXIT_OK), body


# --- argument parsing --------------------------------------------------------


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected n >= 0, got {v}")
    return v


def _add_source(p: argparse.ArgumentParser, with_file: bool = True) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--code", help="Gauss code, e.g. 'O1+ O2+ U1+ U2+'")
    g.add_argument("--name", help=f"corpus name ({', '.join(CORPUS_NAMES)}) or hm<m>")
    if with_file:
        g.add_argument("--file", help="file holding one Gauss code ('-' for stdin)")


def _add_common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument(
        "--n", action="append", type=_non_negative, metavar="N",
        help="n for Z^n and F^n; repeatable (default: 1 2 3 4)",
    )
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", help="write data here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotoids",
        description="F-polynomial and related invariants of knotoid Gauss codes.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="compute all invariants of one diagram")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("compare", help="compare the invariants of two diagrams")
    p.add_argument("a", help="corpus name, hm<m> or Gauss code")
    p.add_argument("b", help="corpus name, hm<m> or Gauss code")
    _add_common(p)

    p = sub.add_parser("fuzz", help="check invariance along seeded random move sequences")
    p.add_argument("targets", nargs="*", help="corpus names, hm<m>, Gauss codes or 'corpus'")
    _add_source(p)
    p.add_argument("--trials", type=_non_negative, default=100)
    p.add_argument("--steps", type=_non_negative, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--kinds",
        help="comma-separated move kinds (R1Insert, R1Delete, R2Insert, R2Delete, R3, "
        "FTail, FHead) or generating/forbidden/all",
    )
    _add_common(p, formats=("text",))

    p = sub.add_parser("generate", help="print the Gauss code of a family member")
    p.add_argument("family", help="family name (hm)")
    p.add_argument("m", type=int)
    p.add_argument("--out", help="write data here instead of stdout")

    p = sub.add_parser("tabulate", help="tabulate a file of 'name code' lines")
    p.add_argument("--file", help="input file ('-' for stdin)")
    _add_common(p, formats=("csv", "json"))
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the input-error status
        return int(exc.code or 0)
    if getattr(args, "n", None) is None and args.verb != "generate":
        args.n = list(DEFAULT_N)
    elif args.verb != "generate":
        args.n = list(dict.fromkeys(args.n))
    try:
        if args.verb == "compute":
            status, body = cmd_compute(args)
        elif args.verb == "compare":
            status, body = cmd_compare(args)
        elif args.verb == "fuzz":
            status, body = cmd_fuzz(args)
        elif args.verb == "generate":
            status, body = cmd_generate(args)
        else:
            status, body = cmd_tabulate(args, err)
    except InputError as exc:
        err.write(f"knotoids {args.verb}: error: {exc}\n")
        return EXIT_INPUT
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(body)
        except OSError as exc:
            err.write(f"knotoids {args.verb}: error: cannot write {args.out}: {exc.strerror}\n")
            return EXIT_INPUT
    else:
        out.write(body)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
