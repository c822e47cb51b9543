"""Command-line front end.

Exit codes: 0 success, 1 an assertion or law did not behave as stated,
2 usage, parse, type or signature errors.
"""
from __future__ import annotations

import argparse
import sys

from .equiv import equal, minimize, witness
from .errors import KicatError
from .laws import FuzzConfig, fuzz, select
from .oracle import render_support, support_lang
from .parser import parse_program, parse_term
from .rattree import Machine, compile, to_dot
from .syntax import Signature, desugar, load_signature

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _signature(text):
    if text is None:
        return Signature.default()
    try:
        return load_signature(text)
    except (ValueError, KicatError) as e:
        raise UsageError(f"bad --sig: {e}") from None


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


# -- check ------------------------------------------------------------------------

def _run_check(program, check):
    sig = program.sig
    M = Machine(sig)
    p = compile(desugar(check.lhs, sig), sig, M)
    q = compile(desugar(check.rhs, sig), sig, M)
    same = equal(p, q)
    held = same == check.positive
    lines = [f"{'PASS' if held else 'FAIL'} line {check.line}: {check.text}"]
    if not held:
        if check.positive:
            w = witness(p, q)
            lines += ["  " + x for x in w.render(sig).splitlines()]
        else:
            lines.append("  the two sides are equal")
    return held, lines


def _check_worker(args):
    text, sig, index = args
    program = parse_program(text, sig)
    return _run_check(program, program.checks[index])


def cmd_check(path, sig=None, jobs=1, out=None):
    out = out or sys.stdout
    text = _read(path)
    sig = sig or Signature.default()
    program = parse_program(text, sig)
    if jobs > 1 and len(program.checks) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_worker,
                                    [(text, sig, i) for i in range(len(program.checks))]))
    else:
        results = [_run_check(program, c) for c in program.checks]
    failed = 0
    for held, lines in results:
        failed += not held
        for line in lines:
            print(line, file=out)
    print(f"{len(results) - failed}/{len(results)} checks hold", file=out)
    return OK if failed == 0 else FAILED


# -- fuzz -------------------------------------------------------------------------

def cmd_fuzz(laws="all", trials=None, seed=0, sig=None, out_path=None, jobs=1,
             max_size=None, out=None):
    out = out or sys.stdout
    names = [x.strip() for x in laws.split(",") if x.strip()] if laws else []
    try:
        select(names)
    except KeyError as e:
        raise UsageError(f"unknown law or group {e.args[0]!r}") from None
    if trials is not None and trials < 0:
        raise UsageError("--trials must be non-negative")
    config = FuzzConfig(laws=tuple(names), trials=trials, seed=seed,
                        sig=sig or Signature.default(), jobs=jobs)
    if max_size is not None:
        config.max_size = max_size
    report = fuzz(config)
    text = report.to_text()
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return OK if report.ok else FAILED


# -- dot / support ----------------------------------------------------------------

def _term(text, sig, path):
    defs = {}
    if path:
        program = parse_program(_read(path), sig)
        sig, defs = program.sig, program.defs
    if text in defs:
        return defs[text][1], sig
    return parse_term(text, sig, defs), sig


def cmd_dot(term, out_path, minimized=False, sig=None, path=None):
    t, sig = _term(term, sig, path)
    p = compile(desugar(t, sig), sig)
    if minimized:
        p = minimize(p)
    dot = to_dot(p)
    if out_path == "-":
        sys.stdout.write(dot)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(dot)
    return OK


def cmd_support(term, maxlen, sig=None, path=None, out=None):
    out = out or sys.stdout
    if maxlen < 0:
        raise UsageError("--maxlen must be non-negative")
    t, sig = _term(term, sig, path)
    lang = support_lang(desugar(t, sig), sig, maxlen)
    many = len(lang) > 1
    for i, strings in enumerate(lang):
        for line in render_support(strings, sig):
            print(f"root {i}: {line}" if many else line, file=out)
    return OK


# -- entry point ------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="kicat", description="Decide equivalence of program "
                                 "skeletons with Kleene iteration, tests and operations.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the checks in a program file")
    c.add_argument("file")
    c.add_argument("--sig", help='signature used when the file declares none, e.g. "actions u; tests t"')
    c.add_argument("--jobs", type=int, default=1)

    f = sub.add_parser("fuzz", help="fuzz laws from the catalog")
    f.add_argument("--laws", default="all", help="comma-separated law or group names, or all")
    f.add_argument("--trials", type=int)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--sig")
    f.add_argument("--out")
    f.add_argument("--jobs", type=int, default=1)
    f.add_argument("--max-size", type=int)
    f.add_argument("--list", action="store_true", help="list law names and exit")

    d = sub.add_parser("dot", help="export the automaton of a term as DOT")
    d.add_argument("term", help="term text or the name of a definition from --file")
    d.add_argument("-o", "--out", required=True, help="output path, or - for stdout")
    d.add_argument("--min", action="store_true", help="minimize before export")
    d.add_argument("--file")
    d.add_argument("--sig")

    s = sub.add_parser("support", help="list the guarded strings of a tame term")
    s.add_argument("term")
    s.add_argument("--maxlen", type=int, default=3)
    s.add_argument("--file")
    s.add_argument("--sig")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            sig = _signature(args.sig) if args.sig else None
            return cmd_check(args.file, sig, args.jobs)
        if args.command == "fuzz":
            if args.list:
                from .laws import catalog
                for law in catalog():
                    print(f"{law.name}\t{law.group}\t{law.polarity}\t{law.text}")
                return OK
            return cmd_fuzz(args.laws, args.trials, args.seed, _signature(args.sig),
                            args.out, args.jobs, args.max_size)
        if args.command == "dot":
            return cmd_dot(args.term, args.out, args.min, _signature(args.sig), args.file)
        if args.command == "support":
            return cmd_support(args.term, args.maxlen, _signature(args.sig), args.file)
    except UsageError as e:
        print(f"kicat: {e}", file=sys.stderr)
        return USAGE
    except KicatError as e:
        print(f"kicat: {type(e).__name__}: {e}", file=sys.stderr)
        return USAGE
    except (ValueError, OSError) as e:
        print(f"kicat: {e}", file=sys.stderr)
        return USAGE
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
