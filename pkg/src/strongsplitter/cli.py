"""Command-line interface: ``strongsplitter <command> ...``.

Exit codes: 0 success, 1 negative verdict or golden mismatch, 2 usage error,
3 data error (unknown name, unreadable or malformed file).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from . import catalog, tables
from .chains import ChainError, NotAMinorError, WheelPreconditionError, format_chain, strong_chain, validate_chain
from .classify import classify_e5, format_classification
from .connectivity import is_3connected, is_internally_4connected
from .core import BinaryMatroid, MatroidFormatError, dual, parse_matroid, serialize_matroid
from .generate import DedupCache, coextensions, extensions, format_classes
from .iso import canonical_form, is_isomorphic
from .minors import INTERNALLY_4_CONNECTED, THREE_CONNECTED, ClassSpec, has_minor
from .splitter import is_almost_regular, is_splitter, regular_elements

OK, NEGATIVE, USAGE, DATA = 0, 1, 2, 3


class DataError(Exception):
    pass


def resolve(name: str) -> BinaryMatroid:
    """Catalog name first, then a path to a matrix file."""
    try:
        return catalog.get(name).matroid
    except catalog.UnknownMatroidError:
        pass
    path = Path(name)
    if not path.is_file():
        raise DataError(f"{name!r} is neither a catalog name nor a readable file")
    try:
        return parse_matroid(path.read_text())
    except MatroidFormatError as exc:
        raise DataError(f"{name}: {exc}") from exc


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _spec(args) -> ClassSpec:
    return ClassSpec(
        tuple(resolve(n) for n in args.require),
        tuple(resolve(n) for n in args.exclude),
        args.connectivity,
    )


def cmd_info(args, out) -> int:
    M = resolve(args.matroid)
    out.write(f"rank\t{M.rank}\n")
    out.write(f"elements\t{M.size}\n")
    out.write(f"3-connected\t{_yes(is_3connected(M))}\n")
    out.write(f"internally 4-connected\t{_yes(is_internally_4connected(M))}\n")
    out.write(f"self-dual\t{_yes(canonical_form(M) == canonical_form(dual(M)))}\n")
    return OK


def cmd_iso(args, out) -> int:
    cert = is_isomorphic(resolve(args.a), resolve(args.b))
    if cert is None:
        out.write("not isomorphic\n")
        return NEGATIVE
    out.write("isomorphic\n")
    out.write(" ".join(f"{u}->{v}" for u, v in cert.mapping) + "\n")
    return OK


def cmd_minor(args, out) -> int:
    w = has_minor(resolve(args.big), resolve(args.small))
    if w is None:
        out.write("no minor\n")
        return NEGATIVE
    out.write("minor\n")
    out.write("contract\t" + " ".join(map(str, sorted(w.contracted))) + "\n")
    out.write("delete\t" + " ".join(map(str, sorted(w.deleted))) + "\n")
    out.write("map\t" + " ".join(f"{u}->{v}" for u, v in w.iso.mapping) + "\n")
    return OK


def _class_table(args, out, rows: bool) -> int:
    M = resolve(args.matroid)
    spec = _spec(args)
    found = (coextensions if rows else extensions)(M, spec, args.jobs)
    word = "coext" if rows else "ext"
    lines = [
        (f"{word} {k}", cls.columns, f"rank={cls.representative.rank} n={cls.representative.size}")
        for k, cls in enumerate(found, start=1)
    ]
    out.write(format_classes(lines, [f"{len(found)} classes"]))
    return OK


def cmd_ext(args, out) -> int:
    return _class_table(args, out, rows=False)


def cmd_coext(args, out) -> int:
    return _class_table(args, out, rows=True)


def cmd_splitter(args, out) -> int:
    N = resolve(args.matroid)
    spec = _spec(args)
    if not spec.admits(N):
        out.write("N is not a member of the class\n")
        return NEGATIVE
    verdict = is_splitter(N, spec, use_self_duality=not args.no_shortcut, jobs=args.jobs)
    if verdict.isSplitter:
        out.write("splitter\tyes\n")
        return OK
    out.write("splitter\tno\n")
    out.write("failing extension\n")
    out.write(serialize_matroid(verdict.failingExtension, True))
    return NEGATIVE


def cmd_chain(args, out) -> int:
    M, N = resolve(args.big), resolve(args.small)
    report = strong_chain(M, N)
    check = validate_chain(report, M, N)
    out.write(f"m\t{report.m}\n")
    out.write(format_chain(report))
    out.write("valid\t" + _yes(check.ok) + "\n")
    for problem in check.problems:
        out.write(f"problem\t{problem}\n")
    return OK if check.ok else NEGATIVE


def cmd_tables(args, out) -> int:
    text = tables.render(args.which, args.jobs)
    out.write(text)
    diff = tables.diff_against_golden(args.which, text)
    if diff:
        sys.stderr.write(diff)
        return NEGATIVE
    return OK


def cmd_classify(args, out) -> int:
    cache = DedupCache(args.cache) if args.cache else None
    report = classify_e5(args.max_elements, jobs=args.jobs, cache=cache)
    out.write(format_classification(report))
    return OK if report.ok else NEGATIVE


def cmd_almost_regular(args, out) -> int:
    M = resolve(args.matroid)
    verdict = is_almost_regular(M)
    out.write(f"almost-regular\t{_yes(verdict)}\n")
    out.write("regular elements\t" + " ".join(map(str, regular_elements(M))) + "\n")
    return OK if verdict else NEGATIVE


def _default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongsplitter", description="Binary matroid workbench.")
    parser.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes")
    parser.add_argument("--cache", help="JSON-lines file of canonical forms seen across runs")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_spec(p):
        p.add_argument("--require", action="append", default=[], metavar="NAME")
        p.add_argument("--exclude", action="append", default=[], metavar="NAME")
        p.add_argument(
            "--connectivity", choices=(THREE_CONNECTED, INTERNALLY_4_CONNECTED), default=THREE_CONNECTED
        )
        return p

    p = sub.add_parser("info", help="rank, size and connectivity of a matroid")
    p.add_argument("matroid")
    p.set_defaults(func=cmd_info)
    p = sub.add_parser("iso", help="isomorphism test with certificate")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)
    p = sub.add_parser("minor", help="minor test with witness")
    p.add_argument("big")
    p.add_argument("small")
    p.set_defaults(func=cmd_minor)
    p = with_spec(sub.add_parser("ext", help="classes of single-element extensions"))
    p.add_argument("matroid")
    p.set_defaults(func=cmd_ext)
    p = with_spec(sub.add_parser("coext", help="classes of single-element coextensions"))
    p.add_argument("matroid")
    p.set_defaults(func=cmd_coext)
    p = with_spec(sub.add_parser("splitter", help="splitter verdict for a class"))
    p.add_argument("matroid")
    p.add_argument("--no-shortcut", action="store_true", help="check extensions even for self-dual N")
    p.set_defaults(func=cmd_splitter)
    p = sub.add_parser("chain", help="strong splitter chain from small up to big")
    p.add_argument("big")
    p.add_argument("small")
    p.set_defaults(func=cmd_chain)
    p = sub.add_parser("tables", help="regenerate a class table and diff it against the golden file")
    p.add_argument("which", choices=tables.TABLES)
    p.set_defaults(func=cmd_tables)
    p = sub.add_parser("classify-e5", help="classify matroids with an E5- and no E4-minor")
    p.add_argument("--max-elements", type=int, default=17)
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("almost-regular", help="almost-regularity and regular elements")
    p.add_argument("matroid")
    p.set_defaults(func=cmd_almost_regular)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if args.jobs < 1:
        sys.stderr.write("--jobs must be at least 1\n")
        return USAGE
    try:
        return args.func(args, out)
    except DataError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return DATA
    except NotAMinorError as exc:
        sys.stderr.write(f"{exc}\n")
        return NEGATIVE
    except WheelPreconditionError as exc:
        sys.stderr.write(f"precondition: {exc}\n")
        return USAGE
    except (ChainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
