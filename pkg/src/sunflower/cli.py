"""Command-line interface.

Inputs ending in ``.sets`` are explicit families (one set per line), inputs
ending in ``.fam`` are family expressions; ``-`` reads stdin and needs
``--format``.  Exit codes: 0 success, 1 domain error, 2 usage or parse
error, 3 budget or guard exceeded.  Negative search outcomes (no sunflower
found, budget exhausted inside a search) are reported as data with exit 0.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from pathlib import Path
from typing import Callable, TextIO

from .detector import LABELS, certified_cores, classify, extract_sunflower
from .errors import BudgetError, BudgetExhausted, NotUniform, ParseError, SunflowerError, Uncertified
from .familyspec import Explicit, FamilySpec, Gadget, enumerate_family, member_count, parse_spec, parse_table
from .finitelemma import DEFAULT_GUARD, erdos_rado_find, max_sunflower_exact
from .gadget import DEFAULT_GADGET_GUARD, verify_claim
from .padding import pad_family
from .samesize import DEFAULT_BUDGET, extract_truncated, extract_uniform_sunflower
from .setcore import FiniteFamily, format_sets, is_sunflower, parse_sets
from .sunflowertree import DEFAULT_TREE_GUARD, tree_level, tree_stats
from .tables import FnTable

JSON_VERSION = 1

GRAMMAR = """\
family expressions (.fam):
  spec  := explicit{SET,...} | initial_segments | graded_blocks
         | matching(INT) | star(SET) | union(spec,spec)
         | pad(INT,spec) | link(INT,spec) | strip(INT,spec) | slice(INT,spec)
         | gadget(table)
  SET   := {INT,...}
  table := row;row;...
  row   := identity | mod INT | const_after INT INT
         | explicit[(INT,INT)...] | undefined
explicit families (.sets): one SET per line, '#' starts a comment line
"""


class UsageError(Exception):
    pass


def default_budget() -> int:
    value = os.environ.get("SUNFLOWER_BUDGET")
    if value is None:
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise UsageError(f"SUNFLOWER_BUDGET must be an integer, got {value!r}") from None
    if budget < 1:
        raise UsageError("SUNFLOWER_BUDGET must be positive")
    return budget


def _read_input(path: str, fmt: str | None, stdin: TextIO) -> tuple[str, str]:
    if path == "-":
        if fmt is None:
            raise UsageError("reading stdin needs --format sets|fam")
        return stdin.read(), fmt
    if fmt is None:
        suffix = Path(path).suffix
        if suffix not in (".sets", ".fam"):
            raise UsageError(f"cannot tell the format of {path!r}: use a .sets or .fam file, or --format")
        fmt = suffix[1:]
    try:
        return Path(path).read_text(), fmt
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_family(args: argparse.Namespace, stdin: TextIO) -> FamilySpec:
    text, fmt = _read_input(args.input, args.format, stdin)
    if fmt == "sets":
        return Explicit(parse_sets(text))
    return parse_spec(text)


def load_table(args: argparse.Namespace, stdin: TextIO) -> FnTable:
    text, fmt = _read_input(args.input, args.format or "fam", stdin)
    if text.strip().startswith("gadget"):
        spec = parse_spec(text)
        if not isinstance(spec, Gadget):
            raise UsageError("expected a gadget(...) expression or a bare table")
        return spec.table
    return parse_table(text)


def materialize(f: FamilySpec, budget: int) -> FiniteFamily:
    """All members of a certifiably finite family."""
    if isinstance(f, Explicit):
        return f.members
    c = member_count(f)
    if not c.is_finite:
        raise Uncertified(f"{f} is not certifiably finite (member count {c})")
    members, exhausted = enumerate_family(f, c.count, max(budget, c.count))
    if exhausted:
        raise BudgetExhausted(f"found {len(members)} of {c.count} members within {budget} candidates")
    return members


def _sets(members) -> list[str]:
    return [str(s) for s in members]


class Output:
    def __init__(self, out: TextIO, as_json: bool) -> None:
        self.out = out
        self.as_json = as_json

    def line(self, text: str = "") -> None:
        if not self.as_json:
            self.out.write(text + "\n")

    def json(self, command: str, payload: dict) -> None:
        if self.as_json:
            payload = {"version": JSON_VERSION, "command": command, **payload}
            self.out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args, out: Output, stdin) -> int:
    members = materialize(load_family(args, stdin), args.budget)
    check = is_sunflower(members)
    core = None if check.core is None else str(check.core)
    out.json("check", {
        "sunflower": check.verdict,
        "core": core,
        "members": len(members),
        "violation": None if check.violation is None else [list(p) for p in check.violation],
    })
    if check.verdict:
        out.line(f"sunflower core={core if core is not None else 'undetermined'}")
        return 0
    (i, j), (k, l) = check.violation
    out.line(f"not a sunflower: {members[i]}&{members[j]}={members[i] & members[j]} "
             f"but {members[k]}&{members[l]}={members[k] & members[l]}")
    return 1


def cmd_core(args, out: Output, stdin) -> int:
    members = materialize(load_family(args, stdin), args.budget)
    check = is_sunflower(members)
    if not check.verdict:
        out.json("core", {"sunflower": False, "core": None})
        out.line("not a sunflower")
        return 1
    core = None if check.core is None else str(check.core)
    out.json("core", {"sunflower": True, "core": core})
    out.line(core if core is not None else "undetermined")
    return 0


def cmd_maxsunflower(args, out: Output, stdin) -> int:
    members = materialize(load_family(args, stdin), args.budget)
    if args.method == "exact":
        result = max_sunflower_exact(members, limit=args.guard)
        core = is_sunflower(result.witness).core
        out.json("maxsunflower", {
            "method": "exact",
            "size": result.size,
            "core": None if core is None else str(core),
            "witness": _sets(result.witness),
            "exhaustive": result.exhaustive,
        })
        out.line(f"maximum sunflower size {result.size}"
                 + ("" if core is None else f" core={core}"))
        for s in result.witness:
            out.line(str(s))
        return 0
    if args.petals is None:
        raise UsageError("--method erdos-rado needs --petals")
    found = erdos_rado_find(members, args.petals)
    if found is None:
        out.json("maxsunflower", {"method": "erdos-rado", "petals": args.petals, "found": False})
        out.line(f"not found: no sunflower with {args.petals} petals located")
        return 0
    core = is_sunflower(found.witness).core
    out.json("maxsunflower", {
        "method": "erdos-rado",
        "petals": args.petals,
        "found": True,
        "size": found.size,
        "core": None if core is None else str(core),
        "witness": _sets(found.witness),
    })
    out.line(f"found sunflower with {found.size} petals" + ("" if core is None else f" core={core}"))
    for s in found.witness:
        out.line(str(s))
    return 0


def cmd_pad(args, out: Output, stdin) -> int:
    f = load_family(args, stdin)
    source = f.members if isinstance(f, Explicit) else f
    padded = pad_family(source, args.n, args.budget)
    if isinstance(padded.target, FiniteFamily):
        images = padded.target
    else:
        images = padded.materialize(args.count, args.budget)
    pairs = [(s, padded.mapping[s]) for s in padded.mapping]
    if args.map:
        lines = [f"{i}\t{s}\t{image}" for i, (s, image) in enumerate(pairs, start=1)]
        Path(args.map).write_text("\n".join(lines) + ("\n" if lines else ""))
    out.json("pad", {
        "n": args.n,
        "images": _sets(images),
        "mapping": [[str(s), str(image)] for s, image in pairs],
    })
    if images:
        out.line(format_sets(images).rstrip("\n"))
    return 0


def cmd_extract(args, out: Output, stdin) -> int:
    f = load_family(args, stdin)
    if args.truncate is not None:
        prefix, _ = enumerate_family(f, args.truncate, max(args.budget, args.truncate))
        core, members = extract_truncated(prefix, args.count)
        out.json("extract", {
            "mode": "best-effort",
            "truncation": len(prefix),
            "core": str(core),
            "members": _sets(members),
        })
        out.line(f"best-effort on the first {len(prefix)} members: {len(members)} of {args.count}, core={core}")
        for s in members:
            out.line(str(s))
        return 0
    try:
        stream = extract_uniform_sunflower(f, args.budget)
        method = "uniform"
    except (NotUniform, Uncertified):
        certs = certified_cores(f, args.budget)
        if not certs:
            raise
        stream = extract_sunflower(f, certs[0].core, args.budget)
        method = "fixed-core"
    members = stream.take(args.count)
    out.json("extract", {"mode": method, "core": str(stream.core), "members": _sets(members)})
    out.line(f"core={stream.core}")
    for s in members:
        out.line(str(s))
    return 0


def cmd_tree(args, out: Output, stdin) -> int:
    f = load_family(args, stdin)
    stats = tree_stats(f, args.n, args.depth, args.budget, args.guard)
    payload = stats.to_json()
    level = None
    if args.level is not None:
        level = tree_level(f, args.n, args.level, args.budget, args.guard)
        payload["level"] = {"k": args.level, "nodes": [_sets(node) for node in level.nodes]}
    out.json("tree", payload)
    out.line("level counts: " + " ".join(map(str, stats.per_level_counts)))
    out.line("cumulative distinct: " + " ".join(map(str, stats.cumulative_distinct)))
    out.line(f"longest strict chain: {stats.longest_strict_chain}")
    for node in stats.chain_witness:
        out.line(f"  {node}")
    if level is not None:
        out.line(f"level {args.level}: {len(level)} nodes")
        for node in level.nodes:
            out.line(f"  {node}")
    return 0


def cmd_classify(args, out: Output, stdin) -> int:
    f = load_family(args, stdin)
    result = classify(f, args.budget)
    emitted = result.stream.take(args.emit) if result.stream is not None and args.emit else []
    code = "unknown" if result.code is None else result.code
    payload = {"code": code, "label": result.label, "report": result.report}
    if result.stream is not None:
        payload["core"] = str(result.stream.core)
        payload["emitted"] = _sets(emitted)
    out.json("classify", payload)
    text = f"{code} ({result.label})"
    if result.stream is not None:
        text += f" core={result.stream.core}"
    out.line(text)
    for s in emitted:
        out.line(str(s))
    if result.code is None:
        for core, size in result.report.get("largest_exact_core", {}).items():
            out.line(f"  core {core}: largest exact-core sunflower {size}")
    return 0


def cmd_gadget(args, out: Output, stdin) -> int:
    table = load_table(args, stdin)
    report = verify_claim(table, args.truncate, args.guard, args.budget)
    out.json("gadget", report.to_json())
    ranges = " ".join(str(c.to_json()) for c in report.per_row_range)
    out.line(f"truncation {report.truncation}: {report.pool_size} members")
    out.line(f"row ranges: {ranges or '(no rows)'}")
    out.line(f"max sunflower in truncation: {report.max_sunflower_truncated}"
             + ("" if report.bound is None else f" (bound {report.bound})"))
    actual = "unknown" if report.classification_actual is None else report.classification_actual
    out.line(f"classification: {actual} ({LABELS[report.classification_actual]}), "
             f"expected {report.classification_expected}")
    if report.witness_core is not None:
        out.line(f"witness core={report.witness_core}")
        for s in report.witness_prefix:
            out.line(str(s))
    out.line("claim holds" if report.holds else "claim FAILS")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunflower",
        description="Analyze sunflowers in finite and countably infinite families of finite sets.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, epilog=GRAMMAR,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("input", help="a .sets or .fam file, or - for stdin")
        p.add_argument("--format", choices=("sets", "fam"), help="input format (required for stdin)")
        p.add_argument("--budget", type=int, default=None, help="candidate budget for enumeration")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(fn=fn)
        return p

    command("check", cmd_check, "verify that a finite family is a sunflower")
    command("core", cmd_core, "print the core of a finite sunflower")

    p = command("maxsunflower", cmd_maxsunflower, "largest sunflower in a finite family")
    p.add_argument("--method", choices=("exact", "erdos-rado"), default="exact")
    p.add_argument("--petals", type=int, help="petals to look for (erdos-rado)")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="largest family for exact search")

    p = command("pad", cmd_pad, "pad a size-bounded family to constant size")
    p.add_argument("--n", type=int, required=True, help="target set size")
    p.add_argument("--count", type=int, default=20, help="members to pad for infinite families")
    p.add_argument("--map", help="write a source-line to image mapping to this file")

    p = command("extract", cmd_extract, "stream members of an infinite sunflower")
    p.add_argument("--count", type=int, default=10, help="members to emit")
    p.add_argument("--truncate", type=int, help="best-effort run on the first N members")

    p = command("tree", cmd_tree, "sunflower tree statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--level", type=int, help="also list the nodes of this level")
    p.add_argument("--guard", type=int, default=DEFAULT_TREE_GUARD, help="largest member pool")

    p = command("classify", cmd_classify, "decide whether the family has an infinite sunflower")
    p.add_argument("--emit", type=int, default=0, help="witness members to print")

    p = command("gadget", cmd_gadget, "check the gadget reduction on a function table")
    p.add_argument("--truncate", type=int, required=True, help="last enumeration stage")
    p.add_argument("--guard", type=int, default=DEFAULT_GADGET_GUARD, help="largest truncated pool")
    return parser


_NON_NEGATIVE = ("emit", "depth", "truncate", "level", "n")
_POSITIVE = ("budget", "count", "guard", "petals")


def _check_ranges(args: argparse.Namespace) -> None:
    for name in _NON_NEGATIVE + _POSITIVE:
        value = getattr(args, name, None)
        if value is None:
            continue
        if name in _POSITIVE and value < 1:
            raise UsageError(f"--{name} must be positive")
        if value < 0:
            raise UsageError(f"--{name} must be non-negative")


def run(argv: list[str], stdin: TextIO | None = None) -> tuple[int, str, str]:
    """Run one invocation; returns (exit code, stdout, stderr)."""
    stdin = sys.stdin if stdin is None else stdin
    stdout, stderr = io.StringIO(), io.StringIO()
    parser = build_parser()
    try:
        real_out, real_err = sys.stdout, sys.stderr
        sys.stdout, sys.stderr = stdout, stderr
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stdout, sys.stderr = real_out, real_err
    except SystemExit as exc:
        return int(exc.code or 0), stdout.getvalue(), stderr.getvalue()

    out = Output(stdout, args.json)
    try:
        if args.budget is None:
            args.budget = default_budget()
        _check_ranges(args)
        code = args.fn(args, out, stdin)
    except (UsageError, ParseError) as exc:
        stderr.write(f"error: {exc}\n\n{GRAMMAR}")
        return 2, stdout.getvalue(), stderr.getvalue()
    except BudgetError as exc:
        stderr.write(f"budget exceeded: {exc}\n")
        return 3, stdout.getvalue(), stderr.getvalue()
    except SunflowerError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1, stdout.getvalue(), stderr.getvalue()
    return code, stdout.getvalue(), stderr.getvalue()


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
