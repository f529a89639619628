"""Command-line front end.

    twisted-strata enumerate 2A:5 --format csv
    twisted-strata table 3D4
    twisted-strata tau 2E6 --entry "(A5,eps,0)"
    twisted-strata fiber 2E6 --stratum 12_4
    twisted-strata strata 3D4 --format data
    twisted-strata centralizer 2A --k 4 --r generic
    twisted-strata verify

Exit status: 0 success, 1 verification failure, 2 usage error, 3 data error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .centralizers import RClass, centralizer_type
from .cuspidal_support import enumerate_cs_prime, parse_cs_label
from .errors import StrataError
from .springer_tau import fiber, golden_table, tau
from .strata_atlas import c_star, component_group, strata
from .tables_io import (
    labels_to_csv, labels_to_data, render_table_text, table_to_csv, table_to_json,
)
from .verify import verify_all
from .weyl_core import TwistedType, folded_type, parse_label

FORMATS = ("text", "data", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")

    def print_help(self, file=None):
        raise _HelpShown(self.format_help())


class _HelpShown(Exception):
    pass


def _group(text: str) -> TwistedType:
    try:
        return TwistedType.parse(text)
    except StrataError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twisted-strata",
                     description="Unipotent character sheaves and strata of twisted groups.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_text, group=True):
        p = sub.add_parser(name, help=help_text)
        if group:
            p.add_argument("group", type=_group if name != "centralizer" else str,
                           help="2A:<n>, 2D:<n>, 2E6 or 3D4")
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", type=Path, help="write output here instead of stdout")
        return p

    verb("enumerate", "list all character-sheaf labels")
    verb("table", "print the tau table (2E6, 3D4)")
    verb("tau", "evaluate tau on one label").add_argument("--entry", required=True)
    verb("fiber", "list the tau-fibre over a stratum").add_argument("--stratum", required=True)
    verb("strata", "list strata labels with c(E) and |c(E)*|")
    p = verb("centralizer", "type of Z^0(s) for a cuspidal support")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--r", default="generic", help="2, 3 or generic")
    verb("verify", "run the full verification suite", group=False)
    return parser


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _cmd_enumerate(args):
    tt = args.group
    labels = enumerate_cs_prime(tt)
    if args.format == "data":
        return 0, _dump(labels_to_data(tt, labels))
    if args.format == "csv":
        return 0, labels_to_csv(tt, labels)
    return 0, "".join(f"{x}\n" for x in labels)


def _cmd_table(args):
    table = golden_table(args.group)
    if args.format == "data":
        return 0, table_to_json(table)
    if args.format == "csv":
        return 0, table_to_csv(table)
    return 0, render_table_text(table)


def _cmd_tau(args):
    tt = args.group
    x = parse_cs_label(tt, args.entry)
    value = tau(tt, x)
    if args.format == "data":
        return 0, _dump({"group": str(tt), "entry": str(x), "stratum": str(value)})
    if args.format == "csv":
        return 0, _csv(["group", "entry", "stratum"], [[str(tt), str(x), str(value)]])
    return 0, f"{value}\n"


def _cmd_fiber(args):
    tt = args.group
    stratum = parse_label(args.stratum, folded_type(tt))
    entries = fiber(tt, stratum)
    if args.format == "data":
        return 0, _dump(dict(labels_to_data(tt, entries), stratum=str(stratum)))
    if args.format == "csv":
        return 0, _csv(["group", "stratum", "entry_kind", "entry_text"],
                       [[str(tt), str(stratum), "plain" if x.is_plain else "cuspidal", str(x)]
                        for x in entries])
    return 0, "".join(f"{x}\n" for x in entries)


def _cmd_strata(args):
    tt = args.group
    rows = [(str(e), str(component_group(tt, e)), str(c_star(tt, e)), c_star(tt, e).size)
            for e in strata(tt)]
    if args.format == "data":
        return 0, _dump({"group": str(tt), "strata": [
            {"stratum": s, "box": b, "c_star": c, "c_star_size": n} for s, b, c, n in rows]})
    if args.format == "csv":
        return 0, _csv(["group", "stratum", "box", "c_star", "c_star_size"],
                       [[str(tt), *row] for row in rows])
    return 0, "".join(f"{s} [{b}] {c} size={n}\n" for s, b, c, n in rows)


def _cmd_centralizer(args):
    param = args.k if args.k is not None else args.d
    if param is None or (args.k is not None and args.d is not None):
        raise UsageError("twisted-strata centralizer: error: "
                         "give exactly one of --k (2A/2D) or --d (2E6/3D4)\n")
    family = args.group.strip().upper()
    if (family in ("2E6", "3D4")) != (args.d is not None):
        raise UsageError("twisted-strata centralizer: error: "
                         "use --d for 2E6/3D4 and --k for 2A/2D\n")
    target = family if family in ("2A", "2D", "2E6", "3D4") else TwistedType.parse(family)
    r = RClass.parse(args.r)
    value = centralizer_type(target, param, r)
    if args.format == "data":
        return 0, _dump({"group": str(target), "param": param, "r": r.value, "type": str(value)})
    if args.format == "csv":
        return 0, _csv(["group", "param", "r", "type"], [[str(target), param, r.value, str(value)]])
    return 0, f"{value}\n"


def _cmd_verify(args):
    report = verify_all()
    text = {"text": report.to_text, "data": report.to_json, "csv": report.to_csv}[args.format]()
    return report.exit_status, text


COMMANDS = {
    "enumerate": _cmd_enumerate, "table": _cmd_table, "tau": _cmd_tau, "fiber": _cmd_fiber,
    "strata": _cmd_strata, "centralizer": _cmd_centralizer, "verify": _cmd_verify,
}


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one command; returns (exit status, emitted text)."""
    try:
        args = build_parser().parse_args(argv)
        status, text = COMMANDS[args.verb](args)
    except _HelpShown as shown:
        return 0, str(shown)
    except UsageError as exc:
        return 2, str(exc)
    except StrataError as exc:
        return 3, f"error: {exc}\n"
    if args.out is not None:
        args.out.write_text(text)
        return status, ""
    return status, text


def main(argv: list[str] | None = None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    (sys.stderr if status >= 2 else sys.stdout).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
