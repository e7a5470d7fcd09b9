# Copyright 2026 The Bridgekit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Command line front end: `bridgekit SUBCOMMAND ... [--format json|text]`.

Every subcommand prints one result on stdout. JSON results carry a
"command" key and are dumped with sorted keys. Exit codes: 0 on success,
1 on syntax, validation or consistency errors, 2 when the input lies
outside the case coverage of a classification.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

from absl import logging
from tabulate import tabulate

from . import __version__
from .census import (
    all_merge_signs,
    census,
    census_sweep,
    elliptic_symmetry_group,
    genus2_heegaard_count,
    merge_conditions,
    merge_partition,
    montesinos_merge_edges,
    spheres_isotopic_L1,
)
from .errors import BridgekitError, ConsistencyError, CoverageError, ValidationError
from .groups import (
    SfsGroup,
    brute_force_solutions,
    parse_word,
    peripheral_membership,
    predicted_solutions,
    quotient_conjugate,
    solution_families,
)
from .links import L1Link, MontesinosLink, parse_group, parse_link, parse_seifert, serialize
from .types import Window
from .utils import format_signs

Payload = dict[str, Any]

WORD_ARITY = {"normalize": 1, "multiply": 2, "invert": 1, "conjugate": 2, "peripheral": 1}


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as `ValidationError` so they exit with 1."""

    def error(self, message: str) -> NoReturn:
        raise ValidationError(f"{self.prog}: {message}")


def _group(text: str) -> SfsGroup:
    return SfsGroup.from_pair(parse_group(text))


def _sphere_list(labels: Sequence[Any]) -> str:
    return "{" + ",".join(str(s) for s in labels) + "}"


def _kv(rows: Sequence[tuple[str, Any]]) -> str:
    return tabulate(rows, tablefmt="plain")


# subcommands return (json payload, text rendering)


def cmd_classify(args: argparse.Namespace) -> tuple[Payload, str]:
    link = parse_link(args.link)
    cover = link.branched_cover()
    payload = {
        "command": "classify",
        "link": link.emit(),
        "family": link.family,
        "config": serialize(link)["config"],
        "cover": cover.to_dict(),
    }
    rows: list[tuple[str, Any]] = [("link", link.emit()), ("family", link.family), ("cover", cover.form)]
    rows += [(f"  {p.name}", str(p)) for p in cover.pieces]
    rows += [("  glue", f"{i}-{j} {tag}") for i, j, tag in cover.gluings]
    return payload, _kv(rows)


def _parse_sweep(text: str) -> int:
    key, _, value = text.rpartition("=")
    if key not in ("", "alpha_max"):
        raise ValidationError(f"--sweep expects alpha_max=N, got {text!r}")
    try:
        alpha_max = int(value)
    except ValueError:
        raise ValidationError(f"--sweep expects alpha_max=N, got {text!r}")
    if alpha_max < 2:
        raise ValidationError(f"alpha_max must be at least 2, got {alpha_max}")
    return alpha_max


def cmd_census(args: argparse.Namespace) -> tuple[Payload, str]:
    if (args.link is None) == (args.sweep is None):
        raise ValidationError("census expects either a LINK or --sweep alpha_max=N")
    if args.sweep is not None:
        alpha_max = _parse_sweep(args.sweep)
        df = census_sweep(alpha_max, verbose=args.verbose)
        records = [
            {"link": r.link, "case": r.case, "mu": int(r.mu), "exact": bool(r.exact)}
            for r in df.itertuples(index=False)
        ]
        payload = {"command": "census", "sweep": {"alpha_max": alpha_max}, "rows": records}
        return payload, df.to_csv(index=False).rstrip("\n")
    result = census(parse_link(args.link))
    payload = {"command": "census"} | result.to_dict()
    rows: list[tuple[str, Any]] = [("link", result.link), ("family", result.family), ("case", result.case)]
    rows += [("spheres", _sphere_list(result.spheres))]
    rows += [("classes", " ".join(_sphere_list(block) for block in result.classes))]
    rows += [("mu", result.mu), ("exact", result.exact)]
    return payload, _kv(rows)


def cmd_isotopic(args: argparse.Namespace) -> tuple[Payload, str]:
    link = parse_link(args.link)
    if not isinstance(link, L1Link):
        raise ValidationError(f"isotopic expects an L1 link, got {link.family}")
    verdict = spheres_isotopic_L1(link, args.i, args.j)
    payload = {"command": "isotopic", "link": link.emit(), "i": args.i, "j": args.j, "isotopic": verdict}
    return payload, f"S{args.i} {'~' if verdict else '!~'} S{args.j}"


def cmd_word(args: argparse.Namespace) -> tuple[Payload, str]:
    arity = WORD_ARITY[args.op]
    if len(args.words) != arity:
        raise ValidationError(f"word {args.op} takes {arity} word(s), got {len(args.words)}")
    group = _group(args.group)
    words = [parse_word(group, text) for text in args.words]
    payload: Payload = {"command": "word", "op": args.op, "group": str(group)}
    if args.op == "normalize":
        payload["result"] = str(words[0])
    elif args.op == "multiply":
        payload["result"] = str(words[0] * words[1])
    elif args.op == "invert":
        payload["result"] = str(~words[0])
    elif args.op == "conjugate":
        payload["result"] = quotient_conjugate(group, words[0], words[1])
    else:
        pq = peripheral_membership(group, words[0])
        payload["result"] = None if pq is None else list(pq)
    result = payload["result"]
    if args.op == "peripheral":
        text = "not peripheral" if result is None else f"(c1 c2)^{result[0]} h^{result[1]}"
    else:
        text = str(result)
    return payload, text


def cmd_solve_w(args: argparse.Namespace) -> tuple[Payload, str]:
    group = _group(args.group)
    window = Window.from_string(args.window) if args.window else Window.from_env()
    predicted = predicted_solutions(group, window)
    families = solution_families(group, window)
    payload: Payload = {
        "command": "solve-w",
        "group": str(group),
        "window": str(window),
        "families": [
            {"label": f.label, "a": f.a, "c": f.c, "target": str(f.target), "total": f.total} for f in families
        ],
        "solutions": [s.to_json() for s in sorted(predicted)],
        "oracle": None,
    }
    if args.check_oracle:
        found = brute_force_solutions(group, window, verbose=args.verbose)
        if found != predicted:
            missing = sorted(s.to_json() for s in found - predicted)
            extra = sorted(s.to_json() for s in predicted - found)
            raise ConsistencyError(f"predicted != brute-force on {group}: missing {missing}, extra {extra}")
        payload["oracle"] = "OK"
        return payload, f"predicted == brute-force: OK ({len(predicted)} solutions)"
    rows = [s.to_json() for s in sorted(predicted)]
    return payload, tabulate(rows, headers=["a", "b", "c", "d", "w ="])


def cmd_heegaard(args: argparse.Namespace) -> tuple[Payload, str]:
    inv = parse_seifert(args.manifold)
    count = genus2_heegaard_count(inv)
    payload = {"command": "heegaard", "manifold": str(inv)} | count.to_dict()
    rows: list[tuple[str, Any]] = [("manifold", str(inv)), ("count", count.count)]
    rows += [("surface", label) for label in count.labels]
    if count.family is not None:
        rows.append(("exceptional", count.family))
    return payload, _kv(rows)


def _montesinos(text: str) -> MontesinosLink:
    link = parse_link(text)
    if not isinstance(link, MontesinosLink):
        raise ValidationError(f"expected a Montesinos link, got {link.family}")
    return link


def cmd_symmetry(args: argparse.Namespace) -> tuple[Payload, str]:
    link = _montesinos(args.link)
    group = elliptic_symmetry_group(link)
    payload = {"command": "symmetry", "link": link.emit()} | group.to_dict()
    rows: list[tuple[str, Any]] = [("link", link.emit()), ("Sym", group.name)]
    rows += [("generators", ", ".join(group.generators)), ("case", group.case), ("m", group.m)]
    return payload, _kv(rows)


def cmd_merge_graph(args: argparse.Namespace) -> tuple[Payload, str]:
    link = _montesinos(args.link)
    edges = montesinos_merge_edges(link)
    blocks = merge_partition(link)
    signs = all_merge_signs(link)
    payload = {
        "command": "merge-graph",
        "link": link.emit(),
        "conditions": merge_conditions(link),
        "edges": [[str(p), str(q)] for p, q in edges],
        "classes": [[str(s) for s in block] for block in blocks],
        "signs": None if signs is None else list(signs),
    }
    rows: list[tuple[str, Any]] = [("link", link.emit())]
    rows += [("conditions", " ".join(c for c, ok in merge_conditions(link).items() if ok) or "-")]
    rows += [("edges", " ".join(f"{p}-{q}" for p, q in edges) or "-")]
    rows += [("classes", " ".join(_sphere_list(block) for block in blocks))]
    if signs is not None:
        rows.append(("signs", format_signs(signs)))
    return payload, _kv(rows)


def write_json(payload: Payload, text: str) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def write_text(payload: Payload, text: str) -> str:
    return text


WRITERS = {"json": write_json, "text": write_text}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=sorted(WRITERS), default="text", help="output format")
    common.add_argument("--verbose", "-v", action="count", default=0, help="log progress on stderr")

    parser = _Parser(prog="bridgekit", description="3-bridge spheres of arborescent links")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="parse a link and describe its branched cover")
    p.add_argument("link")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", parents=[common], help="3-bridge spheres up to isotopy")
    p.add_argument("link", nargs="?")
    p.add_argument("--sweep", metavar="alpha_max=N", help="census the L1 grid instead, as CSV")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("isotopic", parents=[common], help="are S_i and S_j of an L1 link isotopic")
    p.add_argument("link")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_isotopic)

    p = sub.add_parser("word", parents=[common], help="normal forms in D(β1/α1,β2/α2)")
    p.add_argument("op", choices=sorted(WORD_ARITY))
    p.add_argument("words", nargs="+")
    p.add_argument("--group", required=True, help='e.g. "D(1/2,1/3)"')
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("solve-w", parents=[common], help="solutions of w(a,b,c,d) = η^±1")
    p.add_argument("--group", required=True, help='e.g. "D(1/2,1/3)"')
    p.add_argument("--window", help="AC,BD bounds, defaults to $BRIDGEKIT_WINDOW or 3,10")
    p.add_argument("--check-oracle", action="store_true", help="compare with a brute-force scan")
    p.set_defaults(func=cmd_solve_w)

    p = sub.add_parser("heegaard", parents=[common], help="genus 2 Heegaard surfaces of S2(b; s,s,s)")
    p.add_argument("manifold")
    p.set_defaults(func=cmd_heegaard)

    p = sub.add_parser("symmetry", parents=[common], help="symmetry group of an elliptic Montesinos link")
    p.add_argument("link")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("merge-graph", parents=[common], help="merge graph of P1..P6")
    p.add_argument("link")
    p.set_defaults(func=cmd_merge_graph)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Runs one subcommand and returns the exit code."""
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.set_verbosity(logging.DEBUG if args.verbose > 1 else logging.INFO)
        payload, text = args.func(args)
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)
    except CoverageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BridgekitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(WRITERS[args.format](payload, text))
    return 0


def main() -> None:
    sys.exit(run())
