"""``coxrig`` command line.

Exit codes: 3 on any input or usage error; otherwise per subcommand
(check: 0 in class / 1 not; iso: 0 isomorphic / 1 not;
verify: 0 rigid / 1 non-rigid / 2 search limits hit).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from . import finite_type, gf2, oracle
from .group_engine import DEFAULT_MAX_COSETS, CapExceeded, todd_coxeter
from .matrix import INF, CoxeterMatrix, CoxeterParseError, diagram_isomorphic, induced_submatrix, \
    parse_coxeter_file
from .rigidity_class import check_class_membership

EXIT_ERROR = 3


class UsageError(Exception):
    pass


def _one_based(seq) -> list:
    return [x + 1 for x in seq]


def _load(path: str) -> CoxeterMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    try:
        return parse_coxeter_file(text)
    except CoxeterParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit(out, payload: dict, as_json: bool, human_lines):
    if as_json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for line in human_lines:
            out.write(line + "\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _labels(text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "inf":
            out.append(INF)
        elif tok.isdigit() and int(tok) >= 2:
            out.append(int(tok))
        else:
            raise argparse.ArgumentTypeError(f"bad label {tok!r}")
    return out


def cmd_check(args, out) -> int:
    m = _load(args.file)
    rep = check_class_membership(m)
    payload = rep.to_json()
    lines = [f"in class: {'yes' if rep.in_class else 'no'}"]
    for k, ok in enumerate(rep.conditions):
        w = payload["witnesses"].get(str(k))
        lines.append(f"  ({k}) {'ok' if ok else 'FAILS'}" + (f"  witness {w}" if w else ""))
    lines.append(f"evenness: {rep.evenness}")
    lines.append(f"strong-even core: {payload['s_bar']}")
    lines.append(f"odd pairs: {payload['odd_pairs']}")
    _emit(out, payload, args.json, lines)
    return 0 if rep.in_class else 1


def cmd_spherical(args, out) -> int:
    m = _load(args.file)
    rep = check_class_membership(m)
    fam = finite_type.maximal_spherical_subsets(m)
    indep = finite_type.maximal_independent_subsets(m, rep.s_bar)
    types = []
    for T in fam:
        labels = finite_type.classify_finite_type(induced_submatrix(m, T)) or []
        types.append(" x ".join(str(lab) for lab in labels) or "trivial")
    payload = {
        "maximal_spherical": [_one_based(T) for T in fam],
        "types": types,
        "s_bar": _one_based(rep.s_bar),
        "maximal_independent": [_one_based(T) for T in indep],
    }
    lines = ["maximal spherical subsets:"]
    lines += [f"  {_one_based(T)}  {t}" for T, t in zip(fam, types)]
    lines.append(f"strong-even core: {payload['s_bar']}")
    lines.append("maximal independent subsets of the core:")
    lines += [f"  {_one_based(T)}" for T in indep]
    _emit(out, payload, args.json, lines)
    return 0


def cmd_iso(args, out) -> int:
    m1, m2 = _load(args.file1), _load(args.file2)
    psi = diagram_isomorphic(m1, m2)
    payload = {"isomorphic": psi is not None,
               "bijection": None if psi is None else {str(i + 1): p + 1 for i, p in enumerate(psi)}}
    if psi is None:
        lines = ["not isomorphic"]
    else:
        lines = [" ".join(f"{i + 1}->{p + 1}" for i, p in enumerate(psi))]
    _emit(out, payload, args.json, lines)
    return 0 if psi is not None else 1


def cmd_abelianize(args, out) -> int:
    m = _load(args.file)
    comps = gf2.odd_components(m)
    rep = check_class_membership(m)
    subsets = {"all": tuple(range(m.rank)), "s_bar": rep.s_bar}
    for T in finite_type.maximal_spherical_subsets(m):
        subsets[",".join(map(str, _one_based(T)))] = T
    for raw in args.subset or []:
        try:
            idx = tuple(int(x) - 1 for x in raw.split(",") if x.strip())
        except ValueError as exc:
            raise UsageError(f"bad subset {raw!r}") from exc
        if any(not 0 <= i < m.rank for i in idx):
            raise UsageError(f"subset {raw!r} out of range")
        subsets[raw] = idx
    dims = {name: gf2.pi_image(m, T, comps).dim for name, T in subsets.items()}
    payload = {
        "k": comps.count,
        "components": [_one_based(c) for c in comps.partition()],
        "image_dims": dims,
        "core_images_distinct": gf2.core_images_distinct(m, rep.s_bar) if rep.in_class else None,
    }
    lines = [f"W^ab = Z2^{comps.count}",
             "odd components: " + " ".join(str(_one_based(c)) for c in comps.partition())]
    lines += [f"  dim pi(W_{name}) = {d}" for name, d in dims.items()]
    _emit(out, payload, args.json, lines)
    return 0


def cmd_verify(args, out) -> int:
    m = _load(args.file)
    limits = oracle.Limits(max_order=args.max_order, max_gens=args.max_gens,
                           max_cosets=args.max_cosets)
    try:
        verdict = oracle.rigidity_verdict(m, limits)
    except oracle.InfiniteGroup as exc:
        raise UsageError(str(exc)) from exc
    except (oracle.LimitExceeded, CapExceeded) as exc:
        payload = {"rigid": None, "exhausted": False, "error": str(exc),
                   "limits": limits.to_json()}
        _emit(out, payload, args.json, [f"limits hit: {exc}"])
        return 2
    if args.dump_table:
        sys.stderr.write(todd_coxeter(m, limits.max_cosets).dump() + "\n")
    payload = verdict.to_json()
    lines = [f"|W| = {verdict.order}, {len(verdict.classes)} diagram class(es):"]
    for c in verdict.classes:
        lines.append(f"  {' x '.join(c.labels)}  generators {list(c.representative)}"
                     f"  ({c.members} generating sets)")
    if not verdict.rigid:
        lines.append("not rigid")
    elif verdict.exhausted:
        lines.append("rigid")
    else:
        lines.append("no second class found within limits")
    _emit(out, payload, args.json, lines)
    if not verdict.rigid:
        return 1
    return 0 if verdict.exhausted else 2


def census_records(rank: int, labels: list):
    """Every rank-n matrix over ``labels``, pairs in lexicographic order."""
    pairs = [(i, j) for i in range(rank) for j in range(i + 1, rank)]
    for values in itertools.product(labels, repeat=len(pairs)):
        m = CoxeterMatrix.from_pairs(rank, dict(zip(pairs, values)))
        rep = check_class_membership(m)
        yield {"matrix": m.to_json(), "in_class": rep.in_class, "evenness": rep.evenness}


def cmd_census(args, out) -> int:
    for record in census_records(args.rank, args.labels):
        out.write(json.dumps(record, sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)

    parser = argparse.ArgumentParser(prog="coxrig", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test conditions (0)-(3)")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spherical", parents=[common], help="maximal spherical/independent subsets")
    p.add_argument("file")
    p.set_defaults(func=cmd_spherical)

    p = sub.add_parser("iso", parents=[common], help="diagram isomorphism of two files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("abelianize", parents=[common], help="odd components and abelian images")
    p.add_argument("file")
    p.add_argument("--subset", action="append", help="1-based comma list, repeatable")
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("verify", parents=[common], help="brute-force rigidity search")
    p.add_argument("file")
    p.add_argument("--max-order", type=_positive, default=oracle.Limits.max_order)
    p.add_argument("--max-gens", type=_positive, default=oracle.Limits.max_gens)
    p.add_argument("--dump-table", action="store_true", help="print the coset table to stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="stream class membership of all matrices")
    p.add_argument("--rank", type=_positive, required=True)
    p.add_argument("--labels", type=_labels, default=_labels("2,3,4,5,6,inf"))
    p.set_defaults(func=cmd_census)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"coxrig: {exc}\n")
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
