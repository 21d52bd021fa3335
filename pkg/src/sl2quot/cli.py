"""Command-line front end: ``sl2quot <command> ...``.

Exit status is 0 on success (an undetermined verdict is a success) and 2 on
usage or data errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from pathlib import Path
from typing import List, Optional, Sequence

from . import orbits
from .classify import ClassifyError, classify_dimension, d4_report, distinguish, space
from .invariants import homotopy_report, is_quite_even
from .ktheory import DEFAULT_PRIME_BOUND, KTheoryError, cached_profile, format_reduced, separating_prime
from .rootdata import RootDataError, group_type
from .sl2restrict import RestrictionError, dynkin_index

FORMATS = ("json", "md", "csv")
EXIT_OK = 0
EXIT_USAGE = 2


# -- rendering -----------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "Y" if v else "N"
    if isinstance(v, (list, tuple)):
        if not v:
            return ""
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


def _flatten(doc, prefix="") -> List[tuple]:
    out = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            out += _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(doc, list) and doc and isinstance(doc[0], dict):
        for i, v in enumerate(doc):
            out += _flatten(v, f"{prefix}[{i}]")
    else:
        out.append((prefix, _cell(doc)))
    return out


def render_table(columns: Sequence[str], rows: Sequence[Sequence], fmt: str, title: str = "", meta=None) -> str:
    if fmt == "json":
        doc = {"table": title, "columns": list(columns), "rows": [dict(zip(columns, r)) for r in rows]}
        if meta:
            doc.update(meta)
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(v) for v in r])
        return buf.getvalue()
    lines = []
    if title:
        lines += [f"## {title}", ""]
    if meta:
        lines += [f"- {k}: {_cell(v)}" for k, v in meta.items()] + [""]
    lines.append("| " + " | ".join(columns) + " |")
    lines.append("|" + "|".join("---" for _ in columns) + "|")
    for r in rows:
        lines.append("| " + " | ".join(_cell(v) for v in r) + " |")
    return "\n".join(lines) + "\n"


def render_doc(doc: dict, fmt: str, title: str = "") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return render_table(("key", "value"), _flatten(doc), fmt, title)


# -- commands --------------------------------------------------------------------

def space_doc(c: orbits.UnipotentClass) -> dict:
    return {
        "group": c.group.name,
        "label": c.label,
        "partition": str(c.partition) if c.partition else None,
        "very_even": c.very_even,
        "diagram": list(c.diagram),
        "trivial": c.trivial,
    }


def info_doc(group: str, label: str, prime_bound: int, data_dir=None) -> dict:
    s = space(group, label, data_dir)
    c = s.cls
    kt = None if c.trivial else cached_profile(c, prime_bound).to_json()
    return {"space": space_doc(c), "homotopy": homotopy_report(c).to_json(), "ktheory": kt}


def cmd_info(args) -> str:
    return render_doc(info_doc(args.group, args.cls, args.prime_bound, args.data_dir), args.format, f"{args.group} {args.cls}")


def cmd_enumerate(args) -> str:
    g = group_type(args.group)
    rows = []
    for c in orbits.enumerate_classes(g, include_trivial=args.include_trivial, data_dir=args.data_dir):
        rows.append((c.label, list(c.diagram), dynkin_index(c), is_quite_even(c), orbits.orbit_dimension(c)))
    return render_table(("class", "diagram", "index", "quite_even", "orbit_dim"), rows, args.format, f"classes of {g.name}")


def cmd_distinguish(args) -> str:
    a = space(args.group_a, args.class_a, args.data_dir)
    b = space(args.group_b, args.class_b, args.data_dir)
    v = distinguish(a, b, args.prime_bound)
    doc = {"a": a.name, "b": b.name, "prime_bound": args.prime_bound, "verdict": v.to_json()}
    return render_doc(doc, args.format, "verdict")


def cmd_classify_dim(args) -> str:
    rep = classify_dimension(args.n, args.prime_bound, args.data_dir)
    doc = rep.to_json()
    if args.format == "json":
        return render_doc(doc, "json")
    rows = [(d["a"], d["b"], "; ".join(d["notes"] + d["flags"])) for d in doc["undetermined"]]
    meta = {
        "dim_x": rep.dim_x,
        "groups": ",".join(doc["groups"]),
        "spaces": doc["space_count"],
        "pairs": doc["pair_count"],
        "prime_bound": rep.prime_bound,
    }
    meta.update({f"witness {k}": n for k, n in doc["witness_counts"].items()})
    if args.format == "md":
        return render_table(("a", "b", "notes"), rows, "md", f"undetermined pairs in dimension {rep.dim_x}", meta)
    return render_table(("a", "b", "notes"), rows, "csv")


# -- case-study tables ----------------------------------------------------------

def shared_index_rows(group: str):
    """Classes whose Dynkin index is shared with another class of the group."""
    cs = orbits.enumerate_classes(group)
    order = {c: i for i, c in enumerate(cs)}
    count = Counter(dynkin_index(c) for c in cs)
    keep = [c for c in cs if count[dynkin_index(c)] > 1]
    return sorted(keep, key=lambda c: (-dynkin_index(c), order[c]))


def orbit_table(group: str):
    rows = [(str(c.partition), list(c.diagram), dynkin_index(c), is_quite_even(c)) for c in shared_index_rows(group)]
    return ("partition", "diagram", "index", "quite_even"), rows


def reduced_ideal_table(prime_bound: int):
    """B6 classes left after index and quite-even status, with a separating prime."""
    cs = shared_index_rows("B6")
    key = Counter((dynkin_index(c), is_quite_even(c)) for c in cs)
    left = [c for c in cs if key[(dynkin_index(c), is_quite_even(c))] > 1]
    rows = []
    for c in left:
        mates = [d for d in left if d != c and dynkin_index(d) == dynkin_index(c) and is_quite_even(d) == is_quite_even(c)]
        prof = cached_profile(c, prime_bound)
        hits = [separating_prime(prof, cached_profile(d, prime_bound)) for d in mates]
        hits = [h for h in hits if h is not None]
        if hits:
            p = min(h[0] for h in hits)
            rows.append((str(c.partition), dynkin_index(c), p, format_reduced(p, prof.eval_point, prof.per_prime[p])))
        else:
            rows.append((str(c.partition), dynkin_index(c), "-", "no suitable p found"))
    return ("partition", "index", "prime", "reduced_ideal"), rows


def d4_table(prime_bound: int):
    rep = d4_report(prime_bound)
    rows = [(r["partition"], r["index"], r["quite_even"]) for r in rep["rows"]]
    distinct = all(p["outcome"] == "Distinct" for p in rep["pairs"])
    return ("partition", "index", "quite_even"), rows, {"all_pairs_distinct": distinct}


def case_study_tables(prime_bound: int):
    b6 = orbit_table("B6")
    c6 = orbit_table("C6")
    iu = reduced_ideal_table(prime_bound)
    d4 = d4_table(prime_bound)
    return {
        "b6_orbits": (b6[0], b6[1], None),
        "c6_orbits": (c6[0], c6[1], None),
        "iu_mod_p": (iu[0], iu[1], {"prime_bound": prime_bound}),
        "d4": d4,
    }


def cmd_reproduce(args) -> str:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (cols, rows, meta) in case_study_tables(args.prime_bound).items():
        path = out / f"{name}.{args.format}"
        path.write_text(render_table(cols, rows, args.format, name, meta))
        written.append(str(path))
    return "\n".join(written) + "\n"


# -- parser ------------------------------------------------------------------------

def _prime_bound(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("prime bound must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--prime-bound", type=_prime_bound, default=DEFAULT_PRIME_BOUND)
    common.add_argument("--data-dir", default=None, help="directory with exceptional orbit tables (else $ORBIT_DATA_DIR)")
    parser = argparse.ArgumentParser(prog="sl2quot", description="Invariants of G/phi_u(SL2) for unipotent classes u.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="invariants of one space")
    p.add_argument("group")
    p.add_argument("cls", metavar="class")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("enumerate", parents=[common], help="list the classes of a group")
    p.add_argument("group")
    p.add_argument("--include-trivial", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("distinguish", parents=[common], help="compare two spaces")
    p.add_argument("group_a")
    p.add_argument("class_a")
    p.add_argument("group_b")
    p.add_argument("class_b")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("classify-dim", parents=[common], help="all spaces of a given dimension")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_classify_dim)

    p = sub.add_parser("reproduce-paper", parents=[common], help="write the case-study tables")
    p.add_argument("--out-dir", default="tables")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.data_dir is None:
        env = orbits.default_data_dir()
        args.data_dir = str(env) if env else None
    try:
        text = args.func(args)
    except (RootDataError, orbits.OrbitError, RestrictionError, KTheoryError, ClassifyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
