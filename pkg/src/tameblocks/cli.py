"""Command line: ``tameblocks <command> ...`` (also ``python -m tameblocks``).

Exit status is 0 when the command succeeded and every expectation it
checks held, 1 when an expectation failed, 2 on bad input. With
``--format machine`` results and errors are JSON documents.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog as cat
from . import polyq
from .blocks import BlockData, TameBlockError
from .classifier import classify_dihedral_shortcut, match_templates
from .clifford import DEFAULT_CAP, SearchCapExceeded, induce_candidates, restrict_candidates
from .datasets import BUNDLED, DatasetError, load_bundled, load_dataset, run_batch
from .matrices import matrix_from_document, matrix_to_document
from .partitions import Partition, alt_dihedral_block_exists, ell_core

__all__ = ["main", "build_parser"]


class UsageError(ValueError):
    pass


def _emit(args, text: str, doc) -> None:
    if args.format == "machine":
        print(json.dumps(doc))
    else:
        print(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _solution_doc(sol) -> dict:
    return {
        "family": sol.family,
        "tag": sol.tag,
        "n": sol.n,
        "realizable": sol.realizable,
        "brauer": [str(b) for b in sol.brauer],
        "matrix": matrix_to_document(sol.matrix),
    }


# -- commands --------------------------------------------------------------


def cmd_classify(args) -> int:
    if args.degrees:
        if args.n is None:
            raise UsageError("--degrees needs --n")
        degrees = [int(x) for x in args.degrees.replace(" ", "").split(",") if x]
        blocks = [BlockData.from_degrees("input", args.n, degrees, args.family)]
    elif args.source:
        blocks = load_dataset(_read(args.source), args.source).blocks
    else:
        raise UsageError("give a dataset file (or -) or --degrees")
    status = 0
    docs, texts = [], []
    for block in blocks:
        if args.n is not None and not args.degrees:
            block = BlockData(block.group, args.n, block.characters, block.family, block.v2_order)
        sols = match_templates(block, args.family)
        doc = {"group": block.group, "n": block.n, "solutions": [_solution_doc(s) for s in sols]}
        lines = [f"{block.group} (n={block.n})"]
        if not sols:
            lines.append("  no tame template fits")
            status = 1
        for s in sols:
            lines.append(f"  {s}")
            lines += ["    " + ln for ln in s.matrix.to_text().splitlines()]
        if args.shortcut:
            try:
                tag = classify_dihedral_shortcut(block).tag
                dihedral = {s.tag for s in sols if s.family == "dihedral"}
                agree = dihedral == {tag}
                doc["shortcut"] = {"tag": tag, "agrees": agree}
                lines.append(f"  shortcut: {tag} ({'agrees' if agree else 'DISAGREES'})")
                if not agree:
                    status = 1
            except TameBlockError as exc:
                doc["shortcut"] = {"error": str(exc)}
                lines.append(f"  shortcut: undecided ({exc})")
        docs.append(doc)
        texts.append("\n".join(lines))
    _emit(args, "\n".join(texts), docs if len(docs) != 1 else docs[0])
    return status


def cmd_catalog(args) -> int:
    if args.list or not args.tag:
        rows = [c for c in cat.classes(args.family)]
        text = "\n".join(
            f"{c.family:<13} {c.tag:<6} n>={c.min_n}"
            + (f"  eliminated for n>={c.eliminated_from}" if c.eliminated_from else "")
            + (f"  same matrix as {c.matrix_twin}" if c.matrix_twin else "")
            + (f"  degree-ambiguous with {c.degree_twin}" if c.degree_twin else "")
            for c in rows
        )
        doc = [{"family": c.family, "tag": c.tag, "min_n": c.min_n, "eliminated_from": c.eliminated_from}
               for c in rows]
        _emit(args, text, doc)
        return 0
    if not args.family:
        raise UsageError("catalog needs --family with a tag")
    cls = cat.get_class(args.family, args.tag)
    n = args.n if args.n is not None else cls.min_n
    t = cat.template(cls, n)
    text = t.to_text()
    if cls.eliminated_at(n):
        text += f"\n  (no blocks in this class for n >= {cls.eliminated_from})"
    _emit(args, text, t.to_document())
    return 0


def cmd_core(args) -> int:
    lam = Partition.parse(args.partition)
    core, weight = ell_core(lam, args.ell)
    _emit(args, f"core={core} weight={weight}", {"partition": str(lam), "ell": args.ell,
                                                   "core": str(core), "weight": weight})
    return 0


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use e.g. 5..20") from None


def cmd_altblocks(args) -> int:
    r = _range(args.range)
    result = {n: alt_dihedral_block_exists(n) for n in r}
    hits = [n for n, ok in result.items() if ok]
    text = "\n".join(f"n={n} {'true' if ok else 'false'}" for n, ok in result.items())
    text += f"\ntrue at: {', '.join(map(str, hits)) or 'none'}"
    _emit(args, text, {"true_at": hits, "range": [r.start, r.stop - 1]})
    return 0


def cmd_extend(args) -> int:
    m = matrix_from_document(_read(args.source))
    fn = induce_candidates if args.direction == "up" else restrict_candidates
    cands = fn(m, args.k, args.l, cap=args.cap, target_family=args.family)
    docs, texts = [], []
    for i, (pattern, cand) in enumerate(cands, 1):
        docs.append({"column_orbits": [list(o) for o in pattern.column_orbits],
                     "split_rows": pattern.split_rows, "fused_pairs": pattern.fused_pairs,
                     "brauer_known": pattern.brauer_known, "matrix": matrix_to_document(cand)})
        note = "" if pattern.brauer_known else "  (Brauer degrees unknown: columns paired freely)"
        texts.append(f"candidate {i}: column orbits {list(pattern.column_orbits)}{note}\n{cand.to_text()}")
    if not cands:
        texts.append("no candidates")
    _emit(args, "\n\n".join(texts), docs)
    return 0 if cands else 1


def _poly(text: str) -> polyq.IntPoly:
    return polyq.parse_poly(text)


def cmd_poly(args) -> int:
    op = args.op
    if op == "cyclotomic":
        p = polyq.cyclotomic(int(args.arg))
        _emit(args, str(p), {"d": int(args.arg), "poly": str(p)})
    elif op == "is-cyclotomic":
        d = polyq.is_cyclotomic(_poly(args.arg))
        _emit(args, "not cyclotomic" if d is None else f"Phi_{d}", {"d": d})
    elif op == "bound":
        p = _poly(args.arg)
        b, c = polyq.root_bound(p), polyq.cauchy_bound(p)
        _emit(args, f"root bound {b} (Cauchy {c})", {"bound": str(b), "cauchy": str(c)})
    elif op == "roots":
        roots = polyq.positive_integer_roots(_poly(args.arg))
        _emit(args, " ".join(map(str, roots)) or "none", {"roots": roots})
    elif op == "eval":
        if args.q is None:
            raise UsageError("poly eval needs --q")
        value = polyq.evaluate(_poly(args.arg), args.q)
        _emit(args, str(value), {"value": str(value)})
    elif op == "v2":
        m = int(args.arg)
        _emit(args, str(polyq.v2(m)), {"v2": polyq.v2(m)})
    elif op == "coincide":
        if args.table:
            table = polyq.load_poly_table(_read(args.table).splitlines())
        else:
            table = list(polyq.DEGREE_TABLES[args.group or "psl2"])
        hits = polyq.degree_coincides(_poly(args.arg), table, args.q_min)
        text = "\n".join(f"q={h.q} entry {h.index}: {table[h.index]}" for h in hits) or "no coincidences"
        _emit(args, text, {"hits": [{"q": str(h.q), "index": h.index} for h in hits]})
    return 0


def _print_batch(args, name: str, results) -> bool:
    ok = all(r.ok for r in results)
    texts, docs = [], []
    for r in results:
        b = r.record.block
        exp = ",".join(r.record.expected or ()) or "-"
        texts.append(f"{'ok  ' if r.ok else 'FAIL'} {b.group:<8} matched {{{', '.join(r.matched) or '-'}}}"
                     f"  expected {{{exp}}}" + "".join(f"\n       {n}" for n in r.notes))
        docs.append({"group": b.group, "ok": r.ok, "matched": list(r.matched),
                     "expected": list(r.record.expected or ()), "notes": list(r.notes),
                     "brauer": {s.tag: [str(x) for x in s.brauer] for s in r.solutions}})
    passed = sum(r.ok for r in results)
    texts.append(f"{name}: {passed}/{len(results)} match")
    _emit(args, "\n".join(texts), {"dataset": name, "passed": passed, "total": len(results), "records": docs})
    return ok


def cmd_batch(args) -> int:
    if args.dataset in BUNDLED:
        ds = load_bundled(args.dataset)
    else:
        ds = load_dataset(_read(args.dataset), args.dataset)
    return 0 if _print_batch(args, ds.name, run_batch(ds)) else 1


def cmd_selftest(args) -> int:
    ok = True
    for name in BUNDLED:
        ok &= _print_batch(args, name, run_batch(load_bundled(name)))
    # family generators against the classifier; extra realizable matches
    # are degree coincidences (two equal Brauer degrees), reported not failed
    bad, ambiguous = [], []
    for fam in cat.FAMILY_NAMES:
        for q in range(3, 200, 2):
            try:
                fb = cat.family_block(fam, q)
            except cat.CatalogError:
                continue
            if fb.morita_class is None:
                continue
            tags = {s.tag for s in match_templates(fb.block) if s.realizable}
            if fb.morita_class.tag not in tags:
                bad.append(f"{fam}({q}): {sorted(tags)}")
            elif len(tags) > 1:
                ambiguous.append(f"{fam}({q}): {sorted(tags)}")
    ok &= not bad
    text = "family generators: " + ("ok" if not bad else "FAIL " + "; ".join(bad))
    if ambiguous:
        text += f"\n  {len(ambiguous)} blocks also fit a second class, e.g. {ambiguous[0]}"
    _emit(args, text, {"family_generators": {"ok": not bad, "failures": bad, "ambiguous": ambiguous}})
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")

    p = argparse.ArgumentParser(prog="tameblocks", description="Decomposition matrices of tame 2-blocks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="match block degrees against the catalog")
    s.add_argument("source", nargs="?", help="dataset file, or - for stdin")
    s.add_argument("--degrees", help="comma-separated degrees instead of a file")
    s.add_argument("--family", choices=cat.FAMILIES)
    s.add_argument("--n", type=int)
    s.add_argument("--shortcut", action="store_true", help="also run the dihedral degree recipe")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("catalog", parents=[common], help="print a template")
    s.add_argument("tag", nargs="?")
    s.add_argument("--family", choices=cat.FAMILIES)
    s.add_argument("--n", type=int)
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("core", parents=[common], help="ell-core and weight of a partition")
    s.add_argument("partition", help='e.g. "8,1"; "-" is the empty partition')
    s.add_argument("--ell", type=int, default=2)
    s.set_defaults(func=cmd_core)

    s = sub.add_parser("altblocks", parents=[common], help="Alt(n) blocks with dihedral defect groups")
    s.add_argument("range", help="e.g. 5..20")
    s.set_defaults(func=cmd_altblocks)

    s = sub.add_parser("extend", parents=[common], help="index-2 Clifford candidates")
    s.add_argument("source", help="matrix document (JSON), or - for stdin")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--direction", choices=("up", "down"), default="up")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--family", choices=cat.FAMILIES, help="keep only candidates with this family's heights")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("poly", parents=[common], help="polynomials in q")
    s.add_argument("op", choices=("cyclotomic", "is-cyclotomic", "bound", "roots", "eval", "v2", "coincide"))
    s.add_argument("arg")
    s.add_argument("--q", type=int, help="value for eval")
    s.add_argument("--q-min", type=int, default=2)
    s.add_argument("--table", help="file with one degree polynomial per line")
    s.add_argument("--group", choices=sorted(polyq.DEGREE_TABLES), help="bundled degree table")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("batch", parents=[common], help="classify a dataset and compare with expected tags")
    s.add_argument("dataset", help=f"bundled name ({', '.join(BUNDLED)}) or a file")
    s.set_defaults(func=cmd_batch)

    s = sub.add_parser("selftest", parents=[common], help="bundled data and generator checks")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DatasetError, cat.CatalogError, TameBlockError, SearchCapExceeded, ValueError,
            OSError) as exc:
        kind = type(exc).__name__
        if args.format == "machine":
            record = exc.to_record() if isinstance(exc, DatasetError) else {"error": str(exc)}
            record["kind"] = kind
            print(json.dumps(record), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
