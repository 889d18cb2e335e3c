"""Command-line interface.

Exit status: 0 on success, 1 when the fixture suite (or an internal check)
fails, 2 on invalid input or usage errors.

``--format json`` output for ``hpp``, ``seq`` and ``smooth-all`` follows one
schema::

    {"word", "n", "distinct_count",
     "hpps": [{"name", "sequence": {"text", "components": [{"cyclic", "tokens"}]},
               "orientations": {"g", "gr", "gm", "gmr"},
               "smoothings": [{"vertex", "kind", "sequence"}]}]}

Tokens are ``{"ies": k, "text": "Ik"}`` or ``{"mds": [signed parts], "text": ...}``.
``graph --dot`` prints DOT: nodes ``v0 .. v{n+1}``, one ``->`` statement per
edge labelled ``eK``, with ``style=dashed`` on edges used by ``--hpp``.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import MicronucError
from .graph import build_graph, to_dot
from .hpp import enumerate_hpps, find_hpp
from .label import micronuclear_sequence
from .seq import ORIENTATIONS, distinct_count, orientation_closure, render, sequence_json
from .smooth import apply_smoothing
from .verify.fixtures import run_fixture_suite
from .verify.oracles import MAX_N
from .word import canonical_words, canonicalize, parse_word, render_word

ORIENT_LABELS = dict(zip(ORIENTATIONS, ("G", "G^R", "G^-", "G^-R")))


class UsageError(Exception):
    pass


def _graph(text):
    word = parse_word(text)
    return word, build_graph(canonicalize(word))


def _emit(args, payload, text):
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text)


def _orientations(graph, hpp, wanted):
    closure = orientation_closure(micronuclear_sequence(graph, hpp), graph.n)
    return {k: s for k, s in zip(ORIENTATIONS, closure) if wanted in ("all", k)}


def _smoothings(graph, hpp, drop):
    out = []
    for v in hpp.vertex_order:
        o = apply_smoothing(graph, hpp, v)
        seq = o.sequence.without_ies_circles() if drop else o.sequence
        out.append((v, o.kind, seq))
    return out


def word_report(graph, hpps, orient="all", smoothings=False, drop=False):
    entries = []
    for h in hpps:
        entry = {
            "name": h.name,
            "sequence": sequence_json(micronuclear_sequence(graph, h)),
            "orientations": {k: sequence_json(s)
                             for k, s in _orientations(graph, h, orient).items()},
        }
        if smoothings:
            entry["smoothings"] = [
                {"vertex": v, "kind": kind, "sequence": sequence_json(seq)}
                for v, kind, seq in _smoothings(graph, h, drop)
            ]
        entries.append(entry)
    return {"word": render_word(graph.word), "n": graph.n, "hpps": entries,
            "distinct_count": distinct_count(graph)}


def cmd_validate(args):
    word = parse_word(args.word)
    canon = canonicalize(word)
    _emit(args, {"word": render_word(word), "canonical": render_word(canon), "n": word.n},
          f"ok: {render_word(word)} (canonical {render_word(canon)}, n={word.n})\n")


def cmd_graph(args):
    _, g = _graph(args.word)
    hpp = find_hpp(g, args.hpp) if args.hpp else None
    if args.dot:
        sys.stdout.write(to_dot(g, hpp))
        return
    lines = [f"word {render_word(g.word)}  n={g.n}  edges={len(g.edges)}"]
    lines += [f"  e{e.index}: v{e.tail} -> v{e.head}" for e in g.edges]
    for v in g.vertices.values():
        lines.append(f"  v{v.id}: pass1=({v.pass1.in_}, {v.pass1.out})"
                     f"  pass2=({v.pass2.in_}, {v.pass2.out})")
    payload = {
        "word": render_word(g.word), "n": g.n,
        "edges": [{"index": e.index, "tail": e.tail, "head": e.head} for e in g.edges],
        "vertices": [{"id": v.id,
                      "pass1": [str(v.pass1.in_), str(v.pass1.out)],
                      "pass2": [str(v.pass2.in_), str(v.pass2.out)]}
                     for v in g.vertices.values()],
    }
    _emit(args, payload, "\n".join(lines) + "\n")


def cmd_hpp(args):
    _, g = _graph(args.word)
    hpps = enumerate_hpps(g)
    _emit(args, word_report(g, hpps), "".join(f"{h.name}\n" for h in hpps))


def cmd_seq(args):
    _, g = _graph(args.word)
    hpps = [find_hpp(g, args.hpp)] if args.hpp else enumerate_hpps(g)
    lines = []
    for h in hpps:
        for k, s in _orientations(g, h, args.orient).items():
            lines.append(f"{h.name}\t{ORIENT_LABELS[k]}\t{render(s)}\n")
    _emit(args, word_report(g, hpps, args.orient), "".join(lines))


def cmd_count(args):
    _, g = _graph(args.word)
    c = distinct_count(g)
    _emit(args, {"word": render_word(g.word), "n": g.n, "distinct_count": c}, f"{c}\n")


def cmd_smooth(args):
    _, g = _graph(args.word)
    h = find_hpp(g, args.hpp)
    o = apply_smoothing(g, h, args.vertex)
    seq = o.sequence.without_ies_circles() if args.drop_ies_circles else o.sequence
    payload = {
        "word": render_word(g.word), "hpp": h.name, "vertex": o.vertex, "kind": o.kind,
        "joints": sorted(sorted(str(x) for x in pair) for pair in o.joints),
        "sequence": sequence_json(seq),
    }
    _emit(args, payload, f"{o.kind}\n{render(seq)}\n")


def cmd_smooth_all(args):
    _, g = _graph(args.word)
    hpps = enumerate_hpps(g)
    lines = []
    for h in hpps:
        for v, kind, seq in _smoothings(g, h, args.drop_ies_circles):
            lines.append(f"{h.name}\tv{v}\t{kind}\t{render(seq)}\n")
    _emit(args, word_report(g, hpps, smoothings=True, drop=args.drop_ies_circles),
          "".join(lines))


def survey(max_n: int):
    rows = []
    for n in range(max_n + 1):
        for w in canonical_words(n):
            g = build_graph(w)
            hpps = enumerate_hpps(g)
            rows.append({"word": render_word(w), "n": n, "hpps": len(hpps),
                         "realizable": bool(hpps), "distinct_count": distinct_count(g)})
    return rows


def cmd_survey(args):
    if args.max_n > MAX_N:
        raise UsageError(f"survey is limited to --max-n <= {MAX_N}")
    rows = survey(args.max_n)
    real = [r for r in rows if r["realizable"]]
    counts = [r["distinct_count"] for r in real]
    below = [r["word"] for r in real if r["distinct_count"] < 8]
    summary = {
        "words": len(rows), "realizable": len(real),
        "distinct_min": min(counts, default=0), "distinct_max": max(counts, default=0),
        "below_eight": below,
    }
    lines = [f"{r['word'] or '(empty)'}\tn={r['n']}\thpps={r['hpps']}\t"
             f"realizable={'yes' if r['realizable'] else 'no'}\tdistinct={r['distinct_count']}\n"
             for r in rows]
    lines.append(f"# {summary['words']} words, {summary['realizable']} realizable; "
                 f"distinct min={summary['distinct_min']} max={summary['distinct_max']}; "
                 f"realizable words with fewer than 8: {below or 'none'}\n")
    _emit(args, {"words": rows, "summary": summary}, "".join(lines))


def cmd_fixtures(args):
    report = run_fixture_suite()
    _emit(args, report.to_json(), report.to_text())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="micronuc", description=__doc__.split("\n")[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("word", help='double-occurrence word, e.g. "1212" or "10 3 10 3"')
        sp.set_defaults(func=func)
        return sp

    word_cmd("validate", cmd_validate, "check a word and print its canonical form")
    sp = word_cmd("graph", cmd_graph, "show edges and vertex passes")
    sp.add_argument("--dot", action="store_true", help="emit DOT instead")
    sp.add_argument("--hpp", help="HPP to overlay with style=dashed (with --dot)")
    word_cmd("hpp", cmd_hpp, "list Hamiltonian polygonal paths")
    sp = word_cmd("seq", cmd_seq, "micronuclear sequences")
    sp.add_argument("--hpp", help='restrict to one HPP, e.g. "e2(1A, 2A)"')
    sp.add_argument("--orient", choices=(*ORIENTATIONS, "all"), default="all")
    word_cmd("count", cmd_count, "number of distinct sequences over all orientations")
    sp = word_cmd("smooth", cmd_smooth, "smooth one vertex of one HPP")
    sp.add_argument("--hpp", required=True)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--drop-ies-circles", action="store_true")
    sp = word_cmd("smooth-all", cmd_smooth_all, "every HPP, every vertex")
    sp.add_argument("--drop-ies-circles", action="store_true")
    sp = sub.add_parser("survey", help="census of all canonical words up to --max-n")
    sp.add_argument("--max-n", type=int, default=4)
    sp.set_defaults(func=cmd_survey)
    sp = sub.add_parser("fixtures", help="re-derive every golden table row")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except (MicronucError, UsageError) as exc:
        print(f"micronuc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
