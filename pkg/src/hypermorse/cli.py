"""Command-line surface: faces, match, verify, classify, betti, homology,
character, diagram.

JSON is emitted for pipes and text for terminals unless --format says
otherwise; every error surfaces as a JSON error object and a nonzero exit
code.  HYPERMORSE_BUDGET (or --budget) bounds the homology oracle.
"""

import argparse
import json
import random
import sys
from math import comb

from . import betti as betti_mod
from . import characters as characters_mod
from . import diagrams as diagrams_mod
from . import faces as faces_mod
from . import homology as homology_mod
from . import matching as matching_mod
from .diagrams import Triple
from .errors import HypermorseError, InvalidDiagram
from .matching import MatchParams


def _emit(data, args, text_fn=None):
    fmt = args.format
    if fmt == "auto":
        fmt = "text" if sys.stdout.isatty() else "json"
    if fmt == "json" or text_fn is None:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text_fn(data))


def _load_diagram(args):
    if getattr(args, "triple", None) is not None:
        d, i, j = args.triple
        return diagrams_mod.diagram_of_triple(args.n, args.k, Triple(d, i, j))
    if getattr(args, "diagram", None):
        with open(args.diagram, encoding="utf-8") as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            data = json.loads(text)
            if "shaded" in data:
                return diagrams_mod.diagram_from_squares(
                    data.get("n", args.n), data.get("k", args.k), data["shaded"]
                )
            if "triple" in data:
                return diagrams_mod.diagram_of_triple(
                    args.n, args.k, Triple(*data["triple"])
                )
            raise InvalidDiagram("JSON diagram needs a 'shaded' or 'triple' key")
        if stripped and stripped.split()[0].isdigit():
            nums = [int(tok) for tok in stripped.split()]
            if len(nums) != 3:
                raise InvalidDiagram("triple form needs three integers: d i j")
            return diagrams_mod.diagram_of_triple(args.n, args.k, Triple(*nums))
        return diagrams_mod.diagram_from_text(text, args.n, args.k)
    raise InvalidDiagram("no diagram given: use --diagram FILE or --triple d i j")


def cmd_faces(args):
    n, k = args.n, args.k
    if args.square is not None:
        a, b = args.square
        if args.count_only:
            _emit({"square": [a, b], "count": faces_mod.square_count(n, k, a, b)}, args)
            return
        words = faces_mod.enumerate_square(n, k, (a, b))
        _emit(words, args, lambda d: "\n".join(d))
        return
    dims = faces_mod.face_count_by_dimension(n, k)
    summary = {
        "vertices": comb(n, k),
        "dims": {str(d): c for d, c in dims.items()},
    }
    if args.count_only:
        _emit(summary, args)
        return
    listing = {
        "vertices": faces_mod.enumerate_vertices(n, k),
        "squares": {
            f"{a},{b}": faces_mod.enumerate_square(n, k, (a, b))
            for a in range(n - k)
            for b in range(k)
        },
    }
    _emit(listing, args)


def _params_from_args(args, diag=None):
    if args.m0 is not None or args.m1 is not None:
        if args.m0 is None or args.m1 is None:
            raise ValueError("give both --m0 and --m1")
        return MatchParams(args.m0, args.m1)
    if diag is not None:
        return diagrams_mod.canonical_params(diag)
    return MatchParams(0, 0)


def cmd_match(args):
    diag = None
    if args.diagram or args.triple:
        diag = _load_diagram(args)
    p = _params_from_args(args, diag)
    vf = matching_mod.build_vector_field(args.n, args.k, p, diag)
    _emit(vf.to_json(), args)


def _verify_one(task):
    n, k, m0, m1 = task
    vf = matching_mod.build_vector_field(n, k, MatchParams(m0, m1))
    complete = matching_mod.verify_complete(vf)
    acyclic, cycle = matching_mod.verify_acyclic(vf)
    return {
        "params": [m0, m1],
        "complete": complete,
        "acyclic": acyclic,
        "cycle": cycle,
    }


def cmd_verify(args):
    n, k = args.n, args.k
    if args.field:
        with open(args.field, encoding="utf-8") as fh:
            vf = matching_mod.VectorField.from_json(json.load(fh), n=n, k=k)
        vf.check_covers()
        complete = matching_mod.verify_complete(vf)
        acyclic, cycle = matching_mod.verify_acyclic(vf)
        report = {"complete": complete, "acyclic": acyclic, "cycle": cycle}
        _emit(report, args)
        if not (complete and acyclic):
            sys.exit(1)
        return
    if args.sample:
        _emit(_sampled_report(n, k, args.sample, args.seed), args)
        return
    if args.all_params:
        tasks = [(n, k, p.m0, p.m1) for p in matching_mod.valid_params(n, k)]
    else:
        p = _params_from_args(args)
        tasks = [(n, k, p.m0, p.m1)]
    if args.jobs > 1:
        from multiprocessing import Pool

        with Pool(args.jobs) as pool:
            results = pool.map(_verify_one, tasks)
    else:
        results = [_verify_one(t) for t in tasks]
    report = {
        "results": results,
        "all_pass": all(r["complete"] and r["acyclic"] for r in results),
    }

    def text(d):
        lines = [
            f"({r['params'][0]},{r['params'][1]}): "
            f"complete={r['complete']} acyclic={r['acyclic']}"
            for r in d["results"]
        ]
        lines.append("all pass" if d["all_pass"] else "FAILURES above")
        return "\n".join(lines)

    _emit(report, args, text)
    if not report["all_pass"]:
        sys.exit(1)


def _sampled_report(n, k, count, seed):
    """Spot-check involution and dimension step on random faces/params."""
    rng = random.Random(seed)
    params = matching_mod.valid_params(n, k)
    checked = 0
    for _ in range(count):
        p = rng.choice(params)
        a = rng.randrange(n - k)
        b = rng.randrange(k)
        word = list(
            faces_mod.ZERO * a + faces_mod.ONE * b + faces_mod.STAR * (n - a - b)
        )
        rng.shuffle(word)
        word = "".join(word)
        mate = matching_mod.partner(word, n, k, p)
        back = matching_mod.partner(mate, n, k, p)
        assert back == word, (word, mate, back)
        dims = matching_mod._dim(word, n, k), matching_mod._dim(mate, n, k)
        assert abs(dims[0] - dims[1]) == 1, (word, mate)
        checked += 1
    return {"sampled": checked, "seed": seed, "all_pass": True}


def cmd_classify(args):
    diag = _load_diagram(args)
    p = diagrams_mod.canonical_params(diag)
    conc = diagrams_mod.classify_concentration(diag)
    t = diagrams_mod.canonical_triple(diag)
    out = {
        "canonical_params": [p.m0, p.m1],
        "concentration": conc.to_json(),
        "triple": None if t is None else [t.d, t.i, t.j],
    }

    def text(d):
        lines = [f"canonical matching: m0={p.m0} m1={p.m1}"]
        if conc.kind == "single":
            lines.append(f"homology concentrated in degree {conc.degree}")
        else:
            lines.append(f"unmatched faces in dimensions {list(conc.dims)}")
        lines.append(f"triple: {d['triple']}")
        return "\n".join(lines)

    _emit(out, args, text)


def cmd_betti(args):
    bn = betti_mod.betti_number(args.n, args.k, Triple(args.d, args.i, args.j))
    _emit(
        bn.to_json(),
        args,
        lambda d: f"betti({args.d},{args.i},{args.j}) = {d['total']}",
    )


def cmd_homology(args):
    diag = _load_diagram(args)
    if args.dump_matrices:
        data = homology_mod.order_complex(diag, args.budget)
        with open(args.dump_matrices, "w", encoding="utf-8") as fh:
            for l in range(len(data.levels)):
                nrows = 1 if l == 0 else len(data.levels[l - 1])
                fh.write(f"# boundary {l}: {nrows} x {len(data.levels[l])}\n")
                for col, facets in enumerate(data.boundary[l]):
                    for row, sign in facets:
                        fh.write(f"{row} {col} {sign}\n")
    prof = homology_mod.reduced_homology(diag, args.budget)
    _emit(
        prof.to_json(),
        args,
        lambda d: "\n".join(
            f"H~_{deg} rank {v['rank']}"
            + (f" torsion {v['torsion']}" if v["torsion"] else "")
            for deg, v in sorted(d.items(), key=lambda kv: int(kv[0]))
        ),
    )


def cmd_character(args):
    n, k = args.n, args.k
    t = Triple(args.d, args.i, args.j)
    if args.hopf:
        diag = diagrams_mod.diagram_of_triple(n, k, t)
        cs = characters_mod.homology_character_hopf(n, k, diag, args.d)
    else:
        cs = characters_mod.homology_character(n, k, t)
    out = {"terms": cs.to_json(), "dimension": cs.dimension()}
    _emit(out, args, lambda d: f"{cs}\ndimension {d['dimension']}")


def cmd_diagram(args):
    diag = _load_diagram(args)
    fmt = args.format
    if fmt in ("auto", "text"):
        print(diag.to_text())
    elif fmt == "svg":
        print(diagrams_mod.render_svg(diag))
    else:
        _emit(diag.to_json(), args)


def _add_common(sub, triple_opt=True):
    sub.add_argument("n", type=int)
    sub.add_argument("k", type=int)
    if triple_opt:
        sub.add_argument("--diagram", help="diagram file: '#'/'.' grid, JSON, or 'd i j'")
        sub.add_argument(
            "--triple", nargs=3, type=int, metavar=("D", "I", "J"), default=None
        )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hypermorse",
        description="Morse matchings, Betti numbers and homology characters "
        "of hypersimplex subcomplexes.",
    )
    ap.add_argument(
        "--format",
        choices=["auto", "json", "text", "svg"],
        default="auto",
        help="output format (default: json when piped, text on a terminal)",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    p = sp.add_parser("faces", help="enumerate or count faces")
    _add_common(p, triple_opt=False)
    p.add_argument("--square", type=lambda s: tuple(map(int, s.split(","))))
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=cmd_faces)

    p = sp.add_parser("match", help="build a vector field")
    _add_common(p)
    p.add_argument("--m0", type=int)
    p.add_argument("--m1", type=int)
    p.set_defaults(fn=cmd_match)

    p = sp.add_parser("verify", help="completeness and acyclicity checks")
    _add_common(p, triple_opt=False)
    p.add_argument("--m0", type=int)
    p.add_argument("--m1", type=int)
    p.add_argument("--all-params", action="store_true")
    p.add_argument("--field", help="JSON vector field to verify")
    p.add_argument("--sample", type=int, help="spot-check this many random faces")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sp.add_parser("classify", help="canonical matching and concentration")
    _add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sp.add_parser("betti", help="closed-form Betti number of a triple")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(fn=cmd_betti)

    p = sp.add_parser("homology", help="integral reduced homology (oracle)")
    _add_common(p)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--dump-matrices", help="write boundary triplets to this file")
    p.set_defaults(fn=cmd_homology)

    p = sp.add_parser("character", help="homology character of a triple")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--hopf", action="store_true", help="use the alternating sum route")
    p.set_defaults(fn=cmd_character)

    p = sp.add_parser("diagram", help="render a diagram (text, svg, or json)")
    _add_common(p)
    p.set_defaults(fn=cmd_diagram)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except HypermorseError as exc:
        print(
            json.dumps({"error": str(exc), "type": type(exc).__name__}),
            file=sys.stdout,
        )
        sys.exit(1)
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc), "type": type(exc).__name__}))
        sys.exit(1)


if __name__ == "__main__":
    main()
