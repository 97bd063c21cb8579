#!/usr/bin/env python3
"""Survey every subcomplex diagram of one J(n,k).

Lists each staircase with its canonical matching, the unmatched squares,
and the concentration verdict; with --oracle the integral homology of
each subcomplex is computed independently and compared.
"""

import argparse

from hypermorse import diagrams, homology
from math import comb


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    ap.add_argument("k", type=int)
    ap.add_argument("--oracle", action="store_true", help="cross-check with homology")
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()
    n, k = args.n, args.k

    agree = True
    count = 0
    for D in diagrams.all_diagrams(n, k):
        count += 1
        p = diagrams.canonical_params(D)
        conc = diagrams.classify_concentration(D)
        t = diagrams.canonical_triple(D)
        if conc.kind == "single":
            verdict = f"single degree {conc.degree}"
            if conc.degree == 0:
                u = comb(n, k) - 1
            elif conc.degree is None:
                u = 0
            else:
                u = sum(c for _, c in diagrams.unmatched_squares(D))
            verdict += f", rank {u}"
        else:
            verdict = f"dimensions {list(conc.dims)}"
        line = (
            f"rows={D.row_min}  m=({p.m0},{p.m1})  "
            f"triple={None if t is None else (t.d, t.i, t.j)}  {verdict}"
        )
        if args.oracle:
            prof = homology.reduced_homology(D, args.budget)
            nz = prof.nonzero_degrees()
            ranks = {d: prof.ranks[d] for d in nz}
            match = (
                nz == ([conc.degree] if conc.degree is not None else [])
                if conc.kind == "single"
                else len(nz) >= 2
            )
            agree &= match
            line += f"  homology={ranks if ranks else 'trivial'}"
            if not match:
                line += "  <-- DISAGREES"
        print(line)
    print(f"{count} diagrams")
    if args.oracle:
        print("oracle agrees" if agree else "ORACLE DISAGREEMENTS FOUND")
        raise SystemExit(0 if agree else 1)


if __name__ == "__main__":
    main()
