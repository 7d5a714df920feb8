#!/usr/bin/env python3
"""Regenerate data/newforms.json from PARI/GP (cypari2).

Usage: tools/gen_fixtures.py 315 735 -o data/newforms.json

Enumerates weight-2 trivial-character newforms of every level dividing the
requested ambient level, orders each level's Galois orbits the way LMFDB
labels them (dimension, then trace form), and records the Hecke-field degree,
analytic rank and the full p-part Atkin-Lehner eigenvalue at each prime.
"""
import argparse
import json

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9, silent=True)


def label_suffix(i):
    s = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def newforms_of_level(m, ntraces=40):
    if int(pari(f"mfdim([{m},2],0)")) == 0:
        return []
    pari(f"mf=mfinit([{m},2],0); L=mfeigenbasis(mf)")
    count = int(pari("#L"))
    primes = [int(p) for p in pari(f"factor({m})[,1]~")]
    out = []
    for i in range(1, count + 1):
        deg = int(pari(f"poldegree(mffields(mf)[{i}])"))
        traces = [int(t) for t in pari(
            f"[trace(c) | c<-mfcoefs(L[{i}],{ntraces})[2..-1]]")]
        signs = {}
        for p in primes:
            q = p ** int(pari(f"valuation({m},{p})"))
            ev = pari(f"mfatkineigenvalues(mf,{q})[{i}]")
            vals = {int(v) for v in ev}
            assert len(vals) == 1, (m, i, p, ev)
            signs[str(p)] = vals.pop()
        # Galois conjugates share the order of vanishing; use the first embedding.
        rank = int(pari(
            f"my(Lf=lfunmf(mf,L[{i}])); if({deg}>1, Lf=Lf[1]); lfunorderzero(Lf)"))
        out.append({"traces": traces, "dim": deg, "analytic_rank": rank, "atkin_lehner": signs})
    out.sort(key=lambda f: (f["dim"], f["traces"]))
    return [
        {
            "label": f"{m}.2.a.{label_suffix(k)}",
            "level": m,
            "dim": f["dim"],
            "analytic_rank": f["analytic_rank"],
            "atkin_lehner": f["atkin_lehner"],
        }
        for k, f in enumerate(out)
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("levels", type=int, nargs="+", help="ambient levels; output covers every divisor")
    ap.add_argument("-o", "--output")
    args = ap.parse_args()
    levels = sorted({int(d) for n in args.levels for d in pari(f"divisors({n})")})
    forms = []
    for m in levels:
        forms.extend(newforms_of_level(m))
    forms.sort(key=lambda f: (f["level"], len(f["label"]), f["label"]))
    text = json.dumps(forms, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")


if __name__ == "__main__":
    main()
