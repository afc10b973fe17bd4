#!/usr/bin/env python3
"""Generate .expected sidecars for corpus/*.alg by brute-force linear algebra.

For each degree n the ideal component I_n is spanned by u*f*v over relations f
and words u, v; dim A_n = #words - rank I_n.  The minimal relation count u_n is
rank I_n - rank (P I + I P)_n.  No rewriting or completion is involved.
"""

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path


def parse(text):
    gens, field, rels, in_rel = [], 0, [], False
    body = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("relations:"):
            in_rel = True
            body.append(line[len("relations:"):])
        elif in_rel:
            body.append(line)
        elif line.startswith("generators:"):
            for tok in line[len("generators:"):].split():
                name, deg = tok.split(":")
                gens.append((name, int(deg)))
        elif line.startswith("field:"):
            spec = line[len("field:"):].replace(" ", "")
            field = 0 if spec == "Q" else int(spec[1:])
    names = {n: i for i, (n, _) in enumerate(gens)}
    for piece in ",".join(body).split(","):
        piece = piece.strip()
        if piece:
            rels.append(parse_poly(piece, names))
    return gens, field, rels


def parse_poly(text, names):
    poly = {}
    text = text.replace(" ", "")
    if text[0] not in "+-":
        text = "+" + text
    for sign, term in re.findall(r"([+-])([^+-]+)", text):
        coeff, word = Fraction(1), []
        for factor in term.split("*"):
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(\^(\d+))?", factor)
            if m and m.group(1) in names:
                word += [names[m.group(1)]] * int(m.group(3) or 1)
            else:
                coeff *= Fraction(factor)
        if sign == "-":
            coeff = -coeff
        key = tuple(word)
        poly[key] = poly.get(key, 0) + coeff
    return {w: c for w, c in poly.items() if c != 0}


def words_of_degree(gens, n):
    out = []

    def rec(prefix, d):
        if d == n:
            out.append(tuple(prefix))
            return
        for i, (_, g) in enumerate(gens):
            if d + g <= n:
                prefix.append(i)
                rec(prefix, d + g)
                prefix.pop()

    rec([], 0)
    return out


class Echelon:
    """Row echelon form over Q (p = 0) or F_p with sparse dict rows."""

    def __init__(self, p):
        self.p = p
        self.pivots = {}

    def norm(self, c):
        if not self.p:
            return c
        c = Fraction(c)
        return c.numerator * pow(c.denominator, self.p - 2, self.p) % self.p

    def inv(self, c):
        return pow(int(c), self.p - 2, self.p) if self.p else 1 / c

    def add(self, row):
        row = {k: self.norm(v) for k, v in row.items()}
        row = {k: v for k, v in row.items() if v != 0}
        while row:
            lead = max(row)
            if lead not in self.pivots:
                scale = self.inv(row[lead])
                self.pivots[lead] = {k: self.norm(v * scale) for k, v in row.items()}
                return True
            piv, c = self.pivots[lead], row[lead]
            for k, v in piv.items():
                nv = self.norm(row.get(k, 0) - c * v)
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
        return False

    def rank(self):
        return len(self.pivots)


def degree(gens, word):
    return sum(gens[i][1] for i in word)


def oracle(gens, field, rels, max_degree):
    words_by = [words_of_degree(gens, n) for n in range(max_degree + 1)]
    index = {w: i for ws in words_by for i, w in enumerate(ws)}
    hilbert, minimal = [], []
    for n in range(max_degree + 1):
        inner, full = Echelon(field), Echelon(field)
        for f in rels:
            fd = degree(gens, next(iter(f)))
            if fd > n:
                continue
            for k in range(n - fd + 1):
                for u in words_by[k]:
                    for v in words_by[n - fd - k]:
                        row = {index[u + w + v]: c for w, c in f.items()}
                        full.add(row)
                        if u or v:
                            inner.add(row)
        hilbert.append(len(words_by[n]) - full.rank())
        minimal.append(full.rank() - inner.rank())
    g = [0] * (max_degree + 1)
    for _, d in gens:
        if d <= max_degree:
            g[d] += 1
    factor = [(1 if i == 0 else 0) - g[i] + minimal[i] for i in range(max_degree + 1)]
    slack = [sum(hilbert[j] * factor[i - j] for j in range(i + 1)) for i in range(max_degree + 1)]
    slack[0] -= 1
    return hilbert, minimal, slack


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="+", type=Path)
    ap.add_argument("--max-degree", type=int, default=None)
    args = ap.parse_args()
    for path in args.files:
        gens, field, rels = parse(path.read_text())
        d = args.max_degree or (10 if len(gens) <= 2 else 7)
        hilbert, minimal, slack = oracle(gens, field, rels, d)
        first = next((i for i, c in enumerate(slack) if c != 0), None)
        verdict = {"status": "verified"} if first is None else {"status": "refuted", "degree": first}
        expected = {
            "max_degree": d,
            "hilbert": [str(c) for c in hilbert],
            "relations_minimal": [str(c) for c in minimal],
            "slack": [str(c) for c in slack],
        }
        if rels:
            expected["strongly_free"] = verdict
        out = path.with_suffix(".expected")
        out.write_text(json.dumps(expected, indent=2) + "\n")
        print(f"{path.name}: D={d} {verdict['status'] if rels else '-'}", file=sys.stderr)


if __name__ == "__main__":
    main()
