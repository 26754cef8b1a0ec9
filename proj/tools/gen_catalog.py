#!/usr/bin/env python3
"""Regenerate catalog/*.json from Satake diagram data.

Each conjugation is sigma* = w_black o eps, where w_black is the longest
element of the Weyl group of the black nodes and eps is the diagram
automorphism given by the arrows on white nodes and by the opposition
involution on black nodes.  Multiplicities of real roots are the number of
roots with the same restriction.

Usage: gen_catalog.py [OUTDIR]
"""

import itertools
import json
import pathlib
import sys


def component_form(t, n):
    b = [[0] * n for _ in range(n)]

    def edge(i, j, v):
        b[i][j] = b[j][i] = v

    if t == "A":
        for i in range(n):
            b[i][i] = 2
        for i in range(n - 1):
            edge(i, i + 1, -1)
    elif t == "B":
        for i in range(n):
            b[i][i] = 4
        b[n - 1][n - 1] = 2
        for i in range(n - 1):
            edge(i, i + 1, -2)
    elif t == "C":
        for i in range(n):
            b[i][i] = 2
        b[n - 1][n - 1] = 4
        for i in range(n - 2):
            edge(i, i + 1, -1)
        edge(n - 2, n - 1, -2)
    elif t == "D":
        for i in range(n):
            b[i][i] = 2
        for i in range(n - 2):
            edge(i, i + 1, -1)
        edge(n - 3, n - 1, -1)
    elif t == "E":
        for i in range(n):
            b[i][i] = 2
        edge(0, 2, -1)
        edge(1, 3, -1)
        for i in range(2, n - 1):
            edge(i, i + 1, -1)
    elif t == "F":
        b[0][0] = b[1][1] = 4
        b[2][2] = b[3][3] = 2
        edge(0, 1, -2)
        edge(1, 2, -2)
        edge(2, 3, -1)
    elif t == "G":
        b[0][0] = 2
        b[1][1] = 6
        edge(0, 1, -3)
    return b


def parse_dynkin(s):
    comps = []
    for part in s.split("x"):
        comps.append((part[0], int(part[1:])))
    return comps


class Roots:
    def __init__(self, dynkin):
        comps = parse_dynkin(dynkin)
        self.rank = sum(n for _, n in comps)
        r = self.rank
        self.form = [[0] * r for _ in range(r)]
        off = 0
        for t, n in comps:
            b = component_form(t, n)
            for i in range(n):
                for j in range(n):
                    self.form[off + i][off + j] = b[i][j]
            off += n
        simple = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
        seen = set(simple)
        todo = list(simple)
        while todo:
            a = todo.pop()
            for j in range(r):
                s = self.reflect(j, a)
                if s not in seen:
                    seen.add(s)
                    todo.append(s)
        self.roots = sorted(seen)

    def ip(self, a, b):
        return sum(a[i] * self.form[i][j] * b[j]
                   for i in range(self.rank) for j in range(self.rank))

    def reflect(self, j, a):
        c = 2 * sum(a[i] * self.form[i][j] for i in range(self.rank)) // self.form[j][j]
        return tuple(a[k] - (c if k == j else 0) for k in range(self.rank))

    def reflection_matrix(self, j):
        r = self.rank
        cols = [self.reflect(j, tuple(1 if k == i else 0 for k in range(r))) for i in range(r)]
        return [[cols[c][row] for c in range(r)] for row in range(r)]


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def apply(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def longest_black(rs, black):
    w = identity(rs.rank)
    while True:
        for b in black:
            col = [w[i][b] for i in range(rs.rank)]
            if all(x >= 0 for x in col):
                w = matmul(w, rs.reflection_matrix(b))
                break
        else:
            return w


def satake_sigma(rs, black, arrows):
    """black: 0-based nodes; arrows: 0-based pairs of white nodes."""
    r = rs.rank
    w = longest_black(rs, black)
    perm = list(range(r))
    for i, j in arrows:
        perm[i], perm[j] = j, i
    for b in black:
        img = apply(w, tuple(1 if k == b else 0 for k in range(r)))
        neg = tuple(-x for x in img)
        perm[b] = neg.index(1)
    for i in range(r):
        for j in range(r):
            if rs.form[perm[i]][perm[j]] != rs.form[i][j]:
                raise ValueError("not a diagram automorphism")
    eps = [[1 if perm[j] == i else 0 for j in range(r)] for i in range(r)]
    sigma = matmul(w, eps)
    if matmul(sigma, sigma) != identity(r):
        raise ValueError("not an involution")
    return sigma


def multiplicities(rs, sigma):
    out = []
    for a in rs.roots:
        if apply(sigma, a) != a:
            continue
        m = 0
        for b in rs.roots:
            sb = apply(sigma, b)
            if all(b[k] + sb[k] == 2 * a[k] for k in range(rs.rank)):
                m += 1
        out.append([list(a), m])
    return out


def entry(name, dynkin, black=(), arrows=(), cor=None, label=""):
    rs = Roots(dynkin)
    b0 = [x - 1 for x in black]
    a0 = [(i - 1, j - 1) for i, j in arrows]
    sigma = satake_sigma(rs, b0, a0)
    return {
        "name": name,
        "label": label,
        "dynkin": dynkin,
        "satake": {"black": sorted(black), "arrows": [list(p) for p in arrows]},
        "sigma_star": sigma,
        "noncompact_marks": [],
        "real_multiplicities": multiplicities(rs, sigma),
        "cor_id_list": cor,
    }


def forms():
    out = []
    # type A
    out.append(entry("sl2R", "A1", label="AI"))
    for n in range(2, 8):
        out.append(entry(f"sl{n + 1}R", f"A{n}", label="AI"))
    for n in range(1, 8):
        out.append(entry(f"su{n + 1}", f"A{n}", black=range(1, n + 1), cor="a",
                         label="compact"))
    for p in range(1, 8):
        for q in range(1, p + 1):
            n = p + q - 1
            if p + q > 7 or n < 2:
                continue
            black = range(q + 1, n - q + 1)
            arrows = [(i, n + 1 - i) for i in range(1, q + 1) if i < n + 1 - i]
            if p == q:
                label, cor = "AIIIb", "b"
            elif q == 1:
                label, cor = "AIV", "a"
            else:
                label, cor = "AIIIa", "a"
            out.append(entry(f"su{p}{q}", f"A{n}", black=black, arrows=arrows,
                             cor=cor, label=label))
    for m in (2, 3, 4):
        n = 2 * m - 1
        out.append(entry(f"sustar{2 * m}", f"A{n}", black=range(1, n + 1, 2), cor="a",
                         label="AII"))
    # type B
    for n in range(2, 8):
        out.append(entry(f"so{n + 1}{n}", f"B{n}", label="BI"))
        out.append(entry(f"so{2 * n + 1}", f"B{n}", black=range(1, n + 1), cor="a",
                         label="compact"))
    for n in (2, 3, 4):
        out.append(entry(f"so{2 * n}1", f"B{n}", black=range(2, n + 1), cor="a",
                         label="BII"))
    out.append(entry("so52", "B3", black=[3], label="BI"))
    # type C
    for n in range(3, 8):
        out.append(entry(f"sp{n}R", f"C{n}", label="CI"))
        out.append(entry(f"sp{n}", f"C{n}", black=range(1, n + 1), cor="a",
                         label="compact"))
    for p, q in ((2, 1), (3, 1), (2, 2)):
        n = p + q
        black = [k for k in range(1, n + 1) if (k <= 2 * q - 1 and k % 2 == 1) or k > 2 * q]
        out.append(entry(f"sp{p}{q}", f"C{n}", black=black, cor="a", label="CII"))
    # type D
    for n in range(4, 8):
        out.append(entry(f"so{n}{n}", f"D{n}", label="DI"))
        out.append(entry(f"so{2 * n}", f"D{n}", black=range(1, n + 1), cor="a",
                         label="compact"))
    out.append(entry("so71", "D4", black=[2, 3, 4], cor="a", label="DII"))
    out.append(entry("so91", "D5", black=[2, 3, 4, 5], cor="a", label="DII"))
    out.append(entry("so53", "D4", arrows=[(3, 4)], label="DI"))
    out.append(entry("so62", "D4", black=[3, 4], label="DI"))
    for n in (4, 5, 6, 7):
        if n % 2 == 0:
            out.append(entry(f"sostar{2 * n}", f"D{n}", black=range(1, n, 2), cor="b",
                             label="DIIIa"))
        else:
            out.append(entry(f"sostar{2 * n}", f"D{n}", black=range(1, n - 1, 2),
                             arrows=[(n - 1, n)], cor="a", label="DIIIb"))
    # exceptional
    out.append(entry("e6_6", "E6", label="EI"))
    out.append(entry("e6_2", "E6", arrows=[(1, 6), (3, 5)], label="EII"))
    out.append(entry("e6_m14", "E6", black=[3, 4, 5], arrows=[(1, 6)], cor="a",
                     label="EIII"))
    out.append(entry("e6_m26", "E6", black=[2, 3, 4, 5], cor="a", label="EIV"))
    out.append(entry("e6c", "E6", black=range(1, 7), cor="a", label="compact"))
    out.append(entry("e7_7", "E7", label="EV"))
    out.append(entry("e7_m5", "E7", black=[2, 5, 7], label="EVI"))
    out.append(entry("e7_m25", "E7", black=[2, 3, 4, 5], label="EVII"))
    out.append(entry("e7c", "E7", black=range(1, 8), cor="a", label="compact"))
    out.append(entry("e8_8", "E8", label="EVIII"))
    out.append(entry("e8_m24", "E8", black=[2, 3, 4, 5], label="EIX"))
    out.append(entry("e8c", "E8", black=range(1, 9), cor="a", label="compact"))
    out.append(entry("f4_4", "F4", label="FI"))
    out.append(entry("f4_m20", "F4", black=[1, 2, 3], cor="a", label="FII"))
    out.append(entry("f4c", "F4", black=range(1, 5), cor="a", label="compact"))
    out.append(entry("g2_2", "G2", label="G"))
    out.append(entry("g2c", "G2", black=[1, 2], cor="a", label="compact"))
    # complex type: two copies exchanged
    for name, t, n in (("sl2C", "A", 1), ("sl3C", "A", 2), ("so5C", "B", 2),
                       ("g2C", "G", 2)):
        arrows = [(i, i + n) for i in range(1, n + 1)]
        out.append(entry(name, f"{t}{n}x{t}{n}", arrows=arrows, cor="a",
                         label="complex"))
    return out


def main():
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                          pathlib.Path(__file__).resolve().parent.parent / "catalog")
    outdir.mkdir(parents=True, exist_ok=True)
    for old in outdir.glob("*.json"):
        old.unlink()
    names = set()
    for e in forms():
        if e["name"] in names:
            raise ValueError("duplicate " + e["name"])
        names.add(e["name"])
        (outdir / f"{e['name']}.json").write_text(json.dumps(e, indent=1) + "\n")
    print(f"wrote {len(names)} entries to {outdir}")


if __name__ == "__main__":
    main()
