#!/usr/bin/env python3
"""Generates the group corpus under data/ as permutation-generator files.

Families: cyclic and noncyclic abelian groups, the dihedral and dicyclic
series, split metacyclic groups C_m x| C_n (one representative per cyclic
subgroup of the units of Z_m), symmetric/alternating/linear groups, selected
direct products, and small 3-groups of class >= 3. Orders in data/corpus stay
at most 100; data/corpus_p3 carries the larger 3-group exemplars used by the
p = 3 branch scans. Pure standard library; rerunning reproduces the corpus
byte for byte.
"""

import json
import math
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def closure_order(degree, gens):
    identity = tuple(range(degree))
    seen = {identity}
    work = [identity]
    while work:
        cur = work.pop()
        for g in gens:
            nxt = tuple(g[cur[i]] for i in range(degree))
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return len(seen)


def cycle(n):
    return [(i + 1) % n for i in range(n)]


def direct_product(deg_a, gens_a, deg_b, gens_b):
    gens = []
    for g in gens_a:
        gens.append(list(g) + [deg_a + i for i in range(deg_b)])
    for g in gens_b:
        gens.append(list(range(deg_a)) + [deg_a + v for v in g])
    return deg_a + deg_b, gens


class Corpus:
    def __init__(self, subdir):
        self.dir = os.path.join(ROOT, "data", subdir)
        os.makedirs(self.dir, exist_ok=True)
        for old in os.listdir(self.dir):
            os.remove(os.path.join(self.dir, old))
        self.rows = []

    def emit_perm(self, name, degree, gens, expect=None):
        order = closure_order(degree, gens)
        if expect is not None:
            assert order == expect, f"{name}: order {order} != expected {expect}"
        slug = name.replace(":", "_").replace(",", "_")
        fname = f"{slug}.json"
        data = {
            "name": name,
            "kind": "permutation",
            "degree": degree,
            "generators": [list(g) for g in gens],
        }
        with open(os.path.join(self.dir, fname), "w") as fh:
            json.dump(data, fh, separators=(",", ":"))
            fh.write("\n")
        self.rows.append({"file": fname, "name": name, "order": order, "degree": degree})

    def emit_named(self, name, constructor, order):
        slug = name.replace(":", "_").replace(",", "_")
        fname = f"{slug}.json"
        with open(os.path.join(self.dir, fname), "w") as fh:
            json.dump({"name": name, "kind": "named", "constructor": constructor}, fh,
                      separators=(",", ":"))
            fh.write("\n")
        self.rows.append({"file": fname, "name": name, "order": order, "degree": 0})

    def emit_cayley(self, name, table):
        slug = name.replace(":", "_")
        fname = f"{slug}.json"
        with open(os.path.join(self.dir, fname), "w") as fh:
            json.dump({"name": name, "kind": "cayley", "table": table}, fh,
                      separators=(",", ":"))
            fh.write("\n")
        self.rows.append({"file": fname, "name": name, "order": len(table), "degree": 0})

    def write_manifest(self):
        self.rows.sort(key=lambda r: (r["order"], r["name"]))
        manifest = {"count": len(self.rows), "files": self.rows}
        with open(os.path.join(self.dir, "manifest.json"), "w") as fh:
            json.dump(manifest, fh, indent=1)
            fh.write("\n")
        return len(self.rows)


def partitions(n):
    if n == 0:
        yield []
        return
    for first in range(n, 0, -1):
        for rest in partitions(n - first):
            if not rest or rest[0] <= first:
                yield [first] + rest


def mult_order(k, m):
    o, x = 1, k % m
    while x != 1:
        x = x * k % m
        o += 1
    return o


def add_cyclic(c):
    c.emit_perm("cyclic:1", 1, [], expect=1)
    for n in range(2, 101):
        c.emit_perm(f"cyclic:{n}", n, [cycle(n)], expect=n)


def add_abelian(c):
    for n in range(4, 101):
        factors = {}
        m = n
        p = 2
        while m > 1:
            while m % p == 0:
                factors[p] = factors.get(p, 0) + 1
                m //= p
            p += 1
        per_prime = []
        for p in sorted(factors):
            per_prime.append([(p, part) for part in partitions(factors[p])])
        combos = [[]]
        for options in per_prime:
            combos = [prefix + [opt] for prefix in combos for opt in options]
        for combo in combos:
            parts = []
            for p, partition in combo:
                parts.extend(p**e for e in partition)
            if len(parts) == len(per_prime):
                continue  # the cyclic type
            parts.sort(reverse=True)
            name = "abelian:" + "x".join(str(q) for q in parts)
            degree, gens = 0, []
            for q in parts:
                d2, gens = direct_product(degree, gens, q, [cycle(q)])
                degree = d2
            c.emit_perm(name, degree, gens, expect=n)


def add_dihedral(c):
    c.emit_perm("dihedral:4", 4, [[1, 0, 2, 3], [0, 1, 3, 2]], expect=4)
    for order in range(6, 101, 2):
        m = order // 2
        rot = cycle(m)
        refl = [(m - i) % m for i in range(m)]
        c.emit_perm(f"dihedral:{order}", m, [rot, refl], expect=order)


def add_dicyclic(c):
    # <a, b | a^(2k) = 1, b^2 = a^k, b^-1 a b = a^-1> on 4k points (left
    # regular action), elements a^i b^eps at index i + 2k*eps.
    for k in range(2, 26):
        n = 4 * k
        two_k = 2 * k
        la = [0] * n
        lb = [0] * n
        for i in range(two_k):
            la[i] = (i + 1) % two_k
            la[i + two_k] = (i + 1) % two_k + two_k
            lb[i] = (-i) % two_k + two_k
            lb[i + two_k] = (k - i) % two_k
        c.emit_perm(f"dicyclic:{n}", n, [la, lb], expect=n)


def add_metacyclic(c):
    for m in range(3, 51):
        units = [u for u in range(2, m) if math.gcd(u, m) == 1]
        max_n = 100 // m
        for n in range(2, max_n + 1):
            subgroup_min = {}
            for k in units:
                if mult_order(k, m) != n:
                    continue
                powers = frozenset(pow(k, j, m) for j in range(n))
                if powers not in subgroup_min or k < subgroup_min[powers]:
                    subgroup_min[powers] = k
            for k in sorted(subgroup_min.values()):
                if n == 2 and k == m - 1:
                    continue  # covered by the dihedral series
                shift = [(x + 1) % m for x in range(m)]
                scale = [(k * x) % m for x in range(m)]
                c.emit_perm(f"mc:{m}:{n}:{k}", m, [shift, scale], expect=m * n)


def sl23_gens():
    def idx(x, y):
        return 3 * x + y - 1

    upper = [0] * 8
    lower = [0] * 8
    for x in range(3):
        for y in range(3):
            if x == 0 and y == 0:
                continue
            upper[idx(x, y)] = idx((x + y) % 3, y)
            lower[idx(x, y)] = idx(x, (x + y) % 3)
    return upper, lower


def add_linear_and_named(c):
    c.emit_named("sym:3", "sym:3", 6)
    c.emit_named("sym:4", "sym:4", 24)
    c.emit_named("alt:4", "alt:4", 12)
    c.emit_named("alt:5", "alt:5", 60)
    c.emit_named("quaternion:8", "quaternion:8", 8)
    c.emit_named("sz:2", "sz:2", 20)
    c.emit_named("psl2:5", "psl2:5", 60)

    upper, lower = sl23_gens()
    c.emit_perm("sl23", 8, [upper, lower], expect=24)
    scale = [0] * 8
    for x in range(3):
        for y in range(3):
            if x == 0 and y == 0:
                continue
            scale[3 * x + y - 1] = 3 * ((2 * x) % 3) + y - 1
    c.emit_perm("gl23", 8, [upper, lower, scale], expect=48)

    # An explicit Cayley-table entry exercising that input kind.
    table = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    c.emit_cayley("cayley-c6", table)


def heisenberg3_gens():
    # Left regular action of the order-27 unitriangular group; elements
    # (a, b, c) = [[1,a,b],[0,1,c],[0,0,1]] at index 9a + 3b + c.
    def mul(u, v):
        a1, b1, c1 = u
        a2, b2, c2 = v
        return ((a1 + a2) % 3, (b1 + b2 + a1 * c2) % 3, (c1 + c2) % 3)

    elems = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    index = {e: i for i, e in enumerate(elems)}
    gens = []
    for g in [(1, 0, 0), (0, 0, 1)]:
        gens.append([index[mul(g, e)] for e in elems])
    return gens


def affine_jordan_gens(dim):
    # F_3^dim acted on by translations and the full Jordan block I + N.
    size = 3**dim

    def decode(v):
        out = []
        for _ in range(dim):
            out.append(v % 3)
            v //= 3
        return out  # least significant digit first

    def encode(d):
        v = 0
        for i in reversed(range(dim)):
            v = v * 3 + d[i]
        return v

    translate = [0] * size
    jordan = [0] * size
    for v in range(size):
        d = decode(v)
        d_t = d[:]
        d_t[dim - 1] = (d_t[dim - 1] + 1) % 3  # top of the Jordan chain
        translate[v] = encode(d_t)
        d_j = [(d[i] + (d[i + 1] if i + 1 < dim else 0)) % 3 for i in range(dim)]
        jordan[v] = encode(d_j)
    return size, [translate, jordan]


def add_3groups(c):
    c.emit_perm("heisenberg:27", 27, heisenberg3_gens(), expect=27)
    c.emit_perm("c3wrc3", 9, [[1, 2, 0, 3, 4, 5, 6, 7, 8], [3, 4, 5, 6, 7, 8, 0, 1, 2]],
                expect=81)
    deg, gens = affine_jordan_gens(3)
    c.emit_perm("affine-j3:81", deg, gens, expect=81)


def add_products(c):
    upper, lower = sl23_gens()
    sl23 = (8, [upper, lower])
    s3 = (3, [cycle(3), [1, 0, 2]])
    s4 = (4, [cycle(4), [1, 0, 2, 3]])
    a4 = (4, [[1, 2, 0, 3], [0, 2, 3, 1]])
    d8 = (4, [cycle(4), [0, 3, 2, 1]])
    q8 = (8, [[2, 3, 1, 0, 6, 7, 5, 4], [4, 5, 7, 6, 1, 0, 2, 3]])
    cn = lambda n: (n, [cycle(n)])
    v4 = direct_product(*cn(2), *cn(2))

    entries = [
        ("a4xc2", a4, cn(2), 24),
        ("s3xs3", s3, s3, 36),
        ("a4xc3", a4, cn(3), 36),
        ("s4xc2", s4, cn(2), 48),
        ("sl23xc2", sl23, cn(2), 48),
        ("a4xc4", a4, cn(4), 48),
        ("a4xv4", a4, v4, 48),
        ("d8xs3", d8, s3, 48),
        ("q8xs3", q8, s3, 48),
        ("s3xs3xc2", s3, direct_product(*s3, *cn(2)), 72),
        ("s4xc3", s4, cn(3), 72),
        ("sl23xc3", sl23, cn(3), 72),
        ("a4xs3", a4, s3, 72),
        ("a4xd8", a4, d8, 96),
        ("s4xc4", s4, cn(4), 96),
        ("s4xv4", s4, v4, 96),
        ("sl23xc4", sl23, cn(4), 96),
        ("sl23xv4", sl23, v4, 96),
        ("gl23xc2", (8, [upper, lower, gl23_scale()]), cn(2), 96),
    ]
    for name, left, right, order in entries:
        deg, gens = direct_product(left[0], left[1], right[0], right[1])
        c.emit_perm(name, deg, gens, expect=order)


def gl23_scale():
    scale = [0] * 8
    for x in range(3):
        for y in range(3):
            if x == 0 and y == 0:
                continue
            scale[3 * x + y - 1] = 3 * ((2 * x) % 3) + y - 1
    return scale


def main():
    main_corpus = Corpus("corpus")
    add_cyclic(main_corpus)
    add_abelian(main_corpus)
    add_dihedral(main_corpus)
    add_dicyclic(main_corpus)
    add_metacyclic(main_corpus)
    add_linear_and_named(main_corpus)
    add_3groups(main_corpus)
    add_products(main_corpus)
    count = main_corpus.write_manifest()
    print(f"data/corpus: {count} groups")

    p3 = Corpus("corpus_p3")
    deg, gens = affine_jordan_gens(3)
    deg2, gens2 = direct_product(deg, gens, 3, [cycle(3)])
    p3.emit_perm("affine-j3xc3:243", deg2, gens2, expect=243)
    wr = (9, [[1, 2, 0, 3, 4, 5, 6, 7, 8], [3, 4, 5, 6, 7, 8, 0, 1, 2]])
    deg3, gens3 = direct_product(wr[0], wr[1], 3, [cycle(3)])
    p3.emit_perm("c3wrc3xc3:243", deg3, gens3, expect=243)
    deg4, gens4 = affine_jordan_gens(4)
    p3.emit_perm("affine-j4:729", deg4, gens4, expect=729)
    count = p3.write_manifest()
    print(f"data/corpus_p3: {count} groups")
    return 0


if __name__ == "__main__":
    sys.exit(main())
