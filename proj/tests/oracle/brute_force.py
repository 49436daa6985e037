#!/usr/bin/env python3
"""Brute-force reference values for small matrix groups over Z/p^r and F_p[t]/t^r.

Test-only. Shares no code with the C++ library: every group is enumerated by
scanning all n x n matrices, conjugacy classes come from conjugating by every
group element, and exponents come from element orders of every element.
The printed numbers are frozen into tests/*.cpp.
"""
import itertools
import sys


class IntMod:
    """Z/N with elements 0..N-1."""

    def __init__(self, p, r):
        self.p, self.r, self.N = p, r, p ** r
        self.elems = list(range(self.N))
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return (a + b) % self.N

    def mul(self, a, b):
        return (a * b) % self.N

    def neg(self, a):
        return (-a) % self.N


class TruncPoly:
    """F_p[t]/t^r with elements as coefficient tuples."""

    def __init__(self, p, r):
        self.p, self.r = p, r
        self.elems = list(itertools.product(range(p), repeat=r))
        self.zero = tuple([0] * r)
        self.one = tuple([1] + [0] * (r - 1))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        c = [0] * self.r
        for i in range(self.r):
            for j in range(self.r - i):
                c[i + j] = (c[i + j] + a[i] * b[j]) % self.p
        return tuple(c)

    def neg(self, a):
        return tuple((-x) % self.p for x in a)


def mat_mul(R, a, b, n):
    out = []
    for i in range(n):
        for j in range(n):
            s = R.zero
            for k in range(n):
                s = R.add(s, R.mul(a[i * n + k], b[k * n + j]))
            out.append(s)
    return tuple(out)


def det(R, a, n):
    if n == 1:
        return a[0]
    total = R.zero
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = R.one
        for i in range(n):
            term = R.mul(term, a[i * n + perm[i]])
        total = R.add(total, R.neg(term) if inv % 2 else term)
    return total


def is_unit(R, x):
    return any(R.mul(x, y) == R.one for y in R.elems)


def group(R, n, family):
    units = {x for x in R.elems if is_unit(R, x)}
    elems = []
    for entries in itertools.product(R.elems, repeat=n * n):
        d = det(R, entries, n)
        if family == "GL" and d in units:
            elems.append(entries)
        if family == "SL" and d == R.one:
            elems.append(entries)
    return elems


def analyse(R, n, family, kp):
    G = group(R, n, family)
    idx = {g: i for i, g in enumerate(G)}
    N = len(G)
    ident = tuple(R.one if i == j else R.zero for i in range(n) for j in range(n))
    mul = lambda a, b: mat_mul(R, a, b, n)
    inv = {}
    for g in G:
        for h in G:
            if mul(g, h) == ident:
                inv[g] = h
                break
    cls = [-1] * N
    sizes = []
    for i, g in enumerate(G):
        if cls[i] >= 0:
            continue
        c = len(sizes)
        orbit = {mul(mul(h, g), inv[h]) for h in G}
        for x in orbit:
            cls[idx[x]] = c
        sizes.append(len(orbit))

    def order(g):
        k, x = 1, g
        while x != ident:
            x = mul(x, g)
            k += 1
        return k

    def power(g, e):
        x = ident
        for _ in range(e):
            x = mul(x, g)
        return x

    orders = [order(g) for g in G]
    pexp = 1
    for o in orders:
        q = 1
        while o % kp == 0:
            o //= kp
            q *= kp
        pexp = max(pexp, q)
    dims = []
    k = 0
    while True:
        image = {cls[idx[power(g, kp ** k)]] for g in G}
        dims.append(len(image))
        if k > 0 and dims[-1] == dims[-2]:
            break
        k += 1
    dims.pop()
    reps = {}
    for i in range(N):
        reps.setdefault(cls[i], i)
    preg = sum(1 for c, i in reps.items() if orders[i] % kp != 0)
    return {
        "order": N,
        "classes": len(sizes),
        "sizes": sorted(sizes),
        "dims": dims,
        "p_exponent": pexp,
        "p_regular": preg,
    }


def main():
    cases = [
        ("C4 = GL1(Z/5)", IntMod(5, 1), 1, "GL", 2),
        ("S3 = SL2(Z/2)", IntMod(2, 1), 2, "SL", 3),
        ("S3 = SL2(Z/2)", IntMod(2, 1), 2, "SL", 2),
        ("SL2(Z/4)", IntMod(2, 2), 2, "SL", 2),
        ("SL2(F2[t]/t^2)", TruncPoly(2, 2), 2, "SL", 2),
        ("GL2(F3)", IntMod(3, 1), 2, "GL", 3),
        ("GL2(Z/4)", IntMod(2, 2), 2, "GL", 2),
        ("GL2(F2[t]/t^2)", TruncPoly(2, 2), 2, "GL", 2),
        ("GL1(Z/9)", IntMod(3, 2), 1, "GL", 3),
        ("GL1(F3[t]/t^2)", TruncPoly(3, 2), 1, "GL", 3),
        ("GL1(Z/27)", IntMod(3, 3), 1, "GL", 3),
        ("GL1(F3[t]/t^3)", TruncPoly(3, 3), 1, "GL", 3),
        ("SL2(Z/8)", IntMod(2, 3), 2, "SL", 2),
        ("SL2(F2[t]/t^3)", TruncPoly(2, 3), 2, "SL", 2),
    ]
    for name, R, n, fam, kp in cases:
        res = analyse(R, n, fam, kp)
        print(f"{name} p={kp}: {res}")
        sys.stdout.flush()


def sylow_exponent(R, n, family, residue):
    """Max order among all matrices whose reduction mod pi is upper unitriangular."""
    ident = tuple(R.one if i == j else R.zero for i in range(n) for j in range(n))
    best = 1
    for entries in itertools.product(R.elems, repeat=n * n):
        ok = all(
            residue(entries[i * n + j]) == (1 if i == j else 0)
            for i in range(n) for j in range(n) if i >= j
        )
        if not ok:
            continue
        if family == "SL" and det(R, entries, n) != R.one:
            continue
        k, x = 1, entries
        while x != ident:
            x = mat_mul(R, x, entries, n)
            k += 1
        best = max(best, k)
    return best


def exponent_cases():
    zres = lambda R: (lambda a: a % R.p)
    pres = lambda a: a[0]
    for name, R, fam in [
        ("SL2(Z/16)", IntMod(2, 4), "SL"),
        ("SL2(F2[t]/t^4)", TruncPoly(2, 4), "SL"),
        ("GL2(Z/27)", IntMod(3, 3), "GL"),
        ("GL2(F3[t]/t^3)", TruncPoly(3, 3), "GL"),
        ("GL2(Z/8)", IntMod(2, 3), "GL"),
        ("GL2(F2[t]/t^3)", TruncPoly(2, 3), "GL"),
        ("GL2(Z/9)", IntMod(3, 2), "GL"),
        ("GL2(F3[t]/t^2)", TruncPoly(3, 2), "GL"),
    ]:
        res = zres(R) if isinstance(R, IntMod) else pres
        print(f"{name} sylow exponent: {sylow_exponent(R, 2, fam, res)}")
        sys.stdout.flush()


if __name__ == "__main__":
    if "--exponents" in sys.argv:
        exponent_cases()
    else:
        main()
