"""Brute-force reference values for the frozen expectations in the C++ tests.

Everything here is computed by direct enumeration with plain Python sets and
itertools; nothing is shared with the C++ implementation.
"""
from itertools import combinations, permutations
from math import comb, factorial


def star(n, k, x=1):
    return [frozenset(s) for s in combinations(range(1, n + 1), k) if x in s]


def omega(F):
    return sum(len(a & b) for a, b in combinations(F, 2))


def omega_cross(A, B):
    return sum(len(a & b) for a in A for b in B)


def profile(A, B, top):
    c = [0] * (top + 1)
    for a in A:
        for b in B:
            c[len(a & b)] += 1
    return c


def intersecting(F):
    return all(a & b for a, b in combinations(F, 2))


def mask(s):
    return sum(1 << e for e in s)


def canon(F, n):
    best = None
    for p in permutations(range(1, n + 1)):
        img = sorted(mask({p[e - 1] for e in s}) for s in F)
        if best is None or img < best:
            best = img
    return best


def canon_pair(A, B, n):
    best = None
    for p in permutations(range(1, n + 1)):
        img = (tuple(sorted(mask({p[e - 1] for e in s}) for s in A)),
               tuple(sorted(mask({p[e - 1] for e in s}) for s in B)))
        if best is None or img < best:
            best = img
    return best


def naive_max_intersecting(n, k):
    sets = [frozenset(s) for s in combinations(range(1, n + 1), k)]
    best, wit = -1, set()
    for bits in range(1, 1 << len(sets)):
        F = [sets[i] for i in range(len(sets)) if bits >> i & 1]
        if not intersecting(F):
            continue
        w = omega(F)
        if w > best:
            best, wit = w, set()
        if w == best:
            wit.add(tuple(canon(F, n)))
    return best, sorted(wit)


def max_cross(n, k, l):
    As = [frozenset(s) for s in combinations(range(1, n + 1), k)]
    Bs = [frozenset(s) for s in combinations(range(1, n + 1), l)]
    best, wit = -1, set()
    for bits in range(1, 1 << len(As)):
        A = [As[i] for i in range(len(As)) if bits >> i & 1]
        B = [b for b in Bs if all(a & b for a in A)]
        w = omega_cross(A, B)
        if w > best:
            best, wit = w, set()
        if w == best and w > 0:
            wit.add(canon_pair(A, B, n))
    return best, wit


def cyclic_orders(n):
    for rest in permutations(range(2, n + 1)):
        yield (1,) + rest


def interval_start(order, s):
    n = len(order)
    if not 0 < len(s) < n:
        return None
    for st in range(n):
        if {order[(st + j) % n] for j in range(len(s))} == set(s):
            return st
    return None


def representable(order, a, b):
    n = len(order)
    sa, sb, sm = interval_start(order, a), interval_start(order, b), interval_start(order, a & b)
    if sa is None or sb is None or sm is None:
        return False
    right_a = order[(sa + len(a) - 1) % n]
    right_m = order[(sm + len(a & b) - 1) % n]
    return right_a == right_m and order[sm] == order[sb]


def double_count(n, A, B, m):
    total = 0
    pairs = [(a, b) for a in A for b in B if len(a & b) == m]
    per = {}
    for o in cyclic_orders(n):
        for a, b in pairs:
            if representable(o, a, b):
                total += 1
                per[(a, b)] = per.get((a, b), 0) + 1
    return total, len(pairs), sorted(set(per.values()))


def katona(n, k):
    order = tuple(range(1, n + 1))
    ivs = [frozenset(order[(s + j) % n] for j in range(k)) for s in range(n)]
    best, fams = 0, []
    for bits in range(1 << n):
        F = [ivs[i] for i in range(n) if bits >> i & 1]
        if not intersecting(F):
            continue
        if len(F) > best:
            best, fams = len(F), []
        if len(F) == best:
            fams.append(F)
    fixed = all(any(set(F) == {iv for iv in ivs if x in iv} for x in range(1, n + 1)) for F in fams)
    return best, len(fams), fixed


if __name__ == "__main__":
    print("star(6,3,1) size", len(star(6, 3)))
    print("omega star41-like", omega([frozenset(s) for s in [{1, 2}, {1, 3}, {1, 4}]]))
    print("omega star52", omega(star(5, 2)))
    print("cross star52", omega_cross(star(5, 2), star(5, 2)))
    print("cross star42", omega_cross(star(4, 2), star(4, 2)))
    print("profile star52", profile(star(5, 2), star(5, 2), 2))
    print("canon triangle", canon([{1, 3}, {1, 4}, {3, 4}], 4))
    print("canon star423", canon(star(4, 2, 3), 4), [mask(s) for s in star(4, 2, 1)])
    for n, k in [(5, 2), (4, 2), (6, 2), (3, 1), (4, 1)]:
        print("naive", n, k, naive_max_intersecting(n, k))
    for n, k, l in [(5, 2, 2), (4, 2, 2), (3, 2, 1)]:
        b, w = max_cross(n, k, l)
        print("cross", n, k, l, b, len(w), w)
    for n, m in [(5, 1), (5, 2), (6, 1), (6, 2)]:
        print("double", n, m, double_count(n, star(n, 2), star(n, 2), m))
    for n, k in [(5, 2), (4, 2), (7, 3), (6, 3), (8, 3)]:
        print("katona", n, k, katona(n, k))
    print("bound 8 3", comb(comb(7, 2), 2) + 7 * comb(comb(6, 1), 2))
    print("bound 7 2", comb(comb(6, 1), 2) + 6 * comb(comb(5, 0), 2))
    print("bound 10 3", comb(comb(9, 2), 2) + 9 * comb(comb(8, 1), 2))
    print("bound 12 4", comb(comb(11, 3), 2) + 11 * comb(comb(10, 2), 2))
