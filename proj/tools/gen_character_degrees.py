#!/usr/bin/env python3
"""Generate data/character_degrees.txt.

Symmetric-group degrees come from the hook length formula over partitions.
Alternating-group degrees follow from restriction: a non-self-conjugate
pair {l, l'} contributes one irreducible of the same degree, while a
self-conjugate partition splits into two of half the degree. The lists for
M11, GL(3,2) and SL(3,3) are the published character tables.
"""

import sys
from math import factorial


def partitions(n, cap=None):
    if cap is None:
        cap = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hook_degree(shape):
    n = sum(shape)
    cols = [0] * (shape[0] if shape else 0)
    for row in shape:
        for j in range(row):
            cols[j] += 1
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j) + (cols[j] - i) - 1
    assert factorial(n) % prod == 0
    return factorial(n) // prod


def conjugate(shape):
    if not shape:
        return ()
    return tuple(sum(1 for row in shape if row > j) for j in range(shape[0]))


def sym_degrees(n):
    return sorted(hook_degree(p) for p in partitions(n))


def alt_degrees(n):
    degrees = []
    seen = set()
    for p in partitions(n):
        q = conjugate(p)
        if p == q:
            d = hook_degree(p)
            assert d % 2 == 0
            degrees += [d // 2, d // 2]
        elif q not in seen:
            degrees.append(hook_degree(p))
        seen.add(p)
    return sorted(degrees)


FIXED = {
    "M11": (7920, [1, 10, 10, 10, 11, 16, 16, 44, 45, 55]),
    "GL(3,2)": (168, [1, 3, 3, 6, 7, 8]),
    "SL(3,3)": (5616, [1, 12, 13, 16, 16, 16, 16, 26, 26, 26, 27, 39]),
}


def main():
    lines = ["# name |G| k d1 ... dk"]
    for n in range(1, 9):
        degs = sym_degrees(n)
        lines.append(f"S{n} {factorial(n)} {len(degs)} " +
                     " ".join(map(str, degs)))
    for n in range(2, 9):
        degs = alt_degrees(n)
        order = factorial(n) // 2 if n > 1 else 1
        lines.append(f"A{n} {order} {len(degs)} " + " ".join(map(str, degs)))
    for name, (order, degs) in FIXED.items():
        lines.append(f"{name} {order} {len(degs)} " +
                     " ".join(map(str, sorted(degs))))
    for line in lines[1:]:
        fields = line.split()
        order, k = int(fields[1]), int(fields[2])
        degs = list(map(int, fields[3:]))
        assert len(degs) == k and sum(d * d for d in degs) == order, line
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
