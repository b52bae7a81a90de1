"""Brute-force reference computations, deliberately independent of the package.

Nothing here touches numpy or the package's row reduction; everything is
enumeration over plain tuples.
"""

import itertools


def span(rows, q):
    """Every GF(q) combination of ``rows`` (duplicates collapse in the set)."""
    n = len(rows[0])
    words = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        words.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(n)))
    return words


def weight(word):
    return sum(1 for x in word if x)


def distribution(words):
    out = {}
    for w in words:
        out[weight(w)] = out.get(weight(w), 0) + 1
    return dict(sorted(out.items()))


def dual_min_distance(rows, q):
    """Minimum weight of all nonzero vectors orthogonal to every row."""
    n = len(rows[0])
    best = None
    for v in itertools.product(range(q), repeat=n):
        if not any(v):
            continue
        if all(sum(a * b for a, b in zip(v, r)) % q == 0 for r in rows):
            if best is None or weight(v) < best:
                best = weight(v)
    return best


def poly_remainder(a, b, q):
    """Remainder of a / b over GF(q); coefficient lists, lowest degree first."""
    a = [x % q for x in a]
    while len(b) and b[-1] % q == 0:
        b = b[:-1]
    lead_inv = next(x for x in range(1, q) if x * b[-1] % q == 1)
    while len(a) >= len(b):
        c = a[-1] * lead_inv % q
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % q
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def cyclic_shifts(word):
    return [tuple(word[-s:] + word[:-s]) if s else tuple(word) for s in range(len(word))]


def simplex_generators_brute(q, k):
    """All monic degree m - k divisors of x^m - 1 whose cyclic code is equidistant."""
    m = (q**k - 1) // (q - 1)
    xm1 = [q - 1] + [0] * (m - 1) + [1]
    deg = m - k
    found = []
    for low in itertools.product(range(q), repeat=deg):
        g = list(low) + [1]
        if poly_remainder(xm1, g, q):
            continue
        row = g + [0] * (m - len(g))
        code = span(cyclic_shifts(row)[:k], q)
        if {weight(w) for w in code if any(w)} == {q ** (k - 1)} and len(code) == q**k:
            found.append(tuple(g))
    return sorted(found)
