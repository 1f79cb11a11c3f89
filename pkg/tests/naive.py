"""Independent brute-force oracle used by the tests.

Everything here is a literal loop translation of the defining quantifiers,
computed over pair sets rather than row masks. The oracle deliberately
shares no code with the library's bitmask implementations so the two routes
check each other.
"""

from __future__ import annotations

from itertools import product


def pairs_of(r) -> set[tuple[int, int]]:
    n = r.base.size
    return {(x, y) for x in range(n) for y in range(n) if r.has(x, y)}


def naive_leq_neg(r) -> set[tuple[int, int]]:
    n = r.base.size
    return {(x, y) for x in range(n) for y in range(n) if not r.has(y, x)}


def naive_leq_pos(r) -> set[tuple[int, int]]:
    n = r.base.size
    out = set()
    for x in range(n):
        for y in range(n):
            ok = True
            for z in range(n):
                if r.has(z, x) and not r.has(z, y):
                    ok = False
                if r.has(y, z) and not r.has(x, z):
                    ok = False
            if ok:
                out.add((x, y))
    return out


def naive_asymmetric(r) -> bool:
    n = r.base.size
    return not any(r.has(x, y) and r.has(y, x) for x in range(n) for y in range(n))


def naive_transitive(r) -> bool:
    n = r.base.size
    return all(
        r.has(x, z)
        for x in range(n)
        for y in range(n)
        for z in range(n)
        if r.has(x, y) and r.has(y, z)
    )


def naive_cotransitive(r) -> bool:
    n = r.base.size
    for x in range(n):
        for y in range(n):
            if r.has(x, y):
                for z in range(n):
                    if not r.has(x, z) and not r.has(z, y):
                        return False
    return True


def naive_neg_antisymmetric(r) -> bool:
    n = r.base.size
    return all(
        r.base.eq(x, y)
        for x in range(n)
        for y in range(n)
        if not r.has(x, y) and not r.has(y, x)
    )


def naive_pos_antisymmetric(r) -> bool:
    pos = naive_leq_pos(r)
    n = r.base.size
    return all(
        r.base.eq(x, y)
        for x in range(n)
        for y in range(n)
        if (x, y) in pos and (y, x) in pos
    )


def naive_discrete(r) -> bool:
    n = r.base.size
    return all(
        r.has(x, y) or r.base.eq(x, y) or r.has(y, x) for x in range(n) for y in range(n)
    )


def naive_well_defined(r) -> bool:
    n = r.base.size
    for x, xp, y, yp in product(range(n), repeat=4):
        if r.base.eq(x, xp) and r.base.eq(y, yp) and r.has(x, y) and not r.has(xp, yp):
            return False
    return True


def naive_lex_pairs(a, b) -> set[tuple[int, int]]:
    """Pairs of the lexicographic product, on flattened indices."""
    nb = b.base.size
    out = set()
    for x in range(a.base.size):
        for y in range(nb):
            for xp in range(a.base.size):
                for yp in range(nb):
                    if a.has(x, xp) or (a.base.eq(x, xp) and b.has(y, yp)):
                        out.add((x * nb + y, xp * nb + yp))
    return out


def naive_weak_lex_pairs(a, b) -> set[tuple[int, int]]:
    pos = naive_leq_pos(a)
    nb = b.base.size
    out = set()
    for x in range(a.base.size):
        for y in range(nb):
            for xp in range(a.base.size):
                for yp in range(nb):
                    c1 = (x, xp) in pos
                    c2 = (not a.base.eq(x, xp)) or b.has(y, yp)
                    c3 = a.base.eq(x, xp) or a.has(x, xp)
                    if c1 and c2 and c3:
                        out.add((x * nb + y, xp * nb + yp))
    return out


def naive_coarse_pairs(a, b, side: str) -> set[tuple[int, int]]:
    nb = b.base.size
    out = set()
    for x in range(a.base.size):
        for y in range(nb):
            for xp in range(a.base.size):
                for yp in range(nb):
                    related = a.has(x, xp) if side == "left" else b.has(y, yp)
                    if related:
                        out.add((x * nb + y, xp * nb + yp))
    return out


def naive_nary_lex_pairs(parts) -> set[tuple[int, int]]:
    """Direct n-ary definition on row-major tuple indices: some position is
    strictly related and all earlier positions are equal."""
    sizes = [p.base.size for p in parts]
    tuples = list(product(*(range(s) for s in sizes)))

    def index(t):
        i = 0
        for s, v in zip(sizes, t):
            i = i * s + v
        return i

    out = set()
    for s in tuples:
        for t in tuples:
            for k in range(len(parts)):
                if parts[k].has(s[k], t[k]) and all(
                    parts[j].base.eq(s[j], t[j]) for j in range(k)
                ):
                    out.add((index(s), index(t)))
                    break
    return out
