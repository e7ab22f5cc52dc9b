"""Slow, independent reference computations used only by the tests."""

from itertools import permutations, product


def perm_product(word, n):
    """``s_{i1} ... s_{ik}`` as a one-line tuple, built by position swaps."""
    w = list(range(1, n + 1))
    for i in word:
        # right multiplication by s_i swaps positions i, i+1
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def reduced_words_bruteforce(w):
    n = len(w)
    k = inversions(w)
    return {word for word in product(range(1, n), repeat=k) if perm_product(word, n) == tuple(w)}


def bruhat_interval_subword(v):
    """Every u <= v: products of all subwords of one reduced word of v."""
    n = len(v)
    word = next(iter(reduced_words_bruteforce(v))) if inversions(v) else ()
    out = set()
    for mask in range(1 << len(word)):
        out.add(perm_product([x for k, x in enumerate(word) if mask >> k & 1], n))
    return out


def involutions_bruteforce(n):
    return [w for w in permutations(range(1, n + 1)) if all(w[w[i] - 1] == i + 1 for i in range(n))]


def barred_count_direct(n):
    """Sum over special compositions of n!/2^(number of 2-parts)."""
    from math import factorial

    def comps(m):
        if m == 0:
            yield ()
            return
        for first in (1, 2):
            if first <= m:
                for rest in comps(m - first):
                    yield (first,) + rest

    return sum(factorial(n) // 2 ** c.count(2) for c in comps(n)) if n else 1


def degenerate_count_direct(n):
    """Sum over compositions of multinomials times involution counts."""
    from math import comb

    inv = [1, 1]
    for m in range(2, n + 1):
        inv.append(inv[m - 1] + (m - 1) * inv[m - 2])

    def total(m):
        if m == 0:
            return 1
        return sum(comb(m, k) * inv[k] * total(m - k) for k in range(1, m + 1))

    return total(n)
