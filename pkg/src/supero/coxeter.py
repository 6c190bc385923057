"""Symmetric group combinatorics: length, longest coset representatives,
Robinson-Schensted insertion, and the a-function computed from the RSK shape.

Permutations are tuples in one-line notation on 1..K.  Products of two
symmetric groups (the Weyl group of gl(m|n)) are pairs of such tuples.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations as _iterperms


def identity(k):
    return tuple(range(1, k + 1))


def inversions(p) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


length = inversions


def multiply(p, q):
    """(p*q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def longest_element(k):
    return tuple(range(k, 0, -1))


def all_permutations(k):
    return [tuple(p) for p in _iterperms(range(1, k + 1))]


def longest_with_image(target):
    """Longest w in S_K with w(D) = target, D the decreasing sort of target.

    Acting on positions, (w . D)_i = D_{w^-1(i)}.  The permutation returned
    maximizes length among all solutions (ties in D resolved by reversing
    equal blocks); its length is #{i < j : target_i <= target_j}.
    """
    target = tuple(target)
    dom = sorted(target, reverse=True)
    # positions of each value in D, consumed right-to-left to maximize length
    slots = {}
    for pos, v in enumerate(dom):
        slots.setdefault(v, []).append(pos + 1)
    winv = [0] * len(target)
    for i, v in enumerate(target):
        winv[i] = slots[v].pop()
    return inverse(tuple(winv))


def longest_coset_length(target) -> int:
    """Length of longest_with_image(target), by direct count."""
    t = tuple(target)
    n = len(t)
    return sum(1 for i in range(n) for j in range(i + 1, n) if t[i] <= t[j])


def rsk_shape(p):
    """Shape of the Robinson-Schensted insertion tableau of p."""
    rows = []
    for x in p:
        for row in rows:
            # bisect for the first entry > x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] > x:
                    hi = mid
                else:
                    lo = mid + 1
            if lo == len(row):
                row.append(x)
                x = None
                break
            row[lo], x = x, row[lo]
        if x is not None:
            rows.append([x])
    return tuple(len(r) for r in rows)


def shape_n_invariant(shape) -> int:
    """n(lambda) = Sum (i-1) lambda_i."""
    return sum(i * part for i, part in enumerate(shape))


def a_function(p) -> int:
    """Lusztig a-value of a permutation, via the RSK shape.

    For an element of a product of symmetric groups pass a tuple of
    one-line tuples; the value is the sum over factors.
    """
    if p and isinstance(p[0], tuple):
        return sum(a_function(f) for f in p)
    return shape_n_invariant(rsk_shape(p))


def descents_right(p):
    """Right descent set: {i : p(i) > p(i+1)}, 1-based positions."""
    return {i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]}


def apply_simple_right(p, i):
    """p * s_i (swap values at positions i, i+1)."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def apply_simple_left(p, i):
    """s_i * p (swap the values i, i+1 wherever they sit)."""
    q = list(p)
    a, b = q.index(i), q.index(i + 1)
    q[a], q[b] = q[b], q[a]
    return tuple(q)


def reduced_word(p):
    """A reduced word (list of simple reflection indices), right-greedy."""
    p = list(p)
    word = []
    n = len(p)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return word


def bruhat_leq_perm(x, y) -> bool:
    """Bruhat order on S_K: x <= y iff every sorted prefix of x is entrywise
    <= the sorted prefix of y (Ehresmann criterion)."""
    n = len(x)
    if inversions(x) > inversions(y):
        return False
    for i in range(1, n):
        xs = sorted(x[:i])
        ys = sorted(y[:i])
        if any(a > b for a, b in zip(xs, ys)):
            return False
    return True
