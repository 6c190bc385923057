"""Interval embedding of weights into symmetric-group data.

A weight with labels inside I+ = [a, b+1] maps to a sequence of length
m + n*N (N = b - a + 1): the left labels, then for each right label the
descending column b+1, b, ..., a with that value omitted.  The relative
length of two comparable weights is the difference of the lengths of the
longest permutations sorting their images to the common dominant point;
it does not depend on the interval.
"""

from __future__ import annotations

from .coxeter import longest_coset_length
from .weights import Weight, bruhat_leq


class LabelsOutsideInterval(ValueError):
    pass


class NotComparable(ValueError):
    pass


def minimal_interval(ws):
    """Strict bounds [min - 1, max + 1] around the labels of a weight set."""
    ws = list(ws)
    if not ws:
        raise ValueError("empty weight set")
    labels = [x for w in ws for x in w.labels]
    return (min(labels) - 1, max(labels) + 1)


def phi(w: Weight, interval):
    """Embed a weight into Z^(m + n*N) over interval = (a, b)."""
    a, b = interval
    if a > b:
        raise ValueError("empty interval")
    if any(x < a or x > b + 1 for x in w.labels):
        raise LabelsOutsideInterval(f"{w} outside [{a}, {b + 1}]")
    out = list(w.left)
    for beta in w.right:
        col = [c for c in range(b + 1, a - 1, -1) if c != beta]
        assert all(col[t] > col[t + 1] for t in range(len(col) - 1))
        out.extend(col)
    return tuple(out)


def sorting_length(w: Weight, interval) -> int:
    """Length of the longest permutation mapping the dominant orbit point to
    phi(w); counted directly as #{i < j : t_i <= t_j}."""
    return longest_coset_length(phi(w, interval))


def length_fn(hi: Weight, lo: Weight, interval=None) -> int:
    """Relative length l(hi, lo) for lo <= hi in the Bruhat order."""
    if lo == hi:
        return 0
    if not bruhat_leq(lo, hi):
        raise NotComparable(f"{lo} is not below {hi}")
    if interval is None:
        interval = minimal_interval([hi, lo])
    return sorting_length(lo, interval) - sorting_length(hi, interval)


def length_fn_unchecked(hi: Weight, lo: Weight, interval=None) -> int:
    """As length_fn but without the Bruhat comparability precondition;
    used for screening bounds where comparability is established separately."""
    if interval is None:
        interval = minimal_interval([hi, lo])
    return sorting_length(lo, interval) - sorting_length(hi, interval)
