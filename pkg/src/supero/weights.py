"""Weight combinatorics for gl(m|n) and sl(m|n) with the distinguished Borel.

Weights are stored as integer label vectors (left side of length m, right
side of length n).  The labels are the pairings of lambda + delta with the
basis eps_i / delta_j, where delta is the integral shift with
mu_i = lambda_{eps_i} - i and mu_{m+j} = -lambda_{delta_j} - (m - j + 1).
With this dictionary the Weyl group S_m x S_n acts by permuting labels per
side, and the odd pairing is (lambda + rho, eps_i - delta_j) = mu_i - mu_{m+j}.

Conventions pinned here and used by everything downstream:

* even lowering on the left swaps positions i < j when mu_i > mu_j;
* even lowering on the right swaps positions i < j when mu_{m+i} < mu_{m+j};
* an atypical pair mu_i = mu_{m+j} lowers to the weight with both labels
  decremented by one;
* dominant regular means left labels strictly decreasing and right labels
  strictly increasing (pinned by the labels of the trivial module, e.g.
  (-1 | -1, 0) for gl(1|2));
* antidominant means no even lowering applies: left weakly increasing and
  right weakly decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple


class NonIntegralWeight(ValueError):
    pass


class NotLinked(ValueError):
    pass


class WeightParseError(ValueError):
    pass


@dataclass(frozen=True)
class Algebra:
    """gl(m|n) or sl(m|n); sl(n|n) is excluded (no grading element z)."""

    kind: str
    m: int
    n: int

    def __post_init__(self):
        if self.kind not in ("gl", "sl"):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be >= 1")
        if self.kind == "sl" and self.m == self.n:
            raise ValueError("sl(n|n) is not supported")

    @property
    def longest_weyl_length(self):
        m, n = self.m, self.n
        return m * (m - 1) // 2 + n * (n - 1) // 2

    @property
    def dim_g1(self):
        return self.m * self.n

    def __str__(self):
        return f"{self.kind}({self.m}|{self.n})"


class Weight(NamedTuple):
    """Integral weight in label form: left in Z^m, right in Z^n."""

    left: tuple
    right: tuple

    @property
    def labels(self):
        return self.left + self.right

    def __str__(self):
        return ",".join(map(str, self.left)) + "|" + ",".join(map(str, self.right))


class OddRoot(NamedTuple):
    """sign * (eps_i - delta_j); i, j are 1-based."""

    i: int
    j: int
    sign: int = 1


def weight(left, right):
    return Weight(tuple(int(x) for x in left), tuple(int(x) for x in right))


def parse_weight(text, alg=None):
    """Parse the "a,b,c|d" syntax; rejects non-integer labels."""
    if text.count("|") != 1:
        raise WeightParseError(f"expected one '|' separator in {text!r}")
    lstr, rstr = text.split("|")
    try:
        left = tuple(int(t.strip()) for t in lstr.split(",") if t.strip() != "")
        right = tuple(int(t.strip()) for t in rstr.split(",") if t.strip() != "")
    except ValueError:
        raise WeightParseError(f"non-integer label in {text!r}") from None
    w = Weight(left, right)
    if alg is not None and (len(left), len(right)) != (alg.m, alg.n):
        raise WeightParseError(f"{text!r} does not match {alg}")
    return w


def labels_from_highest_weight(coeffs, alg):
    """Label vector of a highest weight given by its eps/delta coefficients.

    coeffs lists lambda_{eps_1}..lambda_{eps_m}, lambda_{delta_1}..lambda_{delta_n}.
    """
    m, n = alg.m, alg.n
    if len(coeffs) != m + n:
        raise ValueError(f"expected {m + n} coefficients")
    vals = [Fraction(c) for c in coeffs]
    left = [vals[i] - (i + 1) for i in range(m)]
    right = [-vals[m + j] - (m - j) for j in range(n)]  # j is 0-based: m - (j+1) + 1
    out = left + right
    if any(v.denominator != 1 for v in out):
        raise NonIntegralWeight(f"non-integral labels from {coeffs}")
    return Weight(tuple(int(v) for v in left), tuple(int(v) for v in right))


def highest_weight_from_labels(w, alg):
    """Inverse of labels_from_highest_weight."""
    m = alg.m
    eps = [w.left[i] + (i + 1) for i in range(m)]
    delta = [-(w.right[j] + (m - j)) for j in range(alg.n)]
    return eps + delta


def odd_pairing(w, i, j):
    """(lambda + rho, eps_i - delta_j) in label form; i, j 1-based."""
    return w.left[i - 1] - w.right[j - 1]


def atypical_roots(w):
    """All positive odd roots eps_i - delta_j with vanishing pairing."""
    return [
        OddRoot(i + 1, j + 1)
        for i in range(len(w.left))
        for j in range(len(w.right))
        if w.left[i] == w.right[j]
    ]


def atypicality(w):
    """Size of a maximal matching of equal labels across the two sides."""
    lcount = {}
    for x in w.left:
        lcount[x] = lcount.get(x, 0) + 1
    total = 0
    rcount = {}
    for x in w.right:
        rcount[x] = rcount.get(x, 0) + 1
    for c, k in rcount.items():
        total += min(k, lcount.get(c, 0))
    return total


def is_typical(w):
    return atypicality(w) == 0


def block_signature(w):
    """Signed label multiset Sum e_{left} - Sum e_{right}, as a sorted tuple.

    Two integral gl-weights are linked iff their signatures agree.
    """
    counts = {}
    for x in w.left:
        counts[x] = counts.get(x, 0) + 1
    for x in w.right:
        counts[x] = counts.get(x, 0) - 1
    return tuple(sorted((c, k) for c, k in counts.items() if k))


def sl_shift(w, t):
    return Weight(tuple(x + t for x in w.left), tuple(x + t for x in w.right))


def sl_normal_form(w):
    """Representative modulo the simultaneous shift (t,..,t|t,..,t)."""
    t = w.right[-1]
    return sl_shift(w, -t)


def weights_equal(w1, w2, alg):
    if alg.kind == "gl":
        return w1 == w2
    return sl_normal_form(w1) == sl_normal_form(w2)


def linked(w1, w2, alg):
    """Same block: equal signed label multisets (modulo shift for sl)."""
    if len(w1.left) != len(w2.left) or len(w1.right) != len(w2.right):
        raise ValueError("weights of different shapes")
    if alg.kind == "gl":
        return block_signature(w1) == block_signature(w2)
    s1, s2 = sum(w1.labels), sum(w2.labels)
    d = s2 - s1
    if d % (alg.m + alg.n):
        return False
    return block_signature(sl_shift(w1, d // (alg.m + alg.n))) == block_signature(w2)


def core(w):
    """Remove one maximal matching of equal cross-side labels.

    Returns (core_weight, k) where k is the atypicality; the core is the
    dominant representative (left sorted decreasing, right increasing) of a
    typical gl(m-k|n-k) weight.
    """
    left = list(w.left)
    right = []
    k = 0
    for x in w.right:
        if x in left:
            left.remove(x)
            k += 1
        else:
            right.append(x)
    return Weight(tuple(sorted(left, reverse=True)), tuple(sorted(right))), k


def z_grade(w):
    """Sum of the left labels (z-eigenvalue up to a block-constant shift)."""
    return sum(w.left)


def dominance_class(w):
    """('dominant_regular' | 'antidominant' | 'neither', regular_flag)."""
    left, right = w.left, w.right
    regular = len(set(left)) == len(left) and len(set(right)) == len(right)
    dom = all(left[i] > left[i + 1] for i in range(len(left) - 1)) and all(
        right[j] < right[j + 1] for j in range(len(right) - 1)
    )
    if dom and regular:
        return "dominant_regular", True
    anti = all(left[i] <= left[i + 1] for i in range(len(left) - 1)) and all(
        right[j] >= right[j + 1] for j in range(len(right) - 1)
    )
    if anti:
        return "antidominant", regular
    return "neither", regular


def is_dominant_regular(w):
    return dominance_class(w)[0] == "dominant_regular"


def is_antidominant(w):
    return dominance_class(w)[0] == "antidominant"


def bruhat_lower_covers(w) -> list:
    """One-step Bruhat lowerings (generators of the order, not only covers).

    Even moves use all transpositions per side; the odd move subtracts an
    atypical root, decrementing the two matched labels.
    """
    out = []
    left, right = w.left, w.right
    m, n = len(left), len(right)
    for i in range(m):
        for j in range(i + 1, m):
            if left[i] > left[j]:
                ll = list(left)
                ll[i], ll[j] = ll[j], ll[i]
                out.append(Weight(tuple(ll), right))
    for i in range(n):
        for j in range(i + 1, n):
            if right[i] < right[j]:
                rr = list(right)
                rr[i], rr[j] = rr[j], rr[i]
                out.append(Weight(left, tuple(rr)))
    for i in range(m):
        for j in range(n):
            if left[i] == right[j]:
                ll, rr = list(left), list(right)
                ll[i] -= 1
                rr[j] -= 1
                out.append(Weight(tuple(ll), tuple(rr)))
    return out


def bruhat_raising_covers(w, max_label=None) -> list:
    """Inverse moves; used to enumerate upsets inside an interval."""
    out = []
    left, right = w.left, w.right
    m, n = len(left), len(right)
    for i in range(m):
        for j in range(i + 1, m):
            if left[i] < left[j]:
                ll = list(left)
                ll[i], ll[j] = ll[j], ll[i]
                out.append(Weight(tuple(ll), right))
    for i in range(n):
        for j in range(i + 1, n):
            if right[i] > right[j]:
                rr = list(right)
                rr[i], rr[j] = rr[j], rr[i]
                out.append(Weight(left, tuple(rr)))
    for i in range(m):
        for j in range(n):
            if left[i] == right[j]:
                ll, rr = list(left), list(right)
                ll[i] += 1
                rr[j] += 1
                if max_label is None or ll[i] <= max_label:
                    out.append(Weight(tuple(ll), tuple(rr)))
    return out


def bruhat_leq(lo, hi, alg=None) -> bool:
    """Decide lo <= hi in the Bruhat order by pruned downward search from hi."""
    if len(lo.left) != len(hi.left) or len(lo.right) != len(hi.right):
        raise ValueError("weights of different shapes")
    if lo == hi:
        return True
    a = Algebra("gl", len(lo.left), len(lo.right)) if alg is None else alg
    if a.kind == "sl":
        # search in gl labels after aligning the shift
        s1, s2 = sum(lo.labels), sum(hi.labels)
        d = s2 - s1
        if d % (a.m + a.n):
            return False
        lo = sl_shift(lo, d // (a.m + a.n))
        if lo == hi:
            return True
    if not linked(lo, hi, Algebra("gl", len(lo.left), len(lo.right))):
        return False
    floor = min(lo.labels)
    budget = z_grade(hi) - z_grade(lo)
    if budget < 0:
        return False
    seen = {hi}
    frontier = [hi]
    while frontier:
        nxt = []
        for w in frontier:
            for v in bruhat_lower_covers(w):
                if v == lo:
                    return True
                if v in seen:
                    continue
                if min(v.labels) < floor:
                    continue
                if z_grade(v) < z_grade(lo):
                    continue
                seen.add(v)
                nxt.append(v)
        frontier = nxt
    return False


def block_weights_in_interval(seed, lo, hi) -> list:
    """All weights linked to seed with every label in [lo, hi].

    Enumerates label multisets compatible with the block signature and all
    side arrangements; deterministic (lexicographic) order.
    """
    m, n = len(seed.left), len(seed.right)
    sig = dict()
    for x in seed.left:
        sig[x] = sig.get(x, 0) + 1
    for x in seed.right:
        sig[x] = sig.get(x, 0) - 1
    base_left = []
    base_right = []
    for c, k in sorted(sig.items()):
        if k > 0:
            base_left.extend([c] * k)
        elif k < 0:
            base_right.extend([c] * (-k))
    if any(c < lo or c > hi for c in base_left + base_right):
        return []
    k = m - len(base_left)
    assert k == n - len(base_right) and k >= 0
    vals = list(range(lo, hi + 1))
    out = set()

    def matchings(idx, current):
        if len(current) == k:
            left_ms = sorted(base_left + current)
            right_ms = sorted(base_right + current)
            for la in _arrangements(left_ms):
                for ra in _arrangements(right_ms):
                    out.add(Weight(la, ra))
            return
        if idx >= len(vals):
            return
        # multisets: value vals[idx] used 0..k-len(current) times
        matchings(idx + 1, current)
        matchings(idx, current + [vals[idx]])

    matchings(0, [])
    return sorted(out)


def _arrangements(ms):
    """Distinct permutations of a multiset, as tuples."""
    ms = sorted(ms)
    out = []

    def rec(remaining, acc):
        if not remaining:
            out.append(tuple(acc))
            return
        last = None
        for idx, v in enumerate(remaining):
            if v == last:
                continue
            last = v
            rec(remaining[:idx] + remaining[idx + 1 :], acc + [v])

    rec(ms, [])
    return out


def upset_in_interval(seed, lo, hi) -> set:
    """Weights >= seed in the Bruhat order with labels within [lo, hi]."""
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for w in frontier:
            for v in bruhat_raising_covers(w, max_label=hi):
                if v not in seen and min(v.labels) >= lo:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen
