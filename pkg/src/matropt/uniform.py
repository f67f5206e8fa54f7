"""Closed-form Ehrhart and h* machinery for uniform matroid polytopes.

The engine is the coefficient table of (1 + T + ... + T^(r-1))^n, i.e. the
counts of n-part compositions with parts below r.  Those tables give the
h*-vector of P(U^{r,n}) through an inclusion-exclusion triple sum, and the
Ehrhart polynomial through an alternating binomial formula; both routes are
kept independent of the lattice-sweep oracles that validate them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DimensionError, InternalInconsistencyError

_TABLE_CACHE: dict = {}


def bounded_composition_counts(n: int, r: int):
    """Coefficients of (1 + T + ... + T^(r-1))^n as a tuple of ints.

    Entry i counts compositions of i into n parts from {0, ..., r-1}.
    Computed by the sliding-window recurrence over n; symmetric and unimodal
    in i.  Cached, including every intermediate exponent.
    """
    if n < 1 or r < 1:
        raise DimensionError("need n >= 1 and r >= 1")
    key = (n, r)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    start = max(m for m in range(1, n + 1) if (m, r) in _TABLE_CACHE or m == 1)
    table = _TABLE_CACHE.get((start, r))
    if table is None:
        table = (1,) * r
        _TABLE_CACHE[(1, r)] = table
    for m in range(start + 1, n + 1):
        prev = table
        length = m * (r - 1) + 1
        # prefix[i] = sum of prev[0..i-1]
        prefix = [0] * (len(prev) + 1)
        for i, v in enumerate(prev):
            prefix[i + 1] = prefix[i] + v
        out = []
        for i in range(length):
            hi = min(i, len(prev) - 1)
            lo = max(0, i - r + 1)
            out.append(prefix[hi + 1] - prefix[lo])
        table = tuple(out)
        _TABLE_CACHE[(m, r)] = table
    return table


def composition_count(n: int, r: int, i: int) -> int:
    """Single table entry, with out-of-range indices reading as 0."""
    if i < 0 or i > n * (r - 1):
        return 0
    return bounded_composition_counts(n, r)[i]


def is_unimodal(vec) -> bool:
    """Weakly rises then weakly falls."""
    seq = list(vec)
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1


def hstar_uniform(n: int, r: int):
    """h*-vector of the uniform matroid polytope P(U^{r,n}).

    Inclusion-exclusion over the composition tables:
      h*_l = sum over s, j, k of (-1)^(s+j+k) C(n,s) C(s,j) C(j,k)
             * [compositions of (l-k)(r-s) into n-j parts below r-s].
    Trailing zeros are trimmed; h*_0 = 1 always.
    """
    if not 1 <= r <= n - 1:
        raise DimensionError(f"uniform h* needs 1 <= r <= n-1, got r={r}, n={n}")
    out = []
    for l in range(n):
        total = 0
        for s in range(r):
            rs = r - s
            cns = comb(n, s)
            for j in range(s + 1):
                csj = comb(s, j)
                table = bounded_composition_counts(n - j, rs)
                limit = (n - j) * (rs - 1)
                sign_sj = -1 if (s + j) % 2 else 1
                for k in range(j + 1):
                    idx = (l - k) * rs
                    if 0 <= idx <= limit:
                        term = cns * csj * comb(j, k) * table[idx]
                        total += -term if (sign_sj < 0) != (k % 2 == 1) else term
        out.append(total)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def ehrhart_uniform(n: int, r: int):
    """Ehrhart polynomial of P(U^{r,n}), ascending exact coefficients.

    i(k) = sum_{s=0}^{r-1} (-1)^s C(n,s) C(k(r-s) - s + n - 1, n - 1),
    expanded symbolically in k via falling-factorial products.
    """
    if not 1 <= r <= n - 1:
        raise DimensionError(f"uniform Ehrhart needs 1 <= r <= n-1, got r={r}, n={n}")
    deg = n - 1
    coeffs = [Fraction(0)] * (deg + 1)
    for s in range(r):
        # C(k(r-s) - s + n - 1, n - 1) = prod_{t=0}^{n-2} (k(r-s) - s + n - 1 - t) / (n-1)!
        poly = [Fraction(1)]
        for t in range(deg):
            const = Fraction(n - 1 - s - t)
            slope = Fraction(r - s)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for p, cp in enumerate(poly):
                nxt[p] += cp * const
                nxt[p + 1] += cp * slope
            poly = nxt
        fact = Fraction(1)
        for t in range(2, n):
            fact *= t
        sign = -1 if s % 2 else 1
        binom = comb(n, s)
        for p, cp in enumerate(poly):
            coeffs[p] += sign * binom * cp / fact
    if coeffs[0] != 1:
        raise InternalInconsistencyError("Ehrhart constant term must be 1")
    return tuple(coeffs)


def hstar_from_counts(counts, dim: int):
    """Ehrhart-series numerator from a table of dilation counts.

    Multiplies the series sum i(k) t^k by (1-t)^(dim+1); coefficients past
    position dim must vanish, otherwise the dimension or the counts are
    wrong.  Trailing zeros are trimmed to match the closed forms.
    """
    if len(counts) < dim + 1:
        raise DimensionError(f"need at least {dim + 1} counts for dimension {dim}")
    out = []
    for j in range(len(counts)):
        h = 0
        for i in range(min(j, dim + 1) + 1):
            term = comb(dim + 1, i) * counts[j - i]
            h += -term if i % 2 else term
        out.append(h)
    for j in range(dim + 1, len(counts)):
        if out[j] != 0:
            raise InternalInconsistencyError(
                f"series numerator has a nonzero coefficient at degree {j} > dim={dim}"
            )
    trimmed = out[: dim + 1]
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return tuple(trimmed)
