"""Exact counts for the square-root (and k-th root) spacing problems.

Triples: #{(m, n, k): M < m <= 2M, M' < n <= 2M', k >= 1, |sqrt m + sqrt n - sqrt k| <= delta sqrt M}.
Quads:   #{(n1..n4) in (N, 2N]^4: |n1^(1/k) + n2^(1/k) - n3^(1/k) - n4^(1/k)| < delta N^(1/k)}.

Floating point does the bulk of the work. Any comparison that lands within a
few ulps of its threshold is re-decided exactly: first by the algebra of
radicals (k-th roots of distinct k-th-power-free integers are linearly
independent over Q), then in high-precision decimal if the combination is
not identically zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np

from . import _backend

TRIPLE_WORK_LIMIT = 10**10
QUAD_BRUTE_MAX_N = 300
QUAD_FAST_MAX_N = 10**5
BOUND_EPS = 0.1
FLAG_FACTOR = 2.0
SPACING_COLUMNS = ("family", "parameters", "count", "bound_value", "fitted_C")

_TIE_RTOL = 1e-11
_PRECISIONS = (60, 120, 240)


# -- exact arithmetic on sums of radicals -------------------------------------

def kth_power_free(n: int, k: int) -> tuple[int, int]:
    """Write n = a^k * r with r k-th-power-free; returns (a, r)."""
    a, r, p = 1, 1, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            a *= p ** (e // k)
            r *= p ** (e % k)
        p += 1
    return a, r * n


def _is_identically_zero(terms, k: int) -> bool:
    groups: dict[int, Fraction] = {}
    for coeff, n in terms:
        if coeff == 0 or n == 0:
            continue
        a, r = kth_power_free(n, k)
        groups[r] = groups.get(r, Fraction(0)) + coeff * a
    return all(v == 0 for v in groups.values())


def _decimal_root(n: int, k: int) -> Decimal:
    if n == 0:
        return Decimal(0)
    d = Decimal(n)
    return d.sqrt() if k == 2 else (d.ln() / k).exp()


def exact_sign(terms, k: int) -> int | None:
    """Sign of sum(coeff * n^(1/k)) over ``terms`` = [(Fraction, int), ...].

    Returns None only if the value is nonzero yet below every working precision.
    """
    if _is_identically_zero(terms, k):
        return 0
    for prec in _PRECISIONS:
        with localcontext() as ctx:
            ctx.prec = prec
            total = sum((Decimal(c.numerator) / Decimal(c.denominator)) * _decimal_root(n, k)
                        for c, n in terms)
            if abs(total) > Decimal(10) ** (-(prec - 10)):
                return 1 if total > 0 else -1
    return None


@dataclass
class TieLog:
    """Threshold ties re-decided exactly; ``unresolved`` ones were counted as satisfied."""
    resolved: int = 0
    unresolved: int = 0


# -- triples: sqrt m + sqrt n near sqrt k ----------------------------------

@dataclass(frozen=True)
class TripleCountQuery:
    M: int
    Mprime: int
    delta: float

    def __post_init__(self):
        if int(self.M) != self.M or int(self.Mprime) != self.Mprime or self.M < 1 or self.Mprime < 1:
            raise ValueError("M and M' must be positive integers")
        if self.Mprime > self.M:
            raise ValueError(f"need M' <= M, got M={self.M}, M'={self.Mprime}")
        if not self.delta >= 0 or not math.isfinite(self.delta):
            raise ValueError("delta must be finite and >= 0")


def _triple_holds(m: int, n: int, kk: int, q: TripleCountQuery, ties: TieLog) -> bool:
    """|sqrt m + sqrt n - sqrt kk| <= delta sqrt M, exactly."""
    dM = Fraction(q.delta)
    one = Fraction(1)
    # both one-sided conditions: sqrt kk - s <= dM sqrt M and s - sqrt kk <= dM sqrt M
    for sgn in (1, -1):
        terms = [(sgn * one, kk), (-sgn * one, m), (-sgn * one, n), (-dM, q.M)]
        s = exact_sign(terms, 2)
        if s is None:
            ties.unresolved += 1
            continue
        if s > 0:
            return False
    return True


def count_triples_bruteforce(q: TripleCountQuery, ties: TieLog | None = None) -> int:
    """Direct enumeration over every k in a padded window around (sqrt m + sqrt n)^2."""
    ties = ties if ties is not None else TieLog()
    M, Mp = q.M, q.Mprime
    if M * M * Mp > TRIPLE_WORK_LIMIT:
        raise ValueError(f"work estimate M^2 M' = {M * M * Mp:.3g} exceeds {TRIPLE_WORK_LIMIT:.0e}")
    bound = q.delta * math.sqrt(M)
    n = np.arange(Mp + 1, 2 * Mp + 1)
    sn = np.sqrt(n)
    total = 0
    for m in range(M + 1, 2 * M + 1):
        s = math.sqrt(m) + sn
        kmin = max(1, int(math.floor(max(0.0, s.min() - bound) ** 2)) - 2)
        kmax = int(math.ceil((s.max() + bound) ** 2)) + 2
        k = np.arange(kmin, kmax + 1)
        diff = np.abs(s[:, None] - np.sqrt(k)[None, :])
        inside = diff <= bound
        near = np.argwhere(np.abs(diff - bound) <= _TIE_RTOL * max(1.0, bound) + 4e-16 * s.max())
        for i, j in near:
            exact = _triple_holds(m, int(n[i]), int(k[j]), q, ties)
            ties.resolved += 1
            inside[i, j] = exact
        total += int(inside.sum())
    return total


def count_triples_fast(q: TripleCountQuery, ties: TieLog | None = None) -> int:
    """O(1) per (m, n): count integers k in [(s - delta sqrt M)^2, (s + delta sqrt M)^2]."""
    ties = ties if ties is not None else TieLog()
    M, Mp = q.M, q.Mprime
    m = np.arange(M + 1, 2 * M + 1, dtype=np.int64)
    n = np.arange(Mp + 1, 2 * Mp + 1, dtype=np.int64)
    if q.delta == 0:
        # sqrt m + sqrt n = sqrt k with k integral iff m n is a perfect square
        prod = (m[:, None] * n[None, :]).ravel()
        r = np.floor(np.sqrt(prod.astype(np.float64))).astype(np.int64)
        for _ in range(2):  # nudge float isqrt to exact
            r = np.where(r * r > prod, r - 1, r)
            r = np.where((r + 1) * (r + 1) <= prod, r + 1, r)
        return int(np.count_nonzero(r * r == prod))
    bound = q.delta * math.sqrt(M)
    total = 0
    sn = np.sqrt(n.astype(np.float64))
    for mi in m:
        s = math.sqrt(mi) + sn
        lo_root = s - bound
        lo = np.where(lo_root > 0, lo_root * lo_root, 0.0)
        hi = (s + bound) ** 2
        k_hi = np.floor(hi)
        k_lo = np.maximum(1.0, np.ceil(lo))
        total += int(np.maximum(0.0, k_hi - k_lo + 1).sum())
        # re-decide integers sitting on either end of the window
        edges = set()
        for edge, valid in ((hi, np.ones_like(s, dtype=bool)), (lo, lo_root > 0)):
            cand = np.rint(edge)
            close = (np.abs(edge - cand) <= _TIE_RTOL * np.maximum(1.0, edge)) & (cand >= 1) & valid
            edges.update((int(i), int(cand[i])) for i in np.flatnonzero(close))
        for i, kk in edges:
            counted = k_lo[i] <= kk <= k_hi[i]
            exact = _triple_holds(int(mi), int(n[i]), kk, q, ties)
            ties.resolved += 1
            total += int(exact) - int(counted)
    return total


# -- quadruples: sums of k-th roots ------------------------------------------

@dataclass(frozen=True)
class QuadCountQuery:
    N: int
    k: int
    delta: float

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError("N must be a positive integer")
        if int(self.k) != self.k or self.k < 2:
            raise ValueError("k must be an integer >= 2")
        if not self.delta >= 0 or not math.isfinite(self.delta):
            raise ValueError("delta must be finite and >= 0")

    @property
    def threshold(self) -> float:
        return self.delta * self.N ** (1.0 / self.k)


def _quad_holds(a: tuple[int, int], b: tuple[int, int], q: QuadCountQuery, ties: TieLog) -> bool:
    """|a0^(1/k) + a1^(1/k) - b0^(1/k) - b1^(1/k)| < delta N^(1/k), exactly."""
    one, dN = Fraction(1), Fraction(q.delta)
    for sgn in (1, -1):
        terms = [(sgn * one, a[0]), (sgn * one, a[1]), (-sgn * one, b[0]), (-sgn * one, b[1]), (-dN, q.N)]
        s = exact_sign(terms, q.k)
        if s is None:
            ties.unresolved += 1
            continue
        if s >= 0:
            return False
    return True


def _roots(q: QuadCountQuery) -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(q.N + 1, 2 * q.N + 1, dtype=np.int64)
    return n, n.astype(np.float64) ** (1.0 / q.k)


def count_quads_bruteforce(q: QuadCountQuery, ties: TieLog | None = None) -> int:
    """All N^4 ordered quadruples, blocked over (n1, n2)."""
    ties = ties if ties is not None else TieLog()
    if q.N > QUAD_BRUTE_MAX_N:
        raise ValueError(f"N={q.N} exceeds the brute-force guard {QUAD_BRUTE_MAX_N}")
    if q.delta == 0:
        return 0
    n, r = _roots(q)
    x = q.threshold
    right = (r[:, None] + r[None, :]).ravel()      # n3^(1/k) + n4^(1/k)
    tol = _TIE_RTOL * max(1.0, right.max())
    total = 0
    for i1 in range(q.N):
        for i2 in range(q.N):
            e = np.abs(r[i1] + r[i2] - right)
            inside = e < x
            for j in np.flatnonzero(np.abs(e - x) <= tol):
                a = (int(n[i1]), int(n[i2]))
                b = (int(n[j // q.N]), int(n[j % q.N]))
                inside[j] = _quad_holds(a, b, q, ties)
                ties.resolved += 1
            total += int(inside.sum())
    return total


def _pair_multiset(q: QuadCountQuery):
    """Unordered pairs a <= b with sum of roots and multiplicity (2 if a != b)."""
    n, r = _roots(q)
    ia, ib = np.triu_indices(q.N)
    s = r[ia] + r[ib]
    w = np.where(ia == ib, 1, 2).astype(np.int64)
    order = np.lexsort((np.arange(s.size), s))  # stable on (sum, index)
    return s[order], w[order], n[ia[order]], n[ib[order]]


def count_quads_fast(q: QuadCountQuery, ties: TieLog | None = None) -> int:
    """Sorted pair sums and a weighted two-pointer count of close pairs."""
    ties = ties if ties is not None else TieLog()
    if q.N > QUAD_FAST_MAX_N:
        raise ValueError(f"N={q.N} exceeds the pair-list guard {QUAD_FAST_MAX_N}")
    if q.delta == 0:
        return 0
    s, w, na, nb = _pair_multiset(q)
    x = q.threshold
    close = _backend.weighted_close_pairs(s, w, x)
    # pairs whose gap sits within tolerance of x: float said "s[j] - s[i] < x" or not
    tol = _TIE_RTOL * max(1.0, s[-1])
    lo = np.searchsorted(s, s + x - tol, side="left")
    hi = np.searchsorted(s, s + x + tol, side="right")
    for i in np.flatnonzero(hi > lo):
        for j in range(max(lo[i], i + 1), hi[i]):
            counted = s[j] < s[i] + x
            exact = _quad_holds((int(na[i]), int(nb[i])), (int(na[j]), int(nb[j])), q, ties)
            ties.resolved += 1
            close += int(w[i] * w[j]) * (int(exact) - int(counted))
    return int(np.dot(w, w)) + 2 * close


def min_nonzero_gap(q: QuadCountQuery) -> float:
    """Smallest nonzero difference between distinct pair sums (exact zeros removed)."""
    s, _, na, nb = _pair_multiset(q)
    gaps = np.diff(s)
    best = math.inf
    for i in np.argsort(gaps):
        g = gaps[i]
        if g >= best:
            break
        if g > 1e-9 * max(1.0, s[-1]):
            best = min(best, g)
            break
        terms = [(Fraction(1), int(na[i + 1])), (Fraction(1), int(nb[i + 1])),
                 (Fraction(-1), int(na[i])), (Fraction(-1), int(nb[i]))]
        if not _is_identically_zero(terms, q.k):
            best = min(best, g)
            break
    return best


def exact_coincidences(q: QuadCountQuery) -> int:
    """Ordered quadruples with n1^(1/k) + n2^(1/k) = n3^(1/k) + n4^(1/k) exactly."""
    _, r = _roots(q)
    # group pair sums by their canonical radical decomposition
    n = np.arange(q.N + 1, 2 * q.N + 1)
    dec = [kth_power_free(int(v), q.k) for v in n]
    counts: dict[tuple, int] = {}
    for i in range(q.N):
        for j in range(q.N):
            acc: dict[int, int] = {}
            for a, rr in (dec[i], dec[j]):
                acc[rr] = acc.get(rr, 0) + a
            key = tuple(sorted(acc.items()))
            counts[key] = counts.get(key, 0) + 1
    return sum(c * c for c in counts.values())


# -- bound shapes ---------------------------------------------------------------

def triple_bound(q: TripleCountQuery, eps: float = BOUND_EPS) -> float:
    M, Mp = q.M, q.Mprime
    return M**eps * (M * M * Mp * q.delta + math.sqrt(M * Mp))


def quad_bound(q: QuadCountQuery, eps: float = BOUND_EPS) -> float:
    N = q.N
    return N**eps * (N**4 * q.delta + N * N)


@dataclass
class BoundRow:
    family: str
    parameters: str
    count: int
    bound_value: float
    fitted_C: float


@dataclass
class BoundReport:
    rows: list[BoundRow]
    fitted: dict[str, float]                 # family -> max count / bound
    spread: dict[str, float]                 # family -> max C_i / min C_i
    trend: dict[str, float]                  # family -> slope of log C_i against log size
    flags: list[str] = field(default_factory=list)

    def as_rows(self) -> list[dict]:
        return [r.__dict__.copy() for r in self.rows]


def _family(query) -> str:
    return "triples" if isinstance(query, TripleCountQuery) else "quads"


def verify_bound_shapes(queries, fitted: dict[str, float] | None = None,
                        eps: float = BOUND_EPS) -> BoundReport:
    """Fit the smallest C with count <= C * bound per family and report its spread.

    With ``fitted`` from an earlier run, any query needing more than twice the
    earlier constant is flagged.
    """
    rows, per_family, sizes = [], {}, {}
    flags = []
    for q in queries:
        fam = _family(q)
        if fam == "triples":
            count, bound = count_triples_fast(q), triple_bound(q, eps)
            params = f"M={q.M};Mprime={q.Mprime};delta={q.delta!r}"
        else:
            count, bound = count_quads_fast(q), quad_bound(q, eps)
            params = f"N={q.N};k={q.k};delta={q.delta!r}"
        c = count / bound
        per_family.setdefault(fam, []).append(c)
        sizes.setdefault(fam, []).append(q.M if fam == "triples" else q.N)
        rows.append(BoundRow(fam, params, count, bound, c))
        if fitted and fam in fitted and c > FLAG_FACTOR * fitted[fam]:
            flags.append(f"{fam} {params}: C={c:.4g} exceeds {FLAG_FACTOR} x fitted {fitted[fam]:.4g}")
    fit = {f: max(v) for f, v in per_family.items()}
    spread = {f: (max(v) / min(v) if min(v) > 0 else math.inf) for f, v in per_family.items()}
    trend = {}
    for f, v in per_family.items():
        x, y = np.log(sizes[f]), np.array(v)
        ok = y > 0
        trend[f] = float(np.polyfit(x[ok], np.log(y[ok]), 1)[0]) if ok.sum() >= 2 and np.ptp(x[ok]) > 0 else 0.0
    for r in rows:
        r.fitted_C = fit[r.family]
    return BoundReport(rows, fit, spread, trend, flags)
