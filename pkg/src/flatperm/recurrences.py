"""Distribution polynomials for the five adjacent-pair patterns, computed by
exact recurrences with polynomial coefficient tables.

For every pattern the table g_1, g_2, ... of occurrence-count distribution
polynomials over flattened permutations satisfies a recurrence of the shape

    g_n = (leading term) * g_{n-1} + sum_{j>=2} c_{n,j} * g_{n-j},

where each c_{n,j} is an exact integer polynomial in q obtained by literal
summation (never by rational-function shortcuts).  The coefficient sums are
evaluated incrementally: products of q-integer runs are carried with their
(1-q)- or (q-1)-power prefactors already multiplied in, which turns every
table update into a shift-and-subtract.  Where the source formulas offer two
routes to the same coefficient (32-1's alternating q-binomial triple sum vs
its elementary-symmetric-function form), both are evaluated and compared,
and disagreement raises IdentityViolation.

The prefix-refined family g_n(1k), the same sum restricted to permutations
whose flattened form starts 1,k, is computed per pattern by its difference
recurrence when that recurrence is division free (31-2, 32-1) and otherwise
by the underlying refinement recurrence; every difference recurrence that
contains a division (by q, [k-3] or [n-k+1]) is then asserted on the
computed values in cleared-denominator form.

Tables are memoized per pattern and grown incrementally, so repeated calls
with increasing n_max reuse all earlier work.  Builders are not thread safe;
the returned tables are immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import perm_core
from .qpoly import IdentityViolation, QPoly, q_binomial, q_int

_ONE = QPoly.one()
_ZERO = QPoly.zero()
_ONE_MINUS_Q = QPoly((1, -1))
_Q_MINUS_ONE = QPoly((-1, 1))


class PatternId(Enum):
    """The five adjacent-pair patterns with recurrence-computed tables."""

    P12_3 = "12-3"
    P21_3 = "21-3"
    P23_1 = "23-1"
    P32_1 = "32-1"
    P31_2 = "31-2"

    def __str__(self):
        return self.value

    @classmethod
    def from_string(cls, text: str) -> "PatternId":
        for member in cls:
            if member.value == text.strip():
                return member
        raise ValueError(f"unknown pattern {text!r}; expected one of "
                         + ", ".join(m.value for m in cls))

    def vincular(self) -> perm_core.VincularPattern3:
        return perm_core.VincularPattern3.from_string(self.value)


ALL_PATTERNS = tuple(PatternId)


@dataclass(frozen=True)
class DistributionTable:
    """Distribution polynomials g_1 .. g_n for one pattern.

    ``polys[i]`` holds g_{i+1}; ``g(n)`` is the 1-based accessor.  Each
    g_n sums to n! at q=1 (it distributes all of S_n by occurrence count).
    """

    pattern: PatternId
    polys: tuple[QPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        if not self.polys or self.polys[0] != _ONE:
            raise ValueError("table must start with g_1 = 1")
        if len(self.polys) >= 2 and self.polys[1] != QPoly((2,)):
            raise ValueError("g_2 must equal 2")
        fact = 1
        for n, poly in enumerate(self.polys, start=1):
            fact *= n
            if poly.evaluate(1) != fact:
                raise ValueError(f"g_{n}(1) != {n}! for pattern {self.pattern}")

    @property
    def max_n(self) -> int:
        return len(self.polys)

    def g(self, n: int) -> QPoly:
        if not 1 <= n <= len(self.polys):
            raise IndexError(f"n={n} outside table range 1..{len(self.polys)}")
        return self.polys[n - 1]

    def avoider_count(self, n: int) -> int:
        return self.g(n).constant_term()

    def total_occurrences(self, n: int) -> int:
        """Sum of occurrence counts over all of S_n (the derivative at q=1)."""
        return self.g(n).derivative().evaluate(1)


# ---------------------------------------------------------------------------
# Small helpers shared by the builders
# ---------------------------------------------------------------------------

def _one_minus_qt(p: QPoly, t: int) -> QPoly:
    """(1 - q^t) * p as a shift and subtract."""
    return p - p.shifted(t)


def _qt_minus_one(p: QPoly, t: int) -> QPoly:
    return p.shifted(t) - p


# Coefficient-table state lives in plain mutable lists of ints (index =
# exponent); these accumulate in place, which is what keeps table builds at
# a handful of machine operations per stored coefficient.

def _acc(acc: list, src, shift: int = 0, sign: int = 1, scale: int = 1):
    """acc += sign * scale * q^shift * src, in place."""
    if not src:
        return
    need = shift + len(src)
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    k = sign * scale
    window = acc[shift:need]
    if k == 1:
        acc[shift:need] = [x + y for x, y in zip(window, src)]
    elif k == -1:
        acc[shift:need] = [x - y for x, y in zip(window, src)]
    else:
        acc[shift:need] = [x + k * y for x, y in zip(window, src)]


def _acc_one_minus_qt(acc: list, src, t: int):
    """acc += (1 - q^t) * src, in place."""
    _acc(acc, src)
    _acc(acc, src, shift=t, sign=-1)


def _acc_qt_minus_one(acc: list, src, t: int):
    """acc += (q^t - 1) * src, in place."""
    _acc(acc, src, shift=t)
    _acc(acc, src, sign=-1)


def _lists_match(a: list, b: list) -> bool:
    """Equality of coefficient lists up to trailing zeros."""
    if len(a) < len(b):
        a, b = b, a
    return a[:len(b)] == b and not any(a[len(b):])


def _qint_times(p: QPoly, m: int) -> QPoly:
    """[m] * p in O(deg) via (p - q^m p)/(1 - q)."""
    if m == 0 or p.is_zero():
        return _ZERO
    return _one_minus_qt(p, m).exact_div(_ONE_MINUS_Q)


def _binom(m: int, r: int) -> int:
    """Binomial coefficient extended to negative upper index; 0 for r < 0."""
    if r < 0:
        return 0
    if m >= 0:
        return math.comb(m, r) if r <= m else 0
    out = 1
    for i in range(r):
        out = out * (m - i) // (i + 1)
    return out


# ---------------------------------------------------------------------------
# Unrefined tables
# ---------------------------------------------------------------------------

class _TableBuilder:
    """Grows g_1, g_2, ... one entry at a time, keeping coefficient state."""

    def __init__(self):
        self.g: list[QPoly] = [_ZERO, _ONE]  # index n; g[0] unused

    @property
    def top(self) -> int:
        return len(self.g) - 1

    def extend(self, n_max: int):
        while self.top < n_max:
            self._append(self.top + 1)

    def _append(self, n: int):
        raise NotImplementedError


class _Builder31_2(_TableBuilder):
    """g_n = n g_{n-1} + sum_{j=2}^{floor(n/2)} (q-1)^{j-1} b_{n,j} g_{n-j},
    with b_{n,j} given by an explicit single sum over q-powers."""

    @staticmethod
    def b(n: int, j: int) -> QPoly:
        coeffs = []
        for k in range(n - j):
            t = (n - k) * _binom(n - j - 1 - k, j - 1) * _binom(j - 2 + k, j - 2)
            if t % j:
                raise IdentityViolation(
                    f"31-2 coefficient not an integer at n={n}, j={j}, k={k}")
            coeffs.append(t // j)
        return QPoly(coeffs)

    def _append(self, n: int):
        total = n * self.g[n - 1]
        for j in range(2, n // 2 + 1):
            total = total + (_Q_MINUS_ONE ** (j - 1)) * self.b(n, j) * self.g[n - j]
        self.g.append(total)


def a_coeff_table_31_2(k_max: int) -> dict[tuple[int, int], QPoly]:
    """The per-prefix coefficients a_{k,j} of the 31-2 refinement, from their
    second-order recurrence; summing a_{k,j} over k reproduces b_{n,j}."""
    table: dict[tuple[int, int], QPoly] = {}
    for j in range(0, k_max + 1):
        table[(3, j)] = _ONE if j == 1 else _ZERO
        table[(4, j)] = _ONE if j == 1 else (QPoly((2,)) if j == 2 else _ZERO)
    q = QPoly.q()
    for k in range(5, k_max + 1):
        for j in range(0, k_max + 1):
            table[(k, j)] = ((q + 1) * table[(k - 1, j)] - q * table[(k - 2, j)]
                             + table.get((k - 2, j - 1), _ZERO))
    return table


class _Builder32_1(_TableBuilder):
    """g_n = n g_{n-1} + sum_j c_{n,j} g_{n-j} where c_{n,j} is accumulated
    two ways, as (q-1)^{j-1} sum_k e_{j-1}([1],...,[k-3]) and as the
    alternating q-binomial triple sum, with exact agreement enforced."""

    def __init__(self):
        super().__init__()
        # ebar[m] = e_m([1..t]) * (q-1)^m at the current top t = n-3
        self._ebar: list[list] = [[1]]
        self._sym: dict[int, list] = {}     # symmetric-route c_{n,j}
        self._triple: dict[int, list] = {}  # triple-sum route c_{n,j}

    def _advance_ebar(self, t: int):
        ebar = self._ebar
        ebar.append([])
        for m in range(len(ebar) - 1, 0, -1):
            _acc_qt_minus_one(ebar[m], ebar[m - 1], t)

    def _append(self, n: int):
        if n >= 4:
            self._advance_ebar(n - 3)
        total = n * self.g[n - 1]
        for j in range(2, n - 1):
            sym = self._sym.setdefault(j, [])
            _acc(sym, self._ebar[j - 1])
            triple = self._triple.setdefault(j, [])
            kk = n - 2 - j
            for a in range(1, j + 1):
                c = _binom(j - a + kk, kk)
                if c == 0:
                    continue
                _acc(triple, q_binomial(j - 1 + kk, a - 1).coeffs,
                     shift=a * (a - 1) // 2,
                     sign=1 if (j - a) % 2 == 0 else -1, scale=c)
            if not _lists_match(triple, sym):
                raise IdentityViolation(
                    f"32-1 coefficient routes disagree at n={n}, j={j}")
            total = total + QPoly(sym) * self.g[n - j]
        self.g.append(total)


class _Builder12_3(_TableBuilder):
    """g_n = (2q^{n-2} + [n-2]) g_{n-1} + sum_j c_{n,j} g_{n-j} where c_{n,j}
    comes from weighted complete-homogeneous sums over windows of consecutive
    q-integers (with (1-q)^{j-1} premultiplied).

    Writing U_m(h) for sum_{lo=0..h} q^lo h_m([lo],...,[h]) * (1-q)^m, the
    coefficient is c_{n,j} = 2 U_{j-1}(n-j-1) - U_{j-1}(n-j-2); empty windows
    contribute 0.  U satisfies U_m(h) = U_m(h-1) + (1-q^h) U_{m-1}(h), so one
    anti-diagonal {m + h = n-2} carries all state from step to step.
    """

    def __init__(self):
        super().__init__()
        self._diag: list[list] = [[1]]   # entry m holds U_m(n-2-m); n=2 seed

    def _append(self, n: int):
        prev = self._diag
        if n > 2:
            new = [[1] * (n - 1)]   # U_0(n-2) = [n-1]
            for m in range(1, n - 1):
                entry = list(prev[m]) if m < len(prev) else []
                _acc_one_minus_qt(entry, prev[m - 1], n - 2 - m)
                new.append(entry)
            self._diag = new
        total = QPoly([1] * (n - 2) + [2]) * self.g[n - 1]
        for j in range(2, n):
            m = j - 1
            coeff = [2 * x for x in self._diag[m]]
            if m < len(prev):
                _acc(coeff, prev[m], sign=-1)
            total = total + QPoly(coeff) * self.g[n - j]
        self.g.append(total)


def qbinom_coefficient_12_3(n: int, j: int) -> QPoly:
    """The q-binomial double-sum form of the 12-3 coefficient c_{n,j},
    evaluated literally (valid for any j >= 1 with generalized binomials)."""
    if not 1 <= j <= n - 1:
        raise ValueError(f"j={j} outside 1..{n - 1}")
    total = _ZERO
    for i in range(j):
        for k in range(n - j):
            c1 = 2 * _binom(k + j - 1, j - i - 1)
            c2 = _binom(k + j - 2, j - i - 1)
            inner = q_binomial(k + i, i) * c1 - q_binomial(k + i - 1, i) * c2
            term = inner.shifted((i + 1) * (n - j - k - 1))
            total = total + term if i % 2 == 0 else total - term
    return total


@dataclass(frozen=True)
class CoefficientFormComparison12_3:
    """Outcome of replaying the 12-3 recurrence from its q-binomial
    coefficient form: once with the sum starting at j=2 (no g_{n-1} term)
    and once extended with the j=1 coefficient."""

    n: int
    j2_only_matches: bool
    with_j1_term_matches: bool


def qbinom_form_consistency_12_3(n_max: int) -> list[CoefficientFormComparison12_3]:
    table = distribution_table(PatternId.P12_3, n_max)
    out = []
    for n in range(3, n_max + 1):
        j2_only = _ZERO
        for j in range(2, n):
            j2_only = j2_only + qbinom_coefficient_12_3(n, j) * table.g(n - j)
        extended = j2_only + qbinom_coefficient_12_3(n, 1) * table.g(n - 1)
        out.append(CoefficientFormComparison12_3(
            n, j2_only == table.g(n), extended == table.g(n)))
    return out


class _Builder23_1(_TableBuilder):
    """g_n = (1 + [n-1]) g_{n-1} + sum_j c_{n,j} g_{n-j}, with coefficients
    accumulated from sums of products of distinct q-integers (the smallest
    factor weighted by 1 + [i_1]), scaled by (1-q)^{j-1} as they are built."""

    def __init__(self):
        super().__init__()
        # The j-th coefficient needs sums over strictly increasing m-tuples
        # from [1..t] of (1 + [i_1])[i_1]...[i_m] * (1-q)^m; ehat carries the
        # plain elementary part, ghat the squared-smallest part.
        self._ehat: list[list] = [[1]]
        self._ghat: list[list] = [[0]]
        self._c: dict[int, list] = {}

    def _advance(self, t: int):
        ehat, ghat = self._ehat, self._ghat
        ehat.append([])
        ghat.append([])
        for m in range(len(ehat) - 1, 1, -1):
            _acc_one_minus_qt(ehat[m], ehat[m - 1], t)
            _acc_one_minus_qt(ghat[m], ghat[m - 1], t)
        _acc_one_minus_qt(ehat[1], [1], t)
        _acc_one_minus_qt(ghat[1], [1] * t, t)  # (1 - q^t) [t]

    def _append(self, n: int):
        if n > 3:
            self._advance(n - 3)
        lead = QPoly((2,) + (1,) * (n - 2))  # 1 + [n-1]
        total = lead * self.g[n - 1]
        for j in range(2, n):
            cj = self._c.setdefault(j, [])
            if j == 2:
                _acc_one_minus_qt(cj, [2] + [1] * (n - 3), n - 2)
            else:
                m = j - 2
                _acc_one_minus_qt(cj, self._ehat[m], n - 2)
                _acc_one_minus_qt(cj, self._ghat[m], n - 2)
            total = total + QPoly(cj) * self.g[n - j]
        self.g.append(total)


class _Builder21_3(_TableBuilder):
    """g_n = n g_{n-1} + sum_j c_{n,j} g_{n-j}, with coefficients built from
    weakly increasing runs of q-integers weighted by the distance of the top
    element from the window end, premultiplied by (q-1)^{j-2}.

    With T_m(u) = sum_{lo<=u} [lo] h_m([lo..u]) (q-1)^m and S_m its partial
    sum over u, the window-sum reorganization gives
    c_{n,j} = (S_{j-2}(n-j-1) + T_{j-2}(n-j-1)) * (q-1); both tables satisfy
    anti-diagonal recurrences over m + u = n-3.
    """

    def __init__(self):
        super().__init__()
        self._tdiag: list[list] = []
        self._sdiag: list[list] = []

    def _append(self, n: int):
        if n >= 3:
            prev_t, prev_s = self._tdiag, self._sdiag
            u0 = n - 3
            first = list(prev_t[0]) if prev_t else []
            _acc(first, [1] * u0)   # + [u0]
            new_t = [first]
            for m in range(1, n - 2):
                entry = list(prev_t[m]) if m < len(prev_t) else []
                _acc_qt_minus_one(entry, prev_t[m - 1], u0 - m)
                new_t.append(entry)
            new_s = []
            for m in range(n - 2):
                entry = list(prev_s[m]) if m < len(prev_s) else []
                _acc(entry, new_t[m])
                new_s.append(entry)
            self._tdiag, self._sdiag = new_t, new_s
        total = n * self.g[n - 1]
        for j in range(2, n):
            m = j - 2
            base = list(self._sdiag[m])
            _acc(base, self._tdiag[m])
            coeff = [-x for x in base]   # (q - 1) * base
            _acc(coeff, base, shift=1)
            total = total + QPoly(coeff) * self.g[n - j]
        self.g.append(total)


def b2_poly_23_1(n: int) -> QPoly:
    """The j=2 coefficient of the 23-1 recurrence as its literal polynomial
    sum, sum_{k=1}^{n-2} [k](1 + [k]), before the (1-q) prefactor."""
    total = _ZERO
    for k in range(1, n - 1):
        total = total + _qint_times(QPoly((2,) + (1,) * (k - 1)), k)
    return total


def b2_poly_21_3(n: int) -> QPoly:
    """The j=2 coefficient of the 21-3 recurrence as its literal polynomial
    sum, sum_{k=3}^{n} (k-1)[n-k], before the (q-1) prefactor."""
    total = _ZERO
    for k in range(3, n + 1):
        total = total + (k - 1) * q_int(n - k)
    return total


def b2_rational_identity_23_1(n: int) -> bool:
    """Multiplied-through check of the rational closed form for the 23-1
    j=2 coefficient against the literal polynomial sum."""
    q = QPoly.q()
    lhs = b2_poly_23_1(n) * (_Q_MINUS_ONE ** 3) * (q + 1)
    rhs = ((2 - q) * n * (q * q - 1)
           + QPoly((4, 1, -3, 1))
           + ((q - 3) * (q + 1)).shifted(n - 1)
           + QPoly.monomial(2 * n - 2))
    return lhs == rhs


def b2_rational_identity_21_3(n: int) -> bool:
    """Multiplied-through check of the rational closed form for the 21-3
    j=2 coefficient against the literal polynomial sum."""
    q = QPoly.q()
    lhs = 2 * (_Q_MINUS_ONE ** 3) * b2_poly_21_3(n)
    rhs = (-(n * n) * (_Q_MINUS_ONE ** 2)
           + n * (q - 3) * _Q_MINUS_ONE
           + 2 * (QPoly.monomial(n - 1, 2) - QPoly.monomial(n - 2)
                  + q * q - 2 * q))
    return lhs == rhs


_BUILDER_CLASSES = {
    PatternId.P31_2: _Builder31_2,
    PatternId.P32_1: _Builder32_1,
    PatternId.P12_3: _Builder12_3,
    PatternId.P23_1: _Builder23_1,
    PatternId.P21_3: _Builder21_3,
}

_BUILDERS: dict[PatternId, _TableBuilder] = {}


def distribution_table(pattern: PatternId, n_max: int) -> DistributionTable:
    """The recurrence-computed table g_1 .. g_{n_max} for one pattern.

    State is memoized per pattern and grown incrementally, so asking for a
    larger n_max later reuses everything already computed.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    builder = _BUILDERS.get(pattern)
    if builder is None:
        builder = _BUILDERS[pattern] = _BUILDER_CLASSES[pattern]()
    builder.extend(n_max)
    return DistributionTable(pattern, tuple(builder.g[1:n_max + 1]))


def g_31_2(n_max: int) -> DistributionTable:
    return distribution_table(PatternId.P31_2, n_max)


def g_32_1(n_max: int) -> DistributionTable:
    return distribution_table(PatternId.P32_1, n_max)


def g_12_3(n_max: int) -> DistributionTable:
    return distribution_table(PatternId.P12_3, n_max)


def g_23_1(n_max: int) -> DistributionTable:
    return distribution_table(PatternId.P23_1, n_max)


def g_21_3(n_max: int) -> DistributionTable:
    return distribution_table(PatternId.P21_3, n_max)


# ---------------------------------------------------------------------------
# Prefix-refined tables g_n(1k)
# ---------------------------------------------------------------------------

class _RefinedBuilder:
    """Rows of g_n(1k) for 2 <= k <= n, grown level by level.

    Each pattern computes its rows as described in the module docstring and
    then asserts the pattern's difference recurrence(s) on the computed
    values, in cleared-denominator form where the recurrence divides.
    """

    def __init__(self, pattern: PatternId):
        self.pattern = pattern
        # rows[n][k] = g_n(1k); rows[n] is a dict for 2 <= k <= n
        self.rows: list[dict[int, QPoly]] = [{}, {}]
        self.gsum: list[QPoly] = [_ZERO, _ONE]  # gsum[n] = g_n
        # 12-3 rows are carried q-lowered: low[n][k] = g_n(1k) / q^(n-k)
        self.low: list[dict[int, QPoly]] = [{}, {}]

    @property
    def top(self) -> int:
        return len(self.rows) - 1

    def extend(self, n_max: int):
        while self.top < n_max:
            self._append(self.top + 1)

    def _append(self, n: int):
        row = getattr(self, "_row_" + self.pattern.name.lower())(n)
        self.rows.append(row)
        total = _ZERO
        for k in range(2, n + 1):
            total = total + row[k]
        self.gsum.append(total)
        self._assert_difference_recurrence(n)

    # -- per-pattern row constructions --------------------------------

    def _row_p31_2(self, n: int) -> dict[int, QPoly]:
        g1, g2 = self.gsum[n - 1], self.gsum[n - 2]
        prev = self.rows[n - 1]
        q = QPoly.q()
        row = {2: 2 * g1}
        if n >= 3:
            row[3] = g1
        if n >= 4:
            row[4] = g1 + 2 * _Q_MINUS_ONE * g2
        for k in range(5, n + 1):
            row[k] = ((q + 1) * row[k - 1] - q * row[k - 2]
                      + _Q_MINUS_ONE * prev[k - 2])
        return row

    def _row_p32_1(self, n: int) -> dict[int, QPoly]:
        g1 = self.gsum[n - 1]
        prev = self.rows[n - 1]
        row = {2: 2 * g1}
        if n >= 3:
            row[3] = g1
        for k in range(4, n + 1):
            row[k] = row[k - 1] + _qt_minus_one(prev[k - 1], k - 3)
        return row

    def _row_p23_1(self, n: int) -> dict[int, QPoly]:
        g1 = self.gsum[n - 1]
        prev = self.rows[n - 1]
        row = {2: 2 * g1}
        prefix = _ZERO
        for k in range(3, n + 1):
            prefix = prefix + prev[k - 1]
            row[k] = g1.shifted(k - 2) + _one_minus_qt(prefix, k - 2)
        return row

    def _row_p21_3(self, n: int) -> dict[int, QPoly]:
        g1 = self.gsum[n - 1]
        prev = self.rows[n - 1]
        row = {2: 2 * g1}
        prefix = _ZERO
        for k in range(3, n + 1):
            prefix = prefix + prev[k - 1]
            row[k] = g1 - _one_minus_qt(prefix, n - k)
        return row

    def _row_p12_3(self, n: int) -> dict[int, QPoly]:
        # Rows are carried q-lowered, low[n][k] = g_n(1k) / q^(n-k), which
        # turns the refinement recurrence into nonnegative-shift prefix and
        # suffix sums: low[n][k] = sum_{j<k} low[n-1][j]
        #                          + sum_{j>=k} q^(n-1-j) low[n-1][j].
        prev_low = self.low[n - 1]
        low = {2: 2 * self.gsum[n - 1]}
        prefix = {1: _ZERO}
        for j in range(2, n):
            prefix[j] = prefix[j - 1] + prev_low[j]
        suffix = _ZERO
        for k in range(n, 2, -1):
            if k <= n - 1:
                suffix = suffix + prev_low[k].shifted(n - 1 - k)
            low[k] = prefix[k - 1] + suffix
        self.low.append(low)
        return {k: low[k].shifted(n - k) for k in range(2, n + 1)}

    # -- difference-recurrence assertions ------------------------------

    def _assert_difference_recurrence(self, n: int):
        checker = getattr(self, "_check_" + self.pattern.name.lower(), None)
        if checker is not None:
            checker(n)

    def _fail(self, n: int, k: int):
        raise IdentityViolation(
            f"{self.pattern} refined difference recurrence failed "
            f"at n={n}, k={k}")

    def _check_p12_3(self, n: int):
        row, prev = self.rows[n], self.rows[n - 1]
        g1, g2 = self.gsum[n - 1], self.gsum[n - 2]
        if n >= 3:
            qpow = QPoly.monomial(n - 3)
            expect = qpow * g1 - 2 * qpow * (QPoly.monomial(n - 3) - 1) * g2
            if row[3] != expect:
                self._fail(n, 3)
        for k in range(4, n + 1):
            lhs = row[k].shifted(1)
            rhs = row[k - 1] + _one_minus_qt(prev[k - 1], n - k).shifted(1)
            if lhs != rhs:
                self._fail(n, k)

    def _check_p23_1(self, n: int):
        row, prev = self.rows[n], self.rows[n - 1]
        g1, g2 = self.gsum[n - 1], self.gsum[n - 2]
        if n >= 3:
            if row[3] != QPoly.q() * g1 + 2 * _ONE_MINUS_Q * g2:
                self._fail(n, 3)
        for k in range(4, n + 1):
            lhs = _qint_times(row[k], k - 3)
            rhs = (-g1.shifted(k - 3)
                   + _qint_times(row[k - 1], k - 2)
                   + _ONE_MINUS_Q * _qint_times(_qint_times(prev[k - 1], k - 2),
                                                k - 3))
            if lhs != rhs:
                self._fail(n, k)

    def _check_p21_3(self, n: int):
        row, prev = self.rows[n], self.rows[n - 1]
        g1, g2 = self.gsum[n - 1], self.gsum[n - 2]
        if n >= 3:
            if row[3] != g1 + 2 * _Q_MINUS_ONE * _qint_times(g2, n - 3):
                self._fail(n, 3)
        for k in range(4, n + 1):
            lhs = _qint_times(row[k], n - k + 1)
            rhs = (g1.shifted(n - k)
                   + _qint_times(row[k - 1], n - k)
                   + _Q_MINUS_ONE * _qint_times(_qint_times(prev[k - 1], n - k),
                                                n - k + 1))
            if lhs != rhs:
                self._fail(n, k)


_REFINED: dict[PatternId, _RefinedBuilder] = {}


def refined_g1k(pattern: PatternId, n: int, k: int) -> QPoly:
    """g_n(1k): the distribution restricted to flattened forms starting 1,k."""
    if n < 2:
        raise ValueError("refined distributions need n >= 2")
    if not 2 <= k <= n:
        raise ValueError(f"prefix letter k={k} out of range 2..{n}")
    builder = _REFINED.get(pattern)
    if builder is None:
        builder = _REFINED[pattern] = _RefinedBuilder(pattern)
    builder.extend(n)
    return builder.rows[n][k]


def g1k_via_elementary_32_1(n: int, k: int) -> QPoly:
    """The 32-1 refined value through its symmetric-function form:
    g_n(1k) = sum_j e_{j-1}([1],...,[k-3]) (q-1)^{j-1} g_{n-j}."""
    if not 3 <= k <= n:
        raise ValueError("requires 3 <= k <= n")
    from .qpoly import elementary_e
    table = distribution_table(PatternId.P32_1, n - 1)
    qints = [q_int(i) for i in range(1, k - 2)]
    total = _ZERO
    for j in range(1, k - 1):
        term = elementary_e(j - 1, qints) if j > 1 else _ONE
        total = total + term * (_Q_MINUS_ONE ** (j - 1)) * table.g(n - j)
    return total
