"""Exact counts of semiorders by element count and bounded chain length.

Everything here is arbitrary-precision integer arithmetic; counts grow
like 3^n already at length 3, so nothing ever goes through machine ints.
Five independent routes compute f_leq(n, h), the number of nonisomorphic
n-element semiorders of length at most h, and they must all agree:

* ``convolution`` -- f(n) = sum_t f_leq_h(t) * f_leq_{h-1}(n-1-t), the
  recurrence realized structurally by core.split/core.join;
* ``alternating`` -- a short signed recurrence in n with binomial
  coefficients drawn from the denominator polynomial p_{h+1};
* ``series``      -- expansion of the rational generating function
  p_h(x) / p_{h+1}(x), where p_0 = 1, p_1 = 1 - x and
  p_{h+1} = p_h - x * p_{h-1};
* ``trig``        -- a finite trigonometric sum evaluated in
  high-precision decimal floating point and rounded, with a residue
  guard; a numeric cross-check, not a primary path;
* ``closed``      -- closed forms, available for h = 1 (2^(n-1)) and
  h = 3 ((3^(n-1) + 1) / 2) only.

Exact-length counts are differences of consecutive at-most counts, and
count_by_good refines them by the number of good (deepest-level) elements.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Decimal, getcontext, localcontext

METHODS = ("convolution", "alternating", "series", "trig", "closed")


class InvalidParametersError(ValueError):
    """Arguments outside the documented domain of a counting routine."""


class ClosedFormUnavailableError(ValueError):
    def __init__(self, h: int):
        super().__init__(f"no closed form for length bound h = {h}; only h = 1 and h = 3")
        self.h = h


class TrigPrecisionLossError(ArithmeticError):
    def __init__(self, n: int, h: int, residue: float):
        super().__init__(
            f"trigonometric sum for (n={n}, h={h}) rounds with residue {residue:.3g} > 0.25"
        )
        self.n = n
        self.h = h
        self.residue = residue


def catalan(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1); counts all n-element semiorders."""
    if n < 0:
        raise InvalidParametersError("need n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def _comb0(a: int, b: int) -> int:
    return math.comb(a, b) if 0 <= b <= a else 0


class CountTable:
    """Memoized t(n, h, k): n-element length-h semiorders with k good elements.

    Equivalently (n+1)-node plane trees of height h+1 with k deepest
    nodes.  Base row t(n, 0, k) = [n == k]; for h >= 1,
    t(n, h, k) = sum_m binom(m+k-1, m-1) t(n-k, h-1, m).  The table is
    bounded so memory use stays predictable.
    """

    def __init__(self, max_n: int = 512):
        self.max_n = max_n
        self._memo: dict[tuple[int, int, int], int] = {}

    def t(self, n: int, h: int, k: int) -> int:
        if n < 1 or h < 0 or not 1 <= k <= n:
            raise InvalidParametersError(f"need n >= 1, h >= 0, 1 <= k <= n; got {(n, h, k)}")
        if n > self.max_n:
            raise InvalidParametersError(f"n = {n} exceeds table bound {self.max_n}")
        return self._t(n, h, k)

    def _t(self, n: int, h: int, k: int) -> int:
        if h == 0:
            return 1 if n == k else 0
        key = (n, h, k)
        cached = self._memo.get(key)
        if cached is None:
            cached = sum(
                math.comb(m + k - 1, m - 1) * self._t(n - k, h - 1, m)
                for m in range(1, n - k + 1)
            )
            self._memo[key] = cached
        return cached


_shared_table = CountTable()


def count_by_good(n: int, h: int, k: int) -> int:
    """t(n, h, k) from a shared bounded table."""
    return _shared_table.t(n, h, k)


def _leq_convolution(n: int, h: int) -> int:
    row = [1] * (n + 1)  # h = 0: only antichains
    for _ in range(h):
        nxt = [1]
        for m in range(1, n + 1):
            nxt.append(sum(nxt[t] * row[m - 1 - t] for t in range(m)))
        row = nxt
    return row[n]


def _leq_alternating(n: int, h: int) -> int:
    # The signed recurrence holds once n exceeds floor((h+1)/2); below that
    # every n-element semiorder is shorter than h anyway, so the count is
    # the full Catalan number and seeds the recurrence.
    seed_top = (h + 1) // 2
    vals: list[int] = []
    for m in range(n + 1):
        if m <= seed_top:
            vals.append(catalan(m))
            continue
        acc = 0
        for k in range(1, (h + 2) // 2 + 1):
            term = _comb0(h + 2 - k, k) * (vals[m - k] if m >= k else 0)
            acc += term if k % 2 else -term
        vals.append(acc)
    return vals[n]


def p_polynomial(h: int) -> tuple[int, ...]:
    """Ascending coefficients of p_h: p_0 = 1, p_1 = 1 - x, p_{h+1} = p_h - x p_{h-1}."""
    if h < 0:
        raise InvalidParametersError("need h >= 0")
    prev, cur = (1,), (1, -1)
    if h == 0:
        return prev
    for _ in range(h - 1):
        shifted = (0,) + prev
        width = max(len(cur), len(shifted))
        nxt = tuple(
            (cur[i] if i < len(cur) else 0) - (shifted[i] if i < len(shifted) else 0)
            for i in range(width)
        )
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt = nxt[:-1]
        prev, cur = cur, nxt
    return cur


def poly_mul(a, b) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        for j, bv in enumerate(b):
            out[i + j] += av * bv
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def series_divide(numerator, denominator, order: int) -> tuple[int, ...]:
    """First order+1 coefficients of numerator/denominator, exactly.

    The denominator must have constant term 1, which keeps the long
    division inside the integers.
    """
    if order < 0:
        raise InvalidParametersError("need order >= 0")
    if not denominator or denominator[0] != 1:
        raise InvalidParametersError("denominator must have constant term 1")
    remainder = list(numerator[: order + 1]) + [0] * max(0, order + 1 - len(numerator))
    out = []
    for n in range(order + 1):
        c = remainder[n]
        out.append(c)
        if c:
            for i in range(1, min(len(denominator), order + 1 - n)):
                remainder[n + i] -= c * denominator[i]
    return tuple(out)


def series_leq(h: int, order: int) -> tuple[int, ...]:
    """Coefficients 0..order of p_h / p_{h+1}; entry n is f_leq(n, h)."""
    return series_divide(p_polynomial(h), p_polynomial(h + 1), order)


def series_exact(h: int, order: int) -> tuple[int, ...]:
    """Coefficients 0..order of x^(h+1) / (p_{h+1} p_h); entry n is f(n, h)."""
    numerator = (0,) * (h + 1) + (1,)
    return series_divide(numerator, poly_mul(p_polynomial(h + 1), p_polynomial(h)), order)


_pi_cache: dict[int, Decimal] = {}


def _dec_pi() -> Decimal:
    """Pi at the current decimal context precision (arctan-style series)."""
    prec = getcontext().prec
    if prec in _pi_cache:
        return _pi_cache[prec]
    getcontext().prec += 2
    three = Decimal(3)
    lasts, t, s, n, na, d, da = Decimal(0), three, Decimal(3), 1, 0, 0, 24
    while s != lasts:
        lasts = s
        n, na = n + na, na + 8
        d, da = d + da, da + 32
        t = (t * n) / d
        s += t
    getcontext().prec -= 2
    result = +s
    _pi_cache[prec] = result
    return result


def _dec_sin(x: Decimal) -> Decimal:
    getcontext().prec += 2
    i, lasts, s, fact, num, sign = 1, Decimal(0), x, 1, x, 1
    while s != lasts:
        lasts = s
        i += 2
        fact *= i * (i - 1)
        num *= x * x
        sign *= -1
        s += num / fact * sign
    getcontext().prec -= 2
    return +s


def _dec_cos(x: Decimal) -> Decimal:
    getcontext().prec += 2
    i, lasts, s, fact, num, sign = 0, Decimal(0), Decimal(1), 1, Decimal(1), 1
    while s != lasts:
        lasts = s
        i += 2
        fact *= i * (i - 1)
        num *= x * x
        sign *= -1
        s += num / fact * sign
    getcontext().prec -= 2
    return +s


def trig_estimate(n: int, h: int, digits: int | None = None) -> tuple[int, float]:
    """Evaluate the trigonometric sum for f_leq(n, h) and round it.

    Returns (nearest integer, rounding residue).  Working precision scales
    with n because the summands reach 4^(n+1); pass ``digits`` to override
    (chiefly to exercise the precision-loss guard).  The residue is a
    sanity check, not a proof: a badly underprecise result can quantize to
    an integer and slip past it, so the default precision carries a wide
    margin instead of leaning on the guard.
    """
    if n <= 1:
        return 1, 0.0
    if digits is None:
        digits = 35 + (62 * n) // 100
    with localcontext() as ctx:
        ctx.prec = digits
        pi = _dec_pi()
        total = Decimal(0)
        for j in range(1, (h + 2) // 2 + 1):
            theta = pi * j / (h + 3)
            sin_sq = _dec_sin(theta) ** 2
            cos_sq = _dec_cos(theta) ** 2
            total += sin_sq * cos_sq**n
        value = total * Decimal(4) ** (n + 1) / (h + 3)
        nearest = int(value.to_integral_value(rounding=ROUND_HALF_EVEN))
        residue = abs(value - nearest)
        return nearest, float(residue)


def trig_count(n: int, h: int, digits: int | None = None) -> int:
    """Rounded trigonometric value, guarded: residues above 0.25 raise."""
    nearest, residue = trig_estimate(n, h, digits)
    if residue > 0.25:
        raise TrigPrecisionLossError(n, h, residue)
    return nearest


def _leq_closed(n: int, h: int) -> int:
    if h == 1:
        return 1 if n == 0 else 2 ** (n - 1)
    if h == 3:
        return 1 if n == 0 else (3 ** (n - 1) + 1) // 2
    raise ClosedFormUnavailableError(h)


def count_leq(n: int, h: int, method: str = "convolution") -> int:
    """Number of nonisomorphic n-element semiorders of length at most h."""
    if n < 0 or h < 0:
        raise InvalidParametersError("need n >= 0 and h >= 0")
    if method == "convolution":
        return _leq_convolution(n, h)
    if method == "alternating":
        return _leq_alternating(n, h)
    if method == "series":
        return series_leq(h, n)[n]
    if method == "trig":
        return trig_count(n, h)
    if method == "closed":
        return _leq_closed(n, h)
    raise InvalidParametersError(f"unknown method {method!r}; choose from {METHODS}")


def count_exact(n: int, h: int, method: str = "convolution") -> int:
    """Number of nonisomorphic n-element semiorders of length exactly h.

    Follows the series convention at n = 0: the empty semiorder has no
    longest chain, so count_exact(0, h) = 0 for every h.
    """
    if n < 0 or h < 0:
        raise InvalidParametersError("need n >= 0 and h >= 0")
    if n == 0:
        return 0
    if h == 0:
        return 1
    return count_leq(n, h, method) - count_leq(n, h - 1, method)


def format_polynomial(coefficients) -> str:
    """Render ascending coefficients as e.g. ``1 - 3*x + x^2``."""
    terms = []
    for power, c in enumerate(coefficients):
        if c == 0:
            continue
        magnitude = abs(c)
        if power == 0:
            body = str(magnitude)
        elif power == 1:
            body = "x" if magnitude == 1 else f"{magnitude}*x"
        else:
            body = f"x^{power}" if magnitude == 1 else f"{magnitude}*x^{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"
