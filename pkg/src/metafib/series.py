"""Exact truncated power series and the generating functions of the streams.

A TruncatedSeries holds integer coefficients c_0..c_N for a series known
mod z^(N+1).  All arithmetic is exact; the only divisions anywhere are by
units of the form 1 - z^m, handled by prefix sums.
"""

from __future__ import annotations

from . import sequences


class TruncatedSeries:
    """Integer coefficients modulo z**(order+1)."""

    __slots__ = ("order", "_c")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("need coefficients or an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self._c = coeffs[: order + 1]

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = 1
        return cls(c, order)

    @property
    def coeffs(self) -> tuple:
        return tuple(self._c)

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} outside order {self.order}")
        return self._c[n]

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self._c) if c)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __hash__(self):
        return hash((self.order, tuple(self._c)))

    def __repr__(self):
        shown = ", ".join(f"{c}*z^{i}" for i, c in enumerate(self._c) if c)
        return f"TruncatedSeries(order={self.order}: {shown or '0'})"

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(
            [x + y for x, y in zip(self._c[: n + 1], other._c[: n + 1])], n
        )

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(
            [x - y for x, y in zip(self._c[: n + 1], other._c[: n + 1])], n
        )

    def __mul__(self, other):
        n = min(self.order, other.order)
        a, b = self._c, other._c
        # iterate over the sparser factor; two-term factors cost O(n)
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        out = [0] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ci = a[i]
            if not ci:
                continue
            top = n - i
            if ci == 1:
                for j in range(min(len(b) - 1, top) + 1):
                    out[i + j] += b[j]
            else:
                for j in range(min(len(b) - 1, top) + 1):
                    out[i + j] += ci * b[j]
        return TruncatedSeries(out, n)

    def scale(self, factor: int) -> "TruncatedSeries":
        return TruncatedSeries([factor * c for c in self._c], self.order)

    def shift_by_power(self, k: int) -> "TruncatedSeries":
        """Multiply by z**k (coefficients above the order fall off)."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        if k == 0:
            return TruncatedSeries(self._c, self.order)
        n = self.order
        return TruncatedSeries([0] * k + self._c[: max(n + 1 - k, 0)], n)

    def prefix_sums(self) -> "TruncatedSeries":
        """Divide by 1 - z: running sums of the coefficients."""
        out = []
        running = 0
        for c in self._c:
            running += c
            out.append(running)
        return TruncatedSeries(out, self.order)


def geom_inverse(m: int, order: int) -> TruncatedSeries:
    """1 / (1 - z**m): ones at the multiples of m."""
    if m < 1:
        raise ValueError("geom_inverse needs m >= 1")
    c = [0] * (order + 1)
    for i in range(0, order + 1, m):
        c[i] = 1
    return TruncatedSeries(c, order)


def gf_ruler(order: int) -> TruncatedSeries:
    """Sum over k of z**(2**k) / (1 - z**(2**k)); coefficient n is ruler(n)."""
    c = [0] * (order + 1)
    k = 1
    while k <= order:
        for i in range(k, order + 1, k):
            c[i] += 1
        k <<= 1
    return TruncatedSeries(c, order)


def _times_one_plus_power(series: TruncatedSeries, t: int) -> TruncatedSeries:
    return series + series.shift_by_power(t)


def gf_Dn(n: int, order: int) -> TruncatedSeries:
    """Generating function of the word D_n.

    Equals z**(n+1) times the product of (1 + z**(2**j - 1)) for j = 1..n;
    its support is exactly the set of 1-positions of word_D(n).
    """
    if n < 0:
        raise ValueError("gf_Dn needs n >= 0")
    out = TruncatedSeries.monomial(n + 1, order)
    for j in range(1, n + 1):
        t = (1 << j) - 1
        if t > order:
            break
        out = _times_one_plus_power(out, t)
    return out


def gf_D0(order: int) -> TruncatedSeries:
    """z times the product over n >= 1 of (1 + z**(2**n - 1)).

    Coefficient of z**n is d(0, n).
    """
    out = TruncatedSeries.monomial(1, order)
    n = 1
    while (1 << n) - 1 <= order:
        out = _times_one_plus_power(out, (1 << n) - 1)
        n += 1
    return out


def gf_Ds_sum(s: int, order: int) -> TruncatedSeries:
    """The shift-s leaf stream as a sum of shifted block series.

    z plus, for each m >= 0, the series of D_m shifted to the block offset
    2**(m+1) + (s-1)(m+1).  Coefficient of z**n is d(s, n).
    """
    if s < 0:
        raise ValueError("gf_Ds_sum needs s >= 0")
    out = TruncatedSeries.monomial(1, order)
    dm = TruncatedSeries.monomial(1, order)  # D_0
    m = 0
    while True:
        offset = (1 << (m + 1)) + (s - 1) * (m + 1)
        if offset > order:
            break
        out = out + dm.shift_by_power(offset)
        # D_{m+1}(z) = z * (1 + z**(2**(m+1) - 1)) * D_m(z)
        dm = _times_one_plus_power(dm, (1 << (m + 1)) - 1).shift_by_power(1)
        m += 1
    return out


def gf_Ds_nested(s: int, order: int, depth: int) -> TruncatedSeries:
    """The same stream from the nested product form, evaluated inside out.

    Exact only when 2**depth > order, which is enforced.
    """
    if s < 0:
        raise ValueError("gf_Ds_nested needs s >= 0")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if (1 << depth) <= order:
        raise ValueError("depth too small for this order")
    one = TruncatedSeries.one(order)
    t = one
    for k in range(depth, 0, -1):
        t = one + _times_one_plus_power(t, (1 << k) - 1).shift_by_power(s + (1 << k))
    return (one + t.shift_by_power(s + 1)).shift_by_power(1)


def _strided_tail(series: TruncatedSeries, stride: int) -> TruncatedSeries:
    """series * (z**stride + z**(2*stride) + ...)."""
    n = series.order
    src = series._c
    out = [0] * (n + 1)
    for i in range(stride, n + 1):
        out[i] = out[i - stride] + src[i - stride]
    return TruncatedSeries(out, n)


def gf_As(s: int, order: int) -> TruncatedSeries:
    """Closed product form for the shift-s leaf counts; needs s >= 1.

    (1 + z + ... + z**(s-1)) * (z + z * sum over n >= 1 of the products
    prod_{k=1..n} (z**s + z**(2**k + s - 1))).  Coefficient of z**n is
    a(s, n).  For s = 0 use gf_A_from_D.
    """
    if s < 1:
        raise ValueError("gf_As needs s >= 1 (use gf_A_from_D for s = 0)")
    prod = TruncatedSeries.one(order)
    acc = TruncatedSeries.zero(order)
    n = 1
    while n * s <= order:
        t = (1 << n) + s - 1
        if t > order:
            # every later factor reduces to z**s; close the geometric tail
            acc = acc + _strided_tail(prod, s)
            break
        prod = prod.shift_by_power(s) + prod.shift_by_power(t)
        acc = acc + prod
        n += 1
    inner = (TruncatedSeries.one(order) + acc).shift_by_power(1)
    front = TruncatedSeries([1] * s, order)  # (1 - z**s) / (1 - z)
    return front * inner


def gf_A_from_D(s: int, order: int) -> TruncatedSeries:
    """Leaf counts as prefix sums of the leaf stream; valid for every s >= 0."""
    return gf_Ds_sum(s, order).prefix_sums()


def gf_Ps(s: int, order: int) -> TruncatedSeries:
    """Generating function of the leaf positions.

    Prefix sums of 1 + z * sum over k >= 0 of z**(2**k) (s + 1/(1-z**(2**k))).
    Coefficient of z**n is p(s, n) for n >= 1; the constant term is 1.
    """
    if s < 0:
        raise ValueError("gf_Ps needs s >= 0")
    c = [0] * (order + 1)
    c[0] = 1
    k = 1
    while k + 1 <= order:
        c[k + 1] += s
        for i in range(k + 1, order + 1, k):
            c[i] += 1
        k <<= 1
    return TruncatedSeries(c, order).prefix_sums()
