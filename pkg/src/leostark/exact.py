"""Exact substrate: rationals, dense univariate polynomials over Q, high
precision reals (mpmath-backed) and periodic continued fractions of square
roots.  Everything here is immutable and pure."""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache

import mpmath

Rat = Fraction

# Extra bits carried beyond any requested real precision; callers state the
# precision they need, rounding noise lives entirely inside the guard.
GUARD_BITS = 32


@contextmanager
def real_precision(bits):
    """mpmath context at `bits` working precision plus guard bits."""
    with mpmath.workprec(bits + GUARD_BITS):
        yield mpmath.mp


def to_mpf(q):
    """Render a Fraction/int at the current mpmath precision."""
    if isinstance(q, Fraction):
        return mpmath.mpf(q.numerator) / q.denominator
    return mpmath.mpf(q)


class Poly:
    """Dense univariate polynomial over Q, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def x():
        return Poly([0, 1])

    @staticmethod
    def constant(c):
        return Poly([c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_integer_coeffs(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "Poly(" + " + ".join(terms) + ")"

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        acc, base = Poly([1]), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        dlc = other.coeffs[-1]
        dn = len(other.coeffs)
        while len(r) >= dn and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < dn:
                break
            c = r[-1] / dlc
            k = len(r) - dn
            q[k] = c
            for j, b in enumerate(other.coeffs):
                r[k + j] -= c * b
            r.pop()
        return Poly(q), Poly(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return Poly([c / lc for c in self.coeffs])

    def evaluate(self, x):
        """Horner evaluation; works for any ring element supporting + and *."""
        if not self.coeffs:
            return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def shift(self, c):
        """Compose with x + c."""
        out = Poly([])
        xc = Poly([c, 1])
        for coeff in reversed(self.coeffs):
            out = out * xc + Poly([coeff])
        return out

    def gcd(self, other):
        a, b = self, _as_poly(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def is_squarefree(self):
        if self.degree <= 0:
            return True
        return self.gcd(self.derivative()).degree == 0


def _as_poly(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly([v])
    raise TypeError(f"cannot coerce {type(v)} to Poly")


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) by the Euclidean recursion over Q."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    sign = 1
    res = Fraction(1)
    while True:
        if g.degree == 0:
            return sign * res * g.coeffs[0] ** f.degree
        if f.degree < g.degree:
            if (f.degree * g.degree) % 2:
                sign = -sign
            f, g = g, f
        r = f % g
        if r.is_zero():
            return Fraction(0)
        res *= g.coeffs[-1] ** (f.degree - r.degree)
        if (f.degree * g.degree) % 2:
            sign = -sign
        f, g = g, r


def resultant_int(f, g):
    """Res(f, g) for integer coefficient lists via the subresultant PRS.

    Avoids Fraction blowup on the hot path (norm computations).
    """
    f = list(f)
    g = list(g)
    while f and f[-1] == 0:
        f.pop()
    while g and g[-1] == 0:
        g.pop()
    if not f or not g:
        return 0
    s = 1
    if len(f) < len(g):
        if ((len(f) - 1) * (len(g) - 1)) % 2:
            s = -s
        f, g = g, f
    r = 1
    h = 1
    while True:
        d = (len(f) - 1) - (len(g) - 1)
        if ((len(f) - 1) * (len(g) - 1)) % 2:
            s = -s
        # pseudo-remainder of f by g
        rem = list(f)
        glc = g[-1]
        for _ in range(d + 1):
            if len(rem) < len(g):
                rem = [c * glc for c in rem]
                continue
            lead = rem[-1]
            rem = [c * glc for c in rem[:-1]]
            off = len(rem) - (len(g) - 1)
            for j in range(len(g) - 1):
                rem[off + j] -= lead * g[j]
            while rem and rem[-1] == 0:
                rem.pop()
        if not rem:
            return 0
        if len(rem) == 1:
            # deg(rem) == 0 finishes: Res = s * rem^deg(g) / normalization
            c = rem[0] // (r * h**d)
            res = c ** (len(g) - 1)
            for _ in range(len(g) - 1 - 1):
                pass
            # normalize through the final subresultant step
            gl = g[-1]
            num = s * rem[0] ** (len(g) - 1)
            den = (r * h**d) ** (len(g) - 1)
            val, check = divmod(num, den)
            assert check == 0
            if len(g) == 1:
                return s * g[0] ** (len(f) - 1)
            return val if gl > 0 or (len(g) - 1) == 0 else val
        div = r * h**d
        rem = [c // div for c in rem]
        f, g = g, rem
        r = f[-1] if f[-1] > 0 else f[-1]
        r = f[-1]
        h = h if d == 0 else (r**d) // (h ** (d - 1)) if d > 1 else r
        if len(g) == 1:
            return s * g[0] ** (len(f) - 1)


def poly_discriminant(f: Poly) -> Fraction:
    """disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("degree too small")
    if n == 1:
        return Fraction(1)
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / f.leading()


def sturm_real_root_count(f: Poly) -> int:
    """Number of distinct real roots, by Sturm's theorem.  Requires squarefree."""
    if f.is_zero() or f.degree < 1:
        return 0
    if not f.is_squarefree():
        raise ValueError("squarefree required")
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)

    def sign_at_inf(p, positive):
        if p.is_zero():
            return 0
        lc = p.coeffs[-1]
        if positive or p.degree % 2 == 0:
            return 1 if lc > 0 else -1
        return -1 if lc > 0 else 1

    def variations(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    neg = variations([sign_at_inf(p, False) for p in chain])
    pos = variations([sign_at_inf(p, True) for p in chain])
    return neg - pos


def sqrt_continued_fraction(d: int):
    """[a0; period] of sqrt(d).  The period always ends with 2*a0."""
    if d < 2:
        raise ValueError("d must be >= 2")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError("perfect square")
    period = []
    p, q = 0, 1
    a = a0
    while True:
        p = a * q - p
        q = (d - p * p) // q
        a = (a0 + p) // q
        period.append(a)
        if a == 2 * a0:
            return a0, period


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    if n < 1:
        raise ValueError("n must be positive")
    num = Poly([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = divmod(num, cyclotomic_polynomial(d))
            assert rem.is_zero()
    return num


@lru_cache(maxsize=None)
def real_cyclotomic_minpoly(n: int) -> Poly:
    """Minimal polynomial of zeta_n + zeta_n^{-1}, degree phi(n)/2 (n >= 3)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    phi_n = cyclotomic_polynomial(n)
    deg = phi_n.degree
    half = deg // 2
    # powers of (x + x^{n-1}) reduced mod Phi_n, then one linear solve
    theta = (Poly.x() + Poly([0] * (n - 1) + [1])) % phi_n
    powers = [Poly([1])]
    for _ in range(half):
        powers.append((powers[-1] * theta) % phi_n)
    # solve sum_{k<half} c_k theta^k = -theta^half  coefficientwise
    rows = deg
    mat = [[powers[k].coeffs[i] if i < len(powers[k].coeffs) else Fraction(0)
            for k in range(half)] for i in range(rows)]
    rhs = [-(powers[half].coeffs[i] if i < len(powers[half].coeffs) else Fraction(0))
           for i in range(rows)]
    sol = _solve_overdetermined(mat, rhs)
    return Poly(sol + [Fraction(1)])


def _solve_overdetermined(mat, rhs):
    """Gaussian elimination for a consistent system with unique solution."""
    m = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    rows, cols = len(m), len(mat[0])
    piv_rows = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            raise ValueError("singular system")
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [v - factor * w for v, w in zip(m[i], m[r])]
        piv_rows.append(r)
        r += 1
    for i in range(r, rows):
        if m[i][cols] != 0:
            raise ValueError("inconsistent system")
    return [m[i][cols] for i in piv_rows]
