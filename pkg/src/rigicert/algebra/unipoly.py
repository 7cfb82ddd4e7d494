"""Dense univariate polynomials over the integers, with factorization.

The factorization pipeline is the classical one: Yun squarefree decomposition,
Cantor-Zassenhaus factorization modulo a good prime, quadratic multifactor
Hensel lifting past the Mignotte bound, and subset recombination.  Everything
runs on Python's arbitrary-precision integers.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import InputError, InternalInvariantError


class UniPoly:
    """Integer polynomial as an ascending coefficient tuple (empty = zero)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise InputError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def from_fractions(cls, values: Sequence[Fraction]) -> "UniPoly":
        """Clear denominators and strip content: the primitive associate."""
        fracs = [Fraction(v) for v in values]
        scale = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        ints = [int(f * scale) for f in fracs]
        return cls(ints).normalized()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise InputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def normalized(self) -> "UniPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return UniPoly([x // c for x in self.coeffs])

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def scale(self, k: int) -> "UniPoly":
        return UniPoly([c * k for c in self.coeffs])

    def __pow__(self, n: int) -> "UniPoly":
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def try_divide(self, divisor: "UniPoly") -> "UniPoly | None":
        """Quotient if the division is exact over the integers, else None."""
        if divisor.is_zero():
            raise InputError("division by zero polynomial")
        rem = list(self.coeffs)
        d = divisor.coeffs
        dd = len(d) - 1
        lead = d[-1]
        if len(rem) - 1 < dd:
            return None if rem else UniPoly()
        q = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            if rem[i] % lead:
                return None
            f = rem[i] // lead
            q[i - dd] = f
            for j, c in enumerate(d):
                rem[i - dd + j] -= f * c
        if any(rem):
            return None
        return UniPoly(q)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Greatest common divisor over Z, primitive with positive leading coefficient."""
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    cont = math.gcd(a.content(), b.content())
    f, g = list(a.normalized().coeffs), list(b.normalized().coeffs)
    if len(f) < len(g):
        f, g = g, f
    # primitive PRS: pseudo-remainders, stripped to primitive parts each step
    while True:
        r = _pseudo_rem_int(f, g)
        if not r:
            gcd_part = UniPoly(g).normalized()
            break
        c = math.gcd(*r)
        r = [x // c for x in r]
        f, g = g, r
        if len(g) == 1:
            gcd_part = UniPoly([1])
            break
    return gcd_part.scale(cont)


def _pseudo_rem_int(a: list[int], b: list[int]) -> list[int]:
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and any(r):
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r[:-1]]
        for i in range(db):
            r[shift + i] -= lr * b[i]
        while r and r[-1] == 0:
            r.pop()
    return r


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm on the primitive part: [(q_i, i)] with q_i squarefree,
    pairwise coprime, and p ~ prod q_i^i up to a rational constant."""
    if p.is_zero():
        raise InputError("zero polynomial has no squarefree decomposition")
    f = p.normalized()
    if f.degree < 1:
        return []
    out: list[tuple[UniPoly, int]] = []
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    w = f.try_divide(g)
    y = f.derivative().try_divide(g)
    if w is None or y is None:
        raise InternalInvariantError("inexact division in squarefree decomposition")
    i = 1
    while True:
        z = y - w.derivative()
        if z.is_zero():
            if w.degree > 0:
                out.append((w.normalized(), i))
            break
        h = poly_gcd(w, z)
        if h.degree > 0:
            out.append((h.normalized(), i))
        w2 = w.try_divide(h)
        y2 = z.try_divide(h)
        if w2 is None or y2 is None:
            raise InternalInvariantError("inexact division in squarefree decomposition")
        w, y = w2, y2
        i += 1
    return out


# ---------------------------------------------------------------------------
# arithmetic in GF(p)[x]: plain ascending int lists, coefficients in [0, p)


def gf_strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def gf_from_int(p_coeffs: Sequence[int], q: int) -> list[int]:
    return gf_strip([c % q for c in p_coeffs])


def gf_add(a: list[int], b: list[int], q: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % q
    return gf_strip(out)


def gf_sub(a: list[int], b: list[int], q: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % q
    return gf_strip(out)


def gf_mul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return gf_strip([c % q for c in out])


def gf_divmod(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    if not b:
        raise InputError("gf division by zero")
    inv = pow(b[-1], -1, q)
    rem = list(a)
    db = len(b) - 1
    quo = [0] * max(0, len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % q
        if c == 0:
            rem[i] = 0
            continue
        f = (c * inv) % q
        quo[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] = (rem[i - db + j] - f * b[j]) % q
    return gf_strip(quo), gf_strip([c % q for c in rem])


def gf_rem(a: list[int], b: list[int], q: int) -> list[int]:
    return gf_divmod(a, b, q)[1]


def gf_monic(f: list[int], q: int) -> list[int]:
    if not f:
        return []
    inv = pow(f[-1], -1, q)
    return gf_strip([(c * inv) % q for c in f])


def gf_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    while b:
        a, b = b, gf_rem(a, b, q)
    return gf_monic(a, q)


def gf_pow_mod(base: list[int], exp: int, f: list[int], q: int) -> list[int]:
    result = [1]
    base = gf_rem(base, f, q)
    while exp:
        if exp & 1:
            result = gf_rem(gf_mul(result, base, q), f, q)
        base = gf_rem(gf_mul(base, base, q), f, q)
        exp >>= 1
    return result


def gf_extended_euclid(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int], list[int]]:
    """(g, s, t) with s*a + t*b = g = monic gcd."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quo, rem = gf_divmod(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, gf_sub(s0, gf_mul(quo, s1, q), q)
        t0, t1 = t1, gf_sub(t0, gf_mul(quo, t1, q), q)
    if not r0:
        raise InputError("extended euclid of two zero polynomials")
    inv = pow(r0[-1], -1, q)
    scale = lambda f: gf_strip([(c * inv) % q for c in f])
    return scale(r0), scale(s0), scale(t0)


def gf_derivative(f: list[int], q: int) -> list[int]:
    return gf_strip([(i * c) % q for i, c in enumerate(f)][1:])


def gf_squarefree_list(f: list[int], q: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of a monic polynomial over GF(q)."""
    out: list[tuple[list[int], int]] = []

    def recurse(f: list[int], outer_mult: int):
        d = gf_derivative(f, q)
        if not d:
            # f is a polynomial in x^q: take the q-th root (Frobenius fixes GF(q))
            root = [f[i] for i in range(0, len(f), q)]
            recurse(gf_strip(root), outer_mult * q)
            return
        w = gf_gcd(f, d, q)
        v, _ = gf_divmod(f, w, q)  # product of squarefree part
        i = 1
        while len(v) > 1:
            h = gf_gcd(v, w, q)
            factor, _ = gf_divmod(v, h, q)
            if len(factor) > 1:
                out.append((factor, i * outer_mult))
            v = h
            w, _ = gf_divmod(w, h, q)
            i += 1
        if len(w) > 1:
            # leftover factors all have multiplicity divisible by q; the
            # recursive call sees a vanishing derivative and takes the root
            recurse(w, outer_mult)

    recurse(gf_monic(f, q), 1)
    return out


def gf_distinct_degree(f: list[int], q: int) -> list[tuple[list[int], int]]:
    """[(product of irreducible factors of degree d, d)] for monic squarefree f."""
    out = []
    h = [0, 1]  # x
    work = list(f)
    d = 0
    while len(work) - 1 > 0:
        d += 1
        if 2 * d > len(work) - 1:
            out.append((work, len(work) - 1))
            break
        h = gf_pow_mod(h, q, work, q)
        g = gf_gcd(gf_sub(h, [0, 1], q), work, q)
        if len(g) > 1:
            out.append((g, d))
            work, _ = gf_divmod(work, g, q)
            h = gf_rem(h, work, q)
    return out


def gf_equal_degree_split(f: list[int], d: int, q: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus split of a monic product of degree-d irreducibles, odd q."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(q) for _ in range(n)]
        a = gf_strip(a)
        if len(a) - 1 < 1:
            continue
        g = gf_gcd(a, f, q)
        if 0 < len(g) - 1 < n:
            h = g
        else:
            b = gf_pow_mod(a, (q**d - 1) // 2, f, q)
            h = gf_gcd(gf_sub(b, [1], q), f, q)
            if not (0 < len(h) - 1 < n):
                continue
        other, _ = gf_divmod(f, h, q)
        return gf_equal_degree_split(h, d, q, rng) + gf_equal_degree_split(other, d, q, rng)


def gf_factor_squarefree(f: list[int], q: int, rng: random.Random) -> list[list[int]]:
    """Monic irreducible factors of a monic squarefree polynomial, odd q."""
    out: list[list[int]] = []
    for prod, d in gf_distinct_degree(f, q):
        out.extend(gf_equal_degree_split(prod, d, q, rng))
    out.sort()
    return out


def degree_multiset_mod(p: UniPoly, q: int) -> tuple[tuple[int, ...], bool]:
    """Degrees (with multiplicity) of the irreducible factors of p mod q.

    Requires q not dividing the leading coefficient.  The flag reports whether
    p mod q is squarefree.
    """
    f = gf_from_int(p.coeffs, q)
    if len(f) != len(p.coeffs):
        raise InputError(f"{q} divides the leading coefficient")
    degrees: list[int] = []
    squarefree = True
    for part, mult in gf_squarefree_list(f, q):
        if mult > 1:
            squarefree = False
        for prod, d in gf_distinct_degree(part, q):
            degrees.extend([d] * ((len(prod) - 1) // d * mult))
    return tuple(sorted(degrees)), squarefree


# ---------------------------------------------------------------------------
# Hensel lifting and Zassenhaus recombination


def _mod_sym(c: int, m: int) -> int:
    c %= m
    return c - m if 2 * c > m else c


def _poly_mod(f: list[int], m: int) -> list[int]:
    return gf_strip([c % m for c in f])


def _hensel_step(m: int, f, g, h, s, t):
    """One quadratic lift: inputs satisfy f = g*h and s*g + t*h = 1 (mod m),
    h monic; outputs satisfy the same mod m**2."""
    m2 = m * m
    mul = lambda a, b: gf_mul(a, b, m2)
    sub = lambda a, b: gf_sub(a, b, m2)
    add = lambda a, b: gf_add(a, b, m2)
    e = sub(_poly_mod(f, m2), mul(g, h))
    q_, r_ = gf_divmod(mul(s, e), h, m2)
    g_star = add(add(g, mul(t, e)), mul(q_, g))
    h_star = add(h, r_)
    b = sub(add(mul(s, g_star), mul(t, h_star)), [1])
    c_, d_ = gf_divmod(mul(s, b), h_star, m2)
    s_star = sub(s, d_)
    t_star = sub(sub(t, mul(t, b)), mul(c_, g_star))
    return g_star, h_star, s_star, t_star


def _lift_pair(p: int, target: int, f, g, h, s, t):
    m = p
    while m < target:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m *= m
    return g, h, m


def hensel_lift(p: int, target: int, f: list[int], factors: list[list[int]]) -> tuple[list[list[int]], int]:
    """Lift f = lc(f) * prod(factors) from mod p to mod M >= target.

    The factors are monic and pairwise coprime mod p; returns monic lifts and
    the modulus M actually reached (a power-of-two power of p)."""
    modulus = p
    while modulus < target:
        modulus *= modulus

    def recurse(f: list[int], facs: list[list[int]]) -> list[list[int]]:
        if len(facs) == 1:
            inv = pow(f[-1] % modulus, -1, modulus)
            return [gf_strip([(c * inv) % modulus for c in f])]
        half = len(facs) // 2
        g0 = [f[-1] % p]
        for fac in facs[:half]:
            g0 = gf_mul(g0, fac, p)
        h0 = [1]
        for fac in facs[half:]:
            h0 = gf_mul(h0, fac, p)
        one, s, t = gf_extended_euclid(g0, h0, p)
        if one != [1]:
            raise InternalInvariantError("factor halves are not coprime mod p")
        g, h, m = _lift_pair(p, modulus, _poly_mod(f, modulus), g0, h0, s, t)
        if m != modulus:
            g, h = _poly_mod(g, modulus), _poly_mod(h, modulus)
        return recurse(g, facs[:half]) + recurse(h, facs[half:])

    return recurse(_poly_mod(f, modulus), factors), modulus


def _mignotte_bound(f: UniPoly) -> int:
    norm = math.isqrt((f.degree + 1) * sum(c * c for c in f.coeffs)) + 1
    return (1 << f.degree) * norm * abs(f.leading)


def _choose_factoring_prime(f: UniPoly) -> tuple[int, list[list[int]]]:
    """An odd prime where f stays squarefree; prefers few modular factors."""
    best: tuple[int, list[list[int]]] | None = None
    found = 0
    for q in _prime_stream(3):
        if f.leading % q == 0:
            continue
        fq = gf_from_int(f.coeffs, q)
        if len(fq) != len(f.coeffs):
            continue
        if len(gf_gcd(fq, gf_derivative(fq, q), q)) != 1:
            continue
        rng = random.Random(q)
        factors = gf_factor_squarefree(gf_monic(fq, q), q, rng)
        if best is None or len(factors) < len(best[1]):
            best = (q, factors)
        found += 1
        if found >= 4 or len(best[1]) == 1:
            return best
    raise InternalInvariantError("ran out of primes")


def _prime_stream(start: int):
    q = start
    while True:
        if all(q % d for d in range(2, math.isqrt(q) + 1)):
            yield q
        q += 2


def factor_squarefree_primitive(f: UniPoly) -> list[UniPoly]:
    """Irreducible factors of a primitive squarefree polynomial with positive lc."""
    if f.degree == 1:
        return [f]
    q, modular = _choose_factoring_prime(f)
    if len(modular) == 1:
        return [f]
    bound = 2 * _mignotte_bound(f) + 1
    lifted, modulus = hensel_lift(q, bound, list(f.coeffs), modular)
    remaining = list(range(len(lifted)))
    current = f
    out: list[UniPoly] = []
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for combo in itertools.combinations(remaining, size):
            cand = [current.leading % modulus]
            for i in combo:
                cand = gf_mul(cand, lifted[i], modulus)
            cand_int = UniPoly([_mod_sym(c, modulus) for c in cand]).normalized()
            quotient = current.try_divide(cand_int)
            if quotient is not None:
                out.append(cand_int)
                current = quotient.normalized()
                remaining = [i for i in remaining if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if current.degree > 0:
        out.append(current.normalized())
    out.sort(key=lambda u: (u.degree, u.coeffs))
    return out


def factor_over_q(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible primitive factors with multiplicities over the rationals.

    The product of the factors (to their multiplicities) reconstructs the
    input up to a rational constant.
    """
    if p.is_zero():
        raise InputError("cannot factor the zero polynomial")
    if p.degree < 1:
        return []
    work = p.normalized()
    out: list[tuple[UniPoly, int]] = []
    # split off the power of x
    k = 0
    coeffs = list(work.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        k += 1
    if k:
        out.append((UniPoly([0, 1]), k))
        work = UniPoly(coeffs)
    for part, mult in squarefree_decomposition(work):
        for factor in factor_squarefree_primitive(part):
            out.append((factor, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible(p: UniPoly) -> bool:
    if p.normalized().degree < 1:
        return False
    factors = factor_over_q(p)
    return len(factors) == 1 and factors[0][1] == 1


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i, flag in enumerate(sieve) if flag]
