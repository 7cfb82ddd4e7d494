"""Cycle-type sieving for non-solubility certificates.

Factorization degree patterns of an integer polynomial modulo good primes are
cycle types of elements of its Galois group (Dedekind).  Three sound rules can
refute solubility of a transitive group from observed cycle types:

  jordan_prime_cycle   a p-cycle with n/2 < p <= n-3, p prime: the group is
                       primitive and contains the alternating group.
  burnside_two_transitive   an (n-1)-cycle makes the group 2-transitive, and
                       soluble 2-transitive groups have prime-power degree.
  max_soluble_table    the type occurs in none of the maximal soluble
                       transitive groups of degree n (enumerated explicitly
                       for n = 6 and 8: the two imprimitive wreath products
                       per degree, plus the affine semilinear group AGL(1,8)
                       twisted by Frobenius at degree 8).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import InputError
from .unipoly import UniPoly, degree_multiset_mod, factor_over_q, primes_up_to

Permutation = tuple[int, ...]


def _compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def _closure(generators: Sequence[Permutation]) -> frozenset[Permutation]:
    n = len(generators[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for g in frontier:
            for gen in generators:
                h = _compose(gen, g)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        frontier = new
    return frozenset(seen)


def cycle_type(perm: Permutation) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _cycles_to_perm(n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    perm = list(range(n))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            perm[v] = cyc[(i + 1) % len(cyc)]
    return tuple(perm)


def _wreath_generators(block_size: int, block_count: int) -> list[Permutation]:
    """S_{block_size} wr S_{block_count} acting imprimitively on their product."""
    n = block_size * block_count
    gens = [
        _cycles_to_perm(n, [(0, 1)]),  # transposition inside the first block
        _cycles_to_perm(n, [tuple(range(block_size))]),  # cycle inside the first block
        _cycles_to_perm(n, [(i, i + block_size) for i in range(block_size)]),  # swap blocks 0,1
        _cycles_to_perm(
            n,
            [tuple(i + j * block_size for j in range(block_count)) for i in range(block_size)],
        ),  # rotate all blocks
    ]
    return gens


def _agl18_elements() -> frozenset[Permutation]:
    """AGammaL(1,8): maps x -> a * x^(2^k) + b over GF(8); order 168."""
    # GF(8) as integers 0..7 with polynomial arithmetic mod t^3 + t + 1
    def mul(a: int, b: int) -> int:
        out = 0
        for bit in range(3):
            if (b >> bit) & 1:
                out ^= a << bit
        for bit in (5, 4, 3):
            if (out >> bit) & 1:
                out ^= (0b1011) << (bit - 3)
        return out

    def frob(a: int, k: int) -> int:
        for _ in range(k):
            a = mul(a, a)
        return a

    elems = set()
    for a in range(1, 8):
        for b in range(8):
            for k in range(3):
                elems.add(tuple(mul(a, frob(x, k)) ^ b for x in range(8)))
    return frozenset(elems)


@lru_cache(maxsize=None)
def maximal_soluble_transitive_groups(degree: int) -> tuple[tuple[str, int, frozenset[Permutation]], ...]:
    """(name, expected order, elements) for each maximal soluble transitive
    group of the given degree, up to conjugacy."""
    if degree == 6:
        return (
            ("S2_wr_S3", 48, _closure(_wreath_generators(2, 3))),
            ("S3_wr_S2", 72, _closure(_wreath_generators(3, 2))),
        )
    if degree == 8:
        return (
            ("S2_wr_S4", 384, _closure(_wreath_generators(2, 4))),
            ("S4_wr_S2", 1152, _closure(_wreath_generators(4, 2))),
            ("AGammaL_1_8", 168, _agl18_elements()),
        )
    raise InputError(f"no maximal-soluble-group table for degree {degree}")


@lru_cache(maxsize=None)
def soluble_cycle_types(degree: int) -> frozenset[tuple[int, ...]]:
    """Every cycle type realized by some maximal soluble transitive group."""
    types: set[tuple[int, ...]] = set()
    for _, order, elements in maximal_soluble_transitive_groups(degree):
        if len(elements) != order:
            raise InputError(f"group table for degree {degree} has wrong order")
        types.update(cycle_type(p) for p in elements)
    return frozenset(types)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _is_prime_power(n: int) -> bool:
    for p in range(2, n + 1):
        if _is_prime(p):
            m = n
            while m % p == 0:
                m //= p
            if m == 1:
                return True
            if n % p == 0:
                return False
    return False


RULE_JORDAN = "jordan_prime_cycle"
RULE_BURNSIDE = "burnside_two_transitive"
RULE_TABLE = "max_soluble_table"


def rules_for_degree(n: int) -> list[str]:
    rules = [RULE_JORDAN, RULE_BURNSIDE]
    if n in (6, 8):
        rules.append(RULE_TABLE)
    return rules


def _rule_hit(multiset: tuple[int, ...], n: int) -> str | None:
    nontrivial = [d for d in multiset if d > 1]
    if len(nontrivial) == 1:
        p = nontrivial[0]
        if _is_prime(p) and 2 * p > n and p <= n - 3:
            return RULE_JORDAN
    if nontrivial == [n - 1] and not _is_prime_power(n):
        return RULE_BURNSIDE
    if n in (6, 8) and multiset not in soluble_cycle_types(n):
        return RULE_TABLE
    return None


@dataclass(frozen=True)
class CycleTypeReport:
    prime: int
    degree_multiset: tuple[int, ...]
    squarefree: bool


class SolubilityVerdict(Enum):
    NOT_SOLUBLE = "NOT_SOLUBLE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class SolubilityCertificate:
    polynomial: UniPoly
    verdict: SolubilityVerdict
    witness: tuple[int, tuple[int, ...], str] | None
    rules_checked: tuple[str, ...]
    prime_bound: int


def _sieve_reports(p: UniPoly, prime_bound: int) -> Iterator[CycleTypeReport]:
    for q in primes_up_to(prime_bound):
        if p.leading % q == 0:
            continue
        multiset, squarefree = degree_multiset_mod(p, q)
        yield CycleTypeReport(q, multiset, squarefree)


def frobenius_cycle_types(p: UniPoly, prime_bound: int) -> tuple[list[CycleTypeReport], list[int]]:
    """Degree multisets of p modulo every prime up to the bound.

    Primes dividing the leading coefficient are skipped and returned in the
    second list; primes where the reduction is not squarefree stay in the
    report with the flag down (their types are not Frobenius cycle types).
    """
    if p.is_zero() or p.degree < 1:
        raise InputError("cycle types need a nonconstant polynomial")
    if poly_is_not_squarefree(p):
        raise InputError("polynomial must be squarefree over the rationals")
    reports = list(_sieve_reports(p, prime_bound))
    skipped = [q for q in primes_up_to(prime_bound) if p.leading % q == 0]
    return reports, skipped


def poly_is_not_squarefree(p: UniPoly) -> bool:
    from .unipoly import poly_gcd

    return poly_gcd(p, p.derivative()).degree > 0


def nonsolubility_certificate(p: UniPoly, prime_bound: int = 10000) -> SolubilityCertificate:
    """Refute solubility of the Galois group of an irreducible polynomial, or
    report INCONCLUSIVE.  Sound: never NOT_SOLUBLE for a soluble group."""
    p = p.normalized()
    factors = factor_over_q(p)
    if len(factors) != 1 or factors[0][1] != 1:
        raise InputError("polynomial is reducible; factor first and certify the pieces")
    n = p.degree
    rules = tuple(rules_for_degree(n))
    for report in _sieve_reports(p, prime_bound):
        if not report.squarefree:
            continue
        rule = _rule_hit(report.degree_multiset, n)
        if rule is not None:
            return SolubilityCertificate(
                p,
                SolubilityVerdict.NOT_SOLUBLE,
                (report.prime, report.degree_multiset, rule),
                rules,
                prime_bound,
            )
    return SolubilityCertificate(p, SolubilityVerdict.INCONCLUSIVE, None, rules, prime_bound)
