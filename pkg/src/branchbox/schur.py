"""Schur polynomial arithmetic over exact integers, truncated to m variables.

Symmetric polynomials are stored sparsely on dominant exponent vectors: the
table maps each weakly decreasing key to the common coefficient of its whole
S_m orbit of monomials.  schur_expand realizes a Schur polynomial through
semistandard tableau counting (Kostka numbers), decompose peels a symmetric
polynomial back into Schur coefficients, and multiply_schur works directly
on monomial orbits so the product is independent of tableau combinatorics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InternalInvariantError, UsageError
from .partitions import (
    Partition,
    as_partition,
    even_column_partitions,
    even_row_partitions,
    grevlex_key,
    partitions_of,
)


@dataclass(frozen=True)
class DominantMonomialPoly:
    """Homogeneous symmetric polynomial keyed on dominant exponent vectors."""

    var_count: int
    degree: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def coefficient(self, key) -> int:
        return self.terms.get(as_partition(key), 0)


@dataclass(frozen=True)
class SchurVector:
    """Integer linear combination of Schur polynomials in a fixed variable count."""

    var_count: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def coefficient(self, lam) -> int:
        return self.coeffs.get(as_partition(lam), 0)

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: grevlex_key(kv[0]))


_kostka_memo: dict[tuple[Partition, Partition], int] = {}
_expand_memo: dict[tuple[Partition, int], DominantMonomialPoly] = {}
_orbit_memo: dict[tuple[Partition, int], list[tuple[int, ...]]] = {}
_product_memo: dict[tuple[Partition, Partition, int], dict[Partition, int]] = {}


def kostka(lam: Partition, content: Partition) -> int:
    """Count semistandard tableaux of shape lam and content `content`."""
    lam, content = as_partition(lam), as_partition(content)
    if sum(lam) != sum(content):
        return 0
    key = (lam, content)
    hit = _kostka_memo.get(key)
    if hit is not None:
        return hit
    if not content:
        val = 1 if not lam else 0
    else:
        h = content[-1]
        val = sum(kostka(mu, content[:-1]) for mu in _strip_predecessors(lam, h))
    _kostka_memo[key] = val
    return val


def _strip_predecessors(lam: Partition, h: int) -> list[Partition]:
    """Shapes mu such that lam/mu is a horizontal strip of size h."""
    rows = len(lam)
    out: list[Partition] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == rows:
            if remaining == 0:
                out.append(as_partition(prefix))
            return
        lo = lam[i + 1] if i + 1 < rows else 0
        for mu_i in range(lam[i], lo - 1, -1):
            removed = lam[i] - mu_i
            if removed > remaining:
                break
            rec(i + 1, remaining - removed, prefix + (mu_i,))

    rec(0, h, ())
    return out


def schur_expand(lam, m: int) -> DominantMonomialPoly:
    """The Schur polynomial s_lam(x_1..x_m) on dominant keys."""
    lam = as_partition(lam)
    if m < 0:
        raise UsageError("variable count must be nonnegative")
    key = (lam, m)
    hit = _expand_memo.get(key)
    if hit is not None:
        return hit
    d = sum(lam)
    terms: dict[Partition, int] = {}
    if len(lam) <= m:
        for kappa in partitions_of(d, max_length=m):
            k = kostka(lam, kappa)
            if k:
                terms[kappa] = k
    poly = DominantMonomialPoly(m, d, terms)
    _expand_memo[key] = poly
    return poly


def orbit_vectors(key: Partition, m: int) -> list[tuple[int, ...]]:
    """All distinct permutations of `key` padded with zeros to length m."""
    key = as_partition(key)
    if len(key) > m:
        raise UsageError(f"key {key} does not fit in {m} variables")
    memo_key = (key, m)
    hit = _orbit_memo.get(memo_key)
    if hit is not None:
        return hit
    remaining: dict[int, int] = {}
    for v in key:
        remaining[v] = remaining.get(v, 0) + 1
    if len(key) < m:
        remaining[0] = remaining.get(0, 0) + (m - len(key))
    values = sorted(remaining)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int]):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for v in values:
            if remaining[v]:
                remaining[v] -= 1
                prefix.append(v)
                rec(prefix)
                prefix.pop()
                remaining[v] += 1

    rec([])
    _orbit_memo[memo_key] = out
    return out


def orbit_size(key: Partition, m: int) -> int:
    """Size of the S_m orbit of `key` padded to length m."""
    key = as_partition(key)
    if len(key) > m:
        return 0
    mult: dict[int, int] = {0: m - len(key)}
    for v in key:
        mult[v] = mult.get(v, 0) + 1
    size = math.factorial(m)
    for c in mult.values():
        size //= math.factorial(c)
    return size


def monomial_product(a: Partition, b: Partition, m: int) -> dict[Partition, int]:
    """Expansion of m_a * m_b in the monomial basis for m variables."""
    a, b = as_partition(a), as_partition(b)
    if a > b:
        a, b = b, a
    key = (a, b, m)
    hit = _product_memo.get(key)
    if hit is not None:
        return hit
    small, big = (a, b) if orbit_size(a, m) <= orbit_size(b, m) else (b, a)
    orb = orbit_vectors(small, m)
    big_padded = tuple(big) + (0,) * (m - len(big))
    candidates = {
        as_partition(sorted((al[i] + big_padded[i] for i in range(m)), reverse=True))
        for al in orb
    }
    out: dict[Partition, int] = {}
    nb = len(big)
    for gamma in candidates:
        gv = tuple(gamma) + (0,) * (m - len(gamma))
        n = 0
        for al in orb:
            diff = [gv[i] - al[i] for i in range(m)]
            if min(diff) < 0:
                continue
            diff.sort(reverse=True)
            # sums already agree, so matching the leading block forces the rest to 0
            if tuple(diff[:nb]) == big:
                n += 1
        if n:
            out[gamma] = n
    _product_memo[key] = out
    return out


def dmp_multiply(p: DominantMonomialPoly, q: DominantMonomialPoly) -> DominantMonomialPoly:
    if p.var_count != q.var_count:
        raise UsageError("variable counts differ")
    m = p.var_count
    terms: dict[Partition, int] = {}
    for ka, ca in p.terms.items():
        for kb, cb in q.terms.items():
            for gamma, n in monomial_product(ka, kb, m).items():
                c = terms.get(gamma, 0) + ca * cb * n
                if c:
                    terms[gamma] = c
                else:
                    terms.pop(gamma, None)
    return DominantMonomialPoly(m, p.degree + q.degree, terms)


def decompose(p: DominantMonomialPoly) -> SchurVector:
    """Peel a symmetric polynomial into Schur coefficients, leading key first."""
    m = p.var_count
    work = dict(p.terms)
    out: dict[Partition, int] = {}
    guard = 0
    limit = 4 * (len(work) + 1) + 100
    while work:
        guard += 1
        if guard > limit:
            raise InternalInvariantError("peel did not terminate")
        kappa = max(work)  # lex-greatest key of the top grade dominates
        c = work[kappa]
        out[kappa] = c
        for k2, c2 in schur_expand(kappa, m).terms.items():
            nxt = work.get(k2, 0) - c * c2
            if nxt:
                work[k2] = nxt
            else:
                work.pop(k2, None)
        if kappa in work:
            raise InternalInvariantError("peel failed to remove its leading key")
    return SchurVector(m, out)


def schur_vector(m: int, coeffs: dict) -> SchurVector:
    clean = {}
    for lam, c in coeffs.items():
        lam = as_partition(lam)
        if len(lam) > m:
            raise UsageError(f"{lam} has more than {m} rows")
        if c:
            clean[lam] = int(c)
    return SchurVector(m, clean)


def multiply_schur(a: SchurVector, b: SchurVector) -> SchurVector:
    """Product of two Schur expansions, via monomial-orbit arithmetic."""
    if a.var_count != b.var_count:
        raise UsageError("variable counts differ")
    m = a.var_count
    by_degree: dict[int, dict[Partition, int]] = {}
    for la, ca in a.coeffs.items():
        pa = schur_expand(la, m)
        for lb, cb in b.coeffs.items():
            pb = schur_expand(lb, m)
            prod = dmp_multiply(pa, pb)
            bucket = by_degree.setdefault(prod.degree, {})
            for key, c in prod.terms.items():
                nxt = bucket.get(key, 0) + ca * cb * c
                if nxt:
                    bucket[key] = nxt
                else:
                    bucket.pop(key, None)
    out: dict[Partition, int] = {}
    for d, terms in by_degree.items():
        part = decompose(DominantMonomialPoly(m, d, terms))
        for lam, c in part.coeffs.items():
            out[lam] = out.get(lam, 0) + c
    return SchurVector(m, {k: v for k, v in out.items() if v})


def eval_ones(p: DominantMonomialPoly) -> int:
    """Evaluate at x_1 = ... = x_m = 1 (the polynomial's dimension count)."""
    return sum(c * orbit_size(key, p.var_count) for key, c in p.terms.items())


SERIES_KINDS = ("sym2", "wedge2", "cauchy")


def series(kind: str, m: int, max_degree: int, l: int | None = None) -> list:
    """Graded pieces of the classical generating series of Schur polynomials.

    sym2 lists the even-row partitions in each degree (the symmetric square
    algebra), wedge2 the even-column ones (the alternating square algebra),
    cauchy the diagonal pairs (delta, delta) of the two-sided algebra.
    """
    kind = kind.lower()
    if kind not in SERIES_KINDS:
        raise UsageError(f"unknown series kind {kind!r}")
    if kind == "cauchy":
        if l is None:
            raise UsageError("cauchy series needs the second variable count l")
    elif l is not None:
        raise UsageError("l is only meaningful for the cauchy series")
    out = []
    for d in range(max_degree + 1):
        if kind == "sym2":
            out.append(schur_vector(m, {p: 1 for p in even_row_partitions(d, m)}))
        elif kind == "wedge2":
            out.append(schur_vector(m, {p: 1 for p in even_column_partitions(d, m)}))
        else:
            bound = min(m, l)
            out.append({(p, p): 1 for p in partitions_of(d, max_length=bound)})
    return out
