"""Sparse exact polynomials and polynomial-coefficient differential operators.

A monomial is a dense exponent tuple over a fixed variable list; a polynomial
maps monomials to Fraction coefficients.  An operator is a sum of terms
c * x^a * d^b applied by falling factorials, so it stays exact on any
polynomial and needs no degree truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]


class Term(NamedTuple):
    coeff: Fraction
    xs: tuple[tuple[int, int], ...]  # (variable index, exponent), multiplication part
    ds: tuple[tuple[int, int], ...]  # (variable index, order), differentiation part


@dataclass(frozen=True)
class Operator:
    name: str
    kind: str  # "delta" | "r2" | "euler" | "raising"
    shift: int  # homogeneous degree shift
    terms: tuple[Term, ...]


def make_operator(name: str, kind: str,
                  raw_terms: Iterable[tuple[Fraction | int, Mapping[int, int], Mapping[int, int]]],
                  ) -> Operator:
    """Build an operator from (coeff, {var: exp}, {var: order}) triples, merging duplicates."""
    merged: dict[tuple, Fraction] = {}
    for coeff, xs, ds in raw_terms:
        key = (tuple(sorted((v, e) for v, e in xs.items() if e)),
               tuple(sorted((v, e) for v, e in ds.items() if e)))
        merged[key] = merged.get(key, Fraction(0)) + Fraction(coeff)
    terms = tuple(Term(c, xs, ds) for (xs, ds), c in sorted(merged.items()) if c)
    shifts = {sum(e for _, e in t.xs) - sum(e for _, e in t.ds) for t in terms}
    if len(shifts) > 1:
        raise ValueError(f"operator {name} is not degree-homogeneous: shifts {shifts}")
    return Operator(name, kind, shifts.pop() if shifts else 0, terms)


def apply_term(term: Term, mono: Monomial) -> tuple[Monomial, int] | None:
    """term applied to a monomial: (result monomial, integer falling factorial), or None."""
    ff = 1
    for v, order in term.ds:
        e = mono[v]
        if e < order:
            return None
        for k in range(order):
            ff *= e - k
    out = list(mono)
    for v, order in term.ds:
        out[v] -= order
    for v, e in term.xs:
        out[v] += e
    return tuple(out), ff


def apply_operator(op: Operator, poly: Poly) -> Poly:
    out: Poly = {}
    for mono, c in poly.items():
        for term in op.terms:
            hit = apply_term(term, mono)
            if hit is None:
                continue
            target, ff = hit
            if not ff:
                continue
            val = out.get(target, Fraction(0)) + c * term.coeff * ff
            if val:
                out[target] = val
            else:
                out.pop(target, None)
    return out


def apply_to_monomial(op: Operator, mono: Monomial) -> Poly:
    return apply_operator(op, {mono: Fraction(1)})


def commutator_apply(a: Operator, b: Operator, poly: Poly) -> Poly:
    first = apply_operator(a, apply_operator(b, poly))
    second = apply_operator(b, apply_operator(a, poly))
    for mono, c in second.items():
        val = first.get(mono, Fraction(0)) - c
        if val:
            first[mono] = val
        else:
            first.pop(mono, None)
    return first


def monomials_of_degree(var_count: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given total degree."""
    if var_count == 0:
        if degree == 0:
            yield ()
        return

    def rec(position: int, remaining: int, prefix: list[int]) -> Iterator[Monomial]:
        if position == var_count - 1:
            yield tuple(prefix + [remaining])
            return
        for e in range(remaining + 1):
            yield from rec(position + 1, remaining - e, prefix + [e])

    yield from rec(0, degree, [])


def grevlex_mono_key(mono: Monomial) -> tuple:
    """Sort key putting same-degree monomials in graded reverse lexicographic order."""
    return (sum(mono), tuple(reversed(mono)))


def poly_degree(poly: Poly) -> int:
    return max((sum(m) for m in poly), default=0)
