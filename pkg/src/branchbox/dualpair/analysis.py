"""Brute-force multiplicity tables, harmonic dimension counts, and bracket checks.

Everything reduces to exact nullspace or rank computations on weight-space
blocks: all operators in play are weight-homogeneous for the product torus,
so each block can be handled on its own.  Raising-operator kernels are only
computed at dominant weights; a kernel vector generates a highest weight
module, so nothing is lost, and a nonzero kernel at a weight that is not a
partition on an orthogonal factor is reported as an internal error rather
than silently dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import BudgetError, InternalInvariantError, UsageError
from ..partitions import IrrepLabel, as_partition, weight_to_signature
from ..reports import MultiplicityEntry
from .configs import (FULL, MOD_IDEAL, MatrixSpaceShape, ProductO, SpaceConfig,
                      TorusFactor, build_config, build_product_config)
from .linalg import rank, nullspace, solve_columns
from .poly import (Monomial, Operator, Poly, apply_to_monomial, commutator_apply,
                   grevlex_mono_key, monomials_of_degree)

DEFAULT_BUDGET = 20000


@dataclass
class BucketTable:
    buckets: dict[tuple, list[Monomial]]
    degree: dict[tuple, int]
    by_degree: dict[int, list[tuple]]


def build_buckets(config: SpaceConfig, max_degree: int,
                  budget: int = DEFAULT_BUDGET) -> BucketTable:
    buckets: dict[tuple, list[Monomial]] = {}
    degree: dict[tuple, int] = {}
    for d in range(max_degree + 1):
        for mono in monomials_of_degree(config.var_count, d):
            key = config.monomial_weight(mono)
            if key not in buckets:
                buckets[key] = []
                degree[key] = d
            buckets[key].append(mono)
    by_degree: dict[int, list[tuple]] = {d: [] for d in range(max_degree + 1)}
    for key, monos in buckets.items():
        if len(monos) > budget:
            raise BudgetError(
                f"weight space of dimension {len(monos)} exceeds the budget {budget}")
        monos.sort(key=grevlex_mono_key)
        by_degree[degree[key]].append(key)
    for keys in by_degree.values():
        keys.sort()
    return BucketTable(buckets, degree, by_degree)


def _annihilator_rows(ops, basis: list[Monomial]) -> list[list[Fraction]]:
    """Equations cutting out the joint kernel of ops on span(basis)."""
    rows: dict[tuple, list] = {}
    n = len(basis)
    for oi, op in enumerate(ops):
        for col, mono in enumerate(basis):
            for tm, tc in apply_to_monomial(op, mono).items():
                row = rows.setdefault((oi, tm), [Fraction(0)] * n)
                row[col] += tc
    return list(rows.values())


def _annihilator_rows_on_domain(ops, basis: list[Monomial],
                                domain: list[tuple[Fraction, ...]]) -> list[list[Fraction]]:
    rows: dict[tuple, list] = {}
    n = len(domain)
    for oi, op in enumerate(ops):
        applied = [apply_to_monomial(op, mono) for mono in basis]
        for col, vec in enumerate(domain):
            for j, c in enumerate(vec):
                if not c:
                    continue
                for tm, tc in applied[j].items():
                    row = rows.setdefault((oi, tm), [Fraction(0)] * n)
                    row[col] += c * tc
    return list(rows.values())


def _kernel_dim(ops, basis: list[Monomial]) -> int:
    if not ops:
        return len(basis)
    return len(basis) - rank(_annihilator_rows(ops, basis))


def _dominant(factor: TorusFactor, w: tuple[int, ...]) -> bool:
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        return False
    if not w:
        return True
    if factor.family == "O":
        if factor.rank % 2 == 0 and len(w) >= 2:
            return w[-2] + w[-1] >= 0  # type D allows one sign flip in the last slot
        return w[-1] >= 0
    if factor.family == "Sp":
        return w[-1] >= 0
    return factor.signed or w[-1] >= 0


def _labels_for(config: SpaceConfig, key: tuple) -> tuple[IrrepLabel, ...] | None:
    labels = []
    for factor, w in zip(config.factors, key):
        if factor.family in ("O", "Sp"):
            if any(a < 0 for a in w):
                return None
            labels.append(IrrepLabel(factor.family, factor.rank, as_partition(w)))
        elif factor.signed:
            labels.append(IrrepLabel("GL", factor.rank, weight_to_signature(w)))
        else:
            labels.append(IrrepLabel("GL", factor.rank, as_partition(w)))
    return tuple(labels)


def hwv_multiplicities(shape: MatrixSpaceShape, max_degree: int,
                       mode: str | ProductO = FULL,
                       budget: int = DEFAULT_BUDGET) -> list[MultiplicityEntry]:
    """Joint highest-weight-vector dimensions per weight, as label tuples.

    FULL counts on all polynomials, MOD_IDEAL inside the joint kernel of the
    Delta family (the harmonic model of the quotient by the invariant ideal),
    ProductO(n1, n2) inside the harmonics of the block-sum form with two
    orthogonal factors acting on row blocks.
    """
    if isinstance(mode, ProductO):
        if shape.case != "A" or shape.split_columns or shape.l:
            raise UsageError("ProductO mode needs a plain case A shape")
        if mode.n1 + mode.n2 != shape.n:
            raise UsageError(f"ProductO blocks must fill the rows: {mode.n1}+{mode.n2} != {shape.n}")
        config = build_product_config(mode, shape.m)
        use_harmonics = True
    elif mode == FULL:
        config = build_config(shape)
        use_harmonics = False
    elif mode == MOD_IDEAL:
        config = build_config(shape)
        use_harmonics = True
    else:
        raise UsageError(f"unknown mode {mode!r}")

    table = build_buckets(config, max_degree, budget)
    raisers = config.raisings
    entries = []
    for d in range(max_degree + 1):
        for key in table.by_degree[d]:
            if not all(_dominant(f, w) for f, w in zip(config.factors, key)):
                continue
            basis = table.buckets[key]
            if use_harmonics and config.deltas:
                domain = nullspace(_annihilator_rows(config.deltas, basis), len(basis))
                if not domain:
                    continue
                rows = _annihilator_rows_on_domain(raisers, basis, domain)
                mult = len(domain) - rank(rows)
            else:
                mult = _kernel_dim(raisers, basis)
            if not mult:
                continue
            labels = _labels_for(config, key)
            if labels is None:
                raise InternalInvariantError(
                    f"nonzero raising kernel at non-partition weight {key}")
            entries.append(MultiplicityEntry(labels, mult, True))
    return entries


def hwv_table(entries) -> dict[tuple, int]:
    """Index a multiplicity report by its label tuple."""
    return {e.labels: e.mult for e in entries}


def _op_weight_shift(config: SpaceConfig, op: Operator) -> tuple[tuple[int, ...], ...]:
    term = op.terms[0]
    out = []
    for weights in config.var_weights:
        coords = len(weights[0]) if weights else 0
        acc = [0] * coords
        for v, e in term.xs:
            for i in range(coords):
                acc[i] += e * weights[v][i]
        for v, e in term.ds:
            for i in range(coords):
                acc[i] -= e * weights[v][i]
        out.append(tuple(acc))
    return tuple(out)


def _add_keys(a: tuple, b: tuple) -> tuple:
    return tuple(tuple(x + y for x, y in zip(u, v)) for u, v in zip(a, b))


def _rank_of_polys(vecs: list[Poly]) -> int:
    if not vecs:
        return 0
    cols = sorted({m for v in vecs for m in v})
    pos = {m: i for i, m in enumerate(cols)}
    rows = []
    for v in vecs:
        row = [Fraction(0)] * len(cols)
        for m, c in v.items():
            row[pos[m]] = c
        rows.append(row)
    return rank(rows)


@dataclass(frozen=True)
class HarmonicReport:
    descriptor: str
    max_degree: int
    full: tuple[int, ...]
    harmonic: tuple[int, ...]
    ideal: tuple[int, ...]
    identity_ok: bool
    separation_ok: bool | None
    generator_count: int | None


def harmonic_report(shape: MatrixSpaceShape, max_degree: int,
                    budget: int = DEFAULT_BUDGET) -> HarmonicReport:
    """Degreewise dimensions of harmonics and of the invariant ideal.

    The identity harmonic + ideal = full is reported per degree; in case A
    inside the separation range n >= 2m the free-module certificate over the
    m(m+1)/2 quadratic invariants is checked as well.
    """
    config = build_config(shape)
    table = build_buckets(config, max_degree, budget)
    full = [0] * (max_degree + 1)
    harmonic = [0] * (max_degree + 1)
    ideal = [0] * (max_degree + 1)
    for key, basis in table.buckets.items():
        d = table.degree[key]
        full[d] += len(basis)
        harmonic[d] += _kernel_dim(config.deltas, basis)

    shifts = {op.name: _op_weight_shift(config, op) for op in config.r2s}
    groups: dict[tuple, list[Poly]] = {}
    for key, basis in table.buckets.items():
        if table.degree[key] + 2 > max_degree:
            continue
        for op in config.r2s:
            tkey = _add_keys(key, shifts[op.name])
            vecs = groups.setdefault(tkey, [])
            for mono in basis:
                img = apply_to_monomial(op, mono)
                if img:
                    vecs.append(img)
    for tkey, vecs in groups.items():
        ideal[table.degree[tkey]] += _rank_of_polys(vecs)

    identity_ok = all(full[d] == harmonic[d] + ideal[d] for d in range(max_degree + 1))

    separation_ok = None
    gens = None
    if shape.case == "A" and not shape.split_columns and shape.n >= 2 * shape.m:
        gens = shape.m * (shape.m + 1) // 2
        separation_ok = all(
            full[d] == sum(harmonic[d - 2 * b] * comb(b + gens - 1, gens - 1)
                           for b in range(d // 2 + 1))
            for d in range(max_degree + 1))
    return HarmonicReport(config.descriptor, max_degree, tuple(full), tuple(harmonic),
                          tuple(ideal), identity_ok, separation_ok, gens)


@dataclass(frozen=True)
class BracketEntry:
    left: str
    right: str
    rule: str
    ok: bool
    expression: tuple[tuple[str, Fraction], ...]


@dataclass(frozen=True)
class BracketReport:
    descriptor: str
    test_degree: int
    euler_variant: str
    ok: bool
    entries: tuple[BracketEntry, ...]

    @property
    def failures(self) -> tuple[BracketEntry, ...]:
        return tuple(e for e in self.entries if not e.ok)


def _bracket_rule(kind_a: str, kind_b: str) -> tuple[str, str | None]:
    ks = frozenset((kind_a, kind_b))
    if "raising" in ks:
        return ("raising,raising", "raising") if ks == {"raising"} else ("commutant", None)
    if ks == {"delta"} or ks == {"r2"}:
        return ("abelian", None)
    if ks == {"delta", "r2"}:
        return ("delta,r2", "euler_id")
    if ks == {"delta", "euler"}:
        return ("euler,delta", "delta")
    if ks == {"r2", "euler"}:
        return ("euler,r2", "r2")
    return ("euler,euler", "euler_id")


def verify_brackets(shape: MatrixSpaceShape, test_degree: int = 2,
                    printed_euler_variant: bool = False,
                    budget: int = DEFAULT_BUDGET) -> BracketReport:
    """Certify the oscillator-algebra bracket relations by direct application.

    Every commutator of built operators must land exactly in the expected
    span: Euler plus identity for [Delta, r2], the Delta respectively r2
    family for Euler brackets, zero for the group-side raisings against the
    whole family (the two actions centralize each other), and the raising
    span for raising pairs.  Abelianness of the Delta and r2 families is part
    of the same sweep.  The row-reversed case A Euler variant can be swapped
    in to let the closure test arbitrate between the two conventions.
    """
    if test_degree < 2:
        raise UsageError("bracket verification needs test_degree >= 2")
    config = build_config(shape, printed_euler_variant=printed_euler_variant)
    sources = [mono for d in range(test_degree + 1)
               for mono in monomials_of_degree(config.var_count, d)]
    if len(sources) > budget:
        raise BudgetError(f"{len(sources)} test monomials exceed the budget {budget}")

    family = list(config.deltas + config.r2s + config.eulers + config.k_raisings)
    actions: dict[str, dict[Monomial, Poly]] = {
        op.name: {src: apply_to_monomial(op, src) for src in sources} for op in family}
    actions["id"] = {src: {src: Fraction(1)} for src in sources}
    spans = {
        "euler_id": [op.name for op in config.eulers] + ["id"],
        "delta": [op.name for op in config.deltas],
        "r2": [op.name for op in config.r2s],
        "raising": [op.name for op in config.k_raisings],
    }

    entries = []
    for a, b in itertools.combinations(family, 2):
        rule, span = _bracket_rule(a.kind, b.kind)
        comm = {src: commutator_apply(a, b, {src: Fraction(1)}) for src in sources}
        if span is None:
            ok = all(not p for p in comm.values())
            entries.append(BracketEntry(a.name, b.name, rule, ok, ()))
            continue
        names = spans[span]
        eq_keys = sorted({(src, tm) for src, p in comm.items() for tm in p} |
                         {(src, tm) for name in names
                          for src, p in actions[name].items() for tm in p})
        columns = [[actions[name][src].get(tm, Fraction(0)) for src, tm in eq_keys]
                   for name in names]
        rhs = [comm[src].get(tm, Fraction(0)) for src, tm in eq_keys]
        sol = solve_columns(columns, rhs)
        if sol is None:
            entries.append(BracketEntry(a.name, b.name, rule, False, ()))
        else:
            expr = tuple((name, c) for name, c in zip(names, sol) if c)
            entries.append(BracketEntry(a.name, b.name, rule, True, expr))

    variant = "printed" if printed_euler_variant else "untwisted"
    report = BracketReport(config.descriptor, test_degree, variant,
                           all(e.ok for e in entries), tuple(entries))
    return report


@dataclass(frozen=True)
class MinorCertificate:
    var_names: tuple[str, ...]
    poly: Poly
    columns: tuple[int, ...]
    deltas_annihilate: bool
    raisings_annihilate: bool
    weight: tuple[tuple[int, ...], ...]
    weight_ok: bool

    @property
    def ok(self) -> bool:
        return self.deltas_annihilate and self.raisings_annihilate and self.weight_ok


def minor_hwv(n: int, m: int, columns) -> MinorCertificate:
    """The determinant on rows 1..j and the given columns, with its certificate.

    These minors generate the orthogonal highest-weight covariants in the
    range 2m <= n; the certificate checks harmonicity, invariance under the
    group-side raisings, and the expected one-column orthogonal weight.
    """
    cols = tuple(columns)
    j = len(cols)
    if not (1 <= j <= m):
        raise UsageError("need between 1 and m columns")
    if any(not 1 <= c <= m for c in cols):
        raise UsageError(f"column indices must lie in 1..{m}")
    if any(cols[i] >= cols[i + 1] for i in range(j - 1)):
        raise UsageError("column indices must be strictly increasing")
    if 2 * m > n:
        raise UsageError(f"minor certificates need 2m <= n, got n={n}, m={m}")
    shape = MatrixSpaceShape("A", n, m)
    config = build_config(shape)

    def idx(s, c):
        return (s - 1) * m + (c - 1)

    poly: Poly = {}
    for perm in itertools.permutations(range(j)):
        sign = 1
        for i in range(j):
            for k in range(i + 1, j):
                if perm[i] > perm[k]:
                    sign = -sign
        mono = [0] * config.var_count
        for row in range(1, j + 1):
            mono[idx(row, cols[perm[row - 1]])] += 1
        key = tuple(mono)
        poly[key] = poly.get(key, Fraction(0)) + sign
    poly = {k: v for k, v in poly.items() if v}

    def annihilates(ops):
        for op in ops:
            acc: Poly = {}
            for mono, c in poly.items():
                for tm, tc in apply_to_monomial(op, mono).items():
                    val = acc.get(tm, Fraction(0)) + c * tc
                    if val:
                        acc[tm] = val
                    else:
                        acc.pop(tm, None)
            if acc:
                return False
        return True

    weights = {config.monomial_weight(mono) for mono in poly}
    if len(weights) != 1:
        raise InternalInvariantError("minor is not weight homogeneous")
    weight = weights.pop()
    expected_o = tuple([1] * j + [0] * (n // 2 - j))
    expected_gl = tuple(sum(1 for c in cols if c == i) for i in range(1, m + 1))
    weight_ok = weight == (expected_o, expected_gl)
    return MinorCertificate(config.var_names, poly, cols,
                            annihilates(config.deltas), annihilates(config.k_raisings),
                            weight, weight_ok)


@dataclass(frozen=True)
class GradedOperator:
    name: str
    kind: str
    source_degree: int
    target_degree: int
    matrix: tuple[tuple[Fraction, ...], ...]  # rows over the target basis, grevlex order


def build_operators(shape: MatrixSpaceShape, max_degree: int,
                    printed_euler_variant: bool = False,
                    budget: int = DEFAULT_BUDGET) -> dict[str, tuple[GradedOperator, ...]]:
    """All operator families as exact matrices between graded monomial bases."""
    config = build_config(shape, printed_euler_variant=printed_euler_variant)
    bases = {}
    index = {}
    for d in range(max_degree + 1):
        basis = sorted(monomials_of_degree(config.var_count, d), key=grevlex_mono_key)
        if len(basis) > budget:
            raise BudgetError(f"degree {d} basis of size {len(basis)} exceeds the budget {budget}")
        bases[d] = basis
        index[d] = {mono: i for i, mono in enumerate(basis)}
    out: dict[str, tuple[GradedOperator, ...]] = {}
    family = config.deltas + config.r2s + config.eulers + config.k_raisings + config.gl_raisings
    for op in family:
        graded = []
        for d in range(max_degree + 1):
            td = d + op.shift
            if not 0 <= td <= max_degree:
                continue
            rows = [[Fraction(0)] * len(bases[d]) for _ in bases[td]]
            for col, mono in enumerate(bases[d]):
                for tm, tc in apply_to_monomial(op, mono).items():
                    rows[index[td][tm]][col] = tc
            graded.append(GradedOperator(op.name, op.kind, d, td,
                                         tuple(tuple(r) for r in rows)))
        out[op.name] = tuple(graded)
    return out


def harmonic_isotypic_dims(shape: MatrixSpaceShape, max_degree: int,
                           budget: int = DEFAULT_BUDGET) -> dict[tuple[int, ...], int]:
    """Dimension of the harmonic isotypic component per GL-side highest weight.

    Groups monomials by the GL-side weight alone (all group-side weights
    mixed), then cuts by the Delta family and the GL-side raisings.  In the
    stable range the kernel at weight lambda is a single copy of the
    orthogonal or symplectic irreducible labelled lambda, so its dimension
    cross-checks the Weyl dimension formulas.
    """
    if shape.split_columns or shape.case == "C":
        raise UsageError("isotypic dimensions apply to the two-factor cases A and B")
    config = build_config(shape)
    groups: dict[tuple[int, ...], list[Monomial]] = {}
    for d in range(max_degree + 1):
        for mono in monomials_of_degree(config.var_count, d):
            groups.setdefault(config.monomial_weight(mono)[1], []).append(mono)
    for basis in groups.values():
        if len(basis) > budget:
            raise BudgetError(
                f"isotypic block of dimension {len(basis)} exceeds the budget {budget}")
    out: dict[tuple[int, ...], int] = {}
    cutters = config.deltas + config.gl_raisings
    for gl_weight in sorted(groups):
        w = gl_weight
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            continue
        dim = _kernel_dim(cutters, sorted(groups[w], key=grevlex_mono_key))
        if dim:
            out[as_partition(w)] = dim
    return out
