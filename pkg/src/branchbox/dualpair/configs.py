"""Variable grids, torus weights, and operator families for the three dual pair cases.

Case A: O_n x GL_m on P(M_{n,m}), bilinear form antidiagonal so that the
orthogonal Borel is upper triangular.  Case B: Sp_2n x GL_m on P(M_{2n,m}),
symplectic form in n+n block shape.  Case C: GL_n x (GL_m x GL_l) on
P(M_{n,m}) tensor P(M_{l,n}), the y block carrying the dual action.

split_columns variants put two column blocks (sizes m and l) on one grid:
for Case A this models a tensor product of two G'-factors against one O_n,
for Case C it models P(M_{n,m} + M_{n,l}) with all variables polynomial.
build_product_config realizes O_{n1} x O_{n2} inside O_{n1+n2} by switching
to the block sum of two antidiagonal forms, so each factor acts on its own
row block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import UsageError
from .poly import Monomial, Operator, make_operator


@dataclass(frozen=True)
class MatrixSpaceShape:
    case: str
    n: int
    m: int
    l: int = 0
    split_columns: bool = False

    def __post_init__(self):
        if self.case not in ("A", "B", "C"):
            raise UsageError(f"case must be A, B, or C: {self.case!r}")
        if self.n < 1 or self.m < 1 or self.l < 0:
            raise UsageError("need n >= 1, m >= 1, l >= 0")
        if self.l and self.case == "B":
            raise UsageError("case B has no second group factor")
        if self.split_columns:
            if self.case == "B":
                raise UsageError("split_columns applies to cases A and C")
            if self.l < 1:
                raise UsageError("split_columns needs a second column block (l >= 1)")
        if self.case == "A" and self.l and not self.split_columns:
            raise UsageError("case A uses l only with split_columns")


@dataclass(frozen=True)
class ProductO:
    """hwv_multiplicities mode: O_{n1} x O_{n2} acting on stacked row blocks."""

    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise UsageError("ProductO needs positive block sizes")


FULL = "full"
MOD_IDEAL = "mod_ideal"


@dataclass(frozen=True)
class TorusFactor:
    family: str  # "O" | "Sp" | "GL"
    rank: int  # matrix size: O_n -> n, Sp_2n -> 2n, GL_k -> k
    coords: int  # torus coordinates carried by weight vectors
    signed: bool = False  # weights may go negative (rational GL labels)


@dataclass(frozen=True)
class SpaceConfig:
    descriptor: str
    var_count: int
    var_names: tuple[str, ...]
    factors: tuple[TorusFactor, ...]
    var_weights: tuple[tuple[tuple[int, ...], ...], ...]  # [factor][var] -> weight vector
    deltas: tuple[Operator, ...]
    r2s: tuple[Operator, ...]
    eulers: tuple[Operator, ...]
    k_raisings: tuple[Operator, ...]
    gl_raisings: tuple[Operator, ...]

    def monomial_weight(self, mono: Monomial) -> tuple[tuple[int, ...], ...]:
        out = []
        for weights in self.var_weights:
            coords = len(weights[0]) if weights else 0
            acc = [0] * coords
            for v, e in enumerate(mono):
                if e:
                    w = weights[v]
                    for i in range(coords):
                        acc[i] += e * w[i]
            out.append(tuple(acc))
        return tuple(out)

    @property
    def raisings(self) -> tuple[Operator, ...]:
        return self.k_raisings + self.gl_raisings


def _o_row_weight(s: int, n: int) -> tuple[int, ...]:
    """A_{O_n} weight of row s for the antidiagonal form, 1-indexed."""
    k = n // 2
    w = [0] * k
    if s <= k:
        w[s - 1] = 1
    elif s >= n + 1 - k:
        w[n - s] = -1
    return tuple(w)


def _unit(k: int, i: int) -> tuple[int, ...]:
    w = [0] * k
    w[i - 1] = 1
    return tuple(w)


def _zero(k: int) -> tuple[int, ...]:
    return (0,) * k


def _gl_eulers(tag: str, cols: list[int], idx, rows: list[int], shift: Fraction) -> list[Operator]:
    ops = []
    for ci, i in enumerate(cols, start=1):
        for cj, j in enumerate(cols, start=1):
            terms = [(1, {idx(s, i): 1}, {idx(s, j): 1}) for s in rows]
            if i == j:
                terms.append((shift, {}, {}))
            ops.append(make_operator(f"E{tag}[{ci},{cj}]", "euler", terms))
    return ops


def _gl_raisings(tag: str, cols: list[int], idx, rows: list[int]) -> list[Operator]:
    ops = []
    for ci, i in enumerate(cols, start=1):
        for cj, j in enumerate(cols, start=1):
            if ci < cj:
                terms = [(1, {idx(s, i): 1}, {idx(s, j): 1}) for s in rows]
                ops.append(make_operator(f"R{tag}[{ci},{cj}]", "raising", terms))
    return ops


def _o_raisings(tag: str, n: int, row_offset: int, cols: list[int], idx) -> list[Operator]:
    """Nilradical of so_n for the antidiagonal form: E_ab - E_{n+1-b,n+1-a}, a+b <= n."""
    ops = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if a + b > n:
                continue
            terms = []
            for j in cols:
                terms.append((1, {idx(row_offset + a, j): 1}, {idx(row_offset + b, j): 1}))
                terms.append((-1, {idx(row_offset + n + 1 - b, j): 1},
                              {idx(row_offset + n + 1 - a, j): 1}))
            ops.append(make_operator(f"Z{tag}[{a},{b}]", "raising", terms))
    return ops


def _case_a_like(descriptor: str, n: int, blocks: list[int]) -> SpaceConfig:
    """O_n against one or two GL column blocks on an n x sum(blocks) grid."""
    total_cols = sum(blocks)

    def idx(s, j):
        return (s - 1) * total_cols + (j - 1)

    var_count = n * total_cols
    var_names = tuple(f"x[{s},{j}]" for s in range(1, n + 1) for j in range(1, total_cols + 1))
    rows = list(range(1, n + 1))

    factors = [TorusFactor("O", n, n // 2)]
    o_weights = tuple(_o_row_weight(s, n) for s in rows for _ in range(total_cols))
    var_weights = [o_weights]
    col_blocks = []
    start = 1
    for size in blocks:
        cols = list(range(start, start + size))
        col_blocks.append(cols)
        start += size
        factors.append(TorusFactor("GL", size, size))
        var_weights.append(tuple(
            _unit(size, cols.index(j) + 1) if j in cols else _zero(size)
            for s in rows for j in range(1, total_cols + 1)))

    deltas, r2s, eulers, gl_raise = [], [], [], []
    block_tags = [""] if len(blocks) == 1 else ["a", "b"]
    for tag, cols in zip(block_tags, col_blocks):
        size = len(cols)
        for ci in range(1, size + 1):
            for cj in range(ci, size + 1):
                i, j = cols[ci - 1], cols[cj - 1]
                dterms, rterms = [], []
                for s in rows:
                    dmap: dict[int, int] = {}
                    dmap[idx(s, i)] = dmap.get(idx(s, i), 0) + 1
                    dmap[idx(n + 1 - s, j)] = dmap.get(idx(n + 1 - s, j), 0) + 1
                    dterms.append((1, {}, dmap))
                    xmap: dict[int, int] = {}
                    xmap[idx(s, i)] = xmap.get(idx(s, i), 0) + 1
                    xmap[idx(n + 1 - s, j)] = xmap.get(idx(n + 1 - s, j), 0) + 1
                    rterms.append((1, xmap, {}))
                deltas.append(make_operator(f"D{tag}[{ci},{cj}]", "delta", dterms))
                r2s.append(make_operator(f"r2{tag}[{ci},{cj}]", "r2", rterms))
        eulers.extend(_gl_eulers(tag, cols, idx, rows, Fraction(n, 2)))
        gl_raise.extend(_gl_raisings(tag, cols, idx, rows))

    k_raise = _o_raisings("", n, 0, list(range(1, total_cols + 1)), idx)
    return SpaceConfig(descriptor, var_count, var_names, tuple(factors),
                       tuple(tuple(w) for w in var_weights),
                       tuple(deltas), tuple(r2s), tuple(eulers),
                       tuple(k_raise), tuple(gl_raise))


def _case_a_printed_eulers(config: SpaceConfig, n: int, m: int) -> SpaceConfig:
    """Variant family with the row-reversed Euler operators, for bracket arbitration."""

    def idx(s, j):
        return (s - 1) * m + (j - 1)

    eulers = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            terms = [(1, {idx(s, i): 1}, {idx(n + 1 - s, j): 1}) for s in range(1, n + 1)]
            if i == j:
                terms.append((Fraction(n, 2), {}, {}))
            eulers.append(make_operator(f"Etw[{i},{j}]", "euler", terms))
    return SpaceConfig(config.descriptor + " (printed E)", config.var_count,
                       config.var_names, config.factors, config.var_weights,
                       config.deltas, config.r2s, tuple(eulers),
                       config.k_raisings, config.gl_raisings)


def _case_b(n: int, m: int) -> SpaceConfig:
    def idx(s, j):
        return (s - 1) * m + (j - 1)

    rows = list(range(1, 2 * n + 1))
    var_count = 2 * n * m
    var_names = tuple(f"x[{s},{j}]" for s in rows for j in range(1, m + 1))
    sp_weights = []
    for s in rows:
        w = [0] * n
        if s <= n:
            w[s - 1] = 1
        else:
            w[s - n - 1] = -1
        sp_weights.extend([tuple(w)] * m)
    gl_weights = tuple(_unit(m, j) for s in rows for j in range(1, m + 1))
    factors = (TorusFactor("Sp", 2 * n, n), TorusFactor("GL", m, m))

    deltas, r2s = [], []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            dterms, rterms = [], []
            for s in range(1, n + 1):
                dterms.append((1, {}, {idx(s, i): 1, idx(n + s, j): 1}))
                dterms.append((-1, {}, {idx(n + s, i): 1, idx(s, j): 1}))
                rterms.append((1, {idx(s, i): 1, idx(n + s, j): 1}, {}))
                rterms.append((-1, {idx(n + s, i): 1, idx(s, j): 1}, {}))
            deltas.append(make_operator(f"D[{i},{j}]", "delta", dterms))
            r2s.append(make_operator(f"S2[{i},{j}]", "r2", rterms))

    eulers = _gl_eulers("", list(range(1, m + 1)), idx, rows, Fraction(n))
    gl_raise = _gl_raisings("", list(range(1, m + 1)), idx, rows)

    k_raise = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a < b:
                terms = []
                for j in range(1, m + 1):
                    terms.append((1, {idx(a, j): 1}, {idx(b, j): 1}))
                    terms.append((-1, {idx(n + b, j): 1}, {idx(n + a, j): 1}))
                k_raise.append(make_operator(f"Za[{a},{b}]", "raising", terms))
            terms = []
            for j in range(1, m + 1):
                terms.append((1, {idx(a, j): 1}, {idx(n + b, j): 1}))
                if a < b:
                    terms.append((1, {idx(b, j): 1}, {idx(n + a, j): 1}))
            k_raise.append(make_operator(f"Zb[{a},{b}]", "raising", terms))

    return SpaceConfig(f"B(n={n},m={m})", var_count, var_names, factors,
                       (tuple(sp_weights), gl_weights),
                       tuple(deltas), tuple(r2s), tuple(eulers),
                       tuple(k_raise), tuple(gl_raise))


def _case_c(n: int, m: int, l: int) -> SpaceConfig:
    def xidx(a, i):
        return (a - 1) * m + (i - 1)

    def yidx(c, d):
        return n * m + (c - 1) * n + (d - 1)

    var_count = n * m + l * n
    names = [f"x[{a},{i}]" for a in range(1, n + 1) for i in range(1, m + 1)]
    names += [f"y[{c},{d}]" for c in range(1, l + 1) for d in range(1, n + 1)]

    gn, gm, gl = [], [], []
    for a in range(1, n + 1):
        for i in range(1, m + 1):
            gn.append(_unit(n, a))
            gm.append(_unit(m, i))
            gl.append(_zero(l))
    for c in range(1, l + 1):
        for d in range(1, n + 1):
            gn.append(tuple(-w for w in _unit(n, d)))
            gm.append(_zero(m))
            gl.append(_unit(l, c))
    factors = [TorusFactor("GL", n, n, signed=bool(l))]
    var_weights = [tuple(gn)]
    factors.append(TorusFactor("GL", m, m))
    var_weights.append(tuple(gm))
    if l:
        factors.append(TorusFactor("GL", l, l))
        var_weights.append(tuple(gl))

    deltas, r2s = [], []
    for i in range(1, m + 1):
        for j in range(1, l + 1):
            dterms = [(1, {}, {xidx(s, i): 1, yidx(j, s): 1}) for s in range(1, n + 1)]
            rterms = [(1, {xidx(s, i): 1, yidx(j, s): 1}, {}) for s in range(1, n + 1)]
            deltas.append(make_operator(f"D[{i},{j}]", "delta", dterms))
            r2s.append(make_operator(f"r2[{i},{j}]", "r2", rterms))

    eulers = _gl_eulers("x", list(range(1, m + 1)), xidx, list(range(1, n + 1)), Fraction(n, 2))
    gl_raise = _gl_raisings("x", list(range(1, m + 1)), xidx, list(range(1, n + 1)))
    if l:
        def ytrans(s, c):
            return yidx(c, s)

        # y rows play the column role: E^y_{cd} = sum_s y_{c,s} d/dy_{d,s}
        eulers += _gl_eulers("y", list(range(1, l + 1)), ytrans, list(range(1, n + 1)),
                             Fraction(n, 2))
        gl_raise += _gl_raisings("y", list(range(1, l + 1)), ytrans, list(range(1, n + 1)))

    k_raise = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            terms = [(1, {xidx(a, i): 1}, {xidx(b, i): 1}) for i in range(1, m + 1)]
            terms += [(-1, {yidx(c, b): 1}, {yidx(c, a): 1}) for c in range(1, l + 1)]
            k_raise.append(make_operator(f"Z[{a},{b}]", "raising", terms))

    return SpaceConfig(f"C(n={n},m={m},l={l})", var_count, tuple(names), tuple(factors),
                       tuple(var_weights), tuple(deltas), tuple(r2s), tuple(eulers),
                       tuple(k_raise), tuple(gl_raise))


def _case_c_stacked(n: int, m: int, l: int) -> SpaceConfig:
    """P(M_{n,m} + M_{n,l}) with both blocks polynomial; GL_n acts across all columns."""
    total_cols = m + l

    def idx(s, j):
        return (s - 1) * total_cols + (j - 1)

    rows = list(range(1, n + 1))
    var_count = n * total_cols
    var_names = tuple(f"x[{s},{j}]" for s in rows for j in range(1, total_cols + 1))
    gn = tuple(_unit(n, s) for s in rows for _ in range(total_cols))
    gm = tuple(_unit(m, j) if j <= m else _zero(m) for s in rows for j in range(1, total_cols + 1))
    gl = tuple(_unit(l, j - m) if j > m else _zero(l)
               for s in rows for j in range(1, total_cols + 1))
    factors = (TorusFactor("GL", n, n), TorusFactor("GL", m, m), TorusFactor("GL", l, l))

    k_raise = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            terms = [(1, {idx(a, j): 1}, {idx(b, j): 1}) for j in range(1, total_cols + 1)]
            k_raise.append(make_operator(f"Z[{a},{b}]", "raising", terms))
    gl_raise = _gl_raisings("a", list(range(1, m + 1)), idx, rows)
    gl_raise += _gl_raisings("b", list(range(m + 1, total_cols + 1)), idx, rows)
    eulers = _gl_eulers("a", list(range(1, m + 1)), idx, rows, Fraction(n, 2))
    eulers += _gl_eulers("b", list(range(m + 1, total_cols + 1)), idx, rows, Fraction(n, 2))

    return SpaceConfig(f"C(n={n},m={m}+{l} stacked)", var_count, var_names, factors,
                       (gn, gm, gl), (), (), tuple(eulers),
                       tuple(k_raise), tuple(gl_raise))


def build_config(shape: MatrixSpaceShape, printed_euler_variant: bool = False) -> SpaceConfig:
    if printed_euler_variant and shape.case != "A":
        raise UsageError("the row-reversed Euler variant exists only in case A")
    if shape.case == "A":
        blocks = [shape.m, shape.l] if shape.split_columns else [shape.m]
        tag = f"A(n={shape.n},m={shape.m}" + (f"+{shape.l} split)" if shape.split_columns else ")")
        config = _case_a_like(tag, shape.n, blocks)
        if printed_euler_variant:
            if shape.split_columns:
                raise UsageError("the row-reversed Euler variant applies to one column block")
            config = _case_a_printed_eulers(config, shape.n, shape.m)
        return config
    if shape.case == "B":
        return _case_b(shape.n, shape.m)
    if shape.split_columns:
        return _case_c_stacked(shape.n, shape.m, shape.l)
    return _case_c(shape.n, shape.m, shape.l)


def build_product_config(product: ProductO, m: int) -> SpaceConfig:
    """O_{n1} x O_{n2} x GL_m on M_{n1+n2, m} with the block-sum form.

    The Laplacians and multiplication invariants pair rows through the block
    form: they belong to the big group O_{n1+n2}, not to the factors, so the
    harmonic quotient models restriction from the big group.
    """
    n1, n2, n = product.n1, product.n2, product.n1 + product.n2

    def idx(s, j):
        return (s - 1) * m + (j - 1)

    def mate(s):
        return n1 + 1 - s if s <= n1 else 2 * n1 + n2 + 1 - s

    rows = list(range(1, n + 1))
    var_count = n * m
    var_names = tuple(f"x[{s},{j}]" for s in rows for j in range(1, m + 1))
    w1, w2 = [], []
    for s in rows:
        top = _o_row_weight(s, n1) if s <= n1 else _zero(n1 // 2)
        bot = _o_row_weight(s - n1, n2) if s > n1 else _zero(n2 // 2)
        w1.extend([top] * m)
        w2.extend([bot] * m)
    gm = tuple(_unit(m, j) for s in rows for j in range(1, m + 1))
    factors = (TorusFactor("O", n1, n1 // 2), TorusFactor("O", n2, n2 // 2),
               TorusFactor("GL", m, m))

    deltas, r2s = [], []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            dterms, rterms = [], []
            for s in rows:
                dmap: dict[int, int] = {}
                dmap[idx(s, i)] = dmap.get(idx(s, i), 0) + 1
                dmap[idx(mate(s), j)] = dmap.get(idx(mate(s), j), 0) + 1
                dterms.append((1, {}, dmap))
                xmap: dict[int, int] = {}
                xmap[idx(s, i)] = xmap.get(idx(s, i), 0) + 1
                xmap[idx(mate(s), j)] = xmap.get(idx(mate(s), j), 0) + 1
                rterms.append((1, xmap, {}))
            deltas.append(make_operator(f"D[{i},{j}]", "delta", dterms))
            r2s.append(make_operator(f"r2[{i},{j}]", "r2", rterms))

    eulers = _gl_eulers("", list(range(1, m + 1)), idx, rows, Fraction(n, 2))
    gl_raise = _gl_raisings("", list(range(1, m + 1)), idx, rows)
    k_raise = _o_raisings("t", n1, 0, list(range(1, m + 1)), idx)
    k_raise += _o_raisings("b", n2, n1, list(range(1, m + 1)), idx)

    return SpaceConfig(f"O({n1})xO({n2}) on M({n},{m})", var_count, var_names, factors,
                       (tuple(w1), tuple(w2), gm), tuple(deltas), tuple(r2s),
                       tuple(eulers), tuple(k_raise), tuple(gl_raise))
