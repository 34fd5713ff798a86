"""Lie algebra pairs (module over a Lie algebra with an equivariant map), the
derived Leibniz bracket, and the free graded extension up to a degree bound.

Structure data is exact (Fractions).  Conventions, used throughout:
  c[i][j]    coordinates of [e_i, e_j] in the basis of g
  rho[a]     matrix of the right action of e_a on M, row i = image of m_i,
             so composition reads (m ^ a) ^ b = m . (rho[a] rho[b])
  f[i]       coordinates of f(m_i) in the basis of g

The free graded extension puts g in degree 0 and M in degree 1, builds all
binary bracket words on M leaves per degree, and quotients by the span of
antisymmetry and Jacobi instances of the chosen sign convention, together
with brackets of lower-degree relations against words (so the span is the
full degree slice of the relation ideal).  g acts by leaf-wise substitution.
The differential extends d(m) = f(m), d(g) = 0 as a derivation: with the
graded_koszul convention it carries the sign d[u,v] = [du,v] +
(-1)^{deg u}[u,dv] and d.d = 0 always holds; with the plain convention the
rule is unsigned, matching ordinary Lie algebra derivations, and d.d = 0 is
a property of the input (it can fail when iterated actions through the
structure map survive; verification reports this honestly).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import FieldSpec, QuotientSpace, Subspace
from .racks import ValidationReport

_Q = FieldSpec.rationals()

KOSZUL = "graded_koszul"
PLAIN = "plain"


def _frac_rows(rows) -> tuple:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


@dataclass(frozen=True)
class LMLieAlgebra:
    dim_g: int
    dim_m: int
    c: tuple  # c[i][j] -> coord tuple
    rho: tuple  # rho[a] -> matrix rows
    f: tuple  # f[i] -> coord tuple

    @staticmethod
    def make(c, rho, f, dim_g: int | None = None, dim_m: int | None = None) -> "LMLieAlgebra":
        ng = len(c) if dim_g is None else dim_g
        nm = len(f) if dim_m is None else dim_m
        c_t = tuple(_frac_rows(plane) for plane in c)
        rho_t = tuple(_frac_rows(mat) for mat in rho)
        f_t = _frac_rows(f)
        if len(c_t) != ng or any(len(p) != ng for p in c_t):
            raise ValueError("bracket constants must be dim_g x dim_g x dim_g")
        for plane in c_t:
            for v in plane:
                if len(v) != ng:
                    raise ValueError("bracket coordinate length mismatch")
        if len(rho_t) != ng:
            raise ValueError("one action matrix per Lie algebra basis element")
        for mat in rho_t:
            if len(mat) != nm or any(len(r) != nm for r in mat):
                raise ValueError("action matrices must be dim_m x dim_m")
        if len(f_t) != nm or any(len(r) != ng for r in f_t):
            raise ValueError("f must be dim_m x dim_g")
        return LMLieAlgebra(ng, nm, c_t, rho_t, f_t)


def _vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def _vec_scale(u, s):
    return [s * a for a in u]


def _zero(n):
    return [Fraction(0)] * n


def _g_bracket(l: LMLieAlgebra, u, v):
    """[u, v] for coordinate vectors in g."""
    out = _zero(l.dim_g)
    for i, ci in enumerate(u):
        if ci:
            for j, cj in enumerate(v):
                if cj:
                    out = _vec_add(out, _vec_scale(l.c[i][j], ci * cj))
    return out


def _mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            v = a[i][t]
            if v:
                row = b[t]
                for j in range(m):
                    if row[j]:
                        out[i][j] += v * row[j]
    return out


def validate_lm_lie(l: LMLieAlgebra) -> ValidationReport:
    """Antisymmetry and Jacobi for g, the module axiom, and equivariance."""
    violations: list[str] = []
    checked = 0
    ng, nm = l.dim_g, l.dim_m

    for i in range(ng):
        for j in range(ng):
            checked += 1
            if any(a + b for a, b in zip(l.c[i][j], l.c[j][i])):
                violations.append(f"antisymmetry fails at ({i}, {j})")

    basis = [[Fraction(int(i == t)) for t in range(ng)] for i in range(ng)]
    for i in range(ng):
        for j in range(ng):
            for k in range(ng):
                checked += 1
                total = _vec_add(
                    _vec_add(
                        _g_bracket(l, _g_bracket(l, basis[i], basis[j]), basis[k]),
                        _g_bracket(l, _g_bracket(l, basis[j], basis[k]), basis[i]),
                    ),
                    _g_bracket(l, _g_bracket(l, basis[k], basis[i]), basis[j]),
                )
                if any(total):
                    violations.append(f"Jacobi fails at ({i}, {j}, {k})")

    rho = [[list(r) for r in mat] for mat in l.rho]
    for a in range(ng):
        for b in range(ng):
            checked += 1
            want = [[Fraction(0)] * nm for _ in range(nm)]
            for k, coeff in enumerate(l.c[a][b]):
                if coeff:
                    for i in range(nm):
                        for j in range(nm):
                            want[i][j] += coeff * rho[k][i][j]
            got_ab = _mat_mul(rho[a], rho[b])
            got_ba = _mat_mul(rho[b], rho[a])
            got = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(got_ab, got_ba)]
            if want != got:
                violations.append(f"module axiom fails at ({a}, {b})")

    f_rows = [list(r) for r in l.f]
    for a in range(ng):
        # bracketing with e_a on the right, as a matrix acting on rows of g
        c_a = [[l.c[j][a][k] for k in range(ng)] for j in range(ng)]
        checked += 1
        lhs = _mat_mul(rho[a], f_rows)
        rhs = _mat_mul(f_rows, c_a)
        if lhs != rhs:
            violations.append(f"equivariance fails at action element {a}")

    return ValidationReport.collect(violations, checked)


# ---------------------------------------------------------------------------
# derived Leibniz bracket


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    bracket: tuple  # bracket[i][j] -> coord tuple


def _leibniz_eval(b: LeibnizAlgebra, u, v):
    out = _zero(b.dim)
    for i, ci in enumerate(u):
        if ci:
            for j, cj in enumerate(v):
                if cj:
                    out = _vec_add(out, _vec_scale(b.bracket[i][j], ci * cj))
    return out


def verify_leibniz(b: LeibnizAlgebra) -> ValidationReport:
    """Right Leibniz identity [x,[y,z]] = [[x,y],z] - [[x,z],y] on basis triples."""
    n = b.dim
    basis = [[Fraction(int(i == t)) for t in range(n)] for i in range(n)]
    violations: list[str] = []
    checked = 0
    for x in range(n):
        for y in range(n):
            for z in range(n):
                checked += 1
                lhs = _leibniz_eval(b, basis[x], _leibniz_eval(b, basis[y], basis[z]))
                rhs = [
                    p - q
                    for p, q in zip(
                        _leibniz_eval(b, _leibniz_eval(b, basis[x], basis[y]), basis[z]),
                        _leibniz_eval(b, _leibniz_eval(b, basis[x], basis[z]), basis[y]),
                    )
                ]
                if lhs != rhs:
                    violations.append(f"Leibniz identity fails at ({x}, {y}, {z})")
    return ValidationReport.collect(violations, checked)


def leibniz_bracket(l: LMLieAlgebra) -> LeibnizAlgebra:
    """[m, n] := m ^ f(n), which is a (generally non-Lie) Leibniz bracket."""
    nm = l.dim_m
    table = []
    for i in range(nm):
        row = []
        for j in range(nm):
            out = _zero(nm)
            for k, coeff in enumerate(l.f[j]):
                if coeff:
                    out = _vec_add(out, _vec_scale(list(l.rho[k][i]), coeff))
            row.append(tuple(out))
        table.append(tuple(row))
    out = LeibnizAlgebra(nm, tuple(table))
    report = verify_leibniz(out)
    if not report.ok:
        raise AssertionError(f"derived bracket is not Leibniz: {report.violations[0]}")
    return out


# ---------------------------------------------------------------------------
# free graded extension

WORD_BUDGET = 300_000


def _sigma(p: int, q: int, convention: str) -> Fraction:
    if convention == KOSZUL and (p * q) % 2:
        return Fraction(-1)
    return Fraction(1)


def _d_sign(p: int, convention: str) -> Fraction:
    """Sign in d[u,v] = [du,v] + sign [u,dv] for deg u = p."""
    if convention == KOSZUL and p % 2:
        return Fraction(-1)
    return Fraction(1)


def _words_by_degree(m: int, max_degree: int) -> list:
    """words[n] = all binary bracket words with n leaves drawn from 0..m-1."""
    words: list = [None, list(range(m))]
    total = m
    for n in range(2, max_degree + 1):
        size = sum(len(words[p]) * len(words[n - p]) for p in range(1, n))
        total += size
        if total > WORD_BUDGET:
            raise ValueError(
                f"degree bound needs {total} bracket words, over the budget {WORD_BUDGET}"
            )
        layer = []
        for p in range(1, n):
            for u in words[p]:
                for v in words[n - p]:
                    layer.append((u, v))
        words.append(layer)
    return words


def _word_degree(w) -> int:
    return 1 if isinstance(w, int) else _word_degree(w[0]) + _word_degree(w[1])


@dataclass(frozen=True)
class GradedLieTruncation:
    """Degrees 0..max_degree of the free graded extension.

    dims[n] and basis_words[n] describe the degree-n slice (degree 0 is the
    input Lie algebra, so basis_words[0] is empty).  bracket[(p, q)][i][j]
    is the coordinate vector of the bracket of basis elements, defined for
    p + q <= max_degree.  differential[n][j] gives d of the j-th basis
    element of degree n in the degree n-1 basis.
    """

    convention: str
    max_degree: int
    source: LMLieAlgebra
    dims: tuple[int, ...]
    words: tuple  # words[n - 1] = all degree-n bracket words
    basis_words: tuple
    quotients: tuple  # quotients[n - 1] = word-span quotient in degree n
    bracket: dict
    differential: tuple


def e_functor(l: LMLieAlgebra, max_degree: int, convention: str = KOSZUL) -> GradedLieTruncation:
    if convention not in (KOSZUL, PLAIN):
        raise ValueError(f"unknown convention {convention!r}")
    if max_degree < 1:
        raise ValueError("degree bound must be at least 1")
    m = l.dim_m
    words = _words_by_degree(m, max_degree)
    index = [None] + [{w: i for i, w in enumerate(words[n])} for n in range(1, max_degree + 1)]

    # relation spans per degree, built from the bottom up
    relations: list = [None, Subspace.zero(_Q, m)]
    for n in range(2, max_degree + 1):
        nwords = len(words[n])
        rows = []

        def unit(w):
            v = _zero(nwords)
            v[index[n][w]] = Fraction(1)
            return v

        for p in range(1, n):
            q = n - p
            s = _sigma(p, q, convention)
            for u in words[p]:
                for v in words[q]:
                    row = unit((u, v))
                    row[index[n][(v, u)]] += s
                    rows.append(row)
        for p in range(1, n - 1):
            for q in range(1, n - p):
                r = n - p - q
                if r < 1:
                    continue
                s = _sigma(p, q, convention)
                for u in words[p]:
                    for v in words[q]:
                        for w in words[r]:
                            row = unit((u, (v, w)))
                            row[index[n][((u, v), w)]] -= Fraction(1)
                            row[index[n][(v, (u, w))]] -= s
                            rows.append(row)
        # brackets of lower-degree relations against words, both sides
        for p in range(2, n):
            q = n - p
            for rel in relations[p].basis:
                support = [(words[p][i], coeff) for i, coeff in enumerate(rel) if coeff]
                for w in words[q]:
                    left = _zero(nwords)
                    right = _zero(nwords)
                    for u, coeff in support:
                        left[index[n][(u, w)]] += coeff
                        right[index[n][(w, u)]] += coeff
                    rows.append(left)
                    rows.append(right)
        relations.append(Subspace.from_vectors(_Q, nwords, rows))

    quotients = [None] + [QuotientSpace(relations[n]) for n in range(1, max_degree + 1)]
    dims = [l.dim_g] + [quotients[n].dim for n in range(1, max_degree + 1)]
    basis_words = [()] + [
        tuple(words[n][i] for i in quotients[n].rep_indices)
        for n in range(1, max_degree + 1)
    ]

    def nf(n: int, vec) -> list:
        return quotients[n].coords(vec)

    def word_vector(n: int, table: dict) -> list:
        v = _zero(len(words[n]))
        for w, coeff in table.items():
            v[index[n][w]] += coeff
        return v

    def ad_word(w, a: int) -> dict:
        """Right bracket of the word with e_a, as a leaf-wise substitution."""
        if isinstance(w, int):
            return {k: coeff for k, coeff in enumerate(l.rho[a][w]) if coeff}
        u, v = w
        out: dict = {}
        for u2, coeff in ad_word(u, a).items():
            key = (u2, v)
            out[key] = out.get(key, Fraction(0)) + coeff
        for v2, coeff in ad_word(v, a).items():
            key = (u, v2)
            out[key] = out.get(key, Fraction(0)) + coeff
        return out

    # the action descends: relation rows must map into relations
    for n in range(2, max_degree + 1):
        for a in range(l.dim_g):
            for rel in relations[n].basis:
                img: dict = {}
                for i, coeff in enumerate(rel):
                    if coeff:
                        for w2, c2 in ad_word(words[n][i], a).items():
                            img[w2] = img.get(w2, Fraction(0)) + coeff * c2
                if any(nf(n, word_vector(n, img))):
                    raise AssertionError(f"action does not descend at degree {n}")

    bracket: dict = {}
    bracket[(0, 0)] = l.c
    for n in range(1, max_degree + 1):
        table_n0 = []
        for w in basis_words[n]:
            per_a = []
            for a in range(l.dim_g):
                per_a.append(tuple(nf(n, word_vector(n, ad_word(w, a)))))
            table_n0.append(tuple(per_a))
        bracket[(n, 0)] = tuple(table_n0)
        bracket[(0, n)] = tuple(
            tuple(
                tuple(-x for x in table_n0[j][a])
                for j in range(dims[n])
            )
            for a in range(l.dim_g)
        )
    for p in range(1, max_degree):
        for q in range(1, max_degree + 1 - p):
            table = []
            for u in basis_words[p]:
                row = []
                for v in basis_words[q]:
                    row.append(tuple(nf(p + q, word_vector(p + q, {(u, v): Fraction(1)}))))
                table.append(tuple(row))
            bracket[(p, q)] = tuple(table)

    def eval_bracket(p: int, vp, q: int, vq) -> list:
        out = _zero(dims[p + q])
        tab = bracket[(p, q)]
        for i, ci in enumerate(vp):
            if ci:
                for j, cj in enumerate(vq):
                    if cj:
                        out = _vec_add(out, _vec_scale(tab[i][j], ci * cj))
        return out

    d_cache: dict = {}

    def d_word(w) -> list:
        """d of a bracket word, in basis coords of one degree lower."""
        if isinstance(w, int):
            return list(l.f[w])
        if w in d_cache:
            return d_cache[w]
        u, v = w
        p, q = _word_degree(u), _word_degree(v)
        nu = nf(p, word_vector(p, {u: Fraction(1)})) if p >= 1 else None
        nv = nf(q, word_vector(q, {v: Fraction(1)}))
        du = d_word(u)
        dv = d_word(v)
        if p == 1:
            term1 = [Fraction(-1) * x for x in eval_bracket(q, nv, 0, du)]
        else:
            term1 = eval_bracket(p - 1, du, q, nv)
        if q == 1:
            term2 = eval_bracket(p, nu, 0, dv)
        else:
            term2 = eval_bracket(p, nu, q - 1, dv)
        out = _vec_add(term1, _vec_scale(term2, _d_sign(p, convention)))
        d_cache[w] = out
        return out

    differential = [()]
    differential.append(tuple(tuple(row) for row in l.f))
    for n in range(2, max_degree + 1):
        differential.append(tuple(tuple(d_word(w)) for w in basis_words[n]))
        # the differential also descends on relation rows
        for rel in relations[n].basis:
            acc = _zero(dims[n - 1])
            for i, coeff in enumerate(rel):
                if coeff:
                    acc = _vec_add(acc, _vec_scale(d_word(words[n][i]), coeff))
            if any(acc):
                raise AssertionError(f"differential does not descend at degree {n}")

    return GradedLieTruncation(
        convention=convention,
        max_degree=max_degree,
        source=l,
        dims=tuple(dims),
        words=tuple(tuple(words[n]) for n in range(1, max_degree + 1)),
        basis_words=tuple(basis_words),
        quotients=tuple(quotients[1:]),
        bracket=bracket,
        differential=tuple(differential),
    )


def table_bracket(t: GradedLieTruncation, p: int, vp, q: int, vq) -> list:
    """Bracket of coordinate vectors through the truncation tables."""
    if p + q > t.max_degree:
        raise ValueError("bracket degree exceeds the bound")
    out = _zero(t.dims[p + q])
    tab = t.bracket[(p, q)]
    for i, ci in enumerate(vp):
        if ci:
            for j, cj in enumerate(vq):
                if cj:
                    out = _vec_add(out, _vec_scale(tab[i][j], Fraction(ci) * cj))
    return out


def apply_differential(t: GradedLieTruncation, n: int, v) -> list:
    """d on a degree-n coordinate vector (n >= 1)."""
    out = _zero(t.dims[n - 1])
    for j, c in enumerate(v):
        if c:
            out = _vec_add(out, _vec_scale(t.differential[n][j], Fraction(c)))
    return out


def verify_e_truncation(t: GradedLieTruncation, l: LMLieAlgebra) -> ValidationReport:
    """Degree <= 1 equals the input; antisymmetry, Jacobi, derivation rule,
    and d.d = 0 hold on all in-range basis tuples."""
    violations: list[str] = []
    checked = 0

    def record(ok: bool, message: str) -> None:
        nonlocal checked
        checked += 1
        if not ok:
            violations.append(message)

    record(t.dims[0] == l.dim_g, "degree-0 dimension differs from the input")
    record(t.dims[1] == l.dim_m, "degree-1 dimension differs from the input")
    record(t.bracket[(0, 0)] == l.c, "degree (0,0) bracket differs from the input")
    if t.dims[1] == l.dim_m:
        for i in range(l.dim_m):
            for a in range(l.dim_g):
                record(
                    list(t.bracket[(1, 0)][i][a]) == list(l.rho[a][i]),
                    f"degree (1,0) bracket differs from the action at ({i}, {a})",
                )
        record(
            t.differential[1] == l.f,
            "degree-1 differential differs from the structure map",
        )

    D = t.max_degree
    for p in range(D + 1):
        for q in range(D + 1 - p):
            if (p, q) == (0, 0):
                continue
            s = _sigma(p, q, t.convention)
            for i in range(t.dims[p]):
                for j in range(t.dims[q]):
                    lhs = list(t.bracket[(p, q)][i][j])
                    rhs = _vec_scale(t.bracket[(q, p)][j][i], -s)
                    record(
                        lhs == rhs,
                        f"antisymmetry fails in degrees ({p}, {q}) at ({i}, {j})",
                    )

    def unit(n, i):
        v = _zero(t.dims[n])
        v[i] = Fraction(1)
        return v

    for p in range(D + 1):
        for q in range(D + 1 - p):
            for r in range(D + 1 - p - q):
                if p + q + r == 0:
                    continue
                s = _sigma(p, q, t.convention)
                for i in range(t.dims[p]):
                    for j in range(t.dims[q]):
                        for k in range(t.dims[r]):
                            x, y, z = unit(p, i), unit(q, j), unit(r, k)
                            lhs = table_bracket(t, p, x, q + r, table_bracket(t, q, y, r, z))
                            mid = table_bracket(t, p + q, table_bracket(t, p, x, q, y), r, z)
                            rgt = _vec_scale(
                                table_bracket(t, q, y, p + r, table_bracket(t, p, x, r, z)), s
                            )
                            total = [a - b - c2 for a, b, c2 in zip(lhs, mid, rgt)]
                            record(
                                not any(total),
                                f"Jacobi fails in degrees ({p},{q},{r}) at ({i},{j},{k})",
                            )

    for p in range(D + 1):
        for q in range(max(1 - p, 0), D + 1 - p):
            n = p + q
            if n < 1:
                continue
            for i in range(t.dims[p]):
                for j in range(t.dims[q]):
                    x, y = unit(p, i), unit(q, j)
                    br = table_bracket(t, p, x, q, y)
                    lhs = apply_differential(t, n, br) if n >= 1 else None
                    dx = apply_differential(t, p, x) if p >= 1 else None
                    dy = apply_differential(t, q, y) if q >= 1 else None
                    rhs = _zero(t.dims[n - 1])
                    if dx is not None:
                        rhs = _vec_add(rhs, table_bracket(t, p - 1, dx, q, y))
                    if dy is not None:
                        sign = _d_sign(p, t.convention)
                        rhs = _vec_add(
                            rhs, _vec_scale(table_bracket(t, p, x, q - 1, dy), sign)
                        )
                    record(
                        lhs == rhs,
                        f"derivation rule fails in degrees ({p},{q}) at ({i},{j})",
                    )

    for n in range(2, D + 1):
        for j in range(t.dims[n]):
            dd = apply_differential(t, n - 1, apply_differential(t, n, unit(n, j)))
            record(not any(dd), f"d.d nonzero in degree {n} at basis element {j}")

    return ValidationReport.collect(violations, checked)


def induced_degree_maps(t: GradedLieTruncation, h0, h1) -> list:
    """Degree-wise matrices induced by a morphism (h0 on g, h1 on M).

    Row convention: row j is the image of the j-th basis element.  Degree n
    images substitute h1 at every leaf and reduce to the basis.
    """
    h0 = _frac_rows(h0)
    h1 = _frac_rows(h1)

    def expand(w) -> dict:
        if isinstance(w, int):
            return {k: coeff for k, coeff in enumerate(h1[w]) if coeff}
        u, v = w
        out: dict = {}
        for u2, cu in expand(u).items():
            for v2, cv in expand(v).items():
                key = (u2, v2)
                out[key] = out.get(key, Fraction(0)) + cu * cv
        return out

    maps = [tuple(h0)]
    for n in range(1, t.max_degree + 1):
        rows = []
        all_words = t.words[n - 1]
        word_index = {w: i for i, w in enumerate(all_words)}
        for w in t.basis_words[n]:
            vec = _zero(len(all_words))
            for w2, coeff in expand(w).items():
                vec[word_index[w2]] += coeff
            rows.append(tuple(t.quotients[n - 1].coords(vec)))
        maps.append(tuple(rows))
    return maps


# ---------------------------------------------------------------------------
# sample data


def sl2_adjoint() -> LMLieAlgebra:
    """Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h; adjoint module."""
    z = [0, 0, 0]
    c = [
        [z, [0, 2, 0], [0, 0, -2]],
        [[0, -2, 0], z, [1, 0, 0]],
        [[0, 0, 2], [-1, 0, 0], z],
    ]
    rho = [[list(c[i][a]) for i in range(3)] for a in range(3)]
    f = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    return LMLieAlgebra.make(c, rho, f)


def so3_adjoint() -> LMLieAlgebra:
    """Cross-product structure constants [e_i, e_j] = eps_ijk e_k; adjoint
    module with the identity as structure map."""

    def eps(i, j, k):
        return ((j - i) % 3 == 1 and (k - j) % 3 == 1) - ((i - j) % 3 == 1 and (j - k) % 3 == 1)

    c = [[[eps(i, j, k) for k in range(3)] for j in range(3)] for i in range(3)]
    rho = [[c[i][a] for i in range(3)] for a in range(3)]
    f = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    return LMLieAlgebra.make(c, rho, f)


def nilpotent_pair() -> LMLieAlgebra:
    """One-dimensional abelian g acting nilpotently on a plane; the derived
    bracket has [m2, m2] = m1, so it is Leibniz but not Lie."""
    c = [[[0]]]
    rho = [[[0, 0], [1, 0]]]
    f = [[0], [1]]
    return LMLieAlgebra.make(c, rho, f)


def free_generators(m: int) -> LMLieAlgebra:
    """No degree-0 part: M = k^m with zero action and zero structure map."""
    return LMLieAlgebra.make([], [], [[] for _ in range(m)], dim_g=0, dim_m=m)


def one_generator() -> LMLieAlgebra:
    return free_generators(1)
