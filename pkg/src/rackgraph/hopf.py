"""The arrow bialgebra of a group-like graph and its augmentation filtration.

The span of the vertices is a group algebra H; the span of the arrows is an
H-bimodule A mapped to H by phi(a) = t(a) - s(a).  The pair carries a
coproduct on each part (group-like on vertices, a(x)t(a) + s(a)(x)a on
arrows), antipodes, and a counit.  Downstream of the structure maps live the
powers of the augmentation ideal, the induced filtration of A, the levels of
the G-action on the rack labels (whose graded pieces form the coinvariant
module), and finite truncation stages of the filtration quotients.

Tensor index conventions, used consistently everywhere:
  H(x)H:  (g, h)  ->  g * |G| + h
  A(x)H:  (a, g)  ->  a * |G| + g
  H(x)A:  (g, a)  ->  g * |A| + a
  A(x)H (+) H(x)A: the A(x)H block comes first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GroupLikeGraph, unit_component
from .linalg import (
    ExactMatrix,
    FieldSpec,
    QuotientSpace,
    SubquotientBasis,
    Subspace,
    induced_matrix,
    nullspace,
)
from .racks import AugmentedRack, FiniteGroup, ValidationReport, orbits


@dataclass(frozen=True)
class LMBialgebra:
    """Structure maps of the arrow bialgebra, materialized over a field.

    Matrix shapes (h = |G|, na = number of arrows):
      phi     h x na        a -> t(a) - s(a)
      s0      h x h         g -> g^{-1}
      s1      na x na       a -> -(s(a)^{-1} . a . t(a)^{-1})
      delta0  h^2 x h       g -> g (x) g
      delta1  (na*h + h*na) x na
      counit  1 x h         all ones
    """

    field: FieldSpec
    graph: GroupLikeGraph
    h_dim: int
    a_dim: int
    phi: ExactMatrix
    s0: ExactMatrix
    s1: ExactMatrix
    delta0: ExactMatrix
    delta1: ExactMatrix
    counit: ExactMatrix

    @property
    def group(self) -> FiniteGroup:
        return self.graph.vertex_group

    def source(self, a: int) -> int:
        return self.graph.graph.arrows[a][0]

    def target(self, a: int) -> int:
        return self.graph.graph.arrows[a][1]


def build_lm_hopf(q: GroupLikeGraph, field: FieldSpec) -> LMBialgebra:
    grp = q.vertex_group
    h = grp.order
    na = q.graph.arrow_count
    one, zero = field.one(), field.zero()

    phi = [[zero] * na for _ in range(h)]
    s1 = [[zero] * na for _ in range(na)]
    d1 = [[zero] * na for _ in range(na * h + h * na)]
    for a in range(na):
        s, t = q.graph.arrows[a]
        phi[t][a] = field.add(phi[t][a], one)
        phi[s][a] = field.sub(phi[s][a], one)
        b = q.left_act[grp.inv[s]][q.right_act[grp.inv[t]][a]]
        s1[b][a] = field.neg(one)
        d1[a * h + t][a] = one
        d1[na * h + s * na + a][a] = one

    s0 = [[zero] * h for _ in range(h)]
    d0 = [[zero] * h for _ in range(h * h)]
    for g in range(h):
        s0[grp.inv[g]][g] = one
        d0[g * h + g][g] = one

    counit = [[one] * h]
    return LMBialgebra(
        field=field,
        graph=q,
        h_dim=h,
        a_dim=na,
        phi=ExactMatrix.from_rows(field, phi),
        s0=ExactMatrix.from_rows(field, s0),
        s1=ExactMatrix.from_rows(field, s1),
        delta0=ExactMatrix.from_rows(field, d0),
        delta1=ExactMatrix.from_rows(field, d1),
        counit=ExactMatrix.from_rows(field, counit),
    )


def _columns_as_dicts(m: ExactMatrix) -> list[dict[int, object]]:
    cols: list[dict[int, object]] = [{} for _ in range(m.ncols)]
    for i, row in enumerate(m.entries):
        for j, v in enumerate(row):
            if v:
                cols[j][i] = v
    return cols


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _bump(d: dict, k: int, v, f: FieldSpec) -> None:
    d[k] = f.add(d.get(k, f.zero()), v)


def verify_hopf(b: LMBialgebra) -> ValidationReport:
    """Exhaustive basis-level check of every structure identity.

    Works entirely from the stored matrices, so a corrupted entry in any of
    them is caught and reported with the witness basis element.
    """
    f = b.field
    grp = b.group
    h, na = b.h_dim, b.a_dim
    mul = grp.mul
    la, ra = b.graph.left_act, b.graph.right_act
    off = na * h
    d0 = _columns_as_dicts(b.delta0)
    d1 = _columns_as_dicts(b.delta1)
    s0c = _columns_as_dicts(b.s0)
    s1c = _columns_as_dicts(b.s1)
    phic = _columns_as_dicts(b.phi)
    eps = list(b.counit.entries[0])
    e = grp.identity

    violations: list[str] = []
    checked = 0

    def record(ok: bool, message: str) -> None:
        nonlocal checked
        checked += 1
        if not ok:
            violations.append(message)

    for g in range(h):
        # coassociativity of the vertex coproduct
        lhs: dict[int, object] = {}
        rhs: dict[int, object] = {}
        for ij, c in d0[g].items():
            i, j = divmod(ij, h)
            for pq, c2 in d0[i].items():
                _bump(lhs, pq * h + j, f.mul(c, c2), f)
            for pq, c2 in d0[j].items():
                p, q2 = divmod(pq, h)
                _bump(rhs, (i * h + p) * h + q2, f.mul(c, c2), f)
        record(_clean(lhs) == _clean(rhs), f"coassociativity fails at vertex {g}")

        # counit on the vertex coproduct, both sides
        left_e: dict[int, object] = {}
        right_e: dict[int, object] = {}
        for ij, c in d0[g].items():
            i, j = divmod(ij, h)
            _bump(left_e, j, f.mul(eps[i], c), f)
            _bump(right_e, i, f.mul(eps[j], c), f)
        want = {g: f.one()}
        record(_clean(left_e) == want, f"left counit fails at vertex {g}")
        record(_clean(right_e) == want, f"right counit fails at vertex {g}")

        # antipode cancellation on the vertex algebra, both sides
        acc_l: dict[int, object] = {}
        acc_r: dict[int, object] = {}
        for ij, c in d0[g].items():
            i, j = divmod(ij, h)
            for i2, c2 in s0c[i].items():
                _bump(acc_l, mul[i2][j], f.mul(c, c2), f)
            for j2, c2 in s0c[j].items():
                _bump(acc_r, mul[i][j2], f.mul(c, c2), f)
        want = _clean({e: eps[g]})
        record(_clean(acc_l) == want, f"vertex antipode (left) fails at {g}")
        record(_clean(acc_r) == want, f"vertex antipode (right) fails at {g}")

    for a in range(na):
        col = d1[a]

        # counit on the arrow coproduct: both blocks return the arrow
        blk_a: dict[int, object] = {}
        blk_h: dict[int, object] = {}
        for k, c in col.items():
            if k < off:
                b2, g2 = divmod(k, h)
                _bump(blk_a, b2, f.mul(c, eps[g2]), f)
            else:
                g2, b2 = divmod(k - off, na)
                _bump(blk_h, b2, f.mul(c, eps[g2]), f)
        want = {a: f.one()}
        record(_clean(blk_a) == want, f"arrow counit (first block) fails at arrow {a}")
        record(_clean(blk_h) == want, f"arrow counit (second block) fails at arrow {a}")

        # compatibility of phi with the two coproducts
        lhs = {}
        for g2, c in phic[a].items():
            for pq, c2 in d0[g2].items():
                _bump(lhs, pq, f.mul(c, c2), f)
        rhs = {}
        for k, c in col.items():
            if k < off:
                b2, g2 = divmod(k, h)
                for t2, c2 in phic[b2].items():
                    _bump(rhs, t2 * h + g2, f.mul(c, c2), f)
            else:
                g2, b2 = divmod(k - off, na)
                for t2, c2 in phic[b2].items():
                    _bump(rhs, g2 * h + t2, f.mul(c, c2), f)
        record(_clean(lhs) == _clean(rhs), f"phi does not intertwine coproducts at arrow {a}")

        # antipode cancellation on arrows, both variants
        acc1: dict[int, object] = {}
        acc2: dict[int, object] = {}
        for k, c in col.items():
            if k < off:
                b2, g2 = divmod(k, h)
                for b3, c2 in s1c[b2].items():
                    _bump(acc1, ra[g2][b3], f.mul(c, c2), f)
                for g3, c2 in s0c[g2].items():
                    _bump(acc2, ra[g3][b2], f.mul(c, c2), f)
            else:
                g2, b2 = divmod(k - off, na)
                for g3, c2 in s0c[g2].items():
                    _bump(acc1, la[g3][b2], f.mul(c, c2), f)
                for b3, c2 in s1c[b2].items():
                    _bump(acc2, la[g2][b3], f.mul(c, c2), f)
        record(not _clean(acc1), f"arrow antipode cancellation (S first) fails at arrow {a}")
        record(not _clean(acc2), f"arrow antipode cancellation (S second) fails at arrow {a}")

        # phi commutes with the antipodes
        lhs = {}
        for b2, c in s1c[a].items():
            for g2, c2 in phic[b2].items():
                _bump(lhs, g2, f.mul(c, c2), f)
        rhs = {}
        for g2, c in phic[a].items():
            for g3, c2 in s0c[g2].items():
                _bump(rhs, g3, f.mul(c, c2), f)
        record(_clean(lhs) == _clean(rhs), f"phi/antipode square fails at arrow {a}")

        # counit kills phi
        total = f.zero()
        for g2, c in phic[a].items():
            total = f.add(total, f.mul(eps[g2], c))
        record(not total, f"counit of phi nonzero at arrow {a}")

    for a in range(na):
        for g in range(h):
            # right module map: coproduct of a.g versus coproduct acted by g(x)g
            lhs = d1[ra[g][a]]
            rhs = {}
            for k, c in d1[a].items():
                for pq, c2 in d0[g].items():
                    p, q2 = divmod(pq, h)
                    if k < off:
                        b2, g2 = divmod(k, h)
                        _bump(rhs, ra[p][b2] * h + mul[g2][q2], f.mul(c, c2), f)
                    else:
                        g2, b2 = divmod(k - off, na)
                        _bump(rhs, off + mul[g2][p] * na + ra[q2][b2], f.mul(c, c2), f)
            record(
                _clean(dict(lhs)) == _clean(rhs),
                f"right module coproduct fails at arrow {a}, vertex {g}",
            )

            # left module map
            lhs = d1[la[g][a]]
            rhs = {}
            for k, c in d1[a].items():
                for pq, c2 in d0[g].items():
                    p, q2 = divmod(pq, h)
                    if k < off:
                        b2, g2 = divmod(k, h)
                        _bump(rhs, la[p][b2] * h + mul[q2][g2], f.mul(c, c2), f)
                    else:
                        g2, b2 = divmod(k - off, na)
                        _bump(rhs, off + mul[p][g2] * na + la[q2][b2], f.mul(c, c2), f)
            record(
                _clean(dict(lhs)) == _clean(rhs),
                f"left module coproduct fails at arrow {a}, vertex {g}",
            )

    return ValidationReport.collect(violations, checked)


# ---------------------------------------------------------------------------
# augmentation filtration


@dataclass(frozen=True)
class FiltrationLevels:
    """Powers of the augmentation ideal in H and the induced levels in A.

    levels_g[n] is the n-th ideal power (index 0 is all of H), levels_a[n]
    the n-th level of A.  stab_g / stab_a are the first indices where the
    chain repeats; levels are always computed at least one step past both.
    """

    field: FieldSpec
    levels_g: tuple
    levels_a: tuple
    stab_g: int
    stab_a: int

    @property
    def stabilization(self) -> int:
        return max(self.stab_g, self.stab_a)


def _chain(first: Subspace, step, depth: int | None):
    """Decreasing subspace chain from `first`; stops at first repeat.

    With an explicit depth the chain is extended to depth+1 entries (the
    stable tail repeats).  Returns (levels, first_repeat_index).
    """
    levels = [first]
    stab = None
    cap = first.ambient_dim + 2
    while True:
        if stab is not None:
            if depth is None or len(levels) > depth:
                break
            levels.append(levels[-1])
            continue
        if depth is not None and len(levels) > depth:
            break
        nxt = step(levels[-1])
        levels.append(nxt)
        if nxt == levels[-2]:
            stab = len(levels) - 2
        elif len(levels) > cap:
            raise RuntimeError("filtration chain failed to stabilize")
    return levels, stab


def _augmentation_ideal(group: FiniteGroup, field: FieldSpec) -> Subspace:
    one, zero = field.one(), field.zero()
    e = group.identity
    vecs = []
    for g in range(group.order):
        if g == e:
            continue
        v = [zero] * group.order
        v[g] = one
        v[e] = field.neg(one)
        vecs.append(v)
    return Subspace.from_vectors(field, group.order, vecs)


def _ideal_product_step(group: FiniteGroup, field: FieldSpec):
    """One more ideal power: multiply the level by every g - 1 on the left."""
    mul = group.mul
    e = group.identity

    def step(level: Subspace) -> Subspace:
        vecs = []
        for g in range(group.order):
            if g == e:
                continue
            for row in level.basis:
                w = [field.neg(v) for v in row]
                for i, v in enumerate(row):
                    if v:
                        j = mul[g][i]
                        w[j] = field.add(w[j], v)
                vecs.append(w)
        return Subspace.from_vectors(field, group.order, vecs)

    return step


def group_ideal_levels(
    group: FiniteGroup, field: FieldSpec, depth: int | None = None, min_len: int = 0
) -> tuple[list[Subspace], int]:
    """[H, I, I^2, ...] with the first-repeat index; at least min_len entries."""
    full = Subspace.full(field, group.order)
    step = _ideal_product_step(group, field)
    first = _augmentation_ideal(group, field)
    levels, stab = _chain(first, step, depth)
    levels = [full] + levels
    while len(levels) < min_len:
        levels.append(step(levels[-1]))
    return levels, (stab + 1 if stab is not None else None)


def _module_level_step(b: LMBialgebra):
    """One more level of A: (g-1).level plus level.(g-1) over all g."""
    f = b.field
    grp = b.group
    e = grp.identity
    la, ra = b.graph.left_act, b.graph.right_act

    def step(level: Subspace) -> Subspace:
        vecs = []
        for g in range(grp.order):
            if g == e:
                continue
            for row in level.basis:
                for act in (la[g], ra[g]):
                    w = [f.neg(v) for v in row]
                    for i, v in enumerate(row):
                        if v:
                            w[act[i]] = f.add(w[act[i]], v)
                    vecs.append(w)
        return Subspace.from_vectors(f, b.a_dim, vecs)

    return step


def augmentation_filtration(b: LMBialgebra, depth: int | None = None) -> FiltrationLevels:
    """Levels of H and A; depth=None computes until both chains repeat."""
    step_a = _module_level_step(b)
    levels_a, stab_a = _chain(Subspace.full(b.field, b.a_dim), step_a, depth)
    levels_g, stab_g = group_ideal_levels(
        b.group, b.field, depth=depth + 1 if depth is not None else None,
        min_len=len(levels_a) + 2,
    )
    if stab_a is None or stab_g is None:
        raise RuntimeError("depth too small to observe stabilization")
    return FiltrationLevels(
        field=b.field,
        levels_g=tuple(levels_g),
        levels_a=tuple(levels_a),
        stab_g=stab_g,
        stab_a=stab_a,
    )


def _phi_image(b: LMBialgebra, level: Subspace) -> Subspace:
    vecs = [b.phi.apply(list(row)) for row in level.basis]
    return Subspace.from_vectors(b.field, b.h_dim, vecs)


def relative_ideal_levels(
    b: LMBialgebra, component: tuple[int, ...], depth: int
) -> list[Subspace]:
    """Levels [full, K, I.K + K.I, ...] where K is the kernel of the map
    collapsing each left coset of the subgroup spanned by `component`."""
    f = b.field
    grp = b.group
    mul = grp.mul
    vecs = []
    one = f.one()
    for g in range(grp.order):
        for t in component:
            k = mul[g][t]
            if k == g:
                continue
            v = [f.zero()] * grp.order
            v[k] = one
            v[g] = f.sub(v[g], one)
            vecs.append(v)
    first = Subspace.from_vectors(f, grp.order, vecs)
    e = grp.identity

    def conv(g: int, row, side: str):
        w = [f.neg(v) for v in row]
        for i, v in enumerate(row):
            if v:
                j = mul[g][i] if side == "l" else mul[i][g]
                w[j] = f.add(w[j], v)
        return w

    levels = [Subspace.full(f, grp.order), first]
    for _ in range(depth - 1):
        prods = []
        for g in range(grp.order):
            if g == e:
                continue
            for row in levels[-1].basis:
                prods.append(conv(g, row, "l"))
                prods.append(conv(g, row, "r"))
        levels.append(Subspace.from_vectors(f, grp.order, prods))
    return levels


def verify_connected_lemma(b: LMBialgebra, f: FiltrationLevels) -> ValidationReport:
    """phi carries level n of A onto level n+1 of H (relative to the unit
    component when the graph is disconnected); inclusion always holds."""
    component, connected = unit_component(b.graph)
    depth = len(f.levels_a) - 1
    targets = (
        list(f.levels_g)
        if connected
        else relative_ideal_levels(b, component, depth + 1)
    )
    violations: list[str] = []
    checked = 0
    for n in range(depth + 1):
        img = _phi_image(b, f.levels_a[n])
        checked += 1
        if not f.levels_g[n + 1].contains_space(img):
            violations.append(f"phi image escapes level {n + 1} of H at level {n}")
        checked += 1
        if img != targets[n + 1]:
            violations.append(
                f"phi image of level {n} differs from the expected level {n + 1}"
            )
    return ValidationReport.collect(violations, checked)


# ---------------------------------------------------------------------------
# coinvariant module


@dataclass(frozen=True)
class CoinvariantModule:
    """Levels of the G-action span on the rack labels and their graded data.

    levels_x[n] is the span of iterated differences v.g - v; p_dims[n] the
    graded dimensions; pi_star[n] the induced matrix from graded piece n to
    graded piece n+1 of the group algebra (via x -> pi(x) - 1).
    """

    field: FieldSpec
    rack: AugmentedRack
    levels_x: tuple
    levels_g: tuple
    p_dims: tuple[int, ...]
    pi_star: tuple
    stab_x: int


def coinvariant_module(
    a: AugmentedRack, field: FieldSpec, depth: int | None = None
) -> CoinvariantModule:
    f = field
    m = a.x_size

    def step(level: Subspace) -> Subspace:
        vecs = []
        for g in range(a.group.order):
            if g == a.group.identity:
                continue
            for row in level.basis:
                w = [f.neg(v) for v in row]
                for i, v in enumerate(row):
                    if v:
                        j = a.action[i][g]
                        w[j] = f.add(w[j], v)
                vecs.append(w)
        return Subspace.from_vectors(f, m, vecs)

    levels_x, stab_x = _chain(Subspace.full(f, m), step, depth)
    if stab_x is None:
        raise RuntimeError("depth too small to observe stabilization")
    levels_g, _ = group_ideal_levels(a.group, f, min_len=len(levels_x) + 2)

    p_dims = tuple(
        levels_x[n].dim - levels_x[n + 1].dim for n in range(len(levels_x) - 1)
    )
    norbits = len(orbits(a, "group_action"))
    if p_dims[0] != norbits:
        raise AssertionError(
            f"degree-0 graded dimension {p_dims[0]} != orbit count {norbits}"
        )

    e = a.group.identity

    def pi_tilde(v):
        w = [f.zero()] * a.group.order
        for x, c in enumerate(v):
            if c:
                w[a.pi[x]] = f.add(w[a.pi[x]], c)
                w[e] = f.sub(w[e], c)
        return w

    pi_star = []
    for n in range(len(levels_x) - 1):
        src = SubquotientBasis(levels_x[n], levels_x[n + 1])
        dst = SubquotientBasis(levels_g[n + 1], levels_g[n + 2])
        pi_star.append(
            induced_matrix(pi_tilde, src, dst, check_kernel=levels_x[n + 1])
        )

    return CoinvariantModule(
        field=f,
        rack=a,
        levels_x=tuple(levels_x),
        levels_g=tuple(levels_g),
        p_dims=p_dims,
        pi_star=tuple(pi_star),
        stab_x=stab_x,
    )


# ---------------------------------------------------------------------------
# graded structure


def _tensor_subspace(u: Subspace, v: Subspace) -> Subspace:
    """Span of pairwise tensors u_i (x) v_j inside k^(dim_u_ambient * dim_v_ambient)."""
    f = u.field
    n = v.ambient_dim
    amb = u.ambient_dim * n
    vecs = []
    for ur in u.basis:
        for vr in v.basis:
            w = [f.zero()] * amb
            for i, uv in enumerate(ur):
                if uv:
                    base = i * n
                    for j, vv in enumerate(vr):
                        if vv:
                            w[base + j] = f.mul(uv, vv)
            vecs.append(w)
    return Subspace.from_vectors(f, amb, vecs)


def _level(levels: tuple, n: int) -> Subspace:
    """Level n, reading past the computed (stabilized) tail as the last entry."""
    return levels[min(n, len(levels) - 1)]


def _tensor_filtration_ah(b: LMBialgebra, f: FiltrationLevels, m: int) -> Subspace:
    """Sum over p+q=m of (level p of A) tensor (level q of H) in A(x)H."""
    total = Subspace.zero(b.field, b.a_dim * b.h_dim)
    for p in range(m + 1):
        total = total.add(
            _tensor_subspace(_level(f.levels_a, p), _level(f.levels_g, m - p))
        )
    return total


def _delta1_prime_vector(b: LMBialgebra, v) -> list:
    """a (x) phi(a), extended linearly, as a vector in A(x)H."""
    f = b.field
    h = b.h_dim
    w = [f.zero()] * (b.a_dim * h)
    phic = b.phi
    for a, c in enumerate(v):
        if c:
            for g in range(h):
                pv = phic.entries[g][a]
                if pv:
                    w[a * h + g] = f.add(w[a * h + g], f.mul(c, pv))
    return w


def verify_graded_structure(
    b: LMBialgebra, f: FiltrationLevels, c: CoinvariantModule
) -> ValidationReport:
    """Graded dimension identity, filtration raising of the reduced arrow
    coproduct, and degree raising of phi."""
    if b.field != f.field or b.field != c.field:
        raise ValueError("field mismatch")
    violations: list[str] = []
    checked = 0

    def gr(levels: tuple, n: int) -> int:
        return _level(levels, n).dim - _level(levels, n + 1).dim

    n_max = f.stab_g + c.stab_x + f.stab_a + 1
    for n in range(n_max + 1):
        lhs = gr(f.levels_a, n)
        rhs = 0
        for p in range(n + 1):
            q = n - p
            pq_dim = c.p_dims[q] if q < len(c.p_dims) else 0
            rhs += gr(f.levels_g, p) * pq_dim
        checked += 1
        if lhs != rhs:
            violations.append(
                f"graded dimension identity fails at degree {n}: {lhs} != {rhs}"
            )

    for n in range(len(f.levels_a)):
        target = _tensor_filtration_ah(b, f, n + 1)
        checked += 1
        bad = next(
            (
                row
                for row in f.levels_a[n].basis
                if not target.contains(_delta1_prime_vector(b, list(row)))
            ),
            None,
        )
        if bad is not None:
            violations.append(
                f"reduced arrow coproduct does not raise the filtration at level {n}"
            )

    for n in range(len(f.levels_a)):
        img = _phi_image(b, f.levels_a[n])
        checked += 1
        if not _level(f.levels_g, n + 1).contains_space(img):
            violations.append(f"phi does not raise the degree at level {n}")

    return ValidationReport.collect(violations, checked)


# ---------------------------------------------------------------------------
# truncation stages


@dataclass(frozen=True)
class TruncatedHopf:
    """Stage n of the filtration quotient tower.

    The arrow part is A modulo level n, the vertex part H modulo level n+1.
    Coproducts land in tensor squares modulo the convolution filtration (the
    sum of level p (x) level q pieces), which is exactly where they stay
    well-defined on cosets; every induced map is kernel-checked on build.
    """

    level: int
    field: FieldSpec
    qa: QuotientSpace
    qh: QuotientSpace
    qhh: QuotientSpace
    qm: QuotientSpace
    den_a: Subspace
    den_h: Subspace
    phi_n: ExactMatrix
    delta0_n: ExactMatrix
    delta1_n: ExactMatrix
    s0_n: ExactMatrix
    s1_n: ExactMatrix


def _tensor_filtration_hh(b: LMBialgebra, f: FiltrationLevels, m: int) -> Subspace:
    total = Subspace.zero(b.field, b.h_dim * b.h_dim)
    for p in range(m + 1):
        total = total.add(
            _tensor_subspace(_level(f.levels_g, p), _level(f.levels_g, m - p))
        )
    return total


def _tensor_filtration_mixed(b: LMBialgebra, f: FiltrationLevels, m: int) -> Subspace:
    """Sum over p+q=m of level_A(p)(x)level_H(q) (+) level_H(q)(x)level_A(p)."""
    field = b.field
    na, h = b.a_dim, b.h_dim
    off = na * h
    amb = na * h + h * na
    vecs = []
    for p in range(m + 1):
        q = m - p
        ah = _tensor_subspace(_level(f.levels_a, p), _level(f.levels_g, q))
        for row in ah.basis:
            vecs.append(list(row) + [field.zero()] * (h * na))
        ha = _tensor_subspace(_level(f.levels_g, q), _level(f.levels_a, p))
        for row in ha.basis:
            vecs.append([field.zero()] * off + list(row))
    return Subspace.from_vectors(field, amb, vecs)


def truncated_hopf(b: LMBialgebra, f: FiltrationLevels, n: int) -> TruncatedHopf:
    if n < 0 or n >= len(f.levels_a) or n + 1 >= len(f.levels_g):
        raise ValueError("truncation level outside the computed filtration")
    field = b.field
    h, na = b.h_dim, b.a_dim
    off = na * h
    den_a = f.levels_a[n]
    den_h = f.levels_g[n + 1]
    qa = QuotientSpace(den_a)
    qh = QuotientSpace(den_h)
    qhh = QuotientSpace(_tensor_filtration_hh(b, f, n + 1))
    qm = QuotientSpace(_tensor_filtration_mixed(b, f, n))

    def apply_phi(v):
        return b.phi.apply(list(v))

    def apply_d0(v):
        w = [field.zero()] * (h * h)
        for g, c in enumerate(v):
            if c:
                w[g * h + g] = field.add(w[g * h + g], c)
        return w

    def apply_d1(v):
        w = [field.zero()] * (na * h + h * na)
        for a, c in enumerate(v):
            if c:
                s, t = b.graph.graph.arrows[a]
                w[a * h + t] = field.add(w[a * h + t], c)
                w[off + s * na + a] = field.add(w[off + s * na + a], c)
        return w

    def apply_s0(v):
        return b.s0.apply(list(v))

    def apply_s1(v):
        return b.s1.apply(list(v))

    return TruncatedHopf(
        level=n,
        field=field,
        qa=qa,
        qh=qh,
        qhh=qhh,
        qm=qm,
        den_a=den_a,
        den_h=den_h,
        phi_n=induced_matrix(apply_phi, qa, qh, check_kernel=den_a),
        delta0_n=induced_matrix(apply_d0, qh, qhh, check_kernel=den_h),
        delta1_n=induced_matrix(apply_d1, qa, qm, check_kernel=den_a),
        s0_n=induced_matrix(apply_s0, qh, qh, check_kernel=den_h),
        s1_n=induced_matrix(apply_s1, qa, qa, check_kernel=den_a),
    )


def truncation_surjection(
    high: TruncatedHopf, low: TruncatedHopf
) -> tuple[ExactMatrix, ExactMatrix]:
    """Canonical projections (arrow part, vertex part) from a deeper stage."""
    if high.level < low.level:
        raise ValueError("surjection goes from the deeper stage to the shallower")

    def ident(v):
        return list(v)

    on_a = induced_matrix(ident, high.qa, low.qa, check_kernel=high.den_a)
    on_h = induced_matrix(ident, high.qh, low.qh, check_kernel=high.den_h)
    return on_a, on_h


def verify_edge_like(t: TruncatedHopf, b: LMBialgebra) -> ValidationReport:
    """Canonical images stay group-like/edge-like in the truncation, and the
    source, target, and vertex actions agree with the original graph."""
    field = t.field
    h, na = b.h_dim, b.a_dim
    off = na * h
    grp = b.group
    la, ra = b.graph.left_act, b.graph.right_act
    violations: list[str] = []
    checked = 0

    def unit_h(g: int):
        v = [field.zero()] * h
        v[g] = field.one()
        return v

    def unit_a(a: int):
        v = [field.zero()] * na
        v[a] = field.one()
        return v

    for g in range(h):
        lhs = t.delta0_n.apply(t.qh.coords(unit_h(g)))
        w = [field.zero()] * (h * h)
        w[g * h + g] = field.one()
        rhs = t.qhh.coords(w)
        checked += 1
        if lhs != rhs:
            violations.append(f"vertex image not group-like at {g}")

    for a in range(na):
        s, tt = b.graph.graph.arrows[a]
        lhs = t.delta1_n.apply(t.qa.coords(unit_a(a)))
        w = [field.zero()] * (na * h + h * na)
        w[a * h + tt] = field.one()
        w[off + s * na + a] = field.one()
        rhs = t.qm.coords(w)
        checked += 1
        if lhs != rhs:
            violations.append(f"arrow image not edge-like at {a}")

    # vertex multiplication and the two actions descend coherently
    for g in range(h):
        mul_g = induced_matrix(
            lambda v, g=g: _left_mul_vector(grp, field, g, v),
            t.qh,
            t.qh,
            check_kernel=t.den_h,
        )
        lg = induced_matrix(
            lambda v, g=g: _permute_vector(field, la[g], v), t.qa, t.qa, check_kernel=t.den_a
        )
        rg = induced_matrix(
            lambda v, g=g: _permute_vector(field, ra[g], v), t.qa, t.qa, check_kernel=t.den_a
        )
        for k in range(h):
            checked += 1
            if mul_g.apply(t.qh.coords(unit_h(k))) != t.qh.coords(unit_h(grp.mul[g][k])):
                violations.append(f"vertex product disagrees at ({g}, {k})")
        for a in range(na):
            checked += 2
            if lg.apply(t.qa.coords(unit_a(a))) != t.qa.coords(unit_a(la[g][a])):
                violations.append(f"left action disagrees at ({g}, {a})")
            if rg.apply(t.qa.coords(unit_a(a))) != t.qa.coords(unit_a(ra[g][a])):
                violations.append(f"right action disagrees at ({g}, {a})")

    return ValidationReport.collect(violations, checked)


def _left_mul_vector(grp: FiniteGroup, field: FieldSpec, g: int, v):
    w = [field.zero()] * grp.order
    for i, c in enumerate(v):
        if c:
            w[grp.mul[g][i]] = field.add(w[grp.mul[g][i]], c)
    return w


def _permute_vector(field: FieldSpec, table, v):
    w = [field.zero()] * len(v)
    for i, c in enumerate(v):
        if c:
            w[table[i]] = field.add(w[table[i]], c)
    return w


def graded_primitive_subspace(b: LMBialgebra, f: FiltrationLevels, n: int) -> Subspace:
    """Classes [v] in graded piece n of H whose reduced coproduct
    Delta0(v) - v(x)1 - 1(x)v falls one filtration stage deeper.

    Returned in the coordinates of the graded piece's representative basis.
    """
    if n < 1:
        raise ValueError("graded primitives live in positive degrees")
    field = b.field
    h = b.h_dim
    e = b.group.identity
    level = _level(f.levels_g, n)
    below = _level(f.levels_g, n + 1)
    target = QuotientSpace(_tensor_filtration_hh(b, f, n + 1))

    def reduced_coproduct(v):
        w = [field.zero()] * (h * h)
        for g, c in enumerate(v):
            if c:
                w[g * h + g] = field.add(w[g * h + g], c)
                w[g * h + e] = field.sub(w[g * h + e], c)
                w[e * h + g] = field.sub(w[e * h + g], c)
        return w

    gr_basis = SubquotientBasis(level, below)
    if level.dim == 0:
        return Subspace.zero(field, 0)
    if target.dim == 0:
        kernel = Subspace.full(field, level.dim)
    else:
        cols = [target.coords(reduced_coproduct(list(row))) for row in level.basis]
        rows = [list(col) for col in zip(*cols)]
        kernel = nullspace(ExactMatrix.from_rows(field, rows))
    coords = []
    for coeffs in kernel.basis:
        v = [field.zero()] * h
        for c, row in zip(coeffs, level.basis):
            if c:
                v = [field.add(a2, field.mul(c, r)) for a2, r in zip(v, row)]
        coords.append(gr_basis.coords(v))
    return Subspace.from_vectors(field, gr_basis.dim, coords)
