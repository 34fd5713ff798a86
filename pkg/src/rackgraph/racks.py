"""Finite groups, racks, and augmented racks.

Conventions, used consistently across the package:
  * group tables: mul[g][h] is the product g*h, identity has a fixed index;
  * rack operation: op[x][y] is x acted on by y (written x ^ y);
  * augmented racks carry a right G-action, action[x][g] = x ^ g, and an
    equivariant map pi with pi[x ^ g] = g^-1 pi[x] g;
  * the derived rack of an augmented rack is x ^ y := x ^ pi(y).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import smith_normal_form


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]
    checked: int

    @staticmethod
    def collect(violations: list[str], checked: int, limit: int = 20) -> "ValidationReport":
        return ValidationReport(not violations, tuple(violations[:limit]), checked)


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    mul: tuple  # mul[g][h]
    identity: int
    inv: tuple  # filled in by make()

    @staticmethod
    def make(mul, identity: int) -> "FiniteGroup":
        mul = tuple(tuple(row) for row in mul)
        order = len(mul)
        inv = [None] * order
        for g in range(order):
            for h in range(order):
                if mul[g][h] == identity:
                    inv[g] = h
        if any(v is None for v in inv):
            raise ValueError("element without inverse")
        return FiniteGroup(order, mul, identity, tuple(inv))

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g"""
        return self.mul[self.mul[self.inv[g]][x]][g]

    def conjugacy_class(self, x: int) -> tuple[int, ...]:
        return tuple(sorted({self.conjugate(x, g) for g in range(self.order)}))

    def subgroup_closure(self, generators) -> tuple[int, ...]:
        seen = {self.identity}
        frontier = [self.identity]
        gens = set(generators) | {self.inv[g] for g in generators}
        while frontier:
            g = frontier.pop()
            for h in gens:
                k = self.mul[g][h]
                if k not in seen:
                    seen.add(k)
                    frontier.append(k)
        return tuple(sorted(seen))

    def is_normal(self, subgroup) -> bool:
        sub = set(subgroup)
        return all(self.conjugate(x, g) in sub for x in sub for g in range(self.order))

    def cosets(self, subgroup) -> list[tuple[int, ...]]:
        """Left cosets g*H, deterministic order by smallest member."""
        sub = set(subgroup)
        seen: set[int] = set()
        out = []
        for g in range(self.order):
            if g in seen:
                continue
            coset = tuple(sorted(self.mul[g][h] for h in sub))
            seen.update(coset)
            out.append(coset)
        return out


def validate_group(g: FiniteGroup) -> ValidationReport:
    violations: list[str] = []
    n = g.order
    checked = 0
    for a in range(n):
        checked += 2
        if g.mul[g.identity][a] != a or g.mul[a][g.identity] != a:
            violations.append(f"identity fails at element {a}")
        if g.mul[a][g.inv[a]] != g.identity or g.mul[g.inv[a]][a] != g.identity:
            violations.append(f"inverse fails at element {a}")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                checked += 1
                if g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]:
                    violations.append(f"associativity fails at ({a},{b},{c})")
    return ValidationReport.collect(violations, checked)


def cyclic_group(n: int) -> FiniteGroup:
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup.make(mul, 0)


def group_from_permutations(generators: list[tuple[int, ...]]) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """Closure of permutation generators; elements ordered BFS from the identity.

    Multiplication is in diagram order: (p*q)(x) = q(p(x)), so that a right
    action x^p = p(x) satisfies x^(p*q) = (x^p)^q.
    """
    deg = len(generators[0])
    ident = tuple(range(deg))
    elems = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        p = queue.pop(0)
        for gen in generators:
            q = tuple(gen[p[i]] for i in range(deg))  # p then gen
            if q not in index:
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
    n = len(elems)
    mul = [[0] * n for _ in range(n)]
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            r = tuple(q[p[x]] for x in range(deg))
            mul[i][j] = index[r]
    return FiniteGroup.make(mul, 0), elems


def symmetric_group_3() -> FiniteGroup:
    g, _ = group_from_permutations([(1, 0, 2), (0, 2, 1)])
    return g


def dihedral_group_4() -> FiniteGroup:
    # symmetries of the square: rotation and a reflection
    g, _ = group_from_permutations([(1, 2, 3, 0), (0, 3, 2, 1)])
    return g


def quaternion_group_8() -> FiniteGroup:
    # units +-1, +-i, +-j, +-k; index = 2*symbol + sign with symbols 1,i,j,k
    symbols = ["1", "i", "j", "k"]
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    def enc(sign: int, sym: str) -> int:
        return 2 * symbols.index(sym) + (0 if sign == 1 else 1)
    n = 8
    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            sa, ya = (1 if a % 2 == 0 else -1), symbols[a // 2]
            sb, yb = (1 if b % 2 == 0 else -1), symbols[b // 2]
            s, y = table[(ya, yb)]
            mul[a][b] = enc(sa * sb * s, y)
    return FiniteGroup.make(mul, 0)


# ---------------------------------------------------------------------------
# racks


@dataclass(frozen=True)
class FiniteRack:
    size: int
    op: tuple  # op[x][y] = x ^ y

    @staticmethod
    def make(op) -> "FiniteRack":
        op = tuple(tuple(row) for row in op)
        return FiniteRack(len(op), op)


def validate_rack(r: FiniteRack) -> ValidationReport:
    violations: list[str] = []
    n = r.size
    checked = 0
    for y in range(n):
        checked += 1
        col = [r.op[x][y] for x in range(n)]
        if sorted(col) != list(range(n)):
            violations.append(f"right translation by {y} is not a bijection")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                checked += 1
                lhs = r.op[r.op[x][y]][z]
                rhs = r.op[r.op[x][z]][r.op[y][z]]
                if lhs != rhs:
                    violations.append(f"self-distributivity fails at ({x},{y},{z})")
    return ValidationReport.collect(violations, checked)


def trivial_rack(n: int) -> FiniteRack:
    return FiniteRack.make([[x] * n for x in range(n)])


def dihedral_quandle(n: int) -> FiniteRack:
    return FiniteRack.make([[(2 * y - x) % n for y in range(n)] for x in range(n)])


# ---------------------------------------------------------------------------
# augmented racks


@dataclass(frozen=True)
class AugmentedRack:
    x_size: int
    group: FiniteGroup
    action: tuple  # action[x][g] = x ^ g
    pi: tuple  # pi[x] in the group

    @staticmethod
    def make(group: FiniteGroup, action, pi) -> "AugmentedRack":
        action = tuple(tuple(row) for row in action)
        return AugmentedRack(len(action), group, action, tuple(pi))

    def derived_rack(self) -> FiniteRack:
        op = [
            [self.action[x][self.pi[y]] for y in range(self.x_size)]
            for x in range(self.x_size)
        ]
        return FiniteRack.make(op)


def validate_augmented(a: AugmentedRack) -> ValidationReport:
    violations: list[str] = []
    g = a.group
    checked = 0
    for x in range(a.x_size):
        checked += 1
        if a.action[x][g.identity] != x:
            violations.append(f"identity action fails at {x}")
    for x in range(a.x_size):
        for h1 in range(g.order):
            for h2 in range(g.order):
                checked += 1
                if a.action[a.action[x][h1]][h2] != a.action[x][g.mul[h1][h2]]:
                    violations.append(f"action composition fails at ({x},{h1},{h2})")
    for x in range(a.x_size):
        for h in range(g.order):
            checked += 1
            if a.pi[a.action[x][h]] != g.conjugate(a.pi[x], h):
                violations.append(f"equivariance fails at ({x},{h})")
    return ValidationReport.collect(violations, checked)


def conjugation_rack(g: FiniteGroup) -> AugmentedRack:
    """X = G with the conjugation action and pi = identity map."""
    action = [[g.conjugate(x, h) for h in range(g.order)] for x in range(g.order)]
    return AugmentedRack.make(g, action, list(range(g.order)))


def conjugacy_class_rack(g: FiniteGroup, seeds) -> AugmentedRack:
    """Union of the conjugacy classes of the seed elements."""
    members: set[int] = set()
    for s in seeds:
        members.update(g.conjugacy_class(s))
    xs = sorted(members)
    pos = {x: i for i, x in enumerate(xs)}
    action = [[pos[g.conjugate(x, h)] for h in range(g.order)] for x in xs]
    return AugmentedRack.make(g, action, xs)


def trivial_augmented_rack(n: int) -> AugmentedRack:
    g = cyclic_group(1)
    return AugmentedRack.make(g, [[x] for x in range(n)], [0] * n)


def toy_rack_c2() -> AugmentedRack:
    """One-point set over C2 with pi(x) = the generator, trivial action."""
    g = cyclic_group(2)
    return AugmentedRack.make(g, [[0, 0]], [1])


# ---------------------------------------------------------------------------
# orbits, inner group, presentation


def _union_find_orbits(n: int, moves) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in moves:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def orbits(a: AugmentedRack, mode: str) -> list[list[int]]:
    """mode='group_action': orbits of X under all of G.
    mode='inner': orbits under the translations x -> x ^ pi(y)."""
    if mode == "group_action":
        moves = [
            (x, a.action[x][g])
            for x in range(a.x_size)
            for g in range(a.group.order)
        ]
    elif mode == "inner":
        moves = [
            (x, a.action[x][a.pi[y]])
            for x in range(a.x_size)
            for y in range(a.x_size)
        ]
    else:
        raise ValueError(f"unknown orbit mode {mode!r}")
    return _union_find_orbits(a.x_size, moves)


def rack_orbits(r: FiniteRack) -> list[list[int]]:
    """Orbits of a bare rack under its right translations."""
    moves = [(x, r.op[x][y]) for x in range(r.size) for y in range(r.size)]
    return _union_find_orbits(r.size, moves)


def inner_group(r: FiniteRack, max_order: int = 20000) -> tuple[FiniteGroup, AugmentedRack]:
    """Group generated by the right translations, plus the induced augmentation.

    The augmented rack has X = the rack elements, the evident right action of
    the translation group, and pi(x) = translation by x.
    """
    n = r.size
    gens = [tuple(r.op[x][y] for x in range(n)) for y in range(n)]
    group, elems = group_from_permutations(gens)
    if group.order > max_order:
        raise ValueError(f"inner group order {group.order} exceeds bound {max_order}")
    index = {p: i for i, p in enumerate(elems)}
    action = [[elems[g][x] for g in range(group.order)] for x in range(n)]
    pi = [index[gens[y]] for y in range(n)]
    return group, AugmentedRack.make(group, action, pi)


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    relations: tuple  # words: tuples of nonzero ints, +-(i+1) for generator i

    def words_as_strings(self) -> list[str]:
        out = []
        for word in self.relations:
            parts = []
            for s in word:
                name = self.generator_names[abs(s) - 1]
                parts.append(name if s > 0 else name + "^-1")
            out.append(" ".join(parts))
        return out


def associated_group_presentation(r: FiniteRack, names=None) -> Presentation:
    """One generator per element; relations t_x t_y = t_y t_(x^y)."""
    if names is None:
        names = [f"t{i}" for i in range(r.size)]
    if len(names) != r.size:
        raise ValueError("need one name per rack element")
    rels = []
    for x in range(r.size):
        for y in range(r.size):
            z = r.op[x][y]
            rels.append((x + 1, y + 1, -(z + 1), -(y + 1)))
    return Presentation(tuple(names), tuple(rels))


def abelianization(p: Presentation) -> tuple[int, list[int]]:
    """(free rank, torsion divisors > 1) of the presented group's abelianization."""
    n = len(p.generator_names)
    rows = []
    for word in p.relations:
        v = [0] * n
        for s in word:
            v[abs(s) - 1] += 1 if s > 0 else -1
        rows.append(v)
    if not rows:
        return n, []
    rk, divisors = smith_normal_form(rows)
    return n - rk, [d for d in divisors if d > 1]


def is_inverse_closed(a: AugmentedRack) -> bool:
    """For injective pi: is the image of pi closed under group inversion?"""
    if len(set(a.pi)) != a.x_size:
        raise ValueError("pi is not injective; inverse-closure is not defined")
    image = set(a.pi)
    return all(a.group.inv[g] in image for g in image)
