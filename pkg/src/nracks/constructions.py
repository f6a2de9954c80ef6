"""Builders for n-racks: module brackets, conjugation, the rack <-> n-rack
functors, module-over-group carriers, and the associated group presentation
with its abelianization.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd

from .core import FiniteNRack, ValidationReport, is_homomorphism, validate
from .errors import ConstructionError
from .snf import AbelianGroupInvariants, group_from_diagonal, invariant_factors


@dataclass(frozen=True)
class FiniteRack:
    """A binary left rack candidate on {0..size-1}: flat table, entry for
    (x, y) at index x*size + y.  Structural checks only; use validate_rack."""

    size: int
    table: tuple[int, ...]
    basepoint: int | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"size must be >= 1, got {self.size}")
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.size**2:
            raise ValueError(f"table must have {self.size ** 2} entries")
        if any(not (0 <= v < self.size) for v in self.table):
            raise ValueError("table entries must lie in the carrier")
        if self.basepoint is not None and not (0 <= self.basepoint < self.size):
            raise ValueError(f"basepoint {self.basepoint} outside carrier")

    def op(self, x: int, y: int) -> int:
        return self.table[x * self.size + y]

    def row(self, x: int) -> tuple[int, ...]:
        return self.table[x * self.size : (x + 1) * self.size]

    def to_nrack(self) -> FiniteNRack:
        return FiniteNRack(2, self.size, self.table, self.basepoint)

    @classmethod
    def from_nrack(cls, R: FiniteNRack) -> "FiniteRack":
        if R.arity != 2:
            raise ValueError(f"expected a binary table, got arity {R.arity}")
        return cls(R.size, R.table, R.basepoint)


def validate_rack(Q: FiniteRack) -> ValidationReport:
    """Rack axioms via the arity-2 specialization of the n-rack validator."""
    return validate(Q.to_nrack())


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on {0..size-1}: flat Cayley table (entry for (a, b) at
    a*size + b) and identity index.  The group laws are checked exhaustively
    at construction; inverses are derived."""

    size: int
    cayley: tuple[int, ...]
    identity: int
    inverse: tuple[int, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        k = self.size
        if k < 1:
            raise ValueError("group must be nonempty")
        if not isinstance(self.cayley, tuple):
            object.__setattr__(self, "cayley", tuple(self.cayley))
        if len(self.cayley) != k * k:
            raise ValueError(f"cayley table must have {k * k} entries")
        if any(not (0 <= v < k) for v in self.cayley):
            raise ValueError("cayley entries must lie in the carrier")
        e = self.identity
        if not (0 <= e < k):
            raise ValueError(f"identity {e} outside carrier")
        if any(self.cayley[e * k + x] != x or self.cayley[x * k + e] != x for x in range(k)):
            raise ValueError("identity law fails")
        for a in range(k):
            for b in range(k):
                ab = self.cayley[a * k + b]
                for c in range(k):
                    if self.cayley[ab * k + c] != self.cayley[a * k + self.cayley[b * k + c]]:
                        raise ValueError(f"associativity fails at ({a}, {b}, {c})")
        inverse = [None] * k
        for a in range(k):
            for b in range(k):
                if self.cayley[a * k + b] == e and self.cayley[b * k + a] == e:
                    inverse[a] = b
                    break
            if inverse[a] is None:
                raise ValueError(f"element {a} has no inverse")
        object.__setattr__(self, "inverse", tuple(inverse))

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a * self.size + b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def is_abelian(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.size)
            for b in range(self.size)
        )


def cyclic_group(k: int) -> FiniteGroup:
    table = tuple((a + b) % k for a in range(k) for b in range(k))
    return FiniteGroup(k, table, 0)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on lexicographically ordered permutation words; (p*q)(i) = p(q(i))."""
    perms = sorted(product(range(n), repeat=n))
    perms = [p for p in perms if len(set(p)) == n]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        for q in perms:
            table.append(index[tuple(p[q[i]] for i in range(n))])
    return FiniteGroup(len(perms), tuple(table), index[tuple(range(n))])


def dihedral_group(k: int) -> FiniteGroup:
    """Order 2k: elements 0..k-1 are rotations r^i, k..2k-1 are reflections r^i s."""
    if k < 1:
        raise ValueError("dihedral parameter must be >= 1")

    def mul(a, b):
        ia, ja = a % k, a // k
        ib, jb = b % k, b // k
        if ja == 0:
            return (ia + ib) % k + k * jb
        return (ia - ib) % k + k * (1 - jb)

    table = tuple(mul(a, b) for a in range(2 * k) for b in range(2 * k))
    return FiniteGroup(2 * k, table, 0)


def build_z4_module_nrack(arity: int, modulus: int = 4) -> FiniteNRack:
    """[x_1,...,x_n] = 2x_1 + ... + 2x_{n-1} + x_n on Z/modulus.

    Requires 4 = 0 (mod modulus), i.e. the carrier is a module over Z/4;
    this is the (t, s) = (1, 2) instance of the twisted-module bracket and
    the same congruence makes the table left distributive.
    """
    if arity < 2:
        raise ConstructionError(f"arity must be >= 2, got {arity}")
    if modulus < 1:
        raise ConstructionError(f"modulus must be >= 1, got {modulus}")
    if 4 % modulus != 0:
        raise ConstructionError(
            f"violated relation: 4 = 0 (mod {modulus}) fails, so Z/{modulus} "
            "is not a module over Z/4"
        )
    m = modulus
    table = tuple(
        (2 * sum(xs[:-1]) + xs[-1]) % m for xs in product(range(m), repeat=arity)
    )
    return FiniteNRack(arity, m, table)


def build_gamma_module_nrack(arity: int, modulus: int, t: int, s: int) -> FiniteNRack:
    """[x_1,...,x_n] = s*x_1 + ... + s*x_{n-1} + t*x_n on Z/modulus.

    Parameter checks, each reported by the violated relation:
      * t must be a unit mod modulus (translation bijectivity),
      * s^2 + t*s - s = 0 (mod modulus) (the twisted-module relation),
      * (n-2)*s^2 = 0 (mod modulus) (left distributivity for n > 2; the
        n = 2 case needs nothing beyond the twisted-module relation).
    """
    if arity < 2:
        raise ConstructionError(f"arity must be >= 2, got {arity}")
    if modulus < 1:
        raise ConstructionError(f"modulus must be >= 1, got {modulus}")
    m = modulus
    t %= m
    s %= m
    if gcd(t, m) != 1:
        raise ConstructionError(
            f"violated relation: gcd(t, m) = gcd({t}, {m}) = {gcd(t, m)} != 1, "
            "t is not a unit"
        )
    if (s * s + t * s - s) % m != 0:
        raise ConstructionError(
            f"violated relation: s^2 + t*s - s = {s * s + t * s - s} != 0 (mod {m})"
        )
    if (arity - 2) * s * s % m != 0:
        raise ConstructionError(
            f"violated relation: (n-2)*s^2 = {(arity - 2) * s * s} != 0 (mod {m}); "
            "the bracket is not left distributive for this arity"
        )
    table = tuple(
        (s * sum(xs[:-1]) + t * xs[-1]) % m for xs in product(range(m), repeat=arity)
    )
    return FiniteNRack(arity, m, table)


def build_conjugation_nrack(G: FiniteGroup, arity: int) -> FiniteNRack:
    """[x_1,...,x_n] = x_1 x_2 ... x_{n-1} x_n x_{n-1}^-1 ... x_1^-1 in G,
    pointed at the identity."""
    if arity < 2:
        raise ConstructionError(f"arity must be >= 2, got {arity}")
    k = G.size
    table = []
    for xs in product(range(k), repeat=arity):
        acc = xs[-1]
        for x in reversed(xs[:-1]):
            acc = G.mul(G.mul(x, acc), G.inv(x))
        table.append(acc)
    return FiniteNRack(arity, k, tuple(table), basepoint=G.identity)


def lift_rack_to_nrack(Q: FiniteRack, arity: int) -> FiniteNRack:
    """[x_1,...,x_n] = x_1 o (x_2 o (... (x_{n-1} o x_n)...)); arity 2 returns
    the rack itself as a 2-rack."""
    if arity < 2:
        raise ConstructionError(f"arity must be >= 2, got {arity}")
    report = validate_rack(Q)
    if not report.is_nrack:
        raise ValueError("lift requires a valid rack")
    table = []
    for xs in product(range(Q.size), repeat=arity):
        acc = xs[-1]
        for x in reversed(xs[:-1]):
            acc = Q.op(x, acc)
        table.append(acc)
    return FiniteNRack(arity, Q.size, tuple(table), basepoint=Q.basepoint)


def reduce_nrack_to_rack(R: FiniteNRack) -> FiniteRack:
    """The binary rack on (n-1)-tuples:

        (x_1,...,x_{n-1}) o (y_1,...,y_{n-1})
            = ([x_1,...,x_{n-1},y_1], ..., [x_1,...,x_{n-1},y_{n-1}]).

    Tuples are indexed lexicographically, first coordinate most
    significant.  Pointed at the all-basepoint tuple when R is pointed.
    The output is re-validated; an n-rack always reduces to a rack.
    """
    report = validate(R)
    if not report.is_nrack:
        raise ValueError("reduce requires a valid n-rack")
    m, n = R.size, R.arity
    M = m ** (n - 1)
    tuples = list(product(range(m), repeat=n - 1))
    table = []
    for a in range(M):
        row = R.table[a * m : (a + 1) * m]
        for b in range(M):
            idx = 0
            for digit in tuples[b]:
                idx = idx * m + row[digit]
            table.append(idx)
    basepoint = None
    if R.basepoint is not None:
        idx = 0
        for _ in range(n - 1):
            idx = idx * m + R.basepoint
        basepoint = idx
    rack = FiniteRack(M, tuple(table), basepoint)
    out = validate_rack(rack)
    if not out.is_nrack:
        raise AssertionError("reduction of a valid n-rack failed the rack axioms")
    return rack


@dataclass(frozen=True)
class GroupModule:
    """A finite abelian group V with an action of a group H by automorphisms.

    action[h] is the permutation of V's carrier given by h.  Construction
    verifies that V is abelian, every action[h] is an automorphism of V,
    and h -> action[h] is a homomorphism sending the identity to id.
    """

    space: FiniteGroup
    acting: FiniteGroup
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        V, H = self.space, self.acting
        if not V.is_abelian():
            raise ConstructionError("module carrier must be an abelian group")
        object.__setattr__(self, "action", tuple(tuple(p) for p in self.action))
        if len(self.action) != H.size:
            raise ConstructionError("action must assign a map to every group element")
        for h, perm in enumerate(self.action):
            if sorted(perm) != list(range(V.size)):
                raise ConstructionError(f"action of element {h} is not a bijection")
            for a in range(V.size):
                for b in range(V.size):
                    if perm[V.mul(a, b)] != V.mul(perm[a], perm[b]):
                        raise ConstructionError(
                            f"action of element {h} is not an automorphism"
                        )
        if self.action[H.identity] != tuple(range(V.size)):
            raise ConstructionError("identity must act trivially")
        for h1 in range(H.size):
            for h2 in range(H.size):
                composed = tuple(self.action[h1][self.action[h2][v]] for v in range(V.size))
                if composed != self.action[H.mul(h1, h2)]:
                    raise ConstructionError("action is not a group homomorphism")


def check_antisymmetric_bracket(H: FiniteGroup, bracket: tuple[int, ...], arity: int) -> None:
    """Antisymmetry for group-valued n-ary operations: swapping any two
    adjacent arguments must send the value to its group inverse."""
    k = H.size
    if len(bracket) != k**arity:
        raise ConstructionError(f"bracket table must have {k ** arity} entries")
    if any(not (0 <= v < k) for v in bracket):
        raise ConstructionError("bracket values must lie in the group")
    strides = [k ** (arity - 1 - i) for i in range(arity)]
    for xs in product(range(k), repeat=arity):
        idx = sum(x * st for x, st in zip(xs, strides))
        for i in range(arity - 1):
            swapped = list(xs)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            jdx = sum(x * st for x, st in zip(swapped, strides))
            if bracket[jdx] != H.inv(bracket[idx]):
                raise ConstructionError(
                    f"bracket is not antisymmetric: swap at positions {i},{i + 1} "
                    f"of {xs} does not invert the value"
                )


def build_module_group_nrack(
    H: FiniteGroup,
    bracket: tuple[int, ...],
    module: GroupModule,
    arity: int,
) -> tuple[FiniteNRack, ValidationReport]:
    """Carrier V x H with

        [(u_1, A_1), ..., (u_n, A_n)]
            = ({A_1,...,A_n} . u_n, A_1 A_2 ... A_{n-1} A_n A_{n-1}^-1 ... A_1^-1)

    where {...} is the supplied antisymmetric bracket on H acting on V.
    The table is built unconditionally and passed through the validator;
    the returned report says whether the axioms hold for the given data.
    """
    if arity < 2:
        raise ConstructionError(f"arity must be >= 2, got {arity}")
    if module.acting is not H:
        if module.acting.cayley != H.cayley or module.acting.identity != H.identity:
            raise ConstructionError("module is not an H-module for the supplied H")
    check_antisymmetric_bracket(H, bracket, arity)
    V = module.space
    k, v = H.size, V.size
    size = v * k
    strides = [k ** (arity - 1 - i) for i in range(arity)]
    table = []
    for cs in product(range(size), repeat=arity):
        us = [c // k for c in cs]
        As = [c % k for c in cs]
        acc = As[-1]
        for a in reversed(As[:-1]):
            acc = H.mul(H.mul(a, acc), H.inv(a))
        brack = bracket[sum(a * st for a, st in zip(As, strides))]
        first = module.action[brack][us[-1]]
        table.append(first * k + acc)
    rack = FiniteNRack(arity, size, tuple(table), basepoint=V.identity * k + H.identity)
    return rack, validate(rack)


@dataclass(frozen=True)
class GroupPresentation:
    """Generators 0..generators-1 with relator words as tuples of signed
    1-based indices: generator i is i+1, its inverse -(i+1).  Relators are
    stored freely reduced; no empty relator is kept."""

    generators: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.generators < 0:
            raise ValueError("generator count must be nonnegative")
        object.__setattr__(self, "relators", tuple(tuple(w) for w in self.relators))
        for word in self.relators:
            if not word:
                raise ValueError("empty relator stored")
            for letter in word:
                if letter == 0 or abs(letter) > self.generators:
                    raise ValueError(f"letter {letter} outside generator range")


def free_reduce(word) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs g g^-1 until none remain."""
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _relator_word(xs, value: int, paper_form: bool) -> tuple[int, ...]:
    # Generators are 0-based carrier elements; letters are signed 1-based.
    pos = [x + 1 for x in xs]
    if paper_form:
        # x_1^-1 ... x_{n-1}^-1 x_n^-1 x_{n-1} ... x_1  followed by [xs].
        word = [-g for g in pos[:-1]] + [-pos[-1]] + list(reversed(pos[:-1])) + [value + 1]
    else:
        # gen([xs]) = x_1 ... x_{n-1} x_n x_{n-1}^-1 ... x_1^-1, written as
        # gen([xs]) x_1 ... x_{n-1} x_n^-1 x_{n-1}^-1 ... x_1^-1; this is the
        # form that conjugation n-racks satisfy under the identity map.
        word = [value + 1] + pos[:-1] + [-pos[-1]] + [-g for g in reversed(pos[:-1])]
    return free_reduce(word)


def associated_group_presentation(R: FiniteNRack, paper_form: bool = False) -> GroupPresentation:
    """One generator per carrier element and one relator per n-tuple,
    imposing gen([x_1,...,x_n]) = x_1 ... x_{n-1} x_n x_{n-1}^-1 ... x_1^-1.

    paper_form=True switches to the alternative prefix ordering
    x_1^-1 ... x_{n-1}^-1 x_n^-1 x_{n-1} ... x_1 gen([x]); the two differ on
    nonabelian targets.  Relators are freely reduced, deduplicated, and
    sorted; trivial relators are dropped.
    """
    report = validate(R)
    if not report.is_nrack:
        raise ValueError("associated group requires a valid n-rack")
    words = set()
    for xs in product(range(R.size), repeat=R.arity):
        word = _relator_word(xs, R.bracket(*xs), paper_form)
        if word:
            words.add(word)
    return GroupPresentation(R.size, tuple(sorted(words)))


def abelianization(P: GroupPresentation) -> AbelianGroupInvariants:
    """Smith normal form of the relator exponent-sum matrix."""
    matrix = []
    for word in P.relators:
        row = [0] * P.generators
        for letter in word:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        matrix.append(row)
    return group_from_diagonal(invariant_factors(matrix), P.generators)


def evaluate_word(G: FiniteGroup, word, images) -> int:
    """Evaluate a signed relator word in G, sending generator i to images[i]."""
    acc = G.identity
    for letter in word:
        g = images[abs(letter) - 1]
        acc = G.mul(acc, g if letter > 0 else G.inv(g))
    return acc


def check_relator_preservation(
    R: FiniteNRack, G: FiniteGroup, alpha, paper_form: bool = False
) -> bool:
    """Whether every relator of the associated group dies in G under alpha.

    alpha must be an n-rack morphism from R into the conjugation n-rack of
    G (checked first; ValueError otherwise).  True means the induced map
    from the associated group to G exists.
    """
    conj = build_conjugation_nrack(G, R.arity)
    alpha = tuple(alpha[x] for x in range(R.size))
    if not is_homomorphism(alpha, R, conj):
        raise ValueError("alpha is not an n-rack morphism into the conjugation n-rack")
    P = associated_group_presentation(R, paper_form=paper_form)
    return all(evaluate_word(G, word, alpha) == G.identity for word in P.relators)
