"""Finite n-racks: carriers, axiom checks, classification, and inner maps.

An n-rack is a set with an n-ary bracket [x_1,...,x_n] that is left
distributive,

    [x_1,...,x_{n-1},[y_1,...,y_n]] = [[x_1,...,x_{n-1},y_1],...,[x_1,...,x_{n-1},y_n]],

and whose translations y -> [a_1,...,a_{n-1},y] are bijections.  Carriers
are always {0,...,m-1}; named elements belong to I/O adapters.
"""

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class FiniteNRack:
    """An n-ary operation table on {0,...,size-1}.

    The table is flat and row-major: entry for (x_1,...,x_n) sits at index
    x_1*size^(n-1) + ... + x_n.  A basepoint marks the distinguished
    element of a pointed n-rack; None means no basepoint is declared.
    """

    arity: int
    size: int
    table: tuple[int, ...]
    basepoint: int | None = None

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        if self.size < 1:
            raise ValueError(f"size must be >= 1, got {self.size}")
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        expected = self.size**self.arity
        if len(self.table) != expected:
            raise ValueError(
                f"table has {len(self.table)} entries, expected {expected}"
            )
        if any(not (0 <= v < self.size) for v in self.table):
            raise ValueError("table entries must lie in the carrier")
        if self.basepoint is not None and not (0 <= self.basepoint < self.size):
            raise ValueError(f"basepoint {self.basepoint} outside carrier")

    @property
    def strides(self) -> tuple[int, ...]:
        m, n = self.size, self.arity
        return tuple(m ** (n - 1 - i) for i in range(n))

    def index(self, args) -> int:
        m = self.size
        idx = 0
        for a in args:
            idx = idx * m + a
        return idx

    def bracket(self, *args: int) -> int:
        if len(args) != self.arity:
            raise ValueError(f"bracket takes {self.arity} arguments")
        return self.table[self.index(args)]

    def translation(self, prefix) -> tuple[int, ...]:
        """The row y -> [prefix, y]; contiguous because y is least significant."""
        if len(prefix) != self.arity - 1:
            raise ValueError(f"prefix must have {self.arity - 1} entries")
        p = self.index(prefix)
        return self.table[p * self.size : (p + 1) * self.size]

    def prefixes(self):
        return product(range(self.size), repeat=self.arity - 1)


@dataclass(frozen=True)
class Classification:
    """Axiom flags of a table.  is_pointed is None when no basepoint is set.

    Implications enforced by construction: any true flag other than
    is_nrack implies is_nrack; kei flags imply the matching quandle flags;
    is_nquandle implies is_weak_nquandle.
    """

    is_nrack: bool
    is_pointed: bool | None
    is_weak_nquandle: bool
    is_nquandle: bool
    is_weak_nkei: bool
    is_nkei: bool


@dataclass(frozen=True)
class ValidationReport:
    classification: Classification
    distributivity_witness: tuple | None
    bijectivity_witness: tuple | None

    @property
    def is_nrack(self) -> bool:
        return self.classification.is_nrack


@dataclass(frozen=True)
class InnerMap:
    """The translation permutation y -> [args, y] of a validated n-rack."""

    source: FiniteNRack
    arguments: tuple[int, ...]
    permutation: tuple[int, ...]


def check_left_distributive(R: FiniteNRack):
    """Exhaustive left-distributivity check.

    Returns (True, None) or (False, witness) with witness the
    lexicographically first violating ((x_1..x_{n-1}), (y_1..y_n)).
    """
    m, n = R.size, R.arity
    table = R.table
    strides = R.strides
    for p, xs in enumerate(product(range(m), repeat=n - 1)):
        phi = table[p * m : (p + 1) * m]
        for yidx, ys in enumerate(product(range(m), repeat=n)):
            lhs = phi[table[yidx]]
            rhs = table[sum(phi[y] * s for y, s in zip(ys, strides))]
            if lhs != rhs:
                return False, (xs, ys)
    return True, None


def check_translation_bijective(R: FiniteNRack):
    """Returns (True, None) or (False, first prefix whose row is not a bijection)."""
    m = R.size
    for p, xs in enumerate(product(range(m), repeat=R.arity - 1)):
        row = R.table[p * m : (p + 1) * m]
        if len(set(row)) != m:
            return False, xs
    return True, None


def check_pointed(R: FiniteNRack) -> bool:
    """Both pointedness equations for the declared basepoint:
    [b,...,b,y] = y for all y, and [x_1,...,x_{n-1},b] = b for all prefixes."""
    if R.basepoint is None:
        raise ValueError("no basepoint declared")
    b = R.basepoint
    row = R.translation((b,) * (R.arity - 1))
    if any(row[y] != y for y in range(R.size)):
        return False
    return all(R.translation(xs)[b] == b for xs in R.prefixes())


def _check_weak_nquandle(R: FiniteNRack) -> bool:
    return all(R.bracket(*(x,) * R.arity) == x for x in range(R.size))


def _check_nquandle(R: FiniteNRack) -> bool:
    # [x_1,...,x_{n-1},y] = y whenever x_i = y for some i in 1..n-1.
    for xs in R.prefixes():
        row = R.translation(xs)
        if any(row[y] != y for y in set(xs)):
            return False
    return True


def _check_involutive(R: FiniteNRack) -> bool:
    # [x_1,...,x_{n-1},[x_1,...,x_{n-1},y]] = y for all prefixes and y.
    for xs in R.prefixes():
        row = R.translation(xs)
        if any(row[row[y]] != y for y in range(R.size)):
            return False
    return True


def classify(R: FiniteNRack) -> Classification:
    """Evaluate all structure flags by exhaustive check.

    All flags other than is_nrack are forced False when the table is not
    an n-rack; pointedness is reported as None when no basepoint is set.
    """
    dist_ok, _ = check_left_distributive(R)
    bij_ok, _ = check_translation_bijective(R)
    is_nrack = dist_ok and bij_ok
    if not is_nrack:
        pointed = None if R.basepoint is None else False
        return Classification(False, pointed, False, False, False, False)
    pointed = None if R.basepoint is None else check_pointed(R)
    weak = _check_weak_nquandle(R)
    quandle = weak and _check_nquandle(R)
    involutive = _check_involutive(R)
    return Classification(
        is_nrack=True,
        is_pointed=pointed,
        is_weak_nquandle=weak,
        is_nquandle=quandle,
        is_weak_nkei=weak and involutive,
        is_nkei=quandle and involutive,
    )


def validate(R: FiniteNRack) -> ValidationReport:
    """classify plus the first counterexample for each failed n-rack axiom."""
    dist_ok, dist_witness = check_left_distributive(R)
    bij_ok, bij_witness = check_translation_bijective(R)
    return ValidationReport(
        classification=classify(R),
        distributivity_witness=None if dist_ok else dist_witness,
        bijectivity_witness=None if bij_ok else bij_witness,
    )


def is_homomorphism(f, R: FiniteNRack, S: FiniteNRack, pointed: bool = False) -> bool:
    """Whether f (a map carrier(R) -> carrier(S), indexable by element) satisfies
    f([x_1,...,x_n]_R) = [f(x_1),...,f(x_n)]_S on all tuples.

    With pointed=True additionally requires f(basepoint_R) = basepoint_S.
    """
    if R.arity != S.arity:
        raise ValueError(f"arity mismatch: {R.arity} != {S.arity}")
    f = tuple(f[x] for x in range(R.size))
    if any(not (0 <= v < S.size) for v in f):
        raise ValueError("map image outside target carrier")
    if pointed:
        if R.basepoint is None or S.basepoint is None:
            raise ValueError("pointed comparison requires basepoints on both sides")
        if f[R.basepoint] != S.basepoint:
            return False
    for xs in product(range(R.size), repeat=R.arity):
        if f[R.bracket(*xs)] != S.bracket(*(f[x] for x in xs)):
            return False
    return True


def cycle_type(perm) -> tuple[int, ...]:
    """Sorted cycle lengths of a permutation given as an image list."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def translation_cycle_types(R: FiniteNRack):
    """Multiset (sorted tuple) of cycle types over all translation rows.

    Invariant under isomorphism, used to prune the isomorphism search.
    """
    return tuple(sorted(cycle_type(R.translation(xs)) for xs in R.prefixes()))


def _element_invariant(R: FiniteNRack, x: int):
    diag = R.translation((x,) * (R.arity - 1))
    return (cycle_type(diag), diag[x] == x)


def find_isomorphism(R: FiniteNRack, S: FiniteNRack):
    """A bijective homomorphism R -> S as an image tuple, or None.

    Backtracking over carrier bijections; candidate images are pruned by
    per-element translation cycle types and partial tuples are re-checked
    after each assignment.  find_isomorphism(R, R) always succeeds.
    """
    if R.arity != S.arity:
        raise ValueError(f"arity mismatch: {R.arity} != {S.arity}")
    if R.size != S.size:
        return None
    if translation_cycle_types(R) != translation_cycle_types(S):
        return None
    m, n = R.size, R.arity
    inv_R = [_element_invariant(R, x) for x in range(m)]
    inv_S = [_element_invariant(S, x) for x in range(m)]
    f: list[int | None] = [None] * m
    used = [False] * m

    def consistent(assigned):
        for xs in product(assigned, repeat=n):
            v = R.bracket(*xs)
            if f[v] is None:
                continue
            if f[v] != S.bracket(*(f[x] for x in xs)):
                return False
        return True

    def extend(x):
        if x == m:
            return True
        for y in range(m):
            if used[y] or inv_R[x] != inv_S[y]:
                continue
            f[x] = y
            used[y] = True
            if consistent(range(x + 1)) and extend(x + 1):
                return True
            f[x] = None
            used[y] = False
        return False

    if extend(0):
        return tuple(f)
    return None


def inner_map(R: FiniteNRack, args) -> InnerMap:
    """The permutation y -> [args, y] for a validated n-rack."""
    args = tuple(args)
    if len(args) != R.arity - 1:
        raise ValueError(f"inner map takes {R.arity - 1} arguments")
    if any(not (0 <= a < R.size) for a in args):
        raise ValueError("invalid argument element")
    return InnerMap(source=R, arguments=args, permutation=R.translation(args))


def check_inner_is_automorphism(R: FiniteNRack, args) -> bool:
    """phi(args)([y_1,...,y_n]) = [phi(args)(y_1),...,phi(args)(y_n)] on all tuples.

    Must hold on every valid n-rack; serves as a cross-check of the axiom
    verifier.
    """
    phi = inner_map(R, args).permutation
    return is_homomorphism(phi, R, R)


def orbits(R: FiniteNRack) -> list[list[int]]:
    """Partition of the carrier into orbits of the group generated by all
    inner-map permutations.  Orbits are sorted, and listed by least element."""
    parent = list(range(R.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for xs in R.prefixes():
        row = R.translation(xs)
        for y in range(R.size):
            union(y, row[y])
    groups: dict[int, list[int]] = {}
    for x in range(R.size):
        groups.setdefault(find(x), []).append(x)
    return [sorted(groups[root]) for root in sorted(groups)]
