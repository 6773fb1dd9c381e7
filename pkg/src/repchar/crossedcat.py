"""The symmetric and cyclic crossed simplicial categories.

A morphism [n] -> [m] of the symmetric category is stored in tensor
notation: m+1 noncommutative monomials whose letters partition the indices
{0..n}, each index appearing exactly once.  Composition is substitution of
monomials for letters.  The cyclic-opposite category is the subfamily cut
out by `is_cyclic`, realized operationally as the composition closure of
the generator images (cached per arity bound).

Morphisms map to homomorphisms of free groups by reading monomials as
words; the abelianized form of such a homomorphism is a 0/1 incidence
matrix with exactly one nonzero entry per row.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .exactlin import IntegerMatrix, InputError, InvariantError
from .groupkit import GroupHom, compose_hom


# ---------------------------------------------------------------------------
# morphisms in tensor notation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaSMorphism:
    """Tensor normal form of a symmetric-category morphism [n] -> [m]."""

    monomials: tuple

    def __post_init__(self):
        object.__setattr__(self, "monomials",
                           tuple(tuple(m) for m in self.monomials))
        letters = [x for mono in self.monomials for x in mono]
        if not letters:
            raise InputError("a morphism needs a nonempty source object")
        if sorted(letters) != list(range(len(letters))):
            raise InputError(
                "monomials must contain each source index exactly once")

    @property
    def source_arity(self):
        return sum(len(m) for m in self.monomials) - 1

    @property
    def target_arity(self):
        return len(self.monomials) - 1

    def concatenation(self):
        return tuple(x for mono in self.monomials for x in mono)

    def is_identity(self):
        return all(m == (j,) for j, m in enumerate(self.monomials))

    def __str__(self):
        return format_morphism(self)


def identity_morphism(n):
    return DeltaSMorphism(tuple((j,) for j in range(n + 1)))


def compose(f1, f2):
    """f1 after f2: substitute the monomials of f2 for the letters of f1.

    >>> f1 = parse_morphism("1|x0|1|x3x2x1")
    >>> f2 = parse_morphism("x2x1|x4|1|x0x3")
    >>> format_morphism(compose(f1, f2))
    '1|x2x1|1|x0x3x4'
    """
    if f1.source_arity != f2.target_arity:
        raise InputError("arity mismatch in composition")
    blocks = f2.monomials
    return DeltaSMorphism(tuple(
        tuple(x for j in mono for x in blocks[j]) for mono in f1.monomials))


def parse_morphism(text):
    """Parse tensor notation like ``x1x0|x3x4|1|x2``."""
    monos = []
    for part in text.strip().split("|"):
        part = part.strip()
        if part in ("1", ""):
            monos.append(())
            continue
        letters = re.findall(r"x(\d+)", part)
        if "".join(f"x{d}" for d in letters) != part.replace(" ", ""):
            raise InputError(f"cannot parse monomial {part!r}")
        monos.append(tuple(int(d) for d in letters))
    return DeltaSMorphism(tuple(monos))


def format_morphism(f):
    parts = []
    for mono in f.monomials:
        parts.append("".join(f"x{i}" for i in mono) if mono else "1")
    return "|".join(parts)


def enumerate_morphisms(n, m):
    """All morphisms [n] -> [m], by inserting indices one at a time."""
    monos = [[] for _ in range(m + 1)]

    def rec(k):
        if k == n + 1:
            yield DeltaSMorphism(tuple(tuple(b) for b in monos))
            return
        for j in range(m + 1):
            b = monos[j]
            for p in range(len(b) + 1):
                b.insert(p, k)
                yield from rec(k + 1)
                b.pop(p)

    yield from rec(0)


def count_morphisms(n, m):
    """|Hom([n],[m])|: arrangements of n+1 letters into m+1 ordered lists."""
    total = 1
    for t in range(n + 1):
        total *= m + 1 + t
    return total


def enumerate_automorphisms(n):
    """The (n+1)! automorphisms of [n] (singleton monomials)."""
    for perm in itertools.permutations(range(n + 1)):
        yield DeltaSMorphism(tuple((i,) for i in perm))


# ---------------------------------------------------------------------------
# unique monotone/permutation factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotonePermutationFactorization:
    """f = g o sigma with g: [n] -> [m] nondecreasing and sigma a
    permutation of the source; sigma[i] is the position of letter i in the
    concatenated word."""

    monotone: tuple
    permutation: tuple
    target_arity: int

    def __post_init__(self):
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise InputError("permutation component is not a bijection")
        if any(self.monotone[i] > self.monotone[i + 1]
               for i in range(len(self.monotone) - 1)):
            raise InputError("monotone component is not nondecreasing")
        if self.monotone and not 0 <= self.monotone[-1] <= self.target_arity:
            raise InputError("monotone component exceeds the target arity")


def factorize(f):
    """Unique factorization of a symmetric morphism.

    >>> fact = factorize(parse_morphism("x1x0|x3x4|1|x2"))
    >>> fact.monotone
    (0, 0, 1, 1, 3)
    >>> fact.permutation
    (1, 0, 4, 2, 3)
    """
    n = f.source_arity
    g = []
    sigma = [None] * (n + 1)
    pos = 0
    for j, mono in enumerate(f.monomials):
        for x in mono:
            g.append(j)
            sigma[x] = pos
            pos += 1
    return MonotonePermutationFactorization(tuple(g), tuple(sigma),
                                            f.target_arity)


def recompose(fact):
    """Rebuild the morphism from its factorization."""
    monos = [[] for _ in range(fact.target_arity + 1)]
    by_position = sorted(range(len(fact.permutation)),
                         key=lambda i: fact.permutation[i])
    for p, i in enumerate(by_position):
        monos[fact.monotone[p]].append(i)
    return DeltaSMorphism(tuple(tuple(b) for b in monos))


# ---------------------------------------------------------------------------
# generators of the opposite cyclic category and their symmetric images
# ---------------------------------------------------------------------------

def generator_arities(gen):
    kind = gen[0]
    n = gen[1]
    if kind == "d":
        if n < 1 or not 0 <= gen[2] <= n:
            raise InputError(f"bad face generator {gen}")
        return (n, n - 1)
    if kind == "s":
        if not 0 <= gen[2] <= n:
            raise InputError(f"bad degeneracy generator {gen}")
        return (n, n + 1)
    if kind == "t":
        return (n, n)
    raise InputError(f"unknown generator kind {gen!r}")


def word_arities(word):
    """Source and target of a composable generator word (rightmost first)."""
    if not word:
        raise InputError("empty generator word")
    src = generator_arities(word[-1])[0]
    cur = src
    for gen in reversed(word):
        a, b = generator_arities(gen)
        if a != cur:
            raise InputError("generator word is not composable")
        cur = b
    return (src, cur)


def cyclic_to_symmetric(gen):
    """Tensor form of a cyclic-opposite generator inside the symmetric
    category: faces merge adjacent letters (the last one wrapping around),
    degeneracies insert an empty monomial, the cyclic operator rotates."""
    kind, n = gen[0], gen[1]
    if kind == "d":
        i = gen[2]
        if i < n:
            monos = [(k,) for k in range(i)] + [(i, i + 1)] + \
                    [(k,) for k in range(i + 2, n + 1)]
        else:
            monos = [(n, 0)] + [(k,) for k in range(1, n)]
        return DeltaSMorphism(tuple(monos))
    if kind == "s":
        j = gen[2]
        monos = [(k,) for k in range(j + 1)] + [()] + \
                [(k,) for k in range(j + 1, n + 1)]
        return DeltaSMorphism(tuple(monos))
    if kind == "t":
        return DeltaSMorphism(((n,),) + tuple((k,) for k in range(n)))
    raise InputError(f"unknown generator kind {gen!r}")


def cyclic_word_to_symmetric(word):
    word_arities(word)
    out = None
    for gen in word:
        img = cyclic_to_symmetric(gen)
        out = img if out is None else compose(out, img)
    return out


def cyclic_generator_hom(gen):
    """Free-group homomorphism attached to a generator of the opposite
    cyclic category (equivalently, to the dual generator of the cyclic
    category): for the face d_i the target generators multiply as
    (x_0, ..., x_i x_{i+1}, ..., x_n), with the last face wrapping to
    x_n x_0; degeneracies send one generator to 1; the cyclic operator
    rotates the generators."""
    kind, n = gen[0], gen[1]
    if kind == "d":
        i = gen[2]
        if i < n:
            images = [generator_word(k) for k in range(i)]
            images.append((i + 1, i + 2))
            images.extend(generator_word(k + 1) for k in range(i + 1, n))
        else:
            images = [(n + 1, 1)]
            images.extend(generator_word(k) for k in range(1, n))
        return GroupHom(n, n + 1, tuple(images))
    if kind == "s":
        j = gen[2]
        images = [generator_word(k) for k in range(j + 1)]
        images.append(())
        images.extend(generator_word(k) for k in range(j + 1, n + 1))
        return GroupHom(n + 2, n + 1, tuple(images))
    if kind == "t":
        images = [(n + 1,)] + [generator_word(k - 1) for k in range(1, n + 1)]
        return GroupHom(n + 1, n + 1, tuple(images))
    raise InputError(f"unknown generator kind {gen!r}")


def generator_word(k):
    return (k + 1,)


def psi_cyc_op_word(word):
    """Free-group homomorphism of a composable generator word (rightmost
    applied first); contravariant, so the rightmost generator contributes
    the innermost homomorphism."""
    word_arities(word)
    out = None
    for gen in word:
        h = cyclic_generator_hom(gen)
        out = h if out is None else compose_hom(h, out)
    return out


def to_free_group_hom(f):
    """Monomials of a symmetric morphism [n] -> [m], read as words, give a
    homomorphism of free groups of ranks m+1 -> n+1 (contravariant)."""
    images = tuple(tuple(x + 1 for x in mono) for mono in f.monomials)
    return GroupHom(f.target_arity + 1, f.source_arity + 1, images)


def incidence_matrix(f):
    """(n+1) x (m+1) 0/1 matrix: entry (i, j) = 1 iff index i lies in
    monomial j.  Every row has exactly one nonzero entry."""
    n, m = f.source_arity, f.target_arity
    data = [[0] * (m + 1) for _ in range(n + 1)]
    for j, mono in enumerate(f.monomials):
        for i in mono:
            data[i][j] = 1
    return IntegerMatrix(data, rows=n + 1, cols=m + 1)


@dataclass(frozen=True)
class DecoratedObject:
    """A free-group object with an integer decoration vector."""

    rank: int
    decoration: tuple

    def __post_init__(self):
        if len(self.decoration) != self.rank:
            raise InputError("decoration length must equal the rank")


def decorated_lift(f, weight):
    """Lift a symmetric morphism against constant decorations.

    Returns (hom, source, target): the underlying free-group homomorphism
    together with the decorated objects (<m+1>; w..w) -> (<n+1>; w..w).
    The incidence matrix preserves constant vectors because each of its
    rows has exactly one 1; violation is a structural bug.
    """
    mat = incidence_matrix(f)
    vec = (weight,) * (f.target_arity + 1)
    if mat.apply(vec) != (weight,) * (f.source_arity + 1):
        raise InvariantError("incidence matrix does not preserve the decoration")
    hom = to_free_group_hom(f)
    src = DecoratedObject(f.target_arity + 1, vec)
    tgt = DecoratedObject(f.source_arity + 1, (weight,) * (f.source_arity + 1))
    return hom, src, tgt


# ---------------------------------------------------------------------------
# the cyclic subfamily
# ---------------------------------------------------------------------------

def all_generators(max_arity):
    """Every cyclic-opposite generator with both arities <= max_arity."""
    gens = []
    for n in range(1, max_arity + 1):
        for i in range(n + 1):
            gens.append(("d", n, i))
    for n in range(max_arity):
        for j in range(n + 1):
            gens.append(("s", n, j))
    for n in range(max_arity + 1):
        gens.append(("t", n))
    return gens


@lru_cache(maxsize=None)
def cyclic_morphism_table(max_arity):
    """Composition closure of the generator images, per arity pair.

    The closure is complete within the bound: every cyclic morphism factors
    as a cycle power after a monotone dual, so intermediate arities never
    exceed max(source, target).  The expected cardinality per pair is
    checked; a mismatch means the closure (or the theory) broke.
    """
    table = {}

    def bucket(f):
        return table.setdefault((f.source_arity, f.target_arity), set())

    frontier = []
    for n in range(max_arity + 1):
        f = identity_morphism(n)
        bucket(f).add(f)
        frontier.append(f)
    gen_images = [cyclic_to_symmetric(g) for g in all_generators(max_arity)]
    gen_images = [g for g in gen_images if g.target_arity <= max_arity]
    while frontier:
        f = frontier.pop()
        for g in gen_images:
            if g.source_arity != f.target_arity:
                continue
            h = compose(g, f)
            b = bucket(h)
            if h not in b:
                b.add(h)
                frontier.append(h)
    for (n, m), morphisms in table.items():
        expected = (m + 1) * comb(n + m + 1, m + 1)
        if len(morphisms) != expected:
            raise InvariantError(
                f"cyclic closure for [{n}]->[{m}] has {len(morphisms)} "
                f"elements, expected {expected}")
    return {k: frozenset(v) for k, v in table.items()}


def is_cyclic(f, max_arity=4):
    """Membership in the cyclic subfamily, via the cached closure table."""
    bound = max(f.source_arity, f.target_arity, max_arity)
    table = cyclic_morphism_table(bound)
    return f in table.get((f.source_arity, f.target_arity), frozenset())


def cyclic_morphisms(n, m, max_arity=None):
    bound = max(n, m, max_arity or 0)
    return cyclic_morphism_table(bound).get((n, m), frozenset())


def automorphism_counts(n, max_arity=None):
    """(symmetric, cyclic) automorphism counts of [n]."""
    sym = sum(1 for _ in enumerate_automorphisms(n))
    cyc = sum(1 for f in cyclic_morphisms(n, n, max_arity=max_arity)
              if all(len(m) == 1 for m in f.monomials))
    return sym, cyc
