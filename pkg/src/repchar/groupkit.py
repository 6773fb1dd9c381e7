"""Free groups and their homomorphisms, finite groups, the cyclic bar
construction, and degreewise-free simplicial group models.

Free-group words are tuples of nonzero signed integers: the letter ``k+1``
is the k-th generator, ``-(k+1)`` its inverse.  Words are kept reduced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .exactlin import (
    AbelianGroup,
    IntegerChainComplex,
    IntegerMatrix,
    InputError,
    InvariantError,
    smith_normal_form,
)


# ---------------------------------------------------------------------------
# free words
# ---------------------------------------------------------------------------

def reduce_word(letters):
    """Freely reduce a word.

    >>> reduce_word([1, 2, -2, 3])
    (1, 3)
    >>> reduce_word([])
    ()
    """
    out = []
    for x in letters:
        if x == 0:
            raise InputError("0 is not a valid letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(int(x))
    return tuple(out)


def word_mul(*words):
    out = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def word_inv(word):
    return tuple(-x for x in reversed(word))


def word_pow(word, k):
    if k < 0:
        return word_pow(word_inv(word), -k)
    out = ()
    for _ in range(k):
        out = word_mul(out, word)
    return out


def generator(i):
    """The one-letter word for generator i (0-based)."""
    return (i + 1,)


def exponent_sums(word, rank):
    """Abelianized image of a word in Z^rank."""
    out = [0] * rank
    for x in word:
        idx = abs(x) - 1
        if idx >= rank:
            raise InputError(f"letter {x} exceeds rank {rank}")
        out[idx] += 1 if x > 0 else -1
    return tuple(out)


def substitute(word, images):
    """Apply the homomorphism sending generator k to images[k]."""
    parts = []
    for x in word:
        img = images[abs(x) - 1]
        parts.append(img if x > 0 else word_inv(img))
    return word_mul(*parts)


# ---------------------------------------------------------------------------
# homomorphisms of finitely generated free groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    """A homomorphism between free groups, given on ordered generators."""

    source_rank: int
    target_rank: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source_rank:
            raise InputError("one image per source generator required")
        object.__setattr__(self, "images",
                           tuple(reduce_word(w) for w in self.images))
        for w in self.images:
            for x in w:
                if abs(x) > self.target_rank:
                    raise InputError("image letter out of range")

    @classmethod
    def identity(cls, rank):
        return cls(rank, rank, tuple(generator(i) for i in range(rank)))

    def apply(self, word):
        return substitute(word, self.images)

    def abelianize(self):
        """Integral matrix of the induced map Z^source -> Z^target."""
        cols = [exponent_sums(w, self.target_rank) for w in self.images]
        return IntegerMatrix(
            [[cols[j][i] for j in range(self.source_rank)]
             for i in range(self.target_rank)],
            rows=self.target_rank, cols=self.source_rank)

    def is_identity(self):
        return (self.source_rank == self.target_rank
                and all(self.images[i] == generator(i)
                        for i in range(self.source_rank)))


def compose_hom(g, f):
    """g after f."""
    if f.target_rank != g.source_rank:
        raise InputError("rank mismatch in composition")
    return GroupHom(f.source_rank, g.target_rank,
                    tuple(g.apply(w) for w in f.images))


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupPresentation:
    rank: int
    relators: tuple

    def __post_init__(self):
        object.__setattr__(self, "relators",
                           tuple(reduce_word(r) for r in self.relators))
        for r in self.relators:
            for x in r:
                if abs(x) > self.rank:
                    raise InputError("relator letter out of range")

    def relator_matrix(self):
        """Exponent matrix, one column per relator."""
        cols = [exponent_sums(r, self.rank) for r in self.relators]
        return IntegerMatrix(
            [[cols[j][i] for j in range(len(cols))] for i in range(self.rank)],
            rows=self.rank, cols=len(cols))


class LatticeQuotient:
    """Z^n modulo the column lattice of a relation matrix, with canonical
    coordinates: torsion residues first (moduli d_j > 1), free coordinates
    last (modulus 0)."""

    def __init__(self, relations):
        self.ambient_rank = relations.rows
        snf = smith_normal_form(relations)
        self._left = snf.left
        keep = []
        moduli = []
        for j, d in enumerate(snf.factors):
            if d > 1:
                keep.append(j)
                moduli.append(d)
        for j in range(len(snf.factors), relations.rows):
            keep.append(j)
            moduli.append(0)
        self._keep = keep
        self.moduli = tuple(moduli)
        self.group = AbelianGroup(
            relations.rows - len(snf.factors),
            tuple(d for d in snf.factors if d > 1))

    def project(self, vec):
        """Coordinates of a lattice vector in the quotient."""
        y = self._left.apply(vec)
        out = []
        for j, d in zip(self._keep, self.moduli):
            out.append(y[j] % d if d else y[j])
        return tuple(out)


# ---------------------------------------------------------------------------
# finite groups
# ---------------------------------------------------------------------------

class FiniteGroup:
    """A finite group given by its multiplication table.

    table[a][b] is the index of the product a*b.
    """

    def __init__(self, labels, table, identity=0, name=None, check=True):
        self.labels = list(labels)
        self.table = [list(r) for r in table]
        self.identity = identity
        self.name = name or "G"
        if check:
            self.validate()
        self._inverse = None

    @property
    def order(self):
        return len(self.labels)

    def validate(self):
        n = len(self.labels)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InputError("multiplication table has wrong shape")
        for r in self.table:
            for v in r:
                if not (0 <= v < n):
                    raise InputError("table entry out of range")
        if not (0 <= self.identity < n):
            raise InputError("identity index out of range")
        e = self.identity
        for a in range(n):
            if self.table[e][a] != a or self.table[a][e] != a:
                raise InputError(f"identity law fails at element {a}")
        for a in range(n):
            if e not in self.table[a]:
                raise InputError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise InputError(
                            f"associativity fails at triple ({a},{b},{c})")

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        if self._inverse is None:
            self._inverse = [self.table[x].index(self.identity)
                             for x in range(self.order)]
        return self._inverse[a]

    def product(self, elements):
        acc = self.identity
        for x in elements:
            acc = self.table[acc][x]
        return acc

    def conjugate(self, g, h):
        """h g h^-1."""
        return self.product([h, g, self.inv(h)])

    def evaluate_word(self, word, assignment):
        """Evaluate a free word at a tuple of group elements."""
        acc = self.identity
        for x in word:
            g = assignment[abs(x) - 1]
            acc = self.table[acc][g if x > 0 else self.inv(g)]
        return acc

    def conjugacy_classes(self):
        seen = [False] * self.order
        classes = []
        for g in range(self.order):
            if seen[g]:
                continue
            orbit = sorted({self.conjugate(g, h) for h in range(self.order)})
            for x in orbit:
                seen[x] = True
            classes.append(orbit)
        return classes

    def commutator_subgroup(self):
        gens = {self.product([a, b, self.inv(a), self.inv(b)])
                for a in range(self.order) for b in range(self.order)}
        sub = set(gens) | {self.identity}
        frontier = list(sub)
        while frontier:
            x = frontier.pop()
            for y in list(sub):
                for z in (self.table[x][y], self.table[y][x]):
                    if z not in sub:
                        sub.add(z)
                        frontier.append(z)
        return sorted(sub)

    def abelianization(self):
        """(AbelianGroup, moduli, coords) with coords[g] the canonical
        coordinate tuple of the image of g in the abelianization."""
        comm = self.commutator_subgroup()
        comm_set = set(comm)
        coset_of = {}
        cosets = []
        for g in range(self.order):
            if g in coset_of:
                continue
            members = sorted(self.table[g][h] for h in comm)
            idx = len(cosets)
            cosets.append(members)
            for m in members:
                if m in coset_of and coset_of[m] != idx:
                    raise InvariantError("coset partition failed")
                coset_of[m] = idx
        k = len(cosets)
        qtable = [[coset_of[self.table[cosets[a][0]][cosets[b][0]]]
                   for b in range(k)] for a in range(k)]
        relations = []
        for a in range(k):
            for b in range(k):
                col = [0] * k
                col[a] += 1
                col[b] += 1
                col[qtable[a][b]] -= 1
                relations.append(col)
        rel = IntegerMatrix([[relations[j][i] for j in range(len(relations))]
                             for i in range(k)], rows=k, cols=len(relations))
        quot = LatticeQuotient(rel)
        if quot.group.free_rank:
            raise InvariantError("abelianization of a finite group is finite")
        coords = []
        for g in range(self.order):
            e = [0] * k
            e[coset_of[g]] = 1
            coords.append(quot.project(e))
        return quot.group, quot.moduli, coords

    # -- constructors ------------------------------------------------------

    @classmethod
    def trivial(cls):
        return cls(["e"], [[0]], 0, name="1")

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise InputError("cyclic group order must be >= 1")
        labels = [f"g{i}" if i else "e" for i in range(n)]
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(labels, table, 0, name=f"Z/{n}")

    @classmethod
    def symmetric(cls, n):
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms]
                 for p in perms]
        labels = ["".join(map(str, p)) for p in perms]
        e = index[tuple(range(n))]
        return cls(labels, table, e, name=f"S{n}")

    @classmethod
    def dihedral(cls, n):
        """Order 2n: pairs (rotation, flip)."""
        elems = [(a, b) for b in (0, 1) for a in range(n)]
        index = {x: i for i, x in enumerate(elems)}

        def mul(x, y):
            a1, b1 = x
            a2, b2 = y
            return ((a1 + (a2 if b1 == 0 else -a2)) % n, (b1 + b2) % 2)

        table = [[index[mul(x, y)] for y in elems] for x in elems]
        labels = [f"r{a}" + ("s" if b else "") for a, b in elems]
        return cls(labels, table, 0, name=f"D{n}")

    @classmethod
    def quaternion(cls):
        """The quaternion group of order 8."""
        units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

        def split(u):
            return (-1 if u.startswith("-") else 1, u.lstrip("-"))

        base = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"),
                ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
                ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
                ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}

        def mul(u, v):
            su, au = split(u)
            sv, av = split(v)
            s, a = base[(au, av)]
            s *= su * sv
            return a if s == 1 else f"-{a}"

        index = {u: i for i, u in enumerate(units)}
        table = [[index[mul(u, v)] for v in units] for u in units]
        return cls(units, table, 0, name="Q8")

    @classmethod
    def direct_product(cls, g, h):
        elems = [(a, b) for a in range(g.order) for b in range(h.order)]
        index = {x: i for i, x in enumerate(elems)}
        table = [[index[(g.table[a1][a2], h.table[b1][b2])]
                  for (a2, b2) in elems] for (a1, b1) in elems]
        labels = [f"{g.labels[a]},{h.labels[b]}" for a, b in elems]
        e = index[(g.identity, h.identity)]
        return cls(labels, table, e, name=f"{g.name}x{h.name}")

    @classmethod
    def from_dict(cls, data):
        try:
            labels = data["elements"]
            table = data["table"]
            identity = data.get("identity", 0)
        except (KeyError, TypeError) as exc:
            raise InputError(f"group table needs fields elements/table: {exc}")
        if isinstance(identity, str):
            identity = labels.index(identity)
        if table and table[0] and isinstance(table[0][0], str):
            index = {lab: i for i, lab in enumerate(labels)}
            table = [[index[v] for v in row] for row in table]
        return cls(labels, table, identity, name=data.get("name"))

    def to_dict(self):
        return {"elements": self.labels, "table": self.table,
                "identity": self.identity, "name": self.name}


# ---------------------------------------------------------------------------
# cyclic bar construction of a finite group
# ---------------------------------------------------------------------------

class CyclicBarLevel:
    """Level q of the cyclic bar construction: tuples in Gamma^(q+1) with
    face, degeneracy and cyclic operators."""

    def __init__(self, group, q):
        if q < 0:
            raise InputError("level must be nonnegative")
        self.group = group
        self.q = q

    def tuples(self):
        return list(itertools.product(range(self.group.order), repeat=self.q + 1))

    def face(self, i, tup):
        q = self.q
        if not 0 <= i <= q:
            raise InputError("face index out of range")
        g = self.group
        if i < q:
            return tup[:i] + (g.mul(tup[i], tup[i + 1]),) + tup[i + 2:]
        return (g.mul(tup[q], tup[0]),) + tup[1:q]

    def degeneracy(self, j, tup):
        if not 0 <= j <= self.q:
            raise InputError("degeneracy index out of range")
        return tup[:j + 1] + (self.group.identity,) + tup[j + 1:]

    def cycle(self, tup):
        return (tup[-1],) + tup[:-1]


def cyclic_bar_level(group, q):
    return CyclicBarLevel(group, q)


def yoneda_action(group, hom):
    """The functor sending the free group <n> to Gamma^n, applied to a
    homomorphism: Gamma^(target) -> Gamma^(source), componentwise word
    evaluation."""

    def act(tup):
        if len(tup) != hom.target_rank:
            raise InputError("tuple length mismatch")
        return tuple(group.evaluate_word(w, tup) for w in hom.images)

    return act


def pullback_via_psi_cyc(group, word):
    """Action of a word of cyclic-category-opposite generators on bar tuples,
    realized through the free-group presentation functor.

    `word` is a sequence of generators as in crossedcat (applied right to
    left); returns (source_level, target_level, callable on tuples).
    """
    from . import crossedcat

    n, m = crossedcat.word_arities(word)
    hom = crossedcat.psi_cyc_op_word(word)
    return n, m, yoneda_action(group, hom)


# ---------------------------------------------------------------------------
# simplicial group models
# ---------------------------------------------------------------------------

@dataclass
class SimplicialGroupModel:
    """A degreewise-free simplicial group truncated at level `levels`.

    ranks[q] is the rank at level q; faces[q][i] maps level q to q-1,
    degeneracies[q][j] maps level q to q+1.
    """

    ranks: list
    faces: list
    degeneracies: list

    @property
    def levels(self):
        return len(self.ranks) - 1

    def validate(self):
        n = self.levels
        if len(self.faces) != n + 1 or len(self.degeneracies) != n + 1:
            raise InputError("face/degeneracy lists must cover every level")
        for q in range(1, n + 1):
            if len(self.faces[q]) != q + 1:
                raise InputError(f"level {q} needs {q + 1} faces")
            for h in self.faces[q]:
                if h.source_rank != self.ranks[q] or h.target_rank != self.ranks[q - 1]:
                    raise InputError(f"face rank mismatch at level {q}")
        for q in range(n):
            if len(self.degeneracies[q]) != q + 1:
                raise InputError(f"level {q} needs {q + 1} degeneracies")
            for h in self.degeneracies[q]:
                if h.source_rank != self.ranks[q] or h.target_rank != self.ranks[q + 1]:
                    raise InputError(f"degeneracy rank mismatch at level {q}")
        self._check_simplicial_identities()

    def _check_simplicial_identities(self):
        n = self.levels
        d = self.faces
        s = self.degeneracies
        for q in range(2, n + 1):
            for j in range(q + 1):
                for i in range(j):
                    if compose_hom(d[q - 1][i], d[q][j]) != \
                            compose_hom(d[q - 1][j - 1], d[q][i]):
                        raise InvariantError(
                            f"d_{i} d_{j} identity fails at level {q}")
        for q in range(n):
            for j in range(q + 1):
                for i in range(q + 2):
                    lhs = compose_hom(d[q + 1][i], s[q][j])
                    if i == j or i == j + 1:
                        if not lhs.is_identity():
                            raise InvariantError(
                                f"d_{i} s_{j} should be the identity at level {q}")
                    elif i < j:
                        rhs = compose_hom(s[q - 1][j - 1], d[q][i])
                        if lhs != rhs:
                            raise InvariantError(
                                f"d_{i} s_{j} identity fails at level {q}")
                    else:
                        rhs = compose_hom(s[q - 1][j], d[q][i - 1])
                        if lhs != rhs:
                            raise InvariantError(
                                f"d_{i} s_{j} identity fails at level {q}")
        for q in range(n - 1):
            for j in range(q + 1):
                for i in range(j + 1):
                    if compose_hom(s[q + 1][i], s[q][j]) != \
                            compose_hom(s[q + 1][j + 1], s[q][i]):
                        raise InvariantError(
                            f"s_{i} s_{j} identity fails at level {q}")

    def abelianized_complex(self):
        """Unnormalized integral chain complex of the levelwise
        abelianization; its homology gives the homotopy of the abelianized
        model (valid in degrees <= levels - 1)."""
        diffs = {}
        for q in range(1, self.levels + 1):
            mats = [h.abelianize() for h in self.faces[q]]
            acc = [[0] * self.ranks[q] for _ in range(self.ranks[q - 1])]
            for i, m in enumerate(mats):
                sign = 1 if i % 2 == 0 else -1
                for r in range(m.rows):
                    row = m.data[r]
                    arow = acc[r]
                    for c in range(m.cols):
                        arow[c] += sign * row[c]
            diffs[q] = IntegerMatrix(acc, rows=self.ranks[q - 1],
                                     cols=self.ranks[q])
        return IntegerChainComplex(self.ranks, diffs)

    def to_dict(self):
        return {
            "levels": self.levels,
            "ranks": self.ranks,
            "faces": [[list(map(list, h.images)) for h in level]
                      for level in self.faces],
            "degeneracies": [[list(map(list, h.images)) for h in level]
                             for level in self.degeneracies],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            ranks = list(data["ranks"])
            faces_raw = data["faces"]
            degs_raw = data["degeneracies"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"model needs fields ranks/faces/degeneracies: {exc}")
        n = len(ranks) - 1
        faces = [[] for _ in range(n + 1)]
        degs = [[] for _ in range(n + 1)]
        for q in range(1, n + 1):
            faces[q] = [GroupHom(ranks[q], ranks[q - 1], tuple(map(tuple, images)))
                        for images in faces_raw[q]]
        for q in range(n):
            degs[q] = [GroupHom(ranks[q], ranks[q + 1], tuple(map(tuple, images)))
                       for images in degs_raw[q]]
        return cls(ranks, faces, degs)


def constant_free_model(rank, levels):
    """The constant simplicial group on a free group of the given rank."""
    ident = GroupHom.identity(rank)
    faces = [[]] + [[ident] * (q + 1) for q in range(1, levels + 1)]
    degs = [[ident] * (q + 1) for q in range(levels)] + [[]]
    return SimplicialGroupModel([rank] * (levels + 1), faces, degs)


# -- free simplicial groups generated by cells ------------------------------

@dataclass
class Cell:
    """A generating cell: its level and the attaching word of each face.

    Faces are words whose letters are (sign, cell_id, degeneracy tuple),
    referring to basis elements one level down; an empty word is the
    identity (basepoint) element.
    """

    level: int
    face_words: list = field(default_factory=list)


def _normalize_degeneracies(js):
    """Normal form of a composite of degeneracy operators, outermost first:
    strictly decreasing indices via s_i s_j = s_{j+1} s_i (i <= j)."""
    js = list(js)
    changed = True
    while changed:
        changed = False
        for t in range(len(js) - 1):
            a, b = js[t], js[t + 1]
            if a <= b:
                js[t], js[t + 1] = b + 1, a
                changed = True
    return tuple(js)


class FreeSimplicialGroupBuilder:
    """Builds the free simplicial group generated by cells with prescribed
    attaching faces.  Level q basis: pairs (cell, J) with J a strictly
    decreasing degeneracy multi-index."""

    def __init__(self):
        self.cells = []

    def add_cell(self, level, face_words=None):
        if level > 0 and (face_words is None or len(face_words) != level + 1):
            raise InputError("a level-q cell needs q+1 face words")
        self.cells.append(Cell(level, face_words or []))
        return len(self.cells) - 1

    def build(self, levels):
        basis = []
        index = {}
        for l in range(levels + 1):
            level_basis = []
            for cid, cell in enumerate(self.cells):
                k = l - cell.level
                if k < 0:
                    continue
                for combo in itertools.combinations(range(l - 1, -1, -1), k):
                    j = tuple(sorted(combo, reverse=True))
                    index[(l, cid, j)] = len(level_basis)
                    level_basis.append((cid, j))
            basis.append(level_basis)
        ranks = [len(b) for b in basis]

        def deg_image_index(l, j, b):
            cid, js = basis[l][b]
            return index[(l + 1, cid, _normalize_degeneracies((j,) + js))]

        def apply_degeneracy(l, j, word):
            return tuple(
                (deg_image_index(l, j, abs(x) - 1) + 1) * (1 if x > 0 else -1)
                for x in word)

        face_cache = {}

        def face_word(l, i, b):
            key = (l, i, b)
            if key in face_cache:
                return face_cache[key]
            cid, js = basis[l][b]
            if not js:
                raw = self.cells[cid].face_words[i]
                letters = []
                for sign, ref_cid, ref_j in raw:
                    idx = index.get((l - 1, ref_cid, tuple(ref_j)))
                    if idx is None:
                        raise InputError(
                            f"face of cell {cid} refers to missing basis element")
                    letters.append((idx + 1) * (1 if sign > 0 else -1))
                out = reduce_word(letters)
            else:
                j = js[0]
                rest = index[(l - 1, cid, js[1:])]
                if i == j or i == j + 1:
                    out = (rest + 1,)
                elif i < j:
                    out = apply_degeneracy(l - 2, j - 1, face_word(l - 1, i, rest))
                else:
                    out = apply_degeneracy(l - 2, j, face_word(l - 1, i - 1, rest))
            face_cache[key] = out
            return out

        faces = [[]]
        for l in range(1, levels + 1):
            faces.append([
                GroupHom(ranks[l], ranks[l - 1],
                         tuple(face_word(l, i, b) for b in range(ranks[l])))
                for i in range(l + 1)])
        degs = []
        for l in range(levels):
            degs.append([
                GroupHom(ranks[l], ranks[l + 1],
                         tuple((deg_image_index(l, j, b) + 1,)
                               for b in range(ranks[l])))
                for j in range(l + 1)])
        degs.append([])
        return SimplicialGroupModel(ranks, faces, degs)


# -- reduced simplicial sets and the Milnor-style model ----------------------

@dataclass
class ReducedSimplicialSet:
    """Nondegenerate simplices of a reduced simplicial set.

    counts[d] is the number of nondegenerate d-simplices (counts[0] == 1:
    just the basepoint).  faces[d][x][i] is the i-th face of the x-th
    d-simplex, written as (J, y): the degeneracy multi-index applied to the
    nondegenerate simplex y of dimension d - 1 - len(J).
    """

    counts: list
    faces: dict = field(default_factory=dict)

    def validate(self):
        if not self.counts or self.counts[0] != 1:
            raise InputError("a reduced simplicial set has exactly one vertex")
        for d in range(1, len(self.counts)):
            for x in range(self.counts[d]):
                vals = self.faces.get((d, x))
                if vals is None or len(vals) != d + 1:
                    raise InputError(f"simplex ({d},{x}) needs {d + 1} faces")
                for j, y in vals:
                    ydim = d - 1 - len(j)
                    if ydim < 0 or ydim >= len(self.counts) or y >= self.counts[ydim]:
                        raise InputError(f"face of ({d},{x}) out of range")

    @classmethod
    def circle(cls):
        return cls([1, 1], {(1, 0): [((), 0), ((), 0)]})

    @classmethod
    def sphere(cls, n):
        """S^n with one vertex and one nondegenerate n-simplex, all of whose
        faces are degeneracies of the basepoint."""
        if n < 1:
            raise InputError("sphere dimension must be >= 1")
        counts = [1] + [0] * (n - 1) + [1]
        deg = tuple(range(n - 2, -1, -1))
        return cls(counts, {(n, 0): [(deg, 0)] * (n + 1)})

    @classmethod
    def from_dict(cls, data):
        try:
            counts = list(data["counts"])
            faces_raw = data["faces"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"simplicial set needs counts/faces: {exc}")
        faces = {}
        for key, vals in faces_raw.items():
            d, x = (int(t) for t in key.split(","))
            faces[(d, x)] = [(tuple(j), int(y)) for j, y in vals]
        return cls(counts, faces)


def milnor_model(sset, levels):
    """Free simplicial group model whose classifying space is the suspension
    of the input: level q is free on the non-basepoint q-simplices, and
    faces hitting a basepoint degeneracy collapse to the identity."""
    sset.validate()
    builder = FreeSimplicialGroupBuilder()
    cell_of = {}
    for d in range(1, len(sset.counts)):
        for x in range(sset.counts[d]):
            face_words = []
            for j, y in sset.faces[(d, x)]:
                ydim = d - 1 - len(j)
                if ydim == 0:
                    face_words.append([])  # basepoint class: identity
                else:
                    face_words.append([(1, ("pending", ydim, y), tuple(j))])
            cell_of[(d, x)] = builder.add_cell(d, face_words)
    for cell in builder.cells:
        for word in cell.face_words:
            for t, (sign, ref, j) in enumerate(word):
                if isinstance(ref, tuple) and ref[0] == "pending":
                    word[t] = (sign, cell_of[(ref[1], ref[2])], j)
    return builder.build(levels)


def torus_model(levels):
    """Hand-built degreewise-free model of the rank-2 free abelian group:
    two level-0 generators and one level-1 cell killing their commutator."""
    builder = FreeSimplicialGroupBuilder()
    x = builder.add_cell(0)
    y = builder.add_cell(0)
    builder.add_cell(1, [
        [],
        [(1, x, ()), (1, y, ()), (-1, x, ()), (-1, y, ())],
    ])
    return builder.build(levels)
