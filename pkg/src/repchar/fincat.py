"""Finite categories and functor homology over them.

Categories are given by explicit object/morphism lists with a composition
table.  Module-valued functors carry exact rational matrices.  Tor is
computed from the normalized two-sided bar complex (chains of composable
non-identity morphisms); the category of elements, nerves, and the
restriction machinery provide the linearized homotopy-colimit checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    ChainComplex,
    InputError,
    InvariantError,
    SparseRationalMatrix,
    induced_map_on_homology,
)


# ---------------------------------------------------------------------------
# finite categories
# ---------------------------------------------------------------------------

class FinCategory:
    """A finite category: indexed objects and morphisms, explicit
    composition table (g, f) -> g∘f for f: a -> b, g: b -> c."""

    def __init__(self, objects, sources, targets, identities, table,
                 check=True):
        self.objects = list(objects)
        self.sources = list(sources)
        self.targets = list(targets)
        self.identities = list(identities)
        self.table = dict(table)
        if check:
            self.validate()

    @property
    def object_count(self):
        return len(self.objects)

    @property
    def morphism_count(self):
        return len(self.sources)

    def source(self, m):
        return self.sources[m]

    def target(self, m):
        return self.targets[m]

    def is_identity(self, m):
        return self.identities[self.sources[m]] == m

    def compose(self, g, f):
        """g after f."""
        if self.targets[f] != self.sources[g]:
            raise InputError("morphisms are not composable")
        return self.table[(g, f)]

    def hom(self, a, b):
        return [m for m in range(self.morphism_count)
                if self.sources[m] == a and self.targets[m] == b]

    def nonidentity_morphisms(self):
        return [m for m in range(self.morphism_count) if not self.is_identity(m)]

    def validate(self):
        n_obj = len(self.objects)
        n_mor = len(self.sources)
        if len(self.targets) != n_mor:
            raise InputError("sources/targets length mismatch")
        if len(self.identities) != n_obj:
            raise InputError("one identity per object required")
        for c, e in enumerate(self.identities):
            if not (0 <= e < n_mor) or self.sources[e] != c or self.targets[e] != c:
                raise InputError(f"identity of object {c} is not an endomorphism")
        for (g, f), h in self.table.items():
            if self.targets[f] != self.sources[g]:
                raise InputError("composition table contains non-composable pair")
            if self.sources[h] != self.sources[f] or self.targets[h] != self.targets[g]:
                raise InputError("composite has wrong endpoints")
        for f in range(n_mor):
            for g in range(n_mor):
                if self.targets[f] == self.sources[g] and (g, f) not in self.table:
                    raise InputError(f"missing composite for pair ({g},{f})")
        for f in range(n_mor):
            if self.table[(self.identities[self.targets[f]], f)] != f:
                raise InputError(f"left identity law fails for morphism {f}")
            if self.table[(f, self.identities[self.sources[f]])] != f:
                raise InputError(f"right identity law fails for morphism {f}")
        for f in range(n_mor):
            for g in range(n_mor):
                if self.targets[f] != self.sources[g]:
                    continue
                gf = self.table[(g, f)]
                for h in range(n_mor):
                    if self.targets[g] != self.sources[h]:
                        continue
                    if self.table[(h, gf)] != self.table[(self.table[(h, g)], f)]:
                        raise InputError(
                            f"associativity fails on ({h},{g},{f})")

    # -- constructors --------------------------------------------------------

    @classmethod
    def terminal(cls):
        return cls(["*"], [0], [0], [0], {(0, 0): 0})

    @classmethod
    def one_object_from_group(cls, group):
        n = group.order
        table = {(g, f): group.mul(g, f) for g in range(n) for f in range(n)}
        return cls(["*"], [0] * n, [0] * n, [group.identity], table)

    @classmethod
    def from_poset(cls, elements, pairs):
        """Poset category: one morphism a -> b for each related pair a <= b.

        `pairs` are the generating relations; reflexive-transitive closure
        is taken.
        """
        n = len(elements)
        leq = [[False] * n for _ in range(n)]
        for i in range(n):
            leq[i][i] = True
        for a, b in pairs:
            leq[a][b] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        morphs = [(a, b) for a in range(n) for b in range(n) if leq[a][b]]
        index = {ab: m for m, ab in enumerate(morphs)}
        sources = [a for a, _ in morphs]
        targets = [b for _, b in morphs]
        identities = [index[(a, a)] for a in range(n)]
        table = {}
        for g, (b, c) in enumerate(morphs):
            for f, (a, b2) in enumerate(morphs):
                if b2 == b:
                    table[(g, f)] = index[(a, c)]
        return cls(list(elements), sources, targets, identities, table)

    @classmethod
    def from_quiver(cls, n_objects, edges):
        """Free category on an acyclic quiver; morphisms are paths."""
        outgoing = [[] for _ in range(n_objects)]
        for e, (a, b) in enumerate(edges):
            outgoing[a].append((e, b))
        paths = [((), a, a) for a in range(n_objects)]
        frontier = list(paths)
        while frontier:
            word, a, b = frontier.pop()
            for e, c in outgoing[b]:
                p = (word + (e,), a, c)
                if len(p[0]) > n_objects + len(edges):
                    raise InputError("quiver has a cycle")
                paths.append(p)
                frontier.append(p)
        paths.sort(key=lambda p: (len(p[0]), p))
        index = {p: m for m, p in enumerate(paths)}
        sources = [p[1] for p in paths]
        targets = [p[2] for p in paths]
        identities = [index[((), a, a)] for a in range(n_objects)]
        table = {}
        for g, (wg, bg, cg) in enumerate(paths):
            for f, (wf, af, bf) in enumerate(paths):
                if bf == bg:
                    table[(g, f)] = index[(wf + wg, af, cg)]
        cat = cls(list(range(n_objects)), sources, targets, identities, table)
        cat.path_labels = paths  # edge words, for free extension of functors
        return cat

    @classmethod
    def codiscrete(cls, n):
        """n objects with exactly one morphism between any ordered pair."""
        morphs = [(a, b) for a in range(n) for b in range(n)]
        index = {ab: m for m, ab in enumerate(morphs)}
        table = {}
        for g, (b, c) in enumerate(morphs):
            for f, (a, b2) in enumerate(morphs):
                if b2 == b:
                    table[(g, f)] = index[(a, c)]
        return cls(list(range(n)), [a for a, _ in morphs], [b for _, b in morphs],
                   [index[(a, a)] for a in range(n)], table)

    @classmethod
    def from_dict(cls, data):
        try:
            objects = data["objects"]
            morphs = data["morphisms"]
            identities = data["identities"]
            comp = data["composition"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"category needs objects/morphisms/identities/"
                             f"composition: {exc}")
        obj_index = {str(o): i for i, o in enumerate(objects)}

        def obj(o):
            return o if isinstance(o, int) else obj_index[str(o)]

        sources = [obj(m[0]) for m in morphs]
        targets = [obj(m[1]) for m in morphs]
        table = {(g, f): h for g, f, h in comp}
        return cls(objects, sources, targets, identities, table)

    def to_dict(self):
        return {"objects": self.objects,
                "morphisms": [[self.sources[m], self.targets[m]]
                              for m in range(self.morphism_count)],
                "identities": self.identities,
                "composition": [[g, f, h] for (g, f), h in sorted(self.table.items())]}


# ---------------------------------------------------------------------------
# functors
# ---------------------------------------------------------------------------

class SetValuedFunctor:
    """Covariant functor to finite sets: one set per object, one map per
    morphism (as a tuple of image indices)."""

    def __init__(self, cat, sets, maps, check=True):
        self.cat = cat
        self.sets = [list(s) for s in sets]
        self.maps = [tuple(m) for m in maps]
        if check:
            self.validate()

    def validate(self):
        cat = self.cat
        if len(self.sets) != cat.object_count:
            raise InputError("one set per object required")
        if len(self.maps) != cat.morphism_count:
            raise InputError("one map per morphism required")
        for m, f in enumerate(self.maps):
            a, b = cat.source(m), cat.target(m)
            if len(f) != len(self.sets[a]):
                raise InputError(f"map of morphism {m} has wrong source size")
            if any(not 0 <= y < len(self.sets[b]) for y in f):
                raise InputError(f"map of morphism {m} has out-of-range values")
        for c, e in enumerate(cat.identities):
            if self.maps[e] != tuple(range(len(self.sets[c]))):
                raise InputError(f"functor does not preserve identity of {c}")
        for g in range(cat.morphism_count):
            for f in range(cat.morphism_count):
                if cat.target(f) != cat.source(g):
                    continue
                gf = cat.table[(g, f)]
                comp = tuple(self.maps[g][y] for y in self.maps[f])
                if comp != self.maps[gf]:
                    raise InputError(f"functoriality fails on pair ({g},{f})")

    @classmethod
    def constant_point(cls, cat):
        return cls(cat, [["*"]] * cat.object_count,
                   [(0,)] * cat.morphism_count)

    @classmethod
    def empty(cls, cat):
        return cls(cat, [[]] * cat.object_count, [()] * cat.morphism_count)

    @classmethod
    def regular_action(cls, cat, group):
        """Left regular action of a one-object group category."""
        maps = [tuple(group.mul(g, x) for x in range(group.order))
                for g in range(cat.morphism_count)]
        return cls(cat, [group.labels], maps)

    @classmethod
    def from_dict(cls, cat, data):
        try:
            return cls(cat, data["sets"], [tuple(m) for m in data["maps"]])
        except (KeyError, TypeError) as exc:
            raise InputError(f"set functor needs sets/maps: {exc}")


COVARIANT = "covariant"
CONTRAVARIANT = "contravariant"


class ModuleFunctor:
    """Functor to finite dimensional Q-vector spaces, with variance flag.

    For f: a -> b, a covariant functor carries a dims[b] x dims[a] matrix,
    a contravariant one a dims[a] x dims[b] matrix.
    """

    def __init__(self, cat, variance, dims, mats, check=True):
        if variance not in (COVARIANT, CONTRAVARIANT):
            raise InputError(f"unknown variance {variance!r}")
        self.cat = cat
        self.variance = variance
        self.dims = list(dims)
        self.mats = list(mats)
        if check:
            self.validate()

    def mat(self, m):
        return self.mats[m]

    def validate(self):
        cat = self.cat
        if len(self.dims) != cat.object_count:
            raise InputError("one dimension per object required")
        if len(self.mats) != cat.morphism_count:
            raise InputError("one matrix per morphism required")
        for m, mat in enumerate(self.mats):
            a, b = cat.source(m), cat.target(m)
            want = (self.dims[b], self.dims[a]) if self.variance == COVARIANT \
                else (self.dims[a], self.dims[b])
            if (mat.rows, mat.cols) != want:
                raise InputError(f"matrix of morphism {m} has shape "
                                 f"{(mat.rows, mat.cols)}, wanted {want}")
        for c, e in enumerate(cat.identities):
            if self.mats[e] != SparseRationalMatrix.identity(self.dims[c]):
                raise InputError(f"functor does not preserve identity of {c}")
        for g in range(cat.morphism_count):
            for f in range(cat.morphism_count):
                if cat.target(f) != cat.source(g):
                    continue
                gf = cat.table[(g, f)]
                if self.variance == COVARIANT:
                    comp = self.mats[g] * self.mats[f]
                else:
                    comp = self.mats[f] * self.mats[g]
                if comp != self.mats[gf]:
                    raise InputError(f"functoriality fails on pair ({g},{f})")

    @classmethod
    def constant(cls, cat, dim, variance):
        ident = SparseRationalMatrix.identity(dim)
        return cls(cat, variance, [dim] * cat.object_count,
                   [ident] * cat.morphism_count)

    @classmethod
    def zero(cls, cat, variance):
        z = SparseRationalMatrix.zero(0, 0)
        return cls(cat, variance, [0] * cat.object_count,
                   [z] * cat.morphism_count)

    @classmethod
    def linearize(cls, set_functor):
        """k[F]: the covariant functor of free vector spaces on the sets."""
        cat = set_functor.cat
        dims = [len(s) for s in set_functor.sets]
        mats = []
        for m, f in enumerate(set_functor.maps):
            b = cat.target(m)
            entries = {}
            for x, y in enumerate(f):
                entries[(y, x)] = entries.get((y, x), 0) + Fraction(1)
            mats.append(SparseRationalMatrix(dims[b], len(f), entries))
        return cls(cat, COVARIANT, dims, mats)

    @classmethod
    def from_dict(cls, cat, data):
        try:
            variance = data["variance"]
            dims = data["dims"]
            raw = data["matrices"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"module functor needs variance/dims/matrices: {exc}")
        mats = []
        for m, rows in enumerate(raw):
            a, b = cat.source(m), cat.target(m)
            shape = (dims[b], dims[a]) if variance == COVARIANT else \
                (dims[a], dims[b])
            entries = {}
            for i, row in enumerate(rows):
                for j, v in enumerate(row):
                    if v:
                        entries[(i, j)] = Fraction(v)
            mats.append(SparseRationalMatrix(shape[0], shape[1], entries))
        return cls(cat, variance, dims, mats)


@dataclass
class CatFunctor:
    """A functor between finite categories, by explicit index maps."""

    source: FinCategory
    target: FinCategory
    obj_map: list
    mor_map: list

    def validate(self):
        src, tgt = self.source, self.target
        if len(self.obj_map) != src.object_count or \
                len(self.mor_map) != src.morphism_count:
            raise InputError("functor data has wrong lengths")
        for m in range(src.morphism_count):
            fm = self.mor_map[m]
            if tgt.source(fm) != self.obj_map[src.source(m)] or \
                    tgt.target(fm) != self.obj_map[src.target(m)]:
                raise InputError(f"functor breaks endpoints of morphism {m}")
        for c, e in enumerate(src.identities):
            if self.mor_map[e] != tgt.identities[self.obj_map[c]]:
                raise InputError(f"functor breaks identity of object {c}")
        for g in range(src.morphism_count):
            for f in range(src.morphism_count):
                if src.target(f) != src.source(g):
                    continue
                if self.mor_map[src.table[(g, f)]] != \
                        tgt.table[(self.mor_map[g], self.mor_map[f])]:
                    raise InputError(f"functor breaks composition on ({g},{f})")

    def restrict_module(self, module):
        """Pull a module functor on the target back to the source."""
        return ModuleFunctor(
            self.source, module.variance,
            [module.dims[self.obj_map[c]] for c in range(self.source.object_count)],
            [module.mats[self.mor_map[m]] for m in range(self.source.morphism_count)])


# ---------------------------------------------------------------------------
# category of elements
# ---------------------------------------------------------------------------

def category_of_elements(cat, functor):
    """Grothendieck construction of a set-valued functor.

    Returns (elements category, projection CatFunctor onto `cat`).
    Objects are pairs (object, element); Hom((c,x),(c',x')) consists of the
    morphisms carrying x to x'.
    """
    objects = []
    obj_index = {}
    for c in range(cat.object_count):
        for x in range(len(functor.sets[c])):
            obj_index[(c, x)] = len(objects)
            objects.append((cat.objects[c], functor.sets[c][x]))
    morphs = []
    mor_index = {}
    for m in range(cat.morphism_count):
        a = cat.source(m)
        for x in range(len(functor.sets[a])):
            mor_index[(m, x)] = len(morphs)
            morphs.append((m, x))
    sources = []
    targets = []
    for m, x in morphs:
        a, b = cat.source(m), cat.target(m)
        sources.append(obj_index[(a, x)])
        targets.append(obj_index[(b, functor.maps[m][x])])
    object_pairs = [(c, x) for c in range(cat.object_count)
                    for x in range(len(functor.sets[c]))]
    identities = [mor_index[(cat.identities[c], x)] for (c, x) in object_pairs]
    table = {}
    for gi, (g, y) in enumerate(morphs):
        for fi, (f, x) in enumerate(morphs):
            if targets[fi] != sources[gi]:
                continue
            table[(gi, fi)] = mor_index[(cat.table[(g, f)], x)]
    elements = FinCategory(objects, sources, targets, identities, table)
    projection = CatFunctor(elements, cat,
                            [c for c, _ in object_pairs],
                            [m for m, _ in morphs])
    return elements, projection


# ---------------------------------------------------------------------------
# nerves
# ---------------------------------------------------------------------------

def _composable_chains(cat, top):
    """chains[q]: tuples of q composable non-identity morphisms; degree 0
    holds the objects themselves as singletons."""
    nonid = cat.nonidentity_morphisms()
    by_source = {}
    for m in nonid:
        by_source.setdefault(cat.source(m), []).append(m)
    out = [[(c,) for c in range(cat.object_count)]]
    cur = [(m,) for m in nonid]
    for _ in range(top):
        out.append(list(cur))
        nxt = []
        for chain in cur:
            for m in by_source.get(cat.target(chain[-1]), ()):
                nxt.append(chain + (m,))
        cur = nxt
    return out


def nerve(cat, top):
    """Normalized rational chains on the nerve, through degree `top`.

    Degree 0 is spanned by the objects, degree q by chains of q composable
    non-identity morphisms; faces compose adjacent arrows (terms whose
    composite is an identity drop out).
    """
    chains = _composable_chains(cat, top)
    index = [{ch: i for i, ch in enumerate(level)} for level in chains]
    dims = [len(level) for level in chains]
    diffs = {}
    for q in range(1, top + 1):
        entries = {}
        for col, chain in enumerate(chains[q]):
            def add(face_chain, sign):
                row = index[q - 1].get(face_chain)
                if row is None:
                    raise InvariantError("face chain missing from basis")
                key = (row, col)
                s = entries.get(key, 0) + sign
                if s:
                    entries[key] = s
                else:
                    entries.pop(key, None)

            if q == 1:
                add((cat.target(chain[0]),), 1)
                add((cat.source(chain[0]),), -1)
                continue
            add(chain[1:], 1)
            for t in range(1, q):
                g = cat.table[(chain[t], chain[t - 1])]
                if not cat.is_identity(g):
                    add(chain[:t - 1] + (g,) + chain[t + 1:], (-1) ** t)
            add(chain[:-1], (-1) ** q)
        diffs[q] = SparseRationalMatrix(dims[q - 1], dims[q], entries)
    return ChainComplex(dims, diffs, labels=chains, check=False)


# ---------------------------------------------------------------------------
# functor tensor products and Tor via the bar complex
# ---------------------------------------------------------------------------

def _check_tensor_pair(nf, mf):
    if nf.cat is not mf.cat and nf.cat.to_dict() != mf.cat.to_dict():
        raise InputError("functors live over different categories")
    if nf.variance != CONTRAVARIANT or mf.variance != COVARIANT:
        raise InputError("tensor product needs a contravariant and a "
                         "covariant functor, in that order")


def functor_tensor_product(nf, mf):
    """Dimension and basis of N (x)_C M = sum_c N(c)(x)M(c) / relations
    N(f)x (x) y - x (x) M(f)y."""
    _check_tensor_pair(nf, mf)
    cat = nf.cat
    offsets = []
    total = 0
    for c in range(cat.object_count):
        offsets.append(total)
        total += nf.dims[c] * mf.dims[c]

    def coord(c, i, j):
        return offsets[c] + i * mf.dims[c] + j

    from .exactlin import SpanSolver
    solver = SpanSolver()
    tag = 0
    for m in range(cat.morphism_count):
        a, b = cat.source(m), cat.target(m)
        nmat = nf.mats[m]  # N(b) -> N(a)
        mmat = mf.mats[m]  # M(a) -> M(b)
        for i in range(nf.dims[b]):
            for j in range(mf.dims[a]):
                vec = {}
                for ii in range(nf.dims[a]):
                    v = nmat.entries.get((ii, i))
                    if v:
                        vec[coord(a, ii, j)] = vec.get(coord(a, ii, j), 0) + v
                for jj in range(mf.dims[b]):
                    v = mmat.entries.get((jj, j))
                    if v:
                        key = coord(b, i, jj)
                        s = vec.get(key, 0) - v
                        if s:
                            vec[key] = s
                        else:
                            vec.pop(key, None)
                if vec:
                    solver.add(vec, tag=tag)
                    tag += 1
    pivots = set(solver.pivots)
    basis = []
    for c in range(cat.object_count):
        for i in range(nf.dims[c]):
            for j in range(mf.dims[c]):
                if coord(c, i, j) not in pivots:
                    basis.append((c, i, j))
    return total - solver.rank, basis


def bar_complex(nf, mf, top):
    """Normalized two-sided bar complex computing Tor^C(N, M).

    Degree q is spanned by (chain of q composable non-identity morphisms,
    basis vector of N at the chain end, basis vector of M at the start).
    """
    _check_tensor_pair(nf, mf)
    cat = nf.cat
    chains = _composable_chains(cat, top)
    bases = []
    index = []
    for q, level in enumerate(chains):
        basis = []
        idx = {}
        for ch in level:
            if q == 0:
                start = end = ch[0]
            else:
                start = cat.source(ch[0])
                end = cat.target(ch[-1])
            for i in range(nf.dims[end]):
                for j in range(mf.dims[start]):
                    idx[(ch, i, j)] = len(basis)
                    basis.append((ch, i, j))
        bases.append(basis)
        index.append(idx)
    dims = [len(b) for b in bases]
    diffs = {}
    for q in range(1, top + 1):
        entries = {}

        def add(key, col, val):
            row = index[q - 1][key]
            s = entries.get((row, col), 0) + val
            if s:
                entries[(row, col)] = s
            else:
                entries.pop((row, col), None)

        for col, (chain, i, j) in enumerate(bases[q]):
            start = cat.source(chain[0])
            # d_0: absorb the first arrow into M
            m0 = mf.mats[chain[0]]
            tail = chain[1:] if q > 1 else (cat.target(chain[0]),)
            for jj in range(mf.dims[cat.target(chain[0])]):
                v = m0.entries.get((jj, j))
                if v:
                    add((tail, i, jj), col, v)
            # inner faces: compose adjacent arrows
            for t in range(1, q):
                g = cat.table[(chain[t], chain[t - 1])]
                if cat.is_identity(g):
                    continue
                add((chain[:t - 1] + (g,) + chain[t + 1:], i, j), col, (-1) ** t)
            # d_q: absorb the last arrow into N
            nmat = nf.mats[chain[-1]]
            head = chain[:-1] if q > 1 else (start,)
            sign = (-1) ** q
            for ii in range(nf.dims[cat.source(chain[-1])]):
                v = nmat.entries.get((ii, i))
                if v:
                    add((head, ii, j), col, sign * v)
        diffs[q] = SparseRationalMatrix(dims[q - 1], dims[q], entries)
    return ChainComplex(dims, diffs, labels=bases, check=False)


def tor_dims(nf, mf, top):
    """dim Tor_q(N, M) for q = 0..top."""
    complex_ = bar_complex(nf, mf, top + 1)
    return complex_.homology_dims(upto=top)


# ---------------------------------------------------------------------------
# the linearized colimit checkers
# ---------------------------------------------------------------------------

def shapiro_check(cat, set_functor, module, top):
    """Compare Tor over the category of elements with Tor against the
    linearized set functor.

    `module` is a contravariant module functor on `cat`.  Returns
    (verdict, dims over elements category, dims over cat).
    """
    if module.variance != CONTRAVARIANT:
        raise InputError("the coefficient module must be contravariant")
    elements, projection = category_of_elements(cat, set_functor)
    pulled = projection.restrict_module(module)
    left = tor_dims(pulled, ModuleFunctor.constant(elements, 1, COVARIANT), top)
    right = tor_dims(module, ModuleFunctor.linearize(set_functor), top)
    return left == right, left, right


def restrict_tor(functor, nf, mf, top):
    """Naturality of Tor along a functor f: A -> B.

    nf, mf live over the target B; returns a dict with both dimension
    vectors and the induced matrices from Tor over A (with restricted
    coefficients) to Tor over B.
    """
    functor.validate()
    nf_a = functor.restrict_module(nf)
    mf_a = functor.restrict_module(mf)
    bar_a = bar_complex(nf_a, mf_a, top + 1)
    bar_b = bar_complex(nf, mf, top + 1)
    src_cat, tgt_cat = functor.source, functor.target
    maps = []
    for q in range(top + 2):
        entries = {}
        tgt_index = {lab: i for i, lab in enumerate(bar_b.labels[q])}
        for col, (chain, i, j) in enumerate(bar_a.labels[q]):
            if q == 0:
                image = (functor.obj_map[chain[0]],)
            else:
                mapped = tuple(functor.mor_map[m] for m in chain)
                if any(tgt_cat.is_identity(m) for m in mapped):
                    continue  # degenerate in the normalized target complex
                image = mapped
            row = tgt_index[(image, i, j)]
            entries[(row, col)] = Fraction(1)
        maps.append(SparseRationalMatrix(bar_b.dims[q], bar_a.dims[q], entries))
    induced = induced_map_on_homology(maps, bar_a, bar_b, upto=top)
    return {
        "source_dims": bar_a.homology_dims(upto=top),
        "target_dims": bar_b.homology_dims(upto=top),
        "matrices": induced,
    }


# -- strict diagrams of categories and the Grothendieck construction ---------

@dataclass
class CategoryDiagram:
    """A strict functor from a finite category to Cat."""

    cat: FinCategory
    fibers: list  # FinCategory per object
    functors: list  # CatFunctor per morphism (between the relevant fibers)

    def validate(self):
        cat = self.cat
        if len(self.fibers) != cat.object_count or \
                len(self.functors) != cat.morphism_count:
            raise InputError("diagram data has wrong lengths")
        for m, fun in enumerate(self.functors):
            if fun.source is not self.fibers[cat.source(m)] or \
                    fun.target is not self.fibers[cat.target(m)]:
                raise InputError(f"functor of morphism {m} has wrong fibers")
            fun.validate()
        for c, e in enumerate(cat.identities):
            fun = self.functors[e]
            if fun.obj_map != list(range(self.fibers[c].object_count)) or \
                    fun.mor_map != list(range(self.fibers[c].morphism_count)):
                raise InputError(f"diagram does not preserve identity of {c}")
        for g in range(cat.morphism_count):
            for f in range(cat.morphism_count):
                if cat.target(f) != cat.source(g):
                    continue
                gf = cat.table[(g, f)]
                ff, fg, fgf = self.functors[f], self.functors[g], self.functors[gf]
                if fgf.obj_map != [fg.obj_map[x] for x in ff.obj_map] or \
                        fgf.mor_map != [fg.mor_map[x] for x in ff.mor_map]:
                    raise InputError(f"diagram is not strict on pair ({g},{f})")


def grothendieck(diagram):
    """The category C ∫ F of a strict diagram of categories: objects are
    (c, x in F(c)); a morphism (c,x) -> (c',x') is a pair (φ: c -> c',
    g: F(φ)x -> x'), composed by (ψ,h)∘(φ,g) = (ψφ, h∘F(ψ)g)."""
    diagram.validate()
    cat = diagram.cat
    objects = []
    obj_index = {}
    for c in range(cat.object_count):
        for x in range(diagram.fibers[c].object_count):
            obj_index[(c, x)] = len(objects)
            objects.append((cat.objects[c], diagram.fibers[c].objects[x]))
    morphs = []
    mor_index = {}
    for m in range(cat.morphism_count):
        a, b = cat.source(m), cat.target(m)
        fiber_b = diagram.fibers[b]
        fun = diagram.functors[m]
        for x in range(diagram.fibers[a].object_count):
            fx = fun.obj_map[x]
            for g in range(fiber_b.morphism_count):
                if fiber_b.source(g) != fx:
                    continue
                mor_index[(m, x, g)] = len(morphs)
                morphs.append((m, x, g))
    sources = []
    targets = []
    for m, x, g in morphs:
        a, b = cat.source(m), cat.target(m)
        sources.append(obj_index[(a, x)])
        targets.append(obj_index[(b, diagram.fibers[b].target(g))])
    identities = []
    for c in range(cat.object_count):
        for x in range(diagram.fibers[c].object_count):
            identities.append(
                mor_index[(cat.identities[c], x, diagram.fibers[c].identities[x])])
    table = {}
    for i2, (m2, x2, g2) in enumerate(morphs):
        for i1, (m1, x1, g1) in enumerate(morphs):
            if targets[i1] != sources[i2]:
                continue
            m = cat.table[(m2, m1)]
            b2 = cat.target(m2)
            pushed = diagram.functors[m2].mor_map[g1]
            g = diagram.fibers[b2].table[(g2, pushed)]
            table[(i2, i1)] = mor_index[(m, x1, g)]
    return FinCategory(objects, sources, targets, identities, table)


def _diagram_double_complex(diagram, top):
    """Total complex of the simplicial replacement: horizontal direction is
    the nerve of the base, vertical the nerves of the fibers, pushed along
    the first face."""
    cat = diagram.cat
    full = top + 1  # complete all bidegrees through total degree top + 1
    base_chains = _composable_chains(cat, full)
    fiber_nerves = [nerve(f, full) for f in diagram.fibers]
    fiber_cols = []  # per fiber, per degree: differential columns by label
    for nq in fiber_nerves:
        per_degree = [{}]
        for q in range(1, full + 1):
            cols = nq.diff(q).columns()
            per_degree.append({lab: cols[i] for i, lab in enumerate(nq.labels[q])})
        fiber_cols.append(per_degree)
    bases = []
    index = []
    for n in range(full + 1):
        basis = []
        idx = {}
        for p in range(n + 1):
            q = n - p
            for ch in base_chains[p]:
                c0 = ch[0] if p == 0 else cat.source(ch[0])
                for fch in fiber_nerves[c0].labels[q]:
                    idx[(ch, fch)] = len(basis)
                    basis.append((p, ch, fch))
        bases.append(basis)
        index.append(idx)

    def push_chain(fun, fch, q):
        """Image of a fiber nerve chain under a functor, or None if it
        degenerates."""
        if q == 0:
            return (fun.obj_map[fch[0]],)
        mapped = tuple(fun.mor_map[m] for m in fch)
        if any(fun.target.is_identity(m) for m in mapped):
            return None
        return mapped

    diffs = {}
    for n in range(1, top + 2):
        entries = {}

        def add(key, col, val):
            row = index[n - 1].get(key)
            if row is None:
                raise InvariantError("missing face in diagram double complex")
            s = entries.get((row, col), 0) + val
            if s:
                entries[(row, col)] = s
            else:
                entries.pop((row, col), None)

        for col, (p, ch, fch) in enumerate(bases[n]):
            q = n - p
            c0 = ch[0] if p == 0 else cat.source(ch[0])
            # horizontal faces
            if p >= 1:
                fun = diagram.functors[ch[0]]
                pushed = push_chain(fun, fch, q)
                if pushed is not None:
                    tail = ch[1:] if p > 1 else (cat.target(ch[0]),)
                    add((tail, pushed), col, 1)
                for t in range(1, p):
                    g = cat.table[(ch[t], ch[t - 1])]
                    if not cat.is_identity(g):
                        add((ch[:t - 1] + (g,) + ch[t + 1:], fch), col, (-1) ** t)
                head = ch[:-1] if p > 1 else (cat.source(ch[0]),)
                add((head, fch), col, (-1) ** p)
            # vertical faces, with sign (-1)^p
            if q >= 1:
                nq = fiber_nerves[c0]
                for row_i, v in fiber_cols[c0][q][fch].items():
                    add((ch, nq.labels[q - 1][row_i]), col, v * (-1) ** p)
        dims_prev = len(bases[n - 1])
        diffs[n] = SparseRationalMatrix(dims_prev, len(bases[n]), entries)
    return ChainComplex([len(b) for b in bases], diffs, check=False)


def thomason_check(diagram, top):
    """Homology of the nerve of the Grothendieck construction against the
    total complex of the fiberwise nerves over the base nerve."""
    total = grothendieck(diagram)
    lhs = nerve(total, top + 1).homology_dims(upto=top)
    rhs = _diagram_double_complex(diagram, top).homology_dims(upto=top)
    return lhs == rhs, lhs, rhs
