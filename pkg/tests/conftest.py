"""Shared builders for randomized category/functor instances.

Free categories on acyclic quivers admit arbitrary edge assignments, so
random functors are generated by free extension along paths.
"""

from fractions import Fraction

from repchar.exactlin import SparseRationalMatrix
from repchar.fincat import (
    CONTRAVARIANT,
    FinCategory,
    ModuleFunctor,
    SetValuedFunctor,
)


def random_quiver_category(rng, max_objects=4, max_edges=5):
    n = rng.randint(1, max_objects)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a < b:
            edges.append((a, b))
    return FinCategory.from_quiver(n, edges), edges


def random_set_functor(rng, cat, edges, max_set=3, min_set=0):
    n = cat.object_count
    sizes = [rng.randint(min_set, max_set) for _ in range(n)]
    for a, b in edges:
        if sizes[a] > 0 and sizes[b] == 0:
            sizes[b] = 1
    sets = [list(range(s)) for s in sizes]
    edge_maps = [tuple(rng.randrange(sizes[b]) for _ in range(sizes[a]))
                 for a, b in edges]
    maps = []
    for word, a, b in cat.path_labels:
        f = tuple(range(sizes[a]))
        for e in word:
            f = tuple(edge_maps[e][x] for x in f)
        maps.append(f)
    return SetValuedFunctor(cat, sets, maps)


def random_sparse_matrix(rng, rows, cols, density=0.6):
    entries = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                v = rng.randint(-2, 2)
                if v:
                    entries[(i, j)] = Fraction(v)
    return SparseRationalMatrix(rows, cols, entries)


def random_contravariant_module(rng, cat, edges, max_dim=2):
    """Contravariant module functor, free on edge matrices.

    For an edge e: a -> b the matrix has shape dims[a] x dims[b]; a path
    e1...ek (e1 applied first) gets M(e1) * M(e2) * ... * M(ek).
    """
    dims = [rng.randint(0, max_dim) for _ in range(cat.object_count)]
    edge_mats = [random_sparse_matrix(rng, dims[a], dims[b])
                 for a, b in edges]
    mats = []
    for word, a, b in cat.path_labels:
        acc = SparseRationalMatrix.identity(dims[b])
        for e in reversed(word):
            acc = edge_mats[e] * acc
        mats.append(acc)
    return ModuleFunctor(cat, CONTRAVARIANT, dims, mats)
