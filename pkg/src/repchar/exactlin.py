"""Exact linear algebra over Q and Z.

Sparse rational matrices, dense integer matrices with Smith normal form,
finitely generated abelian groups, and chain complexes with homology over Q
(dimension counts) and over Z (invariant factors).  Everything is exact: no
floats, no modular shortcuts.

Homology of large complexes goes through an exact Gaussian cancellation pass
(`reduce_complex`) that shrinks the complex before any elimination; the plain
rank-based route is kept alongside as an independent cross-check.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class InputError(ValueError):
    """Malformed or inconsistent user-supplied data."""


class InvariantError(Exception):
    """A structural invariant that should hold by construction failed."""


# ---------------------------------------------------------------------------
# sparse rational matrices
# ---------------------------------------------------------------------------

class SparseRationalMatrix:
    """Immutable-by-convention sparse matrix over Q.

    Entries are stored in a dict keyed by (row, col); zero entries are never
    stored.  Row/column indices are 0-based.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise InputError(f"entry index ({i},{j}) out of range")
                v = Fraction(v)
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise InputError("ragged matrix data")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = Fraction(v)
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    def to_dense(self):
        data = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            data[i][j] = v
        return data

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, SparseRationalMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseRationalMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch in matrix sum")
        entries = dict(self.entries)
        for k, v in other.entries.items():
            w = entries.get(k, 0) + v
            if w:
                entries[k] = w
            else:
                entries.pop(k, None)
        return SparseRationalMatrix(self.rows, self.cols, entries)

    def __neg__(self):
        return SparseRationalMatrix(
            self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        a = Fraction(a)
        if not a:
            return SparseRationalMatrix.zero(self.rows, self.cols)
        return SparseRationalMatrix(
            self.rows, self.cols, {k: a * v for k, v in self.entries.items()})

    def __mul__(self, other):
        if not isinstance(other, SparseRationalMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise InputError("shape mismatch in matrix product")
        by_row = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        acc = {}
        for (i, k), v in self.entries.items():
            for j, w in by_row.get(k, ()):
                key = (i, j)
                s = acc.get(key, 0) + v * w
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return SparseRationalMatrix(self.rows, other.cols, acc)

    def transpose(self):
        return SparseRationalMatrix(
            self.cols, self.rows,
            {(j, i): v for (i, j), v in self.entries.items()})

    def column(self, j):
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def columns(self):
        """All columns as sparse vectors (list indexed by column)."""
        out = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def apply(self, vec):
        """Matrix times sparse vector (dict index -> value)."""
        out = {}
        for (i, j), v in self.entries.items():
            w = vec.get(j)
            if w:
                s = out.get(i, 0) + v * w
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def rank(self):
        return sparse_rank(self.columns())

    def kernel_basis(self):
        """Basis of the right kernel as sparse vectors over column indices."""
        solver = SpanSolver()
        basis = []
        for j, col in enumerate(self.columns()):
            combo = solver.express(col)
            if combo is None:
                solver.add(col, tag=j)
            else:
                vec = {j: Fraction(-1)}
                for tag, c in combo:
                    if c:
                        vec[tag] = c
                basis.append(vec)
        return basis


def vec_add_scaled(target, source, coeff):
    """target += coeff * source, in place, dropping zeros."""
    if not coeff:
        return
    for k, v in source.items():
        s = target.get(k, 0) + coeff * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


class SpanSolver:
    """Incremental exact row space over Q with coordinate tracking.

    Vectors are sparse dicts.  `add` inserts a vector (tagged for later
    reference); `express` writes a vector as a combination of previously
    added ones, or returns None if it is independent of them.
    """

    def __init__(self):
        self.pivots = {}  # pivot index -> (vector, combo dict tag -> coeff)

    def _reduce(self, vec, combo):
        while True:
            hit = None
            for k in vec:
                if k in self.pivots:
                    hit = k
                    break
            if hit is None:
                return
            pvec, pcombo = self.pivots[hit]
            c = -vec[hit]
            vec_add_scaled(vec, pvec, c)
            vec_add_scaled(combo, pcombo, c)

    def express(self, vec):
        """Combination of added vectors equal to `vec`, or None."""
        v = dict(vec)
        combo = {}
        self._reduce(v, combo)
        if v:
            return None
        return [(tag, -c) for tag, c in combo.items()]

    def contains(self, vec):
        return self.express(vec) is not None

    def add(self, vec, tag):
        """Insert `vec`; returns False if it was already in the span."""
        v = dict(vec)
        combo = {tag: Fraction(1)}
        self._reduce(v, combo)
        if not v:
            return False
        piv = min(v)
        inv = Fraction(1) / v[piv]
        v = {k: inv * val for k, val in v.items()}
        combo = {k: inv * val for k, val in combo.items()}
        self.pivots[piv] = (v, combo)
        return True

    @property
    def rank(self):
        return len(self.pivots)


def sparse_rank(vectors):
    """Rank of a family of sparse rational vectors, by fraction-free
    elimination over Z (each vector is scaled integral first)."""
    pivots = {}  # index -> integer row dict
    for vec in vectors:
        row = _integerize(vec)
        while row:
            hit = None
            for k in row:
                if k in pivots:
                    hit = k
                    break
            if hit is None:
                break
            prow = pivots[hit]
            a = prow[hit]
            b = row[hit]
            for k in list(row):
                row[k] = row[k] * a
            for k, v in prow.items():
                s = row.get(k, 0) - b * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
            _strip_content(row)
        if row:
            piv = min(row, key=lambda k: (abs(row[k]), k))
            pivots[piv] = row
    return len(pivots)


def _integerize(vec):
    """Scale a sparse rational vector to a primitive integer vector."""
    if not vec:
        return {}
    denom = 1
    for v in vec.values():
        f = Fraction(v)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    row = {}
    for k, v in vec.items():
        f = Fraction(v)
        row[k] = f.numerator * (denom // f.denominator)
    _strip_content(row)
    return row


def _strip_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return
    if g > 1:
        for k in row:
            row[k] //= g


# ---------------------------------------------------------------------------
# integer matrices and Smith normal form
# ---------------------------------------------------------------------------

class IntegerMatrix:
    """Dense matrix over Z (desk-scale; used for abelianized maps)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        if rows is not None:
            self.rows, self.cols = rows, cols
            self.data = [[int(v) for v in r] for r in data]
        else:
            self.rows = len(data)
            self.cols = len(data[0]) if self.rows else 0
            self.data = [[int(v) for v in r] for r in data]
        for r in self.data:
            if len(r) != self.cols:
                raise InputError("ragged integer matrix")

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, IntegerMatrix)
                and self.data == other.data
                and self.rows == other.rows and self.cols == other.cols)

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __repr__(self):
        return f"IntegerMatrix({self.data!r})"

    def __mul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.cols != other.rows:
                raise InputError("shape mismatch in integer matrix product")
            out = [[0] * other.cols for _ in range(self.rows)]
            for i in range(self.rows):
                ri = self.data[i]
                oi = out[i]
                for k in range(self.cols):
                    a = ri[k]
                    if a:
                        rk = other.data[k]
                        for j in range(other.cols):
                            oi[j] += a * rk[j]
            return IntegerMatrix(out)
        raise TypeError

    def apply(self, vec):
        """Matrix times integer vector (tuple/list), returns tuple."""
        if len(vec) != self.cols:
            raise InputError("vector length mismatch")
        return tuple(
            sum(self.data[i][j] * vec[j] for j in range(self.cols))
            for i in range(self.rows))

    def transpose(self):
        return IntegerMatrix([[self.data[i][j] for i in range(self.rows)]
                              for j in range(self.cols)])

    def to_sparse(self):
        entries = {}
        for i in range(self.rows):
            for j in range(self.cols):
                if self.data[i][j]:
                    entries[(i, j)] = Fraction(self.data[i][j])
        return SparseRationalMatrix(self.rows, self.cols, entries)


@dataclass(frozen=True)
class SNFResult:
    factors: tuple  # nonzero diagonal d_1 | d_2 | ..., all > 0
    left: IntegerMatrix  # U
    right: IntegerMatrix  # V, with U*A*V diagonal


def smith_normal_form(a):
    """Smith normal form of an integer matrix.

    Returns SNFResult(factors, U, V) with U*A*V = diag(factors, 0...),
    U and V unimodular and factors forming a divisibility chain.
    """
    m = [row[:] for row in a.data]
    rows, cols = a.rows, a.cols
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, c):
        mr, ms = m[dst], m[src]
        for j in range(cols):
            mr[j] += c * ms[j]
        ur, us = u[dst], u[src]
        for j in range(rows):
            ur[j] += c * us[j]

    def addmul_col(dst, src, c):
        for r in m:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate a nonzero pivot of minimal absolute value
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = m[i][j]
                if val and (best is None or abs(val) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            progressed = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    addmul_row(i, t, -q)
                    if m[i][t]:
                        swap_rows(t, i)
                        progressed = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    addmul_col(j, t, -q)
                    if m[t][j]:
                        swap_cols(t, j)
                        progressed = True
            if progressed:
                continue
            # rows/cols clean; enforce that the pivot divides the rest
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % m[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, 1)
        if m[t][t] < 0:
            for j in range(cols):
                m[t][j] = -m[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        t += 1

    factors = tuple(m[i][i] for i in range(t) if m[i][i])
    return SNFResult(factors, IntegerMatrix(u), IntegerMatrix(v))


def integer_kernel_basis(a):
    """Columns spanning ker(A: Z^cols -> Z^rows) as a saturated sublattice."""
    snf = smith_normal_form(a)
    r = len(snf.factors)
    vt = snf.right
    return [[vt.data[i][j] for i in range(a.cols)] for j in range(r, a.cols)]


def solve_integer(a, b_cols):
    """Solve A*X = B over Z, where B is given by columns; raises if no
    integral solution exists."""
    snf = smith_normal_form(a)
    r = len(snf.factors)
    xs = []
    for b in b_cols:
        ub = snf.left.apply(b)
        y = []
        for i in range(a.cols):
            if i < r:
                q, rem = divmod(ub[i], snf.factors[i])
                if rem:
                    raise InvariantError("integer system has no solution")
                y.append(q)
            else:
                y.append(0)
        for i in range(r, a.rows):
            if ub[i]:
                raise InvariantError("integer system has no solution")
        xs.append(snf.right.apply(y))
    return xs


# ---------------------------------------------------------------------------
# abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: Z^free_rank + sum of Z/d_i."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        for i, d in enumerate(self.torsion):
            if d <= 1:
                raise InputError("torsion factors must exceed 1")
            if i and d % self.torsion[i - 1]:
                raise InputError("torsion factors must form a divisibility chain")

    @classmethod
    def from_cokernel(cls, a):
        """Cokernel of A: Z^cols -> Z^rows."""
        snf = smith_normal_form(a)
        torsion = tuple(d for d in snf.factors if d > 1)
        return cls(a.rows - len(snf.factors), torsion)

    @property
    def order(self):
        if self.free_rank:
            return 0
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# chain complexes over Q
# ---------------------------------------------------------------------------

class ChainComplex:
    """Nonnegatively graded chain complex of finite dimensional Q-spaces.

    dims[q] is the dimension in degree q; diff(q) maps degree q to q-1.
    Basis labels are opaque tokens that higher layers may attach.
    """

    def __init__(self, dims, diffs, labels=None, check=True):
        self.dims = list(dims)
        self._diffs = dict(diffs)  # q -> SparseRationalMatrix, q >= 1
        self.labels = labels
        for q, d in self._diffs.items():
            if q < 1 or q > self.top_degree:
                raise InputError(f"differential in illegal degree {q}")
            if d.rows != self.dims[q - 1] or d.cols != self.dims[q]:
                raise InputError(f"differential shape mismatch in degree {q}")
        if check:
            self.validate()

    @property
    def top_degree(self):
        return len(self.dims) - 1

    def diff(self, q):
        d = self._diffs.get(q)
        if d is not None:
            return d
        src = self.dims[q] if 0 <= q <= self.top_degree else 0
        tgt = self.dims[q - 1] if 1 <= q <= self.top_degree else 0
        return SparseRationalMatrix.zero(tgt, src)

    def validate(self):
        for q in range(2, self.top_degree + 1):
            if not (self.diff(q - 1) * self.diff(q)).is_zero():
                raise InvariantError(f"d∘d != 0 between degrees {q} and {q-2}")

    def homology_dims(self, upto=None, fast=True):
        """Dimensions of H_0..H_upto.  Degrees above top-1 see a truncated
        complex, so only request degrees the construction supports."""
        upto = self.top_degree if upto is None else min(upto, self.top_degree)
        if fast:
            ranks = reduced_ranks(self)
            alive = ranks.pop("alive")
        else:
            ranks = {q: self.diff(q).rank() for q in range(1, self.top_degree + 1)}
            alive = list(self.dims)
        out = []
        for q in range(upto + 1):
            r_in = ranks.get(q + 1, 0)
            r_out = ranks.get(q, 0)
            out.append(alive[q] - r_in - r_out)
        return out


def reduced_ranks(complex_):
    """Ranks of all differentials after exact Gaussian cancellation.

    Returns {q: rank of d_q} plus key "alive" carrying the per-degree
    dimensions of the reduced complex (homology is unchanged, so
    H_q = alive[q] - rank d_q - rank d_{q+1} with the *reduced* numbers).
    """
    top = complex_.top_degree
    alive = [set(range(complex_.dims[q])) for q in range(top + 1)]
    cols = {}  # q -> {src index -> {tgt index -> coeff}}
    rows = {}  # q -> {tgt index -> set of src indices}
    for q in range(1, top + 1):
        cq = {}
        rq = {}
        for (i, j), v in complex_.diff(q).entries.items():
            cq.setdefault(j, {})[i] = v
            rq.setdefault(i, set()).add(j)
        cols[q] = cq
        rows[q] = rq

    heap = []

    def cost(q, r, c):
        return (len(cols[q][c]) - 1) * (len(rows[q][r]) - 1)

    def push_candidates(q, c):
        col = cols[q].get(c)
        if not col:
            return
        r = min(col, key=lambda i: (len(rows[q][i]), i))
        v = col[r]
        unit = 0 if (v == 1 or v == -1) else 1
        heapq.heappush(heap, (cost(q, r, c), unit, q, r, c))

    for q in range(1, top + 1):
        for c in cols[q]:
            push_candidates(q, c)

    def drop_entry(q, r, c):
        col = cols[q].get(c)
        if col is not None and r in col:
            del col[r]
            if not col:
                del cols[q][c]
        rq = rows[q].get(r)
        if rq is not None:
            rq.discard(c)
            if not rq:
                del rows[q][r]

    while heap:
        _, _, q, r, c = heapq.heappop(heap)
        col = cols[q].get(c)
        if col is None or c not in alive[q]:
            continue
        if r not in col or r not in alive[q - 1]:
            push_candidates(q, c)  # stale candidate row; retry with a fresh one
            continue
        a = col[r]
        # cancel the pair (r in degree q-1, c in degree q)
        alive[q].discard(c)
        alive[q - 1].discard(r)
        dc = dict(col)
        del cols[q][c]
        for tgt in dc:
            rt = rows[q].get(tgt)
            if rt is not None:
                rt.discard(c)
                if not rt:
                    del rows[q][tgt]
        # update d_q on the other columns hitting r
        touched = list(rows[q].get(r, ()))
        for x in touched:
            colx = cols[q][x]
            mu = colx.pop(r) / a
            rows_r = rows[q].get(r)
            if rows_r is not None:
                rows_r.discard(x)
            for tgt, v in dc.items():
                if tgt == r:
                    continue
                s = colx.get(tgt, 0) - mu * v
                if s:
                    if tgt not in colx:
                        rows[q].setdefault(tgt, set()).add(x)
                    colx[tgt] = s
                else:
                    colx.pop(tgt, None)
                    rt = rows[q].get(tgt)
                    if rt is not None:
                        rt.discard(x)
                        if not rt:
                            del rows[q][tgt]
            if not colx:
                del cols[q][x]
            else:
                push_candidates(q, x)
        rows[q].pop(r, None)
        # d_{q+1}: forget the row c (coefficients of surviving rows unchanged)
        if q + 1 <= top:
            for z in list(rows[q + 1].get(c, ())):
                drop_entry(q + 1, c, z)
                if z in cols[q + 1]:
                    push_candidates(q + 1, z)
        # d_{q-1}: forget the column r
        if q - 1 >= 1 and r in cols[q - 1]:
            dcr = cols[q - 1].pop(r)
            for tgt in dcr:
                rt = rows[q - 1].get(tgt)
                if rt is not None:
                    rt.discard(r)
                    if not rt:
                        del rows[q - 1][tgt]

    ranks = {"alive": [len(s) for s in alive]}
    for q in range(1, top + 1):
        ranks[q] = sparse_rank(list(cols[q].values())) if cols[q] else 0
    return ranks


def homology_basis(complex_, upto=None):
    """Per-degree homology data over Q.

    Returns a list (degree q) of dicts with keys:
      "reps": chosen cycle representatives (sparse vectors),
      "solver": SpanSolver seeded with boundaries then reps; rep tags are
                ("h", k), boundary tags ("b", j).
    """
    upto = complex_.top_degree if upto is None else upto
    data = []
    for q in range(upto + 1):
        solver = SpanSolver()
        dqp1 = complex_.diff(q + 1)
        for j, col in enumerate(dqp1.columns()):
            solver.add(col, tag=("b", j))
        reps = []
        if q == 0:
            cycles = [{i: Fraction(1)} for i in range(complex_.dims[0])]
        else:
            cycles = complex_.diff(q).kernel_basis()
        for z in cycles:
            if solver.add(z, tag=("h", len(reps))):
                reps.append(z)
        data.append({"reps": reps, "solver": solver})
    return data


def is_chain_map(f, src, tgt, upto=None):
    """Check f_{q-1} d_q = d_q f_q for all degrees."""
    upto = min(src.top_degree, tgt.top_degree) if upto is None else upto
    for q in range(1, upto + 1):
        if f[q - 1] * src.diff(q) != tgt.diff(q) * f[q]:
            return False
    return True


def induced_map_on_homology(f, src, tgt, upto=None):
    """Matrices of H_q(f) in the bases chosen by `homology_basis`.

    f is a list of SparseRationalMatrix, one per degree.  Raises
    InvariantError if f is not a chain map.
    """
    upto = min(src.top_degree, tgt.top_degree) if upto is None else upto
    if not is_chain_map(f, src, tgt, upto=upto):
        raise InvariantError("not a chain map")
    hsrc = homology_basis(src, upto)
    htgt = homology_basis(tgt, upto)
    out = []
    for q in range(upto + 1):
        reps = hsrc[q]["reps"]
        solver = htgt[q]["solver"]
        nh = len(htgt[q]["reps"])
        entries = {}
        for k, z in enumerate(reps):
            img = f[q].apply(z)
            combo = solver.express(img)
            if combo is None:
                raise InvariantError("image of a cycle is not a cycle")
            for tag, cval in combo:
                if tag[0] == "h" and cval:
                    entries[(tag[1], k)] = cval
        out.append(SparseRationalMatrix(nh, len(reps), entries))
    return out


# ---------------------------------------------------------------------------
# chain complexes over Z
# ---------------------------------------------------------------------------

class IntegerChainComplex:
    """Chain complex of finitely generated free Z-modules."""

    def __init__(self, ranks, diffs, check=True):
        self.ranks = list(ranks)
        self._diffs = dict(diffs)  # q -> IntegerMatrix
        for q, d in self._diffs.items():
            if d.rows != self.ranks[q - 1] or d.cols != self.ranks[q]:
                raise InputError(f"differential shape mismatch in degree {q}")
        if check:
            self.validate()

    @property
    def top_degree(self):
        return len(self.ranks) - 1

    def diff(self, q):
        d = self._diffs.get(q)
        if d is not None:
            return d
        src = self.ranks[q] if 0 <= q <= self.top_degree else 0
        tgt = self.ranks[q - 1] if 1 <= q <= self.top_degree else 0
        return IntegerMatrix.zero(tgt, src)

    def validate(self):
        for q in range(2, self.top_degree + 1):
            prod = self.diff(q - 1) * self.diff(q)
            if any(any(row) for row in prod.data):
                raise InvariantError(f"d∘d != 0 over Z between degrees {q} and {q-2}")

    def homology(self, upto=None):
        """H_q as AbelianGroup for q = 0..upto."""
        upto = self.top_degree if upto is None else min(upto, self.top_degree)
        out = []
        for q in range(upto + 1):
            if q == 0:
                kernel = [[1 if i == j else 0 for j in range(self.ranks[0])]
                          for i in range(self.ranks[0])]
            else:
                cols = integer_kernel_basis(self.diff(q))
                kernel = [[col[i] for col in cols] for i in range(self.ranks[q])]
            k = len(kernel[0]) if kernel else 0
            if self.ranks[q] == 0 or k == 0:
                out.append(AbelianGroup(0))
                continue
            kmat = IntegerMatrix(kernel)
            dqp1 = self.diff(q + 1)
            bcols = [[dqp1.data[i][j] for i in range(dqp1.rows)]
                     for j in range(dqp1.cols)]
            if bcols:
                xcols = solve_integer(kmat, bcols)
                x = IntegerMatrix([[col[i] for col in xcols] for i in range(k)])
            else:
                x = IntegerMatrix.zero(k, 0)
            out.append(AbelianGroup.from_cokernel(x))
        return out

    def rationalize(self):
        return ChainComplex(
            self.ranks,
            {q: d.to_sparse() for q, d in self._diffs.items()},
            check=False)


def homology_of_integer_complex(complex_, upto=None):
    return complex_.homology(upto=upto)
