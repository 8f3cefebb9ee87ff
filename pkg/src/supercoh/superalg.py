"""Super vector spaces, restricted Lie superalgebras and their modules.

Conventions: a basis is always ordered even part first, then odd part.
Brackets are stored as structure constants c[i, j, :] = [x_i, x_j] in basis
coordinates.  The p-th power map is stored only on even basis elements;
its extension to arbitrary even vectors is computed from Jacobson's
additivity rule, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import UsageError, ValidationError
from .gflin import MatGF, check_modulus, nullspace

EVEN, ODD = 0, 1


@dataclass(frozen=True)
class SuperSpace:
    """A Z/2-graded space given by named even and odd basis vectors."""

    even_names: tuple
    odd_names: tuple

    def __post_init__(self):
        object.__setattr__(self, "even_names", tuple(self.even_names))
        object.__setattr__(self, "odd_names", tuple(self.odd_names))
        names = self.even_names + self.odd_names
        if len(set(names)) != len(names):
            raise UsageError("basis names must be unique")

    @property
    def n_even(self):
        return len(self.even_names)

    @property
    def n_odd(self):
        return len(self.odd_names)

    @property
    def dim(self):
        return self.n_even + self.n_odd

    @property
    def names(self):
        return self.even_names + self.odd_names

    def parity(self, i):
        return EVEN if i < self.n_even else ODD

    def parities(self):
        return tuple(self.parity(i) for i in range(self.dim))

    def index(self, name):
        return self.names.index(name)

    def even_indices(self):
        return tuple(range(self.n_even))

    def odd_indices(self):
        return tuple(range(self.n_even, self.dim))


def _frozen(arr):
    arr = np.asarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class LieSuperAlgebra:
    """A finite-dimensional Lie superalgebra over GF(p) with a p-th power map.

    ``brackets[i, j, :]`` holds [x_i, x_j]; ``pmap[i]`` (even i only) holds
    x_i^[p] as a coordinate vector supported on the even part.  Instances
    are immutable after construction.
    """

    def __init__(self, space, p, brackets, pmap=None, strongly_abelian_coerced=False):
        check_modulus(p)
        self.space = space
        self.p = p
        n = space.dim
        brk = np.asarray(brackets, dtype=np.int64) % p
        if brk.shape != (n, n, n):
            raise UsageError(f"structure constants must be {n}x{n}x{n}")
        self.brackets = _frozen(brk)
        pm = {}
        for i, vec in (pmap or {}).items():
            if space.parity(i) != EVEN:
                raise UsageError("p-map is defined on even basis elements only")
            v = np.asarray(vec, dtype=np.int64) % p
            if v.shape != (n,):
                raise UsageError("p-map image has wrong length")
            if any(v[j] for j in space.odd_indices()):
                raise UsageError("p-map image must lie in the even part")
            pm[i] = _frozen(v)
        for i in space.even_indices():
            if i not in pm:
                pm[i] = _frozen(np.zeros(n, dtype=np.int64))
        self.pmap = pm
        self.strongly_abelian_coerced = strongly_abelian_coerced

    @property
    def dim(self):
        return self.space.dim

    def parity(self, i):
        return self.space.parity(i)

    def zero(self):
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, i):
        v = self.zero()
        v[i] = 1
        return v

    def bracket_basis(self, i, j):
        return self.brackets[i, j]

    def bracket(self, u, v):
        u = np.asarray(u, dtype=np.int64) % self.p
        v = np.asarray(v, dtype=np.int64) % self.p
        out = np.einsum("i,j,ijk->k", u, v, self.brackets)
        return out % self.p

    def ad_basis(self, i):
        # column j of ad(x_i) is [x_i, x_j]
        return self.brackets[i].T % self.p

    def ad(self, v):
        v = np.asarray(v, dtype=np.int64) % self.p
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, c in enumerate(v):
            if c:
                out = (out + c * self.ad_basis(i)) % self.p
        return out

    def pmap_basis(self, i):
        return self.pmap[i]

    def is_even_vector(self, v):
        return not any(int(v[j]) % self.p for j in self.space.odd_indices())


@dataclass
class Violation:
    check: str
    indices: tuple
    message: str


@dataclass
class ValidationReport:
    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def record(self, check, indices, message):
        self.violations.append(Violation(check, tuple(indices), message))

    def summary(self):
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  [{v.check}] at {v.indices}: {v.message}" for v in self.violations]
        return "\n".join(lines)


def validate_lie_super(g):
    """Check parity additivity, super skew-symmetry and the super Jacobi law."""
    rep = ValidationReport("lie-superalgebra")
    n, p = g.dim, g.p
    par = g.space.parities()
    for i in range(n):
        for j in range(n):
            vec = g.brackets[i, j]
            target = (par[i] + par[j]) % 2
            for k in range(n):
                if vec[k] and par[k] != target:
                    rep.record("parity", (i, j, k),
                               f"[x_{i},x_{j}] has a component of wrong parity at {k}")
            sign = -1 if (par[i] and par[j]) else 1
            expect = (-sign * g.brackets[j, i]) % p
            if not np.array_equal(vec % p, expect):
                rep.record("skew", (i, j), "super skew-symmetry fails")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = g.bracket(g.basis_vector(i), g.brackets[j, k])
                rhs = g.bracket(g.brackets[i, j], g.basis_vector(k))
                sign = -1 if (par[i] and par[j]) else 1
                rhs = (rhs + sign * g.bracket(g.basis_vector(j), g.brackets[i, k])) % p
                if not np.array_equal(lhs, rhs):
                    rep.record("jacobi", (i, j, k), "super Jacobi identity fails")
    return rep


def jacobson_terms(g, x, y):
    """The correction terms s_1..s_{p-1} in (x+y)^[p] = x^[p] + y^[p] + sum s_i.

    i*s_i is the coefficient of t^(i-1) in (ad(t x + y))^(p-1)(x), computed
    by carrying a polynomial in t with vector coefficients through p-1
    bracket applications.
    """
    p = g.p
    x = np.asarray(x, dtype=np.int64) % p
    y = np.asarray(y, dtype=np.int64) % p
    if not (g.is_even_vector(x) and g.is_even_vector(y)):
        raise UsageError("jacobson_terms expects even vectors")
    poly = {0: x}
    for _ in range(p - 1):
        new = {}
        for d, vec in poly.items():
            bx = g.bracket(x, vec)
            if bx.any():
                new[d + 1] = (new.get(d + 1, 0) + bx) % p
            by = g.bracket(y, vec)
            if by.any():
                new[d] = (new.get(d, 0) + by) % p
        poly = {d: v for d, v in new.items() if np.asarray(v).any()}
    out = []
    for i in range(1, p):
        coeff = poly.get(i - 1)
        if coeff is None:
            out.append(g.zero())
        else:
            out.append((pow(i, -1, p) * coeff) % p)
    return out


def pmap_apply(g, v):
    """v^[p] for an arbitrary even vector v, via a left fold of the
    additivity rule over the nonzero coordinates in ascending basis order."""
    p = g.p
    v = np.asarray(v, dtype=np.int64) % p
    if not g.is_even_vector(v):
        raise UsageError("p-map applies to even vectors only")
    support = [i for i in g.space.even_indices() if v[i]]
    total = g.zero()
    partial = g.zero()
    for i in support:
        term = (v[i] * g.basis_vector(i)) % p
        # (c x)^[p] = c^p x^[p] = c x^[p] over GF(p)
        total = (total + v[i] * g.pmap_basis(i)) % p
        if partial.any():
            for s in jacobson_terms(g, partial, term):
                total = (total + s) % p
        partial = (partial + term) % p
    return total


def validate_pmap(g):
    """Check ad(x^[p]) = ad(x)^p on the basis and order-independence of the
    additivity rule on pairs of even basis elements."""
    rep = ValidationReport("p-map")
    p = g.p
    for i in g.space.even_indices():
        lhs = g.ad(g.pmap_basis(i))
        rhs = np.linalg.matrix_power(g.ad_basis(i), p) % p
        if not np.array_equal(lhs, rhs):
            rep.record("adp", (i,), f"ad(x_{i}^[p]) != ad(x_{i})^p")
    evens = g.space.even_indices()
    for a in range(len(evens)):
        for b in range(a + 1, len(evens)):
            i, j = evens[a], evens[b]
            fwd = g.zero()
            for s in jacobson_terms(g, g.basis_vector(i), g.basis_vector(j)):
                fwd = (fwd + s) % p
            bwd = g.zero()
            for s in jacobson_terms(g, g.basis_vector(j), g.basis_vector(i)):
                bwd = (bwd + s) % p
            if not np.array_equal(fwd, bwd):
                rep.record("additivity", (i, j),
                           "Jacobson sums disagree when the fold order is swapped")
    return rep


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

class Representation:
    """A g-module given by one action matrix per basis element of g."""

    def __init__(self, g, space, mats):
        self.g = g
        self.space = space
        d = space.dim
        if len(mats) != g.dim:
            raise UsageError("one action matrix per basis element of g required")
        ms = []
        for m in mats:
            arr = np.asarray(m, dtype=np.int64) % g.p
            if arr.shape != (d, d):
                raise UsageError(f"action matrices must be {d}x{d}")
            ms.append(_frozen(arr))
        self.mats = tuple(ms)

    @property
    def dim(self):
        return self.space.dim

    @property
    def p(self):
        return self.g.p

    def act_matrix(self, gvec):
        gvec = np.asarray(gvec, dtype=np.int64) % self.p
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, c in enumerate(gvec):
            if c:
                out = (out + c * self.mats[i]) % self.p
        return out

    def act(self, gvec, mvec):
        return (self.act_matrix(gvec) @ (np.asarray(mvec) % self.p)) % self.p


def trivial_module(g, name="m"):
    space = SuperSpace((name,), ())
    zero = np.zeros((1, 1), dtype=np.int64)
    return Representation(g, space, [zero] * g.dim)


def adjoint_module(g):
    space = SuperSpace(tuple(f"ad:{s}" for s in g.space.even_names),
                       tuple(f"ad:{s}" for s in g.space.odd_names))
    return Representation(g, space, [g.ad_basis(i) for i in range(g.dim)])


def validate_module(g, rep, restricted=False):
    """Check grading, bracket compatibility and (optionally) rho(x)^p = rho(x^[p])."""
    report = ValidationReport("module")
    p = g.p
    mpar = rep.space.parities()
    gpar = g.space.parities()
    for i in range(g.dim):
        mat = rep.mats[i]
        for a in range(rep.dim):
            for b in range(rep.dim):
                if mat[a, b] and mpar[a] != (mpar[b] + gpar[i]) % 2:
                    report.record("grading", (i, a, b),
                                  f"rho(x_{i}) breaks the grading at ({a},{b})")
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = rep.act_matrix(g.brackets[i, j])
            sign = -1 if (gpar[i] and gpar[j]) else 1
            rhs = (rep.mats[i] @ rep.mats[j] - sign * rep.mats[j] @ rep.mats[i]) % p
            if not np.array_equal(lhs, rhs):
                report.record("bracket", (i, j), "rho([x_i,x_j]) != super commutator")
    if restricted:
        for i in g.space.even_indices():
            lhs = np.linalg.matrix_power(rep.mats[i], p) % p
            rhs = rep.act_matrix(g.pmap_basis(i))
            if not np.array_equal(lhs, rhs):
                report.record("restricted", (i,), f"rho(x_{i})^p != rho(x_{i}^[p])")
    return report


def hom_module_units(N, K):
    """Matrix-unit basis of Hom(N, K), even units first.

    Unit (k, j) sends N-basis j to K-basis k; its parity is |k| + |j|.
    """
    evens, odds = [], []
    for k in range(K.dim):
        for j in range(N.dim):
            par = (K.space.parity(k) + N.space.parity(j)) % 2
            (evens if par == EVEN else odds).append((k, j))
    return tuple(evens + odds)


def hom_module(g, N, K):
    """Hom_k(N, K) as a g-module: (x.m)(a) = x.m(a) - (-1)^{|x||m|} m(x.a)."""
    if N.g is not g or K.g is not g:
        raise UsageError("N and K must be modules over the same algebra")
    units = hom_module_units(N, K)
    pos = {u: t for t, u in enumerate(units)}
    d = len(units)
    n_even = sum(1 for (k, j) in units
                 if (K.space.parity(k) + N.space.parity(j)) % 2 == EVEN)
    names_e = tuple(f"[{K.space.names[k]}<-{N.space.names[j]}]" for (k, j) in units[:n_even])
    names_o = tuple(f"[{K.space.names[k]}<-{N.space.names[j]}]" for (k, j) in units[n_even:])
    space = SuperSpace(names_e, names_o)
    p = g.p
    mats = []
    for i in range(g.dim):
        mat = np.zeros((d, d), dtype=np.int64)
        for t, (k, j) in enumerate(units):
            upar = (K.space.parity(k) + N.space.parity(j)) % 2
            sign = -1 if (g.parity(i) and upar) else 1
            for k2 in range(K.dim):
                c = K.mats[i][k2, k]
                if c:
                    mat[pos[(k2, j)], t] = (mat[pos[(k2, j)], t] + c) % p
            for j2 in range(N.dim):
                c = N.mats[i][j, j2]
                if c:
                    mat[pos[(k, j2)], t] = (mat[pos[(k, j2)], t] - sign * c) % p
        mats.append(mat)
    return Representation(g, space, mats)


def invariants(g, rep):
    """(M^g, M_0^g): vectors killed by every rho(x_i), and the even ones."""
    p = g.p
    d = rep.dim
    rows = []
    for i in range(g.dim):
        for a in range(d):
            row = {b: int(rep.mats[i][a, b]) for b in range(d) if rep.mats[i][a, b]}
            rows.append(row)
    full = nullspace(MatGF.from_rows(rows, d, p))
    odd_rows = list(rows)
    for j in rep.space.odd_indices():
        odd_rows.append({j: 1})
    even_part = nullspace(MatGF.from_rows(odd_rows, d, p))
    return full, even_part


# ---------------------------------------------------------------------------
# p-semilinear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiLinearMap:
    """A p-semilinear map from the even part of g into a coordinate space.

    Over the prime field, f(c v) = c^p f(v) = c f(v), so the map is linear
    and is determined by its values on the even basis: values[t] is the
    image of the t-th even basis element.
    """

    g: object
    target_dim: int
    values: tuple

    def __post_init__(self):
        vals = tuple(tuple(int(x) % self.g.p for x in row) for row in self.values)
        if len(vals) != self.g.space.n_even:
            raise UsageError("one value per even basis element required")
        if any(len(row) != self.target_dim for row in vals):
            raise UsageError("value length mismatch")
        object.__setattr__(self, "values", vals)

    def value_on_basis(self, t):
        return self.values[t]

    def value_on_vector(self, gvec):
        p = self.g.p
        out = [0] * self.target_dim
        for t, i in enumerate(self.g.space.even_indices()):
            c = int(gvec[i]) % p
            if c:
                for a, v in enumerate(self.values[t]):
                    out[a] = (out[a] + c * v) % p
        return tuple(out)

    def plus(self, other):
        vals = tuple(tuple((a + b) % self.g.p for a, b in zip(r1, r2))
                     for r1, r2 in zip(self.values, other.values))
        return SemiLinearMap(self.g, self.target_dim, vals)

    def negated(self):
        vals = tuple(tuple((-a) % self.g.p for a in r) for r in self.values)
        return SemiLinearMap(self.g, self.target_dim, vals)


def semilinear_zero(g, target_dim):
    return SemiLinearMap(g, target_dim, tuple((0,) * target_dim
                                              for _ in range(g.space.n_even)))


def semilinear_space(g, target):
    """Basis of S(g_0, W) for a subspace W: all elementary maps x_i -> w_j.

    Over GF(p) the p-semilinear maps coincide with the linear ones, so the
    dimension is n_even(g) * dim W.  Returns maps ordered by (even slot,
    W-basis row); the matching index pairs are in ``.pairs`` order.
    """
    out = []
    for t in range(g.space.n_even):
        for w in target.basis_rows:
            vals = [[0] * target.ambient_dim for _ in range(g.space.n_even)]
            vals[t] = list(w)
            out.append(SemiLinearMap(g, target.ambient_dim,
                                     tuple(tuple(r) for r in vals)))
    return out


def semilinear_pairs(g, target):
    return tuple((t, j) for t in range(g.space.n_even) for j in range(target.dim))


# ---------------------------------------------------------------------------
# direct sums and the semidirect product
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SumLayout:
    """Index bookkeeping for E = g (+) M with the even-then-odd convention.

    E's even block is g_0 then M_0; its odd block is g_1 then M_1.
    """

    g_space: SuperSpace
    m_space: SuperSpace

    def _dims(self):
        return (self.g_space.n_even, self.m_space.n_even,
                self.g_space.n_odd, self.m_space.n_odd)

    @property
    def dim(self):
        return self.g_space.dim + self.m_space.dim

    def g_to_e(self, i):
        ge, me, _, _ = self._dims()
        if i < ge:
            return i
        return ge + me + (i - ge)

    def m_to_e(self, j):
        ge, me, go, _ = self._dims()
        if j < me:
            return ge + j
        return ge + me + go + (j - me)

    def e_source(self, e):
        """('g', i) or ('m', j) for an E index."""
        ge, me, go, _ = self._dims()
        if e < ge:
            return ("g", e)
        if e < ge + me:
            return ("m", e - ge)
        if e < ge + me + go:
            return ("g", ge + (e - ge - me))
        return ("m", me + (e - ge - me - go))

    def space(self):
        gnames = set(self.g_space.names)
        depth = 1
        while True:
            prefix = "M:" * depth
            tagged = [prefix + s for s in self.m_space.names]
            if gnames.isdisjoint(tagged) and len(set(tagged)) == len(tagged):
                break
            depth += 1

        def tag(names):
            return tuple(prefix + s for s in names)
        return SuperSpace(self.g_space.even_names + tag(self.m_space.even_names),
                          self.g_space.odd_names + tag(self.m_space.odd_names))

    def embed_g(self, gvec):
        out = np.zeros(self.dim, dtype=np.int64)
        for i, c in enumerate(gvec):
            out[self.g_to_e(i)] = c
        return out

    def embed_m(self, mvec):
        out = np.zeros(self.dim, dtype=np.int64)
        for j, c in enumerate(mvec):
            out[self.m_to_e(j)] = c
        return out

    def project_g(self, evec):
        out = np.zeros(self.g_space.dim, dtype=np.int64)
        for e, c in enumerate(evec):
            kind, idx = self.e_source(e)
            if kind == "g":
                out[idx] = c
        return out

    def project_m(self, evec):
        out = np.zeros(self.m_space.dim, dtype=np.int64)
        for e, c in enumerate(evec):
            kind, idx = self.e_source(e)
            if kind == "m":
                out[idx] = c
        return out


def semidirect(g, rep):
    """The trivial extension g |x M: M an abelian ideal with zero p-map,
    bracket [(x1,m1),(x2,m2)] = ([x1,x2], x1.m2 - (-1)^{|x1||x2|} x2.m1),
    p-map (x,m)^[p] = (x^[p], x^{p-1}.m) encoded on basis elements."""
    layout = SumLayout(g.space, rep.space)
    space = layout.space()
    n = space.dim
    p = g.p
    brk = np.zeros((n, n, n), dtype=np.int64)
    for i in range(g.dim):
        ei = layout.g_to_e(i)
        for j in range(g.dim):
            brk[ei, layout.g_to_e(j)] = layout.embed_g(g.brackets[i, j])
    gpar = g.space.parities()
    mpar = rep.space.parities()
    for i in range(g.dim):
        ei = layout.g_to_e(i)
        for j in range(rep.dim):
            fj = layout.m_to_e(j)
            act = rep.mats[i][:, j] % p
            brk[ei, fj] = layout.embed_m(act)
            sign = -1 if (gpar[i] and mpar[j]) else 1
            brk[fj, ei] = (-sign * brk[ei, fj]) % p
    pm = {}
    for i in g.space.even_indices():
        pm[layout.g_to_e(i)] = layout.embed_g(g.pmap_basis(i))
    for j in rep.space.even_indices():
        pm[layout.m_to_e(j)] = np.zeros(n, dtype=np.int64)
    E = LieSuperAlgebra(space, p, brk, pm, strongly_abelian_coerced=True)
    return E, layout


def coerce_strongly_abelian(rep):
    """View a module as a strongly abelian restricted Lie superalgebra:
    zero bracket, zero p-map.  Returns the algebra with the coercion flag."""
    n = rep.dim
    return LieSuperAlgebra(rep.space, rep.p, np.zeros((n, n, n), dtype=np.int64),
                           {j: np.zeros(n, dtype=np.int64)
                            for j in rep.space.even_indices()},
                           strongly_abelian_coerced=True)


def require_valid(g, rep=None, restricted=True):
    """Raise ValidationError unless g (and optionally rep) pass validation."""
    r1 = validate_lie_super(g)
    if not r1.ok:
        raise ValidationError(r1.summary(), r1)
    r2 = validate_pmap(g)
    if not r2.ok:
        raise ValidationError(r2.summary(), r2)
    if rep is not None:
        r3 = validate_module(g, rep, restricted=restricted)
        if not r3.ok:
            raise ValidationError(r3.summary(), r3)
