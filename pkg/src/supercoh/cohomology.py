"""Cochain complexes and cohomology in degrees 0..2.

Two complexes are built for a restricted Lie superalgebra g and a module M:

* the Lie-type complex C^n(g, M) on Lambda(g_0) (x) S(g_1), whose
  cohomology is the ordinary H^n(g, M);
* the bar-type complex of even multilinear maps on the augmentation ideal
  u(g)^+, whose cohomology is the restricted H^n_*(g, M).

All cochains are even maps, so a basis functional pairs an argument tuple
with a value coordinate of matching parity.  Degree-3 cochain spaces are
materialized only as differential targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolationError, UsageError
from .gflin import MatGF, Subspace, image, nullspace, quotient_representatives
from .superalg import EVEN, ODD, pmap_apply

__all__ = [
    "LieCochainBasis", "AssocCochainBasis", "CohomologyResult",
    "lie_cochain_basis", "lie_eval_sign", "lie_differential_matrix",
    "lie_cohomology", "assoc_cochain_basis", "assoc_differential_matrix",
    "restricted_cohomology", "sgn_marked", "comparison_matrix",
    "h1_restricted_via_cocycle_condition", "eval_lie_cochain",
]


# ---------------------------------------------------------------------------
# canonicalization of argument tuples
# ---------------------------------------------------------------------------

def lie_eval_sign(g, idxs):
    """Sort basis indices into (evens | odds, each ascending) with the
    Koszul sign: swapping adjacent arguments u, v costs -(-1)^{|u||v|}.
    Returns (evens, odds, sign) or None when a repeated even index kills
    the term."""
    par = g.space.parities()
    seq = list(idxs)
    sign = 1
    # insertion sort by (parity, index), counting signed adjacent swaps
    for a in range(1, len(seq)):
        b = a
        while b > 0 and (par[seq[b - 1]], seq[b - 1]) > (par[seq[b]], seq[b]):
            if par[seq[b - 1]] and par[seq[b]]:
                pass  # odd past odd: -(-1)^1 = +1
            else:
                sign = -sign
            seq[b - 1], seq[b] = seq[b], seq[b - 1]
            b -= 1
    evens = tuple(i for i in seq if par[i] == EVEN)
    odds = tuple(i for i in seq if par[i] == ODD)
    if len(set(evens)) != len(evens):
        return None
    return evens, odds, sign


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LieCochainBasis:
    """Basis of C^n(g, M): ((evens), (odds), m-coordinate) with the value
    parity equal to the argument parity sum (cochains are even maps)."""

    g: object
    mspace: object
    n: int
    items: tuple
    index: dict

    @property
    def dim(self):
        return len(self.items)


def lie_cochain_basis(g, mspace, n):
    items = []
    evens = g.space.even_indices()
    odds = g.space.odd_indices()
    for n1 in range(n + 1):
        n0 = n - n1
        if n0 > len(evens):
            continue
        for ev in itertools.combinations(evens, n0):
            for od in itertools.combinations_with_replacement(odds, n1):
                for m in range(mspace.dim):
                    if mspace.parity(m) == n1 % 2:
                        items.append((ev, od, m))
    items = tuple(items)
    return LieCochainBasis(g, mspace, n, items,
                           {it: k for k, it in enumerate(items)})


@dataclass(frozen=True)
class AssocCochainBasis:
    """Basis of the bar n-cochains: (tuple of aug-ideal monomial indices,
    m-coordinate) with matching total parity."""

    ualg: object
    mspace: object
    n: int
    items: tuple
    index: dict
    aug: tuple
    aug_index: dict

    @property
    def dim(self):
        return len(self.items)


def assoc_cochain_basis(ualg, mspace, n):
    aug = ualg.aug_basis()
    aug_index = {m: i for i, m in enumerate(aug)}
    pars = [ualg.parity(m) for m in aug]
    items = []
    for tup in itertools.product(range(len(aug)), repeat=n):
        tpar = sum(pars[s] for s in tup) % 2
        for m in range(mspace.dim):
            if mspace.parity(m) == tpar:
                items.append((tup, m))
    items = tuple(items)
    return AssocCochainBasis(ualg, mspace, n, items,
                             {it: k for k, it in enumerate(items)},
                             aug, aug_index)


# ---------------------------------------------------------------------------
# Lie-type differential
# ---------------------------------------------------------------------------

def lie_differential_matrix(g, rep, n, variant="unified"):
    """Matrix of delta_n : C^n(g, M) -> C^{n+1}(g, M).

    ``variant="unified"`` uses the single-formula differential on mixed
    tuples; ``variant="split"`` uses the block form with separate even
    action, odd action and three bracket sums.  Both must agree; a
    regression test compares them.
    """
    src = lie_cochain_basis(g, rep.space, n)
    dst = lie_cochain_basis(g, rep.space, n + 1)
    p = g.p
    par = g.space.parities()
    rows = []
    for (ev, od, nu) in dst.items:
        args = ev + od
        row = {}

        def add(col_item, coeff):
            if coeff % p == 0:
                return
            col = src.index.get(col_item)
            if col is None:
                raise InvariantViolationError(
                    f"differential hit a parity-invalid cochain {col_item}")
            row[col] = (row.get(col, 0) + coeff) % p

        if variant == "unified":
            _unified_terms(g, rep, src, args, nu, add)
        elif variant == "split":
            _split_terms(g, rep, src, ev, od, nu, add)
        else:
            raise UsageError(f"unknown variant {variant!r}")
        rows.append({c: v for c, v in row.items() if v})
    return MatGF.from_rows(rows, src.dim, p)


def _unified_terms(g, rep, src, args, nu, add):
    p = g.p
    par = g.space.parities()
    k = len(args)
    for s in range(k):
        exp = s + par[args[s]] * sum(par[args[i]] for i in range(s))
        sign = -1 if exp % 2 else 1
        rest = args[:s] + args[s + 1:]
        canon = lie_eval_sign(g, rest)
        if canon is None:
            continue
        evs, ods, csign = canon
        mat = rep.mats[args[s]]
        for mu in range(rep.dim):
            c = mat[nu, mu]
            if c:
                add((evs, ods, mu), sign * csign * int(c))
    for s in range(k):
        for t in range(s + 1, k):
            pres_s = sum(par[args[i]] for i in range(s))
            pres_t = sum(par[args[i]] for i in range(t))
            exp = (s + 1) + (t + 1) + par[args[s]] * pres_s \
                + par[args[t]] * pres_t + par[args[s]] * par[args[t]]
            sign = -1 if exp % 2 else 1
            rest = args[:s] + args[s + 1:t] + args[t + 1:]
            vec = g.brackets[args[s], args[t]]
            for b, coeff in enumerate(vec):
                if not coeff:
                    continue
                canon = lie_eval_sign(g, (b,) + rest)
                if canon is None:
                    continue
                evs, ods, csign = canon
                add((evs, ods, nu), sign * csign * int(coeff))


def _split_terms(g, rep, src, ev, od, nu, add):
    p = g.p
    n0, n1 = len(ev), len(od)
    for s in range(n0):
        sign = -1 if s % 2 else 1  # (-1)^{s-1}, s 1-based
        rest = (ev[:s] + ev[s + 1:], od)
        mat = rep.mats[ev[s]]
        for mu in range(rep.dim):
            c = mat[nu, mu]
            if c:
                add((rest[0], rest[1], mu), sign * int(c))
    for t in range(n1):
        sign = -1 if n0 % 2 else 1  # (-1)^{n0}
        rest = (ev, od[:t] + od[t + 1:])
        mat = rep.mats[od[t]]
        for mu in range(rep.dim):
            c = mat[nu, mu]
            if c:
                add((rest[0], rest[1], mu), sign * int(c))
    for s in range(n0):
        for t in range(s + 1, n0):
            sign = -1 if (s + t) % 2 else 1  # (-1)^{s+t}, both 1-based
            rest = ev[:s] + ev[s + 1:t] + ev[t + 1:]
            vec = g.brackets[ev[s], ev[t]]
            for b, coeff in enumerate(vec):
                if not coeff:
                    continue
                canon = lie_eval_sign(g, (b,) + rest + od)
                if canon is None:
                    continue
                evs, ods, csign = canon
                add((evs, ods, nu), sign * csign * int(coeff))
    for s in range(n0):
        for t in range(n1):
            sign = -1 if (s + 1) % 2 else 1  # (-1)^s, s 1-based
            vec = g.brackets[ev[s], od[t]]
            rest_ev = ev[:s] + ev[s + 1:]
            rest_od = od[:t] + od[t + 1:]
            for b, coeff in enumerate(vec):
                if not coeff:
                    continue
                canon = lie_eval_sign(g, rest_ev + (b,) + rest_od)
                if canon is None:
                    continue
                evs, ods, csign = canon
                add((evs, ods, nu), sign * csign * int(coeff))
    for s in range(n1):
        for t in range(s + 1, n1):
            vec = g.brackets[od[s], od[t]]
            rest_od = od[:s] + od[s + 1:t] + od[t + 1:]
            for b, coeff in enumerate(vec):
                if not coeff:
                    continue
                canon = lie_eval_sign(g, (b,) + ev + rest_od)
                if canon is None:
                    continue
                evs, ods, csign = canon
                add((evs, ods, nu), -int(coeff) * csign)


# ---------------------------------------------------------------------------
# bar-type differential
# ---------------------------------------------------------------------------

def assoc_differential_matrix(ualg, rep, n, basis_cache=None):
    """Matrix of the normalized bar differential on u(g)^+ cochains:

    (delta f)(s_1..s_{n+1}) = s_1 . f(s_2..s_{n+1})
                              + sum_i (-1)^i f(s_1,.., s_i s_{i+1}, .., s_{n+1}).

    Products of augmentation-ideal elements stay in the ideal; a unit
    component in a straightened product would be a bug and raises.
    """
    src = _cached_basis(basis_cache, ualg, rep.space, n)
    dst = _cached_basis(basis_cache, ualg, rep.space, n + 1)
    p = ualg.p
    aug = src.aug
    aug_index = src.aug_index
    unit = ualg.unit_monomial()
    rows = []
    for (tup, nu) in dst.items:
        row = {}
        mono1 = aug[tup[0]]
        mat = ualg.action_matrix(rep, mono1)
        rest = tup[1:]
        for mu in range(rep.dim):
            c = mat[nu, mu]
            if c:
                col = src.index.get((rest, mu))
                if col is None:
                    raise InvariantViolationError("bar action term breaks parity")
                row[col] = (row.get(col, 0) + int(c)) % p
        for i in range(1, n + 1):
            sign = -1 if i % 2 else 1
            prod = ualg.monomial_product(aug[tup[i - 1]], aug[tup[i]])
            for mono, c in prod.items():
                if mono == unit:
                    raise InvariantViolationError(
                        "product of augmentation-ideal elements hit the unit")
                w = aug_index[mono]
                col_tup = tup[:i - 1] + (w,) + tup[i + 1:]
                col = src.index.get((col_tup, nu))
                if col is None:
                    raise InvariantViolationError("bar product term breaks parity")
                row[col] = (row.get(col, 0) + sign * int(c)) % p
        rows.append({c: v for c, v in row.items() if v})
    return MatGF.from_rows(rows, src.dim, p)


def _cached_basis(cache, ualg, mspace, n):
    if cache is None:
        return assoc_cochain_basis(ualg, mspace, n)
    key = (id(ualg), id(mspace), n)
    if key not in cache:
        cache[key] = assoc_cochain_basis(ualg, mspace, n)
    return cache[key]


# ---------------------------------------------------------------------------
# cohomology results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CohomologyResult:
    """Z, B and canonical representatives of H = Z/B in cochain coordinates."""

    n: int
    kind: str
    cochain_dim: int
    Z: Subspace
    B: Subspace
    representatives: tuple

    @property
    def dim_h(self):
        return self.Z.dim - self.B.dim

    def class_coords(self, vec):
        """Coordinates of the class of a cocycle in the representative basis."""
        if not self.Z.contains(vec):
            raise UsageError("vector is not a cocycle")
        red = self.B.reduce(vec)
        out = []
        work = list(red)
        p = self.Z.p
        for rep in self.representatives:
            piv = next(j for j, v in enumerate(rep) if v)
            c = work[piv]
            out.append(c)
            if c:
                for j, v in enumerate(rep):
                    if v:
                        work[j] = (work[j] - c * v) % p
        if any(work):
            raise InvariantViolationError("class reduction left a residue")
        return tuple(out)

    def representative_vector(self, k):
        return self.representatives[k]


def _make_result(n, kind, dim, Z, B):
    reps = tuple(tuple(r) for r in quotient_representatives(Z, B))
    return CohomologyResult(n, kind, dim, Z, B, reps)


def lie_cohomology(g, rep, n):
    """Ordinary cohomology H^n(g, M) = Ker delta_n / Im delta_{n-1}, n <= 2."""
    if n not in (0, 1, 2):
        raise UsageError("degrees 0..2 only")
    src = lie_cochain_basis(g, rep.space, n)
    Z = nullspace(lie_differential_matrix(g, rep, n))
    if n == 0:
        B = Subspace.zero(src.dim, g.p)
    else:
        B = image(lie_differential_matrix(g, rep, n - 1))
    return _make_result(n, "lie", src.dim, Z, B)


def restricted_cohomology(g, rep, n, ualg=None, basis_cache=None):
    """Restricted cohomology H^n_*(g, M) from the bar complex on u(g)^+."""
    if n not in (0, 1, 2):
        raise UsageError("degrees 0..2 only")
    if ualg is None:
        from .envelope import UAlgebra
        ualg = UAlgebra(g, restricted=True)
    src = _cached_basis(basis_cache, ualg, rep.space, n)
    Z = nullspace(assoc_differential_matrix(ualg, rep, n, basis_cache))
    if n == 0:
        B = Subspace.zero(src.dim, g.p)
    else:
        B = image(assoc_differential_matrix(ualg, rep, n - 1, basis_cache))
    return _make_result(n, "restricted", src.dim, Z, B)


# ---------------------------------------------------------------------------
# comparison between the two cochain types
# ---------------------------------------------------------------------------

def sgn_marked(sigma, n0):
    """Generalized sign of a permutation with the first n0 letters marked.

    sigma is a tuple of 1-based images (sigma(1), ..., sigma(n)).  Each
    sigma-bar(i) counts marked letters j <= n0 not yet consumed with
    j < sigma(i); the sign is (-1)^{sum of sigma-bar}."""
    n = len(sigma)
    if not 0 <= n0 <= n:
        raise UsageError("n0 out of range")
    total = 0
    seen = set()
    for i in range(n):
        s = sigma[i]
        total += sum(1 for j in range(1, n0 + 1) if j not in seen and j < s)
        seen.add(s)
    return -1 if total % 2 else 1


def comparison_matrix(ualg, rep, n, basis_cache=None):
    """Matrix of the cochain comparison C^n_assoc -> C^n_lie for n in {1, 2}:

    f'(x_1..x_n) = sum_{sigma} sgn_marked(sigma, n0) f(x_sigma(1)..x_sigma(n))

    with arguments ordered evens-then-odds and n0 the number of even ones.
    Only values on degree-one monomials (g itself) are consulted.
    """
    if n not in (1, 2):
        raise UsageError("comparison implemented for n in {1, 2}")
    g = ualg.g
    src = _cached_basis(basis_cache, ualg, rep.space, n)
    dst = lie_cochain_basis(g, rep.space, n)
    p = g.p
    deg1 = {}
    for i in range(g.dim):
        mono = [0] * ualg.ngen
        mono[ualg.pos_of[i]] = 1
        deg1[i] = src.aug_index[tuple(mono)]
    rows = []
    for (ev, od, nu) in dst.items:
        args = ev + od
        n0 = len(ev)
        row = {}
        for sigma in itertools.permutations(range(1, n + 1)):
            sgn = sgn_marked(sigma, n0)
            tup = tuple(deg1[args[s - 1]] for s in sigma)
            col = src.index.get((tup, nu))
            if col is None:
                raise InvariantViolationError("comparison hit invalid parity")
            row[col] = (row.get(col, 0) + sgn) % p
        rows.append({c: v for c, v in row.items() if v})
    return MatGF.from_rows(rows, src.dim, p)


# ---------------------------------------------------------------------------
# cochain evaluation helpers
# ---------------------------------------------------------------------------

def eval_lie_cochain(basis, vec, idxs, p):
    """Value (an M-vector) of a Lie cochain on a tuple of basis indices."""
    canon = lie_eval_sign(basis.g, idxs)
    out = np.zeros(basis.mspace.dim, dtype=np.int64)
    if canon is None:
        return out
    evs, ods, sign = canon
    for m in range(basis.mspace.dim):
        col = basis.index.get((evs, ods, m))
        if col is not None and vec[col]:
            out[m] = (sign * vec[col]) % p
    return out


# ---------------------------------------------------------------------------
# the first restricted cohomology via the p-th power condition
# ---------------------------------------------------------------------------

def h1_restricted_via_cocycle_condition(g, rep):
    """H^1_* computed on the Lie side: classes of Lie 1-cocycles f with
    rho(x)^{p-1} f(x) = f(x^[p]) for all even x, modulo 1-coboundaries.

    The condition is imposed on every even basis element and on all pairwise
    sums of even basis elements (it is not linear in x a priori); over the
    prime field this pins down the same subspace at this scale.
    """
    p = g.p
    basis = lie_cochain_basis(g, rep.space, 1)
    d1 = lie_differential_matrix(g, rep, 1)
    elim_rows = list(d1.row_dicts())

    def condition_rows(xvec):
        xvec = np.asarray(xvec, dtype=np.int64) % p
        mat = np.linalg.matrix_power(rep.act_matrix(xvec), p - 1) % p
        pvec = pmap_apply(g, xvec)
        out = []
        for nu in range(rep.dim):
            row = {}
            for i, c in enumerate(xvec):
                if not c:
                    continue
                for mu in range(rep.dim):
                    col = basis.index.get(((i,), (), mu)) if g.parity(i) == EVEN \
                        else basis.index.get(((), (i,), mu))
                    if col is not None and mat[nu, mu]:
                        row[col] = (row.get(col, 0) + int(c) * int(mat[nu, mu])) % p
            for j, c in enumerate(pvec):
                if not c:
                    continue
                col = basis.index.get(((j,), (), nu)) if g.parity(j) == EVEN \
                    else basis.index.get(((), (j,), nu))
                if col is not None:
                    row[col] = (row.get(col, 0) - int(c)) % p
            out.append({k: v for k, v in row.items() if v})
        return out

    evens = g.space.even_indices()
    for i in evens:
        elim_rows.extend(condition_rows(g.basis_vector(i)))
    for a in range(len(evens)):
        for b in range(a + 1, len(evens)):
            v = g.basis_vector(evens[a]) + g.basis_vector(evens[b])
            elim_rows.extend(condition_rows(v))
    V = nullspace(MatGF.from_rows(elim_rows, basis.dim, p))
    B = image(lie_differential_matrix(g, rep, 0))
    return _make_result(1, "restricted-via-condition", basis.dim, V, B)
