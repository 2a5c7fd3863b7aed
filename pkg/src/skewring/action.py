"""Group actions on the field: Theta homomorphisms and 2-cocycles.

Theta: G -> Aut(K) is stored as a table of Frobenius exponents (Aut(K) is
cyclic of order m, generated by x -> x^p).  A cocycle alpha: G x G -> K* is
an n x n table of nonzero element codes, row = first argument; it must be
normalized (alpha(g,1) = alpha(1,g) = 1) and satisfy

    alpha(g1, g2 g3) alpha(g2, g3) = alpha(g1 g2, g3) alpha(g1, g2),

and, when paired with a Theta, be stabilized by Theta(G).

Coboundary testing takes discrete logs of all table entries and solves the
resulting linear system over Z/(q-1) exactly, with a Howell-form style
elimination that pivots on unit entries and handles the composite modulus
through gcd combinations and torsion rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (CocycleInvalidError, NotCyclicError, ParseError,
                     ZeroLambdaError)
from .gf import FieldElem, FiniteField
from .groups import Group

EXHAUSTIVE_COCYCLE_LIMIT = 24
COCYCLE_TRIPLE_SAMPLES = 1_000_000


# ---------------------------------------------------------------------------
# Theta


@dataclass(frozen=True)
class ThetaMap:
    """Homomorphism G -> Aut(K) as per-element Frobenius exponents."""

    exps: tuple

    @property
    def n(self):
        return len(self.exps)

    def exp(self, g: int) -> int:
        return self.exps[g]

    def is_trivial(self) -> bool:
        return not any(self.exps)

    def kernel(self) -> list[int]:
        return [g for g, e in enumerate(self.exps) if e == 0]

    def validate(self, group: Group, field: FiniteField) -> list[str]:
        problems = []
        m = field.m
        e = np.asarray(self.exps, dtype=np.int64) % m
        if len(e) != group.n:
            return [f"theta table length {len(e)} != group order {group.n}"]
        if e[0] != 0:
            problems.append("theta(identity) is not the identity automorphism")
        lhs = e[group.table]
        rhs = (e[:, None] + e[None, :]) % m
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j = bad[0]
            problems.append(f"not a homomorphism at ({i},{j})")
        return problems


def theta_trivial(group: Group) -> ThetaMap:
    return ThetaMap((0,) * group.n)


def theta_involutions_frobenius(group: Group) -> ThetaMap:
    """Involutions map to the Frobenius x -> x^p, everything else to the
    identity (the published dihedral prescription)."""
    exps = tuple(1 if (g != 0 and group.mul(g, g) == 0) else 0
                 for g in range(group.n))
    return ThetaMap(exps)


def theta_kernel_power(group: Group, field: FiniteField,
                       kernel_gen: str, exp: int) -> ThetaMap:
    """Kernel = cyclic subgroup generated by the labelled element; on the
    quotient the class of the first element outside the kernel maps to
    Frobenius^exp, extended multiplicatively.

    Supports the index-m cyclic quotient cases used in practice: every
    element must be expressible as (coset rep)^j * kernel element with a
    well-defined j.
    """
    a = group.index_of(kernel_gen)
    kernel = set()
    x = 0
    while x not in kernel:
        kernel.add(x)
        x = group.mul(x, a)
    reps = [g for g in range(group.n) if g not in kernel]
    if not reps:
        return theta_trivial(group)
    b = reps[0]
    exps = [None] * group.n
    for g in kernel:
        exps[g] = 0
    power = 0
    bj = 0
    while any(e is None for e in exps):
        bj = group.mul(b, bj)
        power += 1
        for h in sorted(kernel):
            g = group.mul(bj, h)
            if exps[g] is None:
                exps[g] = (power * exp) % field.m
        if power > group.n:
            raise CocycleInvalidError(
                "kernel-power theta: quotient is not cyclic over the given kernel")
    return ThetaMap(tuple(exps))


def theta_from_exps(exps) -> ThetaMap:
    return ThetaMap(tuple(int(e) for e in exps))


# ---------------------------------------------------------------------------
# Cocycles


@dataclass(frozen=True)
class Cocycle:
    """n x n table of nonzero field-element codes; tab[g, h] = alpha(g_g, g_h)."""

    field: FiniteField
    tab: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "tab", np.asarray(self.tab, dtype=np.int32))

    @property
    def n(self):
        return self.tab.shape[0]

    def entry(self, g: int, h: int) -> FieldElem:
        return FieldElem(self.field, int(self.tab[g, h]))

    def is_trivial(self) -> bool:
        return bool((self.tab == 1).all())

    def is_involutive(self) -> bool:
        """alpha = alpha^-1, i.e. all values are +-1."""
        T = self.field.tables()
        return bool((T.mul[self.tab, self.tab] == 1).all())

    def is_hermitian_fixed(self) -> bool:
        """alpha^q = alpha for q = sqrt(|K|); requires |K| to be a square."""
        if self.field.m % 2:
            return False
        T = self.field.tables()
        return bool((T.frob[self.field.m // 2][self.tab] == self.tab).all())

    def symmetric_on_inverses(self, group: Group) -> bool:
        """alpha(g, g^-1) = alpha(g^-1, g) for all g."""
        idx = np.arange(self.n)
        return bool((self.tab[idx, group.inv] == self.tab[group.inv, idx]).all())

    def inverse(self) -> "Cocycle":
        T = self.field.tables()
        return Cocycle(self.field, T.inv[self.tab])

    def power(self, e: int) -> "Cocycle":
        """Entrywise e-th power (e.g. e = q for the Hermitian condition)."""
        out = np.ones_like(self.tab)
        base = self.tab.copy()
        T = self.field.tables()
        k = e % (self.field.q - 1) if self.field.q > 2 else e % 1
        if self.field.q == 2:
            return Cocycle(self.field, self.tab.copy())
        while k:
            if k & 1:
                out = T.mul[out, base]
            base = T.mul[base, base]
            k >>= 1
        return Cocycle(self.field, out)

    def validate(self, group: Group, theta: ThetaMap | None = None,
                 rng_seed: int = 0) -> list[str]:
        """Report of invariant failures; empty = valid."""
        problems = []
        n = group.n
        tab = self.tab
        if tab.shape != (n, n):
            return [f"table shape {tab.shape} != ({n},{n})"]
        if (tab == 0).any():
            g, h = np.argwhere(tab == 0)[0]
            return [f"zero value at ({g},{h})"]
        if tab.max() >= self.field.q:
            return ["table entry out of field range"]
        if not (tab[0] == 1).all() or not (tab[:, 0] == 1).all():
            problems.append("not normalized: alpha(1,.) or alpha(.,1) != 1")
        T = self.field.tables()
        gt = group.table
        if n <= EXHAUSTIVE_COCYCLE_LIMIT:
            lhs = T.mul[tab[:, gt], tab[None, :, :]]
            rhs = T.mul[tab[gt, :], tab[:, :, None]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                g1, g2, g3 = bad[0]
                problems.append(f"cocycle identity fails at ({g1},{g2},{g3})")
        else:
            rng = np.random.default_rng(rng_seed)
            g1, g2, g3 = rng.integers(0, n, size=(3, COCYCLE_TRIPLE_SAMPLES))
            lhs = T.mul[tab[g1, gt[g2, g3]], tab[g2, g3]]
            rhs = T.mul[tab[gt[g1, g2], g3], tab[g1, g2]]
            if (lhs != rhs).any():
                problems.append("cocycle identity fails (sampled)")
        if theta is not None:
            for e in sorted(set(x % self.field.m for x in theta.exps)):
                if e and (T.frob[e][tab] != tab).any():
                    problems.append(
                        f"not stabilized: Frobenius^{e} moves some value")
                    break
        return problems


def cocycle_trivial(group: Group, field: FiniteField) -> Cocycle:
    return Cocycle(field, np.ones((group.n, group.n), dtype=np.int32))


def cocycle_constacyclic(group: Group, lam: FieldElem) -> Cocycle:
    """alpha_lambda on a cyclic group: 1 if i+j < n, lambda otherwise."""
    if not group.family.startswith("cyclic"):
        raise NotCyclicError("constacyclic cocycle needs cyclic(n) enumeration")
    if lam.is_zero():
        raise ZeroLambdaError("lambda must be nonzero")
    n = group.n
    tab = np.ones((n, n), dtype=np.int32)
    i = np.arange(n)
    tab[(i[:, None] + i[None, :]) >= n] = lam.code
    return Cocycle(lam.field, tab)


def cocycle_from_table(field: FiniteField, rows) -> Cocycle:
    """Rows of field-element codes or FieldElems."""
    conv = [[x.code if isinstance(x, FieldElem) else int(x) for x in row]
            for row in rows]
    return Cocycle(field, np.asarray(conv, dtype=np.int32))


def parse_cocycle_file(field: FiniteField, text: str) -> Cocycle:
    """n lines of n whitespace-separated entries in the field text format."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([field.parse(x).code for x in line.split()])
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError("cocycle file must be a square table")
    return Cocycle(field, np.asarray(rows, dtype=np.int32))


def render_cocycle(c: Cocycle) -> str:
    return "\n".join(" ".join(c.field.render_c(int(v)) for v in row)
                     for row in c.tab)


# ---------------------------------------------------------------------------
# coboundary test: linear algebra over Z/(q-1)


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _unit_for(v: int, N: int) -> tuple[int, int]:
    """Return (g, w) with g = gcd(v, N) and w a unit mod N, w*v = g mod N."""
    g = gcd(v, N)
    v1, N1 = v // g, N // g
    if N1 == 1:
        w0 = 1
    else:
        _, w0, _ = _xgcd(v1 % N1, N1)
        w0 %= N1
    w = w0
    while gcd(w, N) != 1:
        w += N1
    return g, w % N


class _HowellSolver:
    """x . M = b over Z/N with certificate; M given row by row."""

    def __init__(self, N: int, ncols: int, nvars: int):
        self.N = N
        self.ncols = ncols
        self.nvars = nvars
        self.rows: list[tuple[np.ndarray, np.ndarray]] = []
        self.pivots: list[tuple[int, int, int]] = []  # (col, value, row index)
        self._done = False

    def add_row(self, vec, cert_index: int):
        cert = np.zeros(self.nvars, dtype=np.int64)
        cert[cert_index] = 1
        self.rows.append((np.asarray(vec, dtype=np.int64) % self.N, cert))

    def _leading(self, vec):
        nz = np.nonzero(vec)[0]
        return int(nz[0]) if len(nz) else self.ncols

    def echelonize(self):
        N = self.N
        queue = list(self.rows)
        out = []
        for col in range(self.ncols):
            active = [rw for rw in queue if self._leading(rw[0]) == col]
            queue = [rw for rw in queue if self._leading(rw[0]) > col]
            if not active:
                continue
            vec, cert = active[0]
            for v2, c2 in active[1:]:
                a, b = int(vec[col]), int(v2[col])
                g, s, t = _xgcd(a, b)
                nv = (s * vec + t * v2) % N
                nc = (s * cert + t * c2) % N
                wv = ((-(b // g)) * vec + (a // g) * v2) % N
                wc = ((-(b // g)) * cert + (a // g) * c2) % N
                vec, cert = nv, nc
                if wv.any():
                    queue.append((wv, wc))
            g, w = _unit_for(int(vec[col]), N)
            vec = (w * vec) % N
            cert = (w * cert) % N
            out.append((col, g, vec, cert))
            if g != 1:
                tv = ((N // g) * vec) % N
                tc = ((N // g) * cert) % N
                if tv.any():
                    queue.append((tv, tc))
        self.echelon = out
        self._done = True

    def solve(self, b):
        if not self._done:
            self.echelonize()
        N = self.N
        r = np.asarray(b, dtype=np.int64) % N
        x = np.zeros(self.nvars, dtype=np.int64)
        for col, g, vec, cert in self.echelon:
            v = int(r[col])
            if v % g:
                return None
            t = v // g
            r = (r - t * vec) % N
            x = (x + t * cert) % N
        if r.any():
            return None
        return x


def coboundary_test(c: Cocycle, group: Group):
    """kappa: G -> K* with alpha(g,h) = kappa(g)^-1 kappa(h)^-1 kappa(gh),
    kappa(identity) = 1, or None if alpha is not a coboundary.

    Solved over Z/(q-1) after taking discrete logs with respect to a fixed
    generator of K*.  The returned kappa is a list of FieldElem and is
    verified to reproduce alpha exactly before returning.
    """
    field = c.field
    n = group.n
    N = field.q - 1
    if N == 1:
        kappa = [field.one()] * n
        return kappa if (c.tab == 1).all() else None
    gen = field._find_generator()
    dlog = field.tables().dlog
    L = dlog[c.tab]
    if (L < 0).any():
        raise CocycleInvalidError("cocycle table contains zero values")
    # unknowns: x_g = dlog kappa(g) for g = 1..n-1; equations indexed by (g,h):
    #   -x_g - x_h + x_{gh} = L[g,h]  (mod N)
    nvars = n - 1
    ncols = n * n
    solver = _HowellSolver(N, ncols, nvars)
    coef = np.zeros((nvars, ncols), dtype=np.int64)
    eq = 0
    for g in range(n):
        for h in range(n):
            gh = group.mul(g, h)
            if g:
                coef[g - 1, eq] -= 1
            if h:
                coef[h - 1, eq] -= 1
            if gh:
                coef[gh - 1, eq] += 1
            eq += 1
    for v in range(nvars):
        solver.add_row(coef[v], v)
    b = L.reshape(-1)
    x = solver.solve(b)
    if x is None:
        return None
    T = field.tables()
    kappa_codes = [1] + [int(T.exp[int(e) % N]) for e in x]
    # verify: alpha(g,h) = kappa(g)^-1 kappa(h)^-1 kappa(gh)
    kap = np.array(kappa_codes, dtype=np.int32)
    lhs = T.mul[T.mul[T.inv[kap[:, None]], T.inv[kap[None, :]]],
                kap[group.table]]
    if not np.array_equal(lhs, c.tab):
        return None
    return [FieldElem(field, k) for k in kappa_codes]


def coboundary_of(field: FiniteField, group: Group, kappa_codes) -> Cocycle:
    """The coboundary d(kappa)(g,h) = kappa(g)^-1 kappa(h)^-1 kappa(gh)."""
    kap = np.asarray([k.code if isinstance(k, FieldElem) else int(k)
                      for k in kappa_codes], dtype=np.int32)
    if kap[0] != 1:
        raise CocycleInvalidError("kappa(identity) must be 1")
    if (kap == 0).any():
        raise CocycleInvalidError("kappa values must be nonzero")
    T = field.tables()
    tab = T.mul[T.mul[T.inv[kap[:, None]], T.inv[kap[None, :]]],
                kap[group.table]]
    return Cocycle(field, tab)


def cocycle_mul(a: Cocycle, b: Cocycle) -> Cocycle:
    T = a.field.tables()
    return Cocycle(a.field, T.mul[a.tab, b.tab])
