"""Finite groups as Cayley tables with a fixed, documented enumeration.

Element i of a group is just the index i; table[i, j] is the index of
g_i * g_j and index 0 is the identity.  The enumeration fixes the coordinate
order of every generator matrix built downstream, so the constructors pin it:

* cyclic(n):          1, g, g^2, ..., g^(n-1)
* dihedral(2n):       1, x, ..., x^(n-1), y, xy, ..., x^(n-1)y
                      with x^n = y^2 = 1 and y x = x^-1 y
* semidirect(m,k,r):  b^j a^i in lexicographic (j, i) order,
                      a^m = b^k = 1 and b a b^-1 = a^r
* alt4():             Id, (12)(34), (132), (143), (234), (124), (134),
                      (142), (123), (13)(24), (14)(23), (243)
* product(A, B):      (a_i, b_j) in lexicographic (i, j) order
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidActionError, NotAGroupError

MAX_EXPLICIT_ORDER = 256
EXHAUSTIVE_ASSOC_LIMIT = 64
ASSOC_SAMPLES = 100_000


def group_check(table) -> list[str]:
    """Validation report for a Cayley table; empty list means it is a group.

    Checks the identity row/column, the Latin-square property, two-sided
    inverses and associativity (exhaustive up to order 64, random sampling
    of 1e5 triples above).
    """
    t = np.asarray(table, dtype=np.int64)
    problems = []
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        return [f"table is not square: shape {t.shape}"]
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        return [f"entries must be indices in 0..{n - 1}"]
    if not np.array_equal(t[0], np.arange(n)):
        problems.append("row 0 is not the identity permutation")
    if not np.array_equal(t[:, 0], np.arange(n)):
        problems.append("column 0 is not the identity permutation")
    ref = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(t[i]), ref):
            problems.append(f"row {i} is not a permutation")
            break
    for j in range(n):
        if not np.array_equal(np.sort(t[:, j]), ref):
            problems.append(f"column {j} is not a permutation")
            break
    for i in range(n):
        if not np.any(t[i] == 0) or not np.any(t[:, i] == 0):
            problems.append(f"element {i} has no inverse")
            break
        li = int(np.argmax(t[i] == 0))
        if t[li, i] != 0:
            problems.append(f"element {i}: left and right inverses differ")
            break
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        lhs = t[t, :]            # lhs[i,j,k] = (ij)k
        rhs = t[:, t]            # rhs[i,j,k] = i(jk)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            problems.append(f"associativity fails at ({i},{j},{k})")
    else:
        rng = np.random.default_rng(0)
        ii, jj, kk = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
        if not np.array_equal(t[t[ii, jj], kk], t[ii, t[jj, kk]]):
            problems.append("associativity fails (sampled)")
    return problems


@dataclass(frozen=True)
class Group:
    table: np.ndarray
    labels: tuple
    family: str
    inv: np.ndarray = field(compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "table", np.asarray(self.table, dtype=np.int64))
        if self.inv is None:
            inv = np.array([int(np.argmax(self.table[i] == 0))
                            for i in range(self.n)], dtype=np.int64)
            object.__setattr__(self, "inv", inv)

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inverse(self, i: int) -> int:
        return int(self.inv[i])

    def order_of(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            k += 1
        return k

    def is_abelian(self) -> bool:
        return np.array_equal(self.table, self.table.T)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def conjugacy_test(self):  # pragma: no cover - debugging aid
        return group_check(self.table)

    def reorder(self, order) -> "Group":
        """New Group whose element i is self's element order[i].

        order[0] must be the identity.
        """
        order = list(order)
        if sorted(order) != list(range(self.n)) or order[0] != 0:
            raise NotAGroupError("reorder needs a permutation fixing 0")
        pos = {old: new for new, old in enumerate(order)}
        t = np.array([[pos[self.mul(order[i], order[j])] for j in range(self.n)]
                      for i in range(self.n)], dtype=np.int64)
        return Group(t, tuple(self.labels[o] for o in order),
                     self.family + "/reordered")

    def __eq__(self, other):
        return isinstance(other, Group) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"Group({self.family}, order {self.n})"


def _validated(table, labels, family) -> Group:
    problems = group_check(table)
    if problems:
        raise NotAGroupError(f"{family}: " + "; ".join(problems))
    return Group(np.asarray(table, dtype=np.int64), tuple(labels), family)


def cyclic(n: int) -> Group:
    if n < 1:
        raise NotAGroupError("order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    labels = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return _validated(table, labels, f"cyclic({n})")


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order 2n, presentation
    x^n = y^2 = 1, y x y^-1 = x^-1."""
    if order < 2 or order % 2:
        raise NotAGroupError("dihedral order must be even and >= 2")
    n = order // 2

    def idx(i, j):
        return (j % 2) * n + (i % n)

    table = np.zeros((order, order), dtype=np.int64)
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    table[idx(i1, j1), idx(i2, j2)] = idx(i, j1 + j2)
    xl = ["1"] + [f"x{i}" if i > 1 else "x" for i in range(1, n)]
    yl = ["y"] + [f"x{i}y" if i > 1 else "xy" for i in range(1, n)]
    return _validated(table, xl + yl, f"dihedral({order})")


def semidirect(m: int, k: int, r: int) -> Group:
    """C_m x| C_k with b a b^-1 = a^r, enumerated b^j a^i lex in (j, i)."""
    if m < 1 or k < 1:
        raise NotAGroupError("orders must be positive")
    from math import gcd
    if gcd(r, m) != 1 or pow(r, k, m) != 1 % m:
        raise InvalidActionError(f"r={r} must satisfy gcd(r,m)=1, r^{k} = 1 mod {m}")

    def idx(i, j):
        return (j % k) * m + (i % m)

    table = np.zeros((m * k, m * k), dtype=np.int64)
    for j1 in range(k):
        for i1 in range(m):
            for j2 in range(k):
                for i2 in range(m):
                    # b^j1 a^i1 b^j2 a^i2 = b^(j1+j2) a^(i1 r^j2 + i2)
                    i = (i1 * pow(r, j2, m) + i2) % m
                    table[idx(i1, j1), idx(i2, j2)] = idx(i, j1 + j2)
    labels = []
    for j in range(k):
        for i in range(m):
            b = "" if j == 0 else ("b" if j == 1 else f"b{j}")
            a = "" if i == 0 else ("a" if i == 1 else f"a{i}")
            labels.append((b + a) or "1")
    return _validated(table, labels, f"semidirect({m},{k},{r})")


_A4_ORDER = [
    (0, 1, 2, 3),   # Id
    (1, 0, 3, 2),   # (12)(34)
    (2, 0, 1, 3),   # (132)
    (3, 1, 0, 2),   # (143)
    (0, 2, 3, 1),   # (234)
    (1, 3, 0, 2),   # (124)
    (2, 1, 3, 0),   # (134)
    (3, 0, 2, 1),   # (142)
    (1, 2, 0, 3),   # (123)
    (2, 3, 0, 1),   # (13)(24)
    (3, 2, 1, 0),   # (14)(23)
    (0, 3, 1, 2),   # (243)
]

_A4_LABELS = ("Id", "(12)(34)", "(132)", "(143)", "(234)", "(124)",
              "(134)", "(142)", "(123)", "(13)(24)", "(14)(23)", "(243)")


def alt4() -> Group:
    """Alternating group on 4 letters, enumerated as in the published
    idempotent listing (identity first)."""
    perms = _A4_ORDER
    pos = {p: i for i, p in enumerate(perms)}
    table = np.zeros((12, 12), dtype=np.int64)
    for i, s in enumerate(perms):
        for j, u in enumerate(perms):
            comp = tuple(s[u[x]] for x in range(4))   # s after u
            table[i, j] = pos[comp]
    return _validated(table, _A4_LABELS, "alt4")


def product(a: Group, b: Group) -> Group:
    na, nb = a.n, b.n
    if na * nb > MAX_EXPLICIT_ORDER:
        raise NotAGroupError(f"product order {na * nb} exceeds cap")
    table = np.zeros((na * nb, na * nb), dtype=np.int64)
    for i1 in range(na):
        for j1 in range(nb):
            for i2 in range(na):
                for j2 in range(nb):
                    table[i1 * nb + j1, i2 * nb + j2] = \
                        a.mul(i1, i2) * nb + b.mul(j1, j2)
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    return _validated(table, labels, f"product({a.family},{b.family})")


def from_table(table, labels=None, family="explicit") -> Group:
    t = np.asarray(table, dtype=np.int64)
    if t.shape[0] > MAX_EXPLICIT_ORDER:
        raise NotAGroupError(f"explicit tables capped at order {MAX_EXPLICIT_ORDER}")
    if labels is None:
        labels = [f"g{i}" if i else "1" for i in range(t.shape[0])]
    return _validated(t, labels, family)


def group_make(family: str, **kw) -> Group:
    """Dispatch constructor used by the context-file parser."""
    if family == "cyclic":
        return cyclic(kw["n"])
    if family == "dihedral":
        return dihedral(kw["n"])
    if family == "alt4":
        return alt4()
    if family == "semidirect":
        return semidirect(kw["m"], kw["k"], kw["r"])
    if family == "product":
        return product(kw["a"], kw["b"])
    if family == "explicit":
        return from_table(kw["table"], kw.get("labels"))
    raise NotAGroupError(f"unknown group family {family!r}")
