"""Finite groups with elements indexed 0..|G|-1, identity at index 0."""

from __future__ import annotations

import csv
import itertools
import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .ecurve import CurveSpec, enumerate_points, parse_curve, point_add, point_neg
from .finfield import FieldSpec, field_make, field_from_order, prime_power


class GroupError(ValueError):
    pass


class IndexOutOfRange(GroupError, IndexError):
    pass


class GroupAxiomError(GroupError):
    pass


class BadSpec(GroupError):
    pass


MAX_PERM_DEGREE = 8
FULL_ASSOCIATIVITY_LIMIT = 64


class FiniteGroup:
    """Behavioral group: ``op``, ``inv`` and ``label`` on integer indices."""

    name: str
    order: int

    def op(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def label(self, a: int) -> str:
        return str(a)

    identity = 0

    def elements(self) -> range:
        return range(self.order)

    def check(self, *idx: int) -> None:
        for a in idx:
            if not 0 <= a < self.order:
                raise IndexOutOfRange(f"index {a} out of range for {self.name} (order {self.order})")

    @cached_property
    def inverse_table(self) -> list[int]:
        return [self.inv(a) for a in range(self.order)]

    def self_invertible(self) -> list[int]:
        """Indices x with x*x = e, by scanning every element."""
        return [x for x in range(self.order) if self.op(x, x) == 0]

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class Cyclic(FiniteGroup):
    def __init__(self, n: int):
        if n < 1:
            raise GroupError(f"cyclic order must be positive, got {n}")
        self.order = n
        self.name = f"Z{n}"

    def op(self, a, b):
        return (a + b) % self.order

    def inv(self, a):
        return -a % self.order


class DirectProduct(FiniteGroup):
    """Product with lexicographic indexing: the first factor varies slowest."""

    def __init__(self, factors: Sequence[FiniteGroup]):
        flat: list[FiniteGroup] = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, DirectProduct) else [f])
        if len(flat) < 2:
            raise GroupError("a direct product needs at least two factors")
        self.factors = tuple(flat)
        self.order = 1
        for f in flat:
            self.order *= f.order
        self.name = "x".join(f.name for f in flat)

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for f in reversed(self.factors):
            a, r = divmod(a, f.order)
            out.append(r)
        return tuple(reversed(out))

    def encode(self, parts: Sequence[int]) -> int:
        a = 0
        for f, x in zip(self.factors, parts):
            a = a * f.order + x
        return a

    def op(self, a, b):
        return self.encode([f.op(x, y) for f, x, y in zip(self.factors, self.decode(a), self.decode(b))])

    def inv(self, a):
        return self.encode([f.inv(x) for f, x in zip(self.factors, self.decode(a))])

    def label(self, a):
        return "(" + ", ".join(f.label(x) for f, x in zip(self.factors, self.decode(a))) + ")"


def _is_even(perm: Sequence[int]) -> bool:
    seen = [False] * len(perm)
    transpositions = 0
    for i in range(len(perm)):
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length:
            transpositions += length - 1
    return transpositions % 2 == 0


class PermutationGroup(FiniteGroup):
    """Permutations of {0..n-1} in lexicographic one-line order.

    The product is composition ``(a*b)(i) = a(b(i))``.
    """

    def __init__(self, n: int, perms: list[tuple[int, ...]], name: str):
        self.n = n
        self.perms = perms
        self.index = {p: i for i, p in enumerate(perms)}
        self.order = len(perms)
        self.name = name

    def op(self, a, b):
        pa, pb = self.perms[a], self.perms[b]
        return self.index[tuple(pa[i] for i in pb)]

    def inv(self, a):
        pa = self.perms[a]
        out = [0] * self.n
        for i, j in enumerate(pa):
            out[j] = i
        return self.index[tuple(out)]

    def label(self, a):
        return "[" + " ".join(str(i) for i in self.perms[a]) + "]"


def _check_degree(n: int):
    if not 1 <= n <= MAX_PERM_DEGREE:
        raise GroupError(f"permutation degree must be in 1..{MAX_PERM_DEGREE}, got {n}")


class Symmetric(PermutationGroup):
    def __init__(self, n: int):
        _check_degree(n)
        super().__init__(n, list(itertools.permutations(range(n))), f"S{n}")


class Alternating(PermutationGroup):
    def __init__(self, n: int):
        _check_degree(n)
        perms = [p for p in itertools.permutations(range(n)) if _is_even(p)]
        super().__init__(n, perms, f"A{n}")


class VectorSpaceAdd(FiniteGroup):
    """Additive group of GF(q)^dim; coordinate 0 varies slowest."""

    def __init__(self, field: FieldSpec, dim: int):
        if dim < 1:
            raise GroupError(f"dimension must be >= 1, got {dim}")
        self.field = field
        self.dim = dim
        self.order = field.q**dim
        self.name = f"V({field.label},{dim})"

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.dim):
            a, r = divmod(a, self.field.q)
            out.append(r)
        return tuple(reversed(out))

    def encode(self, coords: Sequence[int]) -> int:
        a = 0
        for c in coords:
            a = a * self.field.q + c
        return a

    def op(self, a, b):
        F = self.field
        return self.encode([F.add(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def inv(self, a):
        return self.encode([self.field.neg(x) for x in self.decode(a)])

    def scale(self, alpha: int, a: int) -> int:
        F = self.field
        return self.encode([F.mul(alpha, x) for x in self.decode(a)])

    def label(self, a):
        return "(" + "; ".join(self.field.format(x) for x in self.decode(a)) + ")"

    def self_invertible(self) -> list[int]:
        # vectorised x + x == 0: addition is digit-wise in base p
        p = self.field.p
        idx = np.arange(self.order, dtype=np.int64)
        rest = idx.copy()
        ok = np.ones(self.order, dtype=bool)
        for _ in range(self.field.n * self.dim):
            rest, digit = np.divmod(rest, p)
            ok &= (2 * digit) % p == 0
        return idx[ok].tolist()


class CayleyTable(FiniteGroup):
    """Group given by its multiplication table; ``table[i][j]`` is i*j.

    Element 0 must be the identity.  Associativity is checked on every triple
    up to order 64 and on 20000 seeded random triples beyond that.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = "cayley", labels=None):
        t = np.asarray(table, dtype=np.int64)
        n = t.shape[0] if t.ndim == 2 else 0
        if t.ndim != 2 or t.shape != (n, n) or n == 0:
            raise GroupAxiomError("Cayley table must be a non-empty square array")
        if t.min() < 0 or t.max() >= n:
            raise GroupAxiomError("table entries leave the index range (closure fails)")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            ids = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
            if ids:
                raise GroupAxiomError(f"identity is element {ids[0]}, must be element 0")
            raise GroupAxiomError("no identity element")
        inv = np.full(n, -1)
        for a in range(n):
            right = np.flatnonzero(t[a] == 0)
            if len(right) != 1 or t[right[0], a] != 0:
                raise GroupAxiomError(f"element {a} has no two-sided inverse")
            inv[a] = right[0]
        if n <= FULL_ASSOCIATIVITY_LIMIT:
            lhs = t[t[:, :, None], ar[None, None, :]]  # (ab)c
            rhs = t[ar[:, None, None], t[None, :, :]]  # a(bc)
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                a, b, c = bad[0]
                raise GroupAxiomError(f"not associative at ({a}, {b}, {c})")
        else:
            rng = random.Random(0)
            for _ in range(20000):
                a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if t[t[a, b], c] != t[a, t[b, c]]:
                    raise GroupAxiomError(f"not associative at ({a}, {b}, {c})")
        self.table = t.tolist()
        self._inv = inv.tolist()
        self.order = n
        self.name = name
        self.labels = labels

    def op(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def label(self, a):
        return self.labels[a] if self.labels else str(a)


def dihedral(n: int) -> CayleyTable:
    """D_n of order 2n; index ``k + n*e`` stands for r^k s^e."""
    if n < 1:
        raise GroupError("dihedral parameter must be >= 1")

    def mul(x, y):
        k1, e1 = x % n, x // n
        k2, e2 = y % n, y // n
        # s r^k = r^-k s
        k = (k1 + (-k2 if e1 else k2)) % n
        return k + n * ((e1 + e2) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return CayleyTable(table, name=f"D{n}")


_QUAT_UNITS = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]


def quaternion() -> CayleyTable:
    """Q_8 with elements ordered 1, -1, i, -i, j, -j, k, -k."""
    basis = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}
    prod = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def split(u):
        return (-1, u[1:]) if u.startswith("-") else basis[u]

    def join(sign, u):
        return u if sign > 0 else "-" + u

    table = []
    for x in _QUAT_UNITS:
        sx, ux = split(x)
        row = []
        for y in _QUAT_UNITS:
            sy, uy = split(y)
            s, u = prod[(ux, uy)]
            row.append(_QUAT_UNITS.index(join(sx * sy * s, u)))
        table.append(row)
    return CayleyTable(table, name="Q8", labels=_QUAT_UNITS)


class EllipticCurveGroup(FiniteGroup):
    """E(F_q) with points in canonical order (O first); arithmetic lives in ecurve."""

    def __init__(self, curve: CurveSpec):
        self.curve = curve
        self.points = enumerate_points(curve)
        self.index = {pt: i for i, pt in enumerate(self.points)}
        self.order = len(self.points)
        self.name = curve.label

    def op(self, a, b):
        return self.index[point_add(self.curve, self.points[a], self.points[b], check=False)]

    def inv(self, a):
        return self.index[point_neg(self.curve, self.points[a])]

    def label(self, a):
        return repr(self.points[a])


# module-level operations


def g_op(G: FiniteGroup, a: int, b: int) -> int:
    G.check(a, b)
    return G.op(a, b)


def g_inv(G: FiniteGroup, a: int) -> int:
    G.check(a)
    return G.inv(a)


def enumerate_group(G: FiniteGroup) -> list[int]:
    return list(G.elements())


@dataclass(frozen=True)
class InvolutionProfile:
    members: tuple[int, ...]
    s_count: int
    non_s_count: int


def self_invertible_set(G: FiniteGroup) -> InvolutionProfile:
    members = tuple(G.self_invertible())
    return InvolutionProfile(members, len(members), G.order - len(members))


# spec mini-language


def load_cayley_csv(path) -> list[list[int]]:
    with open(path, newline="") as fh:
        return [[int(c) for c in row] for row in csv.reader(fh) if row]


def _split_product(spec: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "x" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


_VSPACE_RE = re.compile(r"^V\((\d+)(?:\^(\d+))?,(\d+)\)$")


def parse_group(spec: str) -> FiniteGroup:
    """Parse the group mini-language.

    ``Z12``, ``Z2xZ4``, ``S5``, ``A4``, ``D4``, ``Q8``, ``V(3^2,2)``,
    ``E(7;a=1,b=0)``, ``cayley:<path>``.
    """
    spec = spec.strip()
    if spec.startswith("cayley:"):
        path = spec[len("cayley:"):]
        try:
            return CayleyTable(load_cayley_csv(path), name=spec)
        except (OSError, ValueError) as e:
            if isinstance(e, GroupAxiomError):
                raise
            raise BadSpec(f"cannot read Cayley table {path!r}: {e}") from e
    s = spec.replace(" ", "")
    parts = _split_product(s)
    if len(parts) > 1:
        return DirectProduct([parse_group(p) for p in parts])
    try:
        if s.startswith("E("):
            return EllipticCurveGroup(parse_curve(s))
        if s == "Q8":
            return quaternion()
        m = re.fullmatch(r"([ZSAD])(\d+)", s)
        if m:
            kind, n = m[1], int(m[2])
            return {"Z": Cyclic, "S": Symmetric, "A": Alternating, "D": dihedral}[kind](n)
        m = _VSPACE_RE.match(s)
        if m:
            p, e, dim = int(m[1]), int(m[2] or 1), int(m[3])
            if m[2] is None:
                field = field_from_order(p)
            else:
                field = field_make(p, e)
            return VectorSpaceAdd(field, dim)
    except GroupError:
        raise
    except ValueError as e:
        raise BadSpec(f"bad group spec {spec!r}: {e}") from e
    raise BadSpec(f"bad group spec {spec!r}")


SMALL_CATALOG = (
    [f"Z{n}" for n in range(1, 25)]
    + ["Z2xZ2", "Z2xZ4", "Z2xZ6", "Z3xZ3", "S3", "S4", "A4", "D4", "Q8"]
)

LARGE_CATALOG = [
    "Z30", "Z42", "Z100", "Z101", "Z250", "Z1000", "Z1999", "Z2000",
    "Z5xZ5", "Z5xZ6", "Z2xZ2xZ2", "Z2xZ2xZ3", "Z3xZ3xZ3", "Z2xZ1000", "Z7xZ6", "Z4xZ4",
    "S5", "S6", "A5", "A6", "S3xS3", "A4xZ3", "S4xZ2",
    "D5", "D6", "D7", "D10", "D12", "D50",
    "V(3,2)", "V(5,2)", "V(7,3)", "V(3^2,2)", "V(2^3,3)", "V(2,10)", "V(11,3)", "V(5^2,2)",
    "E(5;a=-1,b=0)", "E(7;a=1,b=0)", "E(5;a=1,b=0)", "E(13;a=1,b=0)", "E(7^2;a=1,b=0)",
    "E(101;a=-1,b=0)", "E(997;a=2,b=3)", "E(11^2;a=-1,b=0)",
]


def catalog(max_order: int = 2000) -> list[str]:
    """Built-in group specs whose order is at most ``max_order``."""
    out = []
    for spec in SMALL_CATALOG + LARGE_CATALOG:
        if parse_group(spec).order <= max_order:
            out.append(spec)
    return out


def group_spec_for_field(q: int, dim: int) -> str:
    p, n = prime_power(q)
    return f"V({p},{dim})" if n == 1 else f"V({p}^{n},{dim})"
