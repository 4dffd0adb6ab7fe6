"""Continuous inverse ambiguous maps, checked numerically on seeded samples.

Every map here satisfies m(m(x)) = x^-1 in its space (or m(m(z)) = -z on
spheres).  ``run_check`` draws samples, measures the distance between
m(m(x)) and the group inverse, and also checks m^4(x) = x.  Sample i is drawn
from ``default_rng([seed, i])`` so a report depends only on (seed, count).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np
import sympy as sp

from .report import CheckReport

TWO_PI = 2 * math.pi

TOL_EXACT = 1e-12
TOL_LATTICE = 1e-9
TOL_INVERSION = 1e-6
DET_FLOOR = 1e-3


class ContError(ValueError):
    pass


class DimMismatch(ContError):
    pass


class OddDimension(ContError):
    pass


class DegenerateLattice(ContError):
    pass


class BadBit(ContError):
    pass


class NotOnSphere(ContError):
    pass


class EvenSphereRejected(ContError):
    pass


class EvenN(ContError):
    pass


class NonzeroTrace(ContError):
    pass


class NearSingular(ContError):
    pass


class ZeroB(ContError):
    pass


class BadStep(ContError):
    pass


class UnknownConstruction(ContError):
    pass


# angles


def wrap(angles) -> np.ndarray:
    """Reduce angles into [0, 2*pi)."""
    a = np.mod(np.asarray(angles, dtype=float), TWO_PI)
    # fmod of a tiny negative rounds up to exactly 2*pi
    return np.where(a >= TWO_PI, 0.0, a)


def circle_distance(a, b) -> float:
    d = np.mod(np.asarray(a, dtype=float) - np.asarray(b, dtype=float), TWO_PI)
    return float(np.max(np.minimum(d, TWO_PI - d), initial=0.0))


def torus2_map(p) -> np.ndarray:
    """(theta, phi) -> (phi, -theta), i.e. (z, w) -> (w, z^-1)."""
    p = np.asarray(p, dtype=float)
    if p.shape != (2,):
        raise DimMismatch(f"torus2_map needs 2 angles, got shape {p.shape}")
    return wrap([p[1], -p[0]])


def torus_even_map(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or len(p) % 2:
        raise OddDimension(f"torus_even_map needs an even number of angles, got {p.shape}")
    out = np.empty_like(p)
    out[0::2] = p[1::2]
    out[1::2] = -p[0::2]
    return wrap(out)


# complex tori


@dataclass(frozen=True)
class LatticeSpec:
    omega1: complex
    omega2: complex

    def __post_init__(self):
        w1, w2 = complex(self.omega1), complex(self.omega2)
        if not (abs(self.det) > 1e-12 * abs(w1) * abs(w2)) or w1 == 0 or w2 == 0:
            raise DegenerateLattice(f"{w1} and {w2} are not R-linearly independent")

    @property
    def det(self) -> float:
        return (complex(self.omega1).conjugate() * complex(self.omega2)).imag

    def coords(self, z: complex) -> tuple[float, float]:
        """Real (c1, c2) with z = c1*omega1 + c2*omega2."""
        w1, w2, z = complex(self.omega1), complex(self.omega2), complex(z)
        det = w1.real * w2.imag - w2.real * w1.imag
        c1 = (z.real * w2.imag - w2.real * z.imag) / det
        c2 = (w1.real * z.imag - z.real * w1.imag) / det
        return c1, c2


def lattice_map(L: LatticeSpec, z: complex) -> complex:
    """c1*w1 + c2*w2 -> -c2*w1 + c1*w2; squares to z -> -z and fixes the lattice."""
    c1, c2 = L.coords(z)
    return -c2 * complex(L.omega1) + c1 * complex(L.omega2)


def lattice_reduce(L: LatticeSpec, z: complex) -> tuple[float, float]:
    """Representative of z + Lambda as coefficients in [0, 1)^2."""
    out = []
    for c in L.coords(z):
        r = c - math.floor(c)
        out.append(0.0 if r >= 1.0 else r)
    return out[0], out[1]


def unit_torus_distance(a, b) -> float:
    d = [abs(x - y) % 1.0 for x, y in zip(a, b)]
    return max(min(v, 1.0 - v) for v in d)


# circle x Z_2


def circle_z2_map(p) -> tuple[float, int]:
    """(theta, 0) -> (theta, 1) and (theta, 1) -> (-theta, 0)."""
    theta, bit = p
    if bit not in (0, 1):
        raise BadBit(f"bit must be 0 or 1, got {bit!r}")
    if bit == 0:
        return float(wrap(theta)), 1
    return float(wrap(-theta)), 0


# real vector spaces and spheres


def r2n_linear_map(v) -> np.ndarray:
    """(x1, y1; ...; xn, yn) -> (y1, -x1; ...; yn, -xn)."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or len(v) % 2:
        raise OddDimension(f"need an even-dimensional vector, got shape {v.shape}")
    out = np.empty_like(v)
    out[0::2] = v[1::2]
    out[1::2] = -v[0::2]
    return out


def sphere_map(v, atol: float = 1e-12) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or len(v) % 2:
        raise EvenSphereRejected(
            f"ambient dimension {v.shape} gives an even sphere; f(f(z)) = -z has no continuous solution there"
        )
    if abs(np.linalg.norm(v) - 1.0) > atol:
        raise NotOnSphere(f"|v| = {np.linalg.norm(v)!r} is not 1")
    return r2n_linear_map(v)


# additive matrix groups


def matrix_additive_complex_map(A) -> np.ndarray:
    return 1j * np.asarray(A, dtype=complex)


def trace0_coords(A: np.ndarray) -> np.ndarray:
    """Coordinates in the basis: off-diagonal e_ij row-major, then e_kk - e_{k+1,k+1}."""
    n = A.shape[0]
    off = [A[i, j] for i in range(n) for j in range(n) if i != j]
    diag = np.cumsum(np.diag(A))[:-1]
    return np.concatenate([np.asarray(off, dtype=float), diag])


def trace0_from_coords(c: np.ndarray, n: int) -> np.ndarray:
    A = np.zeros((n, n))
    k = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                A[i, j] = c[k]
                k += 1
    d = c[k:]
    A[0, 0] = d[0] if n > 1 else 0.0
    for i in range(1, n - 1):
        A[i, i] = d[i] - d[i - 1]
    if n > 1:
        A[n - 1, n - 1] = -d[-1]
    return A


def trace0_real_map(A, trace_tol: float = 1e-12) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimMismatch(f"need a square matrix, got {A.shape}")
    if n % 2 == 0:
        raise EvenN(f"trace-0 real matrices of even size {n} have odd dimension {n * n - 1}")
    if abs(np.trace(A)) > trace_tol:
        raise NonzeroTrace(f"trace {np.trace(A)!r} is not 0")
    return trace0_from_coords(r2n_linear_map(trace0_coords(A)), n)


# multiplicative matrix groups


def gl_pingpong_map(A, det_floor: float = DET_FLOOR) -> np.ndarray:
    """-A on det > 0, -A^-1 on det < 0 (odd n only)."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimMismatch(f"need a square matrix, got {A.shape}")
    if n % 2 == 0:
        raise EvenN(f"the component swap needs odd n, got {n}")
    det = np.linalg.det(A)
    if abs(det) < det_floor:
        raise NearSingular(f"|det A| = {abs(det):.3g} below floor {det_floor}")
    return -A if det > 0 else -np.linalg.inv(A)


def gl2_selfinv_family(a: float, b: float) -> np.ndarray:
    """[[a, b], [(1 - a^2)/b, -a]]: an involution with determinant -1."""
    if b == 0:
        raise ZeroB("b must be nonzero")
    return np.array([[a, b], [(1 - a * a) / b, -a]], dtype=float)


def gl2_selfinv_positive_branch() -> list[np.ndarray]:
    """All real 2x2 A with A^2 = I and det A > 0.

    A^2 = I forces det A = +-1, so the positive branch is det A = 1.  The
    lex Groebner basis of that system is solved exactly.
    """
    a, b, c, d = sp.symbols("a b c d")
    A = sp.Matrix([[a, b], [c, d]])
    eqs = list(A * A - sp.eye(2)) + [A.det() - 1]
    basis = sp.groebner(eqs, a, b, c, d, order="lex")
    sols = sp.solve(list(basis), [a, b, c, d], dict=True)
    out = []
    for s in sols:
        M = A.subs(s)
        if M.free_symbols:
            raise AssertionError(f"positive branch has a free family: {M}")
        out.append(np.array(M.tolist(), dtype=float))
    return sorted(out, key=lambda m: m[0, 0])


def inversion_deviation(n: int, h: float) -> float:
    """max over e_ij of |(inv(I + h e_ij) - I)/h + e_ij|."""
    I = np.eye(n)
    worst = 0.0
    for i in range(n):
        for j in range(n):
            E = np.zeros((n, n))
            E[i, j] = 1.0
            D = (np.linalg.inv(I + h * E) - I) / h
            worst = max(worst, float(np.max(np.abs(D + E))))
    return worst


def inversion_differential_check(n: int, h: float = 1e-6) -> CheckReport:
    """Finite-difference check that the differential of inversion at I is -id.

    Off-diagonal directions are exact up to rounding; diagonal ones deviate
    by h/(1+h), so the pass threshold is 10*h.
    """
    if n < 1:
        raise DimMismatch(f"n must be >= 1, got {n}")
    if not 0 < h <= 1e-4:
        raise BadStep(f"step must be in (0, 1e-4], got {h}")
    dev = inversion_deviation(n, h)
    tol = 10 * h
    return CheckReport(
        passed=dev <= tol, max_error=dev, worst_input={"n": n, "h": h}, samples=n * n, seed=None,
        check="inversion-differential", tol=tol,
    )


# sampling harness


def random_gl(rng: np.random.Generator, n: int, det_floor: float = DET_FLOOR) -> np.ndarray:
    while True:
        A = rng.uniform(-1.0, 1.0, size=(n, n))
        if abs(np.linalg.det(A)) >= det_floor:
            return A


def random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    Q, R = np.linalg.qr(rng.normal(size=(n, n)))
    return Q * np.sign(np.diag(R))


@dataclass(frozen=True)
class Construction:
    name: str
    sample: Callable[[np.random.Generator], Any]
    apply: Callable[[Any], Any]
    inverse: Callable[[Any], Any]
    distance: Callable[[Any, Any], float]
    tol: float
    extra: Callable[[Any, Any], float] | None = None  # extra error folded into max_error


def _fro(a, b) -> float:
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))


def _circle_z2_distance(a, b) -> float:
    if a[1] != b[1]:
        return math.inf
    return circle_distance(a[0], b[0])


def _serialize(x) -> Any:
    if isinstance(x, np.ndarray):
        if np.iscomplexobj(x):
            return {"re": x.real.tolist(), "im": x.imag.tolist()}
        return x.tolist()
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, tuple):
        return [_serialize(v) for v in x]
    return x


def construction(name: str, **params) -> Construction:
    """Look up a named construction; parameters: k (torus-even), dim
    (r2n-linear, sphere), n (matrix maps), omega1/omega2 (lattice)."""
    if name == "torus2":
        return Construction(
            name, lambda r: r.uniform(0, TWO_PI, 2), torus2_map, lambda x: wrap(-x), circle_distance, TOL_EXACT
        )
    if name == "torus-even":
        k = int(params.get("k", 4))
        if k % 2:
            raise OddDimension(f"k must be even, got {k}")
        return Construction(
            name, lambda r: r.uniform(0, TWO_PI, k), torus_even_map, lambda x: wrap(-x), circle_distance, TOL_EXACT
        )
    if name == "lattice":
        L = LatticeSpec(complex(params.get("omega1", 1.0)), complex(params.get("omega2", 0.3 + 1.1j)))

        def sample(r):
            x, y = r.uniform(-10, 10, 2)
            return complex(x, y)

        return Construction(
            name, sample, lambda z: lattice_map(L, z), lambda z: -z, lambda a, b: abs(a - b), TOL_LATTICE,
            extra=lambda y, x: unit_torus_distance(lattice_reduce(L, y), lattice_reduce(L, -x)),
        )
    if name == "circle-z2":
        return Construction(
            name,
            lambda r: (float(r.uniform(0, TWO_PI)), int(r.integers(0, 2))),
            circle_z2_map,
            lambda p: (float(wrap(-p[0])), p[1]),
            _circle_z2_distance,
            TOL_EXACT,
        )
    if name == "r2n-linear":
        dim = int(params.get("dim", 4))
        if dim % 2:
            raise OddDimension(f"dim must be even, got {dim}")
        return Construction(
            name, lambda r: r.uniform(-10, 10, dim), r2n_linear_map, lambda v: -v, _fro, TOL_EXACT
        )
    if name == "sphere":
        dim = int(params.get("dim", 4))
        if dim % 2:
            raise EvenSphereRejected(f"ambient dimension {dim} gives the even sphere S^{dim - 1}")

        def sample(r):
            v = r.normal(size=dim)
            return v / np.linalg.norm(v)

        return Construction(name, sample, sphere_map, lambda v: -v, _fro, TOL_EXACT)
    if name == "matrix-additive-complex":
        n = int(params.get("n", 3))

        def sample(r):
            return r.uniform(-1, 1, (n, n)) + 1j * r.uniform(-1, 1, (n, n))

        return Construction(name, sample, matrix_additive_complex_map, lambda A: -A, _fro, TOL_EXACT)
    if name == "trace0-real":
        n = int(params.get("n", 3))
        if n % 2 == 0:
            raise EvenN(f"n must be odd, got {n}")

        def sample(r):
            A = r.uniform(-1, 1, (n, n))
            return A - np.trace(A) / n * np.eye(n)

        return Construction(name, sample, trace0_real_map, lambda A: -A, _fro, TOL_LATTICE)
    if name == "gl-pingpong":
        n = int(params.get("n", 3))
        if n % 2 == 0:
            raise EvenN(f"n must be odd, got {n}")
        return Construction(
            name, lambda r: random_gl(r, n), gl_pingpong_map, np.linalg.inv, _fro, TOL_INVERSION
        )
    if name == "gl-pingpong-orthogonal":
        n = int(params.get("n", 3))
        if n % 2 == 0:
            raise EvenN(f"n must be odd, got {n}")
        return Construction(
            name, lambda r: random_orthogonal(r, n), gl_pingpong_map, lambda A: A.T, _fro, TOL_EXACT * 1e3,
            extra=lambda y, x: _fro(gl_pingpong_map(x) @ gl_pingpong_map(x).T, np.eye(n)),
        )
    raise UnknownConstruction(f"unknown construction {name!r}; known: {', '.join(CONSTRUCTIONS)}")


CONSTRUCTIONS = (
    "torus2",
    "torus-even",
    "lattice",
    "circle-z2",
    "r2n-linear",
    "sphere",
    "matrix-additive-complex",
    "trace0-real",
    "gl-pingpong",
)
EXTRA_CONSTRUCTIONS = ("gl-pingpong-orthogonal",)


def run_check(name: str, samples: int = 10_000, seed: int = 0, tol: float | None = None, **params) -> CheckReport:
    """Sample check of m(m(x)) = x^-1 and m^4(x) = x.

    Per sample the error is max(d(m(m(x)), x^-1), d(m^4(x), x) / 4), so
    ``passed`` is exactly ``max_error <= tol``: the f(f) error is held to
    ``tol`` and the fourth-power error to ``4 * tol``.  The raw worst
    fourth-power distance is reported separately.
    """
    if samples < 1:
        raise ContError("samples must be >= 1")
    c = construction(name, **params)
    tol = c.tol if tol is None else tol
    if tol <= 0:
        raise ContError("tol must be positive")
    worst, worst_x, worst4 = -1.0, None, 0.0
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        x = c.sample(rng)
        y = c.apply(c.apply(x))
        err = c.distance(y, c.inverse(x))
        if c.extra is not None:
            err = max(err, c.extra(y, x))
        err4 = c.distance(c.apply(c.apply(y)), x)
        worst4 = max(worst4, err4)
        err = max(err, err4 / 4)
        if err > worst:
            worst, worst_x = err, x
    return CheckReport(
        passed=worst <= tol,
        max_error=worst,
        worst_input=_serialize(worst_x),
        samples=samples,
        seed=seed,
        check=name,
        tol=tol,
        fourth_power_error=worst4,
    )
