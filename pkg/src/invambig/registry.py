"""Static catalog of existence verdicts for continuous inverse ambiguous maps.

Entries are data, not computations: the non-existence results rest on
orientation and fundamental-group arguments.  ``query_registry`` specializes
a family to a concrete space such as ``SO(6)`` or ``T^4``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Optional

YES, NO, UNKNOWN, CONDITIONAL = "Yes", "No", "Unknown", "Conditional"


class UnknownSpace(ValueError):
    pass


@dataclass(frozen=True)
class RegistryEntry:
    space: str
    verdict: str
    theorem: str
    anchor: str
    construction: Optional[str] = None
    condition: str = ""

    def as_dict(self) -> dict:
        return {
            "space": self.space,
            "verdict": self.verdict,
            "theorem": self.theorem,
            "anchor": self.anchor,
            "construction": self.construction,
            "condition": self.condition,
        }


_A = {
    "circle": "There are no continuous inverse ambiguous functions on the circle group, $S^1$.",
    "torus_odd": "If $n$ is a positive odd integer, then there exist no continuous inverse ambiguous functions on the torus $\\mathbb{T}^n$.",
    "torus_even": "If $n$ is a positive even integer, then there exist continuous inverse ambiguous functions on the torus $\\mathbb{T}^n$.",
    "ec": "Every elliptic curve over $\\mathbb{C}$ admits a continuous inverse ambiguous function.",
    "er": "Then $E(\\mathbb{R})$ admits a continuous inverse ambiguous function if and only if $\\Delta_E > 0$.",
    "complex_v": "the linear transformation $f(v) = iv$ is a continuous inverse ambiguous function defined on $V$",
    "finite_v": "If $q$ is even or $q \\equiv 1 \\mod 4$, then $V$ admits a (continuous) inverse ambiguous function.",
    "finite_v3": "If $q \\equiv 3 \\mod 4$, then $V$ admits a (continuous) inverse ambiguous function if and only if $n$ is even.",
    "real_v": "An $n$-dimensional vector space $V$ over $\\mathbb{R}$ admits a continuous inverse ambiguous function if and only if $n$ is even.",
    "mn_c": "For every positive integer $n$, the topological group $M_n(\\mathbb{C})$ admits a continuous inverse ambiguous function, one example being $A \\mapsto iA$.",
    "mn_r": "The topological group $M_n(\\mathbb{R})$ admits a continuous inverse ambiguous function if and only if $n$ even.",
    "tr0_c": "For every positive integer $n$, the subspace of all matrices in $M_n(\\mathbb{C})$ having trace $0$ admits a continuous inverse ambiguous function.",
    "tr0_r": "The subspace of all matrices in $M_n(\\mathbb{R})$ having trace $0$ admits a continuous inverse ambiguous function if and only if $n$ is $odd$.",
    "s3": "No continuous inverse ambiguous functions are defined on $S^3$.",
    "antipodal": "There exists a homeomorphism $f: S^n \\rightarrow S^n$ satisfying the equation $f(f(z)) = -z$ for all $z \\in S^n$ if and only if $n$ is odd.",
    "pingpong": "Furthermore, this function restricts to a continuous inverse ambiguous function from $O(n)$ to $O(n)$.",
    "o2": "There are no continuous inverse ambiguous functions defined on $O(2)$ or on $SO(2)$.",
    "glplus": "There are no continuous inverse ambiguous functions on $GL_n^+(\\mathbb{R})$ when $n$ is odd.",
    "sl": "If $n$ is even, there are no continuous inverse ambiguous functions on $SL_n(\\mathbb{R})$.",
    "so": "If $n \\equiv 2$ or $3 \\mod 4$, then there are no continuous inverse ambiguous functions on $SO(n)$.",
    "open": "other tools will need to be developed",
}


REGISTRY: tuple[RegistryEntry, ...] = (
    RegistryEntry("S^1", NO, "Lemma 2.1", _A["circle"]),
    RegistryEntry("T^n (n odd)", NO, "Thm 2.2", _A["torus_odd"]),
    RegistryEntry("T^n (n even)", YES, "Thm 2.4", _A["torus_even"], "torus_even_map"),
    RegistryEntry("E(C)", YES, "Thm 3.1", _A["ec"], "lattice_map"),
    RegistryEntry("E(R)", CONDITIONAL, "Thm 3.2", _A["er"], "circle_z2_map", "Delta_E > 0"),
    RegistryEntry("C^n", YES, "Sec 4", _A["complex_v"], "matrix_additive_complex_map"),
    RegistryEntry("V(q,n) (q even or q = 1 mod 4)", YES, "Thm 4.1(1)", _A["finite_v"], "scalar multiplication by sqrt(-1)"),
    RegistryEntry("V(q,n) (q = 3 mod 4)", CONDITIONAL, "Thm 4.1(2)", _A["finite_v3"], "iafun.construct", "n even"),
    RegistryEntry("R^n", CONDITIONAL, "Thm 4.2", _A["real_v"], "r2n_linear_map", "n even"),
    RegistryEntry("M_n(C)", YES, "Cor 4.3(1)", _A["mn_c"], "matrix_additive_complex_map"),
    RegistryEntry("M_n(R)", CONDITIONAL, "Cor 4.3(2)", _A["mn_r"], "r2n_linear_map", "n even"),
    RegistryEntry("M0_n(C)", YES, "Cor 4.4(1)", _A["tr0_c"], "matrix_additive_complex_map"),
    RegistryEntry("M0_n(R)", CONDITIONAL, "Cor 4.4(2)", _A["tr0_r"], "trace0_real_map", "n odd"),
    RegistryEntry("S^3", NO, "Thm 4.6", _A["s3"]),
    RegistryEntry("S^n:antipodal", CONDITIONAL, "Thm 4.7", _A["antipodal"], "sphere_map", "n odd"),
    RegistryEntry("GL_n(R) (n odd)", YES, "Thm 5.1", _A["pingpong"], "gl_pingpong_map"),
    RegistryEntry("O(n) (n odd)", YES, "Thm 5.1", _A["pingpong"], "gl_pingpong_map"),
    RegistryEntry("O(2)", NO, "Thm 5.4", _A["o2"]),
    RegistryEntry("SO(2)", NO, "Thm 5.4", _A["o2"]),
    RegistryEntry("GL_n^+(R) (n odd)", NO, "Thm 5.7", _A["glplus"]),
    RegistryEntry("SL_n(R) (n even)", NO, "Thm 5.8", _A["sl"]),
    RegistryEntry("SO(n) (n = 2, 3 mod 4)", NO, "Thm 5.9", _A["so"]),
    RegistryEntry("GL_n^+(R) (n even)", UNKNOWN, "Sec 5 closing remark", _A["open"]),
    RegistryEntry("SL_n(R) (n odd)", UNKNOWN, "Sec 5 closing remark", _A["open"]),
    RegistryEntry("SO(n) (n = 0, 1 mod 4)", UNKNOWN, "Sec 5 closing remark", _A["open"]),
    RegistryEntry("GL_n(C) (n > 1)", UNKNOWN, "Sec 5 closing remark", _A["open"]),
)


def existence_registry() -> list[RegistryEntry]:
    return list(REGISTRY)


def _entry(space: str) -> RegistryEntry:
    for e in REGISTRY:
        if e.space == space:
            return e
    raise KeyError(space)  # pragma: no cover


def _resolve(family: str, name: str, ok: bool) -> RegistryEntry:
    """Specialize a conditional family to YES/NO for a concrete instance."""
    base = _entry(family)
    if ok:
        return replace(base, space=name, verdict=YES, condition="")
    return replace(base, space=name, verdict=NO, construction=None, condition="")


def query_registry(name: str) -> RegistryEntry:
    """Verdict for a concrete space, e.g. ``SO(6)``, ``T^4``, ``SL_4(R)``,
    ``E(C)``, ``E(R;a=-1,b=0)``, ``R^3``, ``S^5:antipodal``."""
    s = name.replace(" ", "")

    if s in ("S^1", "S1"):
        return replace(_entry("S^1"), space=s)
    if s in ("S^3",):
        return replace(_entry("S^3"), space=s)
    if m := re.fullmatch(r"S\^(\d+):antipodal", s):
        return _resolve("S^n:antipodal", s, int(m[1]) % 2 == 1)
    if m := re.fullmatch(r"T\^(\d+)", s):
        n = int(m[1])
        if n < 1:
            raise UnknownSpace(name)
        if n == 1:
            return replace(_entry("S^1"), space=s)
        if n == 2:
            return replace(_entry("T^n (n even)"), space=s, construction="torus2_map")
        return replace(_entry("T^n (n even)" if n % 2 == 0 else "T^n (n odd)"), space=s)
    if s in ("E(C)", "E(\\mathbb{C})"):
        return replace(_entry("E(C)"), space=s)
    if s == "E(R)":
        return replace(_entry("E(R)"), space=s)
    if m := re.fullmatch(r"E\(R;a=(-?\d+(?:\.\d*)?),b=(-?\d+(?:\.\d*)?)\)", s):
        a, b = float(m[1]), float(m[2])
        disc = -16 * (4 * a**3 + 27 * b**2)
        if disc == 0:
            raise UnknownSpace(f"{name}: singular curve")
        e = _resolve("E(R)", s, disc > 0)
        return replace(e, condition=f"Delta_E = {disc:g}")
    if m := re.fullmatch(r"C\^(\d+)", s):
        return replace(_entry("C^n"), space=s)
    if m := re.fullmatch(r"R\^(\d+)", s):
        return _resolve("R^n", s, int(m[1]) % 2 == 0)
    if m := re.fullmatch(r"V\((\d+),(\d+)\)", s):
        q, n = int(m[1]), int(m[2])
        if q % 2 == 0 or q % 4 == 1:
            return replace(_entry("V(q,n) (q even or q = 1 mod 4)"), space=s)
        return _resolve("V(q,n) (q = 3 mod 4)", s, n % 2 == 0)
    if m := re.fullmatch(r"M_(\d+)\(C\)", s):
        return replace(_entry("M_n(C)"), space=s)
    if m := re.fullmatch(r"M_(\d+)\(R\)", s):
        return _resolve("M_n(R)", s, int(m[1]) % 2 == 0)
    if m := re.fullmatch(r"M0_(\d+)\(C\)", s):
        return replace(_entry("M0_n(C)"), space=s)
    if m := re.fullmatch(r"M0_(\d+)\(R\)", s):
        return _resolve("M0_n(R)", s, int(m[1]) % 2 == 1)

    if m := re.fullmatch(r"(GL|SL)_(\d+)(\^\+)?\((R|C)\)", s):
        kind, n, plus, fld = m[1], int(m[2]), bool(m[3]), m[4]
        if n < 1 or (plus and kind == "SL"):
            raise UnknownSpace(name)
        if fld == "C":
            if kind == "GL" and not plus and n > 1:
                return replace(_entry("GL_n(C) (n > 1)"), space=s)
            raise UnknownSpace(name)
        if kind == "GL" and plus:
            fam = "GL_n^+(R) (n odd)" if n % 2 else "GL_n^+(R) (n even)"
        elif kind == "GL":
            if n % 2 == 0:
                return RegistryEntry(s, UNKNOWN, "Sec 5 closing remark", _A["open"])
            fam = "GL_n(R) (n odd)"
        else:
            fam = "SL_n(R) (n even)" if n % 2 == 0 else "SL_n(R) (n odd)"
        return replace(_entry(fam), space=s)
    if m := re.fullmatch(r"(SO|O)\((\d+)\)", s):
        kind, n = m[1], int(m[2])
        if n < 2:
            raise UnknownSpace(f"{name}: only n >= 2 is catalogued")
        if kind == "O":
            if n % 2:
                return replace(_entry("O(n) (n odd)"), space=s)
            if n == 2:
                return replace(_entry("O(2)"), space=s)
            return RegistryEntry(s, UNKNOWN, "Sec 5 closing remark", _A["open"])
        if n == 2:
            return replace(_entry("SO(2)"), space=s)
        if n % 4 in (2, 3):
            return replace(_entry("SO(n) (n = 2, 3 mod 4)"), space=s)
        return replace(_entry("SO(n) (n = 0, 1 mod 4)"), space=s)
    raise UnknownSpace(f"no registry entry matches {name!r}")
