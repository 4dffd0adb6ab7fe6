"""Inverse ambiguous functions on finite groups.

A bijection f on G is inverse ambiguous when f(f(x)) = x^-1 for every x.
It exists exactly when the number of elements of order > 2 is a multiple of
four; witnesses are built by splitting those elements into 4-cycles
c -> d -> c^-1 -> d^-1 -> c and fixing every self-invertible element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .groups import DirectProduct, FiniteGroup, self_invertible_set
from .report import CheckReport


class IAError(ValueError):
    pass


class LengthMismatch(IAError):
    pass


class HandleMismatch(IAError):
    pass


class ConditionsNotMet(IAError):
    pass


class OrderTooLarge(IAError):
    pass


GENERATOR = "greedy-v1"
BRUTE_FORCE_LIMIT = 24


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    s_count: int
    non_s_count: int
    reason: str = ""

    def as_dict(self) -> dict:
        return {
            "exists": self.exists,
            "s_count": self.s_count,
            "non_s_count": self.non_s_count,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class IAPermutation:
    group: FiniteGroup = field(compare=False)
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]

    def to_json(self) -> dict:
        return {"group": self.group.name, "table": list(self.table), "meta": {"generator": GENERATOR, "seed": None}}


def decide_existence(G: FiniteGroup) -> ExistenceVerdict:
    prof = self_invertible_set(G)
    exists = prof.non_s_count % 4 == 0
    rel = "is" if exists else "is not"
    return ExistenceVerdict(
        exists,
        prof.s_count,
        prof.non_s_count,
        f"|G - S(G)| = {G.order} - {prof.s_count} = {prof.non_s_count} {rel} a multiple of 4",
    )


def _quadruples(G: FiniteGroup, members: Sequence[int]) -> list[tuple[int, int, int, int]]:
    """Greedy split of the non-self-invertible elements into (c, d, c^-1, d^-1).

    Each step takes the least unassigned c and the least unassigned d outside
    {c, c^-1}; inverse pairs are consumed together, so c^-1 and d^-1 are
    always still free.
    """
    sset = set(members)
    free = [x for x in range(G.order) if x not in sset]
    taken: set[int] = set()
    j = 0

    def least_free() -> Optional[int]:
        nonlocal j
        while j < len(free) and free[j] in taken:
            j += 1
        return free[j] if j < len(free) else None

    quads = []
    while (c := least_free()) is not None:
        ci = G.inv(c)
        taken.update((c, ci))
        d = least_free()
        if d is None:
            raise ConditionsNotMet("non-self-invertible elements do not split into quadruples")
        di = G.inv(d)
        taken.update((d, di))
        quads.append((c, d, ci, di))
    return quads


def construct(G: FiniteGroup) -> Optional[IAPermutation]:
    """Deterministic witness, or None when none exists.

    f is the identity on S(G) and cycles each greedy quadruple as
    c -> d -> c^-1 -> d^-1 -> c.
    """
    if not decide_existence(G).exists:
        return None
    prof = self_invertible_set(G)
    table = list(range(G.order))
    for c, d, ci, di in _quadruples(G, prof.members):
        table[c], table[d], table[ci], table[di] = d, ci, di, c
    return IAPermutation(G, tuple(table))


def verify(G: FiniteGroup, f: Sequence[int]) -> CheckReport:
    """Exhaustively check a candidate table.

    Checks run in order: bijection, f(f(x)) = x^-1, f(x^-1) = f(x)^-1, and
    f(S(G)) = S(G).  The report names the first failing check and its least
    counterexample.
    """
    if len(f) != G.order:
        raise LengthMismatch(f"table has {len(f)} entries, group {G.name} has {G.order}")
    f = [int(v) for v in f]
    n = G.order
    inv = G.inverse_table

    def fail(check: str, x: int, detail: str) -> CheckReport:
        return CheckReport(
            passed=False, max_error=1.0, worst_input=x, samples=n, seed=None, check=check, detail=detail
        )

    seen: dict[int, int] = {}
    for x, y in enumerate(f):
        if not 0 <= y < n:
            return fail("bijection", x, f"f({x}) = {y} is not an element index")
        if y in seen:
            return fail("bijection", x, f"f({seen[y]}) = f({x}) = {y}")
        seen[y] = x

    for x in range(n):
        if f[f[x]] != inv[x]:
            return fail("square-is-inverse", x, f"f(f({x})) = {f[f[x]]} != {inv[x]} = {x}^-1")
    for x in range(n):
        if f[inv[x]] != inv[f[x]]:
            return fail("inverse-law", x, f"f({x}^-1) = {f[inv[x]]} != {inv[f[x]]} = f({x})^-1")
    s = set(self_invertible_set(G).members)
    for x in sorted(s):
        if f[x] not in s:
            return fail("preserves-S", x, f"{x} is self-invertible but f({x}) = {f[x]} is not")
    return CheckReport(passed=True, max_error=0.0, worst_input=None, samples=n, seed=None, check="all")


def construct_product(fg: IAPermutation, fh: IAPermutation) -> IAPermutation:
    """Componentwise map (g, h) -> (fg(g), fh(h)) on G x H."""
    if not isinstance(fg, IAPermutation) or not isinstance(fh, IAPermutation):
        raise HandleMismatch("both arguments must be IAPermutation witnesses")
    for w in (fg, fh):
        if len(w.table) != w.group.order:
            raise HandleMismatch(f"witness table does not match {w.group.name}")
    G, H = fg.group, fh.group
    P = DirectProduct([G, H])
    m = H.order
    table = [fg.table[a // m] * m + fh.table[a % m] for a in range(P.order)]
    return IAPermutation(P, tuple(table))


def check_prop34(H: FiniteGroup) -> tuple[bool, bool]:
    """(|S(H)| even, |H - S(H)| divisible by 4)."""
    prof = self_invertible_set(H)
    return prof.s_count % 2 == 0, prof.non_s_count % 4 == 0


def construct_g_times_h(G: FiniteGroup, H: FiniteGroup) -> IAPermutation:
    """Witness on G x H that exists for any G once H meets both conditions.

    S(H) is paired as consecutive (a_i, b_i) in canonical order, the rest of H
    is split into greedy quadruples, and f acts by

        (g, a) -> (g, b)        (g, b) -> (g^-1, a)
        (g, c) -> (g, d)        (g, d) -> (g^-1, c^-1)
        (g, c^-1) -> (g, d^-1)  (g, d^-1) -> (g^-1, c)
    """
    even_s, mult4 = check_prop34(H)
    if not (even_s and mult4):
        raise ConditionsNotMet(
            f"{H.name}: |S(H)| even = {even_s}, |H - S(H)| divisible by 4 = {mult4}"
        )
    prof = self_invertible_set(H)
    # (h, h', flip): f(g, h) = (g^-1 if flip else g, h')
    rule: dict[int, tuple[int, bool]] = {}
    s = prof.members
    for a, b in zip(s[0::2], s[1::2]):
        rule[a] = (b, False)
        rule[b] = (a, True)
    for c, d, ci, di in _quadruples(H, s):
        rule[c] = (d, False)
        rule[d] = (ci, True)
        rule[ci] = (di, False)
        rule[di] = (c, True)
    P = DirectProduct([G, H])
    m = H.order
    ginv = G.inverse_table
    table = []
    for x in range(P.order):
        g, h = divmod(x, m)
        h2, flip = rule[h]
        table.append((ginv[g] if flip else g) * m + h2)
    return IAPermutation(P, tuple(table))


def brute_force_exists(G: FiniteGroup) -> bool:
    """Backtracking search for any bijection with f(f(x)) = x^-1.

    Independent of the counting criterion: it only uses the group's inverse
    map.  Setting f(x) = y forces f(y) = x^-1, which propagates until the
    orbit closes or a clash appears.  Elements with x != x^-1 are assigned
    first, which keeps failing searches from multiplying through the
    involution choices.
    """
    n = G.order
    if n > BRUTE_FORCE_LIMIT:
        raise OrderTooLarge(f"brute force is limited to order {BRUTE_FORCE_LIMIT}, got {n}")
    inv = G.inverse_table
    f = [-1] * n
    used = [False] * n
    order = sorted(range(n), key=lambda x: (inv[x] == x, x))

    def assign(x: int, y: int, trail: list[int]) -> bool:
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if f[a] != -1:
                if f[a] != b:
                    return False
                continue
            if used[b]:
                return False
            f[a] = b
            used[b] = True
            trail.append(a)
            stack.append((b, inv[a]))
        return True

    def undo(trail: list[int]) -> None:
        for a in trail:
            used[f[a]] = False
            f[a] = -1

    def search(k: int) -> bool:
        while k < n and f[order[k]] != -1:
            k += 1
        if k == n:
            return True
        x = order[k]
        for y in range(n):
            if used[y]:
                continue
            trail: list[int] = []
            if assign(x, y, trail) and search(k + 1):
                return True
            undo(trail)
        return False

    return search(0)


def witness_from_json(obj) -> dict:
    """Accept a bare witness or a CLI report whose payload is one."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if "payload" in obj and isinstance(obj["payload"], dict) and "table" in obj["payload"]:
        obj = obj["payload"]
    if "table" not in obj:
        raise IAError("witness JSON has no 'table'")
    return obj
