import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invambig.finfield import field_from_order
from invambig.groups import (
    SMALL_CATALOG,
    Alternating,
    BadSpec,
    CayleyTable,
    Cyclic,
    DirectProduct,
    FiniteGroup,
    GroupAxiomError,
    GroupError,
    IndexOutOfRange,
    Symmetric,
    VectorSpaceAdd,
    catalog,
    dihedral,
    enumerate_group,
    g_inv,
    g_op,
    load_cayley_csv,
    parse_group,
    quaternion,
    self_invertible_set,
)

from oracles import perm_compose


def test_op_examples():
    assert g_op(Cyclic(5), 2, 4) == 1
    S3 = Symmetric(3)
    transpositions = [i for i, p in enumerate(S3.perms) if sum(p[k] != k for k in range(3)) == 2]
    assert len(transpositions) == 3
    for t in transpositions:
        assert g_op(S3, t, t) == 0
    V = DirectProduct([Cyclic(2), Cyclic(2)])
    assert g_op(V, V.encode((1, 0)), V.encode((0, 1))) == V.encode((1, 1))


def test_inv_examples():
    assert g_inv(Cyclic(7), 3) == 4
    for spec in ("Z9", "S4", "Q8", "D5", "V(3,2)"):
        assert g_inv(parse_group(spec), 0) == 0
    A4 = Alternating(4)
    three_cycles = [i for i, p in enumerate(A4.perms) if sum(p[k] != k for k in range(4)) == 3]
    assert len(three_cycles) == 8
    for c in three_cycles:
        assert g_inv(A4, c) == g_op(A4, c, c)


def test_index_errors():
    G = Cyclic(5)
    with pytest.raises(IndexOutOfRange):
        g_op(G, 5, 0)
    with pytest.raises(IndexOutOfRange):
        g_inv(G, -1)


def test_identity_is_index_zero():
    for spec in ("S4", "A5", "Z2xS3", "D6", "Q8", "V(2^3,2)", "E(5;a=-1,b=0)"):
        G = parse_group(spec)
        for x in range(G.order):
            assert G.op(0, x) == x == G.op(x, 0)


def _perm_oracle(perms):
    ident = tuple(range(len(perms[0])))
    return sum(perm_compose(p, p) == ident for p in perms)


def test_self_invertible_examples():
    z12 = self_invertible_set(Cyclic(12))
    assert z12.members == (0, 6) and z12.s_count == 2
    a4 = self_invertible_set(Alternating(4))
    assert (a4.s_count, a4.non_s_count) == (4, 8)
    s4 = self_invertible_set(Symmetric(4))
    assert (s4.s_count, s4.non_s_count) == (10, 14)
    # independent count straight from the permutation tuples
    assert _perm_oracle(list(itertools.permutations(range(4)))) == 10
    assert _perm_oracle([p for p in itertools.permutations(range(4)) if p in set(Alternating(4).perms)]) == 4


def test_enumeration_examples():
    assert enumerate_group(Cyclic(3)) == [0, 1, 2]
    assert len(enumerate_group(Alternating(5))) == 60
    assert len(enumerate_group(VectorSpaceAdd(field_from_order(3), 2))) == 9


def test_degree_cap():
    with pytest.raises(GroupError):
        Symmetric(9)


@pytest.mark.parametrize("spec", catalog(200))
def test_inverse_of_product(spec):
    G = parse_group(spec)
    inv = G.inverse_table
    for a in range(G.order):
        for b in range(G.order):
            assert inv[G.op(a, b)] == G.op(inv[b], inv[a])


@pytest.mark.parametrize("spec", catalog(400))
def test_profile_invariants(spec):
    G = parse_group(spec)
    prof = self_invertible_set(G)
    assert list(prof.members) == [x for x in range(G.order) if G.op(x, x) == 0]
    assert all(G.inv(x) == x for x in prof.members)
    assert prof.non_s_count % 2 == 0
    assert prof.s_count + prof.non_s_count == G.order == len(enumerate_group(G))


@pytest.mark.parametrize("g,h", [("Z4", "Z6"), ("S3", "D4"), ("Q8", "D4"), ("A4", "Z3")])
def test_product_self_invertible(g, h):
    G, H = parse_group(g), parse_group(h)
    P = DirectProduct([G, H])
    sg, sh = self_invertible_set(G).members, self_invertible_set(H).members
    expected = sorted(P.encode((a, b)) for a in sg for b in sh)
    assert list(self_invertible_set(P).members) == expected


def test_vector_space_vectorized_scan_matches_generic():
    for q, dim in [(2, 5), (4, 3), (3, 4), (9, 2), (25, 2)]:
        V = VectorSpaceAdd(field_from_order(q), dim)
        assert V.self_invertible() == FiniteGroup.self_invertible(V)


# --- Cayley tables ---------------------------------------------------------

def _cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def test_cayley_accepts_group():
    G = CayleyTable(_cyclic_table(4))
    assert G.order == 4 and G.inv(1) == 3


def test_cayley_mutation_rejected():
    t = _cyclic_table(4)
    for i in range(4):
        for j in range(4):
            for v in range(4):
                if v == t[i][j]:
                    continue
                bad = [row[:] for row in t]
                bad[i][j] = v
                with pytest.raises(GroupAxiomError):
                    CayleyTable(bad)


def test_cayley_rejects_nonassociative_loop():
    # Latin square with identity 0 and two-sided inverses, but (1*1)*2 != 1*(1*2)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupAxiomError, match="associative"):
        CayleyTable(loop)


def test_cayley_identity_must_be_first():
    t = [[1, 0], [0, 1]]  # Z2 with identity at index 1
    with pytest.raises(GroupAxiomError, match="element 1"):
        CayleyTable(t)


def test_cayley_closure_and_shape():
    with pytest.raises(GroupAxiomError):
        CayleyTable([[0, 1], [1, 2]])
    with pytest.raises(GroupAxiomError):
        CayleyTable([[0, 1, 2], [1, 2, 0]])


def test_cayley_csv_roundtrip(tmp_path):
    path = tmp_path / "z6.csv"
    path.write_text("\n".join(",".join(map(str, r)) for r in _cyclic_table(6)) + "\n")
    assert load_cayley_csv(path) == _cyclic_table(6)
    G = parse_group(f"cayley:{path}")
    assert G.order == 6 and self_invertible_set(G).members == (0, 3)


def test_cayley_missing_file(tmp_path):
    with pytest.raises(BadSpec):
        parse_group(f"cayley:{tmp_path / 'nope.csv'}")


# --- named groups ----------------------------------------------------------

def test_quaternion_and_dihedral():
    Q = quaternion()
    assert Q.order == 8 and self_invertible_set(Q).s_count == 2
    D4 = dihedral(4)
    assert D4.order == 8 and self_invertible_set(D4).s_count == 6
    # D_n: rotations r^k with 2k = 0 mod n plus all n reflections
    for n in range(3, 13):
        assert self_invertible_set(dihedral(n)).s_count == n + (2 if n % 2 == 0 else 1)


@pytest.mark.parametrize(
    "spec,order",
    [("Z12", 12), ("Z2xZ2xZ3", 12), ("S5", 120), ("A6", 360), ("D7", 14), ("Q8", 8),
     ("V(3^2,2)", 81), ("V(2,10)", 1024), ("E(5;a=-1,b=0)", 8), ("V(4,2)", 16)],
)
def test_parse_group_orders(spec, order):
    assert parse_group(spec).order == order


@pytest.mark.parametrize("spec", ["Q9", "Z", "X5", "V(6,2)", "Z2x(Z3)", "E(5;a=0,b=0)", "", "Z2x"])
def test_parse_group_rejects(spec):
    with pytest.raises(ValueError):
        parse_group(spec)


def test_small_catalog_contents():
    assert len(SMALL_CATALOG) == 33
    assert all(parse_group(s).order <= 24 for s in SMALL_CATALOG)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=2, max_size=3))
def test_product_of_cyclics_axioms(ns):
    P = DirectProduct([Cyclic(n) for n in ns])
    assert P.order == math.prod(ns)
    for a in range(0, P.order, max(1, P.order // 11)):
        assert P.op(a, P.inv(a)) == 0
        assert P.decode(a) == tuple(P.decode(a))
        assert P.encode(P.decode(a)) == a
    expected = math.prod(2 if n % 2 == 0 else 1 for n in ns)
    assert self_invertible_set(P).s_count == expected
